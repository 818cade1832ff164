#include "topicprune/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "topicprune/errors.hpp"

namespace topicprune {

DgpConfig DgpConfig::make(std::size_t n_docs, double xi, std::size_t vocab_size,
                          std::size_t n_topics, std::uint64_t seed) {
  DgpConfig c;
  c.n_docs = n_docs;
  c.xi = xi;
  c.vocab_size = vocab_size;
  c.n_topics = n_topics;
  c.alpha = 1.0 / static_cast<double>(n_topics);
  c.eta = 1.0 / static_cast<double>(n_topics);
  c.seed = seed;
  return c;
}

DgpConfig DgpConfig::dgp1(std::uint64_t seed) {
  return make(1000, 3000.0, 30000, 50, seed);
}

DgpConfig DgpConfig::dgp2(std::uint64_t seed) {
  return make(10000, 150.0, 20000, 15, seed);
}

void DgpConfig::validate() const {
  if (n_docs < 1) throw InvalidParameter("dgp: n_docs must be >= 1");
  if (n_topics < 1) throw InvalidParameter("dgp: n_topics must be >= 1");
  if (vocab_size < n_topics)
    throw InvalidParameter("dgp: vocab_size must be >= n_topics");
  if (!(xi > 0.0)) throw InvalidParameter("dgp: xi must be positive");
  if (!(alpha > 0.0)) throw InvalidParameter("dgp: alpha must be positive");
  if (!(eta > 0.0)) throw InvalidParameter("dgp: eta must be positive");
}

std::int64_t SyntheticCorpus::total_tokens() const {
  std::int64_t n = 0;
  for (const auto& d : docs) n += static_cast<std::int64_t>(d.size());
  return n;
}

std::vector<double> sample_dirichlet(double concentration, std::size_t dim,
                                     RngStream& rng) {
  if (!(concentration > 0.0))
    throw InvalidParameter("dirichlet: concentration must be positive");
  if (dim < 1) throw InvalidParameter("dirichlet: dim must be >= 1");
  if (dim == 1) return {1.0};
  std::vector<double> v(dim);
  double sum = 0.0;
  do {
    sum = 0.0;
    for (auto& x : v) {
      x = rng.gamma(concentration);
      sum += x;
    }
  } while (!(sum > 0.0));
  for (auto& x : v) x /= sum;
  return v;
}

CategoricalSampler::CategoricalSampler(std::span<const double> weights) {
  const std::size_t n = weights.size();
  if (n == 0) throw InvalidParameter("categorical: empty weight vector");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw InvalidParameter("categorical: weights must be finite and >= 0");
    sum += w;
  }
  if (!(sum > 0.0))
    throw InvalidParameter("categorical: weights sum to zero");

  accept_.assign(n, 1.0);
  alias_.resize(n);
  std::iota(alias_.begin(), alias_.end(), 0);

  std::vector<double> scaled(n);
  for (std::size_t i = 0; i < n; ++i)
    scaled[i] = weights[i] * static_cast<double>(n) / sum;

  std::vector<std::int32_t> small, large;
  small.reserve(n);
  large.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::int32_t>(i));

  while (!small.empty() && !large.empty()) {
    const auto s = small.back();
    small.pop_back();
    const auto l = large.back();
    large.pop_back();
    accept_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    (scaled[l] < 1.0 ? small : large).push_back(l);
  }
  // leftovers are numerically 1
}

TopicWordSampler::TopicWordSampler(const Matrix& beta) {
  rows_.reserve(beta.rows);
  for (std::size_t k = 0; k < beta.rows; ++k)
    rows_.emplace_back(beta.row(k));
}

void sample_document_tokens(const TopicWordSampler& words,
                            std::span<const double> theta,
                            std::size_t n_tokens, RngStream& rng,
                            std::vector<std::int32_t>& tokens,
                            std::vector<std::int32_t>& topics) {
  const std::size_t k_topics = theta.size();
  tokens.clear();
  topics.clear();
  tokens.reserve(n_tokens);
  topics.reserve(n_tokens);
  for (std::size_t i = 0; i < n_tokens; ++i) {
    // inverse-CDF scan; K is small
    const double u = rng.uniform();
    double cum = 0.0;
    std::size_t z = k_topics - 1;
    for (std::size_t k = 0; k < k_topics; ++k) {
      cum += theta[k];
      if (u < cum) {
        z = k;
        break;
      }
    }
    topics.push_back(static_cast<std::int32_t>(z));
    tokens.push_back(words.sample(z, rng));
  }
}

GeneratedDocument generate_document(const Matrix& beta, double alpha,
                                    double xi, RngStream& rng) {
  if (!(alpha > 0.0)) throw InvalidParameter("generate_document: alpha <= 0");
  if (!(xi > 0.0)) throw InvalidParameter("generate_document: xi <= 0");
  const TopicWordSampler words(beta);
  GeneratedDocument doc;
  const auto n = static_cast<std::size_t>(rng.poisson(xi));
  doc.theta = sample_dirichlet(alpha, beta.rows, rng);
  sample_document_tokens(words, doc.theta, n, rng, doc.tokens, doc.topics);
  return doc;
}

namespace {

SyntheticCorpus generate_corpus_impl(const DgpConfig& config, bool parallel) {
  config.validate();
  const std::size_t K = config.n_topics;
  const std::size_t V = config.vocab_size;
  const auto D = static_cast<std::int64_t>(config.n_docs);

  SyntheticCorpus corpus;
  corpus.config = config;
  corpus.beta = Matrix(K, V);
  RngStream beta_rng = RngStream::derive(config.seed, kStreamBeta);
  for (std::size_t k = 0; k < K; ++k) {
    const auto row = sample_dirichlet(config.eta, V, beta_rng);
    std::copy(row.begin(), row.end(), corpus.beta.row(k).begin());
  }

  const TopicWordSampler words(corpus.beta);
  corpus.docs.resize(config.n_docs);
  corpus.topic_assignments.resize(config.n_docs);
  corpus.thetas = Matrix(config.n_docs, K);

  auto one_document = [&](std::int64_t d) {
    RngStream rng = RngStream::derive(config.seed, kStreamDocument,
                                      static_cast<std::uint64_t>(d));
    const auto n = static_cast<std::size_t>(rng.poisson(config.xi));
    const auto theta = sample_dirichlet(config.alpha, K, rng);
    std::copy(theta.begin(), theta.end(),
              corpus.thetas.row(static_cast<std::size_t>(d)).begin());
    sample_document_tokens(words, theta, n, rng, corpus.docs[d],
                           corpus.topic_assignments[d]);
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t d = 0; d < D; ++d) one_document(d);
  } else {
    for (std::int64_t d = 0; d < D; ++d) one_document(d);
  }
  return corpus;
}

}  // namespace

SyntheticCorpus generate_corpus(const DgpConfig& config) {
  return generate_corpus_impl(config, true);
}

SyntheticCorpus generate_corpus_serial(const DgpConfig& config) {
  return generate_corpus_impl(config, false);
}

}  // namespace topicprune
