#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "topicprune/matrix.hpp"
#include "topicprune/rng.hpp"

namespace topicprune {

// The five generative parameters of a data-generating process plus the
// concentration parameters and master seed.
struct DgpConfig {
  std::size_t n_docs = 0;
  double xi = 0.0;  // expected words per document (Poisson mean)
  std::size_t vocab_size = 0;
  std::size_t n_topics = 0;
  double alpha = 0.0;  // document-topic concentration
  double eta = 0.0;    // topic-word concentration
  std::uint64_t seed = 0;

  // alpha and eta default to 1/K.
  static DgpConfig make(std::size_t n_docs, double xi, std::size_t vocab_size,
                        std::size_t n_topics, std::uint64_t seed);

  // 1,000 docs of ~3,000 words over 30,000 terms and 50 topics.
  static DgpConfig dgp1(std::uint64_t seed);
  // 10,000 docs of ~150 words over 20,000 terms and 15 topics.
  static DgpConfig dgp2(std::uint64_t seed);

  void validate() const;  // throws InvalidParameter
};

// Token sequences plus the ground truth they were generated from.
struct SyntheticCorpus {
  std::vector<std::vector<std::int32_t>> docs;  // token ids in [0, vocab_size)
  Matrix thetas;                                // n_docs x n_topics
  std::vector<std::vector<std::int32_t>> topic_assignments;  // z, per token
  Matrix beta;                                  // n_topics x vocab_size
  DgpConfig config;

  std::int64_t total_tokens() const;
};

// Symmetric Dirichlet draw: dim independent Gamma(concentration, 1) draws
// normalized by their sum.
std::vector<double> sample_dirichlet(double concentration, std::size_t dim,
                                     RngStream& rng);

// Walker alias table for O(1) categorical draws over a fixed weight vector.
class CategoricalSampler {
 public:
  explicit CategoricalSampler(std::span<const double> weights);
  std::int32_t operator()(RngStream& rng) const {
    const auto i = rng.uniform_int(static_cast<std::int64_t>(accept_.size()));
    return rng.uniform() < accept_[i] ? static_cast<std::int32_t>(i)
                                      : alias_[i];
  }

 private:
  std::vector<double> accept_;
  std::vector<std::int32_t> alias_;
};

// One alias table per topic row, built once per corpus.
class TopicWordSampler {
 public:
  explicit TopicWordSampler(const Matrix& beta);
  std::int32_t sample(std::size_t topic, RngStream& rng) const {
    return rows_[topic](rng);
  }
  std::size_t n_topics() const { return rows_.size(); }

 private:
  std::vector<CategoricalSampler> rows_;
};

struct GeneratedDocument {
  std::vector<std::int32_t> tokens;
  std::vector<double> theta;
  std::vector<std::int32_t> topics;  // per-token assignments
};

// Draws n_tokens (topic, word) pairs for a fixed theta.
void sample_document_tokens(const TopicWordSampler& words,
                            std::span<const double> theta,
                            std::size_t n_tokens, RngStream& rng,
                            std::vector<std::int32_t>& tokens,
                            std::vector<std::int32_t>& topics);

// One document of the generative model: N ~ Poisson(xi), theta ~ Dir(alpha),
// then per token z_n ~ Categorical(theta) and w_n ~ Categorical(beta[z_n]).
// N = 0 yields an empty document.
GeneratedDocument generate_document(const Matrix& beta, double alpha,
                                    double xi, RngStream& rng);

// Generates the full corpus: beta drawn once from Dir(eta), then documents.
// Deterministic given config.seed; document d always uses the stream
// mix_seed(config.seed, kStreamDocument, d), so the parallel and serial
// variants produce identical corpora.
SyntheticCorpus generate_corpus(const DgpConfig& config);

// Reference implementation: plain loop over documents, kept for tests and
// benchmarks against the parallel kernel.
SyntheticCorpus generate_corpus_serial(const DgpConfig& config);

}  // namespace topicprune
