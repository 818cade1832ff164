#include "topicprune/lda.hpp"

#include <cmath>

#include "topicprune/errors.hpp"

namespace topicprune {

void GibbsConfig::validate() const {
  if (n_topics < 1) throw InvalidParameter("gibbs: n_topics must be >= 1");
  if (!(alpha > 0.0)) throw InvalidParameter("gibbs: alpha must be positive");
  if (!(eta > 0.0)) throw InvalidParameter("gibbs: eta must be positive");
  if (n_sweeps <= burn_in)
    throw InvalidParameter("gibbs: n_sweeps must exceed burn_in");
}

GibbsSampler::GibbsSampler(const DocumentTermMatrix& dtm,
                           const GibbsConfig& config)
    : k_topics_(config.n_topics),
      n_terms_(dtm.n_terms()),
      alpha_(config.alpha),
      eta_(config.eta),
      v_eta_(static_cast<double>(dtm.n_terms()) * config.eta),
      rng_(config.seed) {
  config.validate();
  if (n_terms_ == 0)
    throw EmptyVocabularyError("fit_lda: empty vocabulary");

  const std::size_t d_count = dtm.n_docs();
  const std::size_t total = static_cast<std::size_t>(dtm.total_tokens());
  doc_begin_.reserve(d_count + 1);
  doc_begin_.push_back(0);
  token_word_.reserve(total);
  doc_len_.resize(d_count);
  for (std::size_t d = 0; d < d_count; ++d) {
    const auto cols = dtm.row_cols(d);
    const auto counts = dtm.row_counts(d);
    for (std::size_t i = 0; i < cols.size(); ++i)
      token_word_.insert(token_word_.end(), counts[i], cols[i]);
    doc_begin_.push_back(token_word_.size());
    doc_len_[d] = dtm.doc_length(d);
  }

  n_dk_.assign(d_count * k_topics_, 0);
  n_wk_.assign(n_terms_ * k_topics_, 0);
  n_k_.assign(k_topics_, 0);
  token_topic_.resize(token_word_.size());

  for (std::size_t d = 0; d < d_count; ++d) {
    for (std::size_t i = doc_begin_[d]; i < doc_begin_[d + 1]; ++i) {
      const auto z = static_cast<std::int32_t>(
          rng_.uniform_int(static_cast<std::int64_t>(k_topics_)));
      token_topic_[i] = z;
      ++n_dk_[d * k_topics_ + z];
      ++n_wk_[static_cast<std::size_t>(token_word_[i]) * k_topics_ + z];
      ++n_k_[z];
    }
  }

  inv_nk_.resize(k_topics_);
  for (std::size_t k = 0; k < k_topics_; ++k)
    inv_nk_[k] = 1.0 / (static_cast<double>(n_k_[k]) + v_eta_);
  cdf_.resize(k_topics_);
}

void GibbsSampler::sweep() {
  const std::size_t K = k_topics_;
  const std::size_t d_count = doc_begin_.size() - 1;
  for (std::size_t d = 0; d < d_count; ++d) {
    std::int32_t* ndk = n_dk_.data() + d * K;
    for (std::size_t i = doc_begin_[d]; i < doc_begin_[d + 1]; ++i) {
      const auto w = static_cast<std::size_t>(token_word_[i]);
      const auto old = static_cast<std::size_t>(token_topic_[i]);
      std::int32_t* nwk = n_wk_.data() + w * K;

      --ndk[old];
      --nwk[old];
      --n_k_[old];
      inv_nk_[old] = 1.0 / (static_cast<double>(n_k_[old]) + v_eta_);

      double total = 0.0;
      for (std::size_t k = 0; k < K; ++k) {
        total += (static_cast<double>(ndk[k]) + alpha_) *
                 (static_cast<double>(nwk[k]) + eta_) * inv_nk_[k];
        cdf_[k] = total;
      }
      const double u = rng_.uniform() * total;
      std::size_t z = K - 1;
      for (std::size_t k = 0; k < K; ++k) {
        if (cdf_[k] > u) {
          z = k;
          break;
        }
      }

      ++ndk[z];
      ++nwk[z];
      ++n_k_[z];
      inv_nk_[z] = 1.0 / (static_cast<double>(n_k_[z]) + v_eta_);
      token_topic_[i] = static_cast<std::int32_t>(z);
    }
  }
}

double GibbsSampler::lgamma_count(std::vector<double>& table, double offset,
                                  std::int64_t n) const {
  const auto idx = static_cast<std::size_t>(n);
  if (idx >= table.size()) {
    const std::size_t target = std::max<std::size_t>(idx + 1, table.size() * 2 + 16);
    table.reserve(target);
    for (std::size_t i = table.size(); i < target; ++i)
      table.push_back(std::lgamma(static_cast<double>(i) + offset));
  }
  return table[idx];
}

double GibbsSampler::joint_log_likelihood() const {
  const std::size_t K = k_topics_;
  const std::size_t d_count = doc_begin_.size() - 1;
  const auto kd = static_cast<double>(K);
  const auto vd = static_cast<double>(n_terms_);

  double ll = static_cast<double>(d_count) *
                  (std::lgamma(kd * alpha_) - kd * std::lgamma(alpha_)) +
              kd * (std::lgamma(vd * eta_) - vd * std::lgamma(eta_));

  for (std::size_t d = 0; d < d_count; ++d) {
    double s = 0.0;
    for (std::size_t k = 0; k < K; ++k)
      s += lgamma_count(lg_alpha_table_, alpha_, n_dk_[d * K + k]);
    ll += s - std::lgamma(static_cast<double>(doc_len_[d]) + kd * alpha_);
  }
  double s = 0.0;
  for (const auto c : n_wk_) s += lgamma_count(lg_eta_table_, eta_, c);
  ll += s;
  for (std::size_t k = 0; k < K; ++k)
    ll -= std::lgamma(static_cast<double>(n_k_[k]) + vd * eta_);
  return ll;
}

Matrix GibbsSampler::phi() const {
  Matrix out(k_topics_, n_terms_);
  for (std::size_t k = 0; k < k_topics_; ++k) {
    const double denom = static_cast<double>(n_k_[k]) + v_eta_;
    for (std::size_t w = 0; w < n_terms_; ++w)
      out.at(k, w) = (static_cast<double>(n_wk_[w * k_topics_ + k]) + eta_) / denom;
  }
  return out;
}

Matrix GibbsSampler::theta_hat() const {
  const std::size_t d_count = doc_begin_.size() - 1;
  Matrix out(d_count, k_topics_);
  const auto kd = static_cast<double>(k_topics_);
  for (std::size_t d = 0; d < d_count; ++d) {
    const double denom = static_cast<double>(doc_len_[d]) + kd * alpha_;
    for (std::size_t k = 0; k < k_topics_; ++k)
      out.at(d, k) = (static_cast<double>(n_dk_[d * k_topics_ + k]) + alpha_) / denom;
  }
  return out;
}

EstimatedModel fit_lda(const DocumentTermMatrix& dtm, const GibbsConfig& config) {
  config.validate();
  GibbsSampler sampler(dtm, config);

  EstimatedModel model;
  model.config = config;
  model.vocab = dtm.vocab();
  model.log_likelihood_trace.reserve(config.n_sweeps);

  Matrix phi_sum, theta_sum;
  std::size_t kept = 0;

  for (std::size_t t = 0; t < config.n_sweeps; ++t) {
    sampler.sweep();
    model.log_likelihood_trace.push_back(sampler.joint_log_likelihood());
    if (config.average_after_burn_in && t >= config.burn_in) {
      const Matrix p = sampler.phi();
      const Matrix th = sampler.theta_hat();
      if (kept == 0) {
        phi_sum = p;
        theta_sum = th;
      } else {
        for (std::size_t i = 0; i < p.data.size(); ++i) phi_sum.data[i] += p.data[i];
        for (std::size_t i = 0; i < th.data.size(); ++i) theta_sum.data[i] += th.data[i];
      }
      ++kept;
    }
  }

  if (config.average_after_burn_in && kept > 0) {
    for (auto& x : phi_sum.data) x /= static_cast<double>(kept);
    for (auto& x : theta_sum.data) x /= static_cast<double>(kept);
    model.phi = std::move(phi_sum);
    model.theta_hat = std::move(theta_sum);
  } else {
    model.phi = sampler.phi();
    model.theta_hat = sampler.theta_hat();
  }
  return model;
}

}  // namespace topicprune
