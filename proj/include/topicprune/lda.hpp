#pragma once

#include <cstdint>
#include <vector>

#include "topicprune/dtm.hpp"
#include "topicprune/matrix.hpp"
#include "topicprune/rng.hpp"

namespace topicprune {

struct GibbsConfig {
  std::size_t n_topics = 0;
  double alpha = 0.0;  // document-topic prior
  double eta = 0.0;    // topic-word prior
  std::size_t burn_in = 200;
  std::size_t n_sweeps = 500;
  std::uint64_t seed = 0;
  // Average the smoothed estimates over post-burn-in sweeps instead of
  // reading the final state. The final-state default avoids label-switching
  // contamination.
  bool average_after_burn_in = false;

  void validate() const;
};

struct EstimatedModel {
  Matrix phi;        // n_topics x n_terms, rows sum to 1
  Matrix theta_hat;  // n_docs x n_topics, rows sum to 1
  Vocabulary vocab;  // the vocabulary the model was fit on
  std::vector<double> log_likelihood_trace;  // one value per sweep
  GibbsConfig config;
};

// Collapsed Gibbs sampler over token-topic assignments
// (Griffiths-Steyvers style). One instance is a single sequential chain;
// run independent fits concurrently instead of sharing an instance.
class GibbsSampler {
 public:
  GibbsSampler(const DocumentTermMatrix& dtm, const GibbsConfig& config);

  void sweep();

  // Collapsed joint log p(w, z | alpha, eta) of the current state via the
  // Dirichlet-multinomial closed form.
  double joint_log_likelihood() const;

  // Smoothed point estimates from the current counts:
  //   phi[k][w]      = (n_kw + eta)   / (n_k + V * eta)
  //   theta_hat[d][k] = (n_dk + alpha) / (n_d + K * alpha)
  Matrix phi() const;
  Matrix theta_hat() const;

  std::int64_t total_tokens() const { return static_cast<std::int64_t>(token_word_.size()); }
  std::int64_t topic_count(std::size_t k) const { return n_k_[k]; }
  std::int32_t doc_topic_count(std::size_t d, std::size_t k) const {
    return n_dk_[d * k_topics_ + k];
  }
  std::int32_t topic_word_count(std::size_t k, std::size_t col) const {
    return n_wk_[col * k_topics_ + k];
  }
  std::size_t n_docs() const { return doc_begin_.size() - 1; }
  std::size_t n_topics() const { return k_topics_; }
  std::size_t n_terms() const { return n_terms_; }

 private:
  std::size_t k_topics_ = 0;
  std::size_t n_terms_ = 0;
  double alpha_ = 0.0;
  double eta_ = 0.0;
  double v_eta_ = 0.0;  // n_terms * eta

  std::vector<std::size_t> doc_begin_;     // token ranges per document
  std::vector<std::int32_t> token_word_;   // column index per token
  std::vector<std::int32_t> token_topic_;  // current assignment per token
  std::vector<std::int64_t> doc_len_;

  std::vector<std::int32_t> n_dk_;   // n_docs x K
  std::vector<std::int32_t> n_wk_;   // n_terms x K (word-major)
  std::vector<std::int64_t> n_k_;    // K
  std::vector<double> inv_nk_;       // 1 / (n_k + V * eta), kept in sync
  std::vector<double> cdf_;          // scratch

  // memoized lgamma(n + alpha) / lgamma(n + eta) over integer counts; the
  // likelihood evaluates these millions of times per sweep
  mutable std::vector<double> lg_alpha_table_;
  mutable std::vector<double> lg_eta_table_;
  double lgamma_count(std::vector<double>& table, double offset,
                      std::int64_t n) const;

  RngStream rng_;
};

// Fits one LDA model by collapsed Gibbs sampling. Deterministic given
// config.seed. All-zero documents are tolerated; their theta_hat is the
// uniform prior mean. An empty vocabulary is an error.
EstimatedModel fit_lda(const DocumentTermMatrix& dtm, const GibbsConfig& config);

}  // namespace topicprune
