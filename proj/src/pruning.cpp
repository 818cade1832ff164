#include "topicprune/pruning.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "topicprune/errors.hpp"

namespace topicprune {

std::string criterion_name(PruneCriterion c) {
  switch (c) {
    case PruneCriterion::relative_document_frequency: return "docfreq";
    case PruneCriterion::absolute_term_frequency: return "termfreq";
    case PruneCriterion::tfidf_top_v: return "tfidf";
  }
  throw InvalidParameter("unknown criterion");
}

PruneCriterion criterion_from_name(const std::string& name) {
  if (name == "docfreq") return PruneCriterion::relative_document_frequency;
  if (name == "termfreq") return PruneCriterion::absolute_term_frequency;
  if (name == "tfidf") return PruneCriterion::tfidf_top_v;
  throw InvalidParameter("unknown criterion name: " + name);
}

void CutoffSchedule::validate() const {
  if (values.empty()) throw InvalidParameter("schedule: no cut-off values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0.0 || values[i] > 1.0)
      throw InvalidParameter("schedule: cut-offs must lie in [0, 1]");
    if (i > 0 && values[i] <= values[i - 1])
      throw InvalidParameter("schedule: cut-offs must be strictly increasing");
  }
}

CutoffSchedule default_schedule(DgpPreset preset) {
  CutoffSchedule s;
  if (preset == DgpPreset::dgp1) {
    for (int i = 0; i < 20; ++i) s.values.push_back(i * 0.005);
  } else {
    for (int i = 0; i <= 8; ++i) s.values.push_back(i * 0.0025);
    for (int i = 5; i <= 8; ++i) s.values.push_back(i * 0.005);
  }
  s.validate();
  return s;
}

DocumentTermMatrix prune_by_relative_df(const DocumentTermMatrix& dtm,
                                        double cutoff) {
  if (cutoff < 0.0 || cutoff > 1.0)
    throw InvalidParameter("prune_by_relative_df: cutoff must lie in [0, 1]");
  const auto& vocab = dtm.vocab();
  const auto n = static_cast<double>(vocab.n_docs);
  std::vector<std::int32_t> keep;
  for (std::size_t j = 0; j < vocab.size(); ++j) {
    if (static_cast<double>(vocab.df[j]) / n >= cutoff)
      keep.push_back(vocab.terms[j]);
  }
  if (keep.empty())
    throw EmptyVocabularyError("prune_by_relative_df: empty vocabulary at cutoff " +
                               std::to_string(cutoff));
  return restrict_terms(dtm, keep);
}

DocumentTermMatrix prune_by_absolute_tf(const DocumentTermMatrix& dtm,
                                        std::int64_t min_count) {
  if (min_count < 1)
    throw InvalidParameter("prune_by_absolute_tf: min_count must be >= 1");
  const auto& vocab = dtm.vocab();
  std::vector<std::int32_t> keep;
  for (std::size_t j = 0; j < vocab.size(); ++j) {
    if (vocab.cf[j] >= min_count) keep.push_back(vocab.terms[j]);
  }
  if (keep.empty())
    throw EmptyVocabularyError("prune_by_absolute_tf: empty vocabulary at min_count " +
                               std::to_string(min_count));
  return restrict_terms(dtm, keep);
}

std::vector<double> tfidf_scores(const DocumentTermMatrix& dtm,
                                 TfidfAggregate aggregate) {
  if (dtm.n_terms() == 0)
    throw InvalidParameter("tfidf_scores: matrix has no terms");
  const auto& vocab = dtm.vocab();
  const auto n_docs = static_cast<double>(vocab.n_docs);

  std::vector<double> idf(vocab.size());
  for (std::size_t j = 0; j < vocab.size(); ++j)
    idf[j] = std::log(n_docs / static_cast<double>(vocab.df[j]));

  std::vector<double> scores(vocab.size(), 0.0);
  for (std::size_t d = 0; d < dtm.n_docs(); ++d) {
    const auto len = dtm.doc_length(d);
    if (len == 0) continue;
    const auto cols = dtm.row_cols(d);
    const auto counts = dtm.row_counts(d);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const double value =
          static_cast<double>(counts[i]) / static_cast<double>(len) * idf[cols[i]];
      if (aggregate == TfidfAggregate::sum)
        scores[cols[i]] += value;
      else
        scores[cols[i]] = std::max(scores[cols[i]], value);
    }
  }
  return scores;
}

DocumentTermMatrix prune_by_tfidf_topv(const DocumentTermMatrix& dtm,
                                       std::size_t target_v,
                                       TfidfAggregate aggregate) {
  if (target_v < 1 || target_v > dtm.n_terms())
    throw InvalidParameter(
        "prune_by_tfidf_topv: target_v must lie in [1, vocabulary size]");
  const auto scores = tfidf_scores(dtm, aggregate);
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  // highest score first; ties by lower term id (columns already id-ordered)
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b];
  });
  std::vector<std::int32_t> keep;
  keep.reserve(target_v);
  for (std::size_t i = 0; i < target_v; ++i)
    keep.push_back(dtm.vocab().terms[order[i]]);
  return restrict_terms(dtm, keep);
}

std::int64_t match_tf_threshold(const DocumentTermMatrix& dtm,
                                std::size_t target_v) {
  if (target_v < 1)
    throw InvalidParameter("match_tf_threshold: target_v must be >= 1");
  const auto& cf = dtm.vocab().cf;
  const std::int64_t max_cf =
      cf.empty() ? 1 : *std::max_element(cf.begin(), cf.end());

  // retained_size(m) = |{t : cf[t] >= m}| via a histogram suffix sum
  std::vector<std::int64_t> at_least(max_cf + 2, 0);
  for (const auto c : cf) ++at_least[c];
  for (std::int64_t m = max_cf - 1; m >= 1; --m) at_least[m] += at_least[m + 1];

  std::int64_t best_m = 1;
  std::int64_t best_gap = -1;
  for (std::int64_t m = 1; m <= max_cf + 1; ++m) {
    const std::int64_t size = m <= max_cf ? at_least[m] : 0;
    const std::int64_t gap =
        std::llabs(size - static_cast<std::int64_t>(target_v));
    if (best_gap < 0 || gap < best_gap) {
      best_gap = gap;
      best_m = m;
    }
  }
  return best_m;
}

}  // namespace topicprune
