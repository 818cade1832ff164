#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topicprune/dtm.hpp"

namespace topicprune {

enum class PruneCriterion {
  relative_document_frequency,
  absolute_term_frequency,
  tfidf_top_v,
};

// Names used in CLI flags, cell files and aggregate tables.
std::string criterion_name(PruneCriterion c);
PruneCriterion criterion_from_name(const std::string& name);

struct PruningRule {
  PruneCriterion kind;
  double threshold;  // fraction of documents | minimum corpus count | target V
};

// Ordered relative document-frequency cut-offs; strictly increasing, first
// value may be 0.0 (no pruning).
struct CutoffSchedule {
  std::vector<double> values;
  void validate() const;
};

enum class DgpPreset { dgp1, dgp2 };

// dgp1: steps of 0.5% over [0%, 9.5%], 20 values. dgp2: steps of 0.25% up to
// 2%, then 2.5%, 3%, 3.5%, 4%, 13 values.
CutoffSchedule default_schedule(DgpPreset preset);

// Keeps exactly the terms with df / n_docs >= cutoff. "Below the threshold"
// is removed, taken strictly, so cutoff 0 keeps everything.
DocumentTermMatrix prune_by_relative_df(const DocumentTermMatrix& dtm,
                                        double cutoff);

// Keeps exactly the terms with corpus frequency >= min_count.
DocumentTermMatrix prune_by_absolute_tf(const DocumentTermMatrix& dtm,
                                        std::int64_t min_count);

enum class TfidfAggregate { sum, max };

// Per-term score: sum over documents of tf(w, D) * idf(w), where
// tf(w, D) = count(w, D) / length(D) for non-empty documents and
// idf(w) = ln(n_docs / df(w)). Empty documents contribute 0. The max
// aggregate replaces the sum by a max over documents.
std::vector<double> tfidf_scores(const DocumentTermMatrix& dtm,
                                 TfidfAggregate aggregate = TfidfAggregate::sum);

// Keeps the target_v terms with the highest TF-IDF scores; ties broken by
// lower term id.
DocumentTermMatrix prune_by_tfidf_topv(const DocumentTermMatrix& dtm,
                                       std::size_t target_v,
                                       TfidfAggregate aggregate = TfidfAggregate::sum);

// The min_count whose retained-vocabulary size is closest to target_v; ties
// in closeness resolved toward the smaller min_count (larger vocabulary).
std::int64_t match_tf_threshold(const DocumentTermMatrix& dtm,
                                std::size_t target_v);

}  // namespace topicprune
