#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace topicprune {

// Term statistics for the retained vocabulary. Terms keep their original ids
// through restriction, so columns stay traceable to the generative vocabulary.
struct Vocabulary {
  std::vector<std::int32_t> terms;  // retained term ids, ascending
  std::vector<std::int64_t> df;     // documents containing the term
  std::vector<std::int64_t> cf;     // total occurrences
  std::size_t n_docs = 0;

  std::size_t size() const { return terms.size(); }
};

// Sparse document x term count matrix in compressed-row layout. Immutable
// after construction; concurrent reads are safe.
class DocumentTermMatrix {
 public:
  std::size_t n_docs() const { return row_ptr_.empty() ? 0 : row_ptr_.size() - 1; }
  std::size_t n_terms() const { return vocab_.size(); }
  const Vocabulary& vocab() const { return vocab_; }

  // Entries of one row: parallel spans of column index and count, columns
  // ascending. Column j corresponds to vocab().terms[j].
  std::span<const std::int32_t> row_cols(std::size_t d) const {
    return {cols_.data() + row_ptr_[d], row_ptr_[d + 1] - row_ptr_[d]};
  }
  std::span<const std::int32_t> row_counts(std::size_t d) const {
    return {counts_.data() + row_ptr_[d], row_ptr_[d + 1] - row_ptr_[d]};
  }

  // Tokens of document d that fall in the retained vocabulary.
  std::int64_t doc_length(std::size_t d) const { return doc_len_[d]; }
  std::int64_t total_tokens() const { return total_tokens_; }

  struct Coordinate {
    std::int64_t doc;
    std::int32_t term;
    std::int64_t count;
  };

  // Rebuilds a matrix from its export representation (term ids as listed in
  // the file header plus coordinate entries).
  static DocumentTermMatrix from_coordinates(
      std::size_t n_docs, const std::vector<std::int32_t>& terms,
      std::vector<Coordinate> entries);

  friend DocumentTermMatrix build_dtm(
      const std::vector<std::vector<std::int32_t>>& docs);
  friend DocumentTermMatrix restrict_terms(const DocumentTermMatrix& dtm,
                                           std::vector<std::int32_t> keep);

 private:
  void finalize();  // recomputes doc_len_, total_tokens_ from CSR data

  std::vector<std::size_t> row_ptr_;
  std::vector<std::int32_t> cols_;
  std::vector<std::int32_t> counts_;
  std::vector<std::int64_t> doc_len_;
  std::int64_t total_tokens_ = 0;
  Vocabulary vocab_;
};

// Counts every observed term. Empty documents yield all-zero rows; an empty
// corpus (no documents at all) is an error.
DocumentTermMatrix build_dtm(const std::vector<std::vector<std::int32_t>>& docs);

// Drops the columns outside `keep` (a set of original term ids, subset of the
// current vocabulary). Rows are preserved, possibly all-zero, so document
// indices stay aligned with ground truth. An empty keep set is an error.
DocumentTermMatrix restrict_terms(const DocumentTermMatrix& dtm,
                                  std::vector<std::int32_t> keep);

}  // namespace topicprune
