#include "topicprune/dtm.hpp"

#include <algorithm>
#include <string>

#include "topicprune/errors.hpp"

namespace topicprune {

void DocumentTermMatrix::finalize() {
  const std::size_t d_count = n_docs();
  doc_len_.assign(d_count, 0);
  total_tokens_ = 0;
  for (std::size_t d = 0; d < d_count; ++d) {
    std::int64_t len = 0;
    for (const auto c : row_counts(d)) len += c;
    doc_len_[d] = len;
    total_tokens_ += len;
  }
}

DocumentTermMatrix build_dtm(
    const std::vector<std::vector<std::int32_t>>& docs) {
  if (docs.empty()) throw InvalidParameter("build_dtm: empty corpus");

  std::int32_t max_id = -1;
  for (const auto& doc : docs) {
    for (const auto t : doc) {
      if (t < 0) throw InvalidParameter("build_dtm: negative token id");
      max_id = std::max(max_id, t);
    }
  }

  const std::size_t id_space = static_cast<std::size_t>(max_id) + 1;
  std::vector<std::int64_t> df(id_space, 0), cf(id_space, 0);

  DocumentTermMatrix m;
  m.row_ptr_.reserve(docs.size() + 1);
  m.row_ptr_.push_back(0);

  std::vector<std::int32_t> sorted;
  // first pass: per-document runs into temporary (term, count) rows keyed by
  // original term id; column compaction happens after df/cf are known
  std::vector<std::int32_t> tmp_cols;
  std::vector<std::int32_t> tmp_counts;
  for (const auto& doc : docs) {
    sorted.assign(doc.begin(), doc.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      const auto term = sorted[i];
      const auto count = static_cast<std::int32_t>(j - i);
      tmp_cols.push_back(term);
      tmp_counts.push_back(count);
      df[term] += 1;
      cf[term] += count;
      i = j;
    }
    m.row_ptr_.push_back(tmp_cols.size());
  }

  // observed terms, ascending by construction
  std::vector<std::int32_t> term_to_col(id_space, -1);
  for (std::size_t t = 0; t < id_space; ++t) {
    if (cf[t] > 0) {
      term_to_col[t] = static_cast<std::int32_t>(m.vocab_.terms.size());
      m.vocab_.terms.push_back(static_cast<std::int32_t>(t));
      m.vocab_.df.push_back(df[t]);
      m.vocab_.cf.push_back(cf[t]);
    }
  }
  m.vocab_.n_docs = docs.size();

  m.cols_.resize(tmp_cols.size());
  for (std::size_t i = 0; i < tmp_cols.size(); ++i)
    m.cols_[i] = term_to_col[tmp_cols[i]];
  m.counts_ = std::move(tmp_counts);
  m.finalize();
  return m;
}

DocumentTermMatrix restrict_terms(const DocumentTermMatrix& dtm,
                                  std::vector<std::int32_t> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty())
    throw EmptyVocabularyError("restrict_terms: keep set is empty");

  const auto& vocab = dtm.vocab();
  // keep must be a subset of the current vocabulary
  std::vector<std::int32_t> old_col_of_kept;
  old_col_of_kept.reserve(keep.size());
  for (const auto term : keep) {
    const auto it = std::lower_bound(vocab.terms.begin(), vocab.terms.end(), term);
    if (it == vocab.terms.end() || *it != term)
      throw InvalidParameter("restrict_terms: term " + std::to_string(term) +
                             " not in vocabulary");
    old_col_of_kept.push_back(
        static_cast<std::int32_t>(it - vocab.terms.begin()));
  }

  std::vector<std::int32_t> new_col(vocab.size(), -1);
  for (std::size_t j = 0; j < old_col_of_kept.size(); ++j)
    new_col[old_col_of_kept[j]] = static_cast<std::int32_t>(j);

  DocumentTermMatrix out;
  out.vocab_.terms = keep;
  out.vocab_.df.assign(keep.size(), 0);
  out.vocab_.cf.assign(keep.size(), 0);
  out.vocab_.n_docs = vocab.n_docs;

  out.row_ptr_.reserve(dtm.n_docs() + 1);
  out.row_ptr_.push_back(0);
  for (std::size_t d = 0; d < dtm.n_docs(); ++d) {
    const auto cols = dtm.row_cols(d);
    const auto counts = dtm.row_counts(d);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const auto nc = new_col[cols[i]];
      if (nc < 0) continue;
      out.cols_.push_back(nc);
      out.counts_.push_back(counts[i]);
      out.vocab_.df[nc] += 1;
      out.vocab_.cf[nc] += counts[i];
    }
    out.row_ptr_.push_back(out.cols_.size());
  }
  out.finalize();
  return out;
}

DocumentTermMatrix DocumentTermMatrix::from_coordinates(
    std::size_t n_docs, const std::vector<std::int32_t>& terms,
    std::vector<Coordinate> entries) {
  if (n_docs == 0) throw InvalidParameter("dtm: n_docs must be >= 1");
  DocumentTermMatrix m;
  m.vocab_.terms = terms;
  if (!std::is_sorted(terms.begin(), terms.end()) ||
      std::adjacent_find(terms.begin(), terms.end()) != terms.end())
    throw InvalidParameter("dtm: header term list must be ascending, unique");
  m.vocab_.df.assign(terms.size(), 0);
  m.vocab_.cf.assign(terms.size(), 0);
  m.vocab_.n_docs = n_docs;

  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.doc != b.doc ? a.doc < b.doc : a.term < b.term;
  });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].doc == entries[i - 1].doc &&
        entries[i].term == entries[i - 1].term)
      throw InvalidParameter("dtm: duplicate (doc, term) entry");
  }

  m.row_ptr_.assign(1, 0);
  for (const auto& e : entries) {
    if (e.doc < 0 || e.doc >= static_cast<std::int64_t>(n_docs))
      throw InvalidParameter("dtm: doc id out of range");
    if (e.count <= 0) throw InvalidParameter("dtm: counts must be positive");
    const auto it = std::lower_bound(terms.begin(), terms.end(), e.term);
    if (it == terms.end() || *it != e.term)
      throw InvalidParameter("dtm: entry term not in header term list");
    const auto col = static_cast<std::int32_t>(it - terms.begin());
    while (m.row_ptr_.size() <= static_cast<std::size_t>(e.doc))
      m.row_ptr_.push_back(m.cols_.size());
    m.cols_.push_back(col);
    m.counts_.push_back(static_cast<std::int32_t>(e.count));
    m.vocab_.df[col] += 1;
    m.vocab_.cf[col] += e.count;
  }
  while (m.row_ptr_.size() <= n_docs) m.row_ptr_.push_back(m.cols_.size());
  m.finalize();
  return m;
}

}  // namespace topicprune
