#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uiprune/common.hpp"
#include "uiprune/csv.hpp"
#include "uiprune/textprep.hpp"
#include "uiprune/uiextract.hpp"

namespace uiprune {

/// Sparse vector, sorted by token.
using SparseVec = std::vector<std::pair<std::string, double>>;

class TfIdfSpace {
 public:
  static constexpr const char* scheme = "rawtf-smoothidf-l2";

  TfIdfSpace() = default;

  explicit TfIdfSpace(const std::vector<std::vector<std::string>>& docs) {
    for (const auto& d : docs) {
      if (d.empty()) continue;
      std::set<std::string> uniq(d.begin(), d.end());
      for (const auto& t : uniq) ++df_[t];
      ++n_nonempty_;
    }
    if (n_nonempty_ == 0) throw InputError("cannot build a tf-idf space from empty documents only");
    n_docs_ = docs.size();
  }

  std::size_t n_docs() const { return n_docs_; }
  std::size_t df(const std::string& t) const {
    auto it = df_.find(t);
    return it == df_.end() ? 0 : it->second;
  }
  const std::map<std::string, std::size_t>& vocabulary() const { return df_; }

  /// ln((1 + N) / (1 + df)) + 1; defined for unseen tokens as well.
  double idf(const std::string& t) const {
    return std::log((1.0 + static_cast<double>(n_docs_)) / (1.0 + static_cast<double>(df(t)))) + 1.0;
  }

  /// L2-normalized tf-idf vector; empty if the document is empty.
  SparseVec vectorize(const std::vector<std::string>& tokens) const {
    std::map<std::string, double> tf;
    for (const auto& t : tokens) tf[t] += 1.0;
    SparseVec v;
    double norm = 0;
    for (const auto& [t, c] : tf) {
      double w = c * idf(t);
      v.emplace_back(t, w);
      norm += w * w;
    }
    if (norm == 0) return {};
    norm = std::sqrt(norm);
    for (auto& [t, w] : v) w /= norm;
    return v;
  }

 private:
  std::map<std::string, std::size_t> df_;
  std::size_t n_docs_ = 0;
  std::size_t n_nonempty_ = 0;
};

inline TfIdfSpace build_space(const std::vector<std::vector<std::string>>& docs) { return TfIdfSpace(docs); }

inline double dot(const SparseVec& a, const SparseVec& b) {
  double s = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = a[i].first.compare(b[j].first);
    if (c == 0) {
      s += a[i++].second * b[j++].second;
    } else if (c < 0) {
      ++i;
    } else {
      ++j;
    }
  }
  return std::clamp(s, 0.0, 1.0);
}

inline double cosine(const std::vector<std::string>& a, const std::vector<std::string>& b, const TfIdfSpace& space) {
  return dot(space.vectorize(a), space.vectorize(b));
}

struct ReviewLink {
  std::string review_id;
  std::string element_id;
  int release_ordinal = 0;
  double similarity = 0;

  bool operator==(const ReviewLink&) const = default;
};

/// An element together with its description tokens.
struct ElementDoc {
  std::string element_id;
  std::vector<std::string> tokens;
};

/// All (review, element) pairs with cosine >= threshold, in review-major
/// order. The space is built over the reviews and element descriptions
/// given, so callers pass one release window at a time.
inline std::vector<ReviewLink> link(const std::vector<TokenizedText>& reviews, const std::vector<ElementDoc>& elements,
                                    int release_ordinal, double threshold = 0.65) {
  if (!(threshold > 0 && threshold <= 1)) throw InputError("link threshold must lie in (0, 1]");
  std::vector<std::vector<std::string>> docs;
  for (const auto& r : reviews) docs.push_back(r.tokens);
  for (const auto& e : elements) docs.push_back(e.tokens);
  bool any = std::any_of(docs.begin(), docs.end(), [](const auto& d) { return !d.empty(); });
  if (!any) return {};
  TfIdfSpace space(docs);

  std::vector<SparseVec> evec;
  std::unordered_map<std::string, std::vector<std::size_t>> postings;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    evec.push_back(space.vectorize(elements[e].tokens));
    for (const auto& [t, w] : evec.back()) postings[t].push_back(e);
  }

  std::vector<ReviewLink> out;
  for (const auto& r : reviews) {
    auto rv = space.vectorize(r.tokens);
    std::vector<std::size_t> cand;
    for (const auto& [t, w] : rv)
      if (auto it = postings.find(t); it != postings.end()) cand.insert(cand.end(), it->second.begin(), it->second.end());
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (auto e : cand) {
      double s = dot(rv, evec[e]);
      if (s >= threshold) out.push_back({r.source_id, elements[e].element_id, release_ordinal, s});
    }
  }
  return out;
}

inline std::vector<ReviewLink> link(const std::vector<TokenizedText>& reviews, const std::vector<UIElement>& elements,
                                    const TextPrep& prep, int release_ordinal, double threshold = 0.65) {
  std::vector<ElementDoc> docs;
  for (const auto& e : elements) docs.push_back({e.element_id, description_tokens(e, prep)});
  return link(reviews, docs, release_ordinal, threshold);
}

inline std::string links_csv(const std::vector<ReviewLink>& links) {
  std::string out = csv::format_row({"review_id", "element_id", "release_ordinal", "similarity"});
  for (const auto& l : links)
    out += csv::format_row({l.review_id, l.element_id, std::to_string(l.release_ordinal), format_double(l.similarity)});
  return out;
}

}  // namespace uiprune
