#pragma once

// Brute-force tf-idf cosine written independently of the linker, used as
// the test oracle.

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

struct Link {
  std::size_t review, element;
  double similarity;
};

inline double idf(const std::vector<std::vector<std::string>>& docs, const std::string& t) {
  double n = static_cast<double>(docs.size()), df = 0;
  for (const auto& d : docs) {
    for (const auto& w : d)
      if (w == t) {
        df += 1;
        break;
      }
  }
  return std::log((1 + n) / (1 + df)) + 1;
}

inline std::map<std::string, double> weights(const std::vector<std::vector<std::string>>& docs,
                                             const std::vector<std::string>& d) {
  std::map<std::string, double> w;
  for (const auto& t : d) w[t] += 1;
  double norm = 0;
  for (auto& [t, v] : w) {
    v *= idf(docs, t);
    norm += v * v;
  }
  for (auto& [t, v] : w) v /= std::sqrt(norm);
  return w;
}

inline double cosine(const std::vector<std::vector<std::string>>& docs, const std::vector<std::string>& a,
                     const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) return 0;
  auto wa = weights(docs, a), wb = weights(docs, b);
  double s = 0;
  for (const auto& [t, v] : wa)
    if (wb.count(t)) s += v * wb.at(t);
  return s;
}

/// Every (review, element) pair with cosine >= threshold. The document
/// collection is reviews followed by elements.
inline std::vector<Link> all_pairs(const std::vector<std::vector<std::string>>& reviews,
                                   const std::vector<std::vector<std::string>>& elements, double threshold) {
  std::vector<std::vector<std::string>> docs = reviews;
  docs.insert(docs.end(), elements.begin(), elements.end());
  std::vector<Link> out;
  for (std::size_t r = 0; r < reviews.size(); ++r)
    for (std::size_t e = 0; e < elements.size(); ++e) {
      double s = cosine(docs, reviews[r], elements[e]);
      if (s >= threshold) out.push_back({r, e, s});
    }
  return out;
}

}  // namespace oracle
