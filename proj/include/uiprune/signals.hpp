#pragma once

#include <algorithm>
#include <array>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "uiprune/common.hpp"
#include "uiprune/corpus.hpp"
#include "uiprune/csv.hpp"
#include "uiprune/resources/lexicon.hpp"
#include "uiprune/textprep.hpp"
#include "uiprune/topics.hpp"

namespace uiprune {

struct LexiconEntry {
  double polarity = 0;
  double subjectivity = 0;
};

class SentimentLexicon {
 public:
  static constexpr int negation_window = 2;

  SentimentLexicon() = default;

  /// CSV: term,polarity,subjectivity. Terms are lemmatized on load so they
  /// match preprocessed tokens; when two rows share a lemma the first wins.
  static SentimentLexicon parse(std::string_view csv_text, const Lemmatizer& lemmas, const std::string& origin = "lexicon",
                                Diagnostics* diag = nullptr) {
    SentimentLexicon lex;
    auto rows = csv::parse(csv_text);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      if (i == 0 && to_lower(trim(csv::field(r, 0))) == "term") continue;
      auto where = origin + ":" + std::to_string(r.line);
      auto p = parse_double(csv::field(r, 1));
      auto s = parse_double(csv::field(r, 2));
      auto term = to_lower(trim(csv::field(r, 0)));
      if (term.empty() || !p || !s) throw InputError(where + ": expected term,polarity,subjectivity");
      if (*p < -1 || *p > 1) throw InputError(where + ": polarity outside [-1, 1]");
      if (*s < 0 || *s > 1) throw InputError(where + ": subjectivity outside [0, 1]");
      auto key = lemmas.lemmatize(normalize(term));
      if (!lex.entries_.emplace(key, LexiconEntry{*p, *s}).second && diag)
        diag->warn(where + ": '" + term + "' duplicates lemma '" + key + "', ignored");
    }
    return lex;
  }

  static SentimentLexicon load(const std::filesystem::path& path, const Lemmatizer& lemmas, Diagnostics* diag = nullptr) {
    return parse(csv::read_file(path), lemmas, path.string(), diag);
  }

  static const SentimentLexicon& builtin() {
    static const SentimentLexicon lex = parse(resources::lexicon, Lemmatizer::builtin());
    return lex;
  }

  void add(const std::string& term, double polarity, double subjectivity) {
    entries_[term] = {polarity, subjectivity};
  }

  const LexiconEntry* find(const std::string& term) const {
    auto it = entries_.find(term);
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, LexiconEntry>& entries() const { return entries_; }
  static bool is_negator(const std::string& t) { return StopList::negators().count(t) > 0; }

 private:
  std::map<std::string, LexiconEntry> entries_;
};

struct Sentiment {
  double polarity = 0;
  double objectivity = 0;  // 0 = factual, 1 = opinionated
};

inline Sentiment score_sentiment(const std::vector<std::string>& tokens, const SentimentLexicon& lex) {
  double pol = 0, subj = 0;
  int matched = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto* e = lex.find(tokens[i]);
    if (!e) continue;
    bool negated = false;
    for (std::size_t back = 1; back <= SentimentLexicon::negation_window && back <= i; ++back)
      if (SentimentLexicon::is_negator(tokens[i - back])) negated = true;
    pol += negated ? -e->polarity : e->polarity;
    subj += e->subjectivity;
    ++matched;
  }
  if (matched == 0) return {};
  return {pol / matched, subj / matched};
}

inline Sentiment score_sentiment(const TokenizedText& review, const SentimentLexicon& lex) {
  return score_sentiment(review.tokens, lex);
}

/// True if the text has a word starting with "uninstal" or "refund",
/// ignoring case.
inline bool mentions_uninstall(std::string_view raw_text) {
  for (const auto& w : split_ws(normalize(raw_text)))
    if (starts_with(w, "uninstal") || starts_with(w, "refund")) return true;
  return false;
}

inline int count_uninstall(const std::vector<std::string>& raw_texts) {
  return static_cast<int>(std::count_if(raw_texts.begin(), raw_texts.end(), [](const auto& t) { return mentions_uninstall(t); }));
}

inline int count_uninstall(const std::vector<Review>& reviews) {
  return static_cast<int>(std::count_if(reviews.begin(), reviews.end(), [](const Review& r) { return mentions_uninstall(r.text); }));
}

struct ClusterFeatures {
  std::string cluster_id;
  int n_reviews = 0;
  double avg_rating = 0;
  double delta_rating = 0;
  double avg_polarity = 0;
  double avg_objectivity = 0;
  int uninstall_count = 0;

  static constexpr std::size_t count = 6;
  static constexpr std::array<const char*, count> names{"n_reviews", "avg_rating", "delta_rating",
                                                        "avg_polarity", "avg_objectivity", "uninstall_count"};

  std::array<double, count> values() const {
    return {static_cast<double>(n_reviews), avg_rating, delta_rating, avg_polarity, avg_objectivity,
            static_cast<double>(uninstall_count)};
  }

  bool operator==(const ClusterFeatures&) const = default;
};

/// What featurize needs to know about one review.
struct ReviewRecord {
  int rating = 0;
  std::string raw_text;
  std::vector<std::string> tokens;
};

using ReviewLookup = std::unordered_map<std::string, ReviewRecord>;

namespace detail {

// Sums after sorting, so the mean does not depend on member order.
inline double ordered_mean(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace detail

inline ClusterFeatures featurize(const Cluster& cluster, const ReviewLookup& reviews, double release_avg,
                                 const SentimentLexicon& lex) {
  if (cluster.review_ids.empty()) throw Error("cannot featurize empty cluster '" + cluster.cluster_id + "'");
  std::vector<double> ratings, pols, objs;
  int uninstall = 0;
  for (const auto& id : cluster.review_ids) {
    auto it = reviews.find(id);
    if (it == reviews.end()) throw Error("cluster '" + cluster.cluster_id + "' references unknown review '" + id + "'");
    const auto& r = it->second;
    ratings.push_back(r.rating);
    auto s = score_sentiment(r.tokens, lex);
    pols.push_back(s.polarity);
    objs.push_back(s.objectivity);
    if (mentions_uninstall(r.raw_text)) ++uninstall;
  }
  ClusterFeatures f;
  f.cluster_id = cluster.cluster_id;
  f.n_reviews = static_cast<int>(cluster.review_ids.size());
  f.avg_rating = detail::ordered_mean(ratings);
  f.delta_rating = f.avg_rating - release_avg;
  f.avg_polarity = detail::ordered_mean(pols);
  f.avg_objectivity = detail::ordered_mean(objs);
  f.uninstall_count = uninstall;
  return f;
}

inline std::string features_csv(const std::vector<ClusterFeatures>& feats) {
  std::vector<std::string> header{"cluster_id"};
  for (auto n : ClusterFeatures::names) header.emplace_back(n);
  std::string out = csv::format_row(header);
  for (const auto& f : feats)
    out += csv::format_row({f.cluster_id, std::to_string(f.n_reviews), format_double(f.avg_rating),
                            format_double(f.delta_rating), format_double(f.avg_polarity),
                            format_double(f.avg_objectivity), std::to_string(f.uninstall_count)});
  return out;
}

}  // namespace uiprune
