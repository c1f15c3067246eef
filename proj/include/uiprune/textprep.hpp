#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "uiprune/common.hpp"
#include "uiprune/csv.hpp"
#include "uiprune/resources/contractions.hpp"
#include "uiprune/resources/lemmas.hpp"
#include "uiprune/resources/stopwords.hpp"

namespace uiprune {

struct TokenizedText {
  std::string source_id;
  std::vector<std::string> tokens;
  std::string raw_text;
};

// ---------------------------------------------------------------------------
// Stop list

class StopList {
 public:
  StopList() { exempt_negators(); }

  /// One word per line; a leading '-' exempts the word, a leading '+' adds
  /// it, anything else goes into the base list. '#' lines are comments.
  static StopList parse(std::string_view text) {
    StopList s;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      auto t = trim(line);
      if (t.empty() || t.front() == '#') continue;
      if (t.front() == '-')
        s.removals_.insert(to_lower(trim(t.substr(1))));
      else if (t.front() == '+')
        s.additions_.insert(to_lower(trim(t.substr(1))));
      else
        s.base_.insert(to_lower(t));
    }
    s.exempt_negators();
    return s;
  }

  static StopList load(const std::filesystem::path& path) { return parse(csv::read_file(path)); }

  static const StopList& builtin() {
    static const StopList s = parse(resources::stopwords);
    return s;
  }

  void add(std::string w) { additions_.insert(std::move(w)); }
  void exempt(std::string w) { removals_.insert(std::move(w)); }

  bool contains(std::string_view w) const {
    std::string k(w);
    if (removals_.count(k)) return false;
    return base_.count(k) || additions_.count(k);
  }

  const std::set<std::string>& base() const { return base_; }
  const std::set<std::string>& additions() const { return additions_; }
  const std::set<std::string>& removals() const { return removals_; }

  static const std::set<std::string>& negators() {
    static const std::set<std::string> n{"not", "no", "never"};
    return n;
  }

 private:
  void exempt_negators() {
    for (const auto& n : negators()) removals_.insert(n);
  }

  std::set<std::string> base_, additions_, removals_;
};

// ---------------------------------------------------------------------------
// Contractions

namespace detail {

inline bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

// Length of an apostrophe at s[i]: 1 for ASCII, 3 for U+2019, else 0.
inline std::size_t apostrophe_at(std::string_view s, std::size_t i) {
  if (s[i] == '\'') return 1;
  if (s.substr(i, 3) == "\xE2\x80\x99") return 3;
  return 0;
}

}  // namespace detail

class ContractionTable {
 public:
  static ContractionTable parse(std::string_view csv_text, const std::string& origin = "contractions") {
    ContractionTable t;
    auto rows = csv::parse(csv_text);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      if (i == 0 && to_lower(trim(csv::field(r, 0))) == "contraction") continue;
      if (r.fields.size() < 2)
        throw InputError(origin + ":" + std::to_string(r.line) + ": expected contraction,expansion");
      t.map_[to_lower(trim(r.fields[0]))] = to_lower(trim(r.fields[1]));
    }
    return t;
  }

  static ContractionTable load(const std::filesystem::path& path) {
    return parse(csv::read_file(path), path.string());
  }

  static const ContractionTable& builtin() {
    static const ContractionTable t = parse(resources::contractions);
    return t;
  }

  std::size_t size() const { return map_.size(); }
  bool contains(std::string_view key) const { return map_.count(std::string(key)) > 0; }

  /// Replaces every run of letters and apostrophes found in the table.
  /// Matching is case-insensitive and treats U+2019 like '.
  std::string expand(std::string_view text) const {
    std::string out;
    out.reserve(text.size() + 16);
    std::size_t i = 0;
    while (i < text.size()) {
      std::size_t j = i;
      std::string key;
      bool has_apos = false;
      while (j < text.size()) {
        if (detail::is_alpha(text[j])) {
          key += static_cast<char>(std::tolower(static_cast<unsigned char>(text[j])));
          ++j;
        } else if (auto n = detail::apostrophe_at(text, j)) {
          key += '\'';
          has_apos = true;
          j += n;
        } else {
          break;
        }
      }
      if (j == i) {
        out += text[i++];
        continue;
      }
      std::string_view raw = text.substr(i, j - i);
      i = j;
      if (!has_apos) {
        out += raw;
        continue;
      }
      if (auto it = map_.find(key); it != map_.end()) {
        out += it->second;
        continue;
      }
      // Quotes wrapped around a word: 'don't' -> do not, keeping the quotes.
      std::size_t lead = 0, trail = 0;
      while (lead < key.size() && key[lead] == '\'') ++lead;
      while (trail < key.size() - lead && key[key.size() - 1 - trail] == '\'') ++trail;
      auto inner = key.substr(lead, key.size() - lead - trail);
      auto it = map_.find(inner);
      if ((lead || trail) && it != map_.end()) {
        out.append(lead, '\'');
        out += it->second;
        out.append(trail, '\'');
      } else {
        out += raw;
      }
    }
    return out;
  }

 private:
  std::unordered_map<std::string, std::string> map_;
};

inline std::string expand_contractions(std::string_view text) {
  return ContractionTable::builtin().expand(text);
}

// ---------------------------------------------------------------------------
// Normalization

/// Lowercases ASCII letters; every other byte becomes a separator. Runs of
/// separators collapse to one space, with none at either end.
inline std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (detail::is_alpha(c)) {
      if (pending_space && !out.empty()) out += ' ';
      pending_space = false;
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      pending_space = true;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lemmatization

class Lemmatizer {
 public:
  static Lemmatizer parse(std::string_view csv_text, const std::string& origin = "lemmas") {
    Lemmatizer l;
    auto rows = csv::parse(csv_text);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      if (i == 0 && to_lower(trim(csv::field(r, 0))) == "form") continue;
      if (r.fields.size() < 2)
        throw InputError(origin + ":" + std::to_string(r.line) + ": expected form,lemma");
      auto form = to_lower(trim(r.fields[0]));
      auto lemma = to_lower(trim(r.fields[1]));
      if (form.empty() || lemma.empty())
        throw InputError(origin + ":" + std::to_string(r.line) + ": empty form or lemma");
      l.table_[form] = lemma;
    }
    // Resolve chains so every lookup lands on a fixed point.
    for (auto& [form, lemma] : l.table_) {
      std::string cur = lemma;
      for (int hops = 0;; ++hops) {
        if (hops > 64) throw InputError(origin + ": lemma table has a cycle through '" + form + "'");
        auto it = l.table_.find(cur);
        if (it == l.table_.end() || it->second == cur) break;
        cur = it->second;
      }
      lemma = cur;
    }
    return l;
  }

  static Lemmatizer load(const std::filesystem::path& path) { return parse(csv::read_file(path), path.string()); }

  static const Lemmatizer& builtin() {
    static const Lemmatizer l = parse(resources::lemmas);
    return l;
  }

  bool known(const std::string& w) const { return table_.count(w) > 0; }
  const std::unordered_map<std::string, std::string>& table() const { return table_; }

  /// Applies step() until nothing changes. Every step either lands on a
  /// table lemma or shortens the word, so this terminates, and the result is
  /// a fixed point, which makes the function idempotent.
  std::string lemmatize(std::string_view token) const {
    std::string w(token);
    for (;;) {
      auto next = step(w);
      if (next == w) return w;
      w = std::move(next);
    }
  }

  std::string step(const std::string& w) const {
    if (auto it = table_.find(w); it != table_.end()) return it->second;
    const auto n = w.size();
    if (n > 4 && ends_with(w, "ies")) {
      auto stem = w.substr(0, n - 3);
      if (known(stem + "ie")) return stem + "ie";
      return stem + "y";
    }
    if (n > 4 && ends_with(w, "ied")) return w.substr(0, n - 3) + "y";
    if (n > 4 && ends_with(w, "es")) {
      auto stem = w.substr(0, n - 2);
      if (ends_with(stem, "sh") || ends_with(stem, "ch") || ends_with(stem, "x") || ends_with(stem, "ss") ||
          ends_with(stem, "z"))
        return stem;
    }
    if (n >= 3 && w.back() == 's' && !ends_with(w, "ss") && !ends_with(w, "us") && !ends_with(w, "is"))
      return w.substr(0, n - 1);
    if (ends_with(w, "ing") && n >= 6) {
      auto stem = w.substr(0, n - 3);
      if (has_vowel(stem)) return restore(stem);
    }
    if (ends_with(w, "ed") && n >= 5) {
      auto stem = w.substr(0, n - 2);
      if (has_vowel(stem)) return restore(stem);
    }
    return w;
  }

 private:
  static bool has_vowel(std::string_view s) { return s.find_first_of("aeiouy") != std::string_view::npos; }

  // decid -> decide, stopp -> stop
  std::string restore(const std::string& stem) const {
    if (known(stem)) return stem;
    if (known(stem + "e")) return stem + "e";
    auto n = stem.size();
    if (n >= 3 && stem[n - 1] == stem[n - 2] && std::string_view("aeioulszf").find(stem[n - 1]) == std::string_view::npos)
      return stem.substr(0, n - 1);
    return stem;
  }

  std::unordered_map<std::string, std::string> table_;
};

inline std::string lemmatize(std::string_view token) { return Lemmatizer::builtin().lemmatize(token); }

// ---------------------------------------------------------------------------
// Full pipeline

class TextPrep {
 public:
  TextPrep()
      : stop_(StopList::builtin()), contractions_(ContractionTable::builtin()), lemmas_(Lemmatizer::builtin()) {}
  TextPrep(StopList stop, ContractionTable contractions, Lemmatizer lemmas)
      : stop_(std::move(stop)), contractions_(std::move(contractions)), lemmas_(std::move(lemmas)) {}
  explicit TextPrep(StopList stop)
      : stop_(std::move(stop)), contractions_(ContractionTable::builtin()), lemmas_(Lemmatizer::builtin()) {}

  const StopList& stoplist() const { return stop_; }
  const Lemmatizer& lemmatizer() const { return lemmas_; }

  std::vector<std::string> tokens(std::string_view text) const {
    std::vector<std::string> out;
    for (auto& w : split_ws(normalize(contractions_.expand(text)))) {
      if (stop_.contains(w)) continue;
      auto lemma = lemmas_.lemmatize(w);
      // A lemma can itself be a stop word (was -> be).
      if (stop_.contains(lemma)) continue;
      out.push_back(std::move(lemma));
    }
    return out;
  }

  TokenizedText preprocess(std::string_view text, std::string source_id = {}) const {
    return TokenizedText{std::move(source_id), tokens(text), std::string(text)};
  }

 private:
  StopList stop_;
  ContractionTable contractions_;
  Lemmatizer lemmas_;
};

inline TokenizedText preprocess(std::string_view text, const StopList& stoplist) {
  return TextPrep(stoplist).preprocess(text);
}

}  // namespace uiprune
