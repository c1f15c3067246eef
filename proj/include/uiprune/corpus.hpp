#pragma once

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include <json.hpp>

#include "uiprune/common.hpp"
#include "uiprune/csv.hpp"

namespace uiprune {

struct Release {
  std::string app_id;
  std::string version;
  int ordinal = 0;
  Timestamp released_at = 0;
  std::optional<double> avg_rating;

  bool operator==(const Release&) const = default;
};

struct Review {
  std::string review_id;
  std::string app_id;
  std::string text;
  int rating = 0;
  Timestamp posted_at = 0;
  std::optional<int> window_ordinal;

  bool operator==(const Review&) const = default;
};

struct DeletionLabel {
  std::string app_id;
  std::string element_id;
  int release_ordinal = 0;
  bool deleted = false;

  bool operator==(const DeletionLabel&) const = default;
};

/// A record that failed validation, with its 1-based line number.
struct RecordError {
  std::size_t line = 0;
  std::string message;
};

struct ReviewLoad {
  std::vector<Review> reviews;
  std::vector<RecordError> rejected;
};

namespace detail {

inline std::optional<int> json_rating(const nlohmann::json& v) {
  if (v.is_number_integer()) return static_cast<int>(v.get<long long>());
  if (v.is_number_float()) {
    double d = v.get<double>();
    if (d == static_cast<int>(d)) return static_cast<int>(d);
    return std::nullopt;
  }
  if (v.is_string()) {
    auto p = parse_int(v.get<std::string>());
    if (p) return static_cast<int>(*p);
  }
  return std::nullopt;
}

/// Validates one raw record; returns an error message or the finished Review.
inline std::variant<Review, std::string> make_review(const std::string& app_id, std::size_t line,
                                                     std::optional<std::string> id, std::string text,
                                                     std::optional<int> rating,
                                                     std::optional<std::string> ts) {
  if (trim(text).empty()) return std::string("empty review text");
  if (!rating) return std::string("missing or non-integer rating");
  if (*rating < 1 || *rating > 5) return "rating " + std::to_string(*rating) + " outside 1-5";
  if (!ts) return std::string("missing timestamp");
  auto t = parse_iso8601(*ts);
  if (!t) return "unparsable timestamp '" + *ts + "'";
  Review r;
  r.app_id = app_id;
  r.review_id = id && !id->empty() ? *id : app_id + ":" + std::to_string(line);
  r.text = std::move(text);
  r.rating = *rating;
  r.posted_at = *t;
  return r;
}

}  // namespace detail

/// Loads a review export. Files ending in ".csv" are read as CSV with a
/// header row (text, rating, timestamp, optional id); anything else is read as
/// one JSON object per line with the same keys. Invalid records are collected
/// in `rejected`; the call only fails if the file is missing or every record
/// is invalid.
inline ReviewLoad load_reviews(const std::filesystem::path& path, const std::string& app_id) {
  if (!std::filesystem::exists(path)) throw InputError("reviews file not found: " + path.string());
  ReviewLoad out;
  std::size_t records = 0;

  auto accept = [&](std::size_t line, std::variant<Review, std::string> r) {
    ++records;
    if (auto* rev = std::get_if<Review>(&r))
      out.reviews.push_back(std::move(*rev));
    else
      out.rejected.push_back({line, std::get<std::string>(r)});
  };

  if (path.extension() == ".csv") {
    auto rows = csv::read(path);
    if (rows.empty()) return out;
    csv::Header h(rows.front());
    auto text_col = h.require("text", path.string());
    auto rating_col = h.require("rating", path.string());
    auto ts_col = h.require("timestamp", path.string());
    auto id_col = h.find("id");
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto& row = rows[i];
      std::optional<std::string> id;
      if (id_col) id = csv::field(row, *id_col);
      std::optional<int> rating;
      if (auto p = parse_int(csv::field(row, rating_col))) rating = static_cast<int>(*p);
      accept(row.line, detail::make_review(app_id, row.line, id, csv::field(row, text_col), rating,
                                           csv::field(row, ts_col)));
    }
  } else {
    std::istringstream in(csv::read_file(path));
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (trim(line).empty()) continue;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error& e) {
        ++records;
        out.rejected.push_back({lineno, std::string("malformed JSON: ") + e.what()});
        continue;
      }
      if (!j.is_object()) {
        ++records;
        out.rejected.push_back({lineno, "record is not a JSON object"});
        continue;
      }
      std::optional<std::string> id;
      if (j.contains("id")) id = j["id"].is_string() ? j["id"].get<std::string>() : j["id"].dump();
      std::string text = j.contains("text") && j["text"].is_string() ? j["text"].get<std::string>() : "";
      std::optional<int> rating;
      if (j.contains("rating")) rating = detail::json_rating(j["rating"]);
      std::optional<std::string> ts;
      if (j.contains("timestamp") && j["timestamp"].is_string()) ts = j["timestamp"].get<std::string>();
      accept(lineno, detail::make_review(app_id, lineno, id, std::move(text), rating, ts));
    }
  }

  if (records > 0 && out.reviews.empty()) {
    std::string msg = "no valid review records in " + path.string();
    for (std::size_t i = 0; i < std::min<std::size_t>(out.rejected.size(), 5); ++i)
      msg += "\n  line " + std::to_string(out.rejected[i].line) + ": " + out.rejected[i].message;
    throw InputError(msg);
  }
  return out;
}

/// Reads a release manifest: one "version timestamp" pair per line, separated
/// by a comma or whitespace. '#' starts a comment line. Releases are ordered
/// by timestamp and numbered from 0.
inline std::vector<Release> load_releases(const std::filesystem::path& path, const std::string& app_id) {
  if (!std::filesystem::exists(path)) throw InputError("release manifest not found: " + path.string());
  std::istringstream in(csv::read_file(path));
  std::string line;
  std::size_t lineno = 0;
  std::vector<Release> out;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::string s(t);
    std::replace(s.begin(), s.end(), ',', ' ');
    auto parts = split_ws(s);
    if (parts.size() != 2)
      throw InputError(path.string() + ":" + std::to_string(lineno) + ": expected 'version timestamp'");
    if (out.empty() && to_lower(parts[0]) == "version" && !parse_iso8601(parts[1])) continue;  // header
    auto ts = parse_iso8601(parts[1]);
    if (!ts)
      throw InputError(path.string() + ":" + std::to_string(lineno) + ": unparsable timestamp '" +
                       parts[1] + "'");
    out.push_back(Release{app_id, parts[0], 0, *ts, std::nullopt});
  }
  if (out.empty()) throw InputError("release manifest is empty: " + path.string());
  std::stable_sort(out.begin(), out.end(),
                   [](const Release& a, const Release& b) { return a.released_at < b.released_at; });
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].ordinal = static_cast<int>(i);
    if (i > 0 && out[i].released_at == out[i - 1].released_at)
      throw InputError("releases " + out[i - 1].version + " and " + out[i].version +
                       " share a timestamp");
  }
  return out;
}

/// Reads a label file with columns app_id, element_id, release_ordinal, deleted.
inline std::vector<DeletionLabel> load_labels(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw InputError("label file not found: " + path.string());
  auto rows = csv::read(path);
  std::vector<DeletionLabel> out;
  if (rows.empty()) return out;
  csv::Header h(rows.front());
  auto app = h.require("app_id", path.string());
  auto elem = h.require("element_id", path.string());
  auto ord = h.require("release_ordinal", path.string());
  auto del = h.require("deleted", path.string());
  std::set<std::tuple<std::string, std::string, int>> seen;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    auto where = path.string() + ":" + std::to_string(row.line);
    auto o = parse_int(csv::field(row, ord));
    auto d = parse_int(csv::field(row, del));
    if (!o || *o < 0) throw InputError(where + ": bad release_ordinal");
    if (!d || (*d != 0 && *d != 1)) throw InputError(where + ": deleted must be 0 or 1");
    DeletionLabel l{std::string(trim(csv::field(row, app))), std::string(trim(csv::field(row, elem))),
                    static_cast<int>(*o), *d == 1};
    if (l.element_id.empty()) throw InputError(where + ": empty element_id");
    if (!seen.emplace(l.app_id, l.element_id, l.release_ordinal).second)
      throw InputError(where + ": duplicate label for (" + l.app_id + ", " + l.element_id + ", " +
                       std::to_string(l.release_ordinal) + ")");
    out.push_back(std::move(l));
  }
  return out;
}

/// Assigns each review the ordinal of the latest release with
/// released_at <= posted_at. Reviews older than the first release go to
/// window 0.
inline std::vector<Review> attribute_windows(std::vector<Review> reviews, std::span<const Release> releases) {
  if (releases.empty()) throw InputError("attribute_windows: no releases");
  std::vector<Timestamp> starts;
  starts.reserve(releases.size());
  for (const auto& r : releases) starts.push_back(r.released_at);
  for (auto& rev : reviews) {
    auto it = std::upper_bound(starts.begin(), starts.end(), rev.posted_at);
    auto idx = it == starts.begin() ? 0 : static_cast<std::size_t>(it - starts.begin()) - 1;
    rev.window_ordinal = releases[idx].ordinal;
  }
  return reviews;
}

/// Mean rating of the reviews attributed to one release window.
inline double release_avg_rating(std::span<const Review> reviews, int release_ordinal) {
  double sum = 0;
  std::size_t n = 0;
  for (const auto& r : reviews) {
    if (r.window_ordinal && *r.window_ordinal == release_ordinal) {
      sum += r.rating;
      ++n;
    }
  }
  if (n == 0) throw InputError("no reviews in window " + std::to_string(release_ordinal));
  return sum / static_cast<double>(n);
}

// ---------------------------------------------------------------------------
// Persistence

inline nlohmann::json review_to_json(const Review& r) {
  nlohmann::json j;
  j["id"] = r.review_id;
  j["app_id"] = r.app_id;
  j["text"] = r.text;
  j["rating"] = r.rating;
  j["timestamp"] = format_iso8601(r.posted_at);
  if (r.window_ordinal) j["window"] = *r.window_ordinal;
  return j;
}

inline Review review_from_json(const nlohmann::json& j) {
  Review r;
  r.review_id = j.at("id").get<std::string>();
  r.app_id = j.at("app_id").get<std::string>();
  r.text = j.at("text").get<std::string>();
  r.rating = j.at("rating").get<int>();
  auto ts = parse_iso8601(j.at("timestamp").get<std::string>());
  if (!ts) throw Error("corrupt stored review timestamp for " + r.review_id);
  r.posted_at = *ts;
  if (j.contains("window")) r.window_ordinal = j["window"].get<int>();
  return r;
}

/// In-memory collections plus stage artifacts, saved as a directory:
///
///   <root>/corpus/releases.csv    app_id,version,ordinal,released_at,avg_rating
///   <root>/corpus/reviews.jsonl   one review per line, keys sorted
///   <root>/corpus/labels.csv      app_id,element_id,release_ordinal,deleted
///   <root>/<stage>/<name>         opaque artifact bytes
class CorpusStore {
 public:
  std::vector<Release> releases;
  std::vector<Review> reviews;
  std::vector<DeletionLabel> labels;

  void put_artifact(const std::string& stage, const std::string& name, std::string bytes) {
    if (stage == "corpus") throw Error("stage name 'corpus' is reserved");
    artifacts_[stage][name] = std::move(bytes);
  }

  const std::string* artifact(const std::string& stage, const std::string& name) const {
    auto s = artifacts_.find(stage);
    if (s == artifacts_.end()) return nullptr;
    auto a = s->second.find(name);
    return a == s->second.end() ? nullptr : &a->second;
  }

  const std::map<std::string, std::map<std::string, std::string>>& artifacts() const { return artifacts_; }

  std::string releases_csv() const {
    std::string out = csv::format_row({"app_id", "version", "ordinal", "released_at", "avg_rating"});
    for (const auto& r : releases)
      out += csv::format_row({r.app_id, r.version, std::to_string(r.ordinal), format_iso8601(r.released_at),
                              r.avg_rating ? format_double(*r.avg_rating) : ""});
    return out;
  }

  std::string reviews_jsonl() const {
    std::string out;
    for (const auto& r : reviews) out += review_to_json(r).dump() + "\n";
    return out;
  }

  std::string labels_csv() const {
    std::string out = csv::format_row({"app_id", "element_id", "release_ordinal", "deleted"});
    for (const auto& l : labels)
      out += csv::format_row({l.app_id, l.element_id, std::to_string(l.release_ordinal), l.deleted ? "1" : "0"});
    return out;
  }

  void save(const std::filesystem::path& root) const {
    csv::write_file(root / "corpus" / "releases.csv", releases_csv());
    csv::write_file(root / "corpus" / "reviews.jsonl", reviews_jsonl());
    csv::write_file(root / "corpus" / "labels.csv", labels_csv());
    for (const auto& [stage, files] : artifacts_)
      for (const auto& [name, bytes] : files) csv::write_file(root / stage / name, bytes);
  }

  static CorpusStore load(const std::filesystem::path& root) {
    namespace fs = std::filesystem;
    CorpusStore s;
    auto corpus = root / "corpus";
    if (!fs::is_directory(corpus)) throw InputError("not a store directory: " + root.string());

    auto rel_rows = csv::read(corpus / "releases.csv");
    for (std::size_t i = 1; i < rel_rows.size(); ++i) {
      const auto& f = rel_rows[i].fields;
      if (f.size() < 5) throw Error("corrupt releases.csv");
      Release r;
      r.app_id = f[0];
      r.version = f[1];
      r.ordinal = static_cast<int>(parse_int(f[2]).value_or(0));
      r.released_at = parse_iso8601(f[3]).value_or(0);
      if (!f[4].empty()) r.avg_rating = parse_double(f[4]);
      s.releases.push_back(std::move(r));
    }
    std::istringstream in(csv::read_file(corpus / "reviews.jsonl"));
    std::string line;
    while (std::getline(in, line))
      if (!trim(line).empty()) s.reviews.push_back(review_from_json(nlohmann::json::parse(line)));
    if (fs::exists(corpus / "labels.csv")) s.labels = load_labels(corpus / "labels.csv");

    std::vector<fs::path> stage_dirs;
    for (const auto& e : fs::directory_iterator(root))
      if (e.is_directory() && e.path().filename() != "corpus") stage_dirs.push_back(e.path());
    std::sort(stage_dirs.begin(), stage_dirs.end());
    for (const auto& dir : stage_dirs) {
      std::vector<fs::path> files;
      for (const auto& e : fs::recursive_directory_iterator(dir))
        if (e.is_regular_file()) files.push_back(e.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files)
        s.artifacts_[dir.filename().string()][fs::relative(f, dir).generic_string()] = csv::read_file(f);
    }
    return s;
  }

 private:
  std::map<std::string, std::map<std::string, std::string>> artifacts_;
};

}  // namespace uiprune
