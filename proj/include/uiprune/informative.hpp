#pragma once

#include <array>
#include <cmath>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "uiprune/common.hpp"
#include "uiprune/csv.hpp"
#include "uiprune/resources/informative_seed.hpp"
#include "uiprune/textprep.hpp"

namespace uiprune {

enum class Informativeness { informative = 0, non_informative = 1 };

inline const char* to_string(Informativeness c) {
  return c == Informativeness::informative ? "informative" : "non-informative";
}

inline std::optional<Informativeness> parse_informativeness(std::string_view s) {
  auto l = to_lower(trim(s));
  if (l == "informative") return Informativeness::informative;
  if (l == "non-informative" || l == "non_informative" || l == "noninformative")
    return Informativeness::non_informative;
  return std::nullopt;
}

struct LabeledReview {
  std::string review_id;
  std::vector<std::string> tokens;
  Informativeness label = Informativeness::non_informative;
};

struct Classification {
  Informativeness label = Informativeness::non_informative;
  std::array<double, 2> posterior{};  // indexed by Informativeness

  double score() const { return posterior[static_cast<int>(label)]; }
};

/// Multinomial Naive Bayes over token counts.
struct NBModel {
  double alpha = 1.0;
  std::array<double, 2> log_prior{};
  std::map<std::string, std::array<double, 2>> log_likelihood;

  Classification classify(const std::vector<std::string>& tokens) const {
    std::array<double, 2> lp = log_prior;
    for (const auto& t : tokens) {
      auto it = log_likelihood.find(t);
      if (it == log_likelihood.end()) continue;  // out of vocabulary
      lp[0] += it->second[0];
      lp[1] += it->second[1];
    }
    Classification c;
    double m = std::max(lp[0], lp[1]);
    double z = std::exp(lp[0] - m) + std::exp(lp[1] - m);
    c.posterior[0] = std::exp(lp[0] - m) / z;
    c.posterior[1] = std::exp(lp[1] - m) / z;
    // ties go to non-informative
    c.label = lp[0] > lp[1] ? Informativeness::informative : Informativeness::non_informative;
    return c;
  }

  std::string serialize() const {
    std::string out = "uiprune-nb 1\n";
    out += "alpha " + format_double(alpha) + "\n";
    out += "prior " + format_double(log_prior[0]) + " " + format_double(log_prior[1]) + "\n";
    out += "vocab " + std::to_string(log_likelihood.size()) + "\n";
    for (const auto& [tok, ll] : log_likelihood)
      out += tok + " " + format_double(ll[0]) + " " + format_double(ll[1]) + "\n";
    return out;
  }

  static NBModel deserialize(std::string_view text, const std::string& origin = "model") {
    std::istringstream in{std::string(text)};
    auto fail = [&](const std::string& why) { return InputError(origin + ": " + why); };
    std::string magic;
    int version = 0;
    if (!(in >> magic >> version) || magic != "uiprune-nb") throw fail("not a naive Bayes model file");
    if (version != 1) throw fail("unsupported model version " + std::to_string(version));
    NBModel m;
    std::string key, a, b;
    std::size_t n = 0;
    if (!(in >> key >> a) || key != "alpha" || !parse_double(a)) throw fail("bad alpha line");
    m.alpha = *parse_double(a);
    if (!(in >> key >> a >> b) || key != "prior" || !parse_double(a) || !parse_double(b))
      throw fail("bad prior line");
    m.log_prior = {*parse_double(a), *parse_double(b)};
    if (!(in >> key >> n) || key != "vocab") throw fail("bad vocab line");
    for (std::size_t i = 0; i < n; ++i) {
      if (!(in >> key >> a >> b) || !parse_double(a) || !parse_double(b))
        throw fail("truncated vocabulary at entry " + std::to_string(i));
      m.log_likelihood[key] = {*parse_double(a), *parse_double(b)};
    }
    return m;
  }

  void save(const std::filesystem::path& path) const { csv::write_file(path, serialize()); }
  static NBModel load(const std::filesystem::path& path) {
    return deserialize(csv::read_file(path), path.string());
  }
};

inline NBModel train_nb(const std::vector<LabeledReview>& data, double alpha = 1.0) {
  if (!(alpha > 0)) throw InputError("smoothing alpha must be positive");
  std::array<std::size_t, 2> docs{};
  std::array<double, 2> total{};
  std::map<std::string, std::array<double, 2>> counts;
  for (const auto& d : data) {
    int c = static_cast<int>(d.label);
    ++docs[c];
    for (const auto& t : d.tokens) {
      counts[t][c] += 1;
      total[c] += 1;
    }
  }
  if (docs[0] == 0 || docs[1] == 0) throw InputError("degenerate training data: both classes are required");
  NBModel m;
  m.alpha = alpha;
  double n = static_cast<double>(docs[0] + docs[1]);
  m.log_prior = {std::log(docs[0] / n), std::log(docs[1] / n)};
  double v = static_cast<double>(counts.size());
  for (const auto& [tok, c] : counts)
    for (int k = 0; k < 2; ++k)
      m.log_likelihood[tok][k] = std::log((c[k] + alpha) / (total[k] + alpha * v));
  return m;
}

inline Classification classify(const NBModel& model, const std::vector<std::string>& tokens) {
  return model.classify(tokens);
}

/// Training CSV: review_id,label,text.
inline std::vector<LabeledReview> parse_labeled_reviews(std::string_view csv_text, const TextPrep& prep,
                                                        const std::string& origin = "training") {
  auto rows = csv::parse(csv_text);
  if (rows.empty()) throw InputError(origin + ": empty training file");
  csv::Header h(rows.front());
  auto id_col = h.require("review_id", origin);
  auto label_col = h.require("label", origin);
  auto text_col = h.require("text", origin);
  std::vector<LabeledReview> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    auto label = parse_informativeness(csv::field(r, label_col));
    if (!label)
      throw InputError(origin + ":" + std::to_string(r.line) + ": unknown label '" + csv::field(r, label_col) +
                       "'");
    out.push_back({csv::field(r, id_col), prep.tokens(csv::field(r, text_col)), *label});
  }
  return out;
}

inline std::vector<LabeledReview> load_labeled_reviews(const std::filesystem::path& path, const TextPrep& prep) {
  return parse_labeled_reviews(csv::read_file(path), prep, path.string());
}

/// Downsamples the larger class to the size of the smaller one.
inline std::vector<LabeledReview> balance_classes(std::vector<LabeledReview> data, std::uint64_t seed) {
  std::array<std::vector<LabeledReview>, 2> by;
  for (auto& d : data) by[static_cast<int>(d.label)].push_back(std::move(d));
  std::size_t n = std::min(by[0].size(), by[1].size());
  Rng rng(seed);
  std::vector<LabeledReview> out;
  for (auto& cls : by) {
    rng.shuffle(cls);
    cls.resize(n);
    for (auto& d : cls) out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(),
            [](const LabeledReview& a, const LabeledReview& b) { return a.review_id < b.review_id; });
  return out;
}

/// Model trained on the small hand-labeled seed set shipped with the library.
inline NBModel seed_model(const TextPrep& prep) {
  return train_nb(parse_labeled_reviews(resources::informative_seed, prep, "informative_seed"), 1.0);
}

}  // namespace uiprune
