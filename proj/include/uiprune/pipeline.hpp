#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "uiprune/common.hpp"
#include "uiprune/corpus.hpp"
#include "uiprune/eval.hpp"
#include "uiprune/informative.hpp"
#include "uiprune/linker.hpp"
#include "uiprune/recommender.hpp"
#include "uiprune/signals.hpp"
#include "uiprune/textprep.hpp"
#include "uiprune/topics.hpp"
#include "uiprune/uiextract.hpp"

namespace uiprune {

inline constexpr const char* version = "0.1.0";

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Configuration

struct PipelineConfig {
  std::string app_id;
  // Paths as written in the config file; resolved against base_dir.
  std::string reviews, releases, layouts_root, labels, lexicon, stoplist, contractions, lemmas;
  std::string informative_model, informative_training;
  double informative_alpha = 1.0;
  bool informative_balance = true;
  double link_threshold = 0.65;
  double tau_topic = 0.25;
  std::optional<std::uint64_t> seed;
  HDPParams hdp;
  ForestParams forest;
  std::string forest_model;
  bool holdout_latest = true;
  int evidence_reviews = 3;
  std::string output = "out";
  std::filesystem::path base_dir = ".";

  std::filesystem::path resolve(const std::string& p) const {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base_dir / path;
  }

  static PipelineConfig from_json(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw InputError("config: top level must be an object");
    PipelineConfig c;
    c.base_dir = base_dir;
    static const std::set<std::string> known{"app_id", "reviews", "releases", "layouts_root", "labels", "lexicon",
                                             "stoplist", "contractions", "lemmas", "informative", "link_threshold",
                                             "tau_topic", "seed", "hdp", "forest", "evidence_reviews", "output"};
    for (const auto& [k, v] : j.items())
      if (!known.count(k)) throw InputError("config: unknown key '" + k + "'");
    try {
      auto str = [&](const json& o, const char* k, std::string& out) {
        if (o.contains(k)) out = o.at(k).get<std::string>();
      };
      str(j, "app_id", c.app_id);
      str(j, "reviews", c.reviews);
      str(j, "releases", c.releases);
      str(j, "layouts_root", c.layouts_root);
      str(j, "labels", c.labels);
      str(j, "lexicon", c.lexicon);
      str(j, "stoplist", c.stoplist);
      str(j, "contractions", c.contractions);
      str(j, "lemmas", c.lemmas);
      str(j, "output", c.output);
      if (j.contains("link_threshold")) c.link_threshold = j["link_threshold"].get<double>();
      if (j.contains("tau_topic")) c.tau_topic = j["tau_topic"].get<double>();
      if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw InputError("config: seed must be a nonnegative integer");
        c.seed = j["seed"].get<std::uint64_t>();
      }
      if (j.contains("evidence_reviews")) c.evidence_reviews = j["evidence_reviews"].get<int>();
      if (j.contains("informative")) {
        const auto& o = j["informative"];
        for (const auto& [k, v] : o.items())
          if (k != "model" && k != "training" && k != "alpha" && k != "balance")
            throw InputError("config: unknown key 'informative." + k + "'");
        str(o, "model", c.informative_model);
        str(o, "training", c.informative_training);
        if (o.contains("alpha")) c.informative_alpha = o["alpha"].get<double>();
        if (o.contains("balance")) c.informative_balance = o["balance"].get<bool>();
      }
      if (j.contains("hdp")) {
        const auto& o = j["hdp"];
        for (const auto& [k, v] : o.items())
          if (k != "gamma" && k != "alpha0" && k != "eta" && k != "iterations" && k != "burn_in")
            throw InputError("config: unknown key 'hdp." + k + "'");
        if (o.contains("gamma")) c.hdp.gamma = o["gamma"].get<double>();
        if (o.contains("alpha0")) c.hdp.alpha0 = o["alpha0"].get<double>();
        if (o.contains("eta")) c.hdp.eta = o["eta"].get<double>();
        if (o.contains("iterations")) c.hdp.iterations = o["iterations"].get<int>();
        if (o.contains("burn_in")) c.hdp.burn_in = o["burn_in"].get<int>();
      }
      if (j.contains("forest")) {
        const auto& o = j["forest"];
        for (const auto& [k, v] : o.items())
          if (k != "n_trees" && k != "max_depth" && k != "min_split" && k != "mtry" && k != "model" &&
              k != "holdout_latest")
            throw InputError("config: unknown key 'forest." + k + "'");
        if (o.contains("n_trees")) c.forest.n_trees = o["n_trees"].get<int>();
        if (o.contains("max_depth")) c.forest.max_depth = o["max_depth"].get<int>();
        if (o.contains("min_split")) c.forest.min_split = o["min_split"].get<int>();
        if (o.contains("mtry")) c.forest.mtry = o["mtry"].get<int>();
        str(o, "model", c.forest_model);
        if (o.contains("holdout_latest")) c.holdout_latest = o["holdout_latest"].get<bool>();
      }
    } catch (const json::exception& e) {
      throw InputError(std::string("config: ") + e.what());
    }
    return c;
  }

  static PipelineConfig load(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) throw InputError("config file not found: " + path.string());
    json j;
    try {
      j = json::parse(csv::read_file(path));
    } catch (const json::parse_error& e) {
      throw InputError("config " + path.string() + ": " + e.what());
    }
    auto dir = path.parent_path();
    return from_json(j, dir.empty() ? std::filesystem::path(".") : dir);
  }

  /// Canonical form; keys are sorted, so equal configs dump identically.
  json to_json() const {
    json j;
    j["app_id"] = app_id;
    j["reviews"] = reviews;
    j["releases"] = releases;
    j["layouts_root"] = layouts_root;
    j["labels"] = labels;
    j["lexicon"] = lexicon;
    j["stoplist"] = stoplist;
    j["contractions"] = contractions;
    j["lemmas"] = lemmas;
    j["informative"] = {{"model", informative_model},
                        {"training", informative_training},
                        {"alpha", informative_alpha},
                        {"balance", informative_balance}};
    j["link_threshold"] = link_threshold;
    j["tau_topic"] = tau_topic;
    j["seed"] = seed.value_or(0);
    j["hdp"] = {{"gamma", hdp.gamma},
                {"alpha0", hdp.alpha0},
                {"eta", hdp.eta},
                {"iterations", hdp.iterations},
                {"burn_in", hdp.burn_in}};
    j["forest"] = {{"n_trees", forest.n_trees}, {"max_depth", forest.max_depth}, {"min_split", forest.min_split},
                   {"mtry", forest.mtry},       {"model", forest_model},         {"holdout_latest", holdout_latest}};
    j["evidence_reviews"] = evidence_reviews;
    return j;
  }

  std::string hash() const { return hex64(fnv1a(to_json().dump())); }

  void validate() const {
    if (app_id.empty()) throw InputError("config: app_id is required");
    if (!seed) throw InputError("config: seed is required (pass it in the config or with --seed)");
    if (!(link_threshold > 0 && link_threshold <= 1)) throw InputError("config: link_threshold must lie in (0, 1]");
    if (!(tau_topic > 0 && tau_topic <= 1)) throw InputError("config: tau_topic must lie in (0, 1]");
    if (evidence_reviews < 0) throw InputError("config: evidence_reviews must be nonnegative");
    if (!(informative_alpha > 0)) throw InputError("config: informative.alpha must be positive");
    if (!informative_model.empty() && !informative_training.empty())
      throw InputError("config: give informative.model or informative.training, not both");
    hdp.validate();
    forest.validate();
    auto need = [&](const std::string& key, const std::string& p, bool required) {
      if (p.empty()) {
        if (required) throw InputError("config: " + key + " is required");
        return;
      }
      if (!std::filesystem::exists(resolve(p))) throw InputError(key + " path not found: " + resolve(p).string());
    };
    need("reviews", reviews, true);
    need("releases", releases, true);
    need("layouts_root", layouts_root, true);
    need("labels", labels, false);
    need("lexicon", lexicon, false);
    need("stoplist", stoplist, false);
    need("contractions", contractions, false);
    need("lemmas", lemmas, false);
    need("informative.model", informative_model, false);
    need("informative.training", informative_training, false);
    need("forest.model", forest_model, false);
  }
};

// ---------------------------------------------------------------------------
// Run

struct StageError : Error {
  StageError(const std::string& stage, const std::string& what, bool input)
      : Error(stage + ": " + what), stage(stage), input(input) {}
  std::string stage;
  bool input;
};

struct RunResult {
  json report;
  std::string markdown;
  std::vector<Recommendation> element_recs;
  std::vector<Recommendation> cluster_recs;
  std::vector<Cluster> clusters;
  std::vector<DeletionLabel> labels;
  std::vector<std::string> warnings;
};

namespace detail {

// Runs one stage, tagging any failure with the stage name.
template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const InputError& e) {
    throw StageError(name, e.what(), true);
  } catch (const std::exception& e) {
    throw StageError(name, e.what(), false);
  }
}

inline std::string json_lines(const std::vector<json>& rows) {
  std::string out;
  for (const auto& r : rows) out += r.dump() + "\n";
  return out;
}

inline std::string fmt(double v, int digits = 3) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace detail

class Pipeline {
 public:
  explicit Pipeline(PipelineConfig cfg) : cfg_(std::move(cfg)) { cfg_.validate(); }

  const PipelineConfig& config() const { return cfg_; }
  std::filesystem::path out_dir() const { return cfg_.resolve(cfg_.output); }

  RunResult run() {
    namespace fs = std::filesystem;
    const std::uint64_t seed = *cfg_.seed;
    const fs::path out = out_dir();
    RunResult res;
    Diagnostics diag;
    auto persist = [&](const std::string& stage, const std::string& name, const std::string& bytes) {
      csv::write_file(out / stage / name, bytes);
    };

    // Step 0: corpus
    CorpusStore store;
    detail::stage("corpus", [&] {
      store.releases = load_releases(cfg_.resolve(cfg_.releases), cfg_.app_id);
      auto load = load_reviews(cfg_.resolve(cfg_.reviews), cfg_.app_id);
      for (const auto& r : load.rejected)
        diag.warn("reviews line " + std::to_string(r.line) + " rejected: " + r.message);
      store.reviews = attribute_windows(std::move(load.reviews), store.releases);
      std::set<std::string> ids;
      for (const auto& r : store.reviews)
        if (!ids.insert(r.review_id).second) throw InputError("duplicate review id '" + r.review_id + "'");
      for (auto& rel : store.releases) {
        bool any = std::any_of(store.reviews.begin(), store.reviews.end(),
                               [&](const Review& r) { return r.window_ordinal == rel.ordinal; });
        if (any) rel.avg_rating = release_avg_rating(store.reviews, rel.ordinal);
      }
      if (!cfg_.labels.empty()) store.labels = load_labels(cfg_.resolve(cfg_.labels));
      store.save(out);
      return 0;
    });
    const int latest = store.releases.back().ordinal;

    // Step 1: textprep
    std::map<std::string, TokenizedText> texts;
    TextPrep prep = detail::stage("textprep", [&] {
      StopList stop = cfg_.stoplist.empty() ? StopList::builtin() : StopList::load(cfg_.resolve(cfg_.stoplist));
      ContractionTable ct =
          cfg_.contractions.empty() ? ContractionTable::builtin() : ContractionTable::load(cfg_.resolve(cfg_.contractions));
      Lemmatizer lm = cfg_.lemmas.empty() ? Lemmatizer::builtin() : Lemmatizer::load(cfg_.resolve(cfg_.lemmas));
      TextPrep p(std::move(stop), std::move(ct), std::move(lm));
      std::vector<json> rows;
      for (const auto& r : store.reviews) {
        texts[r.review_id] = p.preprocess(r.text, r.review_id);
        rows.push_back({{"id", r.review_id}, {"tokens", texts[r.review_id].tokens}});
      }
      persist("textprep", "tokens.jsonl", detail::json_lines(rows));
      return p;
    });

    // Step 2: informative
    std::set<std::string> informative;
    detail::stage("informative", [&] {
      NBModel model;
      std::string source;
      if (!cfg_.informative_model.empty()) {
        model = NBModel::load(cfg_.resolve(cfg_.informative_model));
        source = "model file";
      } else if (!cfg_.informative_training.empty()) {
        auto data = load_labeled_reviews(cfg_.resolve(cfg_.informative_training), prep);
        if (cfg_.informative_balance) data = balance_classes(std::move(data), derive_seed(seed, "informative"));
        model = train_nb(data, cfg_.informative_alpha);
        source = "trained";
      } else {
        model = seed_model(prep);
        source = "built-in seed set";
      }
      std::string csv_out = csv::format_row({"review_id", "label", "score"});
      for (const auto& r : store.reviews) {
        auto c = model.classify(texts[r.review_id].tokens);
        if (c.label == Informativeness::informative) informative.insert(r.review_id);
        csv_out += csv::format_row({r.review_id, to_string(c.label), format_double(c.score())});
      }
      persist("informative", "classified.csv", csv_out);
      persist("informative", "model.nb", model.serialize());
      informative_source_ = source;
      return 0;
    });

    // Step 3: uiextract
    std::vector<std::vector<UIElement>> elements(store.releases.size());
    detail::stage("uiextract", [&] {
      std::vector<UIElement> all;
      for (const auto& rel : store.releases) {
        auto dir = cfg_.resolve(cfg_.layouts_root) / rel.version;
        if (!fs::is_directory(dir)) {
          diag.warn("no layouts for release " + rel.version + " under " + dir.string());
          continue;
        }
        elements[rel.ordinal] = load_release_elements(dir, rel.ordinal, &diag);
        all.insert(all.end(), elements[rel.ordinal].begin(), elements[rel.ordinal].end());
      }
      if (all.empty())
        throw InputError("no UI elements found for any release under " + cfg_.resolve(cfg_.layouts_root).string());
      persist("uiextract", "elements.csv", elements_csv(all));
      if (store.labels.empty()) {
        store.labels = derive_labels(cfg_.app_id, elements);
        labels_source_ = "derived from layouts";
        persist("uiextract", "derived_labels.csv", store.labels_csv());
      } else {
        labels_source_ = "label file";
      }
      return 0;
    });

    // Step 4: linker
    std::vector<ReviewLink> links;
    detail::stage("linker", [&] {
      for (const auto& rel : store.releases) {
        std::vector<TokenizedText> window;
        for (const auto& r : store.reviews)
          if (r.window_ordinal == rel.ordinal && informative.count(r.review_id)) window.push_back(texts[r.review_id]);
        auto l = link(window, elements[rel.ordinal], prep, rel.ordinal, cfg_.link_threshold);
        links.insert(links.end(), l.begin(), l.end());
      }
      persist("linker", "links.csv", links_csv(links));
      return 0;
    });

    // Step 5: topics
    std::vector<Cluster> clusters;
    detail::stage("topics", [&] {
      std::map<std::pair<std::string, int>, std::vector<std::string>> linked;
      for (const auto& l : links) linked[{l.element_id, l.release_ordinal}].push_back(l.review_id);
      std::string states, theta_csv = csv::format_row({"element_id", "release_ordinal", "review_id", "topic_id", "theta"});
      std::string words_csv = csv::format_row({"element_id", "release_ordinal", "topic_id", "top_words"});
      for (const auto& [key, ids] : linked) {
        std::vector<TokenizedText> docs;
        for (const auto& id : ids) docs.push_back(texts[id]);
        HDPParams p = cfg_.hdp;
        p.seed = derive_seed(seed, key.first + "/" + std::to_string(key.second));
        auto model = HDPModel::fit(docs, p);
        auto c = form_clusters(model, links, key.first, key.second, cfg_.tau_topic);
        clusters.insert(clusters.end(), c.begin(), c.end());
        states += "# " + key.first + " " + std::to_string(key.second) + "\n" + model.dump();
        for (const auto& id : ids) {
          auto th = model.theta(id).probabilities;
          for (std::size_t t = 0; t < th.size(); ++t)
            theta_csv += csv::format_row({key.first, std::to_string(key.second), id, std::to_string(t), format_double(th[t])});
        }
        for (std::size_t t = 0; t < model.num_topics(); ++t)
          words_csv += csv::format_row({key.first, std::to_string(key.second), std::to_string(t), join(model.top_words(t, 8), " ")});
      }
      persist("topics", "clusters.csv", clusters_csv(clusters));
      persist("topics", "theta.csv", theta_csv);
      persist("topics", "topic_words.csv", words_csv);
      persist("topics", "models.txt", states);
      return 0;
    });

    // Step 6a: signals
    std::vector<ClusterFeatures> feats;
    detail::stage("signals", [&] {
      SentimentLexicon lex = cfg_.lexicon.empty() ? SentimentLexicon::builtin()
                                                  : SentimentLexicon::load(cfg_.resolve(cfg_.lexicon), prep.lemmatizer(), &diag);
      ReviewLookup lookup;
      for (const auto& r : store.reviews) lookup[r.review_id] = {r.rating, r.text, texts[r.review_id].tokens};
      for (const auto& c : clusters) {
        const auto& rel = store.releases.at(c.release_ordinal);
        feats.push_back(featurize(c, lookup, rel.avg_rating.value_or(0), lex));
      }
      persist("signals", "features.csv", features_csv(feats));
      return 0;
    });

    // Step 6b: recommender
    detail::stage("recommender", [&] {
      ForestModel forest;
      if (!cfg_.forest_model.empty()) {
        forest = ForestModel::load(cfg_.resolve(cfg_.forest_model));
      } else {
        std::map<std::pair<std::string, int>, bool> truth;
        for (const auto& l : store.labels) truth[{l.element_id, l.release_ordinal}] = l.deleted;
        std::vector<ClusterFeatures> X;
        std::vector<bool> y;
        for (std::size_t i = 0; i < clusters.size(); ++i) {
          const auto& c = clusters[i];
          if (cfg_.holdout_latest && c.release_ordinal == latest) continue;
          auto it = truth.find({c.element_id, c.release_ordinal});
          if (it == truth.end()) continue;
          X.push_back(feats[i]);
          y.push_back(it->second);
        }
        ForestParams fp = cfg_.forest;
        fp.seed = derive_seed(seed, "forest");
        forest = train_forest(X, y, fp);
        training_rows_ = X.size();
      }
      for (std::size_t i = 0; i < clusters.size(); ++i) res.cluster_recs.push_back(forest.predict(feats[i], clusters[i]));
      res.element_recs = aggregate_to_element(res.cluster_recs);
      persist("recommender", "forest.model", forest.serialize());
      persist("recommender", "cluster_recommendations.csv", recommendations_csv(res.cluster_recs));
      persist("recommender", "recommendations.csv", recommendations_csv(res.element_recs));
      return 0;
    });

    res.clusters = clusters;
    res.labels = store.labels;
    res.warnings = diag.warnings;
    res.report = build_report(store, links, clusters, feats, res);
    res.markdown = render_markdown(res.report);
    csv::write_file(out / "report.json", res.report.dump(2) + "\n");
    csv::write_file(out / "report.md", res.markdown);
    return res;
  }

 private:
  json build_report(const CorpusStore& store, const std::vector<ReviewLink>& links, const std::vector<Cluster>& clusters,
                    const std::vector<ClusterFeatures>& feats, const RunResult& res) const {
    std::map<std::string, const Review*> reviews;
    for (const auto& r : store.reviews) reviews[r.review_id] = &r;
    std::map<std::tuple<std::string, int, std::string>, double> sim;
    for (const auto& l : links) sim[{l.element_id, l.release_ordinal, l.review_id}] = l.similarity;

    json recs = json::array();
    for (const auto& er : res.element_recs) {
      json cl = json::array();
      std::set<std::string> evidence_pool;
      for (std::size_t i = 0; i < clusters.size(); ++i) {
        const auto& c = clusters[i];
        if (c.element_id != er.element_id || c.release_ordinal != er.release_ordinal) continue;
        const auto& cr = res.cluster_recs[i];
        json fj;
        auto vals = feats[i].values();
        for (std::size_t f = 0; f < ClusterFeatures::count; ++f) fj[ClusterFeatures::names[f]] = vals[f];
        cl.push_back({{"cluster_id", c.cluster_id},
                      {"topic_id", c.topic_id},
                      {"predicted", cr.predicted_delete ? "delete" : "keep"},
                      {"score", cr.score},
                      {"features", fj},
                      {"review_ids", c.review_ids}});
        if (cr.predicted_delete == er.predicted_delete)
          evidence_pool.insert(c.review_ids.begin(), c.review_ids.end());
      }
      std::vector<std::pair<double, std::string>> ranked;
      for (const auto& id : evidence_pool) ranked.emplace_back(-sim.at({er.element_id, er.release_ordinal, id}), id);
      std::sort(ranked.begin(), ranked.end());
      json ev = json::array();
      for (std::size_t k = 0; k < ranked.size() && static_cast<int>(k) < cfg_.evidence_reviews; ++k) {
        const auto* r = reviews.at(ranked[k].second);
        ev.push_back({{"review_id", r->review_id}, {"similarity", -ranked[k].first}, {"rating", r->rating}, {"text", r->text}});
      }
      recs.push_back({{"element_id", er.element_id},
                      {"release_ordinal", er.release_ordinal},
                      {"predicted", er.predicted_delete ? "delete" : "keep"},
                      {"score", er.score},
                      {"top_cluster", er.cluster_id},
                      {"clusters", cl},
                      {"evidence", ev}});
    }

    json releases = json::array();
    for (const auto& r : store.releases)
      releases.push_back({{"ordinal", r.ordinal},
                          {"version", r.version},
                          {"released_at", format_iso8601(r.released_at)},
                          {"avg_rating", r.avg_rating ? json(*r.avg_rating) : json(nullptr)}});

    std::size_t n_delete = std::count_if(res.element_recs.begin(), res.element_recs.end(),
                                         [](const Recommendation& r) { return r.predicted_delete; });
    json j;
    j["metadata"] = {{"tool", "uiprune"},
                     {"version", version},
                     {"app_id", cfg_.app_id},
                     {"config_hash", cfg_.hash()},
                     {"seed", *cfg_.seed},
                     {"informative_model", informative_source_},
                     {"labels", labels_source_},
                     {"forest_training_rows", training_rows_}};
    j["summary"] = {{"reviews", store.reviews.size()},
                    {"links", links.size()},
                    {"clusters", clusters.size()},
                    {"elements_recommended", res.element_recs.size()},
                    {"delete_recommendations", n_delete}};
    j["releases"] = releases;
    j["recommendations"] = recs;
    j["warnings"] = res.warnings;
    return j;
  }

  static std::string render_markdown(const json& r) {
    std::string md = "# Deletion recommendations for " + r["metadata"]["app_id"].get<std::string>() + "\n\n";
    md += "Config hash `" + r["metadata"]["config_hash"].get<std::string>() + "`, seed " +
          std::to_string(r["metadata"]["seed"].get<std::uint64_t>()) + ".\n\n";
    const auto& s = r["summary"];
    md += "- reviews: " + std::to_string(s["reviews"].get<std::size_t>()) + "\n";
    md += "- review/element links: " + std::to_string(s["links"].get<std::size_t>()) + "\n";
    md += "- clusters: " + std::to_string(s["clusters"].get<std::size_t>()) + "\n";
    md += "- delete recommendations: " + std::to_string(s["delete_recommendations"].get<std::size_t>()) + " of " +
          std::to_string(s["elements_recommended"].get<std::size_t>()) + " elements\n\n";
    md += "| element | release | predicted | score | clusters |\n|---|---|---|---|---|\n";
    for (const auto& rec : r["recommendations"])
      md += "| " + rec["element_id"].get<std::string>() + " | " + std::to_string(rec["release_ordinal"].get<int>()) +
            " | " + rec["predicted"].get<std::string>() + " | " + detail::fmt(rec["score"].get<double>(), 2) + " | " +
            std::to_string(rec["clusters"].size()) + " |\n";
    for (const auto& rec : r["recommendations"]) {
      if (rec["predicted"] != "delete") continue;
      md += "\n## " + rec["element_id"].get<std::string>() + " (release " +
            std::to_string(rec["release_ordinal"].get<int>()) + ")\n\n";
      for (const auto& c : rec["clusters"]) {
        const auto& f = c["features"];
        md += "- cluster `" + c["cluster_id"].get<std::string>() + "`: " + c["predicted"].get<std::string>() + " (" +
              detail::fmt(c["score"].get<double>(), 2) + "), " + detail::fmt(f["n_reviews"].get<double>(), 0) +
              " reviews, rating " + detail::fmt(f["avg_rating"].get<double>(), 2) + " (delta " +
              detail::fmt(f["delta_rating"].get<double>(), 2) + "), polarity " +
              detail::fmt(f["avg_polarity"].get<double>(), 2) + ", uninstall mentions " +
              detail::fmt(f["uninstall_count"].get<double>(), 0) + "\n";
      }
      if (!rec["evidence"].empty()) md += "\nEvidence:\n\n";
      for (const auto& e : rec["evidence"])
        md += "> (" + std::to_string(e["rating"].get<int>()) + " stars) " + e["text"].get<std::string>() + "\n\n";
    }
    if (!r["warnings"].empty()) {
      md += "\n## Warnings\n\n";
      for (const auto& w : r["warnings"]) md += "- " + w.get<std::string>() + "\n";
    }
    return md;
  }

  PipelineConfig cfg_;
  std::string informative_source_;
  std::string labels_source_;
  std::size_t training_rows_ = 0;
};

// ---------------------------------------------------------------------------
// Evaluation of a finished run

inline std::vector<Recommendation> load_recommendations(const std::filesystem::path& path) {
  auto rows = csv::read(path);
  if (rows.empty()) throw InputError(path.string() + ": empty recommendation file");
  csv::Header h(rows.front());
  auto e = h.require("element_id", path.string()), o = h.require("release_ordinal", path.string());
  auto c = h.require("cluster_id", path.string()), p = h.require("predicted", path.string());
  auto s = h.require("score", path.string());
  std::vector<Recommendation> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    auto ord = parse_int(csv::field(r, o));
    auto sc = parse_double(csv::field(r, s));
    if (!ord || !sc) throw InputError(path.string() + ":" + std::to_string(r.line) + ": bad row");
    out.push_back({csv::field(r, e), static_cast<int>(*ord), csv::field(r, c), csv::field(r, p) == "delete", *sc});
  }
  return out;
}

}  // namespace uiprune
