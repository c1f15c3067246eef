#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "uiprune/eval.hpp"
#include "uiprune/pipeline.hpp"

namespace uiprune {

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateOptions {
  bool cv = false;
  int folds = 10;
  int repeats = 10;
};

namespace detail {

inline json metrics_json(const ConfusionMatrix& m) {
  auto p = prf1(m);
  return {{"tp", m.tp}, {"fp", m.fp}, {"fn", m.fn}, {"tn", m.tn},
          {"precision", p.precision}, {"recall", p.recall}, {"f1", p.f1}};
}

inline std::vector<ClusterFeatures> load_features(const std::filesystem::path& path) {
  auto rows = csv::read(path);
  if (rows.empty()) throw InputError(path.string() + ": empty feature file");
  std::vector<ClusterFeatures> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i].fields;
    if (f.size() != 7) throw InputError(path.string() + ":" + std::to_string(rows[i].line) + ": expected 7 columns");
    auto n = parse_int(f[1]), u = parse_int(f[6]);
    auto a = parse_double(f[2]), d = parse_double(f[3]), p = parse_double(f[4]), o = parse_double(f[5]);
    if (!n || !u || !a || !d || !p || !o) throw InputError(path.string() + ":" + std::to_string(rows[i].line) + ": bad value");
    out.push_back({f[0], static_cast<int>(*n), *a, *d, *p, *o, static_cast<int>(*u)});
  }
  return out;
}

// cluster_id -> (element_id, release_ordinal)
inline std::map<std::string, std::pair<std::string, int>> load_cluster_keys(const std::filesystem::path& path) {
  auto rows = csv::read(path);
  std::map<std::string, std::pair<std::string, int>> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    auto o = parse_int(csv::field(r, 2));
    if (!o) throw InputError(path.string() + ":" + std::to_string(r.line) + ": bad release ordinal");
    out[csv::field(r, 0)] = {csv::field(r, 1), static_cast<int>(*o)};
  }
  return out;
}

inline std::filesystem::path require_artifact(const std::filesystem::path& p) {
  if (!std::filesystem::exists(p)) throw InputError("missing run artifact " + p.string() + " (run the pipeline first)");
  return p;
}

}  // namespace detail

/// Labels for evaluation: the configured file if any, else the ones the run
/// derived from layouts.
inline std::vector<DeletionLabel> evaluation_labels(const PipelineConfig& cfg) {
  namespace fs = std::filesystem;
  std::vector<DeletionLabel> labels;
  if (!cfg.labels.empty()) {
    labels = load_labels(cfg.resolve(cfg.labels));
  } else {
    auto derived = cfg.resolve(cfg.output) / "uiextract" / "derived_labels.csv";
    if (!fs::exists(derived)) throw InputError("no labels: set 'labels' in the config or run the pipeline first");
    labels = load_labels(derived);
  }
  if (labels.empty()) throw InputError("no labels: the label file is empty");
  return labels;
}

inline json evaluate_run(const PipelineConfig& cfg, const EvaluateOptions& opt = {}) {
  const auto out = cfg.resolve(cfg.output);
  auto labels = evaluation_labels(cfg);
  auto recs = load_recommendations(detail::require_artifact(out / "recommender" / "recommendations.csv"));

  std::set<int> labeled_releases;
  for (const auto& l : labels) labeled_releases.insert(l.release_ordinal);
  std::vector<Recommendation> scored;
  std::size_t skipped = 0;
  for (const auto& r : recs) {
    if (labeled_releases.count(r.release_ordinal))
      scored.push_back(r);
    else
      ++skipped;
  }

  json j;
  j["metadata"] = {{"tool", "uiprune"}, {"version", version}, {"app_id", cfg.app_id}, {"config_hash", cfg.hash()}};
  j["overall"] = detail::metrics_json(confusion(scored, labels));
  j["recommendations_outside_labeled_releases"] = skipped;

  json per_release = json::object();
  for (int rel : labeled_releases) {
    std::vector<DeletionLabel> ls;
    std::vector<Recommendation> rs;
    for (const auto& l : labels)
      if (l.release_ordinal == rel) ls.push_back(l);
    for (const auto& r : scored)
      if (r.release_ordinal == rel) rs.push_back(r);
    per_release[std::to_string(rel)] = detail::metrics_json(confusion(rs, ls));
  }
  j["per_release"] = per_release;

  json per_app = json::object();
  std::set<std::string> apps;
  for (const auto& l : labels) apps.insert(l.app_id);
  for (const auto& app : apps) {
    std::vector<DeletionLabel> ls;
    std::set<std::pair<std::string, int>> keys;
    for (const auto& l : labels)
      if (l.app_id == app) {
        ls.push_back(l);
        keys.insert({l.element_id, l.release_ordinal});
      }
    std::vector<Recommendation> rs;
    for (const auto& r : scored)
      if (keys.count({r.element_id, r.release_ordinal})) rs.push_back(r);
    per_app[app] = detail::metrics_json(confusion(rs, ls));
  }
  j["per_app"] = per_app;

  if (opt.cv) {
    auto feats = detail::load_features(detail::require_artifact(out / "signals" / "features.csv"));
    auto keys = detail::load_cluster_keys(detail::require_artifact(out / "topics" / "clusters.csv"));
    std::map<std::pair<std::string, int>, bool> truth;
    for (const auto& l : labels) truth[{l.element_id, l.release_ordinal}] = l.deleted;
    std::vector<ClusterFeatures> X;
    std::vector<bool> y;
    for (const auto& f : feats) {
      auto k = keys.find(f.cluster_id);
      if (k == keys.end()) continue;
      auto t = truth.find(k->second);
      if (t == truth.end()) continue;
      X.push_back(f);
      y.push_back(t->second);
    }
    ForestParams fp = cfg.forest;
    fp.seed = derive_seed(*cfg.seed, "forest");
    auto res = kfold_cv(y, opt.folds, opt.repeats, derive_seed(*cfg.seed, "cv"),
                        [&](const std::vector<std::size_t>& train, const std::vector<std::size_t>& test) {
                          std::vector<ClusterFeatures> tx;
                          std::vector<bool> ty;
                          for (auto i : train) {
                            tx.push_back(X[i]);
                            ty.push_back(y[i]);
                          }
                          auto model = train_forest(tx, ty, fp);
                          std::vector<bool> pred;
                          for (auto i : test) pred.push_back(model.score(X[i]) >= 0.5);
                          return pred;
                        });
    json runs = json::array();
    for (const auto& r : res.runs) runs.push_back(detail::metrics_json(r.matrix));
    j["cross_validation"] = {{"unit", "cluster"},
                             {"items", X.size()},
                             {"folds", opt.folds},
                             {"repeats", opt.repeats},
                             {"mean_precision", res.mean.precision},
                             {"mean_recall", res.mean.recall},
                             {"mean_f1", res.mean.f1},
                             {"runs", runs},
                             {"warnings", res.warnings}};
  }
  return j;
}

inline std::string evaluation_markdown(const json& j) {
  auto row = [](const std::string& name, const json& m) {
    return "| " + name + " | " + std::to_string(m["tp"].get<long>()) + " | " + std::to_string(m["fp"].get<long>()) +
           " | " + std::to_string(m["fn"].get<long>()) + " | " + std::to_string(m["tn"].get<long>()) + " | " +
           detail::fmt(m["precision"].get<double>(), 2) + " | " + detail::fmt(m["recall"].get<double>(), 2) + " | " +
           detail::fmt(m["f1"].get<double>(), 2) + " |\n";
  };
  std::string md = "# Evaluation for " + j["metadata"]["app_id"].get<std::string>() + "\n\n";
  md += "| scope | TP | FP | FN | TN | P | R | F1 |\n|---|---|---|---|---|---|---|---|\n";
  md += row("overall", j["overall"]);
  for (const auto& [rel, m] : j["per_release"].items()) md += row("release " + rel, m);
  for (const auto& [app, m] : j["per_app"].items()) md += row(app, m);
  if (j.contains("cross_validation")) {
    const auto& cv = j["cross_validation"];
    md += "\nCross-validation over " + std::to_string(cv["items"].get<std::size_t>()) + " labeled clusters (" +
          std::to_string(cv["repeats"].get<int>()) + " x " + std::to_string(cv["folds"].get<int>()) +
          "-fold): mean P " + detail::fmt(cv["mean_precision"].get<double>(), 3) + ", R " +
          detail::fmt(cv["mean_recall"].get<double>(), 3) + ", F1 " + detail::fmt(cv["mean_f1"].get<double>(), 3) + "\n";
    for (const auto& w : cv["warnings"]) md += "\n- " + w.get<std::string>() + "\n";
  }
  return md;
}

// ---------------------------------------------------------------------------
// intrusion

struct ThetaTable {
  // (element, release) -> review_id -> theta
  std::map<std::pair<std::string, int>, std::map<std::string, std::vector<double>>> groups;
  std::map<std::pair<std::string, int>, std::vector<std::string>> review_order;
};

inline ThetaTable load_theta(const std::filesystem::path& path) {
  auto rows = csv::read(path);
  ThetaTable t;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    auto where = path.string() + ":" + std::to_string(r.line);
    auto rel = parse_int(csv::field(r, 1));
    auto topic = parse_int(csv::field(r, 3));
    auto th = parse_double(csv::field(r, 4));
    if (!rel || !topic || !th || *topic < 0) throw InputError(where + ": bad theta row");
    auto key = std::make_pair(csv::field(r, 0), static_cast<int>(*rel));
    auto& v = t.groups[key][csv::field(r, 2)];
    if (v.empty()) t.review_order[key].push_back(csv::field(r, 2));
    if (static_cast<std::size_t>(*topic) != v.size()) throw InputError(where + ": topics out of order");
    v.push_back(*th);
  }
  return t;
}

inline std::string task_id(const std::string& element, int release, const std::string& review) {
  return element + "/" + std::to_string(release) + "/" + review;
}

struct IntrusionSet {
  std::vector<IntrusionTask> tasks;
  std::vector<std::pair<std::string, int>> task_group;  // parallel to tasks
  std::size_t skipped_models = 0;
};

inline IntrusionSet build_intrusion_tasks(const ThetaTable& theta, std::uint64_t seed) {
  IntrusionSet s;
  for (const auto& [key, reviews] : theta.groups) {
    const auto& order = theta.review_order.at(key);
    if (reviews.at(order.front()).size() < 3) {
      ++s.skipped_models;
      continue;
    }
    for (const auto& id : order) {
      s.tasks.push_back(make_intrusion_task(task_id(key.first, key.second, id), id, reviews.at(id), seed));
      s.task_group.push_back(key);
    }
  }
  return s;
}

inline std::string tasks_csv(const IntrusionSet& s) {
  std::string out = csv::format_row({"task_id", "review_id", "element_id", "release_ordinal", "shown_topics", "intruder_topic"});
  for (std::size_t i = 0; i < s.tasks.size(); ++i) {
    const auto& t = s.tasks[i];
    std::vector<std::string> shown;
    for (int x : t.shown_topics) shown.push_back(std::to_string(x));
    out += csv::format_row({t.task_id, t.review_id, s.task_group[i].first, std::to_string(s.task_group[i].second),
                            join(shown, ";"), std::to_string(t.intruder_id)});
  }
  return out;
}

/// Reads judgments (task_id, judge, selected_topic) into the matching tasks.
inline void attach_judgments(IntrusionSet& s, const std::filesystem::path& path) {
  auto rows = csv::read(path);
  if (rows.empty()) throw InputError(path.string() + ": empty judgments file");
  csv::Header h(rows.front());
  auto c_task = h.require("task_id", path.string());
  auto c_judge = h.require("judge", path.string());
  auto c_sel = h.require("selected_topic", path.string());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < s.tasks.size(); ++i) index[s.tasks[i].task_id] = i;
  std::set<std::string> unknown;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    auto it = index.find(csv::field(r, c_task));
    if (it == index.end()) {
      unknown.insert(csv::field(r, c_task));
      continue;
    }
    auto sel = parse_int(csv::field(r, c_sel));
    if (!sel) throw InputError(path.string() + ":" + std::to_string(r.line) + ": selected_topic must be an integer");
    s.tasks[it->second].judge_selections.push_back({csv::field(r, c_judge), static_cast<int>(*sel)});
  }
  if (!unknown.empty())
    throw InputError("judgments reference unknown tasks: " + join(std::vector<std::string>(unknown.begin(), unknown.end()), ", "));
}

inline json tlo_report(const IntrusionSet& s, const ThetaTable& theta, const PipelineConfig& cfg, std::string& csv_out) {
  csv_out = csv::format_row({"task_id", "review_id", "judges", "tlo"});
  std::vector<double> values;
  for (std::size_t i = 0; i < s.tasks.size(); ++i) {
    const auto& t = s.tasks[i];
    if (t.judge_selections.empty()) continue;
    double v = tlo(t, theta.groups.at(s.task_group[i]).at(t.review_id));
    values.push_back(v);
    csv_out += csv::format_row({t.task_id, t.review_id, std::to_string(t.judges()), format_double(v)});
  }
  if (values.empty()) throw InputError("no task received any judgment");
  double sum = 0;
  for (double v : values) sum += v;
  json j;
  j["metadata"] = {{"tool", "uiprune"}, {"version", version}, {"app_id", cfg.app_id}, {"config_hash", cfg.hash()}};
  j["per_app"] = {{cfg.app_id,
                   {{"judged_tasks", values.size()}, {"mean_tlo", sum / values.size()}, {"median_tlo", percentile(values, 50)}}}};
  j["judged_tasks"] = values.size();
  j["mean_tlo"] = sum / values.size();
  j["median_tlo"] = percentile(values, 50);
  return j;
}

}  // namespace uiprune
