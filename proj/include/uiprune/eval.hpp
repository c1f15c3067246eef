#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <cmath>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "uiprune/common.hpp"
#include "uiprune/corpus.hpp"
#include "uiprune/csv.hpp"
#include "uiprune/recommender.hpp"
#include "uiprune/resources/table2_rows.hpp"
#include "uiprune/topics.hpp"

namespace uiprune {

// ---------------------------------------------------------------------------
// Confusion matrix and P/R/F1

struct ConfusionMatrix {
  long tp = 0, fp = 0, fn = 0, tn = 0;

  long total() const { return tp + fp + fn + tn; }
  void add(bool predicted, bool actual) {
    if (predicted && actual) ++tp;
    else if (predicted) ++fp;
    else if (actual) ++fn;
    else ++tn;
  }
  ConfusionMatrix& operator+=(const ConfusionMatrix& o) {
    tp += o.tp, fp += o.fp, fn += o.fn, tn += o.tn;
    return *this;
  }
  bool operator==(const ConfusionMatrix&) const = default;
};

struct PRF1 {
  double precision = 0, recall = 0, f1 = 0;
};

/// Any 0/0 is taken as 0.
inline PRF1 prf1(const ConfusionMatrix& m) {
  PRF1 r;
  r.precision = m.tp + m.fp ? static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fp) : 0.0;
  r.recall = m.tp + m.fn ? static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fn) : 0.0;
  r.f1 = r.precision + r.recall > 0 ? 2 * r.precision * r.recall / (r.precision + r.recall) : 0.0;
  return r;
}

/// Scores element-level recommendations against truth labels. A label with
/// no recommendation counts as predicted keep; a recommendation with no label
/// is an error.
inline ConfusionMatrix confusion(const std::vector<Recommendation>& recs, const std::vector<DeletionLabel>& labels) {
  std::map<std::pair<std::string, int>, bool> truth;
  for (const auto& l : labels)
    if (!truth.emplace(std::make_pair(l.element_id, l.release_ordinal), l.deleted).second)
      throw InputError("duplicate label for " + l.element_id + "@" + std::to_string(l.release_ordinal));
  std::map<std::pair<std::string, int>, bool> pred;
  std::vector<std::string> orphans;
  for (const auto& r : recs) {
    auto key = std::make_pair(r.element_id, r.release_ordinal);
    if (!truth.count(key)) {
      orphans.push_back(r.element_id + "@" + std::to_string(r.release_ordinal));
      continue;
    }
    if (!pred.emplace(key, r.predicted_delete).second)
      throw InputError("more than one recommendation for " + r.element_id + "@" + std::to_string(r.release_ordinal));
  }
  if (!orphans.empty()) throw InputError("recommendations without labels: " + join(orphans, ", "));
  ConfusionMatrix m;
  for (const auto& [key, actual] : truth) {
    auto it = pred.find(key);
    m.add(it != pred.end() && it->second, actual);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Stratified repeated k-fold cross-validation

struct CVRun {
  ConfusionMatrix matrix;
  PRF1 metrics;
};

struct CVResult {
  std::vector<CVRun> runs;
  PRF1 mean;
  std::vector<std::string> warnings;
};

/// Fold index per item. Each class is shuffled and dealt round-robin, the
/// deal continuing from class to class, so every fold holds each class's
/// share to within one item.
inline std::vector<int> stratified_folds(const std::vector<bool>& labels, int k, std::uint64_t seed,
                                         std::vector<std::string>* warnings = nullptr) {
  std::array<std::vector<std::size_t>, 2> by;
  for (std::size_t i = 0; i < labels.size(); ++i) by[labels[i] ? 1 : 0].push_back(i);
  Rng rng(seed);
  std::vector<int> fold(labels.size(), -1);
  std::size_t next = 0;
  for (int c = 0; c < 2; ++c) {
    if (warnings && !by[c].empty() && by[c].size() < static_cast<std::size_t>(k))
      warnings->push_back("class " + std::to_string(c) + " has " + std::to_string(by[c].size()) +
                          " items, fewer than " + std::to_string(k) + " folds; some folds lack it");
    rng.shuffle(by[c]);
    for (auto i : by[c]) fold[i] = static_cast<int>(next++ % static_cast<std::size_t>(k));
  }
  return fold;
}

/// `fit_predict(train, test)` trains on the train indices and returns one
/// prediction per test index. Folds are stratified on `labels`; predictions
/// are scored against `truth`, which is usually the same vector but may
/// differ when training labels are noisy.
template <typename FitPredict>
CVResult kfold_cv(const std::vector<bool>& labels, const std::vector<bool>& truth, int k, int repeats,
                  std::uint64_t seed, FitPredict&& fit_predict) {
  const std::size_t n = labels.size();
  if (truth.size() != n) throw InputError("label and truth vectors differ in length");
  if (k < 2) throw InputError("k must be at least 2");
  if (static_cast<std::size_t>(k) > n) throw InputError("k exceeds the number of items");
  if (repeats < 1) throw InputError("repeats must be at least 1");
  if (std::all_of(labels.begin(), labels.end(), [](bool b) { return b; }) ||
      std::none_of(labels.begin(), labels.end(), [](bool b) { return b; }))
    throw InputError("cross-validation needs both classes");

  CVResult res;
  for (int run = 0; run < repeats; ++run) {
    auto fold = stratified_folds(labels, k, derive_seed(seed, static_cast<std::uint64_t>(run)),
                                 run == 0 ? &res.warnings : nullptr);
    CVRun r;
    for (int f = 0; f < k; ++f) {
      std::vector<std::size_t> train, test;
      for (std::size_t i = 0; i < n; ++i) (fold[i] == f ? test : train).push_back(i);
      if (test.empty()) continue;
      std::vector<bool> pred = fit_predict(train, test);
      if (pred.size() != test.size()) throw Error("fit_predict returned the wrong number of predictions");
      for (std::size_t i = 0; i < test.size(); ++i) r.matrix.add(pred[i], truth[test[i]]);
    }
    r.metrics = prf1(r.matrix);
    res.runs.push_back(r);
  }
  for (const auto& r : res.runs) {
    res.mean.precision += r.metrics.precision / repeats;
    res.mean.recall += r.metrics.recall / repeats;
    res.mean.f1 += r.metrics.f1 / repeats;
  }
  return res;
}

template <typename FitPredict>
CVResult kfold_cv(const std::vector<bool>& labels, int k, int repeats, std::uint64_t seed, FitPredict&& fit_predict) {
  return kfold_cv(labels, labels, k, repeats, seed, std::forward<FitPredict>(fit_predict));
}

// ---------------------------------------------------------------------------
// Cohen's kappa

template <typename T>
double cohen_kappa(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw InputError("kappa: label vectors differ in length");
  if (a.empty()) throw InputError("kappa: no labels");
  const double n = static_cast<double>(a.size());
  std::map<T, double> ca, cb;
  double agree = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ca[a[i]] += 1;
    cb[b[i]] += 1;
    if (a[i] == b[i]) agree += 1;
  }
  double po = agree / n;
  double pe = 0;
  for (const auto& [label, c] : ca)
    if (auto it = cb.find(label); it != cb.end()) pe += (c / n) * (it->second / n);
  if (pe == 1.0) return po == 1.0 ? 1.0 : 0.0;
  return (po - pe) / (1 - pe);
}

// ---------------------------------------------------------------------------
// Topic intrusion and topic log odds

struct JudgeSelection {
  std::string judge;
  int topic = 0;
};

struct IntrusionTask {
  std::string task_id;  // element/release/review
  std::string review_id;
  std::vector<int> shown_topics;
  int intruder_id = 0;
  std::vector<JudgeSelection> judge_selections;

  std::size_t judges() const { return judge_selections.size(); }
};

/// Percentile with linear interpolation between order statistics.
inline double percentile(std::vector<double> v, double q) {
  if (v.empty()) throw Error("percentile of an empty vector");
  std::sort(v.begin(), v.end());
  double pos = q / 100.0 * static_cast<double>(v.size() - 1);
  auto lo = static_cast<std::size_t>(std::floor(pos));
  auto hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

/// Builds the task for one review from its topic distribution.
inline IntrusionTask make_intrusion_task(const std::string& task_id, const std::string& review_id,
                                         const std::vector<double>& theta, std::uint64_t seed) {
  const std::size_t k = theta.size();
  if (k < 3) throw InputError("insufficient topics for intrusion: need 3, model has " + std::to_string(k));
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return theta[a] > theta[b]; });
  double q25 = percentile(theta, 25);
  std::vector<int> cand;
  for (std::size_t i = 2; i < k; ++i)
    if (theta[order[i]] <= q25) cand.push_back(order[i]);
  std::sort(cand.begin(), cand.end());
  // The lowest-ranked topic always qualifies, so cand is never empty.
  Rng rng(derive_seed(seed, task_id));
  IntrusionTask t;
  t.task_id = task_id;
  t.review_id = review_id;
  t.intruder_id = cand[rng.below(cand.size())];
  t.shown_topics = {order[0], order[1], t.intruder_id};
  rng.shuffle(t.shown_topics);
  return t;
}

/// One task per review in the model, keyed "<prefix><review_id>".
inline std::vector<IntrusionTask> make_intrusion_tasks(const HDPModel& model, std::uint64_t seed,
                                                       const std::string& prefix = {}) {
  if (model.num_topics() < 3)
    throw InputError("insufficient topics for intrusion: need 3, model has " + std::to_string(model.num_topics()));
  std::vector<IntrusionTask> out;
  for (std::size_t d = 0; d < model.num_docs(); ++d) {
    const auto& id = model.review_ids()[d];
    out.push_back(make_intrusion_task(prefix + id, id, model.theta(d), seed));
  }
  return out;
}

/// Mean over judges of ln theta(intruder) - ln theta(selected).
inline double tlo(const IntrusionTask& task, const std::vector<double>& theta) {
  if (task.judge_selections.empty()) throw InputError("task " + task.task_id + " has no judgments");
  auto shown = [&](int t) { return std::find(task.shown_topics.begin(), task.shown_topics.end(), t) != task.shown_topics.end(); };
  for (int t : task.shown_topics) {
    if (t < 0 || static_cast<std::size_t>(t) >= theta.size())
      throw InputError("task " + task.task_id + " shows topic " + std::to_string(t) + " outside the distribution");
    if (!(theta[t] > 0)) throw Error("task " + task.task_id + ": zero probability on shown topic " + std::to_string(t));
  }
  double li = std::log(theta[task.intruder_id]);
  double sum = 0;
  for (const auto& s : task.judge_selections) {
    if (!shown(s.topic))
      throw InputError("task " + task.task_id + ": judge " + s.judge + " selected topic " + std::to_string(s.topic) +
                       " which was not shown");
    sum += li - std::log(theta[s.topic]);
  }
  return sum / static_cast<double>(task.judge_selections.size());
}

// ---------------------------------------------------------------------------
// Reference F1 table reconstruction

struct Table2Row {
  std::string row, app;
  long fp = 0, fn = 0, tp = 0, tn = 0;
  double printed_f1 = 0;
};

struct Table2Check {
  struct Line {
    Table2Row row;
    double computed_f1 = 0;
    bool within = false;
  };
  std::vector<Line> lines;
  std::size_t matched = 0;
  double mean_f1 = 0;
};

inline std::vector<Table2Row> parse_table2(std::string_view text, const std::filesystem::path& path) {
  auto rows = csv::parse(text);
  if (rows.empty()) throw InputError(path.string() + ": empty table");
  csv::Header h(rows.front());
  auto c_row = h.require("row", path.string()), c_app = h.require("app", path.string());
  auto c_fp = h.require("fp", path.string()), c_fn = h.require("fn", path.string());
  auto c_tp = h.require("tp", path.string()), c_tn = h.require("tn", path.string());
  auto c_f1 = h.require("printed_f1", path.string());
  std::vector<Table2Row> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    auto num = [&](std::size_t c) {
      auto v = parse_int(csv::field(r, c));
      if (!v || *v < 0) throw InputError(path.string() + ":" + std::to_string(r.line) + ": bad count");
      return static_cast<long>(*v);
    };
    auto f1 = parse_double(csv::field(r, c_f1));
    if (!f1) throw InputError(path.string() + ":" + std::to_string(r.line) + ": bad printed F1");
    out.push_back({csv::field(r, c_row), csv::field(r, c_app), num(c_fp), num(c_fn), num(c_tp), num(c_tn), *f1});
  }
  return out;
}

inline std::vector<Table2Row> load_table2(const std::filesystem::path& path) {
  return parse_table2(csv::read_file(path), path);
}

/// The 25 reference rows bundled with the library.
inline std::vector<Table2Row> builtin_table2() { return parse_table2(resources::table2_rows, "table2_rows.csv"); }

inline Table2Check check_table2(const std::vector<Table2Row>& rows, double tolerance = 0.01) {
  Table2Check out;
  double sum = 0;
  for (const auto& r : rows) {
    double f1 = prf1({r.tp, r.fp, r.fn, r.tn}).f1;
    bool ok = std::abs(f1 - r.printed_f1) <= tolerance + 1e-12;
    out.lines.push_back({r, f1, ok});
    out.matched += ok;
    sum += f1;
  }
  out.mean_f1 = rows.empty() ? 0.0 : sum / static_cast<double>(rows.size());
  return out;
}

}  // namespace uiprune
