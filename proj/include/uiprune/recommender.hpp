#pragma once

#include <algorithm>
#include <array>
#include <filesystem>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "uiprune/common.hpp"
#include "uiprune/csv.hpp"
#include "uiprune/signals.hpp"
#include "uiprune/topics.hpp"

namespace uiprune {

struct ForestParams {
  int n_trees = 100;
  int max_depth = 0;  // 0 = unlimited
  int min_split = 2;
  int mtry = 3;
  std::vector<int> features{0, 1, 2, 3, 4, 5};  // indices into ClusterFeatures::values()
  std::uint64_t seed = 0;

  void validate() const {
    if (n_trees < 1) throw InputError("forest n_trees must be at least 1");
    if (max_depth < 0) throw InputError("forest max_depth must be nonnegative");
    if (min_split < 2) throw InputError("forest min_split must be at least 2");
    if (features.empty()) throw InputError("forest needs at least one feature");
    for (int f : features)
      if (f < 0 || f >= static_cast<int>(ClusterFeatures::count)) throw InputError("forest feature index out of range");
    if (mtry < 1) throw InputError("forest mtry must be at least 1");
  }
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0;
  int left = -1, right = -1;
  std::array<int, 2> counts{};  // [keep, delete] training rows reaching the node

  bool leaf() const { return feature < 0; }
  bool operator==(const TreeNode&) const = default;
};

struct DecisionTree {
  std::vector<TreeNode> nodes;

  /// Leaf vote; a tie at the leaf votes delete.
  bool votes_delete(const std::array<double, ClusterFeatures::count>& x) const {
    int n = 0;
    while (!nodes[n].leaf()) n = x[nodes[n].feature] <= nodes[n].threshold ? nodes[n].left : nodes[n].right;
    return nodes[n].counts[1] >= nodes[n].counts[0];
  }

  bool operator==(const DecisionTree&) const = default;
};

struct Recommendation {
  std::string element_id;
  int release_ordinal = 0;
  std::string cluster_id;
  bool predicted_delete = false;
  double score = 0;

  bool operator==(const Recommendation&) const = default;
};

namespace detail {

inline double gini(int a, int b) {
  double n = a + b;
  if (n == 0) return 0;
  double p = a / n, q = b / n;
  return 1 - p * p - q * q;
}

class TreeBuilder {
 public:
  TreeBuilder(const std::vector<std::array<double, ClusterFeatures::count>>& x, const std::vector<int>& y,
              const ForestParams& p, Rng& rng)
      : x_(x), y_(y), p_(p), rng_(rng) {}

  DecisionTree build(std::vector<std::size_t> rows) {
    DecisionTree t;
    grow(t, std::move(rows), 0);
    return t;
  }

 private:
  int grow(DecisionTree& t, std::vector<std::size_t> rows, int depth) {
    TreeNode node;
    for (auto r : rows) ++node.counts[y_[r]];
    int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back(node);
    bool pure = node.counts[0] == 0 || node.counts[1] == 0;
    if (pure || static_cast<int>(rows.size()) < p_.min_split || (p_.max_depth > 0 && depth >= p_.max_depth)) return id;

    // Draw mtry candidate features without replacement.
    auto feats = p_.features;
    std::size_t m = std::min<std::size_t>(p_.mtry, feats.size());
    for (std::size_t i = 0; i < m; ++i) std::swap(feats[i], feats[i + rng_.below(feats.size() - i)]);
    feats.resize(m);

    double best = std::numeric_limits<double>::infinity();
    int best_f = -1;
    double best_thr = 0;
    for (int f : feats) {
      std::vector<std::pair<double, int>> v;
      for (auto r : rows) v.emplace_back(x_[r][f], y_[r]);
      std::sort(v.begin(), v.end());
      std::array<int, 2> left{}, right = node.counts;
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        ++left[v[i].second];
        --right[v[i].second];
        if (v[i].first == v[i + 1].first) continue;
        double nl = left[0] + left[1], nr = right[0] + right[1];
        double imp = (nl * gini(left[0], left[1]) + nr * gini(right[0], right[1])) / (nl + nr);
        if (imp < best) {
          best = imp;
          best_f = f;
          best_thr = v[i].first + (v[i + 1].first - v[i].first) / 2;
        }
      }
    }
    if (best_f < 0) return id;  // every candidate feature is constant here

    std::vector<std::size_t> l, r;
    for (auto row : rows) (x_[row][best_f] <= best_thr ? l : r).push_back(row);
    t.nodes[id].feature = best_f;
    t.nodes[id].threshold = best_thr;
    int li = grow(t, std::move(l), depth + 1);
    int ri = grow(t, std::move(r), depth + 1);
    t.nodes[id].left = li;
    t.nodes[id].right = ri;
    return id;
  }

  const std::vector<std::array<double, ClusterFeatures::count>>& x_;
  const std::vector<int>& y_;
  const ForestParams& p_;
  Rng& rng_;
};

}  // namespace detail

class ForestModel {
 public:
  ForestParams params;
  std::vector<DecisionTree> trees;

  double score(const ClusterFeatures& f) const {
    auto x = f.values();
    int votes = 0;
    for (const auto& t : trees) votes += t.votes_delete(x);
    return static_cast<double>(votes) / static_cast<double>(trees.size());
  }

  Recommendation predict(const ClusterFeatures& f, const std::string& element_id, int release_ordinal) const {
    double s = score(f);
    return {element_id, release_ordinal, f.cluster_id, s >= 0.5, s};
  }

  Recommendation predict(const ClusterFeatures& f, const Cluster& c) const {
    return predict(f, c.element_id, c.release_ordinal);
  }

  std::string serialize() const {
    std::string out = "uiprune-forest 1\n";
    out += "params " + std::to_string(params.n_trees) + " " + std::to_string(params.max_depth) + " " +
           std::to_string(params.min_split) + " " + std::to_string(params.mtry) + " " + std::to_string(params.seed) + "\n";
    out += "features";
    for (int f : params.features) out += " " + std::to_string(f);
    out += "\n";
    for (const auto& t : trees) {
      out += "tree " + std::to_string(t.nodes.size()) + "\n";
      for (const auto& n : t.nodes)
        out += std::to_string(n.feature) + " " + format_double(n.threshold) + " " + std::to_string(n.left) + " " +
               std::to_string(n.right) + " " + std::to_string(n.counts[0]) + " " + std::to_string(n.counts[1]) + "\n";
    }
    return out;
  }

  static ForestModel deserialize(std::string_view text, const std::string& origin = "forest") {
    std::istringstream in{std::string(text)};
    auto fail = [&](const std::string& why) { return InputError(origin + ": " + why); };
    std::string word;
    int version = 0;
    if (!(in >> word >> version) || word != "uiprune-forest") throw fail("not a forest model file");
    if (version != 1) throw fail("unsupported forest version " + std::to_string(version));
    ForestModel m;
    if (!(in >> word >> m.params.n_trees >> m.params.max_depth >> m.params.min_split >> m.params.mtry >> m.params.seed) ||
        word != "params")
      throw fail("bad params line");
    std::string line;
    std::getline(in, line);
    if (!std::getline(in, line)) throw fail("missing features line");
    auto parts = split_ws(line);
    if (parts.empty() || parts[0] != "features") throw fail("bad features line");
    m.params.features.clear();
    for (std::size_t i = 1; i < parts.size(); ++i) {
      auto v = parse_int(parts[i]);
      if (!v) throw fail("bad feature index");
      m.params.features.push_back(static_cast<int>(*v));
    }
    for (int t = 0; t < m.params.n_trees; ++t) {
      std::size_t n = 0;
      if (!(in >> word >> n) || word != "tree") throw fail("truncated at tree " + std::to_string(t));
      DecisionTree tree;
      for (std::size_t i = 0; i < n; ++i) {
        TreeNode node;
        std::string thr;
        if (!(in >> node.feature >> thr >> node.left >> node.right >> node.counts[0] >> node.counts[1]) || !parse_double(thr))
          throw fail("bad node in tree " + std::to_string(t));
        node.threshold = *parse_double(thr);
        bool ok = node.leaf() || (node.feature < static_cast<int>(ClusterFeatures::count) && node.left > 0 &&
                                  node.right > 0 && static_cast<std::size_t>(std::max(node.left, node.right)) < n);
        if (!ok) throw fail("malformed node in tree " + std::to_string(t));
        tree.nodes.push_back(node);
      }
      if (tree.nodes.empty()) throw fail("empty tree");
      m.trees.push_back(std::move(tree));
    }
    return m;
  }

  void save(const std::filesystem::path& path) const { csv::write_file(path, serialize()); }
  static ForestModel load(const std::filesystem::path& path) { return deserialize(csv::read_file(path), path.string()); }
};

/// Each tree sees a balanced bootstrap: as many draws (with replacement)
/// from each class as the minority class has rows. Rows are first put in
/// cluster_id order so the input order does not matter.
inline ForestModel train_forest(const std::vector<ClusterFeatures>& X, const std::vector<bool>& y,
                                const ForestParams& params = {}) {
  params.validate();
  if (X.size() != y.size()) throw InputError("feature and label counts differ");
  if (X.size() < 2) throw InputError("degenerate labels: need at least two training rows");

  std::vector<std::size_t> order(X.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (X[a].cluster_id != X[b].cluster_id) return X[a].cluster_id < X[b].cluster_id;
    if (X[a].values() != X[b].values()) return X[a].values() < X[b].values();
    return y[a] < y[b];
  });
  std::vector<std::array<double, ClusterFeatures::count>> xs;
  std::vector<int> ys;
  std::array<std::vector<std::size_t>, 2> by_class;
  for (auto i : order) {
    by_class[y[i] ? 1 : 0].push_back(xs.size());
    xs.push_back(X[i].values());
    ys.push_back(y[i] ? 1 : 0);
  }
  if (by_class[0].empty() || by_class[1].empty()) throw InputError("degenerate labels: both classes are required");
  std::size_t draws = std::min(by_class[0].size(), by_class[1].size());

  ForestModel m;
  m.params = params;
  for (int t = 0; t < params.n_trees; ++t) {
    Rng rng(derive_seed(params.seed, static_cast<std::uint64_t>(t)));
    std::vector<std::size_t> rows;
    for (const auto& cls : by_class)
      for (std::size_t d = 0; d < draws; ++d) rows.push_back(cls[rng.below(cls.size())]);
    detail::TreeBuilder b(xs, ys, params, rng);
    m.trees.push_back(b.build(std::move(rows)));
  }
  return m;
}

inline Recommendation predict(const ForestModel& model, const ClusterFeatures& x, const Cluster& c) {
  return model.predict(x, c);
}

/// One recommendation per (element, release): delete if any cluster says
/// delete, scored by the highest cluster score. cluster_id names that cluster.
inline std::vector<Recommendation> aggregate_to_element(const std::vector<Recommendation>& recs) {
  std::map<std::pair<std::string, int>, Recommendation> by;
  for (const auto& r : recs) {
    auto key = std::make_pair(r.element_id, r.release_ordinal);
    auto it = by.find(key);
    if (it == by.end()) {
      by.emplace(key, r);
      continue;
    }
    auto& cur = it->second;
    if (r.score > cur.score || (r.score == cur.score && r.cluster_id < cur.cluster_id)) {
      cur.score = r.score;
      cur.cluster_id = r.cluster_id;
    }
    cur.predicted_delete = cur.predicted_delete || r.predicted_delete;
  }
  std::vector<Recommendation> out;
  for (auto& [k, r] : by) out.push_back(std::move(r));
  return out;
}

inline std::string recommendations_csv(const std::vector<Recommendation>& recs) {
  std::string out = csv::format_row({"element_id", "release_ordinal", "cluster_id", "predicted", "score"});
  for (const auto& r : recs)
    out += csv::format_row({r.element_id, std::to_string(r.release_ordinal), r.cluster_id,
                            r.predicted_delete ? "delete" : "keep", format_double(r.score)});
  return out;
}

}  // namespace uiprune
