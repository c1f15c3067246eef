#include <gtest/gtest.h>

#include "support/synth.hpp"
#include "uiprune/recommender.hpp"

using namespace uiprune;

namespace {

ClusterFeatures feat(int n, double rating, double delta, double pol, double obj, int uninstall) {
  ClusterFeatures f;
  f.n_reviews = n;
  f.avg_rating = rating;
  f.delta_rating = delta;
  f.avg_polarity = pol;
  f.avg_objectivity = obj;
  f.uninstall_count = uninstall;
  return f;
}

DecisionTree leaf(int keep, int del) {
  DecisionTree t;
  TreeNode n;
  n.counts = {keep, del};
  t.nodes.push_back(n);
  return t;
}

Recommendation rec(const std::string& cluster, double score) {
  return {"btn", 1, cluster, score >= 0.5, score};
}

}  // namespace

TEST(Forest, DegenerateLabelsRejected) {
  std::vector<ClusterFeatures> X{feat(3, 1, -1, -0.5, 0.5, 1), feat(4, 2, -1, -0.4, 0.5, 0)};
  try {
    train_forest(X, {true, true});
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("degenerate labels"), std::string::npos);
  }
  EXPECT_THROW(train_forest(X, {false, false}), InputError);
  EXPECT_THROW(train_forest({}, {}), InputError);
}

TEST(Forest, SingleStumpSeparatesTwoPoints) {
  std::vector<ClusterFeatures> X{feat(10, 1, -2, -0.8, 0.9, 5), feat(2, 4.5, 1, 0.6, 0.2, 0)};
  ForestParams p;
  p.n_trees = 1;
  p.max_depth = 1;
  p.seed = 3;
  auto m = train_forest(X, {true, false}, p);
  ASSERT_EQ(m.trees.size(), 1u);
  EXPECT_EQ(m.trees[0].nodes.size(), 3u);
  EXPECT_DOUBLE_EQ(m.score(feat(12, 1, -2.5, -0.9, 0.9, 6)), 1.0);
  EXPECT_DOUBLE_EQ(m.score(feat(1, 5, 1.5, 0.8, 0.1, 0)), 0.0);
}

TEST(Forest, HalfTheVotesMeansDelete) {
  ForestModel m;
  m.params.n_trees = 2;
  m.trees = {leaf(1, 0), leaf(0, 1)};
  auto r = m.predict(feat(1, 3, 0, 0, 0, 0), "btn", 2);
  EXPECT_DOUBLE_EQ(r.score, 0.5);
  EXPECT_TRUE(r.predicted_delete);
  EXPECT_EQ(r.element_id, "btn");
  EXPECT_EQ(r.release_ordinal, 2);
}

TEST(Forest, LeafTieVotesDelete) {
  EXPECT_TRUE(leaf(2, 2).votes_delete({}));
  EXPECT_FALSE(leaf(3, 2).votes_delete({}));
}

TEST(Aggregate, MaxScoreAndAnyDelete) {
  auto out = aggregate_to_element({rec("btn/1/0", 0.2), rec("btn/1/1", 0.8)});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_TRUE(out[0].predicted_delete);
  EXPECT_DOUBLE_EQ(out[0].score, 0.8);
  EXPECT_EQ(out[0].cluster_id, "btn/1/1");
}

TEST(Aggregate, SingletonPassesThrough) {
  auto r = rec("btn/1/0", 0.3);
  auto out = aggregate_to_element({r});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], r);
  EXPECT_TRUE(aggregate_to_element({}).empty());
}

TEST(Aggregate, KeysAreElementAndRelease) {
  std::vector<Recommendation> in{{"a", 0, "a/0/0", false, 0.1}, {"a", 1, "a/1/0", true, 0.9}, {"b", 0, "b/0/0", false, 0.2}};
  auto out = aggregate_to_element(in);
  ASSERT_EQ(out.size(), 3u);
}

TEST(Forest, SameSeedSameForest) {
  auto data = synth::planted_clusters(150, 0.05, 9);
  ForestParams p;
  p.n_trees = 20;
  p.seed = 42;
  auto a = train_forest(data.X, data.noisy, p);
  auto b = train_forest(data.X, data.noisy, p);
  EXPECT_EQ(a.trees, b.trees);
  p.seed = 43;
  auto c = train_forest(data.X, data.noisy, p);
  EXPECT_NE(a.trees, c.trees);
}

TEST(Forest, RowOrderDoesNotMatter) {
  auto data = synth::planted_clusters(120, 0.05, 10);
  ForestParams p;
  p.n_trees = 15;
  p.seed = 1;
  auto a = train_forest(data.X, data.noisy, p);
  std::vector<std::size_t> idx(data.X.size());
  std::iota(idx.begin(), idx.end(), 0);
  Rng rng(5);
  rng.shuffle(idx);
  std::vector<ClusterFeatures> X;
  std::vector<bool> y;
  for (auto i : idx) {
    X.push_back(data.X[i]);
    y.push_back(data.noisy[i]);
  }
  auto b = train_forest(X, y, p);
  EXPECT_EQ(a.trees, b.trees);
}

TEST(Forest, SerializeRoundTrip) {
  auto data = synth::planted_clusters(80, 0.0, 11);
  ForestParams p;
  p.n_trees = 7;
  p.max_depth = 4;
  p.seed = 99;
  auto m = train_forest(data.X, data.clean, p);
  auto back = ForestModel::deserialize(m.serialize());
  EXPECT_EQ(back.trees, m.trees);
  EXPECT_EQ(back.params.n_trees, 7);
  EXPECT_EQ(back.params.max_depth, 4);
  for (const auto& f : data.X) EXPECT_EQ(back.score(f), m.score(f));
  EXPECT_EQ(back.serialize(), m.serialize());
}

TEST(Forest, DeserializeRejectsGarbage) {
  EXPECT_THROW(ForestModel::deserialize("hello"), InputError);
  EXPECT_THROW(ForestModel::deserialize(""), InputError);
}

TEST(ForestParamsTest, Validation) {
  ForestParams p;
  EXPECT_NO_THROW(p.validate());
  p.features = {7};
  EXPECT_THROW(p.validate(), InputError);
  p = {};
  p.n_trees = 0;
  EXPECT_THROW(p.validate(), InputError);
  p = {};
  p.min_split = 1;
  EXPECT_THROW(p.validate(), InputError);
}

// With polarity as the only feature, lowering polarity should never lower
// the delete score when the labels say "more negative means delete".
TEST(ForestProperty, PolarityOnlyForestIsMonotone) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    std::vector<ClusterFeatures> X;
    std::vector<bool> y;
    for (int i = 0; i < 200; ++i) {
      double pol = -1.0 + 2.0 * rng.uniform();
      X.push_back(feat(5, 3, 0, pol, 0.5, 0));
      y.push_back(pol < -0.2);
    }
    ForestParams p;
    p.features = {3};
    p.mtry = 1;
    p.n_trees = 30;
    p.seed = seed;
    auto m = train_forest(X, y, p);
    double prev = -1;
    for (double pol = 1.0; pol >= -1.0; pol -= 0.01) {
      double s = m.score(feat(5, 3, 0, pol, 0.5, 0));
      ASSERT_GE(s, prev) << "seed " << seed << " pol " << pol;
      prev = s;
    }
  }
}

TEST(ForestProperty, CleanNegativesMostlyKept) {
  auto train = synth::planted_clusters(400, 0.05, 21);
  auto test = synth::planted_clusters(400, 0.0, 22);
  ForestParams p;
  p.seed = 8;
  auto m = train_forest(train.X, train.noisy, p);
  int neg = 0, kept = 0;
  for (std::size_t i = 0; i < test.X.size(); ++i) {
    if (test.clean[i]) continue;
    ++neg;
    kept += m.score(test.X[i]) < 0.5;
  }
  ASSERT_GT(neg, 100);
  EXPECT_GE(static_cast<double>(kept) / neg, 0.9);
}
