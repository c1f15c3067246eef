#include <gtest/gtest.h>

#include <numeric>

#include "support/synth.hpp"
#include "uiprune/topics.hpp"

using namespace uiprune;

namespace {

HDPParams quick(std::uint64_t seed, int iterations = 200) {
  HDPParams p;
  p.seed = seed;
  p.iterations = iterations;
  p.burn_in = iterations / 2;
  return p;
}

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

TEST(SmoothedTheta, FixtureState) {
  auto th = smoothed_theta({2, 2}, 1.0, {0.5, 0.5});
  EXPECT_DOUBLE_EQ(th[0], 0.5);
  EXPECT_DOUBLE_EQ(th[1], 0.5);
}

TEST(SmoothedTheta, VanishingConcentrationConcentratesOnAssignedTopic) {
  auto th = smoothed_theta({0, 0, 0, 7}, 1e-12, {0.25, 0.25, 0.25, 0.25});
  EXPECT_NEAR(th[3], 1.0, 1e-9);
}

TEST(SmoothedTheta, HandComputedUnevenCase) {
  // (n_t + a*b_t) / (n + a) with n = 3, a = 2, beta = [0.75, 0.25]
  auto th = smoothed_theta({1, 2}, 2.0, {0.75, 0.25});
  EXPECT_NEAR(th[0], 2.5 / 5.0, 1e-15);
  EXPECT_NEAR(th[1], 2.5 / 5.0, 1e-15);
  th = smoothed_theta({3, 0}, 2.0, {0.75, 0.25});
  EXPECT_NEAR(th[0], 4.5 / 5.0, 1e-15);
  EXPECT_NEAR(th[1], 0.5 / 5.0, 1e-15);
}

TEST(Hdp, ParamsValidated) {
  HDPParams p;
  p.burn_in = p.iterations;
  EXPECT_THROW(p.validate(), InputError);
  p = HDPParams{};
  p.eta = 0;
  EXPECT_THROW(p.validate(), InputError);
}

TEST(Hdp, SingleDegenerateDocumentMostlyOneTopic) {
  // Two copies of one word usually share a topic; the sampler's final state
  // occasionally splits them, which gives theta = [0.5, 0.5].
  int one_topic = 0;
  const int seeds = 200;
  for (int s = 0; s < seeds; ++s) {
    auto m = HDPModel::fit({{"r", {"crash", "crash"}, ""}}, quick(static_cast<std::uint64_t>(s)));
    auto th = m.theta(0);
    EXPECT_NEAR(sum(th), 1.0, 1e-9);
    EXPECT_GE(*std::max_element(th.begin(), th.end()), 0.5 - 1e-12);
    if (m.num_topics() == 1) {
      ++one_topic;
      EXPECT_NEAR(th[0], 1.0, 1e-12);
    }
  }
  EXPECT_GE(one_topic, seeds * 6 / 10);
}

TEST(Hdp, SameSeedIdenticalState) {
  auto p = synth::planted_topics(3, 5, 10, 1);
  auto a = HDPModel::fit(p.docs, quick(99));
  auto b = HDPModel::fit(p.docs, quick(99));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a.log_likelihood_trace(), b.log_likelihood_trace());
  auto c = HDPModel::fit(p.docs, quick(100));
  EXPECT_NE(a.dump(), c.dump());
}

TEST(Hdp, PlantedTopicsRecovered) {
  auto p = synth::planted_topics(3, 30, 20, 2024);
  auto m = HDPModel::fit(p.docs, quick(7, 300));
  EXPECT_GE(synth::purity(m, p.source), 0.8);
  EXPECT_GE(m.num_topics(), 3u);
}

TEST(Hdp, PropertyCountsConsistentEverySweep) {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    auto p = synth::planted_topics(1 + static_cast<int>(rng.below(3)), 1 + static_cast<int>(rng.below(4)),
                                   3 + static_cast<int>(rng.below(5)), rng(), 0, 8);
    p.docs[0].tokens.push_back("anchor");
    bool ok = true;
    HDPModel::fit(p.docs, quick(rng(), 30), [&](const HDPModel& m, int) { ok = ok && m.consistent(); });
    EXPECT_TRUE(ok) << "trial " << trial;
  }
}

TEST(Hdp, PropertyThetaNormalizedForEveryReview) {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = synth::planted_topics(1 + static_cast<int>(rng.below(4)), 1 + static_cast<int>(rng.below(6)),
                                   2 + static_cast<int>(rng.below(10)), rng(), 0, 12);
    // make sure at least one word exists
    p.docs[0].tokens.push_back("anchor");
    auto m = HDPModel::fit(p.docs, quick(rng(), 40));
    for (std::size_t d = 0; d < m.num_docs(); ++d) {
      auto th = m.theta(d);
      EXPECT_EQ(th.size(), m.num_topics());
      EXPECT_NEAR(sum(th), 1.0, 1e-9);
      for (double v : th) EXPECT_GT(v, 0.0);
    }
  }
}

TEST(Hdp, InputErrors) {
  EXPECT_THROW(HDPModel::fit({{"a", {}, ""}}, quick(1)), InputError);
  EXPECT_THROW(HDPModel::fit({{"a", {"x"}, ""}, {"a", {"y"}, ""}}, quick(1)), InputError);
  auto m = HDPModel::fit({{"a", {"x"}, ""}}, quick(1));
  EXPECT_THROW(m.theta(std::string("zzz")), InputError);
}

TEST(Hdp, LogLikelihoodTraceCoversPostBurnIn) {
  auto p = synth::planted_topics(2, 4, 5, 3);
  auto m = HDPModel::fit(p.docs, quick(1, 50));
  EXPECT_EQ(m.log_likelihood_trace().size(), 25u);
}

TEST(Clusters, OneReviewOneTopic) {
  std::vector<ReviewLink> links{{"r1", "btn", 0, 0.9}};
  auto c = form_clusters([](const std::string&) { return std::vector<double>{1.0}; }, links, "btn", 0);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].review_ids, std::vector<std::string>{"r1"});
  EXPECT_EQ(c[0].cluster_id, "btn/0/0");
}

TEST(Clusters, TauMakesClustersOverlap) {
  std::vector<ReviewLink> links{{"mixed", "btn", 0, 0.9}, {"pure", "btn", 0, 0.8}, {"other", "x", 0, 0.9}};
  auto theta = [](const std::string& id) {
    return id == "mixed" ? std::vector<double>{0.6, 0.4} : std::vector<double>{0.9, 0.1};
  };
  auto c = form_clusters(theta, links, "btn", 0, 0.25);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].review_ids, (std::vector<std::string>{"mixed", "pure"}));
  EXPECT_EQ(c[1].review_ids, std::vector<std::string>{"mixed"});
}

TEST(Clusters, ArgmaxAlwaysJoinsEvenBelowTau) {
  std::vector<ReviewLink> links{{"flat", "e", 1, 0.9}};
  auto c = form_clusters([](const std::string&) { return std::vector<double>{0.2, 0.2, 0.2, 0.2, 0.2}; }, links, "e", 1,
                         0.25);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].topic_id, 0);
}

TEST(Clusters, PropertyEveryLinkedReviewInSomeCluster) {
  auto p = synth::planted_topics(3, 6, 8, 5);
  auto m = HDPModel::fit(p.docs, quick(3, 60));
  std::vector<ReviewLink> links;
  for (const auto& d : p.docs) links.push_back({d.source_id, "e", 0, 1.0});
  for (double tau : {0.05, 0.25, 0.5, 1.0}) {
    auto cs = form_clusters(m, links, "e", 0, tau);
    std::set<std::string> seen;
    for (const auto& c : cs) {
      EXPECT_FALSE(c.review_ids.empty());
      seen.insert(c.review_ids.begin(), c.review_ids.end());
    }
    EXPECT_EQ(seen.size(), p.docs.size());
  }
}
