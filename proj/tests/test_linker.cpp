#include <gtest/gtest.h>

#include <cmath>

#include "support/oracle.hpp"
#include "uiprune/linker.hpp"

using namespace uiprune;

namespace {

using Docs = std::vector<std::vector<std::string>>;

TokenizedText review(const std::string& id, std::vector<std::string> t) { return {id, std::move(t), ""}; }

// Random corpus over a small vocabulary so that overlaps are common.
struct RandomCase {
  Docs reviews, elements;
};

RandomCase random_case(Rng& rng, std::size_t max_reviews, std::size_t max_elements) {
  RandomCase c;
  auto draw = [&](std::size_t max_len) {
    std::vector<std::string> d;
    for (std::size_t k = rng.below(max_len + 1); k > 0; --k) d.push_back("w" + std::to_string(rng.below(12)));
    return d;
  };
  for (std::size_t i = 1 + rng.below(max_reviews); i > 0; --i) c.reviews.push_back(draw(8));
  for (std::size_t i = 1 + rng.below(max_elements); i > 0; --i) c.elements.push_back(draw(4));
  return c;
}

std::vector<ReviewLink> run_link(const RandomCase& c, double threshold) {
  std::vector<TokenizedText> r;
  for (std::size_t i = 0; i < c.reviews.size(); ++i) r.push_back(review("r" + std::to_string(i), c.reviews[i]));
  std::vector<ElementDoc> e;
  for (std::size_t i = 0; i < c.elements.size(); ++i) e.push_back({"e" + std::to_string(i), c.elements[i]});
  return link(r, e, 0, threshold);
}

}  // namespace

TEST(Idf, Examples) {
  TfIdfSpace one(Docs{{"a", "b"}});
  EXPECT_DOUBLE_EQ(one.idf("a"), 1.0);
  TfIdfSpace three(Docs{{"x", "y"}, {"x"}, {"x", "z"}});
  EXPECT_DOUBLE_EQ(three.idf("x"), 1.0);
  EXPECT_NEAR(three.idf("y"), 1.6931, 1e-4);
  EXPECT_NEAR(three.idf("y"), std::log(2.0) + 1.0, 1e-15);
}

TEST(Cosine, IdenticalAndDisjoint) {
  TfIdfSpace s(Docs{{"mic", "start"}, {"share"}});
  EXPECT_DOUBLE_EQ(cosine({"mic", "start"}, {"mic", "start"}, s), 1.0);
  EXPECT_DOUBLE_EQ(cosine({"mic"}, {"share"}, s), 0.0);
  EXPECT_DOUBLE_EQ(cosine({}, {"share"}, s), 0.0);
}

TEST(Cosine, HandComputedThreeDocSpace) {
  // idf(mic) = ln(4/3)+1, idf(start) = idf(stop) = ln(2)+1;
  // cos = idf(mic)^2 / (idf(mic)^2 + idf(start)^2)
  TfIdfSpace s(Docs{{"mic", "start"}, {"mic", "stop"}, {"share"}});
  EXPECT_NEAR(cosine({"mic", "start"}, {"mic", "stop"}, s), 0.366446816266513, 1e-9);
}

TEST(Cosine, EmptySpaceRejected) { EXPECT_THROW(TfIdfSpace(Docs{{}, {}}), InputError); }

TEST(Cosine, PropertyBoundedAndSymmetric) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    auto c = random_case(rng, 6, 6);
    Docs all = c.reviews;
    all.insert(all.end(), c.elements.begin(), c.elements.end());
    if (std::all_of(all.begin(), all.end(), [](const auto& d) { return d.empty(); })) continue;
    TfIdfSpace s(all);
    for (const auto& a : all)
      for (const auto& b : all) {
        double x = cosine(a, b, s);
        EXPECT_GE(x, 0.0);
        EXPECT_LE(x, 1.0);
        EXPECT_DOUBLE_EQ(x, cosine(b, a, s));
      }
  }
}

TEST(Link, IdenticalTokensLinkAtOne) {
  auto l = link({review("r", {"share", "button"})}, {{"btn_share", {"share", "button"}}}, 3);
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l[0].element_id, "btn_share");
  EXPECT_EQ(l[0].release_ordinal, 3);
  EXPECT_DOUBLE_EQ(l[0].similarity, 1.0);
}

TEST(Link, NoSharedTokensNoLinks) {
  EXPECT_TRUE(link({review("r", {"battery", "drain"})}, {{"e", {"share", "button"}}}, 0).empty());
}

TEST(Link, ThresholdMustBeInUnitInterval) {
  EXPECT_THROW(link({}, {}, 0, 0.0), InputError);
  EXPECT_THROW(link({}, {}, 0, 1.5), InputError);
  EXPECT_NO_THROW(link({}, {}, 0, 1.0));
}

TEST(Link, TenByFiveMatchesBruteForce) {
  Rng rng(1);
  RandomCase c;
  for (int i = 0; i < 10; ++i) {
    std::vector<std::string> d;
    for (std::size_t k = 1 + rng.below(4); k > 0; --k) d.push_back("w" + std::to_string(rng.below(6)));
    c.reviews.push_back(d);
  }
  for (int i = 0; i < 5; ++i) c.elements.push_back({"w" + std::to_string(i), "w" + std::to_string(i + 1)});
  auto got = run_link(c, 0.65);
  auto want = oracle::all_pairs(c.reviews, c.elements, 0.65);
  ASSERT_EQ(got.size(), want.size());
  ASSERT_FALSE(want.empty());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_EQ(got[i].review_id, "r" + std::to_string(want[i].review));
    EXPECT_EQ(got[i].element_id, "e" + std::to_string(want[i].element));
    EXPECT_NEAR(got[i].similarity, want[i].similarity, 1e-9);
  }
}

TEST(Link, PropertyMatchesBruteForceAcrossThresholds) {
  Rng rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    auto c = random_case(rng, 15, 10);
    bool any = false;
    for (const auto& d : c.reviews) any |= !d.empty();
    for (const auto& d : c.elements) any |= !d.empty();
    if (!any) continue;
    double threshold = 0.05 + 0.95 * rng.uniform();
    auto got = run_link(c, threshold);
    auto want = oracle::all_pairs(c.reviews, c.elements, threshold);
    // Pairs within rounding distance of the threshold may fall either way.
    auto near_edge = [&](double s) { return std::abs(s - threshold) < 1e-12; };
    std::size_t gi = 0;
    for (const auto& w : want) {
      if (gi < got.size() && got[gi].review_id == "r" + std::to_string(w.review) &&
          got[gi].element_id == "e" + std::to_string(w.element)) {
        EXPECT_NEAR(got[gi].similarity, w.similarity, 1e-9);
        ++gi;
      } else {
        EXPECT_TRUE(near_edge(w.similarity)) << "missing link r" << w.review << " e" << w.element;
      }
    }
    EXPECT_EQ(gi, got.size()) << "extra links in trial " << trial;
  }
}

TEST(Link, PropertyRaisingThresholdOnlyRemovesLinks) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = random_case(rng, 10, 6);
    bool any = false;
    for (const auto& d : c.reviews) any |= !d.empty();
    for (const auto& d : c.elements) any |= !d.empty();
    if (!any) continue;
    auto lo = run_link(c, 0.3), hi = run_link(c, 0.6);
    for (const auto& h : hi) EXPECT_NE(std::find(lo.begin(), lo.end(), h), lo.end());
  }
}
