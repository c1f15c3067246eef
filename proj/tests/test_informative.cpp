#include <gtest/gtest.h>

#include <cmath>

#include "support/synth.hpp"
#include "support/tempdir.hpp"
#include "uiprune/informative.hpp"

using namespace uiprune;

namespace {

LabeledReview doc(const std::string& id, Informativeness l, std::vector<std::string> t) { return {id, std::move(t), l}; }

constexpr auto I = Informativeness::informative;
constexpr auto N = Informativeness::non_informative;

}  // namespace

TEST(NaiveBayes, SeparableTrainingDocsClassifiedToOwnClass) {
  std::vector<LabeledReview> data{doc("a", I, {"crash", "login"}), doc("b", I, {"crash", "sync"}),
                                  doc("c", N, {"love", "great"}), doc("d", N, {"great", "fun"})};
  auto m = train_nb(data);
  for (const auto& d : data) EXPECT_EQ(m.classify(d.tokens).label, d.label) << d.review_id;
}

TEST(NaiveBayes, BalancedClassesHaveEqualPriors) {
  auto m = train_nb({doc("a", I, {"x"}), doc("b", N, {"y"})});
  EXPECT_DOUBLE_EQ(m.log_prior[0], std::log(0.5));
  EXPECT_DOUBLE_EQ(m.log_prior[1], std::log(0.5));
}

TEST(NaiveBayes, LaplaceLikelihoodMatchesHandComputation) {
  // vocab {x, y}; informative counts x=2, y=0; non-informative x=0, y=1
  auto m = train_nb({doc("a", I, {"x", "x"}), doc("b", N, {"y"})}, 1.0);
  EXPECT_NEAR(m.log_likelihood.at("x")[0], std::log(3.0 / 4.0), 1e-12);
  EXPECT_NEAR(m.log_likelihood.at("y")[0], std::log(1.0 / 4.0), 1e-12);
  EXPECT_NEAR(m.log_likelihood.at("x")[1], std::log(1.0 / 3.0), 1e-12);
  EXPECT_NEAR(m.log_likelihood.at("y")[1], std::log(2.0 / 3.0), 1e-12);
}

TEST(NaiveBayes, EmptyInputGivesPriorAndNonInformative) {
  auto m = train_nb({doc("a", I, {"x"}), doc("b", I, {"z"}), doc("c", N, {"y"})});
  auto c = m.classify({});
  EXPECT_NEAR(c.posterior[0], 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(c.posterior[1], 1.0 / 3.0, 1e-12);
  // Only out-of-vocabulary tokens: same posterior.
  EXPECT_EQ(m.classify({"unseen"}).posterior, c.posterior);

  auto balanced = train_nb({doc("a", I, {"x"}), doc("b", N, {"y"})});
  EXPECT_EQ(balanced.classify({}).label, N);
}

TEST(NaiveBayes, SingleClassIsDegenerate) {
  EXPECT_THROW(train_nb({doc("a", I, {"x"}), doc("b", I, {"y"})}), InputError);
  EXPECT_THROW(train_nb({}), InputError);
}

TEST(NaiveBayes, PropertyPosteriorNormalized) {
  auto data = synth::separable_corpus(50, 3);
  auto m = train_nb(data);
  Rng rng(8);
  for (int probe = 0; probe < 500; ++probe) {
    std::vector<std::string> t;
    for (std::size_t k = rng.below(30); k > 0; --k)
      t.push_back((rng.below(2) ? "fix" : "joy") + std::to_string(rng.below(40)));
    auto c = m.classify(t);
    EXPECT_NEAR(c.posterior[0] + c.posterior[1], 1.0, 1e-9);
    EXPECT_GE(c.posterior[0], 0.0);
    EXPECT_GE(c.posterior[1], 0.0);
  }
}

TEST(NaiveBayes, SerializeRoundTripPreservesPredictions) {
  TempDir d;
  auto data = synth::separable_corpus(20, 5);
  auto m = train_nb(data, 0.5);
  m.save(d.path() / "m.nb");
  auto back = NBModel::load(d.path() / "m.nb");
  EXPECT_EQ(back.alpha, m.alpha);
  EXPECT_EQ(back.log_prior, m.log_prior);
  EXPECT_EQ(back.log_likelihood, m.log_likelihood);
  EXPECT_THROW(NBModel::deserialize("not a model"), InputError);
}

TEST(SeedModel, PraiseAndEmotionAreNonInformative) {
  TextPrep prep;
  auto m = seed_model(prep);
  EXPECT_EQ(m.classify(prep.tokens("The app is nice")).label, N);
  EXPECT_EQ(m.classify(prep.tokens("I hate this app!")).label, N);
  EXPECT_EQ(m.classify(prep.tokens("The share button crashes when I upload a photo")).label, I);
}

TEST(LabeledReviews, ParseAndBalance) {
  TextPrep prep;
  auto data = parse_labeled_reviews(
      "review_id,label,text\n1,informative,Crashes on login\n2,non_informative,Love it\n3,non-informative,Great\n", prep);
  ASSERT_EQ(data.size(), 3u);
  EXPECT_EQ(data[0].label, I);
  EXPECT_EQ(data[2].label, N);
  auto bal = balance_classes(data, 1);
  EXPECT_EQ(bal.size(), 2u);
  EXPECT_EQ(balance_classes(data, 1).front().review_id, bal.front().review_id);
  EXPECT_THROW(parse_labeled_reviews("review_id,label,text\n1,maybe,x\n", prep), InputError);
}
