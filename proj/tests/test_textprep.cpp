#include <gtest/gtest.h>

#include "uiprune/csv.hpp"
#include "uiprune/resources/contractions.hpp"
#include "uiprune/resources/informative_seed.hpp"
#include "uiprune/resources/lemmas.hpp"
#include "uiprune/resources/lexicon.hpp"
#include "uiprune/resources/stopwords.hpp"
#include "uiprune/resources/table2_rows.hpp"
#include "uiprune/textprep.hpp"

using namespace uiprune;

namespace {
std::vector<std::string> toks(std::initializer_list<const char*> l) { return {l.begin(), l.end()}; }
}  // namespace

TEST(Resources, EmbeddedCopiesMatchDataFiles) {
  const std::string dir = UIPRUNE_DATA_DIR;
  EXPECT_EQ(csv::read_file(dir + "/stopwords.txt"), resources::stopwords);
  EXPECT_EQ(csv::read_file(dir + "/contractions.csv"), resources::contractions);
  EXPECT_EQ(csv::read_file(dir + "/lemmas.csv"), resources::lemmas);
  EXPECT_EQ(csv::read_file(dir + "/lexicon.csv"), resources::lexicon);
  EXPECT_EQ(csv::read_file(dir + "/informative_seed.csv"), resources::informative_seed);
  EXPECT_EQ(csv::read_file(dir + "/table2_rows.csv"), resources::table2_rows);
}

TEST(Contractions, Examples) {
  EXPECT_EQ(expand_contractions("can't"), "can not");
  EXPECT_EQ(expand_contractions("won't stop"), "will not stop");
  EXPECT_EQ(expand_contractions("cannot"), "cannot");
  EXPECT_EQ(expand_contractions("I Can’t"), "I can not");
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize("Great \xF0\x9F\x91\x8D app!!!"), "great app");
  EXPECT_EQ(normalize(""), "");
  EXPECT_EQ(normalize("v2.0 UPDATE"), "v update");
}

TEST(Normalize, PropertyOutputAlphabet) {
  Rng rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    std::string s;
    for (std::size_t k = rng.below(40); k > 0; --k) s += static_cast<char>(rng.below(256));
    auto n = normalize(s);
    for (char c : n) EXPECT_TRUE((c >= 'a' && c <= 'z') || c == ' ');
    EXPECT_EQ(n.find("  "), std::string::npos);
    if (!n.empty()) {
      EXPECT_NE(n.front(), ' ');
      EXPECT_NE(n.back(), ' ');
    }
    EXPECT_EQ(normalize(n), n);
  }
}

TEST(Lemmatize, Examples) {
  EXPECT_EQ(lemmatize("deciding"), "decide");
  EXPECT_EQ(lemmatize("decided"), "decide");
  EXPECT_EQ(lemmatize("decide"), "decide");
  EXPECT_EQ(lemmatize("listening"), "listen");
  EXPECT_EQ(lemmatize("stopped"), "stop");
  EXPECT_EQ(lemmatize("was"), "be");
  EXPECT_EQ(lemmatize("settings"), "setting");
  EXPECT_EQ(lemmatize("uninstalled"), "uninstall");
}

TEST(Lemmatize, PropertyIdempotentOnRandomWords) {
  Rng rng(4);
  const std::vector<std::string> suffixes{"", "s", "es", "ies", "ed", "ing", "ied", "ss"};
  for (int trial = 0; trial < 3000; ++trial) {
    std::string w;
    for (std::size_t k = 2 + rng.below(8); k > 0; --k) w += static_cast<char>('a' + rng.below(26));
    w += suffixes[rng.below(suffixes.size())];
    auto once = lemmatize(w);
    EXPECT_EQ(lemmatize(once), once) << w;
  }
}

TEST(Lemmatize, PropertyIdempotentOnDictionary) {
  for (const auto& [form, lemma] : Lemmatizer::builtin().table()) {
    auto once = lemmatize(form);
    EXPECT_EQ(lemmatize(once), once) << form;
  }
}

TEST(Lemmatize, CyclicDictionaryRejected) {
  EXPECT_THROW(Lemmatizer::parse("form,lemma\na,b\nb,a\n"), InputError);
}

TEST(StopList, ParseExemptAndAdd) {
  auto s = StopList::parse("# comment\nthe\nnot\n+zebra\n-the\n");
  EXPECT_FALSE(s.contains("the"));
  EXPECT_TRUE(s.contains("zebra"));
  EXPECT_FALSE(s.contains("not"));  // negators are always kept
  EXPECT_TRUE(StopList::builtin().contains("it"));
  EXPECT_FALSE(StopList::builtin().contains("uninstall"));
}

TEST(Preprocess, Examples) {
  TextPrep prep;
  EXPECT_EQ(prep.tokens("I can't uninstall it!"), toks({"can", "not", "uninstall"}));
  EXPECT_TRUE(prep.tokens("the and of it").empty());
  EXPECT_TRUE(prep.tokens("\xF0\x9F\x98\x80\xF0\x9F\x98\x80").empty());
  auto t = prep.preprocess("Crashes!", "r1");
  EXPECT_EQ(t.source_id, "r1");
  EXPECT_EQ(t.raw_text, "Crashes!");
  EXPECT_EQ(t.tokens, toks({"crash"}));
}

TEST(Preprocess, PropertyNoStopWordsAndStable) {
  TextPrep prep;
  Rng rng(6);
  const std::vector<std::string> words{"The",   "crashes", "isn't", "I",      "won't", "loving", "buttons",
                                       "it's",  "not",     "never", "Synced", "you're", "a",     "stopped",
                                       "UNINSTALLED", "app", "...",  "42",    "they'd", "better"};
  for (int trial = 0; trial < 500; ++trial) {
    std::string s;
    for (std::size_t k = rng.below(12); k > 0; --k) s += words[rng.below(words.size())] + " ";
    auto out = prep.tokens(s);
    for (const auto& t : out) {
      EXPECT_FALSE(prep.stoplist().contains(t)) << t << " in '" << s << "'";
      EXPECT_EQ(prep.lemmatizer().lemmatize(t), t);
    }
    EXPECT_EQ(prep.tokens(join(out, " ")), out) << s;
  }
}
