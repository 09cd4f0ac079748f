#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "plainsum/readability.hpp"

using namespace plainsum;

namespace {

TextMeasures counts(std::size_t words, std::size_t sentences, std::size_t syllables, std::size_t letters,
                    std::size_t characters, std::size_t polysyllables) {
  TextMeasures m;
  m.words = words;
  m.sentences = sentences;
  m.syllables = syllables;
  m.letters = letters;
  m.characters = characters;
  m.polysyllables = polysyllables;
  return m;
}

SummarySet make_set(const std::string& uid, const std::string& original, const std::string& summary) {
  SummarySet s;
  s.uid = uid;
  s.source.company = "Acme";
  s.source.document_title = "Acme Terms";
  s.original_text = original;
  s.candidates.push_back({summary, CandidateStatus::accepted, std::nullopt, false});
  s.best_index = 0;
  return s;
}

}  // namespace

TEST(Measure, ShortSentence) {
  const auto m = measure("The cat sat.");
  EXPECT_EQ(m.words, 3u);
  EXPECT_EQ(m.sentences, 1u);
  EXPECT_EQ(m.syllables, 3u);
  EXPECT_EQ(m.letters, 9u);
  EXPECT_EQ(m.characters, 9u);
  EXPECT_EQ(m.polysyllables, 0u);
}

TEST(Measure, LegalSentence) {
  const auto m = measure("Apple may use your feedback without restrictions.");
  EXPECT_EQ(m.words, 7u);
  EXPECT_EQ(m.sentences, 1u);
  EXPECT_EQ(m.letters, 42u);
}

TEST(Measure, TwoSentencesAndDigits) {
  const auto m = measure("By playing this game, you agree to these terms. If you're under 13 and playing, your "
                         "parent/guardian agrees on your behalf.");
  EXPECT_EQ(m.sentences, 2u);
  EXPECT_EQ(m.characters, m.letters + 2);
}

TEST(Measure, EmptyTextThrows) {
  EXPECT_THROW(measure("..."), EmptyInputError);
  EXPECT_THROW(grade_indices(TextMeasures{}), UndefinedStatisticError);
  EXPECT_THROW(measure_word_list({}), EmptyInputError);
}

TEST(Grades, ClosedForm) {
  const auto g = grade_indices(counts(20, 2, 30, 90, 100, 6));
  EXPECT_NEAR(g.fk, 0.39 * 10.0 + 11.8 * 1.5 - 15.59, 1e-9);
  EXPECT_NEAR(g.fk, 6.01, 1e-9);
  EXPECT_NEAR(g.cl, 0.0588 * 450.0 - 0.296 * 10.0 - 15.8, 1e-9);
  EXPECT_NEAR(g.cl, 7.7, 1e-9);
  EXPECT_NEAR(g.smog, 1.0430 * std::sqrt(90.0) + 3.1291, 1e-9);
  EXPECT_NEAR(g.ari, 4.71 * 5.0 + 0.5 * 10.0 - 21.43, 1e-9);
  EXPECT_NEAR(g.ari, 7.12, 1e-9);
  EXPECT_NEAR(grade_indices(counts(20, 2, 30, 90, 100, 0)).smog, 3.1291, 1e-12);
}

TEST(Grades, AgesAddFive) {
  const auto m = counts(20, 2, 30, 90, 100, 6);
  const auto g = grade_indices(m);
  const auto r = readability_report(m);
  EXPECT_DOUBLE_EQ(r.fk, g.fk + 5.0);
  EXPECT_DOUBLE_EQ(r.cl, g.cl + 5.0);
  EXPECT_DOUBLE_EQ(r.smog, g.smog + 5.0);
  EXPECT_DOUBLE_EQ(r.ari, g.ari + 5.0);
  EXPECT_DOUBLE_EQ(r.average, (r.fk + r.cl + r.smog + r.ari) / 4.0);
  EXPECT_EQ(to_age(0.0), 5.0);
}

TEST(Grades, MonotoneInComplexity) {
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    const std::size_t w = 1 + rng() % 200, s = 1 + rng() % 20;
    const std::size_t syl = w + rng() % (2 * w), let = w + rng() % (6 * w), poly = rng() % w;
    const auto base = grade_indices(counts(w, s, syl, let, let, poly));
    EXPECT_GT(grade_indices(counts(w, s, syl + 1, let, let, poly)).fk, base.fk);
    EXPECT_GT(grade_indices(counts(w, s, syl, let + 1, let + 1, poly)).ari, base.ari);
    EXPECT_GT(grade_indices(counts(w, s, syl, let + 1, let, poly)).cl, base.cl);
    EXPECT_GT(grade_indices(counts(w, s, syl, let, let, poly + 1)).smog, base.smog);
    if (s > 1) EXPECT_GT(grade_indices(counts(w, s - 1, syl, let, let, poly)).fk, base.fk);
  }
}

TEST(CorpusReadability, IdenticalTextsScoreIdentically) {
  Corpus c;
  c.sets.push_back(make_set("a", "We may share your data. You can delete your account.",
                            "We may share your data. You can delete your account."));
  c.sets.push_back(make_set("b", "Arbitration is mandatory.", "Arbitration is mandatory."));
  const auto s = corpus_readability(c, TextSide::summaries);
  const auto o = corpus_readability(c, TextSide::originals);
  EXPECT_EQ(s.fk, o.fk);
  EXPECT_EQ(s.cl, o.cl);
  EXPECT_EQ(s.smog, o.smog);
  EXPECT_EQ(s.ari, o.ari);
  EXPECT_THROW(corpus_readability(Corpus{}, TextSide::summaries), EmptyInputError);
}

TEST(CorpusReadability, PoolsSentencesAcrossSets) {
  Corpus c;
  c.sets.push_back(make_set("a", "Alpha beta gamma.", "Alpha."));
  c.sets.push_back(make_set("b", "Delta epsilon. Zeta.", "Delta epsilon."));
  const auto pooled = measure("Alpha beta gamma.") + measure("Delta epsilon. Zeta.");
  EXPECT_EQ(pooled.sentences, 3u);
  const auto r = corpus_readability(c, TextSide::originals);
  EXPECT_DOUBLE_EQ(r.fk, readability_report(pooled).fk);
}

TEST(WordSets, IdenticalListsHaveNoGap) {
  const std::vector<std::string> words{"service", "account", "data"};
  const auto gap = wordset_gap(words, words);
  EXPECT_EQ(gap.ari, 0.0);
  EXPECT_EQ(gap.fk, 0.0);
}

TEST(WordSets, LongerWordsWidenGap) {
  const auto gap = wordset_gap({"cat"}, {"extraordinary"});
  EXPECT_GT(gap.ari, 0.0);
  EXPECT_GT(gap.fk, 0.0);
  const auto m = measure_word_list({"cat", "extraordinary"});
  EXPECT_EQ(m.sentences, 2u);
  EXPECT_EQ(m.words, 2u);
}
