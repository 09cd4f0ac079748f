#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "plainsum/stats.hpp"

using namespace plainsum;

namespace {

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

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Novel n-gram counts for single-sentence, lowercase, punctuation-free text.
std::pair<std::size_t, std::size_t> novelty_oracle(const std::string& summary, const std::string& original,
                                                   std::size_t n) {
  const auto s = split_ws(summary);
  const auto d = split_ws(original);
  std::set<std::vector<std::string>> dset;
  for (std::size_t i = 0; i + n <= d.size(); ++i) dset.insert({d.begin() + i, d.begin() + i + n});
  std::size_t novel = 0, total = 0;
  for (std::size_t i = 0; i + n <= s.size(); ++i) {
    ++total;
    if (!dset.count({s.begin() + i, s.begin() + i + n})) ++novel;
  }
  return {novel, total};
}

std::string random_text(std::mt19937& rng, int min_words, int max_words) {
  static const std::vector<std::string> vocab{"data", "share", "party", "account", "delete", "notice",
                                              "cookie", "track", "term", "change", "service", "user"};
  const int n = min_words + static_cast<int>(rng() % static_cast<unsigned>(max_words - min_words + 1));
  std::string out;
  for (int i = 0; i < n; ++i) out += (i ? " " : "") + vocab[rng() % vocab.size()];
  return out;
}

}  // namespace

TEST(Novelty, IdenticalSummaryHasNoNovelNgrams) {
  Corpus c;
  c.sets.push_back(make_set("a", "We may share your data with partners.", "We may share your data with partners."));
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(novel_ngram_fraction(c, n), 0.0);
}

TEST(Novelty, MatchesIndependentCount) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    Corpus c;
    std::size_t novel[5] = {}, total[5] = {};
    for (int i = 0; i < 4; ++i) {
      const auto orig = random_text(rng, 5, 20);
      const auto summ = random_text(rng, 1, 8);
      c.sets.push_back(make_set("s" + std::to_string(i), orig, summ));
      for (std::size_t n = 1; n <= 4; ++n) {
        const auto [nv, tt] = novelty_oracle(summ, orig, n);
        novel[n] += nv;
        total[n] += tt;
      }
    }
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto got = novel_ngram_fraction(c, n);
      if (total[n] == 0) {
        EXPECT_FALSE(got.has_value());
      } else {
        ASSERT_TRUE(got.has_value());
        EXPECT_DOUBLE_EQ(*got, static_cast<double>(novel[n]) / static_cast<double>(total[n]));
      }
    }
  }
}

TEST(Novelty, AppendingOriginalRemovesNovelUnigrams) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    Corpus c;
    for (int i = 0; i < 3; ++i) {
      const auto orig = random_text(rng, 5, 15);
      c.sets.push_back(make_set("s" + std::to_string(i), orig, random_text(rng, 1, 6) + " " + orig));
    }
    const auto with_summary_words = [&] {
      Corpus d = c;
      for (auto& s : d.sets) s.original_text += " " + s.candidates[0].text;
      return d;
    }();
    EXPECT_EQ(novel_ngram_fraction(with_summary_words, 1), 0.0);
  }
}

TEST(Novelty, UndefinedWhenSummariesTooShort) {
  Corpus c;
  c.sets.push_back(make_set("a", "One two three four five.", "One two."));
  EXPECT_FALSE(novel_ngram_fraction(c, 3).has_value());
  EXPECT_THROW(novel_ngram_fraction(Corpus{}, 1), EmptyInputError);
}

TEST(Compression, HalfRatio) {
  Corpus c;
  c.sets.push_back(make_set("a", "one two three four five six seven eight nine ten eleven twelve thirteen fourteen "
                                 "fifteen sixteen seventeen eighteen nineteen twenty.",
                            "one two three four five six seven eight nine ten."));
  const auto s = compression_stats(c);
  EXPECT_DOUBLE_EQ(s.compression.mean, 0.5);
  EXPECT_DOUBLE_EQ(s.compression.std, 0.0);
  EXPECT_DOUBLE_EQ(s.summary_words.mean, 10.0);
  EXPECT_DOUBLE_EQ(s.original_sentences.mean, 1.0);
  ASSERT_EQ(s.per_set.size(), 1u);
  EXPECT_EQ(s.per_set[0].uid, "a");
}

TEST(Compression, IdentitySummariesGiveOne) {
  std::mt19937 rng(8);
  Corpus c;
  for (int i = 0; i < 10; ++i) {
    const auto t = random_text(rng, 3, 12) + ".";
    c.sets.push_back(make_set("s" + std::to_string(i), t, t));
  }
  EXPECT_DOUBLE_EQ(compression_stats(c).compression.mean, 1.0);
}

TEST(Compression, PopulationStd) {
  Corpus c;
  c.sets.push_back(make_set("a", "a b c d", "a"));
  c.sets.push_back(make_set("b", "a b c d", "a b c"));
  const auto s = compression_stats(c);
  EXPECT_DOUBLE_EQ(s.compression.mean, 0.5);
  EXPECT_DOUBLE_EQ(s.compression.std, 0.25);
}

TEST(Stats, PermutationInvariant) {
  std::mt19937 rng(12);
  Corpus c;
  for (int i = 0; i < 12; ++i)
    c.sets.push_back(make_set("s" + std::to_string(i), random_text(rng, 5, 25) + ". " + random_text(rng, 3, 9) + ".",
                              random_text(rng, 2, 9)));
  Corpus p = c;
  std::shuffle(p.sets.begin(), p.sets.end(), rng);
  const auto a = compression_stats(c);
  const auto b = compression_stats(p);
  EXPECT_EQ(a.compression.mean, b.compression.mean);
  EXPECT_EQ(a.compression.std, b.compression.std);
  EXPECT_EQ(a.original_words.std, b.original_words.std);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(novel_ngram_fraction(c, n), novel_ngram_fraction(p, n));
  const auto la = log_odds_ratios(c, 1);
  const auto lb = log_odds_ratios(p, 1);
  ASSERT_EQ(la.size(), lb.size());
  for (std::size_t i = 0; i < la.size(); ++i) {
    EXPECT_EQ(la[i].word, lb[i].word);
    EXPECT_EQ(la[i].log_odds, lb[i].log_odds);
  }
}

TEST(Compression, ZeroWordOriginalSkipped) {
  Corpus c;
  c.sets.push_back(make_set("a", "...", "summary"));
  c.sets.push_back(make_set("b", "one two", "one"));
  Diagnostics diag;
  const auto s = compression_stats(c, &diag);
  EXPECT_EQ(s.per_set.size(), 1u);
  EXPECT_EQ(diag.warnings.size(), 1u);
}

TEST(LogOdds, HandComputedExample) {
  const TermCounts s{{"good", 2}, {"bad", 1}};
  const TermCounts d{{"bad", 2}, {"good", 1}};
  const auto assoc = log_odds_ratios(s, d, 1, 1.0);
  ASSERT_EQ(assoc.size(), 2u);
  EXPECT_EQ(assoc[0].word, "good");
  EXPECT_NEAR(assoc[0].log_odds, std::log(3.0 / 5.0) - std::log(2.0 / 5.0), 1e-12);
  EXPECT_NEAR(assoc[0].log_odds, 0.405465108, 1e-9);
  EXPECT_EQ(assoc[0].side, AssociationSide::summary);
  EXPECT_EQ(assoc[1].side, AssociationSide::original);

  Corpus c;
  c.sets.push_back(make_set("a", "bad bad good", "good good bad"));
  const auto via_corpus = log_odds_ratios(c, 1, 1.0);
  ASSERT_EQ(via_corpus.size(), 2u);
  EXPECT_NEAR(via_corpus[0].log_odds, assoc[0].log_odds, 1e-15);

  const auto pair = top_k_pair(assoc, 1);
  EXPECT_EQ(pair.summary_words, std::vector<std::string>{"good"});
  EXPECT_EQ(pair.original_words, std::vector<std::string>{"bad"});
  EXPECT_TRUE(top_k_pair(assoc, 0).summary_words.empty());
}

TEST(LogOdds, EqualRelativeFrequencyScoresZero) {
  const TermCounts s{{"x", 2}, {"y", 4}};
  const TermCounts d{{"x", 2}, {"y", 4}};
  for (const auto& a : log_odds_ratios(s, d, 1)) {
    EXPECT_EQ(a.log_odds, 0.0);
    EXPECT_EQ(a.side, AssociationSide::original);
  }
}

TEST(LogOdds, SwapNegatesExactly) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    TermCounts s, d;
    for (int i = 0; i < 20; ++i) {
      const auto w = "w" + std::to_string(rng() % 15);
      (rng() % 2 ? s : d)[w] += 1 + rng() % 4;
    }
    const double alpha = 0.1 + (rng() % 20) / 10.0;
    const auto fwd = log_odds_ratios(s, d, 1, alpha);
    const auto rev = log_odds_ratios(d, s, 1, alpha);
    std::map<std::string, double> r;
    for (const auto& a : rev) r[a.word] = a.log_odds;
    ASSERT_EQ(fwd.size(), rev.size());
    for (const auto& a : fwd) EXPECT_EQ(a.log_odds, -r.at(a.word)) << a.word;
    for (std::size_t i = 1; i < fwd.size(); ++i) EXPECT_GE(fwd[i - 1].log_odds, fwd[i].log_odds);
  }
}

TEST(LogOdds, MinCountAndErrors) {
  const TermCounts s{{"rare", 1}, {"common", 5}};
  const TermCounts d{{"common", 5}, {"other", 4}};
  const auto assoc = log_odds_ratios(s, d, 3);
  for (const auto& a : assoc) EXPECT_NE(a.word, "rare");
  EXPECT_THROW(log_odds_ratios(TermCounts{}, TermCounts{}), EmptyInputError);
  try {
    top_k_pair(assoc, 2);
    FAIL();
  } catch (const UndefinedStatisticError& e) {
    EXPECT_NE(std::string(e.what()).find("summary side"), std::string::npos);
  }
}

TEST(LogOdds, TopKListsAreDisjoint) {
  std::mt19937 rng(2);
  TermCounts s, d;
  for (int i = 0; i < 400; ++i) {
    s["w" + std::to_string(rng() % 60)] += 1;
    d["w" + std::to_string(rng() % 80)] += 1;
  }
  const auto pair = top_k_pair(log_odds_ratios(s, d, 1), 10);
  ASSERT_EQ(pair.summary_words.size(), 10u);
  ASSERT_EQ(pair.original_words.size(), 10u);
  for (const auto& w : pair.summary_words)
    EXPECT_EQ(std::count(pair.original_words.begin(), pair.original_words.end(), w), 0);
}
