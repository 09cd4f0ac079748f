#include <gtest/gtest.h>

#include <set>
#include <string>

#include "plainsum/lexicon.hpp"
#include "test_support.hpp"

using namespace plainsum;

namespace {

std::string data_file(const std::string& name) { return std::string(PLAINSUM_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Stopwords, BuiltinMatchesDataFile) {
  const auto words = read_word_list(data_file("stopwords.txt"));
  EXPECT_EQ(words.size(), 127u);
  EXPECT_EQ(std::set<std::string>(words.begin(), words.end()).size(), 127u);
  const auto& builtin = StopwordList::builtin();
  EXPECT_EQ(builtin.size(), 127u);
  for (const auto& w : words) EXPECT_TRUE(builtin.contains(w)) << w;
  EXPECT_FALSE(builtin.contains("service"));
}

TEST(Stopwords, MissingFileThrows) { EXPECT_THROW(read_word_list("/nonexistent/list.txt"), IoError); }

TEST(Lemmatizer, BuiltinMatchesDataFile) {
  const auto rows = testing_support::tsv(data_file("lemma_exceptions.txt"));
  const auto& lem = Lemmatizer::builtin();
  EXPECT_EQ(lem.exception_count(), rows.size());
  for (const auto& r : rows) EXPECT_EQ(lem(r[0]), r[1]) << r[0];
}

TEST(Lemmatizer, Examples) {
  const auto& lem = Lemmatizer::builtin();
  EXPECT_EQ(lem("services"), "service");
  EXPECT_EQ(lem("serviced"), "service");
  EXPECT_EQ(lem("parties"), "party");
  EXPECT_EQ(lem("agreed"), "agree");
  EXPECT_EQ(lem("using"), "use");
  EXPECT_EQ(lem("shipped"), "ship");
  EXPECT_EQ(lem("children"), "child");
  EXPECT_EQ(lem("process"), "process");
  EXPECT_EQ(lem("analysis"), "analysis");
}

TEST(Lemmatizer, IdempotentOnLemmas) {
  const auto& lem = Lemmatizer::builtin();
  for (const auto& r : testing_support::tsv(data_file("lemma_exceptions.txt"))) EXPECT_EQ(lem(r[1]), r[1]) << r[1];
  for (const auto& r : testing_support::tsv(testing_support::data_path("lemmas.tsv"))) {
    const auto once = lem(r[0]);
    EXPECT_EQ(lem(once), once) << r[0];
  }
}

TEST(Lemmatizer, DictionaryAgreement) {
  const auto rows = testing_support::tsv(testing_support::data_path("lemmas.tsv"));
  ASSERT_EQ(rows.size(), 500u);
  const auto& lem = Lemmatizer::builtin();
  std::size_t agree = 0;
  std::string misses;
  for (const auto& r : rows) {
    if (lem(r[0]) == r[1]) {
      ++agree;
    } else if (misses.size() < 800) {
      misses += r[0] + "->" + lem(r[0]) + " (" + r[1] + ") ";
    }
  }
  const double rate = static_cast<double>(agree) / static_cast<double>(rows.size());
  RecordProperty("agreement", std::to_string(rate));
  EXPECT_GE(rate, 0.90) << misses;
}
