#include <gtest/gtest.h>

#include <random>
#include <string>

#include "plainsum/corpus.hpp"
#include "test_support.hpp"

using namespace plainsum;

namespace {

std::string sample(const std::string& name) { return std::string(PLAINSUM_SAMPLES_DIR) + "/" + name; }

SummarySet make_set(std::string uid, std::string company, std::string original, std::vector<std::string> texts) {
  SummarySet s;
  s.uid = std::move(uid);
  s.source.company = company;
  s.source.document_title = company + " Terms of Service";
  s.source.site = Site::tosdr;
  s.original_text = std::move(original);
  for (auto& t : texts) s.candidates.push_back({std::move(t), CandidateStatus::unreviewed, std::nullopt, false});
  return s;
}

nlohmann::json minimal_record() {
  return nlohmann::json::parse(R"({
    "uid": "u1",
    "source": {"company": "Acme", "document_title": "Acme Terms", "document_date": null, "url": null, "site": "tosdr"},
    "original_text": "Some text.",
    "candidates": [{"text": "Short.", "status": "accepted", "reject_reason": null, "templatic": false}],
    "best_index": 0
  })");
}

void expect_schema_error(const nlohmann::json& record, const std::string& field) {
  try {
    summary_set_from_json(record);
    FAIL() << "expected SchemaError for " << field;
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.field(), field) << e.what();
    EXPECT_EQ(e.uid(), "u1");
  }
}

}  // namespace

TEST(CorpusJson, SampleRoundTripIsFixedPoint) {
  const auto corpus = load_corpus(sample("legal_sample.json"), CorpusFormat::canonical);
  ASSERT_EQ(corpus.sets.size(), 8u);
  const auto text = to_canonical_json(corpus);
  const auto again = parse_canonical(text, corpus.name);
  EXPECT_EQ(again, corpus);
  EXPECT_EQ(to_canonical_json(again), text);
  EXPECT_EQ(text, testing_support::read_text(sample("legal_sample.json")));
}

TEST(CorpusJson, EmptyListGivesEmptyCorpus) {
  const auto c = parse_canonical("[]", "empty");
  EXPECT_TRUE(c.sets.empty());
  EXPECT_EQ(to_canonical_json(c), "[]\n");
}

TEST(CorpusJson, SchemaErrorsNameUidAndField) {
  auto r = minimal_record();
  r["candidates"] = nlohmann::json::array();
  expect_schema_error(r, "candidates");

  r = minimal_record();
  for (int i = 0; i < 3; ++i) r["candidates"].push_back(r["candidates"][0]);
  expect_schema_error(r, "candidates");

  r = minimal_record();
  r["candidates"][0]["status"] = "rejected";
  expect_schema_error(r, "candidates[0].reject_reason");

  r = minimal_record();
  r["candidates"][0]["reject_reason"] = "exact_quote";
  expect_schema_error(r, "candidates[0].reject_reason");

  r = minimal_record();
  r["candidates"][0]["status"] = "unreviewed";
  expect_schema_error(r, "best_index");

  r = minimal_record();
  r["best_index"] = 3;
  expect_schema_error(r, "best_index");

  r = minimal_record();
  r["source"]["document_date"] = "March 2019";
  expect_schema_error(r, "source.document_date");

  r = minimal_record();
  r["source"]["company"] = "";
  expect_schema_error(r, "source.company");

  r = minimal_record();
  r["original_text"] = "   ";
  expect_schema_error(r, "original_text");

  r = minimal_record();
  r["source"]["site"] = "reddit";
  expect_schema_error(r, "source.site");
}

TEST(CorpusJson, DuplicateUidRejected) {
  const auto r = minimal_record();
  nlohmann::json arr = nlohmann::json::array({r, r});
  try {
    parse_canonical(arr.dump());
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.uid(), "u1");
    EXPECT_EQ(e.field(), "uid");
  }
}

TEST(CorpusJson, IoAndParseErrors) {
  EXPECT_THROW(load_corpus("/nonexistent/corpus.json", CorpusFormat::canonical), IoError);
  EXPECT_THROW(parse_canonical("{not json"), SchemaError);
  EXPECT_THROW(parse_canonical("{}"), SchemaError);
}

TEST(CorpusJson, RandomRoundTrips) {
  std::mt19937 rng(3);
  const std::vector<std::string> words{"data", "we", "may", "share", "Terms", "ü", "\"quoted\"", "line\nbreak", "a,b"};
  const auto text = [&](int n) {
    std::string s;
    for (int i = 0; i < n; ++i) s += (i ? " " : "") + words[rng() % words.size()];
    return s;
  };
  for (int trial = 0; trial < 50; ++trial) {
    Corpus c;
    c.name = "random";
    const int n = static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      auto s = make_set("id" + std::to_string(i), "Co" + std::to_string(rng() % 3), text(5 + rng() % 10), {});
      const int k = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < k; ++j) {
        CandidateSummary cand{text(1 + rng() % 6), static_cast<CandidateStatus>(rng() % 3), std::nullopt,
                              rng() % 2 == 0};
        if (cand.status == CandidateStatus::rejected) cand.reject_reason = kAllRejectReasons[rng() % 5];
        s.candidates.push_back(cand);
      }
      for (std::size_t j = 0; j < s.candidates.size(); ++j)
        if (s.candidates[j].status == CandidateStatus::accepted && rng() % 2) s.best_index = j;
      if (rng() % 2) s.source.document_date = "2020-01-0" + std::to_string(1 + rng() % 9);
      if (rng() % 2) s.source.aliases = {"Alias" + std::to_string(i)};
      c.sets.push_back(std::move(s));
    }
    const auto back = parse_canonical(to_canonical_json(c), "random");
    EXPECT_EQ(back, c);
  }
}

TEST(Adapters, TosdrDumpMapsFieldsAndSkipsIncomplete) {
  Diagnostics diag;
  const auto c = load_corpus(sample("tosdr_dump_sample.json"), CorpusFormat::tosdr_dump, &diag);
  ASSERT_EQ(c.sets.size(), 2u);
  EXPECT_EQ(c.sets[0].uid, "1001");
  EXPECT_EQ(c.sets[0].source.company, "Fir Video");
  EXPECT_EQ(c.sets[0].source.site, Site::tosdr);
  EXPECT_EQ(c.sets[0].candidates.size(), 2u);
  EXPECT_EQ(c.sets[0].candidates[0].status, CandidateStatus::unreviewed);
  EXPECT_FALSE(c.sets[0].best_index);
  EXPECT_EQ(c.sets[1].source.company, "Gale Chat");
  ASSERT_EQ(diag.warnings.size(), 1u);
  EXPECT_NE(diag.warnings[0].find("skipped 1"), std::string::npos);
  validate(c);
}

TEST(Adapters, TldrlegalDumpSummariesAreAccepted) {
  const auto c = load_corpus(sample("tldrlegal_dump_sample.json"), CorpusFormat::tldrlegal_dump);
  ASSERT_EQ(c.sets.size(), 1u);
  const auto& s = c.sets[0];
  EXPECT_EQ(s.uid, "tldrlegal-7");
  EXPECT_EQ(s.source.company, "Hazel Photos");
  EXPECT_EQ(s.source.document_date, "2018-05-24");
  EXPECT_EQ(s.best_index, 0u);
  EXPECT_EQ(s.candidates[0].status, CandidateStatus::accepted);
}

TEST(Adapters, EmptyDumpAndMissingText) {
  EXPECT_TRUE(parse_corpus("[]", CorpusFormat::tosdr_dump, "empty").sets.empty());
  Diagnostics diag;
  const auto c = parse_corpus(R"([{"uid": "x", "summaries": ["A summary."]}])", CorpusFormat::tosdr_dump, "d", &diag);
  EXPECT_TRUE(c.sets.empty());
  ASSERT_EQ(diag.warnings.size(), 1u);
  EXPECT_NE(diag.warnings[0].find("skipped 1"), std::string::npos);
}

TEST(Adapters, LongSummaryListsAreTruncated) {
  Diagnostics diag;
  const auto c = parse_corpus(R"([{"uid": "x", "doc": "Acme Privacy Policy", "original_text": "Text here.",
                                   "summaries": ["a", "b", "c", "d"]}])",
                              CorpusFormat::tosdr_dump, "d", &diag);
  ASSERT_EQ(c.sets.size(), 1u);
  EXPECT_EQ(c.sets[0].candidates.size(), 3u);
  EXPECT_EQ(diag.warnings.size(), 1u);
}

TEST(Adapters, CompanyFromTitle) {
  EXPECT_EQ(detail::company_from_title("Pokemon GO Terms of Service"), "Pokemon GO");
  EXPECT_EQ(detail::company_from_title("Android SDK License Agreement"), "Android");
  EXPECT_EQ(detail::company_from_title("Plainname"), "Plainname");
}

TEST(Filters, RepetitionMarksLaterDuplicate) {
  Corpus c;
  c.sets.push_back(make_set("s", "Acme", "Acme shares data with partners and vendors for many purposes.",
                            {"Data is shared.", "Third parties may be involved in operating the service",
                             "Third parties may be involved in operating the service."}));
  const auto r = apply_quality_filters(c);
  const auto& cands = r.corpus.sets[0].candidates;
  EXPECT_EQ(cands[0].status, CandidateStatus::unreviewed);
  EXPECT_EQ(cands[1].status, CandidateStatus::unreviewed);
  EXPECT_EQ(cands[2].status, CandidateStatus::rejected);
  EXPECT_EQ(cands[2].reject_reason, RejectReason::repetition);
  EXPECT_EQ(r.report.counts.at(RejectReason::repetition), 1u);
  ASSERT_EQ(r.report.rejections.size(), 1u);
  EXPECT_EQ(r.report.rejections[0], (FilterDecision{"s", 2, RejectReason::repetition}));
}

TEST(Filters, ExactQuoteAndLongerThanOriginal) {
  Corpus c;
  const std::string original = "You may cancel at any time.";
  c.sets.push_back(make_set("q", "Acme", original, {"  YOU may cancel at any   time  "}));
  std::string long_summary;
  for (int i = 0; i < 30; ++i) long_summary += "word ";
  std::string original20;
  for (int i = 0; i < 20; ++i) original20 += "term ";
  c.sets.push_back(make_set("l", "Acme", original20, {long_summary}));
  const auto r = apply_quality_filters(c);
  EXPECT_EQ(r.corpus.sets[0].candidates[0].reject_reason, RejectReason::exact_quote);
  EXPECT_EQ(r.corpus.sets[1].candidates[0].reject_reason, RejectReason::longer_than_original);
  EXPECT_EQ(r.report.counts.at(RejectReason::exact_quote), 1u);
  EXPECT_EQ(r.report.counts.at(RejectReason::longer_than_original), 1u);
  EXPECT_EQ(r.report.counts.at(RejectReason::opinionated), 0u);
}

TEST(Filters, ReviewedCandidatesAreNeverChanged) {
  const auto corpus = load_corpus(sample("legal_sample.json"), CorpusFormat::canonical);
  const auto r = apply_quality_filters(corpus);
  for (std::size_t s = 0; s < corpus.sets.size(); ++s)
    for (std::size_t i = 0; i < corpus.sets[s].candidates.size(); ++i) {
      const auto& before = corpus.sets[s].candidates[i];
      const auto& after = r.corpus.sets[s].candidates[i];
      if (before.status != CandidateStatus::unreviewed) EXPECT_EQ(before, after);
    }
  validate(r.corpus);
  EXPECT_EQ(r.corpus.sets[3].candidates[2].reject_reason, RejectReason::repetition);
  // Quoting one sentence of a longer original is not an exact quote.
  EXPECT_EQ(r.corpus.sets[5].candidates[1].status, CandidateStatus::unreviewed);
  EXPECT_EQ(r.corpus.sets[7].candidates[0].reject_reason, RejectReason::longer_than_original);
}

TEST(Filters, Idempotent) {
  const auto corpus = load_corpus(sample("legal_sample.json"), CorpusFormat::canonical);
  const auto once = apply_quality_filters(corpus);
  const auto twice = apply_quality_filters(once.corpus);
  EXPECT_EQ(twice.report, once.report);
  EXPECT_EQ(twice.corpus, once.corpus);
}

TEST(Filters, ExactQuoteImpliesUnitWordRatio) {
  std::mt19937 rng(5);
  const std::vector<std::string> words{"we", "may", "share", "your", "data", "with", "partners"};
  for (int trial = 0; trial < 200; ++trial) {
    std::string original;
    for (int i = 0; i < 6; ++i) original += words[rng() % words.size()] + " ";
    std::string cand = rng() % 2 ? original : words[rng() % words.size()];
    Corpus c;
    c.sets.push_back(make_set("x", "Acme", original, {cand + (rng() % 2 ? "." : "")}));
    const auto r = apply_quality_filters(c);
    const auto& out = r.corpus.sets[0].candidates[0];
    if (out.reject_reason == RejectReason::exact_quote) EXPECT_EQ(count_words(out.text), count_words(original));
  }
}

TEST(Templatic, ServiceNameSubstitution) {
  Corpus c;
  c.sets.push_back(make_set("a", "Google", "Original A text here.", {"Google shares data with third parties."}));
  c.sets.push_back(make_set("b", "Facebook", "Original B text here.", {"FACEBOOK shares data with third parties"}));
  c.sets.push_back(make_set("c", "Acme", "Original C text here.", {"Acme deletes data."}));
  const auto r = detect_templatic(c);
  EXPECT_EQ(r.flagged, (std::set<CandidateRef>{{"a", 0}, {"b", 0}}));
  EXPECT_TRUE(r.corpus.sets[0].candidates[0].templatic);
  EXPECT_FALSE(r.corpus.sets[2].candidates[0].templatic);
}

TEST(Templatic, AliasesLongestFirstAndWordBoundaries) {
  Corpus c;
  auto a = make_set("a", "Quill", "Original.", {"Quill Notes can read your files."});
  a.source.aliases = {"Quill Notes"};
  auto b = make_set("b", "Birch", "Original.", {"Birch can read your files."});
  auto d = make_set("d", "Ace", "Original.", {"Acetone can read your files."});
  c.sets = {a, b, d};
  const auto r = detect_templatic(c);
  EXPECT_EQ(r.flagged, (std::set<CandidateRef>{{"a", 0}, {"b", 0}}));
}

TEST(Templatic, SingleSetHasNoFlags) {
  Corpus c;
  c.sets.push_back(make_set("a", "Acme", "Original.", {"Acme shares data.", "Acme shares data."}));
  EXPECT_TRUE(detect_templatic(c).flagged.empty());
}

TEST(Templatic, Symmetric) {
  std::mt19937 rng(9);
  const std::vector<std::string> names{"Acme", "Birch", "Cedar", "Dune"};
  const std::vector<std::string> tails{" shares data.", " tracks you.", " can delete content.", " keeps logs."};
  for (int trial = 0; trial < 100; ++trial) {
    Corpus c;
    for (int i = 0; i < 5; ++i) {
      const auto& name = names[rng() % names.size()];
      c.sets.push_back(make_set("s" + std::to_string(i), name, "Original text.",
                                {name + tails[rng() % tails.size()], tails[rng() % tails.size()]}));
    }
    const auto r = detect_templatic(c);
    for (std::size_t s = 0; s < c.sets.size(); ++s)
      for (std::size_t i = 0; i < c.sets[s].candidates.size(); ++i) {
        const auto key = template_key(c.sets[s].candidates[i].text, c.sets[s].source);
        bool partner = false;
        for (std::size_t t = 0; t < c.sets.size(); ++t)
          for (const auto& other : c.sets[t].candidates)
            partner = partner || (t != s && template_key(other.text, c.sets[t].source) == key);
        EXPECT_EQ(r.flagged.count({c.sets[s].uid, i}) == 1, partner);
      }
  }
}

TEST(Counts, SampleAndEmpty) {
  const auto empty = corpus_counts(Corpus{});
  EXPECT_EQ(empty.sets, 0u);
  EXPECT_EQ(empty.rejected_total(), 0u);

  const auto corpus = detect_templatic(load_corpus(sample("legal_sample.json"), CorpusFormat::canonical)).corpus;
  const auto c = corpus_counts(corpus);
  EXPECT_EQ(c.sets, 8u);
  EXPECT_EQ(c.documents, 7u);
  EXPECT_EQ(c.companies, 6u);
  EXPECT_EQ(c.rejected.at(RejectReason::opinionated), 1u);
  EXPECT_EQ(c.rejected.at(RejectReason::topic_only), 1u);
  EXPECT_EQ(c.sets_with_accepted, 7u);
  EXPECT_EQ(c.templatic_best, 2u);
  EXPECT_EQ(c.unique_templatic_best, 1u);
}

TEST(Reference, DesignatedSummaryFallback) {
  auto s = make_set("a", "Acme", "Original.", {"one", "two"});
  EXPECT_EQ(reference_summary(s), nullptr);
  s.candidates[1].status = CandidateStatus::accepted;
  EXPECT_EQ(reference_summary(s)->text, "two");
  s.candidates[0].status = CandidateStatus::accepted;
  s.best_index = 1;
  EXPECT_EQ(reference_summary(s)->text, "two");
}
