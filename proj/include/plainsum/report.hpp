#pragma once

// Tabular outputs (CSV or JSON lines) for every corpus analysis.

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "plainsum/corpus.hpp"
#include "plainsum/error.hpp"
#include "plainsum/readability.hpp"
#include "plainsum/rouge.hpp"
#include "plainsum/stats.hpp"
#include "plainsum/summarizers.hpp"

namespace plainsum {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

enum class OutputFormat { csv, jsonl };

inline std::string fmt(double x, int decimals = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_table(std::ostream& out, const Table& table, OutputFormat format = OutputFormat::csv) {
  if (format == OutputFormat::csv) {
    const auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
      out << '\n';
    };
    line(table.header);
    for (const auto& r : table.rows) line(r);
    return;
  }
  for (const auto& r : table.rows) {
    nlohmann::ordered_json j;
    for (std::size_t i = 0; i < table.header.size() && i < r.size(); ++i) j[table.header[i]] = r[i];
    out << j.dump() << '\n';
  }
}

inline void write_table(const std::string& path, const Table& table, OutputFormat format = OutputFormat::csv) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  write_table(out, table, format);
  if (!out) throw IoError("error writing " + path);
}

inline Table novelty_table(const Corpus& corpus, std::size_t max_n = 4) {
  Table t{{"n", "novel_fraction"}, {}};
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto f = novel_ngram_fraction(corpus, n);
    t.rows.push_back({std::to_string(n), f ? fmt(*f, 6) : ""});
  }
  return t;
}

inline Table lengths_table(const CorpusStats& s) {
  Table t{{"quantity", "mean", "std"}, {}};
  const auto row = [&](const char* name, const MeanStd& m) { t.rows.push_back({name, fmt(m.mean), fmt(m.std)}); };
  row("original_words", s.original_words);
  row("original_sentences", s.original_sentences);
  row("summary_words", s.summary_words);
  row("summary_sentences", s.summary_sentences);
  row("compression_ratio", s.compression);
  return t;
}

inline Table ratios_table(const CorpusStats& s) {
  Table t{{"uid", "site", "original_words", "summary_words", "ratio"}, {}};
  for (const auto& r : s.per_set)
    t.rows.push_back({r.uid, std::string(to_string(r.site)), std::to_string(r.original_words),
                      std::to_string(r.summary_words), fmt(r.ratio(), 6)});
  return t;
}

inline Table logodds_table(const std::vector<WordAssociation>& assoc) {
  Table t{{"word", "score", "side"}, {}};
  for (const auto& a : assoc) t.rows.push_back({a.word, fmt(a.log_odds, 6), std::string(to_string(a.side))});
  return t;
}

inline Table wordset_table(const WordSetPair& pair) {
  Table t{{"rank", "summary_word", "original_word"}, {}};
  for (std::size_t i = 0; i < pair.k; ++i)
    t.rows.push_back({std::to_string(i + 1), pair.summary_words[i], pair.original_words[i]});
  return t;
}

inline Table wordset_gap_table(const WordSetGap& gap) {
  return {{"index", "gap_years"}, {{"ARI", fmt(gap.ari)}, {"F-K", fmt(gap.fk)}}};
}

inline Table readability_table(const ReadabilityReport& ref, const ReadabilityReport& orig) {
  Table t{{"", "F-K", "C-L", "SMOG", "ARI", "Avg"}, {}};
  for (const auto& [name, r] : {std::pair{"Ref", ref}, std::pair{"Orig", orig}})
    t.rows.push_back({name, fmt(r.fk, 2), fmt(r.cl, 2), fmt(r.smog, 2), fmt(r.ari, 2), fmt(r.average, 2)});
  return t;
}

enum class RougeMeasure { f1, recall, precision };

inline std::optional<RougeMeasure> parse_measure(std::string_view s) {
  if (s == "f1") return RougeMeasure::f1;
  if (s == "recall") return RougeMeasure::recall;
  if (s == "precision") return RougeMeasure::precision;
  return std::nullopt;
}

inline double pick(const RougeScore& s, RougeMeasure m) {
  return m == RougeMeasure::f1 ? s.f1 : m == RougeMeasure::recall ? s.recall : s.precision;
}

/// Systems as rows, (group x R-1/R-2/R-L) as columns, scores x 100.
inline Table evaluation_table(const EvaluationTable& e, RougeMeasure measure = RougeMeasure::f1) {
  Table t;
  t.header.push_back("system");
  for (const auto& g : e.groups)
    for (const char* m : {"R-1", "R-2", "R-L"}) t.header.push_back(g + " " + m);
  for (auto system : e.systems) {
    std::vector<std::string> row{std::string(to_string(system))};
    for (const auto& g : e.groups) {
      const auto& r = e.at(system, g);
      for (const auto* s : {&r.mean.r1, &r.mean.r2, &r.mean.rl}) row.push_back(fmt(100.0 * pick(*s, measure), 2));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline Table filter_table(const FilterReport& report) {
  Table t{{"uid", "candidate", "reason"}, {}};
  for (const auto& d : report.rejections)
    t.rows.push_back({d.uid, std::to_string(d.candidate), std::string(to_string(d.reason))});
  return t;
}

inline Table counts_table(const CorpusCounts& c) {
  Table t{{"quantity", "count"}, {}};
  const auto row = [&](std::string name, std::size_t n) { t.rows.push_back({std::move(name), std::to_string(n)}); };
  row("sets", c.sets);
  row("documents", c.documents);
  row("companies", c.companies);
  row("candidates", c.candidates);
  row("accepted", c.accepted);
  row("unreviewed", c.unreviewed);
  for (const auto& [reason, n] : c.rejected) row("rejected_" + std::string(to_string(reason)), n);
  row("rejected_total", c.rejected_total());
  row("sets_with_accepted", c.sets_with_accepted);
  row("templatic_candidates", c.templatic);
  row("templatic_best", c.templatic_best);
  row("unique_templatic_best", c.unique_templatic_best);
  return t;
}

inline std::string join_indices(const std::vector<std::size_t>& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

}  // namespace plainsum
