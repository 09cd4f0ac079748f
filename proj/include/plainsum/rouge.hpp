#pragma once

// ROUGE-1/2/L and corpus-level evaluation of the extractive baselines.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plainsum/corpus.hpp"
#include "plainsum/error.hpp"
#include "plainsum/summarizers.hpp"
#include "plainsum/textproc.hpp"

namespace plainsum {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool undefined = false;  // candidate or reference too short for the metric

  static RougeScore from_counts(std::size_t matches, std::size_t candidate_total, std::size_t reference_total) {
    RougeScore s;
    if (candidate_total == 0 || reference_total == 0) {
      s.undefined = true;
      return s;
    }
    s.precision = static_cast<double>(matches) / static_cast<double>(candidate_total);
    s.recall = static_cast<double>(matches) / static_cast<double>(reference_total);
    s.f1 = s.precision + s.recall > 0.0 ? 2.0 * s.precision * s.recall / (s.precision + s.recall) : 0.0;
    return s;
  }
};

/// Clipped n-gram overlap.
inline RougeScore rouge_n(const std::vector<std::string>& candidate, const std::vector<std::string>& reference,
                          std::size_t n) {
  const auto c = ngrams(candidate, n);
  const auto r = ngrams(reference, n);
  std::size_t matches = 0;
  for (const auto& [gram, count] : c)
    if (auto it = r.find(gram); it != r.end()) matches += std::min(count, it->second);
  return RougeScore::from_counts(matches, total(c), total(r));
}

inline std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

/// Longest-common-subsequence overlap with each summary as one sequence.
inline RougeScore rouge_l(const std::vector<std::string>& candidate, const std::vector<std::string>& reference) {
  return RougeScore::from_counts(lcs_length(candidate, reference), candidate.size(), reference.size());
}

struct RougeTriple {
  RougeScore r1, r2, rl;
};

inline RougeTriple rouge_all(const std::vector<std::string>& candidate, const std::vector<std::string>& reference) {
  return {rouge_n(candidate, reference, 1), rouge_n(candidate, reference, 2), rouge_l(candidate, reference)};
}

// ---------------------------------------------------------------------------
// Corpus evaluation

inline constexpr std::size_t kDefaultRandomRuns = 10;

struct EvalConfig {
  PreprocessConfig preprocess = PreprocessConfig::baseline();
  std::optional<Budget> budget;  // empty: mean reference length of the corpus
  std::size_t runs = kDefaultRandomRuns;
  std::uint64_t seed = 0;
};

/// A set ready for scoring: its preprocessed original and reference tokens.
struct PreparedSet {
  std::string uid;
  Site site = Site::other;
  TokenizedDocument document;
  std::vector<std::string> reference;
};

/// Sets whose original or reference is empty after preprocessing are
/// skipped with a warning.
inline std::vector<PreparedSet> prepare_sets(const Corpus& corpus, const PreprocessConfig& config,
                                             Diagnostics* diag = nullptr) {
  std::vector<PreparedSet> out;
  for (const auto* set : evaluable_sets(corpus)) {
    PreparedSet p;
    p.uid = set->uid;
    p.site = set->source.site;
    p.document = preprocess(set->original_text, config);
    const auto& ref = reference_summary(*set)->text;
    if (!detail::only_whitespace(ref)) p.reference = preprocess(ref, config).terms();
    if (p.document.degenerate() || p.reference.empty()) {
      if (diag) diag->warn("set '" + set->uid + "': no content after preprocessing, skipped");
      continue;
    }
    out.push_back(std::move(p));
  }
  return out;
}

struct SetEvaluation {
  std::string uid;
  Site site = Site::other;
  RougeTriple scores;         // averaged over runs for Random-K
  ExtractiveSummary summary;  // first run
};

inline RougeTriple mean_triple(const std::vector<RougeTriple>& xs) {
  RougeTriple m;
  if (xs.empty()) return m;
  const auto add = [](RougeScore& acc, const RougeScore& s) {
    acc.precision += s.precision;
    acc.recall += s.recall;
    acc.f1 += s.f1;
  };
  for (const auto& x : xs) {
    add(m.r1, x.r1);
    add(m.r2, x.r2);
    add(m.rl, x.rl);
  }
  const double n = static_cast<double>(xs.size());
  for (auto* s : {&m.r1, &m.r2, &m.rl}) {
    s->precision /= n;
    s->recall /= n;
    s->f1 /= n;
  }
  return m;
}

inline std::vector<SetEvaluation> evaluate_sets(System system, const std::vector<PreparedSet>& sets,
                                                const Budget& budget, std::size_t runs = kDefaultRandomRuns,
                                                std::uint64_t seed = 0) {
  const std::size_t n_runs = system == System::randomk ? std::max<std::size_t>(1, runs) : 1;
  std::vector<SetEvaluation> out;
  out.reserve(sets.size());
  for (const auto& set : sets) {
    SetEvaluation e;
    e.uid = set.uid;
    e.site = set.site;
    std::vector<RougeTriple> per_run;
    for (std::size_t r = 0; r < n_runs; ++r) {
      auto summary = summarize(system, set.document, budget, seed, r, set.uid);
      per_run.push_back(rouge_all(summary_terms(summary, set.document), set.reference));
      if (r == 0) e.summary = std::move(summary);
    }
    e.scores = mean_triple(per_run);
    out.push_back(std::move(e));
  }
  return out;
}

inline std::string_view group_name(Site s) {
  switch (s) {
    case Site::tldrlegal: return "TLDRLegal";
    case Site::tosdr: return "TOS;DR";
    case Site::other: return "Other";
  }
  return "Other";
}

inline constexpr std::string_view kCombinedGroup = "Combined";

struct EvaluationRow {
  System system = System::textrank;
  std::string group;
  std::size_t sets = 0;
  RougeTriple mean;  // macro average over sets
};

struct EvaluationTable {
  std::string corpus;
  Budget budget;
  std::vector<System> systems;
  std::vector<std::string> groups;  // per site in corpus order of Site, then Combined
  std::vector<EvaluationRow> rows;

  const EvaluationRow& at(System system, std::string_view group) const {
    for (const auto& r : rows)
      if (r.system == system && r.group == group) return r;
    throw ArgumentError("no evaluation row for " + std::string(to_string(system)) + " / " + std::string(group));
  }
};

/// Scores every system on every set, then averages per site and overall.
inline EvaluationTable evaluate(const Corpus& corpus, const std::vector<System>& systems, const EvalConfig& config = {},
                                Diagnostics* diag = nullptr) {
  const auto sets = prepare_sets(corpus, config.preprocess, diag);
  if (sets.empty()) throw EmptyInputError("no summary sets to evaluate");
  EvaluationTable table;
  table.corpus = corpus.name;
  table.budget = config.budget ? *config.budget : auto_budget(corpus);
  table.systems = systems;

  std::vector<Site> sites;
  for (auto site : {Site::tldrlegal, Site::tosdr, Site::other})
    for (const auto& s : sets)
      if (s.site == site) {
        sites.push_back(site);
        break;
      }
  for (auto site : sites) table.groups.emplace_back(group_name(site));
  table.groups.emplace_back(kCombinedGroup);

  for (auto system : systems) {
    const auto results = evaluate_sets(system, sets, table.budget, config.runs, config.seed);
    for (auto site : sites) {
      std::vector<RougeTriple> xs;
      for (const auto& r : results)
        if (r.site == site) xs.push_back(r.scores);
      table.rows.push_back({system, std::string(group_name(site)), xs.size(), mean_triple(xs)});
    }
    std::vector<RougeTriple> all;
    for (const auto& r : results) all.push_back(r.scores);
    table.rows.push_back({system, std::string(kCombinedGroup), all.size(), mean_triple(all)});
  }
  return table;
}

inline EvaluationRow evaluate(System system, const Corpus& corpus, const EvalConfig& config = {},
                              Diagnostics* diag = nullptr) {
  return evaluate(corpus, {system}, config, diag).at(system, kCombinedGroup);
}

}  // namespace plainsum
