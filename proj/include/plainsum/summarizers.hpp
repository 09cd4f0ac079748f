#pragma once

// Unsupervised extractive baselines sharing one word-budget rule.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "plainsum/corpus.hpp"
#include "plainsum/error.hpp"
#include "plainsum/pagerank.hpp"
#include "plainsum/textproc.hpp"

namespace plainsum {

struct Budget {
  enum class Mode { automatic, fixed };

  std::size_t target_words = 1;
  Mode mode = Mode::fixed;

  static Budget fixed(std::size_t words) {
    if (words == 0) throw ArgumentError("budget must be at least one word");
    return {words, Mode::fixed};
  }
};

/// Rounded mean word count of the reference summaries.
inline Budget auto_budget(const Corpus& corpus) {
  const auto sets = evaluable_sets(corpus);
  if (sets.empty()) throw EmptyInputError("corpus has no summary sets with a reference summary");
  std::size_t words = 0;
  for (const auto* s : sets) words += count_words(reference_summary(*s)->text);
  const auto mean = static_cast<double>(words) / static_cast<double>(sets.size());
  return {std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(mean))), Budget::Mode::automatic};
}

struct ExtractiveSummary {
  std::vector<std::size_t> selected;  // positions in doc.sentences, ascending
  std::string text;
  std::size_t word_count = 0;

  friend bool operator==(const ExtractiveSummary&, const ExtractiveSummary&) = default;
};

inline ExtractiveSummary make_summary(std::vector<std::size_t> selected, const TokenizedDocument& doc) {
  std::sort(selected.begin(), selected.end());
  ExtractiveSummary out;
  out.selected = std::move(selected);
  for (auto i : out.selected) {
    if (!out.text.empty()) out.text += ' ';
    out.text += doc.sentences.at(i).text;
    out.word_count += doc.sentences[i].word_count;
  }
  return out;
}

/// Normalized tokens of the selected sentences, flattened in document order.
inline std::vector<std::string> summary_terms(const ExtractiveSummary& summary, const TokenizedDocument& doc) {
  std::vector<std::string> out;
  for (auto i : summary.selected)
    for (const auto& t : doc.sentences.at(i).tokens) out.push_back(t.lemma);
  return out;
}

/// Lowercased words without punctuation, each sentence closed by a period
/// when its source ended with one.
inline std::string display_form(const ExtractiveSummary& summary, const TokenizedDocument& doc) {
  std::string out;
  for (auto i : summary.selected) {
    const auto& text = doc.sentences.at(i).text;
    std::string sentence;
    for (const auto& t : tokenize(text)) {
      if (t.is_punct) continue;
      if (!sentence.empty()) sentence += ' ';
      sentence += detail::lowercase(t.surface);
    }
    if (sentence.empty()) continue;
    if (!text.empty() && text.back() == '.') sentence += '.';
    if (!out.empty()) out += ' ';
    out += sentence;
  }
  return out;
}

namespace detail {

inline std::size_t budget_distance(std::size_t words, std::size_t target) {
  return words > target ? words - target : target - words;
}

/// Whether adding a sentence of `extra` words to `current` words keeps the
/// summary at least as close to the target as stopping without it.
inline bool closer_with(std::size_t current, std::size_t extra, std::size_t target) {
  return budget_distance(current + extra, target) <= budget_distance(current, target);
}

}  // namespace detail

/// Takes sentences in ranked order until the next one would overshoot the
/// target; that sentence is kept iff the result is at least as close to the
/// target, then selection stops. At least one sentence is always kept.
inline ExtractiveSummary apply_budget(const std::vector<std::size_t>& ranked, const TokenizedDocument& doc,
                                      const Budget& budget) {
  if (ranked.empty()) throw ArgumentError("no candidate sentences to select from");
  std::vector<std::size_t> chosen;
  std::size_t words = 0;
  for (auto idx : ranked) {
    const auto len = doc.sentences.at(idx).word_count;
    if (words + len <= budget.target_words) {
      chosen.push_back(idx);
      words += len;
      continue;
    }
    if (chosen.empty() || detail::closer_with(words, len, budget.target_words)) chosen.push_back(idx);
    break;
  }
  return make_summary(std::move(chosen), doc);
}

inline void require_sentences(const TokenizedDocument& doc) {
  if (doc.degenerate()) throw EmptyInputError("document has no content after preprocessing");
}

// ---------------------------------------------------------------------------
// TextRank

/// Shared normalized word types over the sum of log sentence lengths; zero
/// when either sentence has a single token.
inline double sentence_similarity(const Sentence& a, const Sentence& b) {
  const auto la = a.tokens.size();
  const auto lb = b.tokens.size();
  if (la <= 1 || lb <= 1) return 0.0;
  std::set<std::string> ta, tb;
  for (const auto& t : a.tokens) ta.insert(t.lemma);
  for (const auto& t : b.tokens) tb.insert(t.lemma);
  std::size_t shared = 0;
  for (const auto& w : ta) shared += tb.count(w);
  return static_cast<double>(shared) / (std::log(static_cast<double>(la)) + std::log(static_cast<double>(lb)));
}

inline Matrix similarity_matrix(const TokenizedDocument& doc) {
  const auto n = doc.sentences.size();
  Matrix w(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) w[i][j] = w[j][i] = sentence_similarity(doc.sentences[i], doc.sentences[j]);
  return w;
}

inline constexpr double kTextRankDamping = 0.85;
inline constexpr double kTextRankTolerance = 1e-6;
inline constexpr std::size_t kTextRankMaxIterations = 100;

inline std::vector<double> textrank_scores(const TokenizedDocument& doc) {
  return pagerank(similarity_matrix(doc), kTextRankDamping, kTextRankTolerance, kTextRankMaxIterations).scores;
}

/// Indices by descending score; scores equal at 1e-10 resolution tie and fall back to
/// document order.
inline std::vector<std::size_t> rank_by_score(const std::vector<double>& scores) {
  std::vector<long long> key(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) key[i] = std::llround(scores[i] * 1e10);
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return key[a] > key[b]; });
  return order;
}

inline ExtractiveSummary textrank(const TokenizedDocument& doc, const Budget& budget) {
  require_sentences(doc);
  return apply_budget(rank_by_score(textrank_scores(doc)), doc, budget);
}

// ---------------------------------------------------------------------------
// KLSum

inline constexpr double kKlSmoothing = 1e-3;

/// KL(P_doc || Q_summary) where Q is add-epsilon smoothed over the document
/// vocabulary.
class KlObjective {
 public:
  explicit KlObjective(const TokenizedDocument& doc, double epsilon = kKlSmoothing) : epsilon_(epsilon) {
    std::map<std::string, std::size_t> index;
    sentence_terms_.resize(doc.sentences.size());
    for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
      for (const auto& t : doc.sentences[s].tokens) {
        auto [it, inserted] = index.emplace(t.lemma, index.size());
        if (inserted) doc_counts_.push_back(0);
        ++doc_counts_[it->second];
        sentence_terms_[s].push_back(it->second);
        ++doc_total_;
      }
    }
  }

  double operator()(const std::vector<std::size_t>& selected) const {
    std::vector<double> counts(doc_counts_.size(), 0.0);
    double n = 0.0;
    for (auto s : selected)
      for (auto w : sentence_terms_.at(s)) {
        counts[w] += 1.0;
        n += 1.0;
      }
    const double v = static_cast<double>(doc_counts_.size());
    const double total = static_cast<double>(doc_total_);
    double kl = 0.0;
    for (std::size_t w = 0; w < doc_counts_.size(); ++w) {
      const double p = static_cast<double>(doc_counts_[w]) / total;
      const double q = (counts[w] + epsilon_) / (n + epsilon_ * v);
      kl += p * std::log(p / q);
    }
    return kl;
  }

  std::size_t sentence_count() const noexcept { return sentence_terms_.size(); }

 private:
  double epsilon_;
  std::vector<std::size_t> doc_counts_;
  std::size_t doc_total_ = 0;
  std::vector<std::vector<std::size_t>> sentence_terms_;
};

struct KlSumRun {
  ExtractiveSummary summary;
  std::vector<std::size_t> picks;  // in selection order
  std::vector<double> objective;   // KL after each pick
};

/// Greedy selection. The first pick is always taken; later picks must lower
/// the divergence and pass the budget rule. Ties go to the earlier sentence.
inline KlSumRun klsum_run(const TokenizedDocument& doc, const Budget& budget,
                          std::size_t max_picks = std::numeric_limits<std::size_t>::max()) {
  require_sentences(doc);
  const KlObjective kl(doc);
  KlSumRun run;
  std::vector<bool> used(doc.sentences.size(), false);
  std::size_t words = 0;
  while (run.picks.size() < std::min(max_picks, doc.sentences.size())) {
    std::optional<std::size_t> best;
    double best_kl = 0.0;
    for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
      if (used[s]) continue;
      auto trial = run.picks;
      trial.push_back(s);
      const double value = kl(trial);
      if (!best || value < best_kl) {
        best = s;
        best_kl = value;
      }
    }
    if (!best) break;
    const bool first = run.picks.empty();
    if (!first && best_kl >= run.objective.back()) break;
    const auto len = doc.sentences[*best].word_count;
    const bool overshoots = words + len > budget.target_words;
    if (!first && overshoots && !detail::closer_with(words, len, budget.target_words)) break;
    used[*best] = true;
    run.picks.push_back(*best);
    run.objective.push_back(best_kl);
    words += len;
    if (overshoots) break;
  }
  run.summary = make_summary(run.picks, doc);
  return run;
}

inline ExtractiveSummary klsum(const TokenizedDocument& doc, const Budget& budget) {
  return klsum_run(doc, budget).summary;
}

// ---------------------------------------------------------------------------
// Lead and random baselines

inline ExtractiveSummary lead1(const TokenizedDocument& doc) {
  require_sentences(doc);
  return make_summary({0}, doc);
}

inline ExtractiveSummary leadk(const TokenizedDocument& doc, const Budget& budget) {
  require_sentences(doc);
  std::vector<std::size_t> order(doc.sentences.size());
  std::iota(order.begin(), order.end(), 0);
  return apply_budget(order, doc, budget);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Independent generator for one (base seed, run, document) triple.
inline std::mt19937_64 derive_rng(std::uint64_t base_seed, std::uint64_t run, std::string_view document_key) {
  const auto h = fnv1a(document_key);
  std::seed_seq seq{static_cast<std::uint32_t>(base_seed), static_cast<std::uint32_t>(base_seed >> 32),
                    static_cast<std::uint32_t>(run), static_cast<std::uint32_t>(run >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

/// Uniform integer in [0, bound) by rejection; identical across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

inline ExtractiveSummary randomk(const TokenizedDocument& doc, const Budget& budget, std::mt19937_64& rng) {
  require_sentences(doc);
  std::vector<std::size_t> order(doc.sentences.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const auto j = i + static_cast<std::size_t>(uniform_below(rng, order.size() - i));
    std::swap(order[i], order[j]);
  }
  return apply_budget(order, doc, budget);
}

inline ExtractiveSummary randomk(const TokenizedDocument& doc, const Budget& budget, std::uint64_t seed) {
  std::mt19937_64 rng = derive_rng(seed, 0, "");
  return randomk(doc, budget, rng);
}

// ---------------------------------------------------------------------------

enum class System { textrank, klsum, lead1, leadk, randomk };

inline constexpr std::array<System, 5> kAllSystems = {System::textrank, System::klsum, System::lead1, System::leadk,
                                                      System::randomk};

inline std::string_view to_string(System s) {
  switch (s) {
    case System::textrank: return "TextRank";
    case System::klsum: return "KLSum";
    case System::lead1: return "Lead-1";
    case System::leadk: return "Lead-K";
    case System::randomk: return "Random-K";
  }
  return "";
}

/// Accepts display names and lowercase ids ("textrank", "lead-k", "leadk").
inline std::optional<System> parse_system(std::string_view s) {
  std::string key;
  for (char c : s)
    if (c != '-' && c != '_') key += static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
  if (key == "textrank") return System::textrank;
  if (key == "klsum") return System::klsum;
  if (key == "lead1") return System::lead1;
  if (key == "leadk") return System::leadk;
  if (key == "randomk") return System::randomk;
  return std::nullopt;
}

/// Runs one system; the random generator is derived from (seed, run, key).
inline ExtractiveSummary summarize(System system, const TokenizedDocument& doc, const Budget& budget,
                                   std::uint64_t seed = 0, std::uint64_t run = 0, std::string_view key = "") {
  switch (system) {
    case System::textrank: return textrank(doc, budget);
    case System::klsum: return klsum(doc, budget);
    case System::lead1: return lead1(doc);
    case System::leadk: return leadk(doc, budget);
    case System::randomk: {
      auto rng = derive_rng(seed, run, key);
      return randomk(doc, budget, rng);
    }
  }
  throw ArgumentError("unknown system");
}

}  // namespace plainsum
