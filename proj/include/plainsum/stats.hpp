#pragma once

// Abstraction, compression, length and lexical-association statistics over
// the reference summaries of a corpus.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plainsum/corpus.hpp"
#include "plainsum/error.hpp"
#include "plainsum/textproc.hpp"

namespace plainsum {

/// Lowercased surface tokens without punctuation.
inline constexpr PreprocessConfig kNoveltyConfig{true, false, false, true};

struct NoveltyCounts {
  std::size_t novel = 0;
  std::size_t total = 0;  // summary n-grams, with multiplicity

  std::optional<double> fraction() const {
    if (total == 0) return std::nullopt;
    return static_cast<double>(novel) / static_cast<double>(total);
  }
};

/// Summary n-grams (with multiplicity) that never occur in the original.
inline NoveltyCounts novel_ngrams(std::string_view summary, std::string_view original, std::size_t n,
                                  const PreprocessConfig& config = kNoveltyConfig) {
  NoveltyCounts out;
  const auto s = ngrams(preprocess(summary, config), n);
  const auto d = ngrams(preprocess(original, config), n);
  for (const auto& [gram, c] : s) {
    out.total += c;
    if (!d.count(gram)) out.novel += c;
  }
  return out;
}

/// Micro-averaged novel n-gram fraction over the reference summaries.
/// Empty when no summary has n tokens.
inline std::optional<double> novel_ngram_fraction(const Corpus& corpus, std::size_t n,
                                                  const PreprocessConfig& config = kNoveltyConfig) {
  const auto sets = evaluable_sets(corpus);
  if (sets.empty()) throw EmptyInputError("corpus has no summary sets with a reference summary");
  NoveltyCounts sum;
  for (const auto* set : sets) {
    const auto c = novel_ngrams(reference_summary(*set)->text, set->original_text, n, config);
    sum.novel += c.novel;
    sum.total += c.total;
  }
  return sum.fraction();
}

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
};

inline MeanStd mean_std(const std::vector<double>& xs) {
  if (xs.empty()) throw UndefinedStatisticError("mean of an empty sample");
  // Sorting first makes the sums independent of input order.
  auto sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  double sum = 0.0;
  for (double x : sorted) sum += x;
  const double mean = sum / static_cast<double>(sorted.size());
  double ss = 0.0;
  for (double x : sorted) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / static_cast<double>(sorted.size()))};
}

struct SetLengths {
  std::string uid;
  Site site = Site::other;
  std::size_t original_words = 0;
  std::size_t original_sentences = 0;
  std::size_t summary_words = 0;
  std::size_t summary_sentences = 0;

  double ratio() const { return static_cast<double>(summary_words) / static_cast<double>(original_words); }
};

struct CorpusStats {
  std::map<std::size_t, double> novel_ngram_fraction;  // filled by corpus_stats
  MeanStd compression;
  MeanStd original_words;
  MeanStd original_sentences;
  MeanStd summary_words;
  MeanStd summary_sentences;
  std::vector<SetLengths> per_set;
};

inline std::size_t count_sentences(std::string_view text) {
  if (detail::only_whitespace(text)) return 0;
  std::size_t n = 0;
  for (const auto& span : segment_sentences(text))
    if (count_words(text.substr(span.begin, span.end - span.begin)) > 0) ++n;
  return n;
}

/// Raw word and sentence counts of every set with a reference summary.
/// Sets whose original has no words are skipped with a warning.
inline std::vector<SetLengths> set_lengths(const Corpus& corpus, Diagnostics* diag = nullptr) {
  std::vector<SetLengths> out;
  for (const auto* set : evaluable_sets(corpus)) {
    SetLengths row;
    row.uid = set->uid;
    row.site = set->source.site;
    row.original_words = count_words(set->original_text);
    if (row.original_words == 0) {
      if (diag) diag->warn("set '" + set->uid + "': original has no words, skipped");
      continue;
    }
    const auto& summary = reference_summary(*set)->text;
    row.original_sentences = count_sentences(set->original_text);
    row.summary_words = count_words(summary);
    row.summary_sentences = count_sentences(summary);
    out.push_back(std::move(row));
  }
  return out;
}

/// Compression ratio and length distributions. Novelty is left empty.
inline CorpusStats compression_stats(const Corpus& corpus, Diagnostics* diag = nullptr) {
  CorpusStats stats;
  stats.per_set = set_lengths(corpus, diag);
  if (stats.per_set.empty()) throw EmptyInputError("corpus has no usable summary sets");
  std::vector<double> ratio, ow, os, sw, ss;
  for (const auto& r : stats.per_set) {
    ratio.push_back(r.ratio());
    ow.push_back(static_cast<double>(r.original_words));
    os.push_back(static_cast<double>(r.original_sentences));
    sw.push_back(static_cast<double>(r.summary_words));
    ss.push_back(static_cast<double>(r.summary_sentences));
  }
  stats.compression = mean_std(ratio);
  stats.original_words = mean_std(ow);
  stats.original_sentences = mean_std(os);
  stats.summary_words = mean_std(sw);
  stats.summary_sentences = mean_std(ss);
  return stats;
}

inline CorpusStats corpus_stats(const Corpus& corpus, std::size_t max_n = 4, Diagnostics* diag = nullptr) {
  auto stats = compression_stats(corpus, diag);
  for (std::size_t n = 1; n <= max_n; ++n)
    if (auto f = novel_ngram_fraction(corpus, n)) stats.novel_ngram_fraction[n] = *f;
  return stats;
}

// ---------------------------------------------------------------------------
// Log-odds association

enum class AssociationSide { summary, original };

inline std::string_view to_string(AssociationSide s) {
  return s == AssociationSide::summary ? "summary" : "original";
}

struct WordAssociation {
  std::string word;
  double log_odds = 0.0;
  AssociationSide side = AssociationSide::original;
};

struct WordSetPair {
  std::vector<std::string> summary_words;   // most summary-associated first
  std::vector<std::string> original_words;  // most original-associated first
  std::size_t k = 0;
};

using TermCounts = std::map<std::string, std::size_t>;

inline constexpr std::size_t kDefaultMinCount = 3;
inline constexpr double kDefaultSmoothing = 1.0;

/// Smoothed log ratio of P(w|S) to P(w|D) for every word whose combined
/// count reaches min_count, sorted by score descending then word.
inline std::vector<WordAssociation> log_odds_ratios(const TermCounts& summary_counts, const TermCounts& original_counts,
                                                    std::size_t min_count = kDefaultMinCount,
                                                    double smoothing = kDefaultSmoothing) {
  if (smoothing <= 0.0) throw ArgumentError("smoothing must be positive");
  std::map<std::string, std::pair<std::size_t, std::size_t>> joint;
  std::size_t ns = 0, nd = 0;
  for (const auto& [w, c] : summary_counts) {
    joint[w].first += c;
    ns += c;
  }
  for (const auto& [w, c] : original_counts) {
    joint[w].second += c;
    nd += c;
  }
  if (joint.empty()) throw EmptyInputError("empty vocabulary");
  const double v = static_cast<double>(joint.size());
  const double denom_s = static_cast<double>(ns) + smoothing * v;
  const double denom_d = static_cast<double>(nd) + smoothing * v;

  std::vector<WordAssociation> out;
  for (const auto& [w, c] : joint) {
    if (c.first + c.second < min_count) continue;
    const double score = std::log((static_cast<double>(c.first) + smoothing) / denom_s) -
                         std::log((static_cast<double>(c.second) + smoothing) / denom_d);
    out.push_back({w, score, score > 0.0 ? AssociationSide::summary : AssociationSide::original});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.log_odds != b.log_odds ? a.log_odds > b.log_odds : a.word < b.word;
  });
  return out;
}

inline TermCounts term_counts(std::string_view text, const PreprocessConfig& config = PreprocessConfig::baseline()) {
  TermCounts out;
  for (const auto& t : preprocess(text, config).terms()) ++out[t];
  return out;
}

/// Word associations between the reference summaries and the originals of
/// the sets that have one, on fully preprocessed lemmas.
inline std::vector<WordAssociation> log_odds_ratios(const Corpus& corpus, std::size_t min_count = kDefaultMinCount,
                                                    double smoothing = kDefaultSmoothing) {
  TermCounts s, d;
  for (const auto* set : evaluable_sets(corpus)) {
    for (const auto& [w, c] : term_counts(reference_summary(*set)->text)) s[w] += c;
    for (const auto& [w, c] : term_counts(set->original_text)) d[w] += c;
  }
  return log_odds_ratios(s, d, min_count, smoothing);
}

/// The k highest-scoring summary-side words and the k lowest-scoring
/// original-side words.
inline WordSetPair top_k_pair(const std::vector<WordAssociation>& associations, std::size_t k) {
  WordSetPair pair;
  pair.k = k;
  if (k == 0) return pair;
  std::vector<const WordAssociation*> s, d;
  for (const auto& a : associations) (a.side == AssociationSide::summary ? s : d).push_back(&a);
  const auto by_score = [](const WordAssociation* a, const WordAssociation* b) {
    return a->log_odds != b->log_odds ? a->log_odds > b->log_odds : a->word < b->word;
  };
  std::sort(s.begin(), s.end(), by_score);
  std::sort(d.begin(), d.end(), [](const WordAssociation* a, const WordAssociation* b) {
    return a->log_odds != b->log_odds ? a->log_odds < b->log_odds : a->word < b->word;
  });
  if (s.size() < k)
    throw UndefinedStatisticError("summary side has " + std::to_string(s.size()) + " associated words, need " +
                                  std::to_string(k));
  if (d.size() < k)
    throw UndefinedStatisticError("original side has " + std::to_string(d.size()) + " associated words, need " +
                                  std::to_string(k));
  for (std::size_t i = 0; i < k; ++i) {
    pair.summary_words.push_back(s[i]->word);
    pair.original_words.push_back(d[i]->word);
  }
  return pair;
}

}  // namespace plainsum
