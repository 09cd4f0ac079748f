#pragma once

// Flesch-Kincaid, Coleman-Liau, SMOG and ARI grade levels, reported as
// reading ages.

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plainsum/corpus.hpp"
#include "plainsum/detail/utf8.hpp"
#include "plainsum/error.hpp"
#include "plainsum/stats.hpp"
#include "plainsum/textproc.hpp"

namespace plainsum {

struct TextMeasures {
  std::size_t words = 0;
  std::size_t sentences = 0;
  std::size_t syllables = 0;
  std::size_t letters = 0;     // alphabetic characters
  std::size_t characters = 0;  // letters and digits
  std::size_t polysyllables = 0;

  TextMeasures& operator+=(const TextMeasures& o) {
    words += o.words;
    sentences += o.sentences;
    syllables += o.syllables;
    letters += o.letters;
    characters += o.characters;
    polysyllables += o.polysyllables;
    return *this;
  }
  friend TextMeasures operator+(TextMeasures a, const TextMeasures& b) { return a += b; }
  friend bool operator==(const TextMeasures&, const TextMeasures&) = default;
};

/// Measures of one word; tokens without letters count one syllable.
inline TextMeasures measure_word(std::string_view word) {
  TextMeasures m;
  m.words = 1;
  bool has_letter = false;
  for (std::size_t i = 0; i < word.size();) {
    const auto cp = detail::decode_utf8(word, i);
    if (detail::is_letter(cp.value)) {
      ++m.letters;
      has_letter = true;
    }
    if (detail::is_alnum(cp.value)) ++m.characters;
    i += cp.length;
  }
  m.syllables = has_letter ? static_cast<std::size_t>(count_syllables(word)) : 1;
  m.polysyllables = m.syllables >= 3 ? 1 : 0;
  return m;
}

/// Counts over an unfiltered document. Sentences without words are ignored.
inline TextMeasures measure(const TokenizedDocument& doc) {
  TextMeasures m;
  for (const auto& s : doc.sentences) {
    bool any = false;
    for (const auto& t : s.tokens) {
      if (t.is_punct) continue;
      m += measure_word(t.surface);
      any = true;
    }
    if (any) ++m.sentences;
  }
  if (m.words == 0) throw EmptyInputError("text has no words");
  return m;
}

inline TextMeasures measure(std::string_view text) { return measure(preprocess(text, PreprocessConfig::raw())); }

struct GradeIndices {
  double fk = 0.0;
  double cl = 0.0;
  double smog = 0.0;
  double ari = 0.0;
};

inline GradeIndices grade_indices(const TextMeasures& m) {
  if (m.words == 0 || m.sentences == 0) throw UndefinedStatisticError("readability needs at least one word and sentence");
  const double w = static_cast<double>(m.words);
  const double s = static_cast<double>(m.sentences);
  GradeIndices g;
  g.fk = 0.39 * (w / s) + 11.8 * (static_cast<double>(m.syllables) / w) - 15.59;
  const double l100 = static_cast<double>(m.letters) / w * 100.0;
  const double s100 = s / w * 100.0;
  g.cl = 0.0588 * l100 - 0.296 * s100 - 15.8;
  g.smog = 1.0430 * std::sqrt(static_cast<double>(m.polysyllables) * 30.0 / s) + 3.1291;
  g.ari = 4.71 * (static_cast<double>(m.characters) / w) + 0.5 * (w / s) - 21.43;
  return g;
}

/// US grade g is entered at age g + 5.
inline constexpr double to_age(double grade) { return grade + 5.0; }

struct ReadabilityReport {
  double fk = 0.0;
  double cl = 0.0;
  double smog = 0.0;
  double ari = 0.0;
  double average = 0.0;
};

inline ReadabilityReport readability_report(const TextMeasures& m) {
  const auto g = grade_indices(m);
  ReadabilityReport r{to_age(g.fk), to_age(g.cl), to_age(g.smog), to_age(g.ari), 0.0};
  r.average = (r.fk + r.cl + r.smog + r.ari) / 4.0;
  return r;
}

enum class TextSide { summaries, originals };

/// Scores all texts of one side as a single text whose sentences keep their
/// document boundaries. Uses the sets that have a reference summary.
inline ReadabilityReport corpus_readability(const Corpus& corpus, TextSide side) {
  const auto sets = evaluable_sets(corpus);
  if (sets.empty()) throw EmptyInputError("corpus has no summary sets with a reference summary");
  TextMeasures total;
  for (const auto* set : sets) {
    const auto& text = side == TextSide::summaries ? reference_summary(*set)->text : set->original_text;
    if (detail::only_whitespace(text)) continue;
    const auto doc = preprocess(text, PreprocessConfig::raw());
    bool any_word = false;
    for (const auto& s : doc.sentences)
      for (const auto& t : s.tokens) any_word = any_word || !t.is_punct;
    if (any_word) total += measure(doc);
  }
  return readability_report(total);
}

/// Each word is its own one-word sentence.
inline TextMeasures measure_word_list(const std::vector<std::string>& words) {
  if (words.empty()) throw EmptyInputError("word list is empty");
  TextMeasures m;
  for (const auto& w : words) {
    m += measure_word(w);
    ++m.sentences;
  }
  return m;
}

struct WordSetGap {
  double ari = 0.0;
  double fk = 0.0;
};

/// Index of the original-side words minus that of the summary-side words.
inline WordSetGap wordset_gap(const std::vector<std::string>& summary_words,
                              const std::vector<std::string>& original_words) {
  const auto s = grade_indices(measure_word_list(summary_words));
  const auto d = grade_indices(measure_word_list(original_words));
  return {d.ari - s.ari, d.fk - s.fk};
}

inline WordSetGap wordset_gap(const WordSetPair& pair) { return wordset_gap(pair.summary_words, pair.original_words); }

}  // namespace plainsum
