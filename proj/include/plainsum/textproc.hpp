#pragma once

// Deterministic text normalization shared by every analysis: sentence
// segmentation, tokenization, lemmatization, stopword removal, n-grams and
// syllable counting.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "plainsum/detail/utf8.hpp"
#include "plainsum/error.hpp"
#include "plainsum/lexicon.hpp"

namespace plainsum {

struct PreprocessConfig {
  bool lowercase = true;
  bool lemmatize = true;
  bool drop_stopwords = true;
  bool drop_punct = true;

  /// Lowercasing, lemmatization, stopword and punctuation removal.
  static constexpr PreprocessConfig baseline() { return {}; }
  /// Surface tokens with punctuation kept; what the readability formulas see.
  static constexpr PreprocessConfig raw() { return {false, false, false, false}; }

  friend bool operator==(const PreprocessConfig&, const PreprocessConfig&) = default;
};

struct Token {
  std::string surface;
  std::string lemma;  // normalized form under the active config
  bool is_stopword = false;
  bool is_punct = false;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::size_t source_index = 0;  // position among the segmenter's sentences
  std::string text;              // trimmed source text
  std::size_t word_count = 0;    // non-punctuation tokens before any filtering
  std::vector<Token> tokens;     // tokens surviving the config's filters
};

struct TokenizedDocument {
  std::vector<Sentence> sentences;
  PreprocessConfig config;
  std::size_t dropped_sentences = 0;

  /// True when filtering removed every token.
  bool degenerate() const noexcept { return sentences.empty(); }

  std::size_t word_count() const noexcept {
    std::size_t n = 0;
    for (const auto& s : sentences) n += s.word_count;
    return n;
  }

  /// Normalized forms of all tokens, flattened across sentences.
  std::vector<std::string> terms() const {
    std::vector<std::string> out;
    for (const auto& s : sentences)
      for (const auto& t : s.tokens) out.push_back(t.lemma);
    return out;
  }
};

struct SentenceSpan {
  std::size_t begin = 0;  // byte offsets, [begin, end)
  std::size_t end = 0;

  friend bool operator==(const SentenceSpan&, const SentenceSpan&) = default;
};

namespace detail {

// Abbreviations after which a period never ends a sentence.
inline bool is_continuing_abbreviation(std::string_view lower_word) {
  static constexpr std::array<std::string_view, 58> kAbbrev = {
      "mr",   "mrs",  "ms",   "dr",   "prof", "st",   "no",   "nos",  "vs",   "v",
      "cf",   "viz",  "fig",  "figs", "sec",  "secs", "art",  "arts", "para", "paras",
      "pp",   "p",    "approx", "dept", "jan", "feb", "mar",  "apr",  "jun",  "jul",
      "aug",  "sep",  "sept", "oct",  "nov",  "dec",  "rev",  "gen",  "gov",  "sen",
      "rep",  "hon",  "ave",  "blvd", "mt",   "ft",   "vol",  "vols", "ch",   "ref",
      "refs", "incl", "esp",  "est",  "min",  "max",  "govt", "cl"};
  return std::find(kAbbrev.begin(), kAbbrev.end(), lower_word) != kAbbrev.end();
}

inline bool is_terminator(char32_t c) { return c == '.' || c == '!' || c == '?' || c == 0x2026; }

inline bool is_closer(char32_t c) {
  return c == '"' || c == '\'' || c == ')' || c == ']' || c == 0x201D || c == 0x2019 || c == 0xBB;
}

// Word (letters, digits, inner dots) ending right before byte offset `end`.
inline std::string_view word_before(std::string_view text, std::size_t end) {
  std::size_t b = end;
  while (b > 0) {
    const auto c = static_cast<unsigned char>(text[b - 1]);
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                      c == '.' || c >= 0x80;
    if (!keep) break;
    --b;
  }
  // Non-ASCII bytes were accepted wholesale; drop leading punctuation code points.
  while (b < end) {
    const auto cp = decode_utf8(text, b);
    if (is_alnum(cp.value)) break;
    b += cp.length;
  }
  return text.substr(b, end - b);
}

inline bool period_ends_sentence(std::string_view text, std::size_t period, std::size_t span_begin) {
  const auto word = word_before(text, period);
  if (word.empty()) return true;
  const auto lower = lowercase(word);
  if (is_continuing_abbreviation(lower)) return false;
  if (lower.find('.') != std::string::npos) return false;  // e.g, u.s, a.m
  const auto first = decode_utf8(word, 0);
  if (first.length == word.size() && is_letter(first.value)) return false;  // initials
  const bool numeric = std::all_of(word.begin(), word.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (numeric) {
    // "1." opening a sentence is a list enumerator.
    const auto before = trim(text.substr(span_begin, period - span_begin));
    if (before == word) return false;
  }
  return true;
}

}  // namespace detail

/// Splits text into contiguous spans covering every byte. Boundaries follow
/// sentence-final punctuation (plus trailing quotes and brackets) when the
/// next word does not start lowercase, and blank lines. Abbreviations,
/// initials, dotted acronyms, decimals and enumerators like "(a)" are
/// protected; semicolons never split.
inline std::vector<SentenceSpan> segment_sentences(std::string_view text) {
  using namespace detail;
  if (only_whitespace(text)) throw EmptyInputError("cannot segment empty text");

  std::vector<std::size_t> cuts;
  std::size_t span_begin = 0;
  std::size_t i = 0;
  const auto has_content = [&](std::size_t from, std::size_t to) {
    return !only_whitespace(text.substr(from, to - from));
  };

  while (i < text.size()) {
    const auto cp = decode_utf8(text, i);
    if (cp.value == '\n') {
      std::size_t j = i + 1;
      while (j < text.size() && (text[j] == ' ' || text[j] == '\t' || text[j] == '\r')) ++j;
      if (j < text.size() && text[j] == '\n' && has_content(span_begin, i)) {
        cuts.push_back(i);
        span_begin = i;
      }
      i += cp.length;
      continue;
    }
    if (!is_terminator(cp.value)) {
      i += cp.length;
      continue;
    }

    const std::size_t term_begin = i;
    bool only_single_period = cp.value == '.';
    std::size_t j = i + cp.length;
    while (j < text.size()) {
      const auto next = decode_utf8(text, j);
      if (!is_terminator(next.value)) break;
      only_single_period = false;
      j += next.length;
    }
    std::size_t k = j;
    while (k < text.size()) {
      const auto next = decode_utf8(text, k);
      if (!is_closer(next.value)) break;
      k += next.length;
    }
    i = j;
    if (k >= text.size()) break;
    if (!is_space(decode_utf8(text, k).value)) continue;

    std::size_t m = k;
    while (m < text.size()) {
      const auto next = decode_utf8(text, m);
      if (!is_space(next.value)) break;
      m += next.length;
    }
    if (m >= text.size()) break;
    if (is_lower(decode_utf8(text, m).value)) continue;
    if (only_single_period && !period_ends_sentence(text, term_begin, span_begin)) continue;

    cuts.push_back(k);
    span_begin = k;
    i = k;
  }

  std::vector<SentenceSpan> spans;
  std::size_t begin = 0;
  for (auto cut : cuts) {
    spans.push_back({begin, cut});
    begin = cut;
  }
  spans.push_back({begin, text.size()});

  // Whitespace-only spans join their neighbour so every span has content.
  std::vector<SentenceSpan> merged;
  for (const auto& s : spans) {
    const bool blank = only_whitespace(text.substr(s.begin, s.end - s.begin));
    if (blank && !merged.empty()) {
      merged.back().end = s.end;
    } else if (!merged.empty() && only_whitespace(text.substr(merged.back().begin,
                                                               merged.back().end - merged.back().begin))) {
      merged.back().end = s.end;
    } else {
      merged.push_back(s);
    }
  }
  return merged;
}

/// Trimmed sentence strings in source order.
inline std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& span : segment_sentences(text))
    out.emplace_back(detail::trim(text.substr(span.begin, span.end - span.begin)));
  return out;
}

struct RawToken {
  std::string surface;
  bool is_punct = false;
};

/// Maximal letter/digit runs become words; every other non-space code point
/// is its own punctuation token. Apostrophes and hyphens therefore split
/// ("don't" -> don ' t).
inline std::vector<RawToken> tokenize(std::string_view text) {
  using namespace detail;
  std::vector<RawToken> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto cp = decode_utf8(text, i);
    if (is_space(cp.value)) {
      i += cp.length;
    } else if (is_alnum(cp.value)) {
      std::size_t j = i;
      while (j < text.size()) {
        const auto next = decode_utf8(text, j);
        if (!is_alnum(next.value)) break;
        j += next.length;
      }
      out.push_back({std::string(text.substr(i, j - i)), false});
      i = j;
    } else {
      out.push_back({std::string(text.substr(i, cp.length)), true});
      i += cp.length;
    }
  }
  return out;
}

/// Segment, tokenize, lowercase, lemmatize, then drop stopwords and
/// punctuation as configured. Sentences left without tokens are removed
/// (counted in dropped_sentences); a document with none left is degenerate.
/// Lemmas are always computed from the lowercased surface.
inline TokenizedDocument preprocess(std::string_view text, const PreprocessConfig& config,
                                    const StopwordList& stopwords = StopwordList::builtin(),
                                    const Lemmatizer& lemmatizer = Lemmatizer::builtin()) {
  TokenizedDocument doc;
  doc.config = config;
  const auto spans = segment_sentences(text);
  for (std::size_t s = 0; s < spans.size(); ++s) {
    Sentence sentence;
    sentence.source_index = s;
    sentence.text = std::string(detail::trim(text.substr(spans[s].begin, spans[s].end - spans[s].begin)));
    for (auto& raw : tokenize(sentence.text)) {
      if (!raw.is_punct) ++sentence.word_count;
      Token token;
      token.is_punct = raw.is_punct;
      const auto lower = detail::lowercase(raw.surface);
      if (config.lemmatize && !raw.is_punct) {
        token.lemma = lemmatizer(lower);
      } else {
        token.lemma = config.lowercase ? lower : raw.surface;
      }
      token.is_stopword = !raw.is_punct && (stopwords.contains(lower) ||
                                            stopwords.contains(detail::lowercase(token.lemma)));
      token.surface = std::move(raw.surface);
      if (token.is_punct && config.drop_punct) continue;
      if (token.is_stopword && config.drop_stopwords) continue;
      sentence.tokens.push_back(std::move(token));
    }
    if (sentence.tokens.empty()) {
      ++doc.dropped_sentences;
      continue;
    }
    doc.sentences.push_back(std::move(sentence));
  }
  return doc;
}

/// Normalized tokens joined by spaces, sentences separated by blank lines.
/// Feeding this back through preprocess with the same punctuation-dropping
/// config reproduces the document's tokens.
inline std::string render(const TokenizedDocument& doc) {
  std::string out;
  for (const auto& s : doc.sentences) {
    if (!out.empty()) out += "\n\n";
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (i) out += ' ';
      out += s.tokens[i].lemma;
    }
  }
  return out;
}

/// Multiset of n-grams keyed by space-joined tokens.
using NgramCounts = std::map<std::string, std::size_t>;

inline std::size_t total(const NgramCounts& counts) {
  std::size_t n = 0;
  for (const auto& [_, c] : counts) n += c;
  return n;
}

/// n-grams of a token sequence; empty when n exceeds its length.
inline NgramCounts ngrams(const std::vector<std::string>& tokens, std::size_t n) {
  if (n == 0) throw ArgumentError("n-gram order must be at least 1");
  NgramCounts out;
  if (tokens.size() < n) return out;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (std::size_t k = 1; k < n; ++k) {
      key += ' ';
      key += tokens[i + k];
    }
    ++out[key];
  }
  return out;
}

/// n-grams over the document's normalized tokens, never crossing a sentence boundary.
inline NgramCounts ngrams(const TokenizedDocument& doc, std::size_t n) {
  if (n == 0) throw ArgumentError("n-gram order must be at least 1");
  NgramCounts out;
  for (const auto& s : doc.sentences) {
    std::vector<std::string> terms;
    terms.reserve(s.tokens.size());
    for (const auto& t : s.tokens) terms.push_back(t.lemma);
    for (const auto& [key, c] : ngrams(terms, n)) out[key] += c;
  }
  return out;
}

namespace detail {

inline bool syllable_vowel(const std::string& w, std::size_t i) {
  const char c = w[i];
  if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return true;
  return c == 'y' && i > 0;
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace detail

/// Heuristic English syllable count: vowel groups, minus silent final e /
/// -es / -ed, plus splits for common two-vowel hiatus patterns. At least 1.
inline int count_syllables(std::string_view word) {
  using detail::ends_with;
  std::string w;
  bool any_letter = false;
  for (std::size_t i = 0; i < word.size();) {
    const auto cp = detail::decode_utf8(word, i);
    if (detail::is_letter(cp.value)) {
      any_letter = true;
      const auto lower = detail::to_lower(cp.value);
      if (lower >= 'a' && lower <= 'z') w.push_back(static_cast<char>(lower));
    }
    i += cp.length;
  }
  if (!any_letter) throw ArgumentError("syllable count needs a word with letters: '" + std::string(word) + "'");
  if (w.empty()) return 1;

  int groups = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (detail::syllable_vowel(w, i) && (i == 0 || !detail::syllable_vowel(w, i - 1))) ++groups;

  const auto n = w.size();
  const auto consonant_at = [&](std::size_t i) { return !detail::syllable_vowel(w, i); };

  // Silent endings: the final e must form its own vowel group.
  if (groups > 1 && n >= 2 && w[n - 1] == 'e' && consonant_at(n - 2)) {
    const bool syllabic_le = w[n - 2] == 'l' && n >= 3 && consonant_at(n - 3);
    if (!syllabic_le) --groups;
  } else if (groups > 1 && n >= 3 && (ends_with(w, "es") || ends_with(w, "ed")) && consonant_at(n - 3)) {
    const char before = w[n - 3];
    const bool syllabic_le = before == 'l' && n >= 4 && consonant_at(n - 4);
    bool silent;
    if (w[n - 1] == 's') {
      silent = !(before == 's' || before == 'x' || before == 'z' || before == 'c' || before == 'g' ||
                 ends_with(w, "ches") || ends_with(w, "shes")) &&
               !syllabic_le;
    } else {
      silent = before != 't' && before != 'd' && !syllabic_le;
    }
    if (silent) --groups;
  }

  // Hiatus: two adjacent vowels pronounced separately.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const char a = w[i], b = w[i + 1];
    const char prev = i > 0 ? w[i - 1] : '\0';
    const std::string_view rest(w.data() + i, n - i);
    if (a == 'i' && b == 'a') {
      const bool merged = prev == 'c' || prev == 't' || prev == 's' || prev == 'g';
      if (!merged || rest.substr(0, 3) == "iat") ++groups;
    } else if (a == 'i' && b == 'o') {
      if (!(prev == 't' || prev == 's' || prev == 'c' || prev == 'x' || prev == 'g')) ++groups;
    } else if (a == 'u' && (b == 'a' || b == 'o')) {
      if (prev != 'q' && prev != 'g') ++groups;
    } else if (a == 'e' && b == 'o') {
      const char next = i + 2 < n ? w[i + 2] : '\0';
      if (next != 'p' && !(prev == 'g' && next == 'n')) ++groups;
    } else if (a == 'i' && b == 'u') {
      ++groups;
    } else if (rest.substr(0, 4) == "oing" || rest.substr(0, 4) == "eing" || rest.substr(0, 4) == "ying" ||
               rest.substr(0, 4) == "uing") {
      ++groups;
    } else if (rest.substr(0, 4) == "iety") {
      ++groups;
    }
  }
  if (w.rfind("crea", 0) == 0 || w.find("recrea") != std::string::npos) ++groups;
  for (std::string_view p : {"area", "idea", "react", "reali"}) {
    if (w.find(p) != std::string::npos) ++groups;
  }
  if (ends_with(w, "ism")) ++groups;

  return std::max(groups, 1);
}

}  // namespace plainsum
