#pragma once

#include <algorithm>
#include <fstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "plainsum/detail/lexicon_data.hpp"
#include "plainsum/error.hpp"

namespace plainsum {

/// English function words removed during preprocessing. Lookups expect lowercase.
class StopwordList {
 public:
  StopwordList() {
    for (auto w : detail::kStopwords) words_.emplace(w);
  }
  explicit StopwordList(std::vector<std::string> words) : words_(words.begin(), words.end()) {}

  bool contains(std::string_view word) const { return words_.count(std::string(word)) != 0; }
  std::size_t size() const noexcept { return words_.size(); }

  static const StopwordList& builtin() {
    static const StopwordList list;
    return list;
  }

 private:
  std::unordered_set<std::string> words_;
};

/// Reads a one-entry-per-line UTF-8 list, skipping blank lines and `#` comments.
inline std::vector<std::string> read_word_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open word list: " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    out.push_back(line);
  }
  return out;
}

/// Rule-based English lemmatizer: an irregular-form table followed by
/// suffix stripping (-s, -es, -ies, -ed, -ing) with silent-e restoration.
/// Input must already be lowercase; tokens with digits are returned unchanged.
class Lemmatizer {
 public:
  Lemmatizer() {
    for (const auto& [form, lemma] : detail::kLemmaExceptions)
      exceptions_.emplace(std::string(form), std::string(lemma));
  }

  static const Lemmatizer& builtin() {
    static const Lemmatizer lemmatizer;
    return lemmatizer;
  }

  std::size_t exception_count() const noexcept { return exceptions_.size(); }

  /// Rules are reapplied until the form is stable, so lemmas map to themselves.
  std::string operator()(std::string_view word) const {
    std::string cur(word);
    for (int i = 0; i < 16; ++i) {
      auto next = step(cur);
      if (next == cur) break;
      cur = std::move(next);
    }
    return cur;
  }

 private:
  std::string step(const std::string& w) const {
    if (auto it = exceptions_.find(w); it != exceptions_.end()) return it->second;
    if (w.size() <= 3 || !all_ascii_letters(w)) return w;

    if (ends_with(w, "s")) return strip_plural(w);
    if (ends_with(w, "eed")) {
      const auto stem = w.substr(0, w.size() - 3);
      return has_vowel(stem) ? w.substr(0, w.size() - 1) : w;
    }
    if (ends_with(w, "ied")) {
      return w.size() <= 4 ? w.substr(0, w.size() - 1) : w.substr(0, w.size() - 3) + "y";
    }
    if (ends_with(w, "ed")) {
      auto stem = w.substr(0, w.size() - 2);
      return stem.size() >= 2 && has_vowel(stem) ? restore(std::move(stem)) : w;
    }
    if (ends_with(w, "ing")) {
      auto stem = w.substr(0, w.size() - 3);
      return stem.size() >= 2 && has_vowel(stem) ? restore(std::move(stem)) : w;
    }
    return w;
  }

  static bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
  }
  static bool all_ascii_letters(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= 'a' && c <= 'z'; });
  }
  static bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  }
  static bool is_consonant(char c) { return c >= 'a' && c <= 'z' && !is_vowel(c); }
  static bool has_vowel(std::string_view s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (is_vowel(s[i]) || (s[i] == 'y' && i > 0)) return true;
    return false;
  }

  static std::string strip_plural(const std::string& w) {
    const auto n = w.size();
    if (ends_with(w, "ies")) return n > 4 ? w.substr(0, n - 3) + "y" : w.substr(0, n - 1);
    if (ends_with(w, "sses") || ends_with(w, "shes") || ends_with(w, "ches") ||
        ends_with(w, "xes") || ends_with(w, "zzes"))
      return w.substr(0, n - 2);
    if (ends_with(w, "ss") || ends_with(w, "us") || ends_with(w, "is")) return w;
    return w.substr(0, n - 1);
  }

  // Undo the spelling changes English applies before -ed / -ing.
  static std::string restore(std::string stem) {
    const auto n = stem.size();
    const char c = stem[n - 1];
    const char p = stem[n - 2];
    const char pp = n >= 3 ? stem[n - 3] : '\0';
    const auto plus_e = [&] { return stem + "e"; };
    // 'u' after 'q' acts as a consonant ("requir", "acquir").
    const bool pp_consonant = is_consonant(pp) || (pp == 'u' && n >= 4 && stem[n - 4] == 'q');

    if (c == 'e') return stem;
    if (c == p && is_consonant(c)) {
      if (c == 's' || c == 'z') return stem;
      if (c == 'l') {
        if (ends_with(stem, "ell") || ends_with(stem, "troll")) stem.pop_back();
        return stem;
      }
      stem.pop_back();
      return stem;
    }
    switch (c) {
      case 'u':
      case 'v':
      case 'z':
      case 'c':
        return plus_e();
      case 'l':
        if (is_consonant(p) && p != 'l' && p != 'r' && p != 'w') return plus_e();
        if ((p == 'i' || p == 'u') && pp_consonant) return plus_e();
        return stem;
      case 't':
        if (p == 'a' && pp != 'e' && pp != 'o' && pp != 'a') return plus_e();
        if ((p == 'o' || p == 'u') && pp_consonant) return plus_e();
        if (p == 'e' && (pp == 'l' || pp == 'p')) return plus_e();
        return stem;
      case 'r':
        if ((p == 'a' || p == 'i' || p == 'u') && pp_consonant) return plus_e();
        return stem;
      case 's':
        if (is_vowel(p) || p == 'n' || p == 'r' || p == 'p' || p == 'l') return plus_e();
        return stem;
      case 'g':
        if (p == 'r' || p == 'd' || p == 'a' || p == 'i') return plus_e();
        if (p == 'n' && (pp == 'a' || pp == 'e')) return plus_e();
        return stem;
      case 'd':
      case 'm':
      case 'k':
        if ((p == 'a' || p == 'i' || p == 'o' || p == 'u') && pp_consonant) return plus_e();
        return stem;
      case 'n':
        if (p == 'i' && pp_consonant) return plus_e();
        return stem;
      case 'b':
        if ((p == 'i' || p == 'o') && pp_consonant) return plus_e();
        return stem;
      case 'p':
        if ((p == 'a' || p == 'i' || p == 'y') && pp_consonant) return plus_e();
        return stem;
      default:
        return stem;
    }
  }

  std::unordered_map<std::string, std::string> exceptions_;
};

}  // namespace plainsum
