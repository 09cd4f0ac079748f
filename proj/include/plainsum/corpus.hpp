#pragma once

// Summary-set data model, canonical JSON format, site-dump adapters and the
// mechanical quality filters.

#include <algorithm>
#include <array>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "plainsum/detail/utf8.hpp"
#include "plainsum/error.hpp"
#include "plainsum/textproc.hpp"

namespace plainsum {

enum class Site { tldrlegal, tosdr, other };
enum class CandidateStatus { accepted, rejected, unreviewed };
enum class RejectReason { repetition, exact_quote, opinionated, topic_only, longer_than_original };
enum class CorpusFormat { canonical, tldrlegal_dump, tosdr_dump };

inline constexpr std::array<RejectReason, 5> kAllRejectReasons = {
    RejectReason::repetition, RejectReason::exact_quote, RejectReason::opinionated,
    RejectReason::topic_only, RejectReason::longer_than_original};

inline std::string_view to_string(Site s) {
  switch (s) {
    case Site::tldrlegal: return "tldrlegal";
    case Site::tosdr: return "tosdr";
    case Site::other: return "other";
  }
  return "other";
}

inline std::string_view to_string(CandidateStatus s) {
  switch (s) {
    case CandidateStatus::accepted: return "accepted";
    case CandidateStatus::rejected: return "rejected";
    case CandidateStatus::unreviewed: return "unreviewed";
  }
  return "unreviewed";
}

inline std::string_view to_string(RejectReason r) {
  switch (r) {
    case RejectReason::repetition: return "repetition";
    case RejectReason::exact_quote: return "exact_quote";
    case RejectReason::opinionated: return "opinionated";
    case RejectReason::topic_only: return "topic_only";
    case RejectReason::longer_than_original: return "longer_than_original";
  }
  return "repetition";
}

inline std::string_view to_string(CorpusFormat f) {
  switch (f) {
    case CorpusFormat::canonical: return "canonical";
    case CorpusFormat::tldrlegal_dump: return "tldrlegal_dump";
    case CorpusFormat::tosdr_dump: return "tosdr_dump";
  }
  return "canonical";
}

inline std::optional<Site> parse_site(std::string_view s) {
  if (s == "tldrlegal") return Site::tldrlegal;
  if (s == "tosdr") return Site::tosdr;
  if (s == "other") return Site::other;
  return std::nullopt;
}

inline std::optional<CandidateStatus> parse_status(std::string_view s) {
  if (s == "accepted") return CandidateStatus::accepted;
  if (s == "rejected") return CandidateStatus::rejected;
  if (s == "unreviewed") return CandidateStatus::unreviewed;
  return std::nullopt;
}

inline std::optional<RejectReason> parse_reason(std::string_view s) {
  for (auto r : kAllRejectReasons)
    if (to_string(r) == s) return r;
  return std::nullopt;
}

inline std::optional<CorpusFormat> parse_format(std::string_view s) {
  if (s == "canonical") return CorpusFormat::canonical;
  if (s == "tldrlegal_dump") return CorpusFormat::tldrlegal_dump;
  if (s == "tosdr_dump") return CorpusFormat::tosdr_dump;
  return std::nullopt;
}

struct SourceMeta {
  std::string company;
  std::string document_title;
  std::optional<std::string> document_date;  // ISO-8601 YYYY-MM-DD
  std::optional<std::string> url;
  Site site = Site::other;
  std::vector<std::string> aliases;  // extra service names for templatic matching

  friend bool operator==(const SourceMeta&, const SourceMeta&) = default;
};

struct CandidateSummary {
  std::string text;
  CandidateStatus status = CandidateStatus::unreviewed;
  std::optional<RejectReason> reject_reason;
  bool templatic = false;

  friend bool operator==(const CandidateSummary&, const CandidateSummary&) = default;
};

struct SummarySet {
  std::string uid;
  SourceMeta source;
  std::string original_text;
  std::vector<CandidateSummary> candidates;
  std::optional<std::size_t> best_index;

  friend bool operator==(const SummarySet&, const SummarySet&) = default;
};

struct Corpus {
  std::string name;
  std::vector<SummarySet> sets;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Collects non-fatal warnings (skipped records, skipped sets).
struct Diagnostics {
  std::vector<std::string> warnings;
  void warn(std::string message) { warnings.push_back(std::move(message)); }
};

/// The summary used as the reference for a set: the annotated best
/// candidate, else the first accepted one, else none.
inline const CandidateSummary* reference_summary(const SummarySet& set) {
  if (set.best_index && *set.best_index < set.candidates.size()) return &set.candidates[*set.best_index];
  for (const auto& c : set.candidates)
    if (c.status == CandidateStatus::accepted) return &c;
  return nullptr;
}

/// Sets that have a reference summary, in corpus order.
inline std::vector<const SummarySet*> evaluable_sets(const Corpus& corpus) {
  std::vector<const SummarySet*> out;
  for (const auto& s : corpus.sets)
    if (reference_summary(s)) out.push_back(&s);
  return out;
}

inline bool is_iso_date(std::string_view s) {
  static const std::regex kIso(R"(\d{4}-\d{2}-\d{2})");
  return std::regex_match(s.begin(), s.end(), kIso);
}

/// Throws SchemaError on the first invariant violation.
inline void validate(const SummarySet& set) {
  const auto& uid = set.uid;
  if (uid.empty()) throw SchemaError(uid, "uid", "must be non-empty");
  if (set.source.company.empty()) throw SchemaError(uid, "source.company", "must be non-empty");
  if (set.source.document_title.empty()) throw SchemaError(uid, "source.document_title", "must be non-empty");
  if (set.source.document_date && !is_iso_date(*set.source.document_date))
    throw SchemaError(uid, "source.document_date", "must be an ISO-8601 date (YYYY-MM-DD)");
  if (detail::only_whitespace(set.original_text)) throw SchemaError(uid, "original_text", "must be non-empty");
  if (set.candidates.empty() || set.candidates.size() > 3)
    throw SchemaError(uid, "candidates", "must hold 1 to 3 summaries");
  for (std::size_t i = 0; i < set.candidates.size(); ++i) {
    const auto& c = set.candidates[i];
    const bool rejected = c.status == CandidateStatus::rejected;
    if (rejected != c.reject_reason.has_value())
      throw SchemaError(uid, "candidates[" + std::to_string(i) + "].reject_reason",
                        "must be present exactly when status is rejected");
  }
  if (set.best_index) {
    if (*set.best_index >= set.candidates.size())
      throw SchemaError(uid, "best_index", "out of range");
    if (set.candidates[*set.best_index].status != CandidateStatus::accepted)
      throw SchemaError(uid, "best_index", "must point at an accepted candidate");
  }
}

inline void validate(const Corpus& corpus) {
  std::set<std::string> seen;
  for (const auto& set : corpus.sets) {
    validate(set);
    if (!seen.insert(set.uid).second) throw SchemaError(set.uid, "uid", "duplicate uid");
  }
}

// ---------------------------------------------------------------------------
// Canonical JSON

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson to_json(const SummarySet& set) {
  OrderedJson source;
  source["company"] = set.source.company;
  source["document_title"] = set.source.document_title;
  source["document_date"] = set.source.document_date ? OrderedJson(*set.source.document_date) : OrderedJson();
  source["url"] = set.source.url ? OrderedJson(*set.source.url) : OrderedJson();
  source["site"] = to_string(set.source.site);
  if (!set.source.aliases.empty()) source["aliases"] = set.source.aliases;

  OrderedJson candidates = OrderedJson::array();
  for (const auto& c : set.candidates) {
    OrderedJson j;
    j["text"] = c.text;
    j["status"] = to_string(c.status);
    j["reject_reason"] = c.reject_reason ? OrderedJson(to_string(*c.reject_reason)) : OrderedJson();
    j["templatic"] = c.templatic;
    candidates.push_back(std::move(j));
  }

  OrderedJson j;
  j["uid"] = set.uid;
  j["source"] = std::move(source);
  j["original_text"] = set.original_text;
  j["candidates"] = std::move(candidates);
  j["best_index"] = set.best_index ? OrderedJson(*set.best_index) : OrderedJson();
  return j;
}

inline std::string to_canonical_json(const Corpus& corpus) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& s : corpus.sets) arr.push_back(to_json(s));
  return arr.dump(2) + "\n";
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return ss.str();
}

inline nlohmann::json parse_json(const std::string& text, const std::string& origin) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", "<document>", origin + " is not valid JSON: " + e.what());
  }
}

inline std::string require_string(const nlohmann::json& j, const std::string& uid, const std::string& field) {
  if (!j.contains(field) || !j[field].is_string()) throw SchemaError(uid, field, "expected a string");
  return j[field].get<std::string>();
}

inline std::optional<std::string> optional_string(const nlohmann::json& j, const std::string& uid,
                                                  const std::string& field) {
  if (!j.contains(field) || j[field].is_null()) return std::nullopt;
  if (!j[field].is_string()) throw SchemaError(uid, field, "expected a string or null");
  return j[field].get<std::string>();
}

inline std::string stem_name(const std::string& path) {
  auto slash = path.find_last_of("/\\");
  auto base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

}  // namespace detail

inline SummarySet summary_set_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("", "<record>", "expected an object");
  SummarySet set;
  set.uid = detail::require_string(j, "", "uid");
  const auto& uid = set.uid;

  if (!j.contains("source") || !j["source"].is_object()) throw SchemaError(uid, "source", "expected an object");
  const auto& src = j["source"];
  set.source.company = detail::require_string(src, uid, "company");
  set.source.document_title = detail::require_string(src, uid, "document_title");
  set.source.document_date = detail::optional_string(src, uid, "document_date");
  set.source.url = detail::optional_string(src, uid, "url");
  const auto site = detail::require_string(src, uid, "site");
  if (auto parsed = parse_site(site)) {
    set.source.site = *parsed;
  } else {
    throw SchemaError(uid, "source.site", "unknown site '" + site + "'");
  }
  if (src.contains("aliases") && !src["aliases"].is_null()) {
    if (!src["aliases"].is_array()) throw SchemaError(uid, "source.aliases", "expected an array");
    for (const auto& a : src["aliases"]) {
      if (!a.is_string()) throw SchemaError(uid, "source.aliases", "expected strings");
      set.source.aliases.push_back(a.get<std::string>());
    }
  }

  set.original_text = detail::require_string(j, uid, "original_text");
  if (!j.contains("candidates") || !j["candidates"].is_array())
    throw SchemaError(uid, "candidates", "expected an array");
  for (std::size_t i = 0; i < j["candidates"].size(); ++i) {
    const auto& cj = j["candidates"][i];
    const auto field = "candidates[" + std::to_string(i) + "]";
    if (!cj.is_object()) throw SchemaError(uid, field, "expected an object");
    CandidateSummary c;
    c.text = detail::require_string(cj, uid, "text");
    const auto status = cj.contains("status") && cj["status"].is_string() ? cj["status"].get<std::string>() : "";
    if (auto parsed = parse_status(status)) {
      c.status = *parsed;
    } else {
      throw SchemaError(uid, field + ".status", "unknown status '" + status + "'");
    }
    if (auto reason = detail::optional_string(cj, uid, field + ".reject_reason"); reason) {
      auto parsed = parse_reason(*reason);
      if (!parsed) throw SchemaError(uid, field + ".reject_reason", "unknown reason '" + *reason + "'");
      c.reject_reason = parsed;
    } else if (cj.contains("reject_reason") && !cj["reject_reason"].is_null()) {
      if (!cj["reject_reason"].is_string()) throw SchemaError(uid, field + ".reject_reason", "expected a string or null");
      auto parsed = parse_reason(cj["reject_reason"].get<std::string>());
      if (!parsed) throw SchemaError(uid, field + ".reject_reason", "unknown reason");
      c.reject_reason = parsed;
    }
    if (cj.contains("templatic") && !cj["templatic"].is_null()) {
      if (!cj["templatic"].is_boolean()) throw SchemaError(uid, field + ".templatic", "expected a boolean");
      c.templatic = cj["templatic"].get<bool>();
    }
    set.candidates.push_back(std::move(c));
  }
  if (j.contains("best_index") && !j["best_index"].is_null()) {
    if (!j["best_index"].is_number_unsigned() && !j["best_index"].is_number_integer())
      throw SchemaError(uid, "best_index", "expected an integer or null");
    const auto v = j["best_index"].get<long long>();
    if (v < 0) throw SchemaError(uid, "best_index", "must be non-negative");
    set.best_index = static_cast<std::size_t>(v);
  }
  validate(set);
  return set;
}

/// Parses a canonical corpus document (JSON array of summary sets).
inline Corpus parse_canonical(const std::string& text, std::string name = "corpus") {
  const auto j = detail::parse_json(text, name);
  if (!j.is_array()) throw SchemaError("", "<document>", "canonical corpus must be a JSON array");
  Corpus corpus;
  corpus.name = std::move(name);
  for (const auto& record : j) corpus.sets.push_back(summary_set_from_json(record));
  validate(corpus);
  return corpus;
}

// ---------------------------------------------------------------------------
// Site dump adapters
//
// Both site dumps are JSON, either an array of records or an object keyed by
// uid. Field mapping, first match wins:
//   uid            uid | id | object key | "<site>-<position>"
//   original_text  original_text | original | quote | quoteText
//   summaries      summaries | candidates (strings or {text|summary}) |
//                  reference_summary | summary | tldr
//   document_title doc | document | document_title | title
//   company        company | service | document title up to its
//                  document-type words ("Pokemon GO Terms of Service" -> "Pokemon GO")
//   document_date  document_date | date (kept only when ISO-8601)
//   url            url | link
//   best_index     best_index | best
// A single reference_summary/summary/tldr string is a curated summary and is
// loaded as accepted with best_index 0. Summary lists load as unreviewed
// unless best_index marks one (that one becomes accepted). TL;DRLegal
// sections carry one summary and are always loaded as accepted. Records
// without original text or summaries are skipped and counted.

namespace detail {

inline std::optional<std::string> first_string(const nlohmann::json& j, std::initializer_list<const char*> keys) {
  for (const char* k : keys)
    if (j.contains(k) && j[k].is_string()) return j[k].get<std::string>();
  return std::nullopt;
}

inline std::string company_from_title(const std::string& title) {
  static constexpr std::array<std::string_view, 20> kMarkers = {
      " Terms",     " Privacy",  " End User",  " EULA",      " License", " Licence",   " Statement",
      " Website",   " Cookie",   " Acceptable", " User Agreement", " Community", " Data", " SDK",
      " API",       " Game Services", " Developer", " Legal", " Conditions", " Copyright"};
  std::size_t cut = title.size();
  for (auto m : kMarkers) {
    auto pos = title.find(m);
    if (pos != std::string::npos && pos > 0) cut = std::min(cut, pos);
  }
  auto out = std::string(trim(std::string_view(title).substr(0, cut)));
  return out.empty() ? title : out;
}

inline Corpus load_site_dump(const std::string& text, const std::string& name, Site site, Diagnostics* diag) {
  const auto j = parse_json(text, name);
  std::vector<std::pair<std::string, const nlohmann::json*>> records;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) records.emplace_back("", &j[i]);
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) records.emplace_back(it.key(), &it.value());
  } else {
    throw SchemaError("", "<document>", "site dump must be a JSON array or object");
  }

  Corpus corpus;
  corpus.name = name;
  std::size_t skipped = 0;
  std::set<std::string> seen;
  for (std::size_t pos = 0; pos < records.size(); ++pos) {
    const auto& [key, rp] = records[pos];
    const auto& r = *rp;
    if (!r.is_object()) {
      ++skipped;
      continue;
    }
    SummarySet set;
    if (auto uid = first_string(r, {"uid", "id"})) {
      set.uid = *uid;
    } else if (r.contains("id") && r["id"].is_number_integer()) {
      set.uid = std::string(to_string(site)) + "-" + std::to_string(r["id"].get<long long>());
    } else if (!key.empty()) {
      set.uid = key;
    } else {
      set.uid = std::string(to_string(site)) + "-" + std::to_string(pos);
    }

    auto original = first_string(r, {"original_text", "original", "quote", "quoteText"});
    std::vector<std::string> summaries;
    bool curated = false;
    for (const char* k : {"summaries", "candidates"}) {
      if (!r.contains(k) || !r[k].is_array()) continue;
      for (const auto& s : r[k]) {
        if (s.is_string()) {
          summaries.push_back(s.get<std::string>());
        } else if (s.is_object()) {
          if (auto t = first_string(s, {"text", "summary"})) summaries.push_back(*t);
        }
      }
      break;
    }
    if (summaries.empty()) {
      if (auto s = first_string(r, {"reference_summary", "summary", "tldr"})) {
        summaries.push_back(*s);
        curated = true;
      }
    }
    summaries.erase(std::remove_if(summaries.begin(), summaries.end(),
                                   [](const std::string& s) { return only_whitespace(s); }),
                    summaries.end());
    if (!original || only_whitespace(*original) || summaries.empty()) {
      ++skipped;
      continue;
    }
    if (summaries.size() > 3) {
      if (diag) diag->warn("record '" + set.uid + "': keeping the first 3 of " + std::to_string(summaries.size()) + " summaries");
      summaries.resize(3);
    }
    if (!seen.insert(set.uid).second) {
      if (diag) diag->warn("record '" + set.uid + "': duplicate uid skipped");
      ++skipped;
      continue;
    }

    set.original_text = *original;
    set.source.site = site;
    set.source.document_title = first_string(r, {"doc", "document", "document_title", "title"}).value_or("");
    set.source.company = first_string(r, {"company", "service"}).value_or(company_from_title(set.source.document_title));
    if (set.source.document_title.empty()) set.source.document_title = set.source.company;
    if (set.source.company.empty()) set.source.company = "unknown";
    if (set.source.document_title.empty()) set.source.document_title = "unknown";
    if (auto date = first_string(r, {"document_date", "date"}); date && is_iso_date(*date)) set.source.document_date = date;
    set.source.url = first_string(r, {"url", "link"});

    std::optional<std::size_t> best;
    for (const char* k : {"best_index", "best"}) {
      if (r.contains(k) && r[k].is_number_integer()) {
        const auto v = r[k].get<long long>();
        if (v >= 0 && static_cast<std::size_t>(v) < summaries.size()) best = static_cast<std::size_t>(v);
      }
    }
    if (curated || site == Site::tldrlegal) best = best.value_or(0);
    for (std::size_t i = 0; i < summaries.size(); ++i) {
      CandidateSummary c;
      c.text = summaries[i];
      c.status = (best && *best == i) || site == Site::tldrlegal ? CandidateStatus::accepted
                                                                 : CandidateStatus::unreviewed;
      set.candidates.push_back(std::move(c));
    }
    set.best_index = best;
    corpus.sets.push_back(std::move(set));
  }
  if (skipped && diag)
    diag->warn(name + ": skipped " + std::to_string(skipped) + " record(s) without original text or summaries");
  return corpus;
}

}  // namespace detail

/// Parses corpus text in the given format. Skipped dump records are reported through diag.
inline Corpus parse_corpus(const std::string& text, CorpusFormat format, const std::string& name,
                           Diagnostics* diag = nullptr) {
  switch (format) {
    case CorpusFormat::canonical: return parse_canonical(text, name);
    case CorpusFormat::tldrlegal_dump: return detail::load_site_dump(text, name, Site::tldrlegal, diag);
    case CorpusFormat::tosdr_dump: return detail::load_site_dump(text, name, Site::tosdr, diag);
  }
  throw ArgumentError("unknown corpus format");
}

inline Corpus load_corpus(const std::string& path, CorpusFormat format, Diagnostics* diag = nullptr) {
  return parse_corpus(detail::read_file(path), format, detail::stem_name(path), diag);
}

inline void save_corpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << to_canonical_json(corpus);
  if (!out) throw IoError("error writing " + path);
}

/// Concatenates corpora; uids must stay unique.
inline Corpus merge(std::string name, const std::vector<Corpus>& parts) {
  Corpus out;
  out.name = std::move(name);
  for (const auto& p : parts) out.sets.insert(out.sets.end(), p.sets.begin(), p.sets.end());
  validate(out);
  return out;
}

// ---------------------------------------------------------------------------
// Quality filters

/// Lowercase, collapse whitespace, strip surrounding punctuation.
inline std::string normalize_for_comparison(std::string_view text) {
  const auto lower = detail::lowercase(text);
  std::vector<std::pair<std::size_t, std::size_t>> cps;  // (offset, length)
  for (std::size_t i = 0; i < lower.size();) {
    const auto cp = detail::decode_utf8(lower, i);
    cps.emplace_back(i, cp.length);
    i += cp.length;
  }
  std::size_t b = 0, e = cps.size();
  const auto strippable = [&](std::size_t k) {
    const auto c = detail::decode_utf8(lower, cps[k].first).value;
    return !detail::is_alnum(c);
  };
  while (b < e && strippable(b)) ++b;
  while (e > b && strippable(e - 1)) --e;

  std::string out;
  bool pending_space = false;
  for (std::size_t k = b; k < e; ++k) {
    const auto c = detail::decode_utf8(lower, cps[k].first).value;
    if (detail::is_space(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out += ' ';
    pending_space = false;
    out.append(lower, cps[k].first, cps[k].second);
  }
  return out;
}

inline std::size_t count_words(std::string_view text) {
  std::size_t n = 0;
  for (const auto& t : tokenize(text))
    if (!t.is_punct) ++n;
  return n;
}

struct FilterDecision {
  std::string uid;
  std::size_t candidate = 0;
  RejectReason reason = RejectReason::repetition;

  friend bool operator==(const FilterDecision&, const FilterDecision&) = default;
};

/// Rejected candidates of a filtered corpus with per-reason totals (all
/// reasons present, zero when unused).
struct FilterReport {
  std::vector<FilterDecision> rejections;
  std::map<RejectReason, std::size_t> counts;

  friend bool operator==(const FilterReport&, const FilterReport&) = default;
};

struct FilterResult {
  Corpus corpus;
  FilterReport report;
};

inline FilterReport rejection_report(const Corpus& corpus) {
  FilterReport report;
  for (auto r : kAllRejectReasons) report.counts[r] = 0;
  for (const auto& set : corpus.sets) {
    for (std::size_t i = 0; i < set.candidates.size(); ++i) {
      const auto& c = set.candidates[i];
      if (c.status != CandidateStatus::rejected || !c.reject_reason) continue;
      report.rejections.push_back({set.uid, i, *c.reject_reason});
      ++report.counts[*c.reject_reason];
    }
  }
  return report;
}

/// Applies the mechanically checkable rejection rules to unreviewed
/// candidates, in this order: repetition (normalized text equals an
/// earlier candidate of the same set), exact_quote (equals the original),
/// longer_than_original (more words than the original). Opinionated and
/// topic-only judgements are left to annotators.
inline FilterResult apply_quality_filters(const Corpus& corpus) {
  FilterResult result;
  result.corpus = corpus;
  for (auto& set : result.corpus.sets) {
    const auto original = normalize_for_comparison(set.original_text);
    const auto original_words = count_words(set.original_text);
    std::vector<std::string> seen;
    for (auto& c : set.candidates) {
      const auto norm = normalize_for_comparison(c.text);
      if (c.status == CandidateStatus::unreviewed) {
        std::optional<RejectReason> reason;
        if (std::find(seen.begin(), seen.end(), norm) != seen.end()) {
          reason = RejectReason::repetition;
        } else if (norm == original) {
          reason = RejectReason::exact_quote;
        } else if (count_words(c.text) > original_words) {
          reason = RejectReason::longer_than_original;
        }
        if (reason) {
          c.status = CandidateStatus::rejected;
          c.reject_reason = reason;
        }
      }
      seen.push_back(norm);
    }
  }
  result.report = rejection_report(result.corpus);
  return result;
}

// ---------------------------------------------------------------------------
// Templatic summaries

inline constexpr std::string_view kServicePlaceholder = "<service>";

/// Candidate text with every whole-word, case-insensitive occurrence of the
/// set's service names replaced by a placeholder (longest name first), then
/// normalized for comparison.
inline std::string template_key(std::string_view text, const SourceMeta& source) {
  std::vector<std::string> names;
  for (const auto& n : source.aliases)
    if (!detail::only_whitespace(n)) names.push_back(detail::lowercase(detail::trim(n)));
  if (!detail::only_whitespace(source.company)) names.push_back(detail::lowercase(detail::trim(source.company)));
  std::sort(names.begin(), names.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });

  auto work = detail::lowercase(text);
  const auto boundary = [&](std::size_t pos) {
    if (pos >= work.size()) return true;
    return !detail::is_alnum(detail::decode_utf8(work, pos).value);
  };
  const auto boundary_before = [&](std::size_t pos) {
    if (pos == 0) return true;
    std::size_t b = pos - 1;
    while (b > 0 && (static_cast<unsigned char>(work[b]) & 0xC0) == 0x80) --b;
    return !detail::is_alnum(detail::decode_utf8(work, b).value);
  };
  for (const auto& name : names) {
    std::size_t pos = 0;
    while ((pos = work.find(name, pos)) != std::string::npos) {
      if (boundary_before(pos) && boundary(pos + name.size())) {
        work.replace(pos, name.size(), kServicePlaceholder);
        pos += kServicePlaceholder.size();
      } else {
        pos += 1;
      }
    }
  }
  return normalize_for_comparison(work);
}

using CandidateRef = std::pair<std::string, std::size_t>;  // (uid, candidate index)

struct TemplaticResult {
  Corpus corpus;                  // templatic flags updated
  std::set<CandidateRef> flagged;
};

/// Flags candidates whose service-name-neutral text also occurs in a different set.
inline TemplaticResult detect_templatic(const Corpus& corpus) {
  std::map<std::string, std::set<std::size_t>> sets_by_key;
  std::vector<std::vector<std::string>> keys(corpus.sets.size());
  for (std::size_t s = 0; s < corpus.sets.size(); ++s) {
    const auto& set = corpus.sets[s];
    for (const auto& c : set.candidates) {
      keys[s].push_back(template_key(c.text, set.source));
      if (!keys[s].back().empty()) sets_by_key[keys[s].back()].insert(s);
    }
  }
  TemplaticResult result;
  result.corpus = corpus;
  for (std::size_t s = 0; s < corpus.sets.size(); ++s) {
    auto& set = result.corpus.sets[s];
    for (std::size_t i = 0; i < set.candidates.size(); ++i) {
      const auto& key = keys[s][i];
      const bool templatic = !key.empty() && sets_by_key[key].size() > 1;
      set.candidates[i].templatic = templatic;
      if (templatic) result.flagged.emplace(set.uid, i);
    }
  }
  return result;
}

struct CorpusCounts {
  std::size_t sets = 0;
  std::size_t documents = 0;
  std::size_t companies = 0;
  std::size_t candidates = 0;
  std::size_t accepted = 0;
  std::size_t unreviewed = 0;
  std::size_t sets_with_accepted = 0;
  std::map<RejectReason, std::size_t> rejected;
  std::size_t templatic = 0;              // flagged candidates
  std::size_t templatic_best = 0;         // flagged reference summaries
  std::size_t unique_templatic_best = 0;  // distinct service-neutral texts among those

  std::size_t rejected_total() const {
    std::size_t n = 0;
    for (const auto& [_, c] : rejected) n += c;
    return n;
  }
};

inline CorpusCounts corpus_counts(const Corpus& corpus) {
  CorpusCounts out;
  for (auto r : kAllRejectReasons) out.rejected[r] = 0;
  std::set<std::pair<std::string, std::string>> documents;
  std::set<std::string> companies;
  std::set<std::string> templatic_keys;
  for (const auto& set : corpus.sets) {
    ++out.sets;
    documents.emplace(set.source.company, set.source.document_title);
    companies.insert(set.source.company);
    bool any_accepted = false;
    for (const auto& c : set.candidates) {
      ++out.candidates;
      if (c.status == CandidateStatus::accepted) {
        ++out.accepted;
        any_accepted = true;
      } else if (c.status == CandidateStatus::unreviewed) {
        ++out.unreviewed;
      } else if (c.reject_reason) {
        ++out.rejected[*c.reject_reason];
      }
      if (c.templatic) ++out.templatic;
    }
    if (any_accepted) ++out.sets_with_accepted;
    if (const auto* ref = reference_summary(set); ref && ref->templatic) {
      ++out.templatic_best;
      templatic_keys.insert(template_key(ref->text, set.source));
    }
  }
  out.documents = documents.size();
  out.companies = companies.size();
  out.unique_templatic_best = templatic_keys.size();
  return out;
}

}  // namespace plainsum
