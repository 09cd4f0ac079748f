// Command-line front end: ingest, filter, analyse and evaluate summary corpora.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plainsum/plainsum.hpp"

namespace {

using namespace plainsum;

struct RunConfig {
  std::vector<std::string> corpus;
  std::string format = "canonical";
  std::string output = "-";
  std::string out_format = "csv";
  std::uint64_t seed = 0;
  std::size_t runs = kDefaultRandomRuns;
  std::string budget = "auto";
  bool no_preprocess = false;

  std::string table = "novelty";
  std::size_t min_count = kDefaultMinCount;
  double smoothing = kDefaultSmoothing;
  std::size_t k = 50;
  std::size_t max_n = 4;
  std::string system = "all";
  std::string measure = "f1";
  std::string write_corpus;
};

void flush_warnings(const Diagnostics& diag) {
  for (const auto& w : diag.warnings) std::cerr << "warning: " << w << '\n';
}

CorpusFormat format_of(const RunConfig& cfg) {
  if (auto f = parse_format(cfg.format)) return *f;
  throw ArgumentError("unknown corpus format '" + cfg.format + "'");
}

OutputFormat out_format_of(const RunConfig& cfg) {
  if (cfg.out_format == "csv") return OutputFormat::csv;
  if (cfg.out_format == "jsonl") return OutputFormat::jsonl;
  throw ArgumentError("unknown output format '" + cfg.out_format + "'");
}

Corpus load_inputs(const RunConfig& cfg, Diagnostics& diag) {
  if (cfg.corpus.empty()) throw ArgumentError("--corpus is required");
  std::vector<Corpus> parts;
  for (const auto& path : cfg.corpus) parts.push_back(load_corpus(path, format_of(cfg), &diag));
  if (parts.size() == 1) return std::move(parts.front());
  return merge("combined", parts);
}

Corpus load_nonempty(const RunConfig& cfg, Diagnostics& diag) {
  auto corpus = load_inputs(cfg, diag);
  if (evaluable_sets(corpus).empty()) throw EmptyInputError("corpus has no summary sets with a reference summary");
  return corpus;
}

void emit(const RunConfig& cfg, const Table& table) {
  if (cfg.output == "-") {
    write_table(std::cout, table, out_format_of(cfg));
  } else {
    write_table(cfg.output, table, out_format_of(cfg));
  }
}

std::vector<System> systems_of(const RunConfig& cfg) {
  if (cfg.system == "all") return {kAllSystems.begin(), kAllSystems.end()};
  std::vector<System> out;
  std::size_t start = 0;
  while (start <= cfg.system.size()) {
    auto end = cfg.system.find(',', start);
    if (end == std::string::npos) end = cfg.system.size();
    const auto name = cfg.system.substr(start, end - start);
    auto s = parse_system(name);
    if (!s) throw ArgumentError("unknown system '" + name + "'");
    out.push_back(*s);
    start = end + 1;
  }
  return out;
}

EvalConfig eval_config_of(const RunConfig& cfg) {
  EvalConfig e;
  e.preprocess = cfg.no_preprocess ? PreprocessConfig::raw() : PreprocessConfig::baseline();
  e.runs = cfg.runs;
  e.seed = cfg.seed;
  if (cfg.budget != "auto") {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(cfg.budget, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != cfg.budget.size() || v < 1) throw ArgumentError("--budget must be 'auto' or a positive integer");
    e.budget = Budget::fixed(static_cast<std::size_t>(v));
  }
  return e;
}

void cmd_ingest(const RunConfig& cfg) {
  Diagnostics diag;
  const auto corpus = load_inputs(cfg, diag);
  flush_warnings(diag);
  if (cfg.output == "-") {
    std::cout << to_canonical_json(corpus);
  } else {
    save_corpus(corpus, cfg.output);
  }
  std::cerr << "ingested " << corpus.sets.size() << " summary sets\n";
}

void cmd_filter(const RunConfig& cfg) {
  Diagnostics diag;
  const auto corpus = load_inputs(cfg, diag);
  flush_warnings(diag);
  auto filtered = apply_quality_filters(corpus);
  auto marked = detect_templatic(filtered.corpus);
  if (!cfg.write_corpus.empty()) save_corpus(marked.corpus, cfg.write_corpus);
  emit(cfg, filter_table(filtered.report));
  for (const auto& [reason, n] : filtered.report.counts) std::cerr << to_string(reason) << ": " << n << '\n';
  std::cerr << "templatic: " << marked.flagged.size() << '\n';
}

void cmd_stats(const RunConfig& cfg) {
  Diagnostics diag;
  const auto corpus = load_nonempty(cfg, diag);
  Table table;
  if (cfg.table == "novelty") {
    table = novelty_table(corpus, cfg.max_n);
  } else if (cfg.table == "lengths") {
    table = lengths_table(compression_stats(corpus, &diag));
  } else if (cfg.table == "ratios") {
    table = ratios_table(compression_stats(corpus, &diag));
  } else if (cfg.table == "logodds") {
    table = logodds_table(log_odds_ratios(corpus, cfg.min_count, cfg.smoothing));
  } else if (cfg.table == "wordsets") {
    table = wordset_table(top_k_pair(log_odds_ratios(corpus, cfg.min_count, cfg.smoothing), cfg.k));
  } else if (cfg.table == "counts") {
    table = counts_table(corpus_counts(detect_templatic(corpus).corpus));
  } else {
    throw ArgumentError("unknown table '" + cfg.table + "'");
  }
  flush_warnings(diag);
  emit(cfg, table);
}

void cmd_readability(const RunConfig& cfg) {
  Diagnostics diag;
  const auto corpus = load_nonempty(cfg, diag);
  flush_warnings(diag);
  emit(cfg, readability_table(corpus_readability(corpus, TextSide::summaries),
                              corpus_readability(corpus, TextSide::originals)));
}

void cmd_summarize(const RunConfig& cfg) {
  Diagnostics diag;
  const auto corpus = load_nonempty(cfg, diag);
  const auto eval = eval_config_of(cfg);
  const auto budget = eval.budget ? *eval.budget : auto_budget(corpus);
  Table table{{"uid", "system", "run", "selected", "word_count", "summary", "display"}, {}};
  for (auto system : systems_of(cfg)) {
    const std::size_t runs = system == System::randomk ? std::max<std::size_t>(1, cfg.runs) : 1;
    for (const auto& set : corpus.sets) {
      const auto doc = preprocess(set.original_text, eval.preprocess);
      if (doc.degenerate()) {
        diag.warn("set '" + set.uid + "': no content after preprocessing, skipped");
        continue;
      }
      for (std::size_t r = 0; r < runs; ++r) {
        const auto s = summarize(system, doc, budget, cfg.seed, r, set.uid);
        table.rows.push_back({set.uid, std::string(to_string(system)), std::to_string(r), join_indices(s.selected),
                              std::to_string(s.word_count), s.text, display_form(s, doc)});
      }
    }
  }
  flush_warnings(diag);
  emit(cfg, table);
}

void cmd_evaluate(const RunConfig& cfg) {
  Diagnostics diag;
  const auto corpus = load_nonempty(cfg, diag);
  const auto measure = parse_measure(cfg.measure);
  if (!measure) throw ArgumentError("unknown measure '" + cfg.measure + "'");
  const auto table = evaluate(corpus, systems_of(cfg), eval_config_of(cfg), &diag);
  flush_warnings(diag);
  std::cerr << "budget: " << table.budget.target_words << " words\n";
  emit(cfg, evaluation_table(table, *measure));
}

void cmd_report(const RunConfig& cfg) {
  if (cfg.output == "-") throw ArgumentError("report needs --output DIRECTORY");
  Diagnostics diag;
  const auto corpus = load_nonempty(cfg, diag);
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(cfg.output, ec);
  if (ec) throw IoError("cannot create " + cfg.output + ": " + ec.message());
  const auto fmt_ = out_format_of(cfg);
  const std::string ext = fmt_ == OutputFormat::csv ? ".csv" : ".jsonl";
  const auto path = [&](const std::string& name) { return (fs::path(cfg.output) / (name + ext)).string(); };

  const auto stats = compression_stats(corpus, &diag);
  write_table(path("counts"), counts_table(corpus_counts(detect_templatic(corpus).corpus)), fmt_);
  write_table(path("fig2_novelty"), novelty_table(corpus, cfg.max_n), fmt_);
  write_table(path("fig3_lengths"), lengths_table(stats), fmt_);
  write_table(path("fig3_ratios"), ratios_table(stats), fmt_);
  write_table(path("table3_readability"),
              readability_table(corpus_readability(corpus, TextSide::summaries),
                                corpus_readability(corpus, TextSide::originals)),
              fmt_);
  const auto assoc = log_odds_ratios(corpus, cfg.min_count, cfg.smoothing);
  write_table(path("logodds"), logodds_table(assoc), fmt_);
  try {
    const auto pair = top_k_pair(assoc, cfg.k);
    write_table(path("table5_wordsets"), wordset_table(pair), fmt_);
    write_table(path("wordset_gap"), wordset_gap_table(wordset_gap(pair)), fmt_);
  } catch (const UndefinedStatisticError& e) {
    diag.warn(std::string("word sets not written: ") + e.what());
  }
  const auto eval = evaluate(corpus, {kAllSystems.begin(), kAllSystems.end()}, eval_config_of(cfg), &diag);
  write_table(path("table4_rouge_f1"), evaluation_table(eval, RougeMeasure::f1), fmt_);
  write_table(path("table4_rouge_recall"), evaluation_table(eval, RougeMeasure::recall), fmt_);
  flush_warnings(diag);
  std::cerr << "report written to " << cfg.output << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plainsum: plain-English contract summarization toolkit"};
  app.set_config("--config", "", "TOML/INI file with option defaults; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--corpus", cfg.corpus, "Input corpus file (repeat to merge)");
  app.add_option("--format", cfg.format, "Input format")
      ->check(CLI::IsMember({"canonical", "tldrlegal_dump", "tosdr_dump"}));
  app.add_option("--output", cfg.output, "Output file, '-' for stdout (directory for report)");
  app.add_option("--out-format", cfg.out_format, "Tabular output format")->check(CLI::IsMember({"csv", "jsonl"}));
  app.add_option("--seed", cfg.seed, "Base seed for Random-K");
  app.add_option("--runs", cfg.runs, "Random-K runs to average")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "Summary word budget: auto or a positive integer");
  app.add_flag("--no-preprocess", cfg.no_preprocess, "Use surface tokens instead of lemmas without stopwords");

  auto* ingest = app.add_subcommand("ingest", "Convert a site dump or canonical corpus to canonical JSON");
  auto* filter = app.add_subcommand("filter", "Apply quality filters and templatic detection");
  filter->add_option("--write-corpus", cfg.write_corpus, "Also save the filtered corpus here");
  auto* stats = app.add_subcommand("stats", "Novelty, length, ratio, log-odds and count tables");
  stats->add_option("--table", cfg.table, "Which table")
      ->check(CLI::IsMember({"novelty", "lengths", "ratios", "logodds", "wordsets", "counts"}));
  stats->add_option("--max-n", cfg.max_n, "Largest n-gram order for novelty")->check(CLI::PositiveNumber);
  auto* readability = app.add_subcommand("readability", "Reading ages of summaries and originals");
  auto* summarize_cmd = app.add_subcommand("summarize", "Run extractive systems on every set");
  summarize_cmd->add_option("--system", cfg.system, "System name, comma list, or 'all'");
  auto* evaluate_cmd = app.add_subcommand("evaluate", "ROUGE table of the extractive systems");
  evaluate_cmd->add_option("--system", cfg.system, "System name, comma list, or 'all'");
  evaluate_cmd->add_option("--measure", cfg.measure, "f1, recall or precision")
      ->check(CLI::IsMember({"f1", "recall", "precision"}));
  auto* report = app.add_subcommand("report", "Write every table and figure dataset into --output");
  for (auto* sc : {stats, report}) {
    sc->add_option("--min-count", cfg.min_count, "Minimum combined count for log-odds words");
    sc->add_option("--smoothing", cfg.smoothing, "Additive smoothing for log-odds")->check(CLI::PositiveNumber);
    sc->add_option("--k", cfg.k, "Words per side for the word sets");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (ingest->parsed()) cmd_ingest(cfg);
    else if (filter->parsed()) cmd_filter(cfg);
    else if (stats->parsed()) cmd_stats(cfg);
    else if (readability->parsed()) cmd_readability(cfg);
    else if (summarize_cmd->parsed()) cmd_summarize(cfg);
    else if (evaluate_cmd->parsed()) cmd_evaluate(cfg);
    else if (report->parsed()) cmd_report(cfg);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
