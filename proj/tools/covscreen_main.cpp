// Copyright 2026 The covscreen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// covscreen command-line tool. Everything goes through the C API in
// covscreen.h; this file only parses flags, moves files around and maps
// status codes onto exit codes (0 ok, 1 usage/validation, 2 I/O).

#include <covscreen.h>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

template <auto Free>
struct Deleter {
  template <typename T>
  void operator()(T* p) const {
    Free(p);
  }
};

using Corpus = std::unique_ptr<cs_corpus, Deleter<cs_corpus_free>>;
using Labels = std::unique_ptr<cs_labels, Deleter<cs_labels_free>>;
using Queries = std::unique_ptr<cs_queries, Deleter<cs_queries_free>>;
using Embeddings = std::unique_ptr<cs_embeddings, Deleter<cs_embeddings_free>>;
using Lexicon = std::unique_ptr<cs_lexicon, Deleter<cs_lexicon_free>>;
using Categories = std::unique_ptr<cs_categories, Deleter<cs_categories_free>>;
using Report = std::unique_ptr<cs_report, Deleter<cs_report_free>>;
using OwnedString = std::unique_ptr<char, Deleter<cs_string_free>>;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

// Thrown to unwind with a specific exit code.
struct Exit {
  int code;
};

void Check(cs_status status) {
  if (status == CS_OK) return;
  std::cerr << "covscreen: error: " << cs_last_error() << "\n";
  throw Exit{status == CS_ERR_IO ? kExitIo : kExitUsage};
}

[[noreturn]] void UsageError(const std::string& message) {
  std::cerr << "covscreen: error: " << message << "\n";
  throw Exit{kExitUsage};
}

void WriteOutput(const std::string& path, std::string_view text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    std::cerr << "covscreen: error: cannot write '" << path << "'\n";
    throw Exit{kExitIo};
  }
}

std::vector<std::string> ReadList(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "covscreen: error: cannot open '" << path << "' for reading\n";
    throw Exit{kExitIo};
  }
  std::vector<std::string> items;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    items.push_back(line.substr(first, last - first + 1));
  }
  return items;
}

std::vector<std::string> SplitCommas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Corpus LoadCorpus(const std::string& path) {
  cs_corpus* c = nullptr;
  Check(cs_corpus_read(path.c_str(), &c));
  return Corpus(c);
}

Labels LoadLabels(const std::string& path) {
  cs_labels* l = nullptr;
  Check(cs_labels_read(path.c_str(), &l));
  return Labels(l);
}

Labels LoadGold(const std::string& path) {
  cs_labels* l = nullptr;
  Check(cs_labels_read_gold(path.c_str(), &l));
  return Labels(l);
}

void SaveLabels(const cs_labels* labels, const std::string& path) {
  if (path.empty() || path == "-") {
    char* text = nullptr;
    Check(cs_labels_serialize(labels, &text));
    WriteOutput(path, OwnedString(text).get());
    return;
  }
  Check(cs_labels_write(labels, path.c_str()));
}

// name=path pairs for --pred.
struct NamedLabels {
  std::vector<std::string> names;
  std::vector<Labels> sets;

  std::vector<const cs_labels*> Pointers() const {
    std::vector<const cs_labels*> p;
    for (const auto& s : sets) p.push_back(s.get());
    return p;
  }
  std::vector<const char*> NamePointers() const {
    std::vector<const char*> p;
    for (const auto& n : names) p.push_back(n.c_str());
    return p;
  }
};

NamedLabels LoadNamed(const std::vector<std::string>& specs) {
  NamedLabels out;
  for (const auto& spec : specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      UsageError("--pred expects name=path, got '" + spec + "'");
    }
    out.names.push_back(spec.substr(0, eq));
    out.sets.push_back(LoadLabels(spec.substr(eq + 1)));
  }
  return out;
}

cs_report_format ReportFormat(const std::string& name) {
  if (name == "md" || name == "markdown") return CS_REPORT_MARKDOWN;
  if (name == "csv") return CS_REPORT_CSV;
  UsageError("unknown report format '" + name + "' (expected md or csv)");
}

std::string Render(const cs_report* report, cs_report_format format) {
  char* text = nullptr;
  Check(cs_report_render(report, format, &text));
  return OwnedString(text).get();
}

Categories BuildCategories(const cs_corpus* corpus, const cs_labels* gold,
                           const NamedLabels& preds, const std::string& lexicon_path) {
  cs_lexicon* lex = nullptr;
  if (lexicon_path.empty()) {
    Check(cs_lexicon_default(&lex));
  } else {
    Check(cs_lexicon_read(lexicon_path.c_str(), &lex));
  }
  Lexicon lexicon(lex);
  auto ptrs = preds.Pointers();
  auto names = preds.NamePointers();
  cs_categories* table = nullptr;
  Check(cs_categorize(corpus, gold, ptrs.data(), names.data(), ptrs.size(), lexicon.get(),
                      &table));
  return Categories(table);
}

// ---- subcommands -----------------------------------------------------------

struct IngestArgs {
  std::string metadata;
  std::string out;
  std::string format = "native";
};

void RunIngest(const IngestArgs& a) {
  cs_metadata_format fmt = CS_FORMAT_NATIVE;
  if (a.format == "cord19") {
    fmt = CS_FORMAT_CORD19;
  } else if (a.format != "native") {
    UsageError("unknown metadata format '" + a.format + "'");
  }
  cs_corpus* c = nullptr;
  size_t rows = 0, dropped = 0;
  Check(cs_corpus_ingest(a.metadata.c_str(), fmt, &c, &rows, &dropped));
  Corpus corpus(c);
  Check(cs_corpus_write(corpus.get(), a.out.c_str()));
  std::cout << "kept " << cs_corpus_size(corpus.get()) << " / dropped " << dropped << "\n";
}

struct WeaklabelArgs {
  std::string corpus, vaccine, therapeutics, train_out, val_out;
  std::vector<std::string> negatives;
  std::uint64_t seed = 0;
};

void RunWeaklabel(const WeaklabelArgs& a) {
  auto corpus = LoadCorpus(a.corpus);
  std::vector<const char*> neg;
  for (const auto& n : a.negatives) neg.push_back(n.c_str());
  cs_labels* train = nullptr;
  cs_labels* val = nullptr;
  Check(cs_weaklabel_build(a.vaccine.c_str(), a.therapeutics.c_str(), neg.data(), neg.size(),
                           corpus.get(), a.seed, &train, &val));
  Labels t(train), v(val);
  SaveLabels(t.get(), a.train_out);
  SaveLabels(v.get(), a.val_out);
  std::cerr << "train " << cs_labels_size(t.get()) << " / validation "
            << cs_labels_size(v.get()) << "\n";
}

struct ScoreArgs {
  std::string corpus, out;
  // ms
  std::string queries, stopwords;
  // lss
  std::string embeddings, vaccine_seeds, therapeutics_seeds;
  std::size_t pair_budget = 1000;
  std::size_t k = 50;
  std::optional<double> min_score;
  bool weight_by_occurrence = false;
  // nsp / ch / sts / external
  std::string nsp_scores, ch_scores, sts_scores, predictions;
  double nsp_threshold = 0.999;
  double ch_cut = 0.5;
  std::size_t sts_top_n = 3;
  double sts_threshold = 2.0;
};

void RunScore(const std::string& scorer, const ScoreArgs& a) {
  auto corpus = LoadCorpus(a.corpus);
  cs_labels* out = nullptr;
  if (scorer == "ms") {
    cs_queries* q = nullptr;
    Check(a.queries.empty() ? cs_queries_default(&q) : cs_queries_read(a.queries.c_str(), &q));
    Queries queries(q);
    Check(cs_score_ms(corpus.get(), queries.get(),
                      a.stopwords.empty() ? nullptr : a.stopwords.c_str(), &out));
  } else if (scorer == "lss") {
    cs_embeddings* e = nullptr;
    Check(cs_embeddings_read(a.embeddings.c_str(), &e));
    Embeddings table(e);
    std::vector<std::string> vs, ts;
    std::vector<const char*> vp, tp;
    cs_lss_options opts{};
    if (!a.vaccine_seeds.empty()) {
      vs = ReadList(a.vaccine_seeds);
      for (const auto& s : vs) vp.push_back(s.c_str());
      opts.vaccine_seeds = vp.data();
      opts.n_vaccine_seeds = vp.size();
    }
    if (!a.therapeutics_seeds.empty()) {
      ts = ReadList(a.therapeutics_seeds);
      for (const auto& s : ts) tp.push_back(s.c_str());
      opts.therapeutics_seeds = tp.data();
      opts.n_therapeutics_seeds = tp.size();
    }
    opts.pair_budget = a.pair_budget;
    opts.k = a.k;
    opts.use_min_score = a.min_score.has_value();
    opts.min_score = a.min_score.value_or(0.0);
    opts.weight_by_occurrence = a.weight_by_occurrence;
    Check(cs_score_lss(corpus.get(), table.get(), &opts, &out));
  } else if (scorer == "nsp") {
    Check(cs_score_nsp(corpus.get(), a.nsp_scores.c_str(), a.nsp_threshold, &out));
  } else if (scorer == "ch") {
    Check(cs_score_ch(corpus.get(), a.nsp_scores.c_str(), a.nsp_threshold,
                      a.ch_scores.c_str(), a.ch_cut, &out));
  } else if (scorer == "sts") {
    Check(cs_score_sts(corpus.get(), a.sts_scores.c_str(), a.sts_top_n, a.sts_threshold, &out));
  } else {
    Check(cs_score_external(corpus.get(), a.predictions.c_str(), &out));
  }
  Labels preds(out);
  SaveLabels(preds.get(), a.out);
}

struct EnsembleArgs {
  std::vector<std::string> preds;
  std::string subset;
  std::uint64_t seed = 0;
  std::string out;
};

void RunEnsemble(const EnsembleArgs& a) {
  auto named = LoadNamed(a.preds);
  std::vector<const cs_labels*> ptrs;
  std::vector<const char*> names;
  if (a.subset.empty()) {
    ptrs = named.Pointers();
    names = named.NamePointers();
  } else {
    for (const auto& want : SplitCommas(a.subset)) {
      std::size_t i = 0;
      while (i < named.names.size() && named.names[i] != want) ++i;
      if (i == named.names.size()) UsageError("subset names unknown scorer '" + want + "'");
      ptrs.push_back(named.sets[i].get());
      names.push_back(named.names[i].c_str());
    }
  }
  if (ptrs.empty()) UsageError("no predictions given");
  cs_labels* out = nullptr;
  Check(cs_ensemble(ptrs.data(), names.data(), ptrs.size(), a.seed, &out));
  Labels result(out);
  SaveLabels(result.get(), a.out);
}

struct EvalArgs {
  std::string gold;
  std::vector<std::string> preds;
  std::string format = "md";
  std::string out;
  std::string corpus, lexicon;
  std::vector<std::string> annotators;
};

void RunEval(const EvalArgs& a) {
  const auto format = ReportFormat(a.format);
  auto gold = LoadGold(a.gold);
  auto named = LoadNamed(a.preds);
  Report report(cs_report_create());
  for (std::size_t i = 0; i < named.sets.size(); ++i) {
    Check(cs_report_add_system(report.get(), named.names[i].c_str(), gold.get(),
                               named.sets[i].get()));
  }
  if (!a.annotators.empty()) {
    if (a.annotators.size() != 2) UsageError("--annotator must be given exactly twice");
    auto first = LoadGold(a.annotators[0]);
    auto second = LoadGold(a.annotators[1]);
    double kappa = 0.0;
    Check(cs_cohen_kappa(first.get(), second.get(), &kappa));
    Check(cs_report_set_kappa(report.get(), kappa));
  }
  if (!a.corpus.empty()) {
    auto corpus = LoadCorpus(a.corpus);
    auto table = BuildCategories(corpus.get(), gold.get(), named, a.lexicon);
    Check(cs_report_set_categories(report.get(), table.get()));
  }
  WriteOutput(a.out, Render(report.get(), format));
}

struct CategorizeArgs {
  std::string corpus, gold, lexicon, out, assignments;
  std::vector<std::string> preds;
};

void RunCategorize(const CategorizeArgs& a) {
  auto corpus = LoadCorpus(a.corpus);
  auto gold = LoadGold(a.gold);
  auto named = LoadNamed(a.preds);
  auto table = BuildCategories(corpus.get(), gold.get(), named, a.lexicon);
  char* text = nullptr;
  Check(cs_categories_render_csv(table.get(), &text));
  WriteOutput(a.out, OwnedString(text).get());
  if (!a.assignments.empty()) {
    char* rows = nullptr;
    Check(cs_categories_render_assignments(table.get(), &rows));
    WriteOutput(a.assignments, OwnedString(rows).get());
  }
}

struct ReportArgs {
  std::vector<std::string> metrics;
  std::string categories;
  std::optional<double> kappa;
  std::string format = "md";
  std::string out;
};

void RunReport(const ReportArgs& a) {
  const auto format = ReportFormat(a.format);
  Report report(cs_report_create());
  for (const auto& m : a.metrics) Check(cs_report_add_rows_from(report.get(), m.c_str()));
  if (!a.categories.empty()) {
    cs_categories* t = nullptr;
    Check(cs_categories_read_csv(a.categories.c_str(), &t));
    Categories table(t);
    Check(cs_report_set_categories(report.get(), table.get()));
  }
  if (a.kappa) Check(cs_report_set_kappa(report.get(), *a.kappa));
  WriteOutput(a.out, Render(report.get(), format));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Screen article records into vaccine / therapeutics / other and analyze "
               "scorer performance."};
  app.set_config("--config", "", "TOML/INI file with default flag values");
  app.set_version_flag("--version", std::string(cs_version()));
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Ingest article metadata CSV into a corpus");
  ingest_cmd->add_option("--metadata", ingest.metadata, "Metadata CSV")->required();
  ingest_cmd->add_option("--out", ingest.out, "Corpus artifact to write")->required();
  ingest_cmd->add_option("--format", ingest.format, "native or cord19")
      ->check(CLI::IsMember({"native", "cord19"}));

  WeaklabelArgs weak;
  auto* weak_cmd =
      app.add_subcommand("weaklabel", "Build an 80/20 weakly labeled set from ranked lists");
  weak_cmd->add_option("--corpus", weak.corpus, "Corpus artifact or CSV")->required();
  weak_cmd->add_option("--vaccine", weak.vaccine, "Vaccine ranked list TSV")->required();
  weak_cmd->add_option("--therapeutics", weak.therapeutics, "Therapeutics ranked list TSV")
      ->required();
  weak_cmd->add_option("--negative", weak.negatives, "Negative ranked list TSV (repeatable)");
  weak_cmd->add_option("--seed", weak.seed, "Split seed");
  weak_cmd->add_option("--train-out", weak.train_out, "Training labels TSV")->required();
  weak_cmd->add_option("--val-out", weak.val_out, "Validation labels TSV")->required();

  ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "Score every corpus article with one scorer");
  score_cmd->require_subcommand(1);
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--corpus", score.corpus, "Corpus artifact or CSV")->required();
    cmd->add_option("--out", score.out, "Prediction TSV (default stdout)");
  };
  std::string scorer;
  auto pick = [&](const char* name) { return [&scorer, name] { scorer = name; }; };

  auto* ms = score_cmd->add_subcommand("ms", "tf-idf micro-scorer");
  add_common(ms);
  ms->add_option("--queries", score.queries, "Query file (TOML or JSON)");
  ms->add_option("--stopwords", score.stopwords, "Stopword list");
  ms->callback(pick("ms"));

  auto* lss = score_cmd->add_subcommand("lss", "Lexicon-based similarity scorer");
  add_common(lss);
  lss->add_option("--embeddings", score.embeddings, "Embedding table")->required();
  lss->add_option("--vaccine-seeds", score.vaccine_seeds, "Vaccine seed list file");
  lss->add_option("--therapeutics-seeds", score.therapeutics_seeds,
                  "Therapeutics seed list file");
  lss->add_option("--pair-budget", score.pair_budget, "Closest seed pairs defining the threshold")
      ->check(CLI::PositiveNumber);
  lss->add_option("--k", score.k, "Representative words per article")->check(CLI::PositiveNumber);
  lss->add_option("--min-score", score.min_score, "Both scores below this -> other");
  lss->add_flag("--weight-by-occurrence", score.weight_by_occurrence,
                "Average over token occurrences instead of types");
  lss->callback(pick("lss"));

  auto* nsp = score_cmd->add_subcommand("nsp", "Next-sentence-probability decision rule");
  add_common(nsp);
  nsp->add_option("--nsp-scores", score.nsp_scores, "Raw NSP TSV")->required();
  nsp->add_option("--nsp-threshold", score.nsp_threshold, "Probability threshold");
  nsp->callback(pick("nsp"));

  auto* ch = score_cmd->add_subcommand("ch", "NSP gate combined with Clinical Hedges");
  add_common(ch);
  ch->add_option("--nsp-scores", score.nsp_scores, "Raw NSP TSV")->required();
  ch->add_option("--ch-scores", score.ch_scores, "Raw Clinical Hedges TSV")->required();
  ch->add_option("--nsp-threshold", score.nsp_threshold, "Probability threshold");
  ch->add_option("--ch-cut", score.ch_cut, "Therapeutics probability cut");
  ch->callback(pick("ch"));

  auto* sts = score_cmd->add_subcommand("sts", "Semantic-similarity segment rule");
  add_common(sts);
  sts->add_option("--sts-scores", score.sts_scores, "Raw STS TSV")->required();
  sts->add_option("--sts-top-n", score.sts_top_n, "Segments averaged per class")
      ->check(CLI::PositiveNumber);
  sts->add_option("--sts-threshold", score.sts_threshold, "Positive threshold (0-5)");
  sts->callback(pick("sts"));

  auto* ext = score_cmd->add_subcommand("external", "Externally produced predictions");
  add_common(ext);
  ext->add_option("--predictions", score.predictions, "Prediction TSV")->required();
  ext->callback(pick("external"));

  EnsembleArgs ens;
  auto* ens_cmd = app.add_subcommand("ensemble", "Majority vote over scorer predictions");
  ens_cmd->add_option("--pred", ens.preds, "name=path (repeatable)")->required();
  ens_cmd->add_option("--subset", ens.subset, "Comma-separated scorer names (default all)");
  ens_cmd->add_option("--seed", ens.seed, "Tie-break seed");
  ens_cmd->add_option("--out", ens.out, "Prediction TSV (default stdout)");

  EvalArgs ev;
  auto* eval_cmd = app.add_subcommand("eval", "Positive-class metrics and category analysis");
  eval_cmd->add_option("--gold", ev.gold, "Gold labels TSV")->required();
  eval_cmd->add_option("--pred", ev.preds, "name=path (repeatable)")->required();
  eval_cmd->add_option("--report", ev.format, "md or csv");
  eval_cmd->add_option("--out", ev.out, "Report file (default stdout)");
  eval_cmd->add_option("--corpus", ev.corpus, "Corpus, enables the category table");
  eval_cmd->add_option("--lexicon", ev.lexicon, "Lexicon file (default built-in)");
  eval_cmd->add_option("--annotator", ev.annotators, "Two annotator label files for kappa");

  CategorizeArgs cat;
  auto* cat_cmd = app.add_subcommand("categorize", "Lexicon x gold-positivity category table");
  cat_cmd->add_option("--corpus", cat.corpus, "Corpus artifact or CSV")->required();
  cat_cmd->add_option("--gold", cat.gold, "Gold labels TSV")->required();
  cat_cmd->add_option("--lexicon", cat.lexicon, "Lexicon file (default built-in)");
  cat_cmd->add_option("--pred", cat.preds, "name=path (repeatable)");
  cat_cmd->add_option("--out", cat.out, "Category CSV (default stdout)");
  cat_cmd->add_option("--assignments", cat.assignments, "Per-article category TSV");

  ReportArgs rep;
  auto* rep_cmd = app.add_subcommand("report", "Render metrics / category files as a report");
  rep_cmd->add_option("--metrics", rep.metrics, "Metrics TSV (repeatable)");
  rep_cmd->add_option("--categories", rep.categories, "Category CSV from `categorize`");
  rep_cmd->add_option("--kappa", rep.kappa, "Inter-annotator kappa");
  rep_cmd->add_option("--format", rep.format, "md or csv");
  rep_cmd->add_option("--out", rep.out, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (ingest_cmd->parsed()) RunIngest(ingest);
    if (weak_cmd->parsed()) RunWeaklabel(weak);
    if (score_cmd->parsed()) RunScore(scorer, score);
    if (ens_cmd->parsed()) RunEnsemble(ens);
    if (eval_cmd->parsed()) RunEval(ev);
    if (cat_cmd->parsed()) RunCategorize(cat);
    if (rep_cmd->parsed()) RunReport(rep);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitOk;
}
