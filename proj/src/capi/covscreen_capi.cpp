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

#include "covscreen.h"

#include <array>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "core/corpus.hpp"
#include "core/ensemble.hpp"
#include "core/error.hpp"
#include "core/eval.hpp"
#include "core/io.hpp"
#include "core/lexicon_scorer.hpp"
#include "core/micro_scorer.hpp"
#include "core/model_rules.hpp"
#include "core/predictions.hpp"
#include "core/report.hpp"
#include "core/textprep.hpp"
#include "core/weak_labels.hpp"

struct cs_corpus {
  covscreen::Corpus value;
};
struct cs_labels {
  covscreen::PredictionSet value;
};
struct cs_queries {
  covscreen::micro::QuerySet value;
};
struct cs_embeddings {
  covscreen::lss::EmbeddingTable value;
};
struct cs_lexicon {
  covscreen::eval::Lexicon value;
};
struct cs_categories {
  covscreen::eval::CategoryTable value;
};
struct cs_report {
  covscreen::report::Report value;
};

namespace {

using covscreen::Label;

thread_local std::string g_last_error;

class InvalidArgument : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

cs_status Fail(cs_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
cs_status Guard(Body&& body) {
  try {
    body();
    return CS_OK;
  } catch (const InvalidArgument& e) {
    return Fail(CS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const covscreen::ParseError& e) {
    return Fail(CS_ERR_PARSE, e.what());
  } catch (const covscreen::ValidationError& e) {
    return Fail(CS_ERR_VALIDATION, e.what());
  } catch (const covscreen::IoError& e) {
    return Fail(CS_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(CS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(CS_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(CS_ERR_INTERNAL, "unknown error");
  }
}

template <typename T>
const T& Deref(const T* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string("null ") + what);
  return *p;
}

template <typename T>
T& Deref(T* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string("null ") + what);
  return *p;
}

std::string Str(const char* s, const char* what) {
  if (s == nullptr) throw InvalidArgument(std::string("null ") + what);
  return s;
}

template <typename T>
void RequireOut(T** out) {
  if (out == nullptr) throw InvalidArgument("null output pointer");
  *out = nullptr;
}

char* CopyString(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

Label ToLabel(cs_label l) {
  switch (l) {
    case CS_LABEL_VACCINE:
      return Label::kVaccine;
    case CS_LABEL_THERAPEUTICS:
      return Label::kTherapeutics;
    case CS_LABEL_OTHER:
      return Label::kOther;
  }
  throw InvalidArgument("invalid label value");
}

cs_label FromLabel(Label l) { return static_cast<cs_label>(covscreen::Index(l)); }

cs_labels* Wrap(covscreen::PredictionSet set) {
  return new cs_labels{std::move(set)};
}

std::vector<std::string> Strings(const char* const* items, size_t n, const char* what) {
  std::vector<std::string> out;
  if (n > 0 && items == nullptr) throw InvalidArgument(std::string("null ") + what);
  for (size_t i = 0; i < n; ++i) out.push_back(Str(items[i], what));
  return out;
}

void CheckProbability(double v, const char* what) {
  if (!(v > 0.0 && v <= 1.0)) {
    throw InvalidArgument(std::string(what) + " must be in (0, 1]");
  }
}
covscreen::eval::PositiveMetrics MetricsFor(const cs_labels* gold, const cs_labels* predictions) {
  const auto& g = Deref(gold, "gold").value;
  const auto restricted = Deref(predictions, "predictions").value.Restrict(g.Ids());
  return covscreen::eval::PositivePrf(covscreen::eval::Confusion(g, restricted));
}

cs_prf ToPrf(const covscreen::eval::Prf& p) { return {p.precision, p.recall, p.f}; }

}  // namespace

extern "C" {

const char* cs_version(void) { return "1.0.0"; }

const char* cs_last_error(void) { return g_last_error.c_str(); }

void cs_string_free(char* s) { std::free(s); }

const char* cs_label_name(cs_label label) {
  switch (label) {
    case CS_LABEL_VACCINE:
      return "vaccine";
    case CS_LABEL_THERAPEUTICS:
      return "therapeutics";
    case CS_LABEL_OTHER:
      return "other";
  }
  return "invalid";
}

cs_status cs_label_parse(const char* name, cs_label* out) {
  return Guard([&] {
    const auto l = covscreen::ParseLabel(Str(name, "label name"));
    if (!l) throw covscreen::ParseError(std::string("unknown label '") + name + "'");
    Deref(out, "output") = FromLabel(*l);
  });
}

// ---- corpus ----

cs_status cs_corpus_ingest(const char* csv_path, cs_metadata_format format,
                           cs_corpus** out, size_t* rows, size_t* dropped) {
  return Guard([&] {
    RequireOut(out);
    covscreen::MetadataFormat fmt;
    if (format == CS_FORMAT_NATIVE) {
      fmt = covscreen::MetadataFormat::kNative;
    } else if (format == CS_FORMAT_CORD19) {
      fmt = covscreen::MetadataFormat::kCord19;
    } else {
      throw InvalidArgument("invalid metadata format");
    }
    auto result = covscreen::IngestMetadataFile(Str(csv_path, "metadata path"), fmt);
    if (rows) *rows = result.rows;
    if (dropped) *dropped = result.dropped;
    *out = new cs_corpus{std::move(result.corpus)};
  });
}

cs_status cs_corpus_read(const char* path, cs_corpus** out) {
  return Guard([&] {
    RequireOut(out);
    *out = new cs_corpus{covscreen::LoadCorpus(Str(path, "corpus path"))};
  });
}

cs_status cs_corpus_write(const cs_corpus* corpus, const char* path) {
  return Guard([&] {
    covscreen::SaveCorpus(Deref(corpus, "corpus").value, Str(path, "corpus path"));
  });
}

size_t cs_corpus_size(const cs_corpus* corpus) {
  return corpus ? corpus->value.size() : 0;
}

cs_status cs_corpus_article(const cs_corpus* corpus, size_t index, cs_article_view* out) {
  return Guard([&] {
    const auto& c = Deref(corpus, "corpus").value;
    auto& view = Deref(out, "output");
    if (index >= c.size()) throw InvalidArgument("article index out of range");
    const auto& a = c.articles()[index];
    view = {a.id.c_str(), a.title.c_str(), a.abstract.c_str(), a.journal.c_str()};
  });
}

cs_status cs_compose_text(const cs_corpus* corpus, size_t index, char** out) {
  return Guard([&] {
    RequireOut(out);
    const auto& c = Deref(corpus, "corpus").value;
    if (index >= c.size()) throw InvalidArgument("article index out of range");
    *out = CopyString(covscreen::ComposeText(c.articles()[index]));
  });
}

void cs_corpus_free(cs_corpus* corpus) { delete corpus; }

// ---- labels ----

cs_status cs_labels_read(const char* path, cs_labels** out) {
  return Guard([&] {
    RequireOut(out);
    *out = Wrap(covscreen::LoadPredictions(Str(path, "predictions path")));
  });
}

cs_status cs_labels_read_gold(const char* path, cs_labels** out) {
  return Guard([&] {
    RequireOut(out);
    *out = Wrap(covscreen::LoadGoldLabels(Str(path, "gold path")));
  });
}

cs_status cs_labels_write(const cs_labels* labels, const char* path) {
  return Guard([&] {
    covscreen::io::WriteFile(Str(path, "output path"),
                             covscreen::SerializePredictions(Deref(labels, "labels").value));
  });
}

cs_status cs_labels_serialize(const cs_labels* labels, char** out) {
  return Guard([&] {
    RequireOut(out);
    *out = CopyString(covscreen::SerializePredictions(Deref(labels, "labels").value));
  });
}

cs_labels* cs_labels_create(void) { return new (std::nothrow) cs_labels{}; }

cs_status cs_labels_add(cs_labels* labels, const char* id, cs_label label,
                        const double* score) {
  return Guard([&] {
    auto& set = Deref(labels, "labels").value;
    const std::string key = Str(id, "article id");
    if (key.empty()) throw InvalidArgument("empty article id");
    covscreen::Prediction p{ToLabel(label), std::nullopt};
    if (score) p.score = *score;
    set.Add(key, p);
  });
}

size_t cs_labels_size(const cs_labels* labels) { return labels ? labels->value.size() : 0; }

cs_status cs_labels_get(const cs_labels* labels, size_t index, const char** id,
                        cs_label* label, double* score, int* has_score) {
  return Guard([&] {
    const auto& set = Deref(labels, "labels").value;
    if (index >= set.size()) throw InvalidArgument("label index out of range");
    const auto& [key, p] = set.entries()[index];
    if (id) *id = key.c_str();
    if (label) *label = FromLabel(p.label);
    if (score) *score = p.score.value_or(0.0);
    if (has_score) *has_score = p.score.has_value() ? 1 : 0;
  });
}

void cs_labels_free(cs_labels* labels) { delete labels; }

// ---- weak labels ----

cs_status cs_weaklabel_build(const char* vaccine_list, const char* therapeutics_list,
                             const char* const* negative_lists, size_t n_negative,
                             const cs_corpus* corpus, uint64_t split_seed,
                             cs_labels** train, cs_labels** validation) {
  return Guard([&] {
    RequireOut(train);
    RequireOut(validation);
    using covscreen::QueryClass;
    const auto v = covscreen::LoadRankedList(Str(vaccine_list, "vaccine list"),
                                             QueryClass::kVaccine);
    const auto t = covscreen::LoadRankedList(Str(therapeutics_list, "therapeutics list"),
                                             QueryClass::kTherapeutics);
    std::vector<covscreen::RankedResultList> negatives;
    for (const auto& path : Strings(negative_lists, n_negative, "negative list")) {
      negatives.push_back(covscreen::LoadRankedList(path, QueryClass::kNegative));
    }
    auto set = covscreen::BuildWeakLabels(v, t, negatives, Deref(corpus, "corpus").value,
                                          split_seed);
    *train = Wrap(std::move(set.train));
    *validation = Wrap(std::move(set.validation));
  });
}

// ---- scorers ----

cs_status cs_queries_default(cs_queries** out) {
  return Guard([&] {
    RequireOut(out);
    *out = new cs_queries{covscreen::micro::DefaultQueries()};
  });
}

cs_status cs_queries_read(const char* path, cs_queries** out) {
  return Guard([&] {
    RequireOut(out);
    *out = new cs_queries{covscreen::micro::LoadQueries(Str(path, "queries path"))};
  });
}

void cs_queries_free(cs_queries* queries) { delete queries; }

cs_status cs_score_ms(const cs_corpus* corpus, const cs_queries* queries,
                      const char* stopwords_path, cs_labels** out) {
  return Guard([&] {
    RequireOut(out);
    std::optional<covscreen::StopwordSet> stop;
    if (stopwords_path) stop = covscreen::LoadStopwords(stopwords_path);
    *out = Wrap(covscreen::micro::ScoreCorpus(Deref(corpus, "corpus").value,
                                              Deref(queries, "queries").value,
                                              stop ? &*stop : nullptr));
  });
}

cs_status cs_embeddings_read(const char* path, cs_embeddings** out) {
  return Guard([&] {
    RequireOut(out);
    *out = new cs_embeddings{covscreen::lss::EmbeddingTable::Load(Str(path, "embeddings path"))};
  });
}

size_t cs_embeddings_size(const cs_embeddings* table) {
  return table ? table->value.size() : 0;
}

size_t cs_embeddings_dim(const cs_embeddings* table) { return table ? table->value.dim() : 0; }

void cs_embeddings_free(cs_embeddings* table) { delete table; }

cs_status cs_score_lss(const cs_corpus* corpus, const cs_embeddings* table,
                       const cs_lss_options* options, cs_labels** out) {
  return Guard([&] {
    RequireOut(out);
    auto opts = covscreen::lss::Options::Defaults();
    if (options) {
      if (options->vaccine_seeds) {
        opts.vaccine_seeds =
            Strings(options->vaccine_seeds, options->n_vaccine_seeds, "vaccine seed");
      }
      if (options->therapeutics_seeds) {
        opts.therapeutics_seeds = Strings(options->therapeutics_seeds,
                                          options->n_therapeutics_seeds, "therapeutics seed");
      }
      if (options->pair_budget) opts.pair_budget = options->pair_budget;
      if (options->k) opts.k = options->k;
      if (options->use_min_score) opts.min_score = options->min_score;
      opts.weight_by_occurrence = options->weight_by_occurrence != 0;
    }
    *out = Wrap(covscreen::lss::ScoreCorpus(Deref(corpus, "corpus").value,
                                            Deref(table, "embeddings").value, opts));
  });
}


cs_status cs_score_nsp(const cs_corpus* corpus, const char* nsp_scores_path,
                       double threshold, cs_labels** out) {
  return Guard([&] {
    RequireOut(out);
    CheckProbability(threshold, "NSP threshold");
    const auto nsp = covscreen::rules::LoadNspScores(Str(nsp_scores_path, "NSP scores path"));
    *out = Wrap(covscreen::rules::ApplyNsp(Deref(corpus, "corpus").value, nsp, threshold));
  });
}

cs_status cs_score_ch(const cs_corpus* corpus, const char* nsp_scores_path,
                      double nsp_threshold, const char* ch_scores_path, double cut,
                      cs_labels** out) {
  return Guard([&] {
    RequireOut(out);
    CheckProbability(nsp_threshold, "NSP threshold");
    CheckProbability(cut, "Clinical Hedges cut");
    const auto nsp = covscreen::rules::LoadNspScores(Str(nsp_scores_path, "NSP scores path"));
    const auto ch = covscreen::rules::LoadChScores(Str(ch_scores_path, "CH scores path"));
    *out = Wrap(
        covscreen::rules::ApplyCh(Deref(corpus, "corpus").value, nsp, ch, nsp_threshold, cut));
  });
}

cs_status cs_score_sts(const cs_corpus* corpus, const char* sts_scores_path, size_t top_n,
                       double threshold, cs_labels** out) {
  return Guard([&] {
    RequireOut(out);
    if (top_n == 0) throw InvalidArgument("STS top-n must be at least 1");
    if (!(threshold >= 0.0 && threshold <= 5.0)) {
      throw InvalidArgument("STS threshold must be in [0, 5]");
    }
    const auto sts = covscreen::rules::LoadStsScores(Str(sts_scores_path, "STS scores path"));
    *out = Wrap(covscreen::rules::ApplySts(Deref(corpus, "corpus").value, sts, top_n, threshold));
  });
}

cs_status cs_score_external(const cs_corpus* corpus, const char* predictions_path,
                            cs_labels** out) {
  return Guard([&] {
    RequireOut(out);
    const auto ext = covscreen::LoadPredictions(Str(predictions_path, "predictions path"));
    *out = Wrap(covscreen::rules::AlignToCorpus(Deref(corpus, "corpus").value, ext));
  });
}

// ---- rules ----

double cs_other_score(double vs, double ts) { return covscreen::micro::OtherScore(vs, ts); }

cs_label cs_nsp_label(double p_vaccine, double p_therapeutics, double threshold) {
  return FromLabel(covscreen::rules::NspLabel({p_vaccine, p_therapeutics}, threshold));
}

cs_label cs_ch_combine(cs_label nsp, double p_therapeutics, double cut) {
  const Label gate = nsp == CS_LABEL_VACCINE        ? Label::kVaccine
                     : nsp == CS_LABEL_THERAPEUTICS ? Label::kTherapeutics
                                                    : Label::kOther;
  return FromLabel(covscreen::rules::ChCombine(gate, p_therapeutics, cut));
}

cs_label cs_sts_label(const double* vaccine_scores, size_t n_vaccine,
                      const double* therapeutics_scores, size_t n_therapeutics, size_t top_n,
                      double threshold) {
  covscreen::rules::StsRawScores s;
  if (vaccine_scores) s.vaccine_segment_scores.assign(vaccine_scores, vaccine_scores + n_vaccine);
  if (therapeutics_scores) {
    s.therapeutics_segment_scores.assign(therapeutics_scores,
                                         therapeutics_scores + n_therapeutics);
  }
  return FromLabel(covscreen::rules::StsLabel(s, top_n, threshold));
}

cs_status cs_majority_vote(const cs_label* votes, size_t n_votes, uint64_t seed,
                           const char* article_id, cs_label* out) {
  return Guard([&] {
    if (n_votes == 0 || votes == nullptr) throw InvalidArgument("empty ballot");
    std::array<std::size_t, 3> counts{};
    for (size_t i = 0; i < n_votes; ++i) ++counts[covscreen::Index(ToLabel(votes[i]))];
    Deref(out, "output") = FromLabel(
        covscreen::ensemble::MajorityVote(counts, seed, Str(article_id, "article id")));
  });
}

// ---- ensemble ----

cs_status cs_ensemble(const cs_labels* const* predictions, const char* const* names, size_t n,
                      uint64_t seed, cs_labels** out) {
  return Guard([&] {
    RequireOut(out);
    if (n == 0 || predictions == nullptr) throw InvalidArgument("no prediction sets");
    const auto subset = Strings(names, n, "scorer name");
    covscreen::ensemble::NamedPredictions named;
    for (size_t i = 0; i < n; ++i) {
      if (!named.emplace(subset[i], Deref(predictions[i], "predictions").value).second) {
        throw covscreen::ValidationError("scorer '" + subset[i] + "' given twice");
      }
    }
    *out = Wrap(covscreen::ensemble::RunEnsemble(named, subset, seed));
  });
}

// ---- evaluation ----

cs_status cs_cohen_kappa(const cs_labels* a, const cs_labels* b, double* out) {
  return Guard([&] {
    Deref(out, "output") =
        covscreen::eval::CohenKappa(Deref(a, "labels").value, Deref(b, "labels").value);
  });
}


cs_status cs_positive_metrics_compute(const cs_labels* gold, const cs_labels* predictions,
                                      cs_positive_metrics* out) {
  return Guard([&] {
    auto& dst = Deref(out, "output");
    const auto m = MetricsFor(gold, predictions);
    dst = {ToPrf(m.vaccine), ToPrf(m.therapeutics), ToPrf(m.micro), ToPrf(m.macro)};
  });
}

cs_status cs_lexicon_default(cs_lexicon** out) {
  return Guard([&] {
    RequireOut(out);
    *out = new cs_lexicon{covscreen::eval::Lexicon::Default()};
  });
}

cs_status cs_lexicon_read(const char* path, cs_lexicon** out) {
  return Guard([&] {
    RequireOut(out);
    *out = new cs_lexicon{covscreen::eval::Lexicon::Load(Str(path, "lexicon path"))};
  });
}

void cs_lexicon_free(cs_lexicon* lexicon) { delete lexicon; }

cs_status cs_categorize(const cs_corpus* corpus, const cs_labels* gold,
                        const cs_labels* const* predictions, const char* const* names, size_t n,
                        const cs_lexicon* lexicon, cs_categories** out) {
  return Guard([&] {
    RequireOut(out);
    if (n > 0 && predictions == nullptr) throw InvalidArgument("null predictions");
    const auto system_names = Strings(names, n, "system name");
    covscreen::eval::SystemPredictions systems;
    for (size_t i = 0; i < n; ++i) {
      systems.emplace_back(system_names[i], Deref(predictions[i], "predictions").value);
    }
    *out = new cs_categories{covscreen::eval::CategoryReport(
        Deref(corpus, "corpus").value, Deref(gold, "gold").value, systems,
        Deref(lexicon, "lexicon").value)};
  });
}

cs_status cs_categories_read_csv(const char* path, cs_categories** out) {
  return Guard([&] {
    RequireOut(out);
    const std::string p = Str(path, "categories path");
    *out = new cs_categories{covscreen::report::ParseCategoryCsv(covscreen::io::ReadFile(p), p)};
  });
}

cs_status cs_categories_render_csv(const cs_categories* table, char** out) {
  return Guard([&] {
    RequireOut(out);
    *out = CopyString(covscreen::report::RenderCategoryCsv(Deref(table, "categories").value));
  });
}

cs_status cs_categories_render_assignments(const cs_categories* table, char** out) {
  return Guard([&] {
    RequireOut(out);
    std::string text;
    for (const auto& [id, cat] : Deref(table, "categories").value.assignment) {
      text += id + "\t" + std::to_string(cat) + "\n";
    }
    *out = CopyString(text);
  });
}

cs_status cs_categories_get(const cs_categories* table, int category, const char* system,
                            size_t* total, size_t* correct) {
  return Guard([&] {
    const auto& t = Deref(table, "categories").value;
    if (category < 1 || category > 4) throw InvalidArgument("category must be 1..4");
    if (total) *total = t.totals[category - 1];
    if (system) {
      auto it = t.correct.find(system);
      if (it == t.correct.end()) {
        throw InvalidArgument(std::string("unknown system '") + system + "'");
      }
      if (correct) *correct = it->second[category - 1];
    }
  });
}

void cs_categories_free(cs_categories* table) { delete table; }

cs_report* cs_report_create(void) { return new (std::nothrow) cs_report{}; }

cs_status cs_report_add_system(cs_report* report, const char* system, const cs_labels* gold,
                               const cs_labels* predictions) {
  return Guard([&] {
    auto& r = Deref(report, "report").value;
    auto rows = covscreen::report::MetricsRows(Str(system, "system name"),
                                               MetricsFor(gold, predictions));
    r.metrics.insert(r.metrics.end(), rows.begin(), rows.end());
  });
}

cs_status cs_report_add_row(cs_report* report, const char* system, const char* averaging,
                            double precision, double recall, double f) {
  return Guard([&] {
    for (double v : {precision, recall, f}) {
      if (!(v >= 0.0 && v <= 1.0)) throw InvalidArgument("metric outside [0, 1]");
    }
    Deref(report, "report").value.metrics.push_back(
        {Str(system, "system name"), Str(averaging, "averaging"), precision, recall, f});
  });
}

cs_status cs_report_add_rows_from(cs_report* report, const char* metrics_path) {
  return Guard([&] {
    auto& r = Deref(report, "report").value;
    const std::string path = Str(metrics_path, "metrics path");
    auto rows = covscreen::report::ParseMetricsTsv(covscreen::io::ReadFile(path), path);
    r.metrics.insert(r.metrics.end(), rows.begin(), rows.end());
  });
}

cs_status cs_report_set_categories(cs_report* report, const cs_categories* table) {
  return Guard([&] {
    Deref(report, "report").value.categories = Deref(table, "categories").value;
  });
}

cs_status cs_report_set_kappa(cs_report* report, double kappa) {
  return Guard([&] {
    if (!(kappa >= -1.0 && kappa <= 1.0)) throw InvalidArgument("kappa outside [-1, 1]");
    Deref(report, "report").value.kappa = kappa;
  });
}

cs_status cs_report_render(const cs_report* report, cs_report_format format, char** out) {
  return Guard([&] {
    RequireOut(out);
    covscreen::report::Format f;
    if (format == CS_REPORT_MARKDOWN) {
      f = covscreen::report::Format::kMarkdown;
    } else if (format == CS_REPORT_CSV) {
      f = covscreen::report::Format::kCsv;
    } else {
      throw InvalidArgument("invalid report format");
    }
    *out = CopyString(covscreen::report::Render(Deref(report, "report").value, f));
  });
}

void cs_report_free(cs_report* report) { delete report; }

// ---- text ----

cs_status cs_tokenize(const char* text, char** out) {
  return Guard([&] {
    RequireOut(out);
    std::string joined;
    for (const auto& t : covscreen::Tokenize(Str(text, "text"))) {
      if (!joined.empty()) joined += ' ';
      joined += t;
    }
    *out = CopyString(joined);
  });
}

cs_status cs_split_sentences(const char* text, char** out) {
  return Guard([&] {
    RequireOut(out);
    std::string joined;
    for (const auto& s : covscreen::SplitSentences(Str(text, "text"))) {
      if (!joined.empty()) joined += '\n';
      joined += s;
    }
    *out = CopyString(joined);
  });
}

}  // extern "C"
