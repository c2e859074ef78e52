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

/*
 * C interface to the covscreen article-screening toolkit.
 *
 * Every object is an opaque handle created by a cs_*_read / cs_*_create /
 * cs_score_* call and released with the matching cs_*_free. Functions that
 * can fail return a cs_status; on failure a human-readable message is
 * available from cs_last_error() on the calling thread until the next
 * failing call. Strings returned through char** are owned by the caller and
 * released with cs_string_free. Handles are immutable once built (except
 * cs_report, which is filled incrementally) and may be shared read-only
 * across threads.
 */
#ifndef COVSCREEN_H_
#define COVSCREEN_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(COVSCREEN_BUILDING_LIBRARY)
#define CS_API __declspec(dllexport)
#else
#define CS_API __declspec(dllimport)
#endif
#else
#define CS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cs_status {
  CS_OK = 0,
  CS_ERR_INVALID_ARGUMENT = 1, /* null handle, bad enum, out-of-range parameter */
  CS_ERR_PARSE = 2,            /* malformed input file or record */
  CS_ERR_VALIDATION = 3,       /* contract violation: duplicates, coverage, empty sets */
  CS_ERR_IO = 4,               /* file could not be read or written */
  CS_ERR_INTERNAL = 5
} cs_status;

typedef enum cs_label {
  CS_LABEL_VACCINE = 0,
  CS_LABEL_THERAPEUTICS = 1,
  CS_LABEL_OTHER = 2
} cs_label;

typedef enum cs_metadata_format {
  CS_FORMAT_NATIVE = 0, /* id,title,abstract,journal */
  CS_FORMAT_CORD19 = 1  /* cord_uid,title,abstract,journal (+ any other columns) */
} cs_metadata_format;

typedef enum cs_report_format { CS_REPORT_MARKDOWN = 0, CS_REPORT_CSV = 1 } cs_report_format;

typedef struct cs_corpus cs_corpus;
typedef struct cs_labels cs_labels; /* article id -> label (+ optional score) */
typedef struct cs_queries cs_queries;
typedef struct cs_embeddings cs_embeddings;
typedef struct cs_lexicon cs_lexicon;
typedef struct cs_categories cs_categories;
typedef struct cs_report cs_report;

/* ---- general ---------------------------------------------------------- */

CS_API const char* cs_version(void);
CS_API const char* cs_last_error(void);
CS_API void cs_string_free(char* s);
CS_API const char* cs_label_name(cs_label label);
CS_API cs_status cs_label_parse(const char* name, cs_label* out);

/* ---- corpus ----------------------------------------------------------- */

typedef struct cs_article_view {
  const char* id;
  const char* title;
  const char* abstract_text;
  const char* journal;
} cs_article_view;

/* Rows with a blank title, abstract or journal are dropped; `rows` and
 * `dropped` (either may be NULL) receive the data-row and dropped counts. */
CS_API cs_status cs_corpus_ingest(const char* csv_path, cs_metadata_format format,
                                  cs_corpus** out, size_t* rows, size_t* dropped);
/* Corpus artifact, or native-format CSV when the artifact magic is absent. */
CS_API cs_status cs_corpus_read(const char* path, cs_corpus** out);
CS_API cs_status cs_corpus_write(const cs_corpus* corpus, const char* path);
CS_API size_t cs_corpus_size(const cs_corpus* corpus);
/* Views stay valid for the lifetime of the corpus. */
CS_API cs_status cs_corpus_article(const cs_corpus* corpus, size_t index,
                                   cs_article_view* out);
/* Title, abstract and journal joined by single spaces. */
CS_API cs_status cs_compose_text(const cs_corpus* corpus, size_t index, char** out);
CS_API void cs_corpus_free(cs_corpus* corpus);

/* ---- labels / predictions ---------------------------------------------- */

/* `article_id<TAB>label[<TAB>score]`. */
CS_API cs_status cs_labels_read(const char* path, cs_labels** out);
/* `article_id<TAB>label`, no score column. */
CS_API cs_status cs_labels_read_gold(const char* path, cs_labels** out);
CS_API cs_status cs_labels_write(const cs_labels* labels, const char* path);
/* Same bytes cs_labels_write would produce. */
CS_API cs_status cs_labels_serialize(const cs_labels* labels, char** out);
CS_API cs_labels* cs_labels_create(void);
CS_API cs_status cs_labels_add(cs_labels* labels, const char* id, cs_label label,
                               const double* score);
CS_API size_t cs_labels_size(const cs_labels* labels);
/* `score` may be NULL; `has_score` receives 0 or 1 and may be NULL. */
CS_API cs_status cs_labels_get(const cs_labels* labels, size_t index, const char** id,
                               cs_label* label, double* score, int* has_score);
CS_API void cs_labels_free(cs_labels* labels);

/* ---- weak labels ------------------------------------------------------- */

/* Ranked lists are `rank<TAB>article_id` files. */
CS_API cs_status cs_weaklabel_build(const char* vaccine_list, const char* therapeutics_list,
                                    const char* const* negative_lists, size_t n_negative,
                                    const cs_corpus* corpus, uint64_t split_seed,
                                    cs_labels** train, cs_labels** validation);

/* ---- scorers ------------------------------------------------------------ */

CS_API cs_status cs_queries_default(cs_queries** out);
CS_API cs_status cs_queries_read(const char* path, cs_queries** out);
CS_API void cs_queries_free(cs_queries* queries);

/* Micro-scorer over title + abstract. `stopwords_path` may be NULL. */
CS_API cs_status cs_score_ms(const cs_corpus* corpus, const cs_queries* queries,
                             const char* stopwords_path, cs_labels** out);

CS_API cs_status cs_embeddings_read(const char* path, cs_embeddings** out);
CS_API size_t cs_embeddings_size(const cs_embeddings* table);
CS_API size_t cs_embeddings_dim(const cs_embeddings* table);
CS_API void cs_embeddings_free(cs_embeddings* table);

typedef struct cs_lss_options {
  const char* const* vaccine_seeds; /* NULL -> built-in seeds */
  size_t n_vaccine_seeds;
  const char* const* therapeutics_seeds; /* NULL -> built-in seeds */
  size_t n_therapeutics_seeds;
  size_t pair_budget;       /* 0 -> 1000 */
  size_t k;                 /* 0 -> 50 */
  int use_min_score;        /* nonzero enables min_score */
  double min_score;         /* both scores below -> other */
  int weight_by_occurrence; /* nonzero: token-occurrence weighted mean */
} cs_lss_options;

/* `options` may be NULL for all defaults. */
CS_API cs_status cs_score_lss(const cs_corpus* corpus, const cs_embeddings* table,
                              const cs_lss_options* options, cs_labels** out);

CS_API cs_status cs_score_nsp(const cs_corpus* corpus, const char* nsp_scores_path,
                              double threshold, cs_labels** out);
CS_API cs_status cs_score_ch(const cs_corpus* corpus, const char* nsp_scores_path,
                             double nsp_threshold, const char* ch_scores_path, double cut,
                             cs_labels** out);
CS_API cs_status cs_score_sts(const cs_corpus* corpus, const char* sts_scores_path,
                              size_t top_n, double threshold, cs_labels** out);
/* Externally produced predictions aligned to corpus order. */
CS_API cs_status cs_score_external(const cs_corpus* corpus, const char* predictions_path,
                                   cs_labels** out);

/* ---- decision rules and scalar helpers --------------------------------- */

CS_API double cs_other_score(double vs, double ts);
CS_API cs_label cs_nsp_label(double p_vaccine, double p_therapeutics, double threshold);
CS_API cs_label cs_ch_combine(cs_label nsp, double p_therapeutics, double cut);
CS_API cs_label cs_sts_label(const double* vaccine_scores, size_t n_vaccine,
                             const double* therapeutics_scores, size_t n_therapeutics,
                             size_t top_n, double threshold);
CS_API cs_status cs_majority_vote(const cs_label* votes, size_t n_votes, uint64_t seed,
                                  const char* article_id, cs_label* out);

/* ---- ensemble ----------------------------------------------------------- */

/* Majority vote over `n` named prediction sets (the whole array is the
 * subset). All sets must cover the same article ids. */
CS_API cs_status cs_ensemble(const cs_labels* const* predictions, const char* const* names,
                             size_t n, uint64_t seed, cs_labels** out);

/* ---- evaluation --------------------------------------------------------- */

CS_API cs_status cs_cohen_kappa(const cs_labels* a, const cs_labels* b, double* out);

typedef struct cs_prf {
  double precision;
  double recall;
  double f;
} cs_prf;

typedef struct cs_positive_metrics {
  cs_prf vaccine;
  cs_prf therapeutics;
  cs_prf micro;
  cs_prf macro;
} cs_positive_metrics;

/* Predictions are restricted to the gold ids; every gold id must be
 * predicted. */
CS_API cs_status cs_positive_metrics_compute(const cs_labels* gold,
                                             const cs_labels* predictions,
                                             cs_positive_metrics* out);

CS_API cs_status cs_lexicon_default(cs_lexicon** out);
CS_API cs_status cs_lexicon_read(const char* path, cs_lexicon** out);
CS_API void cs_lexicon_free(cs_lexicon* lexicon);

CS_API cs_status cs_categorize(const cs_corpus* corpus, const cs_labels* gold,
                               const cs_labels* const* predictions, const char* const* names,
                               size_t n, const cs_lexicon* lexicon, cs_categories** out);
CS_API cs_status cs_categories_read_csv(const char* path, cs_categories** out);
/* category,total,percent,<system...> */
CS_API cs_status cs_categories_render_csv(const cs_categories* table, char** out);
/* `article_id<TAB>category`, in gold order of insertion (sorted by id). */
CS_API cs_status cs_categories_render_assignments(const cs_categories* table, char** out);
/* `category` in 1..4. `system` may be NULL to read the total only. */
CS_API cs_status cs_categories_get(const cs_categories* table, int category,
                                   const char* system, size_t* total, size_t* correct);
CS_API void cs_categories_free(cs_categories* table);

CS_API cs_report* cs_report_create(void);
/* Adds vaccine / therapeutics / micro / macro rows for one system. */
CS_API cs_status cs_report_add_system(cs_report* report, const char* system,
                                      const cs_labels* gold, const cs_labels* predictions);
CS_API cs_status cs_report_add_row(cs_report* report, const char* system,
                                   const char* averaging, double precision, double recall,
                                   double f);
/* Reads `system<TAB>averaging<TAB>precision<TAB>recall<TAB>f_measure` rows. */
CS_API cs_status cs_report_add_rows_from(cs_report* report, const char* metrics_path);
CS_API cs_status cs_report_set_categories(cs_report* report, const cs_categories* table);
CS_API cs_status cs_report_set_kappa(cs_report* report, double kappa);
CS_API cs_status cs_report_render(const cs_report* report, cs_report_format format,
                                  char** out);
CS_API void cs_report_free(cs_report* report);

/* ---- text utilities ------------------------------------------------------ */

/* Tokens joined by single spaces. */
CS_API cs_status cs_tokenize(const char* text, char** out);
/* Sentence segments joined by '\n'. */
CS_API cs_status cs_split_sentences(const char* text, char** out);

#ifdef __cplusplus
}
#endif

#endif /* COVSCREEN_H_ */
