/*
 * Copyright 2026 The catwalk Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the catwalk outlier detector. All objects are opaque and
 * owned by the caller once returned; free them with the matching *_free.
 * Functions returning cw_status set a thread-local message readable through
 * cw_last_error() on failure. */

#ifndef CATWALK_CATWALK_H_
#define CATWALK_CATWALK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CATWALK_BUILDING_LIBRARY)
#define CW_API __declspec(dllexport)
#else
#define CW_API __declspec(dllimport)
#endif
#else
#define CW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cw_status {
  CW_OK = 0,
  CW_ERR_INVALID_ARGUMENT = 1,
  CW_ERR_PARSE = 2,
  CW_ERR_IO = 3,
  CW_ERR_DEGENERATE = 4,
  CW_ERR_INTERNAL = 5,
  CW_ERR_OUT_OF_MEMORY = 6
} cw_status;

typedef enum cw_method {
  CW_METHOD_CBRW = 0,
  CW_METHOD_SDRW,
  CW_METHOD_MARP,
  CW_METHOD_BASE,
  CW_METHOD_CBRW_IA,
  CW_METHOD_CBRW_IE,
  CW_METHOD_SDRW_IA,
  CW_METHOD_SDRW_IE
} cw_method;

typedef enum cw_lift_scaling { CW_LIFT_SUPPORT = 0, CW_LIFT_FREQUENCY } cw_lift_scaling;
typedef enum cw_sdrw_readout { CW_READOUT_DENSITY_MASS = 0, CW_READOUT_CLOSED_FORM } cw_sdrw_readout;
typedef enum cw_weighting { CW_WEIGHT_RELEVANCE = 0, CW_WEIGHT_NORMALIZED } cw_weighting;

typedef struct cw_dataset cw_dataset;
typedef struct cw_detection cw_detection;
typedef struct cw_selection cw_selection;
typedef struct cw_report cw_report;

CW_API const char* cw_version(void);
CW_API const char* cw_last_error(void);
CW_API const char* cw_status_string(cw_status status);

/* ---- datasets ---- */

typedef struct cw_csv_options {
  int has_header;         /* default 1 */
  const char* label_name; /* label column by header name, or NULL */
  long label_index;       /* 0-based label column, or -1 */
  char delimiter;         /* default ',' */
} cw_csv_options;

CW_API void cw_csv_options_init(cw_csv_options* options);
CW_API cw_status cw_dataset_load_csv(const char* path, const cw_csv_options* options,
                                     cw_dataset** out);

typedef struct cw_synthetic_config {
  size_t n_objects;
  size_t n_relevant;
  size_t n_noisy;
  size_t n_outliers;
  double coupling_strength;
  uint64_t seed;
  double outlying_leak;
  size_t n_outlying_values;
  size_t n_noisy_values;
} cw_synthetic_config;

CW_API void cw_synthetic_config_init(cw_synthetic_config* config);
CW_API cw_status cw_dataset_generate(const cw_synthetic_config* config, cw_dataset** out);

CW_API void cw_dataset_free(cw_dataset* dataset);
CW_API size_t cw_dataset_n_objects(const cw_dataset* dataset);
CW_API size_t cw_dataset_n_features(const cw_dataset* dataset);
CW_API size_t cw_dataset_n_values(const cw_dataset* dataset);
CW_API int cw_dataset_has_labels(const cw_dataset* dataset);
/* Copies min(len, n_objects) labels (1 = outlier). */
CW_API cw_status cw_dataset_labels(const cw_dataset* dataset, uint8_t* out, size_t len);
CW_API const char* cw_dataset_feature_name(const cw_dataset* dataset, size_t feature);
/* Path "-" writes to standard output. */
CW_API cw_status cw_dataset_write_csv(const cw_dataset* dataset, const char* path);
CW_API cw_status cw_dataset_subset(const cw_dataset* dataset, const uint32_t* features,
                                   size_t n_features, cw_dataset** out);

/* ---- detection ---- */

/* Array getters copy min(len, available) elements into caller storage. */

typedef struct cw_detector_config {
  cw_method method;
  double alpha;
  double tol;
  size_t max_iter;
  cw_lift_scaling lift_scaling;
  cw_sdrw_readout sdrw_readout;
  cw_weighting weighting;
  double top_ratio;
  int use_min_rel;
  double min_rel;
  unsigned threads;
} cw_detector_config;

CW_API void cw_detector_config_init(cw_detector_config* config);
CW_API cw_status cw_parse_method(const char* name, cw_method* out);
CW_API const char* cw_method_name(cw_method method);

CW_API cw_status cw_detect(const cw_dataset* dataset, const cw_detector_config* config,
                           cw_detection** out);
CW_API void cw_detection_free(cw_detection* detection);

CW_API size_t cw_detection_n_objects(const cw_detection* detection);
CW_API cw_status cw_detection_scores(const cw_detection* detection, double* out, size_t len);
CW_API cw_status cw_detection_ranking(const cw_detection* detection, size_t* out, size_t len);

/* Value-level output. Empty (0 values) for MarP. Value and feature ids refer
 * to the dataset after constant features were dropped. */
CW_API size_t cw_detection_n_values(const cw_detection* detection);
CW_API cw_status cw_detection_value_outlierness(const cw_detection* detection, double* out,
                                                size_t len);
CW_API const char* cw_detection_value_name(const cw_detection* detection, size_t value);
CW_API size_t cw_detection_value_feature(const cw_detection* detection, size_t value);
CW_API size_t cw_detection_n_features(const cw_detection* detection);
CW_API const char* cw_detection_feature_name(const cw_detection* detection, size_t feature);
CW_API cw_status cw_detection_relevance(const cw_detection* detection, double* out, size_t len);

CW_API size_t cw_detection_iterations(const cw_detection* detection);
CW_API int cw_detection_converged(const cw_detection* detection);
CW_API size_t cw_detection_trace_length(const cw_detection* detection);
CW_API cw_status cw_detection_trace(const cw_detection* detection, double* out, size_t len);

/* Peeling (SDRW methods). order receives n node ids: removal order followed by
 * the surviving node. density[t] is the density after t removals. */
CW_API int cw_detection_has_peeling(const cw_detection* detection);
CW_API cw_status cw_detection_peeling(const cw_detection* detection, uint32_t* order,
                                      double* density, size_t len);
/* Edge list of the value graph, "u v weight" per line; "-" is stdout. */
CW_API cw_status cw_detection_write_edges(const cw_detection* detection, const char* path);

/* ---- feature selection ---- */

CW_API cw_status cw_select(const cw_dataset* dataset, const cw_detector_config* config,
                           cw_selection** out);
CW_API void cw_selection_free(cw_selection* selection);
CW_API size_t cw_selection_count(const cw_selection* selection);
CW_API uint32_t cw_selection_feature(const cw_selection* selection, size_t i);
CW_API const char* cw_selection_feature_name(const cw_selection* selection, size_t i);
CW_API double cw_selection_relevance(const cw_selection* selection, size_t i);
CW_API cw_status cw_selection_reduced(const cw_selection* selection, cw_dataset** out);

/* ---- evaluation ---- */

CW_API cw_status cw_auc(const double* scores, const uint8_t* labels, size_t n, double* out);

typedef struct cw_complexity {
  double kappa_vcc;
  double kappa_het;
  double kappa_ins;
  double kappa_fnl;
  double theta;
  double epsilon;
} cw_complexity;

/* Indicators over the labelled dataset after constant features are dropped. */
CW_API cw_status cw_indicators(const cw_dataset* dataset, double theta, double epsilon,
                               unsigned threads, cw_report** out);
CW_API void cw_report_free(cw_report* report);
CW_API void cw_report_summary(const cw_report* report, cw_complexity* out);
CW_API size_t cw_report_n_features(const cw_report* report);
CW_API const char* cw_report_feature_name(const cw_report* report, size_t feature);
CW_API double cw_report_feature_efficiency(const cw_report* report, size_t feature);

typedef struct cw_graph_summary {
  size_t n_nodes;
  size_t n_edges; /* undirected edge count on the skeleton */
  int connected;
  size_t diameter; /* valid when connected */
  double clustering_coefficient;
} cw_graph_summary;

/* Builds the CBRW (directed) or SDRW (weighted undirected) value graph
 * according to config->method and measures it. */
CW_API cw_status cw_graph_stats(const cw_dataset* dataset, const cw_detector_config* config,
                                size_t max_nodes, cw_graph_summary* out);

#ifdef __cplusplus
}
#endif

#endif /* CATWALK_CATWALK_H_ */
