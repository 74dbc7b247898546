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

#include "catwalk/catwalk.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <new>
#include <set>
#include <string>
#include <utility>

#include "catwalk/evaluation.hpp"
#include "catwalk/pipeline.hpp"

struct cw_dataset {
  catwalk::CategoricalDataset data;
};

struct cw_detection {
  catwalk::Detection det;
};

struct cw_selection {
  catwalk::Selection sel;
};

struct cw_report {
  catwalk::ComplexityReport report;
  std::vector<std::string> names;
};

namespace {

thread_local std::string g_last_error;

cw_status ToStatus(catwalk::ErrorCode code) {
  switch (code) {
    case catwalk::ErrorCode::kInvalidArgument: return CW_ERR_INVALID_ARGUMENT;
    case catwalk::ErrorCode::kParse: return CW_ERR_PARSE;
    case catwalk::ErrorCode::kIo: return CW_ERR_IO;
    case catwalk::ErrorCode::kDegenerate: return CW_ERR_DEGENERATE;
    case catwalk::ErrorCode::kInternal: return CW_ERR_INTERNAL;
  }
  return CW_ERR_INTERNAL;
}

template <typename F>
cw_status Guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return CW_OK;
  } catch (const catwalk::Error& e) {
    g_last_error = e.what();
    return ToStatus(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CW_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CW_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CW_ERR_INTERNAL;
  }
}

void Need(const void* p, const char* what) {
  if (p == nullptr) {
    catwalk::Fail(catwalk::ErrorCode::kInvalidArgument, std::string(what) + " is null");
  }
}

template <typename T, typename U>
void CopyOut(const std::vector<T>& src, U* out, std::size_t len) {
  if (out == nullptr && len > 0) {
    catwalk::Fail(catwalk::ErrorCode::kInvalidArgument, "output buffer is null");
  }
  const std::size_t n = std::min(len, src.size());
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<U>(src[i]);
}

template <typename Write>
void WithStream(const char* path, Write&& write) {
  Need(path, "path");
  if (std::string(path) == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) catwalk::Fail(catwalk::ErrorCode::kIo, std::string("cannot open '") + path + "' for writing");
  write(out);
  if (!out) catwalk::Fail(catwalk::ErrorCode::kIo, std::string("write to '") + path + "' failed");
}

catwalk::DetectorConfig ToConfig(const cw_detector_config* c) {
  catwalk::DetectorConfig cfg;
  if (c == nullptr) return cfg;
  if (c->method < CW_METHOD_CBRW || c->method > CW_METHOD_SDRW_IE) {
    catwalk::Fail(catwalk::ErrorCode::kInvalidArgument, "unknown method");
  }
  cfg.method = static_cast<catwalk::Method>(c->method);
  cfg.alpha = c->alpha;
  cfg.tol = c->tol;
  cfg.max_iter = c->max_iter;
  cfg.lift_scaling = c->lift_scaling == CW_LIFT_FREQUENCY ? catwalk::LiftScaling::kFrequency
                                                          : catwalk::LiftScaling::kSupport;
  cfg.sdrw_readout = c->sdrw_readout == CW_READOUT_CLOSED_FORM ? catwalk::SdrwReadout::kClosedForm
                                                               : catwalk::SdrwReadout::kDensityMass;
  cfg.weighting = c->weighting == CW_WEIGHT_NORMALIZED ? catwalk::FeatureWeighting::kNormalized
                                                       : catwalk::FeatureWeighting::kRelevance;
  cfg.selection.top_ratio = c->top_ratio;
  if (c->use_min_rel) cfg.selection.min_rel = c->min_rel;
  cfg.threads = c->threads;
  return cfg;
}

const char* Name(const std::vector<std::string>& names, std::size_t i) {
  return i < names.size() ? names[i].c_str() : nullptr;
}

}  // namespace

extern "C" {

const char* cw_version(void) { return "0.1.0"; }

const char* cw_last_error(void) { return g_last_error.c_str(); }

const char* cw_status_string(cw_status status) {
  switch (status) {
    case CW_OK: return "ok";
    case CW_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CW_ERR_PARSE: return "parse error";
    case CW_ERR_IO: return "i/o error";
    case CW_ERR_DEGENERATE: return "degenerate input";
    case CW_ERR_INTERNAL: return "internal error";
    case CW_ERR_OUT_OF_MEMORY: return "out of memory";
  }
  return "unknown status";
}

void cw_csv_options_init(cw_csv_options* options) {
  if (options == nullptr) return;
  options->has_header = 1;
  options->label_name = nullptr;
  options->label_index = -1;
  options->delimiter = ',';
}

cw_status cw_dataset_load_csv(const char* path, const cw_csv_options* options, cw_dataset** out) {
  return Guard([&] {
    Need(path, "path");
    Need(out, "out");
    *out = nullptr;
    catwalk::CsvOptions opts;
    if (options != nullptr) {
      opts.has_header = options->has_header != 0;
      opts.delimiter = options->delimiter;
      if (options->label_name != nullptr) {
        opts.label_column = std::string(options->label_name);
      } else if (options->label_index >= 0) {
        opts.label_column = static_cast<std::size_t>(options->label_index);
      }
    }
    *out = new cw_dataset{catwalk::load_csv(path, opts)};
  });
}

void cw_synthetic_config_init(cw_synthetic_config* config) {
  if (config == nullptr) return;
  catwalk::SyntheticConfig d;
  config->n_objects = d.n_objects;
  config->n_relevant = d.n_relevant;
  config->n_noisy = d.n_noisy;
  config->n_outliers = d.n_outliers;
  config->coupling_strength = d.coupling_strength;
  config->seed = d.seed;
  config->outlying_leak = d.outlying_leak;
  config->n_outlying_values = d.n_outlying_values;
  config->n_noisy_values = d.n_noisy_values;
}

cw_status cw_dataset_generate(const cw_synthetic_config* config, cw_dataset** out) {
  return Guard([&] {
    Need(config, "config");
    Need(out, "out");
    *out = nullptr;
    catwalk::SyntheticConfig c;
    c.n_objects = config->n_objects;
    c.n_relevant = config->n_relevant;
    c.n_noisy = config->n_noisy;
    c.n_outliers = config->n_outliers;
    c.coupling_strength = config->coupling_strength;
    c.seed = config->seed;
    c.outlying_leak = config->outlying_leak;
    c.n_outlying_values = config->n_outlying_values;
    c.n_noisy_values = config->n_noisy_values;
    *out = new cw_dataset{catwalk::generate_synthetic(c)};
  });
}

void cw_dataset_free(cw_dataset* dataset) { delete dataset; }

size_t cw_dataset_n_objects(const cw_dataset* d) { return d ? d->data.n_objects() : 0; }
size_t cw_dataset_n_features(const cw_dataset* d) { return d ? d->data.n_features() : 0; }
size_t cw_dataset_n_values(const cw_dataset* d) { return d ? d->data.n_values() : 0; }
int cw_dataset_has_labels(const cw_dataset* d) { return d && d->data.has_labels() ? 1 : 0; }

cw_status cw_dataset_labels(const cw_dataset* d, uint8_t* out, size_t len) {
  return Guard([&] {
    Need(d, "dataset");
    if (!d->data.has_labels()) catwalk::Fail(catwalk::ErrorCode::kInvalidArgument, "dataset has no labels");
    CopyOut(d->data.labels(), out, len);
  });
}

const char* cw_dataset_feature_name(const cw_dataset* d, size_t feature) {
  return d ? Name(d->data.feature_names(), feature) : nullptr;
}

cw_status cw_dataset_write_csv(const cw_dataset* d, const char* path) {
  return Guard([&] {
    Need(d, "dataset");
    WithStream(path, [&](std::ostream& os) { catwalk::write_csv(d->data, os); });
  });
}

cw_status cw_dataset_subset(const cw_dataset* d, const uint32_t* features, size_t n,
                            cw_dataset** out) {
  return Guard([&] {
    Need(d, "dataset");
    Need(features, "features");
    Need(out, "out");
    *out = nullptr;
    std::vector<catwalk::FeatureId> f(features, features + n);
    *out = new cw_dataset{catwalk::subset_features(d->data, f)};
  });
}

void cw_detector_config_init(cw_detector_config* c) {
  if (c == nullptr) return;
  catwalk::DetectorConfig d;
  c->method = CW_METHOD_CBRW;
  c->alpha = d.alpha;
  c->tol = d.tol;
  c->max_iter = d.max_iter;
  c->lift_scaling = CW_LIFT_SUPPORT;
  c->sdrw_readout = CW_READOUT_DENSITY_MASS;
  c->weighting = CW_WEIGHT_RELEVANCE;
  c->top_ratio = d.selection.top_ratio;
  c->use_min_rel = 0;
  c->min_rel = 0.0;
  c->threads = d.threads;
}

cw_status cw_parse_method(const char* name, cw_method* out) {
  return Guard([&] {
    Need(name, "name");
    Need(out, "out");
    *out = static_cast<cw_method>(catwalk::parse_method(name));
  });
}

const char* cw_method_name(cw_method method) {
  static const char* const kNames[] = {"cbrw",    "sdrw",    "marp",    "base",
                                       "cbrw-ia", "cbrw-ie", "sdrw-ia", "sdrw-ie"};
  if (method < CW_METHOD_CBRW || method > CW_METHOD_SDRW_IE) return nullptr;
  return kNames[method];
}

cw_status cw_detect(const cw_dataset* d, const cw_detector_config* config, cw_detection** out) {
  return Guard([&] {
    Need(d, "dataset");
    Need(out, "out");
    *out = nullptr;
    *out = new cw_detection{catwalk::detect(d->data, ToConfig(config))};
  });
}

void cw_detection_free(cw_detection* det) { delete det; }

size_t cw_detection_n_objects(const cw_detection* det) {
  return det ? det->det.scores.score.size() : 0;
}

cw_status cw_detection_scores(const cw_detection* det, double* out, size_t len) {
  return Guard([&] {
    Need(det, "detection");
    CopyOut(det->det.scores.score, out, len);
  });
}

cw_status cw_detection_ranking(const cw_detection* det, size_t* out, size_t len) {
  return Guard([&] {
    Need(det, "detection");
    CopyOut(det->det.scores.ranking, out, len);
  });
}

size_t cw_detection_n_values(const cw_detection* det) { return det ? det->det.phi.size() : 0; }

cw_status cw_detection_value_outlierness(const cw_detection* det, double* out, size_t len) {
  return Guard([&] {
    Need(det, "detection");
    CopyOut(det->det.phi, out, len);
  });
}

const char* cw_detection_value_name(const cw_detection* det, size_t value) {
  return det ? Name(det->det.data.value_names(), value) : nullptr;
}

size_t cw_detection_value_feature(const cw_detection* det, size_t value) {
  if (det == nullptr || value >= det->det.data.n_values()) return static_cast<size_t>(-1);
  return det->det.data.feature_of(static_cast<catwalk::ValueId>(value));
}

size_t cw_detection_n_features(const cw_detection* det) {
  return det ? det->det.data.n_features() : 0;
}

const char* cw_detection_feature_name(const cw_detection* det, size_t feature) {
  return det ? Name(det->det.data.feature_names(), feature) : nullptr;
}

cw_status cw_detection_relevance(const cw_detection* det, double* out, size_t len) {
  return Guard([&] {
    Need(det, "detection");
    CopyOut(det->det.relevance.rel, out, len);
  });
}

size_t cw_detection_iterations(const cw_detection* det) { return det ? det->det.iterations : 0; }
int cw_detection_converged(const cw_detection* det) { return det && det->det.converged ? 1 : 0; }
size_t cw_detection_trace_length(const cw_detection* det) { return det ? det->det.trace.size() : 0; }

cw_status cw_detection_trace(const cw_detection* det, double* out, size_t len) {
  return Guard([&] {
    Need(det, "detection");
    CopyOut(det->det.trace, out, len);
  });
}

int cw_detection_has_peeling(const cw_detection* det) {
  return det && det->det.peeling.has_value() ? 1 : 0;
}

cw_status cw_detection_peeling(const cw_detection* det, uint32_t* order, double* density,
                               size_t len) {
  return Guard([&] {
    Need(det, "detection");
    if (!det->det.peeling) {
      catwalk::Fail(catwalk::ErrorCode::kInvalidArgument, "detection has no peeling record");
    }
    const auto& p = *det->det.peeling;
    std::vector<std::uint32_t> ord = p.removal_order;
    ord.push_back(p.last);
    std::vector<double> dens(p.n);
    for (std::size_t t = 0; t < p.n; ++t) dens[t] = p.density_by_size[p.n - t];
    if (order) CopyOut(ord, order, len);
    if (density) CopyOut(dens, density, len);
  });
}

cw_status cw_detection_write_edges(const cw_detection* det, const char* path) {
  return Guard([&] {
    Need(det, "detection");
    if (!det->det.graph) {
      catwalk::Fail(catwalk::ErrorCode::kInvalidArgument, "method builds no value graph");
    }
    WithStream(path, [&](std::ostream& os) { catwalk::write_edge_list(*det->det.graph, os); });
  });
}

cw_status cw_select(const cw_dataset* d, const cw_detector_config* config, cw_selection** out) {
  return Guard([&] {
    Need(d, "dataset");
    Need(out, "out");
    *out = nullptr;
    *out = new cw_selection{catwalk::select(d->data, ToConfig(config))};
  });
}

void cw_selection_free(cw_selection* s) { delete s; }
size_t cw_selection_count(const cw_selection* s) { return s ? s->sel.features.size() : 0; }

uint32_t cw_selection_feature(const cw_selection* s, size_t i) {
  return s && i < s->sel.features.size() ? s->sel.features[i] : UINT32_MAX;
}

const char* cw_selection_feature_name(const cw_selection* s, size_t i) {
  return s ? Name(s->sel.names, i) : nullptr;
}

double cw_selection_relevance(const cw_selection* s, size_t i) {
  return s && i < s->sel.rel.size() ? s->sel.rel[i] : 0.0;
}

cw_status cw_selection_reduced(const cw_selection* s, cw_dataset** out) {
  return Guard([&] {
    Need(s, "selection");
    Need(out, "out");
    *out = new cw_dataset{s->sel.reduced};
  });
}

cw_status cw_auc(const double* scores, const uint8_t* labels, size_t n, double* out) {
  return Guard([&] {
    Need(scores, "scores");
    Need(labels, "labels");
    Need(out, "out");
    *out = catwalk::auc(std::span<const double>(scores, n), std::span<const std::uint8_t>(labels, n));
  });
}

cw_status cw_indicators(const cw_dataset* d, double theta, double epsilon, unsigned threads,
                        cw_report** out) {
  return Guard([&] {
    Need(d, "dataset");
    Need(out, "out");
    *out = nullptr;
    if (!d->data.has_labels()) catwalk::Fail(catwalk::ErrorCode::kInvalidArgument, "dataset has no labels");
    auto pre = catwalk::preprocess(d->data);
    auto rep = catwalk::complexity_report(pre.data, pre.data.labels(), theta, epsilon, threads);
    *out = new cw_report{std::move(rep), pre.data.feature_names()};
  });
}

void cw_report_free(cw_report* r) { delete r; }

void cw_report_summary(const cw_report* r, cw_complexity* out) {
  if (r == nullptr || out == nullptr) return;
  out->kappa_vcc = r->report.kappa_vcc;
  out->kappa_het = r->report.kappa_het;
  out->kappa_ins = r->report.kappa_ins;
  out->kappa_fnl = r->report.kappa_fnl;
  out->theta = r->report.theta;
  out->epsilon = r->report.epsilon;
}

size_t cw_report_n_features(const cw_report* r) { return r ? r->names.size() : 0; }
const char* cw_report_feature_name(const cw_report* r, size_t j) { return r ? Name(r->names, j) : nullptr; }

double cw_report_feature_efficiency(const cw_report* r, size_t j) {
  return r && j < r->report.per_feature_efficiency.size() ? r->report.per_feature_efficiency[j] : 0.0;
}

cw_status cw_graph_stats(const cw_dataset* d, const cw_detector_config* config, size_t max_nodes,
                         cw_graph_summary* out) {
  return Guard([&] {
    Need(d, "dataset");
    Need(out, "out");
    const auto cfg = ToConfig(config);
    auto pre = catwalk::preprocess(d->data);
    const auto stats = catwalk::compute_stats(pre.data, cfg.threads);
    const auto delta = catwalk::intra_outlierness(stats);
    const bool sdrw = cfg.method == catwalk::Method::kSdrw || cfg.method == catwalk::Method::kSdrwIa ||
                      cfg.method == catwalk::Method::kSdrwIe;
    const auto g = sdrw ? catwalk::build_sdrw_graph(delta, catwalk::lift_influence(stats, cfg.lift_scaling),
                                                    stats.value_features())
                        : catwalk::build_cbrw_graph(delta, catwalk::conditional_influence(stats),
                                                    stats.value_features());
    const auto gs = catwalk::graph_stats(g, max_nodes, cfg.threads);
    std::size_t edges = 0;
    for (std::size_t u = 0; u < g.n_nodes; ++u) {
      for (auto v : g.adjacency.row_cols(u)) {
        // Count each unordered pair once, including one-way directed edges.
        if (u < v || g.adjacency.at(v, u) == 0.0) ++edges;
      }
    }
    out->n_nodes = g.n_nodes;
    out->n_edges = edges;
    out->connected = gs.diameter.has_value() ? 1 : 0;
    out->diameter = gs.diameter.value_or(0);
    out->clustering_coefficient = gs.clustering_coefficient;
  });
}

}  // extern "C"
