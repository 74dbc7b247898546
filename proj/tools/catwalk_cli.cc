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

// Command-line front end. Talks to the library only through catwalk.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <catwalk/catwalk.h>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void Check(cw_status s) {
  if (s != CW_OK) throw CliError(cw_last_error());
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using DatasetPtr = std::unique_ptr<cw_dataset, Deleter<cw_dataset, cw_dataset_free>>;
using DetectionPtr = std::unique_ptr<cw_detection, Deleter<cw_detection, cw_detection_free>>;
using SelectionPtr = std::unique_ptr<cw_selection, Deleter<cw_selection, cw_selection_free>>;
using ReportPtr = std::unique_ptr<cw_report, Deleter<cw_report, cw_report_free>>;

std::string Num(double x) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw CliError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct InputOptions {
  std::string input;
  std::string label_column;
  bool no_header = false;
  char delimiter = ',';
};

struct EngineOptions {
  std::string method = "cbrw";
  double alpha = 0.95;
  double tol = 0.001;
  std::size_t max_iter = 100;
  std::string lift_scaling = "support";
  std::string sdrw_readout = "density-mass";
  std::string weighting = "relevance";
  unsigned threads = 1;
};

void AddInput(CLI::App* cmd, InputOptions& o) {
  cmd->add_option("-i,--input", o.input, "Input CSV file")->required();
  cmd->add_option("--label-column", o.label_column, "Label column name or 0-based index");
  cmd->add_flag("--no-header", o.no_header, "Input has no header row");
  cmd->add_option("--delimiter", o.delimiter, "Field delimiter");
}

void AddEngine(CLI::App* cmd, EngineOptions& o) {
  cmd->add_option("-m,--method", o.method,
                  "cbrw|sdrw|marp|base|cbrw-ia|cbrw-ie|sdrw-ia|sdrw-ie");
  cmd->add_option("--alpha", o.alpha, "Damping factor in [0, 1)");
  cmd->add_option("--tol", o.tol, "L1 convergence tolerance");
  cmd->add_option("--max-iter", o.max_iter, "Iteration cap");
  cmd->add_option("--lift-scaling", o.lift_scaling, "support|frequency")
      ->check(CLI::IsMember({"support", "frequency"}));
  cmd->add_option("--sdrw-readout", o.sdrw_readout, "density-mass|closed-form")
      ->check(CLI::IsMember({"density-mass", "closed-form"}));
  cmd->add_option("--weighting", o.weighting, "relevance|normalized")
      ->check(CLI::IsMember({"relevance", "normalized"}));
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
}

DatasetPtr Load(const InputOptions& o) {
  cw_csv_options opts;
  cw_csv_options_init(&opts);
  opts.has_header = o.no_header ? 0 : 1;
  opts.delimiter = o.delimiter;
  const std::string& lc = o.label_column;
  if (!lc.empty()) {
    if (lc.find_first_not_of("0123456789") == std::string::npos) {
      opts.label_index = std::stol(lc);
    } else {
      opts.label_name = lc.c_str();
    }
  }
  cw_dataset* d = nullptr;
  Check(cw_dataset_load_csv(o.input.c_str(), &opts, &d));
  return DatasetPtr(d);
}

cw_detector_config Config(const EngineOptions& o) {
  cw_detector_config c;
  cw_detector_config_init(&c);
  Check(cw_parse_method(o.method.c_str(), &c.method));
  c.alpha = o.alpha;
  c.tol = o.tol;
  c.max_iter = o.max_iter;
  c.lift_scaling = o.lift_scaling == "frequency" ? CW_LIFT_FREQUENCY : CW_LIFT_SUPPORT;
  c.sdrw_readout = o.sdrw_readout == "closed-form" ? CW_READOUT_CLOSED_FORM : CW_READOUT_DENSITY_MASS;
  c.weighting = o.weighting == "normalized" ? CW_WEIGHT_NORMALIZED : CW_WEIGHT_RELEVANCE;
  c.threads = o.threads;
  return c;
}

std::vector<std::uint8_t> Labels(const cw_dataset* d) {
  if (!cw_dataset_has_labels(d)) throw CliError("this command needs --label-column");
  std::vector<std::uint8_t> y(cw_dataset_n_objects(d));
  Check(cw_dataset_labels(d, y.data(), y.size()));
  return y;
}

struct DetectArgs {
  InputOptions in;
  EngineOptions engine;
  std::string output = "-";
  std::string format = "csv";
  bool values = false;
  bool features = false;
  std::string trace;
  std::string dump_peeling;
  std::string dump_edges;
};

int RunDetect(const DetectArgs& a) {
  auto data = Load(a.in);
  const auto cfg = Config(a.engine);
  cw_detection* raw = nullptr;
  Check(cw_detect(data.get(), &cfg, &raw));
  DetectionPtr det(raw);

  const std::size_t n = cw_detection_n_objects(det.get());
  std::vector<double> score(n);
  std::vector<std::size_t> ranking(n), rank(n);
  Check(cw_detection_scores(det.get(), score.data(), n));
  Check(cw_detection_ranking(det.get(), ranking.data(), n));
  for (std::size_t r = 0; r < n; ++r) rank[ranking[r]] = r + 1;

  const std::size_t nv = cw_detection_n_values(det.get());
  std::vector<double> phi(nv);
  if (nv) Check(cw_detection_value_outlierness(det.get(), phi.data(), nv));
  const std::size_t nf = cw_detection_n_features(det.get());
  std::vector<double> rel(nv ? nf : 0);
  if (!rel.empty()) Check(cw_detection_relevance(det.get(), rel.data(), nf));

  if (!a.trace.empty()) {
    std::vector<double> t(cw_detection_trace_length(det.get()));
    Check(cw_detection_trace(det.get(), t.data(), t.size()));
    Output out(a.trace);
    out.stream() << "iteration,l1_delta\n";
    for (std::size_t i = 0; i < t.size(); ++i) out.stream() << i + 1 << ',' << Num(t[i]) << '\n';
  }
  if (!a.dump_peeling.empty()) {
    if (!cw_detection_has_peeling(det.get())) throw CliError("--dump-peeling needs an sdrw method");
    std::vector<std::uint32_t> order(nv);
    std::vector<double> dens(nv);
    Check(cw_detection_peeling(det.get(), order.data(), dens.data(), nv));
    Output out(a.dump_peeling);
    out.stream() << "step,removed,feature,value,remaining,density\n";
    for (std::size_t t = 0; t < nv; ++t) {
      const auto v = order[t];
      out.stream() << t << ',' << v << ','
                   << CsvField(cw_detection_feature_name(det.get(), cw_detection_value_feature(det.get(), v)))
                   << ',' << CsvField(cw_detection_value_name(det.get(), v)) << ',' << nv - t << ','
                   << Num(dens[t]) << '\n';
    }
  }
  if (!a.dump_edges.empty()) Check(cw_detection_write_edges(det.get(), a.dump_edges.c_str()));

  Output out(a.output);
  auto& os = out.stream();
  auto value_row = [&](std::size_t v, auto&& emit) {
    const char* f = cw_detection_feature_name(det.get(), cw_detection_value_feature(det.get(), v));
    emit(std::string(f), std::string(cw_detection_value_name(det.get(), v)), phi[v]);
  };
  if (a.format == "json") {
    Json j;
    j["method"] = a.engine.method;
    if (nv && a.engine.method.rfind("cbrw", 0) == 0) {
      j["iterations"] = cw_detection_iterations(det.get());
      j["converged"] = cw_detection_converged(det.get()) != 0;
    }
    Json objs = Json::array();
    for (std::size_t i = 0; i < n; ++i) objs.push_back({{"object", i}, {"score", score[i]}, {"rank", rank[i]}});
    j["objects"] = std::move(objs);
    if (a.values && nv) {
      Json vals = Json::array();
      for (std::size_t v = 0; v < nv; ++v) {
        value_row(v, [&](const std::string& f, const std::string& name, double p) {
          vals.push_back({{"feature", f}, {"value", name}, {"outlierness", p}});
        });
      }
      j["values"] = std::move(vals);
    }
    if (a.features && !rel.empty()) {
      Json fs = Json::array();
      for (std::size_t f = 0; f < nf; ++f) {
        fs.push_back({{"feature", cw_detection_feature_name(det.get(), f)}, {"relevance", rel[f]}});
      }
      j["features"] = std::move(fs);
    }
    os << j.dump(2) << '\n';
    return 0;
  }
  os << "object,score,rank\n";
  for (std::size_t i = 0; i < n; ++i) os << i << ',' << Num(score[i]) << ',' << rank[i] << '\n';
  if (a.values && nv) {
    os << "\nfeature,value,outlierness\n";
    for (std::size_t v = 0; v < nv; ++v) {
      value_row(v, [&](const std::string& f, const std::string& name, double p) {
        os << CsvField(f) << ',' << CsvField(name) << ',' << Num(p) << '\n';
      });
    }
  }
  if (a.features && !rel.empty()) {
    os << "\nfeature,relevance\n";
    for (std::size_t f = 0; f < nf; ++f) {
      os << CsvField(cw_detection_feature_name(det.get(), f)) << ',' << Num(rel[f]) << '\n';
    }
  }
  return 0;
}

struct SelectArgs {
  InputOptions in;
  EngineOptions engine;
  std::optional<double> top_ratio;
  std::optional<double> min_rel;
  std::string output = "-";
  std::string format = "csv";
  std::string reduced;
};

int RunSelect(const SelectArgs& a) {
  auto data = Load(a.in);
  auto cfg = Config(a.engine);
  if (a.top_ratio) cfg.top_ratio = *a.top_ratio;
  if (a.min_rel) {
    cfg.use_min_rel = 1;
    cfg.min_rel = *a.min_rel;
  }
  cw_selection* raw = nullptr;
  Check(cw_select(data.get(), &cfg, &raw));
  SelectionPtr sel(raw);
  if (!a.reduced.empty()) {
    cw_dataset* r = nullptr;
    Check(cw_selection_reduced(sel.get(), &r));
    DatasetPtr reduced(r);
    Check(cw_dataset_write_csv(reduced.get(), a.reduced.c_str()));
  }
  Output out(a.output);
  const std::size_t k = cw_selection_count(sel.get());
  if (a.format == "json") {
    Json fs = Json::array();
    for (std::size_t i = 0; i < k; ++i) {
      fs.push_back({{"feature", cw_selection_feature_name(sel.get(), i)},
                    {"column", cw_selection_feature(sel.get(), i)},
                    {"relevance", cw_selection_relevance(sel.get(), i)}});
    }
    out.stream() << Json{{"method", a.engine.method}, {"selected", fs}}.dump(2) << '\n';
    return 0;
  }
  out.stream() << "feature,column,relevance\n";
  for (std::size_t i = 0; i < k; ++i) {
    out.stream() << CsvField(cw_selection_feature_name(sel.get(), i)) << ','
                 << cw_selection_feature(sel.get(), i) << ',' << Num(cw_selection_relevance(sel.get(), i))
                 << '\n';
  }
  return 0;
}

struct IndicatorArgs {
  InputOptions in;
  double theta = 0.05;
  double epsilon = 0.001;
  unsigned threads = 1;
  std::string output = "-";
  std::string format = "json";
};

int RunIndicators(const IndicatorArgs& a) {
  auto data = Load(a.in);
  cw_report* raw = nullptr;
  Check(cw_indicators(data.get(), a.theta, a.epsilon, a.threads, &raw));
  ReportPtr rep(raw);
  cw_complexity c;
  cw_report_summary(rep.get(), &c);
  Output out(a.output);
  const std::size_t d = cw_report_n_features(rep.get());
  if (a.format == "csv") {
    out.stream() << "kappa_vcc,kappa_het,kappa_ins,kappa_fnl\n"
                 << Num(c.kappa_vcc) << ',' << Num(c.kappa_het) << ',' << Num(c.kappa_ins) << ','
                 << Num(c.kappa_fnl) << "\n\nfeature,efficiency\n";
    for (std::size_t j = 0; j < d; ++j) {
      out.stream() << CsvField(cw_report_feature_name(rep.get(), j)) << ','
                   << Num(cw_report_feature_efficiency(rep.get(), j)) << '\n';
    }
    return 0;
  }
  Json fe = Json::array();
  for (std::size_t j = 0; j < d; ++j) {
    fe.push_back({{"feature", cw_report_feature_name(rep.get(), j)},
                  {"efficiency", cw_report_feature_efficiency(rep.get(), j)}});
  }
  Json j{{"kappa_vcc", c.kappa_vcc}, {"kappa_het", c.kappa_het}, {"kappa_ins", c.kappa_ins},
         {"kappa_fnl", c.kappa_fnl}, {"theta", c.theta},         {"epsilon", c.epsilon},
         {"feature_efficiency", fe}};
  out.stream() << j.dump(2) << '\n';
  return 0;
}

struct EvalArgs {
  InputOptions in;
  EngineOptions engine;
  std::string output = "-";
  std::string format = "json";
};

int RunEval(const EvalArgs& a) {
  auto data = Load(a.in);
  const auto y = Labels(data.get());
  const auto cfg = Config(a.engine);
  cw_detection* raw = nullptr;
  Check(cw_detect(data.get(), &cfg, &raw));
  DetectionPtr det(raw);
  std::vector<double> s(y.size());
  Check(cw_detection_scores(det.get(), s.data(), s.size()));
  double auc = 0.0;
  Check(cw_auc(s.data(), y.data(), y.size(), &auc));
  Output out(a.output);
  if (a.format == "csv") {
    out.stream() << "method,auc\n" << a.engine.method << ',' << Num(auc) << '\n';
  } else {
    out.stream() << Json{{"method", a.engine.method}, {"auc", auc}}.dump(2) << '\n';
  }
  return 0;
}

struct GraphArgs {
  InputOptions in;
  EngineOptions engine;
  std::size_t max_nodes = 20000;
  std::string output = "-";
  std::string format = "json";
};

int RunGraphStats(const GraphArgs& a) {
  auto data = Load(a.in);
  const auto cfg = Config(a.engine);
  cw_graph_summary g;
  Check(cw_graph_stats(data.get(), &cfg, a.max_nodes, &g));
  Output out(a.output);
  if (a.format == "csv") {
    out.stream() << "nodes,edges,diameter,clustering_coefficient\n"
                 << g.n_nodes << ',' << g.n_edges << ','
                 << (g.connected ? std::to_string(g.diameter) : "disconnected") << ','
                 << Num(g.clustering_coefficient) << '\n';
    return 0;
  }
  Json j{{"nodes", g.n_nodes}, {"edges", g.n_edges}};
  if (g.connected) {
    j["diameter"] = g.diameter;
  } else {
    j["diameter"] = "disconnected";
  }
  j["clustering_coefficient"] = g.clustering_coefficient;
  out.stream() << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Categorical outlier detection on value graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cw_version()));

  DetectArgs det;
  auto* c_detect = app.add_subcommand("detect", "Score objects");
  AddInput(c_detect, det.in);
  AddEngine(c_detect, det.engine);
  c_detect->add_option("-o,--output", det.output, "Output file ('-' = stdout)");
  c_detect->add_option("--format", det.format)->check(CLI::IsMember({"csv", "json"}));
  c_detect->add_flag("--values", det.values, "Also emit value outlierness");
  c_detect->add_flag("--features", det.features, "Also emit feature relevance");
  c_detect->add_option("--trace", det.trace, "Write the convergence trace CSV here");
  c_detect->add_option("--dump-peeling", det.dump_peeling, "Write the peeling record CSV here");
  c_detect->add_option("--dump-edges", det.dump_edges, "Write the value graph edge list here");

  SelectArgs sel;
  auto* c_select = app.add_subcommand("select", "Rank and select features");
  AddInput(c_select, sel.in);
  AddEngine(c_select, sel.engine);
  auto* ratio = c_select->add_option("--top-ratio", sel.top_ratio, "Keep this share of features");
  c_select->add_option("--min-rel", sel.min_rel, "Keep features with at least this relevance")
      ->excludes(ratio);
  c_select->add_option("-o,--output", sel.output);
  c_select->add_option("--format", sel.format)->check(CLI::IsMember({"csv", "json"}));
  c_select->add_option("--reduced", sel.reduced, "Write the reduced dataset CSV here");

  IndicatorArgs ind;
  auto* c_ind = app.add_subcommand("indicators", "Data complexity indicators");
  AddInput(c_ind, ind.in);
  c_ind->add_option("--theta", ind.theta, "Rarity threshold");
  c_ind->add_option("--epsilon", ind.epsilon);
  c_ind->add_option("--threads", ind.threads);
  c_ind->add_option("-o,--output", ind.output);
  c_ind->add_option("--format", ind.format)->check(CLI::IsMember({"csv", "json"}));

  EvalArgs ev;
  auto* c_eval = app.add_subcommand("eval", "AUC of a detector against labels");
  AddInput(c_eval, ev.in);
  AddEngine(c_eval, ev.engine);
  c_eval->add_option("-o,--output", ev.output);
  c_eval->add_option("--format", ev.format)->check(CLI::IsMember({"csv", "json"}));

  GraphArgs gr;
  auto* c_graph = app.add_subcommand("graph-stats", "Diameter and clustering of the value graph");
  AddInput(c_graph, gr.in);
  AddEngine(c_graph, gr.engine);
  c_graph->add_option("--max-nodes", gr.max_nodes);
  c_graph->add_option("-o,--output", gr.output);
  c_graph->add_option("--format", gr.format)->check(CLI::IsMember({"csv", "json"}));

  cw_synthetic_config gen;
  cw_synthetic_config_init(&gen);
  std::string gen_out = "-";
  auto* c_gen = app.add_subcommand("gen", "Generate a labelled synthetic dataset");
  c_gen->add_option("--n-objects", gen.n_objects);
  c_gen->add_option("--n-relevant", gen.n_relevant);
  c_gen->add_option("--n-noisy", gen.n_noisy);
  c_gen->add_option("--n-outliers", gen.n_outliers);
  c_gen->add_option("--coupling", gen.coupling_strength, "Chance an outlier carries a coupled rare value");
  c_gen->add_option("--leak", gen.outlying_leak, "Outlying-value leak into normal objects");
  c_gen->add_option("--seed", gen.seed);
  c_gen->add_option("-o,--output", gen_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_detect) return RunDetect(det);
    if (*c_select) return RunSelect(sel);
    if (*c_ind) return RunIndicators(ind);
    if (*c_eval) return RunEval(ev);
    if (*c_graph) return RunGraphStats(gr);
    if (*c_gen) {
      cw_dataset* raw = nullptr;
      Check(cw_dataset_generate(&gen, &raw));
      DatasetPtr d(raw);
      Check(cw_dataset_write_csv(d.get(), gen_out.c_str()));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
