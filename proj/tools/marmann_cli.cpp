// Command-line front end: active and passive runs, net curves, search
// traces, adversarial-lab utilities and the batch suite.

#include "marmann/adversarial.hpp"
#include "marmann/experiment.hpp"
#include "marmann/io.hpp"
#include "marmann/marmann.hpp"
#include "marmann/net.hpp"
#include "marmann/passive.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

using namespace marmann;

namespace {

struct DataArgs {
  std::string data, matrix, labels, metric = "l2", label_column = "last";
  bool verify_metric = false;
};

void add_data_options(CLI::App* cmd, DataArgs& a) {
  auto* data = cmd->add_option("--data", a.data, "Point CSV: id,x1,...,xd,label");
  auto* matrix = cmd->add_option("--matrix", a.matrix, "Distance matrix CSV (m rows of m values)");
  cmd->add_option("--labels", a.labels, "Label file for --matrix");
  cmd->add_option("--metric", a.metric, "Norm for point files")->check(CLI::IsMember({"l2", "l1", "linf"}));
  cmd->add_option("--label-column", a.label_column, "Headerless point files: 'last' or 'none'")
      ->check(CLI::IsMember({"last", "none"}));
  cmd->add_flag("--verify-metric", a.verify_metric, "Check the triangle inequality before running");
  data->excludes(matrix);
}

LabeledPool load_pool(const DataArgs& a) {
  std::shared_ptr<const Dataset> data;
  EncodedLabels enc;
  if (!a.matrix.empty()) {
    if (a.labels.empty()) throw std::invalid_argument("--matrix needs --labels");
    data = std::make_shared<const Dataset>(Dataset::from_distance_matrix(read_distance_matrix(a.matrix)));
    enc = encode_labels(read_label_file(a.labels));
  } else if (!a.data.empty()) {
    PointFile pf = read_point_csv(a.data, a.label_column == "none" ? LabelColumn::None : LabelColumn::Last);
    if (!pf.labels && a.labels.empty()) throw std::invalid_argument("the point file has no labels; pass --labels");
    enc = encode_labels(pf.labels ? *pf.labels : read_label_file(a.labels));
    data = std::make_shared<const Dataset>(Dataset::from_points(std::move(pf.coords), parse_norm(a.metric)));
  } else {
    throw std::invalid_argument("pass --data or --matrix");
  }
  if (enc.ids.size() != data->size()) throw std::invalid_argument("label count does not match point count");
  if (a.verify_metric) {
    if (auto v = find_triangle_violation(*data)) {
      throw std::invalid_argument("triangle inequality fails at (" + std::to_string(v->i) + ", " + std::to_string(v->j) +
                                  ", " + std::to_string(v->k) + ")");
    }
  }
  return LabeledPool(std::move(data), std::move(enc.ids), enc.values.size());
}

std::size_t parse_grid(const std::string& spec) {
  if (spec.empty() || spec == "all") return 0;
  const std::string prefix = "quantile:";
  if (spec.rfind(prefix, 0) != 0) throw std::invalid_argument("--scale-grid expects 'all' or 'quantile:<k>'");
  const long k = std::stol(spec.substr(prefix.size()));
  if (k < 1) throw std::invalid_argument("--scale-grid quantile count must be positive");
  return static_cast<std::size_t>(k);
}

void emit(const nlohmann::json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

nlohmann::json compression_json(const CompressionSet& cs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : cs.entries()) arr.push_back({{"id", e.id}, {"label", e.label}});
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Active nearest-neighbor learning over metric spaces"};
  app.require_subcommand(1);

  // run
  DataArgs run_data;
  double delta = 0.05;
  std::uint64_t seed = 1;
  std::string out_path, trace_path, grid = "all";
  auto* run = app.add_subcommand("run", "Active run: select a scale and output the compression set");
  add_data_options(run, run_data);
  run->add_option("--delta", delta, "Confidence parameter in (0, 1/4)");
  run->add_option("--seed", seed, "Random seed");
  run->add_option("--out", out_path, "Report JSON (default: stdout)");
  run->add_option("--trace", trace_path, "Also write the scale-search trace JSON here");
  run->add_option("--scale-grid", grid, "'all' or 'quantile:<k>' (speed knob)");

  // passive run
  DataArgs passive_data;
  std::string variant = "relabel", passive_out;
  double passive_delta = 0.05;
  auto* passive = app.add_subcommand("passive", "Full-label baselines");
  auto* passive_run = passive->add_subcommand("run", "Run a passive learner");
  passive->require_subcommand(1);
  add_data_options(passive_run, passive_data);
  passive_run->add_option("--variant", variant)->check(CLI::IsMember({"relabel", "separation"}));
  passive_run->add_option("--delta", passive_delta);
  passive_run->add_option("--out", passive_out);

  // net-curve
  DataArgs curve_data;
  std::string curve_out;
  auto* curve = app.add_subcommand("net-curve", "CSV of t,N(t) over the candidate scales");
  add_data_options(curve, curve_data);
  curve->add_option("--out", curve_out);

  // trace
  DataArgs trace_data;
  double trace_delta = 0.05;
  std::uint64_t trace_seed = 1;
  std::string trace_out, trace_grid = "all";
  auto* trace = app.add_subcommand("trace", "Run the scale search and dump its trace JSON");
  add_data_options(trace, trace_data);
  trace->add_option("--delta", trace_delta);
  trace->add_option("--seed", trace_seed);
  trace->add_option("--out", trace_out);
  trace->add_option("--scale-grid", trace_grid);

  // lab
  auto* lab = app.add_subcommand("lab", "Lower-bound constructions");
  lab->require_subcommand(1);
  double curve_b = 0.5;
  std::size_t kmax = 50;
  auto* bayes_curve = lab->add_subcommand("bayes-curve", "CSV of k,bayes(k,b)");
  bayes_curve->add_option("--b", curve_b)->check(CLI::Range(0.0, 1.0));
  bayes_curve->add_option("--kmax", kmax);

  AdversarialParams adv;
  std::size_t adv_n = 1000;
  std::uint64_t adv_seed = 1;
  std::string adv_out;
  std::vector<int> adv_sigma;
  double adv_eta = -1.0;
  auto* adv_sample = lab->add_subcommand("adversarial-sample", "Point CSV drawn from the adversarial family");
  adv_sample->add_option("--d", adv.d, "Support size")->required();
  adv_sample->add_option("--b", adv.b)->required();
  adv_sample->add_option("--p", adv.p)->required();
  adv_sample->add_option("--sigma", adv_sigma, "d-1 signs (default: all +1)");
  adv_sample->add_option("--eta", adv_eta, "Declared noise bound to enforce");
  adv_sample->add_option("--n", adv_n);
  adv_sample->add_option("--seed", adv_seed);
  adv_sample->add_option("--out", adv_out);

  // run-suite
  std::string config_path, out_dir;
  auto* suite = app.add_subcommand("run-suite", "Batch experiment from a JSON config");
  suite->add_option("--config", config_path)->required()->check(CLI::ExistingFile);
  suite->add_option("--out-dir", out_dir);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      LabeledPool pool = load_pool(run_data);
      RunResult res = run_marmann(pool, delta, seed, RunOptions{ScaleGrid{parse_grid(grid)}});
      nlohmann::json j = report_to_json(res.report, delta, pool.size());
      j["seed"] = seed;
      j["compression_set"] = compression_json(res.classifier.compression());
      emit(j, out_path);
      if (!trace_path.empty()) emit(trace_to_json(res.report.search_trace), trace_path);
    } else if (*passive_run) {
      LabeledPool pool = load_pool(passive_data);
      PassiveResult res = variant == "relabel" ? passive_relabel(pool, passive_delta)
                                               : passive_separation_binary(pool, passive_delta);
      emit(nlohmann::json{{"learner", "passive_" + variant},
                          {"m", pool.size()},
                          {"delta", passive_delta},
                          {"t_star", res.t_star},
                          {"compression_size", res.compression.size()},
                          {"emp_error", res.emp_error},
                          {"gb_value", res.gb_value},
                          {"labels_used", res.labels_used},
                          {"compression_set", compression_json(res.compression)}},
           passive_out);
    } else if (*curve) {
      LabeledPool pool = load_pool(curve_data);
      const auto idx = build_fft(pool.dataset());
      std::ofstream file;
      if (!curve_out.empty()) file.open(curve_out);
      std::ostream& out = curve_out.empty() ? std::cout : file;
      out << "t,N(t)\n";
      char buf[64];
      for (double t : candidate_scales(idx, pool.dataset())) {
        std::snprintf(buf, sizeof buf, "%.17g,%zu", t, idx.net_size(t));
        out << buf << '\n';
      }
    } else if (*trace) {
      LabeledPool pool = load_pool(trace_data);
      RunResult res = run_marmann(pool, trace_delta, trace_seed, RunOptions{ScaleGrid{parse_grid(trace_grid)}});
      emit(trace_to_json(res.report.search_trace), trace_out);
    } else if (*bayes_curve) {
      std::cout << "k,bayes\n";
      char buf[64];
      for (std::size_t k = 0; k <= kmax; ++k) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g", k, bayes_fn(k, curve_b));
        std::cout << buf << '\n';
      }
    } else if (*adv_sample) {
      adv.sigma = adv_sigma.empty() ? std::vector<int>(adv.d > 0 ? adv.d - 1 : 0, 1) : adv_sigma;
      if (adv_eta >= 0.0) adv.eta = adv_eta;
      Rng rng(adv_seed);
      const DiscreteSample s = sample_adversarial(adv, adv_n, rng);
      Eigen::MatrixXd coords(static_cast<Eigen::Index>(s.size()), 1);
      std::vector<long> labels(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        coords(static_cast<Eigen::Index>(i), 0) = static_cast<double>(s.x[i]);
        labels[i] = s.y[i];
      }
      std::ofstream file;
      if (!adv_out.empty()) file.open(adv_out);
      write_point_csv(adv_out.empty() ? std::cout : file, coords, labels);
    } else if (*suite) {
      ExperimentConfig cfg = read_config(config_path);
      if (!out_dir.empty()) cfg.out_dir = out_dir;
      const SuiteResult res = run_suite(cfg);
      std::size_t failed = 0;
      for (const auto& c : res.cells) failed += c.error.has_value();
      std::cerr << res.cells.size() << " cells written to " << (cfg.out_dir / "results.csv").string();
      if (failed) std::cerr << " (" << failed << " failed, see failures.csv)";
      std::cerr << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
