#include "marmann/experiment.hpp"

#include "marmann/bounds.hpp"
#include "marmann/io.hpp"
#include "marmann/nn_rule.hpp"
#include "marmann/passive.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace marmann {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

enum Stream : std::uint64_t { kPoolStream = 1, kTestStream = 2, kLearnerStream = 3 };

Rng stream_rng(std::uint64_t seed, std::size_t m, Stream s) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(s)};
  return Rng(seq);
}

std::shared_ptr<LabeledPool> pool_from(Eigen::MatrixXd pts, std::vector<Label> labels, std::size_t alphabet,
                                       Norm norm = Norm::L2) {
  auto data = std::make_shared<const Dataset>(Dataset::from_points(std::move(pts), norm));
  return std::make_shared<LabeledPool>(std::move(data), std::move(labels), alphabet);
}

LabeledPoints line_points(const DiscreteSample& s) {
  LabeledPoints out;
  out.points.resize(static_cast<Eigen::Index>(s.size()), 1);
  out.labels.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.points(static_cast<Eigen::Index>(i), 0) = static_cast<double>(s.x[i]);
    out.labels[i] = s.y[i] > 0 ? 1 : 0;
  }
  return out;
}

GeneratedData generate_file(const FileSpec& spec, std::size_t m, std::uint64_t seed) {
  GeneratedData out;
  if (!spec.matrix.empty()) {
    if (spec.labels.empty()) throw std::invalid_argument("file source: a distance matrix needs a label file");
    auto data = std::make_shared<const Dataset>(Dataset::from_distance_matrix(read_distance_matrix(spec.matrix)));
    const auto raw = read_label_file(spec.labels);
    if (raw.size() != data->size()) throw std::invalid_argument("file source: label count does not match the matrix");
    auto enc = encode_labels(raw);
    out.pool = std::make_shared<LabeledPool>(std::move(data), std::move(enc.ids), enc.values.size());
    return out;
  }
  if (spec.points.empty()) throw std::invalid_argument("file source: no input file given");
  PointFile pf = read_point_csv(spec.points, spec.last_column_label ? LabelColumn::Last : LabelColumn::None);
  if (!pf.labels) throw std::invalid_argument("file source: the point file carries no labels");
  const auto enc = encode_labels(*pf.labels);
  const std::size_t n = enc.ids.size();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  const std::size_t take = (m == 0 || m >= n) ? n : m;
  if (take < n) {
    Rng rng = stream_rng(seed, m, kPoolStream);
    std::shuffle(order.begin(), order.end(), rng);
    std::sort(order.begin(), order.begin() + static_cast<long>(take));
  }
  Eigen::MatrixXd pool_pts(static_cast<Eigen::Index>(take), pf.coords.cols());
  std::vector<Label> pool_labels(take);
  for (std::size_t i = 0; i < take; ++i) {
    pool_pts.row(static_cast<Eigen::Index>(i)) = pf.coords.row(static_cast<Eigen::Index>(order[i]));
    pool_labels[i] = enc.ids[order[i]];
  }
  out.test_points.resize(static_cast<Eigen::Index>(n - take), pf.coords.cols());
  for (std::size_t i = take; i < n; ++i) {
    out.test_points.row(static_cast<Eigen::Index>(i - take)) = pf.coords.row(static_cast<Eigen::Index>(order[i]));
    out.test_labels.push_back(enc.ids[order[i]]);
  }
  out.pool = pool_from(std::move(pool_pts), std::move(pool_labels), enc.values.size(), spec.norm);
  return out;
}

std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double PlantedSpec::noise_rate(std::size_t m) const {
  return noise + (m > 0 ? noise_sqrt_m / std::sqrt(static_cast<double>(m)) : 0.0);
}

void PlantedSpec::validate(std::size_t m) const {
  const double rate = noise_rate(m);
  if (!(rate >= 0.0 && rate < 0.5)) throw std::invalid_argument("planted: noise rate must lie in [0, 1/2)");
  if (!(margin > 0.0)) throw std::invalid_argument("planted: margin must be positive");
  if (!(radius > 0.0)) throw std::invalid_argument("planted: radius must be positive");
  if (clusters < 1) throw std::invalid_argument("planted: at least one cluster is required");
}

LabeledPoints sample_planted(const PlantedSpec& spec, std::size_t n, double rate, Rng& rng) {
  if (!(rate >= 0.0 && rate < 0.5)) throw std::invalid_argument("planted: noise rate must lie in [0, 1/2)");
  std::uniform_int_distribution<std::size_t> cluster(0, spec.clusters - 1);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double spacing = 2.0 * spec.radius + spec.margin;

  LabeledPoints out;
  out.points.resize(static_cast<Eigen::Index>(n), 2);
  out.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = cluster(rng);
    const double r = spec.radius * std::sqrt(unif(rng));
    const double a = 2.0 * std::numbers::pi * unif(rng);
    const auto row = static_cast<Eigen::Index>(i);
    out.points(row, 0) = static_cast<double>(c) * spacing + r * std::cos(a);
    out.points(row, 1) = r * std::sin(a);
    out.labels[i] = static_cast<Label>(c % 2);
  }
  out.flipped = static_cast<std::size_t>(std::floor(rate * static_cast<double>(n)));
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  for (std::size_t k = 0; k < out.flipped; ++k) out.labels[idx[k]] = 1 - out.labels[idx[k]];
  return out;
}

LabeledPool generate_planted(const PlantedSpec& spec, std::size_t m, Rng& rng) {
  spec.validate(m);
  LabeledPoints s = sample_planted(spec, m, spec.noise_rate(m), rng);
  return LabeledPool(std::make_shared<const Dataset>(Dataset::from_points(std::move(s.points))), std::move(s.labels), 2);
}

GeneratedData generate(const GeneratorSpec& spec, std::size_t m, std::uint64_t seed) {
  if (spec.kind == GeneratorKind::File) return generate_file(spec.file, m, seed);
  if (m < 1) throw std::invalid_argument("generate: m must be positive");
  Rng pool_rng = stream_rng(seed, m, kPoolStream);
  Rng test_rng = stream_rng(seed, m, kTestStream);
  const std::size_t n_test = 10 * m;

  LabeledPoints pool, test;
  switch (spec.kind) {
    case GeneratorKind::Planted: {
      spec.planted.validate(m);
      const double rate = spec.planted.noise_rate(m);
      pool = sample_planted(spec.planted, m, rate, pool_rng);
      test = sample_planted(spec.planted, n_test, rate, test_rng);
      break;
    }
    case GeneratorKind::UniformNoisy:
      pool = line_points(sample_uniform_noisy(spec.uniform, m, pool_rng));
      test = line_points(sample_uniform_noisy(spec.uniform, n_test, test_rng));
      break;
    case GeneratorKind::Adversarial:
      pool = line_points(sample_adversarial(spec.adversarial, m, pool_rng));
      test = line_points(sample_adversarial(spec.adversarial, n_test, test_rng));
      break;
    case GeneratorKind::File:
      break;
  }
  GeneratedData out;
  out.pool = pool_from(std::move(pool.points), std::move(pool.labels), 2);
  out.test_points = std::move(test.points);
  out.test_labels = std::move(test.labels);
  return out;
}

std::string to_string(Learner l) {
  switch (l) {
    case Learner::Marmann: return "marmann";
    case Learner::PassiveRelabel: return "passive_relabel";
    case Learner::PassiveSeparation: return "passive_separation";
  }
  return "?";
}

Learner parse_learner(const std::string& name) {
  if (name == "marmann" || name == "active") return Learner::Marmann;
  if (name == "passive_relabel" || name == "relabel") return Learner::PassiveRelabel;
  if (name == "passive_separation" || name == "separation") return Learner::PassiveSeparation;
  throw std::invalid_argument("unknown learner: " + name);
}

ExperimentConfig parse_config(const nlohmann::json& j) {
  ExperimentConfig cfg;
  const auto& g = j.at("generator");
  const std::string kind = g.at("kind").get<std::string>();
  if (kind == "planted") {
    cfg.generator.kind = GeneratorKind::Planted;
    auto& p = cfg.generator.planted;
    p.margin = g.value("margin", p.margin);
    p.noise = g.value("noise", p.noise);
    p.noise_sqrt_m = g.value("noise_sqrt_m", p.noise_sqrt_m);
    p.clusters = g.value("clusters", p.clusters);
    p.radius = g.value("radius", p.radius);
  } else if (kind == "uniform_noisy") {
    cfg.generator.kind = GeneratorKind::UniformNoisy;
    auto& u = cfg.generator.uniform;
    u.N = g.value("N", u.N);
    u.beta = g.value("beta", u.beta);
    if (g.contains("majority")) u.majority = g.at("majority").get<std::vector<int>>();
    u.validate();
  } else if (kind == "adversarial") {
    cfg.generator.kind = GeneratorKind::Adversarial;
    auto& a = cfg.generator.adversarial;
    a.d = g.value("d", a.d);
    a.b = g.value("b", a.b);
    a.p = g.value("p", a.p);
    if (g.contains("sigma")) a.sigma = g.at("sigma").get<std::vector<int>>();
    else a.sigma.assign(a.d - 1, 1);
    if (g.contains("eta")) a.eta = g.at("eta").get<double>();
    a.validate();
  } else if (kind == "file") {
    cfg.generator.kind = GeneratorKind::File;
    auto& f = cfg.generator.file;
    f.points = g.value("points", f.points);
    f.matrix = g.value("matrix", f.matrix);
    f.labels = g.value("labels", f.labels);
    f.norm = parse_norm(g.value("metric", std::string("l2")));
    f.last_column_label = g.value("last_column_label", f.last_column_label);
  } else {
    throw std::invalid_argument("unknown generator kind: " + kind);
  }

  if (j.contains("m")) {
    if (j.at("m").is_array()) cfg.m = j.at("m").get<std::vector<std::size_t>>();
    else cfg.m = {j.at("m").get<std::size_t>()};
  }
  if (cfg.m.empty()) {
    if (cfg.generator.kind != GeneratorKind::File) throw std::invalid_argument("config: m list is required");
    cfg.m = {0};
  }
  cfg.delta = j.value("delta", cfg.delta);
  if (!(cfg.delta > 0.0 && cfg.delta < 0.25)) throw std::invalid_argument("config: delta must lie in (0, 1/4)");

  const auto& s = j.at("seeds");
  if (s.is_array()) {
    cfg.seeds = s.get<std::vector<std::uint64_t>>();
  } else {
    const auto first = s.value("first", std::uint64_t{1});
    const auto count = s.at("count").get<std::uint64_t>();
    for (std::uint64_t k = 0; k < count; ++k) cfg.seeds.push_back(first + k);
  }
  if (cfg.seeds.empty()) throw std::invalid_argument("config: at least one seed is required");

  const auto learners = j.value("learners", std::vector<std::string>{"marmann", "passive_relabel"});
  for (const auto& l : learners) cfg.learners.push_back(parse_learner(l));
  cfg.scale_grid = j.value("scale_grid", cfg.scale_grid);
  cfg.g_min = j.value("g_min", cfg.g_min);
  cfg.threads = j.value("threads", cfg.threads);
  if (j.contains("output")) {
    const auto& o = j.at("output");
    cfg.out_dir = o.value("dir", cfg.out_dir.string());
    cfg.traces = o.value("traces", cfg.traces);
  }
  return cfg;
}

ExperimentConfig read_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path.string());
  return parse_config(nlohmann::json::parse(in, nullptr, true, true));
}

std::vector<CellOutcome> run_group(const ExperimentConfig& cfg, std::size_t m, std::uint64_t seed) {
  std::vector<CellOutcome> out;
  GeneratedData data;
  std::optional<std::string> data_error;
  try {
    data = generate(cfg.generator, m, seed);
  } catch (const std::exception& e) {
    data_error = e.what();
  }

  double gmin = kNaN;
  if (!data_error && cfg.g_min) {
    try {
      gmin = g_min_reference(*data.pool, cfg.delta).value;
    } catch (const std::exception&) {
      gmin = kNaN;
    }
  }

  for (Learner learner : cfg.learners) {
    CellOutcome cell;
    ResultRow& row = cell.row;
    row.learner = to_string(learner);
    row.m = data_error ? m : data.pool->size();
    row.seed = seed;
    row.g_min_ref = gmin;
    try {
      if (data_error) throw std::runtime_error(*data_error);
      LabeledPool& pool = *data.pool;
      const std::size_t pm = pool.size();
      const auto start = std::chrono::steady_clock::now();
      std::optional<NNClassifier> h;

      if (learner == Learner::Marmann) {
        Rng lr = stream_rng(seed, m, kLearnerStream);
        RunResult res = run_marmann(pool, cfg.delta, lr(), RunOptions{ScaleGrid{cfg.scale_grid}});
        row.t_hat = res.report.t_hat;
        row.N_hat = res.report.compression_size;
        row.emp_error = res.report.emp_error;
        row.unique_labels = res.report.unique_labels;
        row.total_requests = res.report.total_requests;
        cell.ledger = res.ledger;
        if (cfg.traces) cell.trace = report_to_json(res.report, cfg.delta, pm);
        cell.report = std::move(res.report);
        h.emplace(std::move(res.classifier));
      } else {
        PassiveResult res = learner == Learner::PassiveRelabel ? passive_relabel(pool, cfg.delta)
                                                               : passive_separation_binary(pool, cfg.delta);
        row.t_hat = res.t_star;
        row.N_hat = res.compression.size();
        row.emp_error = res.emp_error;
        row.unique_labels = res.labels_used;
        row.total_requests = res.labels_used;
        if (cfg.traces)
          cell.trace = nlohmann::json{{"learner", row.learner}, {"t_star", res.t_star}, {"N", row.N_hat},
                                      {"emp_error", res.emp_error}, {"gb_value", res.gb_value}, {"labels_used", res.labels_used}};
        h.emplace(std::move(res.compression), pool.dataset_ptr());
      }
      row.G_hat = gb(row.emp_error, row.N_hat, cfg.delta, pm, 1);
      row.test_error = data.test_labels.empty() ? kNaN : sample_error(*h, data.test_points, data.test_labels);
      row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    } catch (const std::exception& e) {
      row.ok = false;
      row.t_hat = row.emp_error = row.test_error = row.G_hat = row.wall_time = kNaN;
      cell.error = e.what();
    }
    out.push_back(std::move(cell));
  }
  return out;
}

const char* const kResultsSchema = "# marmann-results v1";
const char* const kResultsHeader =
    "learner,m,seed,t_hat,N_hat,emp_error,test_error,G_hat,g_min_ref,unique_labels,total_requests,wall_time";

std::string format_row(const ResultRow& r, bool with_wall_time) {
  std::ostringstream os;
  os << r.learner << ',' << r.m << ',' << r.seed << ',' << fmt_double(r.t_hat) << ',';
  if (r.ok) os << r.N_hat;
  else os << "nan";
  os << ',' << fmt_double(r.emp_error) << ',' << fmt_double(r.test_error) << ',' << fmt_double(r.G_hat) << ','
     << fmt_double(r.g_min_ref) << ',';
  if (r.ok) os << r.unique_labels << ',' << r.total_requests;
  else os << "nan,nan";
  if (with_wall_time) os << ',' << fmt_double(r.wall_time);
  return os.str();
}

void write_results_csv(std::ostream& out, const std::vector<CellOutcome>& cells) {
  out << kResultsSchema << '\n' << kResultsHeader << '\n';
  for (const auto& c : cells) out << format_row(c.row) << '\n';
}

SuiteResult run_suite(const ExperimentConfig& cfg, bool write) {
  struct Job {
    std::size_t m;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (std::size_t m : cfg.m)
    for (std::uint64_t s : cfg.seeds) jobs.push_back({m, s});

  std::vector<std::vector<CellOutcome>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = run_group(cfg, jobs[i].m, jobs[i].seed);
  };
  std::size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(1, jobs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SuiteResult suite;
  for (auto& group : results)
    for (auto& c : group) suite.cells.push_back(std::move(c));
  if (!write) return suite;

  std::filesystem::create_directories(cfg.out_dir);
  {
    std::ofstream out(cfg.out_dir / "results.csv");
    write_results_csv(out, suite.cells);
  }
  {
    std::ofstream out(cfg.out_dir / "failures.csv");
    out << "learner,m,seed,error\n";
    for (const auto& c : suite.cells) {
      if (!c.error) continue;
      std::string msg = *c.error;
      std::replace(msg.begin(), msg.end(), '"', '\'');
      out << c.row.learner << ',' << c.row.m << ',' << c.row.seed << ",\"" << msg << "\"\n";
    }
  }
  if (cfg.traces) {
    for (const auto& c : suite.cells) {
      if (!c.trace) continue;
      std::ofstream out(cfg.out_dir / ("trace_" + c.row.learner + "_" + std::to_string(c.row.m) + "_" +
                                       std::to_string(c.row.seed) + ".json"));
      out << c.trace->dump(2) << '\n';
    }
  }
  return suite;
}

nlohmann::json trace_to_json(const SearchTrace& trace) {
  nlohmann::json tested = nlohmann::json::array();
  for (const auto& r : trace.tested) {
    nlohmann::json rec{{"t", r.t},
                       {"N_t", r.N_t},
                       {"phi_t", r.phi_t},
                       {"draws", r.draws_used},
                       {"rounds", r.rounds},
                       {"new_unique_labels", r.new_unique_labels},
                       {"new_requests", r.new_requests},
                       {"decision", to_string(r.move)}};
    rec["eps_hat"] = r.eps_hat ? nlohmann::json(*r.eps_hat) : nlohmann::json(nullptr);
    rec["g_hat"] = r.g_hat ? nlohmann::json(*r.g_hat) : nlohmann::json(nullptr);
    tested.push_back(std::move(rec));
  }
  nlohmann::json j{{"candidate_scales", trace.candidate_count},
                   {"tested", std::move(tested)},
                   {"went_left", trace.went_left},
                   {"outcome", to_string(trace.outcome)}};
  j["t0"] = trace.t0 ? nlohmann::json(*trace.t0) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json report_to_json(const RunReport& r, double delta, std::size_t m) {
  return nlohmann::json{{"learner", "marmann"},
                        {"m", m},
                        {"delta", delta},
                        {"t_hat", r.t_hat},
                        {"compression_size", r.compression_size},
                        {"eps_hat_final", r.eps_hat_final},
                        {"emp_error", r.emp_error},
                        {"G_hat", r.G_hat},
                        {"unique_labels", r.unique_labels},
                        {"total_requests", r.total_requests},
                        {"search_unique_labels", r.search_unique_labels},
                        {"search_requests", r.search_requests},
                        {"query_budget", r.query_budget},
                        {"search_trace", trace_to_json(r.search_trace)}};
}

}  // namespace marmann
