#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nmcd/baselines.hpp"
#include "nmcd/io.hpp"
#include "nmcd/metrics.hpp"
#include "nmcd/pipeline.hpp"
#include "nmcd/rng.hpp"
#include "nmcd/simgen.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

constexpr int kSchemaVersion = 1;

using nmcd::DetectConfig;
using nmcd::DetectionResult;
using ojson = nlohmann::ordered_json;

struct DetectFlags {
  std::string input;
  std::string column;
  std::string method = "nmcd";
  std::string weight = "zhang";
  std::string output = "json";
  std::optional<int> known_k;
  std::optional<int> max_k;
  std::optional<double> zeta;
  double zeta_exponent = 2.1;
  std::optional<int> window;
  bool no_screening = false;
  bool no_correction = false;
  bool allow_zero = false;
};

void add_detect_flags(CLI::App& cmd, DetectFlags& f, bool with_io) {
  if (with_io) {
    cmd.add_option("input", f.input, "input file, one value per line")->required();
    cmd.add_option("--column", f.column, "read this column of a CSV file instead");
    cmd.add_option("--output", f.output, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
  }
  cmd.add_option("--method", f.method, "detector")
      ->check(CLI::IsMember({"nmcd", "pl-mean", "pl-meanvar"}));
  cmd.add_option("--k", f.known_k, "treat the number of change points as known")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--max-k", f.max_k, "largest number of change points tried")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--zeta", f.zeta, "penalty per change point")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--zeta-exponent", f.zeta_exponent, "penalty is (log n)^e / 2")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--window", f.window, "prescreen window size")
      ->check(CLI::Range(2, 1 << 28));
  cmd.add_flag("--no-screening", f.no_screening, "run the dynamic program on the full grid");
  cmd.add_flag("--no-correction", f.no_correction, "drop the 1/(2m) continuity correction");
  cmd.add_option("--weight", f.weight, "integration weight")
      ->check(CLI::IsMember({"zhang", "uniform"}));
  cmd.add_flag("--allow-zero", f.allow_zero, "let selection return zero change points");
}

DetectConfig to_config(const DetectFlags& f) {
  DetectConfig cfg;
  cfg.weight = f.weight == "uniform" ? nmcd::WeightVariant::Uniform : nmcd::WeightVariant::Zhang;
  cfg.correction = !f.no_correction;
  cfg.screening = !f.no_screening;
  cfg.window = f.window;
  cfg.zeta = f.zeta;
  cfg.zeta_exponent = f.zeta_exponent;
  cfg.k_bar = f.max_k;
  cfg.known_k = f.known_k;
  cfg.allow_zero = f.allow_zero;
  return cfg;
}

nmcd::PlConfig to_pl_config(const DetectFlags& f) {
  nmcd::PlConfig cfg;
  cfg.criterion = f.method == "pl-meanvar" ? nmcd::PlCriterion::MeanVar : nmcd::PlCriterion::Mean;
  cfg.known_k = f.known_k;
  cfg.k_bar = f.max_k;
  cfg.zeta = f.zeta;
  cfg.allow_zero = f.allow_zero;
  return cfg;
}

DetectionResult run_method(const std::vector<double>& values, const DetectFlags& f) {
  if (f.method == "nmcd") return nmcd::detect(values, to_config(f));
  return nmcd::pl_detect(values, to_pl_config(f));
}

std::vector<double> load_values(const DetectFlags& f) {
  std::ifstream in(f.input);
  if (!in) throw std::invalid_argument("cannot open '" + f.input + "'");
  if (!f.column.empty()) return nmcd::read_csv_column(in, f.column);
  return nmcd::read_values_lines(in);
}

ojson config_echo(const DetectFlags& f, int n, const DetectionResult& res) {
  const bool nm = f.method == "nmcd";
  ojson echo;
  echo["method"] = f.method;
  echo["weight"] = nm ? ojson(f.weight) : ojson(nullptr);
  echo["correction"] = nm ? ojson(!f.no_correction) : ojson(nullptr);
  echo["screening"] = nm ? ojson(!f.no_screening) : ojson(nullptr);
  if (nm && !f.no_screening) {
    echo["window"] = f.window ? *f.window : nmcd::default_window(n);
  } else {
    echo["window"] = nullptr;
  }
  if (f.known_k) {
    echo["zeta"] = nullptr;
  } else if (f.zeta) {
    echo["zeta"] = *f.zeta;
  } else {
    echo["zeta"] = nm ? nmcd::default_zeta(n, f.zeta_exponent) : std::log(n);
  }
  echo["zeta_exponent"] = nm ? ojson(f.zeta_exponent) : ojson(nullptr);
  echo["max_k"] = res.bic ? ojson(res.bic->k_bar) : ojson(nullptr);
  echo["known_k"] = f.known_k ? ojson(*f.known_k) : ojson(nullptr);
  echo["allow_zero"] = f.allow_zero;
  echo["column"] = f.column.empty() ? ojson(nullptr) : ojson(f.column);
  return echo;
}

ojson detection_json(const DetectFlags& f, const std::vector<double>& values,
                     const DetectionResult& res) {
  ojson out;
  out["schema_version"] = kSchemaVersion;
  out["n"] = static_cast<int>(values.size());
  out["k_hat"] = res.k_hat;
  out["change_points"] = res.segmentation.change_points;
  out["loglik"] = res.loglik;
  if (res.bic) {
    ojson trace = ojson::array();
    for (const nmcd::BicEntry& e : res.bic->entries) {
      trace.push_back({{"L", e.l}, {"max_loglik", e.max_loglik}, {"bic", e.bic}});
    }
    out["bic"] = std::move(trace);
  } else {
    out["bic"] = nullptr;
  }
  if (res.candidates) {
    out["candidates"] = {{"window", res.candidates->n_i},
                         {"positions", res.candidates->candidates}};
  } else {
    out["candidates"] = nullptr;
  }
  out["config_echo"] = config_echo(f, static_cast<int>(values.size()), res);
  out["warnings"] = res.warnings;
  out["runtime_ms"] = res.timing.total_ms;
  return out;
}

void write_segments_csv(std::ostream& os, const std::vector<double>& values,
                        const nmcd::Segmentation& seg) {
  const std::vector<int> b = seg.boundaries();
  std::vector<int> id(values.size());
  std::vector<double> mean(values.size());
  for (std::size_t s = 0; s + 1 < b.size(); ++s) {
    double sum = 0.0;
    for (int i = b[s]; i < b[s + 1]; ++i) sum += values[i - 1];
    const double mu = sum / (b[s + 1] - b[s]);
    for (int i = b[s]; i < b[s + 1]; ++i) {
      id[i - 1] = static_cast<int>(s) + 1;
      mean[i - 1] = mu;
    }
  }
  os << "schema_version,index,value,segment_id,segment_mean\n";
  char line[128];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(line, sizeof line, "%d,%zu,%.17g,%d,%.17g\n", kSchemaVersion, i + 1,
                  values[i], id[i], mean[i]);
    os << line;
  }
}

int cmd_detect(const DetectFlags& f) {
  const std::vector<double> values = load_values(f);
  const DetectionResult res = run_method(values, f);
  if (f.output == "csv") {
    write_segments_csv(std::cout, values, res.segmentation);
  } else {
    std::cout << detection_json(f, values, res).dump(2) << "\n";
  }
  return 0;
}

struct SimFlags {
  std::string model = "blocks1";
  std::string error = "normal";
  std::string prefix = "sim";
  int n = 1000;
  double sigma = 1.0;
  std::uint64_t seed = 1;
};

nmcd::SimSpec to_spec(const SimFlags& f) {
  static const std::map<std::string, nmcd::SimModel> models = {
      {"blocks1", nmcd::SimModel::Blocks1},
      {"meanscale2", nmcd::SimModel::MeanScale2},
      {"shape3", nmcd::SimModel::Shape3},
      {"diverging1", nmcd::SimModel::Diverging1},
      {"diverging2", nmcd::SimModel::Diverging2}};
  static const std::map<std::string, nmcd::ErrorDist> errors = {
      {"normal", nmcd::ErrorDist::Normal},
      {"t3", nmcd::ErrorDist::T3},
      {"chisq1", nmcd::ErrorDist::ChiSq1}};
  nmcd::SimSpec spec;
  spec.model = models.at(f.model);
  spec.n = f.n;
  spec.sigma = f.sigma;
  spec.error = errors.at(f.error);
  spec.seed = f.seed;
  return spec;
}

void add_sim_flags(CLI::App& cmd, SimFlags& f) {
  cmd.add_option("--model", f.model, "simulation model")
      ->check(CLI::IsMember({"blocks1", "meanscale2", "shape3", "diverging1", "diverging2"}));
  cmd.add_option("--n", f.n, "sequence length")->check(CLI::Range(20, 1 << 28));
  cmd.add_option("--sigma", f.sigma, "noise scale")->check(CLI::PositiveNumber);
  cmd.add_option("--error", f.error, "error distribution")
      ->check(CLI::IsMember({"normal", "t3", "chisq1"}));
  cmd.add_option("--seed", f.seed, "master seed");
}

int cmd_simulate(const SimFlags& f) {
  const nmcd::SimSpec spec = to_spec(f);
  const nmcd::SimData data = nmcd::generate(spec);

  const std::string csv_path = f.prefix + ".csv";
  std::ofstream csv(csv_path);
  if (!csv) throw std::invalid_argument("cannot write '" + csv_path + "'");
  char line[64];
  for (double v : data.values) {
    std::snprintf(line, sizeof line, "%.17g\n", v);
    csv << line;
  }

  ojson side;
  side["schema_version"] = kSchemaVersion;
  side["model"] = f.model;
  side["n"] = f.n;
  side["sigma"] = f.sigma;
  side["error"] = f.error;
  side["seed"] = f.seed;
  side["truth"] = data.truth.change_points;
  const std::string json_path = f.prefix + ".json";
  std::ofstream js(json_path);
  if (!js) throw std::invalid_argument("cannot write '" + json_path + "'");
  js << side.dump(2) << "\n";
  return 0;
}

struct RepOutcome {
  bool has_xi = false;
  int xi_est_true = 0;
  int xi_true_est = 0;
  int abs_k_err = 0;
  double rand = 0.0;
  double runtime_ms = 0.0;
};

struct BenchFlags {
  SimFlags sim;
  DetectFlags det;
  std::string methods = "nmcd";
  int reps = 100;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void append_stats(std::ostream& os, const std::vector<double>& xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= xs.empty() ? 1 : static_cast<double>(xs.size());
  os << "," << (xs.empty() ? "" : fmt(mean));
  if (xs.size() < 2) {
    os << ",";
    return;
  }
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  os << "," << fmt(std::sqrt(ss / (xs.size() - 1)));
}

int cmd_bench(const BenchFlags& f) {
  std::vector<std::string> methods;
  {
    std::stringstream ss(f.methods);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item != "nmcd" && item != "pl-mean" && item != "pl-meanvar") {
        throw std::invalid_argument("unknown method '" + item + "'");
      }
      methods.push_back(item);
    }
    if (methods.empty()) throw std::invalid_argument("no methods given");
  }
  const nmcd::SimSpec base = to_spec(f.sim);

  std::vector<std::vector<RepOutcome>> results(methods.size());
  for (auto& r : results) r.resize(f.reps);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int rep = 0; rep < f.reps; ++rep) {
    try {
      nmcd::SimSpec spec = base;
      spec.seed = nmcd::substream_seed(base.seed, rep);
      const nmcd::SimData data = nmcd::generate(spec);
      for (std::size_t mi = 0; mi < methods.size(); ++mi) {
        DetectFlags df = f.det;
        df.method = methods[mi];
        const DetectionResult res = run_method(data.values, df);
        RepOutcome& out = results[mi][rep];
        out.abs_k_err = std::abs(res.k_hat - static_cast<int>(data.truth.change_points.size()));
        out.rand = nmcd::rand_index(res.segmentation, data.truth);
        out.runtime_ms = res.timing.total_ms;
        if (res.k_hat > 0) {
          out.has_xi = true;
          out.xi_est_true = nmcd::xi(res.segmentation.change_points, data.truth.change_points);
          out.xi_true_est = nmcd::xi(data.truth.change_points, res.segmentation.change_points);
        }
      }
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::cout << "schema_version,method,reps,k_zero_count"
               ",xi_est_true_mean,xi_est_true_sd,xi_true_est_mean,xi_true_est_sd"
               ",xi_sum_mean,xi_sum_sd,abs_k_err_mean,abs_k_err_sd"
               ",rand_mean,rand_sd,runtime_ms_mean\n";
  for (std::size_t mi = 0; mi < methods.size(); ++mi) {
    std::vector<double> a, b, s, dk, rd;
    double rt = 0.0;
    int k_zero = 0;
    for (const RepOutcome& o : results[mi]) {
      if (o.has_xi) {
        a.push_back(o.xi_est_true);
        b.push_back(o.xi_true_est);
        s.push_back(o.xi_est_true + o.xi_true_est);
      } else {
        ++k_zero;
      }
      dk.push_back(o.abs_k_err);
      rd.push_back(o.rand);
      rt += o.runtime_ms;
    }
    std::cout << kSchemaVersion << "," << methods[mi] << "," << f.reps << "," << k_zero;
    std::ostringstream row;
    append_stats(row, a);
    append_stats(row, b);
    append_stats(row, s);
    append_stats(row, dk);
    append_stats(row, rd);
    std::cout << row.str() << "," << fmt(rt / f.reps) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonparametric maximum-likelihood change-point detection"};
  app.require_subcommand(1);

  DetectFlags detect_flags;
  CLI::App* detect_cmd = app.add_subcommand("detect", "detect change points in a data file");
  add_detect_flags(*detect_cmd, detect_flags, true);

  SimFlags sim_flags;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "generate a benchmark sequence");
  add_sim_flags(*sim_cmd, sim_flags);
  sim_cmd->add_option("--prefix", sim_flags.prefix, "output path prefix");

  BenchFlags bench_flags;
  CLI::App* bench_cmd = app.add_subcommand("bench", "replicate detection quality benchmarks");
  add_sim_flags(*bench_cmd, bench_flags.sim);
  add_detect_flags(*bench_cmd, bench_flags.det, false);
  bench_cmd->add_option("--reps", bench_flags.reps, "replications")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--methods", bench_flags.methods, "comma-separated method list");

  try {
    app.parse(argc, argv);
    if (detect_cmd->parsed()) return cmd_detect(detect_flags);
    if (sim_cmd->parsed()) return cmd_simulate(sim_flags);
    return cmd_bench(bench_flags);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
