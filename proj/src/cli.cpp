#include "pauli_simplex/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "pauli_simplex/choi.hpp"
#include "pauli_simplex/divisibility.hpp"
#include "pauli_simplex/generator.hpp"
#include "pauli_simplex/geometry.hpp"
#include "pauli_simplex/version.hpp"

namespace pauli_simplex::cli {

using nlohmann::ordered_json;

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string region_token(const std::optional<Axis>& region) {
  return region ? std::string(to_string(*region)) : std::string("none");
}

ordered_json gamma_json(const GammaLimit& g) {
  return {{"gamma_x", number(g.gx)}, {"gamma_y", number(g.gy)}, {"gamma_z", number(g.gz)}};
}

void dump_value(const ordered_json& j, std::ostream& os, int indent) {
  const std::string pad(std::size_t(indent) * 2, ' ');
  const std::string inner(std::size_t(indent + 1) * 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << inner << ordered_json(it.key()).dump() << ": ";
      dump_value(it.value(), os, indent + 1);
    }
    os << "\n" << pad << "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
      return;
    }
    os << "[";
    bool first = true;
    for (const auto& v : j) {
      if (!first) os << ", ";
      first = false;
      dump_value(v, os, indent + 1);
    }
    os << "]";
  } else if (j.is_number_float()) {
    os << format_number(j.get<double>(), 17);
  } else {
    os << j.dump();
  }
}

std::string text_value(const ordered_json& j) {
  if (j.is_number_float()) return format_number(j.get<double>(), 9);
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s;
    for (const auto& v : j) {
      if (!s.empty()) s += " ";
      s += text_value(v);
    }
    return s;
  }
  return j.dump();
}

void dump_text_object(const ordered_json& j, const std::string& prefix, std::ostream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it.value().is_object()) {
      dump_text_object(it.value(), key, os);
    } else {
      os << key << ": " << text_value(it.value()) << "\n";
    }
  }
}

void emit(const OutputRecord& rec, bool json, std::ostream& out) {
  if (json) {
    out << dump_json(rec.to_json());
  } else {
    out << dump_text(rec);
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::out | std::ios::trunc | std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  return f;
}

void finish_output(std::ostream& os, const std::string& path) {
  os.flush();
  if (!os) throw IoError("failed writing '" + path + "'");
}

// Writes to stdout for "-", else to the named file.
template <class Writer>
void write_csv(const std::string& path, std::ostream& out, Writer&& writer) {
  if (path == "-") {
    writer(out);
    finish_output(out, "<stdout>");
    return;
  }
  std::ofstream f = open_output(path);
  writer(f);
  finish_output(f, path);
}

struct WeightArgs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

void add_weight_options(CLI::App* cmd, WeightArgs& w) {
  cmd->add_option("--a", w.a, "weight of E_x")->required();
  cmd->add_option("--b", w.b, "weight of E_y")->required();
  cmd->add_option("--c", w.c, "weight of E_z")->required();
}

ordered_json weights_json(const MixtureWeights& w) {
  return {{"a", number(w.a())}, {"b", number(w.b())}, {"c", number(w.c())}};
}

// ---------------------------------------------------------------------------

struct RatesArgs {
  WeightArgs w;
  double p = 0.0;
  std::optional<double> r;
  std::string convention = "reduced";
  bool json = false;
};

OutputRecord cmd_rates(const RatesArgs& args) {
  const MixtureWeights w(args.w.a, args.w.b, args.w.c);
  const bool physical = args.convention == "physical";
  if (physical && !args.r) throw std::invalid_argument("--convention physical requires --r");
  const DecayRates g =
      three_mix_rates(w, args.p, physical ? RateConvention::Physical : RateConvention::Reduced, args.r);

  OutputRecord rec;
  rec.command = "rates";
  rec.inputs = weights_json(w);
  rec.inputs["p"] = number(args.p);
  rec.inputs["r"] = args.r ? number(*args.r) : ordered_json(nullptr);
  rec.inputs["convention"] = args.convention;
  rec.results["gamma_x"] = number(g.gx);
  rec.results["gamma_y"] = number(g.gy);
  rec.results["gamma_z"] = number(g.gz);
  rec.results["negative_rates"] = g.negative_count(kNegativeTol);

  // finite-difference cross-check in the requested convention
  const double r = args.r.value_or(1.0);
  std::array<double, 3> delta{NAN, NAN, NAN};
  try {
    const DecayRates fd = rates_fd_oracle(w, args.p, r);
    const double scale = physical ? 1.0 : 1.0 / physical_prefactor(r, args.p);
    delta = {g.gx - scale * fd.gx, g.gy - scale * fd.gy, g.gz - scale * fd.gz};
  } catch (const std::invalid_argument&) {
    // step does not fit below p = 1/2
  }
  rec.results["fd_delta"] = {{"gamma_x", number(delta[0])}, {"gamma_y", number(delta[1])},
                             {"gamma_z", number(delta[2])}};
  return rec;
}

struct ClassifyArgs {
  WeightArgs w;
  bool json = false;
};

OutputRecord cmd_classify(const ClassifyArgs& args) {
  const MixtureWeights w(args.w.a, args.w.b, args.w.c);
  const RegionLabel label = classify(w);
  OutputRecord rec;
  rec.command = "classify";
  rec.inputs = weights_json(w);
  rec.results["label"] = std::string(to_string(label.tag));
  rec.results["region"] = region_token(label.region);
  rec.results["gamma_limit"] = gamma_json(label.gamma_limit);
  return rec;
}

struct ScanArgs {
  int n = 0;
  std::string out = "-";
  unsigned threads = 1;
  bool json = false;
};

void write_scan_csv(std::ostream& os, const std::vector<GridPoint>& grid) {
  os << "a,b,c,u,v,label,region,gamma_x,gamma_y,gamma_z\n";
  for (const GridPoint& g : grid) {
    os << format_number(g.w.a()) << ',' << format_number(g.w.b()) << ',' << format_number(g.w.c()) << ','
       << format_number(g.uv.u) << ',' << format_number(g.uv.v) << ',' << to_string(g.label.tag) << ','
       << region_token(g.label.region) << ',' << format_number(g.label.gamma_limit.gx) << ','
       << format_number(g.label.gamma_limit.gy) << ',' << format_number(g.label.gamma_limit.gz) << '\n';
  }
}

OutputRecord cmd_scan(const ScanArgs& args, std::ostream& out) {
  const std::vector<GridPoint> grid = scan_grid(args.n, args.threads);
  write_csv(args.out, out, [&](std::ostream& os) { write_scan_csv(os, grid); });
  const ScanSummary s = summarize(grid);
  OutputRecord rec;
  rec.command = "scan";
  rec.inputs["n"] = args.n;
  rec.inputs["out"] = args.out;
  rec.results["points"] = s.points;
  rec.results["markovian"] = s.markovian;
  rec.results["region_x"] = s.region[0];
  rec.results["region_y"] = s.region[1];
  rec.results["region_z"] = s.region[2];
  rec.results["markovian_fraction"] = number(s.markovian_fraction());
  return rec;
}

struct MeasureArgs {
  std::string method = "quad";
  double tol = 1e-10;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 42;
  unsigned threads = 1;
  bool json = false;
};

OutputRecord cmd_measure(const MeasureArgs& args) {
  const bool mc = args.method == "mc";
  const MeasureReport rep =
      mc ? region_measure_montecarlo(args.samples, args.seed, args.threads) : total_measures(args.tol);
  OutputRecord rec;
  rec.command = "measure";
  rec.inputs["method"] = args.method;
  if (mc) {
    rec.inputs["samples"] = args.samples;
    rec.inputs["seed"] = args.seed;
    rec.seed = args.seed;
  } else {
    rec.inputs["tol"] = number(args.tol);
  }
  rec.results["region_x"] = number(rep.region[0]);
  rec.results["region_y"] = number(rep.region[1]);
  rec.results["region_z"] = number(rep.region[2]);
  rec.results["region_error"] = {number(rep.region_error[0]), number(rep.region_error[1]),
                                 number(rep.region_error[2])};
  rec.results["total_nonmarkovian"] = number(rep.total);
  rec.results["markovian"] = number(rep.markovian);
  rec.results["error_estimate"] = number(rep.error_estimate);
  return rec;
}

struct BoundaryArgs {
  std::string region = "Y";
  int points = 200;
  std::string out = "-";
  bool json = false;
};

Axis parse_axis(const std::string& s) {
  if (s == "X" || s == "x") return Axis::X;
  if (s == "Y" || s == "y") return Axis::Y;
  if (s == "Z" || s == "z") return Axis::Z;
  throw std::invalid_argument("region must be X, Y or Z");
}

OutputRecord cmd_boundary(const BoundaryArgs& args, std::ostream& out) {
  const Axis region = parse_axis(args.region);
  const BoundaryCurve curve = boundary_curve(region, args.points);
  double worst = 0.0;
  write_csv(args.out, out, [&](std::ostream& os) {
    os << "region,branch,own,partner,a,b,c,u,v,gamma\n";
    for (const BoundarySample& s : curve.samples) {
      const PlanarPoint uv = to_pauli_neutral(s.w);
      const double g = gamma_limit(s.w)[region];
      worst = std::max(worst, std::abs(g));
      os << to_string(region) << ',' << (s.branch == Branch::Minus ? "minus" : "plus") << ','
         << format_number(s.own) << ',' << format_number(s.partner) << ',' << format_number(s.w.a()) << ','
         << format_number(s.w.b()) << ',' << format_number(s.w.c()) << ',' << format_number(uv.u) << ','
         << format_number(uv.v) << ',' << format_number(g) << '\n';
    }
  });
  OutputRecord rec;
  rec.command = "boundary";
  rec.inputs["region"] = std::string(to_string(region));
  rec.inputs["points"] = args.points;
  rec.inputs["out"] = args.out;
  rec.results["samples"] = curve.samples.size();
  rec.results["beta0"] = number(beta(0.0));
  rec.results["max_abs_gamma"] = number(worst);
  return rec;
}

struct ChoiArgs {
  double a = 0.0;
  double q = 0.0;
  double p = 0.0;
  bool oracle = false;
  bool json = false;
};

OutputRecord cmd_choi(const ChoiArgs& args) {
  const WitnessReport rep = rhp_witness(args.a, args.q, args.p);
  OutputRecord rec;
  rec.command = "choi";
  rec.inputs["a"] = number(args.a);
  rec.inputs["q"] = number(args.q);
  rec.inputs["p"] = number(args.p);
  rec.results["x1"] = number(rep.ratios.x1);
  rec.results["x2"] = number(rep.ratios.x2);
  rec.results["x3"] = number(rep.ratios.x3);
  rec.results["eigenvalues"] = {number(rep.spectrum[0]), number(rep.spectrum[1]), number(rep.spectrum[2]),
                                number(rep.spectrum[3])};
  rec.results["min_eigenvalue"] = number(rep.min_eigenvalue);
  rec.results["cp"] = rep.verdict == Verdict::Markovian;
  rec.results["verdict"] = std::string(to_string(rep.verdict));
  if (args.oracle) {
    const ChoiMatrix oracle = a_matrix_oracle(args.a, args.q, args.p);
    const double dev = (oracle.matrix() - choi_matrix(rep.ratios).matrix()).cwiseAbs().maxCoeff();
    rec.results["oracle_max_deviation"] = number(dev);
  }
  return rec;
}

}  // namespace

// ---------------------------------------------------------------------------

ordered_json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

std::string format_number(double v, int digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

ordered_json OutputRecord::to_json() const {
  ordered_json j;
  j["command"] = command;
  j["argv"] = argv;
  j["inputs"] = inputs;
  j["results"] = results;
  j["version"] = kVersion;
  j["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
  return j;
}

std::string dump_json(const ordered_json& j) {
  std::ostringstream os;
  dump_value(j, os, 0);
  os << "\n";
  return os.str();
}

std::string dump_text(const OutputRecord& record) {
  std::ostringstream os;
  os << "command: " << record.command << "\n";
  dump_text_object(record.inputs, "input", os);
  dump_text_object(record.results, "", os);
  if (record.seed) os << "seed: " << *record.seed << "\n";
  os << "version: " << kVersion << "\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("pauli-simplex");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(int(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Markovianity analysis of convex mixtures of Pauli semigroups", "pauli-simplex"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  RatesArgs rates;
  auto* rates_cmd = app.add_subcommand("rates", "decay rates gamma_X, gamma_Y, gamma_Z at p");
  add_weight_options(rates_cmd, rates.w);
  rates_cmd->add_option("--p", rates.p, "decoherence parameter in [0, 1/2)")->required();
  rates_cmd->add_option("--r", rates.r, "decay constant (needed for physical rates)");
  rates_cmd->add_option("--convention", rates.convention, "reduced or physical")
      ->check(CLI::IsMember({"reduced", "physical"}));
  rates_cmd->add_flag("--json", rates.json, "emit JSON");

  ClassifyArgs cls;
  auto* classify_cmd = app.add_subcommand("classify", "CP-divisibility label of a simplex point");
  add_weight_options(classify_cmd, cls.w);
  classify_cmd->add_flag("--json", cls.json, "emit JSON");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "classify the lattice of denominator n, write CSV");
  scan_cmd->add_option("--n", scan.n, "lattice resolution")->required()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--out", scan.out, "CSV path, '-' for stdout");
  scan_cmd->add_option("--threads", scan.threads, "worker threads (0 = all cores)");
  scan_cmd->add_flag("--json", scan.json, "emit the summary as JSON");

  MeasureArgs measure;
  auto* measure_cmd = app.add_subcommand("measure", "measure of the non-Markovian regions");
  measure_cmd->add_option("--method", measure.method, "quad or mc")->check(CLI::IsMember({"quad", "mc"}));
  measure_cmd->add_option("--tol", measure.tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  measure_cmd->add_option("--samples", measure.samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
  measure_cmd->add_option("--seed", measure.seed, "Monte Carlo seed");
  measure_cmd->add_option("--threads", measure.threads, "worker threads (0 = all cores)");
  measure_cmd->add_flag("--json", measure.json, "emit JSON");

  BoundaryArgs boundary;
  auto* boundary_cmd = app.add_subcommand("boundary", "samples of the curve Gamma_region = 0, write CSV");
  boundary_cmd->add_option("--region", boundary.region, "X, Y or Z")->required();
  boundary_cmd->add_option("--points", boundary.points, "samples per branch (>= 2)")->check(CLI::Range(2, 100000000));
  boundary_cmd->add_option("--out", boundary.out, "CSV path, '-' for stdout");
  boundary_cmd->add_flag("--json", boundary.json, "emit the summary as JSON");

  ChoiArgs choi;
  auto* choi_cmd = app.add_subcommand("choi", "Choi matrix of the intermediate map V(q, p)");
  choi_cmd->add_option("--a", choi.a, "weight of E_z in a E_z + (1-a) E_y")->required();
  choi_cmd->add_option("--q", choi.q, "later decoherence parameter")->required();
  choi_cmd->add_option("--p", choi.p, "earlier decoherence parameter")->required();
  choi_cmd->add_flag("--oracle", choi.oracle, "cross-check against the A-matrix construction");
  choi_cmd->add_flag("--json", choi.json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help / --version
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::vector<std::string> echo(argv + 1, argv + argc);
  try {
    OutputRecord rec;
    bool json = false;
    if (rates_cmd->parsed()) {
      rec = cmd_rates(rates);
      json = rates.json;
    } else if (classify_cmd->parsed()) {
      rec = cmd_classify(cls);
      json = cls.json;
    } else if (scan_cmd->parsed()) {
      // CSV on stdout leaves no room for the summary
      rec = cmd_scan(scan, out);
      json = scan.json;
      if (scan.out == "-") return kExitOk;
    } else if (measure_cmd->parsed()) {
      rec = cmd_measure(measure);
      json = measure.json;
    } else if (boundary_cmd->parsed()) {
      rec = cmd_boundary(boundary, out);
      json = boundary.json;
      if (boundary.out == "-") return kExitOk;
    } else if (choi_cmd->parsed()) {
      rec = cmd_choi(choi);
      json = choi.json;
    }
    rec.argv = echo;
    emit(rec, json, out);
    out.flush();
    if (!out) throw IoError("failed writing output");
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << " (achieved error " << format_number(e.achieved_error(), 9) << ")\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace pauli_simplex::cli
