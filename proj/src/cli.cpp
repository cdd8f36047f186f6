#include <CLI11.hpp>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "coopdecay/analysis.hpp"
#include "coopdecay/cli_io.hpp"
#include "coopdecay/eigenmodes.hpp"
#include "coopdecay/pairwise.hpp"
#include "coopdecay/parallel.hpp"
#include "coopdecay/spectrum.hpp"

namespace coopdecay {
namespace {

using json = nlohmann::ordered_json;

/// Bad flag values detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void write_manifest(const std::filesystem::path& path, const std::string& command, const json& parameters,
                    const std::vector<std::string>& outputs) {
  json manifest;
  manifest["command"] = command;
  manifest["parameters"] = parameters;
  manifest["version"] = std::string(kVersion);
  manifest["timestamp"] = utc_timestamp();
  manifest["outputs"] = outputs;
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write manifest " + path.string());
  os << manifest.dump(2) << '\n';
}

/// Writes a table to `out_path` (with a sibling manifest) or to stdout.
void emit_table(const CsvTable& table, const std::string& out_path, const std::string& command,
                const json& parameters, std::ostream& out) {
  if (out_path.empty()) {
    write_csv(out, table);
    return;
  }
  {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + out_path);
    write_csv(os, table);
  }
  write_manifest(out_path + ".manifest.json", command, parameters, {out_path});
}

double angle_flag(const std::string& text, const char* flag) {
  try {
    return parse_angle(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--") + flag + ": " + e.what());
  }
}

LightModel model_flag(const std::string& model, double delta) {
  if (model == "scalar") return ScalarModel{};
  if (model == "vector" || model == "vectorial") return vectorial(delta);
  throw UsageError("--model must be scalar or vector");
}

std::vector<SpectrumMethod> methods_flag(const std::vector<std::string>& names) {
  std::vector<SpectrumMethod> methods;
  for (const auto& n : names) {
    try {
      methods.push_back(parse_method(n));
    } catch (const DomainError& e) {
      throw UsageError(std::string("--method: ") + e.what());
    }
  }
  return methods;
}

std::string short_method(SpectrumMethod m) {
  switch (m) {
    case SpectrumMethod::DirectSum: return "direct";
    case SpectrumMethod::Quadrature: return "quad";
    case SpectrumMethod::SincApprox: return "sinc";
    case SpectrumMethod::LorentzianClosedForm: return "lorentz";
    case SpectrumMethod::InfiniteChain: return "infinite";
    case SpectrumMethod::Asymptote: return "asymptote";
  }
  return "unknown";
}

std::string column_name(SpectrumMethod method, const LightModel& model) {
  std::string name = "gamma_" + short_method(method);
  if (const auto* v = std::get_if<VectorialModel>(&model)) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "_vector_delta%.6g", v->delta);
    return name + buf;
  }
  return name + "_scalar";
}

ChainConfig config_flag(int n, double a, double gamma) {
  try {
    return ChainConfig(n, a, gamma);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

/// Converts a JSON config object into flag tokens, skipping flags the user
/// already passed so that explicit flags win.
std::vector<std::string> config_tokens(const std::string& path, const std::vector<std::string>& user_args) {
  std::ifstream is(path);
  if (!is) throw UsageError("cannot read config file " + path);
  json cfg;
  try {
    cfg = json::parse(is);
  } catch (const json::exception& e) {
    throw UsageError(std::string("config file is not valid JSON: ") + e.what());
  }
  if (cfg.contains("parameters")) cfg = cfg["parameters"];
  if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");

  std::vector<std::string> tokens;
  for (const auto& [key, value] : cfg.items()) {
    const std::string flag = "--" + key;
    if (key == "threads" || std::find(user_args.begin(), user_args.end(), flag) != user_args.end()) continue;
    const auto scalar_text = [](const json& v) -> std::string {
      if (v.is_string()) return v.get<std::string>();
      if (v.is_number_integer()) return std::to_string(v.get<long long>());
      if (v.is_number()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        return buf;
      }
      throw UsageError("unsupported config value");
    };
    if (value.is_boolean()) {
      if (value.get<bool>()) tokens.push_back(flag);
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& v : value) joined += (joined.empty() ? "" : ",") + scalar_text(v);
      tokens.push_back(flag);
      tokens.push_back(joined);
    } else {
      tokens.push_back(flag);
      tokens.push_back(scalar_text(value));
    }
  }
  return tokens;
}

struct CommonFlags {
  int threads = 0;
  std::string config;
};

// ---- subcommands ------------------------------------------------------------

struct PairwiseFlags {
  std::string xmax = "pi";
  int points = 101;
  std::string delta = "pi/2";
  std::string out;
};

int cmd_pairwise(const PairwiseFlags& f, std::ostream& out) {
  const double xmax = angle_flag(f.xmax, "xmax");
  if (!(xmax > 0.0)) throw UsageError("--xmax must be > 0");
  if (f.points < 1) throw UsageError("--points must be >= 1");
  const double delta = fold_dipole_angle(angle_flag(f.delta, "delta"));
  char vec_name[48];
  std::snprintf(vec_name, sizeof vec_name, "vector_decay_delta%.6g", delta);
  CsvTable t{{"x", "scalar_decay", "scalar_shift", vec_name}, {}};
  for (int i = 0; i < f.points; ++i) {
    const double x = f.points == 1 ? xmax : xmax * i / (f.points - 1);
    const double shift = x > 0.0 ? scalar_shift(x) : std::numeric_limits<double>::quiet_NaN();
    t.rows.push_back({x, scalar_decay(x), shift, vector_decay(x, delta)});
  }
  json p{{"xmax", f.xmax}, {"points", f.points}, {"delta", f.delta}};
  emit_table(t, f.out, "pairwise", p, out);
  return 0;
}

struct SpectrumFlags {
  int n_atoms = 10;
  std::string k0d = "pi/2";
  std::string model = "scalar";
  std::string delta = "pi/2";
  std::vector<std::string> methods{"direct"};
  int grid = 256;
  double gamma = 1.0;
  std::string out;
};

int cmd_spectrum(const SpectrumFlags& f, int threads, std::ostream& out) {
  if (f.grid < 1) throw UsageError("--grid must be >= 1");
  const auto config = config_flag(f.n_atoms, angle_flag(f.k0d, "k0d"), f.gamma);
  const auto model = model_flag(f.model, angle_flag(f.delta, "delta"));
  const auto methods = methods_flag(f.methods);
  const auto grid = uniform_k_grid(static_cast<std::size_t>(f.grid));
  CsvTable t{{"kd"}, {}};
  for (double kd : grid) t.rows.push_back({kd});
  for (auto m : methods) {
    t.header.push_back(column_name(m, model));
    const auto r = scan_spectrum(config, model, m, grid, threads);
    for (std::size_t i = 0; i < grid.size(); ++i) t.rows[i].push_back(r.points[i].gamma_k);
  }
  json p{{"N", f.n_atoms}, {"k0d", f.k0d},  {"model", f.model}, {"delta", f.delta},
         {"method", f.methods}, {"grid", f.grid}, {"gamma", f.gamma}};
  emit_table(t, f.out, "spectrum", p, out);
  return 0;
}

struct LatticeFlags {
  int n_atoms = 10;
  std::string kd = "0";
  std::string model = "scalar";
  std::string delta = "pi/2";
  std::vector<std::string> methods{"quad"};
  std::string amin = "0.001";
  std::string amax = "4pi";
  int points = 400;
  double gamma = 1.0;
  std::string out;
};

int cmd_lattice(const LatticeFlags& f, int threads, std::ostream& out) {
  if (f.points < 2) throw UsageError("--points must be >= 2");
  const double amin = angle_flag(f.amin, "amin");
  const double amax = angle_flag(f.amax, "amax");
  if (!(amin > 0.0 && amax > amin)) throw UsageError("need 0 < --amin < --amax");
  const auto templ = config_flag(f.n_atoms, amin, f.gamma);
  const double kd = angle_flag(f.kd, "kd");
  const auto model = model_flag(f.model, angle_flag(f.delta, "delta"));
  const auto methods = methods_flag(f.methods);
  std::vector<double> grid(static_cast<std::size_t>(f.points));
  for (int i = 0; i < f.points; ++i) grid[static_cast<std::size_t>(i)] = amin + (amax - amin) * i / (f.points - 1);
  CsvTable t{{"k0d"}, {}};
  for (double a : grid) t.rows.push_back({a});
  for (auto m : methods) {
    t.header.push_back(column_name(m, model));
    const auto s = scan_vs_lattice(templ, model, m, kd, grid, threads);
    for (std::size_t i = 0; i < grid.size(); ++i) t.rows[i].push_back(s.points[i].gamma_k);
  }
  json p{{"N", f.n_atoms},   {"kd", f.kd},     {"model", f.model},   {"delta", f.delta}, {"method", f.methods},
         {"amin", f.amin},   {"amax", f.amax}, {"points", f.points}, {"gamma", f.gamma}};
  emit_table(t, f.out, "lattice", p, out);
  return 0;
}

struct EigenFlags {
  int n_atoms = 10;
  std::string k0d = "pi/2";
  std::string model = "scalar";
  std::string delta = "pi/2";
  double gamma = 1.0;
  std::string out;
};

int cmd_eigen(const EigenFlags& f, int threads, std::ostream& out) {
  const auto config = config_flag(f.n_atoms, angle_flag(f.k0d, "k0d"), f.gamma);
  const auto model = model_flag(f.model, angle_flag(f.delta, "delta"));
  const auto cmp = compare_eigen_vs_gamma_k(config, model, SpectrumMethod::DirectSum, threads);
  CsvTable t{{"i", "kd_i", "lambda_i", "gamma_direct"}, {}};
  for (const auto& r : cmp.rows) t.rows.push_back({static_cast<double>(r.index), r.kd, r.eigenvalue, r.gamma_k});
  json p{{"N", f.n_atoms}, {"k0d", f.k0d}, {"model", f.model}, {"delta", f.delta}, {"gamma", f.gamma}};
  emit_table(t, f.out, "eigen", p, out);
  return 0;
}

struct FitFlags {
  std::string kd = "pi";
  std::string k0d = "pi/2";
  std::vector<std::string> deltas{"scalar"};
  std::vector<int> atoms{100, 200, 400, 800};
  std::string method = "quad";
  std::string input;
  std::string out;
};

json fit_to_json(const std::string& label, const FitResult& fit, const std::vector<ScalingSample>& samples) {
  json j;
  j["model"] = label;
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["r_squared"] = fit.r_squared;
  j["n_points"] = fit.n_points;
  json pts = json::array();
  for (const auto& s : samples) pts.push_back({s.n_atoms, s.rate});
  j["samples"] = pts;
  return j;
}

FitResult checked_fit(const std::vector<ScalingSample>& samples) {
  try {
    return fit_power_law(samples);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

int cmd_fit(const FitFlags& f, int threads, std::ostream& out) {
  json result;
  result["fits"] = json::array();
  if (!f.input.empty()) {
    std::ifstream is(f.input);
    if (!is) throw UsageError("cannot read --input " + f.input);
    const auto table = read_csv(is);
    if (table.header.size() < 2) throw UsageError("--input needs columns N,rate");
    std::vector<ScalingSample> samples;
    for (const auto& row : table.rows) samples.push_back({row[0], row[1]});
    result["fits"].push_back(fit_to_json("input", checked_fit(samples), samples));
  } else {
    const double kd = angle_flag(f.kd, "kd");
    const double a = angle_flag(f.k0d, "k0d");
    const auto method = methods_flag({f.method}).front();
    for (const auto& d : f.deltas) {
      const LightModel model = d == "scalar" ? LightModel{ScalarModel{}} : LightModel{vectorial(angle_flag(d, "delta-list"))};
      std::vector<ScalingSample> samples(f.atoms.size());
      for (std::size_t i = 0; i < f.atoms.size(); ++i) {
        if (f.atoms[i] < 1) throw UsageError("--N-list entries must be >= 1");
        samples[i].n_atoms = f.atoms[i];
      }
      parallel_for(samples.size(), threads, [&](std::size_t i) {
        samples[i].rate = evaluate_gamma_k(ChainConfig(f.atoms[i], a), model, method, kd);
      });
      result["fits"].push_back(fit_to_json(d == "scalar" ? "scalar" : model_name(model), checked_fit(samples), samples));
    }
  }
  const std::string text = result.dump(2) + "\n";
  json p{{"kd", f.kd}, {"k0d", f.k0d}, {"delta-list", f.deltas}, {"N-list", f.atoms}, {"method", f.method}};
  if (!f.input.empty()) p["input"] = f.input;
  if (f.out.empty()) {
    out << text;
  } else {
    std::ofstream os(f.out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + f.out);
    os << text;
    write_manifest(f.out + ".manifest.json", "fit", p, {f.out});
  }
  return 0;
}

struct FigureFlags {
  int figure = 1;
  std::string out_dir = "figures";
};

int cmd_figure(const FigureFlags& f, int threads, std::ostream& out) {
  if (f.figure < 1 || f.figure > 7) throw UsageError("figure number must be in 1..7");
  const std::filesystem::path dir(f.out_dir);
  std::filesystem::create_directories(dir);
  const auto tables = figure_datasets(f.figure, threads);
  std::vector<std::string> outputs;
  for (const auto& nt : tables) {
    const auto path = dir / nt.filename;
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + path.string());
    write_csv(os, nt.table);
    outputs.push_back(path.string());
  }
  if (f.figure == 7) {
    // Large-N power-law fits of the subradiant rate, one per dipole angle.
    const auto& t = tables.front().table;
    json fits = json::array();
    for (std::size_t col = 1; col < t.header.size(); ++col) {
      std::vector<ScalingSample> samples;
      for (const auto& row : t.rows)
        if (row[0] >= 100) samples.push_back({row[0], row[col]});
      fits.push_back(fit_to_json(t.header[col], fit_power_law(samples), samples));
    }
    const auto path = dir / "fig7_fit.json";
    std::ofstream os(path, std::ios::binary);
    os << json{{"fits", fits}}.dump(2) << '\n';
    outputs.push_back(path.string());
  }
  write_manifest(dir / ("fig" + std::to_string(f.figure) + "_manifest.json"), "figure",
                 json{{"n", f.figure}, {"out-dir", f.out_dir}}, outputs);
  for (const auto& o : outputs) out << o << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cooperative decay spectra of a 1D emitter chain with a single excitation", "coopdecay"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  CommonFlags common;
  app.add_option("--threads", common.threads, "Worker threads for grid evaluation (default: COOPDECAY_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--config", common.config, "JSON file with flag values; explicit flags override it");

  PairwiseFlags pw;
  auto* pairwise = app.add_subcommand("pairwise", "Pairwise decay and shift kernels over a distance grid");
  pairwise->add_option("--xmax", pw.xmax, "Largest k0 r");
  pairwise->add_option("--points", pw.points, "Number of grid points");
  pairwise->add_option("--delta", pw.delta, "Dipole angle (radians, 'pi/2', 'magic')");
  pairwise->add_option("--out", pw.out, "Output CSV (default stdout)");

  SpectrumFlags sp;
  auto* spectrum = app.add_subcommand("spectrum", "Gamma_k over a uniform kd grid");
  spectrum->add_option("--N", sp.n_atoms, "Number of atoms");
  spectrum->add_option("--k0d", sp.k0d, "Lattice constant k0 d");
  spectrum->add_option("--model", sp.model, "scalar or vector");
  spectrum->add_option("--delta", sp.delta, "Dipole angle for the vector model");
  spectrum->add_option("--method", sp.methods, "direct|quad|sinc|lorentz|infinite|asymptote (repeatable)")
      ->delimiter(',');
  spectrum->add_option("--grid", sp.grid, "Number of kd points K");
  spectrum->add_option("--gamma", sp.gamma, "Single-atom decay rate");
  spectrum->add_option("--out", sp.out, "Output CSV (default stdout)");

  LatticeFlags lt;
  auto* lattice = app.add_subcommand("lattice", "Gamma_k at fixed kd versus k0 d");
  lattice->add_option("--N", lt.n_atoms, "Number of atoms");
  lattice->add_option("--kd", lt.kd, "Fixed kd");
  lattice->add_option("--model", lt.model, "scalar or vector");
  lattice->add_option("--delta", lt.delta, "Dipole angle for the vector model");
  lattice->add_option("--method", lt.methods, "Computation path (repeatable)")->delimiter(',');
  lattice->add_option("--amin", lt.amin, "Smallest k0 d");
  lattice->add_option("--amax", lt.amax, "Largest k0 d");
  lattice->add_option("--points", lt.points, "Number of k0 d points");
  lattice->add_option("--gamma", lt.gamma, "Single-atom decay rate");
  lattice->add_option("--out", lt.out, "Output CSV (default stdout)");

  EigenFlags eg;
  auto* eigen = app.add_subcommand("eigen", "Ordered eigenvalues of the decay matrix next to Gamma_k");
  eigen->add_option("--N", eg.n_atoms, "Number of atoms");
  eigen->add_option("--k0d", eg.k0d, "Lattice constant k0 d");
  eigen->add_option("--model", eg.model, "scalar or vector");
  eigen->add_option("--delta", eg.delta, "Dipole angle for the vector model");
  eigen->add_option("--gamma", eg.gamma, "Single-atom decay rate");
  eigen->add_option("--out", eg.out, "Output CSV (default stdout)");

  FitFlags ft;
  auto* fit = app.add_subcommand("fit", "Power-law fit of Gamma_k versus N");
  fit->add_option("--kd", ft.kd, "Fixed kd");
  fit->add_option("--k0d", ft.k0d, "Lattice constant k0 d");
  fit->add_option("--delta-list", ft.deltas, "Dipole angles, or 'scalar'")->delimiter(',');
  fit->add_option("--N-list", ft.atoms, "Atom numbers")->delimiter(',');
  fit->add_option("--method", ft.method, "Computation path");
  fit->add_option("--input", ft.input, "CSV with columns N,rate to fit instead of computing");
  fit->add_option("--out", ft.out, "Output JSON (default stdout)");

  FigureFlags fg;
  auto* figure = app.add_subcommand("figure", "Emit the datasets of one figure");
  figure->add_option("n,--n", fg.figure, "Figure number 1..7")->required();
  figure->add_option("--out-dir", fg.out_dir, "Output directory");

  std::vector<std::string> args = args_in;
  try {
    // Splice config-file values in right after the subcommand name.
    const auto cfg = std::find(args.begin(), args.end(), "--config");
    if (cfg != args.end() && std::next(cfg) != args.end()) {
      const auto tokens = config_tokens(*std::next(cfg), args);
      const auto sub = std::find_if(args.begin(), args.end(), [&](const std::string& a) {
        return a == "pairwise" || a == "spectrum" || a == "lattice" || a == "eigen" || a == "fit" || a == "figure";
      });
      args.insert(sub == args.end() ? args.end() : std::next(sub), tokens.begin(), tokens.end());
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  const int threads = common.threads > 0 ? common.threads : default_thread_count();
  try {
    if (*pairwise) return cmd_pairwise(pw, out);
    if (*spectrum) return cmd_spectrum(sp, threads, out);
    if (*lattice) return cmd_lattice(lt, threads, out);
    if (*eigen) return cmd_eigen(eg, threads, out);
    if (*fit) return cmd_fit(ft, threads, out);
    if (*figure) return cmd_figure(fg, threads, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace coopdecay
