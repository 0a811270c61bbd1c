// Command-line front end: subcommand dispatch, CSV/JSON emission with a
// provenance header (tool version, config hash, seed) on every file,
// and the `verify` suite runner. Identical configuration and seed must
// produce byte-identical outputs; nothing time- or locale-dependent is
// ever written.
//
// Exit codes: 0 success, 1 verification failure, 2 bad configuration.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tpq/algebra.hpp"
#include "tpq/bargmann.hpp"
#include "tpq/cone.hpp"
#include "tpq/emit.hpp"
#include "tpq/evolution.hpp"
#include "tpq/radial_table.hpp"
#include "tpq/spectrum.hpp"
#include "tpq/verify.hpp"
#include "tpq/version.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOpts {
  std::string output_dir = ".";
  std::uint64_t seed = 0;
  double m = 1.0;
  double c = 1.0;
  double hbar = 1.0;
  std::string orientation = "future";

  tpq::cone::ConeConfig cone_config() const {
    tpq::cone::ConeConfig cfg;
    cfg.m = m;
    cfg.c = c;
    cfg.hbar = hbar;
    if (orientation == "future") {
      cfg.orientation = tpq::cone::Orientation::Future;
    } else if (orientation == "past") {
      cfg.orientation = tpq::cone::Orientation::Past;
    } else {
      throw std::invalid_argument("orientation must be 'future' or 'past'");
    }
    return cfg;
  }

  ordered_json base_json(const std::string& command) const {
    return ordered_json{{"command", command},
                        {"version", TPQ_VERSION},
                        {"units", {{"m", m}, {"c", c}, {"hbar", hbar}}},
                        {"orientation", orientation},
                        {"seed", seed}};
  }
};

std::vector<double> parse_range(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("range must be min:max:step, got '" + text + "'");
  const double lo = std::stod(text.substr(0, c1));
  const double hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  const double step = std::stod(text.substr(c2 + 1));
  if (!(step > 0.0) || hi < lo)
    throw std::invalid_argument("range needs step > 0 and max >= min, got '" + text + "'");
  std::vector<double> out;
  const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (int i = 0; i < count; ++i) out.push_back(lo + step * i);
  return out;
}

void write_file(const std::filesystem::path& dir, const std::string& name,
                const std::string& content) {
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << content;
  if (!f) throw std::runtime_error("write failed for " + path.string());
  std::cout << "wrote " << path.string() << "\n";
}

std::string header_for(const ordered_json& cfg, std::uint64_t seed) {
  return tpq::emit::provenance(cfg.dump(), seed);
}

// ---------------------------------------------------------------- algebra

int run_algebra(const GlobalOpts& g, const std::vector<double>& ps) {
  using namespace tpq::algebra;
  ordered_json cfg = g.base_json("algebra");
  cfg["p"] = ps;
  std::string out = header_for(cfg, g.seed);
  out +=
      "p,pq00,pq01,pq10,pq11,pr00,pr01,pr10,pr11,sum00,sum01,sum10,sum11,"
      "spin_class,representation_dimension,reducible,commutator_norm,difference_squared\n";
  for (double pv : ps) {
    const SpinParameter p(pv);
    const Matrix2 q = rep_pq(p), r = rep_pr(), s = observable_sum(p);
    const SpinClass sc = classify_spin(p);
    using tpq::emit::g17;
    out += g17(pv);
    for (const auto& m : {q, r, s})
      for (const auto& row : m.a)
        for (double v : row) out += "," + g17(v);
    out += std::string(",") + to_string(sc.variant) + "," +
           std::to_string(sc.representation_dimension) + "," + (sc.reducible ? "1" : "0") + "," +
           g17(commutator_norm(p)) + "," + g17(difference_squared_value(p)) + "\n";
  }
  write_file(g.output_dir, "algebra.csv", out);
  return 0;
}

// --------------------------------------------------------------- toeplitz

int run_toeplitz(const GlobalOpts& g, int n, int cap, const std::string& symbol_name, int axis) {
  using namespace tpq::bargmann;
  const FockBasis basis = build_basis(n, cap);
  PolySymbol symbol = [&] {
    if (symbol_name == "one") return PolySymbol::one(n);
    if (symbol_name == "oscillator") return PolySymbol::harmonic_oscillator(n);
    if (symbol_name == "z") return PolySymbol::coordinate_z(n, axis);
    throw std::invalid_argument("symbol must be one of: one, oscillator, z");
  }();
  const auto tm = toeplitz_matrix(symbol, basis, QuadratureSpec::for_basis(cap, symbol.degree()));

  ordered_json cfg = g.base_json("toeplitz");
  cfg["n"] = n;
  cfg["cap"] = cap;
  cfg["symbol"] = symbol_name;
  cfg["axis"] = axis;
  std::string out = header_for(cfg, g.seed);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    out += "# basis[" + std::to_string(k) + "] = (";
    for (int j = 0; j < n; ++j)
      out += (j ? " " : "") + std::to_string(basis.indices[k].alpha[static_cast<std::size_t>(j)]);
    out += ")\n";
  }
  out += "row,col,re,im\n";
  for (Eigen::Index r = 0; r < tm.entries.rows(); ++r)
    for (Eigen::Index c = 0; c < tm.entries.cols(); ++c)
      out += std::to_string(r) + "," + std::to_string(c) + "," +
             tpq::emit::g17(tm.entries(r, c).real()) + "," +
             tpq::emit::g17(tm.entries(r, c).imag()) + "\n";
  write_file(g.output_dir, "toeplitz.csv", out);
  return 0;
}

// ------------------------------------------------------------ lambda / mu

int run_sweep(const GlobalOpts& g, const std::string& command, const std::string& s_range,
              const std::string& rho_range) {
  using namespace tpq::cone;
  const std::vector<double> ss = parse_range(s_range);
  const std::vector<double> rhos = parse_range(rho_range);
  for (double r : rhos)
    if (r < 0.0) throw std::invalid_argument("rho range must be nonnegative");
  const ConeConfig cfg = g.cone_config();
  const QuadParams qp{};

  ordered_json cj = g.base_json(command);
  cj["s"] = s_range;
  cj["rho"] = rho_range;
  std::string out = header_for(cj, g.seed);
  out += "s,rho,lambda,mu\n";
  for (double s : ss)
    for (double rho : rhos) {
      using tpq::emit::g17;
      out += g17(s) + "," + g17(rho) + "," + g17(lambda_reduced(s, rho, cfg, qp)) + "," +
             g17(mu_reduced(s, rho, cfg, qp)) + "\n";
    }
  write_file(g.output_dir, command + ".csv", out);
  return 0;
}

// ------------------------------------------------------------ asymptotics

int run_asymptotics(const GlobalOpts& g, const std::vector<double>& xi_vals,
                    const std::vector<double>& t_vals) {
  using namespace tpq::cone;
  if (xi_vals.size() != 4) throw std::invalid_argument("--xi needs exactly 4 components");
  const FourMomentum xi{{xi_vals[0], xi_vals[1], xi_vals[2], xi_vals[3]}};
  const auto rows = asymptotic_convergence(xi, t_vals, g.cone_config(), QuadParams{});

  ordered_json cj = g.base_json("asymptotics");
  cj["xi"] = xi_vals;
  cj["t"] = t_vals;
  std::string out = header_for(cj, g.seed);
  out += "t,scaled_lambda,leading,ratio\n";
  for (const auto& r : rows) {
    using tpq::emit::g17;
    out += g17(r.t) + "," + g17(r.scaled_lambda) + "," + g17(r.leading) + "," + g17(r.ratio) +
           "\n";
  }
  write_file(g.output_dir, "asymptotics.csv", out);
  return 0;
}

// --------------------------------------------------------------- spectrum

int run_spectrum(const GlobalOpts& g, int s_points, int rho_points, double rho_max,
                 const std::vector<int>& sections) {
  using namespace tpq::cone;
  using namespace tpq::spectrum;
  const ConeConfig cfg = g.cone_config();
  const RadialTable table = build_radial_table(linspace(-10.0, 10.0, s_points),
                                               linspace(0.0, rho_max, rho_points), cfg,
                                               QuadParams{});
  const SpectrumReport rep = spectrum_range(table);

  ordered_json cj = g.base_json("spectrum");
  cj["table"] = {{"s_points", s_points},
                 {"rho_points", rho_points},
                 {"s_span", {-10.0, 10.0}},
                 {"rho_span", {0.0, rho_max}}};
  cj["sections"] = sections;
  const std::string hdr = header_for(cj, g.seed);
  using tpq::emit::g17;

  std::string report = hdr;
  report += "observed_min,observed_max,max_gap\n";
  report += g17(rep.observed_min) + "," + g17(rep.observed_max) + "," + g17(rep.max_gap) + "\n";
  write_file(g.output_dir, "spectrum_report.csv", report);

  std::string hist = hdr;
  hist += "bin,lower_edge,count\n";
  for (std::size_t b = 0; b < rep.coverage_histogram.size(); ++b)
    hist += std::to_string(b) + "," + g17(static_cast<double>(b) / kHistogramBins) + "," +
            std::to_string(rep.coverage_histogram[b]) + "\n";
  write_file(g.output_dir, "spectrum_histogram.csv", hist);

  std::string eig = hdr;
  eig += "N,index,eigenvalue\n";
  for (int N : sections) {
    const FiniteSection fs = finite_section(N, 0.0, table);
    for (Eigen::Index i = 0; i < fs.eigenvalues.size(); ++i)
      eig += std::to_string(N) + "," + std::to_string(i) + "," + g17(fs.eigenvalues(i)) + "\n";
  }
  write_file(g.output_dir, "spectrum_sections.csv", eig);
  return 0;
}

// ----------------------------------------------------------------- evolve

ordered_json evolve_effective_config(const ordered_json& in) {
  // Fill every default explicitly so the hash covers the exact run.
  ordered_json cfg;
  const auto units = in.value("units", ordered_json::object());
  cfg["units"] = {{"m", units.value("m", 1.0)},
                  {"c", units.value("c", 1.0)},
                  {"hbar", units.value("hbar", 1.0)}};
  cfg["orientation"] = in.value("orientation", "future");
  cfg["seed"] = in.value("seed", std::uint64_t{0});

  if (!in.contains("grid")) throw std::invalid_argument("evolve config: missing 'grid'");
  const auto& gj = in.at("grid");
  cfg["grid"] = {{"dims", gj.value("dims", 2)},
                 {"points", gj.at("points")},
                 {"extents", gj.at("extents")}};

  if (!in.contains("packet")) throw std::invalid_argument("evolve config: missing 'packet'");
  const auto& pj = in.at("packet");
  cfg["packet"] = {{"center", pj.at("center")}, {"widths", pj.at("widths")}};

  const auto sj = in.value("symbol", ordered_json::object());
  const std::string type = sj.value("type", "exact");
  ordered_json sym{{"type", type}};
  if (type == "exact") {
    const auto tj = sj.value("table", ordered_json::object());
    sym["table"] = {{"s", tj.value("s", ordered_json{-5.0, 5.0, 161})},
                    {"rho", tj.value("rho", ordered_json{0.0, 5.0, 81})}};
  } else if (type == "approximation") {
    sym["include_cone"] = sj.value("include_cone", true);
  } else if (type != "direct") {
    throw std::invalid_argument("evolve config: symbol.type must be exact|approximation|direct");
  }
  cfg["symbol"] = sym;

  if (!in.contains("tau_list")) throw std::invalid_argument("evolve config: missing 'tau_list'");
  cfg["tau_list"] = in.at("tau_list");

  const auto qj = in.value("quadrature", ordered_json::object());
  cfg["quadrature"] = {{"rel_tol", qj.value("rel_tol", 1e-10)},
                       {"abs_tol", qj.value("abs_tol", 1e-12)},
                       {"r_cutoff", qj.value("r_cutoff", 0.0)},
                       {"max_subdivisions", qj.value("max_subdivisions", 15)}};
  cfg["emit_snapshots"] = in.value("emit_snapshots", true);
  return cfg;
}

int run_evolve(const GlobalOpts& g, const std::string& config_path, bool force_direct) {
  using namespace tpq::cone;
  using namespace tpq::evolution;

  std::ifstream f(config_path);
  if (!f) throw std::invalid_argument("cannot open config file " + config_path);
  ordered_json raw;
  try {
    raw = ordered_json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("evolve config: JSON parse error: ") + e.what());
  }
  ordered_json cfg = evolve_effective_config(raw);
  if (force_direct) cfg["symbol"] = ordered_json{{"type", "direct"}};

  ConeConfig cone_cfg;
  cone_cfg.m = cfg["units"]["m"].get<double>();
  cone_cfg.c = cfg["units"]["c"].get<double>();
  cone_cfg.hbar = cfg["units"]["hbar"].get<double>();
  const std::string orient = cfg["orientation"].get<std::string>();
  if (orient == "future") {
    cone_cfg.orientation = Orientation::Future;
  } else if (orient == "past") {
    cone_cfg.orientation = Orientation::Past;
  } else {
    throw std::invalid_argument("evolve config: orientation must be 'future' or 'past'");
  }
  const auto seed = cfg["seed"].get<std::uint64_t>();

  QuadParams qp;
  qp.rel_tol = cfg["quadrature"]["rel_tol"].get<double>();
  qp.abs_tol = cfg["quadrature"]["abs_tol"].get<double>();
  qp.r_cutoff = cfg["quadrature"]["r_cutoff"].get<double>();
  qp.max_subdivisions = cfg["quadrature"]["max_subdivisions"].get<int>();

  GridSpec grid;
  grid.dims = cfg["grid"]["dims"].get<int>();
  for (const auto& p : cfg["grid"]["points"]) grid.points.push_back(p.get<int>());
  for (const auto& e : cfg["grid"]["extents"]) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("evolve config: each extent must be [min, max]");
    grid.extents.push_back({e[0].get<double>(), e[1].get<double>()});
  }
  validate_grid(grid);

  FourMomentum center{};
  const auto& cj = cfg["packet"]["center"];
  const auto dims = static_cast<std::size_t>(grid.dims);
  if (!cj.is_array() || (cj.size() != dims && cj.size() != 4))
    throw std::invalid_argument("evolve config: packet.center needs one component per grid axis");
  for (std::size_t a = 0; a < cj.size(); ++a) center.xi[a] = cj[a].get<double>();
  std::vector<double> widths;
  for (const auto& w : cfg["packet"]["widths"]) widths.push_back(w.get<double>());

  const WavePacket packet = make_gaussian_packet(grid, center, widths);

  // Symbol setup. The table, if any, must outlive the evolutions.
  std::optional<RadialTable> table;
  SymbolSpec symbol = DirectSymbol{qp};
  const std::string type = cfg["symbol"]["type"].get<std::string>();
  if (type == "exact") {
    const auto& tj = cfg["symbol"]["table"];
    const auto s_axis = tj["s"].get<std::vector<double>>();
    const auto rho_axis = tj["rho"].get<std::vector<double>>();
    if (s_axis.size() != 3 || rho_axis.size() != 3)
      throw std::invalid_argument("evolve config: symbol.table.s/rho must be [min, max, points]");
    table = build_radial_table(linspace(s_axis[0], s_axis[1], static_cast<int>(s_axis[2])),
                               linspace(rho_axis[0], rho_axis[1], static_cast<int>(rho_axis[2])),
                               cone_cfg, qp);
    symbol = ExactSymbol{&*table};
  } else if (type == "approximation") {
    symbol = ApproxSymbol{cfg["symbol"]["include_cone"].get<bool>()};
  }

  const std::string hdr = header_for(cfg, seed);
  using tpq::emit::g17;

  ordered_json summary;
  summary["config"] = cfg;
  summary["config_hash"] = tpq::emit::hex64(tpq::emit::fnv1a(cfg.dump()));
  summary["snapshots"] = ordered_json::array();

  const bool emit_snapshots = cfg["emit_snapshots"].get<bool>();
  if (emit_snapshots && packet.grid.total_points() > (std::size_t{1} << 20))
    throw std::invalid_argument(
        "evolve config: snapshot emission is limited to 2^20 nodes; shrink the grid or set "
        "emit_snapshots=false");

  const auto q_obs = [](const FourMomentum& xi) { return minkowski_q(xi); };
  const auto energy_obs = [&symbol, &cone_cfg](const FourMomentum& xi) {
    const double rho = std::sqrt(xi.xi[1] * xi.xi[1] + xi.xi[2] * xi.xi[2] + xi.xi[3] * xi.xi[3]);
    return tpq::evolution::detail::symbol_value(symbol, cone_cfg, xi.xi[0], rho);
  };

  int snap_index = 0;
  for (const auto& tj : cfg["tau_list"]) {
    const double tau = tj.get<double>();
    const WavePacket evolved = evolve(packet, EvolutionConfig{symbol, tau, cone_cfg});
    const PositionField pos = to_position(evolved);

    if (emit_snapshots) {
      std::string snap = hdr;
      snap += "# tau = " + g17(tau) + "\n";
      for (int a = 0; a < grid.dims; ++a) snap += "xi" + std::to_string(a) + ",";
      snap += "re,im,abs2\n";
      tpq::evolution::detail::IndexWalker w(grid);
      std::size_t flat = 0;
      do {
        for (int a = 0; a < grid.dims; ++a)
          snap += g17(grid.coord(a, w.idx[static_cast<std::size_t>(a)])) + ",";
        const auto& z = evolved.amplitudes[flat];
        snap += g17(z.real()) + "," + g17(z.imag()) + "," + g17(std::norm(z)) + "\n";
        ++flat;
      } while (w.advance());
      char name[48];
      std::snprintf(name, sizeof name, "evolve_snapshot_%03d.csv", snap_index);
      write_file(g.output_dir, name, snap);
    }

    ordered_json row;
    row["tau"] = tau;
    row["norm"] = packet_norm(evolved);
    row["q_expectation"] = momentum_observable_expectation(evolved, q_obs);
    row["energy_expectation"] = momentum_observable_expectation(evolved, energy_obs);
    row["centroid_momentum"] = centroid_momentum(evolved);
    row["centroid_position"] = centroid_position(pos);
    row["edge_mass_fraction"] = edge_mass_fraction(pos);
    summary["snapshots"].push_back(row);
    ++snap_index;
  }

  write_file(g.output_dir, "evolve_summary.json", summary.dump(2) + "\n");
  return 0;
}

// ----------------------------------------------------------------- verify

int run_verify(const GlobalOpts& g) {
  using namespace tpq::verify;
  ordered_json cj = g.base_json("verify");
  const std::string hdr = header_for(cj, g.seed);

  std::string report = hdr;
  report += "check,status,measured,threshold\n";
  const VerifyReport rep = run_all({g.seed}, [&report](const CheckResult& c) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n"
              << std::flush;
    report += c.name + "," + (c.pass ? "pass" : "fail") + "," + tpq::emit::g17(c.measured) +
              "," + tpq::emit::g17(c.threshold) + "\n";
  });
  write_file(g.output_dir, "verify_report.csv", report);
  std::cout << (rep.all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-projection relativistic quantization toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--output-dir", g.output_dir, "directory for output files")
      ->envname("TPQ_OUTPUT_DIR")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed recorded in outputs and used by stochastic checks")
      ->capture_default_str();
  app.add_option("--m", g.m, "mass")->capture_default_str();
  app.add_option("--c", g.c, "speed constant")->capture_default_str();
  app.add_option("--hbar", g.hbar, "action constant")->capture_default_str();
  app.add_option("--orientation", g.orientation, "cone orientation: future|past")
      ->capture_default_str();

  auto* alg = app.add_subcommand("algebra", "two-projection representation matrices and classes");
  alg->fallthrough();
  std::vector<double> ps{0.0, 0.5, 1.0};
  alg->add_option("--p", ps, "comma-separated spin parameters in [0,1]")
      ->delimiter(',')
      ->capture_default_str();

  auto* toe = app.add_subcommand("toeplitz", "Toeplitz matrix of a polynomial symbol");
  toe->fallthrough();
  int n = 1, cap = 5, axis = 0;
  std::string symbol_name = "oscillator";
  toe->add_option("--n", n, "complex dimension")->capture_default_str();
  toe->add_option("--cap", cap, "total degree cap")->capture_default_str();
  toe->add_option("--symbol", symbol_name, "one|oscillator|z")->capture_default_str();
  toe->add_option("--axis", axis, "axis for the z symbol")->capture_default_str();

  auto* lam = app.add_subcommand("lambda", "sweep of the smeared symbol over (s, rho)");
  lam->fallthrough();
  std::string lam_s = "-4:4:0.5", lam_rho = "0:4:0.5";
  lam->add_option("--s", lam_s, "range min:max:step for s")->capture_default_str();
  lam->add_option("--rho", lam_rho, "range min:max:step for rho")->capture_default_str();

  auto* mu = app.add_subcommand("mu", "sweep of the smeared indicator over (s, rho)");
  mu->fallthrough();
  std::string mu_s = "-4:4:0.5", mu_rho = "0:4:0.5";
  mu->add_option("--s", mu_s, "range min:max:step for s")->capture_default_str();
  mu->add_option("--rho", mu_rho, "range min:max:step for rho")->capture_default_str();

  auto* asy = app.add_subcommand("asymptotics", "deep-cone convergence table");
  asy->fallthrough();
  std::vector<double> xi_vals{2.0, 1.0, 0.0, 0.0};
  std::vector<double> t_vals{2.0, 4.0, 8.0, 16.0};
  asy->add_option("--xi", xi_vals, "cone-interior base point, 4 comma-separated components")
      ->delimiter(',')
      ->capture_default_str();
  asy->add_option("--t", t_vals, "scaling factors, comma-separated, increasing")
      ->delimiter(',')
      ->capture_default_str();

  auto* spec_cmd = app.add_subcommand("spectrum", "range of 1-mu and finite sections");
  spec_cmd->fallthrough();
  int s_points = 200, rho_points = 50;
  double rho_max = 4.0;
  std::vector<int> sections{4, 16, 64};
  spec_cmd->add_option("--s-points", s_points, "table points along s")->capture_default_str();
  spec_cmd->add_option("--rho-points", rho_points, "table points along rho")
      ->capture_default_str();
  spec_cmd->add_option("--rho-max", rho_max, "table rho upper edge")->capture_default_str();
  spec_cmd->add_option("--sections", sections, "finite-section sizes, comma-separated")
      ->delimiter(',')
      ->capture_default_str();

  auto* evo = app.add_subcommand("evolve", "wavepacket evolution from a JSON config");
  evo->fallthrough();
  std::string config_path;
  bool force_direct = false;
  evo->add_option("--config", config_path, "JSON run configuration")->required();
  evo->add_flag("--direct", force_direct,
                "force per-node quadrature for the symbol (validation mode)");

  auto* ver = app.add_subcommand("verify", "run the full verification suite");
  ver->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (alg->parsed()) return run_algebra(g, ps);
    if (toe->parsed()) return run_toeplitz(g, n, cap, symbol_name, axis);
    if (lam->parsed()) return run_sweep(g, "lambda", lam_s, lam_rho);
    if (mu->parsed()) return run_sweep(g, "mu", mu_s, mu_rho);
    if (asy->parsed()) return run_asymptotics(g, xi_vals, t_vals);
    if (spec_cmd->parsed()) return run_spectrum(g, s_points, rho_points, rho_max, sections);
    if (evo->parsed()) return run_evolve(g, config_path, force_direct);
    if (ver->parsed()) return run_verify(g);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
