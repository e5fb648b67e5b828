#include "kinbound/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kinbound/classify.hpp"
#include "kinbound/envelope.hpp"
#include "kinbound/errors.hpp"
#include "kinbound/models.hpp"
#include "kinbound/qnumbers.hpp"
#include "kinbound/semiclassical.hpp"
#include "kinbound/toy.hpp"

namespace kinbound::cli {
namespace {

using Row = std::vector<std::string>;
using Rows = std::vector<Row>;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& s) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (trim(s.substr(pos)).empty() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("expected a number, got '" + s + "'");
}

int parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (trim(s.substr(pos)).empty()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("expected an integer, got '" + s + "'");
}

void print_table(std::ostream& out, const Row& header, const Rows& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], r[i].size());
  auto line = [&](const Row& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << cells[i];
      if (i + 1 < cells.size()) out << std::string(width[i] - cells[i].size() + 2, ' ');
    }
    out << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void write_csv(const std::string& path, const Row& header, const Rows& rows) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot open output file '" + path + "'");
  auto line = [&](const Row& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      f << cells[i];
      if (i + 1 < cells.size()) f << ',';
    }
    f << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

struct ModelSpec {
  std::string name;  // catalog head, empty when the spec is an expression
  std::vector<double> params;
};

ModelSpec split_spec(const std::string& spec, const std::set<std::string>& names) {
  auto colon = spec.find(':');
  std::string head = trim(colon == std::string::npos ? spec : spec.substr(0, colon));
  if (!names.count(head)) return {};
  ModelSpec out;
  out.name = head;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) out.params.push_back(parse_number(trim(tok)));
  }
  return out;
}

const std::set<std::string> kKineticNames = {"quadratic", "relativistic",
                                             "ultrarelativistic", "gaussian", "toy"};
const std::set<std::string> kPotentialNames = {"power", "coulomb", "linear",
                                               "harmonic"};

models::KineticModel build_kinetic(const std::string& spec) {
  if (trim(spec).empty()) throw ConfigError("a kinetic model is required");
  auto s = split_spec(spec, kKineticNames);
  if (s.name == "toy") {
    if (s.params.size() != 1)
      throw ConfigError("kinetic 'toy' takes exactly one parameter k");
    return toy::kinetic(s.params[0]);
  }
  if (!s.name.empty()) return models::catalog_kinetic(s.name, s.params);
  return models::kinetic_from_expr(spec);
}

models::PotentialModel build_potential(const std::string& spec) {
  if (trim(spec).empty()) throw ConfigError("a potential model is required");
  auto s = split_spec(spec, kPotentialNames);
  if (!s.name.empty()) return models::catalog_potential(s.name, s.params);
  return models::potential_from_expr(spec);
}

// Growth exponent of exp(k q^2)-type kinetics, used to size momentum grids.
std::optional<double> growth_rate(const std::string& spec) {
  auto s = split_spec(spec, kKineticNames);
  if (s.name == "toy" && s.params.size() == 1) return s.params[0];
  if (s.name == "gaussian" && s.params.size() == 2)
    return 1.0 / (2.0 * s.params[1] * s.params[1]);
  return std::nullopt;
}

bool is_unit_harmonic(const std::string& spec) {
  auto s = split_spec(spec, kPotentialNames);
  return s.name == "harmonic" && s.params.size() == 1 && s.params[0] == 1.0;
}

envelope::RootPolicy parse_policy(const std::string& name) {
  if (name == "unique") return envelope::RootPolicy::unique;
  if (name == "smallest") return envelope::RootPolicy::smallest;
  if (name == "largest") return envelope::RootPolicy::largest;
  throw ConfigError("root policy must be unique, smallest or largest");
}

qnumbers::QuantumState resolve_state(double lambda, const StateSpec& s,
                                     const oracle::OracleConfig& cfg) {
  if (auto q = qnumbers::q_exact(lambda, s.n, s.l)) return *q;
  return qnumbers::q_numeric(lambda, s.n, s.l, cfg);
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  if (cfg.states.empty()) throw ConfigError("solve needs at least one state");
  const auto T = build_kinetic(cfg.kinetic);
  const auto V = build_potential(cfg.potential);
  const models::AuxiliaryPowerLaw aux(cfg.lambda);
  const auto policy = parse_policy(cfg.root);
  Rows rows;
  for (const auto& s : cfg.states) {
    const auto state = resolve_state(cfg.lambda, s, cfg.oracle);
    const auto sol = envelope::solve_envelope(T, V, aux, state, policy);
    rows.push_back({std::to_string(s.n), std::to_string(s.l), fmt(state.Q),
                    qnumbers::provenance_name(state.provenance), fmt(sol.r0),
                    fmt(sol.p0), fmt(sol.nu0), fmt(sol.rho0), fmt(sol.E),
                    classify::bound_name(sol.bound), fmt(sol.residual)});
  }
  const Row header = {"n",   "l",    "Q", "Q-source", "r0",    "p0",
                      "nu0", "rho0", "E", "bound",    "residual"};
  print_table(out, header, rows);
  write_csv(cfg.out, header, rows);
  return 0;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const auto T = build_kinetic(cfg.kinetic);
  const auto V = build_potential(cfg.potential);
  const models::AuxiliaryPowerLaw aux(cfg.lambda);
  const auto h = classify::analyze_h(T);
  const auto g = classify::analyze_g(V, aux);
  const char* bound = classify::bound_name(classify::classify_bound(T, V, aux));
  const Row header = {"function", "verdict", "samples", "max_violation", "bound"};
  Rows rows = {{"h", classify::verdict_name(h.verdict), std::to_string(h.samples),
                fmt(h.max_violation), bound},
               {"g", classify::verdict_name(g.verdict), std::to_string(g.samples),
                fmt(g.max_violation), bound}};
  print_table(out, header, rows);
  write_csv(cfg.out, header, rows);
  return 0;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  if (cfg.states.empty()) throw ConfigError("oracle needs at least one state");
  const auto T = build_kinetic(cfg.kinetic);
  const auto V = build_potential(cfg.potential);
  std::string backend = cfg.backend;
  if (backend == "auto")
    backend = is_unit_harmonic(cfg.potential) ? "momentum-grid" : "oscillator-basis";
  if (backend == "momentum-grid" && !is_unit_harmonic(cfg.potential))
    throw ConfigError("the momentum-grid backend requires potential harmonic:1");
  if (backend != "momentum-grid" && backend != "oscillator-basis")
    throw ConfigError("backend must be auto, momentum-grid or oscillator-basis");

  std::map<int, int> per_l;
  for (const auto& s : cfg.states) per_l[s.l] = std::max(per_l[s.l], s.n + 1);
  std::map<int, oracle::OracleSpectrum> spectra;
  for (const auto& [l, count] : per_l) {
    oracle::OracleConfig c = cfg.oracle;
    c.states = count;
    spectra.emplace(l, backend == "momentum-grid"
                           ? oracle::solve_momentum_grid(T, growth_rate(cfg.kinetic), l, c)
                           : oracle::solve_oscillator_basis(T, V, l, c));
  }
  Rows rows;
  for (const auto& s : cfg.states) {
    const auto& spec = spectra.at(s.l);
    rows.push_back({std::to_string(s.n), std::to_string(s.l),
                    fmt(spec.eigenvalues[std::size_t(s.n)]),
                    fmt(spec.convergence_estimate), spec.backend_used});
  }
  const Row header = {"n", "l", "energy", "convergence", "backend"};
  print_table(out, header, rows);
  write_csv(cfg.out, header, rows);
  return 0;
}

int cmd_toy_figure2(const RunConfig& cfg, std::ostream& out) {
  if (!(cfg.k_min > 0.0) || !(cfg.k_max >= cfg.k_min))
    throw ConfigError("toy-figure2 needs 0 < k-min <= k-max");
  if (cfg.points < 1) throw ConfigError("toy-figure2 needs points >= 1");
  const StateSpec fig[3] = {{0, 0}, {0, 1}, {1, 0}};
  Rows rows;
  for (int i = 0; i < cfg.points; ++i) {
    const double k =
        cfg.points == 1
            ? cfg.k_min
            : cfg.k_min * std::pow(cfg.k_max / cfg.k_min, double(i) / (cfg.points - 1));
    const auto T = toy::kinetic(k);
    std::vector<double> eigs[2];
    bool failed[2] = {false, false};
    for (int l = 0; l < 2; ++l) {
      oracle::OracleConfig c = cfg.oracle;
      c.states = l == 0 ? 2 : 1;
      try {
        eigs[l] = oracle::solve_momentum_grid(T, k, l, c).eigenvalues;
      } catch (const ConvergenceError&) {
        failed[l] = true;
      }
    }
    for (const auto& s : fig) {
      const double Q = 2.0 * s.n + s.l + 1.5;
      const double app = toy::epsilon_app(k, Q);
      const double ho = toy::epsilon_ho(k, Q);
      Row row = {fmt(k), std::to_string(s.n) + "_" + std::to_string(s.l), fmt(app),
                 fmt(ho), "", "", "ok"};
      if (failed[s.l]) {
        row[6] = "no-convergence";
      } else {
        const double num = eigs[s.l][std::size_t(s.n)];
        row[4] = fmt(num);
        row[5] = fmt(num - app);
      }
      rows.push_back(std::move(row));
    }
  }
  const Row header = {"k",           "state",           "epsilon_app", "epsilon_ho",
                      "epsilon_numeric", "gap",         "status"};
  print_table(out, header, rows);
  write_csv(cfg.out, header, rows);
  return 0;
}

int cmd_orbit(const RunConfig& cfg, std::ostream& out) {
  if (cfg.states.empty()) throw ConfigError("orbit needs at least one state");
  const auto T1 = build_kinetic(cfg.kinetic);
  std::optional<models::KineticModel> T2;
  if (!trim(cfg.kinetic2).empty()) T2 = build_kinetic(cfg.kinetic2);
  const auto V = build_potential(cfg.potential);
  const auto policy = parse_policy(cfg.root);
  std::vector<int> ls;
  for (const auto& s : cfg.states)
    if (std::find(ls.begin(), ls.end(), s.l) == ls.end()) ls.push_back(s.l);
  Rows rows;
  for (int l : ls) {
    const auto orbit = semiclassical::solve_orbit(T1, T2, V, l, policy);
    rows.push_back({std::to_string(l), fmt(l + 0.5), fmt(orbit.r0), fmt(orbit.p0),
                    fmt(orbit.r1), fmt(orbit.r2), fmt(orbit.v1), fmt(orbit.v2),
                    fmt(orbit.F), fmt(orbit.m1eff), fmt(orbit.m2eff), fmt(orbit.E)});
  }
  const Row header = {"l",  "Q",  "r0", "p0",    "r1",    "r2",
                      "v1", "v2", "F",  "m1eff", "m2eff", "E"};
  print_table(out, header, rows);
  write_csv(cfg.out, header, rows);
  return 0;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.states.empty()) throw ConfigError("check needs at least one state");
  const auto T = build_kinetic(cfg.kinetic);
  const auto V = build_potential(cfg.potential);
  const models::AuxiliaryPowerLaw aux(cfg.lambda);
  const auto policy = parse_policy(cfg.root);

  Rows rows;
  bool all_pass = true;
  double worst = 0.0;
  auto add = [&](const std::string& name, const std::string& st, double residual,
                 double threshold) {
    const bool ok = residual <= threshold;
    all_pass = all_pass && ok;
    worst = std::max(worst, residual);
    rows.push_back({name, st, fmt(residual), fmt(threshold), ok ? "pass" : "FAIL"});
  };

  for (const auto& s : cfg.states) {
    const std::string st = std::to_string(s.n) + "_" + std::to_string(s.l);
    const auto state = resolve_state(cfg.lambda, s, cfg.oracle);
    const auto sol = envelope::solve_envelope(T, V, aux, state, policy);

    add("stationary-residual", st,
        sol.residual / std::max(std::abs(sol.r0 * V.dV(sol.r0)), 1.0), 1e-10);
    add("radius-momentum-product", st, std::abs(sol.r0 * sol.p0 / state.Q - 1.0),
        1e-12);
    const double surf = envelope::energy_surface(T, V, aux, state.Q, sol.nu0, sol.rho0);
    add("surface-identity", st,
        std::abs(surf - sol.E) / std::max(std::abs(sol.E), 1e-12), 1e-10);
    const auto grad = envelope::stationarity_gradient(T, V, aux, state.Q, sol);
    add("stationarity-nu", st, grad.first, 1e-6);
    add("stationarity-rho", st, grad.second, 1e-6);

    const auto targets = envelope::hellmann_feynman_targets(sol, aux);
    const double p2 = oracle::expectation(oracle::Observable::p_squared, sol.nu0,
                                          sol.rho0, aux, s.n, s.l, cfg.oracle);
    add("mean-p-squared", st, std::abs(p2 / targets.p_squared - 1.0), 1e-5);
    const double rl = oracle::expectation(oracle::Observable::r_lambda, sol.nu0,
                                          sol.rho0, aux, s.n, s.l, cfg.oracle);
    add("mean-r-lambda", st, std::abs(rl / targets.r_lambda - 1.0), 1e-5);
    add("virial", st,
        oracle::virial_residual(T, V, s.n, s.l, cfg.oracle) /
            std::max(std::abs(sol.E), 1.0),
        1e-5);

    if (sol.bound == classify::BoundClass::indeterminate) {
      rows.push_back({"tangent-kinetic", st, "-", "-", "skipped"});
      rows.push_back({"tangent-potential", st, "-", "-", "skipped"});
      continue;
    }
    // Tangency sweeps: the replaced operators must sit on the bounding side.
    auto violation = [&](double diff, double scale) {
      switch (sol.bound) {
        case classify::BoundClass::lower:
          return diff / scale;
        case classify::BoundClass::upper:
          return -diff / scale;
        default:
          return std::abs(diff) / scale;
      }
    };
    double worst_k = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double p =
          T.p_lo * std::exp(std::log(T.p_hi / T.p_lo) * (i + 0.5) / 100);
      const double tv = envelope::tilde_T(T, sol.nu0, p);
      worst_k = std::max(worst_k, violation(tv - T.T(p), std::max(1.0, std::abs(T.T(p)))));
    }
    add("tangent-kinetic", st, worst_k, 1e-9);
    double worst_v = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double r =
          V.r_lo * std::exp(std::log(V.r_hi / V.r_lo) * (i + 0.5) / 100);
      const double tv = envelope::tilde_V(V, aux, sol.rho0, r);
      worst_v = std::max(worst_v, violation(tv - V.V(r), std::max(1.0, std::abs(V.V(r)))));
    }
    add("tangent-potential", st, worst_v, 1e-9);
  }

  const Row header = {"check", "state", "residual", "threshold", "status"};
  print_table(out, header, rows);
  out << "max residual " << fmt(worst) << "\n";
  write_csv(cfg.out, header, rows);
  return all_pass ? 0 : 3;
}

void apply_key(RunConfig& c, const std::string& key, const std::string& value,
               int lineno) {
  if (key == "command") c.command = value;
  else if (key == "kinetic") c.kinetic = value;
  else if (key == "kinetic2") c.kinetic2 = value;
  else if (key == "potential") c.potential = value;
  else if (key == "lambda") c.lambda = parse_number(value);
  else if (key == "states") c.states = parse_states(value);
  else if (key == "backend") c.backend = value;
  else if (key == "oracle_size") c.oracle.size = parse_int(value);
  else if (key == "oracle_cutoff") c.oracle.cutoff = parse_number(value);
  else if (key == "oracle_tolerance") c.oracle.tolerance = parse_number(value);
  else if (key == "k_min") c.k_min = parse_number(value);
  else if (key == "k_max") c.k_max = parse_number(value);
  else if (key == "points") c.points = parse_int(value);
  else if (key == "out") c.out = value;
  else if (key == "root") c.root = value;
  else
    throw ConfigError("unknown config key '" + key + "' on line " +
                      std::to_string(lineno));
}

}  // namespace

std::vector<StateSpec> parse_states(const std::string& text) {
  std::vector<StateSpec> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos)
      throw ConfigError("state must be 'n,l', got '" + item + "'");
    const int n = parse_int(trim(item.substr(0, comma)));
    const int l = parse_int(trim(item.substr(comma + 1)));
    if (n < 0 || l < 0) throw ConfigError("quantum numbers must be non-negative");
    out.push_back({n, l});
  }
  if (out.empty()) throw ConfigError("the state list is empty");
  return out;
}

RunConfig load_config(std::istream& in, RunConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body;
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"') quoted = !quoted;
      if (ch == '#' && !quoted) break;
      body += ch;
    }
    body = trim(body);
    if (body.empty()) continue;
    if (body.front() == '[') continue;  // section headers carry no data here
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        " is not 'key = value'");
    const std::string key = trim(body.substr(0, eq));
    std::string value = trim(body.substr(eq + 1));
    if (!value.empty() && value.front() == '"') {
      const auto close = value.find('"', 1);
      if (close == std::string::npos || !trim(value.substr(close + 1)).empty())
        throw ConfigError("bad string on config line " + std::to_string(lineno));
      value = value.substr(1, close - 1);
    }
    apply_key(base, key, value, lineno);
  }
  return base;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"stationary auxiliary-field bounds for H = T(p) + V(r)", "kinbound"};
  app.require_subcommand(1);

  struct Flags {
    std::string config, kinetic, kinetic2, potential, states, backend, out, root;
    double lambda = 2.0, cutoff = 0.0, tolerance = 1e-6, k_min = 0.05, k_max = 4.0;
    int size = 0, points = 40;
  } flag;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"solve", "stationary energies and bound classes for a list of states"},
      {"classify", "convexity analysis of the kinetic and potential transforms"},
      {"oracle", "reference spectra from the built-in eigensolvers"},
      {"toy-figure2", "closed form vs numeric spectrum of the exp(k q^2) + x^2 model"},
      {"orbit", "semiclassical circular two-body orbit at Q = l + 1/2"},
      {"check", "run the full invariant suite on one configuration"}};
  for (const auto& [name, description] : commands) {
    auto* sub = app.add_subcommand(name, description);
    sub->add_option("--config", flag.config, "TOML config file");
    sub->add_option("--kinetic", flag.kinetic,
                    "kinetic model, catalog 'name:params' or an expression in p");
    sub->add_option("--kinetic2", flag.kinetic2, "second particle kinetic model");
    sub->add_option("--potential", flag.potential,
                    "potential model, catalog 'name:params' or an expression in r");
    sub->add_option("--lambda", flag.lambda, "auxiliary power-law exponent");
    sub->add_option("--states", flag.states, "semicolon-separated n,l pairs");
    sub->add_option("--backend", flag.backend,
                    "auto, momentum-grid or oscillator-basis");
    sub->add_option("--oracle-size", flag.size, "grid points or basis dimension");
    sub->add_option("--oracle-cutoff", flag.cutoff, "grid extent or basis scale");
    sub->add_option("--oracle-tolerance", flag.tolerance,
                    "spectral convergence target");
    sub->add_option("--k-min", flag.k_min, "smallest toy coupling");
    sub->add_option("--k-max", flag.k_max, "largest toy coupling");
    sub->add_option("--points", flag.points, "number of toy couplings");
    sub->add_option("--out", flag.out, "CSV output path");
    sub->add_option("--root", flag.root, "root policy: unique, smallest, largest");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  CLI::App* sub = app.get_subcommands().front();

  try {
    RunConfig cfg;
    cfg.command.clear();
    if (sub->count("--config")) {
      std::ifstream f(flag.config);
      if (!f) throw ConfigError("cannot open config file '" + flag.config + "'");
      cfg = load_config(f, cfg);
      if (!cfg.command.empty() && cfg.command != sub->get_name())
        throw ConfigError("config file names command '" + cfg.command +
                          "' but the subcommand is '" + sub->get_name() + "'");
    }
    cfg.command = sub->get_name();
    if (sub->count("--kinetic")) cfg.kinetic = flag.kinetic;
    if (sub->count("--kinetic2")) cfg.kinetic2 = flag.kinetic2;
    if (sub->count("--potential")) cfg.potential = flag.potential;
    if (sub->count("--lambda")) cfg.lambda = flag.lambda;
    if (sub->count("--states")) cfg.states = parse_states(flag.states);
    if (sub->count("--backend")) cfg.backend = flag.backend;
    if (sub->count("--oracle-size")) cfg.oracle.size = flag.size;
    if (sub->count("--oracle-cutoff")) cfg.oracle.cutoff = flag.cutoff;
    if (sub->count("--oracle-tolerance")) cfg.oracle.tolerance = flag.tolerance;
    if (sub->count("--k-min")) cfg.k_min = flag.k_min;
    if (sub->count("--k-max")) cfg.k_max = flag.k_max;
    if (sub->count("--points")) cfg.points = flag.points;
    if (sub->count("--out")) cfg.out = flag.out;
    if (sub->count("--root")) cfg.root = flag.root;

    if (cfg.command == "solve") return cmd_solve(cfg, out);
    if (cfg.command == "classify") return cmd_classify(cfg, out);
    if (cfg.command == "oracle") return cmd_oracle(cfg, out);
    if (cfg.command == "toy-figure2") return cmd_toy_figure2(cfg, out);
    if (cfg.command == "orbit") return cmd_orbit(cfg, out);
    if (cfg.command == "check") return cmd_check(cfg, out);
    throw ConfigError("unknown command '" + cfg.command + "'");
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 1;
  } catch (const SyntaxError& e) {
    err << "config error: " << e.what() << "\n";
    return 1;
  } catch (const ModelError& e) {
    err << "config error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "solver error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace kinbound::cli
