#include "cli.hpp"

#include <cstdio>
#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <functional>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "cosc/format.hpp"
#include "cosc/painleve.hpp"
#include "cosc/verify.hpp"

namespace cosc::cli {

namespace {

using json = nlohmann::ordered_json;

struct Dataset {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
  json meta = json::object();
};

struct Job {
  std::string label;
  RunConfig config;
};

// Non-finite numbers are stored as null and written as "nan".
json num(double v) { return std::isfinite(v) ? json(v) : json(); }

std::string cell_text(const json& v) {
  if (v.is_null()) return "nan";
  if (v.is_number_float()) return format_real(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void parse_seed(RunConfig& c) {
  const std::string& s = c.seed_text;
  if (s == "general") {
    c.kind = SeedKind::General;
    return;
  }
  if (s == "ams") {
    c.kind = SeedKind::AMS;
    return;
  }
  const auto colon = s.find(':');
  const std::string head = s.substr(0, colon);
  if (colon == std::string::npos || (head != "bound-even" && head != "bound-odd")) {
    throw Error(ErrorKind::InvalidArgument,
                "--seed must be general, ams, bound-even:J or bound-odd:J, got '" + s + "'");
  }
  try {
    std::size_t used = 0;
    c.j = std::stoi(s.substr(colon + 1), &used);
    if (used != s.size() - colon - 1 || c.j < 0) throw std::invalid_argument("j");
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "bad bound-state index in '" + s + "'");
  }
  c.kind = head == "bound-even" ? SeedKind::BoundEven : SeedKind::BoundOdd;
}

Frequency frequency(const RunConfig& c) { return Frequency::from_phase(c.theta); }

SeedSpec seed_spec(const RunConfig& c) {
  const Frequency f = frequency(c);
  switch (c.kind) {
    case SeedKind::General: return SeedSpec::general(c.epsilon, c.nu);
    case SeedKind::BoundEven: return SeedSpec::bound_even(c.j, f);
    case SeedKind::BoundOdd: return SeedSpec::bound_odd(c.j, f);
    case SeedKind::AMS: return SeedSpec::ams(c.nu, f);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown seed kind");
}

Chain make_chain(const RunConfig& c) {
  return Chain(seed_spec(c), frequency(c), c.order, {}, c.delta_w);
}

Grid make_grid(const RunConfig& c, Domain domain) {
  if (!c.grid) return default_grid(domain);
  return Grid::uniform(c.grid->min, c.grid->max, c.grid->points);
}

PivTolerances piv_tolerances(const RunConfig& c) {
  PivTolerances t;
  t.delta_g = c.delta_g;
  t.analytic = c.tol_analytic;
  t.finite_difference = c.tol_fd;
  t.fd.h = c.fd_step;
  return t;
}

json config_json(const RunConfig& c) {
  json j;
  j["theta"] = c.theta;
  j["theta_text"] = c.theta_text;
  j["seed"] = c.seed_text;
  const SeedSpec s = seed_spec(c);
  j["epsilon"] = format_complex(s.epsilon);
  j["nu"] = format_complex(s.nu);
  j["order"] = c.order;
  const Grid g = make_grid(c, s.kind == SeedKind::BoundOdd ? Domain::HalfLine : Domain::FullLine);
  j["grid"] = {{"min", g.x(0)}, {"max", g.x(g.size() - 1)}, {"points", g.size()}};
  j["format"] = c.format;
  j["levels"] = c.levels;
  j["decay_radius"] = c.decay_radius;
  if (!c.states.empty()) j["states"] = c.states;
  j["role"] = c.role;
  j["tolerances"] = {{"delta_w", c.delta_w},
                     {"delta_g", c.delta_g},
                     {"analytic", c.tol_analytic},
                     {"finite_difference", c.tol_fd},
                     {"fd_step", c.fd_step}};
  return j;
}

std::string level_suffix(int n) {
  return n < 0 ? "_nm" + std::to_string(-n) : "_n" + std::to_string(n);
}

// ---------------------------------------------------------------- commands

Dataset spectrum_dataset(const std::string& label, const RunConfig& c) {
  const Chain chain = make_chain(c);
  Dataset d{label, {"index", "status", "re", "im"}, {}, {}};
  for (const SpectrumEntry& e : spectrum(chain, c.decay_radius, c.levels)) {
    const char* status = e.status == LevelStatus::Retained  ? "retained"
                         : e.status == LevelStatus::Deleted ? "deleted"
                                                            : "created";
    d.rows.push_back({e.index, status, num(e.energy.real()), num(e.energy.imag())});
  }
  return d;
}

Dataset potential_dataset(const std::string& label, const RunConfig& c) {
  const Chain chain = make_chain(c);
  const Grid grid = make_grid(c, chain.domain());
  Dataset d{label, {"x", "re", "im"}, {}, {}};
  int singular = 0;
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const double x = grid.x(i);
    try {
      const cplx v = partner_potential(chain, x);
      d.rows.push_back({x, num(v.real()), num(v.imag())});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularPoint) throw;
      d.rows.push_back({x, json(), json()});
      ++singular;
    }
  }
  d.meta["singular_points"] = singular;
  return d;
}

Dataset density_dataset(const std::string& name, const Grid& grid, Domain domain,
                        const std::function<cplx(double)>& psi) {
  Eigen::ArrayXcd values(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i) values(i) = psi(grid.x(i));
  const Eigen::ArrayXd density = normalize_on_grid(values, grid, domain);
  Dataset d{name, {"x", "density"}, {}, {}};
  for (Eigen::Index i = 0; i < grid.size(); ++i) d.rows.push_back({grid.x(i), num(density(i))});
  d.meta["integral"] = trapezoid(grid, density);
  return d;
}

std::vector<Dataset> states_datasets(const std::string& label, const RunConfig& c,
                                     std::vector<std::string>& errors) {
  const Chain chain = make_chain(c);
  const Frequency f = chain.freq();
  const Grid grid = make_grid(c, chain.domain());
  std::vector<int> levels = c.states;
  if (levels.empty()) {
    for (const SpectrumEntry& e : spectrum(chain, c.decay_radius, c.levels)) {
      if (e.status != LevelStatus::Deleted && levels.size() < 3) levels.push_back(e.index);
    }
  }
  std::vector<Dataset> out;
  for (int n : levels) {
    const std::string name = label + level_suffix(n);
    try {
      if (n < 0 && -n > chain.order()) {
        throw Error(ErrorKind::InvalidArgument,
                    "created level " + std::to_string(n) + " needs order >= " + std::to_string(-n));
      }
      if (chain.domain() == Domain::HalfLine && n >= 0 && n % 2 == 0) {
        throw Error(ErrorKind::InvalidArgument,
                    "level " + std::to_string(n) + " is not in the half-line spectrum");
      }
      if (n >= 0 && chain.is_deleted(n)) {
        throw Error(ErrorKind::DeletedLevel,
                    "level " + std::to_string(n) + " is annihilated by the transformation");
      }
      auto psi = [&chain, n](double x) {
        return n < 0 ? created_state(chain, -n, x) : transformed_state(chain, n, x);
      };
      Dataset d = density_dataset(name, grid, chain.domain(), psi);
      d.meta["level"] = n;
      d.meta["hamiltonian"] = "H_k";
      out.push_back(std::move(d));
      if (c.compare_h0 && n >= 0) {
        Dataset h0 = density_dataset(label + "_h0" + level_suffix(n), grid, chain.domain(), [&f, n](double x) {
          return eigenfunction_jet(n, f, x).u;
        });
        h0.meta["level"] = n;
        h0.meta["hamiltonian"] = "H_0";
        out.push_back(std::move(h0));
      }
    } catch (const Error& e) {
      errors.push_back(name + ": " + e.what());
    }
  }
  return out;
}

json report_json(const ResidualReport& r, double tolerance) {
  return {{"scheme", r.scheme == DerivativeScheme::Analytic ? "analytic" : "finite_difference"},
          {"max_residual", num(r.max_residual)},
          {"tolerance", tolerance},
          {"certified", r.max_residual < tolerance},
          {"points", r.x.size()},
          {"excluded", r.excluded},
          {"singular", r.singular},
          {"zero_count", r.zero_count}};
}

Dataset piv_dataset(const std::string& label, const RunConfig& c, bool& certified) {
  const Chain chain = make_chain(c);
  const Grid grid = make_grid(c, chain.domain());
  const PivTolerances tol = piv_tolerances(c);
  const PivCandidate cand =
      c.order == 1 ? g_first_order(chain, c.role) : g_higher_order(chain, grid, tol);
  Dataset d{label,
            c.parametric ? std::vector<std::string>{"x", "re_g", "im_g"}
                         : std::vector<std::string>{"x", "re", "im"},
            {},
            {}};
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const double x = grid.x(i);
    try {
      const cplx g = cand.g(x).g;
      d.rows.push_back({x, num(g.real()), num(g.imag())});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularPoint && e.kind() != ErrorKind::ZeroCrossing) throw;
      d.rows.push_back({x, json(), json()});
    }
  }
  const ResidualReport ra = piv_residual(cand, grid, DerivativeScheme::Analytic, tol);
  const ResidualReport rf = piv_residual(cand, grid, DerivativeScheme::FiniteDifference, tol);
  const bool ok = ra.max_residual < tol.analytic && rf.max_residual < tol.finite_difference;
  certified = certified && ok;
  d.meta["role"] = cand.role;
  d.meta["a"] = format_complex(cand.a);
  d.meta["b"] = format_complex(cand.b);
  d.meta["energies"] = {format_complex(cand.energies[0]), format_complex(cand.energies[1]),
                        format_complex(cand.energies[2])};
  d.meta["certified"] = ok;
  d.meta["reports"] = {report_json(ra, tol.analytic), report_json(rf, tol.finite_difference)};
  if (c.parametric) {
    json decay = json::object();
    for (double X : {6.0, 8.0, 10.0}) decay[format_real(X)] = num(asymptotic_decay(cand, X));
    d.meta["asymptotic_decay"] = decay;
  }
  return d;
}

// ----------------------------------------------------------------- presets

RunConfig preset_base(const RunConfig& user) {
  RunConfig c = user;
  c.theta_text = "pi/6";
  c.epsilon_text.clear();
  c.nu_text = "0";
  c.order = 1;
  c.states.clear();
  c.compare_h0 = false;
  c.parametric = false;
  return c;
}

struct PresetInfo {
  std::string command;
  std::vector<Job> jobs;
};

PresetInfo preset_jobs(const std::string& name, const RunConfig& user) {
  const RunConfig base = preset_base(user);
  PresetInfo info;
  auto job = [&](const std::string& suffix, const std::function<void(RunConfig&)>& setup) {
    RunConfig c = base;
    setup(c);
    info.jobs.push_back({name + suffix, c});
  };
  const std::vector<std::string> piv_eps{"0.01+1i", "1+1i", "2+1i"};
  if (name == "fig3" || name == "fig5") {
    info.command = "potential";
    const std::string kind = name == "fig3" ? "bound-even:" : "bound-odd:";
    for (int j : {1, 2}) {
      job("_j" + std::to_string(j), [&](RunConfig& c) { c.seed_text = kind + std::to_string(j); });
    }
  } else if (name == "fig4" || name == "fig6") {
    info.command = "states";
    job("", [&](RunConfig& c) {
      c.seed_text = name == "fig4" ? "bound-even:1" : "bound-odd:1";
      c.states = name == "fig4" ? std::vector<int>{0, 1, 3} : std::vector<int>{1, 5, 7};
      c.compare_h0 = true;
    });
  } else if (name == "fig7" || name == "fig9") {
    info.command = "potential";
    const std::vector<std::string> nus = name == "fig7"
                                             ? std::vector<std::string>{"-0.6+0.3i", "0.3i", "0.6+0.3i"}
                                             : std::vector<std::string>{"0.1+0.4i", "0.5+0.4i", "0.9+0.4i"};
    for (std::size_t i = 0; i < nus.size(); ++i) {
      job("_" + std::to_string(i + 1), [&](RunConfig& c) {
        c.seed_text = "ams";
        c.nu_text = nus[i];
        c.order = name == "fig7" ? 1 : 2;
      });
    }
  } else if (name == "fig8" || name == "fig10") {
    info.command = "states";
    job("", [&](RunConfig& c) {
      c.seed_text = "ams";
      c.nu_text = name == "fig8" ? "0.6+0.3i" : "0.9+0.4i";
      c.order = name == "fig8" ? 1 : 2;
      c.states = name == "fig8" ? std::vector<int>{-1, 0, 1, 2} : std::vector<int>{-2, -1, 0, 1, 2};
      c.compare_h0 = true;
    });
  } else if (name == "fig11" || name == "fig12" || name == "fig13") {
    info.command = "piv";
    for (std::size_t i = 0; i < piv_eps.size(); ++i) {
      job("_" + std::to_string(i + 1), [&](RunConfig& c) {
        c.seed_text = "general";
        c.epsilon_text = piv_eps[i];
        c.nu_text = "0.8+0.5i";
        c.order = name == "fig13" ? 2 : 1;
        c.role = 2;
        c.parametric = name == "fig12";
      });
    }
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown preset '" + name + "' (fig3 .. fig13)");
  }
  return info;
}

// ------------------------------------------------------------------ output

void write_csv(std::ostream& os, const Dataset& d) {
  for (std::size_t i = 0; i < d.columns.size(); ++i) os << (i ? "," : "") << d.columns[i];
  os << '\n';
  for (const auto& row : d.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
}

json dataset_json(const Dataset& d) {
  return {{"name", d.name}, {"columns", d.columns}, {"rows", d.rows}, {"meta", d.meta}};
}

void emit(const std::string& command, const std::vector<std::pair<Dataset, RunConfig>>& sets,
          const RunConfig& user, std::ostream& out) {
  if (user.out.empty()) {
    if (user.format == "json") {
      json doc{{"version", kVersion}, {"command", command}, {"datasets", json::array()}};
      for (const auto& [d, c] : sets) {
        json entry = dataset_json(d);
        entry["config"] = config_json(c);
        doc["datasets"].push_back(std::move(entry));
      }
      out << doc.dump(2) << '\n';
      return;
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (sets.size() > 1) out << (i ? "\n" : "") << "# " << sets[i].first.name << '\n';
      write_csv(out, sets[i].first);
    }
    return;
  }
  namespace fs = std::filesystem;
  const fs::path dir(user.out);
  fs::create_directories(dir);
  for (const auto& [d, c] : sets) {
    const std::string file = d.name + (user.format == "json" ? ".json" : ".csv");
    {
      std::ofstream os(dir / file);
      if (user.format == "json") {
        os << dataset_json(d).dump(2) << '\n';
      } else {
        write_csv(os, d);
      }
      if (!os) throw Error(ErrorKind::InvalidArgument, "cannot write " + (dir / file).string());
    }
    json manifest{{"version", kVersion},
                  {"command", command},
                  {"dataset", d.name},
                  {"file", file},
                  {"columns", d.columns},
                  {"rows", d.rows.size()},
                  {"config", config_json(c)}};
    for (const auto& [key, value] : d.meta.items()) manifest[key] = value;
    std::ofstream ms(dir / (d.name + ".manifest.json"));
    ms << manifest.dump(2) << '\n';
    out << (dir / file).string() << '\n';
  }
}

int run_verify_command(const RunConfig& c, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<CheckResult> results = run_verify({c.all, 20240521});
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  if (c.format == "json") {
    json doc{{"version", kVersion}, {"all", c.all}, {"seconds", seconds},
             {"passed", results.size() - failed}, {"failed", failed}, {"checks", json::array()}};
    for (const auto& r : results) {
      doc["checks"].push_back({{"module", r.module},
                               {"name", r.name},
                               {"status", r.passed ? (r.negative_control ? "expected-fail" : "pass")
                                                   : "fail"},
                               {"measured", num(r.measured)},
                               {"threshold", r.threshold},
                               {"negative_control", r.negative_control},
                               {"seconds", r.seconds},
                               {"detail", r.detail}});
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "module,name,status,measured,threshold,seconds,detail\n";
    for (const auto& r : results) {
      const char* status = r.passed ? (r.negative_control ? "expected-fail" : "pass") : "fail";
      out << r.module << ',' << r.name << ',' << status << ',' << format_real(r.measured) << ','
          << format_real(r.threshold) << ',' << format_real(r.seconds) << ','
          << csv_quote(r.detail) << '\n';
    }
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.2f", seconds);
    out << "# " << results.size() - failed << " passed, " << failed << " failed in " << elapsed
        << " s\n";
  }
  return failed == 0 ? kSuccess : kCertification;
}

void add_common(CLI::App* sub, RunConfig& c, std::string& preset) {
  sub->add_option("--theta", c.theta_text, "oscillator phase, e.g. 0.5 or pi/6")
      ->capture_default_str();
  sub->add_option("--epsilon", c.epsilon_text, "factorization energy RE+IMi (general seed)");
  sub->add_option("--nu", c.nu_text, "seed mixing parameter RE+IMi, |nu| < 1")
      ->capture_default_str();
  sub->add_option("--order", c.order, "transformation order k (1..5)")->capture_default_str();
  sub->add_option("--seed", c.seed_text, "general | ams | bound-even:J | bound-odd:J")
      ->capture_default_str();
  sub->add_option_function<std::string>(
      "--grid", [&c](const std::string& s) { c.grid = parse_grid(s); }, "MIN:MAX:N");
  sub->add_option("--preset", preset, "fig3 .. fig13");
  sub->add_option("--format", c.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", c.out, "output directory (stdout when omitted)");
  sub->add_option("--delta-w", c.delta_w, "relative Wronskian zero threshold")
      ->capture_default_str();
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  std::stringstream ss(text);
  std::string a, b, n;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, n) ||
      n.find(':') != std::string::npos) {
    throw Error(ErrorKind::InvalidArgument, "--grid expects MIN:MAX:N, got '" + text + "'");
  }
  try {
    std::size_t used = 0;
    g.points = std::stoi(n, &used);
    if (used != n.size()) throw std::invalid_argument(n);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "bad point count in --grid '" + text + "'");
  }
  g.min = parse_complex(a).real();
  g.max = parse_complex(b).real();
  if (parse_complex(a).imag() != 0.0 || parse_complex(b).imag() != 0.0) {
    throw Error(ErrorKind::InvalidArgument, "grid bounds must be real");
  }
  return g;
}

void resolve(RunConfig& c) {
  c.theta = parse_angle(c.theta_text);
  Frequency::from_phase(c.theta);
  parse_seed(c);
  c.nu = parse_complex(c.nu_text);
  if (c.kind == SeedKind::General) {
    if (c.epsilon_text.empty()) {
      throw Error(ErrorKind::InvalidArgument, "--epsilon is required for the general seed");
    }
    c.epsilon = parse_complex(c.epsilon_text);
  }
  if ((c.kind == SeedKind::General || c.kind == SeedKind::AMS) && !(std::abs(c.nu) < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "|nu| must be below 1");
  }
  if (c.order < 1 || c.order > Chain::kMaxOrder) {
    throw Error(ErrorKind::InvalidArgument, "--order must be between 1 and 5");
  }
  if (c.grid) {
    if (c.grid->points < 16) throw Error(ErrorKind::InvalidArgument, "grids need at least 16 points");
    if (!(c.grid->min < c.grid->max)) throw Error(ErrorKind::InvalidArgument, "grid needs MIN < MAX");
    if (c.kind == SeedKind::BoundOdd && !(c.grid->min > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "odd bound seeds live on x > 0; use MIN > 0");
    }
  }
  if (c.levels < 1) throw Error(ErrorKind::InvalidArgument, "--levels must be positive");
  if (c.role < 1 || c.role > 3) throw Error(ErrorKind::InvalidArgument, "--role must be 1, 2 or 3");
  for (double t : {c.delta_w, c.delta_g, c.tol_analytic, c.tol_fd, c.fd_step, c.decay_radius}) {
    if (!(t > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerances must be positive");
  }
  seed_spec(c).validate();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Darboux transformations of the complex oscillator and Painleve IV solutions",
               "cosc"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunConfig cfg;
  std::string preset;

  auto* sp = app.add_subcommand("spectrum", "list retained, deleted and created levels");
  add_common(sp, cfg, preset);
  sp->add_option("--levels", cfg.levels, "number of H_0 levels to list")->capture_default_str();
  sp->add_option("--decay-radius", cfg.decay_radius, "decay test radius for created levels")
      ->capture_default_str();

  auto* pot = app.add_subcommand("potential", "partner potential V_k on a grid");
  add_common(pot, cfg, preset);

  auto* st = app.add_subcommand("states", "normalized densities of H_k eigenstates");
  add_common(st, cfg, preset);
  st->add_option("--n", cfg.states, "levels, comma separated; -j selects the created level eps_j")
      ->delimiter(',')
      ->allow_extra_args(false);
  st->add_flag("--compare-h0", cfg.compare_h0, "also write the H_0 densities");

  auto* piv = app.add_subcommand("piv", "Painleve IV solution with residual certificate");
  add_common(piv, cfg, preset);
  piv->add_option("--role", cfg.role, "extremal state defining g (k = 1)")->capture_default_str();
  piv->add_flag("--parametric", cfg.parametric, "write x,re_g,im_g columns and decay metrics");
  piv->add_option("--delta-g", cfg.delta_g, "exclusion radius around zeros of g")
      ->capture_default_str();
  piv->add_option("--tol-analytic", cfg.tol_analytic, "max scaled residual, analytic derivatives")->capture_default_str();
  piv->add_option("--tol-fd", cfg.tol_fd, "max scaled residual, finite differences")->capture_default_str();
  piv->add_option("--fd-step", cfg.fd_step, "finite-difference step h")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "run the invariant suite");
  ver->add_flag("--all", cfg.all, "include the harmonic-limit block");
  ver->add_option("--format", cfg.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }

  try {
    if (ver->parsed()) return run_verify_command(cfg, out);

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    std::vector<Job> jobs;
    if (!preset.empty()) {
      PresetInfo info = preset_jobs(preset, cfg);
      if (info.command != command) {
        throw Error(ErrorKind::InvalidArgument,
                    "preset " + preset + " belongs to the '" + info.command + "' command");
      }
      jobs = std::move(info.jobs);
    } else {
      jobs.push_back({command, cfg});
    }
    for (Job& job : jobs) resolve(job.config);

    std::vector<std::pair<Dataset, RunConfig>> sets;
    std::vector<std::string> errors;
    bool certified = true;
    for (const Job& job : jobs) {
      if (command == "spectrum") {
        sets.emplace_back(spectrum_dataset(job.label, job.config), job.config);
      } else if (command == "potential") {
        sets.emplace_back(potential_dataset(job.label, job.config), job.config);
      } else if (command == "states") {
        for (Dataset& d : states_datasets(job.label, job.config, errors)) {
          sets.emplace_back(std::move(d), job.config);
        }
      } else {
        sets.emplace_back(piv_dataset(job.label, job.config, certified), job.config);
      }
    }
    emit(command, sets, cfg, out);
    for (const std::string& e : errors) err << "error: " << e << '\n';
    if (!errors.empty()) return kValidation;
    if (!certified) {
      err << "error: residual certificate failed (see the reports in the output)\n";
      return kCertification;
    }
    return kSuccess;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::NoValidAssignment ? kCertification : kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
}

}  // namespace cosc::cli
