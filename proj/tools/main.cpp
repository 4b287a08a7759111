// Command-line surface: basis evaluation, Gram/norm/duality verification
// reports, Bergman-projection error tables for the monogenic exponential,
// and machine-readable CSV/JSON output.
//
// Exit codes: 0 ok, 2 invalid index, 3 domain/point error, 4 tolerance
// breach.  CONTRAKERNEL_THREADS caps the worker count.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "contrakernel/bergman.hpp"
#include "contrakernel/monogenic.hpp"

using json = nlohmann::ordered_json;
using namespace contrakernel;

namespace {

constexpr int kExitInvalidIndex = 2;
constexpr int kExitDomainError = 3;
constexpr int kExitTolerance = 4;

std::string fmt(double v, int sig = 17) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", sig, v);
  return buf;
}

struct Output {
  std::string format = "csv";  // csv | json
  std::string path;            // empty = stdout

  void write(const std::string& csv_text, const json& j) const {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::runtime_error("cannot open output file " + path);
      os = &file;
    }
    if (format == "json")
      *os << j.dump(2) << "\n";
    else
      *os << csv_text;
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format (csv or json)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", out.path, "Write output to this file instead of stdout");
}

Domain parse_domain(const std::string& s) {
  if (s == "interior") return Domain::interior;
  if (s == "exterior") return Domain::exterior;
  throw CLI::ValidationError("--domain", "must be interior or exterior");
}

Parity parse_parity(const std::string& s) {
  if (s == "plus" || s == "+") return Parity::plus;
  if (s == "minus" || s == "-") return Parity::minus;
  throw CLI::ValidationError("--parity", "must be plus or minus");
}

Family parse_family(const std::string& s) {
  if (s == "U") return Family::U;
  if (s == "X") return Family::X;
  if (s == "Y") return Family::Y;
  if (s == "Yt" || s == "Ytilde") return Family::Ytilde;
  if (s == "Z") return Family::Z;
  throw CLI::ValidationError("--kind", "must be one of U, X, Y, Yt, Z");
}

Point3 parse_point(const std::string& s) {
  Point3 p;
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> p.x0 >> c1 >> p.x1 >> c2 >> p.x2) || c1 != ',' || c2 != ',')
    throw CLI::ValidationError("--point", "expected x0,x1,x2");
  return p;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

struct RuleSizes {
  int radial = 16, polar = 16, azimuthal = 64;
};

void add_rule_option(CLI::App* cmd, RuleSizes& sizes,
                     const std::string& help = "Quadrature sizes R,T,A (default 16,16,64)") {
  cmd->add_option_function<std::string>(
      "--rule",
      [&sizes](const std::string& s) {
        const auto v = parse_int_list(s);
        if (v.size() != 3) throw CLI::ValidationError("--rule", "expected R,T,A");
        sizes = {v[0], v[1], v[2]};
      },
      help);
}

json point_json(const Point3& p) {
  return json{{"x0", p.x0},   {"x1", p.x1},       {"x2", p.x2},
              {"rho", p.rho()}, {"theta", p.theta()}, {"phi", p.phi()}};
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string kind = "U", domain, parity = "plus", point;
  int n = 0, m = 0;
  Output out;
};

int run_eval(const EvalArgs& a) {
  const Family family = parse_family(a.kind);
  const Point3 p = parse_point(a.point);
  Domain d = a.domain.empty() ? domain_of_degree(a.n) : parse_domain(a.domain);
  const BasisIndex idx{family, d, a.n, a.m, parse_parity(a.parity)};

  ReducedQuaternion v;
  switch (family) {
    case Family::U: v = {eval_U(idx, p), 0.0, 0.0}; break;
    case Family::X: v = eval_X(idx, p); break;
    case Family::Y:
    case Family::Ytilde: v = eval_Y(idx, p); break;
    case Family::Z: v = eval_Z(idx, p); break;
  }

  json j{{"index",
          {{"family", to_string(family)},
           {"domain", to_string(d)},
           {"n", a.n},
           {"m", a.m},
           {"parity", to_string(idx.parity)}}},
         {"point", point_json(p)},
         {"value", {{"a0", v.a0}, {"a1", v.a1}, {"a2", v.a2}}}};
  std::ostringstream csv;
  csv << "family,domain,n,m,parity,x0,x1,x2,rho,theta,phi,a0,a1,a2\n"
      << to_string(family) << "," << to_string(d) << "," << a.n << "," << a.m << ","
      << to_string(idx.parity) << "," << fmt(p.x0) << "," << fmt(p.x1) << "," << fmt(p.x2) << ","
      << fmt(p.rho()) << "," << fmt(p.theta()) << "," << fmt(p.phi()) << "," << fmt(v.a0) << ","
      << fmt(v.a1) << "," << fmt(v.a2) << "\n";
  a.out.write(csv.str(), j);
  return 0;
}

// ---------------------------------------------------------------- exp

struct ExpArgs {
  std::string variant = "E", point, grid;
  double rho = 0.5;
  Output out;
};

int run_exp(const ExpArgs& a) {
  const bool star = a.variant == "Estar";
  if (!star && a.variant != "E")
    throw CLI::ValidationError("--variant", "must be E or Estar");
  auto value = [&](const Point3& p) {
    return star ? exp_monogenic_star(p) : exp_monogenic(p);
  };

  if (!a.grid.empty()) {
    const auto g = parse_int_list(a.grid);
    if (g.size() != 2) throw CLI::ValidationError("--grid", "expected T,P");
    std::ostringstream csv;
    csv << "theta,phi,a0,a1,a2,vec_abs\n";
    json rows = json::array();
    for (int i = 0; i < g[0]; ++i) {
      const double theta = (i + 0.5) * std::numbers::pi / g[0];
      for (int k = 0; k < g[1]; ++k) {
        const double phi = (k + 0.5) * 2.0 * std::numbers::pi / g[1];
        const ReducedQuaternion v = value(Point3::from_spherical(a.rho, theta, phi));
        const double mag = vec(v).norm();
        csv << fmt(theta) << "," << fmt(phi) << "," << fmt(v.a0) << "," << fmt(v.a1) << ","
            << fmt(v.a2) << "," << fmt(mag) << "\n";
        rows.push_back({{"theta", theta}, {"phi", phi}, {"a0", v.a0}, {"a1", v.a1},
                        {"a2", v.a2}, {"vec_abs", mag}});
      }
    }
    a.out.write(csv.str(), json{{"variant", a.variant}, {"rho", a.rho}, {"samples", rows}});
    return 0;
  }

  const Point3 p = parse_point(a.point);
  const ReducedQuaternion v = value(p);
  std::ostringstream csv;
  csv << "variant,x0,x1,x2,a0,a1,a2\n"
      << a.variant << "," << fmt(p.x0) << "," << fmt(p.x1) << "," << fmt(p.x2) << ","
      << fmt(v.a0) << "," << fmt(v.a1) << "," << fmt(v.a2) << "\n";
  a.out.write(csv.str(), json{{"variant", a.variant},
                              {"point", point_json(p)},
                              {"value", {{"a0", v.a0}, {"a1", v.a1}, {"a2", v.a2}}}});
  return 0;
}

// ---------------------------------------------------------------- norms

struct NormsArgs {
  std::string domain = "interior";
  int max_degree = 6;
  double tol = 1e-8;
  RuleSizes rule;
  Output out;
};

int run_norms(const NormsArgs& a) {
  const Domain d = parse_domain(a.domain);
  const QuadratureRule rule = QuadratureRule::build(d, a.rule.radial, a.rule.polar, a.rule.azimuthal);

  std::vector<GramEntry> entries;
  std::vector<std::string> labels;
  std::vector<double> closed;
  for (const auto& i : enumerate_family(Family::U, d, a.max_degree)) {
    entries.push_back({i, false, false});
    labels.push_back("U");
    closed.push_back(norm_U(d, i.n, i.m));
  }
  for (const auto& i : enumerate_family(Family::X, d, a.max_degree)) {
    entries.push_back({i, false, false});
    labels.push_back("X");
    closed.push_back(norm_X(d, i.n, i.m));
    if (norm_vec_X(d, i.n, i.m) > 0.0) {
      entries.push_back({i, false, true});
      labels.push_back("VecX");
      closed.push_back(norm_vec_X(d, i.n, i.m));
    }
  }
  for (const auto& i : enumerate_family(Family::Z, d, a.max_degree)) {
    entries.push_back({i, false, false});
    labels.push_back("Z");
    closed.push_back(norm_Z(d, i.n, i.m));
  }

  const std::vector<double> quad = quadrature_norms(entries, rule);
  double worst = 0.0;
  std::ostringstream csv;
  csv << "family,n,m,parity,closed,quadrature,rel_dev\n";
  json rows = json::array();
  for (size_t k = 0; k < entries.size(); ++k) {
    const auto& i = entries[k].index;
    const double dev = std::abs(quad[k] - closed[k]) / closed[k];
    worst = std::max(worst, dev);
    csv << labels[k] << "," << i.n << "," << i.m << "," << to_string(i.parity) << ","
        << fmt(closed[k]) << "," << fmt(quad[k]) << "," << fmt(dev) << "\n";
    rows.push_back({{"family", labels[k]}, {"n", i.n}, {"m", i.m},
                    {"parity", to_string(i.parity)}, {"closed", closed[k]},
                    {"quadrature", quad[k]}, {"rel_dev", dev}});
  }
  csv << "max_rel_dev," << fmt(worst) << ",,,,,\n";
  a.out.write(csv.str(), json{{"domain", a.domain}, {"rows", rows}, {"max_rel_dev", worst},
                              {"tol", a.tol}});
  return worst <= a.tol ? 0 : kExitTolerance;
}

// ---------------------------------------------------------------- gram

struct GramArgs {
  std::string family = "U", domain = "interior";
  int max_degree = 4;
  double tol = 1e-8;
  RuleSizes rule;
  Output out;
};

int run_gram(const GramArgs& a) {
  const Domain d = parse_domain(a.domain);
  const QuadratureRule rule = QuadratureRule::build(d, a.rule.radial, a.rule.polar, a.rule.azimuthal);

  if (a.family == "mixed") {
    // the nonzero <conj X, X> diagonal against the closed form
    double worst = 0.0;
    std::ostringstream csv;
    csv << "n,m,closed,quadrature,rel_dev\n";
    json rows = json::array();
    for (const auto& i : enumerate_family(Family::X, d, a.max_degree)) {
      if (i.parity != Parity::plus) continue;
      const double cf = mixed_inner_XXbar(d, i.n, i.m);
      const double q = inner_basis({i, true, false}, {i, false, false}, rule);
      const double scale = std::max(std::abs(cf), norm_X(d, i.n, i.m));
      const double dev = std::abs(q - cf) / scale;
      worst = std::max(worst, dev);
      csv << i.n << "," << i.m << "," << fmt(cf) << "," << fmt(q) << "," << fmt(dev) << "\n";
      rows.push_back({{"n", i.n}, {"m", i.m}, {"closed", cf}, {"quadrature", q}, {"rel_dev", dev}});
    }
    csv << "max_rel_dev," << fmt(worst) << ",,,\n";
    a.out.write(csv.str(), json{{"domain", a.domain}, {"family", "mixed"}, {"rows", rows},
                                {"max_rel_dev", worst}, {"tol", a.tol}});
    return worst <= a.tol ? 0 : kExitTolerance;
  }

  std::vector<GramEntry> entries;
  size_t zcount = 0;
  if (a.family == "U" || a.family == "X" || a.family == "Z") {
    for (const auto& i : enumerate_family(parse_family(a.family), d, a.max_degree))
      entries.push_back({i, false, false});
  } else if (a.family == "ambigenic") {
    for (const auto& i : enumerate_family(Family::Y, d, a.max_degree))
      entries.push_back({i, false, false});
    for (const auto& i : enumerate_family(Family::Ytilde, d, a.max_degree))
      entries.push_back({i, false, false});
  } else if (a.family == "cross") {
    for (const auto& i : enumerate_family(Family::Z, d, a.max_degree))
      entries.push_back({i, false, false});
    zcount = entries.size();
    for (const auto& i : enumerate_family(Family::X, d, a.max_degree)) {
      entries.push_back({i, false, false});
      entries.push_back({i, true, false});
    }
  } else {
    throw CLI::ValidationError("--family", "must be U, X, ambigenic, Z, cross or mixed");
  }

  const GramMatrix g = gram(entries, rule);
  double worst = 0.0;
  if (a.family == "cross") {
    for (size_t i = 0; i < zcount; ++i)
      for (size_t j = zcount; j < entries.size(); ++j) {
        const double den = std::sqrt(g.at(static_cast<int>(i), static_cast<int>(i)) *
                                     g.at(static_cast<int>(j), static_cast<int>(j)));
        worst = std::max(worst, std::abs(g.at(static_cast<int>(i), static_cast<int>(j))) / den);
      }
  } else {
    worst = g.max_offdiag_ratio();
  }

  std::ostringstream csv;
  csv << "family,domain,max_degree,size,max_offdiag_ratio\n"
      << a.family << "," << a.domain << "," << a.max_degree << "," << entries.size() << ","
      << fmt(worst) << "\n";
  a.out.write(csv.str(), json{{"family", a.family}, {"domain", a.domain},
                              {"max_degree", a.max_degree}, {"size", entries.size()},
                              {"max_offdiag_ratio", worst}, {"tol", a.tol}});
  return worst <= a.tol ? 0 : kExitTolerance;
}

// ---------------------------------------------------------------- duality

struct DualityArgs {
  int max_degree = 5;
  double tol = 1e-12;
  int points = 20;
  unsigned seed = 20240801;
  Output out;
};

int run_duality(const DualityArgs& a) {
  std::mt19937_64 rng(a.seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto random_point = [&](Domain d) {
    const double rho = d == Domain::interior ? 0.15 + 0.75 * u01(rng) : 1.1 + 1.4 * u01(rng);
    return Point3::from_spherical(rho, std::acos(2.0 * u01(rng) - 1.0),
                                  2.0 * std::numbers::pi * u01(rng));
  };

  double worst = 0.0;
  std::ostringstream csv;
  csv << "n,m,parity,max_rel_residual\n";
  json rows = json::array();
  for (int n = -a.max_degree; n <= a.max_degree; ++n) {
    if (n == 0 || n == -1) continue;
    const Domain zd = domain_of_degree(n);
    const int mtop = zd == Domain::interior ? n - 1 : -n;
    for (int m = 0; m <= mtop; ++m)
      for (Parity par : {Parity::plus, Parity::minus}) {
        if (m == 0 && par == Parity::minus) continue;
        const BasisIndex zi{Family::Z, zd, n, m, par};
        double local = 0.0;
        for (int k = 0; k < a.points; ++k) {
          const Point3 p = random_point(zd);
          const Vec2 r = duality_residual(n, m, par, p);
          const double ref = std::max(vec(eval_Z(zi, p)).norm(), 1e-300);
          local = std::max(local, r.norm() / ref);
        }
        worst = std::max(worst, local);
        csv << n << "," << m << "," << to_string(par) << "," << fmt(local) << "\n";
        rows.push_back({{"n", n}, {"m", m}, {"parity", to_string(par)}, {"max_rel_residual", local}});
      }
  }
  csv << "max_rel_residual," << fmt(worst) << ",,\n";
  a.out.write(csv.str(), json{{"rows", rows}, {"max_rel_residual", worst}, {"tol", a.tol}});
  return worst <= a.tol ? 0 : kExitTolerance;
}

// ---------------------------------------------------------------- bergman-table

struct TableArgs {
  std::string domain = "interior", op = "M", target = "exp", metric = "pointwise";
  std::string degree_counts = "5,10,15,20";
  std::string rhos = "0.2,0.4,0.6,0.8";
  std::string grid = "30,60";
  RuleSizes rule{0, 0, 0};
  int precision = 3;
  bool emit_grid = false;
  Output out;
};

int run_table(const TableArgs& a) {
  if (a.target != "exp")
    throw CLI::ValidationError("--target", "only the monogenic exponential target is available");
  BergmanTableSpec spec;
  spec.domain = parse_domain(a.domain);
  if (a.op != "M" && a.op != "N") throw CLI::ValidationError("--operator", "must be M or N");
  spec.op = a.op == "M" ? 'M' : 'N';
  spec.degree_counts = parse_int_list(a.degree_counts);
  spec.rhos = parse_double_list(a.rhos);
  const auto g = parse_int_list(a.grid);
  if (g.size() != 2) throw CLI::ValidationError("--grid", "expected T,P");
  spec.grid_theta = g[0];
  spec.grid_phi = g[1];
  spec.radial = a.rule.radial;
  spec.polar = a.rule.polar;
  spec.azimuthal = a.rule.azimuthal;
  spec.metric = a.metric == "sup" ? TableMetric::sup_ratio : TableMetric::pointwise_relative;

  if (a.emit_grid) {
    if (spec.degree_counts.size() != 1 || spec.rhos.size() != 1)
      throw CLI::ValidationError("--emit-grid", "requires a single --N and a single --rho");
    const auto samples = bergman_grid(spec, spec.degree_counts[0], spec.rhos[0]);
    std::ostringstream csv;
    csv << "theta,phi,v1,v2\n";
    json rows = json::array();
    for (const auto& s : samples) {
      csv << fmt(s.theta) << "," << fmt(s.phi) << "," << fmt(s.v1) << "," << fmt(s.v2) << "\n";
      rows.push_back({{"theta", s.theta}, {"phi", s.phi}, {"v1", s.v1}, {"v2", s.v2}});
    }
    a.out.write(csv.str(), json{{"domain", a.domain}, {"operator", a.op},
                                {"N", spec.degree_counts[0]}, {"rho", spec.rhos[0]},
                                {"samples", rows}});
    return 0;
  }

  const auto table = bergman_error_table(spec);
  std::ostringstream csv;
  csv << "rho";
  for (int n : spec.degree_counts) csv << ",N=" << n;
  csv << "\n";
  json rows = json::array();
  for (size_t i = 0; i < spec.rhos.size(); ++i) {
    csv << fmt(spec.rhos[i], a.precision);
    json row{{"rho", spec.rhos[i]}};
    for (size_t k = 0; k < spec.degree_counts.size(); ++k) {
      csv << "," << fmt(table[i][k], a.precision);
      row["N=" + std::to_string(spec.degree_counts[k])] = table[i][k];
    }
    csv << "\n";
    rows.push_back(row);
  }
  a.out.write(csv.str(), json{{"domain", a.domain}, {"operator", a.op}, {"target", a.target},
                              {"metric", a.metric}, {"rows", rows}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Orthogonal function systems on the ball (harmonic, monogenic, ambigenic,\n"
      "contragenic) with truncated Bergman projections and quadrature checks.\n"
      "Subcommand defaults reproduce the acceptance suite."};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one basis function at a point");
  eval_cmd->add_option("--kind", eval_args.kind, "Family: U, X, Y, Yt or Z")->required();
  eval_cmd->add_option("--domain", eval_args.domain, "interior or exterior (default: sign of n)");
  eval_cmd->add_option("--n", eval_args.n, "Degree")->required();
  eval_cmd->add_option("--m", eval_args.m, "Order")->required();
  eval_cmd->add_option("--parity", eval_args.parity, "plus or minus");
  eval_cmd->add_option("--point", eval_args.point, "Point x0,x1,x2")->required();
  add_output_flags(eval_cmd, eval_args.out);

  ExpArgs exp_args;
  auto* exp_cmd = app.add_subcommand("exp", "Evaluate the monogenic exponential");
  exp_cmd->add_option("--variant", exp_args.variant, "E or Estar");
  exp_cmd->add_option("--point", exp_args.point, "Point x0,x1,x2");
  exp_cmd->add_option("--grid", exp_args.grid, "Sample a theta,phi grid instead (T,P)");
  exp_cmd->add_option("--rho", exp_args.rho, "Sphere radius for --grid");
  add_output_flags(exp_cmd, exp_args.out);

  NormsArgs norms_args;
  auto* norms_cmd = app.add_subcommand("norms", "Closed-form norms against quadrature");
  norms_cmd->add_option("--domain", norms_args.domain, "interior or exterior")->required();
  norms_cmd->add_option("--max-degree", norms_args.max_degree, "Largest |degree|");
  norms_cmd->add_option("--tol", norms_args.tol, "Relative tolerance gate");
  add_rule_option(norms_cmd, norms_args.rule);
  add_output_flags(norms_cmd, norms_args.out);

  GramArgs gram_args;
  auto* gram_cmd = app.add_subcommand("gram", "Orthogonality reports");
  gram_cmd->add_option("--family", gram_args.family,
                       "U, X, ambigenic, Z, cross (Z vs X and conj X) or mixed (<conj X, X>)");
  gram_cmd->add_option("--domain", gram_args.domain, "interior or exterior")->required();
  gram_cmd->add_option("--max-degree", gram_args.max_degree, "Largest |degree|");
  gram_cmd->add_option("--tol", gram_args.tol, "Tolerance gate");
  add_rule_option(gram_cmd, gram_args.rule);
  add_output_flags(gram_cmd, gram_args.out);

  DualityArgs duality_args;
  auto* duality_cmd = app.add_subcommand("duality", "Monogenic-contragenic duality residuals");
  duality_cmd->add_option("--max-degree", duality_args.max_degree, "Largest |degree|");
  duality_cmd->add_option("--tol", duality_args.tol, "Relative tolerance gate");
  duality_cmd->add_option("--points", duality_args.points, "Random points per index");
  duality_cmd->add_option("--seed", duality_args.seed, "RNG seed");
  add_output_flags(duality_cmd, duality_args.out);

  TableArgs table_args;
  auto* table_cmd =
      app.add_subcommand("bergman-table", "Projection error tables for the exponential target");
  table_cmd->add_option("--domain", table_args.domain, "interior or exterior");
  table_cmd->add_option("--operator", table_args.op, "M (reproduction) or N (annihilation)");
  table_cmd->add_option("--target", table_args.target, "Target function (exp)");
  table_cmd->add_option("--N", table_args.degree_counts, "Comma list of truncation degrees");
  table_cmd->add_option("--rho", table_args.rhos, "Comma list of sphere radii");
  table_cmd->add_option("--grid", table_args.grid, "Evaluation grid T,P (default 30,60)");
  table_cmd->add_option("--metric", table_args.metric, "pointwise or sup")
      ->check(CLI::IsMember({"pointwise", "sup"}));
  add_rule_option(table_cmd, table_args.rule, "Quadrature sizes R,T,A (default: sized from the largest N)");
  table_cmd->add_option("--precision", table_args.precision, "CSV significant digits (default 3)");
  table_cmd->add_flag("--emit-grid", table_args.emit_grid,
                      "Emit theta,phi,value samples of the projected field");
  add_output_flags(table_cmd, table_args.out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval_cmd) return run_eval(eval_args);
    if (*exp_cmd) return run_exp(exp_args);
    if (*norms_cmd) return run_norms(norms_args);
    if (*gram_cmd) return run_gram(gram_args);
    if (*duality_cmd) return run_duality(duality_args);
    if (*table_cmd) return run_table(table_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidIndex;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
