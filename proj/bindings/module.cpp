// Python bindings for the main operations: basis evaluation, closed-form
// norms, index enumeration, quadrature inner products and Gram checks, and
// the truncated Bergman projections.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "contrakernel/bergman.hpp"
#include "contrakernel/monogenic.hpp"

namespace py = pybind11;
using namespace contrakernel;

namespace {

Domain domain_arg(const std::string& s) {
  if (s == "interior") return Domain::interior;
  if (s == "exterior") return Domain::exterior;
  throw std::invalid_argument("domain must be 'interior' or 'exterior'");
}

Parity parity_arg(const std::string& s) {
  if (s == "+" || s == "plus") return Parity::plus;
  if (s == "-" || s == "minus") return Parity::minus;
  throw std::invalid_argument("parity must be '+' or '-'");
}

Family family_arg(const std::string& s) {
  if (s == "U") return Family::U;
  if (s == "X") return Family::X;
  if (s == "Y") return Family::Y;
  if (s == "Yt") return Family::Ytilde;
  if (s == "Z") return Family::Z;
  throw std::invalid_argument("family must be one of 'U', 'X', 'Y', 'Yt', 'Z'");
}

Point3 point_arg(const std::tuple<double, double, double>& t) {
  return {std::get<0>(t), std::get<1>(t), std::get<2>(t)};
}

BasisIndex make_index(const std::string& family, const std::string& domain, int n, int m,
                      const std::string& parity) {
  return {family_arg(family), domain_arg(domain), n, m, parity_arg(parity)};
}

std::tuple<double, double, double> as_tuple(const ReducedQuaternion& q) {
  return {q.a0, q.a1, q.a2};
}

using PointTuple = std::tuple<double, double, double>;

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() =
      "Orthogonal function systems on the interior and exterior of the unit "
      "sphere, with truncated Bergman projections.";

  mod.def(
      "eval_u",
      [](const std::string& d, int n, int m, const std::string& par, PointTuple p) {
        return eval_U({Family::U, domain_arg(d), n, m, parity_arg(par)}, point_arg(p));
      },
      py::arg("domain"), py::arg("n"), py::arg("m"), py::arg("parity"), py::arg("point"),
      "Solid spherical harmonic U_{n,m} at a point.");

  mod.def(
      "eval_x",
      [](const std::string& d, int n, int m, const std::string& par, PointTuple p) {
        return as_tuple(eval_X({Family::X, domain_arg(d), n, m, parity_arg(par)}, point_arg(p)));
      },
      py::arg("domain"), py::arg("n"), py::arg("m"), py::arg("parity"), py::arg("point"),
      "Basic monogenic X_{n,m} as (a0, a1, a2).");

  mod.def(
      "eval_y",
      [](const std::string& fam, const std::string& d, int n, int m, const std::string& par,
         PointTuple p) {
        const Family f = family_arg(fam);
        return as_tuple(eval_Y({f, domain_arg(d), n, m, parity_arg(par)}, point_arg(p)));
      },
      py::arg("family"), py::arg("domain"), py::arg("n"), py::arg("m"), py::arg("parity"),
      py::arg("point"), "Ambigenic basis element ('Y' or 'Yt') as (a0, a1, a2).");

  mod.def(
      "eval_z",
      [](const std::string& d, int n, int m, const std::string& par, PointTuple p) {
        return as_tuple(eval_Z({Family::Z, domain_arg(d), n, m, parity_arg(par)}, point_arg(p)));
      },
      py::arg("domain"), py::arg("n"), py::arg("m"), py::arg("parity"), py::arg("point"),
      "Basic contragenic Z_{n,m} as (a0, a1, a2).");

  mod.def("legendre_p", &legendre_p, py::arg("n"), py::arg("m"), py::arg("t"));
  mod.def("legendre_p_neg_order", &legendre_p_neg_order, py::arg("n"), py::arg("m"), py::arg("t"));

  mod.def(
      "norm_u", [](const std::string& d, int n, int m) { return norm_U(domain_arg(d), n, m); },
      py::arg("domain"), py::arg("n"), py::arg("m"), "Squared L2 norm of U_{n,m}.");
  mod.def(
      "norm_x", [](const std::string& d, int n, int m) { return norm_X(domain_arg(d), n, m); },
      py::arg("domain"), py::arg("n"), py::arg("m"));
  mod.def(
      "norm_vec_x",
      [](const std::string& d, int n, int m) { return norm_vec_X(domain_arg(d), n, m); },
      py::arg("domain"), py::arg("n"), py::arg("m"));
  mod.def(
      "norm_z", [](const std::string& d, int n, int m) { return norm_Z(domain_arg(d), n, m); },
      py::arg("domain"), py::arg("n"), py::arg("m"));
  mod.def(
      "mixed_inner_xxbar",
      [](const std::string& d, int n, int m) { return mixed_inner_XXbar(domain_arg(d), n, m); },
      py::arg("domain"), py::arg("n"), py::arg("m"), "<conj X_{n,m}, X_{n,m}>.");
  mod.def("alpha", &alpha_coeff, py::arg("n"), py::arg("m"));
  mod.def("beta", &beta_coeff, py::arg("n"), py::arg("m"));

  mod.def(
      "index_range",
      [](const std::string& fam, const std::string& d, int n) {
        std::vector<std::pair<int, std::string>> out;
        for (auto [m, par] : index_range(family_arg(fam), domain_arg(d), n))
          out.emplace_back(m, to_string(par));
        return out;
      },
      py::arg("family"), py::arg("domain"), py::arg("n"),
      "All (m, parity) pairs of one family at one degree.");

  mod.def(
      "exp_monogenic",
      [](PointTuple p, bool star) {
        return as_tuple(star ? exp_monogenic_star(point_arg(p)) : exp_monogenic(point_arg(p)));
      },
      py::arg("point"), py::arg("star") = false, "Monogenic exponential as (a0, a1, a2).");

  mod.def(
      "monogenicity_residual",
      [](const std::string& fam, const std::string& d, int n, int m, const std::string& par,
         PointTuple p, double h) {
        const BasisIndex idx = make_index(fam, d, n, m, par);
        AFunction f;
        if (idx.family == Family::X)
          f = [idx](const Point3& q) { return eval_X(idx, q); };
        else if (idx.family == Family::Y || idx.family == Family::Ytilde)
          f = [idx](const Point3& q) { return eval_Y(idx, q); };
        else
          throw std::invalid_argument("monogenicity_residual expects family X or Y");
        return dbar_fd(f, point_arg(p), h).norm();
      },
      py::arg("family"), py::arg("domain"), py::arg("n"), py::arg("m"), py::arg("parity"),
      py::arg("point"), py::arg("h") = 1e-5, "|dbar f| by central differences.");

  mod.def(
      "exp_monogenicity_residual",
      [](PointTuple p, double h) {
        return dbar_fd([](const Point3& q) { return exp_monogenic(q); }, point_arg(p), h).norm();
      },
      py::arg("point"), py::arg("h") = 1e-5);

  mod.def(
      "appell_residual",
      [](int n, int m, const std::string& par, PointTuple p, double h) {
        return appell_residual(n, m, parity_arg(par), point_arg(p), h).norm();
      },
      py::arg("n"), py::arg("m"), py::arg("parity"), py::arg("point"), py::arg("h") = 1e-5);

  mod.def(
      "kelvin_residual",
      [](int n, int m, const std::string& par, PointTuple p) {
        return kelvin_residual(n, m, parity_arg(par), point_arg(p));
      },
      py::arg("n"), py::arg("m"), py::arg("parity"), py::arg("point"));

  mod.def(
      "duality_residual",
      [](int n, int m, const std::string& par, PointTuple p) {
        const Vec2 r = duality_residual(n, m, parity_arg(par), point_arg(p));
        return std::make_tuple(r.v1, r.v2);
      },
      py::arg("n"), py::arg("m"), py::arg("parity"), py::arg("point"));

  mod.def(
      "inner_basis",
      [](const std::string& fam1, int n1, int m1, const std::string& par1, bool conj1,
         const std::string& fam2, int n2, int m2, const std::string& par2, bool conj2,
         const std::string& d, int radial, int polar, int azimuthal) {
        const Domain dom = domain_arg(d);
        const QuadratureRule rule = QuadratureRule::build(dom, radial, polar, azimuthal);
        GramEntry a{make_index(fam1, d, n1, m1, par1), conj1, false};
        GramEntry b{make_index(fam2, d, n2, m2, par2), conj2, false};
        return inner_basis(a, b, rule);
      },
      py::arg("family1"), py::arg("n1"), py::arg("m1"), py::arg("parity1"), py::arg("conj1"),
      py::arg("family2"), py::arg("n2"), py::arg("m2"), py::arg("parity2"), py::arg("conj2"),
      py::arg("domain"), py::arg("radial") = 16, py::arg("polar") = 16, py::arg("azimuthal") = 64,
      "Quadrature inner product of two basis functions.");

  mod.def(
      "gram_max_offdiag",
      [](const std::string& fam, const std::string& d, int max_degree, int radial, int polar,
         int azimuthal) {
        const Domain dom = domain_arg(d);
        const QuadratureRule rule = QuadratureRule::build(dom, radial, polar, azimuthal);
        return gram(enumerate_family(family_arg(fam), dom, max_degree), rule).max_offdiag_ratio();
      },
      py::arg("family"), py::arg("domain"), py::arg("max_degree"), py::arg("radial") = 16,
      py::arg("polar") = 16, py::arg("azimuthal") = 64,
      "max |G_ij| / sqrt(G_ii G_jj) over one family.");

  mod.def(
      "project_exp",
      [](const std::string& op, const std::string& d, int degrees, PointTuple p, int radial,
         int polar, int azimuthal) {
        const Domain dom = domain_arg(d);
        const KernelTruncation trunc{dom, degrees};
        const QuadratureRule rule = QuadratureRule::build(dom, radial, polar, azimuthal);
        const A2Function f = dom == Domain::interior
                                 ? A2Function([](const Point3& q) { return vec(exp_monogenic(q)); })
                                 : A2Function([](const Point3& q) {
                                     return vec(exp_monogenic_star(q));
                                   });
        const Projection proj =
            op == "M" ? project_vecM(trunc, f, rule) : project_N(trunc, f, rule);
        const Vec2 v = proj.eval(point_arg(p));
        return std::make_tuple(v.v1, v.v2);
      },
      py::arg("op"), py::arg("domain"), py::arg("degrees"), py::arg("point"),
      py::arg("radial") = 16, py::arg("polar") = 16, py::arg("azimuthal") = 64,
      "Truncated Bergman projection of the exponential target at a point.");

  mod.def(
      "project_basis",
      [](const std::string& op, const std::string& fam, const std::string& d, int n, int m,
         const std::string& par, int degrees, PointTuple p, int radial, int polar, int azimuthal) {
        const Domain dom = domain_arg(d);
        const KernelTruncation trunc{dom, degrees};
        const QuadratureRule rule = QuadratureRule::build(dom, radial, polar, azimuthal);
        const BasisIndex idx = make_index(fam, d, n, m, par);
        A2Function f;
        if (idx.family == Family::X)
          f = [idx](const Point3& q) { return vec(eval_X(idx, q)); };
        else if (idx.family == Family::Z)
          f = [idx](const Point3& q) { return vec(eval_Z(idx, q)); };
        else
          throw std::invalid_argument("project_basis expects family X or Z");
        const Projection proj =
            op == "M" ? project_vecM(trunc, f, rule) : project_N(trunc, f, rule);
        const Vec2 v = proj.eval(point_arg(p));
        return std::make_tuple(v.v1, v.v2);
      },
      py::arg("op"), py::arg("family"), py::arg("domain"), py::arg("n"), py::arg("m"),
      py::arg("parity"), py::arg("degrees"), py::arg("point"), py::arg("radial") = 16,
      py::arg("polar") = 16, py::arg("azimuthal") = 64,
      "Project the vector part of one basis function.");

  mod.def(
      "bergman_table",
      [](const std::string& d, const std::string& op, const std::vector<int>& Ns,
         const std::vector<double>& rhos, const std::string& metric) {
        BergmanTableSpec spec;
        spec.domain = domain_arg(d);
        spec.op = op == "N" ? 'N' : 'M';
        spec.degree_counts = Ns;
        spec.rhos = rhos;
        spec.metric = metric == "sup" ? TableMetric::sup_ratio : TableMetric::pointwise_relative;
        return bergman_error_table(spec);
      },
      py::arg("domain"), py::arg("op"), py::arg("degree_counts"), py::arg("rhos"),
      py::arg("metric") = "pointwise",
      "Rows per rho, columns per truncation degree count.");
}
