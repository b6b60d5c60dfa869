#include "kirchcert/lefschetz.hpp"

#include <map>
#include <stdexcept>

#include "kirchcert/polynomial_matrix.hpp"

namespace kirchcert {

namespace {

unsigned required_homogeneous_degree(const Polynomial& f, const char* who) {
    const HomogeneityProfile prof = f.homogeneity_profile();
    if (!prof.is_homogeneous || !prof.degree)
        throw std::domain_error(std::string(who) + ": polynomial must be homogeneous and nonzero");
    if (*prof.degree < 2)
        throw std::domain_error(std::string(who) + ": degree at least 2 required");
    return *prof.degree;
}

}  // namespace

DegreeOneStructure degree_one_kernel(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("degree-one kernel: zero polynomial");
    const int n = f.num_vars();
    DegreeOneStructure out;
    out.partials.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out.partials.push_back(f.partial_derivative(i));

    // coefficient matrix: one row per monomial appearing in any partial
    std::map<ExponentVector, int, GrlexDescending> row_of;
    for (const Polynomial& p : out.partials)
        for (const auto& [e, c] : p.terms())
            row_of.emplace(e, 0);
    int next = 1;
    for (auto& [e, row] : row_of) row = next++;

    RationalMatrix a(static_cast<int>(row_of.size()), n);
    for (int i = 1; i <= n; ++i)
        for (const auto& [e, c] : out.partials[static_cast<std::size_t>(i) - 1].terms())
            a.at(row_of.at(e), i) = c;
    out.dependency_kernel = a.nullspace();
    if (static_cast<int>(out.dependency_kernel.size()) + a.rank() != n)
        throw std::logic_error("degree-one kernel: rank-nullity violation (cannot happen)");
    return out;
}

SLPReport slp_degree_one(const Polynomial& f, const RationalPoint& a) {
    required_homogeneous_degree(f, "slp");
    if (a.dim() != f.num_vars()) throw std::invalid_argument("slp: point has wrong dimension");
    const int n = f.num_vars();
    const HessianData data = hessian_and_gradient_at(f, a);
    const CongruenceDiagonalization diag = diagonalize_congruence(data.hessian);

    SLPReport rep;
    rep.f_value = data.value;
    rep.hr_inertia = diag.inertia;
    // det H = det(S)^-2 * prod(diagonal), so the sign comes off the diagonal
    rep.hessian_det_sign = diag.inertia.n_zero > 0 ? 0 : (diag.inertia.n_minus % 2 == 0 ? 1 : -1);
    rep.slp_holds = !rep.f_value.is_zero() && rep.hessian_det_sign != 0;
    rep.hr_relation_holds =
        rep.f_value.sign() > 0 && diag.inertia == Inertia{1, n - 1, 0};
    rep.kernel_dim = degree_one_kernel(f).kernel_dim();
    return rep;
}

SymmetricRationalMatrix hodge_riemann_form(const Polynomial& f, const RationalPoint& a) {
    const unsigned r = required_homogeneous_degree(f, "hodge-riemann form");
    const HessianData data = hessian_and_gradient_at(f, a);
    return SymmetricRationalMatrix::from_matrix(
        data.hessian.matrix().scaled(Rational(factorial(r - 2))));
}

HodgeRiemannResult hodge_riemann_relation(const Polynomial& f, const RationalPoint& a) {
    required_homogeneous_degree(f, "hodge-riemann");
    if (f.evaluate(a).sign() <= 0)
        throw std::domain_error("hodge-riemann: the value at the point must be positive");
    const SymmetricRationalMatrix q = hodge_riemann_form(f, a);
    HodgeRiemannResult out;
    out.inertia = inertia_of(q);
    out.holds = out.inertia == Inertia{1, f.num_vars() - 1, 0};
    return out;
}

bool elementary_symmetric_derivative_identity(int n, int ell) {
    const Polynomial derived =
        iterated_directional_derivative(elementary_symmetric(n, n), RationalPoint::ones(n), static_cast<unsigned>(ell));
    return derived == elementary_symmetric(n, n - ell) * Rational(factorial(static_cast<unsigned>(ell)));
}

SLPReport elementary_symmetric_slp(int n, int ell, const std::optional<RationalPoint>& a) {
    if (n < 2) throw std::invalid_argument("elementary symmetric slp: need n >= 2");
    if (ell < 0 || ell > n - 2)
        throw std::out_of_range("elementary symmetric slp: need 0 <= ell <= n - 2");
    if (!elementary_symmetric_derivative_identity(n, ell))
        throw std::logic_error("elementary symmetric slp: derivative identity violated (cannot happen)");
    return slp_degree_one(elementary_symmetric(n, n - ell), a.value_or(RationalPoint::ones(n)));
}

SLPReport graph_slp_report(const Graph& g, const RationalPoint& a) {
    const SimplicityReport simp = simplicity_check(g);
    if (!simp.simple) {
        std::string what = "graph slp: graph is not simple (";
        what += std::to_string(simp.loops.size()) + " loops, ";
        what += std::to_string(simp.parallel_pairs.size()) + " parallel pairs)";
        throw std::invalid_argument(what);
    }
    if (!g.is_connected()) throw DisconnectedGraphError("graph slp: graph is disconnected");
    if (a.dim() != g.num_edges())
        throw std::invalid_argument("graph slp: point has wrong dimension");
    if (!a.all_positive())
        throw std::invalid_argument("graph slp: all coordinates must be strictly positive");
    return slp_degree_one(kirchhoff_polynomial(g, KirchhoffRoute::Enumeration), a);
}

}  // namespace kirchcert
