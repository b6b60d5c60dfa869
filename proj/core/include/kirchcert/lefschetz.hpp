#pragma once

#include <optional>
#include <vector>

#include "kirchcert/graph.hpp"
#include "kirchcert/hessian.hpp"
#include "kirchcert/point.hpp"
#include "kirchcert/polynomial.hpp"
#include "kirchcert/rational_matrix.hpp"

namespace kirchcert {

// The space of degree-one differential operators annihilating F: vectors c
// with (sum_i c_i d/dx_i) F = 0.  Partials of a nonzero F need not be
// linearly independent; the kernel is computed exactly from the coefficient
// matrix of the partials (rows = monomials, columns = variables).
struct DegreeOneStructure {
    std::vector<Polynomial> partials;
    std::vector<std::vector<Rational>> dependency_kernel;  // RREF nullspace basis
    int kernel_dim() const { return static_cast<int>(dependency_kernel.size()); }
};
DegreeOneStructure degree_one_kernel(const Polynomial& f);

// Nondegeneracy report for multiplication by a degree-one form at the point
// a, decided by the Hessian criterion: the structure is nondegenerate exactly
// when F(a) != 0 and det H_F(a) != 0.  The Hodge-Riemann side asks for
// exactly one positive eigenvalue, the rest negative.
struct SLPReport {
    Rational f_value{0};
    int hessian_det_sign = 0;  // sign of det H_F(a): +1, -1 or 0
    bool slp_holds = false;    // f_value != 0 and hessian_det_sign != 0
    Inertia hr_inertia;        // inertia of H_F(a)
    bool hr_relation_holds = false;  // f_value > 0 and hr_inertia == (1, n-1, 0)
    int kernel_dim = 0;        // dimension of the degree-one dependency kernel
};
SLPReport slp_degree_one(const Polynomial& f, const RationalPoint& a);

// Q(x_i, x_j) = (r-2)! * d2F/dx_i dx_j |_a; the factorial scaling never
// changes the inertia but is kept so reports show the form itself.
SymmetricRationalMatrix hodge_riemann_form(const Polynomial& f, const RationalPoint& a);

// Requires F(a) > 0; then the degree-one Hodge-Riemann relation holds exactly
// when inertia(H_F(a)) = (1, n-1, 0).
struct HodgeRiemannResult {
    bool holds = false;
    Inertia inertia;
};
HodgeRiemannResult hodge_riemann_relation(const Polynomial& f, const RationalPoint& a);

// The all-ones directional derivative maps e_k (in n variables) to
// (n - k + 1) e_{k-1}, so the ell-fold derivative of e_n is ell! * e_{n-ell}.
// Verifies that identity as exact polynomials.
bool elementary_symmetric_derivative_identity(int n, int ell);

// Builds e_{n-ell}, re-verifies the derivative identity above, and reports
// slp_degree_one at a (all-ones when omitted).  Requires 0 <= ell <= n-2.
SLPReport elementary_symmetric_slp(int n, int ell, const std::optional<RationalPoint>& a = std::nullopt);

// Spanning-tree polynomial of a simple connected graph at a strictly positive
// point; nondegeneracy and the (1, n-1, 0) signature are the expected outcome.
SLPReport graph_slp_report(const Graph& g, const RationalPoint& a);

}  // namespace kirchcert
