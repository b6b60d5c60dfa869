#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kirchcert/point.hpp"
#include "kirchcert/polynomial.hpp"
#include "kirchcert/polynomial_matrix.hpp"
#include "kirchcert/rational_matrix.hpp"
#include "kirchcert/report.hpp"

namespace kirchcert {

// Value, gradient and Hessian of F at a point, all exact.
struct HessianData {
    Rational value{0};
    std::vector<Rational> gradient;
    SymmetricRationalMatrix hessian{0};
};

HessianData hessian_and_gradient_at(const Polynomial& f, const RationalPoint& a);

// The n x n matrix of second partial derivatives, as polynomials.
PolynomialMatrix symbolic_hessian(const Polynomial& f);

// M_s(a) = -F(a) * H_F(a) + s * grad F(a) grad F(a)^T, the matrix whose
// positive semidefiniteness expresses log-concavity-type statements about F
// at a.  Requires F homogeneous of degree >= 2.
SymmetricRationalMatrix log_concavity_matrix(const Polynomial& f, const RationalPoint& a, const Rational& s);

enum class LogConcavityMode {
    Plain,              // M_s(a) PSD at the given s
    Strict,             // M_s(a) PD at the given s
    Homogeneous,        // M_s(a) PSD at the threshold s0 = (r-1)/r, hence for all s >= s0
    StrictHomogeneous,  // additionally ker M_s0(a) = span{a} (single-inertia criterion)
};

struct LogConcavityVerdict {
    LogConcavityMode mode;
    Rational s{0};               // the s actually used (threshold in homogeneous modes)
    bool s_is_threshold = false;
    Inertia inertia;             // inertia of M_s(a)
    bool verdict = false;
    std::string reason;          // set when verdict is false
    // Exact witness when the verdict fails: y with y^T M_s(a) y < 0, or a
    // kernel direction that stays in the kernel for every s in strict modes.
    std::optional<std::vector<Rational>> witness;
};

// Verifies the positivity statement selected by mode.  Requires F homogeneous
// of degree r >= 2 (r >= 3 in the homogeneous modes, whose threshold analysis
// needs it); strict modes require a nonnegative point (cone-tagged points are
// validated at construction) and report "value vanished" when F(a) = 0.  In
// the homogeneous modes s must be left empty: the claim ranges over all
// s >= (r-1)/r and is decided at the threshold alone, since
// M_s = M_s0 + (s - s0) grad grad^T only gains a PSD term as s grows.
LogConcavityVerdict check_log_concavity(const Polynomial& f, const RationalPoint& a,
                                        LogConcavityMode mode,
                                        const std::optional<Rational>& s = std::nullopt);

// Symbolic Euler identities for F homogeneous of degree r >= 2:
//   x^T H_F x = r (r-1) F      and      H_F x = (r-1) grad F.
struct EulerCheck {
    bool holds = false;
    std::string detail;  // which identity failed and its residual, if any
};
EulerCheck euler_check(const Polynomial& f);

// det(I - s v v^T) = 1 - s |v|^2, verified exactly for the given data.
bool rank_one_det_check(const std::vector<Rational>& v, const Rational& s);

// Determinant connection between M_s and H_F for F homogeneous of degree r:
//   det(-F H_F + s grad grad^T) = (-1)^(n-1) ((s - (r-1)/r) r/(r-1)) F^n det H_F.
// Symbolic for n <= 4 variables, sampled evaluation otherwise.
bool determinant_connection_check(const Polynomial& f, int trials, std::uint64_t seed);

// Probabilistic polynomial-identity test on integer points in
// [1, coordinate_max]^n: reports a false-accept probability bound
// (degree_bound / coordinate_max)^trials when all trials agree.
struct IdentityTestResult {
    bool identical = true;
    std::optional<std::vector<Rational>> witness;  // point where values differ
    std::string failure_bound;                     // exact rational bound, "0" if symbolic
};
using PointFunction = std::function<Rational(const std::vector<Rational>&)>;
IdentityTestResult polynomial_identity_test(int num_vars, const PointFunction& lhs,
                                            const PointFunction& rhs, unsigned degree_bound,
                                            int trials, std::uint64_t seed,
                                            std::uint64_t coordinate_max = std::uint64_t{1} << 20);

// Complete-graph Hessian determinant law: for the spanning-tree polynomial F
// of K_{r+1} with N = binom(r+1, 2) variables,
//   det H_F = (-1)^(N-1) * 2^(N-r) * (r-1) * F^(N-r-1).
// Symbolic proof for r = 3 (determinant of the 6x6 polynomial Hessian);
// sampled evaluation for larger r.  The report also evaluates both published
// closed forms of the all-ones constant and flags their factor-2 discrepancy.
enum class IdentityMode { Symbolic, Evaluation };
VerificationReport complete_graph_hessian_identity(int r, IdentityMode mode, int trials, std::uint64_t seed);

// Spanning-tree count of K_{r+1} against the closed form (r+1)^(r-1).
struct CayleyCheck {
    bool ok = false;
    std::uint64_t tree_count = 0;
    std::string expected;  // exact integer as string
};
CayleyCheck cayley_check(int r);

}  // namespace kirchcert
