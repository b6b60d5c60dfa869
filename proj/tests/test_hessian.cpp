#include "doctest.h"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oracles.hpp"

#include "kirchcert/graph.hpp"
#include "kirchcert/graph_corpus.hpp"
#include "kirchcert/hessian.hpp"
#include "kirchcert/polynomial.hpp"
#include "kirchcert/polynomial_matrix.hpp"
#include "kirchcert/rng.hpp"

using namespace kirchcert;

namespace {

Polynomial k4_polynomial() {
    return kirchhoff_polynomial(Graph::complete(4), KirchhoffRoute::Enumeration);
}

std::vector<std::vector<int>> k4_trees() {
    return spanning_trees(Graph::complete(4)).as_index_sets();
}

}  // namespace

TEST_SUITE("hessian") {

TEST_CASE("gradient and Hessian at a generic point match the support oracle") {
    const Polynomial f = k4_polynomial();
    const RationalPoint a({Rational(2), Rational(1, 3), Rational(5), Rational(7, 2), Rational(1),
                           Rational(4, 5)});
    const HessianData data = hessian_and_gradient_at(f, a);
    const oracle::BruteData expected = oracle::brute_force_support_data(k4_trees(), a, 6);
    CHECK(data.value == expected.value);
    CHECK(data.gradient == expected.gradient);
    CHECK(data.hessian.matrix() == expected.hessian);
}

TEST_CASE("the multi-affine fast path survives zero coordinates") {
    const Polynomial f = k4_polynomial();
    const std::vector<RationalPoint> points = {
        RationalPoint({Rational(1), Rational(1), Rational(1), Rational(0), Rational(0), Rational(0)}),
        RationalPoint({Rational(2), Rational(1), Rational(3), Rational(0), Rational(1), Rational(0)}),
        RationalPoint({Rational(0), Rational(0), Rational(5), Rational(1), Rational(2), Rational(3)}),
        RationalPoint({Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)}),
    };
    for (const RationalPoint& a : points) {
        const HessianData data = hessian_and_gradient_at(f, a);
        const oracle::BruteData expected = oracle::brute_force_support_data(k4_trees(), a, 6);
        CHECK(data.value == expected.value);
        CHECK(data.gradient == expected.gradient);
        CHECK(data.hessian.matrix() == expected.hessian);
    }
}

TEST_CASE("general-path Hessian matches the symbolic one on a non-multi-affine input") {
    const Polynomial f = parse_polynomial("x1^3 x2 + x2^2 x3^2 - 2 x1 x3^3", 3);
    const RationalPoint a({Rational(3, 2), Rational(-1), Rational(2, 5)});
    const HessianData data = hessian_and_gradient_at(f, a);
    const PolynomialMatrix h = symbolic_hessian(f);
    for (int i = 1; i <= 3; ++i) {
        CHECK(data.gradient[static_cast<std::size_t>(i - 1)] ==
              f.partial_derivative(i).evaluate(a));
        for (int j = 1; j <= 3; ++j) CHECK(data.hessian.at(i, j) == h.at(i, j).evaluate(a));
    }
}

TEST_CASE("frozen Hessian of K4 at the all-ones point") {
    const HessianData data = hessian_and_gradient_at(k4_polynomial(), RationalPoint::ones(6));
    CHECK(data.value == Rational(16));
    for (const Rational& g : data.gradient) CHECK(g == Rational(8));
    // Diagonal zero; disjoint edge pairs {1,6},{2,5},{3,4} meet in 4 trees,
    // adjacent pairs in 3.
    const std::set<std::pair<int, int>> disjoint = {{1, 6}, {2, 5}, {3, 4}};
    for (int i = 1; i <= 6; ++i) {
        for (int j = 1; j <= 6; ++j) {
            if (i == j) CHECK(data.hessian.at(i, j) == Rational(0));
            else if (disjoint.count({std::min(i, j), std::max(i, j)}))
                CHECK(data.hessian.at(i, j) == Rational(4));
            else CHECK(data.hessian.at(i, j) == Rational(3));
        }
    }
    CHECK(data.hessian.matrix().determinant() == Rational(-4096));
    CHECK(inertia_of(data.hessian) == Inertia{1, 5, 0});
}

TEST_CASE("frozen inertia at cone points over the star spanning tree") {
    const Polynomial f = k4_polynomial();
    const std::vector<int> star_tree = {1, 2, 3};
    const RationalPoint p1({Rational(1), Rational(1), Rational(1), Rational(0), Rational(0),
                            Rational(0)}, star_tree);
    const RationalPoint p2({Rational(2), Rational(1), Rational(3), Rational(0), Rational(1),
                            Rational(0)}, star_tree);
    for (const RationalPoint& a : {p1, p2}) {
        const HessianData data = hessian_and_gradient_at(f, a);
        CHECK(inertia_of(data.hessian) == Inertia{1, 5, 0});
        CHECK(data.value > Rational(0));
    }
}

TEST_CASE("Euler identities hold symbolically for corpus polynomials") {
    for (const Graph& g : simple_connected_corpus(3, 5)) {
        const EulerCheck check = euler_check(kirchhoff_polynomial(g, KirchhoffRoute::Enumeration));
        CHECK(check.holds);
    }
    CHECK(euler_check(elementary_symmetric(5, 3)).holds);
    CHECK_THROWS_AS(euler_check(parse_polynomial("x1^2 + x1 x2 + x2", 2)), std::domain_error);
}

TEST_CASE("rank-one determinant lemma") {
    SeededRng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int dim = 1 + static_cast<int>(rng.uniform_positive(8));
        std::vector<Rational> v;
        for (int i = 0; i < dim; ++i) {
            Rational x = rng.positive_rational(128);
            if (rng.uniform_positive(2) == 1) x = -x;
            v.push_back(x);
        }
        const Rational s = rng.positive_rational(128);
        CHECK(rank_one_det_check(v, s));
        CHECK(rank_one_det_check(v, -s));
    }
}

TEST_CASE("determinant connection, frozen closed form for x1 x2") {
    // det(-F H + s grad grad^T) for F = x1 x2 equals (2s - 1) x1^2 x2^2:
    // lift s to a third variable and expand by hand.
    const Polynomial f_hat = parse_polynomial("x1 x2", 3);
    const Polynomial s = Polynomial::variable(3, 3);
    const Polynomial g1 = f_hat.partial_derivative(1);
    const Polynomial g2 = f_hat.partial_derivative(2);
    PolynomialMatrix m(2, 3);
    m.at(1, 1) = s * g1 * g1 - f_hat * f_hat.partial_derivative(1).partial_derivative(1);
    m.at(1, 2) = s * g1 * g2 - f_hat * f_hat.partial_derivative(1).partial_derivative(2);
    m.at(2, 1) = m.at(1, 2);
    m.at(2, 2) = s * g2 * g2 - f_hat * f_hat.partial_derivative(2).partial_derivative(2);
    CHECK(fraction_free_determinant(m) == parse_polynomial("2 x1^2 x2^2 x3 - x1^2 x2^2", 3));

    CHECK(determinant_connection_check(parse_polynomial("x1 x2", 2), 5, 0));
}

TEST_CASE("determinant connection on symbolic and sampled inputs") {
    CHECK(determinant_connection_check(parse_polynomial("x1 x2 x3", 3), 5, 1));
    CHECK(determinant_connection_check(elementary_symmetric(4, 3), 5, 2));
    // Six variables exercises the evaluation path.
    CHECK(determinant_connection_check(k4_polynomial(), 8, 3));
    // A non-homogeneous input is rejected rather than silently sampled.
    CHECK_THROWS(determinant_connection_check(parse_polynomial("x1 + x1 x2", 2), 5, 0));
}

TEST_CASE("log-concavity of the triangle polynomial, plain and strict") {
    const Polynomial f = kirchhoff_polynomial(Graph::complete(3), KirchhoffRoute::Enumeration);
    const RationalPoint ones = RationalPoint::ones(3);
    CHECK(check_log_concavity(f, ones, LogConcavityMode::Plain).verdict);
    const LogConcavityVerdict strict = check_log_concavity(f, ones, LogConcavityMode::Strict,
                                                           Rational(1, 2));
    CHECK_FALSE(strict.verdict);  // at s = 1/2 = (r-1)/r the matrix is singular
    REQUIRE(strict.witness.has_value());
    // The witness direction stays in the kernel, so the form vanishes on it.
    const SymmetricRationalMatrix m = log_concavity_matrix(f, ones, Rational(1, 2));
    CHECK(quadratic_form(m, *strict.witness).is_zero());
    CHECK(check_log_concavity(f, ones, LogConcavityMode::Strict, Rational(1)).verdict);
}

TEST_CASE("frozen threshold inertia for x1 x2 x3") {
    const Polynomial f = parse_polynomial("x1 x2 x3", 3);
    const RationalPoint ones = RationalPoint::ones(3);
    const LogConcavityVerdict v = check_log_concavity(f, ones, LogConcavityMode::StrictHomogeneous);
    CHECK(v.verdict);
    CHECK(v.s == Rational(2, 3));
    CHECK(v.s_is_threshold);
    CHECK(v.inertia == Inertia{2, 0, 1});
    // The kernel of M(2/3) is spanned by the point itself.
    const SymmetricRationalMatrix m = log_concavity_matrix(f, ones, Rational(2, 3));
    const std::vector<Rational> image = m.matrix().apply({Rational(1), Rational(1), Rational(1)});
    for (const Rational& x : image) CHECK(x.is_zero());
}

TEST_CASE("strict homogeneous verdicts fail on degenerate inputs with real witnesses") {
    // Parallel pair: triangle with a doubled edge.
    const Graph doubled(3, {{1, 2, ""}, {1, 2, ""}, {2, 3, ""}, {1, 3, ""}});
    const Polynomial f = kirchhoff_polynomial(doubled, KirchhoffRoute::Enumeration);
    const RationalPoint ones = RationalPoint::ones(4);
    const LogConcavityVerdict strict = check_log_concavity(f, ones, LogConcavityMode::Strict,
                                                           Rational(1));
    CHECK_FALSE(strict.verdict);
    REQUIRE(strict.witness.has_value());
    const SymmetricRationalMatrix m = log_concavity_matrix(f, ones, Rational(1));
    CHECK(quadratic_form(m, *strict.witness).sign() <= 0);

    // Degree 3 plus parallel pair: the threshold kernel grows past dimension 1.
    const Graph k4_doubled(4, {{1, 2, ""}, {1, 3, ""}, {1, 4, ""}, {2, 3, ""}, {2, 4, ""},
                               {3, 4, ""}, {1, 2, ""}});
    const Polynomial f2 = kirchhoff_polynomial(k4_doubled, KirchhoffRoute::Enumeration);
    const LogConcavityVerdict sh =
        check_log_concavity(f2, RationalPoint::ones(7), LogConcavityMode::StrictHomogeneous);
    CHECK_FALSE(sh.verdict);
    CHECK(sh.inertia.n_zero >= 2);
    REQUIRE(sh.witness.has_value());
    // Witness: a kernel direction orthogonal to the gradient, hence not a
    // multiple of the evaluation point.
    const SymmetricRationalMatrix m2 =
        log_concavity_matrix(f2, RationalPoint::ones(7), Rational(2, 3));
    const HessianData data2 = hessian_and_gradient_at(f2, RationalPoint::ones(7));
    Rational dot(0);
    for (std::size_t i = 0; i < 7; ++i) dot += data2.gradient[i] * (*sh.witness)[i];
    CHECK(dot.is_zero());
    CHECK(quadratic_form(m2, *sh.witness).is_zero());
}

TEST_CASE("mode preconditions") {
    const Polynomial f = parse_polynomial("x1 x2", 2);
    const RationalPoint ones = RationalPoint::ones(2);
    // Homogeneous modes need degree >= 3.
    CHECK_THROWS(check_log_concavity(f, ones, LogConcavityMode::Homogeneous));
    // Explicit s is rejected in homogeneous modes.
    const Polynomial cubic = parse_polynomial("x1 x2 x3", 3);
    CHECK_THROWS(check_log_concavity(cubic, RationalPoint::ones(3),
                                     LogConcavityMode::StrictHomogeneous, Rational(1)));
    // Strict modes reject negative points.
    const RationalPoint negative({Rational(1), Rational(-1), Rational(1)});
    CHECK_THROWS(check_log_concavity(cubic, negative, LogConcavityMode::Strict, Rational(1)));
    // Vanishing value in a strict mode is a clean failure, not an error.
    const RationalPoint zero_point({Rational(0), Rational(0), Rational(0)});
    const LogConcavityVerdict v =
        check_log_concavity(cubic, zero_point, LogConcavityMode::StrictHomogeneous);
    CHECK_FALSE(v.verdict);
}

TEST_CASE("complete-graph Hessian law, symbolic case r = 3") {
    const VerificationReport report =
        complete_graph_hessian_identity(3, IdentityMode::Symbolic, 1, 0);
    CHECK(report.verdict);
    bool saw_constant = false, saw_exponent = false, saw_ones = false, saw_first = false,
         saw_second = false;
    for (const auto& [key, value] : report.params) {
        if (key == "determinant_constant") { CHECK(value == "-16"); saw_constant = true; }
        if (key == "value_exponent") { CHECK(value == "2"); saw_exponent = true; }
        if (key == "determinant_at_ones") { CHECK(value == "-4096"); saw_ones = true; }
        if (key == "closed_form_first") { CHECK(value == "-2048"); saw_first = true; }
        if (key == "closed_form_second") { CHECK(value == "-4096"); saw_second = true; }
    }
    CHECK(saw_constant);
    CHECK(saw_exponent);
    CHECK(saw_ones);
    CHECK(saw_first);
    CHECK(saw_second);
}

TEST_CASE("the symbolic law is literally det H = -16 F^2 for K4") {
    const Polynomial f = k4_polynomial();
    const Polynomial det = fraction_free_determinant(symbolic_hessian(f));
    CHECK(det == f * f * Rational(-16));
}

TEST_CASE("published closed forms at the all-ones point, r = 2, 3, 4") {
    struct Frozen {
        int r;
        const char* first;
        const char* second;
    };
    // Exact determinant equals the second form; the first is off by 2.
    const Frozen cases[] = {
        {2, "1", "2"},
        {3, "-2048", "-4096"},
        {4, "-2929687500000", "-5859375000000"},
    };
    for (const Frozen& c : cases) {
        const VerificationReport report = complete_graph_hessian_identity(
            c.r, IdentityMode::Evaluation, 3, 0);
        bool saw_first = false, saw_second = false, saw_ones = false;
        for (const auto& [key, value] : report.params) {
            if (key == "closed_form_first") { CHECK(value == c.first); saw_first = true; }
            if (key == "closed_form_second") { CHECK(value == c.second); saw_second = true; }
            if (key == "determinant_at_ones") { CHECK(value == c.second); saw_ones = true; }
        }
        CHECK(saw_first);
        CHECK(saw_second);
        CHECK(saw_ones);
        CHECK(report.verdict);
    }
}

TEST_CASE("evaluation mode carries an explicit failure bound") {
    const VerificationReport report =
        complete_graph_hessian_identity(4, IdentityMode::Evaluation, 20, 0);
    CHECK(report.verdict);
    REQUIRE(report.failure_bound.has_value());
    const Rational bound = Rational::from_string(*report.failure_bound);
    CHECK(bound < Rational(1, 1 << 30));
    CHECK(bound > Rational(0));
}

TEST_CASE("identity testing reports disproofs with witnesses") {
    // lhs = x1^2, rhs = x1^2 + x1: always different at positive points.
    const auto lhs = [](const std::vector<Rational>& p) { return p[0] * p[0]; };
    const auto rhs = [](const std::vector<Rational>& p) { return p[0] * p[0] + p[0]; };
    const IdentityTestResult result = polynomial_identity_test(1, lhs, rhs, 2, 10, 0);
    CHECK_FALSE(result.identical);
    CHECK(result.failure_bound == "0");
    REQUIRE(result.witness.has_value());
    CHECK((*result.witness)[0] * (*result.witness)[0] != rhs(*result.witness));
}

}  // TEST_SUITE
