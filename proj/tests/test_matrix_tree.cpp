#include "doctest.h"

#include <set>
#include <vector>

#include "kirchcert/graph.hpp"
#include "kirchcert/graph_corpus.hpp"
#include "kirchcert/hessian.hpp"
#include "kirchcert/polynomial.hpp"
#include "kirchcert/polynomial_matrix.hpp"

using namespace kirchcert;

namespace {

// Builds a multi-affine polynomial from explicit 1-based supports.
Polynomial from_supports(int n, const std::vector<std::vector<int>>& supports) {
    Polynomial f(n);
    for (const auto& support : supports) {
        ExponentVector e(static_cast<std::size_t>(n), 0);
        for (int i : support) e[static_cast<std::size_t>(i - 1)] = 1;
        f += Polynomial::monomial(n, e, Rational(1));
    }
    return f;
}

}  // namespace

TEST_SUITE("matrix-tree") {

TEST_CASE("Laplacian structure of the triangle") {
    const Graph k3 = Graph::complete(3);
    const PolynomialMatrix lap = laplacian(k3);
    REQUIRE(lap.dim() == 3);
    CHECK(lap.is_symmetric());
    // diagonal (1,1): x1 + x2 (edges at vertex 1); off-diagonal (1,2): -x1
    CHECK(lap.at(1, 1) == parse_polynomial("x1 + x2", 3));
    CHECK(lap.at(1, 2) == parse_polynomial("0 - x1", 3));
    CHECK(lap.at(2, 3) == parse_polynomial("0 - x3", 3));
    // row sums vanish
    for (int i = 1; i <= 3; ++i) {
        Polynomial row_sum(3);
        for (int j = 1; j <= 3; ++j) row_sum += lap.at(i, j);
        CHECK(row_sum.is_zero());
    }
}

TEST_CASE("loops contribute nothing to the Laplacian") {
    const Graph g(2, {{1, 2, ""}, {2, 2, ""}});
    const PolynomialMatrix lap = laplacian(g);
    CHECK(lap.at(2, 2) == parse_polynomial("x1", 2));
    CHECK(kirchhoff_polynomial(g, KirchhoffRoute::MatrixTree) == parse_polynomial("x1", 2));
}

TEST_CASE("the golden K4 polynomial, term for term") {
    // Edge labels: 1<->{1,2}, 2<->{1,3}, 3<->{1,4}, 4<->{2,3}, 5<->{2,4}, 6<->{3,4}.
    const std::vector<std::vector<int>> expected_trees = {
        {1, 2, 3}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {2, 3, 5}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5},
        {1, 2, 6}, {1, 3, 6}, {1, 4, 6}, {2, 4, 6}, {3, 4, 6}, {1, 5, 6}, {2, 5, 6}, {3, 5, 6}};
    const Polynomial expected = from_supports(6, expected_trees);
    REQUIRE(expected.term_count() == 16);

    const Graph k4 = Graph::complete(4);
    CHECK(kirchhoff_polynomial(k4, KirchhoffRoute::Enumeration) == expected);
    CHECK(kirchhoff_polynomial(k4, KirchhoffRoute::MatrixTree) == expected);
}

TEST_CASE("deleting the edge joining vertices 2 and 3: the eight survivors") {
    // x4 is the edge {2,3}; the restriction keeps exactly the eight trees
    // avoiding it.
    const std::vector<std::vector<int>> expected_trees = {
        {1, 2, 3}, {1, 2, 5}, {2, 3, 5}, {1, 2, 6}, {1, 3, 6}, {1, 5, 6}, {2, 5, 6}, {3, 5, 6}};
    const Polynomial expected = from_supports(6, expected_trees);
    REQUIRE(expected.term_count() == 8);

    const Polynomial f = kirchhoff_polynomial(Graph::complete(4), KirchhoffRoute::Enumeration);
    CHECK(f.restrict_to_zero({4}) == expected);

    // The same polynomial arises from the 5-edge graph directly, after
    // renaming edges 5,6 to 4,5.
    const Graph without(4, {{1, 2, ""}, {1, 3, ""}, {1, 4, ""}, {2, 4, ""}, {3, 4, ""}});
    const Polynomial g = kirchhoff_polynomial(without, KirchhoffRoute::Enumeration);
    CHECK(g.term_count() == 8);
    Polynomial expected_renamed(5);
    for (const auto& [e, c] : expected.terms()) {
        ExponentVector renamed = {e[0], e[1], e[2], e[4], e[5]};
        expected_renamed += Polynomial::monomial(5, renamed, c);
    }
    CHECK(g == expected_renamed);
}

TEST_CASE("both routes agree on every simple connected graph up to 5 vertices") {
    for (const Graph& g : simple_connected_corpus(2, 5)) {
        CHECK(kirchhoff_polynomial(g, KirchhoffRoute::Enumeration) ==
              kirchhoff_polynomial(g, KirchhoffRoute::MatrixTree));
    }
}

TEST_CASE("both routes agree on the multigraph corpus") {
    for (const Graph& g : multigraph_corpus()) {
        CHECK(kirchhoff_polynomial(g, KirchhoffRoute::Enumeration) ==
              kirchhoff_polynomial(g, KirchhoffRoute::MatrixTree));
    }
}

TEST_CASE("every signed cofactor of the Laplacian gives the same polynomial") {
    const Graph k4 = Graph::complete(4);
    const Polynomial f = kirchhoff_polynomial(k4, KirchhoffRoute::Enumeration);
    const PolynomialMatrix lap = laplacian(k4);
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            Polynomial minor_det = fraction_free_determinant(cofactor(lap, i, j));
            if ((i + j) % 2 == 1) minor_det = -minor_det;
            CHECK(minor_det == f);
        }
    }
}

TEST_CASE("Bareiss elimination handles zero pivots and singular inputs") {
    // Antidiagonal matrix forces a pivot swap.
    PolynomialMatrix anti(2, 2);
    anti.at(1, 2) = parse_polynomial("x1", 2);
    anti.at(2, 1) = parse_polynomial("x2", 2);
    CHECK(fraction_free_determinant(anti) == parse_polynomial("0 - x1 x2", 2));

    // Rank-one symbolic matrix has determinant zero.
    PolynomialMatrix rank_one(2, 2);
    rank_one.at(1, 1) = parse_polynomial("x1^2", 2);
    rank_one.at(1, 2) = parse_polynomial("x1 x2", 2);
    rank_one.at(2, 1) = parse_polynomial("x1 x2", 2);
    rank_one.at(2, 2) = parse_polynomial("x2^2", 2);
    CHECK(fraction_free_determinant(rank_one).is_zero());
}

TEST_CASE("Bareiss agrees with cofactor expansion on a dense symbolic matrix") {
    // 3x3 with distinct variables: determinant by hand is the standard
    // alternating sum over permutations.
    PolynomialMatrix m(3, 9);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            m.at(i, j) = Polynomial::variable(9, (i - 1) * 3 + j);
    Polynomial expected(9);
    const int perms[6][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}, {2, 1, 3}, {1, 3, 2}};
    for (int p = 0; p < 6; ++p) {
        Polynomial term = Polynomial::constant(9, Rational(p < 3 ? 1 : -1));
        for (int i = 1; i <= 3; ++i) term *= Polynomial::variable(9, (i - 1) * 3 + perms[p][i - 1]);
        expected += term;
    }
    CHECK(fraction_free_determinant(m) == expected);
}

TEST_CASE("complete graph tree counts match the closed form") {
    for (int r = 1; r <= 6; ++r) {
        const CayleyCheck check = cayley_check(r);
        CHECK(check.ok);
    }
    CHECK(cayley_check(4).tree_count == 125);
    CHECK(cayley_check(6).tree_count == 16807);
    CHECK(cayley_check(6).expected == "16807");
    CHECK_THROWS(cayley_check(0));
    CHECK_THROWS(cayley_check(8));
}

}  // TEST_SUITE
