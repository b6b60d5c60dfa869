#pragma once

#include "kirchcert/graph.hpp"
#include "kirchcert/polynomial.hpp"

namespace kirchcert {

// Square matrix of polynomials sharing one ambient variable set.
class PolynomialMatrix {
public:
    PolynomialMatrix(int dim, int num_vars);  // zero-filled; dim >= 0

    int dim() const { return dim_; }
    int num_vars() const { return num_vars_; }
    Polynomial& at(int i, int j);              // 1-based
    const Polynomial& at(int i, int j) const;
    bool is_symmetric() const;

private:
    int dim_;
    int num_vars_;
    std::vector<Polynomial> entries_;
};

// Submatrix with row i and column j removed (1-based).
PolynomialMatrix cofactor(const PolynomialMatrix& m, int i, int j);

// Weighted Laplacian: edge k with endpoints (u, v) contributes
// x_k * (E_uu - E_uv - E_vu + E_vv); loops therefore contribute nothing.
// Dimension = num_vertices, variables = edges.
PolynomialMatrix laplacian(const Graph& g);

// Exact determinant by Bareiss one-step fraction-free elimination; every
// intermediate division is exact, no rational functions appear.  The empty
// matrix has determinant 1.
Polynomial fraction_free_determinant(const PolynomialMatrix& m);

enum class KirchhoffRoute {
    MatrixTree,   // (1,1)-cofactor of the Laplacian, fraction-free determinant
    Enumeration,  // sum over spanning trees of the edge-variable product
};

// Spanning-tree generating polynomial in one variable per edge.  The two
// routes agree on every graph; a disconnected graph yields zero.
Polynomial kirchhoff_polynomial(const Graph& g, KirchhoffRoute route);

}  // namespace kirchcert
