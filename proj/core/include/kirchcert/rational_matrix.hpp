#pragma once

#include <optional>
#include <vector>

#include "kirchcert/rational.hpp"

namespace kirchcert {

// Dense matrix over Q with exact arithmetic throughout.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols);  // zero-filled
    static RationalMatrix identity(int n);
    static RationalMatrix outer(const std::vector<Rational>& v);  // v v^T

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j);              // 1-based
    const Rational& at(int i, int j) const;

    RationalMatrix transposed() const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix scaled(const Rational& c) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

    Rational determinant() const;  // exact Gaussian elimination; square only
    int rank() const;
    // Reduced-row-echelon nullspace basis: one vector per free column, in
    // ascending free-column order, free coordinate set to 1.
    std::vector<std::vector<Rational>> nullspace() const;

private:
    int rows_;
    int cols_;
    std::vector<Rational> entries_;
};

// Symmetric matrix over Q; set() writes both mirror entries and from_matrix
// rejects asymmetric input, so the invariant always holds.
class SymmetricRationalMatrix {
public:
    explicit SymmetricRationalMatrix(int dim);
    static SymmetricRationalMatrix from_matrix(const RationalMatrix& m);

    int dim() const { return m_.rows(); }
    const Rational& at(int i, int j) const { return m_.at(i, j); }
    void set(int i, int j, const Rational& value);
    void add(int i, int j, const Rational& value);
    const RationalMatrix& matrix() const { return m_; }

private:
    RationalMatrix m_;
};

// Signature of a real symmetric matrix: counts of positive, negative and zero
// eigenvalues.  Computed exactly (Sylvester's law of inertia) — never from
// floating-point eigenvalues.
struct Inertia {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;
    bool operator==(const Inertia&) const = default;
    std::string str() const;  // "(p, m, z)"
};

// Result of symmetric congruence reduction D = S^T M S with D diagonal and S
// invertible.  Columns of S over zero diagonal entries of D form a basis of
// the kernel of M; a column over a negative entry y has y^T M y < 0.
struct CongruenceDiagonalization {
    Inertia inertia;
    RationalMatrix transform;        // S
    std::vector<Rational> diagonal;  // diag(D)
};

CongruenceDiagonalization diagonalize_congruence(const SymmetricRationalMatrix& m);
Inertia inertia_of(const SymmetricRationalMatrix& m);

// Exact certificates extracted from a congruence reduction.
std::vector<std::vector<Rational>> kernel_basis(const CongruenceDiagonalization& d);
std::optional<std::vector<Rational>> negative_direction(const CongruenceDiagonalization& d);

// Exact quadratic form value v^T M v.
Rational quadratic_form(const SymmetricRationalMatrix& m, const std::vector<Rational>& v);

// Copy of m with row `row` and column `col` removed (1-based).
RationalMatrix submatrix_without(const RationalMatrix& m, int row, int col);

}  // namespace kirchcert
