#include "kirchcert/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace kirchcert {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::outer(const std::vector<Rational>& v) {
    const int n = static_cast<int>(v.size());
    RationalMatrix m(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.at(i, j) = v[static_cast<std::size_t>(i) - 1] * v[static_cast<std::size_t>(j) - 1];
    return m;
}

Rational& RationalMatrix::at(int i, int j) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw std::out_of_range("matrix: index out of range");
    return entries_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j - 1)];
}

const Rational& RationalMatrix::at(int i, int j) const {
    return const_cast<RationalMatrix*>(this)->at(i, j);
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix: incompatible product dimensions");
    RationalMatrix r(rows_, o.cols_);
    for (int i = 1; i <= rows_; ++i) {
        for (int k = 1; k <= cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 1; j <= o.cols_; ++j) {
                const Rational& bkj = o.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix: incompatible sum dimensions");
    RationalMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + o.entries_[k];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix: incompatible sum dimensions");
    RationalMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] - o.entries_[k];
    return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
    RationalMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] * c;
    return r;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix: vector has wrong dimension");
    std::vector<Rational> out(static_cast<std::size_t>(rows_), Rational(0));
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j)
            out[static_cast<std::size_t>(i) - 1] += at(i, j) * v[static_cast<std::size_t>(j) - 1];
    return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Rational RationalMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("matrix: determinant of a non-square matrix");
    const int n = rows_;
    RationalMatrix a = *this;
    Rational det(1);
    for (int k = 1; k <= n; ++k) {
        int pivot = 0;
        for (int r = k; r <= n; ++r) {
            if (!a.at(r, k).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == 0) return Rational(0);
        if (pivot != k) {
            for (int j = k; j <= n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            det = -det;
        }
        det *= a.at(k, k);
        for (int r = k + 1; r <= n; ++r) {
            if (a.at(r, k).is_zero()) continue;
            const Rational f = a.at(r, k) / a.at(k, k);
            for (int j = k; j <= n; ++j) a.at(r, j) -= f * a.at(k, j);
        }
    }
    return det;
}

namespace {

// Row-reduce in place; returns the pivot column (1-based) of each pivot row.
std::vector<int> reduced_row_echelon(RationalMatrix& a) {
    std::vector<int> pivot_cols;
    int row = 1;
    for (int col = 1; col <= a.cols() && row <= a.rows(); ++col) {
        int pivot = 0;
        for (int r = row; r <= a.rows(); ++r) {
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == 0) continue;
        if (pivot != row)
            for (int j = 1; j <= a.cols(); ++j) std::swap(a.at(row, j), a.at(pivot, j));
        const Rational inv = a.at(row, col).reciprocal();
        for (int j = 1; j <= a.cols(); ++j) a.at(row, j) *= inv;
        for (int r = 1; r <= a.rows(); ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            const Rational f = a.at(r, col);
            for (int j = 1; j <= a.cols(); ++j) a.at(r, j) -= f * a.at(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

int RationalMatrix::rank() const {
    RationalMatrix a = *this;
    return static_cast<int>(reduced_row_echelon(a).size());
}

std::vector<std::vector<Rational>> RationalMatrix::nullspace() const {
    RationalMatrix a = *this;
    const std::vector<int> pivot_cols = reduced_row_echelon(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_) + 1, false);
    for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 1; free <= cols_; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(cols_), Rational(0));
        v[static_cast<std::size_t>(free) - 1] = Rational(1);
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            v[static_cast<std::size_t>(pivot_cols[r]) - 1] = -a.at(static_cast<int>(r) + 1, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

SymmetricRationalMatrix::SymmetricRationalMatrix(int dim) : m_(dim, dim) {}

SymmetricRationalMatrix SymmetricRationalMatrix::from_matrix(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("symmetric matrix: input not square");
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = i + 1; j <= m.cols(); ++j)
            if (!(m.at(i, j) == m.at(j, i)))
                throw std::invalid_argument("symmetric matrix: input not symmetric");
    SymmetricRationalMatrix s(m.rows());
    s.m_ = m;
    return s;
}

void SymmetricRationalMatrix::set(int i, int j, const Rational& value) {
    m_.at(i, j) = value;
    m_.at(j, i) = value;
}

void SymmetricRationalMatrix::add(int i, int j, const Rational& value) {
    m_.at(i, j) += value;
    if (i != j) m_.at(j, i) += value;
}

std::string Inertia::str() const {
    return "(" + std::to_string(n_plus) + ", " + std::to_string(n_minus) + ", " + std::to_string(n_zero) + ")";
}

CongruenceDiagonalization diagonalize_congruence(const SymmetricRationalMatrix& sym) {
    const int n = sym.dim();
    RationalMatrix m = sym.matrix();
    RationalMatrix s = RationalMatrix::identity(n);

    // Apply a congruence column operation C_target += f * C_source to both m
    // (rows and columns, keeping it symmetric) and the accumulated transform.
    const auto add_col = [&](int target, int source, const Rational& f) {
        for (int r = 1; r <= n; ++r) m.at(r, target) += f * m.at(r, source);
        for (int c = 1; c <= n; ++c) m.at(target, c) += f * m.at(source, c);
        for (int r = 1; r <= n; ++r) s.at(r, target) += f * s.at(r, source);
    };
    const auto swap_cols = [&](int a, int b) {
        for (int r = 1; r <= n; ++r) std::swap(m.at(r, a), m.at(r, b));
        for (int c = 1; c <= n; ++c) std::swap(m.at(a, c), m.at(b, c));
        for (int r = 1; r <= n; ++r) std::swap(s.at(r, a), s.at(r, b));
    };

    for (int k = 1; k <= n; ++k) {
        if (m.at(k, k).is_zero()) {
            // first nonzero trailing diagonal entry, if any
            int pos = 0;
            for (int j = k + 1; j <= n; ++j) {
                if (!m.at(j, j).is_zero()) {
                    pos = j;
                    break;
                }
            }
            if (pos != 0) {
                swap_cols(k, pos);
            } else {
                // trailing diagonal all zero: fix up with the first nonzero
                // off-diagonal entry (in index order); adding column j to
                // column i makes the (i, i) entry 2 m_ij != 0
                int oi = 0;
                int oj = 0;
                for (int i = k; i <= n && oi == 0; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        if (!m.at(i, j).is_zero()) {
                            oi = i;
                            oj = j;
                            break;
                        }
                if (oi == 0) break;  // trailing block is zero: done
                add_col(oi, oj, Rational(1));
                if (oi != k) swap_cols(k, oi);
            }
        }
        const Rational pivot = m.at(k, k);
        for (int j = k + 1; j <= n; ++j) {
            if (m.at(k, j).is_zero()) continue;
            add_col(j, k, -(m.at(k, j) / pivot));
        }
    }

    CongruenceDiagonalization out{Inertia{}, std::move(s), {}};
    out.diagonal.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const Rational& d = m.at(k, k);
        out.diagonal.push_back(d);
        if (d.sign() > 0)
            ++out.inertia.n_plus;
        else if (d.sign() < 0)
            ++out.inertia.n_minus;
        else
            ++out.inertia.n_zero;
    }
    return out;
}

Inertia inertia_of(const SymmetricRationalMatrix& m) {
    return diagonalize_congruence(m).inertia;
}

std::vector<std::vector<Rational>> kernel_basis(const CongruenceDiagonalization& d) {
    std::vector<std::vector<Rational>> out;
    const int n = d.transform.rows();
    for (int k = 1; k <= n; ++k) {
        if (!d.diagonal[static_cast<std::size_t>(k) - 1].is_zero()) continue;
        std::vector<Rational> v(static_cast<std::size_t>(n));
        for (int r = 1; r <= n; ++r) v[static_cast<std::size_t>(r) - 1] = d.transform.at(r, k);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<Rational>> negative_direction(const CongruenceDiagonalization& d) {
    const int n = d.transform.rows();
    for (int k = 1; k <= n; ++k) {
        if (d.diagonal[static_cast<std::size_t>(k) - 1].sign() >= 0) continue;
        std::vector<Rational> v(static_cast<std::size_t>(n));
        for (int r = 1; r <= n; ++r) v[static_cast<std::size_t>(r) - 1] = d.transform.at(r, k);
        return v;
    }
    return std::nullopt;
}

RationalMatrix submatrix_without(const RationalMatrix& m, int row, int col) {
    if (row < 1 || row > m.rows() || col < 1 || col > m.cols())
        throw std::out_of_range("matrix: submatrix index out of range");
    RationalMatrix out(m.rows() - 1, m.cols() - 1);
    for (int i = 1, oi = 1; i <= m.rows(); ++i) {
        if (i == row) continue;
        for (int j = 1, oj = 1; j <= m.cols(); ++j) {
            if (j == col) continue;
            out.at(oi, oj) = m.at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

Rational quadratic_form(const SymmetricRationalMatrix& m, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != m.dim())
        throw std::invalid_argument("quadratic form: vector has wrong dimension");
    Rational total(0);
    for (int i = 1; i <= m.dim(); ++i) {
        const Rational& vi = v[static_cast<std::size_t>(i) - 1];
        if (vi.is_zero()) continue;
        for (int j = 1; j <= m.dim(); ++j) {
            const Rational& vj = v[static_cast<std::size_t>(j) - 1];
            if (!vj.is_zero()) total += vi * m.at(i, j) * vj;
        }
    }
    return total;
}

}  // namespace kirchcert
