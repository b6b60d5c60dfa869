#include "kirchcert/polynomial_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace kirchcert {

PolynomialMatrix::PolynomialMatrix(int dim, int num_vars) : dim_(dim), num_vars_(num_vars) {
    if (dim < 0) throw std::invalid_argument("polynomial matrix: negative dimension");
    entries_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), Polynomial(num_vars));
}

Polynomial& PolynomialMatrix::at(int i, int j) {
    if (i < 1 || i > dim_ || j < 1 || j > dim_)
        throw std::out_of_range("polynomial matrix: index out of range");
    return entries_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j - 1)];
}

const Polynomial& PolynomialMatrix::at(int i, int j) const {
    return const_cast<PolynomialMatrix*>(this)->at(i, j);
}

bool PolynomialMatrix::is_symmetric() const {
    for (int i = 1; i <= dim_; ++i)
        for (int j = i + 1; j <= dim_; ++j)
            if (!(at(i, j) == at(j, i))) return false;
    return true;
}

PolynomialMatrix cofactor(const PolynomialMatrix& m, int i, int j) {
    if (i < 1 || i > m.dim() || j < 1 || j > m.dim())
        throw std::out_of_range("polynomial matrix: cofactor index out of range");
    PolynomialMatrix sub(m.dim() - 1, m.num_vars());
    for (int r = 1, rr = 1; r <= m.dim(); ++r) {
        if (r == i) continue;
        for (int c = 1, cc = 1; c <= m.dim(); ++c) {
            if (c == j) continue;
            sub.at(rr, cc) = m.at(r, c);
            ++cc;
        }
        ++rr;
    }
    return sub;
}

PolynomialMatrix laplacian(const Graph& g) {
    if (g.num_edges() < 1) throw std::invalid_argument("laplacian: graph has no edges");
    PolynomialMatrix l(g.num_vertices(), g.num_edges());
    for (int k = 1; k <= g.num_edges(); ++k) {
        const Edge& e = g.edge(k);
        const Polynomial x = Polynomial::variable(g.num_edges(), k);
        l.at(e.u, e.u) += x;
        l.at(e.v, e.v) += x;
        l.at(e.u, e.v) -= x;
        l.at(e.v, e.u) -= x;
    }
    return l;
}

Polynomial fraction_free_determinant(const PolynomialMatrix& m) {
    const int n = m.dim();
    if (n == 0) return Polynomial::constant(std::max(m.num_vars(), 1), Rational(1));
    // working copy
    std::vector<std::vector<Polynomial>> a(static_cast<std::size_t>(n),
                                           std::vector<Polynomial>(static_cast<std::size_t>(n), Polynomial(m.num_vars())));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i + 1, j + 1);

    int sign = 1;
    Polynomial prev = Polynomial::constant(m.num_vars(), Rational(1));
    for (int k = 0; k < n - 1; ++k) {
        if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r) {
                if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) return Polynomial(m.num_vars());  // singular
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pivot)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Polynomial num = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                                 a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                auto q = divide_exact(num, prev);
                if (!q)
                    throw std::logic_error("fraction-free determinant: inexact division (cannot happen)");
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(*q);
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = Polynomial(m.num_vars());
        }
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    Polynomial det = a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    if (sign < 0) det *= Rational(-1);
    return det;
}

Polynomial kirchhoff_polynomial(const Graph& g, KirchhoffRoute route) {
    if (g.num_edges() < 1)
        throw std::invalid_argument("kirchhoff polynomial: graph has no edges");
    if (!g.is_connected())
        throw DisconnectedGraphError("kirchhoff polynomial: graph is disconnected");
    if (route == KirchhoffRoute::Enumeration) {
        Polynomial f(g.num_edges());
        const SpanningTreeSet trees = spanning_trees(g);
        for (std::uint64_t mask : trees.masks()) {
            ExponentVector e(static_cast<std::size_t>(g.num_edges()), 0);
            for (int k = 0; k < g.num_edges(); ++k)
                if (mask >> k & 1) e[static_cast<std::size_t>(k)] = 1;
            f += Polynomial::monomial(g.num_edges(), e, Rational(1));
        }
        return f;
    }
    return fraction_free_determinant(cofactor(laplacian(g), 1, 1));
}

}  // namespace kirchcert
