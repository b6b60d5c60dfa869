#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kirchcert/point.hpp"
#include "kirchcert/rational.hpp"

namespace kirchcert {

// Exponent vector of a monomial; entry k is the exponent of variable k+1.
// Always exactly num_vars entries long, including trailing zeros.
using ExponentVector = std::vector<unsigned>;

unsigned exponent_total(const ExponentVector& e);

// Canonical term order: graded lexicographic, descending — higher total degree
// first, ties broken by lexicographically larger exponent vector first.  Every
// iteration and serialization in the library follows this single order, so
// equal polynomials always print byte-identically.
struct GrlexDescending {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

struct HomogeneityProfile {
    bool is_homogeneous = true;
    // Total degree when defined; empty exactly for the zero polynomial (and
    // meaningless when not homogeneous, where it reports the maximum degree).
    std::optional<unsigned> degree;
    bool is_multi_affine = true;  // every exponent 0 or 1
};

// Sparse multivariate polynomial over Q in a fixed ambient variable set
// x1..x_num_vars.  Terms with zero coefficient are never stored.  All
// arithmetic between polynomials requires equal num_vars.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational, GrlexDescending>;

    explicit Polynomial(int num_vars);  // the zero polynomial
    static Polynomial constant(int num_vars, const Rational& value);
    static Polynomial variable(int num_vars, int index);  // 1-based
    static Polynomial monomial(int num_vars, ExponentVector exponents, const Rational& coeff);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const ExponentVector& e) const;
    // Maximum total degree over terms; zero polynomial has no degree.
    std::optional<unsigned> degree() const;
    HomogeneityProfile homogeneity_profile() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    Polynomial partial_derivative(int index) const;  // 1-based
    // Directional derivative sum_i a_i * dF/dx_i; a.dim() must equal num_vars.
    Polynomial directional_derivative(const RationalPoint& a) const;
    Rational evaluate(const RationalPoint& a) const;
    Rational evaluate(const std::vector<Rational>& coords) const;
    // Substitute 0 for each listed variable (1-based), same ambient set.
    Polynomial restrict_to_zero(const std::vector<int>& vars) const;

    std::string str() const;

private:
    void add_term(const ExponentVector& e, const Rational& c);

    int num_vars_;
    TermMap terms_;
};

// Sum over k-subsets S of {1..n} of prod_{i in S} x_i; requires 0 <= k <= n.
Polynomial elementary_symmetric(int n, int k);

// P(d/dx) applied to F: each term c*x^e of P acts as c * d^|e|/dx^e.
Polynomial apply_diff_operator(const Polynomial& p, const Polynomial& f);

// (Sum_i a_i d/dx_i)^order applied to F.
Polynomial iterated_directional_derivative(const Polynomial& f, const RationalPoint& a, unsigned order);

// Exact quotient when divisor divides numerator exactly over Q[x];
// std::nullopt otherwise.  Divisor must be nonzero.
std::optional<Polynomial> divide_exact(const Polynomial& numerator, const Polynomial& divisor);

Polynomial pow(const Polynomial& base, unsigned exponent);

// Parses the textual form produced by str(): terms "coeff * x<i>^<e> ..."
// joined by '+'/'-', with "p/q" coefficients; a bare coefficient or bare
// monomial is also accepted.  When num_vars < 0 the ambient size is inferred
// as the largest variable index mentioned.
Polynomial parse_polynomial(std::string_view text, int num_vars = -1);

}  // namespace kirchcert
