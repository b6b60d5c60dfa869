#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kirchcert {

// Exact rational scalar.  Every value is kept canonical: gcd(|num|, den) = 1,
// den > 0, and zero is stored as 0/1.  All verdict-bearing arithmetic in this
// library runs on these; no floating point anywhere near a result.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long long n);
    Rational(long num, long den);
    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);

    // Parses "-?digits(/digits)?"; rejects anything else (including a zero
    // denominator and surrounding whitespace).
    static Rational from_string(std::string_view text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    Rational abs() const;
    Rational reciprocal() const;  // throws std::domain_error on zero

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // Integer exponent; negative exponents require a nonzero base.
    static Rational pow(const Rational& base, long exponent);

    std::string str() const;  // "p" when integral, else "p/q"
    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    mpq_class v_;  // invariant: always canonicalized
};

// Small exact integer helpers used throughout the verification routines.
mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);
mpz_class int_pow(const mpz_class& base, unsigned exponent);

}  // namespace kirchcert
