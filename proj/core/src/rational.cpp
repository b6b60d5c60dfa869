#include "kirchcert/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace kirchcert {

namespace {

[[noreturn]] void throw_zero_denominator() {
    throw std::domain_error("rational: zero denominator");
}

}  // namespace

Rational::Rational(long long n) {
    // mpq_class has no long long constructor; route through mpz via decimal.
    v_ = mpq_class(mpz_class(std::to_string(n)));
}

Rational::Rational(long num, long den) {
    if (den == 0) throw_zero_denominator();
    v_ = mpq_class(num, den);
    v_.canonicalize();  // mpq_class(n, d) does not canonicalize on its own
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw_zero_denominator();
    v_ = mpq_class(num) / mpq_class(den);  // operator/ canonicalizes
}

Rational Rational::from_string(std::string_view text) {
    const auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num_part = body;
    std::string_view den_part;
    bool has_den = false;
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        num_part = body.substr(0, slash);
        den_part = body.substr(slash + 1);
        has_den = true;
    }
    if (!all_digits(num_part) || (has_den && !all_digits(den_part)))
        throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
    mpz_class num(std::string(num_part), 10);
    mpz_class den = has_den ? mpz_class(std::string(den_part), 10) : mpz_class(1);
    if (den == 0) throw_zero_denominator();
    if (negative) num = -num;
    return Rational(num, den);
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("rational: reciprocal of zero");
    return Rational(den(), num());
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw_zero_denominator();
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        return pow(base.reciprocal(), -exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);  // powers of a canonical fraction stay coprime
}

std::string Rational::str() const {
    std::string s = num().get_str();
    if (!is_integer()) {
        s += '/';
        s += den().get_str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class int_pow(const mpz_class& base, unsigned exponent) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

}  // namespace kirchcert
