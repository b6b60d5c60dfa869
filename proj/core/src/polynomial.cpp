#include "kirchcert/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace kirchcert {

unsigned exponent_total(const ExponentVector& e) {
    unsigned t = 0;
    for (unsigned x : e) t += x;
    return t;
}

bool GrlexDescending::operator()(const ExponentVector& a, const ExponentVector& b) const {
    const unsigned ta = exponent_total(a);
    const unsigned tb = exponent_total(b);
    if (ta != tb) return ta > tb;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void check_same_vars(const Polynomial& a, const Polynomial& b) {
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("polynomial: operands live in different variable sets");
}

void check_var_index(int num_vars, int index) {
    if (index < 1 || index > num_vars)
        throw std::out_of_range("polynomial: variable index out of range");
}

}  // namespace

Polynomial::Polynomial(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 1) throw std::invalid_argument("polynomial: need at least one variable");
}

Polynomial Polynomial::constant(int num_vars, const Rational& value) {
    Polynomial p(num_vars);
    p.add_term(ExponentVector(static_cast<std::size_t>(num_vars), 0), value);
    return p;
}

Polynomial Polynomial::variable(int num_vars, int index) {
    check_var_index(num_vars, index);
    Polynomial p(num_vars);
    ExponentVector e(static_cast<std::size_t>(num_vars), 0);
    e[static_cast<std::size_t>(index) - 1] = 1;
    p.add_term(e, Rational(1));
    return p;
}

Polynomial Polynomial::monomial(int num_vars, ExponentVector exponents, const Rational& coeff) {
    if (static_cast<int>(exponents.size()) != num_vars)
        throw std::invalid_argument("polynomial: exponent vector has wrong length");
    Polynomial p(num_vars);
    p.add_term(exponents, coeff);
    return p;
}

Rational Polynomial::coeff(const ExponentVector& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<unsigned> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    // Terms are ordered by descending total degree, so the first is maximal.
    return exponent_total(terms_.begin()->first);
}

HomogeneityProfile Polynomial::homogeneity_profile() const {
    HomogeneityProfile prof;
    if (terms_.empty()) return prof;  // zero: homogeneous, no degree
    const unsigned top = exponent_total(terms_.begin()->first);
    prof.degree = top;
    for (const auto& [e, c] : terms_) {
        if (exponent_total(e) != top) prof.is_homogeneous = false;
        for (unsigned x : e)
            if (x > 1) prof.is_multi_affine = false;
    }
    return prof;
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(num_vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_vars(a, b);
    Polynomial r(a.num_vars());
    ExponentVector e(static_cast<std::size_t>(a.num_vars()), 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::partial_derivative(int index) const {
    check_var_index(num_vars_, index);
    const std::size_t k = static_cast<std::size_t>(index) - 1;
    Polynomial r(num_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        ExponentVector d = e;
        --d[k];
        r.add_term(d, c * Rational(static_cast<long>(e[k])));
    }
    return r;
}

Polynomial Polynomial::directional_derivative(const RationalPoint& a) const {
    if (a.dim() != num_vars_)
        throw std::invalid_argument("polynomial: direction has wrong dimension");
    Polynomial r(num_vars_);
    for (int i = 1; i <= num_vars_; ++i) {
        const Rational& ai = a[i];
        if (ai.is_zero()) continue;
        r += partial_derivative(i) * ai;
    }
    return r;
}

Rational Polynomial::evaluate(const RationalPoint& a) const {
    if (a.dim() != num_vars_)
        throw std::invalid_argument("polynomial: point has wrong dimension");
    return evaluate(a.coords());
}

Rational Polynomial::evaluate(const std::vector<Rational>& coords) const {
    if (static_cast<int>(coords.size()) != num_vars_)
        throw std::invalid_argument("polynomial: point has wrong dimension");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        bool vanished = false;
        for (std::size_t k = 0; k < e.size() && !vanished; ++k) {
            if (e[k] == 0) continue;
            if (coords[k].is_zero()) {
                vanished = true;
                break;
            }
            term *= Rational::pow(coords[k], static_cast<long>(e[k]));
        }
        if (!vanished) total += term;
    }
    return total;
}

Polynomial Polynomial::restrict_to_zero(const std::vector<int>& vars) const {
    std::vector<bool> zeroed(static_cast<std::size_t>(num_vars_), false);
    for (int v : vars) {
        check_var_index(num_vars_, v);
        zeroed[static_cast<std::size_t>(v) - 1] = true;
    }
    Polynomial r(num_vars_);
    for (const auto& [e, c] : terms_) {
        bool keep = true;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (zeroed[k] && e[k] > 0) {
                keep = false;
                break;
            }
        }
        if (keep) r.terms_.emplace(e, c);
    }
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        out += c.abs().str();
        bool first_factor = true;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            out += first_factor ? " * x" : " x";
            first_factor = false;
            out += std::to_string(k + 1);
            if (e[k] > 1) out += "^" + std::to_string(e[k]);
        }
    }
    return out;
}

Polynomial elementary_symmetric(int n, int k) {
    if (n < 1) throw std::invalid_argument("elementary_symmetric: need n >= 1");
    if (k < 0 || k > n) throw std::out_of_range("elementary_symmetric: need 0 <= k <= n");
    Polynomial r(n);
    if (k == 0) return Polynomial::constant(n, Rational(1));
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        ExponentVector e(static_cast<std::size_t>(n), 0);
        for (int i : idx) e[static_cast<std::size_t>(i)] = 1;
        r += Polynomial::monomial(n, e, Rational(1));
        // advance to the next k-combination of {0..n-1}
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return r;
}

Polynomial apply_diff_operator(const Polynomial& p, const Polynomial& f) {
    check_same_vars(p, f);
    Polynomial r(f.num_vars());
    for (const auto& [ep, cp] : p.terms()) {
        for (const auto& [ef, cf] : f.terms()) {
            Rational factor = cp * cf;
            ExponentVector e(ef.size());
            bool ok = true;
            for (std::size_t k = 0; k < ef.size(); ++k) {
                if (ef[k] < ep[k]) {
                    ok = false;
                    break;
                }
                e[k] = ef[k] - ep[k];
                // falling factorial ef[k] * (ef[k]-1) * ... * (e[k]+1)
                for (unsigned m = ef[k]; m > e[k]; --m) factor *= Rational(static_cast<long>(m));
            }
            if (ok) r += Polynomial::monomial(f.num_vars(), e, factor);
        }
    }
    return r;
}

Polynomial iterated_directional_derivative(const Polynomial& f, const RationalPoint& a, unsigned order) {
    Polynomial r = f;
    for (unsigned i = 0; i < order; ++i) r = r.directional_derivative(a);
    return r;
}

std::optional<Polynomial> divide_exact(const Polynomial& numerator, const Polynomial& divisor) {
    check_same_vars(numerator, divisor);
    if (divisor.is_zero()) throw std::invalid_argument("divide_exact: divisor is zero");
    Polynomial quotient(numerator.num_vars());
    Polynomial remainder = numerator;
    const auto& [ed, cd] = *divisor.terms().begin();  // grlex-leading term
    while (!remainder.is_zero()) {
        const auto& [er, cr] = *remainder.terms().begin();
        ExponentVector q(er.size());
        for (std::size_t k = 0; k < er.size(); ++k) {
            if (er[k] < ed[k]) return std::nullopt;
            q[k] = er[k] - ed[k];
        }
        // If the quotient exists, its leading term must be lt(num)/lt(div);
        // peeling it off strictly lowers the remainder's leading monomial,
        // so this loop terminates.
        const Polynomial piece = Polynomial::monomial(numerator.num_vars(), q, cr / cd);
        quotient += piece;
        remainder -= piece * divisor;
    }
    return quotient;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial r = Polynomial::constant(base.num_vars(), Rational(1));
    for (unsigned i = 0; i < exponent; ++i) r *= base;
    return r;
}

namespace {

// Tokenizer for the polynomial text format.
struct Token {
    enum Kind { Integer, Variable, Plus, Minus, Star, Slash, Caret, End } kind;
    mpz_class number;  // Integer payload
    int var_index = 0;  // Variable payload
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ >= text_.size()) return {Token::End, 0, 0};
        const char c = text_[pos_];
        if (c == '+') { ++pos_; return {Token::Plus, 0, 0}; }
        if (c == '-') { ++pos_; return {Token::Minus, 0, 0}; }
        if (c == '*') { ++pos_; return {Token::Star, 0, 0}; }
        if (c == '/') { ++pos_; return {Token::Slash, 0, 0}; }
        if (c == '^') { ++pos_; return {Token::Caret, 0, 0}; }
        if (c == 'x') {
            ++pos_;
            const std::string digits = take_digits();
            if (digits.empty()) throw std::invalid_argument("polynomial parse: 'x' without index");
            return {Token::Variable, 0, std::stoi(digits)};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return {Token::Integer, mpz_class(take_digits(), 10), 0};
        }
        throw std::invalid_argument(std::string("polynomial parse: unexpected character '") + c + "'");
    }

private:
    std::string take_digits() {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            s += text_[pos_++];
        return s;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

struct ParsedTerm {
    Rational coeff{1};
    std::map<int, unsigned> powers;  // variable index -> exponent
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int num_vars) {
    Lexer lex(text);
    Token tok = lex.next();
    if (tok.kind == Token::End) throw std::invalid_argument("polynomial parse: empty input");

    std::vector<ParsedTerm> parsed;
    int max_var = 0;
    bool negate_next = false;
    if (tok.kind == Token::Minus) {
        negate_next = true;
        tok = lex.next();
    }
    for (;;) {
        ParsedTerm term;
        if (negate_next) term.coeff = Rational(-1);
        bool saw_anything = false;
        if (tok.kind == Token::Integer) {
            saw_anything = true;
            mpz_class num = tok.number;
            mpz_class den = 1;
            tok = lex.next();
            if (tok.kind == Token::Slash) {
                tok = lex.next();
                if (tok.kind != Token::Integer)
                    throw std::invalid_argument("polynomial parse: '/' without denominator");
                den = tok.number;
                tok = lex.next();
            }
            term.coeff *= Rational(num, den);
            if (tok.kind == Token::Star) tok = lex.next();  // optional '*'
        }
        while (tok.kind == Token::Variable) {
            saw_anything = true;
            const int v = tok.var_index;
            if (v < 1) throw std::invalid_argument("polynomial parse: variable index must be >= 1");
            unsigned e = 1;
            tok = lex.next();
            if (tok.kind == Token::Caret) {
                tok = lex.next();
                if (tok.kind != Token::Integer)
                    throw std::invalid_argument("polynomial parse: '^' without exponent");
                e = static_cast<unsigned>(tok.number.get_ui());
                tok = lex.next();
            }
            term.powers[v] += e;
            max_var = std::max(max_var, v);
            if (tok.kind == Token::Star) tok = lex.next();  // allow 'x1 * x2'
        }
        if (!saw_anything) throw std::invalid_argument("polynomial parse: expected a term");
        parsed.push_back(std::move(term));

        if (tok.kind == Token::End) break;
        if (tok.kind == Token::Plus) {
            negate_next = false;
        } else if (tok.kind == Token::Minus) {
            negate_next = true;
        } else {
            throw std::invalid_argument("polynomial parse: expected '+' or '-' between terms");
        }
        tok = lex.next();
    }

    const int n = num_vars >= 0 ? num_vars : std::max(max_var, 1);
    if (max_var > n)
        throw std::invalid_argument("polynomial parse: variable index exceeds ambient set");
    Polynomial result(n);
    for (const ParsedTerm& t : parsed) {
        ExponentVector e(static_cast<std::size_t>(n), 0);
        for (const auto& [v, p] : t.powers) e[static_cast<std::size_t>(v) - 1] = p;
        result += Polynomial::monomial(n, e, t.coeff);
    }
    return result;
}

}  // namespace kirchcert
