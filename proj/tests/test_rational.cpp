#include "doctest.h"

#include <sstream>

#include "kirchcert/rational.hpp"
#include "kirchcert/rng.hpp"

using kirchcert::Rational;

TEST_SUITE("rational") {

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(1, -2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, -3) == Rational(-2));
    CHECK(Rational(6, 3).is_integer());
    CHECK_FALSE(Rational(7, 3).is_integer());
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("from_string accepts exactly -?digits(/digits)?") {
    CHECK(Rational::from_string("22/7") == Rational(22, 7));
    CHECK(Rational::from_string("-3") == Rational(-3));
    CHECK(Rational::from_string("-10/4") == Rational(-5, 2));
    CHECK_THROWS(Rational::from_string("1/0"));
    CHECK_THROWS(Rational::from_string("1.5"));
    CHECK_THROWS(Rational::from_string(" 1"));
    CHECK_THROWS(Rational::from_string("1/"));
    CHECK_THROWS(Rational::from_string("/2"));
    CHECK_THROWS(Rational::from_string(""));
    CHECK_THROWS(Rational::from_string("two"));
    CHECK_THROWS(Rational::from_string("1/-2"));
}

TEST_CASE("field arithmetic") {
    const Rational a(3, 4), b(-5, 6);
    CHECK(a + b == Rational(-1, 12));
    CHECK(a - b == Rational(19, 12));
    CHECK(a * b == Rational(-5, 8));
    CHECK(a / b == Rational(-9, 10));
    CHECK(-a == Rational(-3, 4));
    CHECK(a.reciprocal() == Rational(4, 3));
    CHECK_THROWS(Rational(0).reciprocal());
    CHECK_THROWS(a / Rational(0));
}

TEST_CASE("ordering and sign") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-7, 2) < Rational(-3));
    CHECK(Rational(5, 10) <= Rational(1, 2));
    CHECK(Rational(2).sign() == 1);
    CHECK(Rational(-2, 9).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(-5, 7).abs() == Rational(5, 7));
}

TEST_CASE("pow handles negative exponents exactly") {
    CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(Rational::pow(Rational(2, 3), 0) == Rational(1));
    CHECK(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(Rational::pow(Rational(-2), 5) == Rational(-32));
    CHECK_THROWS(Rational::pow(Rational(0), -1));
}

TEST_CASE("string round trip") {
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(-22, 7).str() == "-22/7");
    CHECK(Rational(4, 2).str() == "2");
    std::ostringstream out;
    out << Rational(-1, 3);
    CHECK(out.str() == "-1/3");
}

TEST_CASE("integer helpers") {
    CHECK(kirchcert::factorial(0) == Rational(1));
    CHECK(kirchcert::factorial(6) == Rational(720));
    CHECK(kirchcert::binomial(7, 2) == Rational(21));
    CHECK(kirchcert::binomial(3, 5) == Rational(0));
    CHECK(kirchcert::int_pow(7, 5) == Rational(16807));
}

TEST_CASE("seeded rng is deterministic and in range") {
    kirchcert::SeededRng a(42), b(42), c(43);
    bool all_equal = true;
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t va = a.uniform_positive(1 << 20);
        const std::uint64_t vb = b.uniform_positive(1 << 20);
        CHECK(va >= 1);
        CHECK(va <= (1 << 20));
        if (va != vb) all_equal = false;
    }
    CHECK(all_equal);
    bool diverged = false;
    kirchcert::SeededRng a2(42);
    for (int i = 0; i < 200; ++i)
        if (a2.uniform_positive(1 << 20) != c.uniform_positive(1 << 20)) diverged = true;
    CHECK(diverged);

    kirchcert::SeededRng r(7);
    const auto point = r.integer_point(5, 1 << 20);
    CHECK(point.size() == 5);
    for (const Rational& x : point) {
        CHECK(x.is_integer());
        CHECK(x >= Rational(1));
        CHECK(x <= Rational(1 << 20));
    }
    const Rational q = r.positive_rational(64);
    CHECK(q > Rational(0));
    CHECK(q.num() <= 64);
    CHECK(q.den() <= 64);
}

}  // TEST_SUITE
