#include <doctest.h>

#include <random>

#include "epspectra/exact.hpp"
#include "epspectra/param_poly.hpp"

using namespace epspectra;

TEST_SUITE("exact") {
  TEST_CASE("decimal and fraction text parses exactly") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-0.125") == Rational(-1, 8));
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK(parse_rational("1.5e-3") == Rational(3, 2000));
    CHECK(parse_rational("7/11") == Rational(7, 11));
    CHECK(to_fraction_string(parse_rational("0.1/11")) == "1/110");
    CHECK(to_fraction_string(parse_rational("4")) == "4/1");
  }

  TEST_CASE("malformed rationals are rejected") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("sqrt(2)"), std::invalid_argument);
  }

  TEST_CASE("Gaussian rational field axioms on random values") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-50, 50);
    auto draw = [&] {
      const int den1 = d(rng) % 9 == 0 ? 3 : std::abs(d(rng)) + 1;
      return GaussianRational(Rational(d(rng), den1), Rational(d(rng), std::abs(d(rng)) + 1));
    };
    for (int i = 0; i < 100; ++i) {
      GaussianRational a = draw(), b = draw(), c = draw();
      for (auto* x : {&a, &b, &c}) {
        Rational re = x->re(), im = x->im();
        re.canonicalize();
        im.canonicalize();
        *x = GaussianRational(re, im);
      }
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b).conj() == a.conj() * b.conj());
      if (!b.is_zero()) CHECK((a / b) * b == a);
      GaussianRational acc = a;
      acc.add_product(b, c);
      CHECK(acc == a + b * c);
    }
  }

  TEST_CASE("i squared is -1") { CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1L)); }

  TEST_CASE("polynomial arithmetic and evaluation") {
    const ParamPoly p = ParamPoly::monomial(GaussianRational(2L), 1) + ParamPoly(3L);  // 2c + 3
    const ParamPoly q = ParamPoly::monomial(GaussianRational(Rational(1), Rational(1)), 2);  // (1+i) c^2
    const ParamPoly pq = p * q;
    CHECK(pq.degree() == 3);
    CHECK(pq.coefficient(3) == GaussianRational(Rational(2), Rational(2)));
    CHECK(pq.coefficient(2) == GaussianRational(Rational(3), Rational(3)));
    CHECK(pq.coefficient(0).is_zero());
    CHECK(pq.evaluate(GaussianRational(2L)) == GaussianRational(Rational(28), Rational(28)));
    CHECK((p - p).is_zero());
    CHECK(to_string(ParamPoly{}) == "0");
    CHECK(to_string(p) == "3/1 * c^0 + 2/1 * c^1");
    const auto low = lowest_power(pq);
    REQUIRE(low.has_value());
    CHECK(low->exponent == 2);
    CHECK_FALSE(lowest_power(ParamPoly{}).has_value());
    const auto z = pq.evaluate(std::complex<long double>(0.5L, 0.0L));
    CHECK(std::abs(z - std::complex<long double>(1.0L, 1.0L)) < 1e-15L);
  }
}
