#include <catch2/catch.hpp>

#include "heckekit/laurent.hpp"
#include "test_util.hpp"

using heckekit::Int;
using heckekit::LaurentPoly;
using heckekit::NonDivisibleError;
using heckekit::quantum_binomial;
using heckekit::quantum_integer;

namespace {
LaurentPoly V(int e) { return LaurentPoly::v(e); }
}  // namespace

TEST_CASE("ring operations") {
  LaurentPoly a = V(1) + V(-1);
  CHECK(a * a == V(2) + LaurentPoly(2) + V(-2));
  CHECK(a + LaurentPoly() == a);
  // (v+v^5)(v+v^-1) = v^2+1+v^4+v^6
  CHECK((V(1) + V(5)) * a == V(2) + LaurentPoly(1) + V(4) + V(6));
  CHECK((a - a).is_zero());
  CHECK(-a == LaurentPoly() - a);
  CHECK((a * Int(3)) == a + a + a);
}

TEST_CASE("ring axioms on random triples") {
  hktest::Rng rng(42);
  for (int iter = 0; iter < 200; ++iter) {
    auto p = hktest::random_laurent(rng);
    auto q = hktest::random_laurent(rng);
    auto r = hktest::random_laurent(rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
  }
}

TEST_CASE("bar involution") {
  CHECK((V(1) + V(3)).bar() == V(-1) + V(-3));
  LaurentPoly sym = V(1) + V(-1);
  CHECK(sym.bar() == sym);
  hktest::Rng rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    auto p = hktest::random_laurent(rng);
    auto q = hktest::random_laurent(rng);
    CHECK(p.bar().bar() == p);
    CHECK((p * q).bar() == p.bar() * q.bar());
    CHECK((p + q).bar() == p.bar() + q.bar());
  }
}

TEST_CASE("psi automorphism v -> -v^-1") {
  CHECK(V(1).psi() == -V(-1));
  CHECK(V(2).psi() == V(-2));
  hktest::Rng rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    auto p = hktest::random_laurent(rng);
    auto q = hktest::random_laurent(rng);
    CHECK(p.psi().psi() == p);
    CHECK((p * q).psi() == p.psi() * q.psi());
    CHECK((p + q).psi() == p.psi() + q.psi());
  }
}

TEST_CASE("eval at one") {
  CHECK((V(1) + V(-1)).eval_at_one() == 2);
  CHECK(LaurentPoly().eval_at_one() == 0);
  CHECK((V(1) - V(-1)).eval_at_one() == 0);
}

TEST_CASE("quantum integers") {
  CHECK(quantum_integer(2) == V(1) + V(-1));
  CHECK(quantum_integer(0).is_zero());
  CHECK(quantum_integer(1).is_one());
  CHECK(quantum_integer(-3) == -quantum_integer(3));
  // [a+1] = v[a] + v^-a for a >= 0
  for (int a = 0; a <= 12; ++a)
    CHECK(quantum_integer(a + 1) == V(1) * quantum_integer(a) + V(-a));
}

TEST_CASE("quantum binomial") {
  // Frozen via long division of [4][3] by [2][1].
  CHECK(quantum_binomial(4, 2) == V(4) + V(2) + LaurentPoly(2) + V(-2) + V(-4));
  CHECK(quantum_binomial(5, 0).is_one());
  CHECK(quantum_binomial(3, 3).is_one());
  CHECK(quantum_binomial(2, 3).is_zero());
  // Independent oracle: divide the full products in one shot.
  for (int a = 0; a <= 7; ++a)
    for (int n = 0; n <= a; ++n) {
      LaurentPoly num(1), den(1);
      for (int i = 0; i < n; ++i) num *= quantum_integer(a - i);
      for (int i = 1; i <= n; ++i) den *= quantum_integer(i);
      CHECK(quantum_binomial(a, n) == num.exact_div(den));
    }
  // exs-style identity [a; n] = (-1)^n [n - a - 1; n] for negative upper index.
  for (int a = -5; a < 0; ++a)
    for (int n = 0; n <= 4; ++n) {
      LaurentPoly rhs = quantum_binomial(n - a - 1, n);
      if (n % 2) rhs = -rhs;
      CHECK(quantum_binomial(a, n) == rhs);
    }
  CHECK_THROWS_AS(quantum_binomial(4, -1), std::invalid_argument);
}

TEST_CASE("exact division") {
  LaurentPoly num = LaurentPoly(1) + V(2) + V(4) + V(6);
  CHECK(num.exact_div(V(1) + V(-1)) == V(1) + V(5));
  LaurentPoly p = V(3) - LaurentPoly(2) + V(-1);
  CHECK(p.exact_div(LaurentPoly(1)) == p);
  CHECK((V(2) + LaurentPoly(2) + V(-2)).exact_div(V(1) + V(-1)) == V(1) + V(-1));
  CHECK_FALSE((V(1) + LaurentPoly(1)).try_div(V(1) + V(-1)).has_value());
  // v^2 + 1 = v (v + v^-1) is divisible; v^2 + 2 is not
  CHECK((V(2) + LaurentPoly(1)).exact_div(V(1) + V(-1)) == V(1));
  CHECK_THROWS_AS((V(2) + LaurentPoly(2)).exact_div(V(1) + V(-1)), NonDivisibleError);
  CHECK_THROWS_AS(p.exact_div(LaurentPoly()), std::invalid_argument);

  hktest::Rng rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    auto p2 = hktest::random_laurent(rng);
    auto q2 = hktest::random_laurent(rng);
    if (q2.is_zero()) continue;
    CHECK((p2 * q2).exact_div(q2) == p2);
  }
}

TEST_CASE("text round trip") {
  CHECK((V(-2) + LaurentPoly(1) + V(2) + V(4)).str() == "v^-2 + 1 + v^2 + v^4");
  CHECK(LaurentPoly().str() == "0");
  CHECK((-V(1) + LaurentPoly::monomial(3, 4)).str() == "-v + 3v^4");
  hktest::Rng rng(123);
  for (int iter = 0; iter < 200; ++iter) {
    auto p = hktest::random_laurent(rng);
    CHECK(LaurentPoly::parse(p.str()) == p);
  }
}
