#include <catch2/catch.hpp>

#include "heckekit/hecke.hpp"
#include "test_util.hpp"

using namespace heckekit;

namespace {

Permutation word(int n, std::initializer_list<int> gens) {
  Permutation w = Permutation::identity(n);
  for (int i : gens) w = w * Permutation::simple(n, i);
  return w;
}

LaurentPoly V(int e) { return LaurentPoly::v(e); }

HeckeElt random_elt(hktest::Rng& rng, int n, const std::vector<Permutation>& all) {
  HeckeElt a(n);
  int terms = rng.range(1, 4);
  for (int t = 0; t < terms; ++t)
    a.add_term(all[rng.range(0, static_cast<int>(all.size()) - 1)], hktest::random_laurent(rng, 3, 3, 4));
  return a;
}

}  // namespace

TEST_CASE("standard basis multiplication") {
  const int n = 3;
  auto s = Permutation::simple(n, 1);
  auto Hs = HeckeElt::basis(s);
  HeckeElt expected = HeckeElt::unit(n);
  expected.add_term(s, V(-1) - V(1));
  CHECK(Hs * Hs == expected);

  auto x = word(n, {1, 2});
  CHECK(HeckeElt::unit(n) * HeckeElt::basis(x) == HeckeElt::basis(x));
  CHECK(HeckeElt::basis(s) * HeckeElt::basis(Permutation::simple(n, 2)) == HeckeElt::basis(x));

  // associativity on random triples
  hktest::Rng rng(5);
  auto all = symmetric_group(3);
  for (int iter = 0; iter < 25; ++iter) {
    auto a = random_elt(rng, 3, all);
    auto b = random_elt(rng, 3, all);
    auto c = random_elt(rng, 3, all);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("specialization v=1 gives the group algebra") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& x : symmetric_group(n))
      for (const auto& y : symmetric_group(n)) {
        auto prod = HeckeElt::basis(x) * HeckeElt::basis(y);
        std::map<Permutation, Int> expected{{x * y, 1}};
        CHECK(prod.specialize_v1() == expected);
      }
}

TEST_CASE("bar involution on Hecke elements") {
  const int n = 3;
  auto s = Permutation::simple(n, 1);
  auto bs = bar(HeckeElt::basis(s));
  HeckeElt expected = HeckeElt::basis(s);
  expected.add_term(Permutation::identity(n), V(1) - V(-1));
  CHECK(bs == expected);
  CHECK(HeckeElt::basis(s) * bs == HeckeElt::unit(n));
  CHECK(bar(HeckeElt::unit(n)) == HeckeElt::unit(n));

  hktest::Rng rng(17);
  auto all = symmetric_group(3);
  for (int iter = 0; iter < 30; ++iter) {
    auto a = random_elt(rng, 3, all);
    CHECK(bar(bar(a)) == a);
    auto b = random_elt(rng, 3, all);
    CHECK(bar(a * b) == bar(a) * bar(b));
  }
}

TEST_CASE("KL basis for n=2 and n=3") {
  KLTable t2(2);
  auto s2 = Permutation::simple(2, 1);
  HeckeElt kls = HeckeElt::basis(s2);
  kls.add_term(Permutation::identity(2), V(1));
  CHECK(t2.kl_elt(s2) == kls);

  KLTable t3(3);
  const int n = 3;
  auto e = Permutation::identity(n);
  auto s = Permutation::simple(n, 1);
  auto t = Permutation::simple(n, 2);
  auto st = word(n, {1, 2});
  auto ts = word(n, {2, 1});
  auto sts = word(n, {1, 2, 1});

  auto expect = [&](const Permutation& x, std::initializer_list<std::pair<Permutation, LaurentPoly>> terms) {
    HeckeElt m(n);
    for (const auto& [w, c] : terms) m.add_term(w, c);
    CHECK(t3.kl_elt(x) == m);
  };
  expect(e, {{e, LaurentPoly(1)}});
  expect(s, {{s, LaurentPoly(1)}, {e, V(1)}});
  expect(t, {{t, LaurentPoly(1)}, {e, V(1)}});
  expect(st, {{st, LaurentPoly(1)}, {s, V(1)}, {t, V(1)}, {e, V(2)}});
  expect(ts, {{ts, LaurentPoly(1)}, {s, V(1)}, {t, V(1)}, {e, V(2)}});
  expect(sts, {{sts, LaurentPoly(1)}, {st, V(1)}, {ts, V(1)}, {s, V(2)}, {t, V(2)}, {e, V(3)}});

  CHECK(t3.mu(s, sts) == 0);
  CHECK(t3.mu(st, sts) == 1);
  CHECK(t3.h(s, sts) == V(2));
  CHECK(t3.h(st, sts) == V(1));
}

TEST_CASE("KL multiplication structure constants") {
  KLTable t3(3);
  const int n = 3;
  auto e = Permutation::identity(n);
  auto s = Permutation::simple(n, 1);
  auto ts = word(n, {2, 1});
  auto sts = word(n, {1, 2, 1});

  auto prod = t3.kl_multiply(s, s);
  REQUIRE(prod.size() == 1);
  CHECK(prod.at(s) == V(1) + V(-1));

  prod = t3.kl_multiply(s, ts);
  REQUIRE(prod.size() == 2);
  CHECK(prod.at(sts).is_one());
  CHECK(prod.at(s).is_one());

  for (const auto& x : t3.elements()) {
    auto p2 = t3.kl_multiply(e, x);
    REQUIRE(p2.size() == 1);
    CHECK(p2.at(x).is_one());
  }
}

TEST_CASE("generator relations in the KL generators") {
  for (int n = 2; n <= 4; ++n) {
    KLTable table(n);
    std::vector<HeckeElt> gen;
    for (int i = 1; i < n; ++i) gen.push_back(table.kl_elt(Permutation::simple(n, i)));
    LaurentPoly loop = V(1) + V(-1);
    for (int i = 0; i < n - 1; ++i) {
      CHECK(gen[i] * gen[i] == gen[i] * loop);
      for (int j = 0; j < n - 1; ++j) {
        if (std::abs(i - j) > 1) CHECK(gen[i] * gen[j] == gen[j] * gen[i]);
        if (std::abs(i - j) == 1)
          CHECK(gen[i] * gen[j] * gen[i] + gen[j] == gen[j] * gen[i] * gen[j] + gen[i]);
      }
    }
  }
}

TEST_CASE("bar invariance and positivity of KL elements") {
  for (int n = 2; n <= 5; ++n) {
    KLTable table(n);
    for (const auto& x : table.elements()) {
      const auto& kl = table.kl_elt(x);
      if (n <= 4) CHECK(bar(kl) == kl);  // the n=5 sweep runs in the acceptance suite
      for (const auto& [y, hy] : kl.terms()) {
        (void)y;
        for (const auto& [exp, c] : hy.terms()) {
          (void)exp;
          CHECK(c > 0);
        }
      }
    }
  }
}

TEST_CASE("trace form") {
  const int n = 3;
  KLTable t3(3);
  auto s = Permutation::simple(n, 1);
  CHECK(HeckeElt::unit(n).tau().is_one());
  CHECK(HeckeElt::basis(s).tau().is_zero());
  // tau(KL_s * KL_s) = v^2 + 1
  CHECK((t3.kl_elt(s) * t3.kl_elt(s)).tau() == V(2) + LaurentPoly(1));
}

TEST_CASE("dual KL basis") {
  KLTable t2(2);
  const auto& d2 = t2.dual_table();
  auto e2 = Permutation::identity(2);
  auto s2 = Permutation::simple(2, 1);
  HeckeElt exp_e(2);
  exp_e.add_term(e2, LaurentPoly(1));
  exp_e.add_term(s2, -V(1));
  CHECK(d2.at(e2) == exp_e);

  KLTable t3(3);
  const auto& d3 = t3.dual_table();
  auto st = word(3, {1, 2});
  auto sts = word(3, {1, 2, 1});
  CHECK(d3.at(sts) == HeckeElt::basis(sts));
  HeckeElt exp_st = HeckeElt::basis(st);
  exp_st.add_term(sts, -V(1));
  CHECK(d3.at(st) == exp_st);

  // delta property via honest multiplication, exhaustive for n <= 4
  for (int n = 2; n <= 4; ++n) {
    KLTable table(n);
    const auto& dual = table.dual_table();
    for (const auto& x : table.elements())
      for (const auto& y : table.elements()) {
        LaurentPoly tr = (dual.at(x) * table.kl_elt(y.inverse())).tau();
        if (x == y) CHECK(tr.is_one());
        else CHECK(tr.is_zero());
      }
  }
}
