#include <catch2/catch.hpp>

#include "heckekit/tangles.hpp"
#include "test_util.hpp"

using namespace heckekit;

namespace {

LaurentPoly V(int e) { return LaurentPoly::v(e); }

const TangleWord& hopf_fixture() {
  static TangleWord w(0, {{DiagramKind::Cup, 1},
                          {DiagramKind::Cup, 3},
                          {DiagramKind::PosCross, 2},
                          {DiagramKind::PosCross, 2},
                          {DiagramKind::Cap, 3},
                          {DiagramKind::Cap, 1}});
  return w;
}

// random closed braid words: k <= 4 strands, <= 8 letters
TangleWord random_closure(hktest::Rng& rng, int max_strands = 4, int max_letters = 8) {
  int k = rng.range(2, max_strands);
  int len = rng.range(1, max_letters);
  std::vector<int> letters;
  for (int i = 0; i < len; ++i) {
    int g = rng.range(1, k - 1);
    letters.push_back(rng.range(0, 1) ? g : -g);
  }
  return braid_closure(letters, k);
}

}  // namespace

TEST_CASE("elementary morphisms") {
  auto cup = eval_elementary({DiagramKind::Cup, 1}, 0);
  CHECK(cup.entry(0b01, 0).is_one());
  CHECK(cup.entry(0b10, 0) == V(1));
  CHECK(cup.entry(0b00, 0).is_zero());

  auto cap = eval_elementary({DiagramKind::Cap, 1}, 2);
  CHECK(cap.entry(0, 0b01) == V(-1));
  CHECK(cap.entry(0, 0b10).is_one());
  CHECK(cap.entry(0, 0b00).is_zero());
  CHECK(cap.entry(0, 0b11).is_zero());

  auto pos = eval_elementary({DiagramKind::PosCross, 1}, 2);
  CHECK(pos.entry(0b00, 0b00) == -V(1));
  CHECK(pos.entry(0b11, 0b11) == -V(1));
  CHECK(pos.entry(0b10, 0b01).is_one());
  CHECK(pos.entry(0b01, 0b01) == V(-1) - V(1));
  CHECK(pos.entry(0b01, 0b10).is_one());
  CHECK(pos.entry(0b10, 0b10).is_zero());

  auto neg = eval_elementary({DiagramKind::NegCross, 1}, 2);
  CHECK(neg.after(pos) == Morphism::identity(2));
  CHECK(pos.after(neg) == Morphism::identity(2));

  CHECK_THROWS_AS(eval_elementary({DiagramKind::Cap, 2}, 2), std::invalid_argument);
}

TEST_CASE("braid relation and zig-zag at the morphism level") {
  auto at = [](DiagramKind k, int p) { return ElementaryDiagram{k, p}; };
  auto m121 = eval_word(TangleWord(3, {at(DiagramKind::PosCross, 1), at(DiagramKind::PosCross, 2),
                                       at(DiagramKind::PosCross, 1)}));
  auto m212 = eval_word(TangleWord(3, {at(DiagramKind::PosCross, 2), at(DiagramKind::PosCross, 1),
                                       at(DiagramKind::PosCross, 2)}));
  CHECK(m121 == m212);

  auto zigzag = eval_word(TangleWord(1, {at(DiagramKind::Cup, 2), at(DiagramKind::Cap, 1)}));
  CHECK(zigzag == Morphism::identity(1));
}

TEST_CASE("word evaluation fixtures") {
  auto circle = eval_word(TangleWord(0, {{DiagramKind::Cup, 1}, {DiagramKind::Cap, 1}}));
  CHECK(circle.entry(0, 0) == V(1) + V(-1));

  CHECK(eval_word(TangleWord(3, {})) == Morphism::identity(3));

  CHECK(eval_word(hopf_fixture()).entry(0, 0) == V(-2) + LaurentPoly(1) + V(2) + V(4));
}

TEST_CASE("braid closure construction") {
  auto unknot = braid_closure({}, 1);
  CHECK(unknot.steps() == std::vector<ElementaryDiagram>{{DiagramKind::Cup, 1}, {DiagramKind::Cap, 1}});

  auto tref = braid_closure({1, 1, 1}, 2);
  CHECK(tref.steps().size() == 7);  // 2 cups + 3 crossings + 2 caps
  CHECK(tref.n_plus() == 3);
  CHECK(tref.n_minus() == 0);
  CHECK(tref.closed());

  CHECK_THROWS_AS(braid_closure({2}, 2), std::invalid_argument);
}

TEST_CASE("rt invariant fixtures") {
  auto un = rt_invariant(braid_closure({}, 1));
  CHECK(un.phi == V(1) + V(-1));
  CHECK(un.j_hat == V(1) + V(-1));
  CHECK(un.j.is_one());

  auto hopf = rt_invariant(hopf_fixture());
  CHECK(hopf.phi == V(-2) + LaurentPoly(1) + V(2) + V(4));
  CHECK(hopf.j_hat == (V(1) + V(-1)) * (V(1) + V(5)));
  CHECK(hopf.j == V(1) + V(5));
  CHECK(hopf.n_plus == 2);
  CHECK(hopf.n_minus == 0);

  // the braid closure of s1^2 is an isotopic diagram with the same J
  auto closure = rt_invariant(braid_closure({1, 1}, 2));
  CHECK(closure.j == hopf.j);
  CHECK(closure.j_hat == hopf.j_hat);

  auto tref = braid_closure({1, 1, 1}, 2);
  CHECK(rt_invariant(tref).j == kauffman_jones(tref).j);

  CHECK_THROWS_AS(rt_invariant(TangleWord(2, {})), std::invalid_argument);
}

TEST_CASE("planar matching composition") {
  // cup then cap: one circle
  PlanarMatching cup(0, 2, {1, 0});
  PlanarMatching cap(2, 0, {1, 0});
  auto circle = tl_compose(cup, cap);
  CHECK(circle.bottom() == 0);
  CHECK(circle.top() == 0);
  CHECK(circle.loops() == 1);

  auto id2 = PlanarMatching::identity(2);
  CHECK(tl_compose(id2, id2) == id2);

  CHECK_THROWS_AS(tl_compose(cup, cup), std::invalid_argument);
  // crossing chords are rejected
  CHECK_THROWS_AS(PlanarMatching(4, 0, {2, 3, 0, 1}), std::invalid_argument);

  // nested-cup Hopf closure with both crossings turned back: 2 loops
  auto word = braid_closure({1, 1}, 2);
  PlanarMatching cur(0, 0, {});
  int arity = 0;
  for (const auto& d : word.steps()) {
    PlanarMatching step(0, 0, {});
    switch (d.kind) {
      case DiagramKind::Cup:
        step = detail::straight_with(arity, arity + 2, d.position, false, true);
        break;
      case DiagramKind::Cap:
        step = detail::straight_with(arity, arity - 2, d.position, true, false);
        break;
      default:
        step = detail::straight_with(arity, arity, d.position, true, true);
        break;
    }
    cur = tl_compose(cur, step);
    arity += arity_delta(d.kind);
  }
  CHECK(cur.loops() == 2);
}

TEST_CASE("kauffman bracket fixtures") {
  auto un = kauffman_jones(braid_closure({}, 1));
  CHECK(un.bracket == V(1) + V(-1));
  CHECK(un.j.is_one());

  auto hopf = kauffman_jones(braid_closure({1, 1}, 2));
  CHECK(hopf.bracket == V(-2) + LaurentPoly(1) + V(2) + V(4));
  CHECK(hopf.j == V(1) + V(5));

  auto unlink = kauffman_jones(braid_closure({}, 2));
  CHECK(unlink.bracket == (V(1) + V(-1)) * (V(1) + V(-1)));
}

TEST_CASE("skein relation") {
  // Hopf fixture, first crossing (step index 2)
  CHECK(skein_check(hopf_fixture(), 2));
  auto tref = braid_closure({1, 1, 1}, 2);
  for (std::size_t i = 2; i <= 4; ++i) CHECK(skein_check(tref, i));
  CHECK_THROWS_AS(skein_check(tref, 0), std::invalid_argument);

  hktest::Rng rng(2024);
  for (int iter = 0; iter < 20; ++iter) {
    auto w = random_closure(rng);
    std::vector<std::size_t> crossings;
    for (std::size_t i = 0; i < w.steps().size(); ++i) {
      auto k = w.steps()[i].kind;
      if (k == DiagramKind::PosCross || k == DiagramKind::NegCross) crossings.push_back(i);
    }
    CHECK(skein_check(w, crossings[static_cast<std::size_t>(rng.range(0, static_cast<int>(crossings.size()) - 1))]));
  }
}

TEST_CASE("cross-oracle agreement on random closed words") {
  hktest::Rng rng(77);
  for (int iter = 0; iter < 25; ++iter) {
    auto w = random_closure(rng);
    auto rt = rt_invariant(w);
    auto kauf = kauffman_jones(w);
    CHECK(rt.j_hat == kauf.j_hat);
    CHECK(rt.j == kauf.j);
  }
}

TEST_CASE("markov conjugation invariance") {
  hktest::Rng rng(31337);
  for (int iter = 0; iter < 10; ++iter) {
    int k = rng.range(2, 4);
    int len = rng.range(1, 5);
    std::vector<int> beta;
    for (int i = 0; i < len; ++i) {
      int g = rng.range(1, k - 1);
      beta.push_back(rng.range(0, 1) ? g : -g);
    }
    std::vector<int> gamma;
    int clen = rng.range(1, 3);
    for (int i = 0; i < clen; ++i) {
      int g = rng.range(1, k - 1);
      gamma.push_back(rng.range(0, 1) ? g : -g);
    }
    std::vector<int> conj = gamma;
    conj.insert(conj.end(), beta.begin(), beta.end());
    for (auto it = gamma.rbegin(); it != gamma.rend(); ++it) conj.push_back(-*it);
    CHECK(rt_invariant(braid_closure(beta, k)).j == rt_invariant(braid_closure(conj, k)).j);
  }
}

TEST_CASE("markov stabilization invariance") {
  hktest::Rng rng(90210);
  for (int iter = 0; iter < 10; ++iter) {
    int k = rng.range(2, 4);
    int len = rng.range(1, 6);
    std::vector<int> beta;
    for (int i = 0; i < len; ++i) {
      int g = rng.range(1, k - 1);
      beta.push_back(rng.range(0, 1) ? g : -g);
    }
    auto base = rt_invariant(braid_closure(beta, k));
    for (int sign : {1, -1}) {
      auto stab = beta;
      stab.push_back(sign * k);
      CHECK(rt_invariant(braid_closure(stab, k + 1)).j == base.j);
    }
  }
}
