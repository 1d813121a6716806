#include <catch2/catch.hpp>

#include <map>
#include <set>

#include "heckekit/permutations.hpp"
#include "test_util.hpp"

using namespace heckekit;

namespace {

Permutation word_product(int n, const std::vector<int>& word) {
  Permutation w = Permutation::identity(n);
  for (int i : word) w = w * Permutation::simple(n, i);
  return w;
}

// Independent Bruhat oracle: subword property on one fixed reduced word of y.
bool bruhat_leq_subword(const Permutation& x, const Permutation& y) {
  auto word = y.reduced_word();
  const int m = static_cast<int>(word.size());
  const int lx = x.length();
  for (int mask = 0; mask < (1 << m); ++mask) {
    if (__builtin_popcount(mask) != lx) continue;
    std::vector<int> sub;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) sub.push_back(word[i]);
    if (word_product(x.size(), sub) == x) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("group operations and length") {
  CHECK(Permutation::identity(3).length() == 0);
  CHECK(longest_element(3).length() == 3);
  auto s1 = Permutation::simple(3, 1);
  CHECK((s1 * s1).is_identity());
  auto s2 = Permutation::simple(3, 2);
  CHECK((s1 * s2).images() == std::vector<int>{2, 3, 1});
  CHECK((s2 * s1).images() == std::vector<int>{3, 1, 2});
  CHECK((s1 * s2).inverse() == s2 * s1);
  CHECK_THROWS_AS(s1 * Permutation::simple(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 1, 3}), std::invalid_argument);

  // length(ab) <= length(a) + length(b); equality iff words concatenate reduced
  for (const auto& a : symmetric_group(4))
    for (const auto& b : symmetric_group(4)) {
      int lab = (a * b).length();
      CHECK(lab <= a.length() + b.length());
      CHECK((lab - a.length() - b.length()) % 2 == 0);
    }
}

TEST_CASE("descents") {
  auto w = Permutation({3, 1, 2});
  CHECK(w.right_descents() == std::vector<int>{1});
  CHECK(w.left_descents() == std::vector<int>{2});
  for (const auto& u : symmetric_group(4))
    for (int i = 1; i <= 3; ++i) {
      bool rd = (u * Permutation::simple(4, i)).length() < u.length();
      auto d = u.right_descents();
      CHECK(rd == (std::find(d.begin(), d.end(), i) != d.end()));
    }
}

TEST_CASE("reduced words") {
  CHECK(Permutation::identity(3).reduced_word().empty());
  CHECK(Permutation::simple(3, 1).reduced_word() == std::vector<int>{1});
  CHECK(longest_element(3).reduced_word() == std::vector<int>{1, 2, 1});
  for (const auto& w : symmetric_group(5)) {
    auto word = w.reduced_word();
    CHECK(static_cast<int>(word.size()) == w.length());
    CHECK(word_product(5, word) == w);
  }
}

TEST_CASE("bruhat order") {
  auto e = Permutation::identity(3);
  auto s1 = Permutation::simple(3, 1);
  for (const auto& w : symmetric_group(3)) CHECK(bruhat_leq(e, w));
  CHECK(bruhat_leq(s1, longest_element(3)));
  CHECK_FALSE(bruhat_leq(s1 * Permutation::simple(3, 2), Permutation::simple(3, 2) * s1));
  CHECK_FALSE(bruhat_leq(Permutation::simple(3, 2) * s1, s1 * Permutation::simple(3, 2)));

  for (int n = 2; n <= 4; ++n) {
    auto all = symmetric_group(n);
    for (const auto& x : all)
      for (const auto& y : all) CHECK(bruhat_leq(x, y) == bruhat_leq_subword(x, y));
    // partial order with minimum e and maximum w_o
    for (const auto& x : all) {
      CHECK(bruhat_leq(x, x));
      CHECK(bruhat_leq(Permutation::identity(n), x));
      CHECK(bruhat_leq(x, longest_element(n)));
      for (const auto& y : all) {
        if (bruhat_leq(x, y) && bruhat_leq(y, x)) CHECK(x == y);
        for (const auto& z : all)
          if (bruhat_leq(x, y) && bruhat_leq(y, z)) CHECK(bruhat_leq(x, z));
      }
    }
  }
}

TEST_CASE("rsk") {
  auto [p, q] = rsk(Permutation::identity(3));
  CHECK(p == Tableau({{1, 2, 3}}));
  CHECK(q == Tableau({{1, 2, 3}}));

  // s1 = [2,1,3] and s1 s2 = [2,3,1] share the insertion tableau p
  auto p1 = rsk(Permutation({2, 1, 3})).first;
  auto p2 = rsk(Permutation({2, 3, 1})).first;
  CHECK(p1 == p2);

  auto [pw, qw] = rsk(longest_element(3));
  CHECK(pw == Tableau({{1}, {2}, {3}}));
  CHECK(qw == Tableau({{1}, {2}, {3}}));

  for (int n = 1; n <= 5; ++n) {
    std::set<std::pair<Tableau, Tableau>> images;
    for (const auto& w : symmetric_group(n)) {
      auto [pt, qt] = rsk(w);
      CHECK(pt.shape() == qt.shape());
      auto [pi, qi] = rsk(w.inverse());
      CHECK(pi == qt);
      CHECK(qi == pt);
      images.insert({pt, qt});
    }
    // bijection onto same-shape pairs of standard tableaux
    std::size_t expected = 0;
    for (const auto& shape : partitions(n)) {
      auto count = standard_tableaux(shape).size();
      expected += count * count;
    }
    CHECK(images.size() == expected);
    CHECK(images.size() == symmetric_group(n).size());
  }
}

TEST_CASE("coset representatives") {
  auto full = coset_representatives(3, {1, 2}, CosetKind::Shortest);
  REQUIRE(full.size() == 1);
  CHECK(full[0].is_identity());

  auto none = coset_representatives(3, {}, CosetKind::Shortest);
  CHECK(none.size() == 6);

  auto reps = coset_representatives(3, {1}, CosetKind::Shortest);
  REQUIRE(reps.size() == 3);
  CHECK(reps[0] == Permutation::identity(3));
  CHECK(reps[1] == Permutation::simple(3, 2));
  CHECK(reps[2] == Permutation::simple(3, 2) * Permutation::simple(3, 1));

  // each coset W_J w contains exactly one shortest and one longest rep,
  // minimal resp. maximal in length
  for (int n = 2; n <= 4; ++n) {
    std::set<int> J{1};
    if (n == 4) J.insert(3);
    auto shortest = coset_representatives(n, J, CosetKind::Shortest);
    auto longest = coset_representatives(n, J, CosetKind::Longest);
    std::vector<Permutation> wj;
    for (const auto& u : symmetric_group(n)) {
      auto word = u.reduced_word();
      bool in_j = true;
      for (int i : word)
        if (!J.count(i)) { in_j = false; break; }
      if (in_j) wj.push_back(u);
    }
    for (const auto& x : shortest)
      for (const auto& u : wj)
        if (!u.is_identity()) CHECK((u * x).length() > x.length());
    for (const auto& x : longest)
      for (const auto& u : wj)
        if (!u.is_identity()) CHECK((u * x).length() < x.length());
  }
}

TEST_CASE("partitions and tableau counts") {
  CHECK(syt_count({3}) == 1);
  CHECK(syt_count({2, 1}) == 2);
  CHECK(syt_count({2, 2}) == 2);
  CHECK_THROWS_AS(syt_count({1, 2}), std::invalid_argument);
  CHECK(partitions(4).size() == 5);

  // sum of d_lambda^2 = n!
  for (int n = 1; n <= 7; ++n) {
    Int total = 0, fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    for (const auto& shape : partitions(n)) {
      Int d = syt_count(shape);
      total += d * d;
    }
    CHECK(total == fact);
  }

  // enumeration agrees with the hook-length formula where both run
  for (int n = 1; n <= 8; ++n)
    for (const auto& shape : partitions(n)) {
      Int fact = 1;
      for (int k = 2; k <= n; ++k) fact *= k;
      Int hooks = 1;
      std::vector<int> conj(shape[0], 0);
      for (int p : shape)
        for (int c = 0; c < p; ++c) ++conj[c];
      for (std::size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c)
          hooks *= (shape[r] - c) + (conj[c] - static_cast<int>(r)) - 1;
      CHECK(syt_count(shape) * hooks == fact);
    }
}

TEST_CASE("string forms") {
  CHECK(Permutation({2, 1, 3}).str() == "[2,1,3]");
  CHECK(Permutation::parse("[2,1,3]") == Permutation({2, 1, 3}));
  CHECK(cycle_type(Permutation({2, 1, 3})) == std::vector<int>{2, 1});
  CHECK(cycle_type(Permutation({2, 3, 1})) == std::vector<int>{3});
}
