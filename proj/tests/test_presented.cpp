#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>
#include <set>

#include "sbim/presented.hpp"

using namespace sbim;

namespace {

std::vector<CWord> all_words_up_to(int maxlen) {
  std::vector<CWord> out{{}};
  std::size_t layer_start = 0;
  for (int len = 1; len <= maxlen; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_start; i < layer_end; ++i)
      for (int letter = 1; letter <= 3; ++letter) {
        CWord w = out[i];
        w.push_back(letter);
        out.push_back(w);
      }
    layer_start = layer_end;
  }
  return out;
}

} // namespace

TEST_CASE("canonical list") {
  const auto& mons = canonical_monomials();
  CHECK(mons.size() == 20);
  CHECK(std::set<CWord>(mons.begin(), mons.end()).size() == 20);
  for (const CWord& m : mons) {
    CHECK(m.size() <= 4);
    CHECK(canonical_index(m) >= 0);
    // canonical monomials are fixed by normalize
    CHECK(normalize(m) == AlgebraElement::monomial(m));
  }
  CHECK(canonical_index({2, 1, 2}) == -1);
  CHECK(cword_str({}) == "1");
  CHECK(cword_str({1, 2, 1}) == "C1*C2*C1");
}

TEST_CASE("quadratic relation") {
  CHECK(normalize({1, 1}) == AlgebraElement::monomial({1}, Laurent::v_plus_vinv()));
  CHECK(normalize({3, 3, 3}) ==
        AlgebraElement::monomial({3}, Laurent::v_plus_vinv() * Laurent::v_plus_vinv()));
}

TEST_CASE("frozen length-3 and length-4 reductions") {
  // C2C3C2 = C1C2C1 + C2 - C1, by relation (3) then relation (2)
  AlgebraElement expect = AlgebraElement::monomial({1, 2, 1});
  expect += AlgebraElement::monomial({2});
  expect -= AlgebraElement::monomial({1});
  CHECK(normalize({2, 3, 2}) == expect);
  // relation (4) reorders the middle pair
  CHECK(normalize({1, 3, 2, 1}) == AlgebraElement::monomial({1, 2, 3, 1}));
  CHECK(normalize({2, 3, 1, 2}) == AlgebraElement::monomial({2, 1, 3, 2}));
  CHECK(normalize({3, 2, 1, 3}) == AlgebraElement::monomial({3, 1, 2, 3}));
  // both routes to C3C1C3 and C3C2C3 agree (confluence spot check)
  CHECK(normalize({3, 1, 3}) == normalize({3, 2, 3}));
}

TEST_CASE("every word of length <= 5 lands on the canonical monomials") {
  for (const CWord& w : all_words_up_to(5)) {
    const AlgebraElement n = normalize(w);
    for (const auto& [mon, c] : n.terms()) {
      CHECK(canonical_index(mon) >= 0);
      CHECK(!c.is_zero());
    }
    // normalize is idempotent on its own output
    AlgebraElement again;
    for (const auto& [mon, c] : n.terms()) again += normalize(mon).scaled(c);
    CHECK(again == n);
  }
}

TEST_CASE("multiplication is associative with unit") {
  const AlgebraElement one = AlgebraElement::monomial({});
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> len(0, 4), letter(1, 3);
  auto random_elem = [&] {
    CWord w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(letter(rng));
    return normalize(w);
  };
  for (int i = 0; i < 60; ++i) {
    const AlgebraElement a = random_elem(), b = random_elem(), c = random_elem();
    CHECK(alg_multiply(one, a) == a);
    CHECK(alg_multiply(a, one) == a);
    CHECK(alg_multiply(alg_multiply(a, b), c) == alg_multiply(a, alg_multiply(b, c)));
  }
  CHECK(alg_multiply(AlgebraElement::monomial({1}), AlgebraElement::monomial({1})) ==
        AlgebraElement::monomial({1}, Laurent::v_plus_vinv()));
  CHECK(alg_multiply(AlgebraElement::monomial({1, 2}), AlgebraElement::monomial({1})) ==
        AlgebraElement::monomial({1, 2, 1}));
}

TEST_CASE("phi sends the generators to the B classes") {
  GrotRing ring(Variant::Plain);
  const Group& G = ring.group();
  CHECK(phi(ring, AlgebraElement::monomial({})) == ring.unit());
  for (int i = 1; i <= 3; ++i)
    CHECK(phi(ring, AlgebraElement::monomial({i})) == ring.B_class(G.t_named(i)));
  // phi(C1C2) = v^2 [R({e,t1,t2,t1t2})]
  Subset A = G.singleton(G.identity()) | G.singleton(G.t_named(1)) | G.singleton(G.t_named(2)) |
             G.singleton(G.mul(G.t_named(1), G.t_named(2)));
  CHECK(phi(ring, AlgebraElement::monomial({1, 2})) == RingElement::basis(A, Laurent::v(2)));
}

TEST_CASE("phi is a homomorphism and respects normalize, words up to 6") {
  GrotRing ring(Variant::Plain);
  for (const CWord& w : all_words_up_to(6))
    CHECK(phi(ring, normalize(w)) == phi_word_direct(ring, w));
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> len(0, 4), letter(1, 3);
  for (int i = 0; i < 40; ++i) {
    CWord u, w;
    for (int k = len(rng); k > 0; --k) u.push_back(letter(rng));
    for (int k = len(rng); k > 0; --k) w.push_back(letter(rng));
    const AlgebraElement a = normalize(u), b = normalize(w);
    CHECK(phi(ring, alg_multiply(a, b)) == ring.product(phi(ring, a), phi(ring, b)));
  }
}

TEST_CASE("laurent determinant") {
  // 2x2 with known value: det [[v, 1], [1, v^-1]] = 0
  std::vector<std::vector<Laurent>> m{{Laurent::v(1), Laurent(1)},
                                      {Laurent(1), Laurent::v(-1)}};
  CHECK(laurent_det(m).is_zero());
  std::vector<std::vector<Laurent>> id(3, std::vector<Laurent>(3));
  for (int i = 0; i < 3; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Laurent(1);
  CHECK(laurent_det(id) == Laurent(1));
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> exp(-2, 2), coeff(-3, 3), dim(1, 4);
  for (int iter = 0; iter < 25; ++iter) {
    const int n = dim(rng);
    std::vector<std::vector<Laurent>> a(static_cast<std::size_t>(n),
                                        std::vector<Laurent>(static_cast<std::size_t>(n)));
    for (auto& row : a)
      for (auto& x : row) x = Laurent::monomial(exp(rng), coeff(rng));
    // transpose invariance of the determinant
    auto at = a;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        at[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    CHECK(laurent_det(a) == laurent_det(at));
  }
}

TEST_CASE("change of basis is unimodular") {
  GrotRing ring(Variant::Plain);
  IsoReport rep = verify_iso(ring, 5);
  CHECK(rep.det_is_unit);
  CHECK(rep.words_ok);
  CHECK(rep.words_checked == 1 + 3 + 9 + 27 + 81 + 243);
  CHECK(rep.ok());
}
