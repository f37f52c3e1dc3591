#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sbim/hilbert.hpp"
#include "sbim/grotring.hpp"

using namespace sbim;

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace

TEST_CASE("integer matrix rank") {
  std::vector<std::vector<Int>> id(3, std::vector<Int>(3, 0));
  for (int i = 0; i < 3; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  CHECK(rank_of_integer_matrix(id) == 3);
  CHECK(rank_of_integer_matrix({{0, 0}, {0, 0}}) == 0);
  CHECK(rank_of_integer_matrix({{1, 2, 3}, {2, 4, 6}, {3, 6, 9}}) == 1);
  CHECK(rank_of_integer_matrix({{1, 2}, {3, 4}, {5, 6}}) == 2);
  // padding with linear combinations never raises the rank
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> val(-4, 4);
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<std::vector<Int>> m(3, std::vector<Int>(5));
    for (auto& row : m)
      for (auto& x : row) x = val(rng);
    const int base = rank_of_integer_matrix(m);
    auto m2 = m;
    std::vector<Int> combo(5);
    for (int j = 0; j < 5; ++j)
      combo[static_cast<std::size_t>(j)] = m[0][static_cast<std::size_t>(j)] * 2 -
                                           m[2][static_cast<std::size_t>(j)] * 3;
    m2.push_back(combo);
    CHECK(rank_of_integer_matrix(m2) == base);
  }
}

TEST_CASE("reflection representations validate") {
  for (const Group& G : {Group::a2(), Group::b2(), Group::a3()}) {
    ReflectionRep rep = ReflectionRep::for_group(G);
    rep.validate(G); // homomorphism, faithfulness, det -1, fixed hyperplane
    CHECK(rep.dim() == (G.kind() == GroupKind::SymmetricA3 ? 3 : 2));
  }
  CHECK_THROWS_AS(ReflectionRep::for_group(Group::dihedral(5)), std::invalid_argument);
}

TEST_CASE("Hilbert function of diagonal classes") {
  for (const Group& G : {Group::a2(), Group::b2(), Group::a3()}) {
    HilbertOracle oracle(G);
    const int n = oracle.rep().dim();
    for (int k = 0; k <= 5; ++k) {
      // R({e}) is the polynomial ring in n variables
      CHECK(oracle.hilbert_function(G.singleton(G.identity()), k) == binom(k + n - 1, n - 1));
      // twisting does not change dimensions: singletons all agree
      for (Elem w = 0; w < G.order(); w += 3)
        CHECK(oracle.hilbert_function(G.singleton(w), k) == binom(k + n - 1, n - 1));
    }
  }
}

TEST_CASE("Hilbert function of the rank-one stable pairs") {
  const Group a2 = Group::a2();
  HilbertOracle oracle(a2);
  for (Elem t : a2.reflections())
    for (int k = 0; k <= 8; ++k)
      CHECK(oracle.hilbert_function(a2.singleton(a2.identity()) | a2.singleton(t), k) ==
            2 * k + 1);
}

TEST_CASE("regression fixture: R(W) for A2") {
  const Group a2 = Group::a2();
  HilbertOracle oracle(a2);
  // frozen from the invariant-theory closed form (1+2q+2q^2+q^3)/(1-q)^2,
  // cross-checked against the oracle ranks
  const std::vector<long long> expect{1, 4, 9, 15, 21, 27, 33};
  for (int k = 0; k <= 6; ++k) CHECK(oracle.hilbert_function(a2.full_set(), k) == expect[static_cast<std::size_t>(k)]);
}

TEST_CASE("degree zero is one-dimensional, monotone under union") {
  const Group b2 = Group::b2();
  HilbertOracle oracle(b2);
  std::mt19937 rng(47);
  std::uniform_int_distribution<Subset> pick(1, b2.full_set());
  for (int i = 0; i < 12; ++i) {
    const Subset A = pick(rng), B = pick(rng);
    CHECK(oracle.hilbert_function(A, 0) == 1);
    for (int k = 0; k <= 3; ++k) {
      const long long u = oracle.hilbert_function(A | B, k);
      CHECK(u >= oracle.hilbert_function(A, k));
      CHECK(u >= oracle.hilbert_function(B, k));
      long long singles = 0;
      for (Elem x : b2.subset_elems(A)) singles += oracle.hilbert_function(b2.singleton(x), k);
      CHECK(oracle.hilbert_function(A, k) <= singles);
    }
  }
}

TEST_CASE("translation invariance of dimensions") {
  const Group a2 = Group::a2();
  HilbertOracle oracle(a2);
  const Subset A = a2.singleton(a2.identity()) | a2.singleton(a2.t_named(1));
  for (Elem w = 0; w < a2.order(); ++w)
    for (int k = 0; k <= 4; ++k) {
      CHECK(oracle.hilbert_function(a2.act_left(w, A), k) == oracle.hilbert_function(A, k));
      CHECK(oracle.hilbert_function(a2.act_right(A, w), k) == oracle.hilbert_function(A, k));
    }
}

TEST_CASE("degreewise two-term decomposition checks") {
  const Group a2 = Group::a2();
  HilbertOracle oracle(a2);
  const Elem t1 = a2.t_named(1), t3 = a2.t_named(3);
  const Subset A = a2.singleton(a2.identity()) | a2.singleton(t1);
  auto chk = oracle.check_soergel_lemma(A, t3, 6);
  CHECK(chk.applicable);
  CHECK(chk.ok);
  // the stable case is out of scope for this identity
  auto stable = oracle.check_soergel_lemma(A, t1, 6);
  CHECK(!stable.applicable);
  // it also applies inside B2 where the hypothesis holds
  const Group b2 = Group::b2();
  HilbertOracle ob2(b2);
  const Elem s = b2.simple(0), t = b2.simple(1);
  auto okb2 = ob2.check_soergel_lemma(b2.singleton(b2.identity()) | b2.singleton(s), t, 5);
  CHECK(okb2.applicable);
  CHECK(okb2.ok);
  // and reports the hypothesis failure on the opaque B2 product
  const Subset first = b2.singleton(b2.identity()) | b2.singleton(s) | b2.singleton(t) |
                       b2.singleton(b2.mul(s, t));
  auto bad = ob2.check_soergel_lemma(first, b2.mul(b2.mul(t, s), t), 5);
  CHECK(!bad.applicable);
  CHECK(bad.reason == "|A \\ (A n sA)| != 2");
}

TEST_CASE("B2 graded-dimension comparison") {
  const Group b2 = Group::b2();
  HilbertOracle oracle(b2);
  auto cmp = oracle.graded_dim_compare_b2(8, 6);
  CHECK(cmp.dims[0] == 1);
  CHECK(cmp.dims[1] == 4);
  CHECK(cmp.mismatch_for_all());
  CHECK(cmp.shifts.size() == 13);
  for (const auto& s : cmp.shifts) CHECK(!s.matches);
}

TEST_CASE("prefill agrees with direct evaluation") {
  const Group a2 = Group::a2();
  HilbertOracle seq(a2), par(a2);
  std::vector<std::pair<Subset, int>> keys;
  for (Subset A : GrotRing::enumerate_X(a2))
    for (int k = 0; k <= 3; ++k) keys.emplace_back(A, k);
  par.prefill(keys, 4);
  for (const auto& [A, k] : keys) CHECK(par.hilbert_function(A, k) == seq.hilbert_function(A, k));
}

TEST_CASE("default degree bounds") {
  CHECK(default_max_degree(Group::a2()) == 10);
  CHECK(default_max_degree(Group::b2()) == 10);
  CHECK(default_max_degree(Group::a3()) == 5);
}
