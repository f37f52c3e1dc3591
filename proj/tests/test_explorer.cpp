#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sbim/explorer.hpp"

using namespace sbim;

TEST_CASE("B2 counterexample report") {
  auto rep = b2_counterexample(8, 6);
  CHECK(rep.support_ok);
  CHECK(rep.twist_invariant);
  CHECK(rep.first_step_class_ok);
  CHECK(rep.lemma_inapplicable);
  CHECK(rep.graded_mismatch);
  CHECK(rep.ok());
  const Group b2 = Group::b2();
  for (Elem w = 0; w < b2.order(); ++w) CHECK(rep.uch_b.coeff(w) == 1);
}

TEST_CASE("A3 checks report") {
  auto rep = a3_checks();
  CHECK(rep.distinguishes);
  CHECK(rep.eq3_compatible);
  CHECK(rep.filtration_example_ok);
  CHECK(rep.four_wtilde_ok);
  REQUIRE(rep.wtilde.size() == 4);
  for (const auto& c : rep.wtilde) CHECK(c.excluded);
  CHECK(rep.ok());
}

TEST_CASE("normal-form witnesses cover the extended basis") {
  GrotRing ext(Variant::Extended);
  auto rep = remark_comb_check(ext, 4, 6);
  CHECK(rep.ok());
  REQUIRE(rep.entries.size() == 25);
  const Group& G = ext.group();

  int strong = 0, weak = 0;
  for (const auto& e : rep.entries) {
    REQUIRE(e.found);
    (e.strong ? strong : weak) += 1;
    // every singleton has the exact twist witness with no B factors
    if (subset_size(e.target) == 1) {
      CHECK(e.strong);
      CHECK(e.simple_indices.empty());
      CHECK(e.shift == 0);
    }
    // replay the witness: v^shift * Rw * B... * Rw' against the target
    RingElement p = RingElement::basis(G.singleton(e.w2));
    for (auto it = e.simple_indices.rbegin(); it != e.simple_indices.rend(); ++it)
      p = lmul_B(G, G.simple(*it), p);
    p = lmul_R(G, e.w, p).scaled(Laurent::v(e.shift));
    if (e.strong) {
      CHECK(p == RingElement::basis(e.target));
    } else {
      CHECK(p.coeff(e.target) == Laurent(1));
      for (const auto& [A, c] : p.terms()) CHECK(c.has_nonnegative_coeffs());
    }
  }
  // only the full-group class needs the summand form; everything else is an
  // exact shift of a product
  CHECK(weak == 1);
  CHECK(strong == 24);
  for (const auto& e : rep.entries)
    if (!e.strong) CHECK(e.target == G.full_set());

  // {e, t1} is witnessed by B:s1 alone with shift -1
  const Subset et1 = G.singleton(G.identity()) | G.singleton(G.t_named(1));
  for (const auto& e : rep.entries)
    if (e.target == et1) {
      CHECK(e.strong);
      CHECK(e.w == G.identity());
      CHECK(e.w2 == G.identity());
      CHECK(e.simple_indices == std::vector<int>{0});
      CHECK(e.shift == -1);
    }
}

TEST_CASE("closure in A2 rediscovers X") {
  const Group a2 = Group::a2();
  auto rep = closure_explore(a2, a2.reflections(), 10000);
  CHECK(!rep.budget_exhausted);
  CHECK(rep.opaque_words.empty());
  CHECK(rep.reached.size() == 20); // the seed {e} plus the 19 classes of X
  std::set<Subset> reached;
  for (const auto& [A, word] : rep.reached) reached.insert(A);
  CHECK(reached.count(a2.singleton(a2.identity())) == 1);
  for (Subset A : GrotRing::enumerate_X(a2)) CHECK(reached.count(A) == 1);
}

TEST_CASE("closure in B2 records opaque products") {
  const Group b2 = Group::b2();
  auto rep = closure_explore(b2, b2.reflections(), 10000);
  CHECK(!rep.opaque_words.empty());
  for (const auto& [A, word] : rep.reached) CHECK(is_valid_class(b2, A));
}

TEST_CASE("closure growth diagnostics for the A3 subcategory") {
  const Group a3 = Group::a3();
  const Elem s = a3.simple(0), t = a3.simple(1), u = a3.simple(2);
  const std::vector<Elem> gens{a3.conj(s, t), t, u}; // B_sts, B_t, B_u
  auto rep = closure_explore(a3, gens, 400);
  CHECK(rep.steps <= 400);
  CHECK(rep.growth.size() == static_cast<std::size_t>(rep.steps));
  CHECK(rep.reached.size() >= 4);
  // deterministic across runs
  auto rep2 = closure_explore(a3, gens, 400);
  CHECK(rep2.reached == rep.reached);
  CHECK(rep2.opaque_words == rep.opaque_words);
  CHECK(rep2.growth == rep.growth);
}

TEST_CASE("closure rejects non-reflections") {
  const Group a2 = Group::a2();
  CHECK_THROWS_AS(closure_explore(a2, {a2.identity()}, 10), std::invalid_argument);
}
