#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sbim/grotring.hpp"

using namespace sbim;

namespace {

const Group& a2() {
  static const Group g = Group::a2();
  return g;
}

Subset set_of(std::initializer_list<Elem> elems) {
  Subset A = 0;
  for (Elem x : elems) A |= a2().singleton(x);
  return A;
}

} // namespace

TEST_CASE("X has 19 elements, closed under complement and inversion") {
  const auto X = GrotRing::enumerate_X(a2());
  CHECK(X.size() == 19);
  const Elem t1 = a2().t_named(1);
  const Subset et1 = set_of({a2().identity(), t1});
  CHECK(std::count(X.begin(), X.end(), et1) == 1);
  CHECK(stabilizing_reflections(a2(), et1) == std::vector<Elem>{t1});
  for (Subset A : X) {
    const Subset comp = a2().full_set() & ~A;
    CHECK(std::count(X.begin(), X.end(), comp) == 1);
    CHECK(std::count(X.begin(), X.end(), a2().invert_set(A)) == 1);
  }
  // W is stabilized by every reflection; rotation pairs by none
  CHECK(stabilizing_reflections(a2(), a2().full_set()).size() == 3);
  const Subset rot2 = set_of({a2().identity(), a2().mul(a2().t_named(1), a2().t_named(2))});
  CHECK(stabilizing_reflections(a2(), rot2).empty());
  CHECK(!is_valid_class(a2(), rot2));
  CHECK(is_valid_class(a2(), a2().singleton(3)));
}

TEST_CASE("basis sizes") {
  CHECK(GrotRing(Variant::Plain).basis().size() == 20);
  CHECK(GrotRing(Variant::Extended).basis().size() == 25);
}

TEST_CASE("left multiplication by B_t") {
  const RingElement unit = RingElement::basis(a2().singleton(a2().identity()));
  for (Elem t : a2().reflections()) {
    CHECK(lmul_B(a2(), t, unit) ==
          RingElement::basis(set_of({a2().identity(), t}), Laurent::v(1)));
    const RingElement bt = RingElement::basis(set_of({a2().identity(), t}));
    CHECK(lmul_B(a2(), t, bt) == bt.scaled(Laurent::v_plus_vinv()));
    for (Elem w = 0; w < a2().order(); ++w)
      CHECK(lmul_B(a2(), t, RingElement::basis(a2().singleton(w))) ==
            RingElement::basis(set_of({w, a2().mul(t, w)}), Laurent::v(1)));
  }
}

TEST_CASE("twists act by translation") {
  const Elem t = a2().t_named(2);
  const RingElement bt = RingElement::basis(set_of({a2().identity(), t}));
  for (Elem w = 0; w < a2().order(); ++w) {
    CHECK(lmul_R(a2(), w, bt) == RingElement::basis(set_of({w, a2().mul(w, t)})));
    CHECK(lmul_R(a2(), a2().identity(), bt) == bt);
    CHECK(rmul_R(a2(), rmul_R(a2(), bt, w), a2().inv(w)) == bt);
  }
}

TEST_CASE("transpose and right multiplication") {
  const Elem t1 = a2().t_named(1), t3 = a2().t_named(3);
  const RingElement bt1 = RingElement::basis(set_of({a2().identity(), t1}));
  CHECK(transpose(a2(), bt1) == bt1);
  for (Elem w = 0; w < a2().order(); ++w)
    CHECK(transpose(a2(), RingElement::basis(a2().singleton(w))) ==
          RingElement::basis(a2().singleton(a2().inv(w))));
  for (Subset A : GrotRing(Variant::Extended).basis())
    CHECK(transpose(a2(), transpose(a2(), RingElement::basis(A))) == RingElement::basis(A));

  CHECK(rmul_B(a2(), RingElement::basis(a2().singleton(a2().identity())), t1) ==
        RingElement::basis(set_of({a2().identity(), t1}), Laurent::v(1)));
  // rmul_B(R({e,t1}), t3) = v R({e, t1, t1*t3, t3})
  CHECK(rmul_B(a2(), bt1, t3) ==
        RingElement::basis(set_of({a2().identity(), t1, a2().mul(t1, t3), t3}), Laurent::v(1)));
  const RingElement x = rmul_B(a2(), bt1, t3);
  CHECK(rmul_B(a2(), x, t3) == x.scaled(Laurent::v_plus_vinv()));
}

TEST_CASE("generator expansion solves every class and evaluates back") {
  for (Variant v : {Variant::Plain, Variant::Extended}) {
    GrotRing ring(v);
    const auto& E = ring.generator_expansion();
    CHECK(E.size() == ring.basis().size());
    for (Subset A : ring.basis())
      CHECK(eval_word_expr(ring.group(), E.at(A), ring.unit()) == RingElement::basis(A));
  }
  // the seeds of the triangular solve are pinned:
  GrotRing plain(Variant::Plain);
  const auto& E = plain.generator_expansion();
  for (Elem t : a2().reflections()) {
    const WordExpr& e = E.at(set_of({a2().identity(), t}));
    REQUIRE(e.terms.size() == 1);
    CHECK(e.terms.begin()->first == GenWord{GenFactor::B(t)});
    CHECK(e.terms.begin()->second == Laurent::v(-1));
  }
  // plain expansions never use twist generators
  for (const auto& [A, e] : E)
    for (const auto& [word, c] : e.terms)
      for (const auto& f : word) CHECK(f.kind == GenFactor::Kind::B);
}

TEST_CASE("products of generators") {
  GrotRing ring(Variant::Plain);
  for (Elem t : a2().reflections())
    for (Elem t1 : a2().reflections()) {
      if (t == t1) continue;
      // B_t B_t1 = R({e, t, t1, t*t1})(2)
      CHECK(ring.product(ring.B_class(t), ring.B_class(t1)) ==
            RingElement::basis(set_of({a2().identity(), t, t1, a2().mul(t, t1)}), Laurent::v(2)));
    }
  // quadratic relation and frozen coefficient on [R({e,t})]
  for (Elem t : a2().reflections()) {
    const RingElement sq = ring.product(ring.B_class(t), ring.B_class(t));
    CHECK(sq == ring.B_class(t).scaled(Laurent::v_plus_vinv()));
    CHECK(sq.coeff(set_of({a2().identity(), t})) == Laurent::v_plus_vinv() * Laurent::v(1));
  }
  // unit on both sides, over the whole basis
  for (Variant v : {Variant::Plain, Variant::Extended}) {
    GrotRing r(v);
    for (Subset A : r.basis()) {
      CHECK(r.product(RingElement::basis(A), r.unit()) == RingElement::basis(A));
      CHECK(r.product(r.unit(), RingElement::basis(A)) == RingElement::basis(A));
    }
  }
}

TEST_CASE("noncommutativity witness") {
  GrotRing ring(Variant::Plain);
  const Elem t1 = a2().t_named(1), t3 = a2().t_named(3);
  const RingElement xy = ring.product(ring.B_class(t1), ring.B_class(t3));
  const RingElement yx = ring.product(ring.B_class(t3), ring.B_class(t1));
  CHECK(xy != yx);
  CHECK(xy == RingElement::basis(set_of({a2().identity(), t1, t3, a2().mul(t1, t3)}),
                                 Laurent::v(2)));
  CHECK(yx == RingElement::basis(set_of({a2().identity(), t1, t3, a2().mul(t3, t1)}),
                                 Laurent::v(2)));
}

TEST_CASE("structure constants") {
  GrotRing ring(Variant::Plain);
  const auto& st = ring.structure_constants();
  CHECK(st.n == 20);
  const int e_idx = ring.basis_index(a2().singleton(a2().identity()));
  REQUIRE(e_idx == 0); // {e} is first in (cardinality, bitmask) order
  for (int b = 0; b < st.n; ++b)
    for (int c = 0; c < st.n; ++c)
      CHECK(st.at(e_idx, b, c) == (b == c ? Laurent(1) : Laurent()));
  // sampled associativity through the table
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(0, st.n - 1);
  for (int i = 0; i < 50; ++i) {
    const int A = pick(rng), B = pick(rng), C = pick(rng);
    const RingElement x = RingElement::basis(st.basis[static_cast<std::size_t>(A)]);
    const RingElement y = RingElement::basis(st.basis[static_cast<std::size_t>(B)]);
    const RingElement z = RingElement::basis(st.basis[static_cast<std::size_t>(C)]);
    CHECK(ring.product(ring.product(x, y), z) == ring.product(x, ring.product(y, z)));
  }
}

TEST_CASE("positivity of B-words, exhaustive up to length 4") {
  GrotRing ring(Variant::Plain);
  std::vector<std::vector<Elem>> words{{}};
  for (int len = 0; len < 4; ++len) {
    std::vector<std::vector<Elem>> next;
    for (const auto& w : words)
      if (static_cast<int>(w.size()) == len)
        for (Elem t : a2().reflections()) {
          auto w2 = w;
          w2.push_back(t);
          next.push_back(w2);
        }
    for (const auto& w : next) {
      RingElement x = ring.product_of_B(w);
      for (const auto& [A, c] : x.terms()) CHECK(c.has_nonnegative_coeffs());
    }
    words.insert(words.end(), next.begin(), next.end());
  }
}

TEST_CASE("defining relations hold") {
  CHECK(GrotRing(Variant::Plain).verify_relations().all_ok());
  RelationReport ext = GrotRing(Variant::Extended).verify_relations();
  CHECK(ext.all_ok());
  CHECK(ext.checks.size() == 15 + 6 + 18); // (1)-(4) instances + eq1 + eq2
}

TEST_CASE("twist conjugation identity, directly on the primitives") {
  for (Elem w = 0; w < a2().order(); ++w)
    for (Elem t : a2().reflections()) {
      const RingElement bt = RingElement::basis(set_of({a2().identity(), t}), Laurent::v(1));
      const RingElement lhs = lmul_R(a2(), w, bt);
      const RingElement conj =
          RingElement::basis(set_of({a2().identity(), a2().conj(w, t)}), Laurent::v(1));
      const RingElement rhs = rmul_R(a2(), conj, w);
      CHECK(lhs == rhs);
      CHECK(lhs == RingElement::basis(set_of({w, a2().mul(w, t)}), Laurent::v(1)));
    }
}

TEST_CASE("the decomposition rule can fail outside A2") {
  const Group b2 = Group::b2();
  const Elem s = b2.simple(0), t = b2.simple(1);
  const Elem tst = b2.mul(b2.mul(t, s), t);
  const Subset A = b2.singleton(b2.identity()) | b2.singleton(s) | b2.singleton(t) |
                   b2.singleton(b2.mul(s, t));
  CHECK(!lmul_B_class(b2, tst, A).has_value());
  auto r = try_lmul_B(b2, tst, RingElement::basis(A));
  REQUIRE(std::holds_alternative<LemmaFailure>(r));
  CHECK(std::get<LemmaFailure>(r).set == A);
  CHECK(std::get<LemmaFailure>(r).t == tst);
  CHECK_THROWS_AS(lmul_B(b2, tst, RingElement::basis(A)), LemmaNotApplicable);
  // but B_s B_t itself decomposes fine
  CHECK(lmul_B(b2, s, lmul_B(b2, t, RingElement::basis(b2.singleton(b2.identity())))) ==
        RingElement::basis(A, Laurent::v(2)));
}

TEST_CASE("product rejects classes outside the active basis") {
  GrotRing plain(Variant::Plain);
  const RingElement rw = RingElement::basis(a2().singleton(a2().simple(0)));
  CHECK_THROWS_AS(plain.product(rw, plain.unit()), std::invalid_argument);
}
