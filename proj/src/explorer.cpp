#include "sbim/explorer.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace sbim {

B2CounterexampleReport b2_counterexample(int max_degree, int window) {
  const Group G = Group::b2();
  const Elem s = G.simple(0), t = G.simple(1);
  const Elem tst = G.mul(G.mul(t, s), t);

  B2CounterexampleReport rep;

  // (a) every group element appears exactly once in the standard shadow
  rep.uch_b = uch_of_word(G, {GenFactor::B(tst), GenFactor::B(s), GenFactor::B(t)});
  rep.support_ok = true;
  for (Elem w = 0; w < G.order(); ++w)
    if (rep.uch_b.coeff(w) != 1) rep.support_ok = false;

  // (b) left twisting fixes the character
  rep.twist_invariant = true;
  for (Elem w = 0; w < G.order(); ++w)
    if (convolve(G, delta(G, w), rep.uch_b) != rep.uch_b) rep.twist_invariant = false;

  // (c) B_s B_t = R({e,s,t,st})(2), and B_{tst} (x) that class is opaque
  RingElement bsbt = lmul_B(G, s, lmul_B(G, t, RingElement::basis(G.singleton(G.identity()))));
  const Subset first = G.singleton(G.identity()) | G.singleton(s) | G.singleton(t) |
                       G.singleton(G.mul(s, t));
  rep.first_step_class_ok = bsbt == RingElement::basis(first, Laurent::v(2));
  rep.lemma_inapplicable = !lmul_B_class(G, tst, first).has_value();

  // (d) graded dimensions rule out every shift of R(W)
  HilbertOracle oracle(G);
  rep.cmp = oracle.graded_dim_compare_b2(max_degree, window);
  rep.graded_mismatch = rep.cmp.mismatch_for_all();
  return rep;
}

A3ChecksReport a3_checks() {
  const Group G = Group::a3();
  const Elem s = G.simple(0), t = G.simple(1), u = G.simple(2);
  const Elem sts = G.conj(s, t); // = s t s
  const Elem tut = G.conj(t, u);

  A3ChecksReport rep;
  rep.uch_t_u_t = uch_of_word(G, {GenFactor::B(t), GenFactor::B(u), GenFactor::B(t)});
  rep.uch_t_sts_t = uch_of_word(G, {GenFactor::B(t), GenFactor::B(sts), GenFactor::B(t)});
  rep.uch_t_tut_t = uch_of_word(G, {GenFactor::B(t), GenFactor::B(tut), GenFactor::B(t)});
  rep.distinguishes = rep.uch_t_u_t != rep.uch_t_sts_t;
  rep.eq3_compatible = rep.uch_t_u_t == rep.uch_t_tut_t;

  Character bsrtbu = uch_of_word(G, {GenFactor::B(s), GenFactor::R(t), GenFactor::B(u)});
  Character expected(G);
  expected.add(t, 1);
  expected.add(G.mul(s, t), 1);
  expected.add(G.mul(t, u), 1);
  expected.add(G.mul(G.mul(s, t), u), 1);
  rep.filtration_example_ok = bsrtbu == expected;

  // A = {t, st, tu, stu}; for each wtilde in A, wtilde^-1 A is never of the
  // form {e, t1, t2, t1 t2} with t1, t2 reflections
  const Subset A = G.singleton(t) | G.singleton(G.mul(s, t)) | G.singleton(G.mul(t, u)) |
                   G.singleton(G.mul(G.mul(s, t), u));
  rep.four_wtilde_ok = true;
  for (Elem wt : G.subset_elems(A)) {
    A3ChecksReport::WtildeCheck chk;
    chk.wtilde = wt;
    chk.excluded = true;
    const Subset B = G.act_left(G.inv(wt), A);
    for (Elem t1 : G.reflections()) {
      for (Elem t2 : G.reflections()) {
        if (t1 == t2) continue;
        const Subset cand = G.singleton(G.identity()) | G.singleton(t1) | G.singleton(t2) |
                            G.singleton(G.mul(t1, t2));
        if (cand == B) {
          chk.excluded = false;
          chk.witness_pair = {t1, t2};
        }
      }
    }
    if (!chk.excluded) rep.four_wtilde_ok = false;
    rep.wtilde.push_back(chk);
  }
  return rep;
}

bool RemarkReport::ok() const {
  if (entries.empty()) return false;
  for (const auto& e : entries)
    if (!e.found) return false;
  return true;
}

RemarkReport remark_comb_check(const GrotRing& ring, int max_len, int window) {
  if (ring.variant() != Variant::Extended)
    throw std::invalid_argument("remark_comb_check wants the extended ring");
  const Group& G = ring.group();

  RemarkReport rep;
  rep.max_len = max_len;
  rep.window = window;
  for (Subset target : ring.basis()) {
    RemarkWitness w;
    w.target = target;
    rep.entries.push_back(w);
  }

  // enumerate words in canonical order: length, then simple indices, then
  // the two twists; remember the first strong and first weak witness
  std::vector<RemarkWitness> weak(rep.entries.size());
  std::vector<std::vector<int>> seqs{{}};
  for (int k = 0; k < max_len; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& s : seqs)
      if (static_cast<int>(s.size()) == k)
        for (int i = 0; i < G.rank(); ++i) {
          auto t = s;
          t.push_back(i);
          next.push_back(t);
        }
    seqs.insert(seqs.end(), next.begin(), next.end());
  }
  std::stable_sort(seqs.begin(), seqs.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  for (const auto& seq : seqs) {
    for (Elem w1 = 0; w1 < G.order(); ++w1) {
      for (Elem w2 = 0; w2 < G.order(); ++w2) {
        RingElement p = RingElement::basis(G.singleton(w2));
        for (auto it = seq.rbegin(); it != seq.rend(); ++it) p = lmul_B(G, G.simple(*it), p);
        p = lmul_R(G, w1, p);
        const bool single_term = p.terms().size() == 1;
        for (std::size_t i = 0; i < rep.entries.size(); ++i) {
          auto& entry = rep.entries[i];
          if (entry.found) continue; // already have a strong witness
          const Laurent c = p.coeff(entry.target);
          auto unit = c.as_unit_monomial();
          if (!unit || unit->sign != +1 || std::abs(unit->exp) > window) continue;
          RemarkWitness wit;
          wit.target = entry.target;
          wit.found = true;
          wit.strong = single_term;
          wit.w = w1;
          wit.w2 = w2;
          wit.simple_indices = seq;
          wit.shift = -unit->exp;
          if (single_term)
            entry = wit;
          else if (!weak[i].found)
            weak[i] = wit;
        }
      }
    }
  }
  for (std::size_t i = 0; i < rep.entries.size(); ++i)
    if (!rep.entries[i].found && weak[i].found) rep.entries[i] = weak[i];
  return rep;
}

ClosureReport closure_explore(const Group& G, const std::vector<Elem>& generators,
                              long long budget) {
  for (Elem t : generators)
    if (!G.is_reflection(t))
      throw std::invalid_argument("closure generator " + G.name(t) + " is not a reflection");

  ClosureReport rep;
  rep.group = G.selector();
  rep.generators = generators;
  rep.budget = budget;

  const Subset seed = G.singleton(G.identity());
  rep.reached.emplace(seed, std::vector<Elem>{});
  std::deque<Subset> queue{seed};
  std::set<std::pair<Elem, Subset>> failed;

  while (!queue.empty()) {
    if (rep.steps >= budget) {
      rep.budget_exhausted = true;
      break;
    }
    const Subset A = queue.front();
    queue.pop_front();
    const auto word = rep.reached.at(A);
    for (Elem t : generators) {
      if (rep.steps >= budget) {
        rep.budget_exhausted = true;
        break;
      }
      ++rep.steps;
      std::vector<Elem> next_word{t};
      next_word.insert(next_word.end(), word.begin(), word.end());
      auto dec = lmul_B_class(G, t, A);
      if (!dec) {
        if (failed.insert({t, A}).second) rep.opaque_words.push_back(next_word);
      } else {
        for (const auto& [S, c] : dec->terms()) {
          assert(is_valid_class(G, S));
          if (rep.reached.emplace(S, next_word).second) queue.push_back(S);
        }
      }
      rep.growth.push_back(rep.reached.size());
    }
  }
  return rep;
}

} // namespace sbim
