#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbim/characters.hpp"
#include "sbim/coxeter.hpp"
#include "sbim/grotring.hpp"
#include "sbim/hilbert.hpp"

namespace sbim {

// All non-isomorphism verdicts derived from ungraded characters carry this
// caveat: they are valid under the assumption that standard-subquotient
// multiplicities at v = 1 are isomorphism invariants.
inline constexpr const char* kCharacterAssumptionNote =
    "under character-invariance assumption";

struct B2CounterexampleReport {
  // uch(B_{tst} B_s B_t) covers the whole group with multiplicity one
  bool support_ok = false;
  Character uch_b;
  // delta_w * uch(B) = uch(B) for every w
  bool twist_invariant = false;
  // B_s B_t evaluates to v^2 [R({e,s,t,st})] ...
  bool first_step_class_ok = false;
  // ... and the two-term decomposition fails on (that class, tst)
  bool lemma_inapplicable = false;
  // no shift of the R(W) series matches the graded dimensions of B
  HilbertOracle::B2Compare cmp;
  bool graded_mismatch = false;
  bool ok() const {
    return support_ok && twist_invariant && first_step_class_ok && lemma_inapplicable &&
           graded_mismatch;
  }
  B2CounterexampleReport() : uch_b(Group::b2()) {}
};
B2CounterexampleReport b2_counterexample(int max_degree = 10, int window = 6);

struct A3ChecksReport {
  Character uch_t_u_t;     // B_t B_u B_t
  Character uch_t_sts_t;   // B_t B_{sts} B_t
  Character uch_t_tut_t;   // B_t B_{tut} B_t
  bool distinguishes = false;   // uch separates the first two
  bool eq3_compatible = false;  // and identifies the first and third
  // uch(B_s R_t B_u) = delta_t + delta_st + delta_tu + delta_stu
  bool filtration_example_ok = false;
  struct WtildeCheck {
    Elem wtilde = 0;
    bool excluded = false; // no reflection pair (t1,t2) gives {e,t1,t2,t1t2}
    std::optional<std::pair<Elem, Elem>> witness_pair;
  };
  std::vector<WtildeCheck> wtilde; // over A = {t, st, tu, stu}
  bool four_wtilde_ok = false;
  bool ok() const {
    return distinguishes && eq3_compatible && filtration_example_ok && four_wtilde_ok;
  }
  A3ChecksReport()
      : uch_t_u_t(Group::a3()), uch_t_sts_t(Group::a3()), uch_t_tut_t(Group::a3()) {}
};
A3ChecksReport a3_checks();

struct RemarkWitness {
  Subset target = 0;
  bool found = false;
  bool strong = false; // the full product is a shift of [R(target)]
  Elem w = 0, w2 = 0;
  std::vector<int> simple_indices; // 0-based indices into the simple generators
  int shift = 0;                   // n with v^n * product ~ target
};

struct RemarkReport {
  int max_len = 0;
  int window = 0;
  std::vector<RemarkWitness> entries; // one per extended basis class
  bool ok() const;
};
// Searches words R_w B_{s_1} ... B_{s_k} R_{w'} (simple s_i, k <= max_len)
// and shifts |n| <= window expressing every extended basis class, exactly
// when the full product is indecomposable and as a direct summand otherwise.
RemarkReport remark_comb_check(const GrotRing& ext_ring, int max_len = 4, int window = 6);

struct ClosureReport {
  std::string group;
  std::vector<Elem> generators;
  long long budget = 0;
  long long steps = 0;
  bool budget_exhausted = false;
  // class reached -> first generator word that produced it (left factors)
  std::map<Subset, std::vector<Elem>, SubsetOrder> reached;
  // products whose decomposition hypothesis failed
  std::vector<std::vector<Elem>> opaque_words;
  std::vector<std::size_t> growth; // reached count after each step
};
// Breadth-first closure of {[R({e})]} under left multiplication by the
// given B_t generators, applying the decomposition rule wherever its
// hypothesis holds and recording the product word as opaque otherwise.
ClosureReport closure_explore(const Group& G, const std::vector<Elem>& generators,
                              long long budget = 10000);

} // namespace sbim
