#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sbim/coxeter.hpp"
#include "sbim/laurent.hpp"

namespace sbim {

// Canonical basis order: by cardinality, then bitmask value.
struct SubsetOrder {
  bool operator()(Subset a, Subset b) const {
    const int pa = subset_size(a), pb = subset_size(b);
    if (pa != pb) return pa < pb;
    return a < b;
  }
};

// Finite Z[v^{+-1}]-combination of classes [R(A)], keyed by the subset A.
// Zero coefficients are never stored.
class RingElement {
public:
  using Terms = std::map<Subset, Laurent, SubsetOrder>;

  RingElement() = default;
  static RingElement basis(Subset A, Laurent c = Laurent(1));

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Laurent coeff(Subset A) const;
  void add(Subset A, const Laurent& c);

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  RingElement scaled(const Laurent& c) const;
  bool operator==(const RingElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const RingElement& o) const { return !(*this == o); }

private:
  Terms terms_;
};

// A is a class index iff it is a singleton or is stabilized by a reflection.
bool is_valid_class(const Group& G, Subset A);
std::vector<Elem> stabilizing_reflections(const Group& G, Subset A);

struct LemmaFailure {
  Subset set;
  Elem t;
};

// Thrown when the two-term decomposition of B_t (x) R(A) does not apply
// (possible outside A2); callers that expect this treat the product as
// opaque instead.
class LemmaNotApplicable : public std::runtime_error {
public:
  LemmaNotApplicable(const Group& G, Subset A, Elem t);
  Subset set;
  Elem t;
};

// Decomposition of [B_t] * [R(A)] for a single class:
//   tA == A:        (v + v^-1) [R(A)]
//   A a singleton:  v [R(A u tA)]
//   otherwise, when |A \ (A n tA)| == 2 and that difference is stabilized
//   by some reflection t' != t:  v [R(A u tA)] + v^-1 [R(A n tA)],
//   dropping the second term when the intersection is empty.
// nullopt when none of the cases applies.
std::optional<RingElement> lmul_B_class(const Group& G, Elem t, Subset A);

std::variant<RingElement, LemmaFailure> try_lmul_B(const Group& G, Elem t, const RingElement& x);
RingElement lmul_B(const Group& G, Elem t, const RingElement& x); // throws LemmaNotApplicable
RingElement lmul_R(const Group& G, Elem w, const RingElement& x);
RingElement rmul_R(const Group& G, const RingElement& x, Elem w);
// [R(A)] -> [R(A^-1)]; an anti-automorphism (validated by tests)
RingElement transpose(const Group& G, const RingElement& x);
// defined as transpose o lmul_B(t) o transpose
RingElement rmul_B(const Group& G, const RingElement& x, Elem t);

// One letter of a word in the multiplicative generators.
struct GenFactor {
  enum class Kind { B, R } kind;
  Elem g;
  static GenFactor B(Elem t) { return {Kind::B, t}; }
  static GenFactor R(Elem w) { return {Kind::R, w}; }
  auto operator<=>(const GenFactor&) const = default;
};
using GenWord = std::vector<GenFactor>;

std::string word_str(const Group& G, const GenWord& w); // "B:t * Rw:s" style

// Laurent combination of generator words; evaluating it on the unit class
// by the left-multiplication primitives recovers the class it expands.
struct WordExpr {
  std::map<GenWord, Laurent> terms;
  static WordExpr unit();
  static WordExpr single(GenWord w, Laurent c = Laurent(1));
  void add(const GenWord& w, const Laurent& c);
  WordExpr prepended(const GenFactor& f) const;
  WordExpr scaled(const Laurent& c) const;
  WordExpr& operator-=(const WordExpr& o);
};

// word letters act right to left: apply_word([f1,f2], x) = f1 (f2 x)
RingElement apply_word(const Group& G, const GenWord& w, RingElement x);
RingElement eval_word_expr(const Group& G, const WordExpr& e, const RingElement& x);

enum class Variant { Plain, Extended };

struct RelationCheck {
  std::string name;
  bool ok;
  RingElement lhs, rhs;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_ok() const;
};

// The split Grothendieck ring of type A2: free Z[v^{+-1}]-module on the
// classes [R(A)] (20 in the plain variant, 25 in the extended one), with
// multiplication driven by the generator expansion of each basis class.
class GrotRing {
public:
  explicit GrotRing(Variant variant);

  const Group& group() const { return G_; }
  Variant variant() const { return variant_; }
  const std::vector<Subset>& basis() const { return basis_; }
  bool in_basis(Subset A) const;
  int basis_index(Subset A) const; // -1 when absent

  // the 19 nonempty subsets stabilized by some reflection (A2 only)
  static std::vector<Subset> enumerate_X(const Group& G);

  RingElement unit() const { return RingElement::basis(G_.singleton(G_.identity())); }
  RingElement B_class(Elem t) const; // [B_t] = v [R({e,t})]
  RingElement R_class(Elem w) const; // [R_w] = [R({w})]

  using ExpansionMap = std::map<Subset, WordExpr, SubsetOrder>;
  const ExpansionMap& generator_expansion() const;

  RingElement product(const RingElement& x, const RingElement& y) const;
  // [B_{t_1}] ... [B_{t_k}] * 1 for a sequence of reflections
  RingElement product_of_B(const std::vector<Elem>& refl_word) const;

  struct StructureTable {
    std::vector<Subset> basis;
    int n = 0;
    std::vector<Laurent> c; // c[(a*n + b)*n + k]
    const Laurent& at(int a, int b, int k) const { return c[(a * n + b) * n + k]; }
  };
  const StructureTable& structure_constants() const;

  // relations C_i^2 = (v+v^-1) C_i, C_iC_jC_i + C_j = C_i + C_jC_iC_j,
  // C_iC_jC_i = C_iC_kC_i, C_iC_jC_kC_i = C_iC_kC_jC_i on C_i = [B_{t_i}];
  // in the extended variant also [B_t][R_t] = [B_t] = [R_t][B_t] and
  // [R_w][B_t] = [B_{wtw^-1}][R_w].
  RelationReport verify_relations() const;

private:
  void compute_expansion() const;

  Group G_;
  Variant variant_;
  std::vector<Subset> basis_;
  mutable std::optional<ExpansionMap> expansion_;
  mutable std::optional<StructureTable> table_;
};

} // namespace sbim
