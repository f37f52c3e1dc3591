#include "sbim/grotring.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <sstream>

namespace sbim {

RingElement RingElement::basis(Subset A, Laurent c) {
  RingElement r;
  r.add(A, c);
  return r;
}

Laurent RingElement::coeff(Subset A) const {
  auto it = terms_.find(A);
  return it == terms_.end() ? Laurent() : it->second;
}

void RingElement::add(Subset A, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(A, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RingElement& RingElement::operator+=(const RingElement& o) {
  for (const auto& [A, c] : o.terms_) add(A, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  for (const auto& [A, c] : o.terms_) add(A, -c);
  return *this;
}

RingElement RingElement::scaled(const Laurent& c) const {
  RingElement r;
  if (c.is_zero()) return r;
  for (const auto& [A, x] : terms_) r.terms_.emplace(A, x * c);
  return r;
}

std::vector<Elem> stabilizing_reflections(const Group& G, Subset A) {
  std::vector<Elem> r;
  for (Elem t : G.reflections())
    if (G.act_left(t, A) == A) r.push_back(t);
  return r;
}

bool is_valid_class(const Group& G, Subset A) {
  if (A == 0) return false;
  if (subset_size(A) == 1) return true;
  for (Elem t : G.reflections())
    if (G.act_left(t, A) == A) return true;
  return false;
}

LemmaNotApplicable::LemmaNotApplicable(const Group& G, Subset A, Elem t_)
    : std::runtime_error("lemma not applicable: B_" + G.name(t_) + " (x) R(" + G.set_str(A) + ")"),
      set(A),
      t(t_) {}

std::optional<RingElement> lmul_B_class(const Group& G, Elem t, Subset A) {
  assert(A != 0);
  const Subset tA = G.act_left(t, A);
  RingElement r;
  if (tA == A) {
    r.add(A, Laurent::v_plus_vinv());
    return r;
  }
  const Subset both = A & tA;
  if (subset_size(A) > 1) {
    // two-term decomposition hypothesis: the part of A moved out by t must
    // be a 2-element set stabilized by a reflection other than t
    const Subset moved = A & ~both;
    if (subset_size(moved) != 2) return std::nullopt;
    bool stable = false;
    for (Elem t2 : G.reflections())
      if (t2 != t && G.act_left(t2, moved) == moved) {
        stable = true;
        break;
      }
    if (!stable) return std::nullopt;
  }
  r.add(A | tA, Laurent::v(1));
  if (both != 0) r.add(both, Laurent::v(-1)); // R(empty) = 0
  return r;
}

std::variant<RingElement, LemmaFailure> try_lmul_B(const Group& G, Elem t, const RingElement& x) {
  RingElement r;
  for (const auto& [A, c] : x.terms()) {
    auto part = lmul_B_class(G, t, A);
    if (!part) return LemmaFailure{A, t};
    r += part->scaled(c);
  }
  return r;
}

RingElement lmul_B(const Group& G, Elem t, const RingElement& x) {
  auto r = try_lmul_B(G, t, x);
  if (auto* fail = std::get_if<LemmaFailure>(&r)) throw LemmaNotApplicable(G, fail->set, fail->t);
  return std::get<RingElement>(std::move(r));
}

RingElement lmul_R(const Group& G, Elem w, const RingElement& x) {
  RingElement r;
  for (const auto& [A, c] : x.terms()) r.add(G.act_left(w, A), c);
  return r;
}

RingElement rmul_R(const Group& G, const RingElement& x, Elem w) {
  RingElement r;
  for (const auto& [A, c] : x.terms()) r.add(G.act_right(A, w), c);
  return r;
}

RingElement transpose(const Group& G, const RingElement& x) {
  RingElement r;
  for (const auto& [A, c] : x.terms()) {
    Subset Ainv = G.invert_set(A);
    if (!is_valid_class(G, Ainv))
      throw std::logic_error("transpose left the class index set: " + G.set_str(Ainv));
    r.add(Ainv, c);
  }
  return r;
}

RingElement rmul_B(const Group& G, const RingElement& x, Elem t) {
  return transpose(G, lmul_B(G, t, transpose(G, x)));
}

std::string word_str(const Group& G, const GenWord& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& f : w) {
    if (!first) out << " * ";
    first = false;
    out << (f.kind == GenFactor::Kind::B ? "B:" : "Rw:") << G.name(f.g);
  }
  return out.str();
}

WordExpr WordExpr::unit() { return single(GenWord{}); }

WordExpr WordExpr::single(GenWord w, Laurent c) {
  WordExpr e;
  e.add(w, c);
  return e;
}

void WordExpr::add(const GenWord& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

WordExpr WordExpr::prepended(const GenFactor& f) const {
  WordExpr e;
  for (const auto& [w, c] : terms) {
    GenWord nw;
    nw.reserve(w.size() + 1);
    nw.push_back(f);
    nw.insert(nw.end(), w.begin(), w.end());
    e.terms.emplace(std::move(nw), c);
  }
  return e;
}

WordExpr WordExpr::scaled(const Laurent& c) const {
  WordExpr e;
  if (c.is_zero()) return e;
  for (const auto& [w, x] : terms) e.terms.emplace(w, x * c);
  return e;
}

WordExpr& WordExpr::operator-=(const WordExpr& o) {
  for (const auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

RingElement apply_word(const Group& G, const GenWord& w, RingElement x) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->kind == GenFactor::Kind::B)
      x = lmul_B(G, it->g, x);
    else
      x = lmul_R(G, it->g, x);
  }
  return x;
}

RingElement eval_word_expr(const Group& G, const WordExpr& e, const RingElement& x) {
  RingElement r;
  for (const auto& [w, c] : e.terms) r += apply_word(G, w, x).scaled(c);
  return r;
}

bool RelationReport::all_ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

GrotRing::GrotRing(Variant variant) : G_(Group::a2()), variant_(variant) {
  basis_.push_back(G_.singleton(G_.identity()));
  if (variant_ == Variant::Extended)
    for (Elem w = 0; w < G_.order(); ++w)
      if (w != G_.identity()) basis_.push_back(G_.singleton(w));
  for (Subset A : enumerate_X(G_)) basis_.push_back(A);
  std::sort(basis_.begin(), basis_.end(), SubsetOrder{});
  assert(basis_.size() == (variant_ == Variant::Plain ? 20u : 25u));
}

bool GrotRing::in_basis(Subset A) const { return basis_index(A) >= 0; }

int GrotRing::basis_index(Subset A) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), A, SubsetOrder{});
  if (it == basis_.end() || *it != A) return -1;
  return static_cast<int>(it - basis_.begin());
}

std::vector<Subset> GrotRing::enumerate_X(const Group& G) {
  if (G.kind() != GroupKind::Dihedral || G.dihedral_m() != 3)
    throw std::invalid_argument("X enumeration is defined for the A2 group only");
  std::vector<Subset> xs;
  for (Subset A = 1; A < (Subset(1) << G.order()); ++A)
    if (!stabilizing_reflections(G, A).empty()) xs.push_back(A);
  return xs;
}

RingElement GrotRing::B_class(Elem t) const {
  if (!G_.is_reflection(t)) throw std::invalid_argument("B generator wants a reflection");
  return RingElement::basis(G_.singleton(G_.identity()) | G_.singleton(t), Laurent::v(1));
}

RingElement GrotRing::R_class(Elem w) const { return RingElement::basis(G_.singleton(w)); }

// Triangular back-substitution through the decomposition rule: starting
// from E({e}) = 1 (and, in the extended variant, E({w}) = R_w), each
// application of B_t to an expressed class gives
//   v [R(A u tA)] + v^-1 [R(A n tA)]  (tA != A),
// an equation with unit leading coefficients from which whichever of the
// two classes is still unexpressed can be solved exactly.
void GrotRing::compute_expansion() const {
  ExpansionMap E;
  const Subset unitSet = G_.singleton(G_.identity());
  E.emplace(unitSet, WordExpr::unit());

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Subset> keys;
    keys.reserve(E.size());
    for (const auto& [A, e] : E) keys.push_back(A);
    for (Subset A : keys) {
      for (Elem t : G_.reflections()) {
        const Subset tA = G_.act_left(t, A);
        if (tA == A) continue;
        const Subset U = A | tA, I = A & tA;
        const bool haveU = E.count(U) != 0, haveI = I == 0 || E.count(I) != 0;
        if (haveU && haveI) continue;
        if (!haveU && I != 0 && !haveI) continue; // two unknowns; retry later
        WordExpr bt = E.find(A)->second.prepended(GenFactor::B(t));
        if (!haveU) {
          WordExpr e = bt.scaled(Laurent::v(-1));
          if (I != 0) e -= E.find(I)->second.scaled(Laurent::v(-2));
          E.emplace(U, std::move(e));
        } else {
          WordExpr e = bt.scaled(Laurent::v(1));
          e -= E.find(U)->second.scaled(Laurent::v(2));
          E.emplace(I, std::move(e));
        }
        changed = true;
      }
    }
  }

  if (variant_ == Variant::Extended)
    for (Elem w = 0; w < G_.order(); ++w)
      if (w != G_.identity()) E.emplace(G_.singleton(w), WordExpr::single({GenFactor::R(w)}));

  for (Subset A : basis_)
    if (!E.count(A))
      throw std::logic_error("generator expansion incomplete at class " + G_.set_str(A));
  // every expression must evaluate back to its class
  const RingElement one = unit();
  for (Subset A : basis_)
    if (eval_word_expr(G_, E.find(A)->second, one) != RingElement::basis(A))
      throw std::logic_error("generator expansion does not evaluate to " + G_.set_str(A));
  expansion_ = std::move(E);
}

const GrotRing::ExpansionMap& GrotRing::generator_expansion() const {
  if (!expansion_) compute_expansion();
  return *expansion_;
}

RingElement GrotRing::product(const RingElement& x, const RingElement& y) const {
  const auto& E = generator_expansion();
  RingElement acc;
  for (const auto& [A, cA] : x.terms()) {
    auto it = E.find(A);
    if (it == E.end())
      throw std::invalid_argument("product: class " + G_.set_str(A) + " not in the active basis");
    acc += eval_word_expr(G_, it->second, y).scaled(cA);
  }
  return acc;
}

RingElement GrotRing::product_of_B(const std::vector<Elem>& refl_word) const {
  RingElement x = unit();
  for (auto it = refl_word.rbegin(); it != refl_word.rend(); ++it) x = lmul_B(G_, *it, x);
  return x;
}

const GrotRing::StructureTable& GrotRing::structure_constants() const {
  if (table_) return *table_;
  StructureTable t;
  t.basis = basis_;
  t.n = static_cast<int>(basis_.size());
  t.c.assign(static_cast<std::size_t>(t.n) * t.n * t.n, Laurent());
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b) {
      RingElement p = product(RingElement::basis(basis_[a]), RingElement::basis(basis_[b]));
      for (const auto& [C, coeff] : p.terms()) {
        int k = basis_index(C);
        assert(k >= 0);
        t.c[(static_cast<std::size_t>(a) * t.n + b) * t.n + k] = coeff;
      }
    }
  table_ = std::move(t);
  return *table_;
}

RelationReport GrotRing::verify_relations() const {
  RelationReport rep;
  const std::array<Elem, 3> t = {G_.t_named(1), G_.t_named(2), G_.t_named(3)};
  std::array<RingElement, 3> C;
  for (int i = 0; i < 3; ++i) C[i] = B_class(t[i]);
  auto mul2 = [&](const RingElement& a, const RingElement& b) { return product(a, b); };
  auto mul3 = [&](const RingElement& a, const RingElement& b, const RingElement& c) {
    return product(a, product(b, c));
  };
  auto check = [&](std::string name, RingElement lhs, RingElement rhs) {
    rep.checks.push_back({std::move(name), lhs == rhs, std::move(lhs), std::move(rhs)});
  };

  for (int i = 0; i < 3; ++i)
    check("(1) C" + std::to_string(i + 1) + "^2 = (v+v^-1)C" + std::to_string(i + 1),
          mul2(C[i], C[i]), C[i].scaled(Laurent::v_plus_vinv()));

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::string nm = "(2) C" + std::to_string(i + 1) + "C" + std::to_string(j + 1) + "C" +
                       std::to_string(i + 1) + " + C" + std::to_string(j + 1);
      check(nm, mul3(C[i], C[j], C[i]) + C[j], C[i] + mul3(C[j], C[i], C[j]));
    }

  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    check("(3) C" + std::to_string(i + 1) + "C" + std::to_string(j + 1) + "C" +
              std::to_string(i + 1) + " = C" + std::to_string(i + 1) + "C" +
              std::to_string(k + 1) + "C" + std::to_string(i + 1),
          mul3(C[i], C[j], C[i]), mul3(C[i], C[k], C[i]));
    check("(4) C" + std::to_string(i + 1) + "C" + std::to_string(j + 1) + "C" +
              std::to_string(k + 1) + "C" + std::to_string(i + 1) + " = swapped",
          mul2(C[i], mul3(C[j], C[k], C[i])), mul2(C[i], mul3(C[k], C[j], C[i])));
  }

  if (variant_ == Variant::Extended) {
    for (Elem r : G_.reflections()) {
      RingElement Bt = B_class(r), Rt = R_class(r);
      check("(eq1) B_" + G_.name(r) + " R_" + G_.name(r) + " = B_" + G_.name(r), mul2(Bt, Rt), Bt);
      check("(eq1) R_" + G_.name(r) + " B_" + G_.name(r) + " = B_" + G_.name(r), mul2(Rt, Bt), Bt);
    }
    for (Elem w = 0; w < G_.order(); ++w)
      for (Elem r : G_.reflections()) {
        RingElement lhs = mul2(R_class(w), B_class(r));
        RingElement rhs = mul2(B_class(G_.conj(w, r)), R_class(w));
        check("(eq2) R_" + G_.name(w) + " B_" + G_.name(r) + " = B_" + G_.name(G_.conj(w, r)) +
                  " R_" + G_.name(w),
              std::move(lhs), std::move(rhs));
      }
  }
  return rep;
}

} // namespace sbim
