#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbim/grotring.hpp"
#include "sbim/laurent.hpp"

namespace sbim {

// Word in the abstract generators C_1, C_2, C_3 (letters 1..3).
using CWord = std::vector<int>;

// The 20 canonical monomials, in the fixed listing order:
// 1; C1; C2; C3; C1C2; C2C1; C2C3; C3C2; C1C3; C3C1; C1C2C1;
// the six CiCjCk with {i,j,k} = {1,2,3}; C1C2C3C1; C2C1C3C2; C3C1C2C3.
const std::vector<CWord>& canonical_monomials();
int canonical_index(const CWord& w); // -1 when not canonical
std::string cword_str(const CWord& w);

// Z[v^{+-1}]-combination of canonical monomials; zero coefficients are
// never stored.
class AlgebraElement {
public:
  using Terms = std::map<CWord, Laurent>;
  AlgebraElement() = default;
  static AlgebraElement monomial(CWord w, Laurent c = Laurent(1));

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Laurent coeff(const CWord& w) const;
  void add(const CWord& w, const Laurent& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  AlgebraElement scaled(const Laurent& c) const;
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

private:
  Terms terms_;
};

// Rewrites an arbitrary word onto the canonical monomials by deterministic
// leftmost reduction with the defining relations; terminates because every
// branch strictly decreases word length.
AlgebraElement normalize(const CWord& w);

AlgebraElement alg_multiply(const AlgebraElement& a, const AlgebraElement& b);

// The algebra map C_i -> [B_{t_i}] = v [R({e,t_i})], evaluated in the ring.
RingElement phi(const GrotRing& ring, const AlgebraElement& a);
RingElement phi_word_direct(const GrotRing& ring, const CWord& w);

struct IsoReport {
  Laurent det;
  bool det_is_unit = false;
  long long words_checked = 0;
  bool words_ok = false;
  std::optional<CWord> first_failure;
  bool ok() const { return det_is_unit && words_ok; }
};

// Change-of-basis determinant of the 20 phi-images over the 20 ring basis
// classes, plus exhaustive agreement phi(normalize(w)) = direct evaluation
// for all generator words up to the given length.
IsoReport verify_iso(const GrotRing& ring, int max_word_len = 8);

// Fraction-free determinant over Z[v^{+-1}] (Bareiss elimination with exact
// division).
Laurent laurent_det(std::vector<std::vector<Laurent>> m);

} // namespace sbim
