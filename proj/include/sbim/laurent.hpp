#pragma once

#include <map>
#include <optional>
#include <string>

#include "sbim/bigint.hpp"

namespace sbim {

// An element of Z[v^{+-1}], stored as exponent -> nonzero coefficient.
class Laurent {
public:
  Laurent() = default;
  Laurent(long c);
  explicit Laurent(Int c);

  // c * v^k
  static Laurent monomial(int exp, Int c = 1);
  static Laurent v(int exp = 1) { return monomial(exp); }
  // v + v^-1, the graded rank of R over R^t up to shift; ubiquitous here.
  static Laurent v_plus_vinv();

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Int>& terms() const { return terms_; }
  Int coeff(int exp) const;
  int min_exp() const; // undefined on zero (asserts)
  int max_exp() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator-() const;
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  // total order (lexicographic on the term maps); for use as container key
  bool operator<(const Laurent& o) const;

  // v -> v^-1, a ring involution
  Laurent bar() const;
  // multiply by v^k
  Laurent shifted(int k) const;
  Int eval_at_one() const;
  bool has_nonnegative_coeffs() const;

  struct UnitMonomial {
    int sign; // +1 or -1
    int exp;
  };
  // engaged iff the value is exactly +-v^k
  std::optional<UnitMonomial> as_unit_monomial() const;

  // exponents descending, e.g. "v^2 + 2 + v^-2"; "0" for zero
  std::string str() const;

private:
  std::map<int, Int> terms_;
  void add_term(int exp, const Int& c);
  friend Laurent div_exact(const Laurent& a, const Laurent& b);
};

// Exact division in Z[v^{+-1}]; throws std::logic_error if b does not
// divide a. Needed by the fraction-free determinant.
Laurent div_exact(const Laurent& a, const Laurent& b);

// (v + v^-1)^n expanded
Laurent v_plus_vinv_pow(int n);

} // namespace sbim
