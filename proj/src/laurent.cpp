#include "sbim/laurent.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace sbim {

Laurent::Laurent(long c) {
  if (c != 0) terms_[0] = c;
}

Laurent::Laurent(Int c) {
  if (c != 0) terms_[0] = std::move(c);
}

Laurent Laurent::monomial(int exp, Int c) {
  Laurent r;
  if (c != 0) r.terms_[exp] = std::move(c);
  return r;
}

Laurent Laurent::v_plus_vinv() {
  Laurent r;
  r.terms_[1] = 1;
  r.terms_[-1] = 1;
  return r;
}

Int Laurent::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

int Laurent::min_exp() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

int Laurent::max_exp() const {
  assert(!terms_.empty());
  return terms_.rbegin()->first;
}

void Laurent::add_term(int exp, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) r.add_term(ea + eb, ca * cb);
  return r;
}

bool Laurent::operator<(const Laurent& o) const {
  return terms_ < o.terms_;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

Int Laurent::eval_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool Laurent::has_nonnegative_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::optional<Laurent::UnitMonomial> Laurent::as_unit_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  if (c == 1) return UnitMonomial{+1, e};
  if (c == -1) return UnitMonomial{-1, e};
  return std::nullopt;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // descending exponents
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Int c = it->second;
    int e = it->first;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (e == 0) {
      out << c;
    } else {
      if (c != 1) out << c << "*";
      out << "v";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

Laurent div_exact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::logic_error("laurent: division by zero");
  if (a.is_zero()) return {};
  // Shift both to ordinary polynomials and do long division; exactness
  // is asserted at every step.
  const int sa = a.min_exp(), sb = b.min_exp();
  Laurent rem = a.shifted(-sa);
  const Laurent den = b.shifted(-sb);
  const int dden = den.max_exp();
  const Int& lead = den.terms().rbegin()->second;
  Laurent quo;
  while (!rem.is_zero() && rem.max_exp() >= dden) {
    const Int& lc = rem.terms().rbegin()->second;
    if (lc % lead != 0) throw std::logic_error("laurent: inexact division");
    Laurent q = Laurent::monomial(rem.max_exp() - dden, lc / lead);
    quo += q;
    rem -= q * den;
  }
  if (!rem.is_zero()) throw std::logic_error("laurent: inexact division");
  return quo.shifted(sa - sb);
}

Laurent v_plus_vinv_pow(int n) {
  Laurent r(1);
  for (int i = 0; i < n; ++i) r *= Laurent::v_plus_vinv();
  return r;
}

} // namespace sbim
