#include "sbim/presented.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace sbim {

namespace {

std::vector<CWord> build_canonical_list() {
  std::vector<CWord> out = {
      {},        {1},       {2},       {3},          //
      {1, 2},    {2, 1},    {2, 3},    {3, 2},    {1, 3}, {3, 1},
      {1, 2, 1},                                       //
      {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1},
      {1, 2, 3, 1}, {2, 1, 3, 2}, {3, 1, 2, 3},
  };
  assert(out.size() == 20);
  return out;
}

} // namespace

const std::vector<CWord>& canonical_monomials() {
  static const std::vector<CWord> list = build_canonical_list();
  return list;
}

int canonical_index(const CWord& w) {
  const auto& list = canonical_monomials();
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i] == w) return static_cast<int>(i);
  return -1;
}

std::string cword_str(const CWord& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << "*";
    out << "C" << w[i];
  }
  return out.str();
}

AlgebraElement AlgebraElement::monomial(CWord w, Laurent c) {
  AlgebraElement a;
  a.add(w, c);
  return a;
}

Laurent AlgebraElement::coeff(const CWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Laurent() : it->second;
}

void AlgebraElement::add(const CWord& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const Laurent& c) const {
  AlgebraElement r;
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
  return r;
}

namespace {

CWord concat(CWord a, const CWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Leftmost-reduction rewriter implementing the case split of the spanning
// argument: the quadratic relation handles repeated letters, relation (3)
// funnels every C_iC_jC_i toward C1C2C1, relation (4) orders the length-4
// monomials, and length-5 words fall back to combinations of shorter ones.
// A cache keyed by the word keeps the exhaustive sweeps cheap.
class Normalizer {
public:
  const AlgebraElement& run(const CWord& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    AlgebraElement r = compute(w);
    return cache_.emplace(w, std::move(r)).first->second;
  }

private:
  std::map<CWord, AlgebraElement> cache_;

  AlgebraElement compute(const CWord& w) {
    if (canonical_index(w) >= 0) return AlgebraElement::monomial(w);
    const std::size_t n = w.size();

    // C_i C_i = (v + v^-1) C_i, leftmost occurrence first
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (w[i] == w[i + 1]) {
        CWord shorter = w;
        shorter.erase(shorter.begin() + static_cast<long>(i));
        return run(shorter).scaled(Laurent::v_plus_vinv());
      }

    if (n == 3) return length3(w);
    if (n == 4) return length4(w);
    if (n == 5) return length5(w);
    assert(n >= 6);
    // normalize the length-5 prefix (canonical monomials have length <= 4),
    // then concatenate each with the strictly shorter remainder
    const CWord prefix(w.begin(), w.begin() + 5);
    const CWord tail(w.begin() + 5, w.end());
    AlgebraElement pre = run(prefix);
    AlgebraElement acc;
    for (const auto& [mon, c] : pre.terms()) acc += run(concat(mon, tail)).scaled(c);
    return acc;
  }

  // non-canonical C_a C_b C_a with a != b
  AlgebraElement length3(const CWord& w) {
    const int a = w[0], b = w[1];
    assert(w[2] == a && a != b);
    if ((a == 1 && b == 2) || (a == 2 && b == 1)) {
      // relation (2): C2C1C2 = C1C2C1 + C2 - C1
      assert(a == 2);
      return run({1, 2, 1}) + run({2}) - run({1});
    }
    if (b == 3) {
      // relation (3): swap the middle letter toward the smaller index
      const int k = (a == 1) ? 2 : 1;
      return run({a, k, a});
    }
    // a == 3: relation (2) gives C3 C_b C3 = C_b C3 C_b + C3 - C_b
    assert(a == 3);
    return run({b, 3, b}) + run({3}) - run({b});
  }

  AlgebraElement length4(const CWord& w) {
    const int a = w[0], b = w[1], c = w[2], d = w[3];
    if (a == d) {
      // {a,b,c} distinct here; relation (4) swaps the middle letters
      return run({a, c, b, d});
    }
    // a != d with no repeated adjacent letters: either a == c or b == d.
    // Relation (3) turns the word into the alternating (x,y,x,y), and
    //   C_x C_y C_x = C_y C_x C_y + C_x - C_y
    // followed by the quadratic relation leaves words of length <= 3:
    //   (x,y,x,y) = (v+v^-1)(y,x,y) + (x,y) - (v+v^-1)(y).
    int x, y;
    if (a == c) {
      x = a;
      y = d;
    } else {
      assert(b == d);
      x = a;
      y = b;
    }
    return run({y, x, y}).scaled(Laurent::v_plus_vinv()) + run({x, y}) -
           run({y}).scaled(Laurent::v_plus_vinv());
  }

  AlgebraElement length5(const CWord& w) {
    const int a = w[0], b = w[1], c = w[2], d = w[3], f = w[4];
    if (d != a) {
      // the length-4 head reduces to canonical monomials of length <= 3
      AlgebraElement pre = run({a, b, c, d});
      AlgebraElement acc;
      for (const auto& [mon, coeff] : pre.terms()) {
        assert(mon.size() <= 3);
        CWord word = mon;
        word.push_back(f);
        acc += run(word).scaled(coeff);
      }
      return acc;
    }
    // d == a forces {a,b,c} = {1,2,3} and f != a
    assert(b != c && a != b && a != c && f != a);
    if (f == c) {
      // (a,b,c,a,c) = (a,b,c,b,c) by relation (3), then expanding the inner
      // (b,c,b) by relation (2) and squashing squares:
      return run({a, c, b, c}).scaled(Laurent::v_plus_vinv()) + run({a, b, c}) -
             run({a, c}).scaled(Laurent::v_plus_vinv());
    }
    // f == b: relation (4) turns the head into (a,c,b,a), giving the word
    // (a,c,b,a,b), which is the previous case with b and c exchanged
    assert(f == b);
    return run({a, b, c, b}).scaled(Laurent::v_plus_vinv()) + run({a, c, b}) -
           run({a, b}).scaled(Laurent::v_plus_vinv());
  }
};

} // namespace

AlgebraElement normalize(const CWord& w) {
  thread_local Normalizer norm;
  return norm.run(w);
}

AlgebraElement alg_multiply(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement acc;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [w, cw] : b.terms()) acc += normalize(concat(u, w)).scaled(cu * cw);
  return acc;
}

RingElement phi_word_direct(const GrotRing& ring, const CWord& w) {
  std::vector<Elem> refl;
  refl.reserve(w.size());
  for (int letter : w) refl.push_back(ring.group().t_named(letter));
  return ring.product_of_B(refl);
}

RingElement phi(const GrotRing& ring, const AlgebraElement& a) {
  RingElement acc;
  for (const auto& [w, c] : a.terms()) acc += phi_word_direct(ring, w).scaled(c);
  return acc;
}

Laurent laurent_det(std::vector<std::vector<Laurent>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Laurent(1);
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  int sign = 1;
  Laurent prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return Laurent();
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = div_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = Laurent();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

IsoReport verify_iso(const GrotRing& ring, int max_word_len) {
  IsoReport rep;
  const auto& monomials = canonical_monomials();
  const auto& basis = ring.basis();
  if (ring.variant() != Variant::Plain)
    throw std::invalid_argument("verify_iso runs against the plain (rank 20) basis");

  std::vector<std::vector<Laurent>> m(basis.size(), std::vector<Laurent>(monomials.size()));
  for (std::size_t j = 0; j < monomials.size(); ++j) {
    RingElement img = phi_word_direct(ring, monomials[j]);
    for (const auto& [A, c] : img.terms()) {
      int i = ring.basis_index(A);
      assert(i >= 0);
      m[static_cast<std::size_t>(i)][j] = c;
    }
  }
  rep.det = laurent_det(std::move(m));
  rep.det_is_unit = rep.det.as_unit_monomial().has_value();

  rep.words_ok = true;
  CWord w;
  // depth-first sweep over all generator words of length <= max_word_len
  auto sweep = [&](auto&& self, int remaining) -> void {
    if (!rep.words_ok) return;
    ++rep.words_checked;
    if (phi(ring, normalize(w)) != phi_word_direct(ring, w)) {
      rep.words_ok = false;
      rep.first_failure = w;
      return;
    }
    if (remaining == 0) return;
    for (int letter = 1; letter <= 3; ++letter) {
      w.push_back(letter);
      self(self, remaining - 1);
      w.pop_back();
    }
  };
  sweep(sweep, max_word_len);
  return rep;
}

} // namespace sbim
