#include "sbim/characters.hpp"

#include <stdexcept>

namespace sbim {

Character::Character(const Group& G) : gid_(G.selector()), vals_(G.order(), 0) {}

std::vector<Elem> Character::support() const {
  std::vector<Elem> r;
  for (std::size_t a = 0; a < vals_.size(); ++a)
    if (vals_[a] != 0) r.push_back(static_cast<Elem>(a));
  return r;
}

Subset Character::support_set() const {
  Subset r = 0;
  for (std::size_t a = 0; a < vals_.size(); ++a)
    if (vals_[a] != 0) r |= Subset(1) << a;
  return r;
}

long long Character::total_mass() const {
  long long s = 0;
  for (long long v : vals_) s += v;
  return s;
}

Character delta(const Group& G, Elem w) {
  Character c(G);
  c.add(w, 1);
  return c;
}

Character uch_of_generator(const Group& G, const GenFactor& f) {
  if (f.kind == GenFactor::Kind::R) return delta(G, f.g);
  if (!G.is_reflection(f.g))
    throw std::invalid_argument("character of B_w wants a reflection, got " + G.name(f.g));
  Character c(G);
  c.add(G.identity(), 1);
  c.add(f.g, 1);
  return c;
}

Character convolve(const Group& G, const Character& a, const Character& b) {
  if (a.group_id() != G.selector() || b.group_id() != G.selector())
    throw std::invalid_argument("convolution of characters from different groups");
  Character r(G);
  for (Elem x = 0; x < G.order(); ++x) {
    if (a.coeff(x) == 0) continue;
    for (Elem y = 0; y < G.order(); ++y) {
      if (b.coeff(y) == 0) continue;
      r.add(G.mul(x, y), a.coeff(x) * b.coeff(y));
    }
  }
  return r;
}

Character uch_of_word(const Group& G, const GenWord& w) {
  Character acc = delta(G, G.identity());
  for (const auto& f : w) acc = convolve(G, acc, uch_of_generator(G, f));
  return acc;
}

Character uch_of_class(const Group& G, const RingElement& x) {
  Character acc(G);
  for (const auto& [A, c] : x.terms()) {
    const Int m = c.eval_at_one();
    const long long mi = static_cast<long long>(m);
    for (Elem a : G.subset_elems(A)) acc.add(a, mi);
  }
  return acc;
}

} // namespace sbim
