#include "sbim/coxeter.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sbim {

int subset_size(Subset A) { return std::popcount(A); }

namespace {

// dihedral element = (flip, rot): r^rot if flip == 0, s1*r^rot if flip == 1
int dih_encode(int m, int flip, int rot) {
  rot = ((rot % m) + m) % m;
  return flip * m + rot;
}

int dih_mul(int m, int a, int b) {
  const int fa = a / m, ra = a % m;
  const int fb = b / m, rb = b % m;
  // r^a * s1 = s1 * r^-a
  if (fa == 0) return fb == 0 ? dih_encode(m, 0, ra + rb) : dih_encode(m, 1, rb - ra);
  return fb == 0 ? dih_encode(m, 1, ra + rb) : dih_encode(m, 0, rb - ra);
}

int dih_length(int m, int a) {
  const int flip = a / m, rot = a % m;
  if (flip == 0) return rot == 0 ? 0 : 2 * std::min(rot, m - rot);
  // s1*r^c is the alternating word of length 2((-c) mod m)+1 starting with
  // s1, or of length 2((c-1) mod m)+1 starting with s2
  return std::min(2 * (((m - rot) % m)) + 1, 2 * (((rot - 1 + m) % m)) + 1);
}

using Perm = std::array<int, 4>;

int perm_inversions(const Perm& p) {
  int c = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

} // namespace

Group Group::dihedral(int m) {
  if (m < 3 || m > 16) throw std::invalid_argument("dihedral order out of supported range [3,16]");
  Group g;
  g.kind_ = GroupKind::Dihedral;
  g.m_ = m;
  g.order_ = 2 * m;
  g.selector_ = "i2:" + std::to_string(m);
  g.labels_ = {"s1", "s2"};
  g.mul_.resize(g.order_ * g.order_);
  for (int a = 0; a < g.order_; ++a)
    for (int b = 0; b < g.order_; ++b) g.mul_[a * g.order_ + b] = dih_mul(m, a, b);
  g.simples_ = {dih_encode(m, 1, 0), dih_encode(m, 1, 1)}; // s1, s2 = s1*r
  g.len_.resize(g.order_);
  g.refl_.assign(g.order_, 0);
  for (int a = 0; a < g.order_; ++a) {
    g.len_[a] = dih_length(m, a);
    g.refl_[a] = a >= m; // all m flips, and only those, are reflections
  }
  g.finalize();
  return g;
}

Group Group::a2() {
  Group g = dihedral(3);
  g.selector_ = "a2";
  // t1 = s1, t2 = s1*s2*s1, t3 = s2
  const Elem s1 = g.simple(0), s2 = g.simple(1);
  g.t_alias_ = {s1, g.mul(g.mul(s1, s2), s1), s2};
  g.finalize();
  return g;
}

Group Group::b2() {
  Group g = dihedral(4);
  g.selector_ = "b2";
  g.labels_ = {"s", "t"};
  g.finalize();
  return g;
}

Group Group::a3() {
  Group g;
  g.kind_ = GroupKind::SymmetricA3;
  g.order_ = 24;
  g.selector_ = "a3";
  g.labels_ = {"s", "t", "u"};
  std::vector<Perm> perms;
  Perm p = {0, 1, 2, 3};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end())); // lexicographic order
  std::map<Perm, int> index;
  for (int i = 0; i < 24; ++i) index[perms[i]] = i;
  g.mul_.resize(24 * 24);
  for (int a = 0; a < 24; ++a)
    for (int b = 0; b < 24; ++b) {
      Perm q;
      for (int i = 0; i < 4; ++i) q[i] = perms[a][perms[b][i]];
      g.mul_[a * 24 + b] = index[q];
    }
  g.len_.resize(24);
  g.refl_.assign(24, 0);
  for (int a = 0; a < 24; ++a) {
    g.len_[a] = perm_inversions(perms[a]);
    int moved = 0;
    for (int i = 0; i < 4; ++i) moved += perms[a][i] != i;
    g.refl_[a] = moved == 2; // transpositions
  }
  g.simples_ = {index[{1, 0, 2, 3}], index[{0, 2, 1, 3}], index[{0, 1, 3, 2}]};
  g.finalize();
  return g;
}

Group Group::from_selector(const std::string& sel) {
  if (sel == "a2") return a2();
  if (sel == "b2") return b2();
  if (sel == "a3") return a3();
  if (sel.rfind("i2:", 0) == 0) {
    int m = 0;
    try {
      m = std::stoi(sel.substr(3));
    } catch (...) {
      throw std::invalid_argument("bad group selector '" + sel + "'");
    }
    return dihedral(m);
  }
  throw std::invalid_argument("bad group selector '" + sel + "' (expected a2|b2|i2:<m>|a3)");
}

void Group::finalize() {
  inv_.resize(order_);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == identity()) inv_[a] = b;
  reflections_.clear();
  for (int a = 0; a < order_; ++a)
    if (refl_[a]) reflections_.push_back(a);

  // shortest, lexicographically first reduced words by BFS
  names_.assign(order_, "");
  names_[identity()] = "e";
  std::deque<Elem> queue{identity()};
  while (!queue.empty()) {
    Elem w = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < simples_.size(); ++i) {
      Elem x = mul(w, simples_[i]);
      if (!names_[x].empty()) continue;
      names_[x] = (w == identity()) ? labels_[i] : names_[w] + "*" + labels_[i];
      queue.push_back(x);
    }
  }

  atoms_.clear();
  atoms_.emplace_back("e", identity());
  for (std::size_t i = 0; i < simples_.size(); ++i) atoms_.emplace_back(labels_[i], simples_[i]);
  for (std::size_t i = 0; i < t_alias_.size(); ++i)
    atoms_.emplace_back("t" + std::to_string(i + 1), t_alias_[i]);
  std::sort(atoms_.begin(), atoms_.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  });
}

std::optional<Elem> Group::parse_elem(std::string_view text) const {
  // strip blanks, split on '*', greedily tokenize each chunk
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) return std::nullopt;
  Elem acc = identity();
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t star = s.find('*', start);
    std::string chunk = s.substr(start, star == std::string::npos ? star : star - start);
    if (chunk.empty()) return std::nullopt;
    std::size_t pos = 0;
    while (pos < chunk.size()) {
      bool matched = false;
      for (const auto& [name, el] : atoms_) {
        if (chunk.compare(pos, name.size(), name) == 0) {
          acc = mul(acc, el);
          pos += name.size();
          matched = true;
          break;
        }
      }
      if (!matched) return std::nullopt;
    }
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return acc;
}

Subset Group::act_left(Elem g, Subset A) const {
  Subset r = 0;
  for (int a = 0; a < order_; ++a)
    if (A & (Subset(1) << a)) r |= Subset(1) << mul(g, a);
  return r;
}

Subset Group::act_right(Subset A, Elem g) const {
  Subset r = 0;
  for (int a = 0; a < order_; ++a)
    if (A & (Subset(1) << a)) r |= Subset(1) << mul(a, g);
  return r;
}

Subset Group::invert_set(Subset A) const {
  Subset r = 0;
  for (int a = 0; a < order_; ++a)
    if (A & (Subset(1) << a)) r |= Subset(1) << inv(a);
  return r;
}

std::vector<Elem> Group::subset_elems(Subset A) const {
  std::vector<Elem> r;
  for (int a = 0; a < order_; ++a)
    if (A & (Subset(1) << a)) r.push_back(a);
  return r;
}

std::string Group::set_str(Subset A) const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (Elem a : subset_elems(A)) {
    if (!first) out << ",";
    first = false;
    out << name(a);
  }
  out << "}";
  return out.str();
}

} // namespace sbim
