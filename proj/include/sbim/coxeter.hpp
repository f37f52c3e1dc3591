#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sbim {

// Element of a finite Coxeter group, as an index into the group's fixed
// canonical enumeration (see Group).
using Elem = int;

// Subset of the group as a bitmask over the canonical enumeration.
using Subset = std::uint32_t;

enum class GroupKind { Dihedral, SymmetricA3 };

// The finite Coxeter groups used here: dihedral I2(m) (A2 = I2(3),
// B2 = I2(4)) and A3 realized as the symmetric group on four letters.
//
// Canonical enumeration:
//   dihedral(m): rotations r^0..r^{m-1} (r = s1*s2), then s1*r^0..s1*r^{m-1};
//   symmetric:   permutations in lexicographic one-line order.
// All tables are precomputed at construction; values are immutable.
class Group {
public:
  static Group dihedral(int m); // generators s1, s2; m in [3, 16]
  static Group a2();            // dihedral(3) plus reflection names t1,t2,t3
  static Group b2();            // dihedral(4) with generators s, t
  static Group a3();            // S4 with generators s, t, u (su = us)
  // "a2" | "b2" | "a3" | "i2:<m>"
  static Group from_selector(const std::string& sel);

  GroupKind kind() const { return kind_; }
  int dihedral_m() const { return m_; }
  const std::string& selector() const { return selector_; }
  bool same_group(const Group& o) const { return selector_ == o.selector_; }

  int order() const { return order_; }
  int rank() const { return static_cast<int>(simples_.size()); }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  int length(Elem a) const { return len_[a]; }
  bool is_reflection(Elem a) const { return refl_[a] != 0; }
  const std::vector<Elem>& reflections() const { return reflections_; }
  const std::vector<Elem>& simples() const { return simples_; }
  Elem simple(int i) const { return simples_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  // A2 only: the fixed bijection with reflection names t1, t2, t3
  // (t1 = s1, t2 = s1*s2*s1, t3 = s2); i is 1-based.
  Elem t_named(int i) const { return t_alias_.at(i - 1); }
  bool has_t_names() const { return !t_alias_.empty(); }

  // reduced word in generator labels, e.g. "s1*s2*s1"; identity is "e"
  const std::string& name(Elem a) const { return names_.at(a); }
  // accepts reduced words ("s1*s2"), juxtaposition ("sts"), "e", and the
  // reflection names t1..t3 where defined
  std::optional<Elem> parse_elem(std::string_view text) const;

  Subset full_set() const { return order_ >= 32 ? ~Subset(0) : (Subset(1) << order_) - 1; }
  Subset singleton(Elem a) const { return Subset(1) << a; }
  Subset act_left(Elem g, Subset A) const;
  Subset act_right(Subset A, Elem g) const;
  Subset invert_set(Subset A) const;
  std::vector<Elem> subset_elems(Subset A) const;
  std::string set_str(Subset A) const; // "{e,s1,...}" in enumeration order

private:
  Group() = default;
  void finalize(); // names, reflections list, parse atoms

  GroupKind kind_ = GroupKind::Dihedral;
  int m_ = 0;
  int order_ = 0;
  std::string selector_;
  std::vector<std::string> labels_;
  std::vector<Elem> simples_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<int> len_;
  std::vector<char> refl_;
  std::vector<Elem> reflections_;
  std::vector<Elem> t_alias_;
  std::vector<std::string> names_;
  std::vector<std::pair<std::string, Elem>> atoms_;
};

// popcount helper with the domain name
int subset_size(Subset A);

} // namespace sbim
