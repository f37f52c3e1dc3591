#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sbim/coxeter.hpp"
#include "sbim/grotring.hpp"

namespace sbim {

// Element of the integral group ring Z[W]: the v = 1 shadow of standard
// filtration multiplicities, with all grading shifts forgotten.
class Character {
public:
  explicit Character(const Group& G);

  const std::string& group_id() const { return gid_; }
  long long coeff(Elem a) const { return vals_.at(static_cast<std::size_t>(a)); }
  void add(Elem a, long long c) { vals_.at(static_cast<std::size_t>(a)) += c; }
  const std::vector<long long>& values() const { return vals_; }
  std::vector<Elem> support() const;
  Subset support_set() const;
  long long total_mass() const;
  bool operator==(const Character& o) const { return gid_ == o.gid_ && vals_ == o.vals_; }
  bool operator!=(const Character& o) const { return !(*this == o); }

private:
  std::string gid_;
  std::vector<long long> vals_;
};

Character delta(const Group& G, Elem w);
// B_t -> delta_e + delta_t (t a reflection); R_w -> delta_w
Character uch_of_generator(const Group& G, const GenFactor& f);
// group-ring convolution; both characters must live on G
Character convolve(const Group& G, const Character& a, const Character& b);
// convolution of the generator characters in word order
Character uch_of_word(const Group& G, const GenWord& w);
// [R(A)] -> sum of delta_x over x in A, coefficients specialized at v = 1
Character uch_of_class(const Group& G, const RingElement& x);

} // namespace sbim
