#pragma once

#include <map>
#include <string>
#include <vector>

#include "sbim/bigint.hpp"
#include "sbim/coxeter.hpp"

namespace sbim {

// Small dense integer matrix.
struct IMat {
  int n = 0;
  std::vector<Int> a; // row-major
  explicit IMat(int n_ = 0) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0) {}
  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  static IMat identity(int n);
  friend IMat operator*(const IMat& x, const IMat& y);
  bool operator==(const IMat& o) const = default;
};

// Rank over the rationals by fraction-free (Bareiss) elimination.
int rank_of_integer_matrix(std::vector<std::vector<Int>> m);

// Integral reflection representation: the sum-zero subspace of the
// permutation representation for A2/A3 (dimensions 2 and 3, root basis),
// signed permutations of the plane for B2. Matrices are exact and the
// assignment g -> matrix(g) is checked to be a faithful homomorphism with
// determinant -1, corank-1 fixed space on every reflection.
class ReflectionRep {
public:
  static ReflectionRep for_group(const Group& G); // throws on i2:m, m not in {3,4}
  int dim() const { return n_; }
  const IMat& matrix(Elem g) const { return mats_.at(static_cast<std::size_t>(g)); }
  void validate(const Group& G) const; // throws std::logic_error on any defect

private:
  int n_ = 0;
  std::vector<IMat> mats_;
};

// Exact Hilbert functions of R(A), the ring of regular functions on the
// union of the twisted graphs Gr(x), x in A, inside V x V. The degree-k
// value is the rank of the restriction map from degree-k polynomials on
// V x V to the tuple of their pullbacks (v -> f(x v, v)) over x in A;
// internal degree is 2k (linear forms sit in internal degree 2).
class HilbertOracle {
public:
  explicit HilbertOracle(const Group& G);
  const Group& group() const { return G_; }
  const ReflectionRep& rep() const { return rep_; }

  long long hilbert_function(Subset A, int k) const;
  // computes the listed values concurrently (each rank is independent) and
  // fills the memo; the table is deterministic regardless of schedule
  void prefill(const std::vector<std::pair<Subset, int>>& keys, int threads) const;

  struct LemmaCheck {
    Subset A = 0;
    Elem s = 0;
    bool applicable = false;
    std::string reason; // when not applicable
    int max_degree = 0;
    bool ok = false;
    int first_failure_degree = -1;
    // per degree k: lhs = HF(A,k) + HF(A,k-1),
    //               rhs = HF(A u sA, k) + HF(A n sA, k-1)
    std::vector<std::pair<long long, long long>> sides;
  };
  // degreewise check of R (x)_{R^s} R(A) = R(A u sA) + R(A n sA)(-2)
  LemmaCheck check_soergel_lemma(Subset A, Elem s, int max_degree) const;

  struct B2Compare {
    int max_degree = 0;
    int window = 0;
    std::vector<long long> dims; // HF of the full group, k = 0..max_degree
    struct Shift {
      int n = 0;
      bool matches = true;
      int witness_degree = 0; // internal degree of the first disagreement
      long long lhs = 0;      // graded dim of B_{tst} B_s B_t
      long long rhs = 0;      // shifted graded dim of R(W)
    };
    std::vector<Shift> shifts;
    bool mismatch_for_all() const;
  };
  // graded dimensions of B_{tst} B_s B_t, i.e. (v + v^-1)^3 * HS(R), against
  // every shift v^-n (|n| <= window) of the oracle series of R(W), compared
  // up to internal degree 2 * max_degree
  B2Compare graded_dim_compare_b2(int max_degree, int window) const;

private:
  long long compute(Subset A, int k) const;

  Group G_;
  ReflectionRep rep_;
  mutable std::map<std::pair<Subset, int>, long long> memo_;
};

// default polynomial degree bound per group (10 for rank 2, 5 for A3)
int default_max_degree(const Group& G);

} // namespace sbim
