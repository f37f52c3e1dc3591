#include "sbim/hilbert.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <functional>
#include <stdexcept>
#include <thread>

namespace sbim {

IMat IMat::identity(int n) {
  IMat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat operator*(const IMat& x, const IMat& y) {
  assert(x.n == y.n);
  IMat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < x.n; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

int rank_of_integer_matrix(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  Int prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) std::swap(m[p], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

namespace {

int det3(const IMat& m) {
  if (m.n == 1) return static_cast<int>(m.at(0, 0));
  if (m.n == 2) return static_cast<int>(m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0));
  assert(m.n == 3);
  Int d = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
          m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
          m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
  return static_cast<int>(d);
}

// root-basis matrices of the simple reflections
std::vector<IMat> simple_matrices(const Group& G) {
  std::vector<IMat> gens;
  if (G.kind() == GroupKind::Dihedral && G.dihedral_m() == 3) {
    IMat s1(2), s2(2);
    // sum-zero plane of the S3 permutation representation
    s1.at(0, 0) = -1; s1.at(0, 1) = 1; s1.at(1, 1) = 1;
    s2.at(0, 0) = 1; s2.at(1, 0) = 1; s2.at(1, 1) = -1;
    gens = {s1, s2};
  } else if (G.kind() == GroupKind::Dihedral && G.dihedral_m() == 4) {
    IMat s(2), t(2);
    // signed permutations of the plane: s swaps the axes, t flips the first
    s.at(0, 1) = 1; s.at(1, 0) = 1;
    t.at(0, 0) = -1; t.at(1, 1) = 1;
    gens = {s, t};
  } else if (G.kind() == GroupKind::SymmetricA3) {
    IMat s(3), t(3), u(3);
    // sum-zero space of the S4 permutation representation
    s.at(0, 0) = -1; s.at(0, 1) = 1; s.at(1, 1) = 1; s.at(2, 2) = 1;
    t.at(0, 0) = 1; t.at(1, 0) = 1; t.at(1, 1) = -1; t.at(1, 2) = 1; t.at(2, 2) = 1;
    u.at(0, 0) = 1; u.at(1, 1) = 1; u.at(2, 1) = 1; u.at(2, 2) = -1;
    gens = {s, t, u};
  } else {
    throw std::invalid_argument("no exact rational reflection representation is pinned for group '" +
                                G.selector() + "' (supported: a2, b2, a3)");
  }
  return gens;
}

// exponent vectors of total degree k in nvars variables, deterministic order
std::vector<std::vector<int>> monomials(int nvars, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      cur[static_cast<std::size_t>(var)] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[static_cast<std::size_t>(var)] = e;
      rec(var + 1, left - e);
    }
  };
  if (nvars == 0) {
    if (k == 0) out.push_back({});
    return out;
  }
  rec(0, k);
  return out;
}

using Poly = std::map<std::vector<int>, Int>;

void poly_add(Poly& p, const std::vector<int>& mono, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

// p * (row i of M applied to the variables)
Poly mul_linear_form(const Poly& p, const IMat& M, int i) {
  Poly r;
  for (const auto& [mono, c] : p)
    for (int j = 0; j < M.n; ++j) {
      if (M.at(i, j) == 0) continue;
      std::vector<int> m2 = mono;
      ++m2[static_cast<std::size_t>(j)];
      poly_add(r, m2, c * M.at(i, j));
    }
  return r;
}

} // namespace

ReflectionRep ReflectionRep::for_group(const Group& G) {
  ReflectionRep rep;
  auto gens = simple_matrices(G);
  rep.n_ = gens[0].n;
  // element matrices by right-multiplication along the Cayley graph
  rep.mats_.assign(static_cast<std::size_t>(G.order()), IMat(rep.n_));
  std::vector<char> have(static_cast<std::size_t>(G.order()), 0);
  rep.mats_[static_cast<std::size_t>(G.identity())] = IMat::identity(rep.n_);
  have[static_cast<std::size_t>(G.identity())] = 1;
  bool progress = true;
  while (progress) {
    progress = false;
    for (Elem w = 0; w < G.order(); ++w) {
      if (!have[static_cast<std::size_t>(w)]) continue;
      for (int i = 0; i < G.rank(); ++i) {
        Elem x = G.mul(w, G.simple(i));
        if (have[static_cast<std::size_t>(x)]) continue;
        rep.mats_[static_cast<std::size_t>(x)] =
            rep.mats_[static_cast<std::size_t>(w)] * gens[static_cast<std::size_t>(i)];
        have[static_cast<std::size_t>(x)] = 1;
        progress = true;
      }
    }
  }
  rep.validate(G);
  return rep;
}

void ReflectionRep::validate(const Group& G) const {
  for (Elem a = 0; a < G.order(); ++a)
    for (Elem b = 0; b < G.order(); ++b)
      if (!(matrix(a) * matrix(b) == matrix(G.mul(a, b))))
        throw std::logic_error("reflection representation is not a homomorphism");
  for (Elem a = 0; a < G.order(); ++a)
    for (Elem b = a + 1; b < G.order(); ++b)
      if (matrix(a) == matrix(b)) throw std::logic_error("reflection representation is not faithful");
  for (Elem t : G.reflections()) {
    const IMat& m = matrix(t);
    if (det3(m) != -1) throw std::logic_error("reflection matrix with determinant != -1");
    // fixed space of codimension 1
    std::vector<std::vector<Int>> mi(static_cast<std::size_t>(m.n),
                                     std::vector<Int>(static_cast<std::size_t>(m.n)));
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j) mi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          m.at(i, j) - (i == j ? 1 : 0);
    if (rank_of_integer_matrix(mi) != 1)
      throw std::logic_error("reflection matrix does not fix a hyperplane");
  }
}

HilbertOracle::HilbertOracle(const Group& G) : G_(G), rep_(ReflectionRep::for_group(G)) {}

void HilbertOracle::prefill(const std::vector<std::pair<Subset, int>>& keys, int threads) const {
  std::vector<std::pair<Subset, int>> todo;
  for (const auto& key : keys)
    if (key.first != 0 && key.second >= 0 && !memo_.count(key)) todo.push_back(key);
  std::sort(todo.begin(), todo.end());
  todo.erase(std::unique(todo.begin(), todo.end()), todo.end());
  if (todo.empty()) return;
  std::vector<long long> results(todo.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < todo.size(); ++i) results[i] = compute(todo[i].first, todo[i].second);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < todo.size(); i = next.fetch_add(1))
          results[i] = compute(todo[i].first, todo[i].second);
      });
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < todo.size(); ++i) memo_.emplace(todo[i], results[i]);
}

long long HilbertOracle::hilbert_function(Subset A, int k) const {
  if (A == 0 || k < 0) return 0;
  auto key = std::make_pair(A, k);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  long long v = compute(A, k);
  memo_.emplace(key, v);
  return v;
}

long long HilbertOracle::compute(Subset A, int k) const {
  const int n = rep_.dim();
  const auto src = monomials(2 * n, k); // first block u, second block v
  const auto tgt = monomials(n, k);
  std::map<std::vector<int>, int> tgt_index;
  for (std::size_t i = 0; i < tgt.size(); ++i) tgt_index[tgt[i]] = static_cast<int>(i);

  const auto elems = G_.subset_elems(A);
  std::vector<std::vector<Int>> m(elems.size() * tgt.size(), std::vector<Int>(src.size(), 0));
  for (std::size_t b = 0; b < elems.size(); ++b) {
    const IMat& Mx = rep_.matrix(elems[b]);
    for (std::size_t c = 0; c < src.size(); ++c) {
      // substitute u := Mx v into u^a v^e
      Poly p;
      std::vector<int> vpart(src[c].begin() + n, src[c].end());
      p.emplace(std::move(vpart), 1);
      for (int i = 0; i < n; ++i)
        for (int rep_count = 0; rep_count < src[c][static_cast<std::size_t>(i)]; ++rep_count)
          p = mul_linear_form(p, Mx, i);
      for (const auto& [mono, coeff] : p)
        m[b * tgt.size() + static_cast<std::size_t>(tgt_index.at(mono))][c] = coeff;
    }
  }
  return rank_of_integer_matrix(std::move(m));
}

HilbertOracle::LemmaCheck HilbertOracle::check_soergel_lemma(Subset A, Elem s, int max_degree) const {
  LemmaCheck rep;
  rep.A = A;
  rep.s = s;
  rep.max_degree = max_degree;
  if (A == 0) {
    rep.reason = "empty set";
    return rep;
  }
  if (!G_.is_reflection(s)) {
    rep.reason = "multiplier is not a reflection";
    return rep;
  }
  const Subset sA = G_.act_left(s, A);
  if (sA == A) {
    rep.reason = "sA = A (stable case is the rank-two splitting, not this identity)";
    return rep;
  }
  bool has_stabilizer = false;
  for (Elem t : G_.reflections())
    if (G_.act_left(t, A) == A) has_stabilizer = true;
  if (!has_stabilizer) {
    rep.reason = "A has no stabilizing reflection";
    return rep;
  }
  const Subset moved = A & ~(A & sA);
  if (subset_size(moved) != 2) {
    rep.reason = "|A \\ (A n sA)| != 2";
    return rep;
  }
  bool moved_stable = false;
  for (Elem t2 : G_.reflections())
    if (t2 != s && G_.act_left(t2, moved) == moved) moved_stable = true;
  if (!moved_stable) {
    rep.reason = "A \\ (A n sA) is not stabilized by a reflection other than s";
    return rep;
  }
  rep.applicable = true;
  rep.ok = true;
  const Subset U = A | sA, I = A & sA;
  for (int k = 0; k <= max_degree; ++k) {
    const long long lhs = hilbert_function(A, k) + hilbert_function(A, k - 1);
    const long long rhs = hilbert_function(U, k) + hilbert_function(I, k - 1);
    rep.sides.emplace_back(lhs, rhs);
    if (lhs != rhs && rep.ok) {
      rep.ok = false;
      rep.first_failure_degree = k;
    }
  }
  return rep;
}

bool HilbertOracle::B2Compare::mismatch_for_all() const {
  if (shifts.empty()) return false;
  for (const auto& s : shifts)
    if (s.matches) return false;
  return true;
}

HilbertOracle::B2Compare HilbertOracle::graded_dim_compare_b2(int max_degree, int window) const {
  if (!(G_.kind() == GroupKind::Dihedral && G_.dihedral_m() == 4))
    throw std::invalid_argument("graded_dim_compare_b2 wants the B2 group");
  if (rep_.dim() != 2) throw std::logic_error("unexpected representation dimension");

  B2Compare rep;
  rep.max_degree = max_degree;
  rep.window = window;
  for (int k = 0; k <= max_degree; ++k) rep.dims.push_back(hilbert_function(G_.full_set(), k));

  // closed form: dim of R = Q[x,y] in internal degree d
  auto rdim = [](int d) -> long long { return (d >= 0 && d % 2 == 0) ? d / 2 + 1 : 0; };
  // graded dimension of B_{tst} B_s B_t in internal degree d; each factor
  // contributes M -> M(1) + M(-1), so the series is (v + v^-1)^3 HS(R)
  auto bdim = [&](int d) -> long long {
    return rdim(d - 3) + 3 * rdim(d - 1) + 3 * rdim(d + 1) + rdim(d + 3);
  };

  for (int nshift = -window; nshift <= window; ++nshift) {
    B2Compare::Shift sh;
    sh.n = nshift;
    // v^-n S(v) has coefficient dims[(d+n)/2] at internal degree d; it is
    // known for all d with d + n <= 2 * max_degree (zero below degree -n)
    for (int d = -3 * (window + 1); d + nshift <= 2 * max_degree; ++d) {
      const int dn = d + nshift;
      const long long lhs = bdim(d);
      const long long rhs = (dn >= 0 && dn % 2 == 0) ? rep.dims[static_cast<std::size_t>(dn / 2)] : 0;
      if (lhs != rhs) {
        sh.matches = false;
        sh.witness_degree = d;
        sh.lhs = lhs;
        sh.rhs = rhs;
        break;
      }
    }
    rep.shifts.push_back(sh);
  }
  return rep;
}

int default_max_degree(const Group& G) {
  return G.kind() == GroupKind::SymmetricA3 ? 5 : 10;
}

} // namespace sbim
