#pragma once

// Brute-force matrix verifier: explicit root-space matrices for the classical
// algebras, generic elements of n "cap" n^w with exact integer rank
// computation, and the section check of the special piece by maximal double
// coset representatives.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "unip/orbit.hpp"
#include "unip/weyl.hpp"

namespace unip {

using BigInt = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<BigInt>>;

struct TrialPolicy {
  unsigned long long seed = 12345;
  int trials = 5;
  int coefficient_bound = 100;

  void check() const {
    if (trials < 3) throw std::invalid_argument("trials must be at least 3");
    if (coefficient_bound < 1) throw std::invalid_argument("coefficient bound must be positive");
  }
};

/// Defining-representation matrices of the positive root spaces, one per
/// entry of positive_root_vectors(type), plus sample Cartan elements.
/// Bases: sl uses the standard one; sp(2n) pairs (e_i, f_i) with the
/// antidiagonal-free block form J; so stacks (e_i, f_i, u) with the pairing
/// S(e_i, f_j) = delta_ij, S(u, u) = 1.
struct MatrixRealization {
  LieType type;
  int N = 0;  // matrix size
  std::vector<std::vector<int>> roots;
  std::vector<Matrix> root_vectors;

  /// diag Cartan element with coordinates a (one per point).
  Matrix cartan(const std::vector<int>& a) const {
    Matrix h(N, std::vector<BigInt>(N, 0));
    int m = weyl_points(type);
    if (type.family == LieFamily::A) {
      for (int i = 0; i < m; ++i) h[i][i] = a[i];
      // project to traceless part times m to stay integral
      BigInt tr = 0;
      for (int i = 0; i < m; ++i) tr += a[i];
      for (int i = 0; i < m; ++i) h[i][i] = BigInt(a[i]) * m - tr;
      return h;
    }
    for (int i = 0; i < m; ++i) {
      h[i][i] = a[i];
      h[m + i][m + i] = -a[i];
    }
    return h;
  }

  /// Pairing of a root with Cartan coordinates; for A the traceless
  /// projection above scales values by m.
  BigInt root_eval(const std::vector<int>& root, const std::vector<int>& a) const {
    BigInt v = 0;
    for (std::size_t i = 0; i < root.size(); ++i) v += BigInt(root[i]) * a[i];
    if (type.family == LieFamily::A) v *= weyl_points(type);
    return v;
  }
};

namespace detail {

inline Matrix zero_matrix(int n) { return Matrix(n, std::vector<BigInt>(n, 0)); }

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  int n = static_cast<int>(a.size());
  Matrix c = zero_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline Matrix bracket(const Matrix& a, const Matrix& b) {
  auto ab = matmul(a, b), ba = matmul(b, a);
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ab[i][j] -= ba[i][j];
  return ab;
}

/// Exact rank by fraction-free (Bareiss) elimination.
inline int exact_rank(Matrix m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  BigInt prev = 1;
  for (int col = 0; col < cols && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == -1) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < n; ++r) {
      for (int c = col + 1; c < cols; ++c)
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

/// Jordan type of a nilpotent matrix from the rank sequence of its powers.
inline Partition jordan_type(const Matrix& m) {
  int n = static_cast<int>(m.size());
  std::vector<int> ranks{n};
  Matrix p = m;
  while (true) {
    int r = exact_rank(p);
    ranks.push_back(r);
    if (r == 0) break;
    if (static_cast<int>(ranks.size()) > n + 1)
      throw std::invalid_argument("matrix is not nilpotent");
    p = matmul(p, m);
  }
  // ranks[k-1] - ranks[k] = number of blocks of size >= k
  std::vector<int> conj;
  for (std::size_t k = 1; k < ranks.size(); ++k)
    if (int d = ranks[k - 1] - ranks[k]; d > 0) conj.push_back(d);
  return transpose(Partition(std::move(conj)));
}

}  // namespace detail

inline MatrixRealization matrix_realization(const LieType& t) {
  if (!t.classical()) throw std::invalid_argument("matrix realization is classical only");
  MatrixRealization real;
  real.type = t;
  int m = weyl_points(t);
  switch (t.family) {
    case LieFamily::A: real.N = m; break;
    case LieFamily::B: real.N = 2 * m + 1; break;
    case LieFamily::C: real.N = 2 * m; break;
    case LieFamily::D: real.N = 2 * m; break;
    default: break;
  }
  real.roots = positive_root_vectors(t);
  for (auto& root : real.roots) {
    Matrix x = detail::zero_matrix(real.N);
    int i = -1, j = -1;
    for (int k = 0; k < m; ++k) {
      if (root[k] != 0 && i == -1)
        i = k;
      else if (root[k] != 0)
        j = k;
    }
    if (j == -1) {
      if (root[i] == 2) {  // C: 2e_i
        x[i][m + i] = 1;
      } else {  // B: e_i
        x[i][2 * m] = 1;
        x[2 * m][m + i] = -1;
      }
    } else if (root[j] == -1) {  // e_i - e_j
      x[i][j] = 1;
      if (t.family != LieFamily::A) x[m + j][m + i] = -1;
    } else {  // e_i + e_j
      x[i][m + j] = 1;
      x[j][m + i] = t.family == LieFamily::C ? 1 : -1;
    }
    real.root_vectors.push_back(std::move(x));
  }
  return real;
}

/// Generic element of n cap n^w and its Jordan type; identical over all
/// trials or an error.
inline NilpotentOrbit orbit_of_w(const LieType& t, const WeylElement& w,
                                 const TrialPolicy& policy = {}) {
  policy.check();
  if (t.rank > 4) throw std::invalid_argument("orbit_of_w is capped at rank 4");
  check_element(t, w);
  auto real = matrix_realization(t);
  auto winv = w.inverse();
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < real.roots.size(); ++k) {
    auto v = act(winv, real.roots[k]);
    bool positive = false;
    for (int c : v) {
      if (c > 0) positive = true;
      if (c != 0) break;
    }
    if (positive) kept.push_back(k);
  }
  std::mt19937_64 rng(policy.seed);
  std::uniform_int_distribution<int> coeff(1, policy.coefficient_bound);
  Partition result;
  for (int trial = 0; trial < policy.trials; ++trial) {
    Matrix z = detail::zero_matrix(real.N);
    for (auto k : kept) {
      int c = coeff(rng);
      for (int i = 0; i < real.N; ++i)
        for (int j = 0; j < real.N; ++j) z[i][j] += c * real.root_vectors[k][i][j];
    }
    Partition p = detail::jordan_type(z);
    if (trial == 0)
      result = p;
    else if (!(p == result))
      throw std::runtime_error("genericity failure for w = " + w.str() +
                               ": trials disagree; raise the coefficient bound or change the seed");
  }
  return NilpotentOrbit::classical(t, result);
}

/// Theorem 1.1(a) at desk scale: the unique w in W^l per special-piece
/// member.  Very even D members are reported with tag I.
inline std::map<NilpotentOrbit, WeylElement> verify_section(const LieType& t,
                                                            const NilpotentOrbit& o,
                                                            const TrialPolicy& policy = {}) {
  if (!(o.type == t)) throw std::invalid_argument("orbit/type mismatch");
  if (!is_special(o) || !is_even(o) || !is_even(dual(o)))
    throw std::invalid_argument("verify_section needs a special even orbit with even dual, got " +
                                o.str());
  auto levi = zero_levi(o);
  auto reps = max_double_coset_reps(t, levi);
  std::vector<std::pair<WeylElement, NilpotentOrbit>> table;
  for (auto& w : reps) table.emplace_back(w, orbit_of_w(t, w, policy));
  std::map<NilpotentOrbit, WeylElement> section;
  for (auto& member : special_piece(o)) {
    const WeylElement* witness = nullptr;
    int hits = 0;
    for (auto& [w, ow] : table)
      if (ow == member) {
        witness = &w;
        ++hits;
      }
    if (hits != 1) {
      std::ostringstream msg;
      msg << "section " << (hits == 0 ? "missing" : "not unique") << " for " << member.str()
          << "; all (w, O(w)) pairs:\n";
      for (auto& [w, ow] : table) msg << "  [" << w.str() << "]  " << ow.str() << "\n";
      throw std::runtime_error(msg.str());
    }
    section.emplace(member, *witness);
  }
  return section;
}

}  // namespace unip
