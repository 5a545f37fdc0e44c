#pragma once

// Test-only oracle for exceptional weighted Dynkin diagrams.  Builds the root
// system from the Cartan matrix, places the semisimple element of a
// Bala-Carter datum (Levi subset + distinguished labels inside the Levi), and
// conjugates it to the dominant chamber.  Independent of the shipped tables.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace unip::testoracle {

struct Frac {
  long long num = 0, den = 1;
  Frac() = default;
  Frac(long long n) : num(n), den(1) {}
  Frac(long long n, long long d) : num(n), den(d) { reduce(); }
  void reduce() {
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }
  Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
  Frac operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }
  Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
  Frac operator/(const Frac& o) const { return Frac(num * o.den, den * o.num); }
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  bool is_zero() const { return num == 0; }
};

class RootSystem {
 public:
  // cartan[i][j] = <alpha_i, alpha_j^vee>
  explicit RootSystem(std::vector<std::vector<int>> cartan)
      : cartan_(std::move(cartan)), rank_(static_cast<int>(cartan_.size())) {
    build_roots();
  }

  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& positive_roots() const { return pos_roots_; }

  int pairing_with_simple_covee(const std::vector<int>& root, int i) const {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += root[j] * cartan_[j][i];
    return s;
  }

  // alpha_i(h) for h given by its values on simple roots.
  static Frac eval(const std::vector<int>& root, const std::vector<Frac>& v) {
    Frac s(0);
    for (std::size_t j = 0; j < root.size(); ++j) s = s + Frac(root[j]) * v[j];
    return s;
  }

  /// Values of h on all simple roots, where h lies in the span of the
  /// coroots of the subset S and takes the given labels on S.
  std::vector<Frac> embed_levi_element(const std::vector<int>& subset,
                                       const std::vector<int>& labels) const {
    const int m = static_cast<int>(subset.size());
    // Solve sum_j x_j <alpha_i, alpha_j^vee> = label_i over the subset.
    std::vector<std::vector<Frac>> a(m, std::vector<Frac>(m + 1));
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) a[r][c] = Frac(cartan_[subset[r]][subset[c]]);
      a[r][m] = Frac(labels[r]);
    }
    for (int col = 0; col < m; ++col) {
      int piv = -1;
      for (int r = col; r < m; ++r)
        if (!a[r][col].is_zero()) { piv = r; break; }
      if (piv < 0) throw std::runtime_error("singular Levi Cartan block");
      std::swap(a[col], a[piv]);
      for (int r = 0; r < m; ++r) {
        if (r == col || a[r][col].is_zero()) continue;
        Frac f = a[r][col] / a[col][col];
        for (int c = col; c <= m; ++c) a[r][c] = a[r][c] - f * a[col][c];
      }
    }
    std::vector<Frac> x(m);
    for (int r = 0; r < m; ++r) x[r] = a[r][m] / a[r][r];
    std::vector<Frac> v(rank_, Frac(0));
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < m; ++j) v[i] = v[i] + x[j] * Frac(cartan_[i][subset[j]]);
    return v;
  }

  /// Conjugate h into the dominant chamber by simple reflections.
  std::vector<Frac> dominantize(std::vector<Frac> v) const {
    for (;;) {
      int i = -1;
      for (int k = 0; k < rank_; ++k)
        if (v[k].num < 0) { i = k; break; }
      if (i < 0) return v;
      Frac vi = v[i];
      for (int j = 0; j < rank_; ++j) v[j] = v[j] - vi * Frac(cartan_[j][i]);
    }
  }

  /// Weighted diagram of the orbit given by a Bala-Carter datum.
  std::vector<int> weighted_diagram(const std::vector<int>& subset,
                                    const std::vector<int>& levi_labels) const {
    auto v = dominantize(embed_levi_element(subset, levi_labels));
    std::vector<int> out;
    for (auto& f : v) {
      if (f.den != 1) throw std::runtime_error("non-integral weighted diagram label");
      out.push_back(static_cast<int>(f.num));
    }
    return out;
  }

  /// All distinguished even {0,2}-labelings, sorted by decreasing orbit
  /// dimension (so the regular orbit comes first).
  std::vector<std::pair<int, std::vector<int>>> distinguished_diagrams() const {
    std::vector<std::pair<int, std::vector<int>>> out;
    const int dim_g = rank_ + 2 * static_cast<int>(pos_roots_.size());
    for (std::uint32_t mask = 0; mask < (1u << rank_); ++mask) {
      std::vector<Frac> v(rank_);
      for (int i = 0; i < rank_; ++i) v[i] = Frac((mask >> i) & 1 ? 2 : 0);
      int zero = 0, two = 0;
      for (auto& r : pos_roots_) {
        Frac e = eval(r, v);
        if (e.is_zero()) ++zero;
        if (e == Frac(2)) ++two;
      }
      int dim_g0 = rank_ + 2 * zero;
      if (dim_g0 != two) continue;  // dim g(0) == dim g(2)
      std::vector<int> labels(rank_);
      for (int i = 0; i < rank_; ++i) labels[i] = (mask >> i) & 1 ? 2 : 0;
      out.emplace_back(dim_g - dim_g0, labels);
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first > b.first; });
    return out;
  }

 private:
  void build_roots() {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < rank_; ++i) {
      std::vector<int> a(rank_, 0);
      a[i] = 1;
      seen.insert(a);
      frontier.push_back(a);
    }
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (auto& beta : frontier) {
        for (int i = 0; i < rank_; ++i) {
          // beta + alpha_i is a root iff q - <beta, alpha_i^vee> > 0 where
          // q is the depth of the alpha_i string below beta.
          int q = 0;
          std::vector<int> down = beta;
          for (;;) {
            down[i] -= 1;
            bool is_simple_neg = false;
            if (down[i] == -1) {
              is_simple_neg = true;
              for (int j = 0; j < rank_; ++j)
                if (j != i && down[j] != 0) { is_simple_neg = false; break; }
            }
            if (!is_simple_neg && !seen.count(down)) break;
            ++q;
          }
          if (q - pairing_with_simple_covee(beta, i) > 0) {
            std::vector<int> up = beta;
            up[i] += 1;
            if (seen.insert(up).second) next.push_back(up);
          }
        }
      }
      frontier = std::move(next);
    }
    pos_roots_.assign(seen.begin(), seen.end());
  }

  std::vector<std::vector<int>> cartan_;
  int rank_;
  std::vector<std::vector<int>> pos_roots_;
};

inline RootSystem simply_laced(int rank, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  for (auto [a, b] : edges) { c[a][b] = -1; c[b][a] = -1; }
  return RootSystem(std::move(c));
}

inline RootSystem e_series(int rank) {
  // Bourbaki numbering: chain 1-3-4-5-6-7-8 with 2 attached to 4.
  std::vector<std::pair<int, int>> edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
  for (int i = 4; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
  return simply_laced(rank, edges);
}

inline RootSystem f4() {
  // First two roots long (Bourbaki).
  return RootSystem({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
}

}  // namespace unip::testoracle
