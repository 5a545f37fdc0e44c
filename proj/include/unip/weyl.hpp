#pragma once

// Classical Weyl groups as signed permutation groups: conjugacy classes,
// exact irreducible characters (wreath-product Murnaghan-Nakayama), parabolic
// sgn-multiplicities, and maximal-length double coset representatives.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unip/orbit.hpp"

namespace unip {

/// e_i -> (neg[i] ? - : +) e_{img[i]}, 0-based points.  Type A_n permutes
/// n+1 points with no signs; D restricts to an even number of signs.
struct WeylElement {
  std::vector<int> img;
  std::vector<bool> neg;

  static WeylElement identity(int points) {
    WeylElement w;
    w.img.resize(points);
    std::iota(w.img.begin(), w.img.end(), 0);
    w.neg.assign(points, false);
    return w;
  }

  int points() const { return static_cast<int>(img.size()); }

  /// (a*b)(v) = a(b(v))
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    WeylElement w;
    w.img.resize(a.img.size());
    w.neg.resize(a.img.size());
    for (int i = 0; i < b.points(); ++i) {
      w.img[i] = a.img[b.img[i]];
      w.neg[i] = b.neg[i] ^ a.neg[b.img[i]];
    }
    return w;
  }

  WeylElement inverse() const {
    WeylElement w;
    w.img.resize(img.size());
    w.neg.resize(img.size());
    for (int i = 0; i < points(); ++i) {
      w.img[img[i]] = i;
      w.neg[img[i]] = neg[i];
    }
    return w;
  }

  bool operator==(const WeylElement&) const = default;
  bool operator<(const WeylElement& o) const {
    if (img != o.img) return img < o.img;
    return neg < o.neg;
  }

  /// One-line notation, bars for negative images: e.g. "2 -1 3".
  std::string str() const {
    std::string s;
    for (int i = 0; i < points(); ++i) {
      if (i) s += ' ';
      if (neg[i]) s += '-';
      s += std::to_string(img[i] + 1);
    }
    return s;
  }
};

inline int weyl_points(const LieType& t) {
  if (!t.classical()) throw std::invalid_argument("signed-permutation model is classical only");
  return t.family == LieFamily::A ? t.rank + 1 : t.rank;
}

inline void check_element(const LieType& t, const WeylElement& w) {
  if (w.points() != weyl_points(t)) throw std::invalid_argument("element size mismatch");
  int minus = static_cast<int>(std::count(w.neg.begin(), w.neg.end(), true));
  if (t.family == LieFamily::A && minus != 0)
    throw std::invalid_argument("type A element must be unsigned");
  if (t.family == LieFamily::D && minus % 2 != 0)
    throw std::invalid_argument("type D element needs an even number of signs");
}

/// Bourbaki simple reflections, i in 1..rank.
inline WeylElement simple_reflection(const LieType& t, int i) {
  int m = weyl_points(t);
  if (i < 1 || i > t.rank) throw std::invalid_argument("simple root index out of range");
  WeylElement w = WeylElement::identity(m);
  bool last = i == t.rank;
  if (t.family == LieFamily::A || !last) {
    std::swap(w.img[i - 1], w.img[i]);
    return w;
  }
  if (t.family == LieFamily::D) {
    std::swap(w.img[m - 2], w.img[m - 1]);
    w.neg[m - 2] = w.neg[m - 1] = true;
    return w;
  }
  w.neg[m - 1] = true;  // B/C: sign change on the last point
  return w;
}

/// det of the signed permutation matrix.
inline int sgn(const WeylElement& w) {
  int n = w.points();
  std::vector<bool> seen(n, false);
  int s = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = w.img[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  for (int i = 0; i < n; ++i)
    if (w.neg[i]) s = -s;
  return s;
}

inline std::vector<std::vector<int>> positive_root_vectors(const LieType& t) {
  int m = weyl_points(t);
  std::vector<std::vector<int>> roots;
  auto root = [&](int i, int j, int ci, int cj) {
    std::vector<int> v(m, 0);
    v[i] = ci;
    if (j >= 0) v[j] = cj;
    roots.push_back(v);
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) root(i, j, 1, -1);
  switch (t.family) {
    case LieFamily::A:
      break;
    case LieFamily::B:
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) root(i, j, 1, 1);
      for (int i = 0; i < m; ++i) root(i, -1, 1, 0);
      break;
    case LieFamily::C:
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) root(i, j, 1, 1);
      for (int i = 0; i < m; ++i) root(i, -1, 2, 0);
      break;
    case LieFamily::D:
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) root(i, j, 1, 1);
      break;
    default:
      throw std::invalid_argument("positive_root_vectors: classical only");
  }
  return roots;
}

inline std::vector<int> act(const WeylElement& w, const std::vector<int>& v) {
  std::vector<int> out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) out[w.img[i]] += w.neg[i] ? -v[i] : v[i];
  return out;
}

inline int length(const LieType& t, const WeylElement& w) {
  int l = 0;
  for (auto& r : positive_root_vectors(t)) {
    auto v = act(w, r);
    for (int c : v) {
      if (c > 0) break;
      if (c < 0) {
        ++l;
        break;
      }
    }
  }
  return l;
}

inline std::vector<WeylElement> all_weyl_elements(const LieType& t) {
  if (t.rank > 6) throw std::invalid_argument("Weyl enumeration is capped at rank 6");
  int m = weyl_points(t);
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<WeylElement> out;
  do {
    if (t.family == LieFamily::A) {
      out.push_back({perm, std::vector<bool>(m, false)});
      continue;
    }
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      if (t.family == LieFamily::D && __builtin_popcount(mask) % 2 != 0) continue;
      std::vector<bool> neg(m);
      for (int i = 0; i < m; ++i) neg[i] = mask >> i & 1;
      out.push_back({perm, neg});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Cycle type data: positive- and negative-cycle partitions; for the split
/// classes of W(D_n) (no negative cycles, all lengths even) also a +/-1 tag.
struct ConjClass {
  Partition pos, neg;
  int dsplit = 0;

  bool operator==(const ConjClass&) const = default;
  bool operator<(const ConjClass& o) const {
    if (!(pos == o.pos)) return pos < o.pos;
    if (!(neg == o.neg)) return neg < o.neg;
    return dsplit < o.dsplit;
  }
  std::string str() const {
    std::string s = "(" + pos.str() + "|" + neg.str() + ")";
    if (dsplit == 1) s += "+";
    if (dsplit == -1) s += "-";
    return s;
  }
};

namespace detail {

/// Cycles of w as (length, sign) pairs; sign = product of edge signs.
inline std::vector<std::pair<int, int>> signed_cycles(const WeylElement& w) {
  int n = w.points();
  std::vector<bool> seen(n, false);
  std::vector<std::pair<int, int>> cycles;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, sign = 1;
    for (int j = i; !seen[j]; j = w.img[j]) {
      seen[j] = true;
      ++len;
      if (w.neg[j]) sign = -sign;
    }
    cycles.emplace_back(len, sign);
  }
  std::sort(cycles.rbegin(), cycles.rend());
  return cycles;
}

/// Parity of the sign changes needed to conjugate w (all cycles positive, all
/// lengths even) to the sign-free canonical form; distinguishes the two
/// W(D_n)-classes inside one W(B_n)-class.
inline int d_split_tag(const WeylElement& w) {
  int n = w.points();
  std::vector<bool> seen(n, false);
  int flips = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    bool t = false;
    for (int j = i; !seen[j]; j = w.img[j]) {
      seen[j] = true;
      if (t) ++flips;
      t = t ^ w.neg[j];
    }
  }
  return flips % 2 == 0 ? 1 : -1;
}

}  // namespace detail

inline ConjClass conjugacy_class_of(const LieType& t, const WeylElement& w) {
  check_element(t, w);
  std::vector<int> pos, neg;
  bool all_even_pos = true;
  for (auto& [len, sign] : detail::signed_cycles(w)) {
    (sign > 0 ? pos : neg).push_back(len);
    if (sign < 0 || len % 2 != 0) all_even_pos = false;
  }
  ConjClass c{Partition(std::move(pos)), Partition(std::move(neg)), 0};
  if (t.family == LieFamily::D && all_even_pos) c.dsplit = detail::d_split_tag(w);
  return c;
}

/// Bipartition label (alpha here | beta) for B/C/D; type A uses alpha alone.
/// D irreps are unordered pairs; when alpha = beta the two halves carry
/// dsplit = +1/-1.
struct WeylIrrep {
  Partition alpha, beta;
  int dsplit = 0;

  bool operator==(const WeylIrrep&) const = default;
  bool operator<(const WeylIrrep& o) const {
    if (!(alpha == o.alpha)) return alpha < o.alpha;
    if (!(beta == o.beta)) return beta < o.beta;
    return dsplit < o.dsplit;
  }
  std::string str() const {
    std::string s = "[" + alpha.str() + " | " + beta.str() + "]";
    if (dsplit == 1) s += "+";
    if (dsplit == -1) s += "-";
    return s;
  }
};

inline WeylIrrep trivial_irrep(const LieType& t) {
  if (t.family == LieFamily::A) return {Partition{t.rank + 1}, Partition{}, 0};
  return {Partition{t.rank}, Partition{}, 0};
}

inline WeylIrrep sgn_irrep(const LieType& t) {
  int m = weyl_points(t);
  if (t.family == LieFamily::A) return {Partition(std::vector<int>(m, 1)), Partition{}, 0};
  if (t.family == LieFamily::D) return {Partition(std::vector<int>(m, 1)), Partition{}, 0};
  return {Partition{}, Partition(std::vector<int>(m, 1)), 0};
}

inline std::vector<WeylIrrep> irreps(const LieType& t) {
  std::vector<WeylIrrep> out;
  if (t.family == LieFamily::A) {
    for (auto& p : enumerate_all_partitions(t.rank + 1)) out.push_back({p, Partition{}, 0});
    return out;
  }
  int n = t.rank;
  for (int a = n; a >= 0; --a)
    for (auto& alpha : enumerate_all_partitions(a))
      for (auto& beta : enumerate_all_partitions(n - a)) {
        if (t.family == LieFamily::D) {
          if (alpha == beta) {
            out.push_back({alpha, beta, 1});
            out.push_back({alpha, beta, -1});
            continue;
          }
          if (alpha.parts() < beta.parts()) continue;  // unordered: larger half first
        }
        out.push_back({alpha, beta, 0});
      }
  return out;
}

namespace detail {

/// All ways to remove a border strip of the given length: (result, height).
inline std::vector<std::pair<Partition, int>> strip_removals(const Partition& p, int len) {
  int k = static_cast<int>(p.length()) + len;
  std::vector<int> beta(k);
  for (int i = 0; i < k; ++i) beta[i] = p.part(i) + (k - 1 - i);
  std::vector<std::pair<Partition, int>> out;
  for (int i = 0; i < k; ++i) {
    int target = beta[i] - len;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int ht = 0;
    for (int j = 0; j < k; ++j)
      if (beta[j] > target && beta[j] < beta[i]) ++ht;
    auto nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> parts;
    for (int j = 0; j < k; ++j)
      if (int v = nb[j] - (k - 1 - j); v > 0) parts.push_back(v);
    out.emplace_back(Partition(std::move(parts)), ht);
  }
  return out;
}

/// Murnaghan-Nakayama for Z/2 wr S_n: peel one cycle at a time.  A negative
/// cycle flips the sign of the beta-side contribution.  Type A is the beta
/// empty, all cycles positive case.
inline long long chi_wreath(const Partition& alpha, const Partition& beta,
                            std::vector<std::pair<int, int>> cycles) {
  if (cycles.empty()) return alpha.empty() && beta.empty() ? 1 : 0;
  static thread_local std::map<std::string, long long> cache;
  std::string key = alpha.str() + "|" + beta.str() + "@";
  for (auto& [len, sign] : cycles) key += std::to_string(sign * len) + ",";
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto [len, sign] = cycles.back();
  cycles.pop_back();
  long long total = 0;
  for (auto& [rest, ht] : strip_removals(alpha, len))
    total += (ht % 2 ? -1 : 1) * chi_wreath(rest, beta, cycles);
  for (auto& [rest, ht] : strip_removals(beta, len))
    total += sign * (ht % 2 ? -1 : 1) * chi_wreath(alpha, rest, cycles);
  cache[key] = total;
  return total;
}

inline std::vector<std::pair<int, int>> class_cycles(const ConjClass& c) {
  std::vector<std::pair<int, int>> cycles;
  for (int len : c.pos.parts()) cycles.emplace_back(len, 1);
  for (int len : c.neg.parts()) cycles.emplace_back(len, -1);
  std::sort(cycles.rbegin(), cycles.rend());
  return cycles;
}

}  // namespace detail

inline long long character_value(const LieType& t, const WeylIrrep& ir, const ConjClass& c) {
  auto cycles = detail::class_cycles(c);
  if (t.family == LieFamily::A) return detail::chi_wreath(ir.alpha, Partition{}, cycles);
  if (t.family == LieFamily::D) {
    if (static_cast<int>(c.neg.length()) % 2 != 0)
      throw std::invalid_argument("class " + c.str() + " is not in W(D)");
    long long b = detail::chi_wreath(ir.alpha, ir.beta, cycles);
    if (ir.dsplit == 0) return b;
    long long delta = 0;
    if (c.dsplit != 0) {
      // split class: pos = 2*mu; the difference character evaluates through
      // the symmetric group S_{n/2} on mu.
      std::vector<int> half;
      for (int len : c.pos.parts()) half.push_back(len / 2);
      Partition mu(std::move(half));
      std::vector<std::pair<int, int>> mu_cycles;
      for (int len : mu.parts()) mu_cycles.emplace_back(len, 1);
      long long sym = detail::chi_wreath(ir.alpha, Partition{}, mu_cycles);
      delta = c.dsplit * (1LL << mu.length()) * sym;
    }
    long long twice = b + ir.dsplit * delta;
    if (twice % 2 != 0) throw std::logic_error("split character value is not integral");
    return twice / 2;
  }
  return detail::chi_wreath(ir.alpha, ir.beta, cycles);
}

inline long long character_at(const LieType& t, const WeylIrrep& ir, const WeylElement& w) {
  return character_value(t, ir, conjugacy_class_of(t, w));
}

inline long long irrep_dimension(const LieType& t, const WeylIrrep& ir) {
  return character_at(t, ir, WeylElement::identity(weyl_points(t)));
}

/// Integer-valued class function; classes listed with their sizes.
using ClassFunction = std::map<ConjClass, long long>;

inline const std::vector<std::pair<ConjClass, long>>& conjugacy_classes(const LieType& t) {
  static thread_local std::map<std::string, std::vector<std::pair<ConjClass, long>>> cache;
  auto it = cache.find(t.str());
  if (it != cache.end()) return it->second;
  std::map<ConjClass, long> sizes;
  for (auto& w : all_weyl_elements(t)) sizes[conjugacy_class_of(t, w)] += 1;
  std::vector<std::pair<ConjClass, long>> out(sizes.begin(), sizes.end());
  return cache.emplace(t.str(), std::move(out)).first->second;
}

inline ClassFunction character_class_function(const LieType& t, const WeylIrrep& ir) {
  ClassFunction f;
  for (auto& [c, size] : conjugacy_classes(t)) f[c] = character_value(t, ir, c);
  return f;
}

/// <f, g> = (1/|W|) sum over classes of size * f * g (real characters).
inline long long class_inner_product(const LieType& t, const ClassFunction& f,
                                     const ClassFunction& g) {
  long long dot = 0, order = 0;
  for (auto& [c, size] : conjugacy_classes(t)) {
    dot += size * f.at(c) * g.at(c);
    order += size;
  }
  if (dot % order != 0) throw std::logic_error("inner product is not integral");
  return dot / order;
}

/// The parabolic subgroup generated by the Levi's simple reflections.
inline std::vector<WeylElement> levi_subgroup(const LieType& t, const LeviDescriptor& levi) {
  std::vector<WeylElement> gens;
  for (int i : levi.simple_roots) gens.push_back(simple_reflection(t, i));
  std::set<WeylElement> seen{WeylElement::identity(weyl_points(t))};
  std::vector<WeylElement> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (auto& w : frontier)
      for (auto& s : gens) {
        auto v = s * w;
        if (seen.insert(v).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// dim Hom_{W(l)}(sgn, Res irrep) = (1/|W(l)|) sum sgn(w) chi(w).
inline long long sgn_multiplicity(const LieType& t, const WeylIrrep& ir,
                                  const LeviDescriptor& levi) {
  auto wl = levi_subgroup(t, levi);
  long long total = 0;
  for (auto& w : wl) total += sgn(w) * character_at(t, ir, w);
  if (total % static_cast<long long>(wl.size()) != 0)
    throw std::logic_error("sgn multiplicity is not integral");
  return total / static_cast<long long>(wl.size());
}

inline WeylElement longest_element(const LieType& t, const LeviDescriptor& levi) {
  const WeylElement* best = nullptr;
  int best_len = -1;
  static thread_local std::map<std::string, std::vector<WeylElement>> cache;
  std::string key = t.str() + levi.str();
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, levi_subgroup(t, levi)).first;
  for (auto& w : it->second) {
    int l = length(t, w);
    if (l > best_len) {
      best_len = l;
      best = &w;
    }
  }
  return *best;
}

inline WeylElement longest_element(const LieType& t) {
  LeviDescriptor full;
  for (int i = 1; i <= t.rank; ++i) full.simple_roots.push_back(i);
  return longest_element(t, full);
}

/// The unique maximal-length representative of each W(l)\W/W(l) double coset,
/// sorted by length then one-line notation.
inline std::vector<WeylElement> max_double_coset_reps(const LieType& t,
                                                      const LeviDescriptor& levi) {
  auto all = all_weyl_elements(t);
  std::map<WeylElement, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = i;
  std::vector<WeylElement> gens;
  for (int i : levi.simple_roots) gens.push_back(simple_reflection(t, i));

  std::vector<int> coset(all.size(), -1);
  std::vector<WeylElement> reps;
  int n_cosets = 0;
  for (std::size_t start = 0; start < all.size(); ++start) {
    if (coset[start] != -1) continue;
    int id = n_cosets++;
    std::vector<std::size_t> frontier{start};
    coset[start] = id;
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (auto wi : frontier)
        for (auto& s : gens)
          for (auto& v : {s * all[wi], all[wi] * s}) {
            auto vi = index.at(v);
            if (coset[vi] == -1) {
              coset[vi] = id;
              next.push_back(vi);
            }
          }
      frontier = std::move(next);
    }
  }
  for (int id = 0; id < n_cosets; ++id) {
    const WeylElement* best = nullptr;
    int best_len = -1;
    bool unique = true;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (coset[i] != id) continue;
      int l = length(t, all[i]);
      if (l > best_len) {
        best_len = l;
        best = &all[i];
        unique = true;
      } else if (l == best_len) {
        unique = false;
      }
    }
    if (!unique) throw std::logic_error("double coset has no unique maximal element");
    reps.push_back(*best);
  }
  std::sort(reps.begin(), reps.end(), [&](const WeylElement& a, const WeylElement& b) {
    int la = length(t, a), lb = length(t, b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return reps;
}

}  // namespace unip
