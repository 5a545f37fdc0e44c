#pragma once

// Nilpotent orbit calculus: weighted Dynkin diagrams, evenness, the
// half-h infinitesimal character, zero-labeled Levis, Spaltenstein duality,
// special orbits, closure order, and special pieces.

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "unip/lie_type.hpp"
#include "unip/orbit_data.hpp"
#include "unip/partition.hpp"

namespace unip {

enum class VeryEvenTag { None, I, II };

inline bool is_very_even_partition(const Partition& p) {
  if (p.empty()) return false;
  for (int v : p.parts())
    if (v % 2 != 0) return false;
  return true;
}

struct NilpotentOrbit {
  LieType type;
  Partition jordan;            // classical
  std::string bala_carter;     // exceptional
  VeryEvenTag tag = VeryEvenTag::None;

  static NilpotentOrbit classical(LieType t, Partition p, VeryEvenTag tag = VeryEvenTag::None) {
    if (!t.classical()) throw std::invalid_argument("classical orbit needs classical type");
    if (!is_valid(p, t.parity_family(), t.ambient_size()))
      throw std::invalid_argument("partition " + p.str() + " is not a valid " + t.str() + " orbit");
    bool ve = (t.family == LieFamily::D) && is_very_even_partition(p);
    if (ve && tag == VeryEvenTag::None) tag = VeryEvenTag::I;
    if (!ve && tag != VeryEvenTag::None)
      throw std::invalid_argument("very-even tag on a non-very-even orbit");
    return NilpotentOrbit{t, std::move(p), "", tag};
  }

  static NilpotentOrbit exceptional(LieType t, std::string label) {
    if (t.classical()) throw std::invalid_argument("exceptional orbit needs F4 or E8");
    orbit_table().lookup(t, label);  // rejects unknown labels
    return NilpotentOrbit{t, Partition{}, std::move(label), VeryEvenTag::None};
  }

  bool is_exceptional() const { return !type.classical(); }

  bool operator==(const NilpotentOrbit&) const = default;
  bool operator<(const NilpotentOrbit& o) const {
    if (!(type == o.type)) return type.str() < o.type.str();
    if (!(jordan == o.jordan)) return jordan < o.jordan;
    if (tag != o.tag) return tag < o.tag;
    return bala_carter < o.bala_carter;
  }

  std::string str() const {
    std::string s = type.str() + ":";
    if (is_exceptional()) return s + bala_carter;
    s += jordan.str();
    if (tag == VeryEvenTag::I) s += ":I";
    if (tag == VeryEvenTag::II) s += ":II";
    return s;
  }
};

/// Parse "B2:3,1,1", "F4:F4(a3)", or "D4:2,2,2,2:II".
inline NilpotentOrbit parse_orbit(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("orbit must look like TYPE:DATA");
  LieType t = parse_lie_type(text.substr(0, colon));
  std::string rest = text.substr(colon + 1);
  if (!t.classical()) return NilpotentOrbit::exceptional(t, rest);
  VeryEvenTag tag = VeryEvenTag::None;
  if (rest.size() > 2 && rest.ends_with(":II")) {
    tag = VeryEvenTag::II;
    rest = rest.substr(0, rest.size() - 3);
  } else if (rest.size() > 1 && rest.ends_with(":I")) {
    tag = VeryEvenTag::I;
    rest = rest.substr(0, rest.size() - 2);
  }
  return NilpotentOrbit::classical(t, parse_partition(rest), tag);
}

inline NilpotentOrbit zero_orbit(const LieType& t) {
  if (!t.classical()) return NilpotentOrbit::exceptional(t, "0");
  return NilpotentOrbit::classical(t, Partition(std::vector<int>(t.ambient_size(), 1)));
}

inline NilpotentOrbit regular_orbit(const LieType& t) {
  if (!t.classical()) return NilpotentOrbit::exceptional(t, t.str());
  int n = t.ambient_size();
  if (t.family == LieFamily::D) return NilpotentOrbit::classical(t, Partition{n - 1, 1});
  return NilpotentOrbit::classical(t, Partition{n});
}

/// The dominant h-coordinates of the orbit: for each part p contribute
/// p-1, p-3, ..., 1-p, sort, and keep the dominant-chamber representative
/// (all coordinates for A, the top `rank` for B/C/D).  Very even D orbits
/// with tag II negate the last coordinate.
inline std::vector<int> dominant_h(const NilpotentOrbit& o) {
  if (o.is_exceptional()) throw std::invalid_argument("dominant_h: classical orbits only");
  std::vector<int> h;
  for (int p : o.jordan.parts())
    for (int v = p - 1; v >= 1 - p; v -= 2) h.push_back(v);
  std::sort(h.rbegin(), h.rend());
  if (o.type.family != LieFamily::A) h.resize(o.type.rank);
  if (o.tag == VeryEvenTag::II) h.back() = -h.back();
  return h;
}

struct WeightedDynkinDiagram {
  std::vector<int> labels;  // one per simple root, Bourbaki order

  bool even() const {
    return std::all_of(labels.begin(), labels.end(), [](int v) { return v % 2 == 0; });
  }
  std::string str() const {
    std::string s;
    for (int v : labels) s += static_cast<char>('0' + v);
    return s;
  }
  bool operator==(const WeightedDynkinDiagram&) const = default;
};

inline WeightedDynkinDiagram weighted_dynkin(const NilpotentOrbit& o) {
  if (o.is_exceptional())
    return WeightedDynkinDiagram{orbit_table().lookup(o.type, o.bala_carter).weighted_diagram};
  auto h = dominant_h(o);
  const int n = o.type.rank;
  std::vector<int> labels;
  switch (o.type.family) {
    case LieFamily::A:
      for (int i = 0; i < n; ++i) labels.push_back(h[i] - h[i + 1]);
      break;
    case LieFamily::B:
      for (int i = 0; i + 1 < n; ++i) labels.push_back(h[i] - h[i + 1]);
      labels.push_back(h[n - 1]);  // short root e_n
      break;
    case LieFamily::C:
      for (int i = 0; i + 1 < n; ++i) labels.push_back(h[i] - h[i + 1]);
      labels.push_back(2 * h[n - 1]);  // long root 2e_n
      break;
    case LieFamily::D:
      for (int i = 0; i + 1 < n; ++i) labels.push_back(h[i] - h[i + 1]);
      labels.push_back(h[n - 2] + h[n - 1]);
      break;
    default:
      break;
  }
  for (int v : labels)
    if (v < 0 || v > 2) throw std::logic_error("weighted Dynkin label out of {0,1,2}");
  return WeightedDynkinDiagram{std::move(labels)};
}

inline bool is_even(const NilpotentOrbit& o) { return weighted_dynkin(o).even(); }

struct Rat {
  int num = 0, den = 1;
  Rat() = default;
  Rat(int n, int d) : num(n), den(d) {
    if (den < 0) { num = -num; den = -den; }
    int g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  bool integral() const { return den == 1; }
  bool operator==(const Rat&) const = default;
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

/// lambda = h/2 in standard Cartan coordinates.
inline std::vector<Rat> lambda_of(const NilpotentOrbit& o) {
  if (o.is_exceptional())
    throw std::invalid_argument("lambda coordinates are shipped for classical types only");
  std::vector<Rat> out;
  for (int v : dominant_h(o)) out.emplace_back(v, 2);
  return out;
}

struct LeviDescriptor {
  std::vector<int> simple_roots;  // 1-based indices, ascending
  bool operator==(const LeviDescriptor&) const = default;
  std::string str() const {
    if (simple_roots.empty()) return "{}";
    std::string s = "{";
    for (std::size_t i = 0; i < simple_roots.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(simple_roots[i]);
    }
    return s + "}";
  }
};

/// Simple roots labeled zero in the weighted Dynkin diagram.  Requires an
/// even orbit; a label 1 has no Levi reading.
inline LeviDescriptor zero_levi(const NilpotentOrbit& o) {
  auto d = weighted_dynkin(o);
  if (!d.even())
    throw std::invalid_argument("zero_levi: orbit " + o.str() + " is not even");
  LeviDescriptor l;
  for (std::size_t i = 0; i < d.labels.size(); ++i)
    if (d.labels[i] == 0) l.simple_roots.push_back(static_cast<int>(i) + 1);
  return l;
}

/// Spaltenstein / Barbasch-Vogan dual, landing in the Langlands-dual type.
inline NilpotentOrbit dual(const NilpotentOrbit& o) {
  if (o.is_exceptional()) {
    // Shipped slice: duality on it is determined by specialness data.
    const auto& rec = orbit_table().lookup(o.type, o.bala_carter);
    if (o.bala_carter == "0") return regular_orbit(o.type);
    if (o.bala_carter == o.type.str()) return zero_orbit(o.type);
    if (rec.special && rec.special_piece_rep == o.bala_carter &&
        (o.bala_carter == "F4(a3)" || o.bala_carter == "E8(a7)"))
      return o;  // self-dual
    if (!rec.special)
      return NilpotentOrbit::exceptional(o.type, rec.special_piece_rep);
    throw std::invalid_argument("duality data not shipped for " + o.str());
  }
  const LieType dual_type = o.type.langlands_dual();
  Partition t = transpose(o.jordan);
  switch (o.type.family) {
    case LieFamily::A:
      return NilpotentOrbit::classical(dual_type, t);
    case LieFamily::B: {
      // transpose, remove a box from the shortest row, C-collapse
      std::vector<int> parts = t.parts();
      parts.back() -= 1;
      return NilpotentOrbit::classical(dual_type, collapse(Partition(parts), ParityFamily::C));
    }
    case LieFamily::C: {
      // transpose, add a box to the longest row, B-collapse
      std::vector<int> parts = t.parts();
      if (parts.empty()) parts.push_back(0);
      parts.front() += 1;
      return NilpotentOrbit::classical(dual_type, collapse(Partition(parts), ParityFamily::B));
    }
    case LieFamily::D: {
      Partition q = collapse(t, ParityFamily::D);
      // Convention: the tag rides along unchanged; untagged inputs whose dual
      // is very even land on I.
      VeryEvenTag tag = VeryEvenTag::None;
      if (is_very_even_partition(q))
        tag = (o.tag == VeryEvenTag::None) ? VeryEvenTag::I : o.tag;
      return NilpotentOrbit::classical(dual_type, q, tag);
    }
    default:
      throw std::logic_error("unreachable");
  }
}

inline bool is_special(const NilpotentOrbit& o) {
  if (o.is_exceptional()) return orbit_table().lookup(o.type, o.bala_carter).special;
  return dual(dual(o)) == o;
}

/// Closure order.  Classical: dominance of Jordan types, with equal very even
/// partitions of different tag incomparable.  Exceptional: only the trivial
/// slices are shipped.
inline bool closure_leq(const NilpotentOrbit& o1, const NilpotentOrbit& o2) {
  if (!(o1.type == o2.type))
    throw std::invalid_argument("closure_leq: type mismatch " + o1.type.str() + " vs " + o2.type.str());
  if (o1.is_exceptional()) {
    if (o1 == o2) return true;
    if (o1.bala_carter == "0") return true;
    if (o2.bala_carter == o2.type.str()) return true;
    throw std::invalid_argument("exceptional closure data not shipped for " + o1.str() + " vs " + o2.str());
  }
  if (o1.jordan == o2.jordan) return o1.tag == o2.tag;
  return dominance_leq(o1.jordan, o2.jordan);
}

/// All nilpotent orbits of the type, descending lexicographic on Jordan type
/// (very even D partitions contribute a I and a II orbit); table order for
/// F4/E8.
inline std::vector<NilpotentOrbit> enumerate_orbits(const LieType& t) {
  std::vector<NilpotentOrbit> out;
  if (!t.classical()) {
    for (auto& r : orbit_table().records())
      if (r.group == t) out.push_back(NilpotentOrbit::exceptional(t, r.label));
    return out;
  }
  for (auto& p : enumerate_partitions(t.ambient_size(), t.parity_family())) {
    if (t.family == LieFamily::D && is_very_even_partition(p)) {
      out.push_back(NilpotentOrbit::classical(t, p, VeryEvenTag::I));
      out.push_back(NilpotentOrbit::classical(t, p, VeryEvenTag::II));
    } else {
      out.push_back(NilpotentOrbit::classical(t, p));
    }
  }
  return out;
}

/// The special piece of a special orbit: all orbits whose minimal special
/// orbit above them is o, i.e. the fiber of d∘d over o.  The special orbit
/// comes first, the rest in descending order.
inline std::vector<NilpotentOrbit> special_piece(const NilpotentOrbit& o) {
  if (!is_special(o))
    throw std::invalid_argument("special_piece: " + o.str() + " is not special");
  if (o.is_exceptional()) {
    std::vector<NilpotentOrbit> out;
    for (auto& r : orbit_table().special_piece_members(o.type, o.bala_carter))
      out.push_back(NilpotentOrbit::exceptional(o.type, r.label));
    return out;
  }
  std::vector<NilpotentOrbit> out{o};
  for (auto& cand : enumerate_orbits(o.type))
    if (!(cand == o) && dual(dual(cand)) == o) out.push_back(cand);
  return out;
}

}  // namespace unip
