#pragma once

// Signed Young tableaux: K-orbits on the nilpotents of a classical symmetric
// pair, plus the inner-class presets that bundle several pairs together.
// Exceptional inner classes carry no live enumeration; their counts come from
// the orbit data table.

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unip/orbit.hpp"
#include "unip/orbit_data.hpp"

namespace unip {

enum class PairKind {
  OrthogonalSplit,         // (so(p+q), s(o(p) x o(q)))
  SymplecticQuaternionic,  // (sp(2(p+q)), sp(p) x sp(q))
  SymplecticLinear,        // (sp(2n), gl(n))
  ExceptionalTable,        // counts read from the orbit data table
};

struct SymmetricPair {
  LieType ambient;
  PairKind kind;
  int p = 0, q = 0;  // tableau signature (#+, #-)
  std::string name;

  static SymmetricPair orthogonal_split(int p, int q, bool allow_d = false) {
    if (p < 0 || q < 0 || p + q == 0) throw std::invalid_argument("bad signature");
    if ((p + q) % 2 == 0) {
      if (!allow_d)
        throw std::invalid_argument(
            "orthogonal pair with even p+q is type D; its splitting rule is "
            "provisional and must be enabled explicitly");
      return {{LieFamily::D, (p + q) / 2}, PairKind::OrthogonalSplit, p, q,
              "so(" + std::to_string(p) + "," + std::to_string(q) + ")"};
    }
    return {{LieFamily::B, (p + q - 1) / 2}, PairKind::OrthogonalSplit, p, q,
            "so(" + std::to_string(p) + "," + std::to_string(q) + ")"};
  }

  static SymmetricPair symplectic_quaternionic(int p, int q) {
    if (p < 0 || q < 0 || p + q == 0) throw std::invalid_argument("bad signature");
    return {{LieFamily::C, p + q}, PairKind::SymplecticQuaternionic, 2 * p, 2 * q,
            "sp(" + std::to_string(p) + "," + std::to_string(q) + ")"};
  }

  static SymmetricPair symplectic_linear(int n) {
    if (n <= 0) throw std::invalid_argument("bad rank");
    return {{LieFamily::C, n}, PairKind::SymplecticLinear, n, n,
            "sp(" + std::to_string(2 * n) + ",R)"};
  }

  static SymmetricPair exceptional_table(LieType t, std::string key) {
    if (t.classical()) throw std::invalid_argument("exceptional pair needs F4 or E8");
    return {t, PairKind::ExceptionalTable, 0, 0, std::move(key)};
  }
};

/// Rows of (length, leading sign); signs alternate along each row.  Canonical
/// form sorts rows by length descending, then leading '+' before '-'.
struct SignedTableau {
  std::vector<std::pair<int, bool>> rows;  // (length, leads with +)

  void canonicalize() {
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second > b.second;
    });
  }

  Partition shape() const {
    std::vector<int> parts;
    for (auto& [len, plus] : rows) parts.push_back(len);
    return Partition(std::move(parts));
  }

  std::pair<int, int> signature() const {
    int plus = 0, minus = 0;
    for (auto& [len, leads_plus] : rows) {
      int lead = (len + 1) / 2, other = len / 2;
      plus += leads_plus ? lead : other;
      minus += leads_plus ? other : lead;
    }
    return {plus, minus};
  }

  std::string str() const {
    std::string out;
    for (auto& [len, plus] : rows) {
      if (!out.empty()) out += " / ";
      bool sign = plus;
      for (int i = 0; i < len; ++i, sign = !sign) out += sign ? '+' : '-';
    }
    return out;
  }

  friend bool operator==(const SignedTableau& a, const SignedTableau& b) {
    return a.rows == b.rows;
  }
};

namespace detail {

/// Allowed numbers of leading-+ rows among the m rows of one length.
inline std::vector<int> leading_plus_choices(PairKind kind, int len, int mult) {
  bool paired;  // this length must split evenly into +/- pairs
  switch (kind) {
    case PairKind::OrthogonalSplit:
      paired = len % 2 == 0;
      break;
    case PairKind::SymplecticQuaternionic:
    case PairKind::SymplecticLinear:
      paired = len % 2 == 1;
      break;
    default:
      throw std::logic_error("no tableau rule for this pair kind");
  }
  if (paired) {
    if (mult % 2 != 0) return {};
    return {mult / 2};
  }
  std::vector<int> out;
  for (int a = 0; a <= mult; ++a) out.push_back(a);
  return out;
}

}  // namespace detail

/// Streams every canonical signed tableau of the given shape and the pair's
/// signature, in a fixed order: per length (descending), the number of
/// leading-+ rows increases.
template <class Visitor>
void enumerate_tableaux(const SymmetricPair& pair, const Partition& shape, Visitor&& visit) {
  if (pair.kind == PairKind::ExceptionalTable)
    throw std::invalid_argument("exceptional pairs have no tableau model");
  if (shape.size() != pair.ambient.ambient_size())
    throw std::invalid_argument("shape " + shape.str() + " does not fit " + pair.name);
  // distinct lengths, descending, with multiplicities
  std::vector<std::pair<int, int>> lengths;
  for (int part : shape.parts()) {
    if (!lengths.empty() && lengths.back().first == part)
      lengths.back().second += 1;
    else
      lengths.emplace_back(part, 1);
  }
  std::vector<int> chosen(lengths.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int plus) {
    if (i == lengths.size()) {
      if (plus != pair.p) return;
      SignedTableau t;
      for (std::size_t j = 0; j < lengths.size(); ++j) {
        auto [len, mult] = lengths[j];
        for (int r = 0; r < chosen[j]; ++r) t.rows.emplace_back(len, true);
        for (int r = chosen[j]; r < mult; ++r) t.rows.emplace_back(len, false);
      }
      visit(t);
      return;
    }
    auto [len, mult] = lengths[i];
    for (int a : detail::leading_plus_choices(pair.kind, len, mult)) {
      int extra = len % 2 == 0 ? (mult * len) / 2
                               : a * ((len + 1) / 2) + (mult - a) * ((len - 1) / 2);
      chosen[i] = a;
      rec(i + 1, plus + extra);
    }
  };
  rec(0, 0);
}

inline std::vector<SignedTableau> enumerate(const SymmetricPair& pair, const NilpotentOrbit& o) {
  if (o.is_exceptional() || o.type != pair.ambient)
    throw std::invalid_argument("orbit " + o.str() + " does not live in " + pair.name);
  std::vector<SignedTableau> out;
  enumerate_tableaux(pair, o.jordan, [&](const SignedTableau& t) { out.push_back(t); });
  return out;
}

inline long tableau_count(const SymmetricPair& pair, const Partition& shape) {
  long n = 0;
  enumerate_tableaux(pair, shape, [&](const SignedTableau&) { ++n; });
  return n;
}

/// A dual group together with the symmetric subgroups K_1, ..., K_k whose
/// orbit counts enter the stable-dimension formula.
struct InnerClassDescriptor {
  std::string name;
  LieType group;  // G
  LieType dual;   // the Langlands dual, where the orbits live
  std::vector<SymmetricPair> pairs;
  bool exceptional() const { return !dual.classical(); }
};

/// Split Sp(2n): dual SO(2n+1), pairs K_i = S(O(2n+1-i) x O(i)), i = 0..n.
inline InnerClassDescriptor sp_split_inner_class(int n) {
  if (n <= 0) throw std::invalid_argument("bad rank");
  InnerClassDescriptor ic;
  ic.name = "sp" + std::to_string(2 * n) + "-split";
  ic.group = {LieFamily::C, n};
  ic.dual = {LieFamily::B, n};
  for (int i = 0; i <= n; ++i)
    ic.pairs.push_back(SymmetricPair::orthogonal_split(2 * n + 1 - i, i));
  return ic;
}

inline InnerClassDescriptor inner_class_preset(const std::string& name) {
  if (name == "f4-split") {
    InnerClassDescriptor ic;
    ic.name = name;
    ic.group = ic.dual = {LieFamily::F4, 4};
    ic.pairs = {SymmetricPair::exceptional_table(ic.dual, name)};
    return ic;
  }
  if (name == "e8-split") {
    InnerClassDescriptor ic;
    ic.name = name;
    ic.group = ic.dual = {LieFamily::E8, 8};
    ic.pairs = {SymmetricPair::exceptional_table(ic.dual, name)};
    return ic;
  }
  // "sp4-split", "sp6-split", ...
  if (name.rfind("sp", 0) == 0) {
    auto dash = name.find("-split");
    if (dash != std::string::npos && dash + 6 == name.size()) {
      int two_n = 0;
      try {
        two_n = std::stoi(name.substr(2, dash - 2));
      } catch (...) {
        two_n = 0;
      }
      if (two_n >= 2 && two_n % 2 == 0) return sp_split_inner_class(two_n / 2);
    }
  }
  throw std::invalid_argument("unknown inner-class preset: " + name +
                              " (try sp4-split, sp6-split, ..., f4-split, e8-split)");
}

/// Per (orbit in the special piece, pair) K-orbit count.
inline std::map<std::pair<NilpotentOrbit, std::string>, long> count_on_special_piece(
    const InnerClassDescriptor& ic, const NilpotentOrbit& o_special) {
  if (o_special.type != ic.dual)
    throw std::invalid_argument("orbit " + o_special.str() + " is not in the dual group of " +
                                ic.name);
  if (!is_special(o_special))
    throw std::invalid_argument("orbit " + o_special.str() + " is not special");
  if (!is_even(o_special)) throw std::invalid_argument("orbit " + o_special.str() + " is not even");
  std::map<std::pair<NilpotentOrbit, std::string>, long> out;
  for (auto& member : special_piece(o_special)) {
    if (ic.exceptional()) {
      auto& rec = orbit_table().lookup(ic.dual, member.bala_carter);
      for (auto& pair : ic.pairs) {
        auto it = rec.k_orbit_counts.find(pair.name);
        out[{member, pair.name}] = it == rec.k_orbit_counts.end() ? 0 : it->second;
      }
    } else {
      for (auto& pair : ic.pairs) out[{member, pair.name}] = tableau_count(pair, member.jordan);
    }
  }
  return out;
}

}  // namespace unip
