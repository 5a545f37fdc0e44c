#pragma once

// The stable-dimension engine: Arthur-packet counts, the stable basis index
// set over a special piece, and the independently computed Springer-side
// dimension used as a consistency oracle.

#include <stdexcept>
#include <string>
#include <vector>

#include "unip/springer.hpp"
#include "unip/tableaux.hpp"
#include "unip/weyl.hpp"

namespace unip {

struct StableBasisRow {
  NilpotentOrbit member;
  std::string pair;
  std::string index;  // signed tableau, or "slot k" for table-backed counts
};

struct StableBasisReport {
  NilpotentOrbit orbit;
  InnerClassDescriptor inner_class;
  std::vector<StableBasisRow> rows;
  long arthur_count = 0;
  long stable_dim = 0;

  /// "orbit<TAB>pair<TAB>index" per row.
  std::string tsv() const {
    std::string out;
    for (auto& r : rows) out += r.member.str() + "\t" + r.pair + "\t" + r.index + "\n";
    return out;
  }

  std::string table() const {
    std::string out = "stable basis of " + orbit.str() + " (" + inner_class.name + ")\n";
    for (auto& r : rows) out += "  " + r.member.str() + "  " + r.pair + "  " + r.index + "\n";
    out += "arthur_count = " + std::to_string(arthur_count) +
           ", stable_dim = " + std::to_string(stable_dim) + "\n";
    return out;
  }
};

namespace detail {

inline void require_in_dual(const InnerClassDescriptor& ic, const NilpotentOrbit& o) {
  if (!(o.type == ic.dual))
    throw std::invalid_argument("orbit " + o.str() + " does not live in the dual group " +
                                ic.dual.str() + " of " + ic.name);
}

inline void require_theorem_hypotheses(const InnerClassDescriptor& ic, const NilpotentOrbit& o) {
  require_in_dual(ic, o);
  if (!is_special(o))
    throw std::invalid_argument("theorem hypotheses not satisfied: " + o.str() +
                                " is not special");
  if (!is_even(o))
    throw std::invalid_argument("theorem hypotheses not satisfied: " + o.str() + " is not even");
  if (!is_even(dual(o)))
    throw std::invalid_argument("theorem hypotheses not satisfied: the dual orbit " +
                                dual(o).str() + " is not even");
}

inline long pair_count(const InnerClassDescriptor& ic, const SymmetricPair& pair,
                       const NilpotentOrbit& o) {
  if (pair.kind == PairKind::ExceptionalTable) {
    auto& rec = orbit_table().lookup(ic.dual, o.bala_carter);
    auto it = rec.k_orbit_counts.find(pair.name);
    return it == rec.k_orbit_counts.end() ? 0 : it->second;
  }
  return tableau_count(pair, o.jordan);
}

}  // namespace detail

/// Number of K-orbits on O itself, summed over the inner class's pairs.
inline long arthur_count(const InnerClassDescriptor& ic, const NilpotentOrbit& o) {
  detail::require_in_dual(ic, o);
  if (!is_even(o))
    throw std::invalid_argument("arthur_count needs an even orbit, got " + o.str());
  long total = 0;
  for (auto& pair : ic.pairs) total += detail::pair_count(ic, pair, o);
  return total;
}

/// The full basis index set over the special piece of o.
inline StableBasisReport stable_dimension(const InnerClassDescriptor& ic,
                                          const NilpotentOrbit& o) {
  detail::require_theorem_hypotheses(ic, o);
  StableBasisReport report{o, ic, {}, 0, 0};
  for (auto& member : special_piece(o)) {
    for (auto& pair : ic.pairs) {
      if (pair.kind == PairKind::ExceptionalTable) {
        long c = detail::pair_count(ic, pair, member);
        for (long k = 1; k <= c; ++k)
          report.rows.push_back({member, pair.name, "slot " + std::to_string(k)});
      } else {
        enumerate_tableaux(pair, member.jordan, [&](const SignedTableau& t) {
          report.rows.push_back({member, pair.name, t.str()});
        });
      }
    }
  }
  report.stable_dim = static_cast<long>(report.rows.size());
  for (auto& r : report.rows)
    if (r.member == o) report.arthur_count += 1;
  return report;
}

/// Independent computation through the character side: each K-orbit on the
/// piece contributes its sgn-multiplicity (which the theorem makes 1).
inline long springer_side_dimension(const InnerClassDescriptor& ic, const NilpotentOrbit& o) {
  detail::require_theorem_hypotheses(ic, o);
  if (ic.exceptional())
    throw std::invalid_argument("springer_side_dimension is classical only");
  auto levi = zero_levi(o);
  long total = 0;
  for (auto& member : special_piece(o)) {
    long mult = static_cast<long>(sgn_multiplicity(ic.dual, springer_trivial(member), levi));
    for (auto& pair : ic.pairs) total += detail::pair_count(ic, pair, member) * mult;
  }
  return total;
}

}  // namespace unip
