#pragma once

// Springer correspondence for trivial local systems via symbols, normalized
// so the zero orbit carries sgn, and the cell module V(O) realized as the sum
// of Springer representations over the special piece.

#include <stdexcept>
#include <string>
#include <vector>

#include "unip/orbit.hpp"
#include "unip/weyl.hpp"

namespace unip {

/// The W-irrep attached to (o, trivial local system), normalized so that the
/// zero orbit maps to sgn and the regular orbit to trivial.
inline WeylIrrep springer_trivial(const NilpotentOrbit& o) {
  if (o.is_exceptional())
    throw std::invalid_argument("springer_trivial: classical orbits only");
  if (o.type.family == LieFamily::A) return {o.jordan, Partition{}, 0};

  // Pad the partition to odd (B) / even (C, D) length, list increasing, and
  // form mu_i = lambda_i + i - 1.  Odd entries give alpha, even entries beta,
  // each after halving (rounding down) and subtracting the staircase.
  std::vector<int> lambda(o.jordan.parts().rbegin(), o.jordan.parts().rend());
  bool want_odd = o.type.family == LieFamily::B;
  if (static_cast<int>(lambda.size()) % 2 != (want_odd ? 1 : 0))
    lambda.insert(lambda.begin(), 0);
  std::vector<int> odd, even;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    int mu = lambda[i] + static_cast<int>(i);
    (mu % 2 ? odd : even).push_back(mu / 2);
  }
  auto unstaircase = [](std::vector<int>& v) {
    std::vector<int> parts;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (int p = v[i] - static_cast<int>(i); p > 0) parts.push_back(p);
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
  };
  Partition alpha = unstaircase(odd), beta = unstaircase(even);
  if (o.type.family != LieFamily::D) return {alpha, beta, 0};
  // D: unordered pair; very even orbits pick the split half matching the tag.
  if (alpha == beta)
    return {alpha, beta, o.tag == VeryEvenTag::II ? -1 : 1};
  if (alpha.parts() < beta.parts()) std::swap(alpha, beta);
  return {alpha, beta, 0};
}

/// V(O): the sum of Springer representations over the special piece
/// (Prop-level definition; no cell machinery).  Classical types only;
/// use cell_module_labels for the shipped exceptional data.
inline std::vector<WeylIrrep> cell_module(const NilpotentOrbit& o_dual) {
  if (!is_special(o_dual))
    throw std::invalid_argument("cell_module: " + o_dual.str() + " is not special");
  if (!is_even(o_dual))
    throw std::invalid_argument("cell_module: " + o_dual.str() + " is not even");
  if (!is_even(dual(o_dual)))
    throw std::invalid_argument("cell_module: dual of " + o_dual.str() + " is not even");
  std::vector<WeylIrrep> out;
  for (auto& member : special_piece(o_dual)) out.push_back(springer_trivial(member));
  return out;
}

/// Summand labels: irrep names for classical input, Bala-Carter labels of the
/// special piece for F4/E8.
inline std::vector<std::string> cell_module_labels(const NilpotentOrbit& o_dual) {
  if (o_dual.is_exceptional()) {
    if (!is_special(o_dual))
      throw std::invalid_argument("cell_module: " + o_dual.str() + " is not special");
    std::vector<std::string> out;
    for (auto& member : special_piece(o_dual)) out.push_back(member.bala_carter);
    return out;
  }
  std::vector<std::string> out;
  for (auto& ir : cell_module(o_dual)) out.push_back(ir.str());
  return out;
}

}  // namespace unip
