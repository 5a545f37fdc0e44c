#pragma once

#include <stdexcept>
#include <string>

#include "unip/partition.hpp"

namespace unip {

enum class LieFamily { A, B, C, D, F4, E8 };

/// A classical family with its rank, or one of the two shipped exceptional
/// groups (F4 and E8 have fixed rank).
struct LieType {
  LieFamily family = LieFamily::A;
  int rank = 1;

  static LieType make(LieFamily f, int rank) {
    LieType t{f, rank};
    t.check();
    return t;
  }

  void check() const {
    if (family == LieFamily::F4 && rank != 4) throw std::invalid_argument("F4 has rank 4");
    if (family == LieFamily::E8 && rank != 8) throw std::invalid_argument("E8 has rank 8");
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    if (family == LieFamily::D && rank < 2) throw std::invalid_argument("D needs rank >= 2");
  }

  bool classical() const {
    return family == LieFamily::A || family == LieFamily::B || family == LieFamily::C ||
           family == LieFamily::D;
  }

  // Size of the defining matrix representation: sl(n+1), so(2n+1), sp(2n), so(2n).
  int ambient_size() const {
    switch (family) {
      case LieFamily::A: return rank + 1;
      case LieFamily::B: return 2 * rank + 1;
      case LieFamily::C: return 2 * rank;
      case LieFamily::D: return 2 * rank;
      default: throw std::invalid_argument("ambient_size: exceptional type");
    }
  }

  ParityFamily parity_family() const {
    switch (family) {
      case LieFamily::A: return ParityFamily::A;
      case LieFamily::B: return ParityFamily::B;
      case LieFamily::C: return ParityFamily::C;
      case LieFamily::D: return ParityFamily::D;
      default: throw std::invalid_argument("parity_family: exceptional type");
    }
  }

  /// Langlands dual: B_n <-> C_n, everything else self-dual.
  LieType langlands_dual() const {
    if (family == LieFamily::B) return {LieFamily::C, rank};
    if (family == LieFamily::C) return {LieFamily::B, rank};
    return *this;
  }

  bool operator==(const LieType&) const = default;

  std::string str() const {
    switch (family) {
      case LieFamily::F4: return "F4";
      case LieFamily::E8: return "E8";
      default: break;
    }
    const char* letters = "ABCD";
    return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
  }
};

inline LieType parse_lie_type(const std::string& s) {
  if (s == "F4") return {LieFamily::F4, 4};
  if (s == "E8") return {LieFamily::E8, 8};
  if (s.size() < 2) throw std::invalid_argument("bad Lie type: " + s);
  LieFamily f;
  switch (s[0]) {
    case 'A': f = LieFamily::A; break;
    case 'B': f = LieFamily::B; break;
    case 'C': f = LieFamily::C; break;
    case 'D': f = LieFamily::D; break;
    default: throw std::invalid_argument("bad Lie type: " + s);
  }
  std::size_t pos = 0;
  int rank = std::stoi(s.substr(1), &pos);
  if (pos + 1 != s.size()) throw std::invalid_argument("bad Lie type: " + s);
  return LieType::make(f, rank);
}

}  // namespace unip
