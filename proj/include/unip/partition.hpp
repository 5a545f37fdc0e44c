#pragma once

// Partition arithmetic: transpose, dominance order, parity validity for the
// classical families, and the B/C/D collapse used by orbit duality.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace unip {

enum class ParityFamily { A, B, C, D };

inline char family_letter(ParityFamily f) {
  switch (f) {
    case ParityFamily::A: return 'A';
    case ParityFamily::B: return 'B';
    case ParityFamily::C: return 'C';
    case ParityFamily::D: return 'D';
  }
  return '?';
}

/// Weakly decreasing sequence of positive integers.  Stored without trailing
/// zeros, so equal partitions compare equal as values.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// Multiplicity of the value v among the parts.
  int multiplicity(int v) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
  }

  bool operator==(const Partition& o) const = default;
  // Descending lexicographic: (5) before (3,1,1) before (2,2,1).
  bool operator<(const Partition& o) const { return parts_ > o.parts_; }

  std::string str() const {
    if (parts_.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

 private:
  std::vector<int> parts_;
};

/// Lenient parse of "3,1,1" (whitespace tolerated; "-" and "" give the empty
/// partition).
inline Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string cleaned;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
  if (cleaned.empty() || cleaned == "-") return Partition{};
  std::istringstream in(cleaned);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v <= 0) throw std::invalid_argument("bad partition entry: " + tok);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

inline Partition transpose(const Partition& p) {
  std::vector<int> out;
  for (int col = 1; col <= p.part(0); ++col) {
    int h = 0;
    for (int v : p.parts())
      if (v >= col) ++h;
    out.push_back(h);
  }
  return Partition(std::move(out));
}

/// Dominance order on partitions of equal size: every prefix sum of p is
/// bounded by the corresponding prefix sum of q.
inline bool dominance_leq(const Partition& p, const Partition& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("dominance_leq: size mismatch (" +
                                std::to_string(p.size()) + " vs " + std::to_string(q.size()) + ")");
  int sp = 0, sq = 0;
  std::size_t n = std::max(p.length(), q.length());
  for (std::size_t i = 0; i < n; ++i) {
    sp += p.part(i);
    sq += q.part(i);
    if (sp > sq) return false;
  }
  return true;
}

// Parity rule: B/D require even parts with even multiplicity, C requires odd
// parts with even multiplicity, A is unconstrained.
inline bool parity_rule_holds(const Partition& p, ParityFamily f) {
  if (f == ParityFamily::A) return true;
  const int bad = (f == ParityFamily::C) ? 1 : 0;
  for (std::size_t i = 0; i < p.length(); ++i) {
    int v = p.parts()[i];
    if (v % 2 == bad && p.multiplicity(v) % 2 != 0) return false;
  }
  return true;
}

inline bool is_valid(const Partition& p, ParityFamily f, int ambient_size) {
  return p.size() == ambient_size && parity_rule_holds(p, f);
}

/// X-collapse: the dominance-greatest partition valid for the family and
/// dominated by p.  Greedy excess shifting; tests pin it to the exhaustive
/// search oracle.
inline Partition collapse(const Partition& p, ParityFamily f) {
  if (f == ParityFamily::A) return p;
  const int n = p.size();
  if (f == ParityFamily::B && n % 2 == 0)
    throw std::invalid_argument("B-collapse needs odd total size");
  if ((f == ParityFamily::C || f == ParityFamily::D) && n % 2 != 0)
    throw std::invalid_argument("C/D-collapse needs even total size");

  std::vector<int> q(p.parts());
  const int bad = (f == ParityFamily::C) ? 1 : 0;
  for (;;) {
    // Largest bad-parity value with odd multiplicity; shift a box from its
    // last row down to the first row that can take it.
    int i = -1;
    for (std::size_t k = 0; k < q.size(); ++k) {
      int v = q[k];
      if (v % 2 != bad) continue;
      if (std::count(q.begin(), q.end(), v) % 2 == 0) continue;
      i = static_cast<int>(k);
      break;
    }
    if (i < 0) break;
    int v = q[i];
    while (i + 1 < static_cast<int>(q.size()) && q[i + 1] == v) ++i;
    q[i] -= 1;
    std::size_t j = i + 1;
    while (j < q.size() && q[j] + 1 > q[j - 1]) ++j;
    if (j < q.size())
      q[j] += 1;
    else
      q.push_back(1);
    while (!q.empty() && q.back() == 0) q.pop_back();
  }
  return Partition(std::move(q));
}

/// All partitions of n, descending lexicographic.
inline std::vector<Partition> enumerate_all_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_all_partitions: n < 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = std::min(rest, maxpart); v >= 1; --v) {
      cur.push_back(v);
      self(self, rest - v, v);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Valid partitions of n for the family, descending lexicographic.
inline std::vector<Partition> enumerate_partitions(int n, ParityFamily f) {
  std::vector<Partition> out;
  for (auto& p : enumerate_all_partitions(n))
    if (parity_rule_holds(p, f)) out.push_back(p);
  return out;
}

}  // namespace unip
