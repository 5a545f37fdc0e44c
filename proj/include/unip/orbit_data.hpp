#pragma once

// Read-only tables for the F4 orbit poset and the E8(a7) slice: Bala-Carter
// labels, weighted Dynkin diagrams, special-piece membership, and symmetric
// pair orbit counts.  Ships embedded; the same line format can be loaded from
// a file (see parse_orbit_table).

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "unip/lie_type.hpp"

namespace unip {

struct ExceptionalOrbitRecord {
  LieType group;
  std::string label;
  std::vector<int> weighted_diagram;
  bool special = false;
  std::string special_piece_rep;
  std::map<std::string, int> k_orbit_counts;  // symmetric-pair preset -> count
};

class OrbitTable {
 public:
  explicit OrbitTable(std::vector<ExceptionalOrbitRecord> records)
      : records_(std::move(records)) {
    validate();
  }

  const std::vector<ExceptionalOrbitRecord>& records() const { return records_; }

  const ExceptionalOrbitRecord& lookup(const LieType& group, const std::string& label) const {
    for (auto& r : records_)
      if (r.group == group && r.label == label) return r;
    std::string avail;
    for (auto& r : records_)
      if (r.group == group) avail += (avail.empty() ? "" : ", ") + r.label;
    throw std::invalid_argument("no orbit '" + label + "' in " + group.str() +
                                " table; available: " + avail);
  }

  bool contains(const LieType& group, const std::string& label) const {
    for (auto& r : records_)
      if (r.group == group && r.label == label) return true;
    return false;
  }

  /// All records of the special piece of the given special orbit, the special
  /// orbit itself first, the rest in table order.
  std::vector<ExceptionalOrbitRecord> special_piece_members(const LieType& group,
                                                            const std::string& special_label) const {
    const auto& top = lookup(group, special_label);
    if (!top.special)
      throw std::invalid_argument("orbit '" + special_label + "' is not special");
    std::vector<ExceptionalOrbitRecord> out{top};
    for (auto& r : records_)
      if (r.group == group && r.special_piece_rep == special_label && r.label != special_label)
        out.push_back(r);
    return out;
  }

 private:
  void validate() const {
    for (auto& r : records_) {
      if (static_cast<int>(r.weighted_diagram.size()) != r.group.rank)
        throw std::invalid_argument("diagram length mismatch for " + r.label);
      for (int v : r.weighted_diagram)
        if (v < 0 || v > 2) throw std::invalid_argument("diagram label out of range for " + r.label);
      const auto& rep = lookup(r.group, r.special_piece_rep);
      if (!rep.special)
        throw std::invalid_argument("special_piece_rep of " + r.label + " is not special");
      for (auto& [k, v] : r.k_orbit_counts)
        if (v < 0) throw std::invalid_argument("negative count for " + r.label);
    }
    // Paper-quoted totals over the two shipped special pieces.
    auto piece_total = [&](LieFamily fam, const std::string& lab, const std::string& preset) {
      int total = 0;
      for (auto& r : records_)
        if (r.group.family == fam && r.special_piece_rep == lab)
          total += r.k_orbit_counts.count(preset) ? r.k_orbit_counts.at(preset) : 0;
      return total;
    };
    if (piece_total(LieFamily::F4, "F4(a3)", "f4-split") != 9)
      throw std::logic_error("F4(a3) piece counts do not total 9");
    if (piece_total(LieFamily::E8, "E8(a7)", "e8-split") != 12)
      throw std::logic_error("E8(a7) piece counts do not total 12");
  }

  std::vector<ExceptionalOrbitRecord> records_;
};

inline constexpr const char* kOrbitTableText =
    "# orbitdata v1\n"
    "F4\t0\t0000\t1\t0\tf4-split=1\n"
    "F4\tA1\t1000\t1\tA1\n"
    "F4\t~A1\t0001\t0\tA1+~A1\n"
    "F4\tA1+~A1\t0100\t1\tA1+~A1\n"
    "F4\tA2\t2000\t1\tA2\n"
    "F4\t~A2\t0002\t1\t~A2\n"
    "F4\tF4(a3)\t0200\t1\tF4(a3)\tf4-split=3\n"
    "F4\tC3(a1)\t1010\t0\tF4(a3)\tf4-split=2\n"
    "F4\t~A2+A1\t0101\t0\tF4(a3)\tf4-split=1\n"
    "F4\tB2\t2001\t0\tF4(a3)\tf4-split=2\n"
    "F4\tA2+~A1\t0010\t0\tF4(a3)\tf4-split=1\n"
    "F4\tB3\t2200\t1\tB3\n"
    "F4\tC3\t1012\t1\tC3\n"
    "F4\tF4(a2)\t0202\t1\tF4(a2)\n"
    "F4\tF4(a1)\t2202\t1\tF4(a1)\n"
    "F4\tF4\t2222\t1\tF4\n"
    "E8\t0\t00000000\t1\t0\te8-split=1\n"
    "E8\tE8(a7)\t00002000\t1\tE8(a7)\te8-split=3\n"
    "E8\tE7(a5)\t00010100\t0\tE8(a7)\te8-split=2\n"
    "E8\tE6(a3)+A1\t10001010\t0\tE8(a7)\te8-split=2\n"
    "E8\tD6(a2)\t01100010\t0\tE8(a7)\te8-split=2\n"
    "E8\tD5(a1)+A2\t00100101\t0\tE8(a7)\te8-split=1\n"
    "E8\tA5+A1\t10010001\t0\tE8(a7)\te8-split=1\n"
    "E8\tA4+A3\t00010010\t0\tE8(a7)\te8-split=1\n"
    "E8\tE8\t22222222\t1\tE8\n";

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline OrbitTable parse_orbit_table(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "# orbitdata v1")
    throw std::invalid_argument("orbitdata: missing '# orbitdata v1' header");
  std::vector<ExceptionalOrbitRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cols = split_tabs(line);
    if (cols.size() < 5) throw std::invalid_argument("orbitdata: too few columns: " + line);
    ExceptionalOrbitRecord r;
    r.group = parse_lie_type(cols[0]);
    r.label = cols[1];
    for (char c : cols[2]) {
      if (c < '0' || c > '2') throw std::invalid_argument("orbitdata: bad diagram: " + cols[2]);
      r.weighted_diagram.push_back(c - '0');
    }
    if (cols[3] == "1")
      r.special = true;
    else if (cols[3] == "0")
      r.special = false;
    else
      throw std::invalid_argument("orbitdata: special flag must be 0 or 1");
    r.special_piece_rep = cols[4];
    for (std::size_t i = 5; i < cols.size(); ++i) {
      auto eq = cols[i].find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("orbitdata: unknown column: " + cols[i]);
      r.k_orbit_counts[cols[i].substr(0, eq)] = std::stoi(cols[i].substr(eq + 1));
    }
    records.push_back(std::move(r));
  }
  return OrbitTable(std::move(records));
}

inline std::string serialize_orbit_table(const OrbitTable& table) {
  std::string out = "# orbitdata v1\n";
  for (auto& r : table.records()) {
    out += r.group.str() + '\t' + r.label + '\t';
    for (int v : r.weighted_diagram) out += static_cast<char>('0' + v);
    out += '\t';
    out += r.special ? '1' : '0';
    out += '\t' + r.special_piece_rep;
    for (auto& [k, v] : r.k_orbit_counts) out += '\t' + k + '=' + std::to_string(v);
    out += '\n';
  }
  return out;
}

/// The table shipped with the library, unless ORBITDATA_PATH points at a
/// replacement file in the same format.
inline const OrbitTable& orbit_table() {
  static const OrbitTable table = [] {
    if (const char* path = std::getenv("ORBITDATA_PATH")) {
      std::ifstream in(path);
      if (!in) throw std::runtime_error(std::string("cannot open ORBITDATA_PATH: ") + path);
      std::ostringstream text;
      text << in.rdbuf();
      return parse_orbit_table(text.str());
    }
    return parse_orbit_table(kOrbitTableText);
  }();
  return table;
}

}  // namespace unip
