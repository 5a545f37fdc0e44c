#include <doctest.h>

#include <set>

#include "unip/tableaux.hpp"

using namespace unip;

namespace {

std::vector<std::string> strs(const std::vector<SignedTableau>& ts) {
  std::vector<std::string> out;
  for (auto& t : ts) out.push_back(t.str());
  return out;
}

NilpotentOrbit B2(std::initializer_list<int> p) {
  return NilpotentOrbit::classical({LieFamily::B, 2}, Partition(p));
}

// Independent generation: all row-sign assignments, deduplicated, filtered by
// the pairing rule and the signature.  No shared code with enumerate_tableaux.
long direct_count(const SymmetricPair& pair, const Partition& shape) {
  const auto& rows = shape.parts();
  std::set<std::vector<std::pair<int, bool>>> seen;
  for (unsigned mask = 0; mask < (1u << rows.size()); ++mask) {
    std::vector<std::pair<int, bool>> t;
    int plus = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      bool lead = mask >> i & 1;
      t.emplace_back(rows[i], lead);
      plus += lead ? (rows[i] + 1) / 2 : rows[i] / 2;
    }
    if (plus != pair.p) continue;
    bool ok = true;
    std::map<std::pair<int, bool>, int> freq;
    for (auto& r : t) freq[r] += 1;
    for (auto& [r, c] : freq) {
      bool must_pair = pair.kind == PairKind::OrthogonalSplit ? r.first % 2 == 0
                                                              : r.first % 2 == 1;
      if (must_pair && c != freq[{r.first, !r.second}]) ok = false;
    }
    if (!ok) continue;
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second > b.second;
    });
    seen.insert(t);
  }
  return static_cast<long>(seen.size());
}

}  // namespace

TEST_CASE("so(5) golden tableaux") {
  auto k41 = SymmetricPair::orthogonal_split(4, 1);
  auto k32 = SymmetricPair::orthogonal_split(3, 2);
  auto k50 = SymmetricPair::orthogonal_split(5, 0);

  CHECK(strs(enumerate(k41, B2({3, 1, 1}))) == std::vector<std::string>{"+-+ / + / +"});
  CHECK(strs(enumerate(k32, B2({3, 1, 1}))) ==
        std::vector<std::string>{"-+- / + / +", "+-+ / + / -"});
  CHECK(strs(enumerate(k32, B2({2, 2, 1}))) == std::vector<std::string>{"+- / -+ / +"});
  CHECK(enumerate(k50, B2({3, 1, 1})).empty());
  CHECK(strs(enumerate(k50, B2({1, 1, 1, 1, 1}))) == std::vector<std::string>{"+ / + / + / + / +"});
  CHECK_THROWS(enumerate(k41, NilpotentOrbit::classical({LieFamily::C, 2}, Partition{2, 2})));
}

TEST_CASE("symplectic pair conventions") {
  // sp(2,R): shape (2) carries two orbits, shape (1,1) one.
  auto sp2r = SymmetricPair::symplectic_linear(1);
  CHECK(tableau_count(sp2r, Partition{2}) == 2);
  CHECK(tableau_count(sp2r, Partition{1, 1}) == 1);
  // equal odd lengths pair off with opposite leading signs
  auto sp4r = SymmetricPair::symplectic_linear(2);
  CHECK(strs(enumerate(sp4r, NilpotentOrbit::classical({LieFamily::C, 2}, Partition{1, 1, 1, 1}))) ==
        std::vector<std::string>{"+ / + / - / -"});
  auto sp11 = SymmetricPair::symplectic_quaternionic(1, 1);
  CHECK(tableau_count(sp11, Partition{2, 2}) == 3);
  CHECK(tableau_count(sp11, Partition{1, 1, 1, 1}) == 1);
}

TEST_CASE("signature and canonicity invariants, p+q <= 9") {
  for (int total = 1; total <= 9; ++total) {
    if (total % 2 == 0 && total < 4) continue;  // so(2) is not semisimple
    for (int p = 0; p <= total; ++p) {
      SymmetricPair pair = total % 2 == 1
                               ? SymmetricPair::orthogonal_split(p, total - p)
                               : SymmetricPair::orthogonal_split(p, total - p, /*allow_d=*/true);
      long via_orbits = 0;
      long direct = 0;
      for (auto& shape : enumerate_partitions(total, pair.ambient.parity_family())) {
        std::set<std::string> seen;
        enumerate_tableaux(pair, shape, [&](const SignedTableau& t) {
          auto [np, nm] = t.signature();
          CHECK(np == pair.p);
          CHECK(nm == pair.q);
          CHECK(t.shape() == shape);
          SignedTableau canon = t;
          canon.canonicalize();
          CHECK(canon == t);  // emitted already canonical
          CHECK(seen.insert(t.str()).second);  // duplicate-free
        });
        via_orbits += static_cast<long>(seen.size());
        direct += direct_count(pair, shape);
      }
      CHECK(via_orbits == direct);
    }
  }
  // same cross-check for the two symplectic conventions
  for (int n = 1; n <= 4; ++n) {
    for (auto pair : {SymmetricPair::symplectic_linear(n),
                      SymmetricPair::symplectic_quaternionic((n + 1) / 2, n / 2)}) {
      long via = 0, direct = 0;
      for (auto& shape : enumerate_partitions(2 * n, ParityFamily::C)) {
        via += tableau_count(pair, shape);
        direct += direct_count(pair, shape);
      }
      CHECK(via == direct);
    }
  }
}

TEST_CASE("presets") {
  auto sp4 = inner_class_preset("sp4-split");
  CHECK(sp4.group == LieType{LieFamily::C, 2});
  CHECK(sp4.dual == LieType{LieFamily::B, 2});
  REQUIRE(sp4.pairs.size() == 3);
  CHECK(sp4.pairs[0].name == "so(5,0)");
  CHECK(sp4.pairs[2].name == "so(3,2)");
  CHECK(inner_class_preset("sp6-split").pairs.size() == 4);
  CHECK(inner_class_preset("f4-split").exceptional());
  CHECK_THROWS(inner_class_preset("g2-split"));
  CHECK_THROWS(SymmetricPair::orthogonal_split(4, 4));  // D gated behind allow_d
}

TEST_CASE("count_on_special_piece") {
  auto sp4 = inner_class_preset("sp4-split");
  auto counts = count_on_special_piece(sp4, B2({3, 1, 1}));
  long total = 0, on_top = 0;
  for (auto& [key, c] : counts) {
    total += c;
    if (key.first == B2({3, 1, 1})) on_top += c;
  }
  CHECK(total == 4);
  CHECK(on_top == 3);  // the three Arthur packets
  CHECK(counts.at({B2({3, 1, 1}), "so(4,1)"}) == 1);
  CHECK(counts.at({B2({3, 1, 1}), "so(3,2)"}) == 2);
  CHECK(counts.at({B2({2, 2, 1}), "so(3,2)"}) == 1);
  CHECK(counts.at({B2({2, 2, 1}), "so(4,1)"}) == 0);
  CHECK(counts.at({B2({3, 1, 1}), "so(5,0)"}) == 0);

  auto f4 = inner_class_preset("f4-split");
  auto f4a3 = NilpotentOrbit::exceptional({LieFamily::F4, 4}, "F4(a3)");
  auto fc = count_on_special_piece(f4, f4a3);
  std::vector<long> per_orbit;
  for (auto& m : special_piece(f4a3)) per_orbit.push_back(fc.at({m, "f4-split"}));
  CHECK(per_orbit == std::vector<long>{3, 2, 1, 2, 1});

  // zero orbit: one tableau per pair (the all-singleton tableau)
  auto zc = count_on_special_piece(sp4, zero_orbit({LieFamily::B, 2}));
  for (auto& [key, c] : zc) CHECK(c == 1);
  CHECK(zc.size() == 3);

  CHECK_THROWS(count_on_special_piece(sp4, B2({2, 2, 1})));  // not special
}
