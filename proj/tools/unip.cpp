// Command-line front end: batch queries against the orbit/tableau/character
// modules and the built-in verification suites.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <sstream>

#include "unip/oracle.hpp"
#include "unip/stable.hpp"

using namespace unip;

namespace {

struct OrbitArgs {
  std::string type, partition, label;

  NilpotentOrbit resolve() const {
    if (type.empty()) throw CLI::ValidationError("--type is required");
    LieType t = parse_lie_type(type);
    if (!label.empty()) {
      if (t.classical() && label.find(':') == std::string::npos)
        return NilpotentOrbit::classical(t, parse_partition(label));
      return NilpotentOrbit::exceptional(t, label);
    }
    if (partition.empty()) {
      if (!t.classical()) throw CLI::ValidationError("--label is required for F4/E8");
      throw CLI::ValidationError("--partition is required");
    }
    return NilpotentOrbit::classical(t, parse_partition(partition));
  }
};

void add_orbit_options(CLI::App* cmd, OrbitArgs& args) {
  cmd->add_option("--type", args.type, "Lie type, e.g. B2, C3, F4");
  cmd->add_option("--partition", args.partition, "Jordan type, e.g. 3,1,1");
  cmd->add_option("--label", args.label, "Bala-Carter label, e.g. F4(a3)");
}

SymmetricPair parse_pair(const std::string& s) {
  // "so(p,q)", "sp(p,q)", or "sp(2n,R)"
  auto open = s.find('('), comma = s.find(','), close = s.find(')');
  if (open == std::string::npos || comma == std::string::npos || close == std::string::npos)
    throw std::invalid_argument("pair must look like so(p,q), sp(p,q), or sp(2n,R)");
  std::string head = s.substr(0, open);
  std::string a = s.substr(open + 1, comma - open - 1);
  std::string b = s.substr(comma + 1, close - comma - 1);
  if (head == "so") return SymmetricPair::orthogonal_split(std::stoi(a), std::stoi(b));
  if (head == "sp" && b == "R") return SymmetricPair::symplectic_linear(std::stoi(a) / 2);
  if (head == "sp") return SymmetricPair::symplectic_quaternionic(std::stoi(a), std::stoi(b));
  throw std::invalid_argument("unknown symmetric pair: " + s);
}

NilpotentOrbit orbit_for_preset(const InnerClassDescriptor& ic, const std::string& text) {
  if (text.find(':') != std::string::npos) {
    auto o = parse_orbit(text);
    if (!(o.type == ic.dual))
      throw std::invalid_argument("orbit " + o.str() + " is not in " + ic.dual.str());
    return o;
  }
  if (ic.exceptional()) return NilpotentOrbit::exceptional(ic.dual, text);
  return NilpotentOrbit::classical(ic.dual, parse_partition(text));
}

int check(bool ok, const std::string& what) {
  std::cout << (ok ? "ok" : "FAIL") << "  " << what << "\n";
  return ok ? 0 : 1;
}

int verify_sp4() {
  int bad = 0;
  auto ic = inner_class_preset("sp4-split");
  auto o = NilpotentOrbit::classical({LieFamily::B, 2}, Partition{3, 1, 1});
  bad += check(dual(NilpotentOrbit::classical({LieFamily::C, 2}, Partition{2, 2})) == o,
               "d(C2:2,2) = B2:3,1,1");
  auto report = stable_dimension(ic, o);
  bad += check(report.arthur_count == 3, "three Arthur packets");
  bad += check(report.stable_dim == 4, "stable dimension 3 + 1");
  bad += check(report.tsv() ==
                   "B2:3,1,1\tso(4,1)\t+-+ / + / +\n"
                   "B2:3,1,1\tso(3,2)\t-+- / + / +\n"
                   "B2:3,1,1\tso(3,2)\t+-+ / + / -\n"
                   "B2:2,2,1\tso(3,2)\t+- / -+ / +\n",
               "the four displayed tableaux");
  bad += check(springer_side_dimension(ic, o) == 4, "character-side dimension agrees");
  return bad;
}

int verify_exceptional(const std::string& preset, const std::string& top,
                       const std::vector<long>& expected) {
  int bad = 0;
  auto ic = inner_class_preset(preset);
  auto o = NilpotentOrbit::exceptional(ic.dual, top);
  auto counts = count_on_special_piece(ic, o);
  std::vector<long> per_orbit;
  for (auto& m : special_piece(o)) per_orbit.push_back(counts.at({m, preset}));
  bad += check(per_orbit == expected, preset + " per-orbit counts");
  long total = 0;
  for (long c : expected) total += c;
  bad += check(stable_dimension(ic, o).stable_dim == total,
               preset + " total " + std::to_string(total));
  bad += check(arthur_count(ic, o) == expected[0], preset + " Arthur count");
  return bad;
}

int verify_properties() {
  int bad = 0;
  // duality involution on special orbits + order reversal, rank <= 4 here
  for (int n = 1; n <= 4; ++n)
    for (auto f : {LieFamily::B, LieFamily::C, LieFamily::D}) {
      if (f == LieFamily::D && n < 2) continue;
      LieType t{f, n};
      bool ok = true;
      auto orbits = enumerate_orbits(t);
      for (auto& o : orbits) ok = ok && (is_special(o) == (dual(dual(o)) == o));
      for (auto& o1 : orbits)
        for (auto& o2 : orbits)
          if (closure_leq(o1, o2)) ok = ok && closure_leq(dual(o2), dual(o1));
      bad += check(ok, "duality properties in " + t.str());
    }
  // special pieces partition the orbits, rank <= 4
  for (int n = 1; n <= 4; ++n)
    for (auto f : {LieFamily::B, LieFamily::C, LieFamily::D}) {
      if (f == LieFamily::D && n < 2) continue;
      LieType t{f, n};
      std::size_t covered = 0;
      for (auto& o : enumerate_orbits(t))
        if (is_special(o)) covered += special_piece(o).size();
      bad += check(covered == enumerate_orbits(t).size(),
                   "special pieces partition " + t.str());
    }
  return bad;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for stable combinations of unipotent representations"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "tsv"}));

  OrbitArgs oargs;
  std::string preset, pair_name, orbit_text, suite;
  TrialPolicy policy;

  auto* orbit_cmd = app.add_subcommand("orbit", "orbit queries");
  orbit_cmd->require_subcommand(1);
  for (const char* verb : {"info", "dual", "even", "diagram", "special-piece"}) {
    auto* sub = orbit_cmd->add_subcommand(verb);
    add_orbit_options(sub, oargs);
  }

  auto* tab_cmd = app.add_subcommand("tableaux", "signed tableaux of an orbit");
  tab_cmd->add_option("--pair", pair_name, "symmetric pair, e.g. so(3,2)")->required();
  add_orbit_options(tab_cmd, oargs);

  auto* sd_cmd = app.add_subcommand("stable-dim", "stable basis report");
  sd_cmd->add_option("--preset", preset, "inner class preset, e.g. sp4-split")->required();
  sd_cmd->add_option("--orbit", orbit_text, "orbit in the dual group")->required();

  auto* ac_cmd = app.add_subcommand("arthur-count", "Arthur packet count");
  ac_cmd->add_option("--preset", preset)->required();
  ac_cmd->add_option("--orbit", orbit_text)->required();

  auto* sp_cmd = app.add_subcommand("springer", "Springer representation");
  add_orbit_options(sp_cmd, oargs);

  auto* or_cmd = app.add_subcommand("oracle", "matrix brute-force checks");
  auto* sec_cmd = or_cmd->add_subcommand("section", "verify Theorem 1.1(a) witnesses");
  add_orbit_options(sec_cmd, oargs);
  sec_cmd->add_option("--seed", policy.seed);
  sec_cmd->add_option("--trials", policy.trials);

  auto* ver_cmd = app.add_subcommand("verify", "run a verification suite");
  ver_cmd->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"sp4", "f4", "e8", "properties"}));

  // let the global --format appear after any subcommand
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
    for (auto* s : a->get_subcommands({})) {
      s->fallthrough();
      allow_fallthrough(s);
    }
  };
  allow_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  bool tsv = format == "tsv";
  try {
    if (orbit_cmd->parsed()) {
      auto o = oargs.resolve();
      auto* verb = orbit_cmd->get_subcommands().front();
      const std::string& name = verb->get_name();
      if (name == "dual") {
        std::cout << dual(o).str() << "\n";
      } else if (name == "even") {
        std::cout << (is_even(o) ? "yes" : "no") << "\n";
      } else if (name == "diagram") {
        std::cout << weighted_dynkin(o).str() << "\n";
      } else if (name == "special-piece") {
        for (auto& m : special_piece(o)) std::cout << m.str() << "\n";
      } else {  // info
        const char* sep = tsv ? "\t" : ": ";
        std::cout << "orbit" << sep << o.str() << "\n";
        std::cout << "diagram" << sep << weighted_dynkin(o).str() << "\n";
        std::cout << "even" << sep << (is_even(o) ? "yes" : "no") << "\n";
        std::cout << "special" << sep << (is_special(o) ? "yes" : "no") << "\n";
        std::cout << "dual" << sep << dual(o).str() << "\n";
        if (is_even(o)) std::cout << "zero-levi" << sep << zero_levi(o).str() << "\n";
      }
    } else if (tab_cmd->parsed()) {
      auto pair = parse_pair(pair_name);
      for (auto& t : enumerate(pair, oargs.resolve())) std::cout << t.str() << "\n";
    } else if (sd_cmd->parsed()) {
      auto ic = inner_class_preset(preset);
      auto report = stable_dimension(ic, orbit_for_preset(ic, orbit_text));
      std::cout << (tsv ? report.tsv() : report.table());
    } else if (ac_cmd->parsed()) {
      auto ic = inner_class_preset(preset);
      std::cout << arthur_count(ic, orbit_for_preset(ic, orbit_text)) << "\n";
    } else if (sp_cmd->parsed()) {
      std::cout << springer_trivial(oargs.resolve()).str() << "\n";
    } else if (or_cmd->parsed()) {
      auto o = oargs.resolve();
      for (auto& [member, w] : verify_section(o.type, o, policy))
        std::cout << member.str() << "\t[" << w.str() << "]\n";
    } else if (ver_cmd->parsed()) {
      int bad = 0;
      if (suite == "sp4") bad = verify_sp4();
      if (suite == "f4") bad = verify_exceptional("f4-split", "F4(a3)", {3, 2, 1, 2, 1});
      if (suite == "e8") bad = verify_exceptional("e8-split", "E8(a7)", {3, 2, 2, 2, 1, 1, 1});
      if (suite == "properties") bad = verify_properties();
      return bad == 0 ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
