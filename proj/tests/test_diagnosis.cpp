#include <doctest.h>

#include <algorithm>

#include "locdiag/diagnosis.hpp"
#include "locdiag/errors.hpp"
#include "locdiag/parser.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace locdiag;
using testsupport::Rng;

namespace {

Formula f(const char* text) { return parse_formula(text); }

AtomSet atoms(std::initializer_list<const char*> names) {
  AtomSet out;
  for (const char* n : names) out.insert(Atom(n));
  return out;
}

System tiny_system(const char* sd_line, std::initializer_list<const char*> ass) {
  System s;
  s.sd.insert(f(sd_line));
  for (const char* a : ass) s.ass.insert(Atom(a));
  return s;
}

const System& three_gate() {
  static const System s = testsupport::circuit3().system();
  return s;
}

const System& eleven_gate() {
  static const System s = testsupport::circuit11().system();
  return s;
}

}  // namespace

TEST_CASE("diagnosable iff the description tolerates the observation") {
  CHECK(diagnosable(three_gate(), testsupport::obs_low_c_low_f()));
  CHECK_FALSE(diagnosable(System{BeliefBase{Formula::falsum()}, {}}, f("p")));
  CHECK_FALSE(diagnosable(System{BeliefBase{f("C")}, {}}, f("!C")));
}

TEST_CASE("minimal conflict sets of the three-gate circuit") {
  const auto conflicts = minimal_conflict_sets(three_gate(), testsupport::obs_low_c_low_f());
  REQUIRE(conflicts.size() == 1);
  CHECK(conflicts[0] == atoms({"okY", "okZ"}));

  // A healthy observation yields no conflicts at all.
  CHECK(minimal_conflict_sets(three_gate(), f("C & F")).empty());

  const System forced = tiny_system("okX -> p", {"okX"});
  const auto single = minimal_conflict_sets(forced, f("!p"));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == atoms({"okX"}));
}

TEST_CASE("minimal hitting sets") {
  CHECK(minimal_hitting_sets({atoms({"okY", "okZ"})}) ==
        std::vector<AtomSet>{atoms({"okY"}), atoms({"okZ"})});
  CHECK(minimal_hitting_sets({atoms({"a"}), atoms({"b"})}) ==
        std::vector<AtomSet>{atoms({"a", "b"})});
  CHECK(minimal_hitting_sets({atoms({"a", "b"}), atoms({"b", "c"})}) ==
        std::vector<AtomSet>{atoms({"b"}), atoms({"a", "c"})});
  CHECK(minimal_hitting_sets({}) == std::vector<AtomSet>{AtomSet{}});
  CHECK(minimal_hitting_sets({atoms({"a"}), AtomSet{}}).empty());
}

TEST_CASE("diagnoses of both circuit fixtures") {
  const std::vector<AtomSet> expected{atoms({"okY"}), atoms({"okZ"})};
  CHECK(diagnose(three_gate(), testsupport::obs_low_c_low_f()) == expected);
  CHECK(diagnose(eleven_gate(), testsupport::obs_low_c_low_f()) == expected);
  CHECK(diagnose(System{BeliefBase{f("C")}, {}}, f("!C")).empty());
  // Healthy observation: the empty diagnosis.
  CHECK(diagnose(three_gate(), f("C & F")) == std::vector<AtomSet>{AtomSet{}});
}

TEST_CASE("diagnose_one picks a minimal diagnosis via semi-revision") {
  const Diagnosis d = diagnose_one(three_gate(), testsupport::obs_low_c_low_f());
  CHECK(d == atoms({"okY"}));  // canonical tie-break among {okY} and {okZ}

  CHECK(diagnose_one(tiny_system("okX -> p", {"okX"}), f("!p")) == atoms({"okX"}));
  CHECK(diagnose_one(three_gate(), f("C & F")).empty());
  CHECK_THROWS_AS(diagnose_one(System{BeliefBase{f("C")}, {}}, f("!C")), NotDiagnosableError);
}

TEST_CASE("nested kernel projections: only minimal ones are conflict sets") {
  // Two kernels whose assumable projections nest: {ok1} inside {ok1, ok2}.
  System s;
  s.sd.insert(f("ok1 -> !o"));
  s.sd.insert(f("ok1 & ok2 -> !o"));
  s.ass = atoms({"ok1", "ok2"});
  const Formula obs = f("o");

  const auto kernels = compute_kernels(system_base(s, obs), Formula::falsum()).kernels;
  CHECK(kernels.size() == 2);

  const auto conflicts = minimal_conflict_sets(s, obs);
  REQUIRE(conflicts.size() == 1);
  CHECK(conflicts[0] == atoms({"ok1"}));
  CHECK(diagnose(s, obs) == std::vector<AtomSet>{atoms({"ok1"})});
  CHECK(conflicts == testsupport::brute_minimal_conflicts(s, obs));
}

namespace {

// Treats the listed sets as conflict generators: any superset of a member is
// a conflict, and the first member missing the excluded atoms is returned.
ConflictOracle family_oracle(std::vector<AtomSet> family) {
  return [family = std::move(family)](const AtomSet& excluded) -> std::optional<AtomSet> {
    for (const AtomSet& s : family) {
      if (std::none_of(s.begin(), s.end(),
                       [&](const Atom& a) { return excluded.count(a) != 0; })) {
        return s;
      }
    }
    return std::nullopt;
  };
}

}  // namespace

TEST_CASE("hitting-set DAG over a fixed conflict family") {
  CHECK(build_hs_dag(family_oracle({atoms({"okY", "okZ"})})) ==
        std::vector<AtomSet>{atoms({"okY"}), atoms({"okZ"})});
  CHECK(build_hs_dag(family_oracle({})) == std::vector<AtomSet>{AtomSet{}});
  CHECK(build_hs_dag(family_oracle({atoms({"a", "b"}), atoms({"b", "c"})})) ==
        std::vector<AtomSet>{atoms({"b"}), atoms({"a", "c"})});

  // Non-minimal conflicts first: the superset label must be pruned once the
  // smaller conflict appears, without losing any hitting set.
  CHECK(build_hs_dag(family_oracle({atoms({"a", "b", "c"}), atoms({"b"})})) ==
        std::vector<AtomSet>{atoms({"b"})});
  // Minimal members are {a,b} and {a,c}; {a,b,c,d} only ever appears as a
  // stale superset label.
  CHECK(build_hs_dag(family_oracle({atoms({"a", "b", "c", "d"}), atoms({"a", "b"}),
                                    atoms({"a", "c"})})) ==
        std::vector<AtomSet>{atoms({"a"}), atoms({"b", "c"})});
}

TEST_CASE("hitting-set DAG agrees with the eager pipeline on the fixtures") {
  for (const System* s : {&three_gate(), &eleven_gate()}) {
    const auto lazy = build_hs_dag(make_conflict_oracle(*s, testsupport::obs_low_c_low_f()));
    CHECK(lazy == diagnose(*s, testsupport::obs_low_c_low_f()));
  }
}

TEST_CASE("property: diagnosis pipeline vs brute force") {
  Rng rng(3001);
  int undiagnosable_seen = 0;
  int conflicting_seen = 0;
  for (int i = 0; i < 150; ++i) {
    const auto inst = testsupport::random_system(rng, 5);

    const auto conflicts = minimal_conflict_sets(inst.system, inst.obs);
    CHECK(conflicts == testsupport::brute_minimal_conflicts(inst.system, inst.obs));

    const auto diagnoses = diagnose(inst.system, inst.obs);
    CHECK(diagnoses == testsupport::brute_diagnoses(inst.system, inst.obs));
    CHECK(diagnoses == minimal_hitting_sets(conflicts));

    // Existence iff SD tolerates the observation.
    BeliefBase sd_obs = inst.system.sd;
    sd_obs.insert(inst.obs);
    CHECK(diagnoses.empty() == !testsupport::tt_satisfiable(sd_obs));

    const auto lazy = build_hs_dag(make_conflict_oracle(inst.system, inst.obs));
    CHECK(lazy == diagnoses);

    if (diagnoses.empty()) ++undiagnosable_seen;
    if (!conflicts.empty()) ++conflicting_seen;
  }
  CHECK(undiagnosable_seen > 5);
  CHECK(conflicting_seen > 30);
}

TEST_CASE("property: the DAG and Berge's product match brute force on random families") {
  Rng rng(3003);
  const auto pool = testsupport::atom_pool("e", 5);
  for (int i = 0; i < 150; ++i) {
    std::vector<AtomSet> family;
    const int members = 1 + static_cast<int>(rng.below(5));
    for (int m = 0; m < members; ++m) {
      AtomSet s;
      const int size = 1 + static_cast<int>(rng.below(4));
      for (int e = 0; e < size; ++e) s.insert(rng.pick(pool));
      family.push_back(std::move(s));
    }
    // Half the time, plant a strict superset so non-minimal conflicts reach
    // the DAG before the smaller one does.
    if (rng.coin() && !family.empty()) {
      AtomSet bigger = family.back();
      bigger.insert(rng.pick(pool));
      if (bigger.size() > family.back().size()) family.insert(family.begin(), bigger);
    }

    const auto expected = testsupport::brute_minimal_hitting_sets(family);
    CHECK(minimal_hitting_sets(family) == expected);
    CHECK(build_hs_dag(family_oracle(family)) == expected);
  }
}

TEST_CASE("property: every kernel projection is a conflict set") {
  Rng rng(3002);
  for (int i = 0; i < 80; ++i) {
    const auto inst = testsupport::random_system(rng, 5);
    const auto kernels =
        compute_kernels(system_base(inst.system, inst.obs), Formula::falsum()).kernels;
    for (const Kernel& k : kernels) {
      AtomSet projection;
      for (const Formula& g : k) {
        if (g.kind() == Formula::Kind::Atom && inst.system.ass.count(Atom(g.atom_name()))) {
          projection.insert(Atom(g.atom_name()));
        }
      }
      BeliefBase base = inst.system.sd;
      base.insert(inst.obs);
      for (const Atom& a : projection) base.insert(Formula::atom(a));
      CHECK_FALSE(testsupport::tt_satisfiable(base));
    }
  }
}
