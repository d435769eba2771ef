#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "propkit/activity/unifac.hpp"
#include "propkit/api/config.hpp"
#include "propkit/chem/canonical.hpp"
#include "propkit/chem/groups.hpp"
#include "propkit/chem/smiles.hpp"
#include "propkit/error.hpp"

using namespace propkit;
using namespace propkit::chem;

namespace {

Error error_of(const std::string& smiles) {
  try {
    parse_smiles(smiles);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected a parse error for " << smiles);
  return Error(Errc::InvalidInput, "", "");
}

const activity::UnifacParameterTable& table() {
  static const auto t = [] {
    const auto c = api::default_config();
    return activity::UnifacParameterTable::load(c.unifac_groups, c.unifac_interactions,
                                                activity::UnifacVariant::original);
  }();
  return t;
}

GroupAssignment groups(const std::string& smiles) {
  return activity::decompose_groups(parse_smiles(smiles).graph, table());
}

}  // namespace

TEST_CASE("example molecules parse") {
  const auto hexane = parse_smiles("CCCCCC").graph;
  CHECK(hexane.atom_count() == 6);
  CHECK(hexane.bond_count() == 5);
  CHECK(hexane.atom(0).hydrogens == 3);
  CHECK(hexane.atom(2).hydrogens == 2);

  const auto aniline = parse_smiles("CCCc1ccccc1N").graph;
  CHECK(aniline.atom_count() == 10);
  CHECK(aniline.bond_count() == 10);
  int aromatic = 0;
  for (const auto& a : aniline.atoms()) aromatic += a.aromatic;
  CHECK(aromatic == 6);
  CHECK(aniline.atom(9).atomic_number == 7);
  CHECK(aniline.atom(9).hydrogens == 2);
}

TEST_CASE("grammar subset") {
  CHECK(parse_smiles("C=C").graph.bond(0).order == 2);
  CHECK(parse_smiles("C#N").graph.atom(0).hydrogens == 1);
  CHECK(parse_smiles("C%10CCCC%10").graph.bond_count() == 5);
  CHECK(parse_smiles("CC(C)(C)C").graph.atom(1).hydrogens == 0);
  CHECK(parse_smiles("[NH4+]").graph.atom(0).charge == 1);
  CHECK(parse_smiles("[O-]C=O").graph.atom(0).charge == -1);
  CHECK(parse_smiles("C[H]").graph.atom_count() == 1);
  CHECK(parse_smiles("C[H]").graph.atom(0).hydrogens == 4);
  CHECK(parse_smiles("[Na+].[Cl-]").graph.atom_count() == 2);
  CHECK(parse_smiles("ClCBr").graph.atom(0).atomic_number == 17);
}

TEST_CASE("stereo and isotopes are dropped with a warning") {
  const auto p = parse_smiles("F/C=C/F");
  CHECK(p.warnings == std::vector<std::string>{"bond stereo marks ignored"});
  const auto q = parse_smiles("[13CH3][C@@H](O)C");
  CHECK(q.warnings.size() == 2);
  CHECK(canonicalize(q.graph) == canonical_smiles("CC(C)O"));
}

TEST_CASE("parse errors carry a byte offset") {
  const auto unbalanced = error_of("C(");
  CHECK(unbalanced.code() == Errc::ParseError);
  CHECK(unbalanced.offset() == 1u);

  const auto ring = error_of("c1ccccc");
  CHECK(std::string(ring.what()).find("unpaired ring closure") != std::string::npos);
  CHECK(ring.offset() == 1u);

  CHECK(error_of("CXC").offset() == 1u);
  CHECK(std::string(error_of("C(C)(C)(C)(C)C").what()).find("valence") != std::string::npos);
  CHECK(error_of("CC)").offset() == 2u);
  CHECK(error_of("").code() == Errc::ParseError);
  CHECK(error_of("[C").code() == Errc::ParseError);
  CHECK(error_of("cc").code() == Errc::ParseError);
}

TEST_CASE("canonical forms") {
  CHECK(canonical_smiles("OCC") == canonical_smiles("CCO"));
  CHECK(canonical_smiles("CCO") == "CCO");
  CHECK(canonical_smiles("C(C)O") == "CCO");
  CHECK(canonical_smiles("C1=CC=CC=C1") != canonical_smiles("c1ccccc1"));
  CHECK(canonical_smiles("c1ccccc1O") == canonical_smiles("Oc1ccccc1"));
  CHECK(canonical_smiles("Nc1ccccc1CCC") == canonical_smiles("CCCc1ccccc1N"));
  CHECK(canonical_smiles("CCO") != canonical_smiles("COC"));
}

TEST_CASE("canonicalization is idempotent and round-trips through the parser") {
  for (const char* s : {"CCCCCC", "CCO", "Oc1ccccc1", "CCCc1ccccc1N", "CC(C)(C)c1ccc(O)cc1",
                        "OC1CCCCC1", "C1CC2CCC1CC2", "N#CC=CC(=O)[O-]", "c1ccc2ccccc2c1",
                        "CC(=O)Nc1ccc(O)cc1"}) {
    CAPTURE(s);
    const auto c = canonical_smiles(s);
    CHECK(canonical_smiles(c) == c);
    CHECK(canonicalize(parse_smiles(c).graph) == c);
  }
}

TEST_CASE("one canonical string over random atom orders") {
  const auto g = parse_smiles("CC(C)(C)c1ccc(O)cc1CN").graph;
  REQUIRE(g.atom_count() == 13);
  const auto reference = canonicalize(g);
  std::mt19937 rng(5);
  std::vector<int> perm(g.atom_count());
  std::set<std::string> seen;
  for (int k = 0; k < 100; ++k) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto shuffled = g.permuted(perm);
    seen.insert(canonicalize(shuffled));
    // Any ranking gives a spelling of the same molecule.
    CHECK(canonical_smiles(write_smiles(shuffled, perm)) == reference);
  }
  CHECK(seen == std::set<std::string>{reference});
}

TEST_CASE("canonical ranks are a permutation") {
  const auto g = parse_smiles("CCCc1ccccc1N").graph;
  auto ranks = canonical_form(g).ranks;
  std::sort(ranks.begin(), ranks.end());
  for (int i = 0; i < static_cast<int>(ranks.size()); ++i) CHECK(ranks[i] == i);
}

TEST_CASE("group decomposition") {
  CHECK(groups("CCCCCC") == GroupAssignment{{1, 2}, {2, 4}});
  CHECK(groups("CCO") == GroupAssignment{{1, 1}, {2, 1}, {14, 1}});
  CHECK(groups("OCC") == groups("CCO"));
  CHECK(groups("CO") == GroupAssignment{{15, 1}});
  CHECK(groups("O") == GroupAssignment{{16, 1}});
  CHECK(groups("c1ccccc1") == GroupAssignment{{9, 6}});
  CHECK(groups("Cc1ccccc1") == GroupAssignment{{9, 5}, {11, 1}});
  CHECK(groups("Oc1ccccc1") == GroupAssignment{{9, 5}, {17, 1}});
  CHECK(groups("CCCc1ccccc1N") == GroupAssignment{{1, 1}, {2, 1}, {9, 4}, {12, 1}, {36, 1}});
  CHECK(groups("Nc1ccccc1CCC") == groups("CCCc1ccccc1N"));
  CHECK(groups("CC(C)C") == GroupAssignment{{1, 3}, {3, 1}});
}

TEST_CASE("atom conservation") {
  for (const char* s : {"CCCCCC", "CCO", "Oc1ccccc1", "CCCc1ccccc1N", "CC(C)(C)CCO"}) {
    const auto g = parse_smiles(s).graph;
    const auto a = activity::decompose_groups(g, table());
    std::size_t covered = 0;
    for (const auto& [id, n] : a)
      covered += compile_group_pattern(table().find_group(id)->pattern).atoms.size() *
                 static_cast<std::size_t>(n);
    CHECK(covered == g.heavy_atom_count());
  }
}

TEST_CASE("unsupported structures fail decomposition with atom indices") {
  try {
    groups("CCCl");
    FAIL("expected DecompositionFailed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DecompositionFailed);
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("group pattern syntax") {
  const auto p = compile_group_pattern("[cH0]-[CH2]");
  REQUIRE(p.atoms.size() == 2);
  CHECK(p.atoms[0].aromatic);
  CHECK(p.atoms[0].hydrogens == 0);
  CHECK(p.bonds[0] == BondQuery::single);
  CHECK(compile_group_pattern("[OH1]").atoms[0].atomic_number == 8);
  CHECK_THROWS_AS(compile_group_pattern("[Xx]"), Error);
  CHECK_THROWS_AS(compile_group_pattern("CH3"), Error);
}
