#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "propkit/chem/graph.hpp"

namespace propkit::chem {

// A structural group as shipped in a group table: a linear chain of
// bracketed atom queries such as "[CH3]", "[cH0]-[CH2]" or "[CH3]-[OH1]".
//
// Atom query: element symbol (lowercase = aromatic), then optional
// H<n> (total hydrogens), D<n> (heavy-atom degree) and +<n>/-<n> (charge,
// default 0); ';' separators are allowed. Bonds between queries: '-' single,
// '=' double, '#' triple, ':' aromatic, '~' any; no symbol means single or
// aromatic.
struct GroupDefinition {
  int id = 0;
  std::string name;
  std::string pattern;
  int priority = 0;  // higher is tried first
};

struct AtomQuery {
  int atomic_number = 6;
  bool aromatic = false;
  int hydrogens = -1;  // -1 = any
  int degree = -1;
  int charge = 0;
};

enum class BondQuery { single, double_, triple, aromatic, any, single_or_aromatic };

struct GroupPattern {
  std::vector<AtomQuery> atoms;
  std::vector<BondQuery> bonds;  // bonds[i] joins atoms[i] and atoms[i + 1]
};

// Throws Error{MalformedTable} on syntax errors.
GroupPattern compile_group_pattern(std::string_view pattern);

using GroupAssignment = std::map<int, int>;  // group id -> count

// Complete, non-overlapping cover of all heavy atoms by the given groups.
// Atoms are visited in canonical order and each is covered by the
// highest-priority group that fits, with backtracking when a choice leaves
// some atom uncoverable. The result is therefore the same for every spelling
// of a molecule.
//
// Throws Error{DecompositionFailed} listing the atom indices that could not
// be covered.
GroupAssignment decompose_groups(const MolecularGraph& graph,
                                 std::span<const GroupDefinition> groups);

}  // namespace propkit::chem
