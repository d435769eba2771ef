#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "propkit/chem/graph.hpp"

namespace propkit::chem {

struct ParsedSmiles {
  MolecularGraph graph;
  // Ignored features (stereo marks, isotopes, atom classes).
  std::vector<std::string> warnings;
};

// Parses the supported SMILES subset: organic-subset and bracket atoms,
// aromatic lowercase atoms, '-', '=', '#', ':' bonds, branches, ring closures
// (digits and %nn) and '.' separators. Stereo and isotope tokens are accepted
// and dropped with a warning. Explicit [H] atoms are folded into their heavy
// neighbor's hydrogen count.
//
// Throws Error{ParseError} carrying the byte offset of the problem.
ParsedSmiles parse_smiles(std::string_view smiles);

// Writes `graph` as SMILES with a depth-first traversal that always follows
// the lowest-ranked unvisited neighbor. `ranks` must be a permutation of
// 0..n-1. Any permutation gives a valid spelling; canonical ranks give the
// canonical one.
std::string write_smiles(const MolecularGraph& graph, std::span<const int> ranks);

}  // namespace propkit::chem
