#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "propkit/chem/graph.hpp"

namespace propkit::chem {

struct CanonicalForm {
  std::string smiles;
  // Canonical rank of every atom of the input graph (a permutation of 0..n-1).
  std::vector<int> ranks;
};

// Canonical labeling by iterative neighborhood refinement (Morgan-style):
// atoms start from an order-independent invariant, ranks are refined from
// sorted neighbor ranks until stable, and remaining ties are broken by trying
// every member of the first tied class and keeping the labeling whose SMILES
// is lexicographically smallest.
CanonicalForm canonical_form(const MolecularGraph& graph);

std::string canonicalize(const MolecularGraph& graph);

// parse_smiles + canonicalize; throws ParseError.
std::string canonical_smiles(std::string_view smiles);

}  // namespace propkit::chem
