#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace propkit::chem {

struct ElementInfo {
  int atomic_number;
  std::string_view symbol;
  int valence_electrons;
  int period;
  bool organic_subset;   // may be written without brackets
  bool aromatic_allowed; // has a lowercase aromatic form
};

// Elements the parser understands. Anything else is "unknown element".
std::optional<ElementInfo> find_element(std::string_view symbol);
const ElementInfo& element_info(int atomic_number);

struct Atom {
  int atomic_number = 6;
  int charge = 0;
  bool aromatic = false;
  int hydrogens = 0;  // implicit + explicit, after collapsing [H] atoms
};

struct Bond {
  int begin = 0;
  int end = 0;
  int order = 1;  // 1, 2 or 3; aromatic bonds keep order 1
  bool aromatic = false;

  int other(int atom) const noexcept { return atom == begin ? end : begin; }
};

struct Neighbor {
  int atom;
  int bond;
};

class MolecularGraph {
 public:
  int add_atom(const Atom& atom);
  int add_bond(int a, int b, int order, bool aromatic);

  std::size_t atom_count() const noexcept { return atoms_.size(); }
  std::size_t bond_count() const noexcept { return bonds_.size(); }
  std::size_t heavy_atom_count() const noexcept;

  const Atom& atom(int i) const { return atoms_.at(static_cast<std::size_t>(i)); }
  Atom& atom(int i) { return atoms_.at(static_cast<std::size_t>(i)); }
  const Bond& bond(int i) const { return bonds_.at(static_cast<std::size_t>(i)); }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const std::vector<Bond>& bonds() const noexcept { return bonds_; }
  const std::vector<Neighbor>& neighbors(int i) const {
    return adjacency_.at(static_cast<std::size_t>(i));
  }

  // Bond index between a and b, or -1.
  int find_bond(int a, int b) const;

  // Sum of bond orders with aromatic bonds counted as one.
  int bond_order_sum(int i) const;
  int heavy_degree(int i) const;

  // Copy whose atom i becomes atom perm[i].
  MolecularGraph permuted(std::span<const int> perm) const;

  // Copy without the atoms flagged in `remove`; indices are compacted.
  MolecularGraph without_atoms(const std::vector<bool>& remove) const;

 private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

// Hydrogen count an organic-subset atom gets when written without brackets,
// or nullopt when the bond orders exceed every allowed valence.
std::optional<int> default_implicit_hydrogens(int atomic_number, bool aromatic,
                                              int bond_order_sum);

// Largest total valence (bonds + hydrogens) permitted for a charged atom.
int max_valence(int atomic_number, int charge);

}  // namespace propkit::chem
