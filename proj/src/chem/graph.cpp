#include "propkit/chem/graph.hpp"

#include <array>
#include <stdexcept>

namespace propkit::chem {

namespace {

constexpr std::array<ElementInfo, 18> kElements = {{
    {1, "H", 1, 1, false, false},
    {3, "Li", 1, 2, false, false},
    {5, "B", 3, 2, true, true},
    {6, "C", 4, 2, true, true},
    {7, "N", 5, 2, true, true},
    {8, "O", 6, 2, true, true},
    {9, "F", 7, 2, true, false},
    {11, "Na", 1, 3, false, false},
    {12, "Mg", 2, 3, false, false},
    {14, "Si", 4, 3, false, false},
    {15, "P", 5, 3, true, true},
    {16, "S", 6, 3, true, true},
    {17, "Cl", 7, 3, true, false},
    {19, "K", 1, 4, false, false},
    {20, "Ca", 2, 4, false, false},
    {34, "Se", 6, 4, false, true},
    {35, "Br", 7, 4, true, false},
    {53, "I", 7, 5, true, false},
}};

// Normal valences of the organic subset, lowest first.
std::span<const int> normal_valences(int atomic_number) {
  static constexpr int kB[] = {3};
  static constexpr int kC[] = {4};
  static constexpr int kN[] = {3, 5};
  static constexpr int kO[] = {2};
  static constexpr int kP[] = {3, 5};
  static constexpr int kS[] = {2, 4, 6};
  static constexpr int kHalogen[] = {1};
  switch (atomic_number) {
    case 5: return kB;
    case 6: return kC;
    case 7: return kN;
    case 8: return kO;
    case 15: return kP;
    case 16: return kS;
    case 9:
    case 17:
    case 35:
    case 53: return kHalogen;
    default: return {};
  }
}

}  // namespace

std::optional<ElementInfo> find_element(std::string_view symbol) {
  for (const auto& e : kElements) {
    if (e.symbol == symbol) return e;
  }
  return std::nullopt;
}

const ElementInfo& element_info(int atomic_number) {
  for (const auto& e : kElements) {
    if (e.atomic_number == atomic_number) return e;
  }
  throw std::out_of_range("unsupported atomic number");
}

std::optional<int> default_implicit_hydrogens(int atomic_number, bool aromatic,
                                              int bond_order_sum) {
  const auto valences = normal_valences(atomic_number);
  if (valences.empty()) return std::nullopt;
  if (bond_order_sum > valences.back()) return std::nullopt;
  // An aromatic atom contributes one more bond to its pi system.
  const int used = aromatic ? bond_order_sum + 1 : bond_order_sum;
  for (int v : valences) {
    if (v >= used) return v - used;
  }
  return 0;
}

int max_valence(int atomic_number, int charge) {
  const auto& info = element_info(atomic_number);
  const int electrons = info.valence_electrons - charge;
  if (atomic_number == 1) return electrons == 1 ? 1 : 0;
  if (electrons < 0 || electrons > 8) return -1;
  if (info.period >= 3 && electrons >= 5) return electrons;
  return electrons <= 4 ? electrons : 8 - electrons;
}

int MolecularGraph::add_atom(const Atom& atom) {
  atoms_.push_back(atom);
  adjacency_.emplace_back();
  return static_cast<int>(atoms_.size()) - 1;
}

int MolecularGraph::add_bond(int a, int b, int order, bool aromatic) {
  const int index = static_cast<int>(bonds_.size());
  bonds_.push_back({a, b, order, aromatic});
  adjacency_.at(static_cast<std::size_t>(a)).push_back({b, index});
  adjacency_.at(static_cast<std::size_t>(b)).push_back({a, index});
  return index;
}

std::size_t MolecularGraph::heavy_atom_count() const noexcept {
  std::size_t n = 0;
  for (const auto& a : atoms_) n += a.atomic_number > 1 ? 1 : 0;
  return n;
}

int MolecularGraph::find_bond(int a, int b) const {
  for (const auto& nb : neighbors(a)) {
    if (nb.atom == b) return nb.bond;
  }
  return -1;
}

int MolecularGraph::bond_order_sum(int i) const {
  int sum = 0;
  for (const auto& nb : neighbors(i)) {
    const auto& b = bonds_[static_cast<std::size_t>(nb.bond)];
    sum += b.aromatic ? 1 : b.order;
  }
  return sum;
}

int MolecularGraph::heavy_degree(int i) const {
  int d = 0;
  for (const auto& nb : neighbors(i)) {
    d += atom(nb.atom).atomic_number > 1 ? 1 : 0;
  }
  return d;
}

MolecularGraph MolecularGraph::permuted(std::span<const int> perm) const {
  MolecularGraph out;
  std::vector<Atom> reordered(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    reordered.at(static_cast<std::size_t>(perm[i])) = atoms_[i];
  }
  for (const auto& a : reordered) out.add_atom(a);
  for (const auto& b : bonds_) {
    out.add_bond(perm[static_cast<std::size_t>(b.begin)],
                 perm[static_cast<std::size_t>(b.end)], b.order, b.aromatic);
  }
  return out;
}

MolecularGraph MolecularGraph::without_atoms(
    const std::vector<bool>& remove) const {
  MolecularGraph out;
  std::vector<int> index(atoms_.size(), -1);
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!remove[i]) index[i] = out.add_atom(atoms_[i]);
  }
  for (const auto& b : bonds_) {
    const int a = index[static_cast<std::size_t>(b.begin)];
    const int c = index[static_cast<std::size_t>(b.end)];
    if (a >= 0 && c >= 0) out.add_bond(a, c, b.order, b.aromatic);
  }
  return out;
}

}  // namespace propkit::chem
