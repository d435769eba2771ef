#include "propkit/chem/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "propkit/chem/smiles.hpp"

namespace propkit::chem {

namespace {

using Ranks = std::vector<int>;

// Leaves explored before tie breaking stops branching. Only reachable for
// highly symmetric cages far outside the supported chemistry.
constexpr std::size_t kLeafBudget = 20000;

template <typename Key>
int dense_ranks(const std::vector<Key>& keys, Ranks& out) {
  const auto n = keys.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
  });
  out.assign(n, 0);
  int rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && keys[static_cast<std::size_t>(order[i - 1])] <
                     keys[static_cast<std::size_t>(order[i])]) {
      ++rank;
    }
    out[static_cast<std::size_t>(order[i])] = rank;
  }
  return n == 0 ? 0 : rank + 1;
}

int bond_code(const Bond& b) { return b.aromatic ? 4 : b.order; }

int initial_ranks(const MolecularGraph& g, Ranks& ranks) {
  using Key = std::tuple<int, int, int, int, int, int>;
  std::vector<Key> keys;
  keys.reserve(g.atom_count());
  for (int i = 0; i < static_cast<int>(g.atom_count()); ++i) {
    const Atom& a = g.atom(i);
    // Degree first, so the traversal starts at a chain end.
    keys.emplace_back(g.heavy_degree(i), a.atomic_number, a.aromatic ? 1 : 0, a.charge,
                      a.hydrogens, g.bond_order_sum(i));
  }
  return dense_ranks(keys, ranks);
}

int refine(const MolecularGraph& g, Ranks& ranks) {
  int classes = 1 + *std::max_element(ranks.begin(), ranks.end());
  using Key = std::pair<int, std::vector<std::pair<int, int>>>;
  while (true) {
    std::vector<Key> keys(g.atom_count());
    for (int i = 0; i < static_cast<int>(g.atom_count()); ++i) {
      auto& key = keys[static_cast<std::size_t>(i)];
      key.first = ranks[static_cast<std::size_t>(i)];
      for (const auto& nb : g.neighbors(i)) {
        key.second.emplace_back(ranks[static_cast<std::size_t>(nb.atom)],
                                bond_code(g.bond(nb.bond)));
      }
      std::sort(key.second.begin(), key.second.end());
    }
    Ranks next;
    const int refined = dense_ranks(keys, next);
    ranks = std::move(next);
    if (refined == classes) return classes;
    classes = refined;
  }
}

class Search {
 public:
  explicit Search(const MolecularGraph& g) : g_(g) {}

  CanonicalForm run() {
    Ranks ranks;
    initial_ranks(g_, ranks);
    explore(std::move(ranks));
    return best_;
  }

 private:
  void explore(Ranks ranks) {
    const int classes = refine(g_, ranks);
    const auto n = static_cast<int>(g_.atom_count());
    if (classes == n) {
      ++leaves_;
      std::string s = write_smiles(g_, ranks);
      if (!have_best_ || s < best_.smiles) {
        best_.smiles = std::move(s);
        best_.ranks = ranks;
        have_best_ = true;
      }
      return;
    }
    // First tied class (lowest rank value shared by several atoms).
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int r : ranks) ++count[static_cast<std::size_t>(r)];
    int tied = 0;
    while (count[static_cast<std::size_t>(tied)] < 2) ++tied;

    for (int atom = 0; atom < n; ++atom) {
      if (ranks[static_cast<std::size_t>(atom)] != tied) continue;
      if (have_best_ && leaves_ >= kLeafBudget) return;
      std::vector<int> keys(ranks.size());
      for (std::size_t i = 0; i < ranks.size(); ++i) {
        keys[i] = 2 * ranks[i] + (static_cast<int>(i) == atom ? 0 : 1);
      }
      Ranks split;
      dense_ranks(keys, split);
      explore(std::move(split));
    }
  }

  const MolecularGraph& g_;
  CanonicalForm best_;
  bool have_best_ = false;
  std::size_t leaves_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const MolecularGraph& graph) {
  if (graph.atom_count() == 0) return {};
  return Search(graph).run();
}

std::string canonicalize(const MolecularGraph& graph) {
  return canonical_form(graph).smiles;
}

std::string canonical_smiles(std::string_view smiles) {
  return canonicalize(parse_smiles(smiles).graph);
}

}  // namespace propkit::chem
