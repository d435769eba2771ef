#include "propkit/chem/groups.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "propkit/chem/canonical.hpp"
#include "propkit/error.hpp"

namespace propkit::chem {

namespace {

[[noreturn]] void bad_pattern(std::string_view pattern, const std::string& what) {
  throw Error(Errc::MalformedTable, "chem",
              "group pattern '" + std::string(pattern) + "': " + what);
}

AtomQuery compile_atom(std::string_view pattern, std::string_view body) {
  AtomQuery q;
  std::size_t i = 0;
  auto digits = [&]() {
    int v = 0;
    bool any = false;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      v = v * 10 + (body[i++] - '0');
      any = true;
    }
    return any ? v : -1;
  };
  if (body.empty() || !std::isalpha(static_cast<unsigned char>(body[0]))) {
    bad_pattern(pattern, "atom query must start with an element symbol");
  }
  q.aromatic = std::islower(static_cast<unsigned char>(body[0])) != 0;
  std::string symbol(1, static_cast<char>(std::toupper(static_cast<unsigned char>(body[0]))));
  i = 1;
  // Two-letter symbols; 'H' and 'D' after a one-letter symbol are primitives.
  if (i < body.size() && std::islower(static_cast<unsigned char>(body[i]))) {
    if (auto two = find_element(symbol + body[i])) {
      symbol += body[i];
      ++i;
    }
  }
  const auto info = find_element(symbol);
  if (!info) bad_pattern(pattern, "unknown element '" + symbol + "'");
  q.atomic_number = info->atomic_number;
  while (i < body.size()) {
    const char c = body[i++];
    if (c == ';') continue;
    if (c == 'H') {
      const int n = digits();
      q.hydrogens = n < 0 ? 1 : n;
    } else if (c == 'D') {
      const int n = digits();
      if (n < 0) bad_pattern(pattern, "D needs a number");
      q.degree = n;
    } else if (c == '+' || c == '-') {
      const int n = digits();
      q.charge = (c == '+' ? 1 : -1) * (n < 0 ? 1 : n);
    } else {
      bad_pattern(pattern, std::string("unexpected '") + c + "'");
    }
  }
  return q;
}

bool atom_matches(const MolecularGraph& g, int atom, const AtomQuery& q) {
  const Atom& a = g.atom(atom);
  if (a.atomic_number != q.atomic_number || a.aromatic != q.aromatic) return false;
  if (a.charge != q.charge) return false;
  if (q.hydrogens >= 0 && a.hydrogens != q.hydrogens) return false;
  if (q.degree >= 0 && g.heavy_degree(atom) != q.degree) return false;
  return true;
}

bool bond_matches(const Bond& b, BondQuery q) {
  switch (q) {
    case BondQuery::single: return !b.aromatic && b.order == 1;
    case BondQuery::double_: return !b.aromatic && b.order == 2;
    case BondQuery::triple: return !b.aromatic && b.order == 3;
    case BondQuery::aromatic: return b.aromatic;
    case BondQuery::any: return true;
    case BondQuery::single_or_aromatic: return b.aromatic || b.order == 1;
  }
  return false;
}

struct CompiledGroup {
  int id;
  int priority;
  GroupPattern pattern;
};

class Cover {
 public:
  Cover(const MolecularGraph& g, std::vector<CompiledGroup> groups,
        std::vector<int> ranks)
      : g_(g), groups_(std::move(groups)), ranks_(std::move(ranks)),
        covered_(g.atom_count(), false) {
    for (int i = 0; i < static_cast<int>(g.atom_count()); ++i) {
      if (g.atom(i).atomic_number > 1) heavy_.push_back(i);
    }
    std::sort(heavy_.begin(), heavy_.end(), [&](int a, int b) {
      return ranks_[static_cast<std::size_t>(a)] < ranks_[static_cast<std::size_t>(b)];
    });
    sorted_neighbors_.resize(g.atom_count());
    for (int i = 0; i < static_cast<int>(g.atom_count()); ++i) {
      auto nbs = g.neighbors(i);
      std::sort(nbs.begin(), nbs.end(), [&](const Neighbor& a, const Neighbor& b) {
        return ranks_[static_cast<std::size_t>(a.atom)] < ranks_[static_cast<std::size_t>(b.atom)];
      });
      sorted_neighbors_[static_cast<std::size_t>(i)] = std::move(nbs);
    }
  }

  GroupAssignment run() {
    if (heavy_.empty()) {
      throw Error(Errc::DecompositionFailed, "chem", "molecule has no heavy atoms");
    }
    // Atoms that no group can reach even on an empty molecule fail outright.
    std::vector<int> unreachable;
    for (int atom : heavy_) {
      bool reachable = false;
      for (const auto& grp : groups_) {
        if (any_embedding(grp, atom)) {
          reachable = true;
          break;
        }
      }
      if (!reachable) unreachable.push_back(atom);
    }
    if (!unreachable.empty()) fail(unreachable);

    if (!search()) {
      std::vector<int> uncovered;
      for (int atom : heavy_) {
        if (!best_covered_[static_cast<std::size_t>(atom)]) uncovered.push_back(atom);
      }
      fail(uncovered);
    }
    GroupAssignment counts;
    for (int id : chosen_) ++counts[id];
    return counts;
  }

 private:
  [[noreturn]] void fail(std::vector<int> atoms) const {
    std::sort(atoms.begin(), atoms.end());
    std::ostringstream msg;
    msg << "no group cover for atom(s)";
    for (int a : atoms) msg << ' ' << a;
    throw Error(Errc::DecompositionFailed, "chem", msg.str());
  }

  using Visitor = std::function<bool(const std::vector<int>&)>;

  // Calls visit(embedding) for every embedding of `grp` that places `anchor`
  // somewhere in the chain and uses only uncovered atoms. Stops when visit
  // returns true.
  bool for_each_embedding(const CompiledGroup& grp, int anchor, bool respect_cover,
                          const Visitor& visit) const {
    const auto& p = grp.pattern;
    const auto k = p.atoms.size();
    std::vector<int> mapped(k, -1);
    auto usable = [&](int atom) {
      if (respect_cover && covered_[static_cast<std::size_t>(atom)]) return false;
      return std::find(mapped.begin(), mapped.end(), atom) == mapped.end();
    };
    for (std::size_t pos = 0; pos < k; ++pos) {
      if (!atom_matches(g_, anchor, p.atoms[pos])) continue;
      std::fill(mapped.begin(), mapped.end(), -1);
      mapped[pos] = anchor;
      // Extend right from pos, then left from pos.
      std::function<bool(std::size_t, bool)> extend = [&](std::size_t idx, bool right) -> bool {
        if (right && idx == k) return extend(pos, false);
        if (!right && idx == 0) return visit(mapped);
        const std::size_t from = right ? idx - 1 : idx;
        const std::size_t to = right ? idx : idx - 1;
        const BondQuery bq = p.bonds[right ? idx - 1 : idx - 1];
        for (const auto& nb : sorted_neighbors_[static_cast<std::size_t>(mapped[from])]) {
          if (!usable(nb.atom) || !atom_matches(g_, nb.atom, p.atoms[to])) continue;
          if (!bond_matches(g_.bond(nb.bond), bq)) continue;
          mapped[to] = nb.atom;
          if (extend(right ? idx + 1 : idx - 1, right)) return true;
          mapped[to] = -1;
        }
        return false;
      };
      if (extend(pos + 1, true)) return true;
    }
    return false;
  }

  bool any_embedding(const CompiledGroup& grp, int anchor) const {
    return for_each_embedding(grp, anchor, false,
                              [](const std::vector<int>&) { return true; });
  }

  bool search() {
    if (++steps_ > kStepBudget) return false;
    int next = -1;
    std::size_t n_covered = 0;
    for (int atom : heavy_) {
      if (covered_[static_cast<std::size_t>(atom)]) {
        ++n_covered;
      } else if (next < 0) {
        next = atom;
      }
    }
    if (n_covered >= best_count_) {
      best_count_ = n_covered;
      best_covered_ = covered_;
    }
    if (next < 0) return true;
    for (const auto& grp : groups_) {
      const bool done = for_each_embedding(grp, next, true, [&](const std::vector<int>& atoms) {
        for (int a : atoms) covered_[static_cast<std::size_t>(a)] = true;
        chosen_.push_back(grp.id);
        if (search()) return true;
        chosen_.pop_back();
        for (int a : atoms) covered_[static_cast<std::size_t>(a)] = false;
        return false;
      });
      if (done) return true;
    }
    return false;
  }

  static constexpr std::size_t kStepBudget = 1'000'000;

  const MolecularGraph& g_;
  std::vector<CompiledGroup> groups_;
  std::vector<int> ranks_;
  std::vector<int> heavy_;
  std::vector<std::vector<Neighbor>> sorted_neighbors_;
  std::vector<bool> covered_;
  std::vector<bool> best_covered_;
  std::size_t best_count_ = 0;
  std::vector<int> chosen_;
  std::size_t steps_ = 0;
};

}  // namespace

GroupPattern compile_group_pattern(std::string_view pattern) {
  GroupPattern out;
  std::size_t i = 0;
  std::optional<BondQuery> pending;
  while (i < pattern.size()) {
    const char c = pattern[i];
    if (c == '[') {
      const auto close = pattern.find(']', i);
      if (close == std::string_view::npos) bad_pattern(pattern, "unterminated '['");
      if (!out.atoms.empty()) out.bonds.push_back(pending.value_or(BondQuery::single_or_aromatic));
      else if (pending) bad_pattern(pattern, "bond before first atom");
      pending.reset();
      out.atoms.push_back(compile_atom(pattern, pattern.substr(i + 1, close - i - 1)));
      i = close + 1;
      continue;
    }
    if (pending) bad_pattern(pattern, "two consecutive bonds");
    switch (c) {
      case '-': pending = BondQuery::single; break;
      case '=': pending = BondQuery::double_; break;
      case '#': pending = BondQuery::triple; break;
      case ':': pending = BondQuery::aromatic; break;
      case '~': pending = BondQuery::any; break;
      default: bad_pattern(pattern, std::string("unexpected '") + c + "'");
    }
    ++i;
  }
  if (pending) bad_pattern(pattern, "dangling bond");
  if (out.atoms.empty()) bad_pattern(pattern, "no atoms");
  return out;
}

GroupAssignment decompose_groups(const MolecularGraph& graph,
                                 std::span<const GroupDefinition> groups) {
  std::vector<CompiledGroup> compiled;
  compiled.reserve(groups.size());
  for (const auto& g : groups) {
    if (g.pattern.empty()) continue;
    compiled.push_back({g.id, g.priority, compile_group_pattern(g.pattern)});
  }
  std::stable_sort(compiled.begin(), compiled.end(),
                   [](const CompiledGroup& a, const CompiledGroup& b) {
                     if (a.priority != b.priority) return a.priority > b.priority;
                     return a.id < b.id;
                   });
  auto ranks = canonical_form(graph).ranks;
  return Cover(graph, std::move(compiled), std::move(ranks)).run();
}

}  // namespace propkit::chem
