#include "propkit/chem/smiles.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "propkit/error.hpp"

namespace propkit::chem {

namespace {

[[noreturn]] void fail(std::size_t offset, const std::string& what) {
  throw Error(Errc::ParseError, "chem",
              what + " at offset " + std::to_string(offset), offset);
}

struct BondToken {
  char symbol;
  std::size_t offset;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ParsedSmiles run() {
    if (s_.empty()) fail(0, "empty SMILES");
    while (pos_ < s_.size()) step();
    finish();
    ParsedSmiles out;
    out.graph = std::move(graph_);
    out.warnings = std::move(warnings_);
    return out;
  }

 private:
  void warn(const std::string& w) {
    if (std::find(warnings_.begin(), warnings_.end(), w) == warnings_.end()) {
      warnings_.push_back(w);
    }
  }

  void step() {
    const char c = s_[pos_];
    if (c == '[' || std::isalpha(static_cast<unsigned char>(c)) || c == '*') {
      const std::size_t at = pos_;
      const int idx = c == '[' ? bracket_atom() : organic_atom();
      if (prev_ >= 0) {
        connect(prev_, idx, pending_, at);
      } else if (pending_) {
        fail(pending_->offset, "bond without preceding atom");
      }
      pending_.reset();
      prev_ = idx;
      atoms_since_branch_ = true;
      return;
    }
    switch (c) {
      case '-':
      case '=':
      case '#':
      case ':':
      case '/':
      case '\\':
        if (prev_ < 0) fail(pos_, "bond without preceding atom");
        if (pending_) fail(pos_, "two consecutive bond symbols");
        pending_ = BondToken{c, pos_};
        ++pos_;
        return;
      case '$':
        fail(pos_, "quadruple bonds are not supported");
      case '(':
        if (prev_ < 0) fail(pos_, "branch without preceding atom");
        if (pending_) fail(pending_->offset, "bond symbol before branch");
        branches_.push_back({prev_, pos_});
        atoms_since_branch_ = false;
        ++pos_;
        return;
      case ')':
        if (branches_.empty()) fail(pos_, "unbalanced parenthesis");
        if (pending_) fail(pending_->offset, "dangling bond at end of branch");
        if (!atoms_since_branch_) fail(pos_, "empty branch");
        prev_ = branches_.back().first;
        branches_.pop_back();
        ++pos_;
        return;
      case '.':
        if (pending_) fail(pending_->offset, "dangling bond before '.'");
        if (!branches_.empty()) fail(pos_, "'.' inside a branch");
        prev_ = -1;
        ++pos_;
        return;
      case '%': {
        const std::size_t at = pos_;
        const int number = percent_number();
        ring_closure(number, at);
        return;
      }
      default:
        if (std::isdigit(static_cast<unsigned char>(c))) {
          ++pos_;
          ring_closure(c - '0', pos_ - 1);
          return;
        }
        fail(pos_, std::string("unexpected character '") + c + "'");
    }
  }

  int percent_number() {
    if (pos_ + 2 >= s_.size() ||
        !std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])) ||
        !std::isdigit(static_cast<unsigned char>(s_[pos_ + 2]))) {
      fail(pos_, "'%' must be followed by two digits");
    }
    const int n = (s_[pos_ + 1] - '0') * 10 + (s_[pos_ + 2] - '0');
    pos_ += 3;
    return n;
  }

  void ring_closure(int number, std::size_t offset) {
    if (prev_ < 0) fail(offset, "ring closure without preceding atom");
    auto it = rings_.find(number);
    if (it == rings_.end()) {
      rings_[number] = RingOpen{prev_, pending_, offset};
      pending_.reset();
      return;
    }
    const RingOpen open = it->second;
    rings_.erase(it);
    std::optional<BondToken> bond = pending_ ? pending_ : open.bond;
    if (pending_ && open.bond && bond_kind(pending_->symbol) != bond_kind(open.bond->symbol)) {
      fail(offset, "ring closure bond symbols disagree");
    }
    if (open.atom == prev_) fail(offset, "ring closure bonds an atom to itself");
    if (graph_.find_bond(open.atom, prev_) >= 0) {
      fail(offset, "ring closure duplicates an existing bond");
    }
    connect(open.atom, prev_, bond, offset);
    pending_.reset();
  }

  static int bond_kind(char symbol) {
    switch (symbol) {
      case '=': return 2;
      case '#': return 3;
      case ':': return 4;
      default: return 1;
    }
  }

  void connect(int a, int b, const std::optional<BondToken>& token,
               std::size_t offset) {
    if (graph_.find_bond(a, b) >= 0) fail(offset, "duplicate bond");
    int order = 1;
    bool aromatic = false;
    if (!token) {
      aromatic = graph_.atom(a).aromatic && graph_.atom(b).aromatic;
    } else {
      switch (token->symbol) {
        case '=': order = 2; break;
        case '#': order = 3; break;
        case ':': aromatic = true; break;
        case '/':
        case '\\': warn("bond stereo marks ignored"); break;
        default: break;
      }
    }
    graph_.add_bond(a, b, order, aromatic);
  }

  int organic_atom() {
    const std::size_t at = pos_;
    const char c = s_[pos_];
    Atom atom;
    if (c == '*') fail(at, "wildcard atoms are not supported");
    if (c == 'C' && pos_ + 1 < s_.size() && s_[pos_ + 1] == 'l') {
      atom.atomic_number = 17;
      pos_ += 2;
    } else if (c == 'B' && pos_ + 1 < s_.size() && s_[pos_ + 1] == 'r') {
      atom.atomic_number = 35;
      pos_ += 2;
    } else {
      const bool lower = std::islower(static_cast<unsigned char>(c)) != 0;
      const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      const auto info = find_element(std::string_view(&upper, 1));
      if (!info || !info->organic_subset || (lower && !info->aromatic_allowed)) {
        fail(at, std::string("unknown element '") + c + "'");
      }
      atom.atomic_number = info->atomic_number;
      atom.aromatic = lower;
      ++pos_;
    }
    return add_atom(atom, at, false);
  }

  int bracket_atom() {
    const std::size_t open = pos_;
    ++pos_;  // '['
    auto peek = [&]() -> char { return pos_ < s_.size() ? s_[pos_] : '\0'; };
    auto is_digit = [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; };

    if (is_digit(peek())) {
      while (is_digit(peek())) ++pos_;
      warn("isotope labels ignored");
    }

    Atom atom;
    const std::size_t sym_at = pos_;
    bool matched = false;
    if (pos_ + 1 < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])) &&
        std::islower(static_cast<unsigned char>(s_[pos_ + 1]))) {
      std::string two{s_.substr(pos_, 2)};
      const bool lower = std::islower(static_cast<unsigned char>(two[0])) != 0;
      two[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(two[0])));
      if (auto info = find_element(two); info && (!lower || info->aromatic_allowed)) {
        atom.atomic_number = info->atomic_number;
        atom.aromatic = lower;
        pos_ += 2;
        matched = true;
      }
    }
    if (!matched) {
      const char c = peek();
      if (!std::isalpha(static_cast<unsigned char>(c))) {
        fail(sym_at, "missing element symbol in bracket atom");
      }
      const bool lower = std::islower(static_cast<unsigned char>(c)) != 0;
      const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      const auto info = find_element(std::string_view(&upper, 1));
      if (!info || (lower && !info->aromatic_allowed)) {
        fail(sym_at, std::string("unknown element '") + c + "'");
      }
      atom.atomic_number = info->atomic_number;
      atom.aromatic = lower;
      ++pos_;
    }

    if (peek() == '@') {
      while (peek() == '@') ++pos_;
      while (std::isupper(static_cast<unsigned char>(peek())) && peek() != 'H') ++pos_;
      while (is_digit(peek())) ++pos_;
      warn("stereo descriptors ignored");
    }

    int hydrogens = 0;
    if (peek() == 'H') {
      ++pos_;
      hydrogens = 1;
      if (is_digit(peek())) {
        hydrogens = 0;
        while (is_digit(peek())) hydrogens = hydrogens * 10 + (s_[pos_++] - '0');
      }
    }

    if (peek() == '+' || peek() == '-') {
      const char sign = s_[pos_++];
      int magnitude = 1;
      if (is_digit(peek())) {
        magnitude = 0;
        while (is_digit(peek())) magnitude = magnitude * 10 + (s_[pos_++] - '0');
      } else {
        while (peek() == sign) {
          ++magnitude;
          ++pos_;
        }
      }
      atom.charge = sign == '+' ? magnitude : -magnitude;
    }

    if (peek() == ':') {
      ++pos_;
      if (!is_digit(peek())) fail(pos_, "atom class needs a number");
      while (is_digit(peek())) ++pos_;
      warn("atom classes ignored");
    }

    if (peek() != ']') {
      if (pos_ >= s_.size()) fail(open, "unterminated bracket atom");
      fail(pos_, std::string("unexpected character '") + peek() + "' in bracket atom");
    }
    ++pos_;
    atom.hydrogens = hydrogens;
    return add_atom(atom, open, true);
  }

  int add_atom(const Atom& atom, std::size_t offset, bool bracket) {
    offsets_.push_back(offset);
    bracket_.push_back(bracket);
    return graph_.add_atom(atom);
  }

  void finish() {
    if (pending_) fail(pending_->offset, "dangling bond");
    if (!branches_.empty()) fail(branches_.back().second, "unbalanced parenthesis");
    if (!rings_.empty()) {
      const auto& open = rings_.begin()->second;
      fail(open.offset, "unpaired ring closure " + std::to_string(rings_.begin()->first));
    }
    if (graph_.atom_count() == 0) fail(0, "no atoms");

    const auto ring_atoms = ring_membership();
    for (int i = 0; i < static_cast<int>(graph_.atom_count()); ++i) {
      Atom& atom = graph_.atom(i);
      const auto at = offsets_[static_cast<std::size_t>(i)];
      if (atom.aromatic && !ring_atoms[static_cast<std::size_t>(i)]) {
        fail(at, "aromatic atom outside a ring");
      }
      const int sum = graph_.bond_order_sum(i);
      if (!bracket_[static_cast<std::size_t>(i)]) {
        const auto h = default_implicit_hydrogens(atom.atomic_number, atom.aromatic, sum);
        if (!h) fail(at, "valence violation");
        atom.hydrogens = *h;
      } else {
        const int limit = max_valence(atom.atomic_number, atom.charge);
        if (limit < 0 || sum + atom.hydrogens > limit) fail(at, "valence violation");
      }
    }
    fold_explicit_hydrogens();
  }

  // Atoms with at least one incident non-bridge bond.
  std::vector<bool> ring_membership() const {
    const auto n = graph_.atom_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<bool> in_ring(n, false);
    int timer = 0;
    // Iterative Tarjan bridge search.
    struct Frame {
      int atom;
      int parent_bond;
      std::size_t next;
    };
    for (std::size_t root = 0; root < n; ++root) {
      if (disc[root] >= 0) continue;
      std::vector<Frame> stack{{static_cast<int>(root), -1, 0}};
      disc[root] = low[root] = timer++;
      while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nbs = graph_.neighbors(f.atom);
        if (f.next < nbs.size()) {
          const auto nb = nbs[f.next++];
          if (nb.bond == f.parent_bond) continue;
          const auto v = static_cast<std::size_t>(nb.atom);
          if (disc[v] < 0) {
            disc[v] = low[v] = timer++;
            stack.push_back({nb.atom, nb.bond, 0});
          } else {
            auto& lu = low[static_cast<std::size_t>(f.atom)];
            lu = std::min(lu, disc[v]);
          }
        } else {
          const int child = f.atom;
          const int pbond = f.parent_bond;
          stack.pop_back();
          if (!stack.empty()) {
            const int parent = stack.back().atom;
            auto& lp = low[static_cast<std::size_t>(parent)];
            lp = std::min(lp, low[static_cast<std::size_t>(child)]);
            const bool bridge = low[static_cast<std::size_t>(child)] >
                                disc[static_cast<std::size_t>(parent)];
            if (!bridge && pbond >= 0) {
              in_ring[static_cast<std::size_t>(child)] = true;
              in_ring[static_cast<std::size_t>(parent)] = true;
            }
          }
        }
      }
    }
    return in_ring;
  }

  void fold_explicit_hydrogens() {
    std::vector<bool> remove(graph_.atom_count(), false);
    bool any = false;
    for (int i = 0; i < static_cast<int>(graph_.atom_count()); ++i) {
      const Atom& a = graph_.atom(i);
      if (a.atomic_number != 1 || a.charge != 0 || a.hydrogens != 0) continue;
      const auto& nbs = graph_.neighbors(i);
      if (nbs.size() != 1) continue;
      const Bond& b = graph_.bond(nbs[0].bond);
      if (b.order != 1 || b.aromatic) continue;
      if (graph_.atom(nbs[0].atom).atomic_number == 1) continue;
      remove[static_cast<std::size_t>(i)] = true;
      graph_.atom(nbs[0].atom).hydrogens += 1;
      any = true;
    }
    if (any) graph_ = graph_.without_atoms(remove);
  }

  struct RingOpen {
    int atom;
    std::optional<BondToken> bond;
    std::size_t offset;
  };

  std::string_view s_;
  std::size_t pos_ = 0;
  MolecularGraph graph_;
  std::vector<std::string> warnings_;
  std::vector<std::size_t> offsets_;
  std::vector<bool> bracket_;
  int prev_ = -1;
  bool atoms_since_branch_ = false;
  std::vector<std::pair<int, std::size_t>> branches_;
  std::optional<BondToken> pending_;
  std::map<int, RingOpen> rings_;
};

std::string atom_text(const MolecularGraph& g, int i) {
  const Atom& a = g.atom(i);
  const auto& info = element_info(a.atomic_number);
  std::string symbol{info.symbol};
  if (a.aromatic) {
    symbol[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(symbol[0])));
  }
  const bool plain =
      info.organic_subset && a.charge == 0 &&
      default_implicit_hydrogens(a.atomic_number, a.aromatic, g.bond_order_sum(i)) ==
          a.hydrogens;
  if (plain) return symbol;
  std::string out = "[" + symbol;
  if (a.hydrogens > 0) {
    out += 'H';
    if (a.hydrogens > 1) out += std::to_string(a.hydrogens);
  }
  if (a.charge != 0) {
    out += a.charge > 0 ? '+' : '-';
    if (std::abs(a.charge) > 1) out += std::to_string(std::abs(a.charge));
  }
  out += ']';
  return out;
}

std::string bond_text(const MolecularGraph& g, int bond) {
  const Bond& b = g.bond(bond);
  if (b.aromatic) return "";
  switch (b.order) {
    case 2: return "=";
    case 3: return "#";
    default:
      // A plain single bond between aromatic atoms must be spelled out.
      return g.atom(b.begin).aromatic && g.atom(b.end).aromatic ? "-" : "";
  }
}

class Writer {
 public:
  Writer(const MolecularGraph& g, std::span<const int> ranks)
      : g_(g),
        ranks_(ranks),
        visited_(g.atom_count(), false),
        parent_bond_(g.atom_count(), -1),
        children_(g.atom_count()),
        ring_open_(g.atom_count()),
        ring_close_(g.atom_count()),
        ring_digit_(g.bond_count(), -1),
        classified_(g.bond_count(), false) {}

  std::string run() {
    std::vector<int> order(g_.atom_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return rank(a) < rank(b); });
    std::string out;
    for (int root : order) {
      if (visited_[static_cast<std::size_t>(root)]) continue;
      classify(root);
      if (!out.empty()) out += '.';
      emit(root, out);
    }
    return out;
  }

 private:
  int rank(int atom) const { return ranks_[static_cast<std::size_t>(atom)]; }

  std::vector<Neighbor> sorted_neighbors(int atom) const {
    auto nbs = g_.neighbors(atom);
    std::sort(nbs.begin(), nbs.end(),
              [&](const Neighbor& a, const Neighbor& b) { return rank(a.atom) < rank(b.atom); });
    return nbs;
  }

  void classify(int u) {
    visited_[static_cast<std::size_t>(u)] = true;
    for (const auto& nb : sorted_neighbors(u)) {
      if (nb.bond == parent_bond_[static_cast<std::size_t>(u)]) continue;
      if (classified_[static_cast<std::size_t>(nb.bond)]) continue;
      classified_[static_cast<std::size_t>(nb.bond)] = true;
      if (visited_[static_cast<std::size_t>(nb.atom)]) {
        ring_open_[static_cast<std::size_t>(nb.atom)].push_back(nb.bond);
        ring_close_[static_cast<std::size_t>(u)].push_back(nb.bond);
      } else {
        parent_bond_[static_cast<std::size_t>(nb.atom)] = nb.bond;
        children_[static_cast<std::size_t>(u)].push_back(nb.atom);
        classify(nb.atom);
      }
    }
  }

  void emit(int u, std::string& out) {
    out += atom_text(g_, u);
    for (int bond : ring_close_[static_cast<std::size_t>(u)]) {
      const int digit = ring_digit_[static_cast<std::size_t>(bond)];
      out += digit_text(digit);
      in_use_[static_cast<std::size_t>(digit)] = false;
    }
    for (int bond : ring_open_[static_cast<std::size_t>(u)]) {
      int digit = 1;
      while (in_use_[static_cast<std::size_t>(digit)]) ++digit;
      in_use_[static_cast<std::size_t>(digit)] = true;
      ring_digit_[static_cast<std::size_t>(bond)] = digit;
      out += bond_text(g_, bond);
      out += digit_text(digit);
    }
    const auto& kids = children_[static_cast<std::size_t>(u)];
    for (std::size_t k = 0; k < kids.size(); ++k) {
      const int child = kids[k];
      const bool last = k + 1 == kids.size();
      if (!last) out += '(';
      out += bond_text(g_, parent_bond_[static_cast<std::size_t>(child)]);
      emit(child, out);
      if (!last) out += ')';
    }
  }

  static std::string digit_text(int digit) {
    if (digit < 10) return std::string(1, static_cast<char>('0' + digit));
    return "%" + std::to_string(digit);
  }

  const MolecularGraph& g_;
  std::span<const int> ranks_;
  std::vector<bool> visited_;
  std::vector<int> parent_bond_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> ring_open_;
  std::vector<std::vector<int>> ring_close_;
  std::vector<int> ring_digit_;
  std::vector<bool> classified_;
  std::array<bool, 100> in_use_{};
};

}  // namespace

ParsedSmiles parse_smiles(std::string_view smiles) {
  return Parser(smiles).run();
}

std::string write_smiles(const MolecularGraph& graph, std::span<const int> ranks) {
  return Writer(graph, ranks).run();
}

}  // namespace propkit::chem
