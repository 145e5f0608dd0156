#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "hiersl/word_automata.hpp"

namespace hiersl {

namespace {

enum class Op { True, False, Lit, And, Or, Next, Until, Release };

struct LNode {
  Op op;
  int atom = -1;
  bool neg = false;
  int a = -1;
  int b = -1;
};

/// Hash-consed negation normal form over pseudo-atoms.
class Nnf {
 public:
  int mk(Op op, int atom = -1, bool neg = false, int a = -1, int b = -1) {
    auto key = std::make_tuple(static_cast<int>(op), atom, neg, a, b);
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back({op, atom, neg, a, b});
    ids_.emplace(key, id);
    return id;
  }
  const LNode& at(int id) const { return nodes_[id]; }

 private:
  std::vector<LNode> nodes_;
  std::map<std::tuple<int, int, bool, int, int>, int> ids_;
};

struct Translator {
  Nnf nnf;
  const std::vector<Qctl>& atoms;

  int atom_index(const Qctl& f) const {
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (structurally_equal(atoms[i], f)) return static_cast<int>(i);
    return -1;
  }

  int rec(const Qctl& f, bool neg) {
    if (f->kind == QKind::True) return nnf.mk(neg ? Op::False : Op::True);
    if (f->state) {
      int i = atom_index(f);
      if (i >= 0) return nnf.mk(Op::Lit, i, neg);
      if (f->kind != QKind::Not && f->kind != QKind::Or)
        throw Error("state subformula missing from the pseudo-atom list: " + to_string(f));
    }
    if (f->kind == QKind::Not) return rec(f->children[0], !neg);
    switch (f->kind) {
      case QKind::Or: {
        int a = rec(f->children[0], neg), b = rec(f->children[1], neg);
        return nnf.mk(neg ? Op::And : Op::Or, -1, false, a, b);
      }
      case QKind::Next:
        return nnf.mk(Op::Next, -1, false, rec(f->children[0], neg));
      case QKind::Until: {
        int a = rec(f->children[0], neg), b = rec(f->children[1], neg);
        return nnf.mk(neg ? Op::Release : Op::Until, -1, false, a, b);
      }
      default:
        throw Error("unexpected node in path formula");
    }
  }
};

struct Cover {
  Cube cube;
  std::vector<int> next;
  std::vector<int> postponed;
};

// Present-step simplification under the known atom values.
int simplify(Nnf& nnf, int f, const Cube& known) {
  const LNode n = nnf.at(f);
  switch (n.op) {
    case Op::Lit: {
      std::uint64_t bit = std::uint64_t{1} << n.atom;
      if (!((known.pos | known.neg) & bit)) return f;
      bool value = (known.pos & bit) != 0;
      return nnf.mk(value != n.neg ? Op::True : Op::False);
    }
    case Op::And:
    case Op::Or: {
      const Op unit = n.op == Op::And ? Op::True : Op::False;
      const Op zero = n.op == Op::And ? Op::False : Op::True;
      int a = simplify(nnf, n.a, known), b = simplify(nnf, n.b, known);
      if (nnf.at(a).op == zero || nnf.at(b).op == zero) return nnf.mk(zero);
      if (nnf.at(a).op == unit) return b;
      if (nnf.at(b).op == unit) return a;
      return nnf.mk(n.op, -1, false, a, b);
    }
    default:
      return f;
  }
}

void expand(Nnf& nnf, const Cube& known, std::vector<int> todo, std::set<int> done, Cube cube,
            std::set<int> next, std::set<int> postponed, std::vector<Cover>& out) {
  while (!todo.empty()) {
    int f = simplify(nnf, todo.back(), known);
    todo.pop_back();
    if (!done.insert(f).second) continue;
    const LNode n = nnf.at(f);
    switch (n.op) {
      case Op::True:
        break;
      case Op::False:
        return;
      case Op::Lit: {
        std::uint64_t bit = std::uint64_t{1} << n.atom;
        if (n.neg) {
          if (cube.pos & bit) return;
          cube.neg |= bit;
        } else {
          if (cube.neg & bit) return;
          cube.pos |= bit;
        }
        break;
      }
      case Op::And:
        todo.push_back(n.a);
        todo.push_back(n.b);
        break;
      case Op::Or: {
        auto t2 = todo;
        t2.push_back(n.b);
        expand(nnf, known, t2, done, cube, next, postponed, out);
        todo.push_back(n.a);
        break;
      }
      case Op::Next:
        next.insert(n.a);
        break;
      case Op::Until: {
        auto t2 = todo;
        t2.push_back(n.a);
        auto n2 = next;
        n2.insert(f);
        auto p2 = postponed;
        p2.insert(f);
        expand(nnf, known, t2, done, cube, n2, p2, out);
        todo.push_back(n.b);
        break;
      }
      case Op::Release: {
        auto t2 = todo;
        t2.push_back(n.b);
        auto n2 = next;
        n2.insert(f);
        expand(nnf, known, t2, done, cube, n2, postponed, out);
        todo.push_back(n.a);
        todo.push_back(n.b);
        break;
      }
    }
  }
  out.push_back({cube, {next.begin(), next.end()}, {postponed.begin(), postponed.end()}});
}

void collect_untils(const Nnf& nnf, int f, std::set<int>& out) {
  const LNode& n = nnf.at(f);
  if (n.op == Op::Until) out.insert(f);
  if (n.a >= 0) collect_untils(nnf, n.a, out);
  if (n.b >= 0) collect_untils(nnf, n.b, out);
}

bool literals_within(const Cube& a, const Cube& b) {
  return (a.pos & ~b.pos) == 0 && (a.neg & ~b.neg) == 0;
}

}  // namespace

// State: (obligations, counter, accepting flag) of the degeneralized tableau.
struct LtlTableau::Impl {
  Translator tr;
  int root = 0;
  std::vector<int> untils;
  using Key = std::tuple<std::vector<int>, int, bool>;
  std::map<Key, int> ids;
  std::vector<Key> states;
  std::vector<int> color;
  std::map<std::tuple<std::vector<int>, std::uint64_t, std::uint64_t>, std::vector<Cover>> covers;
  std::map<std::tuple<int, std::uint64_t, std::uint64_t>, std::vector<NpwEdge>> edges;

  explicit Impl(const std::vector<Qctl>& atoms) : tr{Nnf{}, atoms} {}

  int intern(std::vector<int> obl, int k, bool flag) {
    Key key{std::move(obl), k, flag};
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(states.size());
    ids.emplace(key, id);
    states.push_back(std::move(key));
    color.push_back(flag ? 2 : 1);
    return id;
  }
};

LtlTableau::LtlTableau(const Qctl& path, const std::vector<Qctl>& atoms) : impl_(std::make_unique<Impl>(atoms)) {
  if (atoms.size() > 64) throw Error("more than 64 pseudo-atoms");
  impl_->root = impl_->tr.rec(path, false);
  std::set<int> until_set;
  collect_untils(impl_->tr.nnf, impl_->root, until_set);
  impl_->untils.assign(until_set.begin(), until_set.end());
  impl_->intern({impl_->root}, 0, impl_->untils.empty());
}

LtlTableau::~LtlTableau() = default;

int LtlTableau::initial() const { return 0; }
int LtlTableau::size() const { return static_cast<int>(impl_->states.size()); }
int LtlTableau::color(int q) const { return impl_->color[q]; }

const std::vector<NpwEdge>& LtlTableau::edges(int q, const Cube& known) {
  Impl& im = *impl_;
  auto ekey = std::make_tuple(q, known.pos, known.neg);
  auto found = im.edges.find(ekey);
  if (found != im.edges.end()) return found->second;

  const auto [obl, k, flag] = im.states[q];
  auto ckey = std::make_tuple(obl, known.pos, known.neg);
  auto it = im.covers.find(ckey);
  if (it == im.covers.end()) {
    std::vector<Cover> cs;
    expand(im.tr.nnf, known, obl, {}, Cube{}, {}, {}, cs);
    it = im.covers.emplace(ckey, std::move(cs)).first;
  }
  const int m = static_cast<int>(im.untils.size());
  std::vector<NpwEdge> out;
  for (const Cover& c : it->second) {
    int j = k;
    while (j < m && !std::binary_search(c.postponed.begin(), c.postponed.end(), im.untils[j])) ++j;
    bool wrap = j == m;
    out.push_back({c.cube, im.intern(c.next, wrap ? 0 : j, wrap)});
  }
  // An edge whose guard implies another one's with the same target adds nothing.
  std::vector<NpwEdge> kept;
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < out.size() && !redundant; ++j) {
      if (i == j || out[i].to != out[j].to || !literals_within(out[j].guard, out[i].guard)) continue;
      redundant = !(out[i].guard == out[j].guard) || j < i;
    }
    if (!redundant) kept.push_back(out[i]);
  }
  return im.edges.emplace(ekey, std::move(kept)).first->second;
}

Npw ltl_to_npw(const Qctl& path, const std::vector<Qctl>& atoms) {
  LtlTableau t(path, atoms);
  Npw a;
  for (const auto& f : atoms) a.atom_names.push_back(to_string(f));
  a.initial = t.initial();
  for (int q = 0; q < t.size(); ++q) a.edges.push_back(t.edges(q));
  for (int q = 0; q < t.size(); ++q) a.color.push_back(t.color(q));
  return a;
}

Npw ltl_to_npw(const Qctl& path) { return ltl_to_npw(path, max_state_subformulas(path)); }

}  // namespace hiersl
