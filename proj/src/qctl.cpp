#include "hiersl/qctl.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hiersl/lexer.hpp"

namespace hiersl {

namespace {

Qctl make(QKind kind, std::string prop, IndexSet obs, std::vector<Qctl> children,
          bool state, SourceSpan span) {
  auto node = std::make_shared<QNode>();
  node->kind = kind;
  node->prop = std::move(prop);
  node->obs = std::move(obs);
  node->children = std::move(children);
  node->state = state;
  node->span = span;
  return node;
}

}  // namespace

Qctl q_true(SourceSpan span) { return make(QKind::True, "", {}, {}, true, span); }
Qctl q_atom(std::string p, SourceSpan span) {
  return make(QKind::Atom, std::move(p), {}, {}, true, span);
}
Qctl q_not(Qctl f, SourceSpan span) {
  bool st = f->state;
  return make(QKind::Not, "", {}, {std::move(f)}, st, span);
}
Qctl q_or(Qctl a, Qctl b, SourceSpan span) {
  bool st = a->state && b->state;
  return make(QKind::Or, "", {}, {std::move(a), std::move(b)}, st, span);
}
Qctl q_E(Qctl path, SourceSpan span) {
  return make(QKind::E, "", {}, {std::move(path)}, true, span);
}
Qctl q_exists(std::string p, IndexSet obs, Qctl body, SourceSpan span) {
  if (!body->state) throw Error("quantifier body must be a state formula");
  std::sort(obs.begin(), obs.end());
  obs.erase(std::unique(obs.begin(), obs.end()), obs.end());
  return make(QKind::Exists, std::move(p), std::move(obs), {std::move(body)}, true, span);
}
Qctl q_next(Qctl f, SourceSpan span) {
  return make(QKind::Next, "", {}, {std::move(f)}, false, span);
}
Qctl q_until(Qctl a, Qctl b, SourceSpan span) {
  return make(QKind::Until, "", {}, {std::move(a), std::move(b)}, false, span);
}

Qctl q_false() { return q_not(q_true()); }
Qctl q_and(Qctl a, Qctl b) { return q_not(q_or(q_not(std::move(a)), q_not(std::move(b)))); }
Qctl q_and_all(const std::vector<Qctl>& fs) {
  if (fs.empty()) return q_true();
  Qctl acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = q_and(acc, fs[i]);
  return acc;
}
Qctl q_or_all(const std::vector<Qctl>& fs) {
  if (fs.empty()) return q_false();
  Qctl acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = q_or(acc, fs[i]);
  return acc;
}
Qctl q_implies(Qctl a, Qctl b) { return q_or(q_not(std::move(a)), std::move(b)); }
Qctl q_A(Qctl path) { return q_not(q_E(q_not(std::move(path)))); }
Qctl q_eventually(Qctl f) { return q_until(q_true(), std::move(f)); }
Qctl q_globally(Qctl f) { return q_not(q_eventually(q_not(std::move(f)))); }
Qctl q_forall(std::string p, IndexSet obs, Qctl body) {
  return q_not(q_exists(std::move(p), std::move(obs), q_not(std::move(body))));
}

std::string to_string(const Qctl& f) {
  switch (f->kind) {
    case QKind::True:
      return "true";
    case QKind::Atom:
      return quote_identifier(f->prop);
    case QKind::Not:
      return "!" + to_string(f->children[0]);
    case QKind::Or:
      return "(" + to_string(f->children[0]) + " | " + to_string(f->children[1]) + ")";
    case QKind::E:
      return "E " + to_string(f->children[0]);
    case QKind::Exists:
      return "(exists " + quote_identifier(f->prop) + ":" + index_set_to_string(f->obs) +
             ". " + to_string(f->children[0]) + ")";
    case QKind::Next:
      return "X " + to_string(f->children[0]);
    case QKind::Until:
      return "(" + to_string(f->children[0]) + " U " + to_string(f->children[1]) + ")";
  }
  return "?";
}

bool structurally_equal(const Qctl& a, const Qctl& b) {
  if (a->kind != b->kind || a->prop != b->prop || a->obs != b->obs ||
      a->children.size() != b->children.size())
    return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!structurally_equal(a->children[i], b->children[i])) return false;
  return true;
}

std::size_t formula_size(const Qctl& f) {
  std::size_t n = 1;
  for (const auto& c : f->children) n += formula_size(c);
  return n;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Mode { State, Path };

class QctlParser {
 public:
  QctlParser(std::string_view text, const QctlSignature* sig) : cur_(tokenize(text)), sig_(sig) {}

  Qctl parse() {
    Qctl f = parse_iff(Mode::State);
    if (cur_.at_keyword("U"))
      cur_.fail("until in state position (state formula expected; wrap with E or A)");
    if (!cur_.at_end()) cur_.fail("unexpected token");
    return f;
  }

 private:
  Qctl parse_iff(Mode m) {
    Qctl lhs = parse_impl(m);
    while (cur_.at_symbol("<->")) {
      cur_.next();
      Qctl rhs = parse_impl(m);
      lhs = q_and(q_implies(lhs, rhs), q_implies(rhs, lhs));
    }
    return lhs;
  }

  Qctl parse_impl(Mode m) {
    Qctl lhs = parse_or(m);
    if (cur_.at_symbol("->")) {
      cur_.next();
      return q_implies(lhs, parse_impl(m));
    }
    return lhs;
  }

  Qctl parse_or(Mode m) {
    Qctl lhs = parse_and(m);
    while (cur_.at_symbol("|")) {
      SourceSpan sp = cur_.next().span;
      lhs = q_or(lhs, parse_and(m), sp);
    }
    return lhs;
  }

  Qctl parse_and(Mode m) {
    Qctl lhs = parse_until(m);
    while (cur_.at_symbol("&")) {
      cur_.next();
      lhs = q_and(lhs, parse_until(m));
    }
    return lhs;
  }

  Qctl parse_until(Mode m) {
    Qctl lhs = parse_unary(m);
    if (cur_.at_keyword("U")) {
      if (m == Mode::State)
        cur_.fail("until in state position (state formula expected; wrap with E or A)");
      SourceSpan sp = cur_.next().span;
      return q_until(lhs, parse_until(m), sp);
    }
    return lhs;
  }

  IndexSet parse_obs() {
    IndexSet obs;
    cur_.expect_symbol("{");
    while (!cur_.at_symbol("}")) {
      const Token& t = cur_.peek();
      if (t.kind != TokenKind::Number) cur_.fail("expected component index");
      int v = std::stoi(t.text);
      if (v < 1 || (sig_ && sig_->components >= 0 && v > sig_->components))
        throw ParseError("component index " + t.text + " outside [n]", t.span);
      obs.push_back(v);
      cur_.next();
      if (cur_.at_symbol(",")) cur_.next();
      else if (!cur_.at_symbol("}")) cur_.fail("expected ',' or '}'");
    }
    cur_.next();
    return obs;
  }

  Qctl parse_quantifier(bool universal) {
    SourceSpan sp = cur_.next().span;
    const Token& t = cur_.peek();
    if (t.kind != TokenKind::Ident || (!t.quoted && !is_plain_identifier(t.text)))
      cur_.fail("expected proposition");
    std::string p = cur_.next().text;
    IndexSet obs;
    if (cur_.at_symbol(":")) {
      cur_.next();
      obs = parse_obs();
    } else {
      if (!sig_ || sig_->components < 0)
        cur_.fail("observation set required when the number of components is unknown");
      obs = index_range(sig_->components);
    }
    cur_.expect_symbol(".");
    bound_.push_back(p);
    Qctl body = parse_iff(Mode::State);
    bound_.pop_back();
    if (universal) return q_not(q_exists(p, obs, q_not(body), sp), sp);
    return q_exists(p, obs, body, sp);
  }

  Qctl parse_unary(Mode m) {
    const Token& t = cur_.peek();
    SourceSpan sp = t.span;
    if (cur_.at_symbol("!")) {
      cur_.next();
      return q_not(parse_unary(m), sp);
    }
    if (cur_.at_keyword("X") || cur_.at_keyword("F") || cur_.at_keyword("G")) {
      if (m == Mode::State)
        cur_.fail("temporal operator in state position (wrap with E or A)");
      std::string op = cur_.next().text;
      Qctl arg = parse_unary(m);
      if (op == "X") return q_next(arg, sp);
      if (op == "F") return q_until(q_true(sp), arg, sp);
      return q_not(q_until(q_true(sp), q_not(arg), sp), sp);
    }
    if (cur_.at_keyword("E") || cur_.at_keyword("A")) {
      bool universal = cur_.next().text == "A";
      Qctl arg = parse_unary(Mode::Path);
      if (universal) return q_not(q_E(q_not(arg), sp), sp);
      return q_E(arg, sp);
    }
    if (cur_.at_keyword("exists")) return parse_quantifier(false);
    if (cur_.at_keyword("forall")) return parse_quantifier(true);
    if (cur_.at_symbol("(")) {
      cur_.next();
      Qctl inner = parse_iff(m);
      cur_.expect_symbol(")");
      return inner;
    }
    if (cur_.at_keyword("true")) {
      cur_.next();
      return q_true(sp);
    }
    if (cur_.at_keyword("false")) {
      cur_.next();
      return q_not(q_true(sp), sp);
    }
    if (t.kind == TokenKind::Ident && (t.quoted || is_plain_identifier(t.text))) {
      if (sig_ && !sig_->propositions.empty() &&
          std::find(bound_.begin(), bound_.end(), t.text) == bound_.end() &&
          std::find(sig_->propositions.begin(), sig_->propositions.end(), t.text) ==
              sig_->propositions.end())
        throw ParseError("unknown proposition '" + t.text + "'", t.span);
      return q_atom(cur_.next().text, sp);
    }
    cur_.fail("expected formula");
  }

  TokenCursor cur_;
  const QctlSignature* sig_;
  std::vector<std::string> bound_;
};

}  // namespace

Qctl parse_qctl(std::string_view text, const QctlSignature* signature) {
  return QctlParser(text, signature).parse();
}

// ---------------------------------------------------------------------------
// Proposition sets

namespace {

void collect_props(const Qctl& f, std::set<std::string>& bound, std::set<std::string>* quantified,
                   std::set<std::string>* free_out) {
  if (f->kind == QKind::Atom) {
    if (free_out && !bound.count(f->prop)) free_out->insert(f->prop);
    return;
  }
  if (f->kind == QKind::Exists) {
    if (quantified) quantified->insert(f->prop);
    bool was_bound = bound.count(f->prop) > 0;
    bound.insert(f->prop);
    collect_props(f->children[0], bound, quantified, free_out);
    if (!was_bound) bound.erase(f->prop);
    return;
  }
  for (const auto& c : f->children) collect_props(c, bound, quantified, free_out);
}

void collect_all(const Qctl& f, std::set<std::string>& out) {
  if (f->kind == QKind::Atom || f->kind == QKind::Exists) out.insert(f->prop);
  for (const auto& c : f->children) collect_all(c, out);
}

}  // namespace

std::set<std::string> ap_quantified(const Qctl& f) {
  std::set<std::string> bound, out;
  collect_props(f, bound, &out, nullptr);
  return out;
}

std::set<std::string> ap_free(const Qctl& f) {
  std::set<std::string> bound, out;
  collect_props(f, bound, nullptr, &out);
  return out;
}

std::set<std::string> ap_all(const Qctl& f) {
  std::set<std::string> out;
  collect_all(f, out);
  return out;
}

Qctl split_props(const Qctl& f, const std::set<std::string>& reserved) {
  std::set<std::string> taken = ap_all(f);
  taken.insert(reserved.begin(), reserved.end());
  const std::set<std::string> free_props = ap_free(f);
  std::map<std::string, int> counters;
  auto fresh = [&](const std::string& base) {
    for (;;) {
      std::string cand = base + "_" + std::to_string(++counters[base]);
      if (!taken.count(cand)) {
        taken.insert(cand);
        return cand;
      }
    }
  };
  std::map<std::string, std::string> scope;
  std::function<Qctl(const Qctl&)> rec = [&](const Qctl& g) -> Qctl {
    switch (g->kind) {
      case QKind::True:
        return g;
      case QKind::Atom: {
        auto it = scope.find(g->prop);
        return it == scope.end() ? g : q_atom(it->second, g->span);
      }
      case QKind::Exists: {
        bool shadowing = scope.count(g->prop) > 0;
        std::string name = (free_props.count(g->prop) || shadowing) ? fresh(g->prop) : g->prop;
        auto saved = scope.find(g->prop) == scope.end()
                         ? std::optional<std::string>()
                         : std::optional<std::string>(scope[g->prop]);
        scope[g->prop] = name;
        Qctl body = rec(g->children[0]);
        if (saved) scope[g->prop] = *saved;
        else scope.erase(g->prop);
        return q_exists(name, g->obs, body, g->span);
      }
      case QKind::Not:
        return q_not(rec(g->children[0]), g->span);
      case QKind::Or:
        return q_or(rec(g->children[0]), rec(g->children[1]), g->span);
      case QKind::E:
        return q_E(rec(g->children[0]), g->span);
      case QKind::Next:
        return q_next(rec(g->children[0]), g->span);
      case QKind::Until:
        return q_until(rec(g->children[0]), rec(g->children[1]), g->span);
    }
    return g;
  };
  return rec(f);
}

// ---------------------------------------------------------------------------
// Hierarchy and observation indices

std::string QctlHierarchyReport::describe() const {
  if (hierarchical || !witness) return "hierarchical";
  return "binder exists " + witness->second->prop + ":" +
         index_set_to_string(witness->second->obs) + " does not observe at least " +
         index_set_to_string(witness->first->obs) + " of enclosing binder exists " +
         witness->first->prop;
}

QctlHierarchyReport check_hierarchical_qctl(const Qctl& f) {
  QctlHierarchyReport report;
  std::vector<Qctl> enclosing;
  std::function<void(const Qctl&)> walk = [&](const Qctl& g) {
    if (!report.hierarchical) return;
    if (g->kind == QKind::Exists) {
      for (const auto& outer : enclosing) {
        if (!index_subset(outer->obs, g->obs)) {
          report.hierarchical = false;
          report.witness = std::make_pair(outer, g);
          return;
        }
      }
      enclosing.push_back(g);
      walk(g->children[0]);
      enclosing.pop_back();
      return;
    }
    for (const auto& c : g->children) walk(c);
  };
  walk(f);
  return report;
}

bool is_hierarchical_qctl(const Qctl& f) { return check_hierarchical_qctl(f).hierarchical; }

IndexSet observation_index(const Qctl& f, int n) {
  IndexSet acc = index_range(n);
  std::function<void(const Qctl&)> walk = [&](const Qctl& g) {
    if (g->kind == QKind::Exists) acc = index_intersection(acc, g->obs);
    for (const auto& c : g->children) walk(c);
  };
  walk(f);
  return acc;
}

std::vector<Qctl> max_state_subformulas(const Qctl& path) {
  std::vector<Qctl> out;
  std::function<bool(const Qctl&)> constant = [&](const Qctl& g) {
    return g->kind == QKind::True || (g->kind == QKind::Not && constant(g->children[0]));
  };
  std::function<void(const Qctl&)> walk = [&](const Qctl& g) {
    if (constant(g)) return;
    if (g->kind == QKind::Not) return walk(g->children[0]);
    if (g->state) {
      for (const auto& existing : out)
        if (structurally_equal(existing, g)) return;
      out.push_back(g);
      return;
    }
    for (const auto& c : g->children) walk(c);
  };
  walk(path);
  return out;
}

std::vector<Qctl> leaf_state_subformulas(const Qctl& path) {
  std::vector<Qctl> out;
  std::function<void(const Qctl&)> walk = [&](const Qctl& g) {
    if (g->kind == QKind::True) return;
    if (g->kind == QKind::Atom || g->kind == QKind::E || g->kind == QKind::Exists) {
      for (const auto& existing : out)
        if (structurally_equal(existing, g)) return;
      out.push_back(g);
      return;
    }
    for (const auto& c : g->children) walk(c);
  };
  walk(path);
  return out;
}

std::size_t quantifier_count(const Qctl& f) {
  std::size_t n = f->kind == QKind::Exists ? 1 : 0;
  for (const auto& c : f->children) n += quantifier_count(c);
  return n;
}

}  // namespace hiersl
