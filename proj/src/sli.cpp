#include "hiersl/sli.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hiersl/cgsi.hpp"
#include "hiersl/lexer.hpp"

namespace hiersl {

namespace {

Sli make(SliKind kind, std::string name, std::string agent, std::string obs,
         std::vector<Sli> children, SourceSpan span) {
  auto node = std::make_shared<SliNode>();
  node->kind = kind;
  node->name = std::move(name);
  node->agent = std::move(agent);
  node->observation = std::move(obs);
  node->children = std::move(children);
  node->span = span;
  return node;
}

}  // namespace

Sli sli_true(SourceSpan span) { return make(SliKind::True, "", "", "", {}, span); }
Sli sli_atom(std::string p, SourceSpan span) {
  return make(SliKind::Atom, std::move(p), "", "", {}, span);
}
Sli sli_not(Sli f, SourceSpan span) {
  return make(SliKind::Not, "", "", "", {std::move(f)}, span);
}
Sli sli_or(Sli a, Sli b, SourceSpan span) {
  return make(SliKind::Or, "", "", "", {std::move(a), std::move(b)}, span);
}
Sli sli_next(Sli f, SourceSpan span) {
  return make(SliKind::Next, "", "", "", {std::move(f)}, span);
}
Sli sli_until(Sli a, Sli b, SourceSpan span) {
  return make(SliKind::Until, "", "", "", {std::move(a), std::move(b)}, span);
}
Sli sli_exists(std::string var, std::string obs, Sli body, SourceSpan span) {
  return make(SliKind::Exists, std::move(var), "", std::move(obs), {std::move(body)}, span);
}
Sli sli_bind(std::string agent, std::string var, Sli body, SourceSpan span) {
  return make(SliKind::Bind, std::move(var), std::move(agent), "", {std::move(body)}, span);
}

Sli sli_and(Sli a, Sli b) { return sli_not(sli_or(sli_not(std::move(a)), sli_not(std::move(b)))); }
Sli sli_implies(Sli a, Sli b) { return sli_or(sli_not(std::move(a)), std::move(b)); }
Sli sli_eventually(Sli f) { return sli_until(sli_true(), std::move(f)); }
Sli sli_globally(Sli f) { return sli_not(sli_eventually(sli_not(std::move(f)))); }
Sli sli_forall(std::string var, std::string obs, Sli body) {
  return sli_not(sli_exists(std::move(var), std::move(obs), sli_not(std::move(body))));
}

std::string to_string(const Sli& f) {
  switch (f->kind) {
    case SliKind::True:
      return "true";
    case SliKind::Atom:
      return quote_identifier(f->name);
    case SliKind::Not:
      return "!" + to_string(f->children[0]);
    case SliKind::Or:
      return "(" + to_string(f->children[0]) + " | " + to_string(f->children[1]) + ")";
    case SliKind::Next:
      return "X " + to_string(f->children[0]);
    case SliKind::Until:
      return "(" + to_string(f->children[0]) + " U " + to_string(f->children[1]) + ")";
    case SliKind::Exists:
      return "<<" + quote_identifier(f->name) + ":" + quote_identifier(f->observation) +
             ">> " + to_string(f->children[0]);
    case SliKind::Bind:
      return "(" + quote_identifier(f->agent) + "," + quote_identifier(f->name) + ") " +
             to_string(f->children[0]);
  }
  return "?";
}

bool structurally_equal(const Sli& a, const Sli& b) {
  if (a->kind != b->kind || a->name != b->name || a->agent != b->agent ||
      a->observation != b->observation || a->children.size() != b->children.size())
    return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!structurally_equal(a->children[i], b->children[i])) return false;
  return true;
}

std::size_t formula_size(const Sli& f) {
  std::size_t n = 1;
  for (const auto& c : f->children) n += formula_size(c);
  return n;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

bool is_keyword(const Token& t) {
  static const char* kKeywords[] = {"X", "U", "F", "G", "true", "false", "E", "A",
                                    "exists", "forall"};
  if (t.kind != TokenKind::Ident || t.quoted) return false;
  return std::any_of(std::begin(kKeywords), std::end(kKeywords),
                     [&](const char* k) { return t.text == k; });
}

bool declared(const std::vector<std::string>& list, const std::string& name) {
  return list.empty() || std::find(list.begin(), list.end(), name) != list.end();
}

class SliParser {
 public:
  SliParser(std::string_view text, const SliSignature* sig) : cur_(tokenize(text)), sig_(sig) {}

  Sli parse() {
    Sli f = parse_iff();
    if (!cur_.at_end()) cur_.fail("unexpected token");
    return f;
  }

 private:
  Sli parse_iff() {
    Sli lhs = parse_impl();
    while (cur_.at_symbol("<->")) {
      cur_.next();
      Sli rhs = parse_impl();
      lhs = sli_and(sli_implies(lhs, rhs), sli_implies(rhs, lhs));
    }
    return lhs;
  }

  Sli parse_impl() {
    Sli lhs = parse_or();
    if (cur_.at_symbol("->")) {
      cur_.next();
      return sli_implies(lhs, parse_impl());
    }
    return lhs;
  }

  Sli parse_or() {
    Sli lhs = parse_and();
    while (cur_.at_symbol("|")) {
      SourceSpan sp = cur_.next().span;
      lhs = sli_or(lhs, parse_and(), sp);
    }
    return lhs;
  }

  Sli parse_and() {
    Sli lhs = parse_until();
    while (cur_.at_symbol("&")) {
      cur_.next();
      lhs = sli_and(lhs, parse_until());
    }
    return lhs;
  }

  Sli parse_until() {
    Sli lhs = parse_unary();
    if (cur_.at_keyword("U")) {
      SourceSpan sp = cur_.next().span;
      return sli_until(lhs, parse_until(), sp);
    }
    return lhs;
  }

  std::string ident(std::string_view what, const std::vector<std::string>* list) {
    const Token& t = cur_.peek();
    if (t.kind != TokenKind::Ident || is_keyword(t)) cur_.fail("expected " + std::string(what));
    if (list && !declared(*list, t.text))
      throw ParseError("unknown " + std::string(what) + " '" + t.text + "'", t.span);
    return cur_.next().text;
  }

  Sli parse_unary() {
    const Token& t = cur_.peek();
    SourceSpan sp = t.span;
    if (cur_.at_symbol("!")) {
      cur_.next();
      return sli_not(parse_unary(), sp);
    }
    if (cur_.at_keyword("X")) {
      cur_.next();
      return sli_next(parse_unary(), sp);
    }
    if (cur_.at_keyword("F")) {
      cur_.next();
      return sli_until(sli_true(sp), parse_unary(), sp);
    }
    if (cur_.at_keyword("G")) {
      cur_.next();
      return sli_not(sli_until(sli_true(sp), sli_not(parse_unary()), sp), sp);
    }
    if (cur_.at_symbol("<<") || cur_.at_symbol("[[")) {
      bool universal = cur_.at_symbol("[[");
      cur_.next();
      std::string var = ident("variable", sig_ ? &sig_->variables : nullptr);
      cur_.expect_symbol(":");
      std::string obs = ident("observation", sig_ ? &sig_->observations : nullptr);
      cur_.expect_symbol(universal ? "]]" : ">>");
      Sli body = parse_unary();
      if (universal) return sli_not(sli_exists(var, obs, sli_not(body), sp), sp);
      return sli_exists(var, obs, body, sp);
    }
    if (cur_.at_symbol("(")) {
      if (cur_.peek(1).kind == TokenKind::Ident && cur_.at_symbol(",", 2)) {
        cur_.next();
        std::string agent = ident("agent", sig_ ? &sig_->agents : nullptr);
        cur_.expect_symbol(",");
        std::string var = ident("variable", sig_ ? &sig_->variables : nullptr);
        cur_.expect_symbol(")");
        return sli_bind(agent, var, parse_unary(), sp);
      }
      cur_.next();
      Sli inner = parse_iff();
      cur_.expect_symbol(")");
      return inner;
    }
    if (cur_.at_keyword("true")) {
      cur_.next();
      return sli_true(sp);
    }
    if (cur_.at_keyword("false")) {
      cur_.next();
      return sli_not(sli_true(sp), sp);
    }
    if (t.kind == TokenKind::Ident && !is_keyword(t)) {
      std::string p = ident("proposition", sig_ ? &sig_->propositions : nullptr);
      return sli_atom(p, sp);
    }
    cur_.fail("expected formula");
  }

  TokenCursor cur_;
  const SliSignature* sig_;
};

}  // namespace

Sli parse_sli(std::string_view text, const SliSignature* signature) {
  return SliParser(text, signature).parse();
}

// ---------------------------------------------------------------------------
// Free symbols

namespace {

FreeSet free_rec(const Sli& f, const std::vector<std::string>& agents) {
  FreeSet out;
  switch (f->kind) {
    case SliKind::True:
    case SliKind::Atom:
      return out;
    case SliKind::Not:
      return free_rec(f->children[0], agents);
    case SliKind::Or:
    case SliKind::Until:
    case SliKind::Next: {
      for (const auto& c : f->children) {
        FreeSet sub = free_rec(c, agents);
        out.variables.insert(sub.variables.begin(), sub.variables.end());
        out.agents.insert(sub.agents.begin(), sub.agents.end());
      }
      if (f->kind != SliKind::Or) out.agents.insert(agents.begin(), agents.end());
      return out;
    }
    case SliKind::Exists:
      out = free_rec(f->children[0], agents);
      out.variables.erase(f->name);
      return out;
    case SliKind::Bind:
      out = free_rec(f->children[0], agents);
      out.agents.erase(f->agent);
      out.variables.insert(f->name);
      return out;
  }
  return out;
}

}  // namespace

FreeSet free_symbols(const Sli& f, const std::vector<std::string>& agents) {
  return free_rec(f, agents);
}

bool is_sentence(const Sli& f, const std::vector<std::string>& agents) {
  return free_symbols(f, agents).empty();
}

// ---------------------------------------------------------------------------
// Hierarchy

std::string HierarchyReport::describe() const {
  if (hierarchical || !witness) return "hierarchical";
  const auto& [outer, inner] = *witness;
  return "quantifier <<" + inner.variable + ":" + inner.observation + ">> at " +
         inner.span.to_string() + " is not finer than enclosing <<" + outer.variable + ":" +
         outer.observation + ">> at " + outer.span.to_string();
}

std::vector<QuantifierRef> quantifiers(const Sli& f) {
  std::vector<QuantifierRef> out;
  std::function<void(const Sli&)> walk = [&](const Sli& g) {
    if (g->kind == SliKind::Exists) out.push_back({g->name, g->observation, g->span});
    for (const auto& c : g->children) walk(c);
  };
  walk(f);
  return out;
}

HierarchyReport is_hierarchical_instance(const Sli& f, const Cgsi& game) {
  // Inclusion table over observation symbols, computed once.
  const auto& names = game.observation_names();
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
  std::vector<std::vector<bool>> finer(names.size(), std::vector<bool>(names.size()));
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < names.size(); ++j)
      finer[i][j] = game.finer(names[i], names[j]);

  HierarchyReport report;
  // Enclosing quantifiers, one representative per distinct observation symbol.
  std::vector<std::pair<int, QuantifierRef>> enclosing;
  std::function<void(const Sli&)> walk = [&](const Sli& g) {
    if (!report.hierarchical) return;
    if (g->kind == SliKind::Exists) {
      auto it = index.find(g->observation);
      if (it == index.end()) throw Error("unknown observation symbol '" + g->observation + "'");
      QuantifierRef here{g->name, g->observation, g->span};
      for (const auto& [o, ref] : enclosing) {
        if (!finer[it->second][o]) {
          report.hierarchical = false;
          report.witness = std::make_pair(ref, here);
          return;
        }
      }
      bool seen = std::any_of(enclosing.begin(), enclosing.end(),
                              [&](const auto& e) { return e.first == it->second; });
      if (!seen) enclosing.emplace_back(it->second, here);
      walk(g->children[0]);
      if (!seen) enclosing.pop_back();
      return;
    }
    for (const auto& c : g->children) walk(c);
  };
  walk(f);
  return report;
}

}  // namespace hiersl
