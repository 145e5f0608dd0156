#include <map>
#include <optional>

#include "hiersl/oracles.hpp"

namespace hiersl::oracle {

namespace {

bool has_strategic(const Sli& f) {
  if (f->kind == SliKind::Exists || f->kind == SliKind::Bind) return true;
  for (const auto& c : f->children)
    if (has_strategic(c)) return true;
  return false;
}

// Steps to the next strategy of the given shape; false after the last one.
bool advance(Strategy& s, int actions) {
  for (auto& row : s.action)
    for (int& a : row) {
      if (++a < actions) return true;
      a = 0;
    }
  for (auto& row : s.update)
    for (int& u : row) {
      if (++u < s.memory) return true;
      u = 0;
    }
  return false;
}

class BoundedEval {
 public:
  BoundedEval(const Cgsi& g, int memory) : g_(g), memory_(memory) {}

  Tri eval(const Sli& f) {
    switch (f->kind) {
      case SliKind::True: return Tri::True;
      case SliKind::Atom: return g_.has_label(g_.initial, f->name) ? Tri::True : Tri::False;
      case SliKind::Not: {
        Tri t = eval(f->children[0]);
        return t == Tri::Unknown ? t : (t == Tri::True ? Tri::False : Tri::True);
      }
      case SliKind::Or: {
        Tri a = eval(f->children[0]);
        if (a == Tri::True) return a;
        Tri b = eval(f->children[1]);
        if (b == Tri::True) return b;
        return a == Tri::Unknown || b == Tri::Unknown ? Tri::Unknown : Tri::False;
      }
      case SliKind::Exists: {
        int o = g_.observation_index(f->observation);
        if (o < 0) throw Error("unknown observation " + f->observation);
        Strategy s;
        s.memory = memory_;
        s.observation = o;
        int classes = class_count(g_, o);
        s.action.assign(memory_, std::vector<int>(classes, 0));
        s.update.assign(memory_, std::vector<int>(classes, 0));
        auto saved = vars_.find(f->name) == vars_.end() ? std::optional<Strategy>() : vars_[f->name];
        Tri result = Tri::False;
        do {
          vars_[f->name] = s;
          Tri t = eval(f->children[0]);
          if (t == Tri::True) {
            result = t;
            break;
          }
          if (t == Tri::Unknown) result = t;
        } while (advance(s, g_.num_actions()));
        if (saved) vars_[f->name] = *saved;
        else vars_.erase(f->name);
        return result;
      }
      case SliKind::Bind: {
        auto saved = binding_.find(f->agent) == binding_.end() ? std::optional<std::string>() : binding_[f->agent];
        binding_[f->agent] = f->name;
        Tri t = eval(f->children[0]);
        if (saved) binding_[f->agent] = *saved;
        else binding_.erase(f->agent);
        return t;
      }
      case SliKind::Next:
      case SliKind::Until: {
        if (has_strategic(f)) return Tri::Unknown;
        std::vector<Strategy> profile;
        for (const auto& a : g_.agents) {
          auto it = binding_.find(a);
          if (it == binding_.end()) return Tri::Unknown;
          auto v = vars_.find(it->second);
          if (v == vars_.end()) return Tri::Unknown;
          profile.push_back(v->second);
        }
        Lasso l = outcome(profile, {g_.initial}, g_);
        return eval_ltl_on_lasso(f, l, g_) ? Tri::True : Tri::False;
      }
    }
    throw Error("unknown formula kind");
  }

 private:
  const Cgsi& g_;
  int memory_;
  std::map<std::string, Strategy> vars_;
  std::map<std::string, std::string> binding_;
};

}  // namespace

Tri bounded_sli_eval(const Sli& phi, const Cgsi& g, int memory) {
  if (memory < 1) throw Error("memory bound must be positive");
  return BoundedEval(g, memory).eval(phi);
}

}  // namespace hiersl::oracle
