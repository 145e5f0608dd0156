#include "doctest.h"

#include <map>

#include "hiersl/oracles.hpp"
#include "hiersl/word_automata.hpp"
#include "support.hpp"

using namespace hiersl;

namespace {

const std::vector<std::string> kProps{"a", "b"};

std::vector<Qctl> atoms() { return {q_atom("a"), q_atom("b")}; }

struct Sample {
  Word stem, loop;
};

Sample random_word(test::Rng& rng, std::uint64_t forced = 0) {
  Sample w;
  int ns = gen::uniform(rng, 0, 3), nl = gen::uniform(rng, 1, 3);
  for (int i = 0; i < ns; ++i) w.stem.push_back(gen::uniform(rng, 0, 3) | forced);
  for (int i = 0; i < nl; ++i) w.loop.push_back(gen::uniform(rng, 0, 3) | forced);
  return w;
}

bool semantics(const Qctl& f, const Sample& w) {
  oracle::Lasso l;
  Word all = w.stem;
  all.insert(all.end(), w.loop.begin(), w.loop.end());
  for (std::size_t i = 0; i < all.size(); ++i) (i < w.stem.size() ? l.stem : l.loop).push_back(static_cast<int>(i));
  return oracle::eval_ltl_on_lasso(f, l, [&](const Qctl& atom, int k) {
    return ((all[k] >> (atom->prop == "a" ? 0 : 1)) & 1U) != 0;
  });
}

/// The part of the on-demand tableau reachable under a fixed partial letter.
Npw explore(LtlTableau& t, const Cube& known) {
  Npw n;
  n.atom_names = kProps;
  std::map<int, int> id;
  std::vector<int> work{t.initial()};
  id[t.initial()] = 0;
  n.initial = 0;
  n.color.push_back(t.color(t.initial()));
  n.edges.emplace_back();
  while (!work.empty()) {
    int q = work.back();
    work.pop_back();
    for (const NpwEdge& e : t.edges(q, known)) {
      auto [it, fresh] = id.emplace(e.to, n.size());
      if (fresh) {
        n.color.push_back(t.color(e.to));
        n.edges.emplace_back();
        work.push_back(e.to);
      }
      Cube g = e.guard;
      g.pos |= known.pos;
      g.neg |= known.neg;
      n.edges[id[q]].push_back({g, it->second});
    }
  }
  return n;
}

}  // namespace

TEST_CASE("tableau agrees with lasso semantics") {
  test::Rng rng(11);
  for (int i = 0; i < 150; ++i) {
    Qctl f = test::random_ltl(rng, kProps, gen::uniform(rng, 1, 3));
    Npw n = ltl_to_npw(f, atoms());
    for (int j = 0; j < 12; ++j) {
      Sample w = random_word(rng);
      CAPTURE(to_string(f));
      CHECK(lasso_accepts(n, w.stem, w.loop) == semantics(f, w));
    }
  }
}

TEST_CASE("simplified tableau under a known atom") {
  test::Rng rng(12);
  const Cube a_true{1, 0};
  for (int i = 0; i < 80; ++i) {
    Qctl f = test::random_ltl(rng, kProps, gen::uniform(rng, 1, 3));
    LtlTableau t(f, atoms());
    Npw n = explore(t, a_true);
    for (const auto& es : n.edges)
      for (const NpwEdge& e : es) CHECK((e.guard.neg & 1U) == 0);
    for (int j = 0; j < 8; ++j) {
      Sample w = random_word(rng, 1);
      CAPTURE(to_string(f));
      CHECK(lasso_accepts(n, w.stem, w.loop) == semantics(f, w));
    }
  }
}

TEST_CASE("determinization preserves the language") {
  test::Rng rng(13);
  for (int i = 0; i < 60; ++i) {
    Qctl f = test::random_ltl(rng, kProps, gen::uniform(rng, 1, 3));
    Npw n = ltl_to_npw(f, atoms());
    Dpw d = determinize(n);
    Npw back = dpw_as_npw(d);
    for (const auto& row : d.next) CHECK(row.size() == 4);
    for (int j = 0; j < 12; ++j) {
      Sample w = random_word(rng);
      CAPTURE(to_string(f));
      bool expected = lasso_accepts(n, w.stem, w.loop);
      CHECK(lasso_accepts(d, w.stem, w.loop) == expected);
      CHECK(lasso_accepts(back, w.stem, w.loop) == expected);
    }
  }
}

TEST_CASE("determinization honours its cap") {
  Qctl f = parse_qctl("E (F G a | G F b)")->children[0];
  Npw n = ltl_to_npw(f, atoms());
  CHECK_THROWS_AS(determinize(n, 2), ResourceError);
}

TEST_CASE("state subformulas become pseudo-atoms") {
  Qctl f = parse_qctl("E (E X a U b)")->children[0];
  Npw n = ltl_to_npw(f);
  REQUIRE(n.num_atoms() == 2);
  CHECK(n.atom_names[0] == to_string(parse_qctl("E X a")));
  CHECK(lasso_accepts(n, {1}, {2}));
  CHECK_FALSE(lasso_accepts(n, {0}, {2}));
  CHECK_FALSE(lasso_accepts(n, {}, {1}));
}
