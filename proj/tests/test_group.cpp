#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <queue>
#include <random>
#include <set>

#include "sepdef/group.hpp"

using namespace sepdef;

namespace {

// independent shortest-word oracle: BFS in the Cayley graph of the adjacent
// transpositions
std::map<Perm, int> bfs_lengths(int n) {
  std::map<Perm, int> dist;
  std::queue<Perm> q;
  Perm id = perm_identity(n);
  dist[id] = 0;
  q.push(id);
  while (!q.empty()) {
    Perm p = q.front();
    q.pop();
    for (int i = 1; i < n; ++i) {
      Perm r = perm_mul(p, adjacent(n, i));
      if (dist.emplace(r, dist[p] + 1).second) q.push(r);
    }
  }
  return dist;
}

Perm random_perm(std::mt19937& rng, int n) {
  Perm p = perm_identity(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("coxeter length equals the Cayley-graph distance") {
  CHECK(coxeter_length(perm_identity(4)) == 0);
  CHECK(coxeter_length(adjacent(3, 1)) == 1);
  CHECK(coxeter_length(Perm{3, 2, 1}) == 3);  // longest element of S3
  for (int n : {3, 4, 5}) {
    auto dist = bfs_lengths(n);
    for (const auto& [p, d] : dist) CHECK(coxeter_length(p) == d);
  }
}

TEST_CASE("reduced words remultiply to their permutation") {
  CHECK(reduced_word(perm_identity(3)).empty());

  Perm w13 = transposition(3, 1, 3);
  auto word = reduced_word(w13);
  CHECK(word.size() == 3);
  CHECK(perm_from_word(3, word) == w13);

  Perm longest4{4, 3, 2, 1};
  CHECK(reduced_word(longest4).size() == 6);
  CHECK(perm_from_word(4, reduced_word(longest4)) == longest4);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Perm w = random_perm(rng, n);
    auto wd = reduced_word(w);
    CHECK(static_cast<int>(wd.size()) == coxeter_length(w));
    CHECK(perm_from_word(n, wd) == w);
  }
}

TEST_CASE("group axioms hold in every constructed group") {
  std::vector<Group> groups = {Group::cyclic(4),   Group::cyclic(7),
                               Group::dihedral(3), Group::dihedral(5),
                               Group::symmetric(3), Group::symmetric(4),
                               Group::weyl_b(2),   Group::weyl_b(3),
                               Group::weyl_d(2),   Group::weyl_d(3),
                               Group::weyl_d(4)};
  std::mt19937 rng(9);
  for (const auto& G : groups) {
    CAPTURE(G.name);
    CHECK(G.id.is_identity());
    for (const auto& g : G.elements) {
      CHECK(G.id * g == g);
      CHECK(g * G.id == g);
      CHECK((g * g.inverse()).is_identity());
      CHECK(G.contains(g.inverse()));
    }
    bool small = G.order() <= 1000;
    if (small) {
      for (const auto& a : G.elements)
        for (const auto& b : G.elements) CHECK(G.contains(a * b));
    }
    for (int trial = 0; trial < 50; ++trial) {
      const auto& a = G.elements[rng() % G.order()];
      const auto& b = G.elements[rng() % G.order()];
      const auto& c = G.elements[rng() % G.order()];
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("group orders match the classical formulas") {
  CHECK(Group::cyclic(6).order() == 6);
  CHECK(Group::dihedral(4).order() == 8);
  CHECK(Group::symmetric(5).order() == 120);
  CHECK(Group::weyl_b(2).order() == 8);
  CHECK(Group::weyl_b(3).order() == 48);
  CHECK(Group::weyl_b(4).order() == 384);
  CHECK(Group::weyl_d(3).order() == 24);
  CHECK(Group::weyl_d(4).order() == 192);
  CHECK(Group::weyl_d(5).order() == 1920);
}

TEST_CASE("weyl D consists of the even-sign elements") {
  Group D = Group::weyl_d(3);
  Group B = Group::weyl_b(3);
  size_t even = 0;
  for (const auto& g : B.elements) {
    int s = 0;
    for (int v : g.comp) s += v;
    if (s % 2 == 0) {
      ++even;
      CHECK(D.contains(g));
    }
  }
  CHECK(even == D.order());
}

TEST_CASE("conjugacy class counts") {
  CHECK(conjugacy_classes(Group::symmetric(3)).size() == 3);
  CHECK(conjugacy_classes(Group::cyclic(4)).size() == 4);
  CHECK(conjugacy_classes(Group::weyl_b(2)).size() == 5);
  // class equation: sizes sum to the group order
  for (const Group& G : {Group::symmetric(4), Group::weyl_d(3)}) {
    size_t total = 0;
    for (const auto& cls : conjugacy_classes(G)) total += cls.size();
    CHECK(total == G.order());
  }
}

TEST_CASE("orbit-stabilizer on the natural actions") {
  Group S3 = Group::symmetric(3);
  auto trivial = [](const GroupElement&, const int& x) { return x; };
  auto od = orbit_stabilizer<int>(S3, trivial, 7);
  CHECK(od.orbit.size() == 1);
  CHECK(od.stabilizer.size() == S3.order());

  auto natural = [](const GroupElement& g, const int& x) { return g.perm[x - 1]; };
  auto od2 = orbit_stabilizer<int>(S3, natural, 1);
  CHECK(od2.orbit.size() == 3);
  CHECK(od2.stabilizer.size() == 2);

  // a non-homomorphism is rejected
  auto bogus = [](const GroupElement& g, const int& x) {
    return g.is_identity() ? x : (x % 3) + 1;
  };
  CHECK_THROWS_AS(orbit_stabilizer<int>(S3, bogus, 1), std::invalid_argument);
}

TEST_CASE("bit-string operators: defining examples") {
  CHECK(bitflip_operator(2, 2, "00") == "00");
  CHECK(bitflip_operator(2, 2, "01") == "11");
  CHECK(bitflip_operator(2, 1, "10") == "11");
  CHECK(bitflip_operator(3, 4, "101") == "101");  // i = n+1 is the identity
  CHECK(bitswap_operator(1, "10") == "01");
}

TEST_CASE("bit-string action is a homomorphism, faithful for n >= 2") {
  auto c1 = bitaction_verify(1);
  CHECK(c1.homomorphism);
  CHECK_FALSE(c1.faithful);
  for (int n = 2; n <= 10; ++n) {
    auto c = bitaction_verify(n);
    CAPTURE(n);
    CHECK(c.homomorphism);
    CHECK(c.faithful);
  }
}

TEST_CASE("bit-string action composes along arbitrary permutations") {
  // image of w computed through reduced words agrees with generator-by-
  // generator application, exhaustively over S_4 acting on 3-bit strings
  int n = 3;
  auto strings = all_bitstrings(n);
  for (const auto& w : all_perms(n + 1)) {
    for (const auto& v : all_perms(n + 1)) {
      Perm wv = perm_mul(w, v);
      for (const auto& s : strings)
        CHECK(bitaction_apply(n, wv, s) ==
              bitaction_apply(n, w, bitaction_apply(n, v, s)));
    }
  }
}

TEST_CASE("orbits of the bit-string action of S_4") {
  Group S4 = Group::symmetric(4);
  auto act = [](const GroupElement& g, const std::string& s) {
    return bitaction_apply(3, g.perm, s);
  };
  auto mid = orbit_stabilizer<std::string>(S4, act, std::string("110"));
  CHECK(mid.orbit.size() == 3);  // middle orbit, size C(3,1)
  CHECK(mid.stabilizer.size() == 8);
  auto od = orbit_stabilizer<std::string>(S4, act, std::string("001"));
  CHECK(od.orbit.size() == 4);  // size C(4,3)
  CHECK(od.stabilizer.size() == 6);
  auto fixed = orbit_stabilizer<std::string>(S4, act, std::string("000"));
  CHECK(fixed.orbit.size() == 1);
  CHECK(fixed.stabilizer.size() == 24);
}

TEST_CASE("group generated with single-entry complements has order 2^n (n+1)!") {
  // The swap/flip generators extended by the single-entry complement
  // operators generate the affine extension of the S_{n+1} image by the
  // translations of F_2^n. Its order is 2^n (n+1)!; only for n = 2 does this
  // exhaust the full symmetric group on the 2^n strings (for n >= 3 every
  // generator is an even permutation of the strings, so it cannot).
  for (int n : {2, 3, 4}) {
    int N = 1 << n;
    auto strings = all_bitstrings(n);
    std::map<std::string, int> sidx;
    for (int k = 0; k < N; ++k) sidx[strings[k]] = k;
    using P = std::vector<int>;
    std::vector<P> gens;
    auto img = [&](auto&& f) {
      P p(N);
      for (int k = 0; k < N; ++k) p[k] = sidx[f(strings[k])];
      return p;
    };
    for (int i = 1; i < n; ++i)
      gens.push_back(img([&](std::string s) { return bitswap_operator(i, s); }));
    gens.push_back(img([&](std::string s) { return bitflip_operator(n, n, s); }));
    for (int i = 1; i <= n; ++i)
      gens.push_back(img([&](std::string s) {
        s[i - 1] = s[i - 1] == '0' ? '1' : '0';
        return s;
      }));
    std::set<P> seen(gens.begin(), gens.end());
    std::queue<P> q;
    for (const auto& g : gens) q.push(g);
    while (!q.empty()) {
      P x = q.front();
      q.pop();
      for (const auto& g : gens) {
        P y(N);
        for (int k = 0; k < N; ++k) y[k] = g[x[k]];
        if (seen.insert(y).second) q.push(y);
      }
    }
    size_t expect = 1u << n;
    for (int j = 2; j <= n + 1; ++j) expect *= j;
    CAPTURE(n);
    CHECK(seen.size() == expect);
  }
}
