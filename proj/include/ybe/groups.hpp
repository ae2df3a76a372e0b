// Small stock of concrete groups used by tests, demos and the CLI.
#pragma once

#include <map>

#include "core.hpp"

namespace ybe {
inline namespace core_tables {

inline GroupTable cyclic(int n) {
  BinOpTable t(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.at(a, b) = (a + b) % n;
  return is_group(t).value();
}

// Z2 x Z2 with index = 2*x + y; the table is bitwise xor.
inline GroupTable klein4() {
  BinOpTable t(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t.at(a, b) = a ^ b;
  return is_group(t).value();
}

// Builds the multiplication table of a set of permutations closed under
// composition, indexed by lexicographic order of their image tuples.
inline GroupTable permutation_group(std::vector<Permutation> elems) {
  std::sort(elems.begin(), elems.end(),
            [](const Permutation& p, const Permutation& q) { return p.img < q.img; });
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i].img] = int(i);
  BinOpTable t(int(elems.size()));
  for (size_t a = 0; a < elems.size(); ++a)
    for (size_t b = 0; b < elems.size(); ++b) {
      auto it = index.find((elems[a] * elems[b]).img);
      if (it == index.end())
        throw std::invalid_argument("permutation_group: set not closed");
      t.at(int(a), int(b)) = it->second;
    }
  auto g = is_group(t);
  if (!g) throw std::invalid_argument("permutation_group: not a group");
  return *g;
}

inline std::vector<Permutation> closure(std::vector<Permutation> gens) {
  std::vector<Permutation> elems{Permutation::identity(gens.at(0).n())};
  for (size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Permutation p = elems[i] * g;
      if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(p);
    }
  return elems;
}

// All 6 permutations of {0,1,2}; composition (p*q)(x) = p(q(x)).
inline GroupTable sym3() {
  return permutation_group(closure({Permutation({1, 0, 2}), Permutation({0, 2, 1})}));
}

inline GroupTable alt4() {
  return permutation_group(closure({Permutation({1, 0, 3, 2}), Permutation({1, 2, 0, 3})}));
}

// Dihedral group of order 2n; index = reflection*n + rotation.
inline GroupTable dihedral(int n) {
  BinOpTable t(2 * n);
  auto idx = [n](int rot, int ref) { return ref * n + ((rot % n) + n) % n; };
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b) {
      int ra = a % n, fa = a / n, rb = b % n, fb = b / n;
      // (r^ra s^fa)(r^rb s^fb) = r^(ra + rb*(-1)^fa) s^(fa xor fb)
      t.at(a, b) = idx(fa ? ra - rb : ra + rb, fa ^ fb);
    }
  return is_group(t).value();
}

// Quaternions {1,-1,i,-i,j,-j,k,-k}; index = 2*basis + sign.
inline GroupTable quaternion8() {
  // basis 0..3 = 1,i,j,k;  table of (sign, basis) products
  static const int basis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign_mul[a][b] = 1 iff basis_a * basis_b = -basis_mul[a][b]:
  //   i*i = j*j = k*k = -1, i*j = k, j*k = i, k*i = j, j*i = -k, k*j = -i, i*k = -j
  BinOpTable t(8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ba = a / 2, sa = a % 2, bb = b / 2, sb = b % 2;
      int bc = basis_mul[ba][bb];
      int sc = (sa ^ sb) ^ sign_mul[ba][bb];
      t.at(a, b) = 2 * bc + sc;
    }
  return is_group(t).value();
}

inline GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  BinOpTable t(g.n() * h.n());
  auto idx = [&](int a, int b) { return a * h.n() + b; };
  for (int a = 0; a < g.n(); ++a)
    for (int b = 0; b < h.n(); ++b)
      for (int c = 0; c < g.n(); ++c)
        for (int d = 0; d < h.n(); ++d)
          t.at(idx(a, b), idx(c, d)) = idx(g.mul(a, c), h.mul(b, d));
  return is_group(t).value();
}

// The fixed corpus used throughout the test suite: all named groups of
// order <= 8 that the order-formula checks run against.
inline std::vector<std::pair<std::string, GroupTable>> group_corpus() {
  std::vector<std::pair<std::string, GroupTable>> v;
  for (int n = 2; n <= 8; ++n) v.emplace_back("z" + std::to_string(n), cyclic(n));
  v.emplace_back("v4", klein4());
  v.emplace_back("s3", sym3());
  v.emplace_back("d4", dihedral(4));
  v.emplace_back("q8", quaternion8());
  return v;
}

} // inline namespace core_tables
} // namespace ybe
