// Dense finite binary operation tables and the handful of group-theoretic
// quantities everything else is built on.  Elements are always indices
// 0..n-1; pretty names live in the serialization layer only.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ybe {
inline namespace core_tables {

// ---------------------------------------------------------------------------
// failure reporting

struct AxiomResult {
  std::string axiom;
  bool ok = true;
  std::vector<int> witness; // minimal (lexicographically first) counterexample
};

struct VerifyReport {
  std::vector<AxiomResult> axioms;

  bool ok() const {
    return std::all_of(axioms.begin(), axioms.end(),
                       [](const AxiomResult& a) { return a.ok; });
  }
  const AxiomResult* first_failure() const {
    for (const auto& a : axioms)
      if (!a.ok) return &a;
    return nullptr;
  }
  void add(std::string axiom, bool okflag, std::vector<int> wit = {}) {
    axioms.push_back({std::move(axiom), okflag, std::move(wit)});
  }
};

inline std::string describe(const AxiomResult& a) {
  std::string s = a.axiom + (a.ok ? ": ok" : ": FAIL");
  if (!a.ok && !a.witness.empty()) {
    s += " at (";
    for (size_t i = 0; i < a.witness.size(); ++i)
      s += (i ? "," : "") + std::to_string(a.witness[i]);
    s += ")";
  }
  return s;
}

struct VerificationError : std::runtime_error {
  VerifyReport report;
  explicit VerificationError(VerifyReport r)
      : std::runtime_error(r.first_failure() ? describe(*r.first_failure())
                                             : "verification failed"),
        report(std::move(r)) {}
};

// ---------------------------------------------------------------------------
// tables

struct BinOpTable {
  int n = 0;
  std::vector<int> cells; // row-major, cells[a*n+b] = a*b

  BinOpTable() = default;
  explicit BinOpTable(int n_, int fill = 0) : n(n_), cells(size_t(n_) * n_, fill) {}

  static BinOpTable from_rows(const std::vector<std::vector<int>>& rows) {
    BinOpTable t(int(rows.size()));
    for (int a = 0; a < t.n; ++a) {
      if (int(rows[a].size()) != t.n)
        throw std::invalid_argument("table is not square");
      for (int b = 0; b < t.n; ++b) t.at(a, b) = rows[a][b];
    }
    return t;
  }

  int operator()(int a, int b) const { return cells[size_t(a) * n + b]; }
  int& at(int a, int b) { return cells[size_t(a) * n + b]; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> r(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) r[a][b] = (*this)(a, b);
    return r;
  }

  // all entries inside 0..n-1?
  std::optional<std::vector<int>> range_witness() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if ((*this)(a, b) < 0 || (*this)(a, b) >= n)
          return std::vector<int>{a, b};
    return std::nullopt;
  }

  std::vector<int> row(int a) const {
    return {cells.begin() + size_t(a) * n, cells.begin() + size_t(a + 1) * n};
  }
  std::vector<int> column(int b) const {
    std::vector<int> c(n);
    for (int a = 0; a < n; ++a) c[a] = (*this)(a, b);
    return c;
  }

  bool operator==(const BinOpTable&) const = default;
};

// ---------------------------------------------------------------------------
// permutations and generic self-maps

inline bool is_permutation(const std::vector<int>& f) {
  const int n = int(f.size());
  std::vector<char> seen(n, 0);
  for (int v : f) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

struct Permutation {
  std::vector<int> img;

  Permutation() = default;
  explicit Permutation(std::vector<int> im) : img(std::move(im)) {
    if (!is_permutation(img)) throw std::invalid_argument("not a permutation");
  }
  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  int n() const { return int(img.size()); }
  int operator()(int x) const { return img[x]; }
  bool is_identity() const {
    for (int i = 0; i < n(); ++i)
      if (img[i] != i) return false;
    return true;
  }
  Permutation inverse() const {
    std::vector<int> v(img.size());
    for (int i = 0; i < n(); ++i) v[img[i]] = i;
    Permutation p;
    p.img = std::move(v);
    return p;
  }
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    // (p*q)(x) = p(q(x))
    std::vector<int> v(q.img.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = p.img[q.img[i]];
    Permutation r;
    r.img = std::move(v);
    return r;
  }
  Permutation power(long long k) const {
    Permutation acc = identity(n()), base = k >= 0 ? *this : inverse();
    unsigned long long e = k >= 0 ? (unsigned long long)k : (unsigned long long)(-k);
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }
  bool operator==(const Permutation&) const = default;
};

inline std::vector<long long> cycle_type(const Permutation& p) {
  std::vector<char> seen(p.n(), 0);
  std::vector<long long> lens;
  for (int i = 0; i < p.n(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = p(j)) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

inline long long permutation_order(const Permutation& p) {
  long long o = 1;
  for (long long len : cycle_type(p)) o = std::lcm(o, len);
  return o;
}

// Least k >= 1 with f^k = id, or nullopt if none exists within `bound`
// iterations (which subsumes the non-bijective case, where no k works).
inline std::optional<long long> map_order(const std::vector<int>& f, long long bound) {
  const size_t m = f.size();
  std::vector<int> cur = f;
  auto is_id = [&](const std::vector<int>& g) {
    for (size_t i = 0; i < m; ++i)
      if (g[i] != int(i)) return false;
    return true;
  };
  for (long long k = 1; k <= bound; ++k) {
    if (is_id(cur)) return k;
    std::vector<int> nxt(m);
    for (size_t i = 0; i < m; ++i) nxt[i] = f[cur[i]];
    cur = std::move(nxt);
  }
  return std::nullopt;
}

inline std::vector<int> compose_maps(const std::vector<int>& f, const std::vector<int>& g) {
  // x -> f(g(x))
  std::vector<int> r(g.size());
  for (size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
  return r;
}

// ---------------------------------------------------------------------------
// semigroup / group predicates

inline std::optional<std::array<int, 3>> associativity_witness(const BinOpTable& t) {
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b)
      for (int c = 0; c < t.n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c))) return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

inline bool is_associative(const BinOpTable& t) {
  return !t.range_witness() && !associativity_witness(t);
}

struct GroupTable {
  BinOpTable op;
  int identity = 0;
  std::vector<int> inverse;

  int n() const { return op.n; }
  int mul(int a, int b) const { return op(a, b); }
  int inv(int a) const { return inverse[a]; }
};

// Returns the witnessing GroupTable when t is a group table, nullopt otherwise.
inline std::optional<GroupTable> is_group(const BinOpTable& t) {
  if (t.n == 0 || t.range_witness() || associativity_witness(t)) return std::nullopt;
  int e = -1;
  for (int cand = 0; cand < t.n; ++cand) {
    bool good = true;
    for (int a = 0; a < t.n && good; ++a)
      good = t(cand, a) == a && t(a, cand) == a;
    if (good) {
      e = cand;
      break;
    }
  }
  if (e < 0) return std::nullopt;
  std::vector<int> inv(t.n, -1);
  for (int a = 0; a < t.n; ++a) {
    for (int b = 0; b < t.n; ++b)
      if (t(a, b) == e && t(b, a) == e) {
        inv[a] = b;
        break;
      }
    if (inv[a] < 0) return std::nullopt;
  }
  return GroupTable{t, e, std::move(inv)};
}

// Right group: associative and every left translation x -> a*x is bijective.
// Equivalently a*x = b has a unique solution x for all a, b.
inline bool is_right_group(const BinOpTable& t) {
  if (t.range_witness() || associativity_witness(t))
    throw std::invalid_argument("is_right_group: operation is not associative");
  for (int a = 0; a < t.n; ++a)
    if (!is_permutation(t.row(a))) return false;
  return true;
}

// Left group: associative and every right translation x -> x*a is bijective.
inline bool is_left_group(const BinOpTable& t) {
  if (t.range_witness() || associativity_witness(t))
    throw std::invalid_argument("is_left_group: operation is not associative");
  for (int b = 0; b < t.n; ++b)
    if (!is_permutation(t.column(b))) return false;
  return true;
}

inline std::vector<int> idempotents(const BinOpTable& t) {
  std::vector<int> r;
  for (int a = 0; a < t.n; ++a)
    if (t(a, a) == a) r.push_back(a);
  return r;
}

inline std::vector<int> center(const GroupTable& g) {
  std::vector<int> z;
  for (int a = 0; a < g.n(); ++a) {
    bool central = true;
    for (int b = 0; b < g.n() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

inline long long element_order(const GroupTable& g, int a) {
  long long k = 1;
  int x = a;
  while (x != g.identity) {
    x = g.mul(x, a);
    ++k;
  }
  return k;
}

inline long long exponent(const GroupTable& g) {
  long long e = 1;
  for (int a = 0; a < g.n(); ++a) e = std::lcm(e, element_order(g, a));
  return e;
}

// Coset table of G modulo a (normal) subgroup given as a sorted index list.
inline GroupTable quotient_group(const GroupTable& g, const std::vector<int>& normal) {
  std::vector<int> rep(g.n());
  for (int a = 0; a < g.n(); ++a) {
    int r = g.n();
    for (int z : normal) r = std::min(r, g.mul(a, z));
    rep[a] = r;
  }
  std::vector<int> reps;
  for (int a = 0; a < g.n(); ++a)
    if (rep[a] == a) reps.push_back(a);
  auto pos = [&](int r) {
    return int(std::lower_bound(reps.begin(), reps.end(), r) - reps.begin());
  };
  BinOpTable q(int(reps.size()));
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = 0; j < reps.size(); ++j)
      q.at(int(i), int(j)) = pos(rep[g.mul(reps[i], reps[j])]);
  auto grp = is_group(q);
  if (!grp) throw std::invalid_argument("quotient_group: subgroup is not normal");
  return *grp;
}

// exponent of G / Z(G), computed on the quotient's coset table
inline long long quotient_exponent(const GroupTable& g) {
  return exponent(quotient_group(g, center(g)));
}

inline long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

} // inline namespace core_tables
} // namespace ybe
