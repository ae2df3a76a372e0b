// Set-theoretic Yang-Baxter maps r(a,b) = (lambda_a(b), rho_b(a)) on a finite
// carrier, their derived shelves, twists, and comparison invariants.
#pragma once

#include "shelf.hpp"

namespace ybe {
inline namespace solution {

struct SolutionTable {
  int n = 0;
  BinOpTable lambda; // lambda(a,b) = lambda_a(b)
  BinOpTable rho;    // rho(b,a)   = rho_b(a)

  std::pair<int, int> apply(int a, int b) const { return {lambda(a, b), rho(b, a)}; }

  // r as a self-map of pairs, pair (a,b) encoded as a*n+b
  std::vector<int> as_pair_map() const {
    std::vector<int> m(size_t(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) m[size_t(a) * n + b] = lambda(a, b) * n + rho(b, a);
    return m;
  }
  bool operator==(const SolutionTable&) const = default;
};

inline SolutionTable make_solution(const BinOpTable& lambda, const BinOpTable& rho) {
  if (lambda.n != rho.n || lambda.n == 0)
    throw std::invalid_argument("solution tables must share a nonempty carrier");
  if (lambda.range_witness() || rho.range_witness())
    throw std::invalid_argument("solution table entries out of range");
  return SolutionTable{lambda.n, lambda, rho};
}

inline SolutionTable flip_solution(int n) {
  BinOpTable lambda(n), rho(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      lambda.at(a, b) = b;
      rho.at(b, a) = a;
    }
  return make_solution(lambda, rho);
}

// ---------------------------------------------------------------------------
// the Yang-Baxter property, via the three operator identities and,
// independently, via the braid identity on triples; the two routes must agree

namespace detail {
inline std::optional<AxiomResult> ybe_identity_witness(const SolutionTable& r) {
  const int n = r.n;
  auto lam = [&](int a, int b) { return r.lambda(a, b); };
  auto rho = [&](int b, int a) { return r.rho(b, a); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (lam(a, lam(b, c)) != lam(lam(a, b), lam(rho(b, a), c)))
          return AxiomResult{"Y1", false, {a, b, c}};
        if (lam(rho(lam(b, c), a), rho(c, b)) != rho(lam(rho(b, a), c), lam(a, b)))
          return AxiomResult{"Y2", false, {a, b, c}};
        if (rho(c, rho(b, a)) != rho(rho(c, b), rho(lam(b, c), a)))
          return AxiomResult{"Y3", false, {a, b, c}};
      }
  return std::nullopt;
}

inline bool braid_identity_holds(const SolutionTable& r) {
  const int n = r.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        // (r x id)(id x r)(r x id)
        auto [x1, y1] = r.apply(a, b);
        auto [y2, z2] = r.apply(y1, c);
        auto [x3, y3] = r.apply(x1, y2);
        // (id x r)(r x id)(id x r)
        auto [p1, q1] = r.apply(b, c);
        auto [o2, p2] = r.apply(a, p1);
        auto [q3, rr] = r.apply(p2, q1);
        if (x3 != o2 || y3 != q3 || z2 != rr) return false;
      }
  return true;
}
} // namespace detail

inline std::optional<AxiomResult> ybe_witness(const SolutionTable& r) {
  auto w = detail::ybe_identity_witness(r);
  if (w.has_value() == detail::braid_identity_holds(r))
    throw std::logic_error("ybe_witness: identity route and braid route disagree");
  return w;
}

inline bool verify_ybe(const SolutionTable& r) { return !ybe_witness(r); }

// one ledger line per operator identity, still cross-checked against the
// braid route on triples
inline VerifyReport ybe_report(const SolutionTable& r) {
  const int n = r.n;
  auto lam = [&](int a, int b) { return r.lambda(a, b); };
  auto rho = [&](int b, int a) { return r.rho(b, a); };
  std::optional<std::vector<int>> w1, w2, w3;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!w1 && lam(a, lam(b, c)) != lam(lam(a, b), lam(rho(b, a), c))) w1 = {a, b, c};
        if (!w2 && lam(rho(lam(b, c), a), rho(c, b)) != rho(lam(rho(b, a), c), lam(a, b)))
          w2 = {a, b, c};
        if (!w3 && rho(c, rho(b, a)) != rho(rho(c, b), rho(lam(b, c), a))) w3 = {a, b, c};
      }
  VerifyReport rep;
  rep.add("Y1: lambda_a(lambda_b(c)) == lambda_{lambda_a(b)}(lambda_{rho_b(a)}(c))", !w1,
          w1.value_or(std::vector<int>{}));
  rep.add("Y2: lambda_{rho_{lambda_b(c)}(a)}(rho_c(b)) == rho_{lambda_{rho_b(a)}(c)}(lambda_a(b))",
          !w2, w2.value_or(std::vector<int>{}));
  rep.add("Y3: rho_c(rho_b(a)) == rho_{rho_c(b)}(rho_{lambda_b(c)}(a))", !w3,
          w3.value_or(std::vector<int>{}));
  if (rep.ok() != detail::braid_identity_holds(r))
    throw std::logic_error("ybe_report: identity ledger and braid route disagree");
  return rep;
}

// (left, right) non-degeneracy: all lambda_a, respectively all rho_b, bijective
inline std::pair<bool, bool> nondegeneracy(const SolutionTable& r) {
  bool left = true, right = true;
  for (int a = 0; a < r.n; ++a) {
    left = left && is_permutation(r.lambda.row(a));
    right = right && is_permutation(r.rho.row(a));
  }
  return {left, right};
}

inline bool is_bijective(const SolutionTable& r) { return is_permutation(r.as_pair_map()); }

// ---------------------------------------------------------------------------
// derived structures

// a |> b = lambda_a(rho_{lambda_b^{-1}(a)}(b)); for a verified solution this
// is a shelf and every lambda_a is one of its automorphisms
inline Shelf derived_shelf(const SolutionTable& r) {
  auto [left, right] = nondegeneracy(r);
  (void)right;
  if (!left) throw std::invalid_argument("derived_shelf: solution is not left non-degenerate");
  const int n = r.n;
  std::vector<Permutation> laminv;
  for (int a = 0; a < n; ++a) laminv.push_back(Permutation(r.lambda.row(a)).inverse());
  BinOpTable t(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.at(a, b) = r.lambda(a, r.rho(laminv[b](a), b));
  Shelf s = make_shelf(t);
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (r.lambda(a, t(x, y)) != t(r.lambda(a, x), r.lambda(a, y)))
          throw std::invalid_argument("derived_shelf: lambda maps are not automorphisms");
  return s;
}

// r(a,b) = (b, b |> a); bijective and non-degenerate exactly for racks
inline SolutionTable derived_solution(const Shelf& s) {
  const int n = s.n();
  BinOpTable lambda(n), rho(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      lambda.at(a, b) = b;
      rho.at(b, a) = s.op(b, a);
    }
  auto r = make_solution(lambda, rho);
  auto [left, right] = nondegeneracy(r);
  if (!left || right != s.rack || is_bijective(r) != s.rack)
    throw std::logic_error("derived_solution: degeneracy profile disagrees with rack flag");
  return r;
}

inline std::vector<int> square_map(const SolutionTable& r) {
  if (!nondegeneracy(r).first)
    throw std::invalid_argument("square_map: solution is not left non-degenerate");
  std::vector<int> q(r.n);
  for (int a = 0; a < r.n; ++a) q[a] = Permutation(r.lambda.row(a)).inverse()(a);
  return q;
}

inline std::vector<int> dual_square_map(const SolutionTable& r) {
  if (!nondegeneracy(r).second)
    throw std::invalid_argument("dual_square_map: solution is not right non-degenerate");
  std::vector<int> q(r.n);
  for (int a = 0; a < r.n; ++a) q[a] = Permutation(r.rho.row(a)).inverse()(a);
  return q;
}

// For bijective left non-degenerate solutions: right non-degeneracy is
// equivalent to bijectivity of the square map.  Both sides are computed and
// compared before the answer is returned.
inline bool right_nd_via_square(const SolutionTable& r) {
  if (!nondegeneracy(r).first || !is_bijective(r))
    throw std::invalid_argument("right_nd_via_square: needs a bijective left non-degenerate solution");
  bool via_square = is_permutation(square_map(r));
  bool direct = nondegeneracy(r).second;
  if (via_square != direct)
    throw std::logic_error("right_nd_via_square: square-map criterion disagrees with direct check");
  return via_square;
}

// ---------------------------------------------------------------------------
// twists: families phi_a of shelf automorphisms producing all left
// non-degenerate solutions with the given derived shelf

struct Twist {
  Shelf shelf;
  std::vector<Permutation> phi;
  int n() const { return shelf.n(); }
};

inline bool is_shelf_automorphism(const Shelf& s, const Permutation& p) {
  for (int a = 0; a < s.n(); ++a)
    for (int b = 0; b < s.n(); ++b)
      if (p(s.op(a, b)) != s.op(p(a), p(b))) return false;
  return true;
}

inline std::optional<AxiomResult> twist_witness(const Twist& t) {
  const int n = t.n();
  if (int(t.phi.size()) != n) throw std::invalid_argument("twist needs one map per element");
  for (int a = 0; a < n; ++a)
    if (!is_shelf_automorphism(t.shelf, t.phi[a]))
      return AxiomResult{"phi_a is a shelf automorphism", false, {a}};
  std::optional<AxiomResult> direct;
  for (int a = 0; a < n && !direct; ++a)
    for (int b = 0; b < n && !direct; ++b) {
      int ab = t.phi[a](b);
      const Permutation& lhsR = t.phi[b];
      Permutation rhs = t.phi[ab] * t.phi[t.phi[ab].inverse()(t.shelf.op(ab, a))];
      if (!(t.phi[a] * lhsR == rhs)) direct = AxiomResult{"twist identity", false, {a, b}};
    }
  // inverted form of the same identity; the two scans must agree
  bool inverted_ok = true;
  for (int a = 0; a < n && inverted_ok; ++a)
    for (int b = 0; b < n && inverted_ok; ++b) {
      Permutation ia = t.phi[a].inverse();
      Permutation lhs = t.phi[ia(b)].inverse() * ia;
      Permutation rhs = t.phi[t.phi[b].inverse()(t.shelf.op(b, a))].inverse() * t.phi[b].inverse();
      inverted_ok = lhs == rhs;
    }
  if (inverted_ok != !direct)
    throw std::logic_error("twist_witness: direct and inverted identity scans disagree");
  return direct;
}

inline bool verify_twist(const Twist& t) { return !twist_witness(t); }

// r(a,b) = (phi_a(b), phi_{phi_a(b)}^{-1}(phi_a(b) |> a)); left non-degenerate
// with derived shelf equal to the twist's shelf
inline SolutionTable solution_from_twist(const Twist& t) {
  if (auto w = twist_witness(t)) {
    VerifyReport rep;
    rep.axioms.push_back(*w);
    throw VerificationError(std::move(rep));
  }
  const int n = t.n();
  BinOpTable lambda(n), rho(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = t.phi[a](b);
      lambda.at(a, b) = ab;
      rho.at(b, a) = t.phi[ab].inverse()(t.shelf.op(ab, a));
    }
  auto r = make_solution(lambda, rho);
  if (!verify_ybe(r)) throw std::logic_error("solution_from_twist: result fails the braid identity");
  if (derived_shelf(r).tri != t.shelf.tri)
    throw std::logic_error("solution_from_twist: derived shelf differs from the input shelf");
  return r;
}

// ---------------------------------------------------------------------------
// comparison

namespace detail {
inline bool equivalence_extend(const SolutionTable& r, const SolutionTable& s,
                               std::vector<int>& map, std::vector<char>& used, int next) {
  const int n = r.n;
  if (next == n) return true;
  for (int y = 0; y < n; ++y) {
    if (used[y]) continue;
    map[next] = y;
    used[y] = 1;
    bool ok = true;
    for (int x = 0; x <= next && ok; ++x)
      for (auto [u, v] : {std::pair{next, x}, std::pair{x, next}}) {
        if (map[r.lambda(u, v)] >= 0 && map[r.lambda(u, v)] != s.lambda(map[u], map[v])) ok = false;
        if (ok && map[r.rho(u, v)] >= 0 && map[r.rho(u, v)] != s.rho(map[u], map[v])) ok = false;
        if (!ok) break;
      }
    if (ok && equivalence_extend(r, s, map, used, next + 1)) return true;
    map[next] = -1;
    used[y] = 0;
  }
  return false;
}
} // namespace detail

// bijection f with (f x f) r = s (f x f), or nullopt; when both solutions are
// left non-degenerate the witness is additionally checked to be an
// isomorphism of the derived shelves intertwining the lambda maps
inline std::optional<std::vector<int>> equivalence_search(const SolutionTable& r,
                                                          const SolutionTable& s) {
  if (r.n != s.n) return std::nullopt;
  std::vector<int> map(r.n, -1);
  std::vector<char> used(r.n, 0);
  if (!detail::equivalence_extend(r, s, map, used, 0)) return std::nullopt;
  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < r.n; ++b)
      if (map[r.lambda(a, b)] != s.lambda(map[a], map[b]) ||
          map[r.rho(a, b)] != s.rho(map[a], map[b]))
        throw std::logic_error("equivalence_search: witness fails the defining condition");
  auto ndr = nondegeneracy(r), nds = nondegeneracy(s);
  if (ndr.first && nds.first) {
    Shelf dr = derived_shelf(r), ds = derived_shelf(s);
    for (int a = 0; a < r.n; ++a)
      for (int b = 0; b < r.n; ++b) {
        if (map[dr.op(a, b)] != ds.op(map[a], map[b]))
          throw std::logic_error("equivalence_search: witness is not a derived-shelf isomorphism");
        if (map[r.lambda(a, b)] != s.lambda(map[a], map[b]))
          throw std::logic_error("equivalence_search: witness does not intertwine lambda maps");
      }
  }
  return map;
}

struct DIsoInvariants {
  bool bijective = false;
  std::optional<long long> order;       // exact for bijective r, bounded search otherwise
  std::vector<long long> cycle_type;    // empty unless bijective
};

inline DIsoInvariants d_iso_invariants(const SolutionTable& r, long long bound = 64) {
  DIsoInvariants inv;
  auto m = r.as_pair_map();
  inv.bijective = is_permutation(m);
  if (inv.bijective) {
    Permutation p(m);
    inv.cycle_type = cycle_type(p);
    long long o = permutation_order(p);
    if (o <= bound) inv.order = o;
  } else {
    inv.order = map_order(m, bound);
  }
  return inv;
}

// true when the invariants already preclude any equivalence
inline bool d_iso_refute(const SolutionTable& r, const SolutionTable& s, long long bound = 64) {
  if (r.n != s.n) return true;
  auto a = d_iso_invariants(r, bound), b = d_iso_invariants(s, bound);
  return a.bijective != b.bijective || a.order != b.order || a.cycle_type != b.cycle_type;
}

// lambda_a(b) o rho_b(a) == a o b for all a, b
inline bool lyz_condition(const SolutionTable& r, const BinOpTable& circ,
                          AxiomResult* fail = nullptr) {
  if (circ.n != r.n) throw std::invalid_argument("lyz_condition: carrier mismatch");
  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < r.n; ++b)
      if (circ(r.lambda(a, b), r.rho(b, a)) != circ(a, b)) {
        if (fail) *fail = {"lambda_a(b) o rho_b(a) == a o b", false, {a, b}};
        return false;
      }
  return true;
}

// s = tau r tau: swaps the roles of lambda and rho
inline SolutionTable conjugate_by_flip(const SolutionTable& r) {
  return make_solution(r.rho, r.lambda);
}

// ---------------------------------------------------------------------------
// exhaustive twist enumeration at tiny sizes

inline std::vector<Permutation> shelf_automorphisms(const Shelf& s) {
  if (s.n() > 8) throw std::invalid_argument("shelf_automorphisms: carrier too large");
  std::vector<Permutation> out;
  std::vector<int> v(s.n());
  std::iota(v.begin(), v.end(), 0);
  do {
    Permutation p(v);
    if (is_shelf_automorphism(s, p)) out.push_back(p);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline std::vector<Twist> enumerate_twists(const Shelf& s) {
  auto aut = shelf_automorphisms(s);
  const int n = s.n(), na = int(aut.size());
  std::vector<Twist> out;
  std::vector<int> pick(n, 0);
  while (true) {
    Twist t{s, {}};
    for (int a = 0; a < n; ++a) t.phi.push_back(aut[pick[a]]);
    if (!twist_witness(t)) out.push_back(std::move(t));
    int i = 0;
    while (i < n && ++pick[i] == na) pick[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// every left non-degenerate solution on n elements, one per (shelf, twist)
// pair; completeness comes from the twist correspondence
inline std::vector<SolutionTable> enumerate_left_nd_solutions(int n) {
  std::vector<SolutionTable> out;
  for (const auto& s : enumerate_shelves(n))
    for (const auto& t : enumerate_twists(s)) out.push_back(solution_from_twist(t));
  return out;
}

} // inline namespace solution
} // namespace ybe
