// Generalized digroups on a finite carrier: two intertwined operations
// |- ("vdash") and -| ("dashv") forming a disemigroup, a nonempty set of
// bar-units, and unilateral inverses relative to every bar-unit.
#pragma once

#include "core.hpp"

namespace ybe {
inline namespace digroup {

inline std::optional<std::array<int, 3>> mixed_law_witness(
    const BinOpTable& vd, const BinOpTable& dv, int which) {
  const int n = vd.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        bool ok = true;
        switch (which) {
          case 0: ok = vd(a, dv(b, c)) == dv(vd(a, b), c); break; // a|-(b-|c)==(a|-b)-|c
          case 1: ok = dv(a, vd(b, c)) == dv(a, dv(b, c)); break; // a-|(b|-c)==a-|(b-|c)
          case 2: ok = vd(vd(a, b), c) == vd(dv(a, b), c); break; // (a|-b)|-c==(a-|b)|-c
        }
        if (!ok) return std::array<int, 3>{a, b, c};
      }
  return std::nullopt;
}

inline VerifyReport disemigroup_report(const BinOpTable& vd, const BinOpTable& dv) {
  VerifyReport rep;
  if (vd.n != dv.n || vd.n == 0) {
    rep.add("tables share a nonempty carrier", false);
    return rep;
  }
  if (auto w = vd.range_witness()) {
    rep.add("|- entries in range", false, *w);
    return rep;
  }
  if (auto w = dv.range_witness()) {
    rep.add("-| entries in range", false, *w);
    return rep;
  }
  auto aw = associativity_witness(vd);
  rep.add("(a|-b)|-c == a|-(b|-c)", !aw, aw ? std::vector<int>(aw->begin(), aw->end()) : std::vector<int>{});
  aw = associativity_witness(dv);
  rep.add("(a-|b)-|c == a-|(b-|c)", !aw, aw ? std::vector<int>(aw->begin(), aw->end()) : std::vector<int>{});
  static const char* names[3] = {"a|-(b-|c) == (a|-b)-|c", "a-|(b|-c) == a-|(b-|c)",
                                 "(a|-b)|-c == (a-|b)|-c"};
  for (int k = 0; k < 3; ++k) {
    auto w = mixed_law_witness(vd, dv, k);
    rep.add(names[k], !w, w ? std::vector<int>(w->begin(), w->end()) : std::vector<int>{});
  }
  return rep;
}

inline bool verify_disemigroup(const BinOpTable& vd, const BinOpTable& dv) {
  return disemigroup_report(vd, dv).ok();
}

// bar-units: e with e|-a == a == a-|e for every a
inline std::vector<int> halo_of(const BinOpTable& vd, const BinOpTable& dv) {
  std::vector<int> halo;
  for (int e = 0; e < vd.n; ++e) {
    bool unit = true;
    for (int a = 0; a < vd.n && unit; ++a) unit = vd(e, a) == a && dv(a, e) == a;
    if (unit) halo.push_back(e);
  }
  return halo;
}

inline VerifyReport g_digroup_report(const BinOpTable& vd, const BinOpTable& dv) {
  VerifyReport rep = disemigroup_report(vd, dv);
  if (!rep.ok()) return rep;
  auto halo = halo_of(vd, dv);
  rep.add("at least one bar-unit exists", !halo.empty());
  if (halo.empty()) return rep;
  // unilateral inverses: for each bar-unit e and element a there is exactly
  // one x with x-|a == e and exactly one y with a|-y == e
  for (int e : halo)
    for (int a = 0; a < vd.n; ++a) {
      int icount = 0, jcount = 0;
      for (int x = 0; x < vd.n; ++x) {
        if (dv(x, a) == e) ++icount;
        if (vd(a, x) == e) ++jcount;
      }
      if (icount != 1) {
        rep.add("unique x with x-|a == e", false, {e, a});
        return rep;
      }
      if (jcount != 1) {
        rep.add("unique y with a|-y == e", false, {e, a});
        return rep;
      }
    }
  rep.add("unique x with x-|a == e", true);
  rep.add("unique y with a|-y == e", true);
  return rep;
}

inline bool verify_g_digroup(const BinOpTable& vd, const BinOpTable& dv) {
  return g_digroup_report(vd, dv).ok();
}

struct GDigroup {
  BinOpTable vdash, dashv;
  std::vector<int> halo;                  // sorted bar-unit indices
  std::vector<std::vector<int>> itab;     // itab[e][a]: the x with x-|a == e (rows valid for e in halo)
  std::vector<std::vector<int>> jtab;     // jtab[e][a]: the y with a|-y == e
  std::vector<int> inv;                   // canonical a^{-1} = itab[halo.front()][a]

  int n() const { return vdash.n; }
  int vd(int a, int b) const { return vdash(a, b); }
  int dv(int a, int b) const { return dashv(a, b); }

  bool is_bar_unit(int e) const {
    return std::binary_search(halo.begin(), halo.end(), e);
  }
  int inverse_I(int e, int a) const {
    if (!is_bar_unit(e)) throw std::invalid_argument("inverse_I: e is not a bar-unit");
    return itab[e][a];
  }
  int inverse_J(int e, int a) const {
    if (!is_bar_unit(e)) throw std::invalid_argument("inverse_J: e is not a bar-unit");
    return jtab[e][a];
  }
  // a^{-1} |- b  and  b -| a^{-1}; by side independence any bar-unit's
  // I- or J-inverse gives the same value in these contexts.
  int linv_vd(int a, int b) const { return vdash(inv[a], b); }
  int rinv_dv(int b, int a) const { return dashv(b, inv[a]); }
  // conjugation a^{-1} |- b -| a
  int conj(int a, int b) const { return dashv(vdash(inv[a], b), a); }

  static GDigroup make(BinOpTable vd, BinOpTable dv, bool verify) {
    if (verify) {
      auto rep = g_digroup_report(vd, dv);
      if (!rep.ok()) throw VerificationError(std::move(rep));
    }
    GDigroup d;
    d.vdash = std::move(vd);
    d.dashv = std::move(dv);
    d.halo = halo_of(d.vdash, d.dashv);
    if (d.halo.empty()) throw std::invalid_argument("digroup has no bar-unit");
    const int n = d.n();
    d.itab.assign(n, std::vector<int>(n, -1));
    d.jtab.assign(n, std::vector<int>(n, -1));
    for (int e : d.halo)
      for (int a = 0; a < n; ++a) {
        for (int x = 0; x < n; ++x) {
          if (d.dashv(x, a) == e && d.itab[e][a] < 0) d.itab[e][a] = x;
          if (d.vdash(a, x) == e && d.jtab[e][a] < 0) d.jtab[e][a] = x;
        }
        if (d.itab[e][a] < 0 || d.jtab[e][a] < 0)
          throw std::invalid_argument("digroup inverses missing");
      }
    d.inv.resize(n);
    for (int a = 0; a < n; ++a) d.inv[a] = d.itab[d.halo.front()][a];
    if (verify) {
      // side independence of inverses (holds in every g-digroup; asserted once)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          int l = d.linv_vd(a, b), r = d.rinv_dv(b, a);
          for (int e : d.halo) {
            if (d.vdash(d.itab[e][a], b) != l || d.vdash(d.jtab[e][a], b) != l ||
                d.dashv(b, d.itab[e][a]) != r || d.dashv(b, d.jtab[e][a]) != r) {
              VerifyReport rep;
              rep.add("inverse side independence", false, {e, a, b});
              throw VerificationError(std::move(rep));
            }
          }
        }
    }
    return d;
  }

  static GDigroup verified(BinOpTable vd, BinOpTable dv) {
    return make(std::move(vd), std::move(dv), true);
  }
  // escape hatch for tests: skips the axiom scan, still builds lookup tables
  static GDigroup unchecked(BinOpTable vd, BinOpTable dv) {
    return make(std::move(vd), std::move(dv), false);
  }
};

inline GDigroup group_as_digroup(const GroupTable& g) {
  return GDigroup::verified(g.op, g.op);
}

// digroup of a right action psi of G on {0..esize-1}:
//   (g,e) |- (h,f) = (gh, f),   (g,e) -| (h,f) = (gh, psi_h(e))
inline GDigroup from_group_action(const GroupTable& g, int esize,
                                  const std::vector<Permutation>& psi) {
  if (int(psi.size()) != g.n()) throw std::invalid_argument("psi needs one permutation per group element");
  for (const auto& p : psi)
    if (p.n() != esize) throw std::invalid_argument("psi permutation degree mismatch");
  for (int x = 0; x < g.n(); ++x)
    for (int y = 0; y < g.n(); ++y)
      if (!(psi[g.mul(x, y)] == psi[y] * psi[x]))
        throw std::invalid_argument("psi is not a right action");
  const int n = g.n() * esize;
  auto idx = [esize](int gg, int e) { return gg * esize + e; };
  BinOpTable vd(n), dv(n);
  for (int x = 0; x < g.n(); ++x)
    for (int e = 0; e < esize; ++e)
      for (int y = 0; y < g.n(); ++y)
        for (int f = 0; f < esize; ++f) {
          vd.at(idx(x, e), idx(y, f)) = idx(g.mul(x, y), f);
          dv.at(idx(x, e), idx(y, f)) = idx(g.mul(x, y), psi[y](e));
        }
  return GDigroup::verified(std::move(vd), std::move(dv));
}

// All six identities relating iterated unilateral inverses; true on every
// g-digroup, so a failure means the input tables are not one.
inline bool check_digroup_identities(const GDigroup& d, AxiomResult* fail = nullptr) {
  auto record = [&](const char* name, int e, int a, int b) {
    if (fail) *fail = {name, false, b >= 0 ? std::vector<int>{e, a, b} : std::vector<int>{e, a}};
    return false;
  };
  const int n = d.n();
  for (int e : d.halo)
    for (int a = 0; a < n; ++a) {
      int ia = d.itab[e][a], ja = d.jtab[e][a];
      if (d.itab[e][ia] != d.dv(e, a)) return record("(a^I)^I == e-|a", e, a, -1);
      if (d.itab[e][ja] != d.dv(e, a)) return record("(a^J)^I == e-|a", e, a, -1);
      if (d.jtab[e][ja] != d.vd(a, e)) return record("(a^J)^J == a|-e", e, a, -1);
      if (d.jtab[e][ia] != d.vd(a, e)) return record("(a^I)^J == a|-e", e, a, -1);
      for (int b = 0; b < n; ++b) {
        int ib = d.itab[e][b], jb = d.jtab[e][b];
        if (d.itab[e][d.vd(a, b)] != d.dv(ib, ia)) return record("(a|-b)^I == b^I -| a^I", e, a, b);
        if (d.itab[e][d.dv(a, b)] != d.dv(ib, ia)) return record("(a-|b)^I == b^I -| a^I", e, a, b);
        if (d.jtab[e][d.vd(a, b)] != d.vd(jb, ja)) return record("(a|-b)^J == b^J |- a^J", e, a, b);
        if (d.jtab[e][d.dv(a, b)] != d.vd(jb, ja)) return record("(a-|b)^J == b^J |- a^J", e, a, b);
      }
    }
  return true;
}

// a |- xi lands in the "groupal" part G, xi -| a in H; every element splits
// uniquely as g_a |- e_a and as f_a -| h_a with e_a, f_a bar-units.
struct BarDecomposition {
  int xi = 0;
  std::vector<int> G, H;          // sorted carriers of the two subgroups
  std::vector<int> g, e, f, h;    // per-element components
};

inline BarDecomposition decompose(const GDigroup& d, int xi) {
  if (!d.is_bar_unit(xi)) throw std::invalid_argument("decompose: xi is not a bar-unit");
  const int n = d.n();
  BarDecomposition out;
  out.xi = xi;
  out.g.resize(n);
  out.e.assign(n, -1);
  out.f.assign(n, -1);
  out.h.resize(n);
  for (int a = 0; a < n; ++a) {
    out.g[a] = d.vd(a, xi);
    out.h[a] = d.dv(xi, a);
    for (int u : d.halo) {
      if (d.vd(out.g[a], u) == a) {
        if (out.e[a] >= 0) throw std::invalid_argument("decompose: bar-unit component not unique");
        out.e[a] = u;
      }
      if (d.dv(u, out.h[a]) == a) {
        if (out.f[a] >= 0) throw std::invalid_argument("decompose: bar-unit component not unique");
        out.f[a] = u;
      }
    }
    if (out.e[a] < 0 || out.f[a] < 0)
      throw std::invalid_argument("decompose: element does not split");
  }
  out.G = out.g;
  out.H = out.h;
  for (auto* v : {&out.G, &out.H}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  // intertwining identities tying the two splittings together
  for (int a = 0; a < n; ++a) {
    bool ok = out.g[a] == d.vd(out.h[a], xi) && out.h[a] == d.dv(xi, out.g[a]) &&
              out.e[a] == d.dv(d.linv_vd(out.h[a], out.f[a]), out.h[a]) &&
              out.f[a] == d.rinv_dv(d.vd(out.g[a], out.e[a]), out.g[a]) &&
              d.vd(out.g[a], out.e[a]) == a && d.dv(out.f[a], out.h[a]) == a;
    if (!ok) throw std::logic_error("decompose: intertwining identities failed");
  }
  return out;
}

// psi(a) = g_a^{-1} |- f_a is an anti-isomorphism (D,|-) -> (D,-|)
inline std::vector<int> anti_isomorphism(const GDigroup& d, int xi) {
  auto dec = decompose(d, xi);
  const int n = d.n();
  std::vector<int> psi(n);
  for (int a = 0; a < n; ++a) psi[a] = d.linv_vd(dec.g[a], dec.f[a]);
  if (!is_permutation(psi)) throw std::logic_error("anti_isomorphism: map is not bijective");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (psi[d.vd(a, b)] != d.dv(psi[b], psi[a]))
        throw std::logic_error("anti_isomorphism: psi(a|-b) != psi(b)-|psi(a)");
  return psi;
}

inline bool is_abelian_digroup(const GDigroup& d) {
  for (int a = 0; a < d.n(); ++a)
    for (int b = 0; b < d.n(); ++b)
      if (d.vd(a, b) != d.dv(b, a)) return false;
  return true;
}

namespace detail {

// per-element invariant used to prune the isomorphism search
inline std::vector<long long> iso_class(const GDigroup& d, int x) {
  std::vector<long long> key;
  key.push_back(d.is_bar_unit(x));
  key.push_back(d.vd(x, x) == x);
  key.push_back(d.dv(x, x) == x);
  for (auto t : cycle_type(Permutation(d.vdash.row(x)))) key.push_back(t);
  key.push_back(-1);
  for (auto t : cycle_type(Permutation(d.dashv.column(x)))) key.push_back(t);
  return key;
}

inline bool iso_extend(const GDigroup& a, const GDigroup& b, std::vector<int>& map,
                       std::vector<char>& used, int next,
                       const std::vector<std::vector<long long>>& ca,
                       const std::vector<std::vector<long long>>& cb) {
  const int n = a.n();
  if (next == n) return true;
  for (int y = 0; y < n; ++y) {
    if (used[y] || ca[next] != cb[y]) continue;
    map[next] = y;
    used[y] = 1;
    bool ok = true;
    for (int x = 0; x <= next && ok; ++x) {
      if (map[a.vd(next, x)] >= 0 && map[a.vd(next, x)] != b.vd(y, map[x])) ok = false;
      if (ok && map[a.vd(x, next)] >= 0 && map[a.vd(x, next)] != b.vd(map[x], y)) ok = false;
      if (ok && map[a.dv(next, x)] >= 0 && map[a.dv(next, x)] != b.dv(y, map[x])) ok = false;
      if (ok && map[a.dv(x, next)] >= 0 && map[a.dv(x, next)] != b.dv(map[x], y)) ok = false;
    }
    if (ok && iso_extend(a, b, map, used, next + 1, ca, cb)) return true;
    map[next] = -1;
    used[y] = 0;
  }
  return false;
}

} // namespace detail

// Bijection preserving both operations, or nullopt.  Cheap invariants are
// compared before any search.
inline std::optional<std::vector<int>> digroup_isomorphism(const GDigroup& a, const GDigroup& b) {
  if (a.n() != b.n() || a.halo.size() != b.halo.size()) return std::nullopt;
  if (idempotents(a.vdash).size() != idempotents(b.vdash).size() ||
      idempotents(a.dashv).size() != idempotents(b.dashv).size())
    return std::nullopt;
  const int n = a.n();
  std::vector<std::vector<long long>> ca(n), cb(n);
  for (int x = 0; x < n; ++x) {
    ca[x] = detail::iso_class(a, x);
    cb[x] = detail::iso_class(b, x);
  }
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  if (!detail::iso_extend(a, b, map, used, 0, ca, cb)) return std::nullopt;
  // full re-check plus inverse compatibility of the found witness
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (map[a.vd(x, y)] != b.vd(map[x], map[y]) || map[a.dv(x, y)] != b.dv(map[x], map[y]))
        throw std::logic_error("digroup_isomorphism: witness does not preserve operations");
  for (int e : a.halo)
    for (int x = 0; x < n; ++x)
      if (map[a.itab[e][x]] != b.itab[map[e]][map[x]])
        throw std::logic_error("digroup_isomorphism: witness does not preserve inverses");
  return map;
}

} // inline namespace digroup
} // namespace ybe
