// Averaging operators on finite groups, compatible operator pairs, the
// digroups they induce (a |- b = f(a)b, a -| b = a g(b)), and the di-skew
// braces obtained from a third averaging operator.
#pragma once

#include "diskew.hpp"

namespace ybe {
inline namespace averaging {

inline void check_self_map(const GroupTable& G, const std::vector<int>& f, const char* who) {
  if (int(f.size()) != G.n()) throw std::invalid_argument(std::string(who) + ": map size mismatch");
  for (int v : f)
    if (v < 0 || v >= G.n()) throw std::invalid_argument(std::string(who) + ": value out of range");
}

inline bool is_endomorphism(const GroupTable& G, const std::vector<int>& f) {
  check_self_map(G, f, "is_endomorphism");
  for (int a = 0; a < G.n(); ++a)
    for (int b = 0; b < G.n(); ++b)
      if (f[G.mul(a, b)] != G.mul(f[a], f[b])) return false;
  return true;
}

inline bool is_idempotent_map(const std::vector<int>& f) {
  for (int a = 0; a < int(f.size()); ++a)
    if (f[f[a]] != f[a]) return false;
  return true;
}

// preimage of the identity
inline std::vector<int> kernel(const GroupTable& G, const std::vector<int>& f) {
  check_self_map(G, f, "kernel");
  std::vector<int> k;
  for (int a = 0; a < G.n(); ++a)
    if (f[a] == G.identity) k.push_back(a);
  return k;
}

inline std::vector<int> image(const std::vector<int>& f) {
  std::vector<int> im(f);
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

inline bool is_left_averaging(const GroupTable& G, const std::vector<int>& f) {
  check_self_map(G, f, "is_left_averaging");
  for (int x = 0; x < G.n(); ++x)
    for (int y = 0; y < G.n(); ++y)
      if (G.mul(f[x], f[y]) != f[G.mul(f[x], y)]) return false;
  return true;
}

inline bool is_right_averaging(const GroupTable& G, const std::vector<int>& f) {
  check_self_map(G, f, "is_right_averaging");
  for (int x = 0; x < G.n(); ++x)
    for (int y = 0; y < G.n(); ++y)
      if (G.mul(f[x], f[y]) != f[G.mul(x, f[y])]) return false;
  return true;
}

inline bool is_averaging(const GroupTable& G, const std::vector<int>& f) {
  return is_left_averaging(G, f) && is_right_averaging(G, f);
}

// ---------------------------------------------------------------------------
// compatible pairs

inline VerifyReport averaging_pair_report(const GroupTable& G, const std::vector<int>& f,
                                          const std::vector<int>& g) {
  check_self_map(G, f, "averaging_pair_report");
  check_self_map(G, g, "averaging_pair_report");
  VerifyReport rep;
  auto scan = [&](auto&& cond, const char* name) {
    for (int a = 0; a < G.n(); ++a)
      for (int b = 0; b < G.n(); ++b)
        if (!cond(a, b)) {
          rep.add(name, false, {a, b});
          return;
        }
    rep.add(name, true);
  };
  scan([&](int a, int b) { return G.mul(f[a], f[b]) == f[G.mul(f[a], b)]; },
       "f(a)f(b) == f(f(a)b)");
  scan([&](int a, int b) { return G.mul(f[a], f[b]) == f[G.mul(a, g[b])]; },
       "f(a)f(b) == f(a g(b))");
  scan([&](int a, int b) { return G.mul(g[a], g[b]) == g[G.mul(a, g[b])]; },
       "g(a)g(b) == g(a g(b))");
  scan([&](int a, int b) { return G.mul(g[a], g[b]) == g[G.mul(f[a], b)]; },
       "g(a)g(b) == g(f(a)b)");
  return rep;
}

struct AveragingPair {
  GroupTable group;
  std::vector<int> f, g;

  int n() const { return group.n(); }
  std::vector<int> shared_kernel() const {
    std::vector<int> out;
    for (int a = 0; a < n(); ++a)
      if (f[a] == group.identity && g[a] == group.identity) out.push_back(a);
    return out;
  }
  bool compatible() const { return !shared_kernel().empty(); }

  static AveragingPair verified(const GroupTable& G, std::vector<int> f, std::vector<int> g) {
    auto rep = averaging_pair_report(G, f, g);
    if (!rep.ok()) throw VerificationError(std::move(rep));
    return AveragingPair{G, std::move(f), std::move(g)};
  }
};

// a |- b = f(a)b and a -| b = a g(b); needs a compatible pair, and the
// bar-units are exactly the shared kernel
inline GDigroup digroup_from_pair(const AveragingPair& P) {
  if (!P.compatible())
    throw std::invalid_argument("digroup_from_pair: kernels of f and g share no element");
  const int n = P.n();
  BinOpTable vd(n), dv(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      vd.at(a, b) = P.group.mul(P.f[a], b);
      dv.at(a, b) = P.group.mul(a, P.g[b]);
    }
  GDigroup d = GDigroup::verified(vd, dv);
  if (d.halo != P.shared_kernel())
    throw std::logic_error("digroup_from_pair: bar-units differ from the shared kernel");
  for (int e : d.halo)
    for (int a = 0; a < n; ++a) {
      if (d.inverse_I(e, a) != P.group.mul(e, P.group.inv(P.g[a])))
        throw std::logic_error("digroup_from_pair: I_e(a) != e g(a)^{-1}");
      if (d.inverse_J(e, a) != P.group.mul(P.group.inv(P.f[a]), e))
        throw std::logic_error("digroup_from_pair: J_e(a) != f(a)^{-1} e");
      // shifting a bar-unit through f or g lands back in the kernel
      if (P.f[P.group.mul(P.f[a], P.group.mul(P.group.inv(P.f[a]), e))] != P.group.identity)
        throw std::logic_error("digroup_from_pair: kernel shift through f failed");
      if (P.g[P.group.mul(P.group.mul(e, P.group.inv(P.g[a])), P.g[a])] != P.group.identity)
        throw std::logic_error("digroup_from_pair: kernel shift through g failed");
    }
  return d;
}

// ---------------------------------------------------------------------------
// exhaustive operator scans (n^n candidates, so the carrier is capped)

namespace detail {
template <class Visit>
inline void for_each_self_map(int n, Visit&& visit) {
  if (n < 1 || n > 8) throw std::invalid_argument("self-map scan supports 1 <= n <= 8");
  std::vector<int> f(n, 0);
  while (true) {
    visit(static_cast<const std::vector<int>&>(f));
    int i = 0;
    while (i < n && ++f[i] == n) f[i++] = 0;
    if (i == n) break;
  }
}
} // namespace detail

inline std::vector<std::vector<int>> enumerate_left_averaging(const GroupTable& G) {
  std::vector<std::vector<int>> out;
  detail::for_each_self_map(G.n(), [&](const std::vector<int>& f) {
    if (is_left_averaging(G, f)) out.push_back(f);
  });
  return out;
}

inline std::vector<std::vector<int>> enumerate_right_averaging(const GroupTable& G) {
  std::vector<std::vector<int>> out;
  detail::for_each_self_map(G.n(), [&](const std::vector<int>& f) {
    if (is_right_averaging(G, f)) out.push_back(f);
  });
  return out;
}

inline std::vector<std::vector<int>> enumerate_averaging(const GroupTable& G) {
  std::vector<std::vector<int>> out;
  detail::for_each_self_map(G.n(), [&](const std::vector<int>& f) {
    if (is_left_averaging(G, f) && is_right_averaging(G, f)) out.push_back(f);
  });
  return out;
}

inline std::vector<std::vector<int>> enumerate_idempotent_endos(const GroupTable& G) {
  std::vector<std::vector<int>> out;
  detail::for_each_self_map(G.n(), [&](const std::vector<int>& f) {
    if (is_idempotent_map(f) && is_endomorphism(G, f)) out.push_back(f);
  });
  return out;
}

// ---------------------------------------------------------------------------
// di-skew braces from a third operator

inline VerifyReport left_operator_brace_report(const AveragingPair& P, const std::vector<int>& h) {
  const GroupTable& G = P.group;
  check_self_map(G, h, "left_operator_brace_report");
  VerifyReport rep;
  rep.add("h is left averaging", is_left_averaging(G, h));
  std::optional<std::vector<int>> w1, w2, w3;
  for (int a = 0; a < G.n() && !(w1 && w2 && w3); ++a)
    for (int b = 0; b < G.n(); ++b) {
      if (!w1 && G.mul(h[a], P.f[b]) !=
                     G.mul(P.f[G.mul(h[a], b)], G.mul(G.inv(P.f[a]), h[a])))
        w1 = {a, b};
      if (!w2 && G.mul(P.g[a], P.g[b]) != P.g[G.mul(h[a], b)]) w2 = {a, b};
      if (!w3 && h[G.mul(P.f[a], b)] != h[G.mul(a, P.g[b])]) w3 = {a, b};
    }
  rep.add("h(a)f(b) == f(h(a)b) f(a)^{-1} h(a)", !w1, w1.value_or(std::vector<int>{}));
  rep.add("g(a)g(b) == g(h(a)b)", !w2, w2.value_or(std::vector<int>{}));
  rep.add("h(f(a)b) == h(a g(b))", !w3, w3.value_or(std::vector<int>{}));
  return rep;
}

inline VerifyReport right_operator_brace_report(const AveragingPair& P, const std::vector<int>& h) {
  const GroupTable& G = P.group;
  check_self_map(G, h, "right_operator_brace_report");
  VerifyReport rep;
  rep.add("h is right averaging", is_right_averaging(G, h));
  std::optional<std::vector<int>> w1, w2, w3;
  for (int a = 0; a < G.n() && !(w1 && w2 && w3); ++a)
    for (int b = 0; b < G.n(); ++b) {
      if (!w1 && G.mul(P.f[b], P.f[a]) != P.f[G.mul(b, h[a])]) w1 = {a, b};
      if (!w2 && G.mul(P.g[b], h[a]) !=
                     G.mul(h[a], G.mul(G.inv(P.g[a]), P.g[G.mul(b, h[a])])))
        w2 = {a, b};
      if (!w3 && h[G.mul(P.f[a], b)] != h[G.mul(a, P.g[b])]) w3 = {a, b};
    }
  rep.add("f(b)f(a) == f(b h(a))", !w1, w1.value_or(std::vector<int>{}));
  rep.add("g(b)h(a) == h(a) g(a)^{-1} g(b h(a))", !w2, w2.value_or(std::vector<int>{}));
  rep.add("h(f(a)b) == h(a g(b))", !w3, w3.value_or(std::vector<int>{}));
  return rep;
}

// a o b = h(a)b on top of the pair digroup
inline DiSkewBrace diskew_from_left_operator(const AveragingPair& P, const std::vector<int>& h) {
  auto rep = left_operator_brace_report(P, h);
  if (!rep.ok()) throw VerificationError(std::move(rep));
  GDigroup d = digroup_from_pair(P);
  BinOpTable circ(P.n());
  for (int a = 0; a < P.n(); ++a)
    for (int b = 0; b < P.n(); ++b) circ.at(a, b) = P.group.mul(h[a], b);
  return DiSkewBrace::verified(d.vdash, d.dashv, circ);
}

// a o b = b h(a) on top of the pair digroup
inline DiSkewBrace diskew_from_right_operator(const AveragingPair& P, const std::vector<int>& h) {
  auto rep = right_operator_brace_report(P, h);
  if (!rep.ok()) throw VerificationError(std::move(rep));
  GDigroup d = digroup_from_pair(P);
  BinOpTable circ(P.n());
  for (int a = 0; a < P.n(); ++a)
    for (int b = 0; b < P.n(); ++b) circ.at(a, b) = P.group.mul(b, h[a]);
  return DiSkewBrace::verified(d.vdash, d.dashv, circ);
}

// closed-form solution of the left-operator brace, written directly in the
// group: r(x,y) = (f(x)^{-1} h(x) y, h(u)^{-1} x g(u)) with u the first entry
inline SolutionTable explicit_solution_left(const AveragingPair& P, const std::vector<int>& h) {
  const GroupTable& G = P.group;
  BinOpTable lambda(P.n()), rho(P.n());
  for (int x = 0; x < P.n(); ++x)
    for (int y = 0; y < P.n(); ++y) {
      int u = G.mul(G.inv(P.f[x]), G.mul(h[x], y));
      lambda.at(x, y) = u;
      rho.at(y, x) = G.mul(G.inv(h[u]), G.mul(x, P.g[u]));
    }
  return make_solution(lambda, rho);
}

// dual closed form for the right-operator brace:
// r(x,y) = (f(x)^{-1} y h(x), x g(u) h(u)^{-1}) with u the first entry
inline SolutionTable explicit_solution_right(const AveragingPair& P, const std::vector<int>& h) {
  const GroupTable& G = P.group;
  BinOpTable lambda(P.n()), rho(P.n());
  for (int x = 0; x < P.n(); ++x)
    for (int y = 0; y < P.n(); ++y) {
      int u = G.mul(G.inv(P.f[x]), G.mul(y, h[x]));
      lambda.at(x, y) = u;
      rho.at(y, x) = G.mul(x, G.mul(P.g[u], G.inv(h[u])));
    }
  return make_solution(lambda, rho);
}

// ---------------------------------------------------------------------------
// digroups from a commuting pair of idempotent endomorphisms:
// a |- b = F(a)b and a -| b = a F(b) with F(x) = f(x) (fg)(x)^{-1}

inline GDigroup fg_commuting_digroup(const GroupTable& G, const std::vector<int>& f,
                                     const std::vector<int>& g) {
  if (!is_endomorphism(G, f) || !is_idempotent_map(f))
    throw std::invalid_argument("fg_commuting_digroup: f must be an idempotent endomorphism");
  if (!is_endomorphism(G, g) || !is_idempotent_map(g))
    throw std::invalid_argument("fg_commuting_digroup: g must be an idempotent endomorphism");
  if (compose_maps(f, g) != compose_maps(g, f))
    throw std::invalid_argument("fg_commuting_digroup: f and g must commute");
  for (int a : image(f))
    for (int b : image(f))
      if (G.mul(a, b) != G.mul(b, a))
        throw std::invalid_argument("fg_commuting_digroup: image of f must be abelian");
  std::vector<int> F(G.n());
  for (int a = 0; a < G.n(); ++a) F[a] = G.mul(f[a], G.inv(f[g[a]]));
  if (!is_averaging(G, F))
    throw std::logic_error("fg_commuting_digroup: f (fg)^{-1} is not an averaging operator");
  GDigroup d = digroup_from_pair(AveragingPair::verified(G, F, F));
  std::vector<int> expect;
  for (int a = 0; a < G.n(); ++a)
    if (f[a] == f[g[a]]) expect.push_back(a);
  if (d.halo != expect)
    throw std::logic_error("fg_commuting_digroup: bar-units differ from {a : f(a) == (fg)(a)}");
  return d;
}

// ---------------------------------------------------------------------------
// does a digroup on the carrier of G come from one operator used on both
// sides?  Scans every averaging operator h with nonempty kernel and looks
// for an isomorphism with the digroup of the pair (h,h).

inline std::optional<std::pair<std::vector<int>, std::vector<int>>>
single_operator_origin(const GDigroup& d, const GroupTable& G) {
  if (d.n() != G.n()) return std::nullopt;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> found;
  size_t halo_size = d.halo.size();
  size_t gpart_size = decompose(d, d.halo.front()).G.size();
  detail::for_each_self_map(G.n(), [&](const std::vector<int>& h) {
    if (found) return;
    if (kernel(G, h).size() != halo_size || image(h).size() != gpart_size) return;
    if (!is_averaging(G, h)) return;
    GDigroup cand = digroup_from_pair(AveragingPair::verified(G, h, h));
    if (auto iso = digroup_isomorphism(cand, d)) found = {h, *iso};
  });
  return found;
}

inline bool refute_single_operator_origin(const GDigroup& d, const GroupTable& G) {
  return !single_operator_origin(d, G).has_value();
}

} // inline namespace averaging
} // namespace ybe
