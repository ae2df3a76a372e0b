// Dynamical extensions of solutions: dynamical pairs over a twisted shelf,
// hemi-semidirect products, the decomposition of a di-skew brace solution
// into a skew brace on its group part acting on its bar-units, and the
// closed-form orders of the resulting solutions.
#pragma once

#include "diskew.hpp"

namespace ybe {
inline namespace hemi {

// ---------------------------------------------------------------------------
// dynamical pairs: alpha, beta assign to each (a,b) in G x G a map E x E -> E

struct DynamicalPair {
  Twist base; // shelf (G,|>) with twist lambda
  int esize = 0;
  std::vector<BinOpTable> alpha, beta; // indexed a*|G|+b

  int gsize() const { return base.n(); }
  const BinOpTable& alpha_tab(int a, int b) const { return alpha[size_t(a) * gsize() + b]; }
  const BinOpTable& beta_tab(int a, int b) const { return beta[size_t(a) * gsize() + b]; }
  int alpha_at(int a, int b, int s, int t) const { return alpha_tab(a, b)(s, t); }
  int beta_at(int a, int b, int s, int t) const { return beta_tab(a, b)(s, t); }
};

inline DynamicalPair make_dynamical_pair(Twist base, int esize, std::vector<BinOpTable> alpha,
                                         std::vector<BinOpTable> beta) {
  const size_t cells = size_t(base.n()) * base.n();
  if (esize < 1 || alpha.size() != cells || beta.size() != cells)
    throw std::invalid_argument("dynamical pair needs one E-table per element of G x G");
  for (const auto& t : alpha)
    if (t.n != esize || t.range_witness())
      throw std::invalid_argument("alpha tables must be E x E with entries in E");
  for (const auto& t : beta)
    if (t.n != esize || t.range_witness())
      throw std::invalid_argument("beta tables must be E x E with entries in E");
  return DynamicalPair{std::move(base), esize, std::move(alpha), std::move(beta)};
}

inline VerifyReport dynamical_pair_report(const DynamicalPair& P) {
  VerifyReport rep;
  if (auto tw = twist_witness(P.base)) {
    rep.add("the base twist is admissible", false, tw->witness);
    return rep;
  }
  rep.add("the base twist is admissible", true);
  const int n = P.gsize(), ne = P.esize;
  std::optional<std::vector<int>> wb;
  for (int a = 0; a < n && !wb; ++a)
    for (int b = 0; b < n && !wb; ++b)
      for (int s = 0; s < ne; ++s)
        if (!is_permutation(P.beta_tab(a, b).row(s))) {
          wb = {a, b, s};
          break;
        }
  rep.add("beta_{a,b}(s,-) is bijective", !wb, wb.value_or(std::vector<int>{}));

  std::vector<Permutation> laminv;
  for (int a = 0; a < n; ++a) laminv.push_back(P.base.phi[a].inverse());
  auto tri = [&](int x, int y) { return P.base.shelf.op(x, y); };
  auto dot = [&](int x, int y) { return laminv[x](y); }; // x.y = lambda_x^{-1}(y)

  std::optional<std::vector<int>> w1, w2, w3;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int u = 0; u < ne; ++u)
          for (int s = 0; s < ne; ++s)
            for (int t = 0; t < ne; ++t) {
              if (!w1 && P.alpha_at(a, tri(b, c), u, P.alpha_at(b, c, s, t)) !=
                             P.alpha_at(tri(a, b), tri(a, c), P.alpha_at(a, b, u, s),
                                        P.alpha_at(a, c, u, t)))
                w1 = {a, b, c, u, s, t};
              if (!w2 && P.alpha_at(dot(a, b), dot(a, c), P.beta_at(a, b, u, s),
                                    P.beta_at(a, c, u, t)) !=
                             P.beta_at(a, tri(b, c), u, P.alpha_at(b, c, s, t)))
                w2 = {a, b, c, u, s, t};
              if (!w3 && P.beta_at(dot(a, b), dot(a, c), P.beta_at(a, b, u, s),
                                   P.beta_at(a, c, u, t)) !=
                             P.beta_at(dot(b, tri(b, a)), dot(b, c),
                                       P.beta_at(b, tri(b, a), s, P.alpha_at(b, a, s, u)),
                                       P.beta_at(b, c, s, t)))
                w3 = {a, b, c, u, s, t};
            }
  rep.add("alpha_{a,b|>c}(u,alpha_{b,c}(s,t)) == alpha_{a|>b,a|>c}(alpha_{a,b}(u,s),alpha_{a,c}(u,t))",
          !w1, w1.value_or(std::vector<int>{}));
  rep.add("alpha_{a.b,a.c}(beta_{a,b}(u,s),beta_{a,c}(u,t)) == beta_{a,b|>c}(u,alpha_{b,c}(s,t))",
          !w2, w2.value_or(std::vector<int>{}));
  rep.add("beta_{a.b,a.c}(beta_{a,b}(u,s),beta_{a,c}(u,t)) == "
          "beta_{b.(b|>a),b.c}(beta_{b,b|>a}(s,alpha_{b,a}(s,u)),beta_{b,c}(s,t))",
          !w3, w3.value_or(std::vector<int>{}));
  return rep;
}

inline bool verify_dynamical_pair(const DynamicalPair& P) { return dynamical_pair_report(P).ok(); }

// (a,s) |> (b,t) = (a |> b, alpha_{a,b}(s,t)) on G x E, index (a,s) = a*|E|+s
inline Shelf dynamical_extension(const DynamicalPair& P) {
  const int n = P.gsize(), ne = P.esize;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int u = 0; u < ne; ++u)
          for (int s = 0; s < ne; ++s)
            for (int t = 0; t < ne; ++t)
              if (P.alpha_at(a, P.base.shelf.op(b, c), u, P.alpha_at(b, c, s, t)) !=
                  P.alpha_at(P.base.shelf.op(a, b), P.base.shelf.op(a, c),
                             P.alpha_at(a, b, u, s), P.alpha_at(a, c, u, t))) {
                VerifyReport rep;
                rep.add("alpha is a dynamical cocycle", false, {a, b, c, u, s, t});
                throw VerificationError(std::move(rep));
              }
  BinOpTable t(n * ne);
  for (int a = 0; a < n; ++a)
    for (int s = 0; s < ne; ++s)
      for (int b = 0; b < n; ++b)
        for (int v = 0; v < ne; ++v)
          t.at(a * ne + s, b * ne + v) = P.base.shelf.op(a, b) * ne + P.alpha_at(a, b, s, v);
  return make_shelf(t);
}

// Lambda_{(a,s)}(b,t) = (lambda_a(b), beta^{-1}_{a,lambda_a(b)}(s,t)), a twist
// on the extension; its inverse Gamma_{(a,u)}(b,v) = (lambda_a^{-1}(b), beta_{a,b}(u,v))
inline Twist twist_extension(const DynamicalPair& P) {
  auto rep = dynamical_pair_report(P);
  if (!rep.ok()) throw VerificationError(std::move(rep));
  Shelf ext = dynamical_extension(P);
  const int n = P.gsize(), ne = P.esize;
  std::vector<Permutation> laminv;
  for (int a = 0; a < n; ++a) laminv.push_back(P.base.phi[a].inverse());
  std::vector<Permutation> Lam, Gam;
  for (int a = 0; a < n; ++a)
    for (int s = 0; s < ne; ++s) {
      std::vector<int> limg(size_t(n) * ne), gimg(size_t(n) * ne);
      for (int b = 0; b < n; ++b) {
        int ab = P.base.phi[a](b);
        auto binv = Permutation(P.beta_tab(a, ab).row(s)).inverse();
        for (int t = 0; t < ne; ++t) {
          limg[size_t(b) * ne + t] = ab * ne + binv(t);
          gimg[size_t(b) * ne + t] = laminv[a](b) * ne + P.beta_at(a, b, s, t);
        }
      }
      Lam.emplace_back(limg);
      Gam.emplace_back(gimg);
    }
  for (size_t i = 0; i < Lam.size(); ++i)
    if (!(Lam[i] * Gam[i]).is_identity() || !(Gam[i] * Lam[i]).is_identity())
      throw std::logic_error("twist_extension: Gamma is not inverse to Lambda");
  Twist t{std::move(ext), std::move(Lam)};
  if (twist_witness(t)) throw std::logic_error("twist_extension: Lambda is not a twist");
  return t;
}

// ---------------------------------------------------------------------------
// hemi-semidirect products

inline bool is_shelf_action(const Shelf& s, const std::vector<Permutation>& psi,
                            std::vector<int>* witness = nullptr) {
  if (int(psi.size()) != s.n()) throw std::invalid_argument("is_shelf_action: one map per element");
  for (const auto& p : psi)
    if (p.n() != psi.front().n())
      throw std::invalid_argument("is_shelf_action: maps act on different carriers");
  for (int a = 0; a < s.n(); ++a)
    for (int b = 0; b < s.n(); ++b)
      if (!(psi[s.op(a, b)] * psi[a] == psi[a] * psi[b])) {
        if (witness) *witness = {a, b};
        return false;
      }
  return true;
}

// (a,u) |> (b,v) = (a |> b, psi_a(v))
inline Shelf hemi_shelf(const Shelf& s, const std::vector<Permutation>& psi) {
  std::vector<int> w;
  if (!is_shelf_action(s, psi, &w)) {
    VerifyReport rep;
    rep.add("psi_{a|>b} psi_a == psi_a psi_b", false, w);
    throw VerificationError(std::move(rep));
  }
  const int n = s.n(), ne = psi.front().n();
  BinOpTable t(n * ne);
  for (int a = 0; a < n; ++a)
    for (int u = 0; u < ne; ++u)
      for (int b = 0; b < n; ++b)
        for (int v = 0; v < ne; ++v) t.at(a * ne + u, b * ne + v) = s.op(a, b) * ne + psi[a](v);
  return make_shelf(t);
}

struct HemiPair {
  Twist base; // shelf (G,|>) with twist lambda
  int esize = 0;
  std::vector<Permutation> psi, sigma;

  int gsize() const { return base.n(); }
  int lambda(int a, int b) const { return base.phi[a](b); }
  // rho is always derived from the twist, never stored
  int rho(int b, int a) const {
    int c = base.phi[a](b);
    return base.phi[c].inverse()(base.shelf.op(c, a));
  }

  static HemiPair verified(Twist base, std::vector<Permutation> psi,
                           std::vector<Permutation> sigma);
};

inline VerifyReport hemi_pair_report(const HemiPair& H) {
  VerifyReport rep;
  if (auto tw = twist_witness(H.base)) {
    rep.add("the base twist is admissible", false, tw->witness);
    return rep;
  }
  rep.add("the base twist is admissible", true);
  std::vector<int> w;
  bool action = is_shelf_action(H.base.shelf, H.psi, &w);
  rep.add("psi_{a|>b} psi_a == psi_a psi_b", action, w);
  std::optional<std::vector<int>> w1, w2;
  for (int a = 0; a < H.gsize(); ++a)
    for (int b = 0; b < H.gsize(); ++b) {
      if (!w1 && !(H.sigma[a] * H.sigma[b] == H.sigma[H.lambda(a, b)] * H.sigma[H.rho(b, a)]))
        w1 = {a, b};
      if (!w2 && !(H.sigma[a] * H.psi[b] == H.psi[H.lambda(a, b)] * H.sigma[a])) w2 = {a, b};
    }
  rep.add("sigma_a sigma_b == sigma_{lambda_a(b)} sigma_{rho_b(a)}", !w1,
          w1.value_or(std::vector<int>{}));
  rep.add("sigma_a psi_b == psi_{lambda_a(b)} sigma_a", !w2, w2.value_or(std::vector<int>{}));
  return rep;
}

inline bool verify_hemi_pair(const HemiPair& H) { return hemi_pair_report(H).ok(); }

inline HemiPair HemiPair::verified(Twist base, std::vector<Permutation> psi,
                                   std::vector<Permutation> sigma) {
  if (psi.size() != size_t(base.n()) || sigma.size() != size_t(base.n()))
    throw std::invalid_argument("hemi pair needs one psi and one sigma per element of G");
  if (psi.empty() || sigma.front().n() != psi.front().n())
    throw std::invalid_argument("psi and sigma must act on the same coefficient carrier");
  HemiPair H{std::move(base), psi.front().n(), std::move(psi), std::move(sigma)};
  auto rep = hemi_pair_report(H);
  if (!rep.ok()) throw VerificationError(std::move(rep));
  return H;
}

// Lambda_{(a,u)}(b,v) = (lambda_a(b), sigma_a(v)) on the hemi shelf
inline Twist hemi_twist(const HemiPair& H) {
  Shelf ext = hemi_shelf(H.base.shelf, H.psi);
  const int n = H.gsize(), ne = H.esize;
  std::vector<Permutation> Lam;
  for (int a = 0; a < n; ++a)
    for (int u = 0; u < ne; ++u) {
      (void)u;
      std::vector<int> img(size_t(n) * ne);
      for (int b = 0; b < n; ++b)
        for (int v = 0; v < ne; ++v) img[size_t(b) * ne + v] = H.lambda(a, b) * ne + H.sigma[a](v);
      Lam.emplace_back(img);
    }
  Twist t{std::move(ext), std::move(Lam)};
  if (twist_witness(t))
    throw std::logic_error("hemi_twist: Lambda is not a twist although the pair verified");
  return t;
}

inline SolutionTable hemi_solution(const HemiPair& H) { return solution_from_twist(hemi_twist(H)); }

// The dynamical pair carried by a hemi pair: alpha_{a,b}(u,v) = psi_a(v) and
// beta_{a,b}(u,v) = sigma_a^{-1}(v).  beta has to invert sigma so that the
// generic twist extension (lambda_a(b), beta^{-1}_{a,lambda_a(b)}(s,t))
// reproduces (lambda_a(b), sigma_a(t)).
inline DynamicalPair dynamical_pair_from_hemi(const HemiPair& H) {
  const int n = H.gsize(), ne = H.esize;
  std::vector<BinOpTable> alpha, beta;
  for (int a = 0; a < n; ++a) {
    BinOpTable ta(ne), tb(ne);
    Permutation sinv = H.sigma[a].inverse();
    for (int u = 0; u < ne; ++u)
      for (int v = 0; v < ne; ++v) {
        ta.at(u, v) = H.psi[a](v);
        tb.at(u, v) = sinv(v);
      }
    for (int b = 0; b < n; ++b) {
      alpha.push_back(ta);
      beta.push_back(tb);
    }
  }
  DynamicalPair P = make_dynamical_pair(H.base, ne, std::move(alpha), std::move(beta));
  if (!verify_dynamical_pair(P))
    throw std::logic_error("dynamical_pair_from_hemi: induced pair fails the identities");
  if (dynamical_extension(P).tri != hemi_shelf(H.base.shelf, H.psi).tri)
    throw std::logic_error("dynamical_pair_from_hemi: extensions disagree");
  Twist via_pair = twist_extension(P), via_hemi = hemi_twist(H);
  for (int i = 0; i < n * ne; ++i)
    if (!(via_pair.phi[i] == via_hemi.phi[i]))
      throw std::logic_error("dynamical_pair_from_hemi: twist extensions disagree");
  return P;
}

// ---------------------------------------------------------------------------
// orders

// least h >= 1 with (psi_b psi_a)^h psi_b^{-h} == id for all a, b
inline std::optional<long long> m_psi(const std::vector<Permutation>& psi, long long bound = 64) {
  if (psi.empty()) throw std::invalid_argument("m_psi: empty family");
  for (long long h = 1; h <= bound; ++h) {
    bool all = true;
    for (size_t a = 0; a < psi.size() && all; ++a)
      for (size_t b = 0; b < psi.size() && all; ++b)
        all = ((psi[b] * psi[a]).power(h) * psi[b].power(-h)).is_identity();
    if (all) return h;
  }
  return std::nullopt;
}

struct HemiOrder {
  std::optional<long long> m_shelf, m_psi, order;
};

// o(r) = 2 lcm(m_shelf, m_psi) for |E| > 1 over a bijective base solution;
// cross-verified against the direct order of the product solution
inline HemiOrder hemi_order(const HemiPair& H, long long bound = 64) {
  if (H.esize <= 1) throw std::invalid_argument("hemi_order: needs |E| > 1");
  SolutionTable base = solution_from_twist(H.base);
  if (!is_bijective(base)) throw std::invalid_argument("hemi_order: base solution must be bijective");
  HemiOrder out;
  if (H.gsize() == 1)
    out.m_shelf = 1;
  else {
    if (!H.base.shelf.rack) throw std::invalid_argument("hemi_order: base shelf must be a rack");
    out.m_shelf = rack_N(H.base.shelf, bound);
  }
  out.m_psi = m_psi(H.psi, bound);
  if (out.m_shelf && out.m_psi) {
    out.order = 2 * lcm_ll(*out.m_shelf, *out.m_psi);
    long long direct = permutation_order(Permutation(hemi_solution(H).as_pair_map()));
    if (direct != *out.order)
      throw std::logic_error("hemi_order: closed form disagrees with direct iteration");
  }
  return out;
}

// ---------------------------------------------------------------------------
// decomposition of a di-skew brace solution

struct DiskewDecomposition {
  std::vector<int> G, E;   // group part and bar-units, as brace elements
  GroupTable add;          // (G, |-) reindexed by position in G
  DiSkewBrace skew;        // skew brace on G: a . b = a o b |- 0
  HemiPair pair;           // base = the skew brace twist over Conj(G); psi, sigma from the brace
  std::vector<int> F;      // brace element -> product index posG(g_a)*|E| + posE(e_a)
  SolutionTable brace_solution, product_solution;
};

inline DiskewDecomposition diskew_decompose(const DiSkewBrace& B) {
  auto md = mult_decompose(B);
  const std::vector<int>& G = md.bar.G;
  const std::vector<int>& E = B.halo();
  const int ng = int(G.size()), ne = int(E.size());
  std::vector<int> posG(B.n(), -1), posE(B.n(), -1);
  for (int i = 0; i < ng; ++i) posG[G[i]] = i;
  for (int i = 0; i < ne; ++i) posE[E[i]] = i;

  BinOpTable addt(ng), bullet(ng);
  for (int i = 0; i < ng; ++i)
    for (int j = 0; j < ng; ++j) {
      int p = B.vd(G[i], G[j]), q = B.vd(B.op(G[i], G[j]), B.zero);
      if (posG[p] < 0 || posG[q] < 0)
        throw std::logic_error("diskew_decompose: group part not closed");
      addt.at(i, j) = posG[p];
      bullet.at(i, j) = posG[q];
    }
  auto addG = is_group(addt);
  if (!addG || G[addG->identity] != B.zero)
    throw std::logic_error("diskew_decompose: (G,|-) is not a group with identity zero");
  DiSkewBrace skew = skew_brace(*addG, bullet);
  for (int i = 0; i < ng; ++i)
    for (int j = 0; j < ng; ++j)
      if (skew.lam(i, j) != posG[B.vd(B.lam(G[i], G[j]), B.zero)])
        throw std::logic_error("diskew_decompose: skew-brace twist is not lambda(.) |- 0");

  std::vector<Permutation> psi, sigma;
  for (int i = 0; i < ng; ++i) {
    std::vector<int> pimg(ne), simg(ne);
    for (int e = 0; e < ne; ++e) {
      int pv = B.dv(B.vd(G[i], E[e]), md.ginv[G[i]]); // g |- e -| g^{-1}
      int sv = B.lam(G[i], E[e]);
      if (posE[pv] < 0 || posE[sv] < 0)
        throw std::logic_error("diskew_decompose: action does not preserve bar-units");
      pimg[e] = posE[pv];
      simg[e] = posE[sv];
    }
    psi.emplace_back(pimg);
    sigma.emplace_back(simg);
  }
  HemiPair pair = HemiPair::verified(lambda_map(skew), std::move(psi), std::move(sigma));

  std::vector<int> F(B.n());
  std::vector<char> seen(size_t(ng) * ne, 0);
  for (int a = 0; a < B.n(); ++a) {
    F[a] = posG[md.bar.g[a]] * ne + posE[md.bar.e[a]];
    if (seen[F[a]]) throw std::logic_error("diskew_decompose: F is not injective");
    seen[F[a]] = 1;
  }

  SolutionTable brace_sol = diskew_solution(B), product_sol = hemi_solution(pair);
  DiskewDecomposition out{G, E, *addG, std::move(skew), std::move(pair),
                          F, std::move(brace_sol), std::move(product_sol)};
  for (int a = 0; a < B.n(); ++a)
    for (int b = 0; b < B.n(); ++b) {
      auto [c, d] = out.brace_solution.apply(a, b);
      if (out.product_solution.lambda(F[a], F[b]) != F[c] ||
          out.product_solution.rho(F[b], F[a]) != F[d])
        throw std::logic_error("diskew_decompose: F does not intertwine the two solutions");
    }
  return out;
}

// o(r) = 2 lcm(exp(G/Z(G)), m_psi) when |E| > 1; a singleton E falls back to
// direct iteration, checked against the conjugation-quandle formula whenever
// the lambda maps are trivial
inline std::optional<long long> diskew_order(const DiSkewBrace& B, long long bound = 64) {
  auto dec = diskew_decompose(B);
  long long direct = permutation_order(Permutation(dec.brace_solution.as_pair_map()));
  std::optional<long long> order;
  if (int(dec.E.size()) > 1) {
    auto mp = m_psi(dec.pair.psi, bound);
    if (mp) order = 2 * lcm_ll(quotient_exponent(dec.add), *mp);
  } else {
    order = direct;
    bool lambda_trivial = true;
    for (int a = 0; a < B.n() && lambda_trivial; ++a)
      for (int b = 0; b < B.n() && lambda_trivial; ++b) lambda_trivial = B.lam(a, b) == b;
    if (lambda_trivial && B.n() > 1 && direct != conj_order_formula(dec.add))
      throw std::logic_error("diskew_order: conjugation-quandle formula disagrees");
  }
  if (order && *order != direct)
    throw std::logic_error("diskew_order: closed form disagrees with direct iteration");
  return order;
}

} // inline namespace hemi
} // namespace ybe
