// Di-skew braces: a generalized digroup together with a second right-group
// operation o interacting through two distributivity laws, the induced
// lambda maps, and the bijective non-degenerate solution they produce.
#pragma once

#include "digroup.hpp"
#include "solution.hpp"

namespace ybe {
inline namespace diskew {

inline VerifyReport diskew_report(const BinOpTable& vd, const BinOpTable& dv,
                                  const BinOpTable& circ) {
  VerifyReport rep = g_digroup_report(vd, dv);
  if (circ.n != vd.n) throw std::invalid_argument("diskew_report: carrier mismatch");
  bool circ_assoc = is_associative(circ);
  rep.add("(a o b) o c == a o (b o c)", circ_assoc,
          circ_assoc ? std::vector<int>{} : std::vector<int>(associativity_witness(circ)->begin(),
                                                             associativity_witness(circ)->end()));
  bool circ_rg = circ_assoc && is_right_group(circ);
  rep.add("(D,o) is a right group", circ_rg);
  if (!rep.ok()) return rep;

  GDigroup d = GDigroup::unchecked(vd, dv);
  rep.add("bar-units coincide with o-idempotents", d.halo == idempotents(circ));
  const int n = vd.n;
  std::optional<std::vector<int>> w1, w2, w3;
  for (int a = 0; a < n && !w1; ++a)
    for (int b = 0; b < n && !w1; ++b)
      for (int c = 0; c < n; ++c) {
        if (circ(a, vd(b, c)) != vd(circ(a, b), vd(d.inv[a], circ(a, c)))) {
          w1 = {a, b, c};
          break;
        }
      }
  for (int a = 0; a < n && !w2; ++a)
    for (int b = 0; b < n && !w2; ++b)
      for (int c = 0; c < n; ++c) {
        if (circ(a, dv(b, c)) != dv(circ(a, b), dv(d.inv[a], circ(a, c)))) {
          w2 = {a, b, c};
          break;
        }
      }
  for (int a = 0; a < n && !w3; ++a)
    for (int b = 0; b < n && !w3; ++b)
      for (int c = 0; c < n; ++c) {
        if (circ(vd(a, b), c) != circ(dv(a, b), c)) {
          w3 = {a, b, c};
          break;
        }
      }
  rep.add("a o (b|-c) == (a o b) |- a^{-1} |- (a o c)", !w1, w1.value_or(std::vector<int>{}));
  rep.add("a o (b-|c) == (a o b) -| a^{-1} -| (a o c)", !w2, w2.value_or(std::vector<int>{}));
  rep.add("(a|-b) o c == (a-|b) o c", !w3, w3.value_or(std::vector<int>{}));
  return rep;
}

inline bool verify_diskew(const BinOpTable& vd, const BinOpTable& dv, const BinOpTable& circ) {
  return diskew_report(vd, dv, circ).ok();
}

struct DiSkewBrace {
  GDigroup dig;
  BinOpTable circ;
  int zero = 0;              // distinguished bar-unit, identity of the group component
  std::vector<int> m;        // m[a] = a o zero
  std::vector<int> u;        // unique bar-unit with m[a] o u[a] = a
  std::vector<int> minv;     // inverse of m[a] in the group (D o zero, o)
  BinOpTable leftdiv;        // leftdiv(a,b) solves a o x = b
  BinOpTable lam, laminv;    // lam(a,b) = lambda_a(b) = a^{-1} |- (a o b)

  int n() const { return dig.n(); }
  int vd(int a, int b) const { return dig.vd(a, b); }
  int dv(int a, int b) const { return dig.dv(a, b); }
  int op(int a, int b) const { return circ(a, b); }
  int lambda(int a, int b) const { return lam(a, b); }
  int lambda_inv(int a, int b) const { return laminv(a, b); }
  const std::vector<int>& halo() const { return dig.halo; }

  // group component of D, with o restricted to it
  std::vector<int> group_part() const {
    std::vector<int> g(m);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
  }

  static DiSkewBrace verified(const BinOpTable& vd, const BinOpTable& dv, const BinOpTable& circ,
                              int zero = -1);
};

inline DiSkewBrace DiSkewBrace::verified(const BinOpTable& vdt, const BinOpTable& dvt,
                                         const BinOpTable& circ, int zero) {
  auto rep = diskew_report(vdt, dvt, circ);
  if (!rep.ok()) throw VerificationError(std::move(rep));
  DiSkewBrace B{GDigroup::verified(vdt, dvt), circ, 0, {}, {}, {}, BinOpTable(circ.n),
                BinOpTable(circ.n), BinOpTable(circ.n)};
  const int n = circ.n;
  if (zero < 0) zero = B.dig.halo.front();
  if (!B.dig.is_bar_unit(zero)) throw std::invalid_argument("zero must be a bar-unit");
  B.zero = zero;

  B.m.resize(n);
  for (int a = 0; a < n; ++a) B.m[a] = circ(a, zero);
  std::vector<int> M = B.group_part();
  std::vector<int> pos(n, -1);
  for (int i = 0; i < int(M.size()); ++i) pos[M[i]] = i;
  BinOpTable gm(int(M.size()));
  for (int i = 0; i < int(M.size()); ++i)
    for (int j = 0; j < int(M.size()); ++j) {
      int p = circ(M[i], M[j]);
      if (pos[p] < 0) throw std::logic_error("group component is not closed under o");
      gm.at(i, j) = pos[p];
    }
  auto G = is_group(gm);
  if (!G || M[G->identity] != zero)
    throw std::logic_error("D o zero is not a group with identity zero");
  B.minv.resize(n);
  for (int a = 0; a < n; ++a) B.minv[a] = M[G->inv(pos[B.m[a]])];

  B.u.resize(n);
  for (int a = 0; a < n; ++a) {
    int found = -1;
    for (int e : B.dig.halo)
      if (circ(B.m[a], e) == a) {
        if (found >= 0) throw std::logic_error("bar-unit component is not unique");
        found = e;
      }
    if (found < 0) throw std::logic_error("no bar-unit component: a != m_a o u_a solvable");
    B.u[a] = found;
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) B.leftdiv.at(a, b) = circ(B.minv[a], b);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (circ(a, B.leftdiv(a, b)) != b || B.leftdiv(a, circ(a, b)) != b)
        throw std::logic_error("left division does not invert left translation by o");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) B.lam.at(a, b) = B.dig.vd(B.dig.inv[a], circ(a, b));
  for (int a = 0; a < n; ++a) {
    auto row = B.lam.row(a);
    if (!is_permutation(row)) throw std::logic_error("lambda_a is not bijective");
    auto inv = Permutation(row).inverse();
    for (int b = 0; b < n; ++b) B.laminv.at(a, b) = inv(b);
  }
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (B.lam(a, B.dig.vd(x, y)) != B.dig.vd(B.lam(a, x), B.lam(a, y)) ||
            B.lam(a, B.dig.dv(x, y)) != B.dig.dv(B.lam(a, x), B.lam(a, y)))
          throw std::logic_error("lambda_a is not a digroup automorphism");
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (B.lam.row(circ(a, b)) != compose_maps(B.lam.row(a), B.lam.row(b)))
        throw std::logic_error("lambda is not multiplicative over o");
      if (B.laminv(a, b) != B.leftdiv(a, B.dig.vd(a, b)))
        throw std::logic_error("lambda inverse formula a^- o (a|-b) failed");
      if (B.lam.row(B.dig.vd(a, b)) != B.lam.row(B.dig.dv(a, b)))
        throw std::logic_error("lambda_{a|-b} differs from lambda_{a-|b}");
    }
  return B;
}

// ---------------------------------------------------------------------------
// induced structures

// the lambda family as a twist over the conjugation rack of the digroup
inline Twist lambda_map(const DiSkewBrace& B) {
  Twist t{conjugation_rack(B.dig), {}};
  for (int a = 0; a < B.n(); ++a) t.phi.push_back(Permutation(B.lam.row(a)));
  if (auto w = twist_witness(t)) {
    VerifyReport rep;
    rep.axioms.push_back(*w);
    throw VerificationError(std::move(rep));
  }
  return t;
}

// r(a,b) = (lambda_a(b), lambda_a(b)^- o (a -| lambda_a(b))): bijective,
// non-degenerate, with the conjugation rack as derived shelf; must coincide
// with the solution produced by the twist correspondence
inline SolutionTable diskew_solution(const DiSkewBrace& B) {
  const int n = B.n();
  BinOpTable lambda(n), rho(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = B.lam(a, b);
      lambda.at(a, b) = ab;
      rho.at(b, a) = B.leftdiv(ab, B.dig.dv(a, ab));
    }
  auto r = make_solution(lambda, rho);
  if (!verify_ybe(r)) throw std::logic_error("diskew_solution: braid identity failed");
  auto nd = nondegeneracy(r);
  if (!nd.first || !nd.second || !is_bijective(r))
    throw std::logic_error("diskew_solution: expected a bijective non-degenerate solution");
  if (derived_shelf(r).tri != conjugation_rack(B.dig).tri)
    throw std::logic_error("diskew_solution: derived shelf is not the conjugation rack");
  if (solution_from_twist(lambda_map(B)) != r)
    throw std::logic_error("diskew_solution: twist route produced a different solution");
  return r;
}

// bar decomposition of the digroup at the brace's zero, together with the
// |- inverses inside the group part and sigma_x(y) = lambda_x(y) |- zero
struct MultDecomposition {
  BarDecomposition bar;
  std::vector<int> ginv;
  BinOpTable sigma;
};

inline MultDecomposition mult_decompose(const DiSkewBrace& B) {
  const int n = B.n();
  MultDecomposition md{decompose(B.dig, B.zero), std::vector<int>(n, -1), BinOpTable(n)};
  for (int g : md.bar.G) {
    for (int x : md.bar.G)
      if (B.vd(g, x) == B.zero && B.vd(x, g) == B.zero) {
        md.ginv[g] = x;
        break;
      }
    if (md.ginv[g] < 0) throw std::logic_error("group part has no |- inverse");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) md.sigma.at(x, y) = B.vd(B.lam(x, y), B.zero);
  // the lambda maps and o decompose along the group and bar-unit components
  for (int a = 0; a < n; ++a) {
    if (md.bar.g[B.m[a]] != md.bar.g[a] || B.m[md.bar.g[a]] != B.m[a])
      throw std::logic_error("group components of m_a and g_a do not match");
    for (int b = 0; b < n; ++b)
      if (B.lam(a, b) !=
          B.vd(md.sigma(md.bar.g[a], md.bar.g[b]), B.lam(md.bar.g[a], md.bar.e[b])))
        throw std::logic_error("lambda does not split as sigma on G and lambda on bar-units");
  }
  for (int a : md.bar.G)
    for (int b : md.bar.G)
      if (B.op(a, b) != B.vd(a, B.vd(md.sigma(a, b), B.lam(a, B.zero))))
        throw std::logic_error("o on the group part does not split through sigma");
  return md;
}

// inverse of the square map q(a) = lambda_a^{-1}(a): p(a) = (g_a^{-1})^- o e_a
inline std::vector<int> square_inverse(const DiSkewBrace& B) {
  const int n = B.n();
  auto md = mult_decompose(B);
  std::vector<int> p(n), q = square_map(diskew_solution(B));
  for (int a = 0; a < n; ++a) p[a] = B.leftdiv(md.ginv[md.bar.g[a]], md.bar.e[a]);
  for (int a = 0; a < n; ++a)
    if (q[p[a]] != a || p[q[a]] != a)
      throw std::logic_error("square_inverse: p is not inverse to the square map");
  return p;
}

// ---------------------------------------------------------------------------
// stock examples

// o = |-
inline DiSkewBrace trivial_diskew(const GDigroup& d) {
  return DiSkewBrace::verified(d.vdash, d.dashv, d.vdash);
}

// a o b = b -| a
inline DiSkewBrace almost_trivial_diskew(const GDigroup& d) {
  BinOpTable circ(d.n());
  for (int a = 0; a < d.n(); ++a)
    for (int b = 0; b < d.n(); ++b) circ.at(a, b) = d.dv(b, a);
  return DiSkewBrace::verified(d.vdash, d.dashv, circ);
}

// |- and -| coincide and form a group: the classical skew brace case
inline DiSkewBrace skew_brace(const GroupTable& add, const BinOpTable& circ) {
  return DiSkewBrace::verified(add.op, add.op, circ);
}

} // inline namespace diskew
} // namespace ybe
