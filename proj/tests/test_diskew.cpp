#include <catch2/catch_amalgamated.hpp>

#include "ybe/diskew.hpp"

using namespace ybe;

namespace {

// a o b = a + b + 2ab on Z4: the circle group is the Klein group
BinOpTable radical_circ4() {
  BinOpTable circ(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) circ.at(a, b) = (a + b + 2 * a * b) % 4;
  return circ;
}

GDigroup swap_action_digroup() {
  std::vector<Permutation> psi = {Permutation::identity(3), Permutation({0, 2, 1})};
  return from_group_action(cyclic(2), 3, psi);
}

} // namespace

TEST_CASE("the radical brace on Z4") {
  DiSkewBrace B = skew_brace(cyclic(4), radical_circ4());
  CHECK(B.zero == 0);
  CHECK(B.halo() == std::vector<int>{0});
  CHECK(exponent(*is_group(B.circ)) == 2); // circle group is V4
  // lambda_a(b) = -a + a o b = b + 2ab
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(B.lambda(a, b) == (b + 2 * a * b) % 4);

  SolutionTable r = diskew_solution(B);
  CHECK(is_bijective(r));
  CHECK(nondegeneracy(r) == std::pair{true, true});
  CHECK(d_iso_invariants(r).order == 2); // braces of abelian type are involutive
  CHECK(lyz_condition(r, B.circ));
}

TEST_CASE("both pairings of Z4 and V4 are skew braces") {
  CHECK(verify_diskew(klein4().op, klein4().op, cyclic(4).op));
  CHECK(verify_diskew(cyclic(4).op, cyclic(4).op, klein4().op));
  DiSkewBrace B = skew_brace(klein4(), cyclic(4).op);
  SolutionTable r = diskew_solution(B);
  CHECK(verify_ybe(r));
  CHECK(lyz_condition(r, B.circ));
}

TEST_CASE("trivial brace: o equals |- and lambda is the identity") {
  SECTION("over a group") {
    DiSkewBrace B = trivial_diskew(group_as_digroup(sym3()));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) CHECK(B.lambda(a, b) == b);
    SolutionTable r = diskew_solution(B);
    CHECK(r == derived_solution(conj_quandle(sym3())));
    CHECK(lyz_condition(r, B.circ));
    CHECK(d_iso_invariants(r).order == 12);
  }
  SECTION("over a digroup with several bar-units") {
    GDigroup d = swap_action_digroup();
    DiSkewBrace B = trivial_diskew(d);
    CHECK(B.halo() == std::vector<int>{0, 1, 2});
    CHECK(B.group_part().size() == 2);
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) CHECK(B.lambda(a, b) == b);
    SolutionTable r = diskew_solution(B);
    CHECK(r == derived_solution(conjugation_rack(d)));
    // the compatibility a o b == lambda_a(b) o rho_b(a) needs |- == -|
    CHECK_FALSE(lyz_condition(r, B.circ));
  }
}

TEST_CASE("the brace solution does not depend on the chosen zero") {
  GDigroup d = swap_action_digroup();
  DiSkewBrace a = DiSkewBrace::verified(d.vdash, d.dashv, d.vdash, 0);
  DiSkewBrace b = DiSkewBrace::verified(d.vdash, d.dashv, d.vdash, 1);
  CHECK(a.zero != b.zero);
  CHECK(diskew_solution(a) == diskew_solution(b));
  CHECK_THROWS_AS(DiSkewBrace::verified(d.vdash, d.dashv, d.vdash, 4), std::invalid_argument);
}

TEST_CASE("almost trivial brace: o is -| reversed and lambda is conjugation") {
  GDigroup d = group_as_digroup(sym3());
  DiSkewBrace B = almost_trivial_diskew(d);
  GroupTable s3 = sym3();
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(B.lambda(a, b) == s3.mul(s3.mul(s3.inv(a), b), a));
  SolutionTable r = diskew_solution(B);
  CHECK(d_iso_invariants(r).order == 12);
  // on an abelian group the almost trivial brace is the trivial one
  GDigroup z = group_as_digroup(cyclic(4));
  CHECK(almost_trivial_diskew(z).circ == trivial_diskew(z).circ);
}

TEST_CASE("diskew_report pinpoints the broken requirement") {
  BinOpTable lz(3), rz(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      lz.at(a, b) = a;
      rz.at(a, b) = b;
    }
  VerifyReport left = diskew_report(cyclic(3).op, cyclic(3).op, lz);
  REQUIRE_FALSE(left.ok());
  CHECK(left.first_failure()->axiom == "(D,o) is a right group");

  VerifyReport right = diskew_report(cyclic(3).op, cyclic(3).op, rz);
  REQUIRE_FALSE(right.ok());
  CHECK(right.first_failure()->axiom == "bar-units coincide with o-idempotents");

  // a perfectly good group for o whose identity is not a bar-unit
  BinOpTable shifted(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) shifted.at(a, b) = (a + b + 2) % 4;
  VerifyReport shift = diskew_report(cyclic(4).op, cyclic(4).op, shifted);
  REQUIRE_FALSE(shift.ok());
  CHECK(shift.first_failure()->axiom == "bar-units coincide with o-idempotents");

  // S3 as circle group over Z6: distributivity is what fails
  VerifyReport dist = diskew_report(cyclic(6).op, cyclic(6).op, sym3().op);
  REQUIRE_FALSE(dist.ok());
  CHECK(dist.first_failure()->axiom == "a o (b|-c) == (a o b) |- a^{-1} |- (a o c)");
  CHECK(dist.first_failure()->witness.size() == 3);

  CHECK_THROWS_AS(DiSkewBrace::verified(cyclic(6).op, cyclic(6).op, sym3().op),
                  VerificationError);
  CHECK_THROWS_AS(diskew_report(cyclic(3).op, cyclic(3).op, BinOpTable(4)),
                  std::invalid_argument);
}

TEST_CASE("the lambda family is a twist over the conjugation rack") {
  for (DiSkewBrace B : {skew_brace(cyclic(4), radical_circ4()),
                        trivial_diskew(swap_action_digroup()),
                        almost_trivial_diskew(group_as_digroup(sym3()))}) {
    Twist t = lambda_map(B);
    CHECK(t.shelf.tri == conjugation_rack(B.dig).tri);
    CHECK(verify_twist(t));
    CHECK(solution_from_twist(t) == diskew_solution(B));
    CHECK(derived_shelf(diskew_solution(B)).tri == t.shelf.tri);
  }
}

TEST_CASE("multiplicative decomposition splits lambda along the bar parts") {
  DiSkewBrace B = trivial_diskew(swap_action_digroup());
  MultDecomposition md = mult_decompose(B);
  CHECK(md.bar.G.size() * B.halo().size() == size_t(B.n()));
  for (int g : md.bar.G) {
    CHECK(B.vd(g, md.ginv[g]) == B.zero);
    CHECK(B.vd(md.ginv[g], g) == B.zero);
  }
  // sigma rows act on the group part; for the trivial brace sigma_x = id on G
  for (int x = 0; x < B.n(); ++x)
    for (int g : md.bar.G) CHECK(md.sigma(x, g) == g);
}

TEST_CASE("the square map inverse follows the component formula") {
  SECTION("trivial brace: the square map is the identity") {
    DiSkewBrace B = trivial_diskew(swap_action_digroup());
    std::vector<int> p = square_inverse(B);
    for (int a = 0; a < B.n(); ++a) CHECK(p[a] == a);
  }
  SECTION("radical brace on Z4") {
    DiSkewBrace B = skew_brace(cyclic(4), radical_circ4());
    std::vector<int> p = square_inverse(B);
    std::vector<int> q = square_map(diskew_solution(B));
    CHECK(is_permutation(p));
    for (int a = 0; a < 4; ++a) {
      CHECK(p[q[a]] == a);
      CHECK(q[p[a]] == a);
    }
  }
}
