#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "ybe/averaging.hpp"

using namespace ybe;

namespace {
const std::vector<int> kF = {0, 0, 2, 2}; // projection of V4 onto {0,2} along {0,1}
const std::vector<int> kG = {0, 0, 3, 3}; // kernel {0,1}, image {0,3}
} // namespace

TEST_CASE("averaging operators on tiny groups") {
  GroupTable z2 = cyclic(2);
  CHECK(is_left_averaging(z2, {0, 1}));  // the identity map
  CHECK(is_left_averaging(z2, {0, 0}));  // the constant identity map
  CHECK(is_left_averaging(z2, {1, 0}));  // x -> x+1 works too
  CHECK_FALSE(is_left_averaging(z2, {1, 1}));
  auto all = enumerate_left_averaging(z2);
  CHECK(all == std::vector<std::vector<int>>{{0, 0}, {1, 0}, {0, 1}});
  // abelian: the left and right conditions coincide
  CHECK(enumerate_right_averaging(z2) == all);
  CHECK_THROWS_AS(is_left_averaging(z2, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(is_left_averaging(z2, {0}), std::invalid_argument);
}

TEST_CASE("operator census over V4 and S3") {
  GroupTable v4 = klein4(), s3 = sym3();
  CHECK(enumerate_left_averaging(v4).size() == 17);
  CHECK(enumerate_averaging(v4).size() == 17);
  CHECK(enumerate_idempotent_endos(v4).size() == 8); // 0, id, and six projections
  CHECK(enumerate_left_averaging(s3).size() == 40);
  CHECK(enumerate_right_averaging(s3).size() == 40);
  CHECK(enumerate_averaging(s3).size() == 14);
  CHECK(enumerate_idempotent_endos(s3).size() == 5);

  // every idempotent endomorphism averages on both sides
  for (const auto& grp : {v4, s3})
    for (const auto& f : enumerate_idempotent_endos(grp)) CHECK(is_averaging(grp, f));
}

TEST_CASE("an averaging operator is idempotent exactly when it fixes the identity") {
  for (const auto& [name, grp] : group_corpus()) {
    INFO(name);
    long long seen = 0;
    for (const auto& f : enumerate_left_averaging(grp)) {
      CHECK(is_idempotent_map(f) == (f[grp.identity] == grp.identity));
      ++seen;
    }
    for (const auto& f : enumerate_right_averaging(grp)) {
      CHECK(is_idempotent_map(f) == (f[grp.identity] == grp.identity));
      ++seen;
    }
    CHECK(seen >= 3); // the zero map, the identity map, and right translations
  }
}

TEST_CASE("kernel and image helpers") {
  GroupTable v4 = klein4();
  CHECK(kernel(v4, kF) == std::vector<int>{0, 1});
  CHECK(image(kF) == std::vector<int>{0, 2});
  CHECK(is_endomorphism(v4, kF));
  CHECK(is_idempotent_map(kF));
  CHECK_FALSE(is_endomorphism(v4, {0, 1, 2, 0}));
  CHECK_FALSE(is_idempotent_map(std::vector<int>{1, 0}));
}

TEST_CASE("pair compatibility is stronger than averaging both maps") {
  GroupTable v4 = klein4();
  CHECK(averaging_pair_report(v4, kF, kG).ok());
  // g' = a & 1 averages, but (f, g') fails the mixed condition f(a)f(b) == f(a g(b))
  std::vector<int> gbit = {0, 1, 0, 1};
  CHECK(is_averaging(v4, gbit));
  VerifyReport rep = averaging_pair_report(v4, kF, gbit);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.first_failure()->axiom == "f(a)f(b) == f(a g(b))");
  CHECK(rep.first_failure()->witness == std::vector<int>{0, 2});
  CHECK_THROWS_AS(AveragingPair::verified(v4, kF, gbit), VerificationError);
}

TEST_CASE("the pair digroup has the shared kernel as bar-units") {
  GroupTable v4 = klein4();
  AveragingPair P = AveragingPair::verified(v4, kF, kG);
  GDigroup d = digroup_from_pair(P);
  CHECK(d.halo == std::vector<int>{0, 1});
  CHECK(d.vd(2, 1) == 3); // f(2) + 1
  CHECK(d.dv(1, 2) == 2); // 1 + g(2)
  CHECK(check_digroup_identities(d));

  // the bar-unit need not be the group identity
  GDigroup z = digroup_from_pair(AveragingPair::verified(cyclic(2), {1, 0}, {1, 0}));
  CHECK(z.halo == std::vector<int>{1});

  // the identity pair reproduces the group itself
  std::vector<int> id = {0, 1, 2, 3};
  GDigroup g = digroup_from_pair(AveragingPair::verified(v4, id, id));
  CHECK(g.halo == std::vector<int>{0});
  CHECK(g.vdash == v4.op);
  CHECK(g.dashv == v4.op);
}

TEST_CASE("brace from a third operator on the left") {
  GroupTable v4 = klein4();
  AveragingPair P = AveragingPair::verified(v4, kF, kG);
  VerifyReport rep = left_operator_brace_report(P, kG);
  CHECK(rep.ok());
  DiSkewBrace B = diskew_from_left_operator(P, kG);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(B.op(a, b) == v4.mul(kG[a], b));
  SolutionTable r = diskew_solution(B);
  CHECK(nondegeneracy(r) == std::pair{true, true});
  CHECK(explicit_solution_left(P, kG) == r);
  CHECK(d_iso_invariants(r).order == 4);
}

TEST_CASE("brace from a third operator on the right") {
  GroupTable v4 = klein4();
  AveragingPair P = AveragingPair::verified(v4, kF, kG);
  CHECK(right_operator_brace_report(P, kG).ok());
  DiSkewBrace B = diskew_from_right_operator(P, kG);
  SolutionTable r = diskew_solution(B);
  CHECK(explicit_solution_right(P, kG) == r);
  CHECK(d_iso_invariants(r).order == 4);
}

TEST_CASE("operator brace reports reject unfit third operators") {
  GroupTable v4 = klein4();
  AveragingPair P = AveragingPair::verified(v4, kF, kG);
  // h = id satisfies the first two conditions on an abelian group but not the
  // balance condition h(f(a)b) == h(a g(b))
  VerifyReport rep = left_operator_brace_report(P, {0, 1, 2, 3});
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.first_failure()->axiom == "h(f(a)b) == h(a g(b))");
  CHECK(rep.first_failure()->witness == std::vector<int>{0, 1});
  CHECK_THROWS_AS(diskew_from_left_operator(P, {0, 1, 2, 3}), VerificationError);
  CHECK_THROWS_AS(diskew_from_right_operator(P, {0, 1, 2, 3}), VerificationError);
}

TEST_CASE("commuting idempotent endomorphisms induce a digroup") {
  GroupTable v4 = klein4();
  std::vector<int> gbit = {0, 1, 0, 1};
  GDigroup d = fg_commuting_digroup(v4, kF, gbit);
  // F(a) = f(a) (fg)(a)^{-1} = f(a) here, so bar-units are the kernel of f
  CHECK(d.halo == std::vector<int>{0, 1});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(d.vd(a, b) == v4.mul(kF[a], b));

  // f and g do not commute as maps
  CHECK_THROWS_AS(fg_commuting_digroup(v4, kF, kG), std::invalid_argument);
  // identity on S3: idempotent, commuting, but the image is not abelian
  std::vector<int> id6 = {0, 1, 2, 3, 4, 5};
  CHECK_THROWS_AS(fg_commuting_digroup(sym3(), id6, id6), std::invalid_argument);
  // non-idempotent input
  CHECK_THROWS_AS(fg_commuting_digroup(v4, {1, 0, 3, 2}, gbit), std::invalid_argument);
}

TEST_CASE("single-operator origin: found when it exists, refuted when not") {
  GroupTable v4 = klein4();
  GDigroup one_op = digroup_from_pair(AveragingPair::verified(v4, kF, kF));
  auto found = single_operator_origin(one_op, v4);
  REQUIRE(found);
  const auto& [h, iso] = *found;
  CHECK(is_averaging(v4, h));
  GDigroup rebuilt = digroup_from_pair(AveragingPair::verified(v4, h, h));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CHECK(iso[rebuilt.vd(a, b)] == one_op.vd(iso[a], iso[b]));
      CHECK(iso[rebuilt.dv(a, b)] == one_op.dv(iso[a], iso[b]));
    }

  // the (f,g) digroup needs genuinely different maps on the two sides
  GDigroup two_op = digroup_from_pair(AveragingPair::verified(v4, kF, kG));
  CHECK(refute_single_operator_origin(two_op, v4));
}
