#include <catch2/catch_amalgamated.hpp>

#include "ybe/shelf.hpp"

using namespace ybe;

namespace {

// direct iteration of the derived map r(a,b) = (b, b|>a) on pairs
std::pair<int, int> iterate_derived(const Shelf& s, int a, int b, long long k) {
  for (long long i = 0; i < k; ++i) {
    int na = b, nb = s.op(b, a);
    a = na;
    b = nb;
  }
  return {a, b};
}

// brute-force count of self-distributive tables on 3 elements (3^9 candidates)
std::pair<int, int> brute_shelves3() {
  int shelves = 0, racks = 0;
  BinOpTable t(3);
  for (int code = 0; code < 19683; ++code) {
    int c = code;
    for (auto& cell : t.cells) {
      cell = c % 3;
      c /= 3;
    }
    if (self_distributivity_witness(t)) continue;
    ++shelves;
    bool rack = true;
    for (int a = 0; a < 3 && rack; ++a) rack = is_permutation(t.row(a));
    racks += rack;
  }
  return {shelves, racks};
}

} // namespace

TEST_CASE("make_shelf classifies racks and quandles") {
  Shelf tq = trivial_quandle(3);
  CHECK(tq.rack);
  CHECK(tq.quandle);

  Shelf c3 = constant_shelf({1, 2, 0}); // a |> b = b+1: a rack but not a quandle
  CHECK(c3.rack);
  CHECK_FALSE(c3.quandle);

  Shelf proj = constant_shelf({0, 0}); // non-bijective translations: shelf only
  CHECK_FALSE(proj.rack);
  CHECK_FALSE(proj.quandle);

  CHECK(conj_quandle(sym3()).quandle);
  CHECK(core_quandle(cyclic(4)).quandle);
}

TEST_CASE("shelf_report rejects non-self-distributive tables with a witness") {
  // L_0 swaps, L_1 fixes: t(0, t(0,0)) = 0 but t(t(0,0), t(0,0)) = 1
  BinOpTable t = BinOpTable::from_rows({{1, 0}, {0, 1}});
  VerifyReport rep = shelf_report(t);
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.first_failure());
  CHECK(rep.first_failure()->axiom == "a|>(b|>c) == (a|>b)|>(a|>c)");
  CHECK(rep.first_failure()->witness.size() == 3);
  CHECK_THROWS_AS(make_shelf(t), VerificationError);
}

TEST_CASE("conjugation quandle values match group conjugation") {
  GroupTable s3 = sym3();
  Shelf q = conj_quandle(s3);
  for (int a = 0; a < 6; ++a) CHECK(q.op(a, a) == a);
  CHECK(q.op(1, 2) == 5); // (01)^{-1} (02)... conjugating transpositions moves them
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(q.op(a, b) == s3.mul(s3.mul(s3.inv(a), b), a));
}

TEST_CASE("closed-form powers of the derived map agree with iteration") {
  std::vector<Shelf> racks = {trivial_quandle(3), constant_shelf({1, 2, 0}),
                              conj_quandle(sym3()), core_quandle(cyclic(5)),
                              conj_quandle(quaternion8())};
  for (const Shelf& s : racks)
    for (int a = 0; a < s.n(); ++a)
      for (int b = 0; b < s.n(); ++b)
        for (long long m = 0; m <= 5; ++m) {
          CHECK(rack_power_even(s, a, b, m) == iterate_derived(s, a, b, 2 * m));
          CHECK(rack_power_odd(s, a, b, m) == iterate_derived(s, a, b, 2 * m + 1));
        }
}

TEST_CASE("rack power helpers require a rack") {
  Shelf proj = constant_shelf({0, 0, 0});
  CHECK_THROWS_AS(rack_power_even(proj, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(rack_M(proj), std::invalid_argument);
  CHECK_THROWS_AS(derived_order(proj), std::invalid_argument);
}

TEST_CASE("derived order case analysis: non-quandle racks") {
  DerivedOrder d = derived_order(constant_shelf({1, 2, 0}));
  CHECK(d.case_used == "non-quandle: order = 2N");
  CHECK_FALSE(d.M.has_value()); // (L_b L_a)^m L_b^{-m}(b) = b+2m can never be a for all a,b
  CHECK(d.N == 3);              // least m with 3 | 2m... via f^m = id, f a 3-cycle
  CHECK(d.order == 6);
}

TEST_CASE("derived order case analysis: quandles") {
  SECTION("M < N on the dihedral quandle of Z3") {
    // a |> b = 2a - b: translations are involutions, M = 1, N = 3
    DerivedOrder d = derived_order(core_quandle(cyclic(3)));
    CHECK(d.case_used == "quandle, M < N: order = 2M+1");
    CHECK(d.M == 1);
    CHECK(d.N == 3);
    CHECK(d.order == 3);
  }
  SECTION("M beyond the bound on the trivial quandle") {
    DerivedOrder d = derived_order(trivial_quandle(4));
    CHECK(d.case_used == "quandle, M exceeds bound: order = 2N");
    CHECK_FALSE(d.M.has_value());
    CHECK(d.N == 1);
    CHECK(d.order == 2); // the flip
  }
  SECTION("conjugation and core quandles") {
    DerivedOrder dc = derived_order(conj_quandle(sym3()));
    CHECK(dc.order == 12);
    CHECK(dc.N == 6);
    DerivedOrder dk = derived_order(core_quandle(cyclic(4)));
    CHECK(dk.order == 4);
    CHECK(dk.N == 2);
  }
}

TEST_CASE("group formulas match the case analysis") {
  CHECK(conj_order_formula(sym3()) == 12);
  CHECK(conj_order_formula(cyclic(5)) == 2); // abelian: quotient is trivial
  CHECK(core_order_formula(cyclic(4)) == 4);
  CHECK(core_order_formula(klein4()) == 2);
  CHECK(*derived_order(conj_quandle(sym3())).order == conj_order_formula(sym3()));
  CHECK(*derived_order(core_quandle(cyclic(4))).order == core_order_formula(cyclic(4)));
  CHECK_THROWS_AS(conj_order_formula(cyclic(1)), std::invalid_argument);
  CHECK_THROWS_AS(core_order_formula(cyclic(1)), std::invalid_argument);
}

TEST_CASE("exhaustive rack enumeration at tiny sizes") {
  CHECK(enumerate_racks(1).size() == 1);
  CHECK(enumerate_racks(2).size() == 2);
  auto r3 = enumerate_racks(3);
  CHECK(r3.size() == 13);
  int quandles3 = 0;
  for (const Shelf& s : r3) quandles3 += s.quandle;
  CHECK(quandles3 == 5); // trivial + dihedral + three one-swap quandles
  auto r4 = enumerate_racks(4);
  CHECK(r4.size() == 114);
  int quandles4 = 0;
  for (const Shelf& s : r4) quandles4 += s.quandle;
  CHECK(quandles4 == 36);
  CHECK_THROWS_AS(enumerate_racks(5), std::invalid_argument);
}

TEST_CASE("exhaustive shelf enumeration matches a table scan") {
  CHECK(enumerate_shelves(1).size() == 1);
  CHECK(enumerate_shelves(2).size() == 9);
  auto s3 = enumerate_shelves(3);
  auto [shelves, racks] = brute_shelves3();
  CHECK(int(s3.size()) == shelves);
  CHECK(shelves == 224);
  CHECK(racks == 13);
  int racks_in_list = 0;
  for (const Shelf& s : s3) racks_in_list += s.rack;
  CHECK(racks_in_list == racks);
  CHECK_THROWS_AS(enumerate_shelves(5), std::invalid_argument);
}

TEST_CASE("conjugation rack of a digroup") {
  // on a group digroup it is the conjugation quandle
  GDigroup d = group_as_digroup(sym3());
  Shelf r = conjugation_rack(d);
  CHECK(r.tri == conj_quandle(sym3()).tri);

  // on an action digroup with a nontrivial action it is a rack, not a quandle
  std::vector<Permutation> psi = {Permutation::identity(2), Permutation({1, 0})};
  GDigroup a = from_group_action(cyclic(2), 2, psi);
  Shelf s = conjugation_rack(a);
  CHECK(s.rack);
  CHECK_FALSE(s.quandle);
  DerivedOrder o = derived_order(s); // self-checks the formula against iteration
  CHECK(o.order.has_value());
}
