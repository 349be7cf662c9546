#include "doctest.h"

#include "axioms.hpp"
#include "copula.hpp"
#include "report.hpp"
#include "shuffle.hpp"

using namespace nonex;

TEST_SUITE("axioms") {

TEST_CASE("genuine copulas pass every check") {
  for (const auto& c : {frechet_upper(3), independence(3), c_star_closed_form(3),
                        frechet_lower(2), c_star_closed_form(2)}) {
    auto r = verify_axioms(*c, 300, 300, 1);
    CHECK(r.all_pass());
    CHECK(r.grounded.pass);
    CHECK(r.uniform_margins.pass);
    CHECK(r.d_increasing.pass);
    CHECK(r.lipschitz.pass);
    CHECK(r.claims_copula);
    CHECK(r.points_checked == 900);
    CHECK(r.seed == 1);
  }
}

TEST_CASE("the lower envelope fails above dimension 2, with the canonical witness") {
  auto w3 = frechet_lower(3);
  auto r = verify_axioms(*w3, 300, 300, 0);
  CHECK_FALSE(r.claims_copula);
  CHECK(r.grounded.pass);
  CHECK(r.uniform_margins.pass);
  CHECK(r.lipschitz.pass);
  CHECK_FALSE(r.d_increasing.pass);
  CHECK(r.d_increasing.witness ==
        "box [1/2,1]x[1/2,1]x[1/2,1] has volume -1/2");
  CHECK_FALSE(r.all_pass());
}

TEST_CASE("the witness is the same whatever the seed") {
  auto w3 = frechet_lower(3);
  for (uint64_t seed : {0ull, 7ull, 123456789ull}) {
    auto r = check_d_increasing(*w3, 500, seed);
    CHECK_FALSE(r.pass);
    CHECK(r.witness == "box [1/2,1]x[1/2,1]x[1/2,1] has volume -1/2");
  }
}

TEST_CASE("shuffle-built copulas pass, including the uniform base") {
  auto s = manifold_shuffle_structure(
      DeltaVector::checked(4, {Rat(1, 20), Rat(3, 20)}));
  auto c = shuffle_copula(s);
  auto r = verify_axioms(*c, 200, 200, 2);
  CHECK(r.all_pass());

  auto si = manifold_shuffle_structure(
      DeltaVector::checked(4, {Rat(1, 20), Rat(3, 20)}), BaseTag::Independence);
  auto ci = shuffle_copula(si);
  CHECK(verify_axioms(*ci, 200, 200, 2).all_pass());
}

TEST_CASE("individual checks count what they looked at") {
  auto c = independence(3);
  auto g = check_grounded(*c, 50, 3);
  CHECK(g.pass);
  CHECK(g.checked == 50);
  auto m = check_uniform_margins(*c, 50, 3);
  CHECK(m.pass);
  CHECK(m.checked == 50);
  auto l = check_lipschitz(*c, 50, 3);
  CHECK(l.pass);
  CHECK(l.checked == 50);
  auto b = check_d_increasing(*c, 50, 3);
  CHECK(b.pass);
  CHECK(b.checked == 1000 + 50);  // directed lattice pass for d = 3, then random
}

TEST_CASE("reports are deterministic in the seed") {
  auto c = c_star_closed_form(3);
  auto a = verify_axioms(*c, 120, 120, 9);
  auto b = verify_axioms(*c, 120, 120, 9);
  CHECK(render_axioms(a, c->describe()) == render_axioms(b, c->describe()));
}

TEST_CASE("margin audit at the pinned configuration") {
  auto c5 = c_star_closed_form(5);
  auto a = audit_margins(*c5, 1, 6);
  CHECK(a.dim == 5);
  CHECK(a.k == 1);
  CHECK(a.pairs == 10);  // 5 choose 2 margin pairs of order 4
  CHECK(a.points_checked == 10 * 2401);
  CHECK(a.bound == Rat(2, 3));
  CHECK(a.next_bound == Rat(3, 4));
  CHECK(a.max_pair_difference <= Rat(2, 3));
  CHECK(a.bound < a.next_bound);
  CHECK(a.pass);
  CHECK(a.witness.empty());
}

TEST_CASE("margin audit applies to any copula of high enough dimension") {
  auto c4 = c_star_closed_form(4);
  auto a = audit_margins(*c4, 1, 5);
  CHECK(a.pairs == 6);  // 4 choose 2
  CHECK(a.bound == Rat(3, 5));
  CHECK(a.next_bound == Rat(2, 3));
  CHECK(a.pass);
}

TEST_CASE("margin audit argument validation") {
  CHECK_THROWS_AS(audit_margins(*c_star_closed_form(3), 1, 4), DimError);
  CHECK_THROWS_AS(audit_margins(*c_star_closed_form(5), 2, 4), DimError);
  CHECK_THROWS_AS(audit_margins(*c_star_closed_form(5), 0, 4), DimError);
  CHECK_THROWS_AS(audit_margins(*c_star_closed_form(5), 1, 0), StepError);
}

}
