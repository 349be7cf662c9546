#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "copula.hpp"
#include "sampling.hpp"
#include "shuffle.hpp"

using namespace nonex;

namespace {

ShuffleStructure two_cell_extremal() {
  // the d = 2 extremal structure written out by hand
  ShuffleStructure s;
  s.dim = 2;
  s.cells.push_back({{Rat(1, 3), Rat(0)}, {Rat(1), Rat(2, 3)}, BaseTag::Min});
  s.cells.push_back({{Rat(0), Rat(2, 3)}, {Rat(1, 3), Rat(1)}, BaseTag::Min});
  return s;
}

std::vector<Rat> rat_vec(std::initializer_list<Rat> xs) { return {xs}; }

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) {
    path = (std::filesystem::temp_directory_path() / name).string();
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE("shuffle") {

TEST_CASE("base tags round-trip through text") {
  CHECK(base_str(BaseTag::Min) == "min");
  CHECK(base_str(BaseTag::Independence) == "independence");
  CHECK(parse_base("min") == BaseTag::Min);
  CHECK(parse_base("independence") == BaseTag::Independence);
  CHECK_THROWS_AS(parse_base("diagonal"), ParseError);
}

TEST_CASE("hand-built structure validates and evaluates") {
  auto s = two_cell_extremal();
  auto r = validate(s);
  CHECK(r.ok());
  CHECK(r.first_failure().empty());
  CHECK(s.cells[0].mass() == Rat(2, 3));
  CHECK(s.cells[1].mass() == Rat(1, 3));

  CHECK(evaluate_shuffle(s, rat_vec({Rat(1, 3), Rat(2, 3)})) == 0);
  CHECK(evaluate_shuffle(s, rat_vec({Rat(2, 3), Rat(1, 3)})) == Rat(1, 3));
  CHECK(evaluate_shuffle(s, rat_vec({Rat(1), Rat(1)})) == 1);
  CHECK(evaluate_shuffle(s, rat_vec({Rat(0), Rat(1)})) == 0);
}

TEST_CASE("validation rejects each broken condition with a witness") {
  auto s = two_cell_extremal();

  SUBCASE("overlapping intervals") {
    s.cells[1].hi[0] = Rat(1, 2);  // axis-1 intervals now overlap on [1/3,1/2]
    auto r = validate(s);
    CHECK(r.finite_ok);
    CHECK_FALSE(r.overlap_ok);
    CHECK_FALSE(r.hypercube_ok);  // lengths now differ within the cell too
    CHECK(r.overlap_witness.find("overlap") != std::string::npos);
    CHECK_FALSE(r.ok());
    CHECK(r.first_failure() == r.overlap_witness);
  }

  SUBCASE("length mismatch inside a cell") {
    s.cells[0].hi[1] = Rat(1, 2);
    auto r = validate(s);
    CHECK_FALSE(r.hypercube_ok);
    CHECK_FALSE(r.partition_ok);
    CHECK(r.hypercube_witness.find("length") != std::string::npos);
  }

  SUBCASE("axis does not partition") {
    s.cells.pop_back();
    auto r = validate(s);
    CHECK(r.finite_ok);
    CHECK(r.overlap_ok);
    CHECK(r.hypercube_ok);
    CHECK_FALSE(r.partition_ok);
  }

  SUBCASE("interval outside the unit cube") {
    s.cells[0].hi[0] = Rat(3, 2);
    auto r = validate(s);
    CHECK_FALSE(r.finite_ok);
  }

  SUBCASE("inverted interval") {
    std::swap(s.cells[0].lo[0], s.cells[0].hi[0]);
    CHECK_FALSE(validate(s).finite_ok);
  }

  SUBCASE("ragged cell arity") {
    s.cells[0].hi.pop_back();
    CHECK_FALSE(validate(s).finite_ok);
  }

  SUBCASE("no cells") {
    s.cells.clear();
    CHECK_FALSE(validate(s).finite_ok);
  }
}

TEST_CASE("extremal structure matches the closed form, d = 2..6") {
  for (int d = 2; d <= 6; ++d) {
    auto s = extremal_shuffle_structure(d);
    CHECK(static_cast<int>(s.cells.size()) == d);
    CHECK(validate(s).ok());
    Rat total = 0;
    for (const auto& c : s.cells) total += c.mass();
    CHECK(total == 1);

    auto cf = c_star_closed_form(d);
    RatSampler rng(20 + static_cast<uint64_t>(d));
    for (int i = 0; i < 1000; ++i) {
      auto u = rng.point(d);
      CHECK(evaluate_shuffle(s, u) == cf->eval(u));
    }
  }
}

TEST_CASE("delta parameters are checked") {
  CHECK_THROWS_AS(DeltaVector::checked(3, {}), UnsupportedDimError);
  CHECK_THROWS_AS(DeltaVector::checked(5, {Rat(1, 6)}), UnsupportedDimError);

  auto d2 = DeltaVector::checked(2, {});
  CHECK(d2.values == rat_vec({Rat(0)}));
  CHECK(DeltaVector::checked(2, {Rat(0)}).dim == 2);
  CHECK_THROWS_AS(DeltaVector::checked(2, {Rat(1, 3)}), ParseError);

  auto d4 = DeltaVector::checked(4, {Rat(1, 20), Rat(3, 20)});
  CHECK(d4.values.size() == 2);
  CHECK_THROWS_AS(DeltaVector::checked(4, {Rat(3, 20), Rat(1, 20)}), ParseError);  // unsorted
  CHECK_THROWS_AS(DeltaVector::checked(4, {Rat(1, 20)}), ParseError);              // wrong count
  CHECK_THROWS_AS(DeltaVector::checked(4, {Rat(1, 10), Rat(1, 10), Rat(0)}), ParseError);
  CHECK_THROWS_AS(DeltaVector::checked(4, {Rat(0), Rat(1, 4)}), ParseError);   // above the cap
  CHECK_THROWS_AS(DeltaVector::checked(4, {Rat(1, 20), Rat(1, 20)}), ParseError);  // wrong sum
  CHECK_THROWS_AS(DeltaVector::checked(6, {Rat(1, 7), Rat(1, 7), Rat(1, 7)}), ParseError);
  CHECK(DeltaVector::checked(6, {Rat(0), Rat(1, 7), Rat(1, 7)}).dim == 6);
}

TEST_CASE("family structure attains the sharp difference at its point") {
  auto dl = DeltaVector::checked(4, {Rat(1, 20), Rat(3, 20)});
  auto s = manifold_shuffle_structure(dl);
  CHECK(validate(s).ok());
  CHECK(s.cells.size() <= 5);  // 3n-1 with zero-mass cells dropped

  auto ut = manifold_point(dl);
  CHECK(ut == rat_vec({Rat(3, 5), Rat(3, 5), Rat(17, 20), Rat(19, 20)}));
  CHECK(evaluate_shuffle(s, ut) == 0);
  auto rev = nonex::apply(Perm::reversal(4), ut);
  CHECK(evaluate_shuffle(s, rev) == Rat(3, 5));
}

TEST_CASE("corner delta reproduces the distinguished point") {
  auto dl = DeltaVector::checked(4, {Rat(0), Rat(1, 5)});
  CHECK(manifold_point(dl) == u_star(4));
  auto s = manifold_shuffle_structure(dl);
  CHECK(validate(s).ok());
  auto u = u_star(4);
  auto rev = nonex::apply(Perm::reversal(4), u);
  CHECK(abs(evaluate_shuffle(s, u) - evaluate_shuffle(s, rev)) == Rat(3, 5));
}

TEST_CASE("for d = 2 the family collapses to the extremal structure") {
  auto s2 = manifold_shuffle_structure(DeltaVector::checked(2, {}));
  CHECK(validate(s2).ok());
  auto ex = two_cell_extremal();
  RatSampler rng(31);
  for (int i = 0; i < 300; ++i) {
    auto u = rng.point(2);
    CHECK(evaluate_shuffle(s2, u) == evaluate_shuffle(ex, u));
  }
}

TEST_CASE("random deltas keep the family valid and attaining, d = 4 and 6") {
  for (int d : {4, 6}) {
    RatSampler rng(40 + static_cast<uint64_t>(d));
    Rat target(d - 1, d + 1);
    target.canonicalize();
    for (int i = 0; i < 25; ++i) {
      auto dl = DeltaVector::checked(d, rng.delta_values(d));
      auto s = manifold_shuffle_structure(dl);
      CHECK(validate(s).ok());
      auto u = manifold_point(dl);
      auto rev = nonex::apply(Perm::reversal(d), u);
      CHECK(evaluate_shuffle(s, u) == 0);
      CHECK(abs(evaluate_shuffle(s, u) - evaluate_shuffle(s, rev)) == target);
    }
  }
}

TEST_CASE("uniform base spreads cell mass") {
  // same cells, different base: the diagonal concentrates more mass toward
  // the cell corner than the uniform spread does
  auto s2 = manifold_shuffle_structure(DeltaVector::checked(2, {}), BaseTag::Independence);
  CHECK(validate(s2).ok());
  CHECK(evaluate_shuffle(s2, rat_vec({Rat(2, 3), Rat(1, 3)})) == Rat(1, 6));

  auto dl = DeltaVector::checked(4, {Rat(1, 20), Rat(3, 20)});
  auto si = manifold_shuffle_structure(dl, BaseTag::Independence);
  CHECK(validate(si).ok());
  auto u = manifold_point(dl);
  auto rev = nonex::apply(Perm::reversal(4), u);
  CHECK(abs(evaluate_shuffle(si, u) - evaluate_shuffle(si, rev)) == Rat(663, 1280));

  // at the corner delta the cells line up with the grid and the uniform
  // base attains the sharp difference after all
  auto s0 = manifold_shuffle_structure(DeltaVector::checked(4, {Rat(0), Rat(1, 5)}),
                                       BaseTag::Independence);
  auto u0 = u_star(4);
  auto rev0 = nonex::apply(Perm::reversal(4), u0);
  CHECK(abs(evaluate_shuffle(s0, u0) - evaluate_shuffle(s0, rev0)) == Rat(3, 5));
}

TEST_CASE("float evaluation tracks the exact one") {
  auto s = extremal_shuffle_structure(4);
  RatSampler rng(50);
  for (int i = 0; i < 200; ++i) {
    auto u = rng.point(4);
    std::vector<double> uf;
    for (const Rat& x : u) uf.push_back(x.get_d());
    CHECK(std::abs(evaluate_shuffle_f(s, uf) - evaluate_shuffle(s, u).get_d()) <= 1e-12);
  }
}

TEST_CASE("structures round-trip through files") {
  TempFile f("shuffle_roundtrip_test.json");
  for (int d : {2, 3, 4, 6}) {
    ShuffleStructure s = (d % 2 == 0 && d > 2)
        ? manifold_shuffle_structure(DeltaVector::checked(
              d, RatSampler(60).delta_values(d)))
        : extremal_shuffle_structure(d);
    write_shuffle_file(s, f.path);
    auto back = read_shuffle_file(f.path);
    CHECK(back.dim == s.dim);
    CHECK(back.cells.size() == s.cells.size());
    RatSampler rng(61);
    for (int i = 0; i < 1000; ++i) {
      auto u = rng.point(d);
      CHECK(evaluate_shuffle(back, u) == evaluate_shuffle(s, u));
    }
  }
}

TEST_CASE("json text form") {
  auto s = two_cell_extremal();
  auto text = shuffle_to_json(s);
  auto back = shuffle_from_json(text);
  CHECK(back.dim == 2);
  REQUIRE(back.cells.size() == 2);
  CHECK(back.cells[0].lo == s.cells[0].lo);
  CHECK(back.cells[1].hi == s.cells[1].hi);
  CHECK(back.cells[0].base == BaseTag::Min);
}

TEST_CASE("structure files reject floating point and malformed input") {
  CHECK_THROWS_AS(shuffle_from_json("not json"), ParseError);
  CHECK_THROWS_AS(shuffle_from_json("{}"), ParseError);
  CHECK_THROWS_AS(shuffle_from_json(
      R"({"dim": 2, "cells": [{"base": "min", "intervals": [["0.5","1"],["0","0.5"]]}]})"),
      ParseError);
  CHECK_THROWS_AS(read_shuffle_file("/nonexistent/path.json"), ParseError);
}

TEST_CASE("the copula wrapper refuses invalid structures") {
  auto s = two_cell_extremal();
  s.cells.pop_back();
  CHECK_THROWS_AS(shuffle_copula(s), ParseError);
  try {
    shuffle_copula(s);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("invalid shuffle structure") != std::string::npos);
  }
}

}
