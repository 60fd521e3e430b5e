#include <doctest.h>

#include <set>

#include "hecke/beta_set.hpp"
#include "hecke/error.hpp"
#include "hecke/params.hpp"
#include "hecke/partition.hpp"
#include "oracles.hpp"

using namespace hecke;

TEST_SUITE("core") {

TEST_CASE("partition construction and parsing") {
  Partition p{4, 3, 3, 1, 0, 0};
  CHECK(p.length() == 4);
  CHECK(p.size() == 11);
  CHECK(p.part(1) == 4);
  CHECK(p.part(5) == 0);
  CHECK(to_string(p) == "4,3,3,1");
  CHECK(to_string(Partition{}) == "-");

  CHECK(parse_bipartition("4,3,3,1|2,1") == Bipartition{{4, 3, 3, 1}, {2, 1}});
  CHECK(parse_bipartition("-|3") == Bipartition{{}, {3}});
  CHECK(parse_partition("-") == Partition{});

  SUBCASE("monotonicity error names the part") {
    try {
      parse_bipartition("2,3|1");
      FAIL("expected MonotonicityError");
    } catch (const MonotonicityError& e) {
      CHECK(e.part_index() == 2);
      CHECK(e.code() == ErrorCode::Monotonicity);
    }
  }
  SUBCASE("parse errors carry a position") {
    try {
      parse_bipartition("2,x|1");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(parse_bipartition("2,1"), ParseError);
    CHECK_THROWS_AS(parse_bipartition("2|1|1"), ParseError);
    CHECK_THROWS_AS(parse_partition(""), ParseError);
    CHECK_THROWS_AS(parse_partition("0"), Error);
    CHECK_THROWS_AS(parse_partition("3,,1"), ParseError);
  }
  CHECK_THROWS_AS(Partition({2, -1}), Error);
}

TEST_CASE("conjugate and first-row removal") {
  CHECK(conjugate(Partition{4, 4, 2}) == Partition{3, 3, 2, 2});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{1, 1, 1}) == Partition{3});
  CHECK(remove_first_row(Partition{4, 3, 3, 1}) == Partition{3, 3, 1});
  CHECK(remove_first_row(Partition{5}) == Partition{});
  CHECK(remove_first_row(Partition{}) == Partition{});

  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : partitions(n)) {
      CHECK(conjugate(p) == oracle::conjugate(p));
      CHECK(conjugate(conjugate(p)) == p);
      CHECK(conjugate(p).size() == p.size());
    }
  }
}

TEST_CASE("dual") {
  CHECK(dual(Bipartition{{2}, {1, 1}}) == Bipartition{{2}, {1, 1}});
  CHECK(dual(Bipartition{{}, {3}}) == Bipartition{{1, 1, 1}, {}});
  Bipartition b{{4, 3, 3, 1}, {2, 1}};
  CHECK(dual(dual(b)) == b);
  for (int n = 0; n <= 7; ++n) {
    for (const auto& x : bipartitions(n)) CHECK(dual(dual(x)) == x);
  }
}

TEST_CASE("enumeration matches a recursive generator") {
  for (int n = 0; n <= 12; ++n) {
    auto ours = partitions(n);
    auto ref = oracle::all_partitions(n);
    CHECK(std::is_sorted(ours.begin(), ours.end()));
    CHECK(std::set<Partition>(ours.begin(), ours.end()) == std::set<Partition>(ref.begin(), ref.end()));
    CHECK(ours.size() == ref.size());
  }
  for (int n = 0; n <= 8; ++n) {
    auto ours = bipartitions(n);
    auto ref = oracle::all_bipartitions(n);
    CHECK(std::is_sorted(ours.begin(), ours.end()));
    CHECK(ours.size() == ref.size());
    CHECK(std::set<Bipartition>(ours.begin(), ours.end()) == std::set<Bipartition>(ref.begin(), ref.end()));
  }
  CHECK(partitions(0).size() == 1);
  CHECK(bipartitions(3).size() == 10);
}

TEST_CASE("dominance examples") {
  CHECK(dominance(Partition{3, 1}, Partition{2, 2}) == Dominance::Dominates);
  CHECK(dominance(Partition{2, 2}, Partition{3, 1}) == Dominance::DominatedBy);
  // 2 ≥ 1, 2 ≥ 2 on the first components but 2+1 < 2+2 on the second.
  CHECK(dominance(Bipartition{{2}, {1, 1}}, Bipartition{{1, 1}, {2}}) == Dominance::Incomparable);
  CHECK(dominance(Bipartition{{2}, {2}}, Bipartition{{1, 1}, {1, 1}}) == Dominance::Dominates);
  CHECK(dominance(Bipartition{{1}, {1}}, Bipartition{{}, {2}}) == Dominance::Dominates);
  CHECK(dominance(Partition{2, 1}, Partition{2, 1}) == Dominance::Equal);
  // Prefix sums 2,4,6 against 3,4,5,6: below at the first, above at the third.
  CHECK(dominance(Partition{2, 2, 2}, Partition{3, 1, 1, 1}) == Dominance::Incomparable);
  CHECK(dominance(Partition{3, 3}, Partition{4, 1, 1}) == Dominance::Incomparable);
}

TEST_CASE("dominance is a partial order on bipartitions") {
  for (int n = 0; n <= 7; ++n) {
    const auto all = bipartitions(n);
    for (const auto& a : all) {
      CHECK(dominates(a, a));
      for (const auto& b : all) {
        const bool ab = dominates(a, b);
        CHECK(ab == oracle::dominates(a, b));
        if (ab && dominates(b, a)) CHECK(a == b);
        const auto d = dominance(a, b);
        if (a == b) CHECK(d == Dominance::Equal);
        else if (ab) CHECK(d == Dominance::Dominates);
        else if (dominates(b, a)) CHECK(d == Dominance::DominatedBy);
        else CHECK(d == Dominance::Incomparable);
      }
    }
    // Transitivity on n ≤ 5 keeps the triple loop small.
    if (n <= 5) {
      for (const auto& a : all)
        for (const auto& b : all)
          for (const auto& c : all)
            if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
    }
  }
}

TEST_CASE("addable and removable nodes") {
  Bipartition b{{4, 4, 2}, {}};
  CHECK(removable_nodes(b) == std::vector<Node>{{2, 4, 1}, {3, 2, 1}});
  std::vector<Node> add1;
  for (auto nd : addable_nodes(b)) {
    if (nd.component == 1) add1.push_back(nd);
  }
  CHECK(add1 == std::vector<Node>{{1, 5, 1}, {3, 3, 1}, {4, 1, 1}});
  CHECK(removable_nodes(Bipartition{}).empty());
  CHECK(addable_nodes(Bipartition{}) == std::vector<Node>{{1, 1, 1}, {1, 1, 2}});
  CHECK(to_string(Node{2, 4, 1}) == "(2,4)_1");
}

TEST_CASE("addable and removable nodes agree with diagram mutation") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& b : bipartitions(n)) {
      std::set<Node> add, rem;
      for (int k = 1; k <= 2; ++k) {
        const auto& p = b.component(k);
        auto d = oracle::diagram(p);
        for (int i = 1; i <= p.length() + 1; ++i) {
          for (int j = 1; j <= p.part(1) + 1; ++j) {
            auto e = d;
            if (d.count({i, j})) {
              e.erase({i, j});
              if (oracle::is_young_diagram(e)) rem.insert({i, j, k});
            } else {
              e.insert({i, j});
              if (oracle::is_young_diagram(e)) add.insert({i, j, k});
            }
          }
        }
      }
      auto ours_add = addable_nodes(b);
      auto ours_rem = removable_nodes(b);
      CHECK(std::is_sorted(ours_add.begin(), ours_add.end()));
      CHECK(std::is_sorted(ours_rem.begin(), ours_rem.end()));
      CHECK(std::set<Node>(ours_add.begin(), ours_add.end()) == add);
      CHECK(std::set<Node>(ours_rem.begin(), ours_rem.end()) == rem);
      for (auto nd : ours_add) CHECK(remove_node(add_node(b, nd), nd) == b);
      for (auto nd : ours_rem) CHECK(add_node(remove_node(b, nd), nd) == b);
    }
  }
}

TEST_CASE("regime parsing") {
  CHECK(parse_params("inf-generic") == HeckeParams::inf_generic());
  CHECK(parse_params("inf:r=-3") == HeckeParams::inf_power(-3));
  CHECK(parse_params("two-generic", 3) == HeckeParams::two_generic(3));
  CHECK(parse_params("two:r=1") == HeckeParams::two_power(1));
  CHECK(parse_params("e:2:r=1") == HeckeParams::two_power(1));
  CHECK(parse_params("e:5").regime == Regime::Finite);
  CHECK(parse_params("e:5").e == 5);
  CHECK_THROWS_AS(parse_params("two:r=2"), Error);
  CHECK_THROWS_AS(parse_params("e:1"), Error);
  CHECK_THROWS_AS(parse_params("inf:r="), Error);
  CHECK_THROWS_AS(parse_params("bogus"), Error);
  for (auto s : {"inf-generic", "inf:r=4", "two-generic", "two:r=0", "e:7:r=0", "e:4:r=2"}) CHECK(to_string(parse_params(s)) == s);
}

TEST_CASE("residues") {
  CHECK(residue({1, 4, 1}, HeckeParams::two_power(0)).value == -1);
  CHECK(residue({1, 1, 2}, HeckeParams::inf_power(5)).value == 0);
  CHECK(residue({2, 1, 1}, HeckeParams::inf_power(3)).value == 2);
  CHECK_THROWS_AS(residue({1, 1, 1}, HeckeParams::inf_generic()), Error);
  CHECK_THROWS_AS(residue({1, 1, 1}, HeckeParams::finite(5)), Error);

  const auto p0 = HeckeParams::two_power(0);
  auto ms = residue_multiset({{1}, {1}}, p0);
  CHECK(ms == std::vector<Residue>{{0, 1}, {0, 1}});
  CHECK(residue_multiset({{2}, {}}, p0) == residue_multiset({{1, 1}, {}}, p0));
  CHECK(same_block({{2}, {}}, {{1, 1}, {}}, p0));
  CHECK_FALSE(same_block({{2}, {}}, {{1}, {1}}, p0));
  CHECK(to_string(Residue{0, 1}) == "+1");
  CHECK(to_string(Residue{0, -1}) == "-1");

  for (int r = 0; r <= 1; ++r) {
    for (const auto& b : bipartitions(6)) {
      for (int k = 1; k <= 2; ++k) {
        for (auto [i, j] : oracle::diagram(b.component(k))) {
          CHECK(residue({i, j, k}, HeckeParams::two_power(r)).value == oracle::sign_residue(i, j, k, r));
        }
      }
    }
  }
}

TEST_CASE("generic residues keep the components apart") {
  const auto g = HeckeParams::inf_generic();
  CHECK_FALSE(same_block({{1}, {}}, {{}, {1}}, g));
  CHECK(same_block({{1}, {}}, {{}, {1}}, HeckeParams::inf_power(0)));
  CHECK_FALSE(same_block({{1}, {}}, {{}, {1}}, HeckeParams::two_generic()));
  CHECK(same_block({{1}, {}}, {{}, {1}}, HeckeParams::two_power(0)));
  CHECK_THROWS_AS(residue_multiset({{1}, {}}, HeckeParams::finite(3)), Error);
}

TEST_CASE("block relation is an equivalence of fixed size") {
  for (auto p : {HeckeParams::two_power(0), HeckeParams::two_power(1), HeckeParams::inf_power(-1),
                 HeckeParams::inf_power(2), HeckeParams::inf_generic(), HeckeParams::two_generic()}) {
    const auto all = bipartitions(5);
    for (const auto& a : all) {
      CHECK(same_block(a, a, p));
      for (const auto& b : all) {
        CHECK(same_block(a, b, p) == same_block(b, a, p));
        for (const auto& c : all) {
          if (same_block(a, b, p) && same_block(b, c, p)) CHECK(same_block(a, c, p));
        }
      }
    }
    CHECK_FALSE(same_block({{1}, {}}, {{2}, {}}, p));
  }
}

TEST_CASE("beta-set examples") {
  const auto b = beta_set(Partition{4, 4, 2}, 1);
  std::set<int> seen;
  for (int m = -10; m <= 10; ++m) {
    if (b.contains(m)) seen.insert(m);
  }
  std::set<int> expected{4, 3, 0};
  for (int m = -10; m <= -3; ++m) expected.insert(m);
  CHECK(seen == expected);
  CHECK(b.elements_from(-4) == std::vector<int>{-4, -3, 0, 3, 4});

  const auto e = beta_set(Partition{}, 0);
  CHECK(e.contains(-1));
  CHECK_FALSE(e.contains(0));
  const auto one = beta_set(Partition{1}, 2);
  CHECK(one.elements_from(-1) == std::vector<int>{-1, 0, 2});

  CHECK(BetaSet::from_elements(-2, {3, 0, 0}) == BetaSet(Partition{4, 2}, 0));
  CHECK(BetaSet::from_elements(0, {}) == BetaSet(Partition{}, 0));
}

TEST_CASE("beta-set round trip and bounds") {
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : partitions(n)) {
      for (int i = -12; i <= 12; ++i) {
        const auto b = beta_set(p, i);
        CHECK(partition_from_beta(b) == std::pair{p, i});
        const int lo = b.dense_below() - 3;
        const int hi = b.upper_bound() + 3;
        const auto ref = oracle::beta_window(p, i, lo, hi);
        for (int m = lo; m <= hi; ++m) CHECK(b.contains(m) == (ref.count(m) > 0));
        CHECK(b.contains(b.dense_below() - 1));
        CHECK_FALSE(b.contains(b.upper_bound()));
        auto els = b.elements_from(lo);
        CHECK(std::set<int>(els.begin(), els.end()) == ref);
        CHECK(BetaSet::from_elements(lo, els) == b);
      }
    }
  }
}

TEST_CASE("abacus rendering") {
  const BetaSet rows[] = {beta_set(Partition{4, 4, 2}, 1)};
  const auto text = abacus_render(rows, -5, 7);
  CHECK(text ==
        " -5 -4 -3 -2 -1  0  1  2  3  4  5  6  7\n"
        "  o  o  o  .  .  o  .  .  o  o  .  .  .\n");
  const BetaSet empty[] = {beta_set(Partition{}, 0)};
  CHECK(abacus_render(empty, 0, 3) ==
        " 0 1 2 3\n"
        " . . . .\n");
}

}  // TEST_SUITE
