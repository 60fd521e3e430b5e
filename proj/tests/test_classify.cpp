#include <doctest.h>

#include <thread>

#include "hecke/classify.hpp"
#include "hecke/error.hpp"
#include "oracles.hpp"

using namespace hecke;

namespace {

const FockSpaceOracle char0(0);

// Brute-force restrictability from the node lists and sign residues.
bool restrictable_by_hand(const Bipartition& b, int i, int r) {
  int removable = 0;
  int addable = 0;
  for (int k = 1; k <= 2; ++k) {
    const auto& p = b.component(k);
    auto d = oracle::diagram(p);
    for (int row = 1; row <= p.length() + 1; ++row) {
      for (int col = 1; col <= p.part(1) + 1; ++col) {
        if (oracle::sign_residue(row, col, k, r) != i) continue;
        auto e = d;
        if (d.count({row, col})) {
          e.erase({row, col});
          if (oracle::is_young_diagram(e)) ++removable;
        } else {
          e.insert({row, col});
          if (oracle::is_young_diagram(e)) ++addable;
        }
      }
    }
  }
  return removable > 0 && addable == 0;
}

VerdictKind kind(const Bipartition& b, const HeckeParams& p) { return classify(b, p, char0).kind; }

VerdictKind oracle_kind(const Partition& nu) {
  return char0.query(nu) == OracleAnswer::Irreducible ? VerdictKind::Irreducible : VerdictKind::Reducible;
}

}  // namespace

TEST_SUITE("e2-classifier") {

TEST_CASE("restrictability examples") {
  CHECK(is_i_restrictable({{4, 3, 3, 1}, {2, 1}}, -1, 0));
  CHECK_FALSE(is_i_restrictable({{1, 1}, {1, 1}}, -1, 0));
  CHECK_FALSE(is_i_restrictable({{1, 1}, {1, 1}}, 1, 0));
  CHECK_FALSE(is_i_restrictable({}, 1, 0));
  CHECK_FALSE(is_i_restrictable({}, -1, 1));
}

TEST_CASE("restrictability against a diagram search") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& b : bipartitions(n)) {
      for (int r = 0; r <= 1; ++r) {
        for (int i : {-1, 1}) CHECK(is_i_restrictable(b, i, r) == restrictable_by_hand(b, i, r));
      }
    }
  }
}

TEST_CASE("restrict_all") {
  CHECK(restrict_all({{4, 3, 3, 1}, {2, 1}}, -1, 0) == Bipartition{{3, 3, 3}, {1}});
  CHECK(restrict_all({{3, 3, 3}, {1}}, 1, 0) == Bipartition{{3, 3, 2}, {}});
  CHECK(restrict_all({{1}, {1}}, 1, 0) == Bipartition{});
  CHECK_THROWS_AS(restrict_all({{1, 1}, {1, 1}}, 1, 0), Error);
  try {
    restrict_all({}, 1, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotRestrictable);
  }
  for (int n = 1; n <= 8; ++n) {
    for (const auto& b : bipartitions(n)) {
      for (int r = 0; r <= 1; ++r) {
        for (int i : {-1, 1}) {
          if (!is_i_restrictable(b, i, r)) continue;
          const auto c = restrict_all(b, i, r);
          CHECK(c.size() < b.size());
          // Exactly the removable i-nodes are gone.
          int removed = 0;
          for (const auto& nd : removable_nodes(b)) {
            if (residue(nd, HeckeParams::two_power(r)).value == i) ++removed;
          }
          CHECK(c.size() + removed == b.size());
        }
      }
    }
  }
}

TEST_CASE("reduction chains") {
  const auto c = reduction_chain({{4, 3, 3, 1}, {2, 1}}, -1, 0);
  CHECK(c.terminal);
  CHECK(c.terminal_partition == Partition{3, 3, 2});
  CHECK(c.terminal_side == 1);
  REQUIRE(c.steps.size() == 2);
  CHECK(c.steps[0].before == Bipartition{{4, 3, 3, 1}, {2, 1}});
  CHECK(c.steps[0].removed_residue == -1);
  CHECK(c.steps[1].before == Bipartition{{3, 3, 3}, {1}});
  CHECK(c.steps[1].removed_residue == 1);
  CHECK(c.last == Bipartition{{3, 3, 2}, {}});

  for (int i0 : {-1, 1}) {
    const auto stuck = reduction_chain({{1, 1}, {1, 1}}, i0, 0);
    CHECK_FALSE(stuck.terminal);
    CHECK(stuck.steps.empty());
    CHECK(stuck.last == Bipartition{{1, 1}, {1, 1}});
    const auto done = reduction_chain({{5}, {}}, i0, 1);
    CHECK(done.terminal);
    CHECK(done.steps.empty());
    CHECK(done.terminal_partition == Partition{5});
  }
  const auto right = reduction_chain({{}, {2, 1}}, 1, 0);
  CHECK(right.terminal);
  CHECK(right.terminal_side == 2);

  for (int n = 0; n <= 8; ++n) {
    for (const auto& b : bipartitions(n)) {
      for (int r = 0; r <= 1; ++r) {
        for (int i0 : {-1, 1}) {
          const auto ch = reduction_chain(b, i0, r);
          CHECK(ch.start_residue == i0);
          int expect = i0;
          Bipartition cur = b;
          for (const auto& s : ch.steps) {
            CHECK(s.before == cur);
            CHECK(s.removed_residue == expect);
            CHECK(is_i_restrictable(cur, expect, r));
            cur = restrict_all(cur, expect, r);
            expect = -expect;
          }
          CHECK(cur == ch.last);
          const bool some_empty = cur.first.empty() || cur.second.empty();
          CHECK(ch.terminal == some_empty);
          if (!ch.terminal) CHECK_FALSE(is_i_restrictable(cur, expect, r));
          const auto again = reduction_chain(b, i0, r);
          CHECK(again.last == ch.last);
          CHECK(again.steps.size() == ch.steps.size());
        }
      }
    }
  }
}

TEST_CASE("e = 2 examples") {
  const auto v = is_irreducible_e2({{4, 3, 3, 1}, {2, 1}}, 0, char0);
  CHECK(v.kind == VerdictKind::Irreducible);
  const auto* w = std::get_if<ChainWitness>(&v.witness);
  REQUIRE(w != nullptr);
  REQUIRE(w->chains.size() == 1);
  CHECK(w->chains[0].start_residue == -1);
  CHECK(w->oracle_answer == OracleAnswer::Irreducible);

  const auto red = is_irreducible_e2({{1, 1}, {1, 1}}, 0, char0);
  CHECK(red.kind == VerdictKind::Reducible);
  const auto* rw = std::get_if<ChainWitness>(&red.witness);
  REQUIRE(rw != nullptr);
  CHECK(rw->chains.size() == 2);
  CHECK_FALSE(rw->oracle_answer.has_value());

  CHECK(is_irreducible_e2({{1}, {1}}, 0, char0).kind == VerdictKind::Irreducible);
  CHECK(is_irreducible_e2({}, 0, char0).kind == VerdictKind::Irreducible);
  CHECK(is_irreducible_e2({}, 1, char0).kind == VerdictKind::Irreducible);
}

TEST_CASE("split case") {
  CHECK(is_irreducible_split({{3, 3, 2}, {1}}, char0, 2).kind == VerdictKind::Irreducible);
  CHECK(is_irreducible_split({{2, 2}, {1}}, char0, 2).kind == oracle_kind({2, 2}));
  CHECK(is_irreducible_split({{3, 1}, {1}}, char0, 2).kind == VerdictKind::Reducible);
  for (const auto& b : bipartitions(6)) CHECK(is_irreducible_split(b, char0, 0).kind == VerdictKind::Irreducible);
  for (const auto& b : bipartitions(7)) {
    const bool both = char0.query(b.first) == OracleAnswer::Irreducible &&
                      char0.query(b.second) == OracleAnswer::Irreducible;
    CHECK((kind(b, HeckeParams::two_generic()) == VerdictKind::Irreducible) == both);
  }
}

TEST_CASE("dispatcher") {
  CHECK(kind({{1, 1}, {2}}, HeckeParams::inf_power(3)) == VerdictKind::Reducible);
  CHECK(kind({{4, 3, 3, 1}, {2, 1}}, HeckeParams::two_power(0)) == VerdictKind::Irreducible);
  const auto u = classify({{2}, {1}}, HeckeParams::finite(5), char0);
  CHECK(u.kind == VerdictKind::Unsupported);
  CHECK_FALSE(u.reason.empty());
  for (const auto& b : bipartitions(6)) {
    CHECK(kind(b, HeckeParams::inf_generic()) == VerdictKind::Irreducible);
    for (int r = -2; r <= 2; ++r) {
      CHECK((kind(b, HeckeParams::inf_power(r)) == VerdictKind::Irreducible) == is_irreducible_inf(b, r));
    }
  }
  const auto shape = classify({{1, 1}, {2}}, HeckeParams::inf_power(3), char0);
  const auto* sw = std::get_if<ShapeWitness>(&shape.witness);
  REQUIRE(sw != nullptr);
  CHECK(to_string(sw->signature) == "++-++");
  CHECK_FALSE(sw->shape.matches);
}

TEST_CASE("empty bipartition is irreducible everywhere") {
  for (auto p : {HeckeParams::inf_generic(), HeckeParams::inf_power(-2), HeckeParams::inf_power(0),
                 HeckeParams::inf_power(3), HeckeParams::two_generic(), HeckeParams::two_power(0),
                 HeckeParams::two_power(1)}) {
    CHECK(kind({}, p) == VerdictKind::Irreducible);
  }
}

TEST_CASE("characteristic p without a table is Unknown") {
  FockSpaceOracle o(3);
  const auto v = classify({{3, 3, 2}, {}}, HeckeParams::two_power(0, 3), o);
  CHECK(v.kind == VerdictKind::Unknown);
  CHECK_FALSE(v.reason.empty());
  o.set_entry({3, 3, 2}, true);
  CHECK(classify({{3, 3, 2}, {}}, HeckeParams::two_power(0, 3), o).kind == VerdictKind::Irreducible);
  // Reducible chains need no oracle.
  CHECK(classify({{1, 1}, {1, 1}}, HeckeParams::two_power(0, 3), o).kind == VerdictKind::Reducible);
}

TEST_CASE("e = 2 laws") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& b : bipartitions(n)) {
      for (int r = 0; r <= 1; ++r) {
        const auto p = HeckeParams::two_power(r);
        const auto k = kind(b, p);
        REQUIRE(k != VerdictKind::Unknown);
        for (int i : {-1, 1}) {
          if (is_i_restrictable(b, i, r)) CHECK(kind(restrict_all(b, i, r), p) == k);
        }
        if (b.second.empty()) CHECK(k == oracle_kind(b.first));
        if (b.first.empty()) CHECK(k == oracle_kind(b.second));
        if (!b.first.empty() && !b.second.empty() && !is_i_restrictable(b, 1, r) && !is_i_restrictable(b, -1, r)) {
          CHECK(k == VerdictKind::Reducible);
        }
        CHECK(kind({conjugate(b.first), b.second}, p) == k);
        CHECK(kind({b.first, conjugate(b.second)}, p) == k);
        CHECK(kind(dual(b), p) == k);
        if (k == VerdictKind::Irreducible) CHECK(is_inf_irreducible_all_parity(b, r));
      }
    }
  }
}

TEST_CASE("concurrent classification agrees with sequential") {
  const auto all = bipartitions(7);
  std::vector<VerdictKind> seq(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) seq[k] = kind(all[k], HeckeParams::two_power(1));
  std::vector<VerdictKind> par(all.size());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t k = t; k < all.size(); k += 4) par[k] = kind(all[k], HeckeParams::two_power(1));
    });
  }
  for (auto& th : pool) th.join();
  CHECK(par == seq);
}

}  // TEST_SUITE
