#include <doctest.h>

#include <map>
#include <random>
#include <sstream>

#include "ipts/enumerate.hpp"
#include "ipts/errors.hpp"
#include "ipts/io.hpp"
#include "ipts/kernel.hpp"
#include "ipts/lp.hpp"
#include "ipts/tables.hpp"
#include "ipts/testset.hpp"

using namespace ipts;

namespace {

std::mt19937 rng(66600);

HierarchicalModel four_cycle() {
  return HierarchicalModel{TableShape{{2, 2, 2, 2}},
                           {{1, 2}, {2, 3}, {3, 4}, {1, 4}}};
}

HierarchicalModel k5() {
  HierarchicalModel m;
  m.shape = TableShape{{2, 2, 2, 2, 2}};
  for (std::size_t i = 1; i <= 5; ++i)
    for (std::size_t j = i + 1; j <= 5; ++j) m.facets.push_back({i, j});
  return m;
}

// The verbatim sixteen-row marginal matrix of the binary four-cycle model.
const char* kFourCycleRows =
    "1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0\n"
    "0 0 0 0 1 1 1 1 0 0 0 0 0 0 0 0\n"
    "0 0 0 0 0 0 0 0 1 1 1 1 0 0 0 0\n"
    "0 0 0 0 0 0 0 0 0 0 0 0 1 1 1 1\n"
    "1 1 0 0 0 0 0 0 1 1 0 0 0 0 0 0\n"
    "0 0 1 1 0 0 0 0 0 0 1 1 0 0 0 0\n"
    "0 0 0 0 1 1 0 0 0 0 0 0 1 1 0 0\n"
    "0 0 0 0 0 0 1 1 0 0 0 0 0 0 1 1\n"
    "1 0 0 0 1 0 0 0 1 0 0 0 1 0 0 0\n"
    "0 1 0 0 0 1 0 0 0 1 0 0 0 1 0 0\n"
    "0 0 1 0 0 0 1 0 0 0 1 0 0 0 1 0\n"
    "0 0 0 1 0 0 0 1 0 0 0 1 0 0 0 1\n"
    "1 0 1 0 1 0 1 0 0 0 0 0 0 0 0 0\n"
    "0 1 0 1 0 1 0 1 0 0 0 0 0 0 0 0\n"
    "0 0 0 0 0 0 0 0 1 0 1 0 1 0 1 0\n"
    "0 0 0 0 0 0 0 0 0 1 0 1 0 1 0 1\n";

Table k5_table(const std::map<std::vector<std::size_t>, Rat>& cells) {
  Table t;
  t.shape = TableShape{{2, 2, 2, 2, 2}};
  t.entries = RatVector(32);
  for (const auto& [cell, value] : cells)
    t.entries[t.shape.flat_index(cell)] = value;
  return t;
}

// Integer table attaining the K5 gap, and a fractional table with the same
// marginals (one index transposition of the printed version restores exact
// marginal equality; the derivation is in the project notes).
Table k5_integer_table() {
  return k5_table({{{1, 1, 1, 1, 2}, 1},
                   {{1, 1, 1, 2, 1}, 1},
                   {{1, 1, 2, 1, 1}, 2},
                   {{1, 2, 1, 1, 1}, 2},
                   {{2, 1, 1, 1, 1}, 2},
                   {{2, 2, 2, 2, 2}, 1}});
}

Table k5_fractional_table() {
  return k5_table({{{1, 1, 1, 1, 1}, 3},
                   {{1, 1, 2, 1, 1}, Rat(2, 3)},
                   {{1, 1, 2, 2, 1}, Rat(1, 3)},
                   {{1, 2, 1, 1, 1}, Rat(2, 3)},
                   {{1, 2, 1, 2, 2}, Rat(1, 3)},
                   {{1, 2, 2, 1, 1}, Rat(1, 3)},
                   {{1, 2, 2, 1, 2}, Rat(1, 3)},
                   {{1, 2, 2, 2, 2}, Rat(1, 3)},
                   {{2, 1, 1, 1, 2}, Rat(2, 3)},
                   {{2, 1, 1, 2, 1}, Rat(1, 3)},
                   {{2, 1, 2, 1, 1}, Rat(2, 3)},
                   {{2, 1, 2, 2, 2}, Rat(1, 3)},
                   {{2, 2, 1, 1, 1}, Rat(2, 3)},
                   {{2, 2, 1, 2, 1}, Rat(1, 3)}});
}

}  // namespace

TEST_CASE("cell order is lexicographic with the first index slowest") {
  TableShape s{{2, 3, 2}};
  CHECK(s.cell_count() == 12);
  CHECK(s.flat_index({1, 1, 1}) == 0);
  CHECK(s.flat_index({1, 1, 2}) == 1);
  CHECK(s.flat_index({1, 2, 1}) == 2);
  CHECK(s.flat_index({2, 1, 1}) == 6);
  for (std::size_t flat = 0; flat < 12; ++flat)
    CHECK(s.flat_index(s.multi_index(flat)) == flat);
  CHECK_THROWS_AS(s.flat_index({0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(s.flat_index({1, 4, 1}), std::invalid_argument);
}

TEST_CASE("four-cycle marginal matrix matches the reference rows") {
  IntMatrix a = model_matrix(four_cycle());
  REQUIRE(a.rows() == 16);
  REQUIRE(a.cols() == 16);
  std::ostringstream got;
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = 0; j < 16; ++j) {
      if (j) got << " ";
      got << a.at(i, j);
    }
    got << "\n";
  }
  CHECK(got.str() == kFourCycleRows);
}

TEST_CASE("K5 marginal matrix is 40 x 32 of rank 16") {
  IntMatrix a = model_matrix(k5());
  CHECK(a.rows() == 40);
  CHECK(a.cols() == 32);
  CHECK(rank(a) == 16);
}

TEST_CASE("2x2 transportation matrix: each column hits one row and one column") {
  HierarchicalModel m{TableShape{{2, 2}}, {{1}, {2}}};
  IntMatrix a = model_matrix(m);
  REQUIRE(a.rows() == 4);
  REQUIRE(a.cols() == 4);
  for (std::size_t j = 0; j < 4; ++j) {
    Int colsum = 0;
    for (std::size_t i = 0; i < 4; ++i) colsum += a.at(i, j);
    CHECK(colsum == 2);
  }
}

TEST_CASE("column sums equal the facet count") {
  IntMatrix a = model_matrix(k5());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Int s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += a.at(i, j);
    CHECK(s == 10);
  }
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(model_matrix(HierarchicalModel{TableShape{{2, 2}}, {{1, 1}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(model_matrix(HierarchicalModel{TableShape{{2, 2}}, {{3}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(model_matrix(HierarchicalModel{TableShape{{2, 1}}, {{1}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(model_matrix(HierarchicalModel{TableShape{{2, 2}}, {{1}, {1}}}),
                  std::invalid_argument);
}

TEST_CASE("K5 marginal blocks of the integer table") {
  HierarchicalModel m = k5();
  Table u = k5_integer_table();
  RatVector b = marginals(u, m);
  REQUIRE(b.size() == 40);
  // block for facet {1,2} comes first: entries (4, 2, 2, 1)
  CHECK(b[0] == 4);
  CHECK(b[1] == 2);
  CHECK(b[2] == 2);
  CHECK(b[3] == 1);
  // facet {1,4} is the third block (facets ordered {1,2},{1,3},{1,4},...):
  // entries (5, 1, 2, 1)
  CHECK(b[8] == 5);
  CHECK(b[9] == 1);
  CHECK(b[10] == 2);
  CHECK(b[11] == 1);
}

TEST_CASE("integer and fractional K5 tables have identical marginals") {
  HierarchicalModel m = k5();
  CHECK(marginals(k5_integer_table(), m) == marginals(k5_fractional_table(), m));
}

TEST_CASE("marginals of the zero table vanish") {
  Table zero;
  zero.shape = TableShape{{2, 2, 2, 2}};
  zero.entries = RatVector(16);
  RatVector b = marginals(zero, four_cycle());
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i] == 0);
}

TEST_CASE("marginals are linear") {
  HierarchicalModel m = four_cycle();
  for (int trial = 0; trial < 10; ++trial) {
    Table t1, t2;
    t1.shape = t2.shape = m.shape;
    t1.entries = RatVector(16);
    t2.entries = RatVector(16);
    for (std::size_t i = 0; i < 16; ++i) {
      t1.entries[i] = Rat(std::uniform_int_distribution<int>(0, 9)(rng), 3);
      t2.entries[i] = Rat(std::uniform_int_distribution<int>(0, 9)(rng), 2);
    }
    Rat s(7, 5);
    Table combo;
    combo.shape = m.shape;
    combo.entries = RatVector(16);
    for (std::size_t i = 0; i < 16; ++i)
      combo.entries[i] = s * t1.entries[i] + t2.entries[i];
    RatVector b1 = marginals(t1, m), b2 = marginals(t2, m),
              bc = marginals(combo, m);
    for (std::size_t i = 0; i < bc.size(); ++i)
      CHECK(bc[i] == s * b1[i] + b2[i]);
  }
}

TEST_CASE("a single loaded cell pins every bound") {
  HierarchicalModel m{TableShape{{2, 2}}, {{1}, {2}}};
  Table t;
  t.shape = m.shape;
  t.entries = RatVector(4);
  t.entries[0] = 7;
  RatVector rb = marginals(t, m);
  IntVector b(rb.size());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = Int(numerator(rb[i]));
  for (std::size_t flat = 0; flat < 4; ++flat) {
    auto cell = m.shape.multi_index(flat);
    auto [lo, hi] = table_bounds(m, b, cell);
    CHECK(lo == (flat == 0 ? 7 : 0));
    CHECK(hi == (flat == 0 ? 7 : 0));
    auto [rlo, rhi] = lp_table_bounds(m, rb, cell);
    CHECK(rlo == lo);
    CHECK(rhi == hi);
  }
}

TEST_CASE("four-cycle bounds: enumeration, Graver, LP and brute force agree") {
  HierarchicalModel m = four_cycle();
  IntMatrix a = model_matrix(m);
  GraverBasis gr = graver(a);
  REQUIRE(gr.elements.size() == 106);
  for (int trial = 0; trial < 3; ++trial) {
    Table t;
    t.shape = m.shape;
    t.entries = RatVector(16);
    for (std::size_t i = 0; i < 16; ++i)
      t.entries[i] = std::uniform_int_distribution<int>(0, 3)(rng);
    RatVector rb = marginals(t, m);
    IntVector b(rb.size());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = Int(numerator(rb[i]));

    // independent brute force straight over the fiber of the marginal map,
    // pruned by partial marginal sums (coefficients are 0/1 and entries only
    // grow, so exceeding any marginal is final)
    std::map<std::size_t, std::pair<Int, Int>> brute;
    IntVector u(16);
    IntVector acc(a.rows());
    auto rec = [&](auto&& self, std::size_t d) -> void {
      if (d == 16) {
        if (acc != b) return;
        for (std::size_t i = 0; i < 16; ++i) {
          auto it = brute.find(i);
          if (it == brute.end())
            brute[i] = {u[i], u[i]};
          else {
            if (u[i] < it->second.first) it->second.first = u[i];
            if (u[i] > it->second.second) it->second.second = u[i];
          }
        }
        return;
      }
      Int lim = -1;
      for (std::size_t r = 0; r < a.rows(); ++r)
        if (a.at(r, d) == 1 && (lim < 0 || b[r] - acc[r] < lim))
          lim = b[r] - acc[r];
      for (Int x = 0; x <= lim; ++x) {
        u[d] = x;
        for (std::size_t r = 0; r < a.rows(); ++r)
          if (a.at(r, d) == 1) acc[r] += x;
        self(self, d + 1);
        for (std::size_t r = 0; r < a.rows(); ++r)
          if (a.at(r, d) == 1) acc[r] -= x;
      }
      u[d] = 0;
    };
    rec(rec, 0);
    for (std::size_t flat = 0; flat < 16; ++flat) {
      auto cell = m.shape.multi_index(flat);
      auto [lo, hi] = table_bounds(m, b, cell);
      CHECK(lo == brute[flat].first);
      CHECK(hi == brute[flat].second);
      auto [glo, ghi] = table_bounds(m, b, cell, BoundsBackend::graver, &gr);
      CHECK(glo == lo);
      CHECK(ghi == hi);
      auto [rlo, rhi] = lp_table_bounds(m, rb, cell);
      CHECK(rlo <= Rat(lo));
      CHECK(Rat(hi) <= rhi);
      CHECK(rlo <= t.entries[flat]);
      CHECK(t.entries[flat] <= rhi);
    }
  }
}

TEST_CASE("bounds under a model symmetry transport correctly") {
  // Relabeling coordinates (1,2,3,4) -> (2,3,4,1) maps the four-cycle model
  // to itself; bounds of a cell must match bounds of the relabeled cell for
  // the relabeled table.
  HierarchicalModel m = four_cycle();
  Table t;
  t.shape = m.shape;
  t.entries = RatVector(16);
  for (std::size_t i = 0; i < 16; ++i)
    t.entries[i] = std::uniform_int_distribution<int>(0, 2)(rng);
  Table relabeled;
  relabeled.shape = m.shape;
  relabeled.entries = RatVector(16);
  for (std::size_t flat = 0; flat < 16; ++flat) {
    auto cell = m.shape.multi_index(flat);
    std::vector<std::size_t> moved = {cell[3], cell[0], cell[1], cell[2]};
    relabeled.entries[m.shape.flat_index(moved)] = t.entries[flat];
  }
  auto to_int = [](const RatVector& rb) {
    IntVector b(rb.size());
    for (std::size_t i = 0; i < rb.size(); ++i) b[i] = Int(numerator(rb[i]));
    return b;
  };
  IntVector b = to_int(marginals(t, m));
  IntVector b2 = to_int(marginals(relabeled, m));
  for (const auto& cell : {std::vector<std::size_t>{1, 1, 1, 1},
                           std::vector<std::size_t>{2, 1, 2, 1}}) {
    std::vector<std::size_t> moved = {cell[3], cell[0], cell[1], cell[2]};
    auto [lo, hi] = table_bounds(m, b, cell);
    auto [lo2, hi2] = table_bounds(m, b2, moved);
    CHECK(lo == lo2);
    CHECK(hi == hi2);
  }
}

TEST_CASE("infeasible marginals are reported") {
  HierarchicalModel m{TableShape{{2, 2}}, {{1}, {2}}};
  // row sums (1, 0) but column sums (0, 0): inconsistent
  IntVector b{1, 0, 0, 0};
  CHECK_THROWS_AS(table_bounds(m, b, {1, 1}), InfeasibleMarginalsError);
  RatVector rb(4);
  rb[0] = 1;
  CHECK_THROWS_AS(lp_table_bounds(m, rb, {1, 1}), InfeasibleMarginalsError);
}

TEST_CASE("tables know whether they are integral") {
  Table t;
  t.shape = TableShape{{2, 2}};
  t.entries = RatVector(4);
  t.entries[2] = Rat(4);
  CHECK(t.is_integral());
  CHECK(t.integral_entries() == IntVector{0, 0, 4, 0});
  t.entries[1] = Rat(1, 3);
  CHECK(!t.is_integral());
  CHECK_THROWS_AS(t.integral_entries(), std::invalid_argument);
}
