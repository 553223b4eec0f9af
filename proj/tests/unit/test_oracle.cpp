#include "mixent/errors.hpp"
#include "mixent/oracle.hpp"
#include "reference.hpp"

#include <doctest.h>

using namespace mixent;
using namespace mixent::oracle;

TEST_CASE("enumerate_assignments: small systems") {
  const auto two = enumerate_assignments(2, CellSpec{1, 1});
  CHECK(two.total == 4);
  CHECK(two.by_occupation.size() == 3);
  CHECK(two.count(OccupationVector{2, 0}) == 1);
  CHECK(two.count(OccupationVector{1, 1}) == 2);
  CHECK(two.count(OccupationVector{0, 2}) == 1);

  const auto empty = enumerate_assignments(0, CellSpec{3, 1, 2});
  CHECK(empty.total == 1);
  CHECK(empty.count(OccupationVector{0, 0, 0}) == 1);

  const auto three = enumerate_assignments(3, CellSpec{2, 1});
  CHECK(three.total == 27);
  CHECK(three.count(OccupationVector{2, 1}) == 12);
}

TEST_CASE("enumerate_assignments: total is (sum g)^N") {
  for (const auto& cells : standard_cell_suite())
    for (std::uint64_t N = 0; N <= 7; ++N) {
      std::uint64_t expected = 1;
      for (std::uint64_t k = 0; k < N; ++k) expected *= cells.substates();
      CHECK(enumerate_assignments(N, cells).total == expected);
    }
}

TEST_CASE("enumerate_indistinct") {
  CHECK(enumerate_indistinct(3, CellSpec{2}).total == 4);
  for (std::uint64_t g : {1u, 4u, 9u}) CHECK(enumerate_indistinct(1, CellSpec{g}).total == g);

  // Split n | 4 - n over cells of degeneracy 2 and 3.
  const auto r = enumerate_indistinct(4, CellSpec{2, 3});
  std::uint64_t sum = 0;
  for (unsigned n = 0; n <= 4; ++n) {
    const auto expected = reference::stars_and_bars(n, 2) * reference::stars_and_bars(4 - n, 3);
    CHECK(r.count(OccupationVector{n, 4 - n}) == expected);
    sum += expected;
  }
  CHECK(sum == 70);
  CHECK(r.total == 70);
}

TEST_CASE("guards are hard limits") {
  CHECK_THROWS_AS(enumerate_assignments(30, CellSpec{1, 1}), GuardError);
  CHECK_THROWS_AS(enumerate_indistinct(200, CellSpec{5, 5, 5}), GuardError);
  try {
    enumerate_assignments(40, CellSpec{3, 2});
    FAIL("expected a guard error");
  } catch (const GuardError& e) {
    CHECK(std::string(e.what()).find("100000000") != std::string::npos);
  }
  CHECK_THROWS_AS(CellSpec(std::vector<std::uint64_t>{}), DomainError);
  CHECK_THROWS_AS((CellSpec{1, 0}), DomainError);
}

TEST_CASE("verify_counting: examples") {
  for (std::uint64_t N = 0; N <= 6; ++N) CHECK(verify_counting(N, CellSpec{1, 1, 1}).passed());
  for (std::uint64_t N = 0; N <= 5; ++N) CHECK(verify_counting(N, CellSpec{2, 2}).passed());
  const auto single = verify_counting(2, CellSpec{1});
  CHECK(single.passed());
  CHECK(single.checks.size() == 5);
}

TEST_CASE("verify_suite: every identity holds for N <= 8") {
  const auto report = verify_suite(8);
  CHECK(report.passed());
  CHECK(report.first_failure() == nullptr);
  CHECK(report.checks.size() == 5 * 9 * 5);
  CHECK(report.cases() > 1000);
}

TEST_CASE("verify_suite catches corrupted formulas") {
  auto caught = [](const Formulas& f, const char* identity) {
    const auto report = verify_suite(4, f);
    REQUIRE_FALSE(report.passed());
    const auto* bad = report.first_failure();
    REQUIRE(bad != nullptr);
    CHECK(bad->identity == identity);
    CHECK_FALSE(bad->counterexample.empty());
  };

  auto f = Formulas::library();
  f.binomial = [](std::uint64_t N, std::uint64_t n) { return combinatorics::binomial(N + 1, n); };
  caught(f, "binomial");

  f = Formulas::library();
  f.multiplicity = [](const OccupationVector& occ, std::span<const std::uint64_t> g) {
    std::vector<std::uint64_t> bumped(g.begin(), g.end());
    bumped[0] += 1;  // degeneracy off by one
    return combinatorics::multiplicity_distinguishable(occ, bumped);
  };
  caught(f, "multiplicity");

  f = Formulas::library();
  f.bose = [](std::uint64_t n, std::uint64_t g) { return combinatorics::binomial(n + g, n); };
  caught(f, "bose");

  f = Formulas::library();
  f.symbols = [](std::uint64_t n, std::uint64_t g) {
    return combinatorics::classical_symbol_states(n + 1, g);
  };
  caught(f, "symbols");
}

TEST_CASE("doubling the cells adds N ln 2") {
  for (std::uint64_t N = 0; N <= 6; ++N) {
    const auto narrow = enumerate_assignments(N, CellSpec{2, 1});
    const auto wide = enumerate_assignments(N, CellSpec{2, 1, 2, 1});
    CHECK(wide.total == (std::uint64_t{1} << N) * narrow.total);
  }
}
