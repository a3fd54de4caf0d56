#include "astlab/matchings.hpp"
#include "doctest.h"

using namespace astlab;

TEST_CASE("q1 is a single diamond") {
  DiamondGraph g = build_qn(1);
  CHECK(g.coords.size() == 4);
  CHECK(g.edges.size() == 4);
  CHECK(g.labeled.empty());
  CHECK(count_perfect_matchings(g, {}) == 2);
}

TEST_CASE("row lengths and colour imbalance") {
  for (int n = 1; n <= 6; ++n) {
    DiamondGraph g = build_qn(n);
    for (int i = 1; i <= n; ++i) {
      int row = 0;
      for (const auto& [ij, es] : g.diamonds) row += ij.first == i;
      CHECK(row == 2 * (n - i) + 1);
    }
    int even_x = 0, odd_x = 0;
    for (const auto& [x, y] : g.coords) (x % 2 == 0 ? even_x : odd_x)++;
    CHECK(even_x - odd_x == n - 1);
    CHECK(static_cast<int>(g.labeled.size()) == 2 * n - 2);
    for (const auto& [label, v] : g.labeled) CHECK(g.coords[static_cast<size_t>(v)].first % 2 == 0);
  }
}

TEST_CASE("counts and removals") {
  DiamondGraph g2 = build_qn(2);
  CHECK(count_perfect_matchings(g2, {1}) + count_perfect_matchings(g2, {3}) == 8);
  // odd remaining vertex count
  CHECK(count_perfect_matchings(g2, {}) == 0);
  CHECK_THROWS_AS(count_perfect_matchings(g2, {2}), UnknownIdentifier);
}

TEST_CASE("matching identity suite") {
  const unsigned long long totals[] = {0, 2, 8, 64, 1024};
  for (int n = 1; n <= 3; ++n) {
    MatchingReport rep = matching_identities(n);
    CHECK(rep.total == totals[n]);
    CHECK(rep.sum_identity);
    CHECK(rep.two_enum_identity);
    CHECK(rep.fiber_audit);
  }
}

TEST_CASE("graph export") {
  std::string text = adjacency_text(build_qn(2));
  CHECK(text.find("qn 2") == 0);
  CHECK(text.find("label 1 ->") != std::string::npos);
}
