#include <algorithm>
#include <set>

#include "astlab/objects.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace astlab;

namespace {

SignTriangle make_sign(Family fam, int n, const std::vector<std::vector<int>>& rows) {
  SignTriangle t(fam, n);
  for (int i = 1; i <= n; ++i)
    for (int j = t.row_begin(i); j <= t.row_end(i); ++j)
      t.set(i, j, rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - t.row_begin(i))]);
  return t;
}

DasasmTriangle make_triangle(int n, const std::vector<std::vector<int>>& rows) {
  DasasmTriangle t(n);
  for (int i = 1; i <= n + 1; ++i)
    for (int j = t.row_begin(i); j <= t.row_end(i); ++j)
      t.set(i, j, rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - t.row_begin(i))]);
  return t;
}

// the order-6 example triangle
DasasmTriangle order6_example() {
  return make_triangle(6, {{0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                           {1, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0},
                           {0, 1, 0, 0, 0, -1, 0, 1, 0},
                           {-1, 1, 0, 0, 0, 0, -1},
                           {-1, 1, 0, 0, 0},
                           {-1, 0, 1},
                           {1}});
}

}  // namespace

TEST_CASE("ast order 3 enumeration is the expected list") {
  auto asts = enumerate_sign_triangles(Family::Ast, 3);
  REQUIRE(asts.size() == 7);
  std::set<std::string> got;
  for (const auto& t : asts) got.insert(to_text(t));
  std::set<std::string> expected;
  for (const auto& rows : std::vector<std::vector<std::vector<int>>>{
           {{1, 0, 0, 0, 0}, {1, 0, 0}, {1}},
           {{0, 0, 0, 1, 0}, {1, 0, 0}, {1}},
           {{0, 0, 0, 0, 1}, {1, 0, 0}, {1}},
           {{1, 0, 0, 0, 0}, {0, 0, 1}, {1}},
           {{0, 1, 0, 0, 0}, {0, 0, 1}, {1}},
           {{0, 0, 0, 0, 1}, {0, 0, 1}, {1}},
           {{0, 0, 1, 0, 0}, {1, -1, 1}, {1}}})
    expected.insert(to_text(make_sign(Family::Ast, 3, rows)));
  CHECK(got == expected);
}

TEST_CASE("basic enumeration counts") {
  auto asm1 = enumerate_asm(1);
  REQUIRE(asm1.size() == 1);
  CHECK(asm1[0].at(1, 1) == 1);
  CHECK(enumerate_sign_triangles(Family::Dast, 3).size() == 8);
  CHECK(enumerate_dasasm_triangles(1).size() == 3);
  CHECK(enumerate_dasasm_triangles(2).size() == 15);
  CHECK(enumerate_dasasm_triangles(3).size() == 126);
  CHECK_THROWS_AS(enumerate_asm(7), CapExceeded);
  CHECK_THROWS_AS(enumerate_sign_triangles(Family::Ast, 7), CapExceeded);
}

TEST_CASE("triangle counts agree with the direct orientation count") {
  for (int n = 1; n <= 3; ++n)
    CHECK(enumerate_dasasm_triangles(n).size() == oracles::orientation_count(n));
}

TEST_CASE("enumeration is deterministic and lexicographic") {
  auto a = enumerate_sign_triangles(Family::Qast, 3);
  auto b = enumerate_sign_triangles(Family::Qast, 3);
  REQUIRE(a.size() == b.size());
  for (size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k]);
  auto key = [](const SignTriangle& t) {
    std::vector<int> v;
    for (int i = 1; i <= t.order(); ++i)
      for (int j = t.row_begin(i); j <= t.row_end(i); ++j) v.push_back(t.at(i, j));
    return v;
  };
  for (size_t k = 0; k + 1 < a.size(); ++k) CHECK(key(a[k]) < key(a[k + 1]));
}

TEST_CASE("validation examples") {
  CHECK(validate(order6_example()).ok);

  SignTriangle bad = make_sign(Family::Ast, 2, {{1, -1, 1}, {1}});
  auto r = validate(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.violation == "column 2 topmost nonzero is -1");

  SignTriangle zero(Family::Dast, 3);
  CHECK(validate(zero).ok);

  for (const auto& t : enumerate_dasasm_triangles(2)) CHECK(validate(t.to_asm()).ok);
}

TEST_CASE("asts are qasts") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_sign_triangles(Family::Ast, n)) {
      SignTriangle as_qast(Family::Qast, n);
      for (int i = 1; i <= n; ++i)
        for (int j = t.row_begin(i); j <= t.row_end(i); ++j) as_qast.set(i, j, t.at(i, j));
      CHECK(validate(as_qast).ok);
    }
}

TEST_CASE("configuration dictionary round-trips") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_dasasm_triangles(n)) {
      TriConfig c = to_config(t);
      CHECK(to_triangle(c) == t);
    }
  // order-1 config with the central column forced gives the matching triangle
  DasasmTriangle one = make_triangle(1, {{0, 1, 0}, {-1}});
  TriConfig c = to_config(one);
  CHECK_FALSE(c.vert_up(2, 2));
  CHECK(to_triangle(c) == one);
}

TEST_CASE("ast diagonal reconstruction") {
  SignTriangle unit(Family::Ast, 1);
  unit.set(1, 1, 1);
  DasasmTriangle t = ast_diagonal_reconstruct(unit);
  CHECK(t == make_triangle(1, {{0, 1, 0}, {-1}}));
  AsmMatrix full = t.to_asm();
  CHECK(full.at(1, 2) == 1);
  CHECK(full.at(2, 2) == -1);
  CHECK(validate(full).ok);

  for (const auto& a : enumerate_sign_triangles(Family::Ast, 4)) {
    DasasmTriangle rec = ast_diagonal_reconstruct(a);
    int minus = 0;
    for (int i = 1; i <= 4; ++i) {
      minus += rec.at(i, i) == -1;
      minus += rec.at(i, 2 * 4 + 2 - i) == -1;
    }
    minus += rec.center() == -1;
    CHECK(minus == 4);
    CHECK(ast_strip_diagonals(rec) == a);
  }
  CHECK_THROWS_AS(ast_strip_diagonals(order6_example()), NotExtreme);
}

TEST_CASE("dast extensions") {
  SignTriangle zero(Family::Dast, 3);
  CHECK(dast_extension_count(zero) == 8);
  auto ext = dast_extensions(zero);
  REQUIRE(ext.size() == 8);
  for (const auto& t : ext) CHECK(validate(t).ok);

  SignTriangle busy = make_sign(Family::Dast, 3, {{0, 1, 0, 0, 0}, {-1, 1, 0}, {-1}});
  CHECK(dast_extension_count(busy) == 1);

  unsigned long long total = 0;
  for (const auto& d : enumerate_sign_triangles(Family::Dast, 3))
    total += dast_extension_count(d);
  CHECK(total == 20);
}

TEST_CASE("minzero bijection") {
  for (int n = 1; n <= 2; ++n) {
    std::vector<DasasmTriangle> extreme;
    for (const auto& t : enumerate_dasasm_triangles(n)) {
      int zeros = 0;
      for (int i = 1; i <= n; ++i) {
        zeros += t.at(i, i) == 0;
        zeros += t.at(i, 2 * n + 2 - i) == 0;
      }
      if (zeros == n) extreme.push_back(t);
    }
    auto asts = enumerate_sign_triangles(Family::Ast, n + 1);
    CHECK(extreme.size() == asts.size());
    for (const auto& t : extreme) CHECK(minzero_backward(minzero_forward(t)) == t);
    for (const auto& a : asts) CHECK(minzero_forward(minzero_backward(a)) == a);
  }
  CHECK(enumerate_sign_triangles(Family::Ast, 2).size() == 2);
}

TEST_CASE("qast bijection and class cardinalities") {
  CHECK(enumerate_sign_triangles(Family::Qast, 1).size() == 2);
  CHECK(enumerate_sign_triangles(Family::Qast, 3).size() == 20);
  for (int n = 1; n <= 3; ++n) {
    std::vector<DasasmTriangle> extreme;
    for (const auto& t : enumerate_dasasm_triangles(n)) {
      int ones = t.center() == 1;
      for (int i = 1; i <= n; ++i) {
        ones += t.at(i, i) == 1;
        ones += t.at(i, 2 * n + 2 - i) == 1;
      }
      if (ones == n + 1) extreme.push_back(t);
    }
    CHECK(extreme.size() == enumerate_sign_triangles(Family::Qast, n).size());
    for (const auto& t : extreme) CHECK(qast_backward(qast_forward(t)) == t);
    for (const auto& q : enumerate_sign_triangles(Family::Qast, n))
      CHECK(qast_forward(qast_backward(q)) == q);
  }
  // the three QAST classes and their MAST counterparts
  for (int n = 1; n <= 4; ++n) {
    unsigned long long asts = enumerate_sign_triangles(Family::Ast, n).size();
    unsigned long long bottom_one = 0, bottom_zero_sum_zero = 0;
    for (const auto& q : enumerate_sign_triangles(Family::Qast, n)) {
      if (q.at(n, n) == 1) ++bottom_one;
      if (q.at(n, n) == 0 && q.column_sum(n) == 0) ++bottom_zero_sum_zero;
    }
    CHECK(bottom_one == asts);
    CHECK(bottom_zero_sum_zero == asts);
    unsigned long long mast_bottom_one = 0, mast_sum_zero = 0;
    for (const auto& m : enumerate_sign_triangles(Family::Mast, n)) {
      if (m.at(n, n) == 1) ++mast_bottom_one;
      if (m.column_sum(n) == 0) ++mast_sum_zero;
    }
    CHECK(mast_bottom_one == asts);
    CHECK(mast_sum_zero == asts);
  }
}

TEST_CASE("every enumerated object validates") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_dasasm_triangles(n)) CHECK(validate(t).ok);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& a : enumerate_asm(n)) CHECK(validate(a).ok);
    for (Family f : {Family::Ast, Family::Dast, Family::Qast, Family::Mast})
      for (const auto& t : enumerate_sign_triangles(f, n)) CHECK(validate(t).ok);
  }
}

TEST_CASE("serialization") {
  CHECK(to_text(make_triangle(1, {{0, 1, 0}, {-1}})) == "0 1 0/-1");
  SignTriangle unit(Family::Ast, 1);
  unit.set(1, 1, 1);
  CHECK(to_text(unit) == "1");
  CHECK(triangle_from_text("0 1 0/-1") == make_triangle(1, {{0, 1, 0}, {-1}}));
  for (const auto& t : enumerate_sign_triangles(Family::Dast, 3))
    CHECK(sign_triangle_from_text(Family::Dast, to_text(t)) == t);
  for (const auto& a : enumerate_asm(3)) CHECK(asm_from_text(to_text(a)) == a);
  CHECK_THROWS_AS(triangle_from_text("0 1/0"), ShapeMismatch);
  CHECK_THROWS_AS(asm_from_text("2"), ShapeMismatch);
}
