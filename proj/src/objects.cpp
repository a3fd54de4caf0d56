#include "astlab/objects.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace astlab {

const char* family_name(Family f) {
  switch (f) {
    case Family::Asm: return "asm";
    case Family::DasasmTri: return "dasasm-tri";
    case Family::Ast: return "ast";
    case Family::Dast: return "dast";
    case Family::Qast: return "qast";
    case Family::Mast: return "mast";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "asm") return Family::Asm;
  if (name == "dasasm-tri" || name == "dasasm_tri" || name == "dasasm") return Family::DasasmTri;
  if (name == "ast") return Family::Ast;
  if (name == "dast") return Family::Dast;
  if (name == "qast") return Family::Qast;
  if (name == "mast") return Family::Mast;
  throw UnknownIdentifier("unknown family: " + name);
}

// ---------------------------------------------------------------- triangles

DasasmTriangle::DasasmTriangle(int n) : n_(n) {
  if (n < 0) throw ShapeMismatch("negative order");
  // rows 1..n+1, row i holds 2n+3-2i entries
  size_t total = 0;
  for (int i = 1; i <= n + 1; ++i) total += static_cast<size_t>(2 * n + 3 - 2 * i);
  e_.assign(total, 0);
}

size_t DasasmTriangle::idx(int i, int j) const {
  if (i < 1 || i > n_ + 1 || j < row_begin(i) || j > row_end(i))
    throw ShapeMismatch("triangle index out of range");
  size_t off = static_cast<size_t>(i - 1) * (2 * n_ + 3 - i);  // sum of previous row lengths
  return off + static_cast<size_t>(j - i);
}

int DasasmTriangle::column_sum_above(int i, int j) const {
  int s = 0;
  for (int k = 1; k < i; ++k) s += at(k, j);
  return s;
}

int DasasmTriangle::full_entry(int i, int j) const {
  const int m = 2 * n_ + 2;
  while (true) {
    if (i > j) {
      std::swap(i, j);
    } else if (j > m - i) {
      int ni = m - j, nj = m - i;
      i = ni;
      j = nj;
    } else {
      return at(i, j);
    }
  }
}

AsmMatrix DasasmTriangle::to_asm() const {
  AsmMatrix a(2 * n_ + 1);
  for (int i = 1; i <= 2 * n_ + 1; ++i)
    for (int j = 1; j <= 2 * n_ + 1; ++j) a.set(i, j, full_entry(i, j));
  return a;
}

SignTriangle::SignTriangle(Family fam, int n) : fam_(fam), n_(n) {
  if (n < 1) throw ShapeMismatch("sign triangle order must be positive");
  size_t total = 0;
  for (int i = 1; i <= n; ++i) total += static_cast<size_t>(2 * n + 1 - 2 * i);
  e_.assign(total, 0);
}

size_t SignTriangle::idx(int i, int j) const {
  if (i < 1 || i > n_ || j < row_begin(i) || j > row_end(i))
    throw ShapeMismatch("sign triangle index out of range");
  size_t off = static_cast<size_t>(i - 1) * (2 * n_ + 1 - i);
  return off + static_cast<size_t>(j - i);
}

int SignTriangle::column_sum(int j) const {
  int s = 0;
  for (int i = 1; i <= n_; ++i)
    if (row_begin(i) <= j && j <= row_end(i)) s += at(i, j);
  return s;
}

int SignTriangle::row_sum(int i) const {
  int s = 0;
  for (int j = row_begin(i); j <= row_end(i); ++j) s += at(i, j);
  return s;
}

TriConfig::TriConfig(int n) : n_(n) {
  size_t vtotal = 0, htotal = 0;
  for (int i = 1; i <= n + 1; ++i) vtotal += static_cast<size_t>(2 * n + 3 - 2 * i);
  for (int i = 1; i <= n; ++i) htotal += static_cast<size_t>(2 * n + 2 - 2 * i);
  vert_.assign(vtotal, 1);
  horiz_.assign(htotal, 1);
}

size_t TriConfig::vidx(int i, int j) const {
  if (i < 1 || i > n_ + 1 || j < i || j > 2 * n_ + 2 - i)
    throw ShapeMismatch("vertical edge index out of range");
  size_t off = static_cast<size_t>(i - 1) * (2 * n_ + 3 - i);
  return off + static_cast<size_t>(j - i);
}

size_t TriConfig::hidx(int i, int j) const {
  if (i < 1 || i > n_ || j < i || j > 2 * n_ + 1 - i)
    throw ShapeMismatch("horizontal edge index out of range");
  size_t off = static_cast<size_t>(i - 1) * (2 * n_ + 2 - i);
  return off + static_cast<size_t>(j - i);
}

// ---------------------------------------------------------------- validation

namespace {

// Nonzero entries alternate; returns false at the first violation.
bool alternates(const std::vector<int>& seq) {
  int last = 0;
  for (int v : seq) {
    if (v == 0) continue;
    if (last != 0 && v != -last) return false;
    last = v;
  }
  return true;
}

int nonzero_sum(const std::vector<int>& seq) {
  int s = 0;
  for (int v : seq) s += v;
  return s;
}

int first_nonzero(const std::vector<int>& seq) {
  for (int v : seq)
    if (v != 0) return v;
  return 0;
}

}  // namespace

ValidationResult validate(const AsmMatrix& a) {
  const int n = a.order();
  for (int i = 1; i <= n; ++i) {
    std::vector<int> row;
    for (int j = 1; j <= n; ++j) row.push_back(a.at(i, j));
    if (!alternates(row)) return {false, "row " + std::to_string(i) + " nonzeros do not alternate"};
    if (nonzero_sum(row) != 1) return {false, "row " + std::to_string(i) + " does not sum to 1"};
  }
  for (int j = 1; j <= n; ++j) {
    std::vector<int> col;
    for (int i = 1; i <= n; ++i) col.push_back(a.at(i, j));
    if (!alternates(col))
      return {false, "column " + std::to_string(j) + " nonzeros do not alternate"};
    if (nonzero_sum(col) != 1) return {false, "column " + std::to_string(j) + " does not sum to 1"};
  }
  return {};
}

ValidationResult validate(const DasasmTriangle& t) {
  const int n = t.order();
  for (int j = 1; j <= n; ++j) {
    std::vector<int> hook;
    for (int i = 1; i < j; ++i) hook.push_back(t.at(i, j));
    for (int k = j; k <= 2 * n + 2 - j; ++k) hook.push_back(t.at(j, k));
    for (int i = j - 1; i >= 1; --i) hook.push_back(t.at(i, 2 * n + 2 - j));
    if (!alternates(hook))
      return {false, "hook " + std::to_string(j) + " nonzeros do not alternate"};
    if (nonzero_sum(hook) != 1) return {false, "hook " + std::to_string(j) + " does not sum to 1"};
  }
  std::vector<int> centre;
  for (int i = 1; i <= n + 1; ++i) centre.push_back(t.at(i, n + 1));
  if (!alternates(centre)) return {false, "central column nonzeros do not alternate"};
  if (first_nonzero(centre) != 1) return {false, "central column first nonzero is -1"};
  if (t.center() == 0) return {false, "central entry is zero"};
  return {};
}

ValidationResult validate(const SignTriangle& t) {
  const int n = t.order();
  const Family f = t.family();
  for (int i = 1; i <= n; ++i) {
    std::vector<int> row;
    for (int j = t.row_begin(i); j <= t.row_end(i); ++j) row.push_back(t.at(i, j));
    if (!alternates(row)) return {false, "row " + std::to_string(i) + " nonzeros do not alternate"};
    int rs = nonzero_sum(row);
    if (f == Family::Ast && rs != 1)
      return {false, "row " + std::to_string(i) + " does not sum to 1"};
    if (f == Family::Qast) {
      if (i < n && rs != 1) return {false, "row " + std::to_string(i) + " does not sum to 1"};
      if (i == n && rs != 0 && rs != 1) return {false, "bottom row sum not in {0,1}"};
    }
    if (f == Family::Mast && first_nonzero(row) == -1)
      return {false, "row " + std::to_string(i) + " first nonzero is -1"};
  }
  for (int j = 1; j <= 2 * n - 1; ++j) {
    std::vector<int> col;
    for (int i = 1; i <= n; ++i)
      if (t.row_begin(i) <= j && j <= t.row_end(i)) col.push_back(t.at(i, j));
    if (!alternates(col))
      return {false, "column " + std::to_string(j) + " nonzeros do not alternate"};
    if (first_nonzero(col) == -1)
      return {false, "column " + std::to_string(j) + " topmost nonzero is -1"};
    int cs = nonzero_sum(col);
    if (f == Family::Dast && cs != 0)
      return {false, "column " + std::to_string(j) + " does not sum to 0"};
    if (f == Family::Mast && j >= n + 1 && cs != 0)
      return {false, "column " + std::to_string(j) + " does not sum to 0"};
  }
  return {};
}

// --------------------------------------------------------------- enumeration

std::vector<AsmMatrix> enumerate_asm(int n, int cap) {
  if (n < 1) throw ShapeMismatch("order must be positive");
  if (n > cap) throw CapExceeded("asm enumeration order " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap));
  std::vector<AsmMatrix> out;
  AsmMatrix a(n);
  std::vector<int> colsum(static_cast<size_t>(n) + 1, 0);
  std::function<void(int, int, int)> fill = [&](int i, int j, int rowlast) {
    if (j > n) {
      if (rowlast != 1) return;  // row must end with total 1
      if (i == n) {
        bool ok = true;
        for (int c = 1; c <= n; ++c) ok = ok && colsum[static_cast<size_t>(c)] == 1;
        if (ok) out.push_back(a);
      } else {
        fill(i + 1, 1, 0);
      }
      return;
    }
    for (int v : {-1, 0, 1}) {
      if (v == 1 && (rowlast == 1 || colsum[static_cast<size_t>(j)] != 0)) continue;
      if (v == -1 && (rowlast != 1 || colsum[static_cast<size_t>(j)] != 1)) continue;
      if (i == n && colsum[static_cast<size_t>(j)] + v != 1) continue;  // last row fixes columns
      a.set(i, j, v);
      colsum[static_cast<size_t>(j)] += v;
      fill(i, j + 1, v == 0 ? rowlast : v);
      colsum[static_cast<size_t>(j)] -= v;
    }
    a.set(i, j, 0);
  };
  fill(1, 1, 0);
  return out;
}

namespace {

// Can an alternating {-1,0,1} block of m slots bridge prefix-last sign a and
// suffix-first sign b with total sum t?
bool mid_feasible(int t, int m, int a, int b) {
  if (t == 0 && (a == 0 || b == 0 || a == -b)) return true;
  if (m >= 1) {
    for (int f : {-1, 1})
      if (t == f && (a == 0 || f == -a) && (b == 0 || f == -b)) return true;
  }
  if (m >= 2 && t == 0) {
    for (int f : {-1, 1})
      if ((a == 0 || f == -a) && (b == 0 || -f == -b)) return true;
  }
  return false;
}

struct HookState {
  int pre_last = 0;
  int pre_sum = 0;
  int tail_first = 0;
  int tail_sum = 0;
  int assigned = 0;
};

}  // namespace

std::vector<DasasmTriangle> enumerate_dasasm_triangles(int n, int cap) {
  if (n < 0) throw ShapeMismatch("negative order");
  if (n > cap) throw CapExceeded("triangle enumeration order " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap));
  std::vector<DasasmTriangle> out;
  DasasmTriangle t(n);
  if (n == 0) {
    t.set(1, 1, 1);
    out.push_back(t);
    return out;
  }
  std::vector<std::pair<int, int>> pos;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i; j <= 2 * n + 2 - i; ++j) pos.emplace_back(i, j);
  const int hook_len = 2 * n + 1;
  std::vector<HookState> hs(static_cast<size_t>(n) + 1);
  int centre_last = 0;
  bool centre_seen = false;

  // extend one hook state; returns false when the placement is inconsistent
  auto prefix_extend = [&](HookState& s, int v) {
    if (v != 0) {
      if (s.pre_last == 0 && v != 1) return false;  // the hook's first nonzero is 1
      if (s.pre_last != 0 && v != -s.pre_last) return false;
      s.pre_last = v;
    }
    s.pre_sum += v;
    s.assigned += 1;
    return mid_feasible(1 - s.pre_sum - s.tail_sum, hook_len - s.assigned, s.pre_last,
                        s.tail_first);
  };
  auto tail_extend = [&](HookState& s, int v) {
    if (v != 0) {
      if (s.tail_first == 0 && v != 1) return false;  // the hook's last nonzero is 1
      if (s.tail_first != 0 && v != -s.tail_first) return false;
      s.tail_first = v;
    }
    s.tail_sum += v;
    s.assigned += 1;
    return mid_feasible(1 - s.pre_sum - s.tail_sum, hook_len - s.assigned, s.pre_last,
                        s.tail_first);
  };

  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == pos.size()) {
      out.push_back(t);
      return;
    }
    auto [i, j] = pos[k];
    int m = std::min(j, 2 * n + 2 - j);
    for (int v : {-1, 0, 1}) {
      bool ok = true;
      // row membership: every cell of row i <= n extends the hook-i prefix
      HookState row_save;
      bool row_touched = false;
      if (i <= n) {
        row_save = hs[static_cast<size_t>(i)];
        row_touched = true;
        ok = prefix_extend(hs[static_cast<size_t>(i)], v);
      }
      // column membership for cells strictly above the turning row
      HookState col_save;
      bool col_touched = false;
      int save_centre_last = centre_last;
      bool save_centre_seen = centre_seen;
      bool centre_touched = false;
      if (ok && i < m && j <= n) {
        col_save = hs[static_cast<size_t>(j)];
        col_touched = true;
        ok = prefix_extend(hs[static_cast<size_t>(j)], v);
      } else if (ok && i < m && j >= n + 2) {
        col_save = hs[static_cast<size_t>(2 * n + 2 - j)];
        col_touched = true;
        ok = tail_extend(hs[static_cast<size_t>(2 * n + 2 - j)], v);
      } else if (ok && j == n + 1) {
        centre_touched = true;
        if (v != 0) {
          if (!centre_seen && v != 1) ok = false;
          if (centre_seen && v != -centre_last) ok = false;
          if (ok) {
            centre_last = v;
            centre_seen = true;
          }
        }
        if (i == n + 1 && v == 0) ok = false;
      }
      if (ok) {
        t.set(i, j, v);
        rec(k + 1);
      }
      if (row_touched) hs[static_cast<size_t>(i)] = row_save;
      if (col_touched) {
        int hcol = j <= n ? j : 2 * n + 2 - j;
        hs[static_cast<size_t>(hcol)] = col_save;
      }
      if (centre_touched) {
        centre_last = save_centre_last;
        centre_seen = save_centre_seen;
      }
    }
    t.set(i, j, 0);
  };
  rec(0);
  return out;
}

std::vector<SignTriangle> enumerate_sign_triangles(Family fam, int n, int cap) {
  if (fam == Family::Asm || fam == Family::DasasmTri)
    throw TypeMismatch("enumerate_sign_triangles expects a triangle family");
  if (n < 1) throw ShapeMismatch("order must be positive");
  if (n > cap) throw CapExceeded("triangle enumeration order " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap));
  std::vector<SignTriangle> out;
  SignTriangle t(fam, n);
  struct ColState {
    int last = 0;
    int sum = 0;
  };
  std::vector<ColState> col(static_cast<size_t>(2 * n));
  std::function<void(int, int, int, int)> rec = [&](int i, int j, int rowlast, int rowsum) {
    if (j > t.row_end(i)) {
      if (fam == Family::Ast && rowsum != 1) return;
      if (fam == Family::Qast && i < n && rowsum != 1) return;
      if (fam == Family::Qast && i == n && rowsum != 0 && rowsum != 1) return;
      if (i == n) {
        out.push_back(t);
      } else {
        rec(i + 1, i + 1, 0, 0);
      }
      return;
    }
    ColState& c = col[static_cast<size_t>(j)];
    bool col_done = (i == std::min(j, 2 * n - j));  // last row of column j
    for (int v : {-1, 0, 1}) {
      if (v != 0) {
        if (c.last == 0 && v != 1) continue;  // topmost nonzero of a column is 1
        if (c.last != 0 && v != -c.last) continue;
        if (rowlast != 0 && v != -rowlast) continue;
        if (rowlast == 0 && v != 1 &&
            (fam == Family::Ast || fam == Family::Qast || fam == Family::Mast))
          continue;  // first nonzero of a row is 1
      }
      int cs = c.sum + v;
      if (col_done) {
        if (fam == Family::Dast && cs != 0) continue;
        if (fam == Family::Mast && j >= n + 1 && cs != 0) continue;
      }
      ColState save = c;
      c.last = (v == 0) ? c.last : v;
      c.sum = cs;
      t.set(i, j, v);
      rec(i, j + 1, v == 0 ? rowlast : v, rowsum + v);
      c = save;
    }
    t.set(i, j, 0);
  };
  rec(1, 1, 0, 0);
  return out;
}

unsigned long long count_family(Family fam, int n, int cap) {
  switch (fam) {
    case Family::Asm: return enumerate_asm(n, cap).size();
    case Family::DasasmTri: return enumerate_dasasm_triangles(n, cap).size();
    default: return enumerate_sign_triangles(fam, n, cap).size();
  }
}

// --------------------------------------------------------------- conversions

TriConfig to_config(const DasasmTriangle& t) {
  const int n = t.order();
  TriConfig c(n);
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i; j <= 2 * n + 2 - i; ++j)
      c.set_vert(i, j, t.column_sum_above(i, j) == 0);
  for (int i = 1; i <= n; ++i) {
    int s = t.column_sum_above(i, i);
    for (int j = i; j <= 2 * n + 1 - i; ++j) {
      s += t.at(i, j);
      c.set_horiz(i, j, s == 0);
    }
  }
  return c;
}

DasasmTriangle to_triangle(const TriConfig& c) {
  const int n = c.order();
  DasasmTriangle t(n);
  for (int j = 1; j <= 2 * n + 1; ++j)
    if (!c.vert_up(1, j)) throw InvalidConfig("top vertical edge points down");
  for (int i = 1; i <= n; ++i) {
    // left boundary (i,i)
    bool up = c.vert_up(i, i), east = c.horiz_east(i, i);
    t.set(i, i, up ? (east ? 0 : 1) : (east ? -1 : 0));
    // right boundary (i, 2n+2-i)
    up = c.vert_up(i, 2 * n + 2 - i);
    east = c.horiz_east(i, 2 * n + 1 - i);
    t.set(i, 2 * n + 2 - i, up ? (east ? 1 : 0) : (east ? 0 : -1));
    for (int j = i + 1; j <= 2 * n + 1 - i; ++j) {
      bool above_up = c.vert_up(i, j);
      bool below_up = c.vert_up(i + 1, j);
      int in_count = (above_up ? 0 : 1) + (below_up ? 1 : 0) + (c.horiz_east(i, j - 1) ? 1 : 0) +
                     (c.horiz_east(i, j) ? 0 : 1);
      if (in_count != 2)
        throw InvalidConfig("bulk vertex (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is unbalanced");
      t.set(i, j, above_up ? (below_up ? 0 : 1) : (below_up ? -1 : 0));
    }
  }
  t.set(n + 1, n + 1, c.vert_up(n + 1, n + 1) ? 1 : -1);
  auto r = validate(t);
  if (!r.ok) throw InvalidConfig("configuration does not encode a triangle: " + r.violation);
  return t;
}

DasasmTriangle ast_diagonal_reconstruct(const SignTriangle& ast) {
  if (ast.family() != Family::Ast) throw TypeMismatch("expected an AST");
  auto v = validate(ast);
  if (!v.ok) throw ShapeMismatch("invalid AST: " + v.violation);
  const int n = ast.order();
  DasasmTriangle t(n);
  for (int i = 1; i <= n; ++i)
    for (int j = ast.row_begin(i); j <= ast.row_end(i); ++j) t.set(i, j + 1, ast.at(i, j));
  for (int j = 1; j <= 2 * n - 1; ++j) {
    int m = j + 1;  // triangle column below AST column j
    int val = ast.column_sum(j) == 1 ? -1 : 0;
    if (m <= n)
      t.set(m, m, val);
    else if (m == n + 1)
      t.set(n + 1, n + 1, val);
    else
      t.set(2 * n + 2 - m, m, val);
  }
  // outermost diagonal cells have no column above them
  t.set(1, 1, 0);
  t.set(1, 2 * n + 1, 0);
  return t;
}

SignTriangle ast_strip_diagonals(const DasasmTriangle& t) {
  const int n = t.order();
  int minus_ones = 0;
  for (int i = 1; i <= n; ++i) {
    if (t.at(i, i) == -1) ++minus_ones;
    if (t.at(i, 2 * n + 2 - i) == -1) ++minus_ones;
  }
  if (t.center() == -1) ++minus_ones;
  if (minus_ones != n) throw NotExtreme("triangle does not have N_{-1} = n");
  SignTriangle ast(Family::Ast, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= 2 * n - i; ++j) ast.set(i, j, t.at(i, j + 1));
  auto v = validate(ast);
  if (!v.ok) throw NotExtreme("stripped triangle is not an AST: " + v.violation);
  return ast;
}

unsigned long long dast_extension_count(const SignTriangle& dast) {
  if (dast.family() != Family::Dast) throw TypeMismatch("expected a DAST");
  int zero_rows = 0;
  for (int i = 1; i <= dast.order(); ++i) {
    bool all_zero = true;
    for (int j = dast.row_begin(i); j <= dast.row_end(i); ++j) all_zero &= dast.at(i, j) == 0;
    if (all_zero) ++zero_rows;
  }
  return 1ull << zero_rows;
}

std::vector<DasasmTriangle> dast_extensions(const SignTriangle& dast) {
  if (dast.family() != Family::Dast) throw TypeMismatch("expected a DAST");
  auto val = validate(dast);
  if (!val.ok) throw ShapeMismatch("invalid DAST: " + val.violation);
  const int n = dast.order();
  DasasmTriangle base(n);
  for (int i = 1; i <= n; ++i)
    for (int j = dast.row_begin(i); j <= dast.row_end(i); ++j) base.set(i, j + 1, dast.at(i, j));
  base.set(n + 1, n + 1, 1);
  std::vector<int> zero_rows;
  for (int i = 1; i <= n; ++i) {
    int first = 0, last = 0;
    for (int j = dast.row_begin(i); j <= dast.row_end(i); ++j) {
      int v = dast.at(i, j);
      if (v != 0) {
        if (first == 0) first = v;
        last = v;
      }
    }
    if (first == 0) {
      zero_rows.push_back(i);
    } else {
      base.set(i, i, first == -1 ? 1 : 0);
      base.set(i, 2 * n + 2 - i, last == -1 ? 1 : 0);
    }
  }
  std::vector<DasasmTriangle> out;
  for (unsigned long long mask = 0; mask < (1ull << zero_rows.size()); ++mask) {
    DasasmTriangle t = base;
    for (size_t k = 0; k < zero_rows.size(); ++k) {
      int i = zero_rows[k];
      bool one_left = (mask >> k) & 1ull;
      t.set(i, i, one_left ? 1 : 0);
      t.set(i, 2 * n + 2 - i, one_left ? 0 : 1);
    }
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

bool is_minzero(const DasasmTriangle& t) {
  const int n = t.order();
  if (t.center() != 1) return false;
  for (int i = 1; i <= n; ++i) {
    if (t.at(i, i) == 0 && t.column_sum_above(i, i) == 1) return false;  // 0-in
    if (t.at(i, 2 * n + 2 - i) == 0 && t.column_sum_above(i, 2 * n + 2 - i) == 1) return false;
  }
  return true;
}

}  // namespace

SignTriangle minzero_forward(const DasasmTriangle& t) {
  const int n = t.order();
  if (!is_minzero(t)) throw NotExtreme("triangle does not have N_0 = n");
  SignTriangle ast(Family::Ast, n + 1);
  for (int i = 1; i <= n + 1; ++i)
    for (int j = t.row_begin(i); j <= t.row_end(i); ++j) ast.set(i, j, t.at(i, j));
  for (int i = 1; i <= n; ++i) {
    if (t.at(i, i) == -1) ast.set(i, i, 0);
    if (t.at(i, 2 * n + 2 - i) == -1) ast.set(i, 2 * n + 2 - i, 0);
  }
  auto v = validate(ast);
  if (!v.ok) throw NotExtreme("forward image is not an AST: " + v.violation);
  return ast;
}

DasasmTriangle minzero_backward(const SignTriangle& ast) {
  if (ast.family() != Family::Ast) throw TypeMismatch("expected an AST");
  auto val = validate(ast);
  if (!val.ok) throw ShapeMismatch("invalid AST: " + val.violation);
  const int m = ast.order();
  if (m < 1) throw NotExtreme("AST of order >= 1 required");
  const int n = m - 1;
  DasasmTriangle t(n);
  for (int i = 1; i <= m; ++i)
    for (int j = ast.row_begin(i); j <= ast.row_end(i); ++j) t.set(i, j, ast.at(i, j));
  for (int i = 1; i <= n; ++i) {
    for (int j : {i, 2 * n + 2 - i}) {
      int above = 0;
      for (int k = 1; k < i; ++k) above += ast.at(k, j);
      if (ast.at(i, j) == 0 && above == 1) t.set(i, j, -1);
    }
  }
  auto v = validate(t);
  if (!v.ok) throw NotExtreme("backward image is not a triangle: " + v.violation);
  return t;
}

namespace {

bool is_maxone(const DasasmTriangle& t) {
  const int n = t.order();
  if (t.center() != 1) return false;
  for (int i = 1; i <= n; ++i) {
    for (int j : {i, 2 * n + 2 - i}) {
      if (t.at(i, j) == -1) return false;
      if (t.at(i, j) == 0 && t.column_sum_above(i, j) == 1) return false;  // 0-in
    }
  }
  return true;
}

// In-status swap of the bottom vertical edge and one horizontal edge at the
// first (op1) or last (op2) bulk vertex of each interior row.
void flip_ops(TriConfig& c, bool op1) {
  const int n = c.order();
  for (int i = 1; i <= n; ++i) {
    if (op1) {
      int j = i + 1;  // second vertex of row i
      bool in_v = c.vert_up(i + 1, j);
      bool in_h = c.horiz_east(i, i);
      c.set_vert(i + 1, j, in_h);
      c.set_horiz(i, i, in_v);
    } else {
      int j = 2 * n + 1 - i;  // penultimate vertex of row i
      bool in_v = c.vert_up(i + 1, j);
      bool in_h = !c.horiz_east(i, j);
      c.set_vert(i + 1, j, in_h);
      c.set_horiz(i, j, !in_v);
    }
  }
}

}  // namespace

SignTriangle qast_forward(const DasasmTriangle& t) {
  const int n = t.order();
  if (!is_maxone(t)) throw NotExtreme("triangle does not have N_1 = n+1");
  TriConfig c = to_config(t);
  flip_ops(c, true);
  flip_ops(c, false);
  SignTriangle q(Family::Qast, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= 2 * n - i; ++j) {
      bool above_up = c.vert_up(i, j + 1);
      bool below_up = c.vert_up(i + 1, j + 1);
      q.set(i, j, above_up ? (below_up ? 0 : 1) : (below_up ? -1 : 0));
    }
  auto v = validate(q);
  if (!v.ok) throw NotExtreme("forward image is not a QAST: " + v.violation);
  return q;
}

DasasmTriangle qast_backward(const SignTriangle& q) {
  if (q.family() != Family::Qast) throw TypeMismatch("expected a QAST");
  auto val = validate(q);
  if (!val.ok) throw ShapeMismatch("invalid QAST: " + val.violation);
  const int n = q.order();
  TriConfig c(n);
  for (int j = 1; j <= 2 * n + 1; ++j) c.set_vert(1, j, true);
  for (int i = 2; i <= n + 1; ++i)
    for (int j = i; j <= 2 * n + 2 - i; ++j) {
      int sum = 0;
      for (int k = 1; k < i; ++k)
        if (q.row_begin(k) <= j - 1 && j - 1 <= q.row_end(k)) sum += q.at(k, j - 1);
      c.set_vert(i, j, sum == 0);
    }
  for (int i = 1; i <= n; ++i) {
    int sum = 0;
    c.set_horiz(i, i, true);
    for (int j = i + 1; j <= 2 * n + 1 - i; ++j) {
      sum += q.at(i, j - 1);
      c.set_horiz(i, j, sum == 0);
    }
  }
  flip_ops(c, false);
  flip_ops(c, true);
  DasasmTriangle t = to_triangle(c);
  if (!is_maxone(t)) throw NotExtreme("backward image does not have N_1 = n+1");
  return t;
}

// ------------------------------------------------------------- serialization

namespace {

template <typename Obj>
std::string rows_to_text(const Obj& o, int rows, int (Obj::*rb)(int) const,
                         int (Obj::*re)(int) const) {
  std::ostringstream os;
  for (int i = 1; i <= rows; ++i) {
    if (i > 1) os << '/';
    for (int j = (o.*rb)(i); j <= (o.*re)(i); ++j) {
      if (j > (o.*rb)(i)) os << ' ';
      os << o.at(i, j);
    }
  }
  return os.str();
}

}  // namespace

std::string to_text(const AsmMatrix& a) {
  std::ostringstream os;
  for (int i = 1; i <= a.order(); ++i) {
    if (i > 1) os << '/';
    for (int j = 1; j <= a.order(); ++j) {
      if (j > 1) os << ' ';
      os << a.at(i, j);
    }
  }
  return os.str();
}

std::string to_text(const DasasmTriangle& t) {
  return rows_to_text(t, t.order() + 1, &DasasmTriangle::row_begin, &DasasmTriangle::row_end);
}

std::string to_text(const SignTriangle& t) {
  return rows_to_text(t, t.order(), &SignTriangle::row_begin, &SignTriangle::row_end);
}

namespace {

std::vector<std::vector<int>> parse_rows(const std::string& line) {
  std::vector<std::vector<int>> rows(1);
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    size_t used = 0;
    int v = std::stoi(token, &used);
    if (used != token.size() || v < -1 || v > 1)
      throw ShapeMismatch("entry out of {-1,0,1}: " + token);
    rows.back().push_back(v);
    token.clear();
  };
  for (char c : line) {
    if (c == '/') {
      flush();
      rows.emplace_back();
    } else if (c == ' ') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return rows;
}

}  // namespace

AsmMatrix asm_from_text(const std::string& line) {
  auto rows = parse_rows(line);
  int n = static_cast<int>(rows.size());
  AsmMatrix a(n);
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i - 1)].size()) != n)
      throw ShapeMismatch("row length does not match the order");
    for (int j = 1; j <= n; ++j)
      a.set(i, j, rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]);
  }
  return a;
}

DasasmTriangle triangle_from_text(const std::string& line) {
  auto rows = parse_rows(line);
  int n = static_cast<int>(rows.size()) - 1;
  DasasmTriangle t(n);
  for (int i = 1; i <= n + 1; ++i) {
    const auto& row = rows[static_cast<size_t>(i - 1)];
    if (static_cast<int>(row.size()) != 2 * n + 3 - 2 * i)
      throw ShapeMismatch("row length does not match the triangle shape");
    for (int j = t.row_begin(i); j <= t.row_end(i); ++j)
      t.set(i, j, row[static_cast<size_t>(j - i)]);
  }
  return t;
}

SignTriangle sign_triangle_from_text(Family fam, const std::string& line) {
  auto rows = parse_rows(line);
  int n = static_cast<int>(rows.size());
  SignTriangle t(fam, n);
  for (int i = 1; i <= n; ++i) {
    const auto& row = rows[static_cast<size_t>(i - 1)];
    if (static_cast<int>(row.size()) != 2 * n + 1 - 2 * i)
      throw ShapeMismatch("row length does not match the triangle shape");
    for (int j = t.row_begin(i); j <= t.row_end(i); ++j)
      t.set(i, j, row[static_cast<size_t>(j - i)]);
  }
  return t;
}

}  // namespace astlab
