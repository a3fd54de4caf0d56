#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "astlab/errors.hpp"

namespace astlab {

enum class Family { Asm, DasasmTri, Ast, Dast, Qast, Mast };

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // throws UnknownIdentifier

// Alternating sign matrix of order n, entries in {-1,0,1}. 1-based access.
class AsmMatrix {
 public:
  explicit AsmMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, 0) {}
  int order() const { return n_; }
  int at(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, int v) { e_[idx(i, j)] = static_cast<int8_t>(v); }
  friend bool operator==(const AsmMatrix&, const AsmMatrix&) = default;

 private:
  size_t idx(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw ShapeMismatch("asm index out of range");
    return static_cast<size_t>(i - 1) * n_ + static_cast<size_t>(j - 1);
  }
  int n_;
  std::vector<int8_t> e_;
};

// Odd DASASM-triangle of order n: entries a_{i,j}, 1 <= i <= n+1,
// i <= j <= 2n+2-i (the fundamental triangle of an order 2n+1 DASASM).
class DasasmTriangle {
 public:
  explicit DasasmTriangle(int n);
  int order() const { return n_; }
  int row_begin(int i) const { return i; }
  int row_end(int i) const { return 2 * n_ + 2 - i; }  // inclusive
  int at(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, int v) { e_[idx(i, j)] = static_cast<int8_t>(v); }
  int center() const { return at(n_ + 1, n_ + 1); }
  friend bool operator==(const DasasmTriangle&, const DasasmTriangle&) = default;

  // Partial column sum above (i,j): sum of a_{k,j} for k < i.
  int column_sum_above(int i, int j) const;
  // Full DASASM entry at any (i,j) of the order 2n+1 matrix, via reflections.
  int full_entry(int i, int j) const;
  AsmMatrix to_asm() const;

 private:
  size_t idx(int i, int j) const;
  int n_;
  std::vector<int8_t> e_;
};

// Triangular {-1,0,1} array of AST shape: rows 1..n, columns i..2n-i,
// carrying the family tag (AST, DAST, QAST or MAST).
class SignTriangle {
 public:
  SignTriangle(Family fam, int n);
  Family family() const { return fam_; }
  int order() const { return n_; }
  int row_begin(int i) const { return i; }
  int row_end(int i) const { return 2 * n_ - i; }  // inclusive
  int at(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, int v) { e_[idx(i, j)] = static_cast<int8_t>(v); }
  int column_sum(int j) const;
  int row_sum(int i) const;
  friend bool operator==(const SignTriangle&, const SignTriangle&) = default;

 private:
  size_t idx(int i, int j) const;
  Family fam_;
  int n_;
  std::vector<int8_t> e_;
};

// Edge orientations on the triangular grid T_n. Vertical edge (i,j) sits
// above vertex (i,j) (i = 1 row of top stubs), horizontal edge (i,j) joins
// (i,j) and (i,j+1). "up" and "east" are the stored truth values.
class TriConfig {
 public:
  explicit TriConfig(int n);
  int order() const { return n_; }
  bool vert_up(int i, int j) const { return vert_[vidx(i, j)] != 0; }
  void set_vert(int i, int j, bool up) { vert_[vidx(i, j)] = up ? 1 : 0; }
  bool horiz_east(int i, int j) const { return horiz_[hidx(i, j)] != 0; }
  void set_horiz(int i, int j, bool east) { horiz_[hidx(i, j)] = east ? 1 : 0; }
  friend bool operator==(const TriConfig&, const TriConfig&) = default;

 private:
  size_t vidx(int i, int j) const;  // i = 1..n+1, j = i..2n+2-i
  size_t hidx(int i, int j) const;  // i = 1..n,   j = i..2n+1-i
  int n_;
  std::vector<uint8_t> vert_, horiz_;
};

struct ValidationResult {
  bool ok = true;
  std::string violation;
};

ValidationResult validate(const AsmMatrix& a);
ValidationResult validate(const DasasmTriangle& t);
ValidationResult validate(const SignTriangle& t);

// Exhaustive enumeration in lexicographic row-major order (-1 < 0 < 1).
std::vector<AsmMatrix> enumerate_asm(int n, int cap = 6);
std::vector<DasasmTriangle> enumerate_dasasm_triangles(int n, int cap = 6);
std::vector<SignTriangle> enumerate_sign_triangles(Family fam, int n, int cap = 6);
unsigned long long count_family(Family fam, int n, int cap = 6);

// Triangle <-> six-vertex configuration dictionary.
TriConfig to_config(const DasasmTriangle& t);
DasasmTriangle to_triangle(const TriConfig& c);  // throws InvalidConfig

// AST(n) <-> odd DASASM-triangles of order n with N_{-1} = n: append a -1
// below every column of sum 1 (and 0 otherwise) / delete the diagonals.
DasasmTriangle ast_diagonal_reconstruct(const SignTriangle& ast);
SignTriangle ast_strip_diagonals(const DasasmTriangle& t);  // throws NotExtreme

// Number of odd DASASM-triangles with N_1 = n+1 restricting to the DAST
// (2^{number of all-zero rows}), and the explicit list of extensions.
unsigned long long dast_extension_count(const SignTriangle& dast);
std::vector<DasasmTriangle> dast_extensions(const SignTriangle& dast);

// Bijection between order-n triangles with N_0 = n and AST(n+1): boundary
// -1 entries become 0 (forward); backward restores a -1 at every boundary 0
// whose column sum above it is 1.
SignTriangle minzero_forward(const DasasmTriangle& t);     // throws NotExtreme
DasasmTriangle minzero_backward(const SignTriangle& ast);  // throws NotExtreme

// Bijection between triangles with N_1 = n+1 and QAST(n), through the edge
// flips at the second and penultimate vertex of each interior row.
SignTriangle qast_forward(const DasasmTriangle& t);   // throws NotExtreme
DasasmTriangle qast_backward(const SignTriangle& q);  // throws NotExtreme

// Line format: rows joined by '/', entries space-separated.
std::string to_text(const AsmMatrix& a);
std::string to_text(const DasasmTriangle& t);
std::string to_text(const SignTriangle& t);
AsmMatrix asm_from_text(const std::string& line);                       // throws ShapeMismatch
DasasmTriangle triangle_from_text(const std::string& line);             // throws ShapeMismatch
SignTriangle sign_triangle_from_text(Family fam, const std::string& line);

}  // namespace astlab
