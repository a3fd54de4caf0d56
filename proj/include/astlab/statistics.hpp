#pragma once

#include <map>
#include <string>
#include <vector>

#include "astlab/exact.hpp"
#include "astlab/objects.hpp"

namespace astlab {

struct BoundaryStats {
  int n_minus_one = 0;
  int n_plus_one = 0;
  int n_zero = 0;
  int n_zero_in = 0;
  int n_zero_out = 0;
  int center = 0;
};

// Counts of -1 / 1 / 0 over the diagonal positions of the fundamental
// triangle (2n boundary cells plus the centre), with the 0 cells split by
// the in/out degree of the corresponding boundary vertex.
BoundaryStats boundary_stats(const DasasmTriangle& t);

enum class Stat {
  Mu,            // number of -1 entries of an ASM
  MuNabla,       // number of -1 entries of an AST
  Inv,           // positive inversion number of an ASM
  InvPrime,      // complementary inversion number of an ASM
  InvNabla,      // inversion number of an AST
  InvPrimeNabla, // complementary inversion number of an AST
  Rho,           // boundary statistic of an AST
  Kappa,         // top-row + first-column positions of an ASM, minus 2
  KappaNabla,    // top-row position of the 1 of an AST, minus 1
};

const char* stat_name(Stat s);
Stat stat_from_name(const std::string& name);  // throws UnknownIdentifier

long statistic(Stat s, const AsmMatrix& a);     // throws TypeMismatch on AST statistics
long statistic(Stat s, const SignTriangle& t);  // throws TypeMismatch on ASM statistics

// Numbers of sw/ne/se/nw turning vertices of the six-vertex configuration of
// an ASM or of the reconstructed triangle of an AST.
struct TurnCounts {
  long sw = 0, ne = 0, se = 0, nw = 0;
};
TurnCounts turn_counts(const AsmMatrix& a);
TurnCounts turn_counts(const SignTriangle& ast);

struct DistributionTable {
  std::string family;
  int n = 0;
  std::vector<std::string> stats;
  std::map<std::vector<long>, unsigned long long> counts;

  unsigned long long total() const;
  std::string to_csv() const;
};

DistributionTable joint_distribution(Family fam, int n, const std::vector<Stat>& stats,
                                     int cap = 6);

// Generating polynomial of a single-statistic table (coefficient of x^k is
// the count at value k); requires nonnegative values.
using GenPoly = std::vector<long long>;
GenPoly distribution_poly(const DistributionTable& table);

struct AppendixCount {
  Integer double_sum;   // the F1/F2 double sum
  Integer closed_form;  // binomial(n,3)^2 (n-3)!
};
AppendixCount appendix_one_minus_one(int n);

struct KappaReport {
  int n = 0;
  bool functional_equation = false;
  bool recursion = false;
  bool explicit_solution = false;
  bool d_from_b = false;
  GenPoly k_ast, k_asm;
  bool pass() const { return functional_equation && recursion && explicit_solution && d_from_b; }
};
KappaReport kappa_recursion_check(int n, int cap = 6);

struct RhoReport {
  int n = 0;
  bool distribution_matches = false;  // conjectured refined equality
  bool triple_joint_equal = false;    // joint (mu,inv,position) comparison
};
RhoReport rho_check(int n, int cap = 6);

}  // namespace astlab
