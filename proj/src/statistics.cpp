#include "astlab/statistics.hpp"

#include <algorithm>
#include <sstream>

namespace astlab {

BoundaryStats boundary_stats(const DasasmTriangle& t) {
  const int n = t.order();
  BoundaryStats s;
  s.center = t.center();
  auto tally = [&](int i, int j) {
    int v = t.at(i, j);
    if (v == 1) {
      ++s.n_plus_one;
    } else if (v == -1) {
      ++s.n_minus_one;
    } else {
      ++s.n_zero;
      if (t.column_sum_above(i, j) == 1)
        ++s.n_zero_in;
      else
        ++s.n_zero_out;
    }
  };
  for (int i = 1; i <= n; ++i) {
    tally(i, i);
    tally(i, 2 * n + 2 - i);
  }
  if (s.center == 1)
    ++s.n_plus_one;
  else
    ++s.n_minus_one;
  return s;
}

const char* stat_name(Stat s) {
  switch (s) {
    case Stat::Mu: return "mu";
    case Stat::MuNabla: return "mu-nabla";
    case Stat::Inv: return "inv";
    case Stat::InvPrime: return "inv-prime";
    case Stat::InvNabla: return "inv-nabla";
    case Stat::InvPrimeNabla: return "inv-prime-nabla";
    case Stat::Rho: return "rho";
    case Stat::Kappa: return "kappa";
    case Stat::KappaNabla: return "kappa-nabla";
  }
  return "?";
}

Stat stat_from_name(const std::string& name) {
  for (Stat s : {Stat::Mu, Stat::MuNabla, Stat::Inv, Stat::InvPrime, Stat::InvNabla,
                 Stat::InvPrimeNabla, Stat::Rho, Stat::Kappa, Stat::KappaNabla})
    if (name == stat_name(s)) return s;
  throw UnknownIdentifier("unknown statistic: " + name);
}

TurnCounts turn_counts(const AsmMatrix& a) {
  const int n = a.order();
  TurnCounts c;
  for (int i = 1; i <= n; ++i) {
    int left = 0;
    for (int j = 1; j <= n; ++j) {
      left += a.at(i, j);
      if (a.at(i, j) != 0) continue;
      int above = 0;
      for (int k = 1; k < i; ++k) above += a.at(k, j);
      if (above == 1)
        (left == 1 ? c.sw : c.se)++;
      else
        (left == 1 ? c.nw : c.ne)++;
    }
  }
  return c;
}

TurnCounts turn_counts(const SignTriangle& ast) {
  DasasmTriangle t = ast_diagonal_reconstruct(ast);
  const int n = t.order();
  TurnCounts c;
  for (int i = 1; i <= n; ++i) {
    int left = t.column_sum_above(i, i);
    for (int j = i; j <= 2 * n + 1 - i; ++j) {
      left += t.at(i, j);
      if (j == i || t.at(i, j) != 0) continue;
      int above = t.column_sum_above(i, j);
      if (above == 1)
        (left == 1 ? c.sw : c.se)++;
      else
        (left == 1 ? c.nw : c.ne)++;
    }
  }
  return c;
}

namespace {

long asm_inv_double_sum(const AsmMatrix& a) {
  const int n = a.order();
  // sum over i' < i, j' <= j of a_{i'j} a_{ij'}: accumulate partial sums
  long inv = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int above = 0;
      for (int k = 1; k < i; ++k) above += a.at(k, j);
      int left = 0;
      for (int k = 1; k <= j; ++k) left += a.at(i, k);
      inv += static_cast<long>(above) * left;
    }
  }
  return inv;
}

long ast_inv_double_sum(const SignTriangle& t) {
  // sum of t_{i'j} t_{ij'} over all defined pairs with i' < i and j' <= j
  const int n = t.order();
  long inv = 0;
  for (int ip = 1; ip <= n; ++ip)
    for (int j = t.row_begin(ip); j <= t.row_end(ip); ++j) {
      if (t.at(ip, j) == 0) continue;
      for (int i = ip + 1; i <= n; ++i)
        for (int jp = t.row_begin(i); jp <= std::min(j, t.row_end(i)); ++jp)
          inv += t.at(ip, j) * t.at(i, jp);
    }
  return inv;
}

int top_row_one_position(const AsmMatrix& a) {
  for (int j = 1; j <= a.order(); ++j)
    if (a.at(1, j) == 1) return j;
  throw ShapeMismatch("no 1 in the top row");
}

}  // namespace

long statistic(Stat s, const AsmMatrix& a) {
  const int n = a.order();
  switch (s) {
    case Stat::Mu: {
      long mu = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) mu += a.at(i, j) == -1;
      return mu;
    }
    case Stat::Inv: return asm_inv_double_sum(a);
    case Stat::InvPrime: {
      TurnCounts c = turn_counts(a);
      if ((c.se + c.nw) % 2 != 0) throw Error("odd complementary turn count");
      return (c.se + c.nw) / 2;
    }
    case Stat::Kappa: {
      int top = top_row_one_position(a);
      int left = 0;
      for (int i = 1; i <= n; ++i)
        if (a.at(i, 1) == 1) left = i;
      return top + left - 2;
    }
    default: throw TypeMismatch(std::string(stat_name(s)) + " is not an ASM statistic");
  }
}

long statistic(Stat s, const SignTriangle& t) {
  if (t.family() != Family::Ast) throw TypeMismatch("triangle statistics are defined on ASTs");
  const int n = t.order();
  switch (s) {
    case Stat::MuNabla: {
      long mu = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = t.row_begin(i); j <= t.row_end(i); ++j) mu += t.at(i, j) == -1;
      return mu;
    }
    case Stat::InvNabla: {
      TurnCounts c = turn_counts(t);
      if ((c.sw + c.ne) % 2 != 0) throw Error("odd turn count");
      long by_vertices = (c.sw + c.ne) / 2;
      long by_sum = ast_inv_double_sum(t);
      if (by_vertices != by_sum) throw Error("inversion number routes disagree");
      return by_sum;
    }
    case Stat::InvPrimeNabla: {
      TurnCounts c = turn_counts(t);
      if ((c.se + c.nw) % 2 != 0) throw Error("odd complementary turn count");
      return (c.se + c.nw) / 2;
    }
    case Stat::Rho: {
      long ell = 0, r = 0;
      for (int i = 1; i < n; ++i) {
        if (t.at(i, i) == 1) ++ell;
        if (t.at(i, 2 * n - i) == 0 && t.column_sum(2 * n - i) == 1) ++r;
      }
      return ell + r + 1;
    }
    case Stat::KappaNabla: {
      for (int j = 1; j <= 2 * n - 1; ++j)
        if (t.at(1, j) == 1) return j - 1;
      throw ShapeMismatch("no 1 in the top row");
    }
    default: throw TypeMismatch(std::string(stat_name(s)) + " is not an AST statistic");
  }
}

unsigned long long DistributionTable::total() const {
  unsigned long long t = 0;
  for (const auto& [k, v] : counts) t += v;
  return t;
}

std::string DistributionTable::to_csv() const {
  std::ostringstream os;
  for (const auto& s : stats) os << s << ',';
  os << "count\n";
  for (const auto& [key, cnt] : counts) {
    for (long k : key) os << k << ',';
    os << cnt << '\n';
  }
  return os.str();
}

DistributionTable joint_distribution(Family fam, int n, const std::vector<Stat>& stats, int cap) {
  DistributionTable table;
  table.family = family_name(fam);
  table.n = n;
  for (Stat s : stats) table.stats.push_back(stat_name(s));
  if (fam == Family::Asm) {
    for (const auto& a : enumerate_asm(n, cap)) {
      std::vector<long> key;
      for (Stat s : stats) key.push_back(statistic(s, a));
      ++table.counts[key];
    }
  } else if (fam == Family::Ast) {
    for (const auto& t : enumerate_sign_triangles(Family::Ast, n, cap)) {
      std::vector<long> key;
      for (Stat s : stats) key.push_back(statistic(s, t));
      ++table.counts[key];
    }
  } else {
    throw TypeMismatch("distributions are defined for asm and ast families");
  }
  return table;
}

GenPoly distribution_poly(const DistributionTable& table) {
  if (table.stats.size() != 1) throw ShapeMismatch("generating polynomial needs one statistic");
  GenPoly p;
  for (const auto& [key, cnt] : table.counts) {
    long e = key[0];
    if (e < 0) throw ShapeMismatch("negative statistic value");
    if (static_cast<size_t>(e) >= p.size()) p.resize(static_cast<size_t>(e) + 1, 0);
    p[static_cast<size_t>(e)] += static_cast<long long>(cnt);
  }
  return p;
}

namespace {

Integer p_run(long a, long b) {
  // product a(a+1)...b, empty product 1 when a > b
  Integer r = 1;
  for (long t = a; t <= b; ++t) r *= t;
  return r;
}

Integer f1(long j1, long j3, long i1) {
  long mn = std::min(std::abs(j1), std::abs(j3));
  long mx = std::max(std::abs(j1), std::abs(j3));
  return p_run(1, mn) * p_run(mn, mx - 1) * p_run(mx - 1, i1 - 3);
}

Integer f2(long j1, long j2, long j3, long i1) {
  long a1 = std::abs(j1), a2 = std::abs(j2), a3 = std::abs(j3);
  long mn = std::min({a1, a2, a3});
  long mx = std::max({a1, a2, a3});
  long md = a1 + a2 + a3 - mn - mx;
  return p_run(1, mn) * p_run(mn, md - 1) * p_run(md - 1, mx - 2) * p_run(mx - 2, i1 - 4);
}

}  // namespace

AppendixCount appendix_one_minus_one(int n) {
  AppendixCount out;
  out.double_sum = 0;
  for (long j1 = -(n - 1); j1 <= n - 1; ++j1)
    for (long j2 = j1 + 1; j2 <= n - 1; ++j2)
      for (long j3 = j2 + 1; j3 <= n - 1; ++j3) {
        long mx = std::max({std::abs(j1), std::abs(j2), std::abs(j3)});
        for (long i1 = mx + 1; i1 <= n; ++i1)
          for (long i2 = i1 + 1; i2 <= n; ++i2) {
            Integer with_one = f2(j1, j2, j3, i1);
            out.double_sum += with_one * p_run(i1 - 1, i2 - 3) * p_run(i2, n - 1);
            out.double_sum +=
                (f1(j1, j3, i1) - with_one) * p_run(i1, i2 - 2) * p_run(i2 + 1, n);
          }
      }
  // binom(n,3)^2 (n-3)!
  Integer b = 0;
  if (n >= 3) {
    b = p_run(n - 2, n) / 6;
    b = b * b;
    for (long t = 2; t <= n - 3; ++t) b *= t;
  }
  out.closed_form = b;
  return out;
}

namespace {

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<Rational> to_rat(const GenPoly& p) {
  std::vector<Rational> r;
  for (long long c : p) r.emplace_back(static_cast<long>(c));
  if (r.empty()) r.emplace_back(0);
  return r;
}

Rational at(const std::vector<Rational>& p, size_t k) {
  return k < p.size() ? p[k] : Rational(0);
}

}  // namespace

KappaReport kappa_recursion_check(int n, int cap) {
  KappaReport rep;
  rep.n = n;
  rep.k_ast = distribution_poly(joint_distribution(Family::Ast, n, {Stat::KappaNabla}, cap));
  rep.k_asm = distribution_poly(joint_distribution(Family::Asm, n, {Stat::Kappa}, cap));
  unsigned long long a_prev = n == 1 ? 1 : enumerate_asm(n - 1, cap).size();
  Rational A(static_cast<unsigned long>(a_prev));

  auto T = [&](long k) {
    return k >= 0 && static_cast<size_t>(k) < rep.k_ast.size()
               ? Rational(static_cast<long>(rep.k_ast[static_cast<size_t>(k)]))
               : Rational(0);
  };
  auto D = [&](long k) {
    return k >= 0 && static_cast<size_t>(k) < rep.k_asm.size()
               ? Rational(static_cast<long>(rep.k_asm[static_cast<size_t>(k)]))
               : Rational(0);
  };

  // (2-x) x^2 K_ast(x) = (x^2-x+1) K_asm(x) + (1-x)(x^{2n}-1) A_{n-1}
  {
    std::vector<Rational> lhs = poly_mul({Rational(0), Rational(0), Rational(2), Rational(-1)},
                                         to_rat(rep.k_ast));
    std::vector<Rational> rhs =
        poly_mul({Rational(1), Rational(-1), Rational(1)}, to_rat(rep.k_asm));
    std::vector<Rational> corr(static_cast<size_t>(2 * n) + 2, Rational(0));
    // (1-x)(x^{2n}-1) = x^{2n} - x^{2n+1} - 1 + x
    corr[static_cast<size_t>(2 * n)] += A;
    corr[static_cast<size_t>(2 * n) + 1] -= A;
    corr[0] -= A;
    corr[1] += A;
    size_t len = std::max({lhs.size(), rhs.size(), corr.size()});
    rep.functional_equation = true;
    for (size_t k = 0; k < len; ++k)
      rep.functional_equation =
          rep.functional_equation && at(lhs, k) == at(rhs, k) + at(corr, k);
  }

  // 2 T_k = T_{k-1} + D_k - D_{k+1} + D_{k+2}
  //         + (d_{k,-1} - d_{k,-2} + d_{k,2n-2} - d_{k,2n-1}) A_{n-1}
  {
    rep.recursion = true;
    for (long k = -3; k <= 2 * n + 2; ++k) {
      Rational rhs = T(k - 1) + D(k) - D(k + 1) + D(k + 2);
      if (k == -1) rhs += A;
      if (k == -2) rhs -= A;
      if (k == 2 * n - 2) rhs += A;
      if (k == 2 * n - 1) rhs -= A;
      rep.recursion = rep.recursion && Rational(2) * T(k) == rhs;
    }
  }

  // explicit solution on 0 <= k <= 2n-2
  {
    rep.explicit_solution = true;
    for (long k = 0; k <= 2 * n - 2; ++k) {
      Rational s(0);
      for (long i = 0; i + 3 <= k; ++i) {
        Rational pw = Rational(1);
        for (long t = 0; t < k - i; ++t) pw /= 2;  // 2^{i-k}
        s += pw * D(i + 3);
      }
      s *= 3;
      s += Rational(-1, 4) * D(k + 1) + Rational(1, 2) * D(k + 2);
      Rational coeff(0);
      {
        Rational pw(2);  // 2^{1-k}
        for (long t = 0; t < k; ++t) pw /= 2;
        coeff += pw;
      }
      if (k == 0) coeff -= Rational(3, 2);
      if (k == 1) coeff -= Rational(3, 4);
      if (k == 2 * n - 2) coeff += Rational(1, 2);
      s += coeff * A;
      rep.explicit_solution = rep.explicit_solution && T(k) == s;
    }
  }

  // D_{n,k} = sum_{i+j=k+2} B_{n,i,j}
  {
    std::map<std::pair<int, int>, long long> B;
    for (const auto& a : enumerate_asm(n, cap)) {
      int top = 0, left = 0;
      for (int j = 1; j <= n; ++j)
        if (a.at(1, j) == 1) top = j;
      for (int i = 1; i <= n; ++i)
        if (a.at(i, 1) == 1) left = i;
      ++B[{left, top}];
    }
    rep.d_from_b = true;
    for (long k = 0; k <= 2 * n - 2; ++k) {
      long long s = 0;
      for (const auto& [ij, c] : B)
        if (ij.first + ij.second == k + 2) s += c;
      rep.d_from_b = rep.d_from_b && D(k) == Rational(static_cast<long>(s));
    }
  }
  return rep;
}

RhoReport rho_check(int n, int cap) {
  RhoReport rep;
  rep.n = n;
  std::map<long, unsigned long long> rho_dist;
  std::map<std::vector<long>, unsigned long long> ast_triple;
  for (const auto& t : enumerate_sign_triangles(Family::Ast, n, cap)) {
    ++rho_dist[statistic(Stat::Rho, t)];
    ++ast_triple[{statistic(Stat::MuNabla, t), statistic(Stat::InvNabla, t),
                  statistic(Stat::Rho, t)}];
  }
  std::map<long, unsigned long long> refined;
  std::map<std::vector<long>, unsigned long long> asm_triple;
  for (const auto& a : enumerate_asm(n, cap)) {
    long r = 0;
    for (int j = 1; j <= n; ++j)
      if (a.at(1, j) == 1) r = j;
    ++refined[r];
    ++asm_triple[{statistic(Stat::Mu, a), statistic(Stat::Inv, a), r}];
  }
  rep.distribution_matches = rho_dist == refined;
  rep.triple_joint_equal = ast_triple == asm_triple;
  return rep;
}

}  // namespace astlab
