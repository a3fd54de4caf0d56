#include "astlab/formulas.hpp"

#include <algorithm>

namespace astlab {

namespace {

void require(bool nonpole) {
  if (!nonpole) throw PoleHit();
}

ExactScalar sig_or_throw(const ExactScalar& x) {
  ExactScalar s = sigma(x);
  require(!s.is_zero());
  return s;
}

}  // namespace

ExactScalar ast_partition_formula(int n, const SpectralPoint& pt, AstVariant variant) {
  const ExactScalar &q = pt.q, &p = pt.p;
  const auto& u = pt.u;
  if (static_cast<int>(u.size()) < (variant == AstVariant::Full ? n + 1 : n))
    throw ShapeMismatch("not enough spectral parameters");
  ExactScalar q2 = q * q;
  ExactScalar s2 = sig_or_throw(q2), s4 = sig_or_throw(q2 * q2);
  if (n == 0) return ExactScalar(1);
  ExactScalar num(1), den(1);
  if (variant == AstVariant::Full) {
    for (int j = 0; j < n; ++j) num *= sigma(u[j] / p);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n + 1; ++j)
        num *= sig_or_throw(q2 * u[i] * u[j]) * sig_or_throw(q2 / (u[i] * u[j]));
    den = s2.pow(2 * n) * s4.pow(static_cast<long>(n) * (n - 1));
    for (int i = 0; i < n; ++i) den *= sig_or_throw(u[i] / u[n]);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        ExactScalar d = sig_or_throw(u[i] / u[j]);
        den *= d * d;
      }
    Matrix m(static_cast<size_t>(n + 1), std::vector<ExactScalar>(static_cast<size_t>(n + 1)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n + 1; ++j)
        m[i][j] = (sigma(q2 * u[i] * u[j]) * sigma(q2 / (u[i] * u[j]))).inverse();
    for (int j = 0; j < n + 1; ++j)
      m[n][j] = ExactScalar(1) - sigma(u[j] / u[n]) / sig_or_throw(u[j] / p);
    return num / den * determinant(std::move(m));
  }
  for (int i = 0; i < n; ++i) num *= sigma(q2 * p * u[i]) * sigma(q2 / (p * u[i]));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      num *= sig_or_throw(q2 * u[i] * u[j]) * sig_or_throw(q2 / (u[i] * u[j]));
  den = s2.pow(2 * n) * s4.pow(static_cast<long>(n) * (n - 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ExactScalar d = sig_or_throw(u[i] / u[j]);
      den *= d * d;
    }
  Matrix m(static_cast<size_t>(n), std::vector<ExactScalar>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i][j] = (sigma(q2 * u[i] * u[j]) * sigma(q2 / (u[i] * u[j]))).inverse();
  return num / den * determinant(std::move(m));
}

ExactScalar qast_partition_formula(int n, const SpectralPoint& pt, AstVariant variant) {
  const ExactScalar &q = pt.q, &p = pt.p;
  const auto& u = pt.u;
  if (static_cast<int>(u.size()) < (variant == AstVariant::Full ? n + 1 : n))
    throw ShapeMismatch("not enough spectral parameters");
  ExactScalar q2 = q * q;
  ExactScalar s2 = sig_or_throw(q2), s4 = sig_or_throw(q2 * q2);
  if (n == 0) return ExactScalar(1);
  ExactScalar num(1), den(1);
  if (variant == AstVariant::Full) {
    for (int j = 0; j < n; ++j) num *= sigma(u[j] / p);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n + 1; ++j)
        num *= sig_or_throw(q2 * u[i] * u[j]) * sig_or_throw(q2 / (u[i] * u[j]));
    den = s2.pow(2 * n) * s4.pow(static_cast<long>(n) * n);
    for (int i = 0; i < n; ++i) den *= sig_or_throw(u[i] / u[n]);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        ExactScalar d = sig_or_throw(u[i] / u[j]);
        den *= d * d;
      }
    Matrix m(static_cast<size_t>(n + 1), std::vector<ExactScalar>(static_cast<size_t>(n + 1)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n + 1; ++j)
        m[i][j] = sigma(q2 * u[i] * u[j]).inverse() + sigma(q2 / (u[i] * u[j])).inverse();
    for (int j = 0; j < n + 1; ++j) m[n][j] = sigma(u[n] / p) / sig_or_throw(u[j] / p);
    return num / den * determinant(std::move(m));
  }
  for (int i = 0; i < n; ++i) num *= sigma(q2 * p * u[i]) * sigma(q2 / (p * u[i]));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      num *= sig_or_throw(q2 * u[i] * u[j]) * sig_or_throw(q2 / (u[i] * u[j]));
  den = s2.pow(2 * n) * s4.pow(static_cast<long>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ExactScalar d = sig_or_throw(u[i] / u[j]);
      den *= d * d;
    }
  Matrix m(static_cast<size_t>(n), std::vector<ExactScalar>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i][j] = sigma(q2 * u[i] * u[j]).inverse() + sigma(q2 / (u[i] * u[j])).inverse();
  return num / den * determinant(std::move(m));
}

ExactScalar ik_partition_det(int n, const ExactScalar& q, const std::vector<ExactScalar>& us,
                             const std::vector<ExactScalar>& vs) {
  if (static_cast<int>(us.size()) < n || static_cast<int>(vs.size()) < n)
    throw ShapeMismatch("not enough spectral parameters");
  if (n == 0) return ExactScalar(1);
  ExactScalar q2 = q * q;
  ExactScalar s4 = sig_or_throw(q2 * q2);
  ExactScalar num(1), den = s4.pow(static_cast<long>(n) * (n - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      num *= sig_or_throw(q2 * us[i] / vs[j]) * sig_or_throw(q2 * vs[j] / us[i]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      den *= sig_or_throw(us[i] / us[j]) * sig_or_throw(vs[j] / vs[i]);
  Matrix m(static_cast<size_t>(n), std::vector<ExactScalar>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i][j] = (sigma(q2 * us[i] / vs[j]) * sigma(q2 * vs[j] / us[i])).inverse();
  return num / den * determinant(std::move(m));
}

ExactScalar ik_partition_brute(int n, const ExactScalar& q, const std::vector<ExactScalar>& us,
                               const std::vector<ExactScalar>& vs, int cap) {
  ExactScalar s4 = sig_or_throw(q * q * q * q);
  ExactScalar total(0);
  for (const auto& a : enumerate_asm(n, cap)) {
    ExactScalar w(1);
    for (int i = 1; i <= n; ++i) {
      int left = 0;
      for (int j = 1; j <= n; ++j) {
        left += a.at(i, j);
        if (a.at(i, j) != 0) continue;
        int above = 0;
        for (int k = 1; k < i; ++k) above += a.at(k, j);
        ExactScalar label = us[static_cast<size_t>(i - 1)] / vs[static_cast<size_t>(j - 1)];
        w *= bulk_turn_weight(label, above == left, q);
        if (w.is_zero()) break;
      }
      if (w.is_zero()) break;
    }
    total += w;
  }
  return total;
}

ExactScalar oosasm_p_factor(int m, const ExactScalar& q, const std::vector<ExactScalar>& us) {
  if (m == 0) return ExactScalar(1);
  if (static_cast<int>(us.size()) < 2 * m) throw ShapeMismatch("P_m needs 2m parameters");
  ExactScalar q2 = q * q;
  ExactScalar pre = sig_or_throw(q2 * q2).pow(-static_cast<long>(m - 1) * 2 * m);
  SkewTriangle t(2 * m);
  for (int i = 1; i <= 2 * m; ++i)
    for (int j = i + 1; j <= 2 * m; ++j) {
      const ExactScalar &ui = us[static_cast<size_t>(i - 1)], &uj = us[static_cast<size_t>(j - 1)];
      ExactScalar a = sig_or_throw(q2 * ui * uj), b = sig_or_throw(q2 / (ui * uj));
      ExactScalar d = sig_or_throw(ui / uj);
      pre *= a * b / d;
      t.set(i, j, d / (a * b));
    }
  return pre * pfaffian(t);
}

ExactScalar oosasm_q_factor(int m, const ExactScalar& q, const std::vector<ExactScalar>& us) {
  if (static_cast<int>(us.size()) < 2 * m - 1) throw ShapeMismatch("Q_m needs 2m-1 parameters");
  ExactScalar q2 = q * q;
  ExactScalar pre = sig_or_throw(q2 * q2).pow(-static_cast<long>(m - 1) * (2 * m - 1));
  SkewTriangle t(2 * m);
  for (int i = 1; i <= 2 * m - 1; ++i)
    for (int j = i + 1; j <= 2 * m - 1; ++j) {
      const ExactScalar &ui = us[static_cast<size_t>(i - 1)], &uj = us[static_cast<size_t>(j - 1)];
      ExactScalar a = sig_or_throw(q2 * ui * uj), b = sig_or_throw(q2 / (ui * uj));
      ExactScalar d = sig_or_throw(ui / uj);
      pre *= a * b / d;
      t.set(i, j, d / a + d / b);
    }
  for (int i = 1; i <= 2 * m - 1; ++i) t.set(i, 2 * m, ExactScalar(1));
  return pre * pfaffian(t);
}

ExactScalar oosasm_partition_formula(int n, const SpectralPoint& pt) {
  int mp = (n + 1) / 2;      // ceil(n/2)
  int mq = (n + 2) / 2;      // ceil((n+1)/2)
  std::vector<ExactScalar> up(pt.u.begin(), pt.u.begin() + 2 * mp);
  std::vector<ExactScalar> uq(pt.u.begin(), pt.u.begin() + (2 * mq - 1));
  return oosasm_p_factor(mp, pt.q, up) * oosasm_q_factor(mq, pt.q, uq);
}

namespace {

// W(x_1,...,x_n; a_1,...,a_n) = det(x_i^{j-1} + a_i x_i^{n-j})
ExactScalar okada_w(const std::vector<ExactScalar>& xs, const std::vector<ExactScalar>& as) {
  const size_t n = xs.size();
  Matrix m(n, std::vector<ExactScalar>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m[i][j] = xs[i].pow(static_cast<long>(j)) +
                as[i] * xs[i].pow(static_cast<long>(n - 1 - j));
  return determinant(std::move(m));
}

}  // namespace

bool okada_pfaffian_identity(int n, const std::vector<ExactScalar>& xs,
                             const std::vector<ExactScalar>& as) {
  if (static_cast<int>(xs.size()) < 2 * n - 1 || static_cast<int>(as.size()) < 2 * n - 1)
    throw ShapeMismatch("okada identity needs 2n-1 parameters");
  SkewTriangle t(2 * n);
  for (int i = 1; i <= 2 * n - 1; ++i) {
    for (int j = i + 1; j <= 2 * n - 1; ++j) {
      ExactScalar one_minus = ExactScalar(1) - xs[static_cast<size_t>(i - 1)] *
                                                   xs[static_cast<size_t>(j - 1)];
      require(!one_minus.is_zero());
      ExactScalar w =
          okada_w({xs[static_cast<size_t>(i - 1)], xs[static_cast<size_t>(j - 1)]},
                  {as[static_cast<size_t>(i - 1)], as[static_cast<size_t>(j - 1)]});
      t.set(i, j, w * (ExactScalar(1) + as[static_cast<size_t>(i - 1)] *
                                            as[static_cast<size_t>(j - 1)]) /
                      one_minus);
    }
    t.set(i, 2 * n,
          ExactScalar(1) - as[static_cast<size_t>(i - 1)] * as[static_cast<size_t>(i - 1)]);
  }
  std::vector<ExactScalar> x(xs.begin(), xs.begin() + (2 * n - 1));
  std::vector<ExactScalar> neg_a_sq;
  ExactScalar rhs_den(1);
  for (int i = 1; i <= 2 * n - 1; ++i) {
    neg_a_sq.push_back(-(as[static_cast<size_t>(i - 1)] * as[static_cast<size_t>(i - 1)]));
    for (int j = i + 1; j <= 2 * n - 1; ++j) {
      ExactScalar d = ExactScalar(1) - xs[static_cast<size_t>(i - 1)] *
                                           xs[static_cast<size_t>(j - 1)];
      require(!d.is_zero());
      rhs_den *= d;
    }
  }
  return pfaffian(t) == okada_w(x, neg_a_sq) / rhs_den;
}

bool pfaffian_sylvester_identity(const SkewTriangle& c) {
  const int order = c.order();
  if (order % 2 != 0 || order < 4) throw ShapeMismatch("identity needs even order >= 4");
  const int n2 = order;      // 2n
  const int inner = n2 - 2;  // 2n-2
  ExactScalar corner = c.at(n2 - 1, n2);
  SkewTriangle outer(inner);
  for (int i = 1; i <= inner; ++i)
    for (int j = i + 1; j <= inner; ++j) {
      // Pf of the order-4 skew array on indices {i, j, 2n-1, 2n}
      ExactScalar v = c.at(i, j) * corner - c.at(i, n2 - 1) * c.at(j, n2) +
                      c.at(i, n2) * c.at(j, n2 - 1);
      outer.set(i, j, v);
    }
  return corner.pow(n2 / 2 - 2) * pfaffian(c) == pfaffian(outer);
}

namespace {

// A sample point at which every displayed denominator of the closed formulas
// is nonzero: pairwise distinct |u_i|, u_i != +-p, u_i u_j != +-q^{+-2}.
bool admissible(const SpectralPoint& pt, int n) {
  const Rational& q = pt.q.rational();
  const Rational& p = pt.p.rational();
  if (q == 1 || q == -1 || p == 0) return false;
  Rational q2 = q * q;
  for (int i = 0; i <= n; ++i) {
    const Rational& ui = pt.u[static_cast<size_t>(i)].rational();
    if (ui == 0 || abs(ui) == 1 || abs(ui) == abs(p)) return false;
    for (int j = i; j <= n; ++j) {
      const Rational& uj = pt.u[static_cast<size_t>(j)].rational();
      if (i != j && abs(ui) == abs(uj)) return false;
      Rational prod = ui * uj * q2;
      if (prod == 1 || prod == -1) return false;
      Rational prod2 = ui * uj / q2;
      if (prod2 == 1 || prod2 == -1) return false;
    }
  }
  return true;
}

}  // namespace

FormulaReport formula_vs_bruteforce(const std::string& case_id, int n, unsigned seed, int points,
                                    int cap) {
  FormulaReport rep;
  rep.case_id = case_id;
  rep.n = n;
  rep.seed = seed;
  rep.points = points;
  if (n > cap) throw CapExceeded("formula comparison order exceeds cap");
  Sampler s(seed);
  const int retry_budget = 500;
  for (int k = 0; k < points; ++k) {
    SpectralPoint pt;
    int tries = 0;
    do {
      pt = SpectralPoint{};
      pt.q = s.scalar();
      pt.p = s.scalar();
      for (int i = 0; i <= n; ++i) pt.u.push_back(s.scalar());
      ++tries;
      if (tries > retry_budget) throw PoleHit("could not sample an admissible point");
    } while (!admissible(pt, n));
    rep.rejected += tries - 1;

    bool ok = true;
    if (case_id == "ast-full") {
      ok = ast_partition_formula(n, pt, AstVariant::Full) ==
           spec_partition_function(SpecKind::Ast, n, pt, Sector::All, cap);
    } else if (case_id == "ast-at-p") {
      SpectralPoint at = pt;
      at.u[static_cast<size_t>(n)] = pt.p;
      ok = ast_partition_formula(n, pt, AstVariant::AtP) ==
           spec_partition_function(SpecKind::Ast, n, at, Sector::All, cap);
    } else if (case_id == "ast-asm-relation") {
      SpectralPoint at = pt;
      at.u[static_cast<size_t>(n)] = pt.p;
      std::vector<ExactScalar> us(pt.u.begin(), pt.u.begin() + n), vs;
      for (const auto& u : us) vs.push_back(u.inverse());
      ExactScalar pref(1);
      ExactScalar s2 = sigma(pt.q * pt.q);
      for (const auto& u : us)
        pref *= sigma(pt.q * pt.q * pt.p * u) * sigma(pt.q * pt.q / (pt.p * u)) / (s2 * s2);
      ok = spec_partition_function(SpecKind::Ast, n, at, Sector::All, cap) ==
           pref * ik_partition_det(n, pt.q, us, vs);
      ok = ok && ik_partition_det(n, pt.q, us, vs) == ik_partition_brute(n, pt.q, us, vs);
    } else if (case_id == "qast-full") {
      ok = qast_partition_formula(n, pt, AstVariant::Full) ==
           spec_partition_function(SpecKind::Qast, n, pt, Sector::Up, cap);
    } else if (case_id == "qast-at-p") {
      SpectralPoint at = pt;
      at.u[static_cast<size_t>(n)] = pt.p;
      ok = qast_partition_formula(n, pt, AstVariant::AtP) ==
           spec_partition_function(SpecKind::Qast, n, at, Sector::Up, cap);
    } else if (case_id == "oosasm") {
      ok = oosasm_partition_formula(n, pt) ==
           spec_partition_function(SpecKind::Oosasm, n, pt, Sector::All, cap);
    } else {
      throw UnknownIdentifier("unknown formula case: " + case_id);
    }
    rep.per_point.push_back(ok);
    if (!ok && rep.pass) {
      rep.pass = false;
      rep.first_counterexample = "q=" + pt.q.str() + " p=" + pt.p.str();
    }
  }
  return rep;
}

}  // namespace astlab
