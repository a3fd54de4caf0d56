#include "astlab/vertex_model.hpp"

#include <map>
#include <mutex>

#include "astlab/laurent.hpp"

namespace astlab {

const char* spec_name(SpecKind k) {
  switch (k) {
    case SpecKind::Ast: return "ast";
    case SpecKind::Qast: return "qast";
    case SpecKind::Oosasm: return "oosasm";
    case SpecKind::Dasasm: return "dasasm";
  }
  return "?";
}

BoundaryConstants boundary_spec(SpecKind kind, const ExactScalar& q, const ExactScalar& p) {
  if (sigma(q * q).is_zero() || sigma(q.pow(4)).is_zero()) throw DegenerateQ();
  BoundaryConstants k;
  ExactScalar one(1), zero(0);
  switch (kind) {
    case SpecKind::Ast:
      k = {zero, -(p * q).inverse(), p * q, one, zero, -p / q, q / p, one};
      break;
    case SpecKind::Qast:
      k = {zero, p * q, -(p * q).inverse(), one, zero, q / p, -p / q, one};
      break;
    case SpecKind::Oosasm:
      k = {one, zero, zero, one, one, zero, zero, one};
      break;
    case SpecKind::Dasasm: {
      ExactScalar s = sigma(q);
      k = {one, s, s, one, one, s, s, one};
      break;
    }
  }
  return k;
}

ExactScalar spec_normalization(SpecKind kind, const ExactScalar& q,
                               const std::vector<ExactScalar>& us) {
  ExactScalar norm(1);
  if (kind == SpecKind::Oosasm) {
    ExactScalar d = sigma(q * q) * sigma(q * q);
    for (const auto& u : us) norm *= sigma(q * q * u * u) * sigma(q * q / (u * u)) / d;
  } else if (kind == SpecKind::Dasasm) {
    ExactScalar d = sigma(q * q) * sigma(q * q);
    ExactScalar s2 = sigma(q) * sigma(q);
    for (const auto& u : us)
      norm *= s2 * (q * u + (q * u).inverse()) * (q / u + u / q) / d;
  }
  return norm;
}

ExactScalar bulk_turn_weight(const ExactScalar& label, bool principal, const ExactScalar& q) {
  ExactScalar arg = principal ? q * q * label : q * q / label;
  return sigma(arg) / sigma(q.pow(4));
}

ExactScalar left_weight(BoundaryClass c, const ExactScalar& u, const BoundaryConstants& k,
                        const ExactScalar& q) {
  ExactScalar s2 = sigma(q * q);
  switch (c) {
    case BoundaryClass::One: return (k.beta_l * q * u + k.gamma_l / (q * u)) / s2;
    case BoundaryClass::MinusOne: return (k.gamma_l * q * u + k.beta_l / (q * u)) / s2;
    case BoundaryClass::ZeroIn: return k.alpha_l * sigma(q * q * u * u) / s2;
    case BoundaryClass::ZeroOut: return k.delta_l * sigma(q * q * u * u) / s2;
  }
  return ExactScalar(0);
}

ExactScalar right_weight(BoundaryClass c, const ExactScalar& u, const BoundaryConstants& k,
                         const ExactScalar& q) {
  ExactScalar s2 = sigma(q * q);
  switch (c) {
    case BoundaryClass::One: return (k.beta_r * q / u + k.gamma_r * u / q) / s2;
    case BoundaryClass::MinusOne: return (k.gamma_r * q / u + k.beta_r * u / q) / s2;
    case BoundaryClass::ZeroIn: return k.alpha_r * sigma(q * q / (u * u)) / s2;
    case BoundaryClass::ZeroOut: return k.delta_r * sigma(q * q / (u * u)) / s2;
  }
  return ExactScalar(0);
}

namespace {

BoundaryClass boundary_class(const DasasmTriangle& t, int i, int j) {
  int v = t.at(i, j);
  if (v == 1) return BoundaryClass::One;
  if (v == -1) return BoundaryClass::MinusOne;
  return t.column_sum_above(i, j) == 1 ? BoundaryClass::ZeroIn : BoundaryClass::ZeroOut;
}

}  // namespace

ExactScalar triangle_weight(const DasasmTriangle& t, const SpectralPoint& pt,
                            const BoundaryConstants& k) {
  const int n = t.order();
  if (static_cast<int>(pt.u.size()) < n + 1)
    throw ShapeMismatch("spectral point needs n+1 parameters");
  if (sigma(pt.q * pt.q).is_zero() || sigma(pt.q.pow(4)).is_zero()) throw DegenerateQ();
  ExactScalar w(1);
  for (int i = 1; i <= n; ++i) {
    const ExactScalar& ui = pt.u[static_cast<size_t>(i - 1)];
    w *= left_weight(boundary_class(t, i, i), ui, k, pt.q);
    if (w.is_zero()) return w;
    w *= right_weight(boundary_class(t, i, 2 * n + 2 - i), ui, k, pt.q);
    if (w.is_zero()) return w;
    int left = t.column_sum_above(i, i);
    for (int j = i; j <= 2 * n + 1 - i; ++j) {
      left += t.at(i, j);
      if (j == i || t.at(i, j) != 0) continue;
      int above = t.column_sum_above(i, j);
      int m = std::min(j, 2 * n + 2 - j);
      ExactScalar label = ui * pt.u[static_cast<size_t>(m - 1)];
      w *= bulk_turn_weight(label, above == left, pt.q);
      if (w.is_zero()) return w;
    }
  }
  return w;
}

ExactScalar config_weight(const TriConfig& c, const SpectralPoint& pt,
                          const BoundaryConstants& k) {
  return triangle_weight(to_triangle(c), pt, k);
}

const std::vector<DasasmTriangle>& cached_triangles(int n, int cap) {
  static std::map<int, std::vector<DasasmTriangle>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_dasasm_triangles(n, cap)).first;
  return it->second;
}

ExactScalar partition_function(int n, const SpectralPoint& pt, const BoundaryConstants& k,
                               Sector sector, int cap) {
  if (n > cap)
    throw CapExceeded("partition function order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  ExactScalar total(0);
  for (const auto& t : cached_triangles(n, cap)) {
    if (sector == Sector::Up && t.center() != 1) continue;
    if (sector == Sector::Down && t.center() != -1) continue;
    total += triangle_weight(t, pt, k);
  }
  return total;
}

ExactScalar spec_partition_function(SpecKind kind, int n, const SpectralPoint& pt, Sector sector,
                                    int cap) {
  BoundaryConstants k = boundary_spec(kind, pt.q, pt.p);
  ExactScalar raw = partition_function(n, pt, k, sector, cap);
  std::vector<ExactScalar> us(pt.u.begin(), pt.u.begin() + n);
  ExactScalar norm = spec_normalization(kind, pt.q, us);
  if (norm.is_zero()) throw PoleHit("normalization divisor vanishes");
  return raw / norm;
}

// ------------------------------------------------------------------ sampling

Rational Sampler::rational() {
  std::uniform_int_distribution<int> d(-40, 40);
  auto pick = [&] {
    int v = 0;
    while (v == 0) v = d(rng_);
    return v;
  };
  int num = pick();
  int den = std::abs(pick());
  return ExactScalar::reduced(Rational(num, den));
}

ExactScalar Sampler::unit_free() {
  while (true) {
    Rational r = rational();
    if (r != 1 && r != -1) return ExactScalar(r);
  }
}

BoundaryConstants Sampler::constants() {
  return {scalar(), scalar(), scalar(), scalar(), scalar(), scalar(), scalar(), scalar()};
}

// ---------------------------------------------------------- local equations
//
// Diagrams are evaluated as generating functions of edge orientations: every
// connection state is "in at the vertex"; a crossing joins two transparent
// strands, a boundary vertex has a vertical and a horizontal slot.

namespace {

// Crossing weight. Connection states are in-flags for the two passes of
// line 1 and line 2; chirality selects which agreement class takes the
// principal weight sigma(q^2 L).
ExactScalar cross_w(bool l1a, bool l1b, bool l2a, bool l2b, int chirality, const ExactScalar& L,
                    const ExactScalar& q) {
  bool p1 = l1a != l1b, p2 = l2a != l2b;
  if (p1 && p2) return bulk_turn_weight(L, (l1a == l2a) != (chirality != 0), q);
  if ((l1a && l1b && !l2a && !l2b) || (l2a && l2b && !l1a && !l1b)) return ExactScalar(1);
  return ExactScalar(0);
}

BoundaryClass class_of(bool v_in, bool h_in) {
  if (!v_in && h_in) return BoundaryClass::One;
  if (v_in && !h_in) return BoundaryClass::MinusOne;
  if (v_in && h_in) return BoundaryClass::ZeroIn;
  return BoundaryClass::ZeroOut;
}

ExactScalar k_w(bool left_side, bool v_in, bool h_in, const ExactScalar& u,
                const BoundaryConstants& k, const ExactScalar& q) {
  return left_side ? left_weight(class_of(v_in, h_in), u, k, q)
                   : right_weight(class_of(v_in, h_in), u, k, q);
}

// Reflection equation. Wiring (in-flag bookkeeping; internal edges carry an
// orientation bit meaning "in at the first endpoint"):
//   lhs  line 1: e1 - Y - K1 - X - e2,  line 2: e3 - K2 - Y - X - e4
//   rhs  line 1: e1 - X - K1 - Y - e2,  line 2: e3 - X - Y - K2 - e4
// Crossing chiralities are 0 for X and 1 for Y on both sides.
std::pair<ExactScalar, ExactScalar> re_sides(bool left_side, const bool es[4],
                                             const ExactScalar& x, const ExactScalar& y,
                                             const ExactScalar& ku, const ExactScalar& kv,
                                             const BoundaryConstants& k, const ExactScalar& q) {
  ExactScalar lhs(0), rhs(0);
  for (int m = 0; m < 16; ++m) {
    bool i0 = m & 1, i1 = m & 2, i2 = m & 4, i3 = m & 8;
    {
      ExactScalar w = cross_w(es[0], i0, !i2, i3, 1, y, q);
      if (!w.is_zero()) {
        w *= k_w(left_side, !i0, i1, ku, k, q);
        if (!w.is_zero()) {
          w *= cross_w(!i1, es[1], !i3, es[3], 0, x, q);
          if (!w.is_zero()) {
            w *= k_w(left_side, es[2], i2, kv, k, q);
            lhs += w;
          }
        }
      }
    }
    {
      ExactScalar w = cross_w(es[0], i0, es[2], i2, 0, x, q);
      if (!w.is_zero()) {
        w *= k_w(left_side, !i0, i1, ku, k, q);
        if (!w.is_zero()) {
          w *= cross_w(!i1, es[1], !i2, i3, 1, y, q);
          if (!w.is_zero()) {
            w *= k_w(left_side, !i3, es[3], kv, k, q);
            rhs += w;
          }
        }
      }
    }
  }
  return {lhs, rhs};
}

// Yang-Baxter equation. Wiring:
//   lhs  line 1: e1 - X - Y - e2, line 2: e3 - X - Z - e4, line 3: e5 - Y - Z - e6
//   rhs  line 1: e1 - Y - X - e2, line 2: e3 - Z - X - e4, line 3: e5 - Z - Y - e6
// Chiralities (X,Y,Z) = (0,1,0) on both sides; labels satisfy x y z = q^2.
std::pair<ExactScalar, ExactScalar> ybe_sides(const bool es[6], const ExactScalar& x,
                                              const ExactScalar& y, const ExactScalar& z,
                                              const ExactScalar& q) {
  ExactScalar lhs(0), rhs(0);
  for (int m = 0; m < 8; ++m) {
    bool i0 = m & 1, i1 = m & 2, i2 = m & 4;
    {
      ExactScalar w = cross_w(es[0], i0, es[2], i1, 0, x, q);
      if (!w.is_zero()) {
        w *= cross_w(!i0, es[1], es[4], i2, 1, y, q);
        if (!w.is_zero()) {
          w *= cross_w(!i1, es[3], !i2, es[5], 0, z, q);
          lhs += w;
        }
      }
    }
    {
      ExactScalar w = cross_w(i0, es[1], i1, es[3], 0, x, q);
      if (!w.is_zero()) {
        w *= cross_w(es[0], !i0, !i2, es[5], 1, y, q);
        if (!w.is_zero()) {
          w *= cross_w(es[2], !i1, es[4], i2, 0, z, q);
          rhs += w;
        }
      }
    }
  }
  return {lhs, rhs};
}

BoundaryConstants sampled_constants(Sampler& s, std::optional<SpecKind> kind,
                                    const ExactScalar& q) {
  if (!kind) return s.constants();
  ExactScalar p = s.unit_free();
  return boundary_spec(*kind, q, p);
}

}  // namespace

CheckReport verify_local_equation(LocalEq eq, unsigned seed, int points,
                                  std::optional<SpecKind> constants) {
  CheckReport rep;
  rep.seed = seed;
  rep.points = points;
  rep.pass = true;
  Sampler s(seed);
  switch (eq) {
    case LocalEq::Ybe: {
      rep.check = "ybe";
      for (int pt = 0; pt < points; ++pt) {
        ExactScalar q = s.unit_free(), x = s.unit_free(), y = s.unit_free();
        ExactScalar z = q * q / (x * y);
        for (int es_mask = 0; es_mask < 64; ++es_mask) {
          bool es[6];
          for (int b = 0; b < 6; ++b) es[b] = es_mask & (1 << b);
          auto [l, r] = ybe_sides(es, x, y, z, q);
          if (l != r) {
            rep.pass = false;
            rep.details = "case " + std::to_string(es_mask) + " differs";
          }
        }
      }
      break;
    }
    case LocalEq::ReflLeft:
    case LocalEq::ReflRight: {
      bool left = eq == LocalEq::ReflLeft;
      rep.check = left ? "refl-left" : "refl-right";
      for (int pt = 0; pt < points; ++pt) {
        ExactScalar q = s.unit_free(), u = s.unit_free(), v = s.unit_free();
        BoundaryConstants k = sampled_constants(s, constants, q);
        ExactScalar x = q * q * v / u;
        ExactScalar y = left ? u * v : (u * v).inverse();
        ExactScalar k1 = left ? u : v;
        ExactScalar k2 = left ? v : u;
        for (int es_mask = 0; es_mask < 16; ++es_mask) {
          bool es[4];
          for (int b = 0; b < 4; ++b) es[b] = es_mask & (1 << b);
          auto [l, r] = re_sides(left, es, x, y, k1, k2, k, q);
          if (l != r) {
            rep.pass = false;
            rep.details = "case " + std::to_string(es_mask) + " differs";
          }
        }
      }
      break;
    }
    case LocalEq::TrivialCross: {
      rep.check = "trivial-cross";
      for (int pt = 0; pt < points; ++pt) {
        ExactScalar q = s.unit_free();
        for (int m = 0; m < 16; ++m) {
          bool l1a = m & 1, l1b = m & 2, l2a = m & 4, l2b = m & 8;
          ExactScalar w = cross_w(l1a, l1b, l2a, l2b, 0, q * q, q);
          ExactScalar expected((l1a == !l2b && l1b == !l2a) ? 1 : 0);
          if (w != expected) {
            rep.pass = false;
            rep.details = "state " + std::to_string(m) + " differs";
          }
        }
      }
      break;
    }
    case LocalEq::Rue: {
      rep.check = "rue";
      for (int pt = 0; pt < points; ++pt) {
        ExactScalar q = s.unit_free(), u = s.unit_free();
        BoundaryConstants k = sampled_constants(s, constants, q);
        ExactScalar qu = q * u, qub = q / u;
        ExactScalar factor = right_weight(BoundaryClass::One, qu, k, q) *
                                 right_weight(BoundaryClass::One, qub, k, q) +
                             right_weight(BoundaryClass::ZeroIn, qu, k, q) *
                                 right_weight(BoundaryClass::ZeroOut, qub, k, q);
        for (int m = 0; m < 4; ++m) {
          bool o1 = m & 1, o2 = m & 2;
          ExactScalar sum(0);
          for (bool internal : {false, true})
            sum += k_w(false, internal, o1, qu, k, q) * k_w(false, o2, !internal, qub, k, q);
          ExactScalar expected = (o1 == !o2) ? factor : ExactScalar(0);
          if (sum != expected) {
            rep.pass = false;
            rep.details = "case " + std::to_string(m) + " differs";
          }
        }
      }
      break;
    }
  }
  return rep;
}

// --------------------------------------------------------- global properties

namespace {

SpectralPoint sample_point(Sampler& s, int n) {
  SpectralPoint pt;
  pt.q = s.unit_free();
  pt.p = s.unit_free();
  for (int i = 0; i < n + 1; ++i) pt.u.push_back(s.unit_free());
  return pt;
}

ExactScalar w_ne(const ExactScalar& label, const ExactScalar& q) {
  return sigma(q * q * label) / sigma(q.pow(4));
}

// Omega_n of the u_{n+1} = q^2 / u_1 evaluations.
ExactScalar omega(const SpectralPoint& pt, const BoundaryConstants& k, int n) {
  ExactScalar w = left_weight(BoundaryClass::ZeroOut, pt.u[0], k, pt.q);
  for (int i = 2; i <= n; ++i) {
    const ExactScalar& ui = pt.u[static_cast<size_t>(i - 1)];
    w *= w_ne(pt.u[0] * ui, pt.q) * w_ne(pt.q * pt.q / pt.u[0] * ui, pt.q);
  }
  return w;
}

SpectralPoint shifted(const SpectralPoint& pt, int n) {
  // (u_2, ..., u_n ; u_1) with the same q, p
  SpectralPoint sub;
  sub.q = pt.q;
  sub.p = pt.p;
  for (int i = 2; i <= n; ++i) sub.u.push_back(pt.u[static_cast<size_t>(i - 1)]);
  sub.u.push_back(pt.u[0]);
  return sub;
}

}  // namespace

CheckReport verify_global_property(GlobalProp prop, int n, unsigned seed, int points, int cap) {
  CheckReport rep;
  rep.n = n;
  rep.seed = seed;
  rep.points = points;
  rep.pass = true;
  Sampler s(seed);
  const ExactScalar half = ExactScalar::ratio(1, 2);
  for (int ptidx = 0; ptidx < points; ++ptidx) {
    SpectralPoint pt = sample_point(s, n);
    BoundaryConstants k = s.constants();
    auto Z = [&](const SpectralPoint& at, Sector sec) {
      return partition_function(static_cast<int>(at.u.size()) - 1, at, k, sec, cap);
    };
    switch (prop) {
      case GlobalProp::Symmetry: {
        rep.check = "symmetry";
        ExactScalar base = Z(pt, Sector::All), base_up = Z(pt, Sector::Up);
        for (int i = 0; i + 1 < n; ++i) {
          SpectralPoint sw = pt;
          std::swap(sw.u[static_cast<size_t>(i)], sw.u[static_cast<size_t>(i) + 1]);
          if (Z(sw, Sector::All) != base || Z(sw, Sector::Up) != base_up) rep.pass = false;
        }
        break;
      }
      case GlobalProp::Inversion: {
        rep.check = "inversion";
        SpectralPoint inv = pt;
        for (auto& u : inv.u) u = u.inverse();
        BoundaryConstants swapped{k.alpha_r, k.beta_r, k.gamma_r, k.delta_r,
                                  k.alpha_l, k.beta_l, k.gamma_l, k.delta_l};
        for (Sector sec : {Sector::All, Sector::Up}) {
          if (partition_function(n, inv, swapped, sec, cap) != Z(pt, sec)) rep.pass = false;
        }
        break;
      }
      case GlobalProp::Evenness: {
        rep.check = "evenness";
        ExactScalar base = Z(pt, Sector::All), base_up = Z(pt, Sector::Up);
        for (int i = 0; i < n; ++i) {
          SpectralPoint neg = pt;
          neg.u[static_cast<size_t>(i)] = -neg.u[static_cast<size_t>(i)];
          if (Z(neg, Sector::All) != base || Z(neg, Sector::Up) != base_up) rep.pass = false;
        }
        break;
      }
      case GlobalProp::DegreeOrder: {
        rep.check = "degree-order";
        // reconstruct in u_{n+1} over a window wider than the claimed support
        long pad = 2;
        long win = n + pad;
        std::vector<ExactScalar> nodes, values;
        std::vector<Rational> used;
        while (static_cast<long>(nodes.size()) < 2 * win + 1) {
          Rational r = s.rational();
          if (r == 0 || std::find(used.begin(), used.end(), r) != used.end() ||
              std::find(used.begin(), used.end(), -r) != used.end())
            continue;
          used.push_back(r);
          SpectralPoint at = pt;
          at.u[static_cast<size_t>(n)] = ExactScalar(r);
          nodes.emplace_back(r);
          values.push_back(Z(at, Sector::All));
        }
        LaurentPoly rec = laurent_from_samples(nodes, values, -win, win);
        if (!rec.is_zero() && (rec.degree() > n || rec.order() < -n)) rep.pass = false;
        // reconstruct in u_1 over a window wider than 2n+2, check evenness too
        win = 2 * n + 2 + pad;
        nodes.clear();
        values.clear();
        used.clear();
        while (static_cast<long>(nodes.size()) < 2 * win + 1) {
          Rational r = s.rational();
          if (r == 0 || std::find(used.begin(), used.end(), r) != used.end() ||
              std::find(used.begin(), used.end(), -r) != used.end())
            continue;
          used.push_back(r);
          SpectralPoint at = pt;
          at.u[0] = ExactScalar(r);
          nodes.emplace_back(r);
          values.push_back(Z(at, Sector::All));
        }
        rec = laurent_from_samples(nodes, values, -win, win);
        if (!rec.is_zero()) {
          if (rec.degree() > 2 * n + 2 || rec.order() < -(2 * n + 2)) rep.pass = false;
          for (long e = rec.order(); e <= rec.degree(); ++e)
            if ((e % 2 + 2) % 2 == 1 && !rec.coeff(e).is_zero()) rep.pass = false;
        }
        break;
      }
      case GlobalProp::Updown: {
        rep.check = "updown";
        SpectralPoint neg = pt;
        neg.u[static_cast<size_t>(n)] = -neg.u[static_cast<size_t>(n)];
        ExactScalar z = Z(pt, Sector::All), zneg = Z(neg, Sector::All);
        ExactScalar signed_zneg = (n % 2 == 0) ? zneg : -zneg;
        if (Z(pt, Sector::Up) != half * (z + signed_zneg)) rep.pass = false;
        if (Z(pt, Sector::Down) != half * (z - signed_zneg)) rep.pass = false;
        break;
      }
      case GlobalProp::EvalFull:
      case GlobalProp::EvalUp:
      case GlobalProp::EvalDown: {
        rep.check = prop == GlobalProp::EvalFull ? "eval-full"
                   : prop == GlobalProp::EvalUp  ? "eval-up"
                                                 : "eval-down";
        SpectralPoint at = pt;
        at.u[static_cast<size_t>(n)] = pt.q * pt.q / pt.u[0];
        SpectralPoint sub = shifted(pt, n);
        SpectralPoint sub_neg = sub;
        sub_neg.u[static_cast<size_t>(n - 1)] = -sub_neg.u[static_cast<size_t>(n - 1)];
        ExactScalar om = omega(pt, k, n);
        auto rw = [&](BoundaryClass c) { return right_weight(c, pt.u[0], k, pt.q); };
        if (prop == GlobalProp::EvalFull) {
          ExactScalar t1 = (rw(BoundaryClass::One) + rw(BoundaryClass::ZeroOut) +
                            rw(BoundaryClass::ZeroIn) + rw(BoundaryClass::MinusOne)) *
                           Z(sub, Sector::All);
          ExactScalar t2 = (rw(BoundaryClass::One) + rw(BoundaryClass::ZeroOut) -
                            rw(BoundaryClass::ZeroIn) - rw(BoundaryClass::MinusOne)) *
                           Z(sub_neg, Sector::All);
          if (n % 2 == 0) t2 = -t2;  // (-1)^{n+1}
          if (Z(at, Sector::All) != half * (t1 + t2) * om) rep.pass = false;
        } else if (prop == GlobalProp::EvalUp) {
          ExactScalar rhs = (rw(BoundaryClass::One) * Z(sub, Sector::Up) +
                             rw(BoundaryClass::ZeroIn) * Z(sub, Sector::Down)) *
                            om;
          if (Z(at, Sector::Up) != rhs) rep.pass = false;
        } else {
          ExactScalar rhs = (rw(BoundaryClass::ZeroOut) * Z(sub, Sector::Up) +
                             rw(BoundaryClass::MinusOne) * Z(sub, Sector::Down)) *
                            om;
          if (Z(at, Sector::Down) != rhs) rep.pass = false;
        }
        break;
      }
      case GlobalProp::EvalU1Q: {
        rep.check = "eval-u1-q";
        for (ExactScalar u1 : {pt.q, ExactScalar::imag_unit() * pt.q}) {
          SpectralPoint at = pt;
          at.u[0] = u1;
          SpectralPoint sub;
          sub.q = pt.q;
          sub.p = pt.p;
          for (int i = 2; i <= n + 1; ++i) sub.u.push_back(pt.u[static_cast<size_t>(i - 1)]);
          ExactScalar factor = left_weight(BoundaryClass::ZeroOut, u1, k, pt.q) *
                               right_weight(BoundaryClass::One, u1, k, pt.q) *
                               w_ne(u1 * pt.u[static_cast<size_t>(n)], pt.q);
          for (int j = 2; j <= n; ++j) {
            ExactScalar f = w_ne(u1 * pt.u[static_cast<size_t>(j - 1)], pt.q);
            factor *= f * f;
          }
          if (Z(at, Sector::All) != factor * Z(sub, Sector::All)) rep.pass = false;
          if (Z(at, Sector::Up) != factor * Z(sub, Sector::Up)) rep.pass = false;
        }
        break;
      }
      case GlobalProp::EvalU1U2: {
        rep.check = "eval-u1-u2";
        if (n < 2) throw ShapeMismatch("eval-u1-u2 needs n > 1");
        SpectralPoint at = pt;
        at.u[0] = pt.q * pt.q / pt.u[1];
        const ExactScalar u1 = at.u[0], u2 = pt.u[1];
        SpectralPoint sub;
        sub.q = pt.q;
        sub.p = pt.p;
        for (int i = 3; i <= n + 1; ++i) sub.u.push_back(pt.u[static_cast<size_t>(i - 1)]);
        ExactScalar factor = (right_weight(BoundaryClass::ZeroOut, u1, k, pt.q) *
                                  right_weight(BoundaryClass::ZeroIn, u2, k, pt.q) +
                              right_weight(BoundaryClass::One, u1, k, pt.q) *
                                  right_weight(BoundaryClass::One, u2, k, pt.q)) *
                             left_weight(BoundaryClass::ZeroOut, u1, k, pt.q) *
                             left_weight(BoundaryClass::ZeroOut, u2, k, pt.q) *
                             w_ne(u1 * pt.u[static_cast<size_t>(n)], pt.q) *
                             w_ne(u2 * pt.u[static_cast<size_t>(n)], pt.q);
        for (int j = 3; j <= n; ++j) {
          ExactScalar f1 = w_ne(u1 * pt.u[static_cast<size_t>(j - 1)], pt.q);
          ExactScalar f2 = w_ne(u2 * pt.u[static_cast<size_t>(j - 1)], pt.q);
          factor *= f1 * f1 * f2 * f2;
        }
        if (Z(at, Sector::All) != factor * Z(sub, Sector::All)) rep.pass = false;
        if (Z(at, Sector::Up) != factor * Z(sub, Sector::Up)) rep.pass = false;
        break;
      }
      case GlobalProp::ZeroAtPq2: {
        rep.check = "zero-at-pq2";
        SpectralPoint at = pt;
        at.u[0] = pt.q * pt.q / pt.p;
        at.u[static_cast<size_t>(n)] = pt.p;
        BoundaryConstants ast = boundary_spec(SpecKind::Ast, pt.q, pt.p);
        BoundaryConstants qast = boundary_spec(SpecKind::Qast, pt.q, pt.p);
        if (!partition_function(n, at, ast, Sector::All, cap).is_zero()) rep.pass = false;
        if (!partition_function(n, at, qast, Sector::Up, cap).is_zero()) rep.pass = false;
        break;
      }
      case GlobalProp::Complicated: {
        rep.check = "eval-complicated";
        SpectralPoint at = pt;
        at.u[static_cast<size_t>(n)] = pt.q * pt.q / pt.u[0];
        SpectralPoint sub = shifted(pt, n);
        auto rw = [&](BoundaryClass c) { return right_weight(c, pt.u[0], k, pt.q); };
        ExactScalar rhs = ((rw(BoundaryClass::One) + rw(BoundaryClass::ZeroOut)) *
                               Z(sub, Sector::Up) +
                           (rw(BoundaryClass::ZeroIn) + rw(BoundaryClass::MinusOne)) *
                               Z(sub, Sector::Down)) *
                          omega(pt, k, n);
        if (Z(at, Sector::All) != rhs) rep.pass = false;
        break;
      }
    }
    if (!rep.pass && rep.details.empty())
      rep.details = "failed at sample " + std::to_string(ptidx);
  }
  return rep;
}

}  // namespace astlab
