#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "astlab/exact.hpp"
#include "astlab/objects.hpp"

namespace astlab {

// The eight free boundary parameters of the left/right boundary weights.
struct BoundaryConstants {
  ExactScalar alpha_l, beta_l, gamma_l, delta_l;
  ExactScalar alpha_r, beta_r, gamma_r, delta_r;
};

enum class SpecKind { Ast, Qast, Oosasm, Dasasm };
const char* spec_name(SpecKind k);

// Boundary constants of the four standard specializations. OOSASM and
// DASASM ignore p. Throws DegenerateQ when sigma(q^2) sigma(q^4) = 0.
BoundaryConstants boundary_spec(SpecKind kind, const ExactScalar& q, const ExactScalar& p);

// Divisor pulled out of the OOSASM / DASASM specializations (1 otherwise).
ExactScalar spec_normalization(SpecKind kind, const ExactScalar& q,
                               const std::vector<ExactScalar>& us);

// Evaluation point: global q, the AST/QAST parameter p, and u_1..u_{n+1}.
struct SpectralPoint {
  ExactScalar q;
  ExactScalar p;
  std::vector<ExactScalar> u;
};

enum class BoundaryClass { One, MinusOne, ZeroIn, ZeroOut };

// Weight of a bulk turning vertex: sigma(q^2 label)/sigma(q^4) when the
// turn pairs with the label corner (principal), else sigma(q^2/label)/sigma(q^4).
ExactScalar bulk_turn_weight(const ExactScalar& label, bool principal, const ExactScalar& q);
ExactScalar left_weight(BoundaryClass c, const ExactScalar& u, const BoundaryConstants& k,
                        const ExactScalar& q);
ExactScalar right_weight(BoundaryClass c, const ExactScalar& u, const BoundaryConstants& k,
                         const ExactScalar& q);

ExactScalar triangle_weight(const DasasmTriangle& t, const SpectralPoint& pt,
                            const BoundaryConstants& k);
ExactScalar config_weight(const TriConfig& c, const SpectralPoint& pt,
                          const BoundaryConstants& k);

enum class Sector { All, Up, Down };

// Brute-force partition function: exact sum of triangle weights over all
// odd DASASM-triangles of order n, restricted by the bottom-edge sector.
ExactScalar partition_function(int n, const SpectralPoint& pt, const BoundaryConstants& k,
                               Sector sector = Sector::All, int cap = 5);
// Same with the constants of a standard specialization and its normalization.
ExactScalar spec_partition_function(SpecKind kind, int n, const SpectralPoint& pt,
                                    Sector sector = Sector::All, int cap = 5);

const std::vector<DasasmTriangle>& cached_triangles(int n, int cap = 5);

// ------------------------------------------------------------- verification

enum class LocalEq { Ybe, ReflLeft, ReflRight, TrivialCross, Rue };
enum class GlobalProp {
  Symmetry,
  Inversion,
  Evenness,
  DegreeOrder,
  Updown,
  EvalFull,
  EvalUp,
  EvalDown,
  EvalU1Q,
  EvalU1U2,
  ZeroAtPq2,
  Complicated,
};

struct CheckReport {
  std::string check;
  int n = 0;
  unsigned seed = 0;
  int points = 0;
  bool pass = false;
  int rejected = 0;
  std::string details;
};

// Checks every orientation case of a local equation at seeded random points.
// A SpecKind selects a standard boundary specialization; nullopt samples generic constants.
CheckReport verify_local_equation(LocalEq eq, unsigned seed, int points,
                                  std::optional<SpecKind> constants = std::nullopt);

CheckReport verify_global_property(GlobalProp prop, int n, unsigned seed, int points,
                                   int cap = 5);

// Seeded random rationals with numerator and denominator uniform in [-40,40]\{0}.
class Sampler {
 public:
  explicit Sampler(unsigned seed) : rng_(seed) {}
  Rational rational();
  ExactScalar scalar() { return ExactScalar(rational()); }
  // nonzero rational x with sigma(x) != 0 (i.e. x != +-1)
  ExactScalar unit_free();
  BoundaryConstants constants();
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace astlab
