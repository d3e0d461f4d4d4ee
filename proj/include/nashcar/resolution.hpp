#pragma once

// Gorenstein resolution of a cA/r germ X = (xy - f(z,u) = 0) in A^4/(1/r)(a,-a,1,0):
// a chain of w-morphisms followed by economic resolutions of the cyclic
// quotient points it leaves. All divisors are reported in the original
// (x, y, z, u) coordinates. This is the enumeration oracle that the closed
// forms of the catalog are checked against.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nashcar/rational.hpp"
#include "nashcar/series.hpp"
#include "nashcar/toric.hpp"

namespace nashcar {

struct CArGerm {
  std::int64_t r = 1;
  std::int64_t a = 0;
  InvariantSeries f;
  std::int64_t m1 = 0;
  bool smooth = false;  // r = 1 and m_1 = 1
};

/// Validates isolatedness surrogates and normalization; throws Error(validation)
/// or Error(truncation) with the reason.
CArGerm validate_germ(std::int64_t r, std::int64_t a, const InvariantSeries& f);

/// Ambient space 1/r(a, -a, 1, 0) of the germ.
QuotientSpace ambient_space(const CArGerm& g);

enum class DivisorSource { w_morphism, cyclic_point, ordinary_blowup };

struct ResolvedDivisor {
  ExpVec values;        // on (x, y, z, u), or on the point's coordinates for economic_resolution
  Rat discrepancy;
  DivisorSource source = DivisorSource::w_morphism;
  std::int64_t step = 0;  // 1-based blow-up step it was found at (0 for a bare quotient point)
  std::string point;      // "", "U_x" or "U_y"
};

/// Terminal cyclic quotient 1/r(a, -a, 1) up to units and order: finds the
/// blow-up weight ol{s*w} whose entries are 1 at one coordinate and sum to r
/// on the other two. Empty if the space is not of that form.
std::optional<std::vector<std::int64_t>> terminal_weight(const QuotientSpace& q);

/// Recursive economic resolution of a 3-dimensional terminal quotient point.
std::vector<ResolvedDivisor> economic_resolution(const QuotientSpace& q);

struct QuotientPoint {
  std::int64_t step = 0;
  std::string chart;  // "U_x" or "U_y"
  QuotientSpace space;
};

struct WMorphismStep {
  std::int64_t step = 0;
  BlowupWeight weight;
  ChartData ux, uy, uu;
  InvariantSeries germ_after;  // series at the origin of U_u
  bool terminal = false;       // m_1 of germ_after is 0
};

/// One w-morphism of weight (1/r)(a, rm - a, 1, r), r > 1.
WMorphismStep w_morphism_step(const CArGerm& g, std::int64_t step = 1);

struct ResolutionTree {
  std::vector<WMorphismStep> steps;
  std::vector<QuotientPoint> quotient_points;
  std::vector<ResolvedDivisor> divisors;
  std::vector<std::string> notes;
};

ResolutionTree gorenstein_resolution(const CArGerm& g);

}  // namespace nashcar
