#pragma once

// Q-factoriality of a cA/r germ through the factorization of f in C[[z^r, u]]:
// Newton polygons in w = z^r, edge polynomials, and weighted Hensel lifting
// over Q.

#include <cstdint>
#include <string>
#include <vector>

#include "nashcar/resolution.hpp"
#include "nashcar/series.hpp"
#include "nashcar/valuation.hpp"

namespace nashcar {

struct NewtonSegment {
  Exponent left;   // smaller w-degree
  Exponent right;
  std::int64_t p = 1;  // slope p/q = (left.j - right.j) / (right.i - left.i), lowest terms
  std::int64_t q = 1;
  std::int64_t length = 0;          // w-length right.i - left.i
  std::int64_t lattice_length = 0;  // length / q

  friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

struct NewtonPolygon {
  std::vector<Exponent> vertices;  // by increasing w-degree
  std::vector<NewtonSegment> segments;
};

/// Lower convex hull of the term support (i, j) of f as a series in (w, u).
NewtonPolygon newton_polygon(const InvariantSeries& f);

/// Edge polynomial sum_t c_(left.i + t q, left.j - t p) S^t of a segment.
std::vector<Rat> edge_polynomial(const InvariantSeries& f, const NewtonSegment& s);

enum class Certainty { certified, count_only, unknown };

std::string to_string(Certainty c);

struct FactorizationResult {
  std::vector<InvariantSeries> factors;   // in the germ's variables (z^r, u)
  std::vector<std::int64_t> branches;     // complex branches carried by each factor
  std::int64_t n = 0;                     // total number of branches found
  Certainty certainty = Certainty::unknown;
  std::string picard;
  std::vector<std::string> notes;
};

FactorizationResult factor_series(const InvariantSeries& f);

/// Checks a user-supplied factor list: the product must equal f up to a
/// nonzero constant, and every factor must be irreducible.
FactorizationResult verify_factors(const InvariantSeries& f, const std::vector<InvariantSeries>& factors);

/// yes: f irreducible; no: at least two branches; unknown otherwise.
Tri is_q_factorial(const CArGerm& g);
Tri q_factorial_verdict(const FactorizationResult& fr);

struct QFactorialization {
  std::vector<CArGerm> components;
  std::vector<DivisorialValuation> curves;  // blowup-curve(i), i = 1..n-1
};

QFactorialization q_factorialization_components(const CArGerm& g, const FactorizationResult& fr);

std::string picard_description(std::int64_t r, std::int64_t n);

}  // namespace nashcar
