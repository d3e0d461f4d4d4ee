#pragma once

// The defining series f(z,u) of a cA/r germ, stored as a finite term map over
// monomials z^{r i} u^j with exact coefficients, together with its Newton
// weights m_k = min(k i + j) and the coordinate transforms the resolution uses.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nashcar/rational.hpp"

namespace nashcar {

/// Coefficient c of z^{r i} u^j.
struct Term {
  std::int64_t i = 0;
  std::int64_t j = 0;
  Rat c;

  friend bool operator==(const Term&, const Term&) = default;
};

using Exponent = std::pair<std::int64_t, std::int64_t>;  // (i, j)

/// Region of exactly known coefficients: (i, j) is known iff
/// slope*i + uweight*j <= bound. A fresh series has slope r and uweight 1,
/// i.e. the total (z,u)-degree r i + j is bounded.
struct Truncation {
  std::int64_t slope = 1;
  std::int64_t bound = 64;
  std::int64_t uweight = 1;

  std::int64_t weight(std::int64_t i, std::int64_t j) const { return slope * i + uweight * j; }
  bool known(std::int64_t i, std::int64_t j) const { return weight(i, j) <= bound; }
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// Univariate polynomial in u (degree -> coefficient); used for z -> z + phi(u).
using UPoly = std::map<std::int64_t, Rat>;

class InvariantSeries {
 public:
  InvariantSeries() = default;

  /// Terms must have distinct exponents, nonzero coefficients and lie inside
  /// the truncation region; otherwise Error(validation).
  InvariantSeries(std::int64_t r, const std::vector<Term>& terms, std::int64_t trunc);
  InvariantSeries(std::int64_t r, std::map<Exponent, Rat> terms, Truncation trunc);

  std::int64_t r() const { return r_; }
  const std::map<Exponent, Rat>& terms() const { return terms_; }
  const Truncation& truncation() const { return trunc_; }
  std::int64_t trunc() const { return trunc_.bound; }
  bool empty() const { return terms_.empty(); }
  std::vector<Term> term_list() const;

  Rat coefficient(std::int64_t i, std::int64_t j) const;
  bool known(std::int64_t i, std::int64_t j) const { return trunc_.known(i, j); }

  /// Least l with u^l present.
  std::optional<std::int64_t> pure_u_order() const;
  /// Least i with every term having z-exponent at least r*i.
  std::int64_t z_order() const;

  /// Product, exact on the intersection of what both factors determine.
  InvariantSeries operator*(const InvariantSeries& o) const;
  /// Difference, exact on the common known region (slopes must agree).
  InvariantSeries operator-(const InvariantSeries& o) const;

  /// Drop everything outside the given region (which must be no larger than ours).
  InvariantSeries truncated(Truncation t) const;
  /// Same terms, z and u exchanged (only meaningful for r = 1).
  InvariantSeries swapped() const;

  /// "z^2 + u^4" style text in the original variables.
  std::string str() const;

  friend bool operator==(const InvariantSeries&, const InvariantSeries&) = default;

 private:
  std::int64_t r_ = 1;
  std::map<Exponent, Rat> terms_;
  Truncation trunc_;
};

/// min over terms of (weight_i * i + weight_j * j), with certainty check:
/// throws Error(truncation) if an unknown term could attain a smaller value.
Rat min_weight(const InvariantSeries& f, const Rat& weight_i, const Rat& weight_j);

/// m_k = min(k i + j): the w_k-weight of f where w_k(z,u) = (k/r, 1).
std::int64_t weight_order(const InvariantSeries& f, std::int64_t k);

/// r > 1: least k with m_{k+1} = m_k.
std::int64_t delta(const InvariantSeries& f);
/// r = 1: least k with m_{k+1} <= m_k + 1.
std::int64_t bar_delta(const InvariantSeries& f);

/// f'(z,u) = f(z u^{1/r}, u) / u^{m_1}: (i, j) -> (i, i + j - m_1).
InvariantSeries addm_transform(const InvariantSeries& f);

/// f(z + phi(u), u) for r = 1; phi must vanish at u = 0.
InvariantSeries substitute(const InvariantSeries& f, const UPoly& phi);

enum class NormalizationStatus { maximal, unknown };

struct NormalizedCoordinates {
  InvariantSeries series;
  UPoly phi;             // applied as z -> z + phi(u) after the optional swap
  bool swapped = false;  // z and u exchanged first
  NormalizationStatus status = NormalizationStatus::maximal;
};

/// r = 1: bring the degree-m initial form to c*z^m when it is an m-th power of
/// a linear form, which maximizes m_2 over coordinate choices.
NormalizedCoordinates normalize_coordinates(const InvariantSeries& f);

/// True iff every term z^i u^j satisfies 2i + j >= 2 m_1 (r = 1, in the given
/// coordinates). Throws Error(truncation) if unknown terms could violate it.
bool weight_two_condition(const InvariantSeries& f);

}  // namespace nashcar
