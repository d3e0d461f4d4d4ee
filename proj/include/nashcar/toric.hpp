#pragma once

// Weighted blow-ups of cyclic quotient spaces A^n / (1/r)(a_1, ..., a_n).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nashcar/rational.hpp"
#include "nashcar/series.hpp"

namespace nashcar {

/// A^n / (1/r)(a_1, ..., a_n). Weights keep the representatives they were
/// built with; a common factor of r and all weights is divided out.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(std::int64_t r, std::vector<std::int64_t> weights);

  static QuotientSpace smooth(std::size_t n) { return QuotientSpace(1, std::vector<std::int64_t>(n, 0)); }

  std::int64_t r() const { return r_; }
  std::size_t dim() const { return w_.size(); }
  const std::vector<std::int64_t>& weights() const { return w_; }
  bool is_smooth() const { return r_ == 1; }

  /// Representative with the lexicographically least sorted residue vector
  /// among all unit multiples s*w mod r.
  QuotientSpace canonical() const;

  /// "1/5(2,3,1)" or "smooth".
  std::string str() const;

  /// Isomorphism: equal canonical forms.
  friend bool operator==(const QuotientSpace& a, const QuotientSpace& b);

 private:
  std::int64_t r_ = 1;
  std::vector<std::int64_t> w_;
};

/// Lattice vector w = (1/r)(b_1, ..., b_n) of N with b_i = lambda*a_i + k_i*r.
struct BlowupWeight {
  std::int64_t r = 1;
  std::vector<std::int64_t> b;
  std::int64_t lambda = 1;
  std::vector<std::int64_t> k;

  ExpVec vector() const;  // (b_1/r, ..., b_n/r)
  friend bool operator==(const BlowupWeight&, const BlowupWeight&) = default;
};

struct ChartData {
  std::size_t index = 0;
  QuotientSpace space;
  MonomialMap change = MonomialMap::identity(1);
  ExpVec exc_valuation;
};

/// Least lambda >= 1 with b_i = lambda*a_i mod r, and the matching k_i.
BlowupWeight decompose_weight(const QuotientSpace& space, const std::vector<std::int64_t>& b);

/// Chart U_index of the weighted blow-up.
ChartData blowup_chart(const QuotientSpace& space, const BlowupWeight& w, std::size_t index);

/// Chart quotient computed from the lattice generators, whatever lambda is.
QuotientSpace chart_quotient_by_lattice(const QuotientSpace& space, const BlowupWeight& w, std::size_t index);

/// sum(b)/r - sum(hyp_weights) - 1.
Rat discrepancy(const QuotientSpace& space, const BlowupWeight& w, const std::vector<Rat>& hyp_weights);

/// A coordinate solved from a hypersurface equation x*y = f(z, u): the chart
/// does not carry `eliminated`, whose value is v(f) - v(partner).
struct EliminatedCoordinate {
  std::size_t eliminated = 0;
  std::size_t partner = 0;
  std::size_t z_index = 0;
  std::size_t u_index = 0;
  InvariantSeries f;
};

/// Value of f at a monomial valuation with the given weights of z and u.
Rat series_valuation(const InvariantSeries& f, const Rat& vz, const Rat& vu);

/// Pushes a chart valuation to upstream coordinates.
ExpVec transport_valuation(const ChartData& chart, const ExpVec& v,
                           const std::optional<EliminatedCoordinate>& hyp = std::nullopt);

}  // namespace nashcar
