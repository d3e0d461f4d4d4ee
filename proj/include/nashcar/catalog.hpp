#pragma once

// Closed-form divisor catalog over a cA/r germ, Nash and essential
// classification, counting identities, and the Nash-map surjectivity verdict.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nashcar/resolution.hpp"
#include "nashcar/valuation.hpp"

namespace nashcar {

/// m_1, ..., m_n.
std::vector<std::int64_t> mk_table(const CArGerm& g, std::int64_t n);

/// Largest k the catalog and the verdicts look at: 2r + delta (r > 1), 2 + bar_delta (r = 1).
std::int64_t mk_extent(const CArGerm& g);

/// Every exceptional divisor on the Gorenstein resolution, by formula.
/// nash is set; essential is left unknown.
std::vector<DivisorialValuation> closed_form_catalog(const CArGerm& g);

std::vector<DivisorialValuation> nash_valuations(const CArGerm& g);

struct InequalityRecord {
  std::int64_t k = 0;
  std::int64_t mk = 0;
  std::int64_t bound = 0;  // 2 m_{k-r} + (1 - [k = 2r])
  bool holds = false;
};

struct SurjectivityVerdict {
  Tri surjective = Tri::unknown;
  std::vector<DivisorialValuation> witnesses;  // non-Nash essential (or undecided) entries
  std::vector<InequalityRecord> criterion;
  std::string rule;
};

struct EssentialResult {
  std::vector<DivisorialValuation> valuations;  // full catalog (plus tau for r = 1), classified
  SurjectivityVerdict verdict;
  std::vector<std::string> notes;
};

/// qf: whether X is Q-factorial (yes / no / unknown).
EssentialResult essential_valuations(const CArGerm& g, Tri qf);

SurjectivityVerdict surjectivity_verdict(const CArGerm& g, Tri qf);

/// Number of catalog divisors per discrepancy.
std::map<Rat, std::int64_t> count_by_discrepancy(const CArGerm& g);

/// Expected number of divisors over the two cyclic points of the first
/// w-morphism, per lambda = r * discrepancy in 1..r (r > 1).
std::map<std::int64_t, std::int64_t> first_step_cyclic_counts(const CArGerm& g);

/// True iff v(x) < m_{k-r} or v(y) < m_{k-r} for k = r v(z) > r, which rules
/// the divisor out as essential.
bool below_previous_weight(const CArGerm& g, const ExpVec& values);

}  // namespace nashcar
