#pragma once

#include <cstdint>
#include <string>

#include "nashcar/rational.hpp"

namespace nashcar {

enum class Tri { no, yes, unknown };

std::string to_string(Tri t);

enum class LabelKind { sigma, tau, cyclic, blowup_curve };

/// sigma(k,i), tau(k,i), cyclic(i), blowup-curve(i).
struct Label {
  LabelKind kind = LabelKind::sigma;
  std::int64_t k = 0;
  std::int64_t i = 0;

  std::string str() const;
  friend bool operator==(const Label&, const Label&) = default;
};

/// A divisorial valuation over X, given by its values on (x, y, z, u).
struct DivisorialValuation {
  ExpVec values;
  Rat discrepancy;
  Label label;
  bool nash = false;
  Tri essential = Tri::unknown;
  std::string provenance;
};

}  // namespace nashcar
