#include "nashcar/valuation.hpp"

namespace nashcar {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::no: return "no";
    case Tri::yes: return "yes";
    case Tri::unknown: return "unknown";
  }
  return "unknown";
}

std::string Label::str() const {
  const std::string ki = "(" + std::to_string(k) + "," + std::to_string(i) + ")";
  switch (kind) {
    case LabelKind::sigma: return "sigma" + ki;
    case LabelKind::tau: return "tau" + ki;
    case LabelKind::cyclic: return "cyclic(" + std::to_string(i) + ")";
    case LabelKind::blowup_curve: return "blowup-curve(" + std::to_string(i) + ")";
  }
  return "";
}

}  // namespace nashcar
