#include "hkz/classify.hpp"

namespace hkz {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::Zero: return "Zero";
    case Regime::NullCandidate: return "NullCandidate";
    case Regime::Maximal: return "Maximal";
    case Regime::Indeterminate: return "Indeterminate";
  }
  return "Unknown";
}

ClassReport d_dimension_class(const HKModel& model, const DivisorClass& divisor) {
  ClassReport report{Regime::Indeterminate, 0, decompose(model, divisor)};
  const DivisorClass& p = report.decomposition.positive;
  report.q_positive = model.square(p);
  if (p.is_zero()) {
    report.regime = Regime::Zero;
  } else if (sgn(report.q_positive) > 0) {
    report.regime = Regime::Maximal;
  } else if (sgn(report.q_positive) == 0) {
    report.regime = Regime::NullCandidate;
  }
  return report;
}

}  // namespace hkz
