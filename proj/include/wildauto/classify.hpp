#pragma once

#include <optional>
#include <string>

#include "wildauto/abelian_model.hpp"
#include "wildauto/num_action.hpp"
#include "wildauto/wildness.hpp"

namespace wildauto {

struct ProjectiveSimplicity {
  enum class Status { Yes, No, NotApplicable };
  Status status = Status::NotApplicable;
  /// Reason, set iff status == NotApplicable.
  std::string reason;
};

/// Aggregated verdicts for sigma = T_b . alpha on the modeled X.
struct AnalysisReport {
  VarietyModel model;
  Automorphism sigma;
  bool alpha_unipotent = false;
  WildnessVerdict wild;
  NumAction num_action;
  std::optional<long> j;
  GkResult gk;
  AmplenessVerdict sigma_ample_verdict = AmplenessVerdict::Unknown;
  ProjectiveSimplicity projectively_simple;
  std::optional<std::string> classification_label;
};

/// Full analysis: both wildness routes (compared), Num action, ampleness,
/// GK bounds, the projective-simplicity verdict for B(X, L, sigma) with L
/// ample, and the small-GK classification label where one row matches.
AnalysisReport analyze(const VarietyModel& model, const Automorphism& sigma);

}  // namespace wildauto
