#pragma once

#include <stdexcept>
#include <string>

namespace gck {

enum class Errc {
  ambient_mismatch,
  division_by_zero,
  syntax_error,
  dimension_mismatch,
  invariant_violation,
  not_complex,
  not_orthogonal,
  degenerate_form,
  not_almost_complex,
  incompatible_pair,
  non_skew,
  zero_spinor,
  not_pure,
  conditions_failed,
  no_witness,
  not_involution,
  not_compatible,
  not_commuting,
  not_admissible,
  non_closed_twist,
  not_twisted_immersion,
  pole,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ambient_mismatch: return "AmbientMismatch";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::not_complex: return "NotComplex";
    case Errc::not_orthogonal: return "NotOrthogonal";
    case Errc::degenerate_form: return "DegenerateForm";
    case Errc::not_almost_complex: return "NotAlmostComplex";
    case Errc::incompatible_pair: return "IncompatiblePair";
    case Errc::non_skew: return "NonSkew";
    case Errc::zero_spinor: return "ZeroSpinor";
    case Errc::not_pure: return "NotPure";
    case Errc::conditions_failed: return "ConditionsFailed";
    case Errc::no_witness: return "NoWitness";
    case Errc::not_involution: return "NotInvolution";
    case Errc::not_compatible: return "NotCompatible";
    case Errc::not_commuting: return "NotCommuting";
    case Errc::not_admissible: return "NotAdmissible";
    case Errc::non_closed_twist: return "NonClosedTwist";
    case Errc::not_twisted_immersion: return "NotTwistedImmersion";
    case Errc::pole: return "Pole";
  }
  return "Unknown";
}

/// Library-wide error: a code usable by the CLI exit contract plus a message.
class GckError : public std::runtime_error {
 public:
  GckError(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw GckError(c, msg); }

inline void require(bool cond, Errc c, const std::string& msg) {
  if (!cond) fail(c, msg);
}

}  // namespace gck
