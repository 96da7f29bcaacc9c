#pragma once

#include <optional>
#include <string>
#include <vector>

#include "widthlab/params.hpp"

namespace widthlab {

/// The five derived exponents; a field is empty exactly when its denominator
/// vanishes (within tolerance), including the gamma*-divided quantities at
/// gamma* = 0.
struct DerivedExponents {
  std::optional<double> theta_tilde;
  std::optional<double> theta_hat;
  std::optional<double> nu_hat;
  std::optional<double> nu_tilde;
  std::optional<double> sigma_hat;
};

DerivedExponents derived_exponents(const ExponentParams& params);

enum class EmbeddingCase { N1, N2, N3, N4 };

struct EmbeddingExponent {
  bool applicable = false;
  EmbeddingCase case_id = EmbeddingCase::N1;
  double nu_star = 0.0;
};

/// Evaluates the four embedding-exponent condition sets in order N1..N4 and
/// returns the first match; applicable=false when none matches.
EmbeddingExponent embedding_exponent(const ExponentParams& params);

enum class NotationId { Not2, Not3, Not4, Not5, Not6 };

const char* to_string(NotationId id);

struct ExponentMenu {
  NotationId notation_id = NotationId::Not2;
  std::string sub_case;
  int j0 = 0;
  /// Candidate decay exponents theta_1..theta_j0; +inf entries encode the
  /// -mu*/gamma* = +inf convention at gamma* = 0, mu* < 0.
  std::vector<double> thetas;
  /// More than one notation preamble matched (boundary equality); the
  /// dispatched one is notation_id, the full list is in matches.
  bool boundary_overlap = false;
  std::vector<NotationId> matches;
};

/// Case dispatch over the five notation blocks, tried in order Not2..Not6.
/// Throws NoCaseApplies when no preamble matches (including the gamma* = 0,
/// mu* >= 0 situation where the +inf convention is required).
ExponentMenu exponent_menu(const ExponentParams& params);

enum class WidthStatus { Determined, NoGap, NonPositive, NoCaseApplies };

const char* to_string(WidthStatus status);

struct WidthExponentResult {
  WidthStatus status = WidthStatus::NoCaseApplies;
  double theta_star = 0.0;  // valid when Determined
  int j_star = 0;           // 1-based, valid when Determined
  std::optional<ExponentMenu> menu;
};

/// Selects the dominant exponent theta_{j*} = min theta_j.  Determined only
/// when the minimum is strictly positive and the runner-up exceeds it by more
/// than gap_tol; ties give NoGap, a nonpositive minimum gives NonPositive.
WidthExponentResult width_exponent(const ExponentParams& params,
                                   double gap_tol = 1e-9);

/// True when the width estimate extends to the single-constraint class:
/// mixed sum >= 0 and either (p0 >= q and p1 >= q) or
/// (p0 > q > p1 and s* + 1/p0 - 1/p1 < 0).
bool remark1_applies(const ExponentParams& params);

}  // namespace widthlab
