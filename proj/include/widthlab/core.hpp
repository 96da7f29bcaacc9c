#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace widthlab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Reciprocal of an extended-real exponent; 1/inf is exactly 0.
inline double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

inline double pos_part(double x) { return x > 0.0 ? x : 0.0; }

/// Absolute tolerance scaled by operand magnitude.
inline bool near_zero(double x, double scale = 1.0, double tol = 1e-12) {
  return std::abs(x) <= tol * std::max(1.0, std::abs(scale));
}

/// A width value up to an unspecified multiplicative constant.
/// `exact` is set only where the underlying estimate is an equality
/// (Pietsch-Stesin regime, n = 0, and the full-dimension case).
struct OrderValue {
  double value = 0.0;
  bool exact = false;
};

/// Base error; `code()` is stable and machine readable.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct DegenerateExponents : Error {
  explicit DegenerateExponents(const std::string& w)
      : Error("DegenerateExponents", w) {}
};
struct InvalidQuery : Error {
  explicit InvalidQuery(const std::string& w) : Error("InvalidQuery", w) {}
};
struct OutOfRegime : Error {
  explicit OutOfRegime(const std::string& w) : Error("OutOfRegime", w) {}
};
struct InvalidSpec : Error {
  explicit InvalidSpec(const std::string& w) : Error("InvalidSpec", w) {}
};
struct NotBetween : Error {
  explicit NotBetween(const std::string& w) : Error("NotBetween", w) {}
};
struct NoCaseApplies : Error {
  explicit NoCaseApplies(const std::string& w) : Error("NoCaseApplies", w) {}
};
struct NoRoot : Error {
  explicit NoRoot(const std::string& w) : Error("NoRoot", w) {}
};
struct NotDetermined : Error {
  explicit NotDetermined(const std::string& w) : Error("NotDetermined", w) {}
};
struct TruncationFailure : Error {
  explicit TruncationFailure(const std::string& w)
      : Error("TruncationFailure", w) {}
};
struct UnsupportedCombination : Error {
  explicit UnsupportedCombination(const std::string& w)
      : Error("UnsupportedCombination", w) {}
};
struct DimensionTooLarge : Error {
  explicit DimensionTooLarge(const std::string& w)
      : Error("DimensionTooLarge", w) {}
};
struct SamplingStarved : Error {
  explicit SamplingStarved(const std::string& w)
      : Error("SamplingStarved", w) {}
};
struct ConstraintViolated : Error {
  explicit ConstraintViolated(const std::string& w)
      : Error("ConstraintViolated", w) {}
};

}  // namespace widthlab
