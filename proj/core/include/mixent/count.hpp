#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace mixent {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Natural log of an arbitrary-precision integer. Returns -infinity for zero.
double log_of(const BigInt& value);

/// Natural log of a nonnegative rational. Returns -infinity for zero.
double log_of(const BigRational& value);

/// An exact nonnegative microstate count together with its natural log.
///
/// Counts above the configured exact limit are carried log-only: value()
/// is empty and only log_value() is meaningful. A zero count has
/// log_value() == -infinity.
class Count {
 public:
  Count() : Count(BigInt(0)) {}
  explicit Count(BigInt value);

  static Count log_only(double log_value);

  bool is_log_only() const noexcept { return !value_.has_value(); }
  bool is_zero() const noexcept { return log_value_ == -std::numeric_limits<double>::infinity(); }

  const std::optional<BigInt>& value() const noexcept { return value_; }
  double log_value() const noexcept { return log_value_; }

  /// Decimal string of the exact value, or "log-only".
  std::string str() const;

  friend bool operator==(const Count& a, const Count& b) {
    if (a.value_ && b.value_) return *a.value_ == *b.value_;
    return a.log_value_ == b.log_value_;
  }

 private:
  std::optional<BigInt> value_;
  double log_value_;
};

/// A count that need not be an integer (the N!-corrected multiplicity).
/// The exact rational is present whenever the underlying counts were exact.
struct RationalCount {
  double log_value = 0.0;
  std::optional<BigRational> exact;

  bool is_log_only() const noexcept { return !exact.has_value(); }
  std::string str() const;
};

}  // namespace mixent
