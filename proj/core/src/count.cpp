// GCC 11 misreads the cpp_int limb copy in operator>> as an overflow.
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC diagnostic ignored "-Wstringop-overflow"
#pragma GCC diagnostic ignored "-Wstringop-overread"
#endif

#include "mixent/count.hpp"

#include <cmath>
#include <numbers>

namespace mixent {

double log_of(const BigInt& value) {
  if (value <= 0) return -std::numeric_limits<double>::infinity();
  const auto top_bit = boost::multiprecision::msb(value);
  if (top_bit < 1000) return std::log(value.convert_to<double>());
  // Keep 64 leading bits; the dropped tail is below double resolution.
  const auto shift = top_bit - 63;
  const BigInt head = value >> shift;
  return std::log(head.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

double log_of(const BigRational& value) {
  if (value <= 0) return -std::numeric_limits<double>::infinity();
  return log_of(boost::multiprecision::numerator(value)) -
         log_of(boost::multiprecision::denominator(value));
}

Count::Count(BigInt value) : value_(std::move(value)), log_value_(log_of(*value_)) {}

Count Count::log_only(double log_value) {
  Count c;
  c.value_.reset();
  c.log_value_ = log_value;
  return c;
}

std::string Count::str() const { return value_ ? value_->str() : std::string("log-only"); }

std::string RationalCount::str() const {
  if (!exact) return "log-only";
  const auto num = boost::multiprecision::numerator(*exact);
  const auto den = boost::multiprecision::denominator(*exact);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace mixent
