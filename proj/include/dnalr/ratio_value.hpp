#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace dnalr {

/// A real number constrained to the closed unit interval.
class Probability {
 public:
  Probability() = default;
  explicit Probability(double v) : value_(v) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::domain_error("probability out of [0,1]: " + std::to_string(v));
    }
  }
  double value() const { return value_; }

  friend bool operator==(Probability a, Probability b) { return a.value_ == b.value_; }

 private:
  double value_ = 0.0;
};

/// Extended nonnegative real stored in log10 form.
/// Exactly one of {finite log10, +infinity, exact zero} holds.
class RatioValue {
 public:
  static RatioValue zero() { return RatioValue(State::Zero, 0.0); }
  static RatioValue infinity() { return RatioValue(State::Inf, 0.0); }

  static RatioValue from_log10(double lg) {
    if (std::isnan(lg)) throw std::domain_error("ratio log10 is NaN");
    if (std::isinf(lg)) return lg > 0 ? infinity() : zero();
    return RatioValue(State::Finite, lg);
  }

  static RatioValue from_linear(double x) {
    if (std::isnan(x) || x < 0.0) {
      throw std::domain_error("ratio must be a nonnegative real");
    }
    if (x == 0.0) return zero();
    if (std::isinf(x)) return infinity();
    return RatioValue(State::Finite, std::log10(x));
  }

  bool is_zero() const { return state_ == State::Zero; }
  bool is_infinite() const { return state_ == State::Inf; }
  bool is_finite() const { return state_ == State::Finite; }

  /// log10 of the value; -inf for zero, +inf for infinity.
  double log10_value() const {
    switch (state_) {
      case State::Zero:
        return -std::numeric_limits<double>::infinity();
      case State::Inf:
        return std::numeric_limits<double>::infinity();
      default:
        return log10_;
    }
  }

  /// Linear value when it fits in a double; nullopt otherwise.
  std::optional<double> linear() const {
    if (is_zero()) return 0.0;
    if (is_infinite()) return std::nullopt;
    if (log10_ > 308.0 || log10_ < -307.0) return std::nullopt;
    return std::pow(10.0, log10_);
  }

  /// Extended-real product. 0 * inf is a construction error.
  friend RatioValue operator*(const RatioValue& a, const RatioValue& b) {
    if ((a.is_zero() && b.is_infinite()) || (a.is_infinite() && b.is_zero())) {
      throw std::domain_error("0 * inf is undefined for RatioValue");
    }
    if (a.is_zero() || b.is_zero()) return zero();
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return from_log10(a.log10_ + b.log10_);
  }

 private:
  enum class State { Finite, Zero, Inf };
  RatioValue(State s, double lg) : state_(s), log10_(lg) {}

  State state_;
  double log10_;
};

}  // namespace dnalr
