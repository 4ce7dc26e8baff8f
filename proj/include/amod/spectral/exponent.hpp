#pragma once

#include <string>

namespace amod {

// A Lebesgue exponent p in [1, ∞]. Infinity is a distinguished state, not a
// large float.
class Exponent {
 public:
  // Throws DomainError unless 1 <= value < ∞.
  explicit Exponent(double value);
  static Exponent infinity();

  bool is_infinite() const { return infinite_; }
  // Finite value; throws DomainError when infinite.
  double value() const;
  // 1/p, with 1/∞ = 0.
  double reciprocal() const;

  // "inf" or the shortest round-trip decimal.
  std::string to_string() const;
  // Accepts a decimal >= 1 or one of "inf", "infinity", "∞".
  static Exponent parse(const std::string& text);

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  Exponent() = default;
  double value_ = 1.0;
  bool infinite_ = false;
};

}  // namespace amod
