#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "amod/spectral/grid.hpp"

namespace amod {

enum class SymbolKind { quadratic, power, bracket_power, linear, zero, tabulated };

std::string to_string(SymbolKind kind);
SymbolKind parse_symbol_kind(const std::string& text);

// Uniform samples of a one-dimensional symbol: values[i] = μ(start + i·step).
struct SymbolTable {
  double start = 0.0;
  double step = 1.0;
  std::vector<double> values;
};

// Real phase μ(ξ) of the multiplier e^{iμ(D)}. Presets are literal:
// quadratic t|ξ|², power t|ξ|^β (β >= 2), bracket-power t⟨ξ⟩^β, linear 2π v·ξ.
// The Schrödinger group e^{itΔ} is quadratic with t replaced by -4π²t.
class SymbolSpec {
 public:
  static SymbolSpec quadratic(double t);
  // Throws ConfigError for β < 2 (not C² at the origin).
  static SymbolSpec power(double t, double beta);
  static SymbolSpec bracket_power(double t, double beta);
  static SymbolSpec linear(Point v);
  static SymbolSpec zero();
  // Throws ConfigError unless the table has >= 3 finite samples and step > 0.
  static SymbolSpec tabulated(SymbolTable table);

  SymbolKind kind() const { return kind_; }
  double t() const { return t_; }
  double beta() const { return beta_; }
  const Point& v() const { return v_; }
  const SymbolTable& table() const { return table_; }

  // Same kind with parameter t replaced (quadratic, power, bracket-power).
  SymbolSpec with_t(double t) const;
  // -μ.
  SymbolSpec negated() const;

  // n = 1. Tabulated lookups outside the table throw DomainError.
  double value(double xi) const;
  double derivative(double xi) const;
  double second_derivative(double xi) const;

  // n in {1, 2}; gamma is a multi-index with |γ| = 2.
  double value(const Point& xi, int dim) const;
  double second_derivative(std::array<int, 2> gamma, const Point& xi, int dim) const;

 private:
  SymbolKind kind_ = SymbolKind::zero;
  double t_ = 0.0;
  double beta_ = 2.0;
  Point v_{0.0, 0.0};
  SymbolTable table_;
};

std::vector<double> eval_symbol(const SymbolSpec& symbol, std::span<const double> points);
std::vector<double> second_derivative(const SymbolSpec& symbol, std::span<const double> points);

}  // namespace amod
