#include "amod/multipliers/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "amod/errors.hpp"
#include "amod/spectral/bracket.hpp"

namespace amod {

std::string to_string(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::quadratic: return "quadratic";
    case SymbolKind::power: return "power";
    case SymbolKind::bracket_power: return "bracket-power";
    case SymbolKind::linear: return "linear";
    case SymbolKind::zero: return "zero";
    case SymbolKind::tabulated: return "tabulated";
  }
  return "zero";
}

SymbolKind parse_symbol_kind(const std::string& text) {
  if (text == "quadratic") return SymbolKind::quadratic;
  if (text == "power") return SymbolKind::power;
  if (text == "bracket-power" || text == "bracket_power") return SymbolKind::bracket_power;
  if (text == "linear") return SymbolKind::linear;
  if (text == "zero") return SymbolKind::zero;
  if (text == "tabulated") return SymbolKind::tabulated;
  throw ConfigError("unknown symbol kind '" + text + "'");
}

SymbolSpec SymbolSpec::quadratic(double t) {
  SymbolSpec s;
  s.kind_ = SymbolKind::quadratic;
  s.t_ = t;
  return s;
}

SymbolSpec SymbolSpec::power(double t, double beta) {
  if (!(beta >= 2.0)) {
    throw ConfigError("power symbol t|xi|^beta needs beta >= 2 to be C^2; use bracket-power");
  }
  SymbolSpec s;
  s.kind_ = SymbolKind::power;
  s.t_ = t;
  s.beta_ = beta;
  return s;
}

SymbolSpec SymbolSpec::bracket_power(double t, double beta) {
  SymbolSpec s;
  s.kind_ = SymbolKind::bracket_power;
  s.t_ = t;
  s.beta_ = beta;
  return s;
}

SymbolSpec SymbolSpec::linear(Point v) {
  SymbolSpec s;
  s.kind_ = SymbolKind::linear;
  s.v_ = v;
  return s;
}

SymbolSpec SymbolSpec::zero() { return SymbolSpec(); }

SymbolSpec SymbolSpec::tabulated(SymbolTable table) {
  if (!(table.step > 0.0) || table.values.size() < 3) {
    throw ConfigError("tabulated symbol needs step > 0 and at least 3 samples");
  }
  for (double v : table.values) {
    if (!std::isfinite(v)) throw ConfigError("tabulated symbol has non-finite samples");
  }
  SymbolSpec s;
  s.kind_ = SymbolKind::tabulated;
  s.table_ = std::move(table);
  return s;
}

SymbolSpec SymbolSpec::with_t(double t) const {
  SymbolSpec s = *this;
  s.t_ = t;
  return s;
}

SymbolSpec SymbolSpec::negated() const {
  SymbolSpec s = *this;
  s.t_ = -t_;
  s.v_ = {-v_[0], -v_[1]};
  for (double& v : s.table_.values) v = -v;
  return s;
}

namespace {

double table_lookup(const SymbolTable& table, double xi) {
  const double u = (xi - table.start) / table.step;
  const double last = static_cast<double>(table.values.size() - 1);
  if (!(u >= -1e-9 && u <= last + 1e-9)) {
    throw DomainError("tabulated symbol evaluated outside its table at xi = " + std::to_string(xi));
  }
  const double uc = std::clamp(u, 0.0, last);
  const std::size_t i = std::min(static_cast<std::size_t>(uc), table.values.size() - 2);
  const double f = uc - static_cast<double>(i);
  return table.values[i] * (1.0 - f) + table.values[i + 1] * f;
}

}  // namespace

double SymbolSpec::value(double xi) const {
  switch (kind_) {
    case SymbolKind::quadratic: return t_ * xi * xi;
    case SymbolKind::power: return t_ * std::pow(std::abs(xi), beta_);
    case SymbolKind::bracket_power: return t_ * std::pow(bracket(xi), beta_);
    case SymbolKind::linear: return 2.0 * std::numbers::pi * v_[0] * xi;
    case SymbolKind::zero: return 0.0;
    case SymbolKind::tabulated: return table_lookup(table_, xi);
  }
  return 0.0;
}

double SymbolSpec::derivative(double xi) const {
  switch (kind_) {
    case SymbolKind::quadratic: return 2.0 * t_ * xi;
    case SymbolKind::power:
      return xi == 0.0 ? 0.0 : t_ * beta_ * std::pow(std::abs(xi), beta_ - 1.0) * (xi < 0 ? -1.0 : 1.0);
    case SymbolKind::bracket_power: return t_ * beta_ * std::pow(bracket(xi), beta_ - 2.0) * xi;
    case SymbolKind::linear: return 2.0 * std::numbers::pi * v_[0];
    case SymbolKind::zero: return 0.0;
    case SymbolKind::tabulated: {
      const double h = table_.step;
      return (table_lookup(table_, xi + h) - table_lookup(table_, xi - h)) / (2.0 * h);
    }
  }
  return 0.0;
}

double SymbolSpec::second_derivative(double xi) const {
  return second_derivative({2, 0}, {xi, 0.0}, 1);
}

double SymbolSpec::value(const Point& xi, int dim) const {
  if (dim == 1) return value(xi[0]);
  if (dim != 2) throw ConfigError("symbols support n in {1, 2}");
  const double r = std::hypot(xi[0], xi[1]);
  switch (kind_) {
    case SymbolKind::quadratic: return t_ * r * r;
    case SymbolKind::power: return t_ * std::pow(r, beta_);
    case SymbolKind::bracket_power: return t_ * std::pow(std::sqrt(1.0 + r * r), beta_);
    case SymbolKind::linear: return 2.0 * std::numbers::pi * (v_[0] * xi[0] + v_[1] * xi[1]);
    case SymbolKind::zero: return 0.0;
    case SymbolKind::tabulated: throw ConfigError("tabulated symbols are one-dimensional");
  }
  return 0.0;
}

double SymbolSpec::second_derivative(std::array<int, 2> gamma, const Point& xi, int dim) const {
  if (gamma[0] < 0 || gamma[1] < 0 || gamma[0] + gamma[1] != 2 || (dim == 1 && gamma[1] != 0)) {
    throw ConfigError("second_derivative needs a multi-index with |gamma| = 2");
  }
  // Axes i, j of ∂_i∂_j.
  const int i = gamma[0] > 0 ? 0 : 1;
  const int j = gamma[0] == 2 ? 0 : 1;
  const double delta = i == j ? 1.0 : 0.0;
  const double x2 = dim == 1 ? xi[0] * xi[0] : xi[0] * xi[0] + xi[1] * xi[1];
  switch (kind_) {
    case SymbolKind::quadratic: return 2.0 * t_ * delta;
    case SymbolKind::power: {
      if (beta_ == 2.0) return 2.0 * t_ * delta;
      if (x2 == 0.0) return 0.0;
      const double r = std::sqrt(x2);
      return t_ * beta_ *
             (std::pow(r, beta_ - 2.0) * delta + (beta_ - 2.0) * std::pow(r, beta_ - 4.0) * xi[i] * xi[j]);
    }
    case SymbolKind::bracket_power: {
      const double b2 = 1.0 + x2;
      return t_ * beta_ *
             (std::pow(b2, 0.5 * beta_ - 1.0) * delta + (beta_ - 2.0) * std::pow(b2, 0.5 * beta_ - 2.0) * xi[i] * xi[j]);
    }
    case SymbolKind::linear:
    case SymbolKind::zero: return 0.0;
    case SymbolKind::tabulated: {
      if (dim != 1) throw ConfigError("tabulated symbols are one-dimensional");
      const double h = table_.step;
      return (table_lookup(table_, xi[0] + h) - 2.0 * table_lookup(table_, xi[0]) +
              table_lookup(table_, xi[0] - h)) / (h * h);
    }
  }
  return 0.0;
}

std::vector<double> eval_symbol(const SymbolSpec& symbol, std::span<const double> points) {
  std::vector<double> out;
  out.reserve(points.size());
  for (double x : points) out.push_back(symbol.value(x));
  return out;
}

std::vector<double> second_derivative(const SymbolSpec& symbol, std::span<const double> points) {
  std::vector<double> out;
  out.reserve(points.size());
  for (double x : points) out.push_back(symbol.second_derivative(x));
  return out;
}

}  // namespace amod
