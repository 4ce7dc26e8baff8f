#include "amod/spectral/norms.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <limits>

#include "amod/errors.hpp"
#include "amod/spectral/fourier.hpp"

namespace amod {

Exponent::Exponent(double value) : value_(value) {
  if (!(value >= 1.0) || !std::isfinite(value)) {
    throw DomainError("Lebesgue exponent must satisfy 1 <= p <= inf");
  }
}

Exponent Exponent::infinity() {
  Exponent e;
  e.infinite_ = true;
  e.value_ = std::numeric_limits<double>::infinity();
  return e;
}

double Exponent::value() const {
  if (infinite_) throw DomainError("exponent is infinite");
  return value_;
}

double Exponent::reciprocal() const { return infinite_ ? 0.0 : 1.0 / value_; }

std::string Exponent::to_string() const {
  if (infinite_) return "inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value_);
  return std::string(buf, ptr);
}

Exponent Exponent::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "∞") return infinity();
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError("cannot parse exponent '" + text + "'");
  }
  return Exponent(v);
}

double lp_norm(const SampledFunction& f, Exponent p) {
  if (p.is_infinite()) return max_abs(f);
  const double pv = p.value();
  const double cell = f.grid().cell_volume();
  double sum = 0.0;
  if (pv == 1.0) {
    for (const Complex& v : f.values()) sum += std::abs(v);
    return cell * sum;
  }
  if (pv == 2.0) {
    for (const Complex& v : f.values()) sum += std::norm(v);
    return std::sqrt(cell * sum);
  }
  // Scale by the maximum to keep |f|^p representable for large p.
  const double m = max_abs(f);
  if (m == 0.0) return 0.0;
  for (const Complex& v : f.values()) sum += std::pow(std::abs(v) / m, pv);
  return m * std::pow(cell * sum, 1.0 / pv);
}

Fl1Result fl1_norm(const SampledFunction& g) {
  if (g.side() != Side::frequency) {
    throw ConfigError("fl1_norm expects a frequency-side function");
  }
  Fl1Result r;
  r.value = lp_norm(fourier_inverse(g), Exponent(1.0));
  r.spatial_period = g.grid().period();
  return r;
}

double fl1_norm_at_period(const SpectralFunction& g, double spatial_period, int oversample) {
  if (!(g.hi >= g.lo)) throw ConfigError("spectral support interval is empty");
  if (!(spatial_period > 0.0) || oversample < 1) {
    throw ConfigError("fl1 period and oversampling must be positive");
  }
  const double dxi = 1.0 / spatial_period;
  const auto support_samples =
      static_cast<std::size_t>(std::ceil((g.hi - g.lo) * spatial_period)) + 1;
  const std::size_t n = std::bit_ceil(
      std::max<std::size_t>(16, support_samples * static_cast<std::size_t>(oversample)));
  std::vector<Complex> data(n);
  bool any = false;
  for (std::size_t m = 0; m < support_samples; ++m) {
    const double xi = g.lo + static_cast<double>(m) * dxi;
    if (xi > g.hi) break;
    data[m] = g.eval(xi);
    any = any || data[m] != Complex(0.0);
  }
  if (!any) return 0.0;
  // Samples start at ξ = lo instead of 0; that only multiplies the kernel by
  // a unimodular phase, which the L¹ norm ignores.
  detail::dft_in_place(data, 1, n, +1);
  double sum = 0.0;
  for (const Complex& v : data) sum += std::abs(v);
  const double dx = spatial_period / static_cast<double>(n);
  return dx * dxi * sum;
}

Fl1Result fl1_norm(const SpectralFunction& g, const Fl1Options& options) {
  double period = options.spatial_period;
  double previous = fl1_norm_at_period(g, period, options.oversample);
  Fl1Result r;
  r.value = previous;
  r.spatial_period = period;
  r.converged = false;
  for (int d = 0; d < options.max_doublings; ++d) {
    period *= 2.0;
    const double current = fl1_norm_at_period(g, period, options.oversample);
    const double change =
        current == 0.0 ? std::abs(current - previous) : std::abs(current - previous) / current;
    r.value = current;
    r.spatial_period = period;
    r.relative_change = change;
    if (change < options.tolerance) {
      r.converged = true;
      return r;
    }
    previous = current;
  }
  return r;
}

}  // namespace amod
