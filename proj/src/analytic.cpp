#include "qdc/analytic.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "qdc/metrics.hpp"

namespace qdc {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

complexd polar1(double angle) { return {std::cos(angle), std::sin(angle)}; }
}  // namespace

double sinc(double x) {
  if (x == 0.0) return std::numbers::pi;
  return std::sin(std::numbers::pi * x) / x;
}

BiphotonState solve_eigenmode(const CouplerConfig& config) {
  config.validate();
  const double lc = config.lc();
  const double b = config.delta_beta_over_c();
  const double prefactor = config.gamma * config.length / 4.0;

  const complexd pump_even = config.pump_amplitude_1 + config.pump2();
  const complexd pump_odd = config.pump_amplitude_1 - config.pump2();

  BiphotonState out;
  out.basis = Basis::Eigenmode;
  // (0,0) and (pi,pi): pumped by the even mode; phase-matched at b = +/- 2.
  out(0, 0) = prefactor * pump_even * polar1(lc * (b + 2.0) / 2.0) *
              sinc(lc * (b - 2.0) / (2.0 * std::numbers::pi));
  out(1, 1) = prefactor * pump_even * polar1(lc * (b - 2.0) / 2.0) *
              sinc(lc * (b + 2.0) / (2.0 * std::numbers::pi));
  // (0,pi) = (pi,0): pumped by the odd mode; phase-matched at b = 0.
  const complexd cross = -prefactor * pump_odd * polar1(lc * b / 2.0) *
                         sinc(lc * b / (2.0 * std::numbers::pi));
  out(0, 1) = cross;
  out(1, 0) = cross;
  return out;
}

bool is_identically_zero(const BiphotonState& unnormalized,
                         const CouplerConfig& config) {
  // Analytic zeros land at the roundoff floor, ~1e-16 of the generation
  // scale; genuinely small states (near sinc zeros of one channel) stay
  // orders of magnitude above it.
  const double scale = config.generation_scale();
  return norm(unnormalized) <= 1e-12 * scale;
}

BiphotonState solve_waveguide(const CouplerConfig& config) {
  const BiphotonState modes = solve_eigenmode(config);
  if (is_identically_zero(modes, config)) {
    throw DegenerateStateError(
        "solve_waveguide: generated state is identically zero");
  }
  return normalize(eigenmode_to_waveguide(modes));
}

double temperature_to_mismatch(double delta_t_deg_c, double per_deg_c) {
  if (!std::isfinite(delta_t_deg_c)) {
    throw DomainError("temperature_to_mismatch: non-finite temperature change");
  }
  return per_deg_c * delta_t_deg_c;
}

SweepGrid SweepGrid::uniform(double phi_min, double phi_max, int phi_count,
                             double dbc_min, double dbc_max, int dbc_count) {
  SweepGrid grid;
  auto fill = [](std::vector<double>& v, double lo, double hi, int n) {
    v.resize(static_cast<std::size_t>(n));
    if (n == 1) {
      v[0] = lo;
      return;
    }
    for (int i = 0; i < n; ++i) {
      v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    }
  };
  if (phi_count < 1 || dbc_count < 1) {
    throw ConfigError("sweep grid: point counts must be >= 1");
  }
  fill(grid.delta_phi_values, phi_min, phi_max, phi_count);
  fill(grid.delta_beta_over_c_values, dbc_min, dbc_max, dbc_count);
  return grid;
}

void SweepGrid::validate() const {
  if (delta_phi_values.empty()) {
    throw ConfigError("sweep.delta_phi_rad: empty value list");
  }
  if (delta_beta_over_c_values.empty()) {
    throw ConfigError("sweep.delta_beta_over_c: empty value list");
  }
  for (double v : delta_phi_values) {
    if (!std::isfinite(v)) throw ConfigError("sweep.delta_phi_rad: non-finite value");
  }
  for (double v : delta_beta_over_c_values) {
    if (!std::isfinite(v)) throw ConfigError("sweep.delta_beta_over_c: non-finite value");
  }
}

double relative_phase(const complexd& a, const complexd& ref, double norm_scale) {
  const double floor = 1e-12 * norm_scale;
  if (std::abs(a) <= floor || std::abs(ref) <= floor) return kNaN;
  return std::arg(a * std::conj(ref));
}

CorrelationMap sweep(const CouplerConfig& config_base, const SweepGrid& grid,
                     int threads) {
  grid.validate();
  config_base.validate();

  CorrelationMap map;
  map.grid = grid;
  const std::size_t total = grid.size();
  map.p11.assign(total, kNaN);
  map.p12.assign(total, kNaN);
  map.p22.assign(total, kNaN);
  map.phase11_rel.assign(total, kNaN);
  map.phase12_rel.assign(total, kNaN);
  map.concurrence.assign(total, kNaN);

  const std::size_t n_dbc = grid.delta_beta_over_c_values.size();
  auto compute_point = [&](std::size_t flat) {
    const std::size_t phi_i = flat / n_dbc;
    const std::size_t dbc_i = flat % n_dbc;
    CouplerConfig c = config_base;
    c.delta_phi = grid.delta_phi_values[phi_i];
    c.delta_beta0 = grid.delta_beta_over_c_values[dbc_i] * c.coupling;

    const BiphotonState modes = solve_eigenmode(c);
    if (is_identically_zero(modes, c)) return;  // null point

    const BiphotonState psi = normalize(eigenmode_to_waveguide(modes));
    map.p11[flat] = std::norm(psi(0, 0));
    map.p12[flat] = 0.5 * (std::norm(psi(0, 1)) + std::norm(psi(1, 0)));
    map.p22[flat] = std::norm(psi(1, 1));
    map.phase11_rel[flat] = relative_phase(psi(0, 0), psi(1, 1), 1.0);
    map.phase12_rel[flat] = relative_phase(psi(0, 1), psi(1, 1), 1.0);
    map.concurrence[flat] = concurrence_pure(psi);
  };

  if (threads <= 1 || total < 2) {
    for (std::size_t i = 0; i < total; ++i) compute_point(i);
    return map;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
      compute_point(i);
    }
  };
  std::vector<std::thread> pool;
  const int n_workers = std::min<int>(threads, static_cast<int>(total));
  pool.reserve(static_cast<std::size_t>(n_workers));
  for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return map;
}

}  // namespace qdc
