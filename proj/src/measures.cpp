#include "measures.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace hawkw {

namespace {

constexpr double kClampFlagThreshold = 1e-12;

void require_tripartite(const DensityMatrix& rho) {
  const auto dims = rho.subsystem_dims();
  if (dims.size() != 3 || dims[0] != 2 || dims[1] != 2 || dims[2] != 2)
    throw std::invalid_argument("expected a three-qubit state");
}

double purity(const DensityMatrix& rho) {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
  double sum = 0.0;
  for (const auto& e : rho.matrix().entries()) sum += std::norm(e);
  return sum;
}

double fourth_root(double x) { return x == 0.0 ? 0.0 : std::exp(std::log(x) / 4.0); }

struct Singles {
  std::array<double, 3> foc_sq;
  std::array<double, 3> conc_sq;
};

Singles single_qubit_terms(const DensityMatrix& rho) {
  require_tripartite(rho);
  Singles s{};
  for (std::size_t i = 0; i < 3; ++i) {
    const DensityMatrix r = partial_trace(rho, {i});
    s.foc_sq[i] = std::max(0.0, 2.0 * purity(r) - 1.0);
    s.conc_sq[i] = 4.0 * std::max(0.0, det2(r.matrix()));
  }
  return s;
}

}  // namespace

double l1_coherence(const DensityMatrix& rho) {
  double sum = 0.0;
  const std::size_t n = rho.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) sum += std::abs(rho(i, j));
  return sum;
}

double foc_single(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw std::invalid_argument("expected a single-qubit state");
  return std::sqrt(std::max(0.0, 2.0 * purity(rho) - 1.0));
}

double foc_tripartite(const DensityMatrix& rho) {
  const Singles s = single_qubit_terms(rho);
  return std::sqrt((s.foc_sq[0] + s.foc_sq[1] + s.foc_sq[2]) / 3.0);
}

double one_to_rest_concurrence(const DensityMatrix& rho, std::size_t which) {
  require_tripartite(rho);
  if (which >= 3) throw std::out_of_range("subsystem out of range");
  const DensityMatrix r = partial_trace(rho, {which});
  return 2.0 * std::sqrt(std::max(0.0, det2(r.matrix())));
}

double global_concurrence(const DensityMatrix& rho) {
  const Singles s = single_qubit_terms(rho);
  return 0.5 * (s.conc_sq[0] + s.conc_sq[1] + s.conc_sq[2]);
}

ConcurrenceFill concurrence_fill_from_squares(double c0_sq, double c1_sq, double c2_sq) {
  const double q = 0.5 * (c0_sq + c1_sq + c2_sq);
  const double radicand = (16.0 / 3.0) * q * (q - c0_sq) * (q - c1_sq) * (q - c2_sq);
  if (radicand >= 0.0) return {fourth_root(radicand), false};
  return {0.0, -radicand >= kClampFlagThreshold};
}

ConcurrenceFill concurrence_fill(const DensityMatrix& rho) {
  const Singles s = single_qubit_terms(rho);
  return concurrence_fill_from_squares(s.conc_sq[0], s.conc_sq[1], s.conc_sq[2]);
}

MeasureReport full_report(const DensityMatrix& rho) {
  const Singles s = single_qubit_terms(rho);
  MeasureReport r;
  r.c_l1 = l1_coherence(rho);
  r.foc = std::sqrt((s.foc_sq[0] + s.foc_sq[1] + s.foc_sq[2]) / 3.0);
  r.gc = 0.5 * (s.conc_sq[0] + s.conc_sq[1] + s.conc_sq[2]);
  const ConcurrenceFill cf = concurrence_fill_from_squares(s.conc_sq[0], s.conc_sq[1], s.conc_sq[2]);
  r.cf = cf.value;
  r.cf_clamped = cf.clamped;
  r.tradeoff = r.foc * r.foc + r.cf;
  return r;
}

}  // namespace hawkw
