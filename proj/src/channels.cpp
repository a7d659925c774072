#include "channels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hawkw {

double KrausChannel::completeness_error() const {
  if (operators.empty()) throw std::invalid_argument("channel has no Kraus operators");
  ComplexMatrix sum(operators.front().dim());
  for (const auto& e : operators) sum += e.adjoint() * e;
  return max_abs_diff(sum, ComplexMatrix::identity(sum.dim()));
}

KrausChannel ad_kraus(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("damping probability out of range");
  KrausChannel ch;
  ch.operators.push_back(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}}));
  ch.operators.push_back(ComplexMatrix::from_rows({{0.0, std::sqrt(gamma)}, {0.0, 0.0}}));
  return ch;
}

DensityMatrix apply_product_channel(const DensityMatrix& rho, std::span<const KrausChannel> per_qubit) {
  const auto dims = rho.subsystem_dims();
  if (per_qubit.size() != dims.size()) throw std::invalid_argument("one channel per subsystem required");
  for (std::size_t q = 0; q < dims.size(); ++q) {
    if (dims[q] != 2) throw std::invalid_argument("channels act on qubit subsystems only");
    if (per_qubit[q].operators.empty()) throw std::invalid_argument("channel has no Kraus operators");
    for (const auto& e : per_qubit[q].operators)
      if (e.dim() != 2) throw std::invalid_argument("Kraus operators must be 2x2");
  }

  const std::size_t n = per_qubit.size();
  std::vector<std::size_t> digits(n, 0);
  ComplexMatrix out(rho.dim());
  while (true) {
    ComplexMatrix k = per_qubit[0].operators[digits[0]];
    for (std::size_t q = 1; q < n; ++q) k = tensor(k, per_qubit[q].operators[digits[q]]);
    out += k * rho.matrix() * k.adjoint();

    // Increment, last qubit fastest.
    std::size_t q = n;
    while (q-- > 0) {
      if (++digits[q] < per_qubit[q].operators.size()) break;
      digits[q] = 0;
    }
    if (q == static_cast<std::size_t>(-1)) break;
  }
  return DensityMatrix(std::move(out), std::vector<std::size_t>(dims.begin(), dims.end()));
}

}  // namespace hawkw
