#pragma once

#include <span>
#include <vector>

#include "cxmat.hpp"

namespace hawkw {

struct KrausChannel {
  std::vector<ComplexMatrix> operators;  // all 2x2

  // max |sum_k E_k^H E_k - I|
  double completeness_error() const;
};

// E0 = [[1, 0], [0, sqrt(1-gamma)]], E1 = [[0, sqrt(gamma)], [0, 0]].
KrausChannel ad_kraus(double gamma);

// sum over every Kraus index tuple of (E_i x E_j x ...) rho (E_i x E_j x ...)^H.
// Tuples are enumerated by mixed-radix counting, first qubit most significant.
DensityMatrix apply_product_channel(const DensityMatrix& rho, std::span<const KrausChannel> per_qubit);

}  // namespace hawkw
