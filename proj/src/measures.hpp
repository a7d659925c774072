#pragma once

// Coherence and entanglement measures of three-qubit states.
//
// The concurrence-fill is the pure-state formula applied verbatim to mixed
// reductions, with one-to-rest concurrences C_i = 2 sqrt(det rho_i). That is
// the computation carried out in the literature for these states; it is not
// a general mixed-state entanglement monotone.

#include <cstddef>

#include "cxmat.hpp"

namespace hawkw {

struct MeasureReport {
  double c_l1 = 0.0;      // sum of off-diagonal moduli
  double foc = 0.0;       // first-order coherence D
  double gc = 0.0;        // global concurrence Q
  double cf = 0.0;        // concurrence-fill F
  double tradeoff = 0.0;  // foc^2 + cf
  bool cf_clamped = false;
};

struct ConcurrenceFill {
  double value = 0.0;
  // The radicand was negative by at least 1e-12 and the value was set to 0.
  bool clamped = false;
};

double l1_coherence(const DensityMatrix& rho);

// sqrt(max(0, 2 tr(rho^2) - 1)) for a single qubit.
double foc_single(const DensityMatrix& rho);

// RMS of the three single-qubit FOCs.
double foc_tripartite(const DensityMatrix& rho);

// 2 sqrt(max(0, det rho_which)).
double one_to_rest_concurrence(const DensityMatrix& rho, std::size_t which);

double global_concurrence(const DensityMatrix& rho);

ConcurrenceFill concurrence_fill(const DensityMatrix& rho);

// Same rule, from the three squared one-to-rest concurrences.
ConcurrenceFill concurrence_fill_from_squares(double c0_sq, double c1_sq, double c2_sq);

MeasureReport full_report(const DensityMatrix& rho);

}  // namespace hawkw
