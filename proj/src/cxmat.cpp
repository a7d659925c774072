#include "cxmat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hawkw {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
  if (entries_.size() != dim * dim) throw std::invalid_argument("entry count must equal dim^2");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  ComplexMatrix m(values.size());
  std::size_t i = 0;
  for (double v : values) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("matrix must be square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(n, std::move(entries));
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> amplitudes) {
  const std::size_t n = amplitudes.size();
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
  const std::size_t n = a.dim_;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexMatrix operator*(double s, ComplexMatrix m) {
  for (auto& e : m.entries_) e *= s;
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

namespace {

constexpr double kOffDiagonalTolerance = 1e-14;
constexpr int kMaxSweeps = 100;

double max_off_diagonal(const ComplexMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (i != j) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

// A <- U^H A U with U acting on (p, q):
//   U = [[c, s], [-s e^{-i phi}, c e^{-i phi}]],  phi = arg(a_pq),
// which zeroes a_pq.
void rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex phase_conj = std::conj(phase);
  const std::size_t n = a.dim();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - s * phase_conj * akq;
    a(k, q) = s * akp + c * phase_conj * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (!m.is_hermitian(1e-12)) throw std::invalid_argument("not Hermitian");
  ComplexMatrix a = m;
  const std::size_t n = a.dim();
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (max_off_diagonal(a) < kOffDiagonalTolerance) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
  }
  if (!converged && max_off_diagonal(a) >= kOffDiagonalTolerance)
    throw std::runtime_error("Jacobi iteration did not converge");

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

double det2(const ComplexMatrix& m) {
  if (m.dim() != 2) throw std::invalid_argument("det2 requires a 2x2 matrix");
  return m(0, 0).real() * m(1, 1).real() - std::norm(m(0, 1));
}

bool DensityValidity::ok() const noexcept {
  return hermitian_error <= 1e-12 && trace_error <= 1e-12 && min_eigenvalue >= -1e-10;
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> subsystem_dims)
    : matrix_(std::move(matrix)), dims_(std::move(subsystem_dims)) {
  if (dims_.empty()) throw std::invalid_argument("at least one subsystem required");
  std::size_t product = 1;
  for (std::size_t d : dims_) {
    if (d == 0) throw std::invalid_argument("subsystem dimension must be positive");
    product *= d;
  }
  if (product != matrix_.dim()) throw std::invalid_argument("subsystem dims do not match matrix dim");
}

DensityValidity DensityMatrix::validity() const {
  DensityValidity v;
  const std::size_t n = matrix_.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      v.hermitian_error = std::max(v.hermitian_error, std::abs(matrix_(i, j) - std::conj(matrix_(j, i))));
  v.trace_error = std::abs(matrix_.trace() - 1.0);
  if (v.hermitian_error <= 1e-12) {
    v.min_eigenvalue = hermitian_eigenvalues(matrix_).front();
  } else {
    v.min_eigenvalue = -std::numeric_limits<double>::infinity();
  }
  return v;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  const auto dims = rho.subsystem_dims();
  const std::size_t n = dims.size();
  if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");
  std::vector<bool> kept(n, false);
  for (std::size_t k : keep) {
    if (k >= n) throw std::out_of_range("subsystem out of range");
    kept[k] = true;
  }

  // Row-major strides: subsystem 0 is the most significant digit.
  std::vector<std::size_t> stride(n);
  std::size_t s = 1;
  for (std::size_t i = n; i-- > 0;) {
    stride[i] = s;
    s *= dims[i];
  }

  std::vector<std::size_t> kept_idx, traced_idx, out_dims;
  for (std::size_t i = 0; i < n; ++i) {
    if (kept[i]) {
      kept_idx.push_back(i);
      out_dims.push_back(dims[i]);
    } else {
      traced_idx.push_back(i);
    }
  }

  // Map a mixed-radix counter over `subset` onto offsets into the full index.
  auto offsets = [&](const std::vector<std::size_t>& subset) {
    std::size_t count = 1;
    for (std::size_t i : subset) count *= dims[i];
    std::vector<std::size_t> out(count);
    for (std::size_t c = 0; c < count; ++c) {
      std::size_t rem = c, off = 0;
      for (std::size_t j = subset.size(); j-- > 0;) {
        const std::size_t sub = subset[j];
        off += (rem % dims[sub]) * stride[sub];
        rem /= dims[sub];
      }
      out[c] = off;
    }
    return out;
  };
  const auto kept_off = offsets(kept_idx);
  const auto traced_off = offsets(traced_idx);

  const std::size_t dk = kept_off.size();
  ComplexMatrix out(dk);
  for (std::size_t r = 0; r < dk; ++r)
    for (std::size_t c = 0; c < dk; ++c) {
      Complex sum = 0.0;
      for (std::size_t t : traced_off) sum += rho(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = sum;
    }
  return DensityMatrix(std::move(out), std::move(out_dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

PureState::PureState(std::vector<std::string> labels, std::vector<Complex> amplitudes)
    : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
  if (labels_.empty()) throw std::invalid_argument("register must hold at least one qubit");
  if (amplitudes_.size() != (std::size_t{1} << labels_.size()))
    throw std::invalid_argument("amplitude count must be 2^qubits");
  if (std::abs(norm() - 1.0) > 1e-12) throw std::invalid_argument("state is not normalized");
}

std::size_t PureState::position(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("unknown mode label: " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

double PureState::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

DensityMatrix PureState::density() const {
  return DensityMatrix(ComplexMatrix::projector(amplitudes_), std::vector<std::size_t>(labels_.size(), 2));
}

}  // namespace hawkw
