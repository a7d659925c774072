#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "cxmat.hpp"
#include "modes.hpp"
#include "oracle.hpp"
#include "states.hpp"

using namespace hawkw;

namespace {

ComplexMatrix random_density(std::size_t dim, std::mt19937& rng) {
  std::normal_distribution<double> n01;
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = Complex(n01(rng), n01(rng));
  ComplexMatrix rho = g * g.adjoint();
  return (1.0 / rho.trace().real()) * rho;
}

oracle::Mat to_oracle(const ComplexMatrix& m) {
  oracle::Mat r = oracle::zeros(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r[i][j] = m(i, j);
  return r;
}

}  // namespace

TEST_SUITE("cxmat") {
  TEST_CASE("tensor of identities") {
    CHECK(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));
    CHECK(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(4)).dim() == 8);
  }

  TEST_CASE("tensor layout puts the left factor most significant") {
    const auto z = ComplexMatrix::diagonal({1.0, -1.0});
    CHECK(tensor(z, z) == ComplexMatrix::diagonal({1.0, -1.0, -1.0, 1.0}));

    const auto x = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    const auto xi = tensor(x, ComplexMatrix::identity(2));
    CHECK(xi(0, 2) == Complex(1.0));
    CHECK(xi(1, 3) == Complex(1.0));
    CHECK(xi(0, 1) == Complex(0.0));
  }

  TEST_CASE("tensor is associative on exact inputs") {
    const auto a = ComplexMatrix::from_rows({{1.0, 2.0}, {Complex(0, 1), -3.0}});
    const auto b = ComplexMatrix::from_rows({{0.5, -1.0}, {4.0, Complex(2, -1)}});
    const auto c = ComplexMatrix::from_rows({{-2.0, 0.25}, {1.0, 8.0}});
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
  }

  TEST_CASE("partial trace keeps subsystems in original order") {
    const auto a = ComplexMatrix::diagonal({0.75, 0.25});
    const auto b = ComplexMatrix::diagonal({0.5, 0.5});
    const auto c = ComplexMatrix::from_rows({{0.9, 0.1}, {0.1, 0.1}});
    const DensityMatrix abc(tensor(tensor(a, b), c), {2, 2, 2});
    const auto ac = partial_trace(abc, {2, 0});
    CHECK(ac.subsystem_count() == 2);
    CHECK(max_abs_diff(ac.matrix(), tensor(a, c)) < 1e-15);
    CHECK(max_abs_diff(partial_trace(abc, {1}).matrix(), b) < 1e-15);
  }

  TEST_CASE("partial trace preserves trace") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 10; ++rep) {
      const DensityMatrix rho(random_density(16, rng), {2, 2, 2, 2});
      for (auto keep : {std::vector<std::size_t>{0}, {1, 3}, {0, 2, 3}}) {
        const auto r = partial_trace(rho, keep);
        CHECK(std::abs(r.matrix().trace() - Complex(1.0)) < 1e-13);
      }
    }
  }

  TEST_CASE("partial trace grouping invariance") {
    std::mt19937 rng(11);
    const DensityMatrix rho(random_density(32, rng), {2, 2, 2, 2, 2});
    const auto at_once = partial_trace(rho, {0, 1, 3});
    const auto stepwise = partial_trace(partial_trace(rho, {0, 1, 3, 4}), {0, 1, 2});
    CHECK(max_abs_diff(at_once.matrix(), stepwise.matrix()) < 1e-14);
  }

  TEST_CASE("partial trace rejects bad indices") {
    const DensityMatrix rho(ComplexMatrix::diagonal({0.5, 0.5, 0, 0}), {2, 2});
    CHECK_THROWS_WITH_AS(partial_trace(rho, {2}), "subsystem out of range", std::out_of_range);
    CHECK_THROWS(partial_trace(rho, std::vector<std::size_t>{}));
  }

  TEST_CASE("partial trace of the dilated W state") {
    const auto w0 = build_dilated_w(bogoliubov(0.0, 1.0), bogoliubov(0.0, 1.0)).density();
    const auto abc = partial_trace(w0, {mode::A, mode::B, mode::C});
    CHECK(max_abs_diff(abc.matrix(), w_state().density().matrix()) < 1e-14);

    const auto inf = bogoliubov(INFINITY, 1.0);
    const auto rho_b = partial_trace(build_dilated_w(inf, inf).density(), {mode::B});
    CHECK(max_abs_diff(rho_b.matrix(), ComplexMatrix::diagonal({1.0 / 3.0, 2.0 / 3.0})) < 1e-14);
  }

  TEST_CASE("hermitian eigenvalues: simple cases") {
    auto ev = hermitian_eigenvalues(ComplexMatrix::identity(2));
    REQUIRE(ev.size() == 2);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-15));

    ev = hermitian_eigenvalues(ComplexMatrix::diagonal({2.0 / 3.0, 1.0 / 3.0}));
    CHECK(ev[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(ev[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    const auto sy = ComplexMatrix::from_rows({{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}});
    ev = hermitian_eigenvalues(sy);
    CHECK(std::abs(ev[0] + 1.0) < 1e-14);
    CHECK(std::abs(ev[1] - 1.0) < 1e-14);
  }

  TEST_CASE("hermitian eigenvalues reject non-Hermitian input") {
    const auto m = ComplexMatrix::from_rows({{1.0, 2.0}, {0.0, 1.0}});
    CHECK_THROWS_WITH_AS(hermitian_eigenvalues(m), "not Hermitian", std::invalid_argument);
  }

  TEST_CASE("Jacobi matches the characteristic polynomial of reduced ABC at T=1") {
    const auto rho = reduce(Scenario::ABC, bogoliubov(1.0, 1.0));
    const auto ev = hermitian_eigenvalues(rho.matrix());
    double sum = 0.0;
    for (double e : ev) {
      CHECK(e >= -1e-10);
      sum += e;
    }
    CHECK(std::abs(sum - 1.0) < 1e-10);
    for (std::size_t i = 1; i < ev.size(); ++i) CHECK(ev[i - 1] <= ev[i]);

    const auto ref = oracle::charpoly(to_oracle(rho.matrix()));
    const auto mine = oracle::poly_from_roots(ev);
    REQUIRE(ref.size() == mine.size());
    for (std::size_t k = 0; k < ref.size(); ++k) {
      CHECK(std::abs(ref[k].imag()) < 1e-13);
      CHECK(std::abs(ref[k].real() - mine[k]) < 1e-12);
    }
  }

  TEST_CASE("Jacobi matches the characteristic polynomial on random matrices") {
    std::mt19937 rng(3);
    for (std::size_t dim : {2u, 3u, 5u, 8u}) {
      const auto m = random_density(dim, rng);
      const auto ev = hermitian_eigenvalues(m);
      const auto ref = oracle::charpoly(to_oracle(m));
      const auto mine = oracle::poly_from_roots(ev);
      for (std::size_t k = 0; k < ref.size(); ++k) CHECK(std::abs(ref[k].real() - mine[k]) < 1e-12);
    }
  }

  TEST_CASE("projector spectrum is one 1 and zeros") {
    std::mt19937 rng(5);
    std::normal_distribution<double> n01;
    std::vector<Complex> v(8);
    double norm = 0.0;
    for (auto& x : v) {
      x = Complex(n01(rng), n01(rng));
      norm += std::norm(x);
    }
    for (auto& x : v) x /= std::sqrt(norm);
    const auto ev = hermitian_eigenvalues(ComplexMatrix::projector(v));
    CHECK(std::abs(ev.back() - 1.0) < 1e-10);
    for (std::size_t i = 0; i + 1 < ev.size(); ++i) CHECK(std::abs(ev[i]) < 1e-10);
  }

  TEST_CASE("det2") {
    CHECK(det2(ComplexMatrix::diagonal({2.0 / 3.0, 1.0 / 3.0})) == doctest::Approx(2.0 / 9.0).epsilon(1e-15));
    CHECK(det2(ComplexMatrix::diagonal({0.5, 0.5})) == doctest::Approx(0.25).epsilon(1e-15));
    const std::vector<Complex> psi{Complex(0.6, 0.0), Complex(0.0, 0.8)};
    CHECK(std::abs(det2(ComplexMatrix::projector(psi))) < 1e-15);
    CHECK_THROWS_AS(det2(ComplexMatrix::identity(4)), std::invalid_argument);
  }

  TEST_CASE("density validity flags bad matrices") {
    CHECK(DensityMatrix(ComplexMatrix::diagonal({0.5, 0.5}), {2}).validity().ok());
    CHECK_FALSE(DensityMatrix(ComplexMatrix::diagonal({0.6, 0.5}), {2}).validity().ok());
    CHECK_FALSE(DensityMatrix(ComplexMatrix::diagonal({1.5, -0.5}), {2}).validity().ok());
    CHECK_FALSE(DensityMatrix(ComplexMatrix::from_rows({{0.5, 0.1}, {0.0, 0.5}}), {2}).validity().ok());
    CHECK_THROWS(DensityMatrix(ComplexMatrix::identity(4), {2, 3}));
  }

  TEST_CASE("pure state normalization and labels") {
    const double s = 1.0 / std::sqrt(2.0);
    const PureState bell({"A", "B"}, {s, 0.0, 0.0, s});
    CHECK(bell.qubit_count() == 2);
    CHECK(bell.position("B") == 1);
    CHECK(std::abs(bell.norm() - 1.0) < 1e-15);
    CHECK_THROWS(PureState({"A"}, {1.0, 1.0}));
    CHECK_THROWS(PureState({"A", "B"}, {1.0, 0.0}));
    CHECK_THROWS(bell.position("Z"));
  }
}
