#include <doctest.h>

#include <cmath>
#include <limits>
#include <optional>
#include <set>

#include "closedform.hpp"
#include "modes.hpp"
#include "oracle.hpp"
#include "states.hpp"
#include "sweep.hpp"

using namespace hawkw;
using namespace hawkw::closedform;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

std::vector<double> grid52() {
  auto g = temperature_grid(0.05, 10.0, 50, GridScale::log);
  g.insert(g.begin(), 0.0);
  g.push_back(kInf);
  return g;
}

const std::vector<std::optional<double>> kGammas{std::nullopt, 0.0, 1.0 / 3.0, 0.5, 2.0 / 3.0};

// Damped state from the explicit bitwise oracle, independent of both
// library pipelines.
oracle::Mat reference_state(Scenario s, const ModeParams& p, std::optional<double> g) {
  const auto k = kept_modes(s);
  auto rho = oracle::reduce_pure(oracle::dilated_w(p.alpha, p.beta), 5, {k.begin(), k.end()});
  if (g) rho = oracle::damp_all(rho, 3, *g);
  return rho;
}

}  // namespace

TEST_SUITE("closedform") {
  TEST_CASE("undamped measure formulas at the limits") {
    const auto abc = cf_measures(Scenario::ABC, bogoliubov(0.0, 1.0));
    CHECK(std::abs(abc.c_l1 - 2.0) < 1e-15);
    CHECK(std::abs(abc.foc - 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(abc.gc - 4.0 / 3.0) < 1e-15);
    CHECK(std::abs(abc.cf - 8.0 / 9.0) < 1e-15);

    const auto abc_i = cf_measures(Scenario::Abc, bogoliubov(0.0, 1.0));
    CHECK(abc_i.c_l1 == 0.0);
    CHECK(std::abs(abc_i.gc - 4.0 / 9.0) < 1e-15);
    CHECK(std::abs(abc_i.foc - std::sqrt(19.0 / 27.0)) < 1e-15);

    const auto abc_m = cf_measures(Scenario::ABc, bogoliubov(kInf, 1.0));
    CHECK(std::abs(abc_m.c_l1 - 2.0 / 3.0 * (std::sqrt(2.0) + 0.5)) < 1e-15);
    CHECK(abc_m.c_l1 == doctest::Approx(1.276142).epsilon(1e-6));
    CHECK(std::abs(abc_m.foc - 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(abc_m.gc - 4.0 / 3.0) < 1e-15);
    CHECK(std::abs(abc_m.cf - 8.0 / 9.0) < 1e-14);
    CHECK(std::abs(abc_m.tradeoff - 1.0) < 1e-14);
  }

  TEST_CASE("printed matrices at chosen entries") {
    const auto w = cf_matrix(Scenario::ABC, bogoliubov(0.0, 1.0));
    CHECK(max_abs_diff(w.matrix(), w_state().density().matrix()) < 1e-15);
    for (double t : {0.0, 0.5, 2.0, kInf}) {
      const auto p = bogoliubov(t, 1.0);
      CHECK(std::abs(cf_matrix(Scenario::Abc, p)(0, 0).real() - 2.0 * p.alpha * p.alpha / 3.0) < 1e-15);
      CHECK(std::abs(cf_matrix(Scenario::ABc, p)(2, 2).real() - 1.0 / 3.0) < 1e-15);
    }
    CHECK_THROWS(cf_matrix(Scenario::AbC, bogoliubov(1.0, 1.0)));
  }

  TEST_CASE("evolved tables at chosen entries") {
    const auto a = cf_evolved_matrix(Scenario::ABC, bogoliubov(0.0, 1.0), 1.0 / 3.0);
    CHECK(std::abs(a(0, 0).real() - 1.0 / 3.0) < 1e-15);
    for (double t : {0.0, 0.7, kInf}) {
      const auto p = bogoliubov(t, 1.0);
      CHECK(max_abs_diff(cf_evolved_matrix(Scenario::ABC, p, 0.0).matrix(), cf_matrix(Scenario::ABC, p).matrix()) <
            1e-15);
      CHECK(std::abs(cf_evolved_matrix(Scenario::Abc, p, 1.0)(7, 7)) == 0.0);
    }
  }

  TEST_CASE("entry names are one-indexed symbols") {
    const auto entries = cf_evolved_entries(Scenario::ABC, bogoliubov(1.0, 1.0), 0.5);
    std::set<std::string> names;
    for (const auto& e : entries) {
      CHECK(e.row <= e.col);
      names.insert(e.name);
    }
    CHECK(names.count("a_11") == 1);
    CHECK(names.count("a_46") == 1);
    CHECK(names.count("a_23") == 1);
    const auto c = cf_evolved_entries(Scenario::ABc, bogoliubov(1.0, 1.0), 0.5);
    bool has_c22 = false;
    for (const auto& e : c) has_c22 = has_c22 || (e.name == "c_22" && e.row == 1 && e.col == 1);
    CHECK(has_c22);
  }

  TEST_CASE("single-mode appendix states") {
    const auto p0 = bogoliubov(0.0, 1.0), pinf = bogoliubov(kInf, 1.0);
    CHECK(max_abs_diff(cf_reduced_single(Scenario::ABC, 'A', p0).matrix(),
                       ComplexMatrix::diagonal({2.0 / 3.0, 1.0 / 3.0})) < 1e-15);
    CHECK(max_abs_diff(cf_reduced_single(Scenario::ABC, 'A', p0, 1.0 / 3.0).matrix(),
                       ComplexMatrix::diagonal({7.0 / 9.0, 2.0 / 9.0})) < 1e-15);
    CHECK(max_abs_diff(cf_reduced_single(Scenario::Abc, 'b', pinf).matrix(),
                       ComplexMatrix::diagonal({2.0 / 3.0, 1.0 / 3.0})) < 1e-15);
    CHECK_THROWS_AS(cf_reduced_single(Scenario::ABC, 'b', p0), std::invalid_argument);
    CHECK_THROWS_AS(cf_reduced_single(Scenario::ABc, 'x', p0), std::invalid_argument);
  }

  TEST_CASE("tables agree with the bitwise reference") {
    for (auto s : kTabulatedScenarios)
      for (const auto& g : kGammas)
        for (double t : grid52()) {
          const auto p = bogoliubov(t, 1.0);
          const auto table = g ? cf_evolved_matrix(s, p, *g) : cf_matrix(s, p);
          const auto ref = reference_state(s, p, g);
          double d = 0.0;
          for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) d = std::max(d, std::abs(table(i, j) - ref[i][j]));
          CHECK_MESSAGE(d < 1e-14, scenario_name(s), " T=", t);
        }
  }

  TEST_CASE("every table is a valid state") {
    for (auto s : kTabulatedScenarios)
      for (const auto& g : kGammas)
        for (double t : grid52()) {
          const auto p = bogoliubov(t, 1.0);
          const auto m = g ? cf_evolved_matrix(s, p, *g) : cf_matrix(s, p);
          CHECK(m.validity().ok());
        }
  }

  TEST_CASE("the published damped ABc table loses trace") {
    const auto p = bogoliubov(1.0, 1.0);
    const auto printed = cf_evolved_matrix(Scenario::ABc, p, 1.0 / 3.0, EntryTable::printed);
    CHECK_FALSE(printed.validity().ok());
    CHECK(std::abs(printed.matrix().trace().real() - 1.0) > 1e-3);

    const auto report = verify_point(Scenario::ABc, p, 1.0 / 3.0, EntryTable::printed);
    const auto& worst = report.worst();
    CHECK(worst.quantity == "matrix");
    CHECK((worst.entry == "c_22" || worst.entry == "c_33"));
    CHECK(worst.abs_dev > 1e-3);

    // With no damping or full damping the two variants coincide.
    for (double g : {0.0, 1.0})
      CHECK(max_abs_diff(cf_evolved_matrix(Scenario::ABc, p, g, EntryTable::printed).matrix(),
                         cf_evolved_matrix(Scenario::ABc, p, g).matrix()) < 1e-15);
  }

  TEST_CASE("numeric pipeline equals closed forms on the full grid") {
    for (auto s : kTabulatedScenarios)
      for (const auto& g : kGammas)
        for (double t : grid52()) {
          const auto r = verify_point(s, bogoliubov(t, 1.0), g);
          CHECK(r.clamp_agrees);
          for (const auto& d : r.items) {
            // The fourth root amplifies round-off where its radicand is tiny.
            const double tol = d.quantity == "cf" || d.quantity == "tradeoff" ? 1e-10 : 1e-12;
            CHECK_MESSAGE(d.abs_dev < tol, scenario_name(s), " T=", t, " ", d.quantity, " ", d.entry);
          }
        }
  }

  TEST_CASE("verify point at T=1 without damping") {
    const auto r = verify_point(Scenario::ABC, bogoliubov(1.0, 1.0), std::nullopt);
    CHECK(r.max_deviation() < 1e-12);
    std::set<std::string> q;
    for (const auto& d : r.items) q.insert(d.quantity);
    for (const char* name : {"matrix", "rho_A", "rho_B", "rho_C", "c_l1", "foc", "gc", "cf", "tradeoff"})
      CHECK_MESSAGE(q.count(name) == 1, name);
  }

  TEST_CASE("damped ABC at T=0 and gamma=1/3") {
    const auto p = bogoliubov(0.0, 1.0);
    const auto r = verify_point(Scenario::ABC, p, 1.0 / 3.0);
    CHECK(r.max_deviation() < 1e-12);
    const auto m = cf_measures(Scenario::ABC, p, 1.0 / 3.0);
    CHECK(std::abs(m.c_l1 - 4.0 / 3.0) < 1e-12);
    CHECK(std::abs(m.foc - 5.0 / 9.0) < 1e-12);
    CHECK(std::abs(m.gc - 28.0 / 27.0) < 1e-12);
    CHECK(std::abs(m.cf - 56.0 / 81.0) < 1e-12);
    CHECK(std::abs(m.tradeoff - 1.0) < 1e-12);
  }

  TEST_CASE("damped Abc concurrence fill switches on at Q = C_A^2") {
    // For Abc the two interior modes carry equal concurrence, so F needs Q >= C_A^2.
    for (double g : {1.0 / 3.0, 0.5}) {
      const double threshold = 4.0 * (2.0 + g) * (1.0 - g) / 9.0;
      for (double t : temperature_grid(0.05, 10.0, 20, GridScale::log)) {
        const auto p = bogoliubov(t, 1.0);
        const auto r = verify_point(Scenario::Abc, p, g);
        CHECK(r.clamp_agrees);
        CHECK(r.max_deviation() < 1e-10);
        const auto m = cf_measures(Scenario::Abc, p, g);
        if (m.gc < threshold - 1e-9) {
          CHECK(m.cf == 0.0);
          CHECK(m.cf_clamped);
        }
        if (m.gc > threshold + 1e-9) {
          CHECK(m.cf > 0.0);
          CHECK_FALSE(m.cf_clamped);
        }
      }
    }
    CHECK(4.0 * (2.0 + 1.0 / 3.0) * (1.0 - 1.0 / 3.0) / 9.0 == doctest::Approx(56.0 / 81.0).epsilon(1e-15));
  }

  TEST_CASE("mirror scenario has no closed form") {
    CHECK_THROWS(verify_point(Scenario::AbC, bogoliubov(1.0, 1.0), std::nullopt));
    CHECK_THROWS(cf_measures(Scenario::AbC, bogoliubov(1.0, 1.0)));
  }
}
