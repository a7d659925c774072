#include <doctest.h>

#include <hawkw/hawkw.h>

#include <cmath>
#include <cstring>
#include <string>

TEST_SUITE("c_api") {
  TEST_CASE("version and status strings") {
    CHECK(std::string(hawkw_version()) == "1.0.0");
    CHECK(std::string(hawkw_status_string(HAWKW_OK)).size() > 0);
    CHECK(std::string(hawkw_status_string(HAWKW_ERR_NULL_POINTER)).size() > 0);
  }

  TEST_CASE("scenario names") {
    hawkw_scenario s;
    CHECK(hawkw_scenario_parse("Abc", &s) == HAWKW_OK);
    CHECK(s == HAWKW_SCENARIO_Abc);
    CHECK(std::string(hawkw_scenario_name(HAWKW_SCENARIO_ABc)) == "ABc");
    CHECK(hawkw_scenario_parse("XYZ", &s) == HAWKW_ERR_INVALID_ARGUMENT);
    CHECK(std::string(hawkw_last_error()).size() > 0);
    CHECK(hawkw_scenario_parse(nullptr, &s) == HAWKW_ERR_NULL_POINTER);
    CHECK(hawkw_scenario_parse("ABC", nullptr) == HAWKW_ERR_NULL_POINTER);
  }

  TEST_CASE("bogoliubov through the C API") {
    hawkw_mode_params p;
    REQUIRE(hawkw_bogoliubov(INFINITY, 1.0, &p) == HAWKW_OK);
    CHECK(p.alpha == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(hawkw_bogoliubov(1.0, -1.0, &p) == HAWKW_ERR_INVALID_ARGUMENT);
    CHECK(std::string(hawkw_last_error()) == "frequency must be positive");
    double t = 0.0;
    CHECK(hawkw_temperature_from_mass(1.0, &t) == HAWKW_OK);
    CHECK(t > 0.0);
  }

  TEST_CASE("state lifecycle") {
    hawkw_state* st = nullptr;
    REQUIRE(hawkw_state_create(HAWKW_SCENARIO_ABC, 0.0, 1.0, &st) == HAWKW_OK);
    size_t dim = 0;
    CHECK(hawkw_state_dim(st, &dim) == HAWKW_OK);
    CHECK(dim == 8);
    double re = 0, im = 0;
    CHECK(hawkw_state_entry(st, 1, 2, &re, &im) == HAWKW_OK);
    CHECK(re == doctest::Approx(1.0 / 3.0));
    CHECK(hawkw_state_entry(st, 8, 0, &re, &im) == HAWKW_ERR_OUT_OF_RANGE);

    hawkw_report r;
    CHECK(hawkw_state_measures(st, &r) == HAWKW_OK);
    CHECK(r.c_l1 == doctest::Approx(2.0));

    CHECK(hawkw_state_apply_damping(st, 1.0 / 3.0) == HAWKW_OK);
    CHECK(hawkw_state_measures(st, &r) == HAWKW_OK);
    CHECK(r.cf == doctest::Approx(56.0 / 81.0).epsilon(1e-12));
    CHECK(hawkw_state_apply_damping(st, 2.0) == HAWKW_ERR_INVALID_ARGUMENT);

    double herm, tr, mn;
    int valid = 0;
    CHECK(hawkw_state_check(st, &herm, &tr, &mn, &valid) == HAWKW_OK);
    CHECK(valid == 1);
    hawkw_state_destroy(st);
    hawkw_state_destroy(nullptr);

    CHECK(hawkw_state_create(HAWKW_SCENARIO_ABC, 0.0, 1.0, nullptr) == HAWKW_ERR_NULL_POINTER);
    CHECK(hawkw_state_dim(nullptr, &dim) == HAWKW_ERR_NULL_POINTER);
    CHECK(hawkw_state_create(static_cast<hawkw_scenario>(42), 0.0, 1.0, &st) == HAWKW_ERR_INVALID_ARGUMENT);
  }

  TEST_CASE("closed-form states and the printed table") {
    hawkw_state* st = nullptr;
    REQUIRE(hawkw_state_create_closed_form(HAWKW_SCENARIO_ABc, 1.0, 1.0, 1, 1.0 / 3.0, HAWKW_TABLE_PRINTED, &st) ==
            HAWKW_OK);
    double herm, tr, mn;
    int valid = 1;
    CHECK(hawkw_state_check(st, &herm, &tr, &mn, &valid) == HAWKW_OK);
    CHECK(valid == 0);
    CHECK(tr > 1e-3);
    hawkw_state_destroy(st);

    CHECK(hawkw_state_create_closed_form(HAWKW_SCENARIO_AbC, 1.0, 1.0, 0, 0.0, HAWKW_TABLE_CORRECTED, &st) !=
          HAWKW_OK);
  }

  TEST_CASE("evaluate and closed form agree") {
    hawkw_point p{HAWKW_SCENARIO_Abc, 0.8, 1.0, 1, 0.5};
    hawkw_report a, b;
    hawkw_mode_params params;
    REQUIRE(hawkw_evaluate(&p, &params, &a) == HAWKW_OK);
    REQUIRE(hawkw_closed_form(&p, HAWKW_TABLE_CORRECTED, &b) == HAWKW_OK);
    CHECK(std::abs(a.c_l1 - b.c_l1) < 1e-12);
    CHECK(std::abs(a.gc - b.gc) < 1e-12);
    CHECK(std::abs(a.cf - b.cf) < 1e-10);
    CHECK(params.temperature == 0.8);
    CHECK(hawkw_evaluate(&p, nullptr, &a) == HAWKW_OK);
    CHECK(hawkw_evaluate(nullptr, nullptr, &a) == HAWKW_ERR_NULL_POINTER);
    p.temperature = -1.0;
    CHECK(hawkw_evaluate(&p, nullptr, &a) == HAWKW_ERR_INVALID_ARGUMENT);
  }

  TEST_CASE("verify results") {
    hawkw_point p{HAWKW_SCENARIO_ABc, 1.0, 1.0, 1, 1.0 / 3.0};
    hawkw_verify_result* res = nullptr;
    REQUIRE(hawkw_verify(&p, HAWKW_TABLE_PRINTED, &res) == HAWKW_OK);
    size_t n = 0;
    CHECK(hawkw_verify_result_count(res, &n) == HAWKW_OK);
    CHECK(n >= 9);
    hawkw_deviation d;
    int clamp_ok = 0;
    CHECK(hawkw_verify_result_worst(res, &d, &clamp_ok) == HAWKW_OK);
    CHECK(std::string(d.quantity) == "matrix");
    const std::string entry = d.entry;
    CHECK((entry == "c_22" || entry == "c_33"));
    CHECK(hawkw_verify_result_item(res, n, &d) == HAWKW_ERR_OUT_OF_RANGE);
    hawkw_verify_result_destroy(res);

    p.scenario = HAWKW_SCENARIO_AbC;
    CHECK(hawkw_verify(&p, HAWKW_TABLE_CORRECTED, &res) == HAWKW_ERR_INVALID_ARGUMENT);
  }

  TEST_CASE("sweeps") {
    hawkw_sweep_config c;
    hawkw_sweep_config_init(&c);
    CHECK(c.t_points == 50);
    CHECK(c.t_scale == HAWKW_GRID_LOG);
    CHECK(c.has_gamma == 0);
    c.include_limits = 1;
    hawkw_sweep_result* r = nullptr;
    REQUIRE(hawkw_sweep_run(&c, &r) == HAWKW_OK);
    size_t n = 0;
    CHECK(hawkw_sweep_result_size(r, &n) == HAWKW_OK);
    CHECK(n == 52);
    hawkw_sweep_row row;
    CHECK(hawkw_sweep_result_row(r, 0, &row) == HAWKW_OK);
    CHECK(row.temperature == 0.0);
    CHECK(row.report.tradeoff == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hawkw_sweep_result_row(r, n, &row) == HAWKW_ERR_OUT_OF_RANGE);
    hawkw_sweep_result_destroy(r);

    c.t_points = 1;
    CHECK(hawkw_sweep_run(&c, &r) == HAWKW_ERR_INVALID_ARGUMENT);

    double grid[4];
    CHECK(hawkw_temperature_grid(1.0, 4.0, 4, HAWKW_GRID_LINEAR, grid) == HAWKW_OK);
    CHECK(grid[3] == 4.0);
    CHECK(hawkw_temperature_grid(1.0, 4.0, 4, HAWKW_GRID_LINEAR, nullptr) == HAWKW_ERR_NULL_POINTER);
  }
}
