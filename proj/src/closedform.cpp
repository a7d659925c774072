#include "closedform.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "channels.hpp"

namespace hawkw::closedform {

namespace {

void require_tabulated(Scenario s) {
  if (s != Scenario::ABC && s != Scenario::Abc && s != Scenario::ABc)
    throw std::invalid_argument("scenario has no closed form: " + std::string(scenario_name(s)));
}

void require_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("damping probability out of range");
}

std::string entry_name(const std::string& prefix, std::size_t row, std::size_t col) {
  return prefix + "_" + std::to_string(row + 1) + std::to_string(col + 1);
}

std::string undamped_prefix(Scenario s) { return "rho_" + std::string(scenario_name(s)); }

std::string damped_prefix(Scenario s) {
  switch (s) {
    case Scenario::ABC: return "a";
    case Scenario::Abc: return "b";
    default: return "c";
  }
}

// Entries (1-indexed, upper triangle) of three times the matrix.
struct RawEntry {
  std::size_t i, j;
  double v;
};

std::vector<NamedEntry> scale_and_name(const std::string& prefix, const std::vector<RawEntry>& raw) {
  std::vector<NamedEntry> out;
  out.reserve(raw.size());
  for (const auto& e : raw) out.push_back({entry_name(prefix, e.i - 1, e.j - 1), e.i - 1, e.j - 1, e.v / 3.0});
  return out;
}

DensityMatrix assemble(const std::vector<NamedEntry>& entries) {
  ComplexMatrix m(8);
  for (const auto& e : entries) {
    m(e.row, e.col) = e.value;
    m(e.col, e.row) = e.value;
  }
  return DensityMatrix(std::move(m), {2, 2, 2});
}

std::vector<RawEntry> raw_undamped(Scenario s, double a, double b) {
  const double a2 = a * a, b2 = b * b;
  switch (s) {
    case Scenario::ABC:
      return {{2, 2, a2},          {2, 3, a2},          {3, 3, a2},     {2, 5, a2 * a},
              {3, 5, a2 * a},      {4, 4, 2.0 * b2},    {4, 6, a * b2}, {4, 7, a * b2},
              {5, 5, a2 * a2},     {6, 6, a2 * b2},     {7, 7, a2 * b2}, {8, 8, b2 * b2}};
    case Scenario::Abc:
      return {{1, 1, 2.0 * a2},    {1, 6, a2 * b},      {1, 7, a2 * b}, {2, 2, b2},
              {2, 3, b2},          {3, 3, b2},          {2, 8, b2 * b}, {3, 8, b2 * b},
              {5, 5, a2 * a2},     {6, 6, a2 * b2},     {7, 7, a2 * b2}, {8, 8, b2 * b2}};
    case Scenario::ABc:
      return {{1, 1, a2},          {1, 4, a * b},       {1, 6, a2 * b}, {3, 3, 1.0},
              {3, 5, a2 * a},      {3, 8, b2 * b},      {4, 4, b2},     {4, 6, a * b2},
              {5, 5, a2 * a2},     {6, 6, a2 * b2},     {7, 7, a2 * b2}, {8, 8, b2 * b2}};
    default:
      require_tabulated(s);
      return {};
  }
}

std::vector<RawEntry> raw_damped(Scenario s, double a, double b, double g, EntryTable table) {
  const double a2 = a * a, b2 = b * b, b4 = b2 * b2;
  const double s1 = a2 + b2 * g;  // alpha^2 + beta^2 gamma
  const double r = 1.0 - g;
  switch (s) {
    case Scenario::ABC: {
      const double a11 = g * s1 * s1 + 2.0 * a2 * g + 2.0 * b2 * g * g;
      const double a22 = a2 * r + g * r * b2 * (a2 + b2 * g + 2.0);
      const double a44 = b2 * r * r * (b2 * g + 2.0);
      const double a55 = r * s1 * s1;
      const double a66 = r * r * b2 * s1;
      const double a88 = r * r * r * b4;
      const double a23 = r * a2;
      const double a25 = r * a * s1;
      const double a46 = r * r * a * b2;
      return {{1, 1, a11}, {2, 2, a22}, {3, 3, a22}, {4, 4, a44}, {5, 5, a55}, {6, 6, a66},
              {7, 7, a66}, {8, 8, a88}, {2, 3, a23}, {2, 5, a25}, {3, 5, a25}, {4, 6, a46},
              {4, 7, a46}};
    }
    case Scenario::Abc: {
      const double b11 = g * s1 * s1 + 2.0 * a2 + 2.0 * b2 * g;
      const double b22 = b2 * r * (a2 * g + b2 * g * g + 1.0);
      const double b44 = g * r * r * b4;
      const double b55 = r * s1 * s1;
      const double b66 = r * r * b2 * s1;
      const double b88 = r * r * r * b4;
      const double b23 = r * b2;
      const double b16 = r * b * s1;
      const double b28 = r * r * b2 * b;
      return {{1, 1, b11}, {2, 2, b22}, {3, 3, b22}, {4, 4, b44}, {5, 5, b55}, {6, 6, b66},
              {7, 7, b66}, {8, 8, b88}, {2, 3, b23}, {1, 6, b16}, {1, 7, b16}, {2, 8, b28},
              {3, 8, b28}};
    }
    case Scenario::ABc: {
      const double c11 = g * s1 * s1 + a2 + g + b2 * g * g;
      const double c22 = table == EntryTable::printed ? g * r * b2 * (a2 * g + b2 * g * g + 1.0)
                                                      : g * r * b2 * (1.0 + a2 + b2 * g);
      const double c33 = c22 + 1.0 - g;
      const double c44 = r * r * b2 * (1.0 + b2 * g);
      const double c55 = r * s1 * s1;
      const double c66 = r * r * b2 * s1;
      const double c88 = r * r * r * b4;
      const double c14 = r * a * b;
      const double c16 = r * b * s1;
      const double c35 = r * a * s1;
      const double c38 = r * r * b2 * b;
      const double c46 = r * r * a * b2;
      return {{1, 1, c11}, {2, 2, c22}, {3, 3, c33}, {4, 4, c44}, {5, 5, c55}, {6, 6, c66},
              {7, 7, c66}, {8, 8, c88}, {1, 4, c14}, {1, 6, c16}, {3, 5, c35}, {3, 8, c38},
              {4, 6, c46}};
    }
    default:
      require_tabulated(s);
      return {};
  }
}

// Heron-style fill from squared one-to-rest concurrences.
void fill_from_squares(const std::array<double, 3>& c_sq, MeasureReport& out) {
  const double q = (c_sq[0] + c_sq[1] + c_sq[2]) / 2.0;
  const double radicand = 16.0 / 3.0 * q * (q - c_sq[0]) * (q - c_sq[1]) * (q - c_sq[2]);
  out.gc = q;
  if (radicand < 0.0) {
    out.cf = 0.0;
    out.cf_clamped = radicand <= -1e-12;
  } else {
    out.cf = std::pow(radicand, 0.25);
    out.cf_clamped = false;
  }
}

std::array<char, 3> scenario_labels(Scenario s) {
  switch (s) {
    case Scenario::ABC: return {'A', 'B', 'C'};
    case Scenario::Abc: return {'A', 'b', 'c'};
    case Scenario::ABc: return {'A', 'B', 'c'};
    case Scenario::AbC: return {'A', 'b', 'C'};
  }
  return {'?', '?', '?'};
}

}  // namespace

MeasureReport cf_measures(Scenario s, const ModeParams& params) {
  require_tabulated(s);
  const double a = params.alpha, b = params.beta;
  const double a2 = a * a, b2 = b * b, a4 = a2 * a2, b4 = b2 * b2;
  MeasureReport r;
  switch (s) {
    case Scenario::ABC:
      r.c_l1 = 2.0 / 3.0 * (a2 + 2.0 * a);
      r.foc = 1.0 / 3.0 * std::sqrt((16.0 * (a4 + b2 + b4) - 13.0) / 3.0);
      r.gc = 4.0 / 9.0 * (1.0 + 2.0 * a2 * (1.0 + 2.0 * b2));
      break;
    case Scenario::Abc:
      r.c_l1 = 2.0 / 3.0 * (b2 + 2.0 * b);
      r.foc = 1.0 / 3.0 * std::sqrt((16.0 * (a4 + a2 + b4) - 13.0) / 3.0);
      r.gc = 4.0 / 9.0 * (1.0 + 2.0 * b2 * (1.0 + 2.0 * a2));
      break;
    default:
      r.c_l1 = 2.0 / 3.0 * (a + b + a * b);
      r.foc = 1.0 / 3.0 * std::sqrt((16.0 * (a4 + b4) - 5.0) / 3.0);
      r.gc = 8.0 / 9.0 * (1.0 + 2.0 * a2 * b2);
      break;
  }
  if (s == Scenario::ABc) {
    r.cf = 4.0 / 3.0 * a * b * std::pow(64.0 / 27.0 * r.gc, 0.25);
  } else {
    const double radicand = 1.0 / 3.0 * r.gc * (r.gc - 8.0 / 9.0);
    if (radicand < 0.0) {
      r.cf = 0.0;
      // Same scale as the generic radicand: (4/3)^4 * radicand.
      r.cf_clamped = 256.0 / 81.0 * radicand <= -1e-12;
    } else {
      r.cf = 4.0 / 3.0 * std::pow(radicand, 0.25);
    }
  }
  r.tradeoff = r.foc * r.foc + r.cf;
  return r;
}

MeasureReport cf_measures(Scenario s, const ModeParams& params, double gamma, EntryTable table) {
  require_tabulated(s);
  require_gamma(gamma);
  MeasureReport r;

  const auto entries = raw_damped(s, params.alpha, params.beta, gamma, table);
  auto entry = [&](std::size_t i, std::size_t j) {
    for (const auto& e : entries)
      if (e.i == i && e.j == j) return e.v;
    throw std::logic_error("missing table entry");
  };
  switch (s) {
    case Scenario::ABC:
      r.c_l1 = 2.0 / 3.0 * (entry(2, 3) + 2.0 * entry(2, 5) + 2.0 * entry(4, 6));
      break;
    case Scenario::Abc:
      r.c_l1 = 2.0 / 3.0 * (entry(2, 3) + 2.0 * entry(1, 6) + 2.0 * entry(2, 8));
      break;
    default:
      r.c_l1 = 2.0 / 3.0 * (entry(1, 4) + entry(1, 6) + entry(3, 5) + entry(3, 8) + entry(4, 6));
      break;
  }

  const auto labels = scenario_labels(s);
  std::array<double, 3> d_sq{}, c_sq{};
  for (std::size_t k = 0; k < 3; ++k) {
    const DensityMatrix single = cf_reduced_single(s, labels[k], params, gamma);
    const double p = single(0, 0).real(), q = single(1, 1).real();
    d_sq[k] = std::max(0.0, 2.0 * (p * p + q * q) - 1.0);
    c_sq[k] = 4.0 * p * q;
  }
  r.foc = std::sqrt((d_sq[0] + d_sq[1] + d_sq[2]) / 3.0);
  fill_from_squares(c_sq, r);
  r.tradeoff = r.foc * r.foc + r.cf;
  return r;
}

ClosedFormPoint cf_point(Scenario s, const ModeParams& params, std::optional<double> gamma, EntryTable table) {
  ClosedFormPoint p;
  p.scenario = s;
  p.gamma = gamma;
  p.alpha = params.alpha;
  p.beta = params.beta;
  p.values = gamma ? cf_measures(s, params, *gamma, table) : cf_measures(s, params);
  return p;
}

std::vector<NamedEntry> cf_matrix_entries(Scenario s, const ModeParams& params) {
  require_tabulated(s);
  return scale_and_name(undamped_prefix(s), raw_undamped(s, params.alpha, params.beta));
}

DensityMatrix cf_matrix(Scenario s, const ModeParams& params) { return assemble(cf_matrix_entries(s, params)); }

std::vector<NamedEntry> cf_evolved_entries(Scenario s, const ModeParams& params, double gamma, EntryTable table) {
  require_tabulated(s);
  require_gamma(gamma);
  return scale_and_name(damped_prefix(s), raw_damped(s, params.alpha, params.beta, gamma, table));
}

DensityMatrix cf_evolved_matrix(Scenario s, const ModeParams& params, double gamma, EntryTable table) {
  return assemble(cf_evolved_entries(s, params, gamma, table));
}

DensityMatrix cf_reduced_single(Scenario s, char label, const ModeParams& params, std::optional<double> gamma) {
  const auto labels = scenario_labels(s);
  if (std::find(labels.begin(), labels.end(), label) == labels.end())
    throw std::invalid_argument(std::string("mode ") + label + " is not part of scenario " +
                                std::string(scenario_name(s)));
  const double g = gamma.value_or(0.0);
  require_gamma(g);
  const double a2 = params.alpha * params.alpha, b2 = params.beta * params.beta;
  double p = 0.0, q = 0.0;
  switch (label) {
    case 'A':
      p = 2.0 + g;
      q = 1.0 - g;
      break;
    case 'B':
    case 'C':
      p = 2.0 * a2 + g * (1.0 + 2.0 * b2);
      q = (1.0 - g) * (1.0 + 2.0 * b2);
      break;
    case 'b':
    case 'c':
      p = 1.0 + 2.0 * a2 + 2.0 * b2 * g;
      q = 2.0 * b2 * (1.0 - g);
      break;
    default:
      throw std::invalid_argument("unknown mode label");
  }
  return DensityMatrix(ComplexMatrix::diagonal({p / 3.0, q / 3.0}), {2});
}

const Deviation& VerifyReport::worst() const {
  if (items.empty()) throw std::logic_error("empty verification report");
  return *std::max_element(items.begin(), items.end(),
                           [](const Deviation& x, const Deviation& y) { return x.abs_dev < y.abs_dev; });
}

double VerifyReport::max_deviation() const { return items.empty() ? 0.0 : worst().abs_dev; }

VerifyReport verify_point(Scenario s, const ModeParams& params, std::optional<double> gamma, EntryTable table) {
  require_tabulated(s);
  VerifyReport rep;
  rep.scenario = s;
  rep.temperature = params.temperature;
  rep.gamma = gamma;

  // Numeric route.
  DensityMatrix numeric = reduce(s, params);
  if (gamma) {
    const KrausChannel ch = ad_kraus(*gamma);
    const std::array<KrausChannel, 3> per_qubit{ch, ch, ch};
    numeric = apply_product_channel(numeric, per_qubit);
  }
  const MeasureReport num = full_report(numeric);

  // Closed-form route.
  const DensityMatrix closed = gamma ? cf_evolved_matrix(s, params, *gamma, table) : cf_matrix(s, params);
  const MeasureReport cf = gamma ? cf_measures(s, params, *gamma, table) : cf_measures(s, params);

  const std::string prefix = gamma ? damped_prefix(s) : undamped_prefix(s);
  Deviation m{"matrix", entry_name(prefix, 0, 0), 0.0, 0.0, -1.0};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const double d = std::abs(numeric(i, j) - closed(i, j));
      if (d > m.abs_dev) m = {"matrix", entry_name(prefix, i, j), numeric(i, j).real(), closed(i, j).real(), d};
    }
  rep.items.push_back(m);

  const auto labels = scenario_labels(s);
  for (std::size_t k = 0; k < 3; ++k) {
    const DensityMatrix n1 = partial_trace(numeric, {k});
    const DensityMatrix c1 = cf_reduced_single(s, labels[k], params, gamma);
    Deviation d{std::string("rho_") + labels[k], "", 0.0, 0.0, -1.0};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        const double dev = std::abs(n1(i, j) - c1(i, j));
        if (dev > d.abs_dev) {
          d.entry = d.quantity + "_" + std::to_string(i + 1) + std::to_string(j + 1);
          d.numeric = n1(i, j).real();
          d.closed = c1(i, j).real();
          d.abs_dev = dev;
        }
      }
    rep.items.push_back(d);
  }

  auto scalar = [&](const char* name, double x, double y) {
    rep.items.push_back({name, "", x, y, std::abs(x - y)});
  };
  scalar("c_l1", num.c_l1, cf.c_l1);
  scalar("foc", num.foc, cf.foc);
  scalar("gc", num.gc, cf.gc);
  scalar("cf", num.cf, cf.cf);
  scalar("tradeoff", num.tradeoff, cf.tradeoff);
  rep.clamp_agrees = num.cf_clamped == cf.cf_clamped;
  return rep;
}

}  // namespace hawkw::closedform
