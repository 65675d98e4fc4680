#include "signed_extremal/char_poly.hpp"

#include <algorithm>
#include <cmath>

#include "signed_extremal/errors.hpp"

namespace sx {

int CharPolyId::graph_order() const {
  switch (family) {
    case CharPolyFamily::Gst:
    case CharPolyFamily::F1Gen:
    case CharPolyFamily::F2Gen:
      return a + b + 2;
    case CharPolyFamily::F1S1:
    case CharPolyFamily::F2S2:
      return a;
    case CharPolyFamily::F3:
      return a + b + 3;
  }
  return 0;
}

std::string CharPolyId::name() const {
  auto two = [&](const char* f) { return std::string(f) + "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };
  auto one = [&](const char* f) { return std::string(f) + "(n=" + std::to_string(a) + ")"; };
  switch (family) {
    case CharPolyFamily::Gst: return two("f");
    case CharPolyFamily::F1S1: return one("f1");
    case CharPolyFamily::F1Gen: return two("f1");
    case CharPolyFamily::F2Gen: return two("f2");
    case CharPolyFamily::F2S2: return one("f2");
    case CharPolyFamily::F3: return two("f3");
  }
  return "?";
}

void validate(const CharPolyId& id) {
  auto fail = [&](const char* why) { throw InvalidArgument(id.name() + ": " + why); };
  switch (id.family) {
    case CharPolyFamily::Gst:
      if (id.a < 1 || id.b < 1) fail("requires s, t >= 1");
      break;
    case CharPolyFamily::F1S1:
      if (id.a < 5) fail("requires n >= 5");
      break;
    case CharPolyFamily::F1Gen:
      if (id.a < 2 || id.b < 2) fail("requires s, t >= 2");
      break;
    case CharPolyFamily::F2Gen:
      if (id.a < 3 || id.b < 1) fail("requires s >= 3 and t >= 1");
      break;
    case CharPolyFamily::F2S2:
      if (id.a < 5) fail("requires n >= 5");
      break;
    case CharPolyFamily::F3:
      if (id.a < 1 || id.b < 1) fail("requires s', t' >= 1");
      break;
  }
}

std::vector<long long> char_poly_coefficients(const CharPolyId& id) {
  validate(id);
  const long long s = id.a;
  const long long t = id.b;
  const long long n = id.a;
  switch (id.family) {
    case CharPolyFamily::Gst:
      return {3 * s * t + s + t - 1, 2 * s * t - 2, -2 * s - 2 * t, 2 - s - t, 1};
    case CharPolyFamily::F1S1:
      return {5 - n, 3 * n - 11, n - 7, 9 - 3 * n, 5 - n, 1};
    case CharPolyFamily::F1Gen:
      return {3 - s - t, -4 + 4 * s + 4 * t - 2 * s * t, 3 * s * t + s + t - 7, 2 * s * t - 4 * s - 4 * t,
              6 - 4 * s - 4 * t, 4 - s - t, 1};
    case CharPolyFamily::F2Gen:
      return {0, -4 + 2 * s + 4 * t - 2 * s * t, -5 + s - 3 * t + 3 * s * t, 2 - 4 * s - 4 * t + 2 * s * t,
              6 - 4 * s - 4 * t, 4 - s - t, 1};
    case CharPolyFamily::F2S2:
      return {0, 0, 3 * n - 15, 9 - 3 * n, 5 - n, 1};
    case CharPolyFamily::F3:
      return {s + t - 2 * s * t, -1 + 2 * s + 2 * t + s * t, -2 - s - t + 2 * s * t, -3 * s - 3 * t, 2 - s - t, 1};
  }
  return {};
}

double poly_eval(const std::vector<long long>& coeffs, double x) {
  long double acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + static_cast<long double>(*it);
  return static_cast<double>(acc);
}

double poly_scale(const std::vector<long long>& coeffs, double x) {
  double acc = 0, power = 1;
  for (long long c : coeffs) {
    acc += std::fabs(static_cast<double>(c)) * power;
    power *= std::fabs(x);
  }
  return acc;
}

double char_poly_eval(const CharPolyId& id, double x) { return poly_eval(char_poly_coefficients(id), x); }

namespace {

double eval(const std::vector<double>& c, double x) {
  long double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return static_cast<double>(acc);
}

double scale(const std::vector<double>& c, double x) {
  double acc = 0, power = 1;
  for (double v : c) {
    acc += std::fabs(v) * power;
    power *= std::fabs(x);
  }
  return acc;
}

double bisect(const std::vector<double>& c, double a, double b, double fa, double xtol) {
  for (int it = 0; it < 400 && b - a > xtol * std::max(1.0, std::fabs(a)); ++it) {
    const double mid = 0.5 * (a + b);
    const double fm = eval(c, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (fa < 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> real_roots(const std::vector<double>& coeffs, double lo, double hi, double xtol) {
  std::vector<double> c = coeffs;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.size() <= 1) return {};
  if (c.size() == 2) {
    const double r = -c[0] / c[1];
    if (r >= lo && r <= hi) return {r};
    return {};
  }
  std::vector<double> deriv(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) deriv[i - 1] = c[i] * static_cast<double>(i);

  std::vector<double> points{lo};
  for (double x : real_roots(deriv, lo, hi, xtol))
    if (x > lo && x < hi) points.push_back(x);
  points.push_back(hi);

  std::vector<double> roots, multiple;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const double x = points[k];
    const double fx = eval(c, x);
    const bool interior = k > 0 && k + 1 < points.size();
    if (fx == 0.0 || (interior && std::fabs(fx) <= 1e-12 * scale(c, x))) {
      roots.push_back(x);
      if (interior) multiple.push_back(x);
    }
    if (k + 1 == points.size()) break;
    const double y = points[k + 1];
    const double fy = eval(c, y);
    if (fx != 0.0 && fy != 0.0 && (fx < 0) != (fy < 0)) roots.push_back(bisect(c, x, y, fx, xtol));
  }
  // Rounding noise around a multiple root can fake a sign change next to it.
  std::erase_if(roots, [&](double r) {
    for (double m : multiple)
      if (r != m && std::fabs(r - m) < 1e-7 * std::max(1.0, std::fabs(m))) return true;
    return false;
  });
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double r : roots)
    if (out.empty() || r - out.back() > 1e-10 * std::max(1.0, std::fabs(r))) out.push_back(r);
  return out;
}

double largest_root(const CharPolyId& id) {
  const auto ic = char_poly_coefficients(id);
  std::vector<double> c(ic.begin(), ic.end());
  const auto roots = real_roots(c, 0.0, static_cast<double>(id.graph_order()), 1e-15);
  if (roots.empty()) throw NumericalError(id.name() + ": no sign change in [0, n]");
  return roots.back();
}

}  // namespace sx
