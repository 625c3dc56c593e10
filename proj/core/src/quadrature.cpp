#include "ggentropy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "ggentropy/errors.hpp"

namespace ggentropy {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kronrod_nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kronrod_weights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double gauss_weights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a,
                     double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double kronrod = 0.0;
  double gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = half * kronrod_nodes[i];
    const double fsum =
        (i == 7) ? f(center) : f(center - dx) + f(center + dx);
    kronrod += kronrod_weights[i] * fsum;
    // Gauss nodes are the odd-indexed Kronrod nodes plus the center (i = 7).
    if (i % 2 == 1 || i == 7) gauss += gauss_weights[i / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;
  return Panel{a, b, kronrod, std::abs(kronrod - gauss)};
}

IntegrationResult adaptive(const std::function<double(double)>& f,
                           std::vector<Panel> initial, double abs_tol,
                           int max_intervals) {
  std::priority_queue<Panel> queue;
  double total = 0.0;
  double total_err = 0.0;
  for (const Panel& p : initial) {
    total += p.value;
    total_err += p.error;
    queue.push(p);
  }
  int n = static_cast<int>(initial.size());
  while (total_err > abs_tol && n < max_intervals) {
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval no longer splittable in double precision
      queue.push(Panel{worst.a, worst.b, worst.value, 0.0});
      total_err -= worst.error;
      continue;
    }
    const Panel left = evaluate_panel(f, worst.a, mid);
    const Panel right = evaluate_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++n;
  }
  return IntegrationResult{total, total_err, total_err <= abs_tol};
}

}  // namespace

IntegrationResult integrate(const std::function<double(double)>& f, double a,
                            double b, double abs_tol, int max_intervals) {
  if (!(a < b)) throw DomainError("integrate requires a < b");
  return adaptive(f, {evaluate_panel(f, a, b)}, abs_tol, max_intervals);
}

IntegrationResult integrate(const std::function<double(double)>& f,
                            const std::vector<double>& breakpoints,
                            double abs_tol, int max_intervals) {
  if (breakpoints.size() < 2) {
    throw DomainError("integrate requires at least two breakpoints");
  }
  std::vector<Panel> initial;
  initial.reserve(breakpoints.size() - 1);
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1])) {
      throw DomainError("integrate breakpoints must be strictly increasing");
    }
    initial.push_back(evaluate_panel(f, breakpoints[i], breakpoints[i + 1]));
  }
  return adaptive(f, std::move(initial), abs_tol, max_intervals);
}

IntegrationResult integrate_semi_infinite(
    const std::function<double(double)>& f, double a, double abs_tol,
    int max_intervals) {
  const auto transformed = [&f, a](double u) {
    const double one_minus = 1.0 - u;
    const double t = a + u / one_minus;
    const double jacobian = 1.0 / (one_minus * one_minus);
    const double v = f(t);
    return v == 0.0 ? 0.0 : v * jacobian;
  };
  return adaptive(transformed, {evaluate_panel(transformed, 0.0, 1.0)},
                  abs_tol, max_intervals);
}

std::vector<double> geometric_breakpoints(double a, double b, double ratio) {
  if (!(0.0 < a && a < b) || !(ratio > 1.0)) {
    throw DomainError("geometric_breakpoints requires 0 < a < b, ratio > 1");
  }
  std::vector<double> points{b};
  for (double x = b / ratio; x > a; x /= ratio) points.push_back(x);
  points.push_back(a);
  std::reverse(points.begin(), points.end());
  return points;
}

}  // namespace ggentropy
