#pragma once

// Globally adaptive Gauss-Kronrod (G10/K21) integration of real- or
// complex-valued functions on a finite interval.
//
// The driver keeps every panel, always bisects the one with the largest error
// estimate, and sums the final panel values in left-to-right order. Given the
// same integrand and options the result is bit-identical, including when the
// nodes of a panel are evaluated on several threads.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <future>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "spdc/errors.hpp"

namespace spdc::quad {

struct Options {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;
  std::size_t max_panels = 20000;
  // Worker threads used to evaluate the 21 nodes of each panel. Only worth
  // raising for expensive integrands (nested quadrature).
  unsigned threads = 1;
};

template <class T>
struct Result {
  T value{};
  double error = 0.0;
  std::size_t panels = 0;
  std::size_t evaluations = 0;
};

namespace detail {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
using Gauss = boost::math::quadrature::gauss<double, 10>;

inline constexpr std::size_t kNodes = 21;

template <class T>
struct Panel {
  double a = 0.0;
  double b = 0.0;
  T value{};
  double error = 0.0;
  double l1 = 0.0;
};

// Node k of the 21-point rule on [-1, 1]: 0 is the centre, 2i-1 and 2i are
// +x_i and -x_i.
inline double node(std::size_t k) {
  const auto& x = Kronrod::abscissa();
  if (k == 0) return 0.0;
  const std::size_t i = (k + 1) / 2;
  return (k % 2 == 1) ? x[i] : -x[i];
}

template <class T, class F>
void evaluate_nodes(F& f, double centre, double half, std::array<T, kNodes>& out, unsigned threads) {
  if (threads <= 1) {
    for (std::size_t k = 0; k < kNodes; ++k) out[k] = f(centre + half * node(k));
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, kNodes);
  std::vector<std::future<void>> jobs;
  jobs.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < kNodes; k += workers) out[k] = f(centre + half * node(k));
    }));
  }
  for (auto& j : jobs) j.get();
}

template <class T, class F>
Panel<T> evaluate_panel(F& f, double a, double b, unsigned threads) {
  using std::abs;
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<T, kNodes> fx;
  evaluate_nodes<T>(f, centre, half, fx, threads);

  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();
  T kronrod = fx[0] * wk[0];
  T gauss{};
  double l1 = abs(fx[0]) * wk[0];
  for (std::size_t i = 1; i < wk.size(); ++i) {
    const T pair = fx[2 * i - 1] + fx[2 * i];
    kronrod += pair * wk[i];
    l1 += (abs(fx[2 * i - 1]) + abs(fx[2 * i])) * wk[i];
    if (i % 2 == 1) gauss += pair * wg[i / 2];
  }
  Panel<T> p;
  p.a = a;
  p.b = b;
  p.value = kronrod * half;
  p.l1 = l1 * std::abs(half);
  const double eps = std::numeric_limits<double>::epsilon();
  p.error = std::max(static_cast<double>(abs((kronrod - gauss) * half)), 2.0 * eps * abs(p.value));
  return p;
}

template <class T>
struct ByError {
  const std::vector<Panel<T>>* panels;
  bool operator()(std::size_t lhs, std::size_t rhs) const {
    const auto& l = (*panels)[lhs];
    const auto& r = (*panels)[rhs];
    if (l.error != r.error) return l.error < r.error;
    return l.a > r.a;
  }
};

}  // namespace detail

template <class F>
using value_t = std::decay_t<std::invoke_result_t<F&, double>>;

/// Integrates f over the consecutive intervals defined by `breakpoints`
/// (at least two, strictly increasing). Discontinuities and known oscillation
/// scales belong in the breakpoint list.
///
/// Throws NumericalError carrying the achieved error estimate when the panel
/// budget runs out before the tolerance is met.
template <class F>
Result<value_t<F>> integrate(F&& f, std::span<const double> breakpoints, const Options& opt = {}) {
  using T = value_t<F>;
  using std::abs;
  using detail::Panel;

  if (breakpoints.size() < 2) throw DomainError("quadrature needs at least two breakpoints");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1]) || !std::isfinite(breakpoints[i]) || !std::isfinite(breakpoints[i - 1])) {
      throw DomainError("quadrature breakpoints must be finite and strictly increasing");
    }
  }
  if (!(opt.rel_tol >= 0.0) || !(opt.abs_tol >= 0.0)) throw DomainError("quadrature tolerances must be non-negative");

  std::vector<Panel<T>> panels;
  panels.reserve(std::max<std::size_t>(64, 2 * breakpoints.size()));
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    panels.push_back(detail::evaluate_panel<T>(f, breakpoints[i - 1], breakpoints[i], opt.threads));
  }

  std::priority_queue<std::size_t, std::vector<std::size_t>, detail::ByError<T>> worst(detail::ByError<T>{&panels});
  for (std::size_t i = 0; i < panels.size(); ++i) worst.push(i);

  auto totals = [&] {
    T value{};
    double error = 0.0;
    double l1 = 0.0;
    for (const auto& p : panels) {
      value += p.value;
      error += p.error;
      l1 += p.l1;
    }
    return std::tuple{value, error, l1};
  };

  const double eps = std::numeric_limits<double>::epsilon();
  auto [value, error, l1] = totals();
  while (true) {
    const double target = std::max(opt.abs_tol, opt.rel_tol * abs(value));
    if (error <= target || error <= 50.0 * eps * l1) {
      // Running sums drift; confirm against an exact recount.
      std::tie(value, error, l1) = totals();
      const double exact_target = std::max(opt.abs_tol, opt.rel_tol * abs(value));
      if (error <= exact_target || error <= 50.0 * eps * l1) break;
    }
    if (panels.size() >= opt.max_panels) {
      throw NumericalError("adaptive quadrature exceeded " + std::to_string(opt.max_panels) +
                               " panels; achieved error estimate " + std::to_string(error),
                           error);
    }
    const std::size_t idx = worst.top();
    worst.pop();
    const Panel<T> parent = panels[idx];
    const double mid = 0.5 * (parent.a + parent.b);
    if (!(mid > parent.a && mid < parent.b)) {
      throw NumericalError("adaptive quadrature cannot bisect panel further; achieved error estimate " +
                               std::to_string(error),
                           error);
    }
    panels[idx] = detail::evaluate_panel<T>(f, parent.a, mid, opt.threads);
    panels.push_back(detail::evaluate_panel<T>(f, mid, parent.b, opt.threads));
    value += panels[idx].value + panels.back().value - parent.value;
    error += panels[idx].error + panels.back().error - parent.error;
    l1 += panels[idx].l1 + panels.back().l1 - parent.l1;
    worst.push(idx);
    worst.push(panels.size() - 1);
  }

  std::sort(panels.begin(), panels.end(), [](const auto& l, const auto& r) { return l.a < r.a; });
  Result<T> out;
  for (const auto& p : panels) {
    out.value += p.value;
    out.error += p.error;
  }
  out.panels = panels.size();
  out.evaluations = panels.size() * detail::kNodes;
  return out;
}

template <class F>
Result<value_t<F>> integrate(F&& f, double a, double b, const Options& opt = {}) {
  if (a == b) return {};
  if (a > b) {
    auto r = integrate(std::forward<F>(f), b, a, opt);
    r.value = -r.value;
    return r;
  }
  const std::array<double, 2> ends{a, b};
  return integrate(std::forward<F>(f), std::span<const double>(ends), opt);
}

/// n + 1 equally spaced breakpoints on [a, b].
inline std::vector<double> uniform_breakpoints(double a, double b, std::size_t n) {
  n = std::max<std::size_t>(n, 1);
  std::vector<double> pts(n + 1);
  for (std::size_t i = 0; i <= n; ++i) pts[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
  pts.back() = b;
  return pts;
}

}  // namespace spdc::quad
