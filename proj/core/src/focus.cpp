#include "spdc/focus.hpp"

#include <algorithm>
#include <cmath>

#include "spdc/errors.hpp"

namespace spdc {
namespace {

constexpr std::size_t kCoarsePoints = 17;
constexpr std::size_t kDensePoints = 1000;

void check_range(double lo, double hi) {
  if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi)) {
    throw DomainError("focus range must satisfy 0 < lo < hi");
  }
}

double log_point(double lo, double hi, std::size_t i, std::size_t n) {
  if (i + 1 == n) return hi;
  return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * static_cast<double>(i) / static_cast<double>(n - 1));
}

}  // namespace

std::string_view to_string(FocusFamily family) {
  switch (family) {
    case FocusFamily::joint:
      return "joint";
    case FocusFamily::pump:
      return "pump";
    case FocusFamily::collection:
      return "collection";
  }
  return "unknown";
}

FocusFamily parse_focus_family(std::string_view tag) {
  if (tag == "joint") return FocusFamily::joint;
  if (tag == "pump") return FocusFamily::pump;
  if (tag == "collection") return FocusFamily::collection;
  throw ValidationError("unknown focus family '" + std::string(tag) + "' (expected joint, pump or collection)");
}

BeamTriple apply_focus(const BeamTriple& base, FocusFamily family, double xi) {
  const double Lz = base.Lz;
  GaussianMode pump = base.pump;
  GaussianMode signal = base.signal;
  GaussianMode idler = base.idler;
  if (family != FocusFamily::collection) pump = with_focal_parameter(pump, xi, Lz);
  if (family != FocusFamily::pump) {
    signal = with_focal_parameter(signal, xi, Lz);
    idler = with_focal_parameter(idler, xi, Lz);
  }
  return make_beam_triple(pump, signal, idler, Lz);
}

std::vector<ScanPoint> focus_scan(const MaterialOptics& material, const BeamTriple& base,
                                  const PhysicalConstants& pc, double lo, double hi, FocusFamily family,
                                  std::size_t points) {
  check_range(lo, hi);
  if (points < 2) throw DomainError("focus scan needs at least two points");
  std::vector<ScanPoint> out(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double xi = log_point(lo, hi, i, points);
    out[i] = {xi, pairs_closed_form(material, apply_focus(base, family, xi), pc).pairs_per_s_per_mW};
  }
  return out;
}

FocusResult focus_optimize(const MaterialOptics& material, const BeamTriple& base, const PhysicalConstants& pc,
                           double lo, double hi, FocusFamily family, double rel_tol) {
  check_range(lo, hi);
  if (!(rel_tol > 0.0)) throw DomainError("focus_optimize: rel_tol must be positive");

  FocusResult res;
  auto rate = [&](double xi) {
    ++res.evaluations;
    return pairs_closed_form(material, apply_focus(base, family, xi), pc).pairs_per_s_per_mW;
  };
  auto finish = [&](double xi) {
    res.xi_opt = xi;
    res.beams = apply_focus(base, family, xi);
    res.rate_max = pairs_closed_form(material, res.beams, pc).pairs_per_s_per_mW;
    const double edge = std::log1p(rel_tol);
    res.at_boundary = std::log(xi / lo) <= edge || std::log(hi / xi) <= edge;
    return res;
  };

  std::vector<double> xs(kCoarsePoints);
  std::vector<double> fs(kCoarsePoints);
  for (std::size_t i = 0; i < kCoarsePoints; ++i) {
    xs[i] = log_point(lo, hi, i, kCoarsePoints);
    fs[i] = rate(xs[i]);
  }
  // Any interior local minimum means the objective is not unimodal.
  bool valley = false;
  for (std::size_t i = 1; i + 1 < kCoarsePoints; ++i) {
    if (fs[i] < fs[i - 1] && fs[i] < fs[i + 1]) valley = true;
  }
  if (valley) {
    res.used_dense_scan = true;
    double best_x = lo;
    double best_f = -1.0;
    for (std::size_t i = 0; i < kDensePoints; ++i) {
      const double xi = log_point(lo, hi, i, kDensePoints);
      const double f = rate(xi);
      if (f > best_f) {
        best_f = f;
        best_x = xi;
      }
    }
    return finish(best_x);
  }

  const auto best = static_cast<std::size_t>(std::max_element(fs.begin(), fs.end()) - fs.begin());
  double a = std::log(xs[best == 0 ? 0 : best - 1]);
  double b = std::log(xs[std::min(best + 1, kCoarsePoints - 1)]);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = rate(std::exp(c));
  double fd = rate(std::exp(d));
  const double bracket = std::log1p(rel_tol);
  while (b - a > bracket) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = rate(std::exp(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = rate(std::exp(d));
    }
  }
  double xi = std::exp(0.5 * (a + b));
  // Snap to a range end when the maximum sits there.
  const double f_mid = rate(xi);
  if (best == 0 && fs[0] >= f_mid) xi = lo;
  if (best == kCoarsePoints - 1 && fs.back() >= f_mid) xi = hi;
  return finish(xi);
}

}  // namespace spdc
