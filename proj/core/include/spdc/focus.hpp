#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "spdc/beams.hpp"
#include "spdc/constants.hpp"
#include "spdc/materials.hpp"
#include "spdc/rates.hpp"

namespace spdc {

// One-parameter focusing families for the optimizer:
//   joint      - xi_p = xi_1 = xi_2 = xi
//   pump       - xi_p = xi, collection modes fixed
//   collection - xi_1 = xi_2 = xi, pump fixed
enum class FocusFamily { joint, pump, collection };

std::string_view to_string(FocusFamily family);
FocusFamily parse_focus_family(std::string_view tag);

/// Copy of `base` with the waists of the family's beams set for focal parameter xi.
BeamTriple apply_focus(const BeamTriple& base, FocusFamily family, double xi);

struct FocusResult {
  double xi_opt = 0.0;
  double rate_max = 0.0;  // pairs/s/mW
  BeamTriple beams;       // beams at xi_opt
  bool at_boundary = false;
  bool used_dense_scan = false;  // unimodality check failed
  std::size_t evaluations = 0;
};

struct ScanPoint {
  double xi = 0.0;
  double rate = 0.0;  // pairs/s/mW
};

/// Closed-form rate on `points` log-spaced xi values in [lo, hi].
std::vector<ScanPoint> focus_scan(const MaterialOptics& material, const BeamTriple& base,
                                  const PhysicalConstants& pc, double lo, double hi, FocusFamily family,
                                  std::size_t points);

/// Maximizes pairs_closed_form over the family by golden-section search in
/// log xi, to a relative bracket of rel_tol. A coarse pre-scan brackets the
/// maximum; if it shows an interior local minimum the objective is not
/// unimodal and the result comes from a 1000-point dense scan instead.
FocusResult focus_optimize(const MaterialOptics& material, const BeamTriple& base, const PhysicalConstants& pc,
                           double lo, double hi, FocusFamily family = FocusFamily::collection,
                           double rel_tol = 1e-4);

}  // namespace spdc
