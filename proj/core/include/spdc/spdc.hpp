#pragma once

#include "spdc/beams.hpp"
#include "spdc/constants.hpp"
#include "spdc/errors.hpp"
#include "spdc/focus.hpp"
#include "spdc/materials.hpp"
#include "spdc/overlap.hpp"
#include "spdc/pump.hpp"
#include "spdc/quadrature.hpp"
#include "spdc/rates.hpp"
