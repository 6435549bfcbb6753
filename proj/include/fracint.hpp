#pragma once

#include "fracint/core/circulant.hpp"
#include "fracint/core/grid.hpp"
#include "fracint/core/parallel.hpp"
#include "fracint/core/quadrature.hpp"
#include "fracint/core/rng.hpp"
#include "fracint/core/stats.hpp"

#include "fracint/chaos/hermite.hpp"
#include "fracint/chaos/isonormal.hpp"
#include "fracint/chaos/wiener_chaos.hpp"

#include "fracint/process/ensemble.hpp"
#include "fracint/process/export.hpp"
#include "fracint/process/fbm.hpp"
#include "fracint/process/hermite_process.hpp"
#include "fracint/process/params.hpp"
#include "fracint/process/simulate.hpp"

#include "fracint/sobolev/appendix.hpp"
#include "fracint/sobolev/constants.hpp"
#include "fracint/sobolev/dh_function.hpp"
#include "fracint/sobolev/fourier.hpp"
#include "fracint/sobolev/gagliardo.hpp"
#include "fracint/sobolev/kstar.hpp"
#include "fracint/sobolev/step_function.hpp"

#include "fracint/integral/conditions.hpp"
#include "fracint/integral/cylindrical.hpp"
#include "fracint/integral/elementary.hpp"
#include "fracint/integral/gamma_lp.hpp"

#include "fracint/spde/existence.hpp"
#include "fracint/spde/mild.hpp"
#include "fracint/spde/mode_norm.hpp"
#include "fracint/spde/neumann.hpp"
#include "fracint/spde/spectral.hpp"
