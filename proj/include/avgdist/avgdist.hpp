#pragma once

#include "avgdist/bounds.hpp"
#include "avgdist/errors.hpp"
#include "avgdist/estimate.hpp"
#include "avgdist/lln.hpp"
#include "avgdist/philox.hpp"
#include "avgdist/quadrature.hpp"
#include "avgdist/reduction.hpp"
#include "avgdist/specfun.hpp"
#include "avgdist/spectrum.hpp"
