#pragma once

#include "expsg/errors.hpp"
#include "expsg/rational.hpp"
#include "expsg/matrix.hpp"
#include "expsg/polynomial.hpp"
#include "expsg/lattice.hpp"
#include "expsg/semigroup.hpp"
#include "expsg/power_integrality.hpp"
#include "expsg/exponent_semigroup.hpp"
#include "expsg/constructions.hpp"
#include "expsg/dimension_bounds.hpp"
