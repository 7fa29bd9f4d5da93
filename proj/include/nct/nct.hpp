#pragma once

// Umbrella header for the noncommutative torus toolkit.

#include "nct/algebra.hpp"
#include "nct/circle_function.hpp"
#include "nct/continued_fraction.hpp"
#include "nct/dynamics.hpp"
#include "nct/errors.hpp"
#include "nct/ktheory.hpp"
#include "nct/projections.hpp"
#include "nct/representations.hpp"
#include "nct/rotation.hpp"
#include "nct/spectral.hpp"
