#pragma once

// Umbrella header for the centro library: exact scalars, dense exact
// matrices, pseudo-centrosymmetric structure theory, the alternating
// complementary-subset determinant formula, integer two-squares machinery,
// lattice matchings, and region generators.

#include "centro/alt_centro.hpp"
#include "centro/errors.hpp"
#include "centro/gaussian.hpp"
#include "centro/integer_sos.hpp"
#include "centro/lattice.hpp"
#include "centro/matrix.hpp"
#include "centro/matrix_io.hpp"
#include "centro/oracle.hpp"
#include "centro/prime_field.hpp"
#include "centro/primality.hpp"
#include "centro/rational.hpp"
#include "centro/region.hpp"
#include "centro/scalar.hpp"
#include "centro/structure.hpp"
