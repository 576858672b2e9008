#pragma once

// Umbrella header.

#include "virbialg/algebra.hpp"
#include "virbialg/basis.hpp"
#include "virbialg/bialgebra.hpp"
#include "virbialg/cohomology.hpp"
#include "virbialg/combo.hpp"
#include "virbialg/degree.hpp"
#include "virbialg/exact_linalg.hpp"
#include "virbialg/lattice.hpp"
#include "virbialg/parse.hpp"
#include "virbialg/sampling.hpp"
#include "virbialg/scalar.hpp"
#include "virbialg/script.hpp"
#include "virbialg/selfcheck.hpp"
#include "virbialg/tensor.hpp"
