#pragma once

#include "exlag/admissibility.hpp"
#include "exlag/contour.hpp"
#include "exlag/darboux.hpp"
#include "exlag/exceptional.hpp"
#include "exlag/laguerre.hpp"
#include "exlag/norms.hpp"
#include "exlag/poly_matrix.hpp"
#include "exlag/polynomial.hpp"
#include "exlag/rational.hpp"
#include "exlag/roots.hpp"
#include "exlag/sturm.hpp"
#include "exlag/serialize.hpp"
