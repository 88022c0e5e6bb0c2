#pragma once

// Umbrella header: exact homology and classification of quotients of
// odd-dimensional spheres by linear torus actions, through the column
// matroid of the weight matrix and Tutte polynomial specializations.

#include "tquot/action.hpp"
#include "tquot/classify.hpp"
#include "tquot/errors.hpp"
#include "tquot/integer.hpp"
#include "tquot/matrix.hpp"
#include "tquot/matroid.hpp"
#include "tquot/polynomial.hpp"
#include "tquot/report.hpp"
#include "tquot/smith.hpp"
#include "tquot/topology.hpp"
#include "tquot/tutte.hpp"
