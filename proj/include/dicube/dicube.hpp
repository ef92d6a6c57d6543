// dicube - finite directed cubical homotopy
//
// Umbrella header.

#ifndef DICUBE_DICUBE_HPP_
#define DICUBE_DICUBE_HPP_

#include "cat.hpp"
#include "common.hpp"
#include "cset.hpp"
#include "cube.hpp"
#include "invariants.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "lift.hpp"
#include "oracle.hpp"
#include "spaces.hpp"
#include "t1.hpp"
#include "verify.hpp"

#endif  // DICUBE_DICUBE_HPP_
