#ifndef ULTRA_ULTRA_HPP_
#define ULTRA_ULTRA_HPP_

#include "classify.hpp"
#include "dsl.hpp"
#include "error.hpp"
#include "ideals.hpp"
#include "ktheory.hpp"
#include "lattice.hpp"
#include "matrix.hpp"
#include "numeric.hpp"
#include "paths.hpp"
#include "projection.hpp"
#include "report.hpp"
#include "singular.hpp"
#include "symbolic.hpp"
#include "ultragraph.hpp"
#include "vertex_set.hpp"
#include "window.hpp"

#endif  // ULTRA_ULTRA_HPP_
