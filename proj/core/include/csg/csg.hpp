#pragma once

#include "csg/arith.hpp"
#include "csg/cone.hpp"
#include "csg/constructions.hpp"
#include "csg/decomposition.hpp"
#include "csg/error.hpp"
#include "csg/invariants.hpp"
#include "csg/linalg.hpp"
#include "csg/numerical.hpp"
#include "csg/order.hpp"
#include "csg/point.hpp"
#include "csg/semigroup.hpp"
