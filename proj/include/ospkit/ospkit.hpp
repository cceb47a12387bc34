#pragma once

#include "ospkit/action.hpp"
#include "ospkit/exact_matrix.hpp"
#include "ospkit/generators.hpp"
#include "ospkit/intertwiner.hpp"
#include "ospkit/json_io.hpp"
#include "ospkit/qsqrt2.hpp"
#include "ospkit/rational.hpp"
#include "ospkit/singular.hpp"
#include "ospkit/sparse_vector.hpp"
#include "ospkit/verify.hpp"
#include "ospkit/weights.hpp"
