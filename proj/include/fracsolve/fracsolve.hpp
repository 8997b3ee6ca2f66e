#pragma once

#include "fracsolve/bench.hpp"
#include "fracsolve/convolution.hpp"
#include "fracsolve/csv.hpp"
#include "fracsolve/error.hpp"
#include "fracsolve/linalg.hpp"
#include "fracsolve/models.hpp"
#include "fracsolve/problem.hpp"
#include "fracsolve/solver.hpp"
#include "fracsolve/special_functions.hpp"
#include "fracsolve/types.hpp"
#include "fracsolve/weights.hpp"
