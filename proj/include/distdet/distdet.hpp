#pragma once

// Umbrella header for the whole library.

#include "distdet/classify.hpp"
#include "distdet/cycle_reduction.hpp"
#include "distdet/determinant.hpp"
#include "distdet/error.hpp"
#include "distdet/formulas.hpp"
#include "distdet/generators.hpp"
#include "distdet/graph.hpp"
#include "distdet/graph_io.hpp"
#include "distdet/matrix.hpp"
#include "distdet/numeric.hpp"
#include "distdet/report.hpp"
#include "distdet/transforms.hpp"
#include "distdet/verify.hpp"
