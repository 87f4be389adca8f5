#pragma once

// umbrella header

#include "cubegraph/adjacency.hpp"
#include "cubegraph/bounds.hpp"
#include "cubegraph/cube.hpp"
#include "cubegraph/errors.hpp"
#include "cubegraph/gpg.hpp"
#include "cubegraph/graph_analysis.hpp"
#include "cubegraph/graph_key.hpp"
#include "cubegraph/local_params.hpp"
#include "cubegraph/numeric.hpp"
#include "cubegraph/permutation.hpp"
#include "cubegraph/report.hpp"
