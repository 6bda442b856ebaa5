#pragma once

#include "neumaier/vertex_set.hpp"
#include "neumaier/errors.hpp"
#include "neumaier/graph.hpp"
#include "neumaier/graph6.hpp"
#include "neumaier/generators.hpp"
#include "neumaier/enumerate.hpp"
#include "neumaier/exact.hpp"
#include "neumaier/polynomial.hpp"
#include "neumaier/spectra.hpp"
#include "neumaier/regularity.hpp"
#include "neumaier/cliques.hpp"
#include "neumaier/isomorphism.hpp"
#include "neumaier/characterize.hpp"
#include "neumaier/line_graphs.hpp"
#include "neumaier/refute.hpp"
#include "neumaier/sweep.hpp"
#include "neumaier/report.hpp"
