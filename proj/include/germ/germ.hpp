#pragma once

#include "germ/avoidance.hpp"
#include "germ/circular_word.hpp"
#include "germ/cycle_search.hpp"
#include "germ/decomposition.hpp"
#include "germ/distance_set.hpp"
#include "germ/domination.hpp"
#include "germ/efficiency_gap.hpp"
#include "germ/error.hpp"
#include "germ/germ_order.hpp"
#include "germ/letters.hpp"
#include "germ/numeric_probe.hpp"
#include "germ/optimizer.hpp"
#include "germ/oracles.hpp"
#include "germ/packing.hpp"
#include "germ/polynomial.hpp"
#include "germ/preperiod.hpp"
#include "germ/rational.hpp"
#include "germ/rational_function.hpp"
#include "germ/rational_set.hpp"
#include "germ/sampling.hpp"
#include "germ/verify.hpp"
