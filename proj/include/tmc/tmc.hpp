#pragma once

#include "tmc/backtracking.hpp"
#include "tmc/brute_force.hpp"
#include "tmc/core.hpp"
#include "tmc/io.hpp"
#include "tmc/matching_order.hpp"
#include "tmc/motif.hpp"
#include "tmc/parallel.hpp"
#include "tmc/rng.hpp"
#include "tmc/sampling.hpp"
#include "tmc/streaming.hpp"
#include "tmc/temporal_graph.hpp"
#include "tmc/wedge_plan.hpp"
#include "tmc/wedge_sampling.hpp"
