#pragma once

#include "disc/bench.hpp"
#include "disc/combinatorial.hpp"
#include "disc/continuous.hpp"
#include "disc/gadgets.hpp"
#include "disc/geometry.hpp"
#include "disc/graph.hpp"
#include "disc/halfspace.hpp"
#include "disc/io.hpp"
#include "disc/lp.hpp"
#include "disc/oracles.hpp"
#include "disc/parallel.hpp"
#include "disc/rational.hpp"
#include "disc/reports.hpp"
#include "disc/verify.hpp"
