#pragma once

#include "bayesproof/error.hpp"
#include "bayesproof/frequency_tree.hpp"
#include "bayesproof/oracle.hpp"
#include "bayesproof/posterior.hpp"
#include "bayesproof/probability.hpp"
#include "bayesproof/rational.hpp"
#include "bayesproof/render.hpp"
#include "bayesproof/scenario.hpp"
#include "bayesproof/scenario_io.hpp"
#include "bayesproof/sweep.hpp"
