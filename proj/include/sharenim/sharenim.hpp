#pragma once

#include "sharenim/bitops.hpp"
#include "sharenim/counting.hpp"
#include "sharenim/game.hpp"
#include "sharenim/grundy.hpp"
#include "sharenim/oracle.hpp"
#include "sharenim/solver.hpp"
#include "sharenim/sweeps.hpp"
