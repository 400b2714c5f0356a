#pragma once

#include "absgame/arena.hpp"
#include "absgame/notation.hpp"
#include "absgame/order.hpp"
#include "absgame/random_forms.hpp"
#include "absgame/replication.hpp"
#include "absgame/solvers.hpp"
#include "absgame/universes.hpp"
