#pragma once

// ASCII renderings. Each cell is two characters wide: monomino "•",
// horizontal domino "───", vertical domino "│" in both cells, untiled
// staircase cell "·", barrier "‖".

#include <string>

#include "fibonomial/barrier.hpp"
#include "fibonomial/graphs.hpp"
#include "fibonomial/staircase.hpp"
#include "fibonomial/tilings.hpp"

namespace fibonomial {

std::string render(const StripTiling& t);
std::string render(const PartitionTiling& t);
std::string render(const TilingGraph& g);
std::string render(const BarrierTiling& t);
std::string render(const StaircaseTiling& t);
std::string render(const FullStaircaseTiling& t);

}  // namespace fibonomial
