#pragma once

#include "mcl/combinations.hpp"
#include "mcl/constructions.hpp"
#include "mcl/correlation.hpp"
#include "mcl/counting.hpp"
#include "mcl/error.hpp"
#include "mcl/exact.hpp"
#include "mcl/graph.hpp"
#include "mcl/io.hpp"
#include "mcl/linalg.hpp"
#include "mcl/matroid.hpp"
#include "mcl/subset.hpp"

namespace mcl {
inline constexpr const char* kVersion = "0.1.0";
}
