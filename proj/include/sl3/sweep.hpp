#pragma once

#include <functional>
#include <vector>

#include "sl3/weights.hpp"

namespace sl3 {

// All weights with |r|,|s| <= bound, in (r,s) order.
std::vector<Weight> box_weights(Int bound);

// Runs f(i) for i in [0,n) on up to `jobs` threads. The first exception is rethrown.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& f);

}  // namespace sl3
