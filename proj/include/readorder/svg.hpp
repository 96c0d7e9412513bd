#pragma once

#include <string>
#include <vector>

#include "readorder/model.hpp"

namespace readorder::svg {

// Deterministic SVG 1.1 overlay: one label-colored rectangle per block, the
// reading-order number centered in each box, and arrows between consecutive
// blocks. `order` must be a permutation of the page's block ids.
std::string render(const Page& page, const std::vector<int>& order);

} // namespace readorder::svg
