#pragma once

#include "readorder/model.hpp"

namespace readorder {

// Set partition of a page's blocks: `core` drives segmentation and backbone
// sorting; `masked` holds the highly dynamic elements restored later by
// matching. core and masked are disjoint and jointly cover the page.
struct MaskPartition {
    std::vector<Block> core;
    std::vector<Block> masked;
};

// Blocks classified Title or Vision move to masked; everything else stays in
// core. Cross-layout status is unknown at this stage and assigned later.
MaskPartition build_premask(const Page& page, const Taxonomy& taxonomy);

} // namespace readorder
