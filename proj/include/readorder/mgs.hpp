#pragma once

#include <span>
#include <unordered_set>
#include <vector>

#include "readorder/model.hpp"
#include "readorder/premask.hpp"

namespace readorder {

// A coarse sub-region produced by pre-segmentation and refined recursively.
// `members` are the non-masked (single-layout) blocks; `cross_members` are
// masked cross-layout blocks that ride along only for density evaluation.
struct Region {
    BBox bbox;
    std::vector<Block> members;
    std::vector<Block> cross_members;
};

struct MaskedBlock {
    Block block;
    SemanticClass cls = SemanticClass::Other;
    TitleOrientation title_orientation = TitleOrientation::Horizontal;
};

struct MgsResult {
    std::vector<AtomicRegion> backbone; // pre-ordered, indices contiguous from 0
    std::vector<MaskedBlock> masked;    // premask + cross-layout + cut anchors
    Orientation orientation = Orientation::HorizontalDoc;
};

// HorizontalDoc when the median aspect ratio of text blocks is >= 1;
// VerticalDoc otherwise. Empty text set defaults to HorizontalDoc.
Orientation infer_orientation(const Page& page, const Taxonomy& taxonomy);

// Adaptive length threshold: beta x median block length along the reading
// axis (width for horizontal documents, height for vertical ones). The
// even-count median is the mean of the two middle values.
double length_threshold(std::span<const Block> blocks, Orientation orientation,
                        double beta);

// A block is cross-layout iff its length exceeds the threshold and its
// reading-axis projection strictly overlaps those of at least two others.
std::unordered_set<int> detect_cross_layout(std::span<const Block> blocks,
                                            double threshold,
                                            Orientation orientation);

// Geometric pre-segmentation: masked candidates that sit near the page
// center and are isolated from every text block become cut anchors; the page
// splits at their extents into regions ordered by reading direction.
// Core blocks are assigned by majority extent (nearest region when fully
// inside an anchor band). Zero anchors yield a single region.
std::vector<Region> pre_segment(const Page& page, std::span<const Block> core,
                                std::span<const Block> mask_candidates,
                                std::span<const Block> text_blocks,
                                const Params& params, Orientation orientation,
                                std::vector<int>* anchor_ids = nullptr);

// Cross-layout to single-layout area ratio; +inf when the single set is
// empty but cross elements are present.
double density(const Region& region);

// Density-driven recursive cutting. Dense regions (tau_d > theta_v) try
// Y-axis gaps first, sparse regions X-axis first. Emits one AtomicRegion per
// member in traversal order: top-to-bottom for Y splits, left-to-right for X
// splits on horizontal documents and right-to-left on vertical ones.
std::vector<AtomicRegion> adaptive_cut(const Region& region, const Params& params,
                                       Orientation orientation);

// Full three-phase pipeline over a premask partition.
MgsResult mgs_order(const Page& page, const MaskPartition& partition,
                    const Params& params, const Taxonomy& taxonomy);

} // namespace readorder
