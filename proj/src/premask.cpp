#include "readorder/premask.hpp"

namespace readorder {

MaskPartition build_premask(const Page& page, const Taxonomy& taxonomy) {
    MaskPartition partition;
    partition.core.reserve(page.blocks.size());
    for (const Block& block : page.blocks) {
        const SemanticClass cls = classify(block, taxonomy).cls;
        if (cls == SemanticClass::Title || cls == SemanticClass::Vision) {
            partition.masked.push_back(block);
        } else {
            partition.core.push_back(block);
        }
    }
    return partition;
}

} // namespace readorder
