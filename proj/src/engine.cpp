#include "readorder/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <list>
#include <unordered_map>

#include "readorder/cmm.hpp"
#include "readorder/mgs.hpp"
#include "readorder/premask.hpp"
#include "readorder/projection.hpp"

namespace readorder {

namespace {

struct Slot {
    int block_id;
    BBox bbox;
    int direct_anchor_id = -1;
    bool inserted_after = false;
};

// Plain nearest-neighbor remap used by the intermediate pipeline levels:
// each masked block attaches to the closest backbone block by center
// distance and is inserted next to it on the side it physically sits.
std::vector<int> restore_nearest(const Page& page, const std::vector<int>& backbone,
                                 std::vector<Block> masked) {
    std::unordered_map<int, const Block*> by_id;
    by_id.reserve(page.blocks.size());
    for (const Block& b : page.blocks) by_id[b.id] = &b;

    std::sort(masked.begin(), masked.end(), [](const Block& a, const Block& b) {
        if (a.bbox.y1 != b.bbox.y1) return a.bbox.y1 < b.bbox.y1;
        if (a.bbox.x1 != b.bbox.x1) return a.bbox.x1 < b.bbox.x1;
        return a.id < b.id;
    });

    std::list<Slot> slots;
    for (int id : backbone) {
        slots.push_back({id, by_id.at(id)->bbox, -1, false});
    }

    for (const Block& mb : masked) {
        if (slots.empty()) {
            slots.push_back({mb.id, mb.bbox, -1, false});
            continue;
        }
        auto best_it = slots.begin();
        double best = std::numeric_limits<double>::infinity();
        for (auto it = slots.begin(); it != slots.end(); ++it) {
            if (it->direct_anchor_id != -1) continue; // backbone anchors only
            const double d = center_distance(mb.bbox, it->bbox);
            if (d < best) {
                best = d;
                best_it = it;
            }
        }
        const Point pc = center(mb.bbox);
        const Point ac = center(best_it->bbox);
        const bool after = pc.y > ac.y || (pc.y == ac.y && pc.x > ac.x);
        Slot slot{mb.id, mb.bbox, best_it->block_id, after};
        if (!after) {
            slots.insert(best_it, slot);
        } else {
            auto pos = std::next(best_it);
            while (pos != slots.end() && pos->inserted_after &&
                   pos->direct_anchor_id == best_it->block_id) {
                ++pos;
            }
            slots.insert(pos, slot);
        }
    }

    std::vector<int> out;
    out.reserve(slots.size());
    for (const Slot& s : slots) out.push_back(s.block_id);
    return out;
}

std::vector<int> sorted_by_position(std::vector<Block> blocks) {
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        if (a.bbox.y1 != b.bbox.y1) return a.bbox.y1 < b.bbox.y1;
        if (a.bbox.x1 != b.bbox.x1) return a.bbox.x1 < b.bbox.x1;
        return a.id < b.id;
    });
    std::vector<int> ids;
    ids.reserve(blocks.size());
    for (const Block& b : blocks) ids.push_back(b.id);
    return ids;
}

} // namespace

std::optional<Engine> engine_from_string(const std::string& name) {
    if (name == "baseline") return Engine::Baseline;
    if (name == "premask") return Engine::Premask;
    if (name == "mgs") return Engine::Mgs;
    if (name == "xycut++" || name == "xycutpp" || name == "full") {
        return Engine::XyCutPP;
    }
    return std::nullopt;
}

const char* to_string(Engine engine) {
    switch (engine) {
    case Engine::Baseline: return "baseline";
    case Engine::Premask: return "premask";
    case Engine::Mgs: return "mgs";
    case Engine::XyCutPP: return "xycut++";
    }
    return "xycut++";
}

OrderResult order_page(const Page& page, Engine engine, const Params& params,
                       const Taxonomy& taxonomy) {
    OrderResult result;
    result.page_id = page.page_id;
    if (page.blocks.empty()) return result;

    switch (engine) {
    case Engine::Baseline:
        return xycut_baseline(page, params.min_gap);

    case Engine::Premask: {
        const MaskPartition partition = build_premask(page, taxonomy);
        if (partition.core.empty()) {
            result.order = sorted_by_position(partition.masked);
            return result;
        }
        const std::vector<int> backbone =
            xycut_order(partition.core, params.min_gap);
        result.order = restore_nearest(page, backbone, partition.masked);
        return result;
    }

    case Engine::Mgs: {
        const MaskPartition partition = build_premask(page, taxonomy);
        const MgsResult mgs = mgs_order(page, partition, params, taxonomy);
        if (mgs.backbone.empty()) {
            std::vector<Block> all;
            for (const MaskedBlock& mb : mgs.masked) all.push_back(mb.block);
            result.order = sorted_by_position(std::move(all));
            return result;
        }
        std::vector<int> backbone;
        backbone.reserve(mgs.backbone.size());
        for (const AtomicRegion& r : mgs.backbone) backbone.push_back(r.block_id);
        std::vector<Block> masked;
        masked.reserve(mgs.masked.size());
        for (const MaskedBlock& mb : mgs.masked) masked.push_back(mb.block);
        result.order = restore_nearest(page, backbone, std::move(masked));
        return result;
    }

    case Engine::XyCutPP: {
        const MaskPartition partition = build_premask(page, taxonomy);
        const MgsResult mgs = mgs_order(page, partition, params, taxonomy);
        return match_all(page, mgs.backbone, mgs.masked, params);
    }
    }
    return result;
}

} // namespace readorder
