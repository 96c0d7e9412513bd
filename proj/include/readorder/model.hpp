#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "readorder/geometry.hpp"

namespace readorder {

// Semantic classes in descending matching priority:
// CrossLayout > Title > Vision > Other.
// CrossLayout is never assigned from a raw label; segmentation assigns it
// geometrically to blocks spanning multiple grid units.
enum class SemanticClass { CrossLayout, Title, Vision, Other };

enum class TitleOrientation { Horizontal, Vertical };

inline int class_priority(SemanticClass c) {
    switch (c) {
    case SemanticClass::CrossLayout: return 3;
    case SemanticClass::Title: return 2;
    case SemanticClass::Vision: return 1;
    case SemanticClass::Other: return 0;
    }
    return 0;
}

const char* to_string(SemanticClass c);

struct Block {
    int id = 0; // unique within a page; positional file order unless given
    BBox bbox;
    std::string label;
    std::optional<int> gt_index;
};

struct Page {
    std::string page_id;
    double width = 0.0;
    double height = 0.0;
    std::vector<Block> blocks;
};

// Predicted reading order: a permutation of the page's block ids.
struct OrderResult {
    std::string page_id;
    std::vector<int> order;
};

enum class ContentType { CrossLayout, SingleLayout };

// Final atomic region emitted by segmentation: one per non-masked block,
// with a contiguous positional index in backbone order.
struct AtomicRegion {
    BBox bbox;
    ContentType content_type = ContentType::SingleLayout;
    std::string label;
    int index = 0;
    int block_id = 0;
};

enum class Orientation { HorizontalDoc, VerticalDoc };

// Maps raw detector labels onto semantic classes. Unknown labels fall back
// to Other. Only Title/Vision/Other are valid table targets.
class Taxonomy {
public:
    static Taxonomy defaults();

    SemanticClass base_class(const std::string& raw) const;
    void set(const std::string& raw, SemanticClass cls);
    const std::map<std::string, SemanticClass>& table() const { return table_; }

private:
    std::map<std::string, SemanticClass> table_;
};

struct Classification {
    SemanticClass cls = SemanticClass::Other;
    // Meaningful only when cls == Title.
    TitleOrientation title_orientation = TitleOrientation::Horizontal;
};

// Pure function of the label and box shape. Title orientation comes from the
// aspect ratio: ratio < 1 means a vertical (top-to-bottom) title.
Classification classify(const Block& block, const Taxonomy& taxonomy);

// Tunable pipeline parameters. Defaults follow the reference configuration.
struct Params {
    double beta = 1.3;                 // cross-layout length scale factor
    double theta_v = 0.9;              // density threshold for cut-axis choice
    double tau_overlap = 0.3;          // projection-IoU gate in matching
    double min_gap = 1.0;              // minimum projection gap, page units
    double center_bound = 0.2;         // normalized center-distance bound
    double aspect_pivot = 3.0;         // ratio pivot selecting the normalizer
    double isolation_multiplier = 2.0; // x median text height -> isolation radius
    bool early_termination = true;     // prune distance accumulation
    std::optional<Orientation> orientation_override;
};

} // namespace readorder
