#include "readorder/model.hpp"

namespace readorder {

const char* to_string(SemanticClass c) {
    switch (c) {
    case SemanticClass::CrossLayout: return "cross-layout";
    case SemanticClass::Title: return "title";
    case SemanticClass::Vision: return "vision";
    case SemanticClass::Other: return "other";
    }
    return "other";
}

Taxonomy Taxonomy::defaults() {
    Taxonomy t;
    t.table_ = {
        {"text", SemanticClass::Other},
        {"reference", SemanticClass::Other},
        {"equation", SemanticClass::Other},
        {"title", SemanticClass::Title},
        {"figure", SemanticClass::Vision},
        {"table", SemanticClass::Vision},
        {"image", SemanticClass::Vision},
        {"chart", SemanticClass::Vision},
    };
    return t;
}

SemanticClass Taxonomy::base_class(const std::string& raw) const {
    auto it = table_.find(raw);
    return it == table_.end() ? SemanticClass::Other : it->second;
}

void Taxonomy::set(const std::string& raw, SemanticClass cls) {
    table_[raw] = cls;
}

Classification classify(const Block& block, const Taxonomy& taxonomy) {
    Classification c;
    c.cls = taxonomy.base_class(block.label);
    if (c.cls == SemanticClass::Title) {
        c.title_orientation = aspect_ratio(block.bbox) < 1.0
                                  ? TitleOrientation::Vertical
                                  : TitleOrientation::Horizontal;
    }
    return c;
}

} // namespace readorder
