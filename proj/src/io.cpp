#include "readorder/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "readorder/errors.hpp"

namespace readorder::io {

namespace {

using nlohmann::ordered_json;

constexpr double kDegenerate = 1e-6;

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
    throw SchemaError(path + ": " + reason);
}

double require_number(const nlohmann::json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

Page parse_page(const std::string& text, std::vector<std::string>* warnings) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("$", "expected an object");
    if (!doc.contains("page_id") || !doc["page_id"].is_string()) {
        fail("page_id", "expected a string");
    }
    if (!doc.contains("page_size") || !doc["page_size"].is_array() ||
        doc["page_size"].size() != 2) {
        fail("page_size", "expected [width, height]");
    }

    Page page;
    page.page_id = doc["page_id"].get<std::string>();
    page.width = require_number(doc["page_size"][0], "page_size[0]");
    page.height = require_number(doc["page_size"][1], "page_size[1]");
    if (page.width <= 0.0 || page.height <= 0.0) {
        fail("page_size", "dimensions must be positive");
    }

    if (!doc.contains("blocks") || !doc["blocks"].is_array()) {
        fail("blocks", "expected an array");
    }
    const auto& blocks = doc["blocks"];
    if (blocks.empty()) fail("blocks", "page must contain at least one block");

    std::set<int> explicit_ids;
    int indexed_count = 0;
    for (size_t k = 0; k < blocks.size(); ++k) {
        const std::string base = "blocks[" + std::to_string(k) + "]";
        const auto& jb = blocks[k];
        if (!jb.is_object()) fail(base, "expected an object");
        if (!jb.contains("bbox") || !jb["bbox"].is_array() ||
            jb["bbox"].size() != 4) {
            fail(base + ".bbox", "expected [x1, y1, x2, y2]");
        }
        if (!jb.contains("label") || !jb["label"].is_string()) {
            fail(base + ".label", "expected a string");
        }

        Block block;
        block.bbox.x1 = require_number(jb["bbox"][0], base + ".bbox[0]");
        block.bbox.y1 = require_number(jb["bbox"][1], base + ".bbox[1]");
        block.bbox.x2 = require_number(jb["bbox"][2], base + ".bbox[2]");
        block.bbox.y2 = require_number(jb["bbox"][3], base + ".bbox[3]");
        block.label = jb["label"].get<std::string>();

        if (!valid_bbox(block.bbox)) {
            fail(base + ".bbox", "coordinates must be finite, non-negative, "
                                 "with x2 > x1 and y2 > y1");
        }

        // Detector boxes occasionally overflow the page; clamp and warn.
        BBox clamped{std::clamp(block.bbox.x1, 0.0, page.width),
                     std::clamp(block.bbox.y1, 0.0, page.height),
                     std::clamp(block.bbox.x2, 0.0, page.width),
                     std::clamp(block.bbox.y2, 0.0, page.height)};
        if (clamped.x1 != block.bbox.x1 || clamped.y1 != block.bbox.y1 ||
            clamped.x2 != block.bbox.x2 || clamped.y2 != block.bbox.y2) {
            if (warnings) {
                warnings->push_back(base + ".bbox clamped to page bounds");
            }
            block.bbox = clamped;
        }
        if (block.bbox.width() < kDegenerate || block.bbox.height() < kDegenerate) {
            fail(base + ".bbox", "degenerate box after clamping");
        }

        if (jb.contains("id")) {
            if (!jb["id"].is_number_integer()) fail(base + ".id", "expected an integer");
            block.id = jb["id"].get<int>();
            if (!explicit_ids.insert(block.id).second) {
                fail(base + ".id", "duplicate block id");
            }
        } else {
            block.id = static_cast<int>(k);
        }

        if (jb.contains("index")) {
            if (!jb["index"].is_number_integer() || jb["index"].get<int>() < 0) {
                fail(base + ".index", "expected a non-negative integer");
            }
            block.gt_index = jb["index"].get<int>();
            ++indexed_count;
        }
        page.blocks.push_back(std::move(block));
    }

    if (!explicit_ids.empty() &&
        explicit_ids.size() != page.blocks.size()) {
        fail("blocks", "either every block carries an id or none does");
    }
    if (indexed_count > 0) {
        if (indexed_count != static_cast<int>(page.blocks.size())) {
            fail("blocks", "either every block carries an index or none does");
        }
        std::set<int> seen;
        for (size_t k = 0; k < page.blocks.size(); ++k) {
            const int idx = *page.blocks[k].gt_index;
            if (idx >= static_cast<int>(page.blocks.size())) {
                fail("blocks[" + std::to_string(k) + "].index",
                     "index out of range");
            }
            if (!seen.insert(idx).second) {
                throw DuplicateIndexError("blocks[" + std::to_string(k) +
                                          "].index: duplicate reading order index");
            }
        }
    }
    return page;
}

Page load_page(const std::filesystem::path& path,
               std::vector<std::string>* warnings) {
    try {
        return parse_page(read_file(path), warnings);
    } catch (const SchemaError& e) {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

std::string page_to_json(const Page& page, const std::vector<int>* order) {
    std::map<int, int> rank;
    if (order) {
        for (size_t i = 0; i < order->size(); ++i) {
            rank[(*order)[i]] = static_cast<int>(i);
        }
    }
    bool all_gt = !page.blocks.empty();
    for (const Block& b : page.blocks) all_gt = all_gt && b.gt_index.has_value();

    ordered_json doc;
    doc["page_id"] = page.page_id;
    doc["page_size"] = {page.width, page.height};
    doc["blocks"] = ordered_json::array();
    for (const Block& b : page.blocks) {
        ordered_json jb;
        jb["bbox"] = {b.bbox.x1, b.bbox.y1, b.bbox.x2, b.bbox.y2};
        jb["label"] = b.label;
        if (order) {
            auto it = rank.find(b.id);
            if (it == rank.end()) {
                throw NotAPermutationError("order misses block " +
                                           std::to_string(b.id));
            }
            jb["index"] = it->second;
        } else if (all_gt) {
            jb["index"] = *b.gt_index;
        }
        doc["blocks"].push_back(std::move(jb));
    }
    return doc.dump(2) + "\n";
}

void save_page(const std::filesystem::path& path, const Page& page,
               const std::vector<int>* order) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError("cannot write " + path.string());
    out << page_to_json(page, order);
}

std::vector<int> indexed_order(const Page& page) {
    std::vector<std::pair<int, int>> pairs; // (index, id)
    pairs.reserve(page.blocks.size());
    for (const Block& b : page.blocks) {
        if (!b.gt_index) {
            throw SchemaError("page " + page.page_id +
                              ": block without reading order index");
        }
        pairs.emplace_back(*b.gt_index, b.id);
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> order;
    order.reserve(pairs.size());
    for (const auto& [_, id] : pairs) order.push_back(id);
    return order;
}

std::map<std::string, std::string> load_manifest(const std::filesystem::path& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(path.string() + ": invalid JSON: " + e.what());
    }
    if (!doc.is_object()) throw SchemaError(path.string() + ": expected an object");
    std::map<std::string, std::string> split_of;
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_string()) {
            throw SchemaError(path.string() + ": " + key + ": expected a string");
        }
        split_of[key] = value.get<std::string>();
    }
    return split_of;
}

void save_manifest(const std::filesystem::path& path,
                   const std::map<std::string, std::string>& split_of) {
    ordered_json doc = ordered_json::object();
    for (const auto& [page_id, split] : split_of) doc[page_id] = split;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError("cannot write " + path.string());
    out << doc.dump(2) << "\n";
}

Taxonomy load_taxonomy(const std::filesystem::path& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(path.string() + ": invalid JSON: " + e.what());
    }
    if (!doc.is_object()) throw SchemaError(path.string() + ": expected an object");
    Taxonomy taxonomy = Taxonomy::defaults();
    for (const auto& [label, value] : doc.items()) {
        if (!value.is_string()) {
            throw SchemaError(path.string() + ": " + label + ": expected a string");
        }
        const std::string cls = value.get<std::string>();
        if (cls == "title") {
            taxonomy.set(label, SemanticClass::Title);
        } else if (cls == "vision") {
            taxonomy.set(label, SemanticClass::Vision);
        } else if (cls == "other") {
            taxonomy.set(label, SemanticClass::Other);
        } else {
            throw SchemaError(path.string() + ": " + label +
                              ": class must be title, vision, or other");
        }
    }
    return taxonomy;
}

std::vector<std::filesystem::path> list_json_files(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

} // namespace readorder::io
