#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "readorder/model.hpp"

namespace readorder::io {

// Parses one page document:
//   {"page_id": str, "page_size": [w, h],
//    "blocks": [{"bbox": [x1, y1, x2, y2], "label": str, "index"?: int}]}
// Block ids are positional file order unless an explicit "id" field exists.
// Boxes poking past the page are clamped with a warning; malformed or
// degenerate boxes raise SchemaError naming the offending JSON path, and a
// bad index permutation raises DuplicateIndexError.
Page parse_page(const std::string& text, std::vector<std::string>* warnings = nullptr);

Page load_page(const std::filesystem::path& path,
               std::vector<std::string>* warnings = nullptr);

// Serializes back to the input schema. When `order` is given each block gets
// "index" = its rank in that permutation; otherwise ground-truth indices are
// written when every block carries one.
std::string page_to_json(const Page& page,
                         const std::vector<int>* order = nullptr);

void save_page(const std::filesystem::path& path, const Page& page,
               const std::vector<int>* order = nullptr);

// Reading order encoded in a GT/ordered document: ids sorted by index.
std::vector<int> indexed_order(const Page& page);

// Sidecar split manifest: {"page_id": "complex" | "regular"}.
std::map<std::string, std::string> load_manifest(const std::filesystem::path& path);
void save_manifest(const std::filesystem::path& path,
                   const std::map<std::string, std::string>& split_of);

// Flat {"raw_label": "title"|"vision"|"other"} overrides on the defaults.
Taxonomy load_taxonomy(const std::filesystem::path& path);

std::vector<std::filesystem::path> list_json_files(const std::filesystem::path& dir);

} // namespace readorder::io
