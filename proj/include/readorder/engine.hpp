#pragma once

#include <optional>
#include <string>

#include "readorder/model.hpp"

namespace readorder {

// Progressive pipeline levels. Baseline is the plain recursive projection
// cut; Premask adds masking with a nearest-neighbor remap; Mgs adds the
// full multi-granularity backbone; XyCutPP adds cross-modal matching.
enum class Engine { Baseline, Premask, Mgs, XyCutPP };

std::optional<Engine> engine_from_string(const std::string& name);
const char* to_string(Engine engine);

OrderResult order_page(const Page& page, Engine engine, const Params& params,
                       const Taxonomy& taxonomy);

inline OrderResult order_page(const Page& page, Engine engine) {
    return order_page(page, engine, Params{}, Taxonomy::defaults());
}

} // namespace readorder
