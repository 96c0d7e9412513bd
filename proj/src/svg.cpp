#include "readorder/svg.hpp"

#include <cstdio>
#include <map>
#include <unordered_map>

#include "readorder/errors.hpp"

namespace readorder::svg {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

const char* label_color(const std::string& label) {
    static const std::map<std::string, const char*> palette = {
        {"text", "#4c78a8"},          {"title", "#e45756"},
        {"figure", "#72b7b2"},        {"table", "#f58518"},
        {"image", "#72b7b2"},         {"chart", "#b279a2"},
        {"figure_caption", "#9ecae9"}, {"table_caption", "#ffbf79"},
        {"equation", "#54a24b"},      {"reference", "#88d27a"},
        {"header", "#9d755d"},        {"footer", "#9d755d"},
    };
    auto it = palette.find(label);
    return it == palette.end() ? "#bab0ac" : it->second;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

std::string render(const Page& page, const std::vector<int>& order) {
    if (page.blocks.empty()) throw SchemaError("render: page has no blocks");
    if (order.size() != page.blocks.size()) {
        throw NotAPermutationError("render: order size mismatch");
    }
    std::unordered_map<int, const Block*> by_id;
    for (const Block& b : page.blocks) by_id[b.id] = &b;
    std::unordered_map<int, int> rank;
    for (size_t i = 0; i < order.size(); ++i) {
        if (!by_id.count(order[i]) ||
            !rank.emplace(order[i], static_cast<int>(i)).second) {
            throw NotAPermutationError("render: order is not a permutation");
        }
    }

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fmt(page.width) + "\" height=\"" + fmt(page.height) +
           "\" viewBox=\"0 0 " + fmt(page.width) + " " + fmt(page.height) +
           "\">\n";
    out += "  <defs>\n"
           "    <marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" "
           "refX=\"6\" refY=\"3\" orient=\"auto\">\n"
           "      <path d=\"M0,0 L6,3 L0,6 z\" fill=\"#555555\"/>\n"
           "    </marker>\n"
           "  </defs>\n";
    out += "  <rect x=\"0\" y=\"0\" width=\"" + fmt(page.width) +
           "\" height=\"" + fmt(page.height) + "\" fill=\"#ffffff\"/>\n";

    for (const Block& b : page.blocks) {
        out += "  <rect x=\"" + fmt(b.bbox.x1) + "\" y=\"" + fmt(b.bbox.y1) +
               "\" width=\"" + fmt(b.bbox.width()) + "\" height=\"" +
               fmt(b.bbox.height()) + "\" fill=\"" + label_color(b.label) +
               "\" fill-opacity=\"0.25\" stroke=\"" + label_color(b.label) +
               "\" stroke-width=\"2\">\n";
        out += "    <title>" + xml_escape(b.label) + "</title>\n";
        out += "  </rect>\n";
    }
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        const Point a = center(by_id.at(order[i])->bbox);
        const Point b = center(by_id.at(order[i + 1])->bbox);
        out += "  <line x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" +
               fmt(b.x) + "\" y2=\"" + fmt(b.y) +
               "\" stroke=\"#555555\" stroke-width=\"1.5\" "
               "marker-end=\"url(#arrow)\"/>\n";
    }
    for (const Block& b : page.blocks) {
        const Point c = center(b.bbox);
        out += "  <text x=\"" + fmt(c.x) + "\" y=\"" + fmt(c.y) +
               "\" font-family=\"sans-serif\" font-size=\"18\" "
               "text-anchor=\"middle\" dominant-baseline=\"central\" "
               "fill=\"#222222\">" +
               std::to_string(rank.at(b.id)) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace readorder::svg
