// Text forms: graph-trace CSV and SVG, the block listing line, and the
// blow-up / normal-form spec formats consumed and produced by the CLI.
//
// Blow-up spec:            Normal-form word:
//   base=<compact>           base=<compact>
//   m=<int>                  m=<int>
//   gap0=<signs or empty>    gap0=<signs>;lead=<int>;trail=<int>
//   ...                      ...
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tshape/blowup.hpp"
#include "tshape/normal_form.hpp"
#include "tshape/shape.hpp"

namespace tshape {

// CSV with header "i,level", one row per vertex of the trace.
inline std::string trace_csv(const GraphTrace& tr) {
    std::string out = "i,level\n";
    for (const auto& [i, lvl] : tr.points)
        out += std::to_string(i) + ',' + std::to_string(lvl) + '\n';
    return out;
}

// Single-polyline SVG of the trace, 20 px per lattice unit, y growing
// downwards from the highest level, no axes.
inline std::string trace_svg(const GraphTrace& tr) {
    constexpr int scale = 20;
    const int hi = tr.max_level();
    const int lo = tr.min_level();
    const int w = static_cast<int>(tr.points.size()) - 1;
    const int width_px = std::max(w, 0) * scale;
    const int height_px = (hi - lo) * scale;
    std::string pts;
    for (const auto& [i, lvl] : tr.points) {
        if (!pts.empty()) pts += ' ';
        pts += std::to_string(i * scale) + ',' + std::to_string((hi - lvl) * scale);
    }
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(width_px) + "\" height=\"" + std::to_string(height_px) +
                      "\" viewBox=\"0 0 " + std::to_string(width_px) + ' ' +
                      std::to_string(height_px) + "\">\n";
    out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"" + pts +
           "\"/>\n</svg>\n";
    return out;
}

// "<signs> m=<m> full=<bool>", with "0" standing in for the empty block.
inline std::string format_block_line(const Block& b) {
    return (b.empty() ? std::string("0") : b.chars()) + " m=" + std::to_string(b.depth()) +
           " full=" + (b.full() ? "true" : "false");
}

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < text.size()) {
        size_t j = text.find('\n', i);
        if (j == std::string_view::npos) j = text.size();
        std::string_view line = text.substr(i, j - i);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (!line.empty()) out.push_back(line);
        i = j + 1;
    }
    return out;
}

// "key=value"; throws unless the key matches.
inline std::string_view expect_kv(std::string_view line, std::string_view key) {
    if (line.size() < key.size() + 1 || line.substr(0, key.size()) != key ||
        line[key.size()] != '=')
        throw ParseError("expected '" + std::string(key) + "=...', got '" + std::string(line) +
                         "'");
    return line.substr(key.size() + 1);
}

inline int parse_int(std::string_view text, std::string_view what) {
    bool neg = false;
    size_t i = 0;
    if (i < text.size() && text[i] == '-') neg = true, ++i;
    if (i >= text.size()) throw ParseError("bad " + std::string(what) + " '" + std::string(text) + "'");
    long long v = 0;
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw ParseError("bad " + std::string(what) + " '" + std::string(text) + "'");
        v = v * 10 + (text[i] - '0');
        if (v > 1000000) throw ParseError(std::string(what) + " out of range");
    }
    return static_cast<int>(neg ? -v : v);
}

// Block signs accept the empty string or "0" for the empty block.
inline std::string_view block_signs(std::string_view text) {
    return text == "0" ? std::string_view{} : text;
}

}  // namespace detail

inline std::string format_blow_up_spec(const BlowUpSpec& spec) {
    std::string out = "base=" + format_shape(spec.base) + "\n";
    out += "m=" + std::to_string(spec.depth) + "\n";
    for (size_t i = 0; i < spec.gap_blocks.size(); ++i)
        out += "gap" + std::to_string(i) + "=" + spec.gap_blocks[i].chars() + "\n";
    return out;
}

inline BlowUpSpec parse_blow_up_spec(std::string_view text) {
    const std::vector<std::string_view> lines = detail::split_lines(text);
    if (lines.size() < 2) throw ParseError("blow-up spec needs base=, m= and gap lines");
    BlowUpSpec spec;
    spec.base = parse_shape(detail::expect_kv(lines[0], "base"));
    spec.depth = detail::parse_int(detail::expect_kv(lines[1], "m"), "m");
    if (static_cast<int>(lines.size()) - 2 != spec.base.width())
        throw ParseError("expected one gap line per base letter");
    for (int i = 0; i < spec.base.width(); ++i) {
        const std::string_view v =
            detail::expect_kv(lines[static_cast<size_t>(i) + 2], "gap" + std::to_string(i));
        spec.gap_blocks.push_back(Block::make(detail::block_signs(v), spec.depth));
    }
    return spec;
}

inline std::string format_nf(const NormalFormWord& w) {
    std::string out = "base=" + format_shape(w.base) + "\n";
    out += "m=" + std::to_string(w.depth) + "\n";
    for (size_t i = 0; i < w.insertions.size(); ++i) {
        const NFInsertion& ins = w.insertions[i];
        out += "gap" + std::to_string(i) + "=" + ins.block.chars() +
               ";lead=" + std::to_string(ins.lead_cancel) +
               ";trail=" + std::to_string(ins.trail_cancel) + "\n";
    }
    return out;
}

inline NormalFormWord parse_nf(std::string_view text) {
    const std::vector<std::string_view> lines = detail::split_lines(text);
    if (lines.size() < 2) throw ParseError("normal-form word needs base=, m= and gap lines");
    NormalFormWord w;
    w.base = parse_shape(detail::expect_kv(lines[0], "base"));
    w.depth = detail::parse_int(detail::expect_kv(lines[1], "m"), "m");
    if (static_cast<int>(lines.size()) - 2 != w.base.width())
        throw ParseError("expected one gap line per base letter");
    for (int i = 0; i < w.base.width(); ++i) {
        std::string_view v =
            detail::expect_kv(lines[static_cast<size_t>(i) + 2], "gap" + std::to_string(i));
        const size_t semi = v.find(';');
        if (semi == std::string_view::npos)
            throw ParseError("gap line needs ';lead=<int>;trail=<int>'");
        NFInsertion ins;
        ins.block = Block::make(detail::block_signs(v.substr(0, semi)), w.depth);
        std::string_view rest = v.substr(semi + 1);
        const size_t semi2 = rest.find(';');
        if (semi2 == std::string_view::npos)
            throw ParseError("gap line needs ';lead=<int>;trail=<int>'");
        ins.lead_cancel = detail::parse_int(detail::expect_kv(rest.substr(0, semi2), "lead"), "lead");
        ins.trail_cancel = detail::parse_int(detail::expect_kv(rest.substr(semi2 + 1), "trail"), "trail");
        w.insertions.push_back(std::move(ins));
    }
    return w;
}

}  // namespace tshape
