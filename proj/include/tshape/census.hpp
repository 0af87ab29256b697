// Exhaustive enumeration of cyclic shapes (binary necklaces) by width,
// aggregate classification tables, and witness search.  Enumeration works
// by canonical filtering: a width-w scan of all sign strings keeps exactly
// the self-canonical ones, so representatives come out in lexicographic
// order.  Widths are independent; each width's scan may be partitioned
// across workers, whose partial counts merge by addition.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "tshape/calculus.hpp"
#include "tshape/shape.hpp"

namespace tshape {

namespace detail {

inline Shape shape_from_bits(uint64_t bits, int width) {
    std::string s(static_cast<size_t>(width), '+');
    for (int i = 0; i < width; ++i)
        if (bits & (uint64_t{1} << (width - 1 - i))) s[static_cast<size_t>(i)] = '-';
    return Shape(std::move(s));
}

}  // namespace detail

// Every rotation class of {+,-}^width exactly once, as canonical forms in
// lexicographic order.
inline std::vector<Shape> necklaces(int width) {
    std::vector<Shape> out;
    if (width < 1 || width > 62) return out;
    for (uint64_t x = 0; x < (uint64_t{1} << width); ++x) {
        Shape s = detail::shape_from_bits(x, width);
        if (detail::least_rotation_index(s.chars()) == 0) out.push_back(std::move(s));
    }
    return out;
}

struct CensusRow {
    int width = 0;
    int64_t total = 0;
    int64_t power = 0;
    int64_t one_clump = 0;
    int64_t suitable = 0;
    int64_t cg_good = 0;
    int64_t amenable = 0;
    int64_t amenable_not_cg = 0;
    int64_t degree_pm1 = 0;
    int64_t unknown = 0;

    CensusRow& operator+=(const CensusRow& o) {
        total += o.total;
        power += o.power;
        one_clump += o.one_clump;
        suitable += o.suitable;
        cg_good += o.cg_good;
        amenable += o.amenable;
        amenable_not_cg += o.amenable_not_cg;
        degree_pm1 += o.degree_pm1;
        unknown += o.unknown;
        return *this;
    }
};

namespace detail {

inline void census_tally(const Shape& s, CensusRow& row) {
    const Classification c = classify(s);
    row.total += 1;
    row.power += c.is_power;
    row.one_clump += c.is_one_clump;
    row.suitable += c.is_suitable;
    row.cg_good += c.is_cg_good;
    row.amenable += c.is_amenable;
    row.amenable_not_cg += is_amenable_not_cg(s);
    row.degree_pm1 += (c.degree == 1 || c.degree == -1);
    row.unknown += c.known_good.empty();
}

// True when s is the representative of its class: self-canonical, and with
// fold_inversion also no larger than the canonical form of its inverse.
inline bool is_representative(const Shape& s, bool fold_inversion) {
    if (least_rotation_index(s.chars()) != 0) return false;
    return !fold_inversion || !(canonical(invert(s)) < s);
}

}  // namespace detail

// One row for the given width, scanning [0, 2^width) across `workers`
// threads.  Counts are sums of per-worker tallies, so the result does not
// depend on the partitioning.
inline CensusRow census_row(int width, int workers = 1, bool fold_inversion = false) {
    CensusRow row;
    row.width = width;
    if (width < 1) return row;
    const uint64_t space = uint64_t{1} << width;
    if (workers < 1) workers = 1;
    if (static_cast<uint64_t>(workers) > space) workers = static_cast<int>(space);
    std::vector<CensusRow> partial(static_cast<size_t>(workers));
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
        const uint64_t lo = space * static_cast<uint64_t>(t) / static_cast<uint64_t>(workers);
        const uint64_t hi = space * (static_cast<uint64_t>(t) + 1) / static_cast<uint64_t>(workers);
        pool.emplace_back([&, lo, hi, t] {
            CensusRow& r = partial[static_cast<size_t>(t)];
            for (uint64_t x = lo; x < hi; ++x) {
                const Shape s = detail::shape_from_bits(x, width);
                if (detail::is_representative(s, fold_inversion)) detail::census_tally(s, r);
            }
        });
    }
    for (std::thread& th : pool) th.join();
    for (const CensusRow& r : partial) row += r;
    return row;
}

inline std::vector<CensusRow> census_table(int max_width, int workers = 1,
                                           bool fold_inversion = false) {
    std::vector<CensusRow> rows;
    for (int w = 1; w <= max_width; ++w) rows.push_back(census_row(w, workers, fold_inversion));
    return rows;
}

inline std::string census_csv(const std::vector<CensusRow>& rows) {
    std::string out =
        "width,total,power,one_clump,suitable,cg_good,amenable,amenable_not_cg,degree_pm1,"
        "unknown\n";
    for (const CensusRow& r : rows) {
        out += std::to_string(r.width) + ',' + std::to_string(r.total) + ',' +
               std::to_string(r.power) + ',' + std::to_string(r.one_clump) + ',' +
               std::to_string(r.suitable) + ',' + std::to_string(r.cg_good) + ',' +
               std::to_string(r.amenable) + ',' + std::to_string(r.amenable_not_cg) + ',' +
               std::to_string(r.degree_pm1) + ',' + std::to_string(r.unknown) + '\n';
    }
    return out;
}

// Predicate over classified shapes: '&'- or ','-joined terms, each
// optionally negated with '!'.  Terms: power, one_clump, suitable, cg_good,
// amenable, amenable_not_cg, degree_pm1, unknown.
using ClassPredicate = std::function<bool(const Shape&, const Classification&)>;

inline ClassPredicate parse_predicate(std::string_view text) {
    struct Term {
        std::string name;
        bool negated;
    };
    std::vector<Term> terms;
    size_t i = 0;
    while (i <= text.size()) {
        size_t j = i;
        while (j < text.size() && text[j] != '&' && text[j] != ',') ++j;
        std::string_view piece = text.substr(i, j - i);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        if (!piece.empty()) {
            bool neg = false;
            if (piece.front() == '!') {
                neg = true;
                piece.remove_prefix(1);
            }
            static const char* known[] = {"power",    "one_clump", "suitable",
                                          "cg_good",  "amenable",  "amenable_not_cg",
                                          "degree_pm1", "unknown"};
            bool ok = false;
            for (const char* k : known) ok = ok || piece == k;
            if (!ok) throw ParseError("unknown predicate term '" + std::string(piece) + "'");
            terms.push_back({std::string(piece), neg});
        }
        if (j >= text.size()) break;
        i = j + 1;
    }
    if (terms.empty()) throw ParseError("empty predicate");
    return [terms](const Shape& s, const Classification& c) {
        for (const auto& [name, neg] : terms) {
            bool v = false;
            if (name == "power") v = c.is_power;
            else if (name == "one_clump") v = c.is_one_clump;
            else if (name == "suitable") v = c.is_suitable;
            else if (name == "cg_good") v = c.is_cg_good;
            else if (name == "amenable") v = c.is_amenable;
            else if (name == "amenable_not_cg") v = is_amenable_not_cg(s);
            else if (name == "degree_pm1") v = (c.degree == 1 || c.degree == -1);
            else if (name == "unknown") v = c.known_good.empty();
            if (v == neg) return false;
        }
        return true;
    };
}

// All necklaces of width 1..max_width satisfying the predicate, in
// (width, canonical form) order.
inline std::vector<Shape> find_witnesses(int max_width, const ClassPredicate& pred) {
    std::vector<Shape> out;
    for (int w = 1; w <= max_width; ++w)
        for (Shape& s : necklaces(w))
            if (pred(s, classify(s))) out.push_back(std::move(s));
    return out;
}

inline std::vector<Shape> find_witnesses(int max_width, std::string_view predicate) {
    return find_witnesses(max_width, parse_predicate(predicate));
}

}  // namespace tshape
