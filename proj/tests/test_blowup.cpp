#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "helpers.hpp"
#include "tshape/blowup.hpp"
#include "tshape/io.hpp"

using namespace tshape;

namespace {

BlowUpSpec spec_of(const char* base, int m, const std::vector<const char*>& blocks) {
    BlowUpSpec s{Shape(base), m, {}};
    for (const char* b : blocks) s.gap_blocks.push_back(make_block(b, m));
    return s;
}

}  // namespace

TEST_CASE("gap_kinds") {
    using enum GapKind;
    CHECK(gap_kinds(Shape("+-")) == std::vector<GapKind>{top, bottom});
    CHECK(gap_kinds(Shape("++")) == std::vector<GapKind>{middle, middle});
    CHECK(gap_kinds(Shape("+-++--")) ==
          std::vector<GapKind>{top, bottom, middle, top, middle, bottom});
    CHECK(gap_kinds(Shape("+")) == std::vector<GapKind>{middle});
    CHECK_THROWS_AS(gap_kinds(Shape{}), DomainError);
}

TEST_CASE("blow_up") {
    SECTION("worked examples") {
        CHECK(blow_up(spec_of("+-", 1, {"", "-+"})) == Shape("++--"));
        CHECK(blow_up(spec_of("+-", 2, {"", "--++"})) == canonical(Shape("+---++")));
        CHECK(blow_up(spec_of("++", 1, {"-+", ""})) == canonical(Shape("+-++")));
        CHECK_THROWS_AS(blow_up(spec_of("+-", 1, {"", ""})), DomainError);
    }
    SECTION("derivative returns the base") {
        CHECK(cyclic_equal(derivative(blow_up(spec_of("+-", 1, {"", "-+"}))), Shape("+-")));
        Shape u = blow_up(spec_of("+-", 2, {"", "--++"}));
        CHECK(cyclic_equal(derivative(derivative(u)), Shape("+-")));
    }
    SECTION("depth mismatches and empty bases are rejected") {
        BlowUpSpec bad{Shape("+-"), 2, {make_block("", 1), make_block("--++", 2)}};
        CHECK_THROWS_AS(blow_up(bad), DomainError);
        CHECK_THROWS_AS(blow_up(BlowUpSpec{Shape{}, 1, {}}), DomainError);
        CHECK_THROWS_AS(blow_up(spec_of("+-", 1, {"-+"})), DomainError);
    }
}

TEST_CASE("random_blow_up") {
    SECTION("satisfies the membership contract") {
        const auto [u, spec] = random_blow_up(Shape("+-"), 1, 4, 7);
        CHECK(cyclic_equal(derivative(u), Shape("+-")));
        CHECK(blow_up(spec) == u);
    }
    SECTION("deterministic under seed") {
        const auto a = random_blow_up(Shape("+-++--"), 2, 8, 123);
        const auto b = random_blow_up(Shape("+-++--"), 2, 8, 123);
        CHECK(a.first == b.first);
        const auto c = random_blow_up(Shape("+-++--"), 2, 8, 124);
        (void)c;  // any draw is fine, it only has to be valid
    }
    SECTION("power bases need no full blocks") {
        const auto [u, spec] = random_blow_up(Shape("++"), 1, 0, 1);
        CHECK(u == Shape("++"));
        for (const Block& b : spec.gap_blocks) CHECK(b.empty());
    }
    SECTION("bottom gaps need room for a full block") {
        CHECK_THROWS_AS(random_blow_up(Shape("+-"), 2, 2, 1), DomainError);
        try {
            random_blow_up(Shape("+-"), 2, 2, 1);
        } catch (const DomainError& e) {
            CHECK(e.kind == "max-block-width");
        }
    }
    SECTION("degree is preserved") {
        detail::Rng rng(21);
        for (int it = 0; it < 300; ++it) {
            const Shape t = testutil::random_shape(rng, 1, 8);
            const int m = 1 + static_cast<int>(rng.uniform(3));
            const auto [u, spec] = random_blow_up(t, m, 2 * m + 2, it);
            CHECK(degree(u) == degree(t));
            CHECK(width(u) >= width(t));
        }
    }
}

TEST_CASE("peel") {
    SECTION("worked examples, letter-exact") {
        const PeelResult r1 = peel(Shape("+--+"));
        CHECK(r1.base == Shape("+-"));
        REQUIRE(r1.gap_blocks.size() == 2);
        CHECK(r1.gap_blocks[0].chars() == "");
        CHECK(r1.gap_blocks[1].chars() == "-+");

        const PeelResult r2 = peel(Shape("+-+-+--+"));
        CHECK(r2.base == Shape("+-"));
        REQUIRE(r2.gap_blocks.size() == 2);
        CHECK(r2.gap_blocks[0].chars() == "-+-+");
        CHECK(r2.gap_blocks[1].chars() == "-+");

        CHECK_THROWS_AS(peel(Shape("+-+-")), DomainError);
        CHECK_THROWS_AS(peel(Shape{}), DomainError);
        try {
            peel(Shape("-+-+"));
        } catch (const DomainError& e) {
            CHECK(e.kind == "derivative-empty");
        }
    }
    SECTION("wrapping chunks keep their cyclic order") {
        const PeelResult r = peel(Shape("++-"));
        CHECK(r.base == Shape("+"));
        REQUIRE(r.gap_blocks.size() == 1);
        CHECK(r.gap_blocks[0].chars() == "-+");
        CHECK(cyclic_equal(blow_up(r.spec()), Shape("++-")));
    }
    SECTION("base spells the derivative anchored to u") {
        detail::Rng rng(31);
        for (int it = 0; it < 300; ++it) {
            const Shape u = testutil::random_shape(rng, 1, 12);
            Shape d = derivative(u);
            if (d.empty()) continue;
            const PeelResult r = peel(u);
            CHECK(cyclic_equal(r.base, d));
        }
    }
    SECTION("blow_up(peel(u)) == u, exhaustive to width 10") {
        for (int w = 1; w <= 10; ++w) {
            for (const Shape& u : testutil::all_shapes(w)) {
                if (derivative(u).empty()) continue;
                const PeelResult r = peel(u);
                CHECK(cyclic_equal(blow_up(r.spec()), u));
            }
        }
    }
}

TEST_CASE("is_blow_up_of") {
    CHECK(is_blow_up_of(Shape("+---++"), Shape("+-"), 2));
    CHECK(is_blow_up_of(Shape("++--"), Shape("+-"), 1));
    for (int n = 0; n <= 4; ++n) CHECK_FALSE(is_blow_up_of(Shape("++"), Shape("+++"), n));
    CHECK(is_blow_up_of(Shape("+-"), Shape("+-"), 0));
    CHECK_FALSE(is_blow_up_of(Shape("+-"), Shape("-+-+"), 0));
    // D^n of anything alternating is empty from n = 1 on.
    CHECK(is_blow_up_of(Shape("+-"), Shape{}, 1));
}

TEST_CASE("composite blow-ups pass the composite membership test") {
    detail::Rng rng(41);
    for (int it = 0; it < 300; ++it) {
        const Shape t = testutil::random_shape(rng, 1, 6);
        const int m = 1 + static_cast<int>(rng.uniform(2));
        const int n = 1 + static_cast<int>(rng.uniform(2));
        const auto [u1, s1] = random_blow_up(t, m, 2 * m + 2, 2 * it);
        const auto [u2, s2] = random_blow_up(u1, n, 2 * n + 2, 2 * it + 1);
        CHECK(is_blow_up_of(u2, t, n + m));
    }
}

TEST_CASE("an empty block at a bottom gap breaks membership") {
    detail::Rng rng(51);
    int tried = 0;
    for (int it = 0; tried < 200; ++it) {
        const Shape t = testutil::random_shape(rng, 2, 8);
        if (is_power(t)) continue;
        const int m = 1 + static_cast<int>(rng.uniform(2));
        auto [u, spec] = random_blow_up(t, m, 2 * m + 2, it);
        const auto kinds = gap_kinds(t);
        for (size_t g = 0; g < kinds.size(); ++g) {
            if (kinds[g] != GapKind::bottom) continue;
            BlowUpSpec mutated = spec;
            mutated.gap_blocks[g] = make_block("", m);
            CHECK_THROWS_AS(blow_up(mutated), DomainError);
            Shape broken = detail::blow_up_unchecked(mutated);
            Shape d = broken;
            for (int i = 0; i < m; ++i) d = derivative(d);
            CHECK_FALSE(cyclic_equal(d, t));
        }
        ++tried;
    }
}

TEST_CASE("blow-up spec text form round-trips") {
    const BlowUpSpec spec = spec_of("+-", 1, {"", "-+"});
    const std::string text = format_blow_up_spec(spec);
    CHECK(text == "base=+-\nm=1\ngap0=\ngap1=-+\n");
    const BlowUpSpec back = parse_blow_up_spec(text);
    CHECK(back.base == spec.base);
    CHECK(back.depth == spec.depth);
    CHECK(back.gap_blocks == spec.gap_blocks);

    CHECK_THROWS_AS(parse_blow_up_spec("base=+-\nm=1\ngap0=\n"), ParseError);
    CHECK_THROWS_AS(parse_blow_up_spec("m=1\nbase=+-\ngap0=\ngap1=\n"), ParseError);
    // A structurally fine file whose blocks break the band is a domain error.
    CHECK_THROWS_AS(parse_blow_up_spec("base=+-\nm=1\ngap0=+-\ngap1=-+\n"), DomainError);
}
