#include <doctest.h>

#include "myxo/actin/localization.hpp"
#include "myxo/errors.hpp"

using namespace myxo::actin;

namespace {

SpaceTimeDiagram blank_diagram(std::size_t n, std::size_t rows) {
    SpaceTimeDiagram d;
    d.chain_id = ChainId::X;
    d.n = n;
    d.cells.assign(n * rows, NodeState::Resting);
    return d;
}

void plant(SpaceTimeDiagram& d, std::size_t row, std::size_t pos, std::string_view pattern) {
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        d.cells[row * d.n + pos + i] = pattern[i] == '+'   ? NodeState::Excited
                                       : pattern[i] == '-' ? NodeState::Refractory
                                                           : NodeState::Resting;
    }
}

DetectorOptions small_window() {
    DetectorOptions opt;
    opt.window = 10;
    return opt;
}

} // namespace

TEST_CASE("uniformly resting diagram yields no localizations") {
    const auto d = blank_diagram(64, 40);
    CHECK(detect_localizations(d, small_window()).empty());
}

TEST_CASE("window larger than the diagram is a usage error") {
    const auto d = blank_diagram(16, 8);
    DetectorOptions opt;
    opt.window = 5; // needs >= 10 rows
    CHECK_THROWS_AS(detect_localizations(d, opt), myxo::UsageError);
}

TEST_CASE("hand-planted glider: translated 1 cell every 2 rows") {
    auto d = blank_diagram(64, 40);
    for (std::size_t k = 0; k < 12; ++k) {
        plant(d, 2 * k, 5 + k, "+-");
    }
    const auto recs = detect_localizations(d, small_window());
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].kind == LocalizationKind::Mobile);
    CHECK(recs[0].period == 2);
    CHECK(recs[0].displacement == 1);
    CHECK(recs[0].first_seen_step == 0);
    CHECK(recs[0].position == 5);
}

TEST_CASE("two-phase glider is reported once") {
    auto d = blank_diagram(64, 40);
    for (std::size_t k = 0; k < 12; ++k) {
        plant(d, 2 * k, 5 + k, "+-+");
        plant(d, 2 * k + 1, 5 + k, "-+-");
    }
    const auto recs = detect_localizations(d, small_window());
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].kind == LocalizationKind::Mobile);
    CHECK(recs[0].period == 2);
    CHECK(recs[0].displacement == 1);
}

TEST_CASE("stationary pattern with periodic emissions classifies as a generator") {
    auto d = blank_diagram(64, 48);
    // core oscillates at position 20 with period 4; every period a lone cell
    // travels rightward away from it.
    for (std::size_t k = 0; k + 4 < 48; ++k) {
        plant(d, k, 20, (k % 4 < 2) ? "++" : "+-");
        const std::size_t phase = k % 4;
        // emitted cell: appears 3 cells right of the core and keeps moving
        plant(d, k, 24 + phase + (k / 4) % 2, "+");
    }
    const auto recs = detect_localizations(d, small_window());
    REQUIRE(!recs.empty());
    bool has_generator = false;
    for (const auto& r : recs) {
        if (r.kind == LocalizationKind::Generator && r.position == 20) has_generator = true;
    }
    CHECK(has_generator);
}

TEST_CASE("stationary pattern without emissions classifies as an oscillator") {
    auto d = blank_diagram(64, 40);
    for (std::size_t k = 0; k < 40; ++k) {
        plant(d, k, 30, (k % 2 == 0) ? "+-" : "-+");
    }
    const auto recs = detect_localizations(d, small_window());
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].kind == LocalizationKind::Oscillator);
    CHECK(recs[0].displacement == 0);
    CHECK(recs[0].period == 2);
}

TEST_CASE("patterns wider than the cap are ignored") {
    auto d = blank_diagram(128, 40);
    DetectorOptions opt = small_window();
    opt.max_width = 8;
    for (std::size_t k = 0; k < 40; ++k) {
        plant(d, k, 40, (k % 2 == 0) ? "++++++++++" : "----------"); // width 10
    }
    CHECK(detect_localizations(d, opt).empty());
}
