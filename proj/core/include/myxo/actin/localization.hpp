#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "myxo/actin/automaton.hpp"

namespace myxo::actin {

/// Search parameters of the space-time pattern detector. Caps keep the search
/// tractable on long diagrams; all are overridable.
struct DetectorOptions {
    std::size_t window = 256;     ///< lookahead per candidate, in rows
    std::size_t max_period = 64;  ///< largest period searched
    std::size_t max_width = 32;   ///< widest pattern considered, in cells
    std::size_t min_repeats = 2;  ///< recurrences required after the first sighting
    std::size_t join_gap = 1;     ///< resting cells bridged inside one pattern
};

enum class LocalizationKind : std::uint8_t {
    Mobile,     ///< recurs shifted: displacement != 0 per period
    Generator,  ///< stationary and emitting activity every period
    Oscillator, ///< stationary, no emission observed
};

std::string_view to_string(LocalizationKind k);

struct LocalizationRecord {
    LocalizationKind kind = LocalizationKind::Mobile;
    std::size_t period = 0;
    std::ptrdiff_t displacement = 0; ///< cells per period, signed
    std::size_t first_seen_step = 0; ///< row of the first sighting
    std::size_t position = 0;        ///< left edge of the bounding box then
    std::size_t width = 0;           ///< bounding-box width
};

/// Finds maximal compact non-resting patterns that recur periodically,
/// possibly shifted. A pattern is a run of non-resting cells (gaps of up to
/// join_gap resting cells are bridged) no wider than max_width. A record is
/// produced when the same bounding-box content recurs min_repeats times at a
/// fixed (period, displacement), with |displacement| <= period. Displacement
/// zero is classified Generator when non-resting activity appears beyond the
/// pattern's immediate margin during each of the first two periods, otherwise
/// Oscillator. Later sightings of an already-reported pattern, including its
/// intermediate phases, are not reported again.
///
/// Requires diagram.rows() >= 2 * options.window (UsageError otherwise).
std::vector<LocalizationRecord> detect_localizations(const SpaceTimeDiagram& diagram,
                                                     const DetectorOptions& options = {});

} // namespace myxo::actin
