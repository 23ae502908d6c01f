#include "myxo/actin/localization.hpp"

#include <algorithm>
#include <cstring>
#include <string>
#include <unordered_map>

#include "myxo/errors.hpp"
#include "myxo/rng.hpp"

namespace myxo::actin {

std::string_view to_string(LocalizationKind k) {
    switch (k) {
    case LocalizationKind::Mobile: return "mobile";
    case LocalizationKind::Generator: return "generator";
    case LocalizationKind::Oscillator: return "oscillator";
    }
    return "?";
}

namespace {

struct Island {
    std::size_t left = 0;
    std::size_t right = 0; // inclusive
    std::uint64_t hash = 0;
    bool consumed = false;
    std::size_t width() const noexcept { return right - left + 1; }
};

std::uint64_t content_hash(std::span<const NodeState> row, std::size_t a, std::size_t b) {
    std::uint64_t h = 0x243f6a8885a308d3ull;
    for (std::size_t i = a; i <= b; ++i) {
        h = SplitMix64::mix(h ^ static_cast<std::uint64_t>(row[i]));
    }
    return h;
}

// Maximal non-resting clusters of a row, bridging gaps of up to join_gap
// resting cells. Clusters wider than max_width are dropped.
std::vector<Island> extract_islands(std::span<const NodeState> row,
                                    const DetectorOptions& opt) {
    std::vector<Island> out;
    const std::size_t n = row.size();
    std::size_t i = 0;
    while (i < n) {
        if (row[i] == NodeState::Resting) {
            ++i;
            continue;
        }
        std::size_t start = i;
        std::size_t last = i;
        std::size_t j = i + 1;
        while (j < n) {
            if (row[j] != NodeState::Resting) {
                last = j++;
            } else if (j - last <= opt.join_gap) {
                ++j;
            } else {
                break;
            }
        }
        if (last - start + 1 <= opt.max_width) {
            out.push_back({start, last, content_hash(row, start, last), false});
        }
        i = last + 1;
    }
    return out;
}

bool same_content(std::span<const NodeState> ra, std::size_t a,
                  std::span<const NodeState> rb, std::size_t b, std::size_t width) {
    return std::memcmp(ra.data() + a, rb.data() + b, width) == 0;
}

} // namespace

std::vector<LocalizationRecord> detect_localizations(const SpaceTimeDiagram& diagram,
                                                     const DetectorOptions& opt) {
    const std::size_t rows = diagram.rows();
    if (opt.window == 0 || rows < 2 * opt.window) {
        throw UsageError("detect_localizations: diagram has " + std::to_string(rows) +
                         " rows, need at least 2*window = " + std::to_string(2 * opt.window));
    }
    const std::size_t n = diagram.n;
    const std::size_t max_period = std::min(opt.max_period, opt.window);

    std::vector<std::vector<Island>> islands(rows);
    // Per row: content hash -> indices into islands[row], positions ascending.
    std::vector<std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>> index(rows);
    for (std::size_t k = 0; k < rows; ++k) {
        islands[k] = extract_islands(diagram.row(k), opt);
        for (std::uint32_t ii = 0; ii < islands[k].size(); ++ii) {
            index[k][islands[k][ii].hash].push_back(ii);
        }
    }

    // Finds the island at `row` whose left edge is `pos` and whose content
    // matches the reference box; returns index or -1.
    auto find_match = [&](std::size_t row, std::size_t pos, std::uint64_t hash,
                          std::span<const NodeState> ref_row, std::size_t ref_pos,
                          std::size_t width) -> std::ptrdiff_t {
        auto it = index[row].find(hash);
        if (it == index[row].end()) return -1;
        for (std::uint32_t ii : it->second) {
            const Island& cand = islands[row][ii];
            if (cand.left != pos) continue;
            if (cand.width() != width) return -1;
            return same_content(diagram.row(row), cand.left, ref_row, ref_pos, width) ? ii : -1;
        }
        return -1;
    };

    // Emission test for a stationary pattern: any non-resting cell in the band
    // [left - 2 - period, left - 2] or [right + 2, right + 2 + period] during
    // (base, base + period]. The 1-cell margin next to the box is excluded; it
    // belongs to the pattern's own halo.
    auto emits_during = [&](std::size_t base, std::size_t period, std::size_t left,
                            std::size_t right) {
        const std::size_t lo =
            left >= 2 + period ? left - 2 - period : 0;
        const std::size_t hi = std::min(n - 1, right + 2 + period);
        for (std::size_t r = base + 1; r <= base + period && r < rows; ++r) {
            auto row = diagram.row(r);
            if (left >= 2) {
                for (std::size_t c = lo; c + 1 < left; ++c) {
                    if (row[c] != NodeState::Resting) return true;
                }
            }
            for (std::size_t c = right + 2; c <= hi; ++c) {
                if (row[c] != NodeState::Resting) return true;
            }
        }
        return false;
    };

    std::vector<LocalizationRecord> records;

    for (std::size_t k = 0; k < rows; ++k) {
        for (Island& isl : islands[k]) {
            if (isl.consumed) continue;
            const std::size_t width = isl.width();
            auto ref_row = diagram.row(k);

            std::size_t period = 0;
            std::ptrdiff_t disp = 0;
            bool found = false;
            for (std::size_t p = 2; p <= max_period && !found; ++p) {
                if (k + opt.min_repeats * p >= rows) break;
                auto it = index[k + p].find(isl.hash);
                if (it == index[k + p].end()) continue;
                for (std::uint32_t ii : it->second) {
                    const Island& cand = islands[k + p][ii];
                    const std::ptrdiff_t d = static_cast<std::ptrdiff_t>(cand.left) -
                                             static_cast<std::ptrdiff_t>(isl.left);
                    if (static_cast<std::size_t>(d < 0 ? -d : d) > p) continue;
                    if (cand.width() != width) continue;
                    if (!same_content(diagram.row(k + p), cand.left, ref_row, isl.left, width))
                        continue;
                    // verify the remaining repeats
                    bool ok = true;
                    for (std::size_t r = 2; r <= opt.min_repeats && ok; ++r) {
                        const auto pos = static_cast<std::ptrdiff_t>(isl.left) +
                                         static_cast<std::ptrdiff_t>(r) * d;
                        ok = pos >= 0 &&
                             find_match(k + r * p, static_cast<std::size_t>(pos), isl.hash,
                                        ref_row, isl.left, width) >= 0;
                    }
                    if (ok) {
                        period = p;
                        disp = d;
                        found = true;
                        break;
                    }
                }
            }
            if (!found) continue;

            LocalizationRecord rec;
            rec.period = period;
            rec.displacement = disp;
            rec.first_seen_step = k;
            rec.position = isl.left;
            rec.width = width;
            if (disp != 0) {
                rec.kind = LocalizationKind::Mobile;
            } else {
                const bool e1 = emits_during(k, period, isl.left, isl.right);
                const bool e2 = emits_during(k + period, period, isl.left, isl.right);
                rec.kind = (e1 && e2) ? LocalizationKind::Generator
                                      : LocalizationKind::Oscillator;
            }
            records.push_back(rec);

            // Consume the whole trajectory, intermediate phases included, so
            // one localization yields one record.
            std::size_t last_alive = k;
            {
                std::size_t r = 0;
                std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(isl.left);
                while (k + r * period < rows && pos >= 0) {
                    const std::ptrdiff_t ii =
                        r == 0 ? static_cast<std::ptrdiff_t>(&isl - islands[k].data())
                               : find_match(k + r * period, static_cast<std::size_t>(pos),
                                            isl.hash, ref_row, isl.left, width);
                    if (ii < 0) break;
                    islands[k + r * period][static_cast<std::size_t>(ii)].consumed = true;
                    last_alive = k + r * period;
                    ++r;
                    pos += disp;
                }
            }
            for (std::size_t r = k + 1; r < last_alive; ++r) {
                if ((r - k) % period == 0) continue;
                const std::ptrdiff_t shift =
                    disp * static_cast<std::ptrdiff_t>(r - k) / static_cast<std::ptrdiff_t>(period);
                const std::ptrdiff_t lo = static_cast<std::ptrdiff_t>(isl.left) + shift -
                                          static_cast<std::ptrdiff_t>(period);
                const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(isl.right) + shift +
                                          static_cast<std::ptrdiff_t>(period);
                for (Island& other : islands[r]) {
                    if (other.consumed) continue;
                    if (static_cast<std::ptrdiff_t>(other.right) >= lo &&
                        static_cast<std::ptrdiff_t>(other.left) <= hi) {
                        other.consumed = true;
                    }
                }
            }
        }
    }
    return records;
}

} // namespace myxo::actin
