#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "semamap/errors.hpp"
#include "semamap/grid.hpp"

namespace semamap {

/// One concept pattern presented to the domain sheet.
struct Stimulus {
    int id = 0;
    char marker = '?';           ///< single display character for text renderings
    std::vector<double> vector;  ///< length = domain neuron count, components in [0, 1]
};

/// An ordered set of stimuli with unique ids and markers.
struct StimulusSet {
    std::vector<Stimulus> stimuli;
    /// Pair of ids expected to map to adjacent regions (the two star variants
    /// in the builtin set).
    std::optional<std::pair<int, int>> declared_similar_pair;

    std::size_t size() const { return stimuli.size(); }

    const Stimulus& by_id(int id) const {
        for (const Stimulus& s : stimuli) {
            if (s.id == id) return s;
        }
        throw not_found_error("stimulus id " + std::to_string(id) + " not in set");
    }

    bool contains(int id) const {
        return std::any_of(stimuli.begin(), stimuli.end(), [&](const Stimulus& s) { return s.id == id; });
    }
};

/// Jaccard overlap |A∩B| / |A∪B| of the active-pixel sets of two binary stimuli.
inline double pixel_overlap(const Stimulus& a, const Stimulus& b) {
    if (a.vector.size() != b.vector.size()) {
        throw dimension_error("pixel_overlap: stimulus vectors have different lengths");
    }
    std::size_t inter = 0, uni = 0;
    for (std::size_t j = 0; j < a.vector.size(); ++j) {
        const bool pa = a.vector[j] != 0.0;
        const bool pb = b.vector[j] != 0.0;
        inter += (pa && pb) ? 1 : 0;
        uni += (pa || pb) ? 1 : 0;
    }
    return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

namespace detail {

struct GlyphSpec {
    int id;
    char marker;
    /// (row, col) offsets inside the fixed 8x8 scene box.
    std::vector<std::pair<int, int>> pixels;
};

/// The ten glyphs, drawn in a fixed 8x8 box. The box is placed at the center
/// of the domain grid, so the overlap structure is identical for every grid
/// size: the two stars share 8 of 10 pixels (overlap 0.8), a handful of other
/// glyphs touch a star tip with exactly one pixel (overlap < 0.1), and the
/// slash/plus pair shares nothing at all.
inline const std::vector<GlyphSpec>& glyph_scene() {
    static const std::vector<GlyphSpec> scene = {
        {1, '*', {{2, 2}, {1, 2}, {3, 2}, {2, 1}, {2, 3}, {0, 0}, {0, 4}, {4, 0}, {4, 4}}},
        {2, '@', {{2, 2}, {1, 2}, {3, 2}, {2, 1}, {2, 3}, {0, 0}, {0, 4}, {4, 0}, {4, 2}}},
        {3, '/', {{0, 7}, {1, 6}, {2, 5}, {3, 4}, {4, 3}}},
        {4, '+', {{5, 1}, {6, 0}, {6, 1}, {6, 2}, {7, 1}}},
        {5, 'o', {{4, 4}, {4, 5}, {4, 6}, {5, 4}, {5, 6}, {6, 4}, {6, 5}, {6, 6}}},
        {6, '#', {{6, 6}, {6, 7}, {7, 6}, {7, 7}}},
        {7, '^', {{4, 4}, {5, 3}, {5, 5}, {6, 3}, {6, 5}}},
        {8, 'x', {{0, 4}, {0, 6}, {1, 5}, {2, 4}, {2, 6}}},
        {9, '-', {{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
        {10, '.', {{1, 0}, {4, 0}, {7, 0}, {7, 5}}},
    };
    return scene;
}

constexpr int kSceneSize = 8;

} // namespace detail

/**
 * @brief The builtin set of ten concept glyphs rendered on the domain grid.
 *
 * Deterministic (no randomness). Stimuli 1 and 2 are two star variants with
 * pixel overlap >= 0.6; every other pair overlaps by at most 0.2. The
 * declared similar pair is (1, 2).
 */
inline StimulusSet builtin_glyph_set(GridShape domain_shape) {
    require_valid_shape(domain_shape, "builtin_glyph_set");
    if (domain_shape.rows < detail::kSceneSize || domain_shape.cols < detail::kSceneSize) {
        throw invalid_shape_error("builtin_glyph_set: domain grid must be at least 8x8, got " +
                                  std::to_string(domain_shape.rows) + "x" + std::to_string(domain_shape.cols));
    }
    const int r0 = (domain_shape.rows - detail::kSceneSize) / 2;
    const int c0 = (domain_shape.cols - detail::kSceneSize) / 2;
    const std::size_t n = domain_shape.neuron_count();

    StimulusSet set;
    set.declared_similar_pair = std::make_pair(1, 2);
    for (const detail::GlyphSpec& g : detail::glyph_scene()) {
        Stimulus s;
        s.id = g.id;
        s.marker = g.marker;
        s.vector.assign(n, 0.0);
        for (auto [dr, dc] : g.pixels) {
            s.vector[domain_shape.index_of(GridPos{r0 + dr, c0 + dc})] = 1.0;
        }
        set.stimuli.push_back(std::move(s));
    }
    return set;
}

/**
 * @brief Check every StimulusSet invariant. Returns the list of violations,
 *        empty when the set is valid. Never throws, never mutates.
 */
inline std::vector<std::string> validate(const StimulusSet& set) {
    std::vector<std::string> violations;
    if (set.stimuli.empty()) {
        violations.push_back("empty set");
        return violations;
    }
    std::set<int> ids;
    std::set<char> markers;
    const std::size_t n = set.stimuli.front().vector.size();
    for (const Stimulus& s : set.stimuli) {
        const std::string tag = "stimulus " + std::to_string(s.id);
        if (!ids.insert(s.id).second) violations.push_back(tag + ": duplicate id");
        if (!markers.insert(s.marker).second) violations.push_back(tag + ": duplicate marker '" + std::string(1, s.marker) + "'");
        if (s.vector.size() != n) violations.push_back(tag + ": vector length differs from the rest of the set");
        double norm_sq = 0.0;
        for (double v : s.vector) {
            if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
                violations.push_back(tag + ": component outside [0, 1]");
                break;
            }
        }
        for (double v : s.vector) norm_sq += v * v;
        if (norm_sq == 0.0) violations.push_back(tag + ": zero norm");
    }
    if (set.declared_similar_pair) {
        auto [a, b] = *set.declared_similar_pair;
        if (!set.contains(a) || !set.contains(b)) {
            violations.push_back("declared similar pair (" + std::to_string(a) + ", " + std::to_string(b) +
                                 ") references a missing id");
        }
    }
    return violations;
}

namespace detail {

inline std::string format_component(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace detail

/**
 * @brief Serialize a stimulus set as CSV: header "id,marker,v0,...,v{n-1}",
 *        one row per stimulus. A declared similar pair is kept in a leading
 *        "# similar_pair:" comment line so that load(save(set)) == set.
 */
inline void save_stimuli(const StimulusSet& set, std::ostream& out) {
    if (set.stimuli.empty()) {
        throw empty_input_error("save_stimuli: empty set");
    }
    if (set.declared_similar_pair) {
        out << "# similar_pair: " << set.declared_similar_pair->first << " "
            << set.declared_similar_pair->second << "\n";
    }
    const std::size_t n = set.stimuli.front().vector.size();
    out << "id,marker";
    for (std::size_t j = 0; j < n; ++j) out << ",v" << j;
    out << "\n";
    for (const Stimulus& s : set.stimuli) {
        out << s.id << "," << s.marker;
        for (double v : s.vector) out << "," << detail::format_component(v);
        out << "\n";
    }
}

inline std::string stimuli_to_csv(const StimulusSet& set) {
    std::ostringstream oss;
    save_stimuli(set, oss);
    return oss.str();
}

inline void save_stimuli(const StimulusSet& set, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("save_stimuli: cannot open '" + path + "' for writing");
    save_stimuli(set, out);
    if (!out) throw io_error("save_stimuli: write to '" + path + "' failed");
}

/// FNV-1a 64-bit digest of the canonical CSV serialization, as a hex string.
/// Recorded next to trained networks so a recall run can verify it is probing
/// the same stimuli the map was trained on.
inline std::string stimulus_checksum(const StimulusSet& set) {
    const std::string csv = stimuli_to_csv(set);
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : csv) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = digits[h & 0xF];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

inline double parse_component(const std::string& field, std::size_t line_no) {
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) {
        throw parse_error("stimulus CSV line " + std::to_string(line_no) + ": cannot parse component '" + field + "'");
    }
    return v;
}

} // namespace detail

/**
 * @brief Parse the stimulus CSV format written by save_stimuli and validate
 *        the result. Distinct errors for parse failures, duplicate ids or
 *        markers, length mismatches, and out-of-range components.
 */
inline StimulusSet load_stimuli(std::istream& in) {
    StimulusSet set;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    std::size_t expected_n = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream iss(line.substr(1));
            std::string key;
            iss >> key;
            if (key == "similar_pair:") {
                int a = 0, b = 0;
                if (!(iss >> a >> b)) {
                    throw parse_error("stimulus CSV line " + std::to_string(line_no) + ": malformed similar_pair comment");
                }
                set.declared_similar_pair = std::make_pair(a, b);
            }
            continue;
        }
        if (!saw_header) {
            auto fields = detail::split_csv_line(line);
            if (fields.size() < 3 || fields[0] != "id" || fields[1] != "marker") {
                throw parse_error("stimulus CSV line " + std::to_string(line_no) +
                                  ": expected header 'id,marker,v0,...'");
            }
            expected_n = fields.size() - 2;
            saw_header = true;
            continue;
        }
        auto fields = detail::split_csv_line(line);
        if (fields.size() != expected_n + 2) {
            throw dimension_error("stimulus CSV line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(expected_n) + " components, got " +
                                  std::to_string(fields.size() >= 2 ? fields.size() - 2 : 0));
        }
        Stimulus s;
        {
            const std::string& f = fields[0];
            auto res = std::from_chars(f.data(), f.data() + f.size(), s.id);
            if (res.ec != std::errc() || res.ptr != f.data() + f.size()) {
                throw parse_error("stimulus CSV line " + std::to_string(line_no) + ": bad id '" + f + "'");
            }
        }
        if (fields[1].size() != 1) {
            throw parse_error("stimulus CSV line " + std::to_string(line_no) +
                              ": marker must be a single character, got '" + fields[1] + "'");
        }
        s.marker = fields[1][0];
        s.vector.reserve(expected_n);
        for (std::size_t j = 0; j < expected_n; ++j) {
            const double v = detail::parse_component(fields[j + 2], line_no);
            if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
                throw invalid_input_error("stimulus CSV line " + std::to_string(line_no) + ": component " +
                                          std::to_string(j) + " = " + fields[j + 2] + " outside [0, 1]");
            }
            s.vector.push_back(v);
        }
        set.stimuli.push_back(std::move(s));
    }

    if (!saw_header) {
        throw parse_error("stimulus CSV: missing header line");
    }
    auto violations = validate(set);
    if (!violations.empty()) {
        std::string msg = "stimulus CSV: invalid set:";
        for (const auto& v : violations) msg += "\n  - " + v;
        throw invalid_input_error(msg);
    }
    return set;
}

inline StimulusSet load_stimuli(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("load_stimuli: cannot open '" + path + "'");
    return load_stimuli(in);
}

} // namespace semamap
