#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pancyc/schema.hpp"
#include "pancyc/spectrum.hpp"

namespace pancyc {

namespace detail {

// Applies a position relabeling and re-normalizes chord/feet order.
inline Schema relabel_positions(const Schema& s, const std::vector<int>& map) {
    Schema out;
    out.positions = s.positions;
    out.name = s.name;
    for (auto [a, b] : s.chords) {
        const int x = map[a], y = map[b];
        out.chords.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(out.chords.begin(), out.chords.end());
    for (int p : s.feet) out.feet.push_back(map[p]);
    std::sort(out.feet.begin(), out.feet.end());
    return out;
}

inline std::string encode_schema(const Schema& s) {
    std::string key;
    key += static_cast<char>(s.positions);
    key += static_cast<char>(s.chords.size());
    key += static_cast<char>(s.feet.size());
    for (auto [a, b] : s.chords) {
        key += static_cast<char>(a);
        key += static_cast<char>(b);
    }
    for (int p : s.feet) key += static_cast<char>(p);
    return key;
}

}  // namespace detail

// Equal keys iff two schemas differ only by a rotation/reflection of the
// boundary cycle (the hub, when present, stays fixed). The key doubles as a
// deterministic sort key and decodes back into the canonical representative.
inline std::string schema_canonical_key(const Schema& s) {
    validate_schema(s);
    if (s.positions == 0) return detail::encode_schema(s);
    const int k = s.positions;
    std::string best;
    std::vector<int> map(k);
    for (int refl = 0; refl < 2; ++refl) {
        for (int shift = 0; shift < k; ++shift) {
            for (int i = 0; i < k; ++i)
                map[i] = refl ? ((shift - i) % k + k) % k : (i + shift) % k;
            std::string key = detail::encode_schema(detail::relabel_positions(s, map));
            if (best.empty() || key < best) best = std::move(key);
        }
    }
    return best;
}

namespace detail {

inline Schema decode_schema(const std::string& key) {
    Schema s;
    std::size_t at = 0;
    s.positions = key[at++];
    const int nc = key[at++];
    const int nf = key[at++];
    for (int i = 0; i < nc; ++i) {
        const int a = key[at++];
        const int b = key[at++];
        s.chords.emplace_back(a, b);
    }
    for (int i = 0; i < nf; ++i) s.feet.push_back(key[at++]);
    return s;
}

// All ways to choose `want` chords from the position pairs of a k-cycle plus
// `nfeet` hub feet so that every position carries at least one attachment,
// deduplicated by canonical key.
inline void collect_classes(int k, int want_chords, int nfeet, std::map<std::string, char>& seen) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
    const int np = static_cast<int>(pairs.size());
    if (want_chords > np) return;

    std::vector<int> chord_at(want_chords), foot_at(nfeet);
    Schema s;
    s.positions = k;
    const std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);

    auto emit = [&]() {
        s.chords.clear();
        s.feet.clear();
        std::uint32_t covered = 0;
        for (int ci : chord_at) {
            s.chords.push_back(pairs[ci]);
            covered |= 1u << pairs[ci].first;
            covered |= 1u << pairs[ci].second;
        }
        for (int p : foot_at) {
            s.feet.push_back(p);
            covered |= 1u << p;
        }
        if (covered != full) return;
        seen.emplace(schema_canonical_key(s), 0);
    };

    auto feet_rec = [&](auto&& self, int idx, int from) -> void {
        if (idx == nfeet) {
            emit();
            return;
        }
        for (int p = from; p < k; ++p) {
            foot_at[idx] = p;
            self(self, idx + 1, p + 1);
        }
    };
    auto chords_rec = [&](auto&& self, int idx, int from) -> void {
        if (idx == want_chords) {
            feet_rec(feet_rec, 0, 0);
            return;
        }
        for (int ci = from; ci < np; ++ci) {
            chord_at[idx] = ci;
            self(self, idx + 1, ci + 1);
        }
    };
    chords_rec(chords_rec, 0, 0);
}

}  // namespace detail

// Exactly one representative per dihedral equivalence class of schemas with
// edge excess m: chords only for the pancyclic/bipancyclic families, hub feet
// plus chords for the oddly family. Output is sorted by canonical key and
// named P{k}C{chords}[H{feet}]-{index within that shape}.
inline std::vector<Schema> enumerate_schemas(Family family, int m) {
    const bool hubbed = family == Family::oddly_bipancyclic;
    if (hubbed && (m < 2 || m > 5))
        throw std::invalid_argument("oddly edge excess must be between 2 and 5");
    if (!hubbed && (m < 0 || m > 5))
        throw std::invalid_argument("edge excess must be between 0 and 5");

    std::map<std::string, char> classes;
    if (!hubbed) {
        if (m == 0) {
            Schema bare;
            bare.positions = 0;
            bare.name = "P0C0-0";
            return {bare};
        }
        for (int k = 2; k <= 2 * m; ++k) detail::collect_classes(k, m, 0, classes);
    } else {
        for (int d = 2; d <= m; ++d) {
            const int c = m - d;
            for (int k = std::max(2, d); k <= 2 * c + d; ++k) detail::collect_classes(k, c, d, classes);
        }
    }

    std::vector<Schema> out;
    std::map<std::string, int> shape_counter;
    for (const auto& [key, unused] : classes) {
        (void)unused;
        Schema s = detail::decode_schema(key);
        std::string shape = "P" + std::to_string(s.positions) + "C" + std::to_string(s.chords.size());
        if (!s.feet.empty()) shape += "H" + std::to_string(s.feet.size());
        s.name = shape + "-" + std::to_string(shape_counter[shape]++);
        validate_schema(s);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace pancyc
