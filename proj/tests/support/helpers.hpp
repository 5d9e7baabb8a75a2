#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string_view>
#include <utility>

#include "collatzdb/collatzdb.hpp"

namespace testing_support {

inline collatzdb::DigitWord word(std::string_view text, std::uint32_t base = 2) {
    return collatzdb::DigitWord::parse(text, base);
}

inline collatzdb::Rational q(std::string_view text) { return collatzdb::Rational::parse(text); }

inline std::set<std::pair<std::int64_t, std::int64_t>> arcs_of(const collatzdb::LabeledDigraph& g) {
    std::set<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& [s, t] : g.arc_set()) {
        out.emplace(static_cast<std::int64_t>(s), static_cast<std::int64_t>(t));
    }
    return out;
}

// Every randomized test draws from this fixed seed so failures reproduce.
inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0xC011A72ULL + salt); }

}  // namespace testing_support
