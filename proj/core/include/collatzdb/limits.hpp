#pragma once

#include <cstdint>

namespace collatzdb {

inline constexpr std::uint64_t kDefaultMaxVertices = std::uint64_t{1} << 26;
inline constexpr std::uint64_t kDefaultMaxMatrixDimension = 4096;

// Size guardrails for the finite constructions. Every builder that
// allocates p^k of something checks against these before allocating.
struct Limits {
    std::uint64_t max_vertices = kDefaultMaxVertices;
    std::uint64_t max_matrix_dimension = kDefaultMaxMatrixDimension;
};

// base^exponent, or 0 when the result does not fit in 64 bits.
std::uint64_t checked_power(std::uint64_t base, unsigned exponent) noexcept;

// Returns base^exponent; throws ResourceLimitExceeded if it exceeds `limit`.
std::uint64_t require_power_within(std::uint64_t base, unsigned exponent, std::uint64_t limit,
                                   const char* what);

}  // namespace collatzdb
