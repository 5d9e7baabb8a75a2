#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "collatzdb/digit_word.hpp"
#include "collatzdb/graphs.hpp"
#include "collatzdb/limits.hpp"
#include "collatzdb/maps.hpp"

namespace collatzdb {

// Dense square matrix of exact nonnegative counts (walk counts between vertices).
class CountMatrix {
public:
    explicit CountMatrix(std::size_t dimension);
    static CountMatrix identity(std::size_t dimension);

    std::size_t dimension() const noexcept { return dim_; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

    std::vector<BigInt> row_sums() const;
    std::vector<BigInt> column_sums() const;
    // True when every entry equals the (0,0) entry.
    bool all_entries_equal() const;

    friend CountMatrix operator*(const CountMatrix& a, const CountMatrix& b);
    friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<BigInt> entries_;
};

// Entry (i,j) is 1 when the unlabeled projection of g has an arc i -> j.
CountMatrix adjacency_matrix(const LabeledDigraph& g, const Limits& limits = {});

CountMatrix matrix_power(const CountMatrix& m, std::uint64_t exponent);

struct UniformPowerViolation {
    std::uint64_t exponent;
    std::size_t row;
    std::size_t column;
    BigInt entry;
    BigInt expected;
};

struct UniformPowerReport {
    bool uniform = true;
    std::optional<UniformPowerViolation> first_violation;
};

// Checks that every entry of A^l equals p^{l-k} for l in [k, max_exponent],
// where A is the adjacency matrix of C^(f)(p^k).
UniformPowerReport check_uniform_power(const BranchMap& f, unsigned k, std::uint64_t max_exponent,
                                       const Limits& limits = {});

}  // namespace collatzdb
