#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace collatzdb {

using BigInt = boost::multiprecision::cpp_int;
using Digit = std::uint32_t;

// A finite word b_0 b_1 ... b_{n-1} over the alphabet {0, ..., base-1}.
//
// The word is read least significant digit first: its numeric value is
// sum b_i * base^i. Text rendering follows the same order, so the word
// "10110" in base 2 is the residue 13 mod 32. Bases up to 36 render one
// character per digit (0-9 then a-z); larger bases join digits with '.'.
class DigitWord {
public:
    explicit DigitWord(std::uint32_t base = 2);
    DigitWord(std::uint32_t base, std::vector<Digit> digits);

    static DigitWord parse(std::string_view text, std::uint32_t base);
    // The `length` least significant base-p digits of `value` (taken mod base^length,
    // nonnegative representative).
    static DigitWord from_value(const BigInt& value, std::uint32_t base, std::size_t length);
    static DigitWord from_value(std::uint64_t value, std::uint32_t base, std::size_t length);

    std::uint32_t base() const noexcept { return base_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }
    Digit operator[](std::size_t i) const { return digits_[i]; }
    std::span<const Digit> digits() const noexcept { return digits_; }
    auto begin() const noexcept { return digits_.begin(); }
    auto end() const noexcept { return digits_.end(); }

    BigInt value() const;
    // Throws InvalidInput if the value does not fit.
    std::uint64_t value_u64() const;

    std::string to_string() const;

    // Left rotation: rotated(1) of b_0 b_1 ... b_{n-1} is b_1 ... b_{n-1} b_0.
    DigitWord rotated(std::size_t shift) const;
    DigitWord prefix(std::size_t count) const;
    DigitWord drop_front(std::size_t count) const;
    DigitWord reversed() const;
    // True when the word is not a proper power u^j, j >= 2.
    bool is_primitive() const;

    void push_back(Digit d);
    DigitWord& append(const DigitWord& other);

    friend bool operator==(const DigitWord&, const DigitWord&) = default;
    // Lexicographic on digits (a proper prefix sorts first), then base.
    friend std::strong_ordering operator<=>(const DigitWord& a, const DigitWord& b);

private:
    std::uint32_t base_;
    std::vector<Digit> digits_;
};

std::ostream& operator<<(std::ostream& os, const DigitWord& w);

}  // namespace collatzdb
