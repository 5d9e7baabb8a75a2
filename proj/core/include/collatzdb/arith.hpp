#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "collatzdb/digit_word.hpp"

namespace collatzdb {

// Exact fraction, always stored reduced with a positive denominator so that
// equality and hashing are structural.
class Rational {
public:
    Rational() = default;
    Rational(const BigInt& integer);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t integer) : Rational(BigInt{integer}) {}  // NOLINT
    Rational(const BigInt& numerator, const BigInt& denominator);

    // Accepts "n" or "n/d" with optional leading sign.
    static Rational parse(std::string_view text);

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }
    std::string to_string() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    BigInt num_{0};
    BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Nonnegative remainder of a modulo m (m > 0).
BigInt floor_mod(const BigInt& a, const BigInt& m);
std::int64_t floor_mod(std::int64_t a, std::int64_t m);

// Inverse of a modulo m in {0, ..., m-1}. Throws InvalidInput unless gcd(a, m) = 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// The p-adic residue of r modulo p: numerator * denominator^{-1} mod p.
// Throws InvalidInput when p divides the denominator.
std::uint32_t padic_residue(const Rational& r, std::uint32_t p);

// First `count` base-p digits of r viewed as a p-adic integer.
DigitWord padic_digits(const Rational& r, std::uint32_t p, std::size_t count);

// A p-adic integer whose digit string is preperiod followed by period repeated
// forever. Stored canonically: the period is primitive and the preperiod
// does not end with a digit that could be folded into the period.
class EventuallyPeriodicDigits {
public:
    EventuallyPeriodicDigits(DigitWord preperiod, DigitWord period);

    std::uint32_t base() const noexcept { return period_.base(); }
    const DigitWord& preperiod() const noexcept { return preperiod_; }
    const DigitWord& period() const noexcept { return period_; }
    // First `count` digits of the infinite expansion.
    DigitWord unroll(std::size_t count) const;
    std::string to_string() const;  // "pre(period)"

    friend bool operator==(const EventuallyPeriodicDigits&,
                           const EventuallyPeriodicDigits&) = default;

private:
    DigitWord preperiod_;
    DigitWord period_;
};

// A + p^{|pre|} * B / (1 - p^{|per|}) where A, B are the values of the
// preperiod and period words.
Rational rational_from_periodic(const EventuallyPeriodicDigits& d);

}  // namespace collatzdb

template <>
struct std::hash<collatzdb::Rational> {
    std::size_t operator()(const collatzdb::Rational& r) const noexcept;
};
