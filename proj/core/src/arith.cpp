#include "collatzdb/arith.hpp"

#include <limits>
#include <ostream>

#include "collatzdb/errors.hpp"
#include "collatzdb/limits.hpp"

namespace collatzdb {

std::uint64_t checked_power(std::uint64_t base, unsigned exponent) noexcept {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) return 0;
        result *= base;
    }
    return result;
}

std::uint64_t require_power_within(std::uint64_t base, unsigned exponent, std::uint64_t limit,
                                   const char* what) {
    const std::uint64_t n = checked_power(base, exponent);
    if (n == 0 || n > limit) {
        throw ResourceLimitExceeded(std::string(what) + ": " + std::to_string(base) + "^" +
                                    std::to_string(exponent) + " exceeds the limit of " +
                                    std::to_string(limit));
    }
    return n;
}

// --- Rational ---------------------------------------------------------------

Rational::Rational(const BigInt& integer) : num_(integer), den_(1) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator)
    : num_(numerator), den_(denominator) {
    if (den_ == 0) throw InvalidInput("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) throw InvalidInput("malformed rational: empty integer part");
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9') {
                throw InvalidInput("malformed rational: '" + std::string(s) + "'");
            }
        }
        BigInt v{std::string(s.substr(i))};
        return (s[0] == '-') ? BigInt{-v} : v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw InvalidInput("malformed rational: signed denominator");
    }
    return Rational(parse_int(text.substr(0, slash)), parse_int(den_text));
}

std::string Rational::to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InvalidInput("division by zero rational");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// --- modular helpers ---------------------------------------------------------

BigInt floor_mod(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    if (m <= 0) throw InvalidInput("mod_inverse: modulus must be positive");
    if (m == 1) return 0;
    // extended Euclid on (a mod m, m)
    BigInt old_r = floor_mod(a, m), r = m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        const BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) {
        throw InvalidInput("mod_inverse: " + a.str() + " is not invertible modulo " + m.str());
    }
    return floor_mod(old_s, m);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m <= 0) throw InvalidInput("mod_inverse: modulus must be positive");
    if (m == 1) return 0;
    std::int64_t old_r = floor_mod(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) {
        throw InvalidInput("mod_inverse: " + std::to_string(a) + " is not invertible modulo " +
                           std::to_string(m));
    }
    return floor_mod(old_s, m);
}

std::uint32_t padic_residue(const Rational& r, std::uint32_t p) {
    if (p < 2) throw InvalidInput("p-adic base must be at least 2");
    const auto den_mod = static_cast<std::int64_t>(r.denominator() % p);
    if (boost::multiprecision::gcd(r.denominator(), BigInt{p}) != 1) {
        throw InvalidInput("denominator " + r.denominator().str() + " is not coprime to p = " +
                           std::to_string(p));
    }
    const auto num_mod = static_cast<std::int64_t>(floor_mod(r.numerator(), BigInt{p}));
    const std::int64_t inv = mod_inverse(den_mod, static_cast<std::int64_t>(p));
    return static_cast<std::uint32_t>((num_mod * inv) % static_cast<std::int64_t>(p));
}

DigitWord padic_digits(const Rational& r, std::uint32_t p, std::size_t count) {
    if (p < 2) throw InvalidInput("p-adic base must be at least 2");
    if (boost::multiprecision::gcd(r.denominator(), BigInt{p}) != 1) {
        throw InvalidInput("padic_digits: denominator " + r.denominator().str() +
                           " is not coprime to p = " + std::to_string(p));
    }
    const BigInt& den = r.denominator();
    const auto pp = static_cast<std::int64_t>(p);
    const std::int64_t den_inv = mod_inverse(static_cast<std::int64_t>(den % p), pp);
    // invariant: the remaining value is num/den
    BigInt num = r.numerator();
    std::vector<Digit> digits;
    digits.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto num_mod = static_cast<std::int64_t>(floor_mod(num, BigInt{p}));
        const auto d = static_cast<Digit>((num_mod * den_inv) % pp);
        digits.push_back(d);
        num = (num - den * d) / p;
    }
    return DigitWord(p, std::move(digits));
}

// --- eventually periodic expansions ----------------------------------------

EventuallyPeriodicDigits::EventuallyPeriodicDigits(DigitWord preperiod, DigitWord period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty()) throw InvalidInput("eventually periodic digits need a non-empty period");
    if (preperiod_.base() != period_.base()) {
        throw InvalidInput("preperiod and period must share a base");
    }
    const std::size_t n = period_.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const DigitWord head = period_.prefix(d);
        bool repeats = true;
        for (std::size_t i = d; i < n && repeats; ++i) repeats = period_[i] == period_[i % d];
        if (repeats) {
            period_ = head;
            break;
        }
    }
    // fold trailing preperiod digits into the period: u a (v a)* == u (a v)*
    while (!preperiod_.empty() && preperiod_[preperiod_.size() - 1] == period_[period_.size() - 1]) {
        preperiod_ = preperiod_.prefix(preperiod_.size() - 1);
        period_ = period_.rotated(period_.size() - 1);
    }
}

DigitWord EventuallyPeriodicDigits::unroll(std::size_t count) const {
    std::vector<Digit> digits;
    digits.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (i < preperiod_.size()) {
            digits.push_back(preperiod_[i]);
        } else {
            digits.push_back(period_[(i - preperiod_.size()) % period_.size()]);
        }
    }
    return DigitWord(base(), std::move(digits));
}

std::string EventuallyPeriodicDigits::to_string() const {
    return preperiod_.to_string() + "(" + period_.to_string() + ")";
}

Rational rational_from_periodic(const EventuallyPeriodicDigits& d) {
    const BigInt p{d.base()};
    const BigInt pre_scale = boost::multiprecision::pow(p, static_cast<unsigned>(d.preperiod().size()));
    const BigInt per_scale = boost::multiprecision::pow(p, static_cast<unsigned>(d.period().size()));
    return Rational(d.preperiod().value()) +
           Rational(pre_scale * d.period().value(), BigInt{1} - per_scale);
}

}  // namespace collatzdb

std::size_t std::hash<collatzdb::Rational>::operator()(const collatzdb::Rational& r) const noexcept {
    const std::size_t h1 = std::hash<collatzdb::BigInt>{}(r.numerator());
    const std::size_t h2 = std::hash<collatzdb::BigInt>{}(r.denominator());
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}
