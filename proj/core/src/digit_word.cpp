#include "collatzdb/digit_word.hpp"

#include <algorithm>
#include <ostream>

#include "collatzdb/errors.hpp"

namespace collatzdb {
namespace {

constexpr std::string_view kDigitChars = "0123456789abcdefghijklmnopqrstuvwxyz";

void require_base(std::uint32_t base) {
    if (base < 2) throw InvalidInput("digit word base must be at least 2");
}

}  // namespace

DigitWord::DigitWord(std::uint32_t base) : base_(base) { require_base(base); }

DigitWord::DigitWord(std::uint32_t base, std::vector<Digit> digits)
    : base_(base), digits_(std::move(digits)) {
    require_base(base);
    for (Digit d : digits_) {
        if (d >= base_) {
            throw InvalidInput("digit " + std::to_string(d) + " out of range for base " +
                               std::to_string(base_));
        }
    }
}

DigitWord DigitWord::parse(std::string_view text, std::uint32_t base) {
    require_base(base);
    std::vector<Digit> digits;
    if (base > kDigitChars.size() || text.find('.') != std::string_view::npos) {
        // dotted form: "12.0.7"
        if (text.empty()) return DigitWord(base);
        std::size_t start = 0;
        while (true) {
            const std::size_t dot = text.find('.', start);
            const auto piece = text.substr(start, dot == std::string_view::npos ? dot : dot - start);
            if (piece.empty()) throw InvalidInput("empty digit in dotted word");
            Digit d = 0;
            for (char c : piece) {
                if (c < '0' || c > '9') throw InvalidInput("bad digit character in word");
                d = d * 10 + static_cast<Digit>(c - '0');
                if (d >= base) throw InvalidInput("digit out of range for base");
            }
            digits.push_back(d);
            if (dot == std::string_view::npos) break;
            start = dot + 1;
        }
        return DigitWord(base, std::move(digits));
    }
    digits.reserve(text.size());
    for (char c : text) {
        const char lower = (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
        const auto pos = kDigitChars.find(lower);
        if (pos == std::string_view::npos || pos >= base) {
            throw InvalidInput(std::string("invalid digit '") + c + "' for base " +
                               std::to_string(base));
        }
        digits.push_back(static_cast<Digit>(pos));
    }
    return DigitWord(base, std::move(digits));
}

DigitWord DigitWord::from_value(const BigInt& value, std::uint32_t base, std::size_t length) {
    require_base(base);
    BigInt modulus = boost::multiprecision::pow(BigInt{base}, static_cast<unsigned>(length));
    BigInt v = value % modulus;
    if (v < 0) v += modulus;
    std::vector<Digit> digits(length);
    for (std::size_t i = 0; i < length; ++i) {
        digits[i] = static_cast<Digit>(v % base);
        v /= base;
    }
    return DigitWord(base, std::move(digits));
}

DigitWord DigitWord::from_value(std::uint64_t value, std::uint32_t base, std::size_t length) {
    require_base(base);
    std::vector<Digit> digits(length);
    for (std::size_t i = 0; i < length; ++i) {
        digits[i] = static_cast<Digit>(value % base);
        value /= base;
    }
    return DigitWord(base, std::move(digits));
}

BigInt DigitWord::value() const {
    BigInt v = 0;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) v = v * base_ + *it;
    return v;
}

std::uint64_t DigitWord::value_u64() const {
    const BigInt v = value();
    if (v > std::numeric_limits<std::uint64_t>::max()) {
        throw InvalidInput("digit word value does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(v);
}

std::string DigitWord::to_string() const {
    std::string out;
    if (base_ <= kDigitChars.size()) {
        out.reserve(digits_.size());
        for (Digit d : digits_) out.push_back(kDigitChars[d]);
        return out;
    }
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i) out.push_back('.');
        out += std::to_string(digits_[i]);
    }
    return out;
}

DigitWord DigitWord::rotated(std::size_t shift) const {
    if (digits_.empty()) return *this;
    std::vector<Digit> out(digits_);
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()),
                out.end());
    return DigitWord(base_, std::move(out));
}

DigitWord DigitWord::prefix(std::size_t count) const {
    count = std::min(count, digits_.size());
    return DigitWord(base_, {digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(count)});
}

DigitWord DigitWord::drop_front(std::size_t count) const {
    count = std::min(count, digits_.size());
    return DigitWord(base_, {digits_.begin() + static_cast<std::ptrdiff_t>(count), digits_.end()});
}

DigitWord DigitWord::reversed() const {
    return DigitWord(base_, {digits_.rbegin(), digits_.rend()});
}

bool DigitWord::is_primitive() const {
    const std::size_t n = digits_.size();
    if (n == 0) return false;
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < n && repeats; ++i) repeats = digits_[i] == digits_[i - d];
        if (repeats) return false;
    }
    return true;
}

void DigitWord::push_back(Digit d) {
    if (d >= base_) throw InvalidInput("digit out of range for base");
    digits_.push_back(d);
}

DigitWord& DigitWord::append(const DigitWord& other) {
    if (other.base_ != base_) throw InvalidInput("cannot append words of different bases");
    digits_.insert(digits_.end(), other.digits_.begin(), other.digits_.end());
    return *this;
}

std::strong_ordering operator<=>(const DigitWord& a, const DigitWord& b) {
    const auto cmp = std::lexicographical_compare_three_way(a.digits_.begin(), a.digits_.end(),
                                                            b.digits_.begin(), b.digits_.end());
    if (cmp != 0) return cmp;
    return a.base_ <=> b.base_;
}

std::ostream& operator<<(std::ostream& os, const DigitWord& w) { return os << w.to_string(); }

}  // namespace collatzdb
