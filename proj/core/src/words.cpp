#include "collatzdb/words.hpp"

#include "collatzdb/errors.hpp"

namespace collatzdb {

int mobius(std::uint64_t n) {
    if (n == 0) throw InvalidInput("mobius is defined for n >= 1");
    int sign = 1;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        n /= q;
        if (n % q == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

BigInt necklace_count(std::uint32_t p, unsigned k) {
    if (p < 2) throw InvalidInput("necklace count needs p >= 2");
    if (k < 1) throw InvalidInput("necklace count needs k >= 1");
    BigInt sum = 0;
    for (unsigned d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        const int mu = mobius(d);
        if (mu == 0) continue;
        const BigInt term = boost::multiprecision::pow(BigInt{p}, k / d);
        sum += mu > 0 ? term : BigInt{-term};
    }
    if (sum % k != 0) throw InvariantViolation("Mobius sum not divisible by k");
    return sum / k;
}

bool is_lyndon_word(const DigitWord& w) {
    if (w.empty()) return false;
    for (std::size_t s = 1; s < w.size(); ++s) {
        if (!(w < w.rotated(s))) return false;
    }
    return true;
}

LyndonWord::LyndonWord(DigitWord w) : word_(std::move(w)) {
    if (!is_lyndon_word(word_)) {
        throw InvalidInput("'" + word_.to_string() + "' is not a Lyndon word");
    }
}

void for_each_lyndon_word(std::uint32_t p, unsigned max_len,
                          const std::function<void(const DigitWord&)>& visit) {
    if (p < 2) throw InvalidInput("Lyndon words need p >= 2");
    if (max_len < 1) return;
    std::vector<Digit> w{0};
    while (!w.empty()) {
        visit(DigitWord(p, w));
        // extend periodically to max_len, drop trailing maximal letters, bump the last one
        const std::size_t len = w.size();
        w.resize(max_len);
        for (std::size_t i = len; i < max_len; ++i) w[i] = w[i - len];
        while (!w.empty() && w.back() == p - 1) w.pop_back();
        if (!w.empty()) ++w.back();
    }
}

std::vector<LyndonWord> lyndon_words(std::uint32_t p, unsigned k, LyndonLengths mode,
                                     const Limits& limits) {
    if (k < 1) throw InvalidInput("Lyndon words need k >= 1");
    require_power_within(p, k, limits.max_vertices, "Lyndon word enumeration");
    std::vector<LyndonWord> out;
    for_each_lyndon_word(p, k, [&](const DigitWord& w) {
        const bool keep = mode == LyndonLengths::exact ? w.size() == k : k % w.size() == 0;
        if (keep) out.emplace_back(w);
    });
    return out;
}

DigitWord fkm_sequence(std::uint32_t p, unsigned k, const Limits& limits) {
    if (k < 1) throw InvalidInput("FKM sequence needs k >= 1");
    require_power_within(p, k, limits.max_vertices, "FKM sequence");
    DigitWord out(p);
    for_each_lyndon_word(p, k, [&](const DigitWord& w) {
        if (k % w.size() == 0) out.append(w);
    });
    return out;
}

bool verify_debruijn_sequence(const DigitWord& s, std::uint32_t p, unsigned k) {
    if (p < 2 || k < 1) return false;
    const std::uint64_t n = checked_power(p, k);
    if (n == 0 || s.size() != n) return false;
    for (Digit d : s) {
        if (d >= p) return false;
    }
    // window i read most significant first, so sliding is (w mod p^{k-1}) * p + next
    const std::uint64_t high = n / p;
    std::vector<bool> seen(n, false);
    std::uint64_t w = 0;
    for (unsigned j = 0; j < k; ++j) w = w * p + s[j % n];
    for (std::uint64_t i = 0; i < n; ++i) {
        if (seen[w]) return false;
        seen[w] = true;
        w = (w % high) * p + s[(i + k) % n];
    }
    return true;
}

}  // namespace collatzdb
