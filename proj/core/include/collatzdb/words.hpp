#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "collatzdb/digit_word.hpp"
#include "collatzdb/limits.hpp"

namespace collatzdb {

int mobius(std::uint64_t n);

// Number of Lyndon words of length k over p letters: (1/k) sum_{d|k} mu(d) p^{k/d}.
BigInt necklace_count(std::uint32_t p, unsigned k);

// True iff w is non-empty and strictly smaller than each of its proper rotations.
bool is_lyndon_word(const DigitWord& w);

class LyndonWord {
public:
    // Throws InvalidInput if w is not a Lyndon word.
    explicit LyndonWord(DigitWord w);

    const DigitWord& word() const noexcept { return word_; }
    std::size_t size() const noexcept { return word_.size(); }
    std::string to_string() const { return word_.to_string(); }

    friend bool operator==(const LyndonWord&, const LyndonWord&) = default;
    friend auto operator<=>(const LyndonWord&, const LyndonWord&) = default;

private:
    DigitWord word_;
};

enum class LyndonLengths { exact, dividing };

// Visits every Lyndon word of length 1..max_len over p letters in
// lexicographic order (Duval's generation).
void for_each_lyndon_word(std::uint32_t p, unsigned max_len,
                          const std::function<void(const DigitWord&)>& visit);

// `exact`: the words of length k. `dividing`: the words whose length divides k.
// Both come out in lexicographic order, which for `dividing` is the FKM order.
std::vector<LyndonWord> lyndon_words(std::uint32_t p, unsigned k, LyndonLengths mode,
                                     const Limits& limits = {});

// Concatenation of lyndon_words(p, k, dividing): a cyclic De Bruijn sequence of order k.
DigitWord fkm_sequence(std::uint32_t p, unsigned k, const Limits& limits = {});

// True iff |s| = p^k and every length-k word occurs exactly once among the
// cyclic windows of s.
bool verify_debruijn_sequence(const DigitWord& s, std::uint32_t p, unsigned k);

}  // namespace collatzdb
