#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "collatzdb/arith.hpp"
#include "collatzdb/graphs.hpp"
#include "collatzdb/limits.hpp"
#include "collatzdb/maps.hpp"

namespace collatzdb {

inline constexpr std::size_t kDefaultMaxSteps = 10'000;

// How the digits x_0 ... x_{k-1} are packed into a vertex id.
enum class DigitOrder {
    least_significant_first,  // sum x_i p^i, the numbering used by build_debruijn_graph
    most_significant_first,   // sum x_i p^{k-1-i}, i.e. digit_reversal after the above
};

// The finite conjugacy map on {0, ..., p^k - 1}: n -> sum_{i<k} x_i(n) p^i
// with x_i(n) = f^i(n) mod p. With most_significant_first the same digits are
// packed in reverse, i.e. vertices numbered with the first digit most significant.
Permutation conjugacy_permutation(const BranchMap& f, unsigned k,
                                  DigitOrder order = DigitOrder::least_significant_first,
                                  const Limits& limits = {});

// True iff conjugacy_permutation(f, k) is an isomorphism C^(f)(p^k) -> B(p,k).
bool verify_conjugacy(const BranchMap& f, unsigned k, const Limits& limits = {});

// Least l >= 1 with phi^l = id.
BigInt permutation_order(const Permutation& phi);

// Phi applied to n mod p^N, giving Phi(n) mod p^N. Throws InvalidInput on the empty word.
DigitWord phi_truncated(const BranchMap& f, const DigitWord& n);

// The unique n mod p^N with phi_truncated(f, n) == target, found one digit at a time.
// Throws InvariantViolation if some prefix does not lift uniquely.
DigitWord phi_inverse_truncated(const BranchMap& f, const DigitWord& target);

struct PhiValue {
    EventuallyPeriodicDigits digits;
    Rational value;
};

struct ConjugacyResult {
    Rational input;
    std::optional<PhiValue> output;  // empty: undetermined within the step budget
    std::size_t steps_used = 0;

    bool exact() const noexcept { return output.has_value(); }
};

// Phi(r) for a rational r whose orbit becomes periodic within max_steps.
// Never guesses: an orbit that has not repeated yet is reported undetermined.
ConjugacyResult phi_exact(const BranchMap& f, const Rational& r,
                          std::size_t max_steps = kDefaultMaxSteps);

// {"size": s, "images": [...], "cycles": [[...],...], "order": l}
std::string permutation_to_json(const Permutation& phi);

}  // namespace collatzdb
