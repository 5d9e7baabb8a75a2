#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "collatzdb/arith.hpp"
#include "collatzdb/conjugacy.hpp"
#include "collatzdb/maps.hpp"
#include "collatzdb/words.hpp"

namespace collatzdb {

// A periodic orbit of a branch map over the rationals together with its
// integer shadow: scaling by the common denominator b turns the cycle of T
// into an integer cycle of the 3n+b map.
struct RationalCycle {
    DigitWord word;                   // residues of elements mod p, one period
    std::vector<Rational> elements;   // f(elements[i]) == elements[i+1], cyclically
    BigInt b;                         // common reduced denominator, positive
    std::vector<BigInt> integer_cycle;  // elements[i] * b

    friend bool operator==(const RationalCycle&, const RationalCycle&) = default;
};

// The unique x whose orbit follows the digit word w for |w| steps and returns
// to x. Throws InvalidInput if w is empty or the composed slope equals p^|w|,
// and InvariantViolation if x does not actually follow w.
Rational cycle_from_word(const BranchMap& f, const DigitWord& w);

// Walks the cycle of f through x for `length` steps and packages it.
RationalCycle rational_cycle_at(const BranchMap& f, const Rational& x, std::size_t length);

// The T-cycle encoded by a primitive binary word, listed from the rotation given.
// Checks at runtime that b comes out odd and coprime to 3.
RationalCycle b_of_lyndon_word(const DigitWord& w);
RationalCycle b_of_lyndon_word(const LyndonWord& w);

// Direct-iteration check that `cycle` is a cycle of n -> n/2, (3n+b)/2.
bool is_integer_cycle_of_3n_plus_b(const BigInt& b, const std::vector<BigInt>& cycle);

// All T-cycles of denominator exactly b among binary Lyndon words of length
// <= max_len, ordered by (length, word). Each is re-verified by iterating 3n+b.
std::vector<RationalCycle> enumerate_cycles_for_b(const BigInt& b, unsigned max_len);

struct CyclicOrbit {
    RationalCycle cycle;      // listed from its least element
    std::size_t preperiod;    // steps from the start to cycle.elements[0]
    std::size_t tail_length;  // steps from the start to the first cycle element met
};

struct UndeterminedOrbit {
    std::size_t steps_used;
};

using OrbitClass = std::variant<CyclicOrbit, UndeterminedOrbit>;

OrbitClass classify_orbit(const BranchMap& f, const Rational& r,
                          std::size_t max_steps = kDefaultMaxSteps);

// {"word": "...", "b": int, "rational_cycle": ["p/q",...], "integer_cycle": [int,...]}
std::string cycle_to_json(const RationalCycle& c);

}  // namespace collatzdb
