#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "collatzdb/arith.hpp"
#include "collatzdb/digit_word.hpp"

namespace collatzdb {

// One affine branch n -> (multiplier * n + offset) / p.
struct Branch {
    std::int64_t multiplier;
    std::int64_t offset;

    friend bool operator==(const Branch&, const Branch&) = default;
};

// A p-branch affine map: f(n) = (a_i n + b_i) / p on the class n = i (mod p).
//
// Construction enforces two admissibility conditions for every branch i:
//   a_i * i + b_i = 0 (mod p)   -- the branch is integral on its class
//   gcd(a_i, p) = 1             -- successor digits are spread over all residues
// The second condition is what makes the modular graph of f a De Bruijn graph.
class BranchMap {
public:
    BranchMap(std::uint32_t p, std::vector<Branch> branches);

    // T(n) = n/2 or (3n+1)/2.
    static BranchMap collatz();
    // T^(a,b)(n) = n/2 or (an+b)/2; a and b must be odd.
    static BranchMap an_plus_b(std::int64_t a, std::int64_t b);
    // f0(n) = 2n/3, (4n-1)/3, (4n+1)/3 on n = 0, 1, 2 (mod 3).
    static BranchMap collatz_original();
    // sigma(n) = n/2 or (n-1)/2, i.e. T^(1,-1).
    static BranchMap shift();

    std::uint32_t base() const noexcept { return p_; }
    const Branch& branch(std::uint32_t residue) const { return branches_.at(residue); }
    std::span<const Branch> branches() const noexcept { return branches_; }

    // {"p": int, "branches": [[a_0,b_0], ...]}
    std::string to_json() const;
    static BranchMap from_json(std::string_view text);

    friend bool operator==(const BranchMap&, const BranchMap&) = default;

private:
    std::uint32_t p_;
    std::vector<Branch> branches_;
};

// Presets by name: "collatz", "shift", "collatz-original", "an+b(a,b)".
BranchMap parse_map_preset(std::string_view name);

BigInt eval_int(const BranchMap& f, const BigInt& n);
inline BigInt eval_int(const BranchMap& f, std::int64_t n) { return eval_int(f, BigInt{n}); }

// Branch chosen by the p-adic residue of r.
Rational eval_rational(const BranchMap& f, const Rational& r);

// Digit i is f^i(n) mod p.
DigitWord digit_sequence(const BranchMap& f, const Rational& n, std::size_t k);
DigitWord digit_sequence(const BranchMap& f, const BigInt& n, std::size_t k);
inline DigitWord digit_sequence(const BranchMap& f, std::int64_t n, std::size_t k) {
    return digit_sequence(f, BigInt{n}, k);
}

// f(n) mod p^{N-1} from n mod p^N. Throws InvalidInput on the empty word.
DigitWord eval_truncated(const BranchMap& f, const DigitWord& n);

// f(n) mod `modulus` for a residue n >= 0. Requires that n is known modulo
// p * modulus (which is the only information f(n) mod modulus depends on).
std::uint64_t eval_residue(const BranchMap& f, std::uint64_t n, std::uint64_t modulus);

// Exact orbit of a rational, recorded until the first repeated state.
struct OrbitTrace {
    // states[0] is the start. When cycle_start is set, states[*cycle_start ..]
    // is exactly one period and f(states.back()) == states[*cycle_start].
    std::vector<Rational> states;
    std::optional<std::size_t> cycle_start;
    std::size_t steps_used = 0;
};

// Applies f at most max_steps times, detecting repeats by exact state hashing.
OrbitTrace trace_orbit(const BranchMap& f, const Rational& start, std::size_t max_steps);

}  // namespace collatzdb
