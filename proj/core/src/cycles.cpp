#include "collatzdb/cycles.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "collatzdb/errors.hpp"

namespace collatzdb {
namespace {

nlohmann::ordered_json bigint_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();  // too wide for a JSON integer
}

}  // namespace

Rational cycle_from_word(const BranchMap& f, const DigitWord& w) {
    if (w.empty()) throw InvalidInput("cycle_from_word needs a non-empty word");
    if (w.base() != f.base()) throw InvalidInput("word base does not match the map's p");
    // after j steps along w: f^j(x) = (slope * x + offset) / p^j
    BigInt slope = 1, offset = 0, scale = 1;
    for (Digit d : w) {
        const Branch& br = f.branch(d);
        slope *= br.multiplier;
        offset = offset * br.multiplier + br.offset * scale;
        scale *= f.base();
    }
    if (slope == scale) {
        throw InvalidInput("word " + w.to_string() + " is degenerate: composed slope equals p^" +
                           std::to_string(w.size()));
    }
    Rational x(offset, scale - slope);
    if (digit_sequence(f, x, w.size()) != w) {
        throw InvariantViolation("fixed point of word " + w.to_string() + " is " + x.to_string() +
                                 ", whose orbit does not follow the word");
    }
    return x;
}

RationalCycle rational_cycle_at(const BranchMap& f, const Rational& x, std::size_t length) {
    RationalCycle c{DigitWord(f.base()), {}, 1, {}};
    Rational cur = x;
    for (std::size_t i = 0; i < length; ++i) {
        c.word.push_back(padic_residue(cur, f.base()));
        c.elements.push_back(cur);
        cur = eval_rational(f, cur);
    }
    if (cur != x) {
        throw InvariantViolation(x.to_string() + " does not return to itself after " +
                                 std::to_string(length) + " steps");
    }
    c.b = x.denominator();
    for (const Rational& e : c.elements) {
        if (e.denominator() != c.b) {
            throw InvariantViolation("cycle elements do not share a denominator");
        }
        c.integer_cycle.push_back(e.numerator());
    }
    return c;
}

RationalCycle b_of_lyndon_word(const DigitWord& w) {
    if (w.base() != 2) throw InvalidInput("b_of_lyndon_word needs a binary word");
    if (!w.is_primitive()) {
        throw InvalidInput("'" + w.to_string() + "' is a proper power; it does not name a cycle");
    }
    const BranchMap t = BranchMap::collatz();
    RationalCycle c = rational_cycle_at(t, cycle_from_word(t, w), w.size());
    if (c.b % 2 == 0 || c.b % 3 == 0) {
        throw InvariantViolation("word " + w.to_string() + " gives b = " + c.b.str() +
                                 ", which is not odd and coprime to 3");
    }
    return c;
}

RationalCycle b_of_lyndon_word(const LyndonWord& w) { return b_of_lyndon_word(w.word()); }

bool is_integer_cycle_of_3n_plus_b(const BigInt& b, const std::vector<BigInt>& cycle) {
    if (cycle.empty()) return false;
    std::vector<BigInt> distinct = cycle;
    std::sort(distinct.begin(), distinct.end());
    if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end()) return false;
    const BranchMap g = BranchMap::an_plus_b(3, static_cast<std::int64_t>(b));
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (eval_int(g, cycle[i]) != cycle[(i + 1) % cycle.size()]) return false;
    }
    return true;
}

std::vector<RationalCycle> enumerate_cycles_for_b(const BigInt& b, unsigned max_len) {
    if (b < 1 || b % 2 == 0 || b % 3 == 0) {
        throw InvalidInput("b must be a positive odd integer coprime to 3, got " + b.str());
    }
    if (b > std::numeric_limits<std::int64_t>::max()) throw InvalidInput("b is too large");
    if (max_len < 1) throw InvalidInput("max_len must be at least 1");

    std::vector<LyndonWord> words;
    for_each_lyndon_word(2, max_len, [&](const DigitWord& w) { words.emplace_back(w); });
    std::stable_sort(words.begin(), words.end(), [](const LyndonWord& a, const LyndonWord& c) {
        return a.size() < c.size();
    });

    std::vector<RationalCycle> out;
    for (const LyndonWord& w : words) {
        RationalCycle c = b_of_lyndon_word(w);
        if (c.b != b) continue;
        if (!is_integer_cycle_of_3n_plus_b(b, c.integer_cycle)) {
            throw InvariantViolation("cycle for word " + w.to_string() +
                                     " is not a cycle of 3n+" + b.str());
        }
        out.push_back(std::move(c));
    }
    return out;
}

OrbitClass classify_orbit(const BranchMap& f, const Rational& r, std::size_t max_steps) {
    const OrbitTrace trace = trace_orbit(f, r, max_steps);
    if (!trace.cycle_start) return UndeterminedOrbit{trace.steps_used};
    const std::size_t start = *trace.cycle_start;
    const auto least = std::min_element(trace.states.begin() + static_cast<std::ptrdiff_t>(start),
                                        trace.states.end());
    const auto offset = static_cast<std::size_t>(least - trace.states.begin()) - start;
    return CyclicOrbit{rational_cycle_at(f, *least, trace.states.size() - start), start + offset,
                       start};
}

std::string cycle_to_json(const RationalCycle& c) {
    nlohmann::ordered_json j;
    j["word"] = c.word.to_string();
    j["b"] = bigint_json(c.b);
    auto& rc = j["rational_cycle"] = nlohmann::ordered_json::array();
    for (const Rational& e : c.elements) rc.push_back(e.to_string());
    auto& ic = j["integer_cycle"] = nlohmann::ordered_json::array();
    for (const BigInt& v : c.integer_cycle) ic.push_back(bigint_json(v));
    return j.dump() + "\n";
}

}  // namespace collatzdb
