#include "collatzdb/maps.hpp"

#include <charconv>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "collatzdb/errors.hpp"

namespace collatzdb {
namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        const std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t parse_int64(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw InvalidInput("expected an integer, got '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

BranchMap::BranchMap(std::uint32_t p, std::vector<Branch> branches)
    : p_(p), branches_(std::move(branches)) {
    if (p_ < 2) throw InvalidInput("branch map needs p >= 2");
    if (branches_.size() != p_) {
        throw InvalidInput("branch map with p = " + std::to_string(p_) + " needs exactly " +
                           std::to_string(p_) + " branches, got " +
                           std::to_string(branches_.size()));
    }
    const auto pp = static_cast<std::int64_t>(p_);
    for (std::uint32_t i = 0; i < p_; ++i) {
        const auto [a, b] = branches_[i];
        if (gcd64(a, pp) != 1) {
            throw InvalidInput("branch " + std::to_string(i) + ": multiplier " + std::to_string(a) +
                               " is not coprime to p = " + std::to_string(p_));
        }
        const __int128 v = static_cast<__int128>(a) * i + b;
        if (v % pp != 0) {
            throw InvalidInput("branch " + std::to_string(i) + ": (" + std::to_string(a) + "*" +
                               std::to_string(i) + " + " + std::to_string(b) +
                               ") is not divisible by p = " + std::to_string(p_));
        }
    }
}

BranchMap BranchMap::collatz() { return BranchMap(2, {{1, 0}, {3, 1}}); }

BranchMap BranchMap::an_plus_b(std::int64_t a, std::int64_t b) {
    if (a % 2 == 0 || b % 2 == 0) {
        throw InvalidInput("an+b map needs odd a and odd b, got a = " + std::to_string(a) +
                           ", b = " + std::to_string(b));
    }
    return BranchMap(2, {{1, 0}, {a, b}});
}

BranchMap BranchMap::collatz_original() { return BranchMap(3, {{2, 0}, {4, -1}, {4, 1}}); }

BranchMap BranchMap::shift() { return BranchMap(2, {{1, 0}, {1, -1}}); }

std::string BranchMap::to_json() const {
    nlohmann::ordered_json j;
    j["p"] = p_;
    j["branches"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : branches_) j["branches"].push_back({a, b});
    return j.dump();
}

BranchMap BranchMap::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("branch map JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("p") || !j.contains("branches") ||
        !j["p"].is_number_integer() || !j["branches"].is_array()) {
        throw InvalidInput(R"(branch map JSON must look like {"p": int, "branches": [[a,b],...]})");
    }
    const auto p = j["p"].get<std::int64_t>();
    if (p < 2 || p > std::numeric_limits<std::uint32_t>::max()) {
        throw InvalidInput("branch map JSON: p out of range");
    }
    std::vector<Branch> branches;
    for (const auto& pair : j["branches"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer()) {
            throw InvalidInput("branch map JSON: each branch must be [a, b] with integer entries");
        }
        branches.push_back({pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>()});
    }
    return BranchMap(static_cast<std::uint32_t>(p), std::move(branches));
}

BranchMap parse_map_preset(std::string_view name) {
    if (name == "collatz") return BranchMap::collatz();
    if (name == "shift") return BranchMap::shift();
    if (name == "collatz-original") return BranchMap::collatz_original();
    constexpr std::string_view prefix = "an+b(";
    if (name.starts_with(prefix) && name.ends_with(")")) {
        const auto inner = name.substr(prefix.size(), name.size() - prefix.size() - 1);
        const auto comma = inner.find(',');
        if (comma == std::string_view::npos) {
            throw InvalidInput("an+b preset needs two arguments: an+b(a,b)");
        }
        return BranchMap::an_plus_b(parse_int64(inner.substr(0, comma)),
                                    parse_int64(inner.substr(comma + 1)));
    }
    throw InvalidInput("unknown map preset '" + std::string(name) +
                       "' (expected collatz, shift, collatz-original or an+b(a,b))");
}

BigInt eval_int(const BranchMap& f, const BigInt& n) {
    const auto i = static_cast<std::uint32_t>(floor_mod(n, BigInt{f.base()}));
    const Branch& br = f.branch(i);
    return (br.multiplier * n + br.offset) / f.base();
}

Rational eval_rational(const BranchMap& f, const Rational& r) {
    const std::uint32_t i = padic_residue(r, f.base());
    const Branch& br = f.branch(i);
    return Rational(br.multiplier * r.numerator() + br.offset * r.denominator(),
                    r.denominator() * f.base());
}

DigitWord digit_sequence(const BranchMap& f, const Rational& n, std::size_t k) {
    std::vector<Digit> digits;
    digits.reserve(k);
    Rational x = n;
    for (std::size_t i = 0; i < k; ++i) {
        digits.push_back(padic_residue(x, f.base()));
        if (i + 1 < k) x = eval_rational(f, x);
    }
    return DigitWord(f.base(), std::move(digits));
}

DigitWord digit_sequence(const BranchMap& f, const BigInt& n, std::size_t k) {
    std::vector<Digit> digits;
    digits.reserve(k);
    BigInt x = n;
    const BigInt p{f.base()};
    for (std::size_t i = 0; i < k; ++i) {
        digits.push_back(static_cast<Digit>(floor_mod(x, p)));
        if (i + 1 < k) x = eval_int(f, x);
    }
    return DigitWord(f.base(), std::move(digits));
}

DigitWord eval_truncated(const BranchMap& f, const DigitWord& n) {
    if (n.empty()) throw InvalidInput("eval_truncated needs at least one digit");
    if (n.base() != f.base()) throw InvalidInput("word base does not match the map's p");
    return DigitWord::from_value(eval_int(f, n.value()), f.base(), n.size() - 1);
}

std::uint64_t eval_residue(const BranchMap& f, std::uint64_t n, std::uint64_t modulus) {
    const std::uint32_t p = f.base();
    const Branch& br = f.branch(static_cast<std::uint32_t>(n % p));
    const __int128 v = (static_cast<__int128>(br.multiplier) * n + br.offset) / p;
    __int128 r = v % static_cast<__int128>(modulus);
    if (r < 0) r += modulus;
    return static_cast<std::uint64_t>(r);
}

OrbitTrace trace_orbit(const BranchMap& f, const Rational& start, std::size_t max_steps) {
    OrbitTrace trace;
    std::unordered_map<Rational, std::size_t> seen;
    trace.states.push_back(start);
    seen.emplace(start, 0);
    for (std::size_t step = 1; step <= max_steps; ++step) {
        Rational next = eval_rational(f, trace.states.back());
        trace.steps_used = step;
        if (auto it = seen.find(next); it != seen.end()) {
            trace.cycle_start = it->second;
            return trace;
        }
        seen.emplace(next, trace.states.size());
        trace.states.push_back(std::move(next));
    }
    return trace;
}

}  // namespace collatzdb
