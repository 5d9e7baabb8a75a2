#include "collatzdb/conjugacy.hpp"

#include <nlohmann/json.hpp>

#include "collatzdb/errors.hpp"

namespace collatzdb {

Permutation conjugacy_permutation(const BranchMap& f, unsigned k, DigitOrder order,
                                  const Limits& limits) {
    if (k < 1) throw InvalidInput("conjugacy permutation needs k >= 1");
    const std::uint32_t p = f.base();
    const std::uint64_t size = require_power_within(p, k, limits.max_vertices, "conjugacy permutation");
    std::vector<std::uint64_t> images(size);
    for (std::uint64_t n = 0; n < size; ++n) {
        // x is known modulo `modulus`; each step loses one digit of precision
        std::uint64_t x = n, modulus = size, scale = 1, image = 0;
        for (unsigned i = 0; i < k; ++i) {
            if (order == DigitOrder::least_significant_first) {
                image += (x % p) * scale;
                scale *= p;
            } else {
                image = image * p + x % p;
            }
            modulus /= p;
            if (modulus > 1) x = eval_residue(f, x, modulus);
        }
        images[n] = image;
    }
    return Permutation(std::move(images));
}

bool verify_conjugacy(const BranchMap& f, unsigned k, const Limits& limits) {
    const Permutation phi =
        conjugacy_permutation(f, k, DigitOrder::least_significant_first, limits);
    return check_isomorphism(build_modular_graph(f, phi.size(), limits),
                             build_debruijn_graph(f.base(), k, limits), phi);
}

BigInt permutation_order(const Permutation& phi) {
    BigInt order = 1;
    for (const auto& cycle : phi.cycles()) {
        order = boost::multiprecision::lcm(order, BigInt{cycle.size()});
    }
    return order;
}

DigitWord phi_truncated(const BranchMap& f, const DigitWord& n) {
    if (n.empty()) throw InvalidInput("phi_truncated needs at least one digit");
    if (n.base() != f.base()) throw InvalidInput("word base does not match the map's p");
    std::vector<Digit> digits;
    digits.reserve(n.size());
    DigitWord w = n;
    while (!w.empty()) {
        digits.push_back(w[0]);
        w = eval_truncated(f, w);
    }
    return DigitWord(f.base(), std::move(digits));
}

DigitWord phi_inverse_truncated(const BranchMap& f, const DigitWord& target) {
    if (target.empty()) throw InvalidInput("phi_inverse_truncated needs at least one digit");
    if (target.base() != f.base()) throw InvalidInput("word base does not match the map's p");
    const std::uint32_t p = f.base();
    DigitWord preimage(p);
    for (std::size_t len = 1; len <= target.size(); ++len) {
        const DigitWord wanted = target.prefix(len);
        std::optional<Digit> found;
        for (Digit c = 0; c < p; ++c) {
            DigitWord candidate = preimage;
            candidate.push_back(c);
            if (phi_truncated(f, candidate) == wanted) {
                if (found) {
                    throw InvariantViolation("phi inverse: prefix " + wanted.to_string() +
                                             " has several preimages");
                }
                found = c;
            }
        }
        if (!found) {
            throw InvariantViolation("phi inverse: prefix " + wanted.to_string() +
                                     " has no preimage extending " + preimage.to_string());
        }
        preimage.push_back(*found);
    }
    return preimage;
}

ConjugacyResult phi_exact(const BranchMap& f, const Rational& r, std::size_t max_steps) {
    ConjugacyResult result{r, std::nullopt, 0};
    const OrbitTrace trace = trace_orbit(f, r, max_steps);
    result.steps_used = trace.steps_used;
    if (!trace.cycle_start) return result;

    const std::uint32_t p = f.base();
    std::vector<Digit> pre, per;
    for (std::size_t i = 0; i < trace.states.size(); ++i) {
        (i < *trace.cycle_start ? pre : per).push_back(padic_residue(trace.states[i], p));
    }
    EventuallyPeriodicDigits digits(DigitWord(p, std::move(pre)), DigitWord(p, std::move(per)));
    Rational value = rational_from_periodic(digits);
    result.output = PhiValue{std::move(digits), std::move(value)};
    return result;
}

std::string permutation_to_json(const Permutation& phi) {
    nlohmann::ordered_json j;
    j["size"] = phi.size();
    j["images"] = std::vector<std::uint64_t>(phi.images().begin(), phi.images().end());
    j["cycles"] = phi.cycles();
    const BigInt order = permutation_order(phi);
    if (order <= std::numeric_limits<std::uint64_t>::max()) {
        j["order"] = static_cast<std::uint64_t>(order);
    } else {
        j["order"] = order.str();
    }
    return j.dump() + "\n";
}

}  // namespace collatzdb
