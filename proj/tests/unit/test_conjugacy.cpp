#include <doctest.h>

#include <nlohmann/json.hpp>

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

using namespace collatzdb;
using testing_support::q;
using testing_support::word;

namespace {

const BranchMap T = BranchMap::collatz();

std::vector<BranchMap> an_plus_b_battery() {
    std::vector<BranchMap> maps;
    for (std::int64_t a : {-1, 1, 3, 5, 7}) {
        for (std::int64_t b : {-1, 1, 3, 5, 7}) maps.push_back(BranchMap::an_plus_b(a, b));
    }
    return maps;
}

oracle::IntMap as_oracle(const BranchMap& f) {
    oracle::IntMap g{f.base(), {}};
    for (const Branch& br : f.branches()) g.branches.emplace_back(br.multiplier, br.offset);
    return g;
}

}  // namespace

TEST_SUITE("conjugacy_permutation") {
    TEST_CASE("reference values") {
        CHECK(conjugacy_permutation(T, 3).cycle_notation() == "(1,5)");
        CHECK(conjugacy_permutation(T, 4).cycle_notation() == "(1,5)(2,10)(9,13)");
        CHECK(conjugacy_permutation(BranchMap::an_plus_b(5, 1), 3).cycle_notation() == "(1,3)(2,6)(5,7)");
        // The ternary reference value numbers words with the first digit most significant.
        const Permutation f0 = conjugacy_permutation(BranchMap::collatz_original(), 2,
                                                     DigitOrder::most_significant_first);
        CHECK(f0.cycle_notation() == "(1,4,5,7,3,2,6)");
        CHECK(permutation_order(f0) == 7);
    }

    TEST_CASE("ternary example in the least-significant-first numbering") {
        const BranchMap f0 = BranchMap::collatz_original();
        const Permutation lsb = conjugacy_permutation(f0, 2);
        CHECK(lsb.cycle_notation() == "(1,4,7)(3,6)");
        CHECK(permutation_order(lsb) == 6);
        // The two numberings differ exactly by the word reversal.
        CHECK(conjugacy_permutation(f0, 2, DigitOrder::most_significant_first) ==
              digit_reversal(3, 2) * lsb);
        const LabeledDigraph c = build_modular_graph(f0, 9);
        const LabeledDigraph b = build_debruijn_graph(3, 2);
        CHECK(check_isomorphism(c, b, lsb));
        CHECK(check_isomorphism(c, relabel_vertices(b, digit_reversal(3, 2)),
                                conjugacy_permutation(f0, 2, DigitOrder::most_significant_first)));
    }

    TEST_CASE("shift map gives the identity") {
        for (unsigned k = 1; k <= 10; ++k) {
            CHECK(conjugacy_permutation(BranchMap::shift(), k) == Permutation::identity(std::uint64_t{1} << k));
        }
    }

    TEST_CASE("agrees with iterating on the integers") {
        for (const BranchMap& f : {T, BranchMap::an_plus_b(5, 1), BranchMap::collatz_original(),
                                   BranchMap::an_plus_b(-1, 7)}) {
            const oracle::IntMap g = as_oracle(f);
            for (unsigned k = 1; k <= (f.base() == 2 ? 10u : 6u); ++k) {
                const Permutation phi = conjugacy_permutation(f, k);
                for (std::uint64_t n = 0; n < phi.size(); ++n) {
                    CHECK(phi(n) == static_cast<std::uint64_t>(oracle::phi_by_iteration(g, static_cast<std::int64_t>(n), k)));
                }
            }
        }
    }

    TEST_CASE("prefix stability across k") {
        for (const BranchMap& f : {T, BranchMap::an_plus_b(7, 3), BranchMap::collatz_original()}) {
            const unsigned top = f.base() == 2 ? 12 : 7;
            for (unsigned k = 1; k < top; ++k) {
                const Permutation small = conjugacy_permutation(f, k);
                const Permutation big = conjugacy_permutation(f, k + 1);
                for (std::uint64_t n = 0; n < big.size(); ++n) {
                    CHECK(big(n) % small.size() == small(n % small.size()));
                }
            }
        }
    }

    TEST_CASE("limits and arguments") {
        CHECK_THROWS_AS(conjugacy_permutation(T, 0), InvalidInput);
        CHECK_THROWS_AS(conjugacy_permutation(T, 27), ResourceLimitExceeded);
        CHECK_THROWS_AS(conjugacy_permutation(T, 5, DigitOrder::least_significant_first,
                                              Limits{16, kDefaultMaxMatrixDimension}),
                        ResourceLimitExceeded);
    }

    TEST_CASE("json") {
        const auto j = nlohmann::json::parse(permutation_to_json(conjugacy_permutation(T, 4)));
        CHECK(j["size"] == 16);
        CHECK(j["order"] == 2);
        CHECK(j["cycles"] == nlohmann::json::parse("[[1,5],[2,10],[9,13]]"));
        CHECK(j["images"][1] == 5);
        CHECK(permutation_to_json(Permutation::identity(2)) ==
              "{\"size\":2,\"images\":[0,1],\"cycles\":[],\"order\":1}\n");
    }
}

TEST_SUITE("verify_conjugacy") {
    TEST_CASE("collatz up to k = 10") {
        for (unsigned k = 1; k <= 10; ++k) CHECK(verify_conjugacy(T, k));
    }

    TEST_CASE("an+b family") {
        for (const BranchMap& f : an_plus_b_battery()) {
            for (unsigned k = 1; k <= 8; ++k) CHECK(verify_conjugacy(f, k));
        }
    }

    TEST_CASE("ternary and quinary maps") {
        for (unsigned k = 1; k <= 6; ++k) CHECK(verify_conjugacy(BranchMap::collatz_original(), k));
        const BranchMap g(5, {{1, 0}, {2, 3}, {3, -1}, {4, 3}, {7, 2}});
        for (unsigned k = 1; k <= 4; ++k) CHECK(verify_conjugacy(g, k));
        CHECK(verify_conjugacy(BranchMap::shift(), 6));
    }
}

TEST_SUITE("permutation_order") {
    TEST_CASE("examples") {
        CHECK(permutation_order(Permutation::from_cycles(9, {{1, 4, 5, 7, 3, 2, 6}})) == 7);
        CHECK(permutation_order(Permutation::identity(5)) == 1);
        CHECK(permutation_order(Permutation::from_cycles(16, {{1, 5}, {2, 10}, {9, 13}})) == 2);
        CHECK(permutation_order(Permutation::from_cycles(10, {{0, 1}, {2, 3, 4}, {5, 6, 7, 8}})) == 12);
    }

    TEST_CASE("matches repeated composition") {
        for (unsigned k = 1; k <= 6; ++k) {
            const Permutation phi = conjugacy_permutation(T, k);
            const auto order = static_cast<unsigned>(permutation_order(phi));
            Permutation power = phi;
            for (unsigned i = 1; i < order; ++i) {
                CHECK(power != Permutation::identity(phi.size()));
                power = power * phi;
            }
            CHECK(power == Permutation::identity(phi.size()));
        }
    }
}

TEST_SUITE("phi_truncated") {
    TEST_CASE("examples") {
        CHECK(phi_truncated(T, word("10110")).to_string() == "10010");
        CHECK(phi_truncated(T, word("000000")).to_string() == "000000");
        CHECK(phi_truncated(BranchMap::an_plus_b(5, 1), word("101")) == DigitWord::from_value(std::uint64_t{7}, 2, 3));
        CHECK_THROWS_AS(phi_truncated(T, word("")), InvalidInput);
        CHECK_THROWS_AS(phi_truncated(T, word("01", 3)), InvalidInput);
    }

    TEST_CASE("agrees with the finite permutation") {
        for (const BranchMap& f : {T, BranchMap::an_plus_b(3, 5), BranchMap::collatz_original()}) {
            for (unsigned n_digits = 1; n_digits <= (f.base() == 2 ? 12u : 6u); ++n_digits) {
                const Permutation phi = conjugacy_permutation(f, n_digits);
                for (std::uint64_t n = 0; n < phi.size(); n += 1 + phi.size() / 300) {
                    CHECK(phi_truncated(f, DigitWord::from_value(n, f.base(), n_digits)).value_u64() == phi(n));
                }
            }
        }
    }

    TEST_CASE("shift map is the identity") {
        auto gen = testing_support::rng(4);
        for (int i = 0; i < 200; ++i) {
            const DigitWord w = DigitWord::from_value(std::uint64_t{gen()}, 2, 1 + gen() % 40);
            CHECK(phi_truncated(BranchMap::shift(), w) == w);
        }
    }
}

TEST_SUITE("phi_inverse_truncated") {
    TEST_CASE("examples") {
        CHECK(phi_inverse_truncated(T, word("10010")).to_string() == "10110");
        CHECK(phi_inverse_truncated(T, word("0000")).to_string() == "0000");
        CHECK_THROWS_AS(phi_inverse_truncated(T, word("")), InvalidInput);
    }

    TEST_CASE("round trip on random 16-digit words") {
        auto gen = testing_support::rng(5);
        for (const BranchMap& f : {T, BranchMap::an_plus_b(5, 1), BranchMap::collatz_original()}) {
            for (int i = 0; i < 1000; ++i) {
                DigitWord w(f.base());
                for (int d = 0; d < 16; ++d) w.push_back(static_cast<Digit>(gen() % f.base()));
                CHECK(phi_truncated(f, phi_inverse_truncated(f, w)) == w);
                CHECK(phi_inverse_truncated(f, phi_truncated(f, w)) == w);
            }
        }
    }
}

TEST_SUITE("phi_exact") {
    TEST_CASE("examples") {
        const ConjugacyResult one = phi_exact(T, q("1"));
        REQUIRE(one.exact());
        CHECK(one.output->value == q("-1/3"));
        CHECK(one.output->digits.to_string() == "(10)");
        const ConjugacyResult five = phi_exact(T, q("5"));
        REQUIRE(five.exact());
        CHECK(five.output->value == q("-13/3"));
        CHECK(five.output->digits.to_string() == "100(01)");
        CHECK(phi_exact(T, q("0")).output->value == q("0"));
        CHECK(phi_exact(T, q("-1")).output->value == q("-1"));
    }

    TEST_CASE("divergent-looking orbit is undetermined, never wrong") {
        const ConjugacyResult r = phi_exact(BranchMap::an_plus_b(5, 1), q("7"), 1000);
        CHECK_FALSE(r.exact());
        CHECK(r.steps_used == 1000);
    }

    TEST_CASE("inadmissible denominator") {
        CHECK_THROWS_AS(phi_exact(T, q("1/4")), InvalidInput);
    }

    TEST_CASE("exact value matches the truncated digits") {
        for (std::int64_t n = -50; n <= 50; ++n) {
            for (std::int64_t den : {1, 3, 5, 7}) {
                const ConjugacyResult r = phi_exact(T, Rational(BigInt{n}, BigInt{den}));
                REQUIRE(r.exact());
                CHECK(padic_digits(r.output->value, 2, 48) == r.output->digits.unroll(48));
                CHECK(r.output->digits.unroll(48) == digit_sequence(T, Rational(BigInt{n}, BigInt{den}), 48));
            }
        }
    }

    TEST_CASE("orbits reaching {1,2} give denominator 3") {
        for (std::int64_t n = 1; n <= 100; ++n) {
            const ConjugacyResult r = phi_exact(T, q(std::to_string(n)));
            REQUIRE(r.exact());
            CHECK(r.output->value.denominator() == 3);
        }
    }

    TEST_CASE("shift map fixes rationals") {
        for (const char* text : {"0", "5", "-7", "1/3", "-2/5", "11/9"}) {
            CHECK(phi_exact(BranchMap::shift(), q(text)).output->value == q(text));
        }
    }
}
