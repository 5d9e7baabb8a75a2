#include <doctest.h>

#include <fstream>
#include <sstream>

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

using namespace collatzdb;
using testing_support::arcs_of;
using ArcSet = std::set<std::pair<std::int64_t, std::int64_t>>;

namespace {

const BranchMap T = BranchMap::collatz();

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(COLLATZDB_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

oracle::IntMap as_oracle(const BranchMap& f) {
    oracle::IntMap g{f.base(), {}};
    for (const Branch& br : f.branches()) g.branches.emplace_back(br.multiplier, br.offset);
    return g;
}

}  // namespace

TEST_SUITE("labeled_digraph") {
    TEST_CASE("construction validates and deduplicates") {
        const LabeledDigraph g(2, {{1, 0, 3}, {0, 1, std::nullopt}, {1, 0, 3}, {0, 1, std::nullopt}});
        CHECK(g.edge_count() == 2);
        CHECK(g.edges()[0] == Edge{0, 1, std::nullopt});
        CHECK_THROWS_AS(LabeledDigraph(2, {{0, 2, std::nullopt}}), InvalidInput);
        CHECK_THROWS_AS(LabeledDigraph(2, {{0, 1, 5}, {1, 1, 5}}), InvalidInput);
    }

    TEST_CASE("arc views") {
        const LabeledDigraph g(2, {{0, 1, 0}, {0, 1, 1}, {1, 1, 2}});
        CHECK(g.arcs() == std::vector<Arc>{{0, 1}, {0, 1}, {1, 1}});
        CHECK(g.arc_set() == std::vector<Arc>{{0, 1}, {1, 1}});
        CHECK(g.out_degrees() == std::vector<std::uint64_t>{1, 1});
        CHECK(g.in_degrees() == std::vector<std::uint64_t>{0, 2});
        CHECK(g.fully_labeled());
        CHECK_FALSE(g.without_labels().fully_labeled());
    }
}

TEST_SUITE("permutation") {
    TEST_CASE("cycles and notation") {
        const Permutation phi = Permutation::from_cycles(16, {{1, 5}, {2, 10}, {9, 13}});
        CHECK(phi(5) == 1);
        CHECK(phi(0) == 0);
        CHECK(phi.cycle_notation() == "(1,5)(2,10)(9,13)");
        CHECK(Permutation::identity(4).cycle_notation() == "()");
        CHECK(Permutation::from_cycles(8, {{6, 1, 4}}).cycles() ==
              std::vector<std::vector<std::uint64_t>>{{1, 4, 6}});
    }

    TEST_CASE("composition and inverse") {
        const Permutation a({1, 2, 0, 3});
        const Permutation b({0, 1, 3, 2});
        CHECK((a * b)(2) == a(b(2)));
        CHECK((a * a.inverse()) == Permutation::identity(4));
        CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidInput);
        CHECK_THROWS_AS(Permutation({0, 3}), InvalidInput);
        CHECK_THROWS_AS(a * Permutation::identity(3), InvalidInput);
        CHECK_THROWS_AS(Permutation::from_cycles(4, {{1, 1}}), InvalidInput);
    }
}

TEST_SUITE("modular_graph") {
    TEST_CASE("m = 3 has exactly five arcs") {
        const LabeledDigraph g = build_modular_graph(T, 3);
        CHECK(arcs_of(g) == ArcSet{{0, 0}, {0, 2}, {1, 2}, {2, 1}, {2, 2}});
        CHECK(export_dot(g) == read_golden("modular_m3.dot"));
    }

    TEST_CASE("m = 4 carries label 6 on the edge 2 -> 3") {
        const LabeledDigraph g = build_modular_graph(T, 4);
        bool found = false;
        for (const Edge& e : g.edges()) found = found || (e.source == 2 && e.target == 3 && e.label == 6u);
        CHECK(found);
        CHECK(g.edge_count() == 8);
    }

    TEST_CASE("m = 1 is a vertex with two labeled loops") {
        const LabeledDigraph g = build_modular_graph(T, 1);
        CHECK(g == LabeledDigraph(1, {{0, 0, 0}, {0, 0, 1}}));
        CHECK_THROWS_AS(build_modular_graph(T, 0), InvalidInput);
    }

    TEST_CASE("arcs agree with the lift definition for many moduli") {
        for (const BranchMap& f : {T, BranchMap::an_plus_b(5, 1), BranchMap::collatz_original(),
                                   BranchMap::an_plus_b(-1, 3)}) {
            for (std::int64_t m = 1; m <= 30; ++m) {
                CHECK(arcs_of(build_modular_graph(f, m)) ==
                      oracle::modular_arcs_by_definition(as_oracle(f), m));
            }
        }
    }

    TEST_CASE("power moduli are p-regular") {
        for (const BranchMap& f : {T, BranchMap::an_plus_b(7, -1), BranchMap::collatz_original()}) {
            for (unsigned k = 1; k <= (f.base() == 2 ? 10u : 6u); ++k) {
                const LabeledDigraph g = build_modular_graph(f, oracle::ipow(f.base(), k));
                const std::vector<std::uint64_t> expected(g.vertex_count(), f.base());
                CHECK(g.out_degrees() == expected);
                CHECK(g.in_degrees() == expected);
            }
        }
    }

    TEST_CASE("resource limit") {
        CHECK_THROWS_AS(build_modular_graph(T, 64, Limits{32, kDefaultMaxMatrixDimension}),
                        ResourceLimitExceeded);
        CHECK_NOTHROW(build_modular_graph(T, 16, Limits{32, kDefaultMaxMatrixDimension}));
    }
}

TEST_SUITE("debruijn_graph") {
    TEST_CASE("B(2,3) successors") {
        const LabeledDigraph g = build_debruijn_graph(2, 3);
        ArcSet from5;
        for (const auto& [s, t] : arcs_of(g)) {
            if (s == 5) from5.emplace(s, t);
        }
        CHECK(from5 == ArcSet{{5, 2}, {5, 6}});
    }

    TEST_CASE("B(2,1) is complete with loops") {
        CHECK(arcs_of(build_debruijn_graph(2, 1)) == ArcSet{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    }

    TEST_CASE("agrees with the word-overlap definition") {
        for (std::uint32_t p : {2u, 3u, 4u}) {
            for (unsigned k = 1; k <= (p == 2 ? 7u : 4u); ++k) {
                const LabeledDigraph g = build_debruijn_graph(p, k);
                CHECK(arcs_of(g) == oracle::debruijn_arcs_by_overlap(p, k));
                CHECK(g.fully_labeled());
                CHECK(g.edge_count() == static_cast<std::size_t>(oracle::ipow(p, k + 1)));
            }
        }
    }

    TEST_CASE("invalid parameters") {
        CHECK_THROWS_AS(build_debruijn_graph(1, 3), InvalidInput);
        CHECK_THROWS_AS(build_debruijn_graph(2, 0), InvalidInput);
        CHECK_THROWS_AS(build_debruijn_graph(2, 27), ResourceLimitExceeded);
    }
}

TEST_SUITE("line_graph") {
    TEST_CASE("line graph of C(k) is C(k+1)") {
        for (unsigned k = 1; k <= 8; ++k) {
            const LabeledDigraph next = build_modular_graph(T, std::uint64_t{1} << (k + 1));
            CHECK(line_graph(build_modular_graph(T, std::uint64_t{1} << k)) == next.without_labels());
        }
        for (unsigned k = 1; k <= 4; ++k) {
            const BranchMap f0 = BranchMap::collatz_original();
            CHECK(arcs_of(line_graph(build_modular_graph(f0, oracle::ipow(3, k)))) ==
                  arcs_of(build_modular_graph(f0, oracle::ipow(3, k + 1))));
        }
    }

    TEST_CASE("single vertex with two loops") {
        const LabeledDigraph g(1, {{0, 0, 0}, {0, 0, 1}});
        CHECK(arcs_of(line_graph(g)) == arcs_of(build_modular_graph(T, 2)));
    }

    TEST_CASE("line graph of B(2,k) is B(2,k+1)") {
        for (unsigned k = 1; k <= 6; ++k) {
            CHECK(arcs_of(line_graph(build_debruijn_graph(2, k))) == oracle::debruijn_arcs_by_overlap(2, k + 1));
        }
    }

    TEST_CASE("needs contiguous labels") {
        CHECK_THROWS_AS(line_graph(LabeledDigraph(2, {{0, 1, std::nullopt}})), InvalidInput);
        CHECK_THROWS_AS(line_graph(LabeledDigraph(2, {{0, 1, 0}, {1, 0, 2}})), InvalidInput);
    }
}

TEST_SUITE("transpose") {
    TEST_CASE("involution") {
        for (const LabeledDigraph& g : {build_modular_graph(T, 5), build_debruijn_graph(3, 2)}) {
            CHECK(transpose(transpose(g)) == g);
        }
    }

    TEST_CASE("B(2,k) is self-transpose under digit reversal") {
        for (unsigned k = 1; k <= 8; ++k) {
            const LabeledDigraph b = build_debruijn_graph(2, k);
            CHECK(check_isomorphism(transpose(b), b, digit_reversal(2, k)));
        }
        CHECK(check_isomorphism(transpose(build_debruijn_graph(3, 3)), build_debruijn_graph(3, 3),
                                digit_reversal(3, 3)));
    }

    TEST_CASE("C(k) is self-transpose through the conjugacy") {
        for (unsigned k = 1; k <= 8; ++k) {
            const Permutation phi = conjugacy_permutation(T, k);
            const Permutation psi = phi.inverse() * digit_reversal(2, k) * phi;
            const LabeledDigraph c = build_modular_graph(T, std::uint64_t{1} << k);
            CHECK(check_isomorphism(transpose(c), c, psi));
        }
    }

    TEST_CASE("C(2) self-transpose by exhaustive search") {
        const LabeledDigraph c = build_modular_graph(T, 4);
        std::vector<std::uint64_t> images{0, 1, 2, 3};
        bool any = false;
        do {
            any = any || check_isomorphism(transpose(c), c, Permutation(images));
        } while (std::next_permutation(images.begin(), images.end()));
        CHECK(any);
    }
}

TEST_SUITE("isomorphism") {
    TEST_CASE("examples") {
        CHECK(check_isomorphism(build_modular_graph(T, 8), build_debruijn_graph(2, 3),
                                Permutation::from_cycles(8, {{1, 5}})));
        const LabeledDigraph g = build_modular_graph(T, 6);
        CHECK(check_isomorphism(g, g, Permutation::identity(6)));
        CHECK_FALSE(check_isomorphism(build_modular_graph(T, 16), build_debruijn_graph(2, 4),
                                      Permutation::identity(16)));
        CHECK_THROWS_AS(check_isomorphism(g, build_debruijn_graph(2, 3), Permutation::identity(8)),
                        InvalidInput);
        CHECK_THROWS_AS(check_isomorphism(g, g, Permutation::identity(5)), InvalidInput);
    }

    TEST_CASE("relabel_vertices is what check_isomorphism compares against") {
        const LabeledDigraph c = build_modular_graph(T, 16);
        const Permutation phi = conjugacy_permutation(T, 4);
        CHECK(arcs_of(relabel_vertices(c, phi)) == arcs_of(build_debruijn_graph(2, 4)));
    }

    TEST_CASE("digit_reversal") {
        const Permutation rev = digit_reversal(2, 3);
        CHECK(rev(1) == 4);
        CHECK(rev(6) == 3);
        CHECK(rev(5) == 5);
        CHECK(rev * rev == Permutation::identity(8));
        CHECK(digit_reversal(3, 2)(1) == 3);
    }
}

TEST_SUITE("restricted_graph") {
    TEST_CASE("bound 8") {
        const ArcSet arcs = arcs_of(restrict_collatz_graph(T, 8));
        CHECK(arcs.count({3, 5}) == 1);
        CHECK(arcs.count({6, 3}) == 1);
        CHECK(arcs.count({5, 8}) == 0);
        for (const auto& [s, t] : arcs) CHECK(s != 5);
        CHECK(arcs_of(restrict_collatz_graph(T, 1)) == ArcSet{{0, 0}});
        CHECK_THROWS_AS(restrict_collatz_graph(T, 0), InvalidInput);
    }

    TEST_CASE("embeds in the modular graph") {
        for (unsigned k = 1; k <= 10; ++k) {
            const ArcSet sub = arcs_of(restrict_collatz_graph(T, std::uint64_t{1} << k));
            const ArcSet whole = arcs_of(build_modular_graph(T, std::uint64_t{1} << k));
            CHECK(std::includes(whole.begin(), whole.end(), sub.begin(), sub.end()));
        }
    }
}

TEST_SUITE("export") {
    TEST_CASE("graph without edges") {
        CHECK(export_dot(LabeledDigraph(0)) == "digraph {\n}\n");
        CHECK(export_dot(LabeledDigraph(2)) == "digraph {\n  0;\n  1;\n}\n");
        CHECK(export_json(LabeledDigraph(2)) == "{\"m\":2,\"edges\":[]}\n");
    }

    TEST_CASE("unlabeled edges") {
        const LabeledDigraph g(2, {{1, 0, std::nullopt}});
        CHECK(export_dot(g) == "digraph {\n  0;\n  1;\n  1 -> 0;\n}\n");
        CHECK(export_json(g) == "{\"m\":2,\"edges\":[[1,0,null]]}\n");
    }

    TEST_CASE("json round trip") {
        for (const LabeledDigraph& g : {build_modular_graph(T, 3), build_debruijn_graph(3, 2),
                                        restrict_collatz_graph(T, 20), LabeledDigraph(0)}) {
            CHECK(import_json(export_json(g)) == g);
        }
    }

    TEST_CASE("import rejects malformed documents") {
        for (const char* bad : {"", "[]", R"({"m":2})", R"({"m":2,"edges":[[0,2,null]]})",
                                R"({"m":-1,"edges":[]})", R"({"m":2,"edges":[[0,1]]})",
                                R"({"m":2,"edges":[[0,1,"x"]]})"}) {
            CHECK_THROWS_AS(import_json(bad), InvalidInput);
        }
    }
}
