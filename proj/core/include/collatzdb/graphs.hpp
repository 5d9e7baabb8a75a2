#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "collatzdb/limits.hpp"
#include "collatzdb/maps.hpp"

namespace collatzdb {

struct Edge {
    std::uint64_t source;
    std::uint64_t target;
    std::optional<std::uint64_t> label;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Arc = std::pair<std::uint64_t, std::uint64_t>;

// Directed graph on vertices {0, ..., vertex_count-1} stored as an explicit,
// sorted edge list. Parallel edges are allowed only when their labels differ;
// identical (source, target, label) triples are merged on construction.
class LabeledDigraph {
public:
    explicit LabeledDigraph(std::uint64_t vertex_count, std::vector<Edge> edges = {});

    std::uint64_t vertex_count() const noexcept { return vertex_count_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    // (source, target) of every edge, sorted; duplicates kept.
    std::vector<Arc> arcs() const;
    // The unlabeled projection as a set.
    std::vector<Arc> arc_set() const;
    std::vector<std::uint64_t> out_degrees() const;  // over arc_set()
    std::vector<std::uint64_t> in_degrees() const;   // over arc_set()

    bool fully_labeled() const noexcept;
    LabeledDigraph without_labels() const;

    friend bool operator==(const LabeledDigraph&, const LabeledDigraph&) = default;

private:
    std::uint64_t vertex_count_;
    std::vector<Edge> edges_;
};

// A bijection of {0, ..., size-1}.
class Permutation {
public:
    explicit Permutation(std::vector<std::uint64_t> images);

    static Permutation identity(std::uint64_t size);
    // Cycle notation: each inner list (c_0, c_1, ..., c_r) maps c_i -> c_{i+1} -> ... -> c_0.
    static Permutation from_cycles(std::uint64_t size,
                                   const std::vector<std::vector<std::uint64_t>>& cycles);

    std::uint64_t size() const noexcept { return images_.size(); }
    std::uint64_t operator()(std::uint64_t x) const { return images_.at(x); }
    std::span<const std::uint64_t> images() const noexcept { return images_; }

    Permutation inverse() const;
    // (a * b)(x) = a(b(x))
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    // Disjoint cycles without fixed points; each starts at its least element
    // and cycles are sorted by that element.
    std::vector<std::vector<std::uint64_t>> cycles() const;
    // "(1,5)(2,10)(9,13)", or "()" for the identity.
    std::string cycle_notation() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint64_t> images_;
};

// C^(f)(m): for every residue r mod p*m an edge (r mod m) -> (f(r) mod m) labeled r.
LabeledDigraph build_modular_graph(const BranchMap& f, std::uint64_t m, const Limits& limits = {});

// B(p,k) on vertices sum b_i p^i: n -> (n - b_0)/p + x p^{k-1}, labeled n + x p^k.
LabeledDigraph build_debruijn_graph(std::uint32_t p, unsigned k, const Limits& limits = {});

// Vertices are the edge labels of g; u -> v whenever edge u ends where edge v starts.
// Requires every edge labeled and the labels to be exactly {0, ..., E-1}.
LabeledDigraph line_graph(const LabeledDigraph& g);

LabeledDigraph transpose(const LabeledDigraph& g);

// Renames every vertex v to phi(v); labels are kept.
LabeledDigraph relabel_vertices(const LabeledDigraph& g, const Permutation& phi);

// True iff phi carries the (source, target) multiset of g onto that of h.
bool check_isomorphism(const LabeledDigraph& g, const LabeledDigraph& h, const Permutation& phi);

// The integer graph n -> f(n) restricted to {0, ..., bound-1}; unlabeled.
LabeledDigraph restrict_collatz_graph(const BranchMap& f, std::uint64_t bound,
                                      const Limits& limits = {});

// Word reversal b_0 ... b_{k-1} -> b_{k-1} ... b_0 on the numeric vertex ids of B(p,k).
Permutation digit_reversal(std::uint32_t p, unsigned k);

std::string export_dot(const LabeledDigraph& g);
// {"m": int, "edges": [[s,t,label|null], ...]}
std::string export_json(const LabeledDigraph& g);
LabeledDigraph import_json(std::string_view text);

}  // namespace collatzdb
