#include "collatzdb/graphs.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "collatzdb/errors.hpp"

namespace collatzdb {

// --- LabeledDigraph ----------------------------------------------------------

LabeledDigraph::LabeledDigraph(std::uint64_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    for (const Edge& e : edges_) {
        if (e.source >= vertex_count_ || e.target >= vertex_count_) {
            throw InvalidInput("edge " + std::to_string(e.source) + " -> " +
                               std::to_string(e.target) + " leaves the vertex range [0, " +
                               std::to_string(vertex_count_) + ")");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    std::vector<std::uint64_t> labels;
    for (const Edge& e : edges_) {
        if (e.label) labels.push_back(*e.label);
    }
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
        throw InvalidInput("edge labels must be pairwise distinct");
    }
}

std::vector<Arc> LabeledDigraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(e.source, e.target);
    return out;  // edges_ is sorted by (source, target, label)
}

std::vector<Arc> LabeledDigraph::arc_set() const {
    auto out = arcs();
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint64_t> LabeledDigraph::out_degrees() const {
    std::vector<std::uint64_t> deg(vertex_count_, 0);
    for (const auto& [s, t] : arc_set()) ++deg[s];
    return deg;
}

std::vector<std::uint64_t> LabeledDigraph::in_degrees() const {
    std::vector<std::uint64_t> deg(vertex_count_, 0);
    for (const auto& [s, t] : arc_set()) ++deg[t];
    return deg;
}

bool LabeledDigraph::fully_labeled() const noexcept {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.label.has_value(); });
}

LabeledDigraph LabeledDigraph::without_labels() const {
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const Edge& e : edges_) edges.push_back({e.source, e.target, std::nullopt});
    return LabeledDigraph(vertex_count_, std::move(edges));
}

// --- Permutation --------------------------------------------------------------

Permutation::Permutation(std::vector<std::uint64_t> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (std::uint64_t v : images_) {
        if (v >= images_.size() || hit[v]) {
            throw InvalidInput("permutation images must be a rearrangement of 0.." +
                               std::to_string(images_.size()) + "-1");
        }
        hit[v] = true;
    }
}

Permutation Permutation::identity(std::uint64_t size) {
    std::vector<std::uint64_t> images(size);
    for (std::uint64_t i = 0; i < size; ++i) images[i] = i;
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::uint64_t size,
                                     const std::vector<std::vector<std::uint64_t>>& cycles) {
    std::vector<std::uint64_t> images(size);
    for (std::uint64_t i = 0; i < size; ++i) images[i] = i;
    std::vector<bool> used(size, false);
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const std::uint64_t from = cycle[i];
            if (from >= size || used[from]) {
                throw InvalidInput("cycles must be disjoint and within 0.." +
                                   std::to_string(size) + "-1");
            }
            used[from] = true;
            images[from] = cycle[(i + 1) % cycle.size()];
        }
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<std::uint64_t> inv(images_.size());
    for (std::uint64_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw InvalidInput("cannot compose permutations of different sizes");
    std::vector<std::uint64_t> out(a.size());
    for (std::uint64_t i = 0; i < a.size(); ++i) out[i] = a.images_[b.images_[i]];
    return Permutation(std::move(out));
}

std::vector<std::vector<std::uint64_t>> Permutation::cycles() const {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::uint64_t start = 0; start < images_.size(); ++start) {
        if (seen[start] || images_[start] == start) continue;
        std::vector<std::uint64_t> cycle;
        for (std::uint64_t x = start; !seen[x]; x = images_[x]) {
            seen[x] = true;
            cycle.push_back(x);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string Permutation::cycle_notation() const {
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& c : cs) {
        out += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(c[i]);
        }
        out += ')';
    }
    return out;
}

// --- builders ------------------------------------------------------------------

LabeledDigraph build_modular_graph(const BranchMap& f, std::uint64_t m, const Limits& limits) {
    if (m < 1) throw InvalidInput("modulus must be at least 1");
    if (m > limits.max_vertices) {
        throw ResourceLimitExceeded("modular graph with " + std::to_string(m) +
                                    " vertices exceeds the limit of " +
                                    std::to_string(limits.max_vertices));
    }
    const std::uint64_t labels = m * f.base();
    std::vector<Edge> edges;
    edges.reserve(labels);
    for (std::uint64_t r = 0; r < labels; ++r) {
        edges.push_back({r % m, eval_residue(f, r, m), r});
    }
    return LabeledDigraph(m, std::move(edges));
}

LabeledDigraph build_debruijn_graph(std::uint32_t p, unsigned k, const Limits& limits) {
    if (p < 2) throw InvalidInput("De Bruijn graph needs p >= 2");
    if (k < 1) throw InvalidInput("De Bruijn graph needs k >= 1");
    const std::uint64_t n = require_power_within(p, k, limits.max_vertices, "De Bruijn graph");
    const std::uint64_t top = n / p;  // p^{k-1}
    std::vector<Edge> edges;
    edges.reserve(n * p);
    for (std::uint64_t v = 0; v < n; ++v) {
        const std::uint64_t shifted = v / p;
        for (std::uint64_t x = 0; x < p; ++x) {
            edges.push_back({v, shifted + x * top, v + x * n});
        }
    }
    return LabeledDigraph(n, std::move(edges));
}

LabeledDigraph line_graph(const LabeledDigraph& g) {
    const std::uint64_t e = g.edge_count();
    std::vector<const Edge*> by_label(e, nullptr);
    for (const Edge& edge : g.edges()) {
        if (!edge.label) throw InvalidInput("line graph needs every edge to carry a label");
        if (*edge.label >= e) {
            throw InvalidInput("line graph needs labels to be exactly 0.." + std::to_string(e) +
                               "-1; found label " + std::to_string(*edge.label));
        }
        by_label[*edge.label] = &edge;
    }
    // labels are distinct and < e, so by_label is full
    std::vector<std::vector<std::uint64_t>> leaving(g.vertex_count());
    for (std::uint64_t u = 0; u < e; ++u) leaving[by_label[u]->source].push_back(u);

    std::vector<Edge> edges;
    for (std::uint64_t u = 0; u < e; ++u) {
        for (std::uint64_t v : leaving[by_label[u]->target]) edges.push_back({u, v, std::nullopt});
    }
    return LabeledDigraph(e, std::move(edges));
}

LabeledDigraph transpose(const LabeledDigraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.push_back({e.target, e.source, e.label});
    return LabeledDigraph(g.vertex_count(), std::move(edges));
}

LabeledDigraph relabel_vertices(const LabeledDigraph& g, const Permutation& phi) {
    if (phi.size() != g.vertex_count()) {
        throw InvalidInput("permutation size " + std::to_string(phi.size()) +
                           " does not match vertex count " + std::to_string(g.vertex_count()));
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.push_back({phi(e.source), phi(e.target), e.label});
    return LabeledDigraph(g.vertex_count(), std::move(edges));
}

bool check_isomorphism(const LabeledDigraph& g, const LabeledDigraph& h, const Permutation& phi) {
    if (g.vertex_count() != phi.size() || h.vertex_count() != phi.size()) {
        throw InvalidInput("check_isomorphism: graphs with " + std::to_string(g.vertex_count()) +
                           " and " + std::to_string(h.vertex_count()) +
                           " vertices against a permutation of size " + std::to_string(phi.size()));
    }
    if (g.edge_count() != h.edge_count()) return false;
    std::vector<Arc> mapped;
    mapped.reserve(g.edge_count());
    for (const Edge& e : g.edges()) mapped.emplace_back(phi(e.source), phi(e.target));
    std::sort(mapped.begin(), mapped.end());
    return mapped == h.arcs();
}

LabeledDigraph restrict_collatz_graph(const BranchMap& f, std::uint64_t bound, const Limits& limits) {
    if (bound < 1) throw InvalidInput("restriction bound must be at least 1");
    if (bound > limits.max_vertices) {
        throw ResourceLimitExceeded("restricted graph with " + std::to_string(bound) +
                                    " vertices exceeds the limit of " +
                                    std::to_string(limits.max_vertices));
    }
    std::vector<Edge> edges;
    for (std::uint64_t n = 0; n < bound; ++n) {
        const Branch& br = f.branch(static_cast<std::uint32_t>(n % f.base()));
        const __int128 image = (static_cast<__int128>(br.multiplier) * n + br.offset) / f.base();
        if (image >= 0 && image < static_cast<__int128>(bound)) {
            edges.push_back({n, static_cast<std::uint64_t>(image), std::nullopt});
        }
    }
    return LabeledDigraph(bound, std::move(edges));
}

Permutation digit_reversal(std::uint32_t p, unsigned k) {
    const std::uint64_t n = require_power_within(p, k, kDefaultMaxVertices, "digit reversal");
    std::vector<std::uint64_t> images(n);
    for (std::uint64_t v = 0; v < n; ++v) {
        std::uint64_t rest = v, rev = 0;
        for (unsigned i = 0; i < k; ++i) {
            rev = rev * p + rest % p;
            rest /= p;
        }
        images[v] = rev;
    }
    return Permutation(std::move(images));
}

// --- export ------------------------------------------------------------------------

std::string export_dot(const LabeledDigraph& g) {
    std::ostringstream out;
    out << "digraph {\n";
    for (std::uint64_t v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const Edge& e : g.edges()) {
        out << "  " << e.source << " -> " << e.target;
        if (e.label) out << " [label=\"" << *e.label << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_json(const LabeledDigraph& g) {
    nlohmann::ordered_json j;
    j["m"] = g.vertex_count();
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back({e.source, e.target,
                         e.label ? nlohmann::ordered_json(*e.label) : nlohmann::ordered_json(nullptr)});
    }
    return j.dump() + "\n";
}

LabeledDigraph import_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("m") || !j["m"].is_number_unsigned() ||
        !j.contains("edges") || !j["edges"].is_array()) {
        throw InvalidInput(R"(graph JSON must look like {"m": int, "edges": [[s,t,label|null],...]})");
    }
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() ||
            !e[1].is_number_unsigned() || !(e[2].is_null() || e[2].is_number_unsigned())) {
            throw InvalidInput("graph JSON: each edge must be [source, target, label|null]");
        }
        std::optional<std::uint64_t> label;
        if (!e[2].is_null()) label = e[2].get<std::uint64_t>();
        edges.push_back({e[0].get<std::uint64_t>(), e[1].get<std::uint64_t>(), label});
    }
    return LabeledDigraph(j["m"].get<std::uint64_t>(), std::move(edges));
}

}  // namespace collatzdb
