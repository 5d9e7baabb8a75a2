#include "collatzdb/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "collatzdb/collatzdb.hpp"

namespace collatzdb::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kMaxVerticesEnv = "COLLATZDB_MAX_VERTICES";

// Raised for a false verdict or an undetermined result after the output has been written.
struct Verdict {
    int code;
};

Limits limits_from_environment() {
    Limits limits;
    if (const char* raw = std::getenv(kMaxVerticesEnv); raw != nullptr && *raw != '\0') {
        std::uint64_t value = 0;
        const std::string_view text(raw);
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
            throw InvalidInput(std::string(kMaxVerticesEnv) + " must be a positive integer");
        }
        limits.max_vertices = value;
    }
    return limits;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

BranchMap resolve_map(const RunConfig& cfg) {
    if (!cfg.map_file.empty()) return BranchMap::from_json(read_file(cfg.map_file));
    return parse_map_preset(cfg.map);
}

void require_format(const RunConfig& cfg, std::initializer_list<std::string_view> allowed) {
    if (std::find(allowed.begin(), allowed.end(), cfg.format) == allowed.end()) {
        std::string list;
        for (auto a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
        throw InvalidInput("--format " + cfg.format + " is not available here (use " + list + ")");
    }
}

void require_k(const RunConfig& cfg) {
    if (cfg.k < 1) throw InvalidInput("--k must be at least 1");
}

std::string render_graph(const LabeledDigraph& g, const std::string& format) {
    if (format == "dot") return export_dot(g);
    if (format == "json") return export_json(g);
    std::ostringstream out;
    out << "vertices " << g.vertex_count() << " edges " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) {
        out << e.source << " -> " << e.target;
        if (e.label) out << " label " << *e.label;
        out << "\n";
    }
    return out.str();
}

std::uint64_t modulus_of(const RunConfig& cfg, const BranchMap& f, const Limits& limits) {
    if (cfg.m > 0 && cfg.k > 0) throw InvalidInput("give either --m or --k, not both");
    if (cfg.m > 0) return cfg.m;
    if (cfg.k > 0) return require_power_within(f.base(), cfg.k, limits.max_vertices, "modulus p^k");
    throw InvalidInput("a modulus is required: pass --m M or --k K (for M = p^K)");
}

LabeledDigraph source_graph(const RunConfig& cfg, const std::string& source, const Limits& limits) {
    if (source == "file") {
        if (cfg.input.empty()) throw InvalidInput("--source file needs --input FILE");
        return import_json(read_file(cfg.input));
    }
    if (source == "debruijn") {
        require_k(cfg);
        return build_debruijn_graph(cfg.p, cfg.k, limits);
    }
    if (source == "modular") {
        const BranchMap f = resolve_map(cfg);
        return build_modular_graph(f, modulus_of(cfg, f, limits), limits);
    }
    throw InvalidInput("--source must be modular, debruijn or file");
}

std::string bigint_text(const BigInt& v) { return v.str(); }

ordered_json bigint_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

std::string cycle_text(const RationalCycle& c) {
    std::vector<std::string> rational, integer;
    for (const auto& e : c.elements) rational.push_back(e.to_string());
    for (const auto& v : c.integer_cycle) integer.push_back(v.str());
    std::ostringstream out;
    out << "word " << c.word << "\n"
        << "b " << c.b << "\n"
        << "rational_cycle " << join(rational, " ") << "\n"
        << "integer_cycle " << join(integer, " ") << "\n";
    return out.str();
}

// --- subcommand handlers --------------------------------------------------------

std::string cmd_graph(const RunConfig& cfg, const std::string& which, const std::string& source,
                      const Limits& limits) {
    require_format(cfg, {"text", "json", "dot"});
    if (which == "modular") {
        const BranchMap f = resolve_map(cfg);
        return render_graph(build_modular_graph(f, modulus_of(cfg, f, limits), limits), cfg.format);
    }
    if (which == "debruijn") {
        require_k(cfg);
        return render_graph(build_debruijn_graph(cfg.p, cfg.k, limits), cfg.format);
    }
    if (which == "restrict") {
        if (cfg.m < 1) throw InvalidInput("--m (the vertex bound) must be at least 1");
        return render_graph(restrict_collatz_graph(resolve_map(cfg), cfg.m, limits), cfg.format);
    }
    const LabeledDigraph g = source_graph(cfg, source, limits);
    if (which == "line") return render_graph(line_graph(g), cfg.format);
    return render_graph(transpose(g), cfg.format);
}

std::string cmd_conj_perm(const RunConfig& cfg, const Limits& limits) {
    require_format(cfg, {"text", "json"});
    require_k(cfg);
    if (cfg.order != "lsb" && cfg.order != "msb") throw InvalidInput("--order must be lsb or msb");
    const auto order = cfg.order == "lsb" ? DigitOrder::least_significant_first
                                          : DigitOrder::most_significant_first;
    const Permutation phi = conjugacy_permutation(resolve_map(cfg), cfg.k, order, limits);
    if (cfg.format == "json") return permutation_to_json(phi);
    std::ostringstream out;
    out << "size " << phi.size() << "\n"
        << "cycles " << phi.cycle_notation() << "\n"
        << "order " << permutation_order(phi) << "\n";
    return out.str();
}

std::string cmd_conj_verify(const RunConfig& cfg, const Limits& limits, int& code) {
    require_format(cfg, {"text", "json"});
    require_k(cfg);
    const BranchMap f = resolve_map(cfg);
    const bool ok = verify_conjugacy(f, cfg.k, limits);
    code = ok ? kOk : kFalseVerdict;
    if (cfg.format == "json") {
        ordered_json j;
        j["map"] = ordered_json::parse(f.to_json());
        j["k"] = cfg.k;
        j["isomorphism"] = ok;
        return j.dump() + "\n";
    }
    return ok ? "true\n" : "false\n";
}

std::string cmd_conj_phi(const RunConfig& cfg, int& code) {
    require_format(cfg, {"text", "json"});
    const int chosen = !cfg.exact.empty() + !cfg.truncated.empty() + !cfg.inverse.empty();
    if (chosen != 1) throw InvalidInput("pass exactly one of --exact, --truncated, --inverse");
    const BranchMap f = resolve_map(cfg);

    if (!cfg.exact.empty()) {
        const ConjugacyResult r = phi_exact(f, Rational::parse(cfg.exact), cfg.max_steps);
        code = r.exact() ? kOk : kUndetermined;
        if (cfg.format == "json") {
            ordered_json j;
            j["input"] = r.input.to_string();
            if (r.output) {
                j["value"] = r.output->value.to_string();
                j["preperiod"] = r.output->digits.preperiod().to_string();
                j["period"] = r.output->digits.period().to_string();
            } else {
                j["value"] = nullptr;
            }
            j["steps_used"] = r.steps_used;
            return j.dump() + "\n";
        }
        if (!r.output) return "undetermined after " + std::to_string(r.steps_used) + " steps\n";
        return r.output->value.to_string() + "\n";
    }

    const bool forward = !cfg.truncated.empty();
    const DigitWord in = DigitWord::parse(forward ? cfg.truncated : cfg.inverse, f.base());
    const DigitWord result = forward ? phi_truncated(f, in) : phi_inverse_truncated(f, in);
    if (cfg.format == "json") {
        ordered_json j;
        j["input"] = in.to_string();
        j[forward ? "phi" : "preimage"] = result.to_string();
        return j.dump() + "\n";
    }
    return result.to_string() + "\n";
}

std::string cmd_seq_fkm(const RunConfig& cfg, const Limits& limits) {
    require_format(cfg, {"text", "json"});
    require_k(cfg);
    const DigitWord s = fkm_sequence(cfg.p, cfg.k, limits);
    if (cfg.format == "json") {
        ordered_json j;
        j["p"] = cfg.p;
        j["k"] = cfg.k;
        j["sequence"] = s.to_string();
        return j.dump() + "\n";
    }
    return s.to_string() + "\n";
}

std::string cmd_seq_verify(const RunConfig& cfg, int& code) {
    require_format(cfg, {"text", "json"});
    require_k(cfg);
    const bool ok = verify_debruijn_sequence(DigitWord::parse(cfg.sequence, cfg.p), cfg.p, cfg.k);
    code = ok ? kOk : kFalseVerdict;
    if (cfg.format == "json") {
        ordered_json j;
        j["sequence"] = cfg.sequence;
        j["p"] = cfg.p;
        j["k"] = cfg.k;
        j["de_bruijn"] = ok;
        return j.dump() + "\n";
    }
    return ok ? "true\n" : "false\n";
}

std::string cmd_count_necklaces(const RunConfig& cfg) {
    require_format(cfg, {"text", "json"});
    require_k(cfg);
    const BigInt count = necklace_count(cfg.p, cfg.k);
    if (cfg.format == "json") {
        ordered_json j;
        j["p"] = cfg.p;
        j["k"] = cfg.k;
        j["count"] = bigint_json(count);
        return j.dump() + "\n";
    }
    return bigint_text(count) + "\n";
}

std::string cmd_words_lyndon(const RunConfig& cfg, const Limits& limits) {
    require_format(cfg, {"text", "json"});
    require_k(cfg);
    if (cfg.mode != "exact" && cfg.mode != "dividing") {
        throw InvalidInput("--mode must be exact or dividing");
    }
    const auto words = lyndon_words(cfg.p, cfg.k,
                                    cfg.mode == "exact" ? LyndonLengths::exact : LyndonLengths::dividing,
                                    limits);
    if (cfg.format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& w : words) j.push_back(w.to_string());
        return j.dump() + "\n";
    }
    std::string out;
    for (const auto& w : words) out += w.to_string() + "\n";
    return out;
}

std::string cmd_cycles_from_word(const RunConfig& cfg) {
    require_format(cfg, {"text", "json"});
    const BranchMap f = resolve_map(cfg);
    const DigitWord w = DigitWord::parse(cfg.word, f.base());
    const RationalCycle c = rational_cycle_at(f, cycle_from_word(f, w), w.size());
    return cfg.format == "json" ? cycle_to_json(c) : cycle_text(c);
}

std::string cmd_cycles_for_b(const RunConfig& cfg) {
    require_format(cfg, {"text", "json"});
    const auto cycles = enumerate_cycles_for_b(BigInt{cfg.b}, cfg.max_len);
    if (cfg.format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& c : cycles) j.push_back(ordered_json::parse(cycle_to_json(c)));
        return j.dump() + "\n";
    }
    std::string out;
    for (const auto& c : cycles) {
        std::vector<std::string> integer;
        for (const auto& v : c.integer_cycle) integer.push_back(v.str());
        out += c.word.to_string() + ": " + join(integer, " ") + "\n";
    }
    return out;
}

std::string cmd_cycles_classify(const RunConfig& cfg, int& code) {
    require_format(cfg, {"text", "json"});
    if (cfg.n.empty()) throw InvalidInput("--n is required");
    const OrbitClass result = classify_orbit(resolve_map(cfg), Rational::parse(cfg.n), cfg.max_steps);
    if (const auto* u = std::get_if<UndeterminedOrbit>(&result)) {
        code = kUndetermined;
        if (cfg.format == "json") {
            ordered_json j;
            j["input"] = cfg.n;
            j["status"] = "undetermined";
            j["steps_used"] = u->steps_used;
            return j.dump() + "\n";
        }
        return "undetermined after " + std::to_string(u->steps_used) + " steps\n";
    }
    const auto& c = std::get<CyclicOrbit>(result);
    code = kOk;
    if (cfg.format == "json") {
        ordered_json j;
        j["input"] = cfg.n;
        j["status"] = "cyclic";
        j["preperiod"] = c.preperiod;
        j["tail_length"] = c.tail_length;
        j["cycle"] = ordered_json::parse(cycle_to_json(c.cycle));
        return j.dump() + "\n";
    }
    std::ostringstream out;
    out << "cyclic\npreperiod " << c.preperiod << "\ntail_length " << c.tail_length << "\n"
        << cycle_text(c.cycle);
    return out.str();
}

std::string cmd_spectral_check(const RunConfig& cfg, const Limits& limits, int& code) {
    require_format(cfg, {"text", "json"});
    require_k(cfg);
    const std::uint64_t l_max = cfg.l_max == 0 ? cfg.k : cfg.l_max;
    const UniformPowerReport report = check_uniform_power(resolve_map(cfg), cfg.k, l_max, limits);
    code = report.uniform ? kOk : kFalseVerdict;
    if (cfg.format == "json") {
        ordered_json j;
        j["k"] = cfg.k;
        j["l_max"] = l_max;
        j["uniform"] = report.uniform;
        if (const auto& v = report.first_violation) {
            j["violation"] = {{"l", v->exponent},
                              {"i", v->row},
                              {"j", v->column},
                              {"entry", bigint_json(v->entry)},
                              {"expected", bigint_json(v->expected)}};
        }
        return j.dump() + "\n";
    }
    if (report.uniform) return "true\n";
    const auto& v = *report.first_violation;
    std::ostringstream out;
    out << "false: l=" << v.exponent << " i=" << v.row << " j=" << v.column << " entry=" << v.entry
        << " expected=" << v.expected << "\n";
    return out.str();
}

// --- option wiring -----------------------------------------------------------------

void add_map_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--map", cfg.map,
                    "Branch map preset: collatz, shift, collatz-original, an+b(a,b)")
        ->capture_default_str();
    sub->add_option("--map-file", cfg.map_file,
                    R"(Branch map JSON file {"p": int, "branches": [[a,b],...]})")
        ->check(CLI::ExistingFile);
}

void add_format(CLI::App* sub, RunConfig& cfg, const char* help = "Output format: text or json") {
    sub->add_option("--format", cfg.format, help)->capture_default_str();
    sub->add_option("-o,--output", cfg.output, "Write output to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string graph_source = "modular";

    CLI::App app{"collatzdb: modular Collatz graphs, De Bruijn graphs and their conjugacy maps"};
    app.name("collatzdb");
    app.require_subcommand(1);

    // Each leaf registers the name used for dispatch.
    std::map<const CLI::App*, std::string> leaves;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
        CLI::App* sub = parent->add_subcommand(name, help);
        leaves[sub] = parent->get_name() + " " + name;
        return sub;
    };

    auto* graph = app.add_subcommand("graph", "Build and export finite graphs");
    graph->require_subcommand(1);
    {
        auto* s = leaf(graph, "modular", "Modular Collatz graph C^(f)(m): residues mod m, edges labeled by residue mod p*m");
        add_map_options(s, cfg);
        s->add_option("--m", cfg.m, "Modulus m");
        s->add_option("--k", cfg.k, "Use m = p^k");
        add_format(s, cfg, "Output format: text, json or dot");

        s = leaf(graph, "debruijn", "p-ary De Bruijn graph B(p,k) with numeric vertex ids sum b_i p^i");
        s->add_option("--p", cfg.p, "Alphabet size p")->capture_default_str();
        s->add_option("--k", cfg.k, "Word length k")->required();
        add_format(s, cfg, "Output format: text, json or dot");

        s = leaf(graph, "restrict", "Collatz graph n -> f(n) restricted to {0, ..., m-1}");
        add_map_options(s, cfg);
        s->add_option("--m", cfg.m, "Vertex bound")->required();
        add_format(s, cfg, "Output format: text, json or dot");

        for (const char* name : {"line", "transpose"}) {
            s = leaf(graph, name,
                     std::string(name) == "line"
                         ? "Line graph: edges of the input become vertices (C(k) -> C(k+1))"
                         : "Transpose graph: every edge reversed, labels kept");
            s->add_option("--source", graph_source, "Input graph: modular, debruijn or file")
                ->capture_default_str();
            s->add_option("--input", cfg.input, "Graph JSON file (with --source file)");
            add_map_options(s, cfg);
            s->add_option("--m", cfg.m, "Modulus for --source modular");
            s->add_option("--p", cfg.p, "Alphabet size for --source debruijn")->capture_default_str();
            s->add_option("--k", cfg.k, "Dimension k (m = p^k)");
            add_format(s, cfg, "Output format: text, json or dot");
        }
    }

    auto* conj = app.add_subcommand("conj", "Conjugacy maps Phi between C^(f) and the De Bruijn graphs");
    conj->require_subcommand(1);
    {
        auto* s = leaf(conj, "perm", "Finite conjugacy permutation Phi^(f)_{p,k} in cycle notation");
        add_map_options(s, cfg);
        s->add_option("--k", cfg.k, "Dimension k")->required();
        s->add_option("--order", cfg.order, "Digit packing: lsb (sum x_i p^i) or msb")
            ->capture_default_str();
        add_format(s, cfg);

        s = leaf(conj, "verify", "Check that Phi^(f)_{p,k} is an isomorphism C^(f)(p^k) -> B(p,k)");
        add_map_options(s, cfg);
        s->add_option("--k", cfg.k, "Dimension k")->required();
        add_format(s, cfg);

        s = leaf(conj, "phi", "p-adic conjugacy map Phi: exact on rationals, truncated, or inverse");
        add_map_options(s, cfg);
        s->add_option("--exact", cfg.exact, "Rational input n or n/d; prints Phi(r) as a rational");
        s->add_option("--truncated", cfg.truncated, "Digit word n mod p^N (least significant first)");
        s->add_option("--inverse", cfg.inverse, "Digit word; prints its preimage under Phi mod p^N");
        s->add_option("--max-steps", cfg.max_steps, "Iteration budget for --exact")->capture_default_str();
        add_format(s, cfg);
    }

    auto* seq = app.add_subcommand("seq", "De Bruijn sequences");
    seq->require_subcommand(1);
    {
        auto* s = leaf(seq, "fkm", "FKM De Bruijn sequence: Lyndon words of length dividing k, concatenated");
        s->add_option("--p", cfg.p, "Alphabet size")->capture_default_str();
        s->add_option("--k", cfg.k, "Order k")->required();
        add_format(s, cfg);

        s = leaf(seq, "verify", "Check that a cyclic sequence contains every length-k word exactly once");
        s->add_option("--p", cfg.p, "Alphabet size")->capture_default_str();
        s->add_option("--k", cfg.k, "Order k")->required();
        s->add_option("--sequence", cfg.sequence, "The sequence as a digit string")->required();
        add_format(s, cfg);
    }

    auto* count = app.add_subcommand("count", "Counting functions");
    count->require_subcommand(1);
    {
        auto* s = leaf(count, "necklaces", "Necklace count M_k = (1/k) sum_{d|k} mu(d) p^{k/d} (cycles of length k)");
        s->add_option("--p", cfg.p, "Alphabet size")->capture_default_str();
        s->add_option("--k", cfg.k, "Length k")->required();
        add_format(s, cfg);
    }

    auto* words = app.add_subcommand("words", "Combinatorics on words");
    words->require_subcommand(1);
    {
        auto* s = leaf(words, "lyndon", "Lyndon words (Duval order) of length k, or of lengths dividing k");
        s->add_option("--p", cfg.p, "Alphabet size")->capture_default_str();
        s->add_option("--k", cfg.k, "Length k")->required();
        s->add_option("--mode", cfg.mode, "exact or dividing")->capture_default_str();
        add_format(s, cfg);
    }

    auto* cycles = app.add_subcommand("cycles", "Rational cycles of T and integer cycles of 3n+b");
    cycles->require_subcommand(1);
    {
        auto* s = leaf(cycles, "from-word", "Rational cycle whose residue word is the given parity word");
        add_map_options(s, cfg);
        s->add_option("--word", cfg.word, "Digit word, least significant first")->required();
        add_format(s, cfg);

        s = leaf(cycles, "for-b", "Cycles of T with denominator b (integer cycles of 3n+b) up to a word length");
        s->add_option("--b", cfg.b, "Odd b coprime to 3")->required();
        s->add_option("--max-len", cfg.max_len, "Longest Lyndon word scanned")->capture_default_str();
        add_format(s, cfg);

        s = leaf(cycles, "classify", "Follow an exact orbit until it cycles (periodicity check)");
        add_map_options(s, cfg);
        s->add_option("--n", cfg.n, "Rational start n or n/d")->required();
        s->add_option("--max-steps", cfg.max_steps, "Iteration budget")->capture_default_str();
        add_format(s, cfg);
    }

    auto* spectral = app.add_subcommand("spectral", "Adjacency matrix powers");
    spectral->require_subcommand(1);
    {
        auto* s = leaf(spectral, "check", "Check (A_k^l)_{ij} = p^(l-k) for k <= l <= l-max");
        add_map_options(s, cfg);
        s->add_option("--k", cfg.k, "Dimension k")->required();
        s->add_option("--l-max", cfg.l_max, "Largest exponent (default k)");
        add_format(s, cfg);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsageError;
    }

    const CLI::App* chosen = nullptr;
    for (const auto& [sub, name] : leaves) {
        if (sub->parsed()) {
            chosen = sub;
            cfg.command = name;
        }
    }
    if (chosen == nullptr) {
        err << "no subcommand given\n";
        return kUsageError;
    }

    try {
        const Limits limits = limits_from_environment();
        int code = kOk;
        std::string text;
        const std::string& c = cfg.command;
        if (c.starts_with("graph ")) text = cmd_graph(cfg, c.substr(6), graph_source, limits);
        else if (c == "conj perm") text = cmd_conj_perm(cfg, limits);
        else if (c == "conj verify") text = cmd_conj_verify(cfg, limits, code);
        else if (c == "conj phi") text = cmd_conj_phi(cfg, code);
        else if (c == "seq fkm") text = cmd_seq_fkm(cfg, limits);
        else if (c == "seq verify") text = cmd_seq_verify(cfg, code);
        else if (c == "count necklaces") text = cmd_count_necklaces(cfg);
        else if (c == "words lyndon") text = cmd_words_lyndon(cfg, limits);
        else if (c == "cycles from-word") text = cmd_cycles_from_word(cfg);
        else if (c == "cycles for-b") text = cmd_cycles_for_b(cfg);
        else if (c == "cycles classify") text = cmd_cycles_classify(cfg, code);
        else if (c == "spectral check") text = cmd_spectral_check(cfg, limits, code);

        if (cfg.output.empty()) {
            out << text;
        } else {
            std::ofstream file(cfg.output, std::ios::binary);
            if (!file) throw InvalidInput("cannot write '" + cfg.output + "'");
            file << text;
        }
        return code;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ResourceLimitExceeded& e) {
        err << "error: " << e.what() << " (raise " << kMaxVerticesEnv << " to allow more)\n";
        return kUsageError;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace collatzdb::cli
