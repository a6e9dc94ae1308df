// Command-line front end: orbit graphs, verification suites, augmented
// matrices, simple-root sequences, and the staircase constructions.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "wg/affine.hpp"
#include "wg/blocks.hpp"
#include "wg/errors.hpp"
#include "wg/graph.hpp"
#include "wg/verify.hpp"
#include "wg/verma.hpp"
#include "wg/weight.hpp"

namespace {

using namespace wg;

Rank parse_rank(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw RankError("rank must look like n,m");
    Rank r{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    require_diagram_rank(r);
    return r;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

// File outputs land under the directory named by WG_OUTPUT_DIR when set.
void write_output(const std::string& path, const std::string& content) {
    std::filesystem::path target(path);
    if (const char* dir = std::getenv("WG_OUTPUT_DIR"); dir && target.is_relative())
        target = std::filesystem::path(dir) / target;
    std::ofstream out(target);
    if (!out) throw DomainError("cannot write " + target.string());
    out << content;
    std::cout << "wrote " << target.string() << '\n';
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        write_output(out_path, content);
}

nlohmann::json root_json(const AffineRoot& x) {
    return {{"level", x.level}, {"coeffs", x.fin}};
}

nlohmann::json list_json(const SimpleRootList& roots) {
    nlohmann::json arr = nlohmann::json::array();
    for (const AffineRoot& x : roots) arr.push_back(root_json(x));
    return arr;
}

int cmd_orbit(const Rank& r, const std::string& kind, long max_degree,
              const std::string& format, const std::string& out_path, bool histogram,
              long from, long to) {
    if (histogram) {
        std::ostringstream os;
        const std::vector<long> hist = classes_by_degree(r, from, to);
        for (size_t t = 0; t < hist.size(); ++t)
            os << "degree " << from + static_cast<long>(t) << ": " << hist[t] << '\n';
        emit(os.str(), out_path);
        return 0;
    }
    std::string dot, json, text;
    if (kind == "f") {
        const FOrbitGraph g = build_f_graph(canonicalize(empty_partition(r), 0, r), max_degree, r);
        dot = to_dot(g.g), json = to_json(g), text = graph_text(g.g);
    } else if (kind == "b") {
        const BOrbitGraph g = build_b_graph(identity_shuffle(r), 0, max_degree, r);
        dot = to_dot(g.g), json = to_json(g), text = graph_text(g.g);
    } else if (kind == "sv") {
        const SvOrbitGraph g = build_sv_graph(lambda0(r), max_degree, r);
        dot = to_dot(g.g), json = to_json(g), text = graph_text(g.g);
    } else {
        throw DomainError("orbit kind must be f, b or sv");
    }
    emit(format == "dot" ? dot : format == "json" ? json : text, out_path);
    return 0;
}

int cmd_verify(const Rank& r, std::vector<std::string> suites, unsigned jobs,
               std::uint64_t seed) {
    if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = suite_names();
    std::vector<std::future<SuiteResult>> futures;
    futures.reserve(suites.size());
    const auto policy = jobs > 1 ? std::launch::async : std::launch::deferred;
    for (const std::string& name : suites)
        futures.push_back(std::async(policy, [name, r, seed] { return run_suite(name, r, seed); }));
    bool all_pass = true;
    for (auto& f : futures) {
        const SuiteResult res = f.get();
        if (res.pass) {
            std::cout << "[PASS] " << res.name << " (" << res.checks << " checks";
            if (!res.notes.empty()) std::cout << "; " << res.notes;
            std::cout << ")\n";
        } else {
            all_pass = false;
            std::cout << "[FAIL] " << res.name << ": " << res.detail << '\n';
        }
    }
    return all_pass ? 0 : 1;
}

int cmd_matrix(const Rank& r, const std::string& weight_text, bool zeros_only,
               const std::string& out_path) {
    const Weight w = parse_weight(weight_text, r);
    emit(render_aug(a_matrix(w), zeros_only), out_path);
    return 0;
}

int cmd_roots(const Rank& r, const std::string& shuffle_text, long k,
              const std::string& format, bool grid, const std::vector<int>& reflect,
              const std::string& out_path) {
    const Shuffle sigma =
        shuffle_text.empty() ? identity_shuffle(r) : parse_shuffle(shuffle_text, r);
    SimpleRootList global = global_seq(sigma, k, r);
    std::ostringstream os;
    bool outside_verified = false;
    if (!reflect.empty()) {
        SimpleRootList ext = extend_list(global, r);
        for (int idx : reflect) {
            if (idx == 0) outside_verified = true;
            ext = odd_reflect_seq(ext, idx, r);
        }
        if (format == "json") {
            emit(nlohmann::json{{"extended", list_json(ext)},
                                {"outside_verified_forms", outside_verified}}
                     .dump(2) +
                     "\n",
                 out_path);
            return 0;
        }
        os << "extended list after reflections: " << root_list_str(ext, r) << '\n';
        if (outside_verified)
            os << "note: reflections at the extending node leave the verified name set\n";
        emit(os.str(), out_path);
        return 0;
    }
    if (format == "json") {
        nlohmann::json j{{"sigma", shuffle_str(sigma, r)},
                         {"k", k},
                         {"global", list_json(global)},
                         {"local", list_json(local_seq(global, k, r))},
                         {"extending", root_json(extending_root(global, r))},
                         {"odd", diagram_nodes(global, r)}};
        emit(j.dump(2) + "\n", out_path);
        return 0;
    }
    os << "borel " << shuffle_str(sigma, r) << " @ rotation " << k << '\n';
    os << "global: " << root_list_str(global, r) << '\n';
    os << "local:  " << root_list_str(local_seq(global, k, r), r) << '\n';
    os << "extending root: " << affine_root_str(extending_root(global, r), r) << '\n';
    os << dynkin_str(global, r);
    os << "extended diagram:\n" << extended_dynkin_str(extend_list(global, r), r);
    if (grid) os << delta_epsilon_render(sigma, r);
    emit(os.str(), out_path);
    return 0;
}

int cmd_conjecture(const Rank& r, const std::string& rr_text, const std::string& ss_text,
                   int random_count, std::uint64_t seed, bool lambda1, long bound) {
    if (lambda1) {
        Weight target;
        for (int i = 0; i < r.n; ++i) target.a.push_back(i);
        for (int j = 0; j < r.m; ++j) target.b.push_back(j);
        const auto path = orbit_search(lambda0(r), target, r, bound);
        if (!path) {
            std::cout << "no path within bound " << bound << '\n';
            return 1;
        }
        std::cout << "path of " << path->moves.size() << " moves:\n";
        for (size_t t = 0; t < path->states.size(); ++t) {
            std::cout << "  " << weight_str(path->states[t]);
            if (t < path->moves.size()) {
                const Move& mv = path->moves[t];
                std::cout << "  --(" << (mv.sign > 0 ? "+" : "-") << " at a=" << mv.a_value
                          << ", b=" << mv.b_value << ")-->";
            }
            std::cout << '\n';
        }
        return 0;
    }
    if (random_count > 0) {
        const SuiteResult res = verify_blocks(r, random_count, seed);
        if (res.pass) {
            std::cout << "[PASS] " << res.checks << " random staircase weights on the orbit\n";
            return 0;
        }
        std::cout << "[FAIL] " << res.detail << '\n';
        return 1;
    }
    const BlockSpec spec = make_block_spec(parse_ints(rr_text), parse_ints(ss_text), r);
    const Weight w = block_weight(spec, r);
    const Partition lam = block_partition(spec, r);
    std::cout << "weight: " << weight_str(w) << '\n';
    const std::vector<long> offs = block_offsets(spec, r);
    std::cout << "offsets:";
    for (size_t t = 1; t + 1 < offs.size(); ++t) std::cout << " a" << t << "=" << offs[t];
    std::cout << '\n';
    std::cout << "partition: " << partition_str(lam) << '\n';
    std::cout << "dual:      (";
    const std::vector<int> d = dual(lam, r);
    for (size_t t = 0; t < d.size(); ++t) std::cout << (t ? "," : "") << d[t];
    std::cout << ")\n";
    const bool ok = block_weight_on_orbit(spec, r);
    std::cout << (ok ? "on the orbit (entry multisets match)\n"
                     : "NOT on the orbit: multiset mismatch\n");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Type-A Weyl groupoid combinatorics: Young diagram orbits, integer weight "
                 "actions, and affine Borel root sequences"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string rank_text = "2,3";
    app.add_option("--rank", rank_text, "rank as n,m")->capture_default_str();

    auto* orbit = app.add_subcommand("orbit", "build and export an orbit graph");
    std::string kind = "f", format = "text", out_path;
    long max_degree = -1, hist_from = 0, hist_to = 6;
    bool histogram = false;
    orbit->add_option("--kind", kind, "graph kind: f (diagrams), b (borels), sv (weights)")
        ->capture_default_str();
    orbit->add_option("--max-degree", max_degree, "degree window top (default 2mn)");
    orbit->add_option("--format", format, "text, dot or json")->capture_default_str();
    orbit->add_option("--out", out_path, "output file (under WG_OUTPUT_DIR if relative)");
    orbit->add_flag("--histogram", histogram, "print class counts per degree instead");
    orbit->add_option("--from", hist_from, "histogram window start")->capture_default_str();
    orbit->add_option("--to", hist_to, "histogram window end")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run named invariant suites");
    std::vector<std::string> suites;
    unsigned jobs = 1;
    std::uint64_t seed = 20240817u;
    verify->add_option("suites", suites,
                       "ky | ax-id | iso | residues | affine-closed-forms | verma | blocks | all");
    verify->add_option("--jobs", jobs, "run suites concurrently")->capture_default_str();
    verify->add_option("--seed", seed, "seed for randomized suites")->capture_default_str();

    auto* matrix = app.add_subcommand("matrix", "render the bordered difference matrix");
    std::string weight_text;
    bool zeros_only = false;
    matrix->add_option("--weight", weight_text, "weight as a1,..,an|b1,..,bm")->required();
    matrix->add_flag("--zeros-only", zeros_only, "blank out nonzero cells");
    matrix->add_option("--out", out_path, "output file");

    auto* roots = app.add_subcommand("roots", "simple-root sequences of a Borel name");
    std::string shuffle_text;
    long rotation = 0;
    bool grid = false;
    std::vector<int> reflect;
    roots->add_option("--shuffle", shuffle_text, "one-line shuffle, e.g. 1',1,2',3',2");
    roots->add_option("--k", rotation, "rotation number")->capture_default_str();
    roots->add_option("--format", format, "text or json")->capture_default_str();
    roots->add_flag("--grid", grid, "print the delta-epsilon grid");
    roots->add_option("--reflect", reflect, "reflect the extended list at these indices");
    roots->add_option("--out", out_path, "output file");

    auto* conj = app.add_subcommand("conjecture", "staircase weights and orbit search");
    std::string rr_text, ss_text;
    int random_count = 0;
    bool lambda1 = false;
    long bound = -1;
    conj->add_option("--rr", rr_text, "column runs, comma separated");
    conj->add_option("--ss", ss_text, "row runs, comma separated");
    conj->add_option("--random", random_count, "check this many random staircases");
    conj->add_option("--seed", seed, "seed for --random")->capture_default_str();
    conj->add_flag("--lambda1", lambda1, "search a path to (0..n-1|0..m-1)");
    conj->add_option("--bound", bound, "degree bound for the search (default 2mn)");

    try {
        app.parse(argc, argv);
        const Rank r = parse_rank(rank_text);
        if (max_degree < 0) max_degree = 2 * rect_area(r);
        if (bound < 0) bound = 2 * rect_area(r);
        if (orbit->parsed())
            return cmd_orbit(r, kind, max_degree, format, out_path, histogram, hist_from,
                             hist_to);
        if (verify->parsed()) return cmd_verify(r, suites, jobs, seed);
        if (matrix->parsed()) return cmd_matrix(r, weight_text, zeros_only, out_path);
        if (roots->parsed())
            return cmd_roots(r, shuffle_text, rotation, format, grid, reflect, out_path);
        if (conj->parsed())
            return cmd_conjecture(r, rr_text, ss_text, random_count, seed, lambda1, bound);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const RankError& e) {
        std::cerr << "rank error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
