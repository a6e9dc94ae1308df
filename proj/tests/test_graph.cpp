#include <doctest.h>

#include <algorithm>
#include <set>

#include "wg/errors.hpp"
#include "wg/graph.hpp"

using namespace wg;

namespace {
const Rank R23{2, 3};

FOrbitGraph golden23() {
    return build_f_graph(canonicalize(empty_partition(R23), 0, R23), 6, R23);
}

int vid(const FOrbitGraph& fg, std::vector<int> parts, long k) {
    return fg.g.id_of(class_key(RotClass{make_partition(std::move(parts), R23), k}));
}

bool has_edge(const OrbitGraph& g, int src, int dst, const OddRoot& label) {
    for (const auto& e : g.edges)
        if (e.src == src && e.dst == dst && e.label == label) return true;
    return false;
}
}  // namespace

TEST_CASE("orbit graph of the 2x3 window, degrees 0..6") {
    const FOrbitGraph fg = golden23();
    REQUIRE(fg.g.vertices.size() == 14);
    for (long d = 0; d <= 6; ++d) CHECK(fg.g.slice(d).size() == 2);

    // Golden edge list, derived by scanning members of every class.
    struct GEdge {
        std::vector<int> src;
        long sk;
        std::vector<int> dst;
        long dk;
        OddRoot label;
    };
    const std::vector<GEdge> want{
        {{0, 0}, 0, {1, 0}, 0, pos_root(2, 1)},
        {{2, 1}, -1, {2, 2}, -1, pos_root(2, 2)},
        {{2, 1}, -1, {1, 0}, 0, pos_root(1, 3)},
        {{1, 0}, 0, {1, 1}, 0, pos_root(1, 1)},
        {{1, 0}, 0, {2, 0}, 0, pos_root(2, 2)},
        {{2, 2}, -1, {2, 0}, 0, pos_root(1, 3)},
        {{1, 1}, 0, {2, 1}, 0, pos_root(2, 2)},
        {{2, 0}, 0, {2, 1}, 0, pos_root(1, 1)},
        {{2, 0}, 0, {0, 0}, 1, pos_root(2, 3)},
        {{2, 1}, 0, {2, 2}, 0, pos_root(1, 2)},
        {{2, 1}, 0, {1, 0}, 1, pos_root(2, 3)},
        {{0, 0}, 1, {1, 0}, 1, pos_root(1, 1)},
        {{2, 2}, 0, {2, 0}, 1, pos_root(2, 3)},
        {{1, 0}, 1, {1, 1}, 1, pos_root(2, 1)},
        {{1, 0}, 1, {2, 0}, 1, pos_root(1, 2)},
        {{2, 0}, 1, {2, 1}, 1, pos_root(2, 1)},
        {{2, 0}, 1, {0, 0}, 2, pos_root(1, 3)},
        {{1, 1}, 1, {2, 1}, 1, pos_root(1, 2)},
    };
    CHECK(fg.g.edges.size() == want.size());
    for (const GEdge& e : want)
        CHECK(has_edge(fg.g, vid(fg, e.src, e.sk), vid(fg, e.dst, e.dk), e.label));

    // Every edge raises the degree by one.
    for (const auto& e : fg.g.edges)
        CHECK(fg.g.vertices[e.dst].degree == fg.g.vertices[e.src].degree + 1);
}

TEST_CASE("window restriction and periodicity") {
    const FOrbitGraph small =
        build_f_graph(canonicalize(empty_partition(R23), 0, R23), 0, R23);
    CHECK(small.g.vertices.size() == 2);
    CHECK(small.g.id_of("∅@0") >= 0);
    CHECK(small.g.id_of("(2,1)@-1") >= 0);
    CHECK(small.g.edges.empty());

    // Slices repeat with period mn, shifting k by n.
    const FOrbitGraph wide =
        build_f_graph(canonicalize(empty_partition(R23), 0, R23), 12, R23);
    for (long d = 0; d <= 6; ++d) {
        const auto lo = wide.g.slice(d);
        const auto hi = wide.g.slice(d + 6);
        REQUIRE(lo.size() == hi.size());
        for (size_t t = 0; t < lo.size(); ++t) {
            const RotClass& a = wide.classes[lo[t]];
            const RotClass& b = wide.classes[hi[t]];
            CHECK(a.rep == b.rep);
            CHECK(a.k + R23.n == b.k);
        }
    }
}

TEST_CASE("isomorphism checker") {
    const FOrbitGraph fg = golden23();
    std::vector<int> identity(fg.g.vertices.size());
    for (size_t t = 0; t < identity.size(); ++t) identity[t] = static_cast<int>(t);
    CHECK(check_isomorphism(fg.g, fg.g, identity).ok);

    // Perturb one label: the certificate names the bad edge.
    OrbitGraph mutated = fg.g;
    mutated.edges[0].label = pos_root(1, 1);
    const IsoReport rep = check_isomorphism(fg.g, mutated, identity);
    CHECK_FALSE(rep.ok);
    CHECK(rep.violation.find("has no image") != std::string::npos);

    std::vector<int> swapped = identity;
    std::swap(swapped[0], swapped[1]);
    CHECK_FALSE(check_isomorphism(fg.g, fg.g, swapped).ok);
}

TEST_CASE("borel graph mirrors the diagram graph") {
    const FOrbitGraph fg = golden23();
    const BOrbitGraph bg = build_b_graph(identity_shuffle(R23), 0, 6, R23);
    REQUIRE(bg.g.vertices.size() == fg.g.vertices.size());
    std::vector<int> vmap(fg.g.vertices.size());
    for (size_t v = 0; v < fg.classes.size(); ++v) {
        const Shuffle s = zeta_inv(fg.classes[v].rep, R23);
        vmap[v] = bg.g.id_of(shuffle_str(s, R23) + "@" + std::to_string(fg.classes[v].k));
        REQUIRE(vmap[v] >= 0);
    }
    CHECK(check_isomorphism(fg.g, bg.g, vmap).ok);
}

TEST_CASE("json payload shapes per graph kind") {
    const BOrbitGraph bg = build_b_graph(identity_shuffle(R23), 0, 2, R23);
    const std::string bj = to_json(bg);
    CHECK(bj.find("\"1'\"") != std::string::npos);  // shuffles as symbol strings
    CHECK(bj.find("\"k\"") != std::string::npos);

    const SvOrbitGraph sg = build_sv_graph(lambda0(R23), 2, R23);
    const std::string sj = to_json(sg);
    CHECK(sj.find("\"a\"") != std::string::npos);
    CHECK(sj.find("\"b\"") != std::string::npos);
    CHECK(sj.find("\"sign\": \"+\"") != std::string::npos);
}

TEST_CASE("exports are deterministic") {
    const FOrbitGraph fg = golden23();
    CHECK(to_dot(fg.g) == to_dot(golden23().g));
    CHECK(to_json(fg) == to_json(golden23()));
    CHECK(to_dot(fg.g).find("digraph") == 0);
    CHECK(to_json(fg).find("\"vertices\"") != std::string::npos);
    CHECK(graph_text(fg.g).find("14 vertices, 18 edges") == 0);
}
