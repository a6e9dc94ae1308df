#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wg/rank.hpp"
#include "wg/root.hpp"
#include "wg/rotclass.hpp"
#include "wg/shuffle.hpp"
#include "wg/weight.hpp"

namespace wg {

// Directed graph of one orbit slice.  Vertices are keyed canonically, edges
// carry positive root labels and raise the degree by exactly one.  Stored
// sorted, so exports are deterministic.
struct OrbitGraph {
    struct Vertex {
        std::string key;
        std::string display;
        long degree = 0;
    };
    struct Edge {
        int src = 0;
        int dst = 0;
        OddRoot label;
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::map<std::string, int> index;

    int id_of(const std::string& key) const;
    std::vector<int> slice(long degree) const;
};

struct FOrbitGraph {
    OrbitGraph g;
    std::vector<RotClass> classes;  // payload per vertex id
    Rank rank;
};

struct BOrbitGraph {
    OrbitGraph g;
    std::vector<std::pair<Shuffle, long>> borels;  // canonical (sigma, k)
    Rank rank;
};

struct SvOrbitGraph {
    OrbitGraph g;
    std::vector<Weight> weights;
    Rank rank;
};

// BFS in both directions inside the degree window [deg(source), max_degree];
// downward moves are stored as forward edges out of the lower vertex.
FOrbitGraph build_f_graph(const RotClass& source, long max_degree, const Rank& r);
BOrbitGraph build_b_graph(const Shuffle& sigma, long k, long max_degree, const Rank& r);
SvOrbitGraph build_sv_graph(const Weight& source, long max_degree, const Rank& r);

struct IsoReport {
    bool ok = true;
    std::string violation;  // first mismatch when !ok
};

// vmap[v] = image of g1 vertex v in g2; checks vmap is a label-preserving
// digraph isomorphism in both directions.
IsoReport check_isomorphism(const OrbitGraph& g1, const OrbitGraph& g2,
                            const std::vector<int>& vmap);

std::string to_dot(const OrbitGraph& g);
std::string graph_text(const OrbitGraph& g);
std::string to_json(const FOrbitGraph& fg);
std::string to_json(const BOrbitGraph& bg);
std::string to_json(const SvOrbitGraph& sg);

}  // namespace wg
