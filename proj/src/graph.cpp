#include "wg/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wg/errors.hpp"

namespace wg {

int OrbitGraph::id_of(const std::string& key) const {
    auto it = index.find(key);
    return it == index.end() ? -1 : it->second;
}

std::vector<int> OrbitGraph::slice(long degree) const {
    std::vector<int> out;
    for (size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v].degree == degree) out.push_back(static_cast<int>(v));
    return out;
}

namespace {

// Shared BFS skeleton: vertices of some state type S with canonical keys,
// expanded through positive labels (up) and negative labels (down).
template <class S>
struct Builder {
    std::function<std::string(const S&)> key;
    std::function<std::string(const S&)> display;
    std::function<long(const S&)> deg;
    // apply(state, signed label) -> optional<S>
    std::function<std::optional<S>(const S&, const OddRoot&)> apply;

    OrbitGraph g;
    std::vector<S> payload;

    int intern(const S& s) {
        const std::string k = key(s);
        if (int id = g.id_of(k); id >= 0) return id;
        const int id = static_cast<int>(g.vertices.size());
        g.vertices.push_back({k, display(s), deg(s)});
        g.index[k] = id;
        payload.push_back(s);
        return id;
    }

    void run(const S& source, long max_degree, const Rank& r) {
        const long lo = deg(source);
        if (lo > max_degree) throw DomainError("source degree above the window");
        // Same-degree vertices can only be reached through the level above,
        // so the search transits one degree past the window and the extra
        // layer is dropped afterwards.
        const long transit = max_degree + 1;
        std::deque<int> todo{intern(source)};
        while (!todo.empty()) {
            const int vid = todo.front();
            todo.pop_front();
            const S state = payload[vid];
            const long d = g.vertices[vid].degree;
            for (const OddRoot& alpha : all_positive_roots(r)) {
                if (d + 1 <= transit) {
                    if (auto up = apply(state, alpha)) {
                        if (deg(*up) != d + 1)
                            throw AmbiguousAction("positive edge must raise the degree by 1");
                        const size_t before = g.vertices.size();
                        const int wid = intern(*up);
                        g.edges.push_back({vid, wid, alpha});
                        if (g.vertices.size() > before) todo.push_back(wid);
                    }
                }
                if (d - 1 >= lo) {
                    if (auto down = apply(state, alpha.negated())) {
                        if (deg(*down) != d - 1)
                            throw AmbiguousAction("negative edge must lower the degree by 1");
                        const size_t before = g.vertices.size();
                        const int wid = intern(*down);
                        g.edges.push_back({wid, vid, alpha});
                        if (g.vertices.size() > before) todo.push_back(wid);
                    }
                }
            }
        }
        normalize(max_degree);
    }

    void normalize(long max_degree) {
        // Drop the transit layer.
        {
            OrbitGraph clamped;
            std::vector<S> kept;
            std::vector<int> remap(g.vertices.size(), -1);
            for (size_t v = 0; v < g.vertices.size(); ++v) {
                if (g.vertices[v].degree > max_degree) continue;
                remap[v] = static_cast<int>(clamped.vertices.size());
                clamped.index[g.vertices[v].key] = remap[v];
                clamped.vertices.push_back(g.vertices[v]);
                kept.push_back(payload[v]);
            }
            for (const auto& e : g.edges)
                if (remap[e.src] >= 0 && remap[e.dst] >= 0)
                    clamped.edges.push_back({remap[e.src], remap[e.dst], e.label});
            g = std::move(clamped);
            payload = std::move(kept);
        }

        std::vector<int> order(g.vertices.size());
        for (size_t t = 0; t < order.size(); ++t) order[t] = static_cast<int>(t);
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            if (g.vertices[x].degree != g.vertices[y].degree)
                return g.vertices[x].degree < g.vertices[y].degree;
            return g.vertices[x].key < g.vertices[y].key;
        });
        std::vector<int> newid(order.size());
        for (size_t t = 0; t < order.size(); ++t) newid[order[t]] = static_cast<int>(t);

        OrbitGraph sorted;
        std::vector<S> sorted_payload;
        sorted.vertices.reserve(order.size());
        for (int old : order) {
            sorted.index[g.vertices[old].key] = static_cast<int>(sorted.vertices.size());
            sorted.vertices.push_back(g.vertices[old]);
            sorted_payload.push_back(payload[old]);
        }
        for (const auto& e : g.edges)
            sorted.edges.push_back({newid[e.src], newid[e.dst], e.label});
        std::sort(sorted.edges.begin(), sorted.edges.end(), [](const auto& x, const auto& y) {
            return std::tie(x.src, x.dst, x.label) < std::tie(y.src, y.dst, y.label);
        });
        sorted.edges.erase(std::unique(sorted.edges.begin(), sorted.edges.end(),
                                       [](const auto& x, const auto& y) {
                                           return x.src == y.src && x.dst == y.dst &&
                                                  x.label == y.label;
                                       }),
                           sorted.edges.end());
        g = std::move(sorted);
        payload = std::move(sorted_payload);
    }
};

using BorelClass = std::pair<Shuffle, long>;

BorelClass canonical_borel(Shuffle s, long k, const Rank& r) {
    while (bar_shuffle_defined(s, r)) {
        s = bar_shuffle(s, r);
        ++k;
    }
    return {std::move(s), k};
}

std::vector<BorelClass> borel_members(const BorelClass& c, const Rank& r) {
    std::vector<BorelClass> out{c};
    Shuffle cur = c.first;
    long k = c.second;
    while (underbar_shuffle_defined(cur, r)) {
        cur = underbar_shuffle(cur, r);
        --k;
        out.emplace_back(cur, k);
    }
    return out;
}

std::optional<BorelClass> borel_apply(const BorelClass& c, const OddRoot& alpha,
                                      const Rank& r) {
    std::optional<BorelClass> result;
    for (const auto& [tau, j] : borel_members(c, r)) {
        const OddRoot local = nu_root(alpha, j, r.n);
        if (!reflection_defined(tau, local, r)) continue;
        BorelClass next = canonical_borel(odd_reflect_shuffle(tau, local, r), j, r);
        if (result && !(*result == next))
            throw AmbiguousAction("borel members disagree under " + root_str(alpha));
        result = std::move(next);
    }
    return result;
}

std::string borel_key(const BorelClass& c, const Rank& r) {
    return shuffle_str(c.first, r) + "@" + std::to_string(c.second);
}

}  // namespace

FOrbitGraph build_f_graph(const RotClass& source, long max_degree, const Rank& r) {
    require_diagram_rank(r);
    Builder<RotClass> b;
    b.key = [](const RotClass& c) { return class_key(c); };
    b.display = [](const RotClass& c) { return class_str(c); };
    b.deg = [&r](const RotClass& c) { return degree(c, r); };
    b.apply = [&r](const RotClass& c, const OddRoot& alpha) {
        return apply_morphism(c, alpha, r);
    };
    b.run(source, max_degree, r);
    return {std::move(b.g), std::move(b.payload), r};
}

BOrbitGraph build_b_graph(const Shuffle& sigma, long k, long max_degree, const Rank& r) {
    require_diagram_rank(r);
    Builder<BorelClass> b;
    b.key = [&r](const BorelClass& c) { return borel_key(c, r); };
    b.display = [&r](const BorelClass& c) { return borel_key(c, r); };
    b.deg = [&r](const BorelClass& c) {
        return zeta(c.first, r).size() + c.second * r.m;
    };
    b.apply = [&r](const BorelClass& c, const OddRoot& alpha) {
        return borel_apply(c, alpha, r);
    };
    b.run(canonical_borel(sigma, k, r), max_degree, r);
    return {std::move(b.g), std::move(b.payload), r};
}

SvOrbitGraph build_sv_graph(const Weight& source, long max_degree, const Rank& r) {
    require_sv_rank(r);
    Builder<Weight> b;
    b.key = [](const Weight& w) { return weight_str(w); };
    b.display = [](const Weight& w) { return weight_str(w); };
    b.deg = [&r](const Weight& w) { return sv_degree(w, r); };
    b.apply = [&r](const Weight& w, const OddRoot& alpha) { return tau_apply(w, alpha, r); };
    b.run(source, max_degree, r);
    return {std::move(b.g), std::move(b.payload), r};
}

IsoReport check_isomorphism(const OrbitGraph& g1, const OrbitGraph& g2,
                            const std::vector<int>& vmap) {
    if (vmap.size() != g1.vertices.size())
        return {false, "vertex map is not total on the first graph"};
    if (g1.vertices.size() != g2.vertices.size())
        return {false, "vertex counts differ: " + std::to_string(g1.vertices.size()) + " vs " +
                           std::to_string(g2.vertices.size())};
    std::vector<int> seen(g2.vertices.size(), 0);
    for (size_t v = 0; v < vmap.size(); ++v) {
        if (vmap[v] < 0 || vmap[v] >= static_cast<int>(g2.vertices.size()))
            return {false, "image of " + g1.vertices[v].key + " is out of range"};
        if (seen[vmap[v]]++)
            return {false, "vertex map is not injective at " + g2.vertices[vmap[v]].key};
    }

    auto edge_set = [](const OrbitGraph& g) {
        std::vector<std::tuple<int, int, OddRoot>> out;
        out.reserve(g.edges.size());
        for (const auto& e : g.edges) out.emplace_back(e.src, e.dst, e.label);
        std::sort(out.begin(), out.end());
        return out;
    };
    const auto e2 = edge_set(g2);
    for (const auto& e : g1.edges) {
        std::tuple<int, int, OddRoot> img{vmap[e.src], vmap[e.dst], e.label};
        if (!std::binary_search(e2.begin(), e2.end(), img))
            return {false, "edge " + g1.vertices[e.src].key + " -" + root_str(e.label) + "-> " +
                               g1.vertices[e.dst].key + " has no image"};
    }
    if (g1.edges.size() != g2.edges.size())
        return {false, "edge counts differ: " + std::to_string(g1.edges.size()) + " vs " +
                           std::to_string(g2.edges.size())};
    return {};
}

std::string to_dot(const OrbitGraph& g) {
    std::ostringstream os;
    os << "digraph orbit {\n  rankdir=LR;\n";
    for (size_t v = 0; v < g.vertices.size(); ++v)
        os << "  v" << v << " [label=\"" << g.vertices[v].key << "\\nd=" << g.vertices[v].degree
           << "\"];\n";
    for (const auto& e : g.edges)
        os << "  v" << e.src << " -> v" << e.dst << " [label=\"" << root_str(e.label)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string graph_text(const OrbitGraph& g) {
    std::ostringstream os;
    long lo = 0, hi = -1;
    if (!g.vertices.empty()) {
        lo = g.vertices.front().degree;
        hi = g.vertices.back().degree;
    }
    os << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
    for (long d = lo; d <= hi; ++d) {
        os << "degree " << d << ":";
        for (int v : g.slice(d)) os << "  " << g.vertices[v].display;
        os << '\n';
    }
    for (const auto& e : g.edges)
        os << g.vertices[e.src].display << " --" << root_str(e.label) << "--> "
           << g.vertices[e.dst].display << '\n';
    return os.str();
}

namespace {
nlohmann::json edges_json(const OrbitGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"src", e.src},
                         {"dst", e.dst},
                         {"label", {{"sign", "+"}, {"i", e.label.i}, {"j", e.label.j}}}});
    return edges;
}
}  // namespace

std::string to_json(const FOrbitGraph& fg) {
    nlohmann::json verts = nlohmann::json::array();
    for (size_t v = 0; v < fg.g.vertices.size(); ++v)
        verts.push_back({{"id", v},
                         {"rep", fg.classes[v].rep.parts},
                         {"k", fg.classes[v].k},
                         {"degree", fg.g.vertices[v].degree}});
    return nlohmann::json{{"vertices", verts}, {"edges", edges_json(fg.g)}}.dump(2);
}

std::string to_json(const BOrbitGraph& bg) {
    nlohmann::json verts = nlohmann::json::array();
    for (size_t v = 0; v < bg.g.vertices.size(); ++v) {
        nlohmann::json syms = nlohmann::json::array();
        for (int sym : bg.borels[v].first.seq) syms.push_back(sym_str(sym, bg.rank));
        verts.push_back({{"id", v},
                         {"rep", syms},
                         {"k", bg.borels[v].second},
                         {"degree", bg.g.vertices[v].degree}});
    }
    return nlohmann::json{{"vertices", verts}, {"edges", edges_json(bg.g)}}.dump(2);
}

std::string to_json(const SvOrbitGraph& sg) {
    nlohmann::json verts = nlohmann::json::array();
    for (size_t v = 0; v < sg.g.vertices.size(); ++v)
        verts.push_back({{"id", v},
                         {"rep", {{"a", sg.weights[v].a}, {"b", sg.weights[v].b}}},
                         {"degree", sg.g.vertices[v].degree}});
    return nlohmann::json{{"vertices", verts}, {"edges", edges_json(sg.g)}}.dump(2);
}

}  // namespace wg
