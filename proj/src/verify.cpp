#include "wg/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "wg/affine.hpp"
#include "wg/blocks.hpp"
#include "wg/errors.hpp"
#include "wg/graph.hpp"
#include "wg/partition.hpp"
#include "wg/rotclass.hpp"
#include "wg/shuffle.hpp"
#include "wg/verma.hpp"
#include "wg/weight.hpp"

namespace wg {

SuiteResult verify_ky(const Rank& r) {
    require_diagram_rank(r);
    SuiteResult res{"ky"};
    const auto roots = all_positive_roots(r);

    for (const Partition& lam : all_partitions(r)) {
        if (!bar_defined(lam, r)) continue;
        const Partition barred = bar(lam, r);
        for (const OddRoot& beta : roots) {
            const OddRoot nub = nu_root(beta, 1, r.n);
            if (!is_outer_corner(lam, beta.i, beta.j, r)) continue;
            if (!is_outer_corner(barred, nub.i, nub.j, r)) continue;
            ++res.checks;
            const Partition lifted = toggle_box(lam, beta, r);
            if (!bar_defined(lifted, r)) {
                res.fail("toggle left the top row: " + partition_str(lam) + " + " +
                         root_str(beta));
                continue;
            }
            if (!(bar(lifted, r) == toggle_box(barred, nub, r)))
                res.fail("bar/toggle square broke at " + partition_str(lam) + ", " +
                         root_str(beta));
        }
    }

    for (const Partition& mu : all_partitions(r)) {
        if (!underbar_defined(mu, r)) continue;
        const Partition under = underbar(mu, r);
        for (const OddRoot& beta : roots) {
            const OddRoot nub = nu_root(beta, 1, r.n);
            if (!is_inner_corner(mu, nub.i, nub.j, r)) continue;
            if (!is_inner_corner(under, beta.i, beta.j, r)) continue;
            ++res.checks;
            const Partition dropped = toggle_box(mu, nub.negated(), r);
            if (!underbar_defined(dropped, r)) {
                res.fail("toggle blocked the inverse rotation at " + partition_str(mu));
                continue;
            }
            if (!(underbar(dropped, r) == toggle_box(under, beta.negated(), r)))
                res.fail("underbar/toggle square broke at " + partition_str(mu) + ", " +
                         root_str(beta));
        }
    }

    for (const Shuffle& s : all_shuffles(r)) {
        if (!bar_shuffle_defined(s, r)) continue;
        const Shuffle barred = bar_shuffle(s, r);
        for (const OddRoot& base : roots)
            for (int sign : {+1, -1}) {
                const OddRoot alpha{sign, base.i, base.j};
                if (!reflection_defined(s, alpha, r)) continue;
                const Shuffle reflected = odd_reflect_shuffle(s, alpha, r);
                if (!bar_shuffle_defined(reflected, r)) continue;
                ++res.checks;
                const OddRoot nua = nu_root(alpha, 1, r.n);
                if (!reflection_defined(barred, nua, r)) {
                    res.fail("nu-twisted reflection undefined after bar at " +
                             shuffle_str(s, r));
                    continue;
                }
                if (!(bar_shuffle(reflected, r) == odd_reflect_shuffle(barred, nua, r)))
                    res.fail("bar/reflection square broke at " + shuffle_str(s, r) + ", " +
                             root_str(alpha));
            }
    }
    return res;
}

SuiteResult verify_ax_id(const Rank& r) {
    require_sv_rank(r);
    SuiteResult res{"ax-id"};
    for (const Partition& lam : all_partitions(r)) {
        ++res.checks;
        try {
            if (!(a_of(x_of(lam, r), r) == lam))
                res.fail("a(x(lambda)) != lambda at " + partition_str(lam));
        } catch (const DomainError& e) {
            res.fail(std::string("a_of raised on-orbit: ") + e.what());
        }
    }
    return res;
}

SuiteResult verify_iso(const Rank& r, long max_degree) {
    require_sv_rank(r);
    SuiteResult res{"iso"};

    // Injectivity of x on the class window and equality with the BFS orbit.
    std::map<Weight, RotClass> image;
    for (long d = 0; d <= max_degree; ++d)
        for (const RotClass& c : classes_of_degree(r, d)) {
            ++res.checks;
            const Weight w = x_class(c, r);
            if (sv_degree(w, r) != d) res.fail("degree mismatch at " + class_key(c));
            auto [it, fresh] = image.emplace(w, c);
            if (!fresh)
                res.fail("x collides: " + class_key(c) + " vs " + class_key(it->second));
        }
    const SvOrbitGraph sv = build_sv_graph(lambda0(r), max_degree, r);
    for (const Weight& w : sv.weights) {
        ++res.checks;
        if (!image.count(w)) res.fail("orbit vertex outside the x-image: " + weight_str(w));
    }
    if (image.size() != sv.weights.size())
        res.fail("x-image and orbit window sizes differ: " + std::to_string(image.size()) +
                 " vs " + std::to_string(sv.weights.size()));

    // Labelled digraph isomorphisms through the canonical vertex maps.
    const RotClass origin = canonicalize(empty_partition(r), 0, r);
    const FOrbitGraph f = build_f_graph(origin, max_degree, r);
    const BOrbitGraph b = build_b_graph(identity_shuffle(r), 0, max_degree, r);

    std::vector<int> f_to_b(f.classes.size(), -1);
    for (size_t v = 0; v < f.classes.size(); ++v) {
        const Shuffle s = zeta_inv(f.classes[v].rep, r);
        f_to_b[v] = b.g.id_of(shuffle_str(s, r) + "@" + std::to_string(f.classes[v].k));
        if (f_to_b[v] < 0) res.fail("class missing on the Borel side: " + class_key(f.classes[v]));
    }
    ++res.checks;
    const IsoReport fb = check_isomorphism(f.g, b.g, f_to_b);
    if (!fb.ok) res.fail("diagram/Borel graphs differ: " + fb.violation);

    std::vector<int> f_to_sv(f.classes.size(), -1);
    for (size_t v = 0; v < f.classes.size(); ++v) {
        f_to_sv[v] = sv.g.id_of(weight_str(x_class(f.classes[v], r)));
        if (f_to_sv[v] < 0) res.fail("class missing on the weight side: " + class_key(f.classes[v]));
    }
    ++res.checks;
    const IsoReport fsv = check_isomorphism(f.g, sv.g, f_to_sv);
    if (!fsv.ok) res.fail("diagram/weight graphs differ: " + fsv.violation);

    // Every edge raises the degree by exactly one.
    for (const auto& e : f.g.edges) {
        ++res.checks;
        if (f.g.vertices[e.dst].degree != f.g.vertices[e.src].degree + 1)
            res.fail("edge degree jump at " + f.g.vertices[e.src].key);
    }
    return res;
}

SuiteResult verify_residues(const Rank& r, long max_degree) {
    require_sv_rank(r);
    SuiteResult res{"residues"};
    const SvOrbitGraph sv = build_sv_graph(lambda0(r), max_degree, r);
    for (size_t v = 0; v < sv.weights.size(); ++v) {
        ++res.checks;
        if (!residues_complete(sv.weights[v], r))
            res.fail("residues incomplete at " + weight_str(sv.weights[v]));
        if (sv_degree(sv.weights[v], r) != sv.g.vertices[v].degree)
            res.fail("border sums off at " + weight_str(sv.weights[v]));
    }
    return res;
}

SuiteResult verify_affine_closed_forms(const Rank& r) {
    require_diagram_rank(r);
    SuiteResult res{"affine-closed-forms"};
    auto expect = [&res, &r](const SimpleRootList& got, const SimpleRootList& want,
                             const std::string& what) {
        ++res.checks;
        if (!(got == want))
            res.fail(what + ": got " + root_list_str(got, r) + ", want " +
                     root_list_str(want, r));
    };

    // Staircase partitions at rotation zero.
    for (int j = 0; j <= r.n; ++j) {
        std::vector<int> parts(r.n, 0);
        for (int t = 0; t < j; ++t) parts[t] = r.m;
        const Shuffle s = zeta_inv(make_partition(parts, r), r);
        expect(global_seq(s, 0, r), staircase_list(j, r),
               "staircase list j=" + std::to_string(j));
    }

    // Distinguished lists of g(j) for 0 <= j < n.
    for (int j = 0; j < r.n; ++j)
        expect(global_seq(identity_shuffle(r), j, r), rotated_distinguished_list(j, r),
               "rotated distinguished list j=" + std::to_string(j));

    // Periodic closed forms, |k| <= 3, and their extending roots.
    for (long k = -3; k <= 3; ++k) {
        const SimpleRootList dist = global_seq(identity_shuffle(r), k * r.n, r);
        expect(dist, period_distinguished_list(k, r),
               "distinguished list of g(" + std::to_string(k * r.n) + ")");
        AffineRoot want_ext = sub(del_basis(r.m, r), eps_basis(1, r));
        want_ext.level = -(k - 1);
        ++res.checks;
        if (!(extending_root(dist, r) == want_ext))
            res.fail("extending root of g(" + std::to_string(k * r.n) + ") is off");

        const SimpleRootList anti = global_seq(antidistinguished_shuffle(r), k * r.n, r);
        expect(anti, period_antidistinguished_list(k, r),
               "anti-distinguished list of g(" + std::to_string(k * r.n) + ")");
        AffineRoot want_ext2 = sub(eps_basis(r.n, r), del_basis(1, r));
        want_ext2.level = k + 1;
        ++res.checks;
        if (!(extending_root(anti, r) == want_ext2))
            res.fail("anti extending root of g(" + std::to_string(k * r.n) + ") is off");
    }

    // Anti-distinguished of g(j) determines distinguished of g(j+n).
    for (int j = 0; j <= 2; ++j) {
        const SimpleRootList anti = global_seq(antidistinguished_shuffle(r), j, r);
        expect(global_seq(identity_shuffle(r), j + r.n, r), antidist_to_dist(anti, r),
               "rotation step from anti-distinguished, j=" + std::to_string(j));
    }

    // The node-deletion cycle: the n+1 names of the full-rectangle class all
    // extend to the upsilon list.
    const SimpleRootList ups = upsilon_list(r);
    const auto cycle_from = [&ups](int drop) {
        SimpleRootList out;
        const int len = static_cast<int>(ups.size());
        for (int t = 1; t < len; ++t) out.push_back(ups[(drop + t) % len]);
        return out;
    };
    for (int i = 0; i <= r.n; ++i) {
        // Member (m^{n-i}, 0^i) at rotation i; deleting one upsilon node
        // linearizes the cycle starting after the dropped root.
        std::vector<int> parts(r.n, 0);
        for (int t = 0; t < r.n - i; ++t) parts[t] = r.m;
        const Shuffle s = zeta_inv(make_partition(parts, r), r);
        const SimpleRootList got = global_seq(s, i, r);
        ++res.checks;
        if (!(extend_list(got, r).size() == ups.size()))
            res.fail("extended list length off at cycle member " + std::to_string(i));
        bool matched = false;
        for (int drop = 0; drop < static_cast<int>(ups.size()) && !matched; ++drop)
            matched = got == cycle_from(drop);
        ++res.checks;
        if (!matched)
            res.fail("cycle member " + std::to_string(i) + " is not a node deletion of upsilon");
        // All members share the same extended root set.
        std::multiset<AffineRoot> eset(ups.begin(), ups.end());
        const SimpleRootList ext = extend_list(got, r);
        ++res.checks;
        if (std::multiset<AffineRoot>(ext.begin(), ext.end()) != eset)
            res.fail("extension differs at cycle member " + std::to_string(i));
    }

    // Name equivalence across one rotation: (sigma, k) and (bar sigma, k+1)
    // extend to the same affine root set.
    for (const Shuffle& s : all_shuffles(r)) {
        if (!bar_shuffle_defined(s, r)) continue;
        for (long k : {-1L, 0L, 1L}) {
            const SimpleRootList lo = global_seq(s, k, r);
            const SimpleRootList hi = global_seq(bar_shuffle(s, r), k + 1, r);
            const SimpleRootList lo_ext = extend_list(lo, r);
            const SimpleRootList hi_ext = extend_list(hi, r);
            ++res.checks;
            if (std::multiset<AffineRoot>(lo_ext.begin(), lo_ext.end()) !=
                std::multiset<AffineRoot>(hi_ext.begin(), hi_ext.end()))
                res.fail("extensions differ across the rotation at " + shuffle_str(s, r) +
                         "@" + std::to_string(k));
        }
    }

    // Consistency of list reflections with shuffle reflections, and the
    // local/global correspondence.
    for (const Shuffle& s : all_shuffles(r))
        for (const OddRoot& base : all_positive_roots(r))
            for (int sign : {+1, -1}) {
                const OddRoot alpha{sign, base.i, base.j};
                if (!reflection_defined(s, alpha, r)) continue;
                ++res.checks;
                const SimpleRootList lhs =
                    finite_simple_roots(odd_reflect_shuffle(s, alpha, r), r);
                int idx = -1;
                const SimpleRootList base_list = finite_simple_roots(s, r);
                for (size_t t = 0; t < base_list.size(); ++t)
                    if (base_list[t] == affine_of(alpha, r)) idx = static_cast<int>(t);
                if (idx < 0) {
                    res.fail("simple root missing from its own list at " + shuffle_str(s, r));
                    continue;
                }
                if (!(lhs == odd_reflect_seq(base_list, idx, r)))
                    res.fail("list/shuffle reflections disagree at " + shuffle_str(s, r) +
                             ", " + root_str(alpha));
            }
    for (const Shuffle& s : all_shuffles(r))
        for (long k : {-2L, 1L, 3L}) {
            ++res.checks;
            if (!(local_seq(global_seq(s, k, r), k, r) == finite_simple_roots(s, r)))
                res.fail("local names off at " + shuffle_str(s, r) + "@" + std::to_string(k));
        }
    return res;
}

namespace {

// Every finite chain out of the distinguished Borel stays inside X; its
// reflected roots are the added boxes themselves.
void finite_chain_dfs(const Partition& lam, const AffineRoot& running, const Rank& r,
                      const FormWeight& lam_weight, SuiteResult& res,
                      unsigned long long& count) {
    for (const OddRoot& alpha : corners(lam, r).outer) {
        const AffineRoot beta = affine_of(alpha, r);
        const AffineRoot sum = add(running, beta);
        ++count;
        ++res.checks;
        if (pairing_fin(sum, beta, r) != alpha.i + alpha.j - r.n - 1)
            res.fail("finite pairing sum broke after adding " + root_str(alpha) + " above " +
                     partition_str(lam));
        ++res.checks;
        const Rat crit =
            bilinear(form_sub(lam_weight, form_of_affine(sum, r)), form_of_affine(beta, r));
        if (!(crit == Rat(0)))
            res.fail("finite criterion at -rho is " + rat_str(crit) + " after " +
                     root_str(alpha));
        finite_chain_dfs(toggle_box(lam, alpha, r), sum, r, lam_weight, res, count);
    }
}

}  // namespace

SuiteResult verify_verma(const Rank& r, long max_degree) {
    require_sv_rank(r);
    SuiteResult res{"verma"};
    const FormWeight lam = with_level(negate_form(rho(r)), Rat(r.m - r.n));

    auto check_edge = [&](const AffineRoot& beta_sum, const AffineRoot& beta) {
        const OddRoot alpha_box = box_of(beta, r);
        if (alpha_box.sign <= 0) {
            res.fail("reflected root is negative: " + affine_root_str(beta, r));
            return;
        }
        const AffineRoot alpha = affine_of(alpha_box, r);
        ++res.checks;
        const long want = beta.level * (r.m - r.n) + alpha_box.i + alpha_box.j - r.n - 1;
        if (pairing_fin(beta_sum, alpha, r) != want)
            res.fail("pairing sum identity broke at " + affine_root_str(beta, r));
        ++res.checks;
        const FormWeight shifted = form_sub(lam, form_of_affine(beta_sum, r));
        const Rat crit =
            bilinear(shifted, form_of_affine(alpha, r)) + Rat(beta.level) * lam.level;
        if (!(crit == Rat(0)))
            res.fail("criterion at -rho is " + rat_str(crit) + " on " +
                     affine_root_str(beta, r));
    };

    // Every finite chain, by direct enumeration.
    {
        AffineRoot running = zero_affine_root(r);
        unsigned long long finite_chains = 0;
        finite_chain_dfs(empty_partition(r), running, r, lam, res, finite_chains);
        res.notes = std::to_string(finite_chains) + " finite chains";
    }

    // Affine chains in the window.  The reflected-root multiset between two
    // Borels is the positive-root set difference, so it is path-independent:
    // one check per edge covers every chain through it, and every BFS
    // re-entry asserts that independence on the data we store.
    struct Vertex {
        BorelWalker walker;
        AffineRoot beta_sum;
    };
    std::map<std::string, int> index;
    std::vector<Vertex> verts;
    std::vector<std::pair<int, int>> edge_list;
    std::deque<int> todo;
    {
        BorelWalker w0 = BorelWalker::distinguished(r);
        index[class_key(w0.rot_class())] = 0;
        verts.push_back({std::move(w0), zero_affine_root(r)});
        todo.push_back(0);
    }
    while (!todo.empty()) {
        const int vid = todo.front();
        todo.pop_front();
        const RotClass cls = verts[vid].walker.rot_class();
        if (degree(cls, r) + 1 > max_degree) continue;
        for (const OddRoot& alpha : all_positive_roots(r)) {
            if (!apply_morphism(cls, alpha, r)) continue;
            BorelWalker w = verts[vid].walker;
            const AffineRoot beta = w.apply_label(alpha);
            w.normalize();
            const AffineRoot sum = add(verts[vid].beta_sum, beta);
            check_edge(sum, beta);
            const std::string key = class_key(w.rot_class());
            auto it = index.find(key);
            if (it == index.end()) {
                const int nid = static_cast<int>(verts.size());
                index[key] = nid;
                edge_list.emplace_back(vid, nid);
                verts.push_back({std::move(w), sum});
                todo.push_back(nid);
            } else {
                edge_list.emplace_back(vid, it->second);
                ++res.checks;
                if (!(verts[it->second].beta_sum == sum) ||
                    !(verts[it->second].walker.roots() == w.roots()))
                    res.fail("chain data depends on the path at " + key);
            }
        }
    }

    // Count how many chains the per-edge checks cover (saturating: the count
    // only feeds the report and the re-walk cutoff).
    constexpr unsigned long long kSat = ~0ull;
    auto sat_add = [](unsigned long long x, unsigned long long y) {
        return x > kSat - y ? kSat : x + y;
    };
    std::vector<unsigned long long> paths(verts.size(), 0);
    paths[0] = 1;
    std::vector<int> order(verts.size());
    for (size_t t = 0; t < order.size(); ++t) order[t] = static_cast<int>(t);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return degree(verts[x].walker.rot_class(), r) <
               degree(verts[y].walker.rot_class(), r);
    });
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    for (int v : order)
        for (const auto& [src, dst] : edge_list)
            if (src == v) paths[dst] = sat_add(paths[dst], paths[v]);
    unsigned long long affine_chains = 0;
    for (size_t v = 1; v < paths.size(); ++v) affine_chains = sat_add(affine_chains, paths[v]);
    res.notes += ", " + (affine_chains == kSat ? std::string("over 1e19")
                                               : std::to_string(affine_chains)) +
                 " affine chains over " + std::to_string(edge_list.size()) + " edges";

    // Small windows: cross-validate by walking every chain explicitly.
    if (affine_chains <= 20000) {
        std::function<void(const BorelWalker&, const AffineRoot&)> dfs =
            [&](const BorelWalker& walker, const AffineRoot& sum) {
                const RotClass cls = walker.rot_class();
                if (degree(cls, r) + 1 > max_degree) return;
                for (const OddRoot& alpha : all_positive_roots(r)) {
                    if (!apply_morphism(cls, alpha, r)) continue;
                    BorelWalker w = walker;
                    const AffineRoot beta = w.apply_label(alpha);
                    const AffineRoot next = add(sum, beta);
                    check_edge(next, beta);
                    dfs(w, next);
                }
            };
        dfs(verts[0].walker, zero_affine_root(r));
        res.notes += ", all chains re-walked";
    }
    return res;
}

SuiteResult verify_blocks(const Rank& r, int count, std::uint64_t seed) {
    require_sv_rank(r);
    SuiteResult res{"blocks"};
    std::mt19937_64 rng(seed);
    auto random_runs = [&rng](int total) {
        std::vector<int> runs;
        int left = total;
        while (left > 0) {
            std::uniform_int_distribution<int> pick(1, left);
            const int v = pick(rng);
            runs.push_back(v);
            left -= v;
        }
        return runs;
    };
    for (int t = 0; t < count; ++t) {
        // Draw run lists of equal length k <= min(n, m).
        std::vector<int> rr, ss;
        do {
            rr = random_runs(r.m);
            ss = random_runs(r.n);
        } while (rr.size() != ss.size());
        const BlockSpec spec = make_block_spec(rr, ss, r);
        ++res.checks;
        if (!block_weight_on_orbit(spec, r)) {
            std::string runs;
            for (int v : rr) runs += std::to_string(v) + ",";
            runs += " / ";
            for (int v : ss) runs += std::to_string(v) + ",";
            res.fail("block weight off the orbit for runs " + runs);
        }
    }
    return res;
}

std::vector<std::string> suite_names() {
    return {"ky", "ax-id", "iso", "residues", "affine-closed-forms", "verma", "blocks"};
}

SuiteResult run_suite(const std::string& name, const Rank& r, std::uint64_t seed) {
    const long window = 2 * rect_area(r);
    if (name == "ky") return verify_ky(r);
    if (name == "ax-id") return verify_ax_id(r);
    if (name == "iso") return verify_iso(r, window);
    if (name == "residues") return verify_residues(r, window);
    if (name == "affine-closed-forms") return verify_affine_closed_forms(r);
    if (name == "verma") return verify_verma(r, window);
    if (name == "blocks") return verify_blocks(r, 50, seed);
    throw DomainError("unknown verify suite: " + name);
}

}  // namespace wg
