// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "wg/affine.hpp"
#include "wg/blocks.hpp"
#include "wg/errors.hpp"
#include "wg/graph.hpp"
#include "wg/verify.hpp"
#include "wg/verma.hpp"
#include "wg/weight.hpp"

using namespace wg;

namespace {

struct Criterion {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
    void absorb(const SuiteResult& res, const std::string& label) {
        expect(res.pass, label + ": " + res.detail);
    }
};

const Rank R23{2, 3};
const Rank R34{3, 4};

Criterion golden_graph() {
    Criterion c;
    const FOrbitGraph fg = build_f_graph(canonicalize(empty_partition(R23), 0, R23), 6, R23);
    c.expect(fg.g.vertices.size() == 14, "vertex count");
    for (long d = 0; d <= 6; ++d)
        c.expect(fg.g.slice(d).size() == 2, "slice size at degree " + std::to_string(d));

    auto key = [](std::vector<int> parts, long k) {
        return class_key(RotClass{make_partition(std::move(parts), R23), k});
    };
    using E = std::tuple<std::string, std::string, OddRoot>;
    const std::set<E> want{
        {key({0, 0}, 0), key({1, 0}, 0), pos_root(2, 1)},
        {key({2, 1}, -1), key({2, 2}, -1), pos_root(2, 2)},
        {key({2, 1}, -1), key({1, 0}, 0), pos_root(1, 3)},
        {key({1, 0}, 0), key({1, 1}, 0), pos_root(1, 1)},
        {key({1, 0}, 0), key({2, 0}, 0), pos_root(2, 2)},
        {key({2, 2}, -1), key({2, 0}, 0), pos_root(1, 3)},
        {key({1, 1}, 0), key({2, 1}, 0), pos_root(2, 2)},
        {key({2, 0}, 0), key({2, 1}, 0), pos_root(1, 1)},
        {key({2, 0}, 0), key({0, 0}, 1), pos_root(2, 3)},
        {key({2, 1}, 0), key({2, 2}, 0), pos_root(1, 2)},
        {key({2, 1}, 0), key({1, 0}, 1), pos_root(2, 3)},
        {key({0, 0}, 1), key({1, 0}, 1), pos_root(1, 1)},
        {key({2, 2}, 0), key({2, 0}, 1), pos_root(2, 3)},
        {key({1, 0}, 1), key({1, 1}, 1), pos_root(2, 1)},
        {key({1, 0}, 1), key({2, 0}, 1), pos_root(1, 2)},
        {key({2, 0}, 1), key({2, 1}, 1), pos_root(2, 1)},
        {key({2, 0}, 1), key({0, 0}, 2), pos_root(1, 3)},
        {key({1, 1}, 1), key({2, 1}, 1), pos_root(1, 2)},
    };
    std::set<E> got;
    for (const auto& e : fg.g.edges)
        got.insert({fg.g.vertices[e.src].key, fg.g.vertices[e.dst].key, e.label});
    c.expect(got == want, "edge set differs from the figure");

    // The four arrows that cross a rotation.
    const std::set<E> crossing{
        {key({1, 0}, 1), key({1, 1}, 1), pos_root(2, 1)},
        {key({2, 0}, 1), key({2, 1}, 1), pos_root(2, 1)},
        {key({2, 1}, -1), key({1, 0}, 0), pos_root(1, 3)},
        {key({2, 2}, -1), key({2, 0}, 0), pos_root(1, 3)},
    };
    for (const E& e : crossing)
        c.expect(got.count(e) == 1, "rotation-crossing arrow missing");
    return c;
}

Criterion left_inverse() {
    Criterion c;
    for (const Rank& r : {R23, R34, Rank{2, 5}, Rank{3, 5}, Rank{4, 5}})
        c.absorb(verify_ax_id(r), "rank " + std::to_string(r.n) + "," + std::to_string(r.m));
    return c;
}

Criterion injectivity_and_image() {
    Criterion c;
    for (const Rank& r : {R23, R34}) {
        const long window = 2 * rect_area(r);
        std::map<Weight, RotClass> image;
        for (long d = 0; d <= window; ++d)
            for (const RotClass& cls : classes_of_degree(r, d)) {
                const Weight w = x_class(cls, r);
                c.expect(sv_degree(w, r) == d, "degree formula at " + class_key(cls));
                c.expect(image.emplace(w, cls).second, "x collision at " + class_key(cls));
            }
        const SvOrbitGraph sv = build_sv_graph(lambda0(r), window, r);
        c.expect(sv.weights.size() == image.size(), "window sizes differ");
        for (const Weight& w : sv.weights)
            c.expect(image.count(w) == 1, "orbit vertex outside the image: " + weight_str(w));
    }
    return c;
}

Criterion graph_isomorphisms() {
    Criterion c;
    for (const Rank& r : {R23, R34}) {
        const long window = 2 * rect_area(r);
        const FOrbitGraph f = build_f_graph(canonicalize(empty_partition(r), 0, r), window, r);
        const BOrbitGraph b = build_b_graph(identity_shuffle(r), 0, window, r);
        const SvOrbitGraph sv = build_sv_graph(lambda0(r), window, r);

        std::vector<int> f_to_b(f.classes.size(), -1), f_to_sv(f.classes.size(), -1);
        for (size_t v = 0; v < f.classes.size(); ++v) {
            const Shuffle s = zeta_inv(f.classes[v].rep, r);
            f_to_b[v] = b.g.id_of(shuffle_str(s, r) + "@" + std::to_string(f.classes[v].k));
            f_to_sv[v] = sv.g.id_of(weight_str(x_class(f.classes[v], r)));
            c.expect(f_to_b[v] >= 0 && f_to_sv[v] >= 0,
                     "vertex map undefined at " + class_key(f.classes[v]));
        }
        if (!c.pass) return c;
        const IsoReport fb = check_isomorphism(f.g, b.g, f_to_b);
        c.expect(fb.ok, "diagram/Borel: " + fb.violation);
        const IsoReport fsv = check_isomorphism(f.g, sv.g, f_to_sv);
        c.expect(fsv.ok, "diagram/weight: " + fsv.violation);
    }
    return c;
}

Criterion worked_matrices() {
    Criterion c;
    const Weight l0 = lambda0(R23);
    const AugMatrix m0 = a_matrix(l0);
    c.expect(m0.left == std::vector<long>{3, 0} && m0.top == std::vector<long>{0, 2, 4},
             "base-point borders");
    c.expect(zero_cells(m0) == std::vector<OddRoot>{pos_root(2, 1)}, "base-point zeros");

    const auto l1 = tau_apply(l0, pos_root(2, 1), R23);
    c.expect(l1.has_value() && *l1 == parse_weight("3,2|3,2,4", R23),
             "move at the unique zero");
    const AugMatrix m1 = a_matrix(*l1);
    c.expect(zero_cells(m1) == std::vector<OddRoot>{pos_root(1, 1), pos_root(2, 2)},
             "second matrix zeros");

    const Weight wx = x_of(make_partition({3, 1}, R23), R23);
    c.expect(wx == parse_weight("5,6|6,5,7", R23), "x(3,1)");
    const AugMatrix mx = a_matrix(wx);
    c.expect(zero_cells(mx) == std::vector<OddRoot>{pos_root(1, 2), pos_root(2, 1)},
             "third matrix zeros");
    c.expect(a_of(wx, R23) == make_partition({3, 1}, R23), "supporting path");

    c.expect(shift_all(x_of(make_partition({1, 0}, R23), R23), 3) == nu_weight(wx, 1),
             "rotation identity");
    // Rotating the cylinder reproduces the second matrix with borders up by m.
    const AugMatrix rotated = rotate_matrix(mx);
    c.expect(rotated.core == m1.core, "rotated core");
    for (size_t i = 0; i < rotated.left.size(); ++i)
        c.expect(rotated.left[i] == m1.left[i] + 3, "rotated left border");
    for (size_t j = 0; j < rotated.top.size(); ++j)
        c.expect(rotated.top[j] == m1.top[j] + 3, "rotated top border");
    return c;
}

Criterion rotation_commutes() {
    Criterion c;
    for (const Rank& r : {R23, R34, Rank{2, 5}})
        c.absorb(verify_ky(r), "rank " + std::to_string(r.n) + "," + std::to_string(r.m));
    return c;
}

Criterion affine_forms() {
    Criterion c;
    for (const Rank& r : {R23, R34})
        c.absorb(verify_affine_closed_forms(r),
                 "rank " + std::to_string(r.n) + "," + std::to_string(r.m));
    return c;
}

Criterion verma_criteria() {
    Criterion c;
    for (const Rank& r : {R23, R34})
        c.absorb(verify_verma(r, 2 * rect_area(r)),
                 "rank " + std::to_string(r.n) + "," + std::to_string(r.m));
    return c;
}

Criterion staircase_blocks() {
    Criterion c;
    const Rank r710{7, 10};
    const BlockSpec spec = make_block_spec({6, 3, 1}, {3, 2, 2}, r710);
    const Weight w = block_weight(spec, r710);
    c.expect(w.b == std::vector<long>{0, 7, 14, 21, 28, 35, 12, 19, 26, 13}, "right border");
    c.expect(w.a == std::vector<long>{32, 22, 12, 23, 13, 10, 0}, "left border");
    c.expect(block_offsets(spec, r710) == std::vector<long>{0, 12, 13, 0}, "offsets");
    const Partition lam = block_partition(spec, r710);
    c.expect(lam == make_partition({10, 10, 9, 9, 6, 6, 6}, r710), "staircase partition");
    c.expect(dual(lam, r710) == std::vector<int>{7, 7, 7, 7, 7, 7, 4, 4, 4, 2},
             "staircase dual");
    c.expect(block_weight_on_orbit(spec, r710), "worked example membership");

    c.absorb(verify_blocks(r710, 50, 20240817u), "random staircases");

    for (const Rank& r : {R23, R34}) {
        Weight target;
        for (int i = 0; i < r.n; ++i) target.a.push_back(i);
        for (int j = 0; j < r.m; ++j) target.b.push_back(j);
        const auto path = orbit_search(lambda0(r), target, r, 2 * rect_area(r));
        c.expect(path.has_value(), "no search witness");
        if (path) {
            c.expect(path->states.front() == w_canonical(lambda0(r)), "witness start");
            c.expect(path->states.back() == w_canonical(target), "witness end");
        }
    }
    return c;
}

Criterion gaussian_binomial() {
    Criterion c;
    const Rank r = R34;
    std::vector<long> counts(rect_area(r) + 1, 0);
    for (const Partition& p : all_partitions(r)) ++counts[p.size()];
    std::vector<long> poly{1};
    auto mul = [&poly](int e) {
        std::vector<long> out(poly.size() + e, 0);
        for (size_t t = 0; t < poly.size(); ++t) {
            out[t] += poly[t];
            out[t + e] -= poly[t];
        }
        poly = out;
    };
    auto div = [&poly](int e) {
        std::vector<long> out(poly.size(), 0);
        for (size_t t = 0; t < poly.size(); ++t) {
            long v = poly[t];
            if (t >= static_cast<size_t>(e)) v += out[t - e];
            out[t] = v;
        }
        poly = out;
    };
    for (int i = 1; i <= r.n; ++i) mul(r.m + i);
    for (int i = 1; i <= r.n; ++i) div(i);
    poly.resize(rect_area(r) + 1);
    c.expect(poly == counts, "coefficients differ from the product formula");
    return c;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        std::string label;
        std::function<Criterion()> run;
        long budget_ms;  // 0 = untimed
    };
    const std::vector<Entry> entries{
        {1, "orbit graph window (2,3) degrees 0..6 matches the worked figure", golden_graph,
         1000},
        {2, "a(x(lambda)) = lambda exhaustively over five ranks", left_inverse, 1000},
        {3, "x is injective with image the weight orbit window, (2,3) and (3,4)",
         injectivity_and_image, 5000},
        {4, "diagram, Borel and weight orbit graphs are isomorphic up to degree 2mn",
         graph_isomorphisms, 5000},
        {5, "worked augmented matrices, supporting path and rotation identity",
         worked_matrices, 0},
        {6, "row deletion commutes with box toggles on diagrams and shuffles",
         rotation_commutes, 0},
        {7, "global root sequences match every closed form and the deletion cycle",
         affine_forms, 0},
        {8, "pairing sums and the vanishing criterion at -rho over all chains",
         verma_criteria, 10000},
        {9, "staircase weights: worked example, random membership, search witnesses",
         staircase_blocks, 10000},
        {10, "size generating function equals the Gaussian binomial for (3,4)",
         gaussian_binomial, 0},
    };

    bool all_pass = true;
    for (const Entry& e : entries) {
        const auto start = std::chrono::steady_clock::now();
        Criterion c;
        try {
            c = e.run();
        } catch (const std::exception& ex) {
            c.pass = false;
            c.detail = std::string("exception: ") + ex.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        if (e.budget_ms > 0 && ms >= e.budget_ms)
            c.expect(false, "exceeded " + std::to_string(e.budget_ms) + " ms budget");
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << e.id << ". " << e.label << " ("
                  << ms << " ms)";
        if (!c.pass) std::cout << "  -- " << c.detail;
        std::cout << '\n';
        all_pass &= c.pass;
    }
    return all_pass ? 0 : 1;
}
