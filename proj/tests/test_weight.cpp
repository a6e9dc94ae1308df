#include <doctest.h>

#include <algorithm>
#include <set>

#include "wg/errors.hpp"
#include "wg/graph.hpp"
#include "wg/weight.hpp"

using namespace wg;

namespace {
const Rank R23{2, 3};
const Rank R34{3, 4};

Weight wt(std::vector<long> a, std::vector<long> b) { return Weight{std::move(a), std::move(b)}; }
}  // namespace

TEST_CASE("lambda0") {
    CHECK(lambda0(R23) == wt({3, 0}, {0, 2, 4}));
    CHECK(lambda0(R34) == wt({8, 4, 0}, {0, 3, 6, 9}));
    CHECK(lambda0(R23, 1) == wt({6, 3}, {3, 5, 7}));
    CHECK_THROWS_AS(lambda0(Rank{2, 4}), RankError);
    CHECK_THROWS_AS(lambda0(Rank{3, 3}), RankError);
}

TEST_CASE("tau moves") {
    const Weight l0 = lambda0(R23);
    CHECK(tau_apply(l0, pos_root(2, 1), R23) == wt({3, 2}, {3, 2, 4}));
    CHECK(tau_apply(wt({3, 2}, {3, 2, 4}), {-1, 2, 1}, R23) == l0);
    CHECK_FALSE(tau_apply(l0, pos_root(1, 1), R23).has_value());
    // tau_- then tau_+ round-trips wherever defined.
    for (const OddRoot& alpha : all_positive_roots(R23)) {
        if (auto up = tau_apply(l0, alpha, R23)) {
            CHECK(tau_apply(*up, alpha.negated(), R23) == l0);
        }
    }
}

TEST_CASE("x on partitions") {
    CHECK(x_of(make_partition({3, 1}, R23), R23) == wt({5, 6}, {6, 5, 7}));
    CHECK(x_of(empty_partition(R23), R23) == lambda0(R23));
    CHECK(x_of(make_partition({3, 3}, R23), R23) == wt({9, 6}, {6, 8, 10}));
    CHECK(x_of(make_partition({3, 3}, R23), R23) == shift_all(lambda0(R23), 6));
}

TEST_CASE("x on classes") {
    CHECK(x_class(RotClass{make_partition({1, 0}, R23), 1}, R23) ==
          x_of(make_partition({3, 1}, R23), R23));
    CHECK(x_class(RotClass{empty_partition(R23), 0}, R23) == lambda0(R23));
    CHECK(x_class(RotClass{empty_partition(R23), 2}, R23) == wt({9, 6}, {6, 8, 10}));
    // x is constant on members of a class.
    for (long d = 0; d <= 12; ++d)
        for (const RotClass& c : classes_of_degree(R23, d))
            for (const auto& [mu, j] : members(c, R23))
                CHECK(x_class(canonicalize(mu, j, R23), R23) == x_class(c, R23));
}

TEST_CASE("box moves match tau moves through x") {
    for (const Rank& r : {R23, R34, Rank{2, 5}})
        for (const Partition& lam : all_partitions(r)) {
            const Weight w = x_of(lam, r);
            const Corners c = corners(lam, r);
            for (const OddRoot& alpha : c.outer) {
                REQUIRE(pairing(w, alpha) == 0);
                CHECK(x_of(toggle_box(lam, alpha, r), r) == tau_apply(w, alpha, r));
            }
            for (const OddRoot& alpha : c.inner) {
                REQUIRE(pairing(w, alpha) == r.n - r.m);
                CHECK(x_of(toggle_box(lam, alpha.negated(), r), r) ==
                      tau_apply(w, alpha.negated(), r));
            }
        }
}

TEST_CASE("zero pairings beyond corners are exactly the pseudo-corners") {
    for (const Rank& r : {R23, R34, Rank{2, 5}})
        for (const Partition& lam : all_partitions(r)) {
            const Weight w = x_of(lam, r);
            const DiagramFlags f = classify(lam, r);
            for (const OddRoot& alpha : all_positive_roots(r)) {
                if (pairing(w, alpha) == 0 && !is_outer_corner(lam, alpha.i, alpha.j, r)) {
                    CHECK(alpha == pos_root(r.n, 1));
                    CHECK(f.contains_bold);
                }
                if (pairing(w, alpha) == r.n - r.m &&
                    !is_inner_corner(lam, alpha.i, alpha.j, r)) {
                    CHECK(alpha == pos_root(1, r.m));
                    CHECK(f.strongly_reduced);
                }
            }
        }
}

TEST_CASE("zero-set recurrence under one added box") {
    // Supported zeros of x(lambda) evolve exactly like the outer-corner set.
    for (const Rank& r : {R23, R34})
        for (const Partition& lam : all_partitions(r)) {
            const Weight w = x_of(lam, r);
            auto supported = [&](const Partition& p, const Weight& ww) {
                std::set<OddRoot> out;
                for (const OddRoot& z : all_positive_roots(r))
                    if (pairing(ww, z) == 0 && z.j > p.row(z.i)) out.insert(z);
                return out;
            };
            const std::set<OddRoot> z_before = supported(lam, w);
            for (const OddRoot& alpha : corners(lam, r).outer) {
                const Partition up = toggle_box(lam, alpha, r);
                const Weight wup = *tau_apply(w, alpha, r);
                const std::set<OddRoot> z_after = supported(up, wup);

                std::set<OddRoot> outer_after;
                for (const OddRoot& oc : corners(up, r).outer) outer_after.insert(oc);
                CHECK(z_after == outer_after);

                // Membership of the two candidate new corners.
                const std::vector<int> d = dual(lam, r);
                if (alpha.j < r.m)
                    CHECK(z_after.count(pos_root(alpha.i, alpha.j + 1)) ==
                          (d[alpha.j] == r.n - alpha.i ? 1 : 0));
                if (alpha.i > 1)
                    CHECK(z_after.count(pos_root(alpha.i - 1, alpha.j)) ==
                          (lam.row(alpha.i - 1) == alpha.j - 1 ? 1 : 0));
                // Everything else persists minus the used corner.
                for (const OddRoot& z : z_before)
                    if (!(z == alpha) && z.i != alpha.i && z.j != alpha.j)
                        CHECK(z_after.count(z));
            }
        }
}

TEST_CASE("rotation identity") {
    // x(bar lambda) + m = nu(x(lambda)) whenever the top row is full.
    for (const Rank& r : {R23, R34})
        for (const Partition& lam : all_partitions(r)) {
            if (!bar_defined(lam, r)) continue;
            CHECK(shift_all(x_of(bar(lam, r), r), r.m) == nu_weight(x_of(lam, r), 1));
        }
    CHECK(shift_all(x_of(make_partition({1, 0}, R23), R23), 3) ==
          nu_weight(x_of(make_partition({3, 1}, R23), R23), 1));
}

TEST_CASE("border sums track the degree") {
    for (long d = 0; d <= 12; ++d)
        for (const RotClass& c : classes_of_degree(R23, d)) {
            const Weight w = x_class(c, R23);
            CHECK(sv_degree(w, R23) == d);
            CHECK(sum_left(w) - sum_left(lambda0(R23)) == R23.n * d);
            CHECK(sum_right(w) - sum_right(lambda0(R23)) == R23.m * d);
        }
    CHECK_THROWS_AS(sv_degree(wt({1, 0}, {0, 0, 1}), R23), DomainError);
}

TEST_CASE("residue completeness persists") {
    CHECK(residues_complete(lambda0(R23), R23));
    CHECK(residues_complete(lambda0(R34), R34));
    const SvOrbitGraph sv = build_sv_graph(lambda0(R23), 8, R23);
    for (const Weight& w : sv.weights) CHECK(residues_complete(w, R23));
    CHECK_FALSE(residues_complete(wt({2, 0}, {0, 3, 6}), R23));
}

TEST_CASE("augmented matrix") {
    const AugMatrix m0 = a_matrix(lambda0(R23));
    CHECK(zero_cells(m0) == std::vector<OddRoot>{pos_root(2, 1)});
    CHECK(m0.left == std::vector<long>{3, 0});
    CHECK(m0.top == std::vector<long>{0, 2, 4});

    const AugMatrix m1 = a_matrix(wt({3, 2}, {3, 2, 4}));
    CHECK(zero_cells(m1) == std::vector<OddRoot>{pos_root(1, 1), pos_root(2, 2)});

    const AugMatrix mx = a_matrix(wt({5, 6}, {6, 5, 7}));
    CHECK(zero_cells(mx) == std::vector<OddRoot>{pos_root(1, 2), pos_root(2, 1)});

    // Rotation moves the bottom row to the top, matching nu.
    const AugMatrix rot = rotate_matrix(mx);
    const AugMatrix direct = a_matrix(nu_weight(wt({5, 6}, {6, 5, 7}), 1));
    CHECK(rot.left == direct.left);
    CHECK(rot.core == direct.core);
    CHECK(rot.left == std::vector<long>{6, 5});

    const std::string table = render_aug(mx, true);
    CHECK(table.find("0") != std::string::npos);
    CHECK(table.find("·") != std::string::npos);
    const std::string full = render_aug(mx, false);
    CHECK(full.find("-1") != std::string::npos);
}

TEST_CASE("a_of inverts x") {
    CHECK(a_of(wt({5, 6}, {6, 5, 7}), R23) == make_partition({3, 1}, R23));
    CHECK(a_of(lambda0(R23), R23) == empty_partition(R23));
    for (const Partition& lam : all_partitions(R34))
        CHECK(a_of(x_of(lam, R34), R34) == lam);
    // Off-image inputs are refused.
    CHECK_THROWS_AS(a_of(wt({100, 0}, {0, 2, 4}), R23), NoSupportingPath);
    CHECK_THROWS_AS(a_of(shift_all(lambda0(R23), -7), R23), NoSupportingPath);
}

TEST_CASE("weight parsing and display") {
    CHECK(parse_weight("5,6|6,5,7", R23) == wt({5, 6}, {6, 5, 7}));
    CHECK(weight_str(wt({5, 6}, {6, 5, 7})) == "(5,6|6,5,7)");
    CHECK_THROWS_AS(parse_weight("1,2,3", R23), DomainError);
    CHECK_THROWS_AS(parse_weight("1|2,3,4,5", R23), DomainError);
}
