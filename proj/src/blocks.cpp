#include "wg/blocks.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "wg/errors.hpp"

namespace wg {

BlockSpec make_block_spec(std::vector<int> rr, std::vector<int> ss, const Rank& r) {
    require_sv_rank(r);
    if (rr.size() != ss.size() || rr.empty())
        throw SpecError("block spec needs matching nonempty run lists");
    long rsum = 0, ssum = 0;
    for (int v : rr) {
        if (v <= 0) throw SpecError("column runs must be positive");
        rsum += v;
    }
    for (int v : ss) {
        if (v <= 0) throw SpecError("row runs must be positive");
        ssum += v;
    }
    if (rsum != r.m || ssum != r.n)
        throw SpecError("block runs must sum to m and n");
    return BlockSpec{std::move(rr), std::move(ss)};
}

std::vector<long> block_offsets(const BlockSpec& spec, const Rank& r) {
    std::vector<long> a{0};
    for (size_t i = 0; i < spec.rr.size(); ++i)
        a.push_back(a.back() + static_cast<long>(r.n) * spec.rr[i] -
                    static_cast<long>(r.m) * spec.ss[i]);
    return a;  // a[0] = 0, ..., a[k] = 0
}

Weight block_weight(const BlockSpec& spec, const Rank& r) {
    const std::vector<long> a = block_offsets(spec, r);
    Weight w;
    for (size_t i = 0; i < spec.rr.size(); ++i)
        for (int t = 0; t < spec.rr[i]; ++t) w.b.push_back(a[i] + static_cast<long>(r.n) * t);
    for (size_t i = 0; i < spec.ss.size(); ++i)
        for (int t = spec.ss[i] - 1; t >= 0; --t)
            w.a.push_back(a[i + 1] + static_cast<long>(r.m) * t);
    return w;
}

Partition block_partition(const BlockSpec& spec, const Rank& r) {
    std::vector<int> parts;
    int width = 0;
    for (size_t i = 0; i < spec.rr.size(); ++i) {
        width += spec.rr[i];
        for (int t = 0; t < spec.ss[i]; ++t) parts.push_back(width);
    }
    std::reverse(parts.begin(), parts.end());
    return make_partition(std::move(parts), r);
}

bool block_weight_on_orbit(const BlockSpec& spec, const Rank& r) {
    const Weight w = block_weight(spec, r);
    const Weight x = shift_all(x_of(block_partition(spec, r), r), -rect_area(r));
    auto sorted = [](std::vector<long> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    return sorted(w.a) == sorted(x.a) && sorted(w.b) == sorted(x.b);
}

Weight w_canonical(const Weight& w) {
    Weight out = w;
    std::sort(out.a.begin(), out.a.end(), std::greater<long>());
    std::sort(out.b.begin(), out.b.end());
    return out;
}

std::optional<SearchPath> orbit_search(const Weight& source, const Weight& target,
                                       const Rank& r, long bound) {
    require_sv_rank(r);
    const Weight src = w_canonical(source);
    const Weight dst = w_canonical(target);

    struct Step {
        int parent = -1;
        Move move;
    };
    std::vector<Weight> states{src};
    std::vector<Step> steps{{}};
    std::map<Weight, int> seen{{src, 0}};
    std::deque<int> todo{0};

    auto emit = [&](int id) {
        SearchPath path;
        std::vector<int> order;
        for (int cur = id; cur >= 0; cur = steps[cur].parent) order.push_back(cur);
        std::reverse(order.begin(), order.end());
        for (size_t t = 0; t < order.size(); ++t) {
            path.states.push_back(states[order[t]]);
            if (t) path.moves.push_back(steps[order[t]].move);
        }
        return path;
    };

    if (src == dst) return emit(0);

    while (!todo.empty()) {
        const int id = todo.front();
        todo.pop_front();
        const Weight cur = states[id];
        for (size_t i = 0; i < cur.a.size(); ++i)
            for (size_t j = 0; j < cur.b.size(); ++j) {
                const long diff = cur.a[i] - cur.b[j];
                int sign = 0;
                if (diff == 0)
                    sign = +1;
                else if (diff == r.n - r.m)
                    sign = -1;
                else
                    continue;
                Weight next = cur;
                next.a[i] += sign * r.n;
                next.b[j] += sign * r.m;
                next = w_canonical(next);
                if (seen.count(next)) continue;
                const long shift = sum_left(next) - sum_left(src);
                if (shift < -bound * r.n || shift > bound * r.n) continue;
                const int nid = static_cast<int>(states.size());
                states.push_back(next);
                steps.push_back({id, Move{sign, cur.a[i], cur.b[j]}});
                seen[next] = nid;
                if (next == dst) return emit(nid);
                todo.push_back(nid);
            }
    }
    return std::nullopt;
}

}  // namespace wg
