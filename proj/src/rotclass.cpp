#include "wg/rotclass.hpp"

#include <algorithm>
#include <cstdlib>

#include "wg/errors.hpp"

namespace wg {

RotClass canonicalize(Partition lambda, long k, const Rank& r) {
    while (bar_defined(lambda, r)) {
        lambda = bar(lambda, r);
        ++k;
    }
    return RotClass{std::move(lambda), k};
}

std::vector<std::pair<Partition, long>> members(const RotClass& c, const Rank& r) {
    std::vector<std::pair<Partition, long>> out;
    out.emplace_back(c.rep, c.k);
    Partition cur = c.rep;
    long k = c.k;
    while (underbar_defined(cur, r)) {
        cur = underbar(cur, r);
        --k;
        out.emplace_back(cur, k);
    }
    return out;
}

long degree(const RotClass& c, const Rank& r) { return c.rep.size() + c.k * r.m; }

std::optional<RotClass> apply_morphism(const RotClass& c, const OddRoot& alpha,
                                       const Rank& r) {
    std::optional<RotClass> result;
    for (const auto& [mu, j] : members(c, r)) {
        const OddRoot box = nu_root(alpha, j, r.n);
        const bool applies = alpha.sign > 0 ? is_outer_corner(mu, box.i, box.j, r)
                                            : is_inner_corner(mu, box.i, box.j, r);
        if (!applies) continue;
        RotClass next = canonicalize(toggle_box(mu, box, r), j, r);
        if (result && !(*result == next))
            throw AmbiguousAction("members of " + class_key(c) + " disagree under " +
                                  root_str(alpha));
        result = std::move(next);
    }
    return result;
}

std::vector<RotClass> classes_of_degree(const Rank& r, long d) {
    std::vector<RotClass> out;
    for (const Partition& lam : all_partitions_bounded(r, r.m - 1)) {
        const long rest = d - lam.size();
        if (rest % r.m != 0) continue;
        out.push_back(RotClass{lam, rest / r.m});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> classes_by_degree(const Rank& r, long d_min, long d_max) {
    if (d_min > d_max) throw DomainError("empty degree window");
    std::vector<long> hist;
    for (long d = d_min; d <= d_max; ++d)
        hist.push_back(static_cast<long>(classes_of_degree(r, d).size()));
    return hist;
}

std::string class_str(const RotClass& c) {
    std::string body = partition_str(c.rep);
    if (c.k == 0) return body;
    if (c.k >= -2 && c.k <= 2) {
        const char* mark = c.k > 0 ? "⁺" : "⁻";
        for (long t = 0; t < std::abs(c.k); ++t) body += mark;
        return body;
    }
    return body + "@" + std::to_string(c.k);
}

std::string class_key(const RotClass& c) {
    return partition_str(c.rep) + "@" + std::to_string(c.k);
}

}  // namespace wg
