#include "wg/partition.hpp"

#include <algorithm>

#include "wg/errors.hpp"

namespace wg {

bool is_valid_partition(const Partition& p, const Rank& r) {
    if (static_cast<int>(p.parts.size()) != r.n) return false;
    if (p.parts[0] > r.m) return false;
    for (size_t t = 0; t + 1 < p.parts.size(); ++t)
        if (p.parts[t] < p.parts[t + 1]) return false;
    return p.parts.back() >= 0;
}

Partition make_partition(std::vector<int> parts, const Rank& r) {
    require_diagram_rank(r);
    Partition p{std::move(parts)};
    if (!is_valid_partition(p, r))
        throw DomainError("not a partition in the " + std::to_string(r.m) + "x" +
                          std::to_string(r.n) + " rectangle: " + partition_str(p));
    return p;
}

Partition empty_partition(const Rank& r) { return Partition{std::vector<int>(r.n, 0)}; }

Partition bold_lambda(const Rank& r) {
    std::vector<int> parts(r.n, 1);
    parts[0] = r.m;
    return Partition{parts};
}

bool contains(const Partition& lambda, const Partition& mu) {
    if (lambda.parts.size() != mu.parts.size()) return false;
    for (size_t t = 0; t < lambda.parts.size(); ++t)
        if (mu.parts[t] > lambda.parts[t]) return false;
    return true;
}

std::vector<int> dual(const Partition& p, const Rank& r) {
    std::vector<int> d(r.m, 0);
    for (int j = 1; j <= r.m; ++j)
        for (int part : p.parts)
            if (part >= j) ++d[j - 1];
    return d;
}

bool is_inner_corner(const Partition& p, int i, int j, const Rank& r) {
    if (i < 1 || i > r.n || j < 1 || j > r.m) return false;
    return p.row(i) == j && dual(p, r)[j - 1] == r.n + 1 - i;
}

bool is_outer_corner(const Partition& p, int i, int j, const Rank& r) {
    if (i < 1 || i > r.n || j < 1 || j > r.m) return false;
    return p.row(i) == j - 1 && dual(p, r)[j - 1] == r.n - i;
}

Corners corners(const Partition& p, const Rank& r) {
    Corners c;
    for (int i = 1; i <= r.n; ++i)
        for (int j = 1; j <= r.m; ++j) {
            if (is_inner_corner(p, i, j, r)) c.inner.push_back(pos_root(i, j));
            if (is_outer_corner(p, i, j, r)) c.outer.push_back(pos_root(i, j));
        }
    return c;
}

Partition toggle_box(const Partition& p, const OddRoot& alpha, const Rank& r) {
    const int part_index = r.n - alpha.i;  // 0-based index of part lambda_{n+1-i}
    Partition q = p;
    if (alpha.sign > 0) {
        if (!is_outer_corner(p, alpha.i, alpha.j, r))
            throw NotACorner(root_str(alpha) + " is not an outer corner of " + partition_str(p));
        ++q.parts[part_index];
    } else {
        if (!is_inner_corner(p, alpha.i, alpha.j, r))
            throw NotACorner(root_str(alpha) + " is not an inner corner of " + partition_str(p));
        --q.parts[part_index];
    }
    return q;
}

bool bar_defined(const Partition& p, const Rank& r) { return p.parts[0] == r.m; }

bool underbar_defined(const Partition& p, const Rank&) { return p.parts.back() == 0; }

Partition bar(const Partition& p, const Rank& r) {
    if (!bar_defined(p, r))
        throw DomainError("bar needs lambda_1 = m, got " + partition_str(p));
    std::vector<int> parts(p.parts.begin() + 1, p.parts.end());
    parts.push_back(0);
    return Partition{parts};
}

Partition underbar(const Partition& p, const Rank& r) {
    if (!underbar_defined(p, r))
        throw DomainError("underbar needs lambda_n = 0, got " + partition_str(p));
    std::vector<int> parts;
    parts.reserve(r.n);
    parts.push_back(r.m);
    parts.insert(parts.end(), p.parts.begin(), p.parts.end() - 1);
    return Partition{parts};
}

DiagramFlags classify(const Partition& p, const Rank& r) {
    DiagramFlags f;
    f.top_full = p.parts[0] == r.m;
    f.reduced = !f.top_full;
    f.strongly_reduced = p.parts.back() == 0 && dual(p, r)[r.m - 1] == 0;
    f.contains_bold = contains(p, bold_lambda(r));
    return f;
}

namespace {
void gen_parts(std::vector<int>& cur, int idx, int maxval, int n,
               std::vector<Partition>& out) {
    if (idx == n) {
        out.push_back(Partition{cur});
        return;
    }
    for (int v = 0; v <= maxval; ++v) {
        cur[idx] = v;
        gen_parts(cur, idx + 1, v, n, out);
    }
}
}  // namespace

std::vector<Partition> all_partitions_bounded(const Rank& r, int bound) {
    std::vector<Partition> out;
    std::vector<int> cur(r.n, 0);
    gen_parts(cur, 0, bound, r.n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> all_partitions(const Rank& r) {
    return all_partitions_bounded(r, r.m);
}

std::string partition_str(const Partition& p) {
    if (p.size() == 0) return "∅";
    std::string s = "(";
    for (size_t t = 0; t < p.parts.size(); ++t) {
        if (t) s += ",";
        s += std::to_string(p.parts[t]);
    }
    return s + ")";
}

}  // namespace wg
