#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wg/partition.hpp"
#include "wg/rank.hpp"
#include "wg/root.hpp"

namespace wg {

// Equivalence class of (lambda, k) under (lambda, k) ~ (bar lambda, k+1) when
// lambda_1 = m, held by its unique reduced representative (rep_1 < m).
struct RotClass {
    Partition rep;
    long k = 0;

    bool operator==(const RotClass&) const = default;
    bool operator<(const RotClass& o) const {
        if (k != o.k) return k < o.k;
        return rep < o.rep;
    }
};

RotClass canonicalize(Partition lambda, long k, const Rank& r);

// Full equivalence class, canonical member first, rotation numbers
// decreasing.  At most n+1 members; n+1 only for the full-rectangle class.
std::vector<std::pair<Partition, long>> members(const RotClass& c, const Rank& r);

// deg(lambda, k) = |lambda| + k*m, constant on the class.
long degree(const RotClass& c, const Rank& r);

// Extended action: scan members (mu, j); the label +-alpha applies at a
// member iff nu^j(alpha) is an outer (inner) corner of mu.  All applicable
// members must agree after canonicalization (AmbiguousAction otherwise).
std::optional<RotClass> apply_morphism(const RotClass& c, const OddRoot& alpha, const Rank& r);

// Class counts per degree in [d_min, d_max] for the full orbit of (empty, 0).
std::vector<long> classes_by_degree(const Rank& r, long d_min, long d_max);
// All classes of one degree, sorted.
std::vector<RotClass> classes_of_degree(const Rank& r, long d);

// "(2,1)" with superscript +/- when 0 < |k| <= 2, "(2,1)@k" otherwise.
std::string class_str(const RotClass& c);
// Plain "(2,1)@-1" form.
std::string class_key(const RotClass& c);

}  // namespace wg
