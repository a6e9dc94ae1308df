#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wg/rank.hpp"

namespace wg {

struct SuiteResult {
    SuiteResult() = default;
    explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

    std::string name;
    bool pass = true;
    long checks = 0;       // individual assertions evaluated
    std::string detail;    // first counterexample when !pass
    std::string notes;     // coverage info for passing runs

    void fail(const std::string& what) {
        if (pass) detail = what;
        pass = false;
    }
};

// Commutation of the row-deletion with box toggles, on diagrams and on
// shuffles, exhaustively over the rectangle.
SuiteResult verify_ky(const Rank& r);

// a(x(lambda)) = lambda for every diagram in R.
SuiteResult verify_ax_id(const Rank& r);

// x is injective on classes in [0, max_degree], its image is the weight BFS
// orbit, and the diagram, Borel and weight graphs are isomorphic as labelled
// digraphs under the canonical vertex maps.
SuiteResult verify_iso(const Rank& r, long max_degree);

// Residue completeness of both borders and degree integrality at every
// vertex of the weight orbit window.
SuiteResult verify_residues(const Rank& r, long max_degree);

// Procedural global root lists against their closed forms, the node-deletion
// cycle, and name equivalence across a rotation.
SuiteResult verify_affine_closed_forms(const Rank& r);

// Pairing-sum identities and the vanishing criterion at -rho over every
// chain of the positive orbit window (chain sums are path-independent, so
// one check per edge covers all chains; re-entries are cross-checked).
SuiteResult verify_verma(const Rank& r, long max_degree);

// Random staircase block specs land on the orbit (multiset certificate).
SuiteResult verify_blocks(const Rank& r, int count, std::uint64_t seed);

std::vector<std::string> suite_names();
// Runs one suite by name with the default window (2mn); throws DomainError
// for unknown names.
SuiteResult run_suite(const std::string& name, const Rank& r, std::uint64_t seed);

}  // namespace wg
