// Canonical labelling, isomorphism testing, and automorphism groups for
// perfect 1-factorisations. The canonical form of a P1F is the relabelling
// whose serialized line is lexicographically least among all relabellings
// that map some ordered compatible factor pair onto the two fixed factors
// F1, F2. Candidates are exactly (ordered pairs) x (cycle alignments), so the
// search is quadratic in the number of factors with n alignments per pair.
#pragma once

#include <string>
#include <vector>

#include "p1f/core.hpp"

namespace p1f {

struct Relabelling {
    std::vector<Vertex> perm;  // perm[v] = image of v

    static Relabelling identity(int n);
    int size() const { return static_cast<int>(perm.size()); }
    Vertex operator()(Vertex v) const { return perm[v]; }
    bool is_identity() const;
    Relabelling inverse() const;
    // (a.then(b))(v) = b(a(v))
    Relabelling then(const Relabelling& b) const;
    // Smallest k >= 1 with perm^k = id.
    long order() const;
    // Cycle lengths, descending; e.g. {7,7,1,1}.
    std::vector<int> cycle_type() const;

    bool operator==(const Relabelling& o) const = default;
};

// "7^2 1^2" style rendering of a descending cycle-length multiset.
std::string format_cycle_type(const std::vector<int>& type);

OneFactor apply(const Relabelling& r, const OneFactor& f);
Factorisation apply(const Relabelling& r, const Factorisation& f);

struct AutGroup {
    long order = 1;
    // Empty for the trivial group, otherwise a generating set.
    std::vector<Relabelling> generators;
    // True iff a single element generates the group (the trivial group counts).
    bool cyclic = true;
    // Cycle type of a generating element when the group is non-trivial cyclic,
    // empty otherwise.
    std::vector<int> generator_cycle_type;
};

// Returns the canonical factorisation and a relabelling carrying F onto it.
// Throws unless F is a perfect 1-factorisation.
std::pair<Factorisation, Relabelling> canonical_form(const Factorisation& f);

// True iff the canonical serialized lines agree; order mismatch is just false.
bool are_isomorphic(const Factorisation& a, const Factorisation& b);

AutGroup automorphism_group(const Factorisation& f);

// All relabellings achieving the canonical line, i.e. the coset r0 * Aut(F).
// Exposed because the enumerator's rejection tests and the group computation
// share it; first element is the one canonical_form returns.
std::vector<Relabelling> canonical_achievers(const Factorisation& f);

// The relabellings that send the ordered compatible pair (a, b) onto the
// fixed pair (F1, F2) of the same order; there are exactly n of them, one per
// way of aligning the union Hamilton cycle with the standard one. Throws if
// the factors are incompatible. The enumerator's prefix-rejection test walks
// these for every ordered pair of chosen factors.
std::vector<Relabelling> pair_alignments(const OneFactor& a, const OneFactor& b);

}  // namespace p1f
