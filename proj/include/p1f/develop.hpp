// Building factorisations by orbit development: the factor set is the union
// of the orbits of some base factors under a vertex permutation, plus factors
// fixed by that permutation. The developing permutation is then an
// automorphism of the result, which is how symmetry-constrained examples are
// constructed.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "p1f/canon.hpp"
#include "p1f/core.hpp"

namespace p1f {

struct DevelopmentSpec {
    int n = 0;
    Relabelling generator;
    std::vector<OneFactor> base_factors;
    std::vector<OneFactor> fixed_factors;
};

// Cycle notation, letters for n <= 26 ("(abcdefg)(hijklmn)"), numbers
// separated by spaces or commas beyond that ("(0 1 2)(5 6)"). Unmentioned
// vertices are fixed; the empty string is the identity.
Relabelling parse_permutation(int n, std::string_view text);
std::string permutation_cycles(const Relabelling& r);

// Spec text has three sections: `perm:` cycle notation, `base:` factor
// tokens, `fixed:` factor tokens (optional). '#' starts a comment line.
DevelopmentSpec parse_development_spec(std::string_view text);
DevelopmentSpec read_development_spec(const std::string& path);

// Develops the base factors through the full orbit of the generator and
// appends the fixed factors. Errors: a fixed factor the generator moves, a
// duplicated factor image, a factor count other than n-1, or an edge not
// covered exactly once (reported with a witness edge).
Factorisation develop(const DevelopmentSpec& spec);

}  // namespace p1f
