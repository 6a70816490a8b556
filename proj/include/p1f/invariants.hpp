// Invariants of a 1-factorisation: the train digraph with its indegree
// sequence, p-vector and canonical digest, the tricolour vector, and the
// row-cycle tallies and per-row profiles of U(F). All of them are constant
// under vertex relabelling.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "p1f/core.hpp"

namespace p1f {

// Functional digraph on all (edge, factor) pairs: from ({a,b}, f) one arc
// leads to ({F_f(a), F_f(b)}, g) where g is the factor owning {a,b}. The
// vertex ({a,b}, g) itself is thus a loop, one per edge.
struct Train {
    int n = 0;
    std::vector<std::int32_t> succ;  // indexed by vertex_id

    int num_vertices() const { return static_cast<int>(succ.size()); }
    int vertex_id(int edge, int factor) const { return edge * (n - 1) + factor; }
    std::pair<int, int> vertex_of(int id) const { return {id / (n - 1), id % (n - 1)}; }
};

Train build_train(const Factorisation& f);

// tallies[d] = number of train vertices with indegree d. Both the tally sum
// and the weighted sum equal the vertex count.
using IndegreeSequence = std::vector<long>;
IndegreeSequence indegree_sequence(const Train& t);

// p(v) = distance from v to the nearest vertex on a directed cycle (0 on
// cycles, loops included). counts[i] = number of vertices with p(v) = i, for
// i = 0..max_i; the tail past max_i is deliberately dropped.
using PVector = std::vector<long>;
PVector p_vector(const Train& t, int max_i = 5);

// Canonical code of the train as an unlabelled digraph: equal strings exactly
// for isomorphic trains. Rooted-tree codes are hung on each cycle, cycles are
// rotated to their minimal code, components sorted. The catalogue index
// stores a 64-bit hash of this string.
std::string train_canonical_hash(const Train& t);

std::uint64_t fnv1a64(const std::string& s);

// Per unordered factor triple, the number of triangles with one edge in each
// factor, returned as the sorted list of all (n-1 choose 3) counts. The
// counts total (n choose 3): a triangle's edges pairwise share a vertex, so
// their three factors are always distinct.
std::vector<int> tricolour_vector(const Factorisation& f);

// Tally of row-cycle lengths over all row pairs of U(F), leaving out each
// pair's length-2 cycle through the two diagonal cells (every pair has one,
// so it carries no information).
using CycleTally = std::map<int, long>;
CycleTally vertex_cycle_tally(const Factorisation& f);

// For each row of U(F), how many row-cycles of each requested length touch
// it (same diagonal exclusion as the tally). One vector per row, entries in
// ascending length order, rows sorted lexicographically so the result is
// label-invariant.
std::vector<std::vector<long>> per_row_cycle_profile(const Factorisation& f,
                                                     const std::vector<int>& lengths);

}  // namespace p1f
