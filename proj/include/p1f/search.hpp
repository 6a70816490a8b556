// Isomorph-free enumeration of perfect 1-factorisations by backtracking over
// 1-factors compatible with the fixed pair (F1, F2).
//
// The search space is rooted at seeds: representatives of the isomorphism
// classes of triples (F1, F2, F3) where F3 contains the edge (0,2). A partial
// factorisation is pruned unless its first three factors are lexicographically
// minimal over every relabelling that maps an ordered pair of chosen factors
// onto (F1, F2); the same test run at depth three is what defines the seeds,
// so each isomorphism class is generated from exactly one seed. Completed
// factorisations are emitted in canonical form with a per-seed duplicate
// filter, which makes the output isomorph-free overall.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "p1f/core.hpp"

namespace p1f {

struct Seed {
    int index = 0;  // position in gen_seeds order
    OneFactor f3;
};

// One seed per isomorphism class of compatible triples (F1, F2, F3) with
// F3 containing edge (0,2); the representative F3 is the lexicographically
// least member of its class. Sorted by factor token.
std::vector<Seed> gen_seeds(int n);

// Every 1-factor compatible with both fixed factors, in token order. All
// seeds' compatibility sets are subsets of this pool, so it is enumerated
// once and shared.
std::vector<OneFactor> fixed_pair_pool(int n);

// The compatibility structure the backtracking runs on: the factor set, a
// square bit-matrix of pairwise compatibility, and per-edge containment
// counts used by the branching heuristic.
struct CompatTable {
    int n = 0;
    std::vector<OneFactor> factors;
    std::size_t words = 0;                 // 64-bit words per pair_bits row
    std::vector<std::uint64_t> pair_bits;  // row-major, factors.size() rows
    std::vector<std::vector<std::int32_t>> edge_members;  // edge id -> factor ids
    std::vector<std::int32_t> factor_edge_ids;            // flat, n/2 ids per factor
    std::vector<int> per_edge_counts;      // containment counts over all factors

    bool pair(std::size_t i, std::size_t j) const {
        return (pair_bits[i * words + j / 64] >> (j % 64)) & 1;
    }
};

// The set of factors compatible with F1, F2, and the seed, with exact pair
// bits. The pool overload skips re-enumerating the shared pool.
CompatTable build_compat_table(const Seed& seed);
CompatTable build_compat_table(const Seed& seed, const std::vector<OneFactor>& pool);

// |T| for a seed without materializing the quadratic pair matrix.
long compat_set_size(const Seed& seed, const std::vector<OneFactor>& pool);

struct SearchState {
    std::vector<OneFactor> chosen;       // F1, F2, seed F3, then extensions
    std::vector<std::uint64_t> active;   // bitset over table.factors
    EdgeBits used_edges;
};

SearchState initial_state(const Seed& seed, const CompatTable& table);

// Adds table.factors[factor_id] to the state: intersects the active set with
// the factor's compatibility row and marks its edges used.
void apply_factor(SearchState& state, int factor_id, const CompatTable& table);

// The unused edge contained in the fewest active factors, ties broken by
// smallest edge id. A zero-count edge is returned as soon as it is seen:
// branching on it has no children, which forces the backtrack.
int select_branch_edge(const SearchState& state, const CompatTable& table);

struct SeedOutcome {
    int seed_index = 0;
    long count = 0;        // distinct classes emitted by this seed
    long long nodes = 0;   // search tree nodes visited
    bool completed = true; // false when a node or emission limit cut the run
};

struct EnumerationSummary {
    int n = 0;
    int seeds_total = 0;
    std::vector<SeedOutcome> outcomes;  // sorted by seed index
    long classes = 0;
    long long nodes = 0;
    double seconds = 0.0;
};

struct EnumerateOptions {
    int seed_lo = 0;
    int seed_hi = -1;             // inclusive; -1 means the last seed
    std::string checkpoint;       // path; empty disables checkpointing
    int threads = 0;              // 0: use P1F_THREADS or hardware count
    long long node_limit = 0;     // per seed; 0 means unlimited
    long emit_limit = 0;          // per seed; 0 means unlimited
    std::vector<int> seed_order;  // processing order; must be a permutation
                                  // of the selected range when non-empty
};

// Runs the selected seeds and hands each class representative (canonical,
// validated, deduplicated) to the sink exactly once. With a checkpoint path,
// finished seeds are recorded as `seed_index status count nodes` lines under
// a `n=<order> seeds=<total> version=1` header and skipped on resume; a
// checkpoint written for a different order or seed set is refused.
EnumerationSummary enumerate_p1fs(int n, const std::function<void(const Factorisation&)>& sink,
                                  const EnumerateOptions& opts = {});

}  // namespace p1f
