#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "p1f/canon.hpp"
#include "p1f/codec.hpp"
#include "p1f/invariants.hpp"
#include "testdata.hpp"

using namespace p1f;

namespace {

Relabelling random_relabelling(int n, std::mt19937& rng) {
    Relabelling r = Relabelling::identity(n);
    std::shuffle(r.perm.begin(), r.perm.end(), rng);
    return r;
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("train shape: vertex count, loops, outdegree") {
    auto records = read_catalogue_file(data_path("k16_samples.txt"));
    Train t = build_train(records[0]);
    CHECK(t.num_vertices() == 1800);  // 120 edges x 15 factors
    int loops = 0;
    for (int v = 0; v < t.num_vertices(); ++v)
        if (t.succ[v] == v) ++loops;
    CHECK(loops == 120);
    // loops sit exactly at (edge, owner-of-edge)
    for (int e = 0; e < edge_count(16); ++e) {
        auto [a, b] = edge_of_id(16, e);
        int owner = records[0].factor_of(a, b);
        CHECK(t.succ[t.vertex_id(e, owner)] == t.vertex_id(e, owner));
    }
}

TEST_CASE("train arcs satisfy the defining relation") {
    auto records = read_catalogue_file(data_path("k16_samples.txt"));
    const auto& f = records[3];
    Train t = build_train(f);
    for (int e = 0; e < edge_count(16); ++e) {
        auto [a, b] = edge_of_id(16, e);
        for (int k = 0; k < 15; ++k) {
            auto [e2, g] = t.vertex_of(t.succ[t.vertex_id(e, k)]);
            auto [c, d] = edge_of_id(16, e2);
            // target edge is the image of {a,b} under factor k
            CHECK(((f.factor(k).contains(a, c) && f.factor(k).contains(b, d)) ||
                   (f.factor(k).contains(a, d) && f.factor(k).contains(b, c))));
            // target factor is the owner of the source edge
            CHECK(f.factor(g).contains(a, b));
        }
    }
}

TEST_CASE("loop vertices of a perfect train have indegree exactly 1") {
    auto records = read_catalogue_file(data_path("k16_samples.txt"));
    Train t = build_train(records[0]);
    std::vector<int> indeg(t.num_vertices(), 0);
    for (int v = 0; v < t.num_vertices(); ++v) ++indeg[t.succ[v]];
    for (int v = 0; v < t.num_vertices(); ++v)
        if (t.succ[v] == v) CHECK(indeg[v] == 1);
}

TEST_CASE("indegree tallies satisfy both sum identities") {
    for (const auto& f : read_catalogue_file(data_path("k16_samples.txt"))) {
        auto seq = indegree_sequence(build_train(f));
        long vertices = 0, arcs = 0;
        for (std::size_t d = 0; d < seq.size(); ++d) {
            vertices += seq[d];
            arcs += static_cast<long>(d) * seq[d];
        }
        CHECK(vertices == 1800);
        CHECK(arcs == 1800);
    }
}

TEST_CASE("indegree sequences of the printed records") {
    auto records = read_catalogue_file(data_path("k16_samples.txt"));
    IndegreeSequence first = {573, 784, 336, 86, 19, 2};
    IndegreeSequence second = {584, 765, 338, 94, 18, 1};
    IndegreeSequence rigid = {598, 748, 332, 102, 18, 2};
    for (int i : {0, 1, 2}) CHECK(indegree_sequence(build_train(records[i])) == first);
    for (int i : {3, 4, 5}) CHECK(indegree_sequence(build_train(records[i])) == second);
    CHECK(indegree_sequence(build_train(records[6])) == rigid);
}

TEST_CASE("p-vectors of the printed pair") {
    auto records = read_catalogue_file(data_path("k16_samples.txt"));
    CHECK(p_vector(build_train(records[7])) == PVector{139, 19, 15, 14, 17, 17});
    CHECK(p_vector(build_train(records[8])) == PVector{139, 19, 15, 14, 17, 22});
}

TEST_CASE("every cycle vertex counts into p=0, at least one per loop") {
    for (const auto& f : read_catalogue_file(data_path("k16_samples.txt"))) {
        auto pv = p_vector(build_train(f));
        CHECK(pv[0] >= 120);
    }
}

TEST_CASE("train invariants are label-invariant") {
    std::mt19937 rng(4242);
    auto records = read_catalogue_file(data_path("k16_samples.txt"));
    for (int i : {0, 7}) {
        Train t = build_train(records[i]);
        auto moved = apply(random_relabelling(16, rng), records[i]);
        Train tm = build_train(moved);
        CHECK(indegree_sequence(t) == indegree_sequence(tm));
        CHECK(p_vector(t) == p_vector(tm));
        CHECK(train_canonical_hash(t) == train_canonical_hash(tm));
    }
}

TEST_CASE("train digests separate the printed records") {
    auto records = read_catalogue_file(data_path("k16_samples.txt"));
    std::set<std::string> digests;
    for (const auto& f : records) digests.insert(train_canonical_hash(build_train(f)));
    CHECK(digests.size() == records.size());
}

TEST_CASE("train canonicalization agrees with brute-force digraph isomorphism") {
    std::mt19937 rng(1234);
    // random functional digraphs on 8 vertices, all permutations checked
    for (int rep = 0; rep < 60; ++rep) {
        std::vector<int> sa(8), sb(8);
        for (auto& x : sa) x = static_cast<int>(rng() % 8);
        if (rep % 3 == 0) {
            // a relabelled copy of sa
            std::vector<int> perm(8);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            for (int v = 0; v < 8; ++v) sb[perm[v]] = perm[sa[v]];
        } else {
            for (auto& x : sb) x = static_cast<int>(rng() % 8);
        }
        Train ta, tb;
        ta.n = 2;  // fake order; only succ matters for the digest
        tb.n = 2;
        ta.succ.assign(sa.begin(), sa.end());
        tb.succ.assign(sb.begin(), sb.end());
        bool same_digest = train_canonical_hash(ta) == train_canonical_hash(tb);
        CHECK(same_digest == oracle::functional_digraphs_isomorphic(sa, sb));
    }
}

TEST_CASE("order-8 trains: digest equality matches refined isomorphism checks") {
    auto p1f8 = oracle::p1fs_through_f1f2(8).front();
    Train t = build_train(p1f8);
    std::vector<int> sa(t.succ.begin(), t.succ.end());

    std::mt19937 rng(55);
    Train tm = build_train(apply(random_relabelling(8, rng), p1f8));
    std::vector<int> sb(tm.succ.begin(), tm.succ.end());
    CHECK(train_canonical_hash(t) == train_canonical_hash(tm));
    CHECK(oracle::functional_digraphs_isomorphic_refined(sa, sb));

    Train tn = build_train(oracle::non_perfect_k8());
    std::vector<int> sc(tn.succ.begin(), tn.succ.end());
    CHECK(train_canonical_hash(t) != train_canonical_hash(tn));
    CHECK(!oracle::functional_digraphs_isomorphic_refined(sa, sc));
}

TEST_CASE("tricolour vector basics") {
    Factorisation f4 = parse_line("abcd acbd adbc");
    CHECK(tricolour_vector(f4) == std::vector<int>{4});

    for (const auto& f : read_catalogue_file(data_path("k16_samples.txt"))) {
        auto tv = tricolour_vector(f);
        CHECK(tv.size() == 455);  // C(15,3) factor triples
        CHECK(std::accumulate(tv.begin(), tv.end(), 0) == 560);  // C(16,3) triangles
    }
}

TEST_CASE("tricolour vector against the triangle census") {
    auto check_against_census = [](const Factorisation& f) {
        auto census = oracle::triangle_census(f);
        std::vector<int> counts;
        for (const auto& [triple, cnt] : census) counts.push_back(cnt);
        long m = f.num_factors();
        std::size_t triples = static_cast<std::size_t>(m * (m - 1) * (m - 2) / 6);
        while (counts.size() < triples) counts.push_back(0);
        std::sort(counts.begin(), counts.end());
        CHECK(tricolour_vector(f) == counts);
    };
    check_against_census(oracle::p1fs_through_f1f2(6).front());
    check_against_census(oracle::p1fs_through_f1f2(8).front());
    auto records = read_catalogue_file(data_path("k16_samples.txt"));
    check_against_census(records[0]);
    check_against_census(records[6]);
}

TEST_CASE("tricolour vector is label-invariant") {
    std::mt19937 rng(321);
    auto records = read_catalogue_file(data_path("k16_samples.txt"));
    auto base = tricolour_vector(records[4]);
    for (int rep = 0; rep < 3; ++rep)
        CHECK(tricolour_vector(apply(random_relabelling(16, rng), records[4])) == base);
}

TEST_CASE("row-cycle tally of the order-4 factorisation") {
    Factorisation f4 = parse_line("abcd acbd adbc");
    CycleTally tally = vertex_cycle_tally(f4);
    // each of the 6 row pairs of U has exactly one counted 2-cycle; the
    // diagonal-touching one is excluded
    CHECK(tally == CycleTally{{2, 6}});
}

TEST_CASE("row-cycle tallies cover all non-diagonal columns") {
    for (int i : {0, 5, 8}) {
        auto records = read_catalogue_file(data_path("k16_samples.txt"));
        const auto& f = records[i];
        CycleTally tally = vertex_cycle_tally(f);
        long weighted = 0;
        for (auto [len, cnt] : tally) weighted += static_cast<long>(len) * cnt;
        // every pair contributes n-2 columns outside its diagonal 2-cycle
        CHECK(weighted == 120L * 14);
    }
}

TEST_CASE("row-cycle tally and profile are label-invariant") {
    std::mt19937 rng(777);
    auto records = read_catalogue_file(data_path("k16_samples.txt"));
    auto tally = vertex_cycle_tally(records[2]);
    auto profile = per_row_cycle_profile(records[2], {3, 4});
    for (int rep = 0; rep < 3; ++rep) {
        auto moved = apply(random_relabelling(16, rng), records[2]);
        CHECK(vertex_cycle_tally(moved) == tally);
        CHECK(per_row_cycle_profile(moved, {3, 4}) == profile);
    }
}

TEST_CASE("per-row profile of the order-4 factorisation") {
    Factorisation f4 = parse_line("abcd acbd adbc");
    auto profile = per_row_cycle_profile(f4, {2});
    CHECK(profile == std::vector<std::vector<long>>{{3}, {3}, {3}, {3}});
    auto empty = per_row_cycle_profile(f4, {3});
    CHECK(empty == std::vector<std::vector<long>>{{0}, {0}, {0}, {0}});
}

}  // TEST_SUITE
