#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "p1f/canon.hpp"
#include "p1f/codec.hpp"
#include "testdata.hpp"

using namespace p1f;

namespace {

Relabelling random_relabelling(int n, std::mt19937& rng) {
    Relabelling r = Relabelling::identity(n);
    std::shuffle(r.perm.begin(), r.perm.end(), rng);
    return r;
}

}  // namespace

TEST_SUITE("canon") {

TEST_CASE("relabelling algebra") {
    Relabelling id = Relabelling::identity(5);
    CHECK(id.is_identity());
    CHECK(id.order() == 1);
    CHECK(id.cycle_type() == std::vector<int>{1, 1, 1, 1, 1});

    Relabelling r{{1, 2, 0, 4, 3}};  // (012)(34)
    CHECK(!r.is_identity());
    CHECK(r.order() == 6);
    CHECK(r.cycle_type() == std::vector<int>{3, 2});
    CHECK(r.inverse().perm == std::vector<Vertex>{2, 0, 1, 4, 3});
    CHECK(r.then(r.inverse()).is_identity());
    CHECK(r.inverse().then(r).is_identity());

    Relabelling s{{0, 1, 3, 2, 4}};
    // (r.then(s))(2) = s(r(2)) = s(0) = 0
    CHECK(r.then(s).perm == std::vector<Vertex>{1, 3, 0, 4, 2});
}

TEST_CASE("cycle type formatting") {
    CHECK(format_cycle_type({7, 7, 1, 1}) == "7^2 1^2");
    CHECK(format_cycle_type({15, 1}) == "15 1");
    CHECK(format_cycle_type({2, 2, 2, 2, 2, 2, 2, 1, 1}) == "2^7 1^2");
    CHECK(format_cycle_type({}) == "");
}

TEST_CASE("applying a relabelling moves edges where it should") {
    OneFactor f = OneFactor::from_edges(4, {{0, 1}, {2, 3}});
    Relabelling r{{2, 0, 1, 3}};
    OneFactor g = apply(r, f);
    CHECK(g.contains(2, 0));  // image of 01
    CHECK(g.contains(1, 3));  // image of 23
    Factorisation f4 = parse_line("abcd acbd adbc");
    CHECK(apply(Relabelling::identity(4), f4) == f4);
    CHECK(apply(r, f4) == f4);  // order 4 has a single factorisation
}

TEST_CASE("order 4: the unique factorisation is its own canonical form") {
    Factorisation f = parse_line("abcd acbd adbc");
    auto [canon, witness] = canonical_form(f);
    CHECK(canon == f);
    CHECK(apply(witness, f) == canon);
    AutGroup g = automorphism_group(f);
    CHECK(g.order == 24);  // every vertex permutation fixes it
    CHECK(g.order == oracle::automorphism_count_by_brute_force(f));
    CHECK(!g.cyclic);  // the full symmetric group on 4 points
    CHECK(!g.generators.empty());
    for (const auto& gen : g.generators) CHECK(apply(gen, f) == f);
}

TEST_CASE("order 6: one isomorphism class, automorphism group of size 120") {
    auto all = oracle::p1fs_through_f1f2(6);
    REQUIRE(!all.empty());
    auto first_canon = canonical_form(all[0]).first;
    for (const auto& f : all) CHECK(canonical_form(f).first == first_canon);
    AutGroup g = automorphism_group(all[0]);
    CHECK(g.order == 120);
    CHECK(g.order == oracle::automorphism_count_by_brute_force(all[0]));
    // coset identity: labelled copies through the fixed pair x |Aut| = pairs x alignments
    CHECK(static_cast<long>(all.size()) * g.order == 5L * 4 * 6);
}

TEST_CASE("order 8: one isomorphism class, checked against brute force") {
    auto all = oracle::p1fs_through_f1f2(8);
    REQUIRE(!all.empty());
    auto first_canon = canonical_form(all[0]).first;
    for (const auto& f : all) CHECK(canonical_form(f).first == first_canon);
    AutGroup g = automorphism_group(all[0]);
    CHECK(g.order == oracle::automorphism_count_by_brute_force(all[0]));
    CHECK(static_cast<long>(all.size()) * g.order == 7L * 6 * 8);
    CHECK(static_cast<long>(canonical_achievers(all[0]).size()) == g.order);
    // full minimization over all 8! relabellings lands on the same line
    CHECK(emit_line(first_canon) == oracle::minimal_line_by_brute_force(all[0]));
}

TEST_CASE("canonical lines start with the two fixed factors") {
    auto [f1, f2] = make_f1_f2(16);
    for (const auto& f : read_catalogue_file(data_path("k16_samples.txt"))) {
        auto canon = canonical_form(f).first;
        CHECK(canon.factor(0) == f1);
        CHECK(canon.factor(canon.num_factors() - 1) == f2);
    }
}

TEST_CASE("catalogue samples are already canonical") {
    for (const auto& f : read_catalogue_file(data_path("k16_samples.txt"))) {
        auto [canon, witness] = canonical_form(f);
        CHECK(canon == f);
        CHECK(apply(witness, f) == canon);
        // idempotence
        CHECK(canonical_form(canon).first == canon);
    }
}

TEST_CASE("canonical form is constant under random relabellings") {
    std::mt19937 rng(20240816);
    auto records = read_catalogue_file(data_path("k16_samples.txt"));
    for (const auto& f : records)
        for (int rep = 0; rep < 12; ++rep) {
            auto moved = apply(random_relabelling(16, rng), f);
            CHECK(canonical_form(moved).first == f);
        }
}

TEST_CASE("isomorphism testing separates the sample records") {
    auto records = read_catalogue_file(data_path("k16_samples.txt"));
    std::mt19937 rng(7);
    // every record is isomorphic to a shuffled copy of itself
    for (const auto& f : records)
        CHECK(are_isomorphic(f, apply(random_relabelling(16, rng), f)));
    // records 0..2 share an indegree sequence yet are pairwise non-isomorphic,
    // as are the pair 7,8 sharing most of their structure
    CHECK(!are_isomorphic(records[0], records[1]));
    CHECK(!are_isomorphic(records[0], records[2]));
    CHECK(!are_isomorphic(records[1], records[2]));
    CHECK(!are_isomorphic(records[7], records[8]));
    // order mismatch is a plain false
    CHECK(!are_isomorphic(records[0], parse_line("abcd acbd adbc")));
}

TEST_CASE("the penultimate sample record is rigid") {
    auto records = read_catalogue_file(data_path("k16_samples.txt"));
    AutGroup g = automorphism_group(records[6]);
    CHECK(g.order == 1);
    CHECK(g.cyclic);
    CHECK(g.generators.empty());
    CHECK(canonical_achievers(records[6]).size() == 1);
}

TEST_CASE("canonical form rejects defective input") {
    CHECK_THROWS_AS(canonical_form(oracle::non_perfect_k8()), Error);
    auto [f1, f2] = make_f1_f2(4);
    Factorisation broken(4, {f1, f1, f2});
    CHECK_THROWS_AS(canonical_form(broken), Error);
}

}  // TEST_SUITE
