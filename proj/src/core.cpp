#include "p1f/core.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace p1f {

int check_order(int n) {
    if (n < 4 || n % 2 != 0)
        throw Error("order must be even and at least 4, got " + std::to_string(n));
    return n;
}

int edge_id(int n, Vertex u, Vertex v) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
        throw Error("bad edge (" + std::to_string(u) + "," + std::to_string(v) + ") for order " +
                    std::to_string(n));
    if (u > v) std::swap(u, v);
    // Edges (0,*) occupy ids 0..n-2, edges (1,*) the next n-2 slots, and so on.
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

std::pair<Vertex, Vertex> edge_of_id(int n, int id) {
    if (id < 0 || id >= edge_count(n)) throw Error("edge id out of range");
    int u = 0;
    while (id >= n - 1 - u) {
        id -= n - 1 - u;
        ++u;
    }
    return {u, u + 1 + id};
}

std::string vertex_name(int n, Vertex v) {
    if (n <= 26) return std::string(1, static_cast<char>('a' + v));
    return std::to_string(v);
}

std::string edge_name(int n, Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    if (n <= 26) return vertex_name(n, u) + vertex_name(n, v);
    return vertex_name(n, u) + "-" + vertex_name(n, v);
}

int EdgeBits::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool EdgeBits::none() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

bool EdgeBits::all() const { return count() == nbits_; }

EdgeBits& EdgeBits::operator|=(const EdgeBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

EdgeBits& EdgeBits::operator&=(const EdgeBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

bool EdgeBits::intersects(const EdgeBits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

OneFactor::OneFactor(int n, std::vector<Vertex> partner)
    : n_(check_order(n)), partner_(std::move(partner)), edges_(edge_count(n)) {
    if (static_cast<int>(partner_.size()) != n_)
        throw Error("partner array has wrong length");
    for (Vertex v = 0; v < n_; ++v) {
        Vertex w = partner_[v];
        if (w < 0 || w >= n_ || w == v || partner_[w] != v)
            throw Error("partner array is not a fixed-point-free involution at vertex " +
                        vertex_name(n_, v));
    }
    for (Vertex v = 0; v < n_; ++v)
        if (v < partner_[v]) edges_.set(edge_id(n_, v, partner_[v]));
}

OneFactor OneFactor::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<Vertex> partner(static_cast<std::size_t>(std::max(n, 0)), -1);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw Error("edge out of range");
        if (partner[u] != -1 || partner[v] != -1)
            throw Error("vertex covered twice in edge list");
        partner[u] = v;
        partner[v] = u;
    }
    for (Vertex v = 0; v < n; ++v)
        if (partner[v] == -1) throw Error("vertex " + vertex_name(n, v) + " left unmatched");
    return OneFactor(n, std::move(partner));
}

std::vector<std::pair<Vertex, Vertex>> OneFactor::edge_list() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(n_ / 2);
    for (Vertex v = 0; v < n_; ++v)
        if (v < partner_[v]) out.emplace_back(v, partner_[v]);
    return out;
}

std::strong_ordering OneFactor::operator<=>(const OneFactor& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    // The flattened ascending edge list starts at vertex 0's edge, whose hi
    // vertex is partner(0), and so on; comparing the lists element by element
    // is the same as comparing serialized tokens.
    std::vector<bool> seen_a(n_, false), seen_b(n_, false);
    Vertex a = 0, b = 0;
    for (int k = 0; k < n_ / 2; ++k) {
        while (seen_a[a]) ++a;
        while (seen_b[b]) ++b;
        if (auto c = a <=> b; c != 0) return c;
        if (auto c = partner_[a] <=> o.partner_[b]; c != 0) return c;
        seen_a[a] = seen_a[partner_[a]] = true;
        seen_b[b] = seen_b[o.partner_[b]] = true;
    }
    return std::strong_ordering::equal;
}

Factorisation::Factorisation(int n, std::vector<OneFactor> factors)
    : n_(check_order(n)), factors_(std::move(factors)), owner_(edge_count(n), -1) {
    if (static_cast<int>(factors_.size()) != n_ - 1)
        throw Error("expected " + std::to_string(n_ - 1) + " factors, got " +
                    std::to_string(factors_.size()));
    for (const auto& f : factors_)
        if (f.order() != n_) throw Error("factor order mismatch");
    std::sort(factors_.begin(), factors_.end());
    partition_ok_ = true;
    for (int k = 0; k < num_factors(); ++k)
        for (auto [u, v] : factors_[k].edge_list()) {
            int id = edge_id(n_, u, v);
            if (owner_[id] != -1)
                partition_ok_ = false;  // duplicate; owner stays the first claimant
            else
                owner_[id] = static_cast<std::int16_t>(k);
        }
    for (int id = 0; id < edge_count(n_); ++id)
        if (owner_[id] == -1) partition_ok_ = false;
}

int Factorisation::factor_of(Vertex u, Vertex v) const {
    return owner_[edge_id(n_, u, v)];
}

std::pair<OneFactor, OneFactor> make_f1_f2(int n) {
    check_order(n);
    std::vector<Vertex> p1(n), p2(n);
    for (Vertex v = 0; v < n; v += 2) {
        p1[v] = v + 1;
        p1[v + 1] = v;
    }
    p2[0] = n - 1;
    p2[n - 1] = 0;
    for (Vertex v = 1; v < n - 1; v += 2) {
        p2[v] = v + 1;
        p2[v + 1] = v;
    }
    return {OneFactor(n, std::move(p1)), OneFactor(n, std::move(p2))};
}

CycleStructure factor_union_cycles(const OneFactor& f, const OneFactor& g) {
    int n = f.order();
    if (g.order() != n) throw Error("factor order mismatch");
    CycleStructure cs;
    std::vector<bool> visited(n, false);
    for (Vertex start = 0; start < n; ++start) {
        if (visited[start]) continue;
        // Walk the union alternating f,g edges. A shared edge closes after
        // two steps, giving the doubled-edge 2-cycle.
        std::vector<Vertex> cycle;
        Vertex v = start;
        bool use_f = true;
        do {
            cycle.push_back(v);
            visited[v] = true;
            v = use_f ? f.partner(v) : g.partner(v);
            use_f = !use_f;
        } while (v != start);
        cs.lengths.push_back(static_cast<int>(cycle.size()));
        cs.cycles.push_back(std::move(cycle));
    }
    std::vector<std::size_t> idx(cs.lengths.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return cs.lengths[a] != cs.lengths[b] ? cs.lengths[a] < cs.lengths[b]
                                              : cs.cycles[a][0] < cs.cycles[b][0];
    });
    CycleStructure sorted;
    for (auto i : idx) {
        sorted.lengths.push_back(cs.lengths[i]);
        sorted.cycles.push_back(std::move(cs.cycles[i]));
    }
    return sorted;
}

bool is_compatible(const OneFactor& f, const OneFactor& g) {
    int n = f.order();
    if (g.order() != n) return false;
    // Follow v -> f(g(v)) from vertex 0; the union is a Hamilton cycle exactly
    // when this product of the two involutions is a single n/2-cycle on each
    // of the two alternation classes, so the walk first returns after n/2 steps.
    Vertex v = 0;
    for (int steps = 1; steps <= n / 2; ++steps) {
        v = f.partner(g.partner(v));
        if (v == 0) return steps == n / 2;
    }
    return false;
}

ValidationReport validate_p1f(const Factorisation& f) {
    ValidationReport r;
    int n = f.order();
    std::vector<int> cover(edge_count(n), 0);
    for (const auto& fac : f.factors())
        for (auto [u, v] : fac.edge_list()) ++cover[edge_id(n, u, v)];
    r.edge_partition_ok = true;
    for (int id = 0; id < edge_count(n); ++id) {
        if (cover[id] == 1) continue;
        r.edge_partition_ok = false;
        auto [u, v] = edge_of_id(n, id);
        std::ostringstream msg;
        msg << "edge " << edge_name(n, u, v) << " covered " << cover[id] << " times";
        r.partition_errors.push_back(msg.str());
    }
    for (int i = 0; i < f.num_factors(); ++i)
        for (int j = i + 1; j < f.num_factors(); ++j)
            if (!is_compatible(f.factor(i), f.factor(j))) r.incompatible_pairs.emplace_back(i, j);
    return r;
}

}  // namespace p1f
