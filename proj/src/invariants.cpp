#include "p1f/invariants.hpp"

#include <algorithm>
#include <deque>

#include "p1f/latin.hpp"

namespace p1f {

Train build_train(const Factorisation& f) {
    if (!f.edge_partition_ok()) throw Error("train requires a valid 1-factorisation");
    int n = f.order();
    Train t;
    t.n = n;
    t.succ.resize(edge_count(n) * (n - 1));
    for (int e = 0; e < edge_count(n); ++e) {
        auto [a, b] = edge_of_id(n, e);
        int owner = f.factor_of(a, b);
        for (int k = 0; k < n - 1; ++k) {
            const OneFactor& fac = f.factor(k);
            int image = edge_id(n, fac.partner(a), fac.partner(b));
            t.succ[t.vertex_id(e, k)] = t.vertex_id(image, owner);
        }
    }
    return t;
}

IndegreeSequence indegree_sequence(const Train& t) {
    std::vector<int> indeg(t.num_vertices(), 0);
    for (int v = 0; v < t.num_vertices(); ++v) ++indeg[t.succ[v]];
    IndegreeSequence tallies(1 + *std::max_element(indeg.begin(), indeg.end()), 0);
    for (int v = 0; v < t.num_vertices(); ++v) ++tallies[indeg[v]];
    return tallies;
}

namespace {

// Vertices left after repeatedly deleting indegree-0 vertices, i.e. exactly
// the vertices on directed cycles.
std::vector<bool> cycle_vertices(const Train& t) {
    int V = t.num_vertices();
    std::vector<int> indeg(V, 0);
    for (int v = 0; v < V; ++v) ++indeg[t.succ[v]];
    std::deque<int> queue;
    for (int v = 0; v < V; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    std::vector<bool> on_cycle(V, true);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        on_cycle[v] = false;
        int w = t.succ[v];
        if (--indeg[w] == 0) queue.push_back(w);
    }
    return on_cycle;
}

}  // namespace

PVector p_vector(const Train& t, int max_i) {
    int V = t.num_vertices();
    auto on_cycle = cycle_vertices(t);
    std::vector<int> p(V, -1);
    for (int v = 0; v < V; ++v)
        if (on_cycle[v]) p[v] = 0;
    for (int v = 0; v < V; ++v) {
        if (p[v] != -1) continue;
        std::vector<int> path;
        int w = v;
        while (p[w] == -1) {
            path.push_back(w);
            w = t.succ[w];
        }
        int base = p[w];
        for (auto it = path.rbegin(); it != path.rend(); ++it) p[*it] = ++base;
    }
    PVector counts(max_i + 1, 0);
    for (int v = 0; v < V; ++v)
        if (p[v] <= max_i) ++counts[p[v]];
    return counts;
}

std::string train_canonical_hash(const Train& t) {
    int V = t.num_vertices();
    auto on_cycle = cycle_vertices(t);

    // Tree children of v = its predecessors off the cycle; cycle arcs stay
    // within the cycle, so this splits the train into rooted trees hanging
    // from cycle vertices.
    std::vector<std::vector<int>> children(V);
    for (int v = 0; v < V; ++v)
        if (!on_cycle[v]) children[t.succ[v]].push_back(v);

    // Bottom-up code of the tree rooted at v (iterative post-order).
    std::vector<std::string> code(V);
    auto tree_code = [&](int root) {
        std::vector<std::pair<int, bool>> stack{{root, false}};
        while (!stack.empty()) {
            auto [v, expanded] = stack.back();
            stack.pop_back();
            if (!expanded) {
                stack.emplace_back(v, true);
                for (int c : children[v]) stack.emplace_back(c, false);
            } else {
                std::vector<std::string> parts;
                parts.reserve(children[v].size());
                for (int c : children[v]) parts.push_back(std::move(code[c]));
                std::sort(parts.begin(), parts.end());
                std::string s = "(";
                for (auto& part : parts) s += part;
                s += ")";
                code[v] = std::move(s);
            }
        }
    };

    std::vector<std::string> components;
    std::vector<bool> done(V, false);
    for (int v0 = 0; v0 < V; ++v0) {
        if (!on_cycle[v0] || done[v0]) continue;
        std::vector<int> cyc;
        for (int v = v0; !done[v]; v = t.succ[v]) {
            done[v] = true;
            cyc.push_back(v);
            tree_code(v);
        }
        int k = static_cast<int>(cyc.size());
        // least rotation of the label sequence around the cycle
        std::vector<std::string> labels(k);
        for (int i = 0; i < k; ++i) labels[i] = code[cyc[i]];
        int best = 0;
        for (int cand = 1; cand < k; ++cand)
            for (int i = 0; i < k; ++i) {
                auto c = labels[(cand + i) % k].compare(labels[(best + i) % k]);
                if (c > 0) break;
                if (c < 0) {
                    best = cand;
                    break;
                }
            }
        std::string comp = "[";
        for (int i = 0; i < k; ++i) comp += labels[(best + i) % k];
        comp += "]";
        components.push_back(std::move(comp));
    }
    std::sort(components.begin(), components.end());
    std::string out;
    for (auto& c : components) out += c;
    return out;
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::vector<int> tricolour_vector(const Factorisation& f) {
    if (!f.edge_partition_ok())
        throw Error("tricolour vector requires a valid 1-factorisation");
    int n = f.order();
    int m = f.num_factors();
    // counter slots for unordered factor triples i<j<k, in lexicographic order
    std::vector<int> slot(m * m * m, -1);
    int next = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) slot[(i * m + j) * m + k] = next++;
    std::vector<int> counts(next, 0);
    // a triangle's edges pairwise share a vertex, so its owners are three
    // distinct factors; every vertex triple contributes to exactly one slot
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) {
                int i = f.factor_of(a, b), j = f.factor_of(a, c), k = f.factor_of(b, c);
                if (i > j) std::swap(i, j);
                if (j > k) std::swap(j, k);
                if (i > j) std::swap(i, j);
                ++counts[slot[(i * m + j) * m + k]];
            }
    std::sort(counts.begin(), counts.end());
    return counts;
}

namespace {

template <typename PerCycle>
void scan_row_cycles(const Factorisation& f, PerCycle&& per_cycle) {
    LatinSquare u = unipotent_square(f);
    int n = u.order();
    for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
            for (const auto& cyc : row_cycles(u, r, s)) {
                if (cyc.length() == 2) {
                    // each row pair of U has one 2-cycle through its two
                    // diagonal cells; that one says nothing, skip it
                    auto [lo, hi] = std::minmax(cyc.columns[0], cyc.columns[1]);
                    if (lo == r && hi == s) continue;
                }
                per_cycle(cyc);
            }
}

}  // namespace

CycleTally vertex_cycle_tally(const Factorisation& f) {
    CycleTally tally;
    scan_row_cycles(f, [&](const RowCycle& cyc) { ++tally[cyc.length()]; });
    return tally;
}

std::vector<std::vector<long>> per_row_cycle_profile(const Factorisation& f,
                                                     const std::vector<int>& lengths) {
    std::vector<int> wanted(lengths);
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
    std::vector<std::vector<long>> rows(f.order(), std::vector<long>(wanted.size(), 0));
    scan_row_cycles(f, [&](const RowCycle& cyc) {
        auto it = std::lower_bound(wanted.begin(), wanted.end(), cyc.length());
        if (it == wanted.end() || *it != cyc.length()) return;
        auto slot = it - wanted.begin();
        ++rows[cyc.r][slot];
        ++rows[cyc.s][slot];
    });
    std::sort(rows.begin(), rows.end());
    return rows;
}

}  // namespace p1f
