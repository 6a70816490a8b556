#include "p1f/canon.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace p1f {

Relabelling Relabelling::identity(int n) {
    Relabelling r;
    r.perm.resize(n);
    std::iota(r.perm.begin(), r.perm.end(), 0);
    return r;
}

bool Relabelling::is_identity() const {
    for (Vertex v = 0; v < size(); ++v)
        if (perm[v] != v) return false;
    return true;
}

Relabelling Relabelling::inverse() const {
    Relabelling r;
    r.perm.resize(perm.size());
    for (Vertex v = 0; v < size(); ++v) r.perm[perm[v]] = v;
    return r;
}

Relabelling Relabelling::then(const Relabelling& b) const {
    Relabelling r;
    r.perm.resize(perm.size());
    for (Vertex v = 0; v < size(); ++v) r.perm[v] = b.perm[perm[v]];
    return r;
}

std::vector<int> Relabelling::cycle_type() const {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> type;
    for (Vertex v = 0; v < size(); ++v) {
        if (seen[v]) continue;
        int len = 0;
        for (Vertex w = v; !seen[w]; w = perm[w]) {
            seen[w] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

long Relabelling::order() const {
    long ord = 1;
    for (int len : cycle_type()) ord = std::lcm(ord, static_cast<long>(len));
    return ord;
}

std::string format_cycle_type(const std::vector<int>& type) {
    std::ostringstream out;
    for (std::size_t i = 0; i < type.size();) {
        std::size_t j = i;
        while (j < type.size() && type[j] == type[i]) ++j;
        if (i) out << ' ';
        out << type[i];
        if (j - i > 1) out << '^' << (j - i);
        i = j;
    }
    return out.str();
}

OneFactor apply(const Relabelling& r, const OneFactor& f) {
    int n = f.order();
    std::vector<Vertex> partner(n);
    for (Vertex v = 0; v < n; ++v) partner[r.perm[v]] = r.perm[f.partner(v)];
    return OneFactor(n, std::move(partner));
}

Factorisation apply(const Relabelling& r, const Factorisation& f) {
    std::vector<OneFactor> factors;
    factors.reserve(f.num_factors());
    for (const auto& fac : f.factors()) factors.push_back(apply(r, fac));
    return Factorisation(f.order(), std::move(factors));
}

namespace {

// Flat serialized token of a factor's image under perm: the edge list of the
// image, smaller endpoint first, ascending, flattened to 2 entries per edge.
std::vector<Vertex> image_token(const std::vector<Vertex>& perm, const OneFactor& f) {
    int n = f.order();
    std::vector<Vertex> q(n);
    for (Vertex v = 0; v < n; ++v) q[perm[v]] = perm[f.partner(v)];
    std::vector<Vertex> tok;
    tok.reserve(n);
    std::vector<bool> seen(n, false);
    for (Vertex v = 0; v < n; ++v) {
        if (seen[v]) continue;
        seen[v] = seen[q[v]] = true;
        tok.push_back(v);
        tok.push_back(q[v]);
    }
    return tok;
}

struct Alignment {
    std::vector<Vertex> perm;  // vertex -> image
    std::vector<Vertex> pre;   // image -> vertex
};

// All relabellings mapping the ordered compatible pair (A,B) onto (F1,F2):
// walk the Hamilton cycle A u B and lay it onto the fixed cycle 0-1-...-n-1
// so that A-edges land on F1 positions. Exactly n of the 2n offset/direction
// choices do, alternation being what cuts the other half.
std::vector<Alignment> alignments(const OneFactor& A, const OneFactor& B) {
    int n = A.order();
    std::vector<Vertex> seq;
    seq.reserve(n);
    Vertex v = 0;
    for (int t = 0; t < n; ++t) {
        seq.push_back(v);
        v = (t % 2 == 0) ? A.partner(v) : B.partner(v);
    }
    if (v != 0) throw Error("factor pair is not compatible");

    auto f2_partner = [n](Vertex x) {
        if (x == 0) return n - 1;
        if (x == n - 1) return 0;
        return (x % 2 == 1) ? x + 1 : x - 1;
    };

    std::vector<Alignment> out;
    for (int dir : {1, -1})
        for (int k = 0; k < n; ++k) {
            Alignment al;
            al.perm.resize(n);
            al.pre.resize(n);
            for (int t = 0; t < n; ++t) {
                Vertex src = seq[((k + dir * t) % n + n) % n];
                al.perm[src] = t;
                al.pre[t] = src;
            }
            bool ok = true;
            for (Vertex u = 0; u < n && ok; ++u) {
                ok = al.perm[A.partner(u)] == (al.perm[u] ^ 1) &&
                     al.perm[B.partner(u)] == f2_partner(al.perm[u]);
            }
            if (ok) out.push_back(std::move(al));
        }
    if (static_cast<int>(out.size()) != n)
        throw Error("expected " + std::to_string(n) + " alignments, got " +
                    std::to_string(out.size()));
    return out;
}

struct CanonScan {
    std::vector<Vertex> best_key;            // (n-1) sorted flat tokens, concatenated
    std::vector<std::vector<Vertex>> perms;  // all relabellings achieving best_key
};

CanonScan scan(const Factorisation& f) {
    if (!f.edge_partition_ok())
        throw Error("canonical form requires a valid 1-factorisation");
    int n = f.order();
    CanonScan res;
    std::vector<std::vector<Vertex>> toks(f.num_factors());
    for (int i = 0; i < f.num_factors(); ++i)
        for (int j = 0; j < f.num_factors(); ++j) {
            if (i == j) continue;
            if (!is_compatible(f.factor(i), f.factor(j)))
                throw Error("canonical form requires a perfect 1-factorisation");
            for (const auto& al : alignments(f.factor(i), f.factor(j))) {
                // The image's first token is always F1's; its second is the
                // image of whichever factor holds the preimage of edge (0,2).
                // Compare that token first and expand the rest only on a tie
                // or an improvement.
                int owner = f.factor_of(al.pre[0], al.pre[2]);
                auto t2 = image_token(al.perm, f.factor(owner));
                if (!res.best_key.empty() &&
                    std::lexicographical_compare(res.best_key.begin() + n,
                                                 res.best_key.begin() + 2 * n, t2.begin(),
                                                 t2.end()))
                    continue;
                for (int k = 0; k < f.num_factors(); ++k)
                    toks[k] = image_token(al.perm, f.factor(k));
                std::sort(toks.begin(), toks.end());
                std::vector<Vertex> key;
                key.reserve(f.num_factors() * n);
                for (const auto& t : toks) key.insert(key.end(), t.begin(), t.end());
                if (res.best_key.empty() || key < res.best_key) {
                    res.best_key = std::move(key);
                    res.perms.clear();
                    res.perms.push_back(al.perm);
                } else if (key == res.best_key) {
                    res.perms.push_back(al.perm);
                }
            }
        }
    if (res.perms.empty()) throw Error("no compatible factor pair found");
    return res;
}

}  // namespace

std::vector<Relabelling> canonical_achievers(const Factorisation& f) {
    auto res = scan(f);
    std::vector<Relabelling> out;
    out.reserve(res.perms.size());
    for (auto& p : res.perms) out.push_back(Relabelling{std::move(p)});
    return out;
}

std::pair<Factorisation, Relabelling> canonical_form(const Factorisation& f) {
    auto res = scan(f);
    Relabelling r{std::move(res.perms.front())};
    return {apply(r, f), r};
}

bool are_isomorphic(const Factorisation& a, const Factorisation& b) {
    if (a.order() != b.order()) return false;
    return canonical_form(a).first == canonical_form(b).first;
}

namespace {

// Smallest subset of `elements` (tried in sorted order) whose generated
// subgroup is the whole set. Group sizes here are tiny, so plain closure.
std::vector<Relabelling> greedy_generators(const std::set<std::vector<Vertex>>& elements,
                                           int n) {
    std::vector<Relabelling> gens;
    std::set<std::vector<Vertex>> closure = {Relabelling::identity(n).perm};
    for (const auto& e : elements) {
        if (closure.count(e)) continue;
        gens.push_back(Relabelling{e});
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<Vertex>> next;
            for (const auto& a : closure)
                for (const auto& g : gens) {
                    auto prod = Relabelling{a}.then(g).perm;
                    if (!closure.count(prod)) next.push_back(std::move(prod));
                }
            for (auto& p : next) grew |= closure.insert(std::move(p)).second;
        }
        if (closure.size() == elements.size()) break;
    }
    return gens;
}

}  // namespace

AutGroup automorphism_group(const Factorisation& f) {
    auto achievers = canonical_achievers(f);
    Relabelling inv0 = achievers.front().inverse();
    std::set<std::vector<Vertex>> elements;
    for (const auto& a : achievers) elements.insert(a.then(inv0).perm);

    AutGroup g;
    g.order = static_cast<long>(elements.size());
    if (g.order == 1) return g;  // trivial: cyclic, no generators listed

    g.generators = greedy_generators(elements, f.order());
    g.cyclic = false;
    for (const auto& e : elements) {
        Relabelling r{e};
        if (r.order() == g.order) {
            g.cyclic = true;
            g.generators = {r};
            g.generator_cycle_type = r.cycle_type();
            break;
        }
    }
    return g;
}

std::vector<Relabelling> pair_alignments(const OneFactor& a, const OneFactor& b) {
    std::vector<Relabelling> out;
    for (auto& al : alignments(a, b)) out.push_back(Relabelling{std::move(al.perm)});
    return out;
}

}  // namespace p1f
