#include "p1f/latin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "p1f/codec.hpp"

namespace p1f {

LatinSquare::LatinSquare(int m, std::vector<int> cells) : m_(m), cells_(std::move(cells)) {
    if (m_ <= 0 || static_cast<int>(cells_.size()) != m_ * m_)
        throw Error("Latin square of order " + std::to_string(m_) + " needs " +
                    std::to_string(m_ * m_) + " cells");
    for (int r = 0; r < m_; ++r) {
        std::vector<bool> row_seen(m_ + 1, false), col_seen(m_ + 1, false);
        for (int c = 0; c < m_; ++c) {
            int rs = at(r, c), cs = at(c, r);
            if (rs < 1 || rs > m_)
                throw Error("symbol " + std::to_string(rs) + " out of range in row " +
                            std::to_string(r + 1));
            if (row_seen[rs])
                throw Error("symbol " + std::to_string(rs) + " repeated in row " +
                            std::to_string(r + 1));
            if (col_seen[cs])
                throw Error("symbol " + std::to_string(cs) + " repeated in column " +
                            std::to_string(r + 1));
            row_seen[rs] = col_seen[cs] = true;
        }
    }
}

bool LatinSquare::symmetric() const {
    for (int r = 0; r < m_; ++r)
        for (int c = r + 1; c < m_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

bool LatinSquare::idempotent() const {
    for (int i = 0; i < m_; ++i)
        if (at(i, i) != i + 1) return false;
    return true;
}

bool LatinSquare::unipotent() const {
    for (int i = 0; i < m_; ++i)
        if (at(i, i) != at(0, 0)) return false;
    return true;
}

std::string LatinSquare::to_text() const {
    int width = m_ >= 10 ? 2 : 1;
    std::ostringstream out;
    for (int r = 0; r < m_; ++r) {
        for (int c = 0; c < m_; ++c) {
            if (c) out << ' ';
            out.width(width);
            out << at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

LatinSquare LatinSquare::from_text(std::string_view text) {
    auto tokens = tokenize(text);
    int m = 1;
    while (m * m < static_cast<int>(tokens.size())) ++m;
    if (m * m != static_cast<int>(tokens.size()))
        throw Error("cell count " + std::to_string(tokens.size()) + " is not a square");
    std::vector<int> cells;
    cells.reserve(tokens.size());
    for (const auto& tok : tokens) {
        try {
            cells.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw Error("bad cell value \"" + tok + "\"");
        }
    }
    return LatinSquare(m, std::move(cells));
}

LatinSquare unipotent_square(const Factorisation& f) {
    if (!f.edge_partition_ok())
        throw Error("unipotent square requires a valid 1-factorisation");
    int n = f.order();
    std::vector<int> cells(n * n);
    for (Vertex i = 0; i < n; ++i) {
        cells[i * n + i] = n;
        for (Vertex j = i + 1; j < n; ++j)
            cells[i * n + j] = cells[j * n + i] = f.factor_of(i, j) + 1;
    }
    return LatinSquare(n, std::move(cells));
}

LatinSquare fold(const Factorisation& f, Vertex j) {
    int n = f.order();
    if (j < 0 || j >= n) throw Error("fold vertex out of range");
    LatinSquare u = unipotent_square(f);
    // Surviving vertices keep their relative order; rename[s] sends the old
    // symbol s = u(i,j) to the rank of i, making the new diagonal 1..n-1.
    std::vector<int> keep;
    for (Vertex v = 0; v < n; ++v)
        if (v != j) keep.push_back(v);
    std::vector<int> rename(n + 1, 0);
    for (int i = 0; i < n - 1; ++i) rename[u.at(keep[i], j)] = i + 1;
    std::vector<int> cells((n - 1) * (n - 1));
    for (int r = 0; r < n - 1; ++r)
        for (int c = 0; c < n - 1; ++c) {
            int s = r == c ? u.at(keep[r], j) : u.at(keep[r], keep[c]);
            cells[r * (n - 1) + c] = rename[s];
        }
    return LatinSquare(n - 1, std::move(cells));
}

std::vector<RowCycle> row_cycles(const LatinSquare& L, int r, int s) {
    int m = L.order();
    if (r == s) throw Error("row cycles need two distinct rows");
    if (r < 0 || s < 0 || r >= m || s >= m) throw Error("row index out of range");
    // sigma(c) = the column of row r carrying the symbol row s shows at c;
    // its cycles are exactly the minimal Latin subrectangles on rows r,s.
    std::vector<int> col_of(m + 1);
    for (int c = 0; c < m; ++c) col_of[L.at(r, c)] = c;
    std::vector<RowCycle> out;
    std::vector<bool> seen(m, false);
    for (int c0 = 0; c0 < m; ++c0) {
        if (seen[c0]) continue;
        RowCycle cyc{r, s, {}};
        for (int c = c0; !seen[c]; c = col_of[L.at(s, c)]) {
            seen[c] = true;
            cyc.columns.push_back(c);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

LatinSquare conjugate(const LatinSquare& L, const std::array<int, 3>& coord_perm) {
    int m = L.order();
    for (int k : coord_perm)
        if (k < 0 || k > 2) throw Error("bad coordinate permutation");
    if (coord_perm[0] == coord_perm[1] || coord_perm[1] == coord_perm[2] ||
        coord_perm[0] == coord_perm[2])
        throw Error("bad coordinate permutation");
    std::vector<int> cells(m * m, 0);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            std::array<int, 3> t = {r, c, L.at(r, c) - 1};
            cells[t[coord_perm[0]] * m + t[coord_perm[1]]] = t[coord_perm[2]] + 1;
        }
    return LatinSquare(m, std::move(cells));
}

namespace {

bool row_hamiltonian(const LatinSquare& L) {
    int m = L.order();
    for (int r = 0; r < m; ++r)
        for (int s = r + 1; s < m; ++s)
            if (row_cycles(L, r, s).size() != 1) return false;
    return true;
}

}  // namespace

HamiltonFlags classify(const LatinSquare& L) {
    HamiltonFlags flags;
    flags.row_hamiltonian = row_hamiltonian(L);
    flags.column_hamiltonian = row_hamiltonian(conjugate(L, {1, 0, 2}));
    flags.symbol_hamiltonian = row_hamiltonian(conjugate(L, {2, 1, 0}));
    flags.atomic =
        flags.row_hamiltonian && flags.column_hamiltonian && flags.symbol_hamiltonian;
    return flags;
}

int species_count(const Factorisation& f, const AutGroup& aut) {
    int n = f.order();
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (const auto& gen : aut.generators)
        for (Vertex v = 0; v < n; ++v) {
            int a = find(v), b = find(gen(v));
            if (a != b) root[a] = b;
        }
    int orbits = 0;
    for (Vertex v = 0; v < n; ++v)
        if (find(v) == v) ++orbits;
    return orbits;
}

int species_count(const Factorisation& f) {
    return species_count(f, automorphism_group(f));
}

}  // namespace p1f
