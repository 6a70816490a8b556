// Latin squares associated with 1-factorisations: the symmetric unipotent
// square U(F), its idempotent folds, row/column/symbol cycle structure,
// conjugates, Hamiltonicity and atomicity flags, and species counting. A
// factorisation of K_n is perfect exactly when every fold is
// symbol-Hamiltonian, which is what ties this module to the enumerator.
#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "p1f/canon.hpp"
#include "p1f/core.hpp"

namespace p1f {

class LatinSquare {
  public:
    // Row-major cells with 1-based symbols; validates the Latin property.
    LatinSquare(int m, std::vector<int> cells);

    int order() const { return m_; }
    int at(int r, int c) const { return cells_[r * m_ + c]; }
    bool symmetric() const;
    bool idempotent() const;  // cell (i,i) = i+1
    bool unipotent() const;   // constant diagonal

    std::string to_text() const;
    static LatinSquare from_text(std::string_view text);

    bool operator==(const LatinSquare& o) const = default;

  private:
    int m_;
    std::vector<int> cells_;
};

// A minimal 2xL Latin subrectangle on two rows: following the column map
// c -> (column of row r holding row s's symbol at c) around one cycle.
struct RowCycle {
    int r, s;
    std::vector<int> columns;  // in cycle order, starting at the smallest
    int length() const { return static_cast<int>(columns.size()); }
};

// U(F)[i][j] = 1-based index of the factor containing edge ij (in the
// factorisation's sorted order), diagonal all n. Symmetric and unipotent.
LatinSquare unipotent_square(const Factorisation& f);

// Copies column j of U(F) onto the diagonal, deletes row and column j, and
// renames symbols to make the diagonal the identity. Symmetric, idempotent,
// order n-1. The renaming changes no cycle length.
LatinSquare fold(const Factorisation& f, Vertex j);

// Decomposition of the columns into row cycles of rows r and s. Lengths are
// all >= 2 and sum to the order.
std::vector<RowCycle> row_cycles(const LatinSquare& L, int r, int s);

// Coordinate permutation of the triple set {(row, column, symbol)}:
// coordinate k of each image triple is coordinate coord_perm[k] of the
// original. {1,0,2} is the transpose, {2,1,0} swaps rows with symbols.
LatinSquare conjugate(const LatinSquare& L, const std::array<int, 3>& coord_perm);

struct HamiltonFlags {
    bool row_hamiltonian = false;
    bool column_hamiltonian = false;
    bool symbol_hamiltonian = false;
    bool atomic = false;  // all three at once
};

// Row-Hamiltonicity checks every row pair for a single full-length cycle;
// the symbol and column flags reuse it through the matching conjugates.
HamiltonFlags classify(const LatinSquare& L);

// Number of orbits of Aut(F) on vertices = number of distinct species among
// the folds of F. The overload taking the group avoids recomputing it.
int species_count(const Factorisation& f);
int species_count(const Factorisation& f, const AutGroup& aut);

}  // namespace p1f
