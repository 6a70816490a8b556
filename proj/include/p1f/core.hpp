// Core types for 1-factorisations of complete graphs: vertices, edges,
// one-factors (perfect matchings), factorisations, and the cycle structure
// of factor unions. Everything here is immutable after construction and
// safe to share between threads.
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace p1f {

// Vertices are the integers 0..n-1, printed as letters a,b,... while n <= 26.
using Vertex = int;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Throws unless n is even and at least 4 (no 1-factorisation exists otherwise).
int check_order(int n);

constexpr int edge_count(int n) { return n * (n - 1) / 2; }

// Dense edge ids follow lexicographic order on (lo,hi):
// (0,1)=0, (0,2)=1, ..., (0,n-1)=n-2, (1,2)=n-1, ...
int edge_id(int n, Vertex u, Vertex v);
std::pair<Vertex, Vertex> edge_of_id(int n, int id);

std::string vertex_name(int n, Vertex v);
std::string edge_name(int n, Vertex u, Vertex v);

// Bit-vector indexed by dense edge id.
class EdgeBits {
  public:
    EdgeBits() = default;
    explicit EdgeBits(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    int size() const { return nbits_; }
    int count() const;
    bool none() const;
    bool all() const;  // all of the nbits set
    EdgeBits& operator|=(const EdgeBits& o);
    EdgeBits& operator&=(const EdgeBits& o);
    bool intersects(const EdgeBits& o) const;
    bool operator==(const EdgeBits& o) const = default;
    const std::vector<std::uint64_t>& words() const { return words_; }

  private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

// A perfect matching of K_n, kept both as a partner array (partner(v) = vertex
// matched with v) and as an edge bit-vector. The two views agree by construction.
class OneFactor {
  public:
    OneFactor(int n, std::vector<Vertex> partner);
    static OneFactor from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int order() const { return n_; }
    Vertex partner(Vertex v) const { return partner_[v]; }
    const std::vector<Vertex>& partners() const { return partner_; }
    const EdgeBits& edges() const { return edges_; }
    bool contains(Vertex u, Vertex v) const { return partner_[u] == v; }

    // Edges with lo < hi, ascending in lo; this is the serialized token order.
    std::vector<std::pair<Vertex, Vertex>> edge_list() const;

    bool operator==(const OneFactor& o) const { return partner_ == o.partner_; }
    // Token order: lexicographic on the flattened edge list.
    std::strong_ordering operator<=>(const OneFactor& o) const;

  private:
    int n_;
    std::vector<Vertex> partner_;
    EdgeBits edges_;
};

// Cycle decomposition of the union of two one-factors, as a multigraph:
// a shared edge contributes a doubled edge, i.e. a 2-cycle.
struct CycleStructure {
    std::vector<int> lengths;                 // in vertices, ascending
    std::vector<std::vector<Vertex>> cycles;  // each cycle as a vertex sequence
};

// An ordered list of n-1 one-factors, stored ascending by serialized token.
// Construction checks shape (order, factor count, matching validity) but not
// the edge partition; validate_p1f reports on that, so that defective inputs
// can be diagnosed rather than rejected up front.
class Factorisation {
  public:
    Factorisation(int n, std::vector<OneFactor> factors);

    int order() const { return n_; }
    int num_factors() const { return static_cast<int>(factors_.size()); }
    const OneFactor& factor(int k) const { return factors_[k]; }
    const std::vector<OneFactor>& factors() const { return factors_; }

    // Index of the factor containing edge uv, or -1 if the edge is uncovered.
    int factor_of(Vertex u, Vertex v) const;
    bool edge_partition_ok() const { return partition_ok_; }

    bool operator==(const Factorisation& o) const = default;

  private:
    int n_;
    std::vector<OneFactor> factors_;
    std::vector<std::int16_t> owner_;  // edge id -> factor index, -1 uncovered
    bool partition_ok_;
};

// The two fixed factors every canonical factorisation contains:
// F1 = {01,23,...}, F2 = {0(n-1),12,34,...}; their union is a Hamilton cycle.
std::pair<OneFactor, OneFactor> make_f1_f2(int n);

CycleStructure factor_union_cycles(const OneFactor& f, const OneFactor& g);

// True iff the union of the two (distinct) factors is a single Hamilton cycle.
bool is_compatible(const OneFactor& f, const OneFactor& g);

struct ValidationReport {
    bool edge_partition_ok = false;
    std::vector<std::string> partition_errors;
    // Factor index pairs whose union is not a Hamilton cycle.
    std::vector<std::pair<int, int>> incompatible_pairs;
    bool perfect() const { return edge_partition_ok && incompatible_pairs.empty(); }
};

ValidationReport validate_p1f(const Factorisation& f);

}  // namespace p1f
