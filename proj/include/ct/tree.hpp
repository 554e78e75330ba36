#ifndef CT_TREE_HPP
#define CT_TREE_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ct/errors.hpp"

namespace ct {

using Edge = std::pair<int, int>;

/// A labeled tree on n vertices with every degree at most 4.
/// Immutable after construction; the constructor validates everything
/// (tree-ness, id range, degree bound) and throws on violation.
class ChemicalTree {
public:
    ChemicalTree(int order, const std::vector<Edge>& edge_list);

    int order() const { return n_; }
    int degree(int v) const { return off_[v + 1] - off_[v]; }
    std::span<const int> neighbors(int v) const {
        return {nbr_.data() + off_[v], nbr_.data() + off_[v + 1]};
    }
    /// Edges as (u, v) pairs with u < v, sorted.
    std::vector<Edge> edges() const;

private:
    int n_;
    std::vector<int> nbr_;  // CSR adjacency, each range sorted
    std::vector<int> off_;
};

/// Counts of vertices of degree 1..4. The degree-0 vertex of the
/// 1-vertex tree is outside these counts, so n1+n2+n3+n4 = n only
/// holds for n >= 2.
struct DegreeCensus {
    int n1 = 0, n2 = 0, n3 = 0, n4 = 0;
    int total() const { return n1 + n2 + n3 + n4; }
    int weighted() const { return n1 + 2 * n2 + 3 * n3 + 4 * n4; }
    bool operator==(const DegreeCensus&) const = default;
};

/// Symmetric edge-type counts x_{i,j} = number of edges joining a
/// degree-i vertex to a degree-j vertex, 1 <= i <= j <= 4.
class EdgeTypeMatrix {
public:
    int at(int i, int j) const { return x_[idx(i, j)]; }
    void set(int i, int j, int v) { x_[idx(i, j)] = v; }
    void add(int i, int j, int v) { x_[idx(i, j)] += v; }
    int total() const;
    long long m2() const;  // sum i*j*x_{i,j}
    /// Row sum of Eq.-style identity: sum_{i != j} x_{j,i} + 2 x_{j,j}.
    int incidence(int j) const;
    bool operator==(const EdgeTypeMatrix&) const = default;

private:
    static int idx(int i, int j);
    int x_[10] = {0};
};

struct PathReport {
    struct Path {
        int a = 0, b = 0;  // end vertices
        int length = 0;    // edge count
        bool operator==(const Path&) const = default;
    };
    std::vector<Path> pendent_paths;   // a = leaf, b = branching endpoint
    std::vector<Path> internal_paths;  // both ends branching
    std::vector<Path> segments;        // all segments (partition the edges)
    int segment_count = 0;             // k
    int branching_count = 0;           // b
};

/// Relabeling-invariant identifier of the isomorphism class.
/// Layout: one tag byte (1 = centroid, 2 = bicentroid edge), then the
/// canonical depth sequence(s); decodable back into a tree.
struct CanonicalCode {
    std::string bytes;
    std::string hex() const;
    static CanonicalCode from_hex(const std::string& h);
    auto operator<=>(const CanonicalCode&) const = default;
};

ChemicalTree build_tree(int order, const std::vector<Edge>& edges);
DegreeCensus degree_census(const ChemicalTree& t);
long long zagreb_m1(const ChemicalTree& t);
long long zagreb_m2(const ChemicalTree& t);
EdgeTypeMatrix edge_type_counts(const ChemicalTree& t);
PathReport path_report(const ChemicalTree& t);
CanonicalCode canonical_code(const ChemicalTree& t);
/// Number of connected components of the subgraph induced by the
/// degree-4 vertices (0 when there are none).
int degree4_induced_components(const ChemicalTree& t);

/// Inverse of canonical_code. Throws InvalidCode on malformed bytes.
ChemicalTree decode_canonical_code(const CanonicalCode& code);

// Edge-list text format: line 1 = n, then one "u v" per line, 0-based.
ChemicalTree read_edge_list(std::istream& in);
void write_edge_list(const ChemicalTree& t, std::ostream& out);

}  // namespace ct

#endif
