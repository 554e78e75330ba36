#ifndef CT_ENUMERATE_HPP
#define CT_ENUMERATE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "ct/tree.hpp"

namespace ct {

struct EnumFilter {
    enum class Kind { None, Segments, Branching };
    Kind kind = Kind::None;
    int value = 0;

    static EnumFilter none() { return {}; }
    static EnumFilter segments(int k) { return {Kind::Segments, k}; }
    static EnumFilter branching(int b) { return {Kind::Branching, b}; }
    bool operator==(const EnumFilter&) const = default;
    std::string describe() const;
};

struct EnumOptions {
    int order_cap = 20;  // LimitExceeded above this
    int max_degree = 4;  // in [1, 4]; lower to tighten the chemical bound
};

/// Streaming generator of all non-isomorphic trees of the given order
/// with maximum degree <= max_degree, one per isomorphism class, in
/// descending lexicographic order of the canonical level sequence.
///
/// Canonical form: the tree is rooted at its centroid and written as a
/// preorder depth sequence with the children of every vertex ordered by
/// non-increasing subtree sequence. For bicentroidal trees the root is
/// the centroid whose half compares lexicographically >= the other.
/// The generator walks canonical-sequence prefixes directly, so the
/// degree bound and the centroid size bound prune the search; state is
/// O(n) and no tree is ever buffered.
class TreeEnumerator {
public:
    explicit TreeEnumerator(int order, EnumFilter filter = {}, EnumOptions opt = {});
    /// Next tree in the class, or nullopt when exhausted.
    std::optional<ChemicalTree> next();

private:
    struct PathNode {
        int depth = 0;
        int seq_pos = 0;
        int child_count = 0;
        int cur_child_start = -1;  // seq index of the open child's root
        int prev_lo = -1, prev_hi = -1;
        bool tight = false;
        int match = 0;  // next seq index in [prev_lo, prev_hi] to compare
    };
    struct UndoFrame {
        std::vector<PathNode> popped;  // nodes removed from the path, deepest last
        PathNode parent_before;
        // signed log of ancestor updates: +d+1 = match advanced at depth d,
        // -(d+1) = tight flag cleared at depth d
        std::vector<int> ancestor_log;
        int rc_before = 0;
    };

    bool filter_pass(const std::vector<int>& deg) const;
    bool orientation_ok() const;
    int compute_dmax() const;
    void place(int pos, int d);
    void unplace(int pos);
    std::optional<ChemicalTree> materialize();

    int n_;
    EnumFilter filter_;
    EnumOptions opt_;
    bool done_ = false;
    bool emitted_single_ = false;

    std::vector<int> seq_;        // the level sequence being built
    std::vector<PathNode> path_;  // path_[d] = rightmost-path vertex at depth d
    int path_len_ = 0;            // rightmost path holds depths 0..path_len_-1
    int rc_size_ = 0;             // size of the open root-child subtree
    int half_;                    // floor(n/2), centroid size bound
    int pos_ = 1;                 // next sequence position to fill
    std::vector<int> next_d_;     // per-position descending depth cursor
    std::vector<UndoFrame> undo_;
};

/// Convenience wrappers over TreeEnumerator.
void enumerate_chemical_trees(int order, const std::function<void(const ChemicalTree&)>& fn,
                              EnumOptions opt = {});
void enumerate_filtered(int order, EnumFilter f,
                        const std::function<void(const ChemicalTree&)>& fn, EnumOptions opt = {});
long long count_chemical_trees(int order, EnumFilter f = {}, EnumOptions opt = {});
std::vector<ChemicalTree> collect_chemical_trees(int order, EnumFilter f = {},
                                                 EnumOptions opt = {});

}  // namespace ct

#endif
