#include "ct/enumerate.hpp"

#include <algorithm>
#include <cassert>

namespace ct {

std::string EnumFilter::describe() const {
    switch (kind) {
        case Kind::None: return "none";
        case Kind::Segments: return "segments=" + std::to_string(value);
        case Kind::Branching: return "branching=" + std::to_string(value);
    }
    return "?";
}

TreeEnumerator::TreeEnumerator(int order, EnumFilter filter, EnumOptions opt)
    : n_(order), filter_(filter), opt_(opt) {
    if (n_ < 1) throw Error("enumeration order must be >= 1");
    if (opt_.max_degree < 1 || opt_.max_degree > 4)
        throw Error("max_degree must be in [1, 4]");
    if (n_ > opt_.order_cap)
        throw LimitExceeded("order " + std::to_string(n_) + " above cap " +
                            std::to_string(opt_.order_cap));
    if (n_ == 1) return;
    half_ = n_ / 2;
    seq_.assign(n_, 0);
    path_.assign(n_ + 1, PathNode{});
    path_[0] = PathNode{0, 0, 0, -1, -1, -1, false, 0};
    path_len_ = 1;
    next_d_.assign(n_ + 1, 0);
    undo_.resize(n_ + 1);
    next_d_[1] = 1;
}

int TreeEnumerator::compute_dmax() const {
    int dmax = path_len_;  // deepest placed vertex depth + 1
    for (int j = 0; j < path_len_; ++j) {
        const PathNode& u = path_[j];
        if (!u.tight) continue;
        int f = (u.match > u.prev_hi) ? j + 1 : seq_[u.match];
        dmax = std::min(dmax, f);
    }
    if (path_len_ > 1 && rc_size_ + 1 > half_) dmax = std::min(dmax, 1);
    return dmax;
}

void TreeEnumerator::place(int pos, int d) {
    UndoFrame& f = undo_[pos];
    f.popped.clear();
    f.ancestor_log.clear();
    f.rc_before = rc_size_;

    for (int j = d; j < path_len_; ++j) f.popped.push_back(path_[j]);

    PathNode& par = path_[d - 1];
    f.parent_before = par;
    if (par.cur_child_start >= 0) {
        par.prev_lo = par.cur_child_start;
        par.prev_hi = pos - 1;
        par.tight = true;
        par.match = par.prev_lo + 1;  // both child roots sit at depth d
    }
    par.cur_child_start = pos;
    ++par.child_count;

    for (int j = 0; j <= d - 2; ++j) {
        PathNode& u = path_[j];
        if (!u.tight) continue;
        assert(u.match <= u.prev_hi && seq_[u.match] >= d);
        if (d < seq_[u.match]) {
            u.tight = false;
            f.ancestor_log.push_back(-(j + 1));
        } else {
            ++u.match;
            f.ancestor_log.push_back(j + 1);
        }
    }

    path_[d] = PathNode{d, pos, 0, -1, -1, -1, false, 0};
    path_len_ = d + 1;
    rc_size_ = (d == 1) ? 1 : rc_size_ + 1;
    seq_[pos] = d;
}

void TreeEnumerator::unplace(int pos) {
    UndoFrame& f = undo_[pos];
    int d = seq_[pos];
    rc_size_ = f.rc_before;
    for (size_t i = 0; i < f.popped.size(); ++i) path_[d + static_cast<int>(i)] = f.popped[i];
    path_len_ = d + static_cast<int>(f.popped.size());
    path_[d - 1] = f.parent_before;
    for (int enc : f.ancestor_log) {
        if (enc > 0)
            --path_[enc - 1].match;
        else
            path_[-enc - 1].tight = true;
    }
}

bool TreeEnumerator::orientation_ok() const {
    if (n_ % 2 != 0) return true;
    // root child subtree ranges
    int big_lo = -1;
    int start = 1;
    for (int p = 2; p <= n_; ++p) {
        if (p == n_ || seq_[p] == 1) {
            if (p - start == half_) {
                big_lo = start;
                break;
            }
            start = p;
        }
    }
    if (big_lo < 0) return true;  // unicentroidal
    // S_A: depth sequence of the root-side half; S_B: the big child, rebased
    auto a_elem = [&](int i) -> int {
        if (i == 0) return 0;
        int p = i;  // skip over the big child's range
        if (p >= big_lo) p += half_;
        return seq_[p];
    };
    for (int i = 0; i < half_; ++i) {
        int a = a_elem(i);
        int b = seq_[big_lo + i] - 1;
        if (a != b) return a > b;
    }
    return true;  // halves identical
}

bool TreeEnumerator::filter_pass(const std::vector<int>& deg) const {
    if (filter_.kind == EnumFilter::Kind::None) return true;
    DegreeCensus c;
    for (int d : deg) {
        if (d == 1) ++c.n1;
        else if (d == 2) ++c.n2;
        else if (d == 3) ++c.n3;
        else if (d == 4) ++c.n4;
    }
    if (filter_.kind == EnumFilter::Kind::Segments)
        return c.n1 + c.n3 + c.n4 - 1 == filter_.value;
    return c.n3 + c.n4 == filter_.value;
}

std::optional<ChemicalTree> TreeEnumerator::materialize() {
    std::vector<int> parent(n_, -1), last_at(n_ + 1, -1), deg(n_, 0);
    last_at[0] = 0;
    for (int p = 1; p < n_; ++p) {
        int d = seq_[p];
        parent[p] = last_at[d - 1];
        last_at[d] = p;
        ++deg[p];
        ++deg[parent[p]];
    }
    if (!filter_pass(deg)) return std::nullopt;
    std::vector<Edge> edges;
    edges.reserve(n_ - 1);
    for (int p = 1; p < n_; ++p) edges.emplace_back(parent[p], p);
    return ChemicalTree(n_, edges);
}

std::optional<ChemicalTree> TreeEnumerator::next() {
    if (done_) return std::nullopt;
    if (n_ == 1) {
        done_ = true;
        bool want = filter_.kind == EnumFilter::Kind::None || filter_.value == 0;
        if (want) return ChemicalTree(1, {});
        return std::nullopt;
    }
    while (true) {
        if (pos_ == n_) {
            std::optional<ChemicalTree> out;
            if (orientation_ok()) out = materialize();
            --pos_;
            unplace(pos_);
            if (out) return out;
            continue;
        }
        int d = next_d_[pos_];
        while (d >= 1) {
            int cap = (d == 1) ? opt_.max_degree : opt_.max_degree - 1;
            if (path_[d - 1].child_count < cap) break;
            --d;
        }
        if (d < 1) {
            if (pos_ == 1) {
                done_ = true;
                return std::nullopt;
            }
            --pos_;
            unplace(pos_);
            continue;
        }
        next_d_[pos_] = d - 1;
        place(pos_, d);
        ++pos_;
        if (pos_ < n_) next_d_[pos_] = compute_dmax();
    }
}

void enumerate_chemical_trees(int order, const std::function<void(const ChemicalTree&)>& fn,
                              EnumOptions opt) {
    TreeEnumerator e(order, EnumFilter::none(), opt);
    while (auto t = e.next()) fn(*t);
}

void enumerate_filtered(int order, EnumFilter f,
                        const std::function<void(const ChemicalTree&)>& fn, EnumOptions opt) {
    TreeEnumerator e(order, f, opt);
    while (auto t = e.next()) fn(*t);
}

long long count_chemical_trees(int order, EnumFilter f, EnumOptions opt) {
    TreeEnumerator e(order, f, opt);
    long long c = 0;
    while (e.next()) ++c;
    return c;
}

std::vector<ChemicalTree> collect_chemical_trees(int order, EnumFilter f, EnumOptions opt) {
    std::vector<ChemicalTree> ts;
    TreeEnumerator e(order, f, opt);
    while (auto t = e.next()) ts.push_back(std::move(*t));
    return ts;
}

}  // namespace ct
