#include "ct/witness.hpp"

#include <algorithm>
#include <cassert>

namespace ct {

namespace {

ChemicalTree path_tree(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return ChemicalTree(n, es);
}

// Spine of b degree-3 vertices, leaves everywhere else (the b = n/2-1
// boundary class representative).
ChemicalTree binary_caterpillar(int n, int b) {
    std::vector<Edge> es;
    int next = b;
    for (int i = 0; i + 1 < b; ++i) es.emplace_back(i, i + 1);
    for (int i = 0; i < b; ++i) {
        int want = 3 - (i > 0 ? 1 : 0) - (i + 1 < b ? 1 : 0);
        for (int j = 0; j < want; ++j) es.emplace_back(i, next++);
    }
    assert(next == n);
    return ChemicalTree(n, es);
}

struct Builder {
    int n = 0;
    int next_id = 0;
    std::vector<Edge> edges;
    std::vector<int> spine;      // degree-4 vertices, a path
    std::vector<int> deg3;       // degree-3 vertices, creation order
    std::vector<int> spine_use;  // non-spine edges consumed per spine vertex
    std::vector<int> slot_host;  // free slots in fill order

    int fresh() { return next_id++; }
    void link(int a, int b) { edges.emplace_back(a, b); }

    int spine_cap(int i) const {
        return 4 - (i > 0 ? 1 : 0) - (i + 1 < static_cast<int>(spine.size()) ? 1 : 0);
    }

    void make_spine(int n4) {
        for (int i = 0; i < n4; ++i) {
            spine.push_back(fresh());
            if (i > 0) link(spine[i - 1], spine[i]);
        }
        spine_use.assign(n4, 0);
    }

    void host_deg3(int i) {
        int v = fresh();
        deg3.push_back(v);
        link(spine[i], v);
        ++spine_use[i];
    }

    // One degree-3 per spine vertex per pass, so two never share a host
    // unless unavoidable.
    void attach_deg3_round_robin(int count) {
        int i = 0;
        for (int placed = 0; placed < count; ++placed) {
            while (spine_use[i] >= spine_cap(i)) i = (i + 1) % spine.size();
            host_deg3(i);
            i = (i + 1) % static_cast<int>(spine.size());
        }
    }

    // Chain m extra degree-3 vertices off the first hosted one (x33 > 0).
    void chain_deg3(int m) {
        assert(m == 0 || !deg3.empty());
        int prev = m > 0 ? deg3.front() : -1;
        for (int j = 0; j < m; ++j) {
            int v = fresh();
            deg3.push_back(v);
            link(prev, v);
            prev = v;
        }
    }

    void collect_spine_slots() {
        for (size_t i = 0; i < spine.size(); ++i)
            for (int j = spine_use[i]; j < spine_cap(static_cast<int>(i)); ++j)
                slot_host.push_back(spine[i]);
    }

    void collect_deg3_slots() {
        std::vector<int> used(next_id, 0);
        for (const auto& [a, b] : edges) {
            ++used[a];
            ++used[b];
        }
        for (int v : deg3)
            for (int j = used[v]; j < 3; ++j) slot_host.push_back(v);
    }

    // `paths` slots get a length-2 pendent path, the first of them
    // extended by `surplus` extra degree-2 vertices; `leaves` slots get
    // a pendent vertex. Consumes slot_host.
    void fill(int paths, int leaves, int surplus) {
        assert(paths + leaves == static_cast<int>(slot_host.size()));
        assert(surplus == 0 || paths > 0);
        for (int s = 0; s < paths; ++s) {
            int prev = slot_host[s];
            int chain = 1 + (s == 0 ? surplus : 0);
            for (int j = 0; j < chain; ++j) {
                int v = fresh();
                link(prev, v);
                prev = v;
            }
            link(prev, fresh());
        }
        for (int s = paths; s < paths + leaves; ++s) link(slot_host[s], fresh());
        slot_host.clear();
    }

    ChemicalTree build() {
        assert(next_id == n);
        return ChemicalTree(n, edges);
    }
};

ChemicalTree witness_segments(int n, int k) {
    EdgeTypeMatrix x = extremal_profile(Family::Segments, n, k);
    DegreeCensus c = regime_census(Family::Segments, n, k);
    Builder b;
    b.n = n;
    if (k == 3 || k == 5) {
        // no degree-4 skeleton; one or two adjacent degree-3 centers
        b.deg3.push_back(b.fresh());
        if (k == 5) {
            b.deg3.push_back(b.fresh());
            b.link(b.deg3[0], b.deg3[1]);
        }
        b.collect_deg3_slots();
        b.fill(x.at(2, 3), x.at(1, 3), x.at(2, 2));
        return b.build();
    }
    b.make_spine(c.n4);
    if (c.n3 >= 1) b.host_deg3(0);
    if (c.n3 == 2) b.host_deg3(static_cast<int>(b.spine.size()) - 1);
    b.collect_spine_slots();
    b.fill(x.at(2, 4), x.at(1, 4), x.at(2, 2));
    b.collect_deg3_slots();
    b.fill(x.at(2, 3), x.at(1, 3), 0);
    return b.build();
}

ChemicalTree witness_branching(int n, int bpar) {
    EdgeTypeMatrix x = extremal_profile(Family::Branching, n, bpar);
    DegreeCensus c = branching_census(n, bpar);
    Builder b;
    b.n = n;
    b.make_spine(c.n4);
    b.attach_deg3_round_robin(c.n3 - x.at(3, 3));
    b.chain_deg3(x.at(3, 3));
    b.collect_spine_slots();
    b.fill(x.at(2, 4), x.at(1, 4), x.at(2, 2));
    b.collect_deg3_slots();
    b.fill(x.at(2, 3), x.at(1, 3), 0);
    return b.build();
}

}  // namespace

ChemicalTree build_witness(Family family, int n, int p) {
    if (!feasible(family, n, p))
        throw Infeasible(std::string(family_name(family)) + " witness (n=" + std::to_string(n) +
                         ", p=" + std::to_string(p) + "): class is empty");
    if (family == Family::Segments) {
        if (p <= 1) return path_tree(n);
        return witness_segments(n, p);
    }
    if (p == 0) return path_tree(n);
    if (2 * p == n - 2) return binary_caterpillar(n, p);
    return witness_branching(n, p);
}

namespace {

bool has_starlike_pendent(const ChemicalTree& t) {
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) == 1 && t.degree(t.neighbors(v)[0]) >= 3) return true;
    return false;
}

bool has_pendent_on_deg4(const ChemicalTree& t) {
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) == 1 && t.degree(t.neighbors(v)[0]) == 4) return true;
    return false;
}

int max_pendent_path_length(const PathReport& pr) {
    int m = 0;
    for (const auto& p : pr.pendent_paths) m = std::max(m, p.length);
    return m;
}

int max_internal_path_length(const PathReport& pr) {
    int m = 0;
    for (const auto& p : pr.internal_paths) m = std::max(m, p.length);
    return m;
}

bool deg3_with_deg2_neighbor(const ChemicalTree& t) {
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) == 3)
            for (int w : t.neighbors(v))
                if (t.degree(w) == 2) return true;
    return false;
}

bool adjacent_deg3_pair(const ChemicalTree& t) {
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) == 3)
            for (int w : t.neighbors(v))
                if (w > v && t.degree(w) == 3) return true;
    return false;
}

int max_branching_neighbors_of_deg3(const ChemicalTree& t) {
    int m = 0;
    for (int v = 0; v < t.order(); ++v) {
        if (t.degree(v) != 3) continue;
        int c = 0;
        for (int w : t.neighbors(v))
            if (t.degree(w) >= 3) ++c;
        m = std::max(m, c);
    }
    return m;
}

int max_deg4_neighbors_of_deg3(const ChemicalTree& t) {
    int m = 0;
    for (int v = 0; v < t.order(); ++v) {
        if (t.degree(v) != 3) continue;
        int c = 0;
        for (int w : t.neighbors(v))
            if (t.degree(w) == 4) ++c;
        m = std::max(m, c);
    }
    return m;
}

}  // namespace

MembershipVerdict class_membership(const ChemicalTree& t, Family family, int n, int p,
                                   Index index) {
    MembershipVerdict v;
    auto fail = [&](const char* label) {
        v.member = false;
        v.failed_conditions.push_back(label);
    };
    if (t.order() != n) {
        fail("degree-sequence");
        return v;
    }
    DegreeCensus want = regime_census(family, n, p);
    DegreeCensus have = degree_census(t);
    if (!(have == want)) fail("degree-sequence");
    if (index == Index::M1) return v;

    // path / boundary classes carry no structural bullets
    bool structural = (family == Family::Segments) ? p >= 3 : (p >= 1 && 2 * p != n - 2);
    if (!structural) return v;

    PathReport pr = path_report(t);
    if (max_internal_path_length(pr) > 1) fail("internal-path-length-1");
    if (has_starlike_pendent(t) && max_pendent_path_length(pr) > 2)
        fail("starlike-vs-long-pendent");
    if (family == Family::Segments) {
        if (max_branching_neighbors_of_deg3(t) > 1) fail("deg3-branching-neighbors");
        if (has_pendent_on_deg4(t) && deg3_with_deg2_neighbor(t))
            fail("deg4-pendent-vs-deg3-deg2");
        if (have.n4 > 0 && degree4_induced_components(t) != 1) fail("deg4-induced-tree");
    } else {
        if (has_pendent_on_deg4(t) && adjacent_deg3_pair(t)) fail("deg4-pendent-vs-adjacent-deg3");
        if (max_deg4_neighbors_of_deg3(t) > 1) fail("deg3-at-most-one-deg4-neighbor");
        if (have.n4 == 0 || degree4_induced_components(t) != 1) fail("deg4-induced-tree");
    }
    return v;
}

}  // namespace ct
