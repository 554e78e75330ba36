#include "ct/moves.hpp"

#include <algorithm>
#include <set>

namespace ct {

const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::MergeDeg3: return "MergeDeg3";
        case MoveKind::ContractInternal: return "ContractInternal";
        case MoveKind::ShortenPendent: return "ShortenPendent";
        case MoveKind::LeafSwap24: return "LeafSwap24";
        case MoveKind::Deg3Detach: return "Deg3Detach";
        case MoveKind::Deg2Deg3Elim: return "Deg2Deg3Elim";
        case MoveKind::AdjDeg3Split: return "AdjDeg3Split";
        case MoveKind::Deg3Between4s: return "Deg3Between4s";
        case MoveKind::Cycle4Fix: return "Cycle4Fix";
    }
    return "?";
}

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw NotApplicable(std::string("move precondition failed: ") + what);
}

bool adjacent(const ChemicalTree& t, int a, int b) {
    auto nb = t.neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<int> path_between(const ChemicalTree& t, int a, int b) {
    std::vector<int> par(t.order(), -1), q{a};
    par[a] = a;
    for (size_t i = 0; i < q.size() && par[b] == -1; ++i)
        for (int w : t.neighbors(q[i]))
            if (par[w] == -1) {
                par[w] = q[i];
                q.push_back(w);
            }
    std::vector<int> path{b};
    while (path.back() != a) path.push_back(par[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

// Vertices reachable from src without crossing the listed edges.
std::vector<char> component(const ChemicalTree& t, int src, const std::vector<Edge>& cut) {
    std::vector<char> in(t.order(), 0);
    std::vector<int> q{src};
    in[src] = 1;
    auto blocked = [&](int a, int b) {
        for (const auto& [x, y] : cut)
            if ((a == x && b == y) || (a == y && b == x)) return true;
        return false;
    };
    for (size_t i = 0; i < q.size(); ++i)
        for (int w : t.neighbors(q[i]))
            if (!in[w] && !blocked(q[i], w)) {
                in[w] = 1;
                q.push_back(w);
            }
    return in;
}

int branching_neighbors(const ChemicalTree& t, int v) {
    int c = 0;
    for (int w : t.neighbors(v))
        if (t.degree(w) >= 3) ++c;
    return c;
}

int subtree_height(const ChemicalTree& t, int v, int from) {
    int h = 0;
    for (int w : t.neighbors(v))
        if (w != from) h = std::max(h, 1 + subtree_height(t, w, v));
    return h;
}

// Longest downward path starting at v with parent `from`; ties resolved
// toward the smaller neighbor id.
std::vector<int> longest_path_down(const ChemicalTree& t, int v, int from) {
    std::vector<int> path{v};
    int cur = v, prev = from;
    while (true) {
        int best = -1, besth = -1;
        for (int w : t.neighbors(cur)) {
            if (w == prev) continue;
            int h = subtree_height(t, w, cur);
            if (h > besth) {
                besth = h;
                best = w;
            }
        }
        if (best < 0) break;
        path.push_back(best);
        prev = cur;
        cur = best;
    }
    return path;
}

ChemicalTree rewire(const ChemicalTree& t, std::vector<Edge> remove, std::vector<Edge> add) {
    auto norm = [](Edge e) {
        if (e.first > e.second) std::swap(e.first, e.second);
        return e;
    };
    std::set<Edge> es;
    for (const auto& e : t.edges()) es.insert(e);
    for (Edge e : remove) {
        if (es.erase(norm(e)) != 1) throw NotApplicable("removed edge not present");
    }
    for (Edge e : add) {
        if (e.first == e.second || !es.insert(norm(e)).second)
            throw NotApplicable("added edge already present");
    }
    // DegreeExceeded is deliberately not caught: the checked
    // preconditions rule it out, so reaching it is a finding.
    try {
        return ChemicalTree(t.order(), {es.begin(), es.end()});
    } catch (const NotATree& ex) {
        throw NotApplicable(std::string("rewiring does not yield a tree: ") + ex.what());
    }
}

// ---- finders ----------------------------------------------------------

std::vector<int> vertices_of_degree(const ChemicalTree& t, int d) {
    std::vector<int> vs;
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) == d) vs.push_back(v);
    return vs;
}

// First pendent vertex (ascending id) whose neighbor satisfies pred.
template <class Pred>
int first_pendent_with(const ChemicalTree& t, Pred pred) {
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) == 1 && pred(t.neighbors(v)[0])) return v;
    return -1;
}

void find_merge_deg3(const ChemicalTree& t, std::vector<MoveSpec>& out) {
    std::vector<int> d3 = vertices_of_degree(t, 3);
    int m = static_cast<int>(d3.size());
    if (m < 3) return;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int l = j + 1; l < m; ++l) {
                int tri[3] = {d3[i], d3[j], d3[l]};
                for (int wi = 0; wi < 3; ++wi) {
                    int w = tri[wi];
                    int u = tri[(wi + 1) % 3], v = tri[(wi + 2) % 3];
                    if (u > v) std::swap(u, v);
                    int du = path_between(t, w, u)[1];
                    int dv = path_between(t, w, v)[1];
                    if (du != dv) continue;  // u, v must share w's exit direction
                    std::vector<int> rest;
                    for (int nb : t.neighbors(w))
                        if (nb != du) rest.push_back(nb);
                    out.push_back({MoveKind::MergeDeg3, {u, v, w, rest[0], rest[1]}});
                    break;
                }
            }
}

void find_contract_internal(const ChemicalTree& t, std::vector<MoveSpec>& out) {
    int u = first_pendent_with(t, [](int) { return true; });
    if (u < 0) return;
    int v = t.neighbors(u)[0];
    for (const auto& ip : path_report(t).internal_paths) {
        if (ip.length < 2) continue;
        std::vector<int> sites{u, v};
        for (int x : path_between(t, ip.a, ip.b)) sites.push_back(x);
        out.push_back({MoveKind::ContractInternal, std::move(sites)});
    }
}

void find_shorten_pendent(const ChemicalTree& t, std::vector<MoveSpec>& out) {
    int u = first_pendent_with(t, [&](int nb) { return t.degree(nb) >= 3; });
    if (u < 0) return;
    int v = t.neighbors(u)[0];
    for (const auto& pp : path_report(t).pendent_paths) {
        if (pp.length < 3) continue;
        std::vector<int> walk = path_between(t, pp.a, pp.b);  // leaf first
        out.push_back({MoveKind::ShortenPendent, {u, v, walk[0], walk[1], walk[2]}});
    }
}

void find_leaf_swap24(const ChemicalTree& t, std::vector<MoveSpec>& out) {
    for (int v : vertices_of_degree(t, 3))
        for (int u : t.neighbors(v)) {
            if (t.degree(u) != 2) continue;
            int tt = (t.neighbors(u)[0] == v) ? t.neighbors(u)[1] : t.neighbors(u)[0];
            for (int w : vertices_of_degree(t, 4)) {
                if (w == tt) continue;
                int p = -1;
                for (int nb : t.neighbors(w))
                    if (t.degree(nb) == 1) {
                        p = nb;
                        break;
                    }
                if (p < 0) continue;
                out.push_back({MoveKind::LeafSwap24, {v, u, tt, p, w}});
                break;
            }
        }
}

void find_deg3_detach(const ChemicalTree& t, std::vector<MoveSpec>& out) {
    for (int u : vertices_of_degree(t, 3)) {
        if (branching_neighbors(t, u) < 2) continue;
        bool emitted = false;
        for (int w : t.neighbors(u)) {
            if (t.degree(w) != 4 || emitted) continue;
            for (int v : t.neighbors(u)) {
                if (v == w || t.degree(v) < 3 || emitted) continue;
                std::vector<int> left = longest_path_down(t, v, u);
                std::vector<int> right = longest_path_down(t, w, u);
                int threes = 0;
                for (int x : left) threes += t.degree(x) == 3;
                bool right_clean = true;
                for (int x : right) right_clean = right_clean && t.degree(x) != 3;
                if (threes > 1 || !right_clean) continue;
                for (size_t i = 0; i + 1 < right.size(); ++i) {
                    int vk = right[i], vk1 = right[i + 1];
                    if (t.degree(vk) == 4 && branching_neighbors(t, vk) == 1 &&
                        t.degree(vk1) <= 2) {
                        out.push_back({MoveKind::Deg3Detach, {u, v, w, vk, vk1}});
                        emitted = true;
                        break;
                    }
                }
            }
        }
    }
}

void find_deg2_deg3_elim(const ChemicalTree& t, std::vector<MoveSpec>& out) {
    int v = -1;
    for (int x = 0; x < t.order() && v < 0; ++x)
        if (t.degree(x) == 2)
            for (int nb : t.neighbors(x))
                if (t.degree(nb) >= 3) {
                    v = x;
                    break;
                }
    if (v < 0) return;
    int w = -1, u = -1;
    for (int nb : t.neighbors(v))
        if (w < 0 && t.degree(nb) >= 3) w = nb;
    for (int nb : t.neighbors(v))
        if (nb != w) u = nb;
    for (int z : vertices_of_degree(t, 3)) {
        std::vector<int> pth = path_between(t, v, z);
        std::vector<char> on(t.order(), 0);
        for (int x : pth) on[x] = 1;
        std::vector<int> zs;
        for (int nb : t.neighbors(z))
            if (!on[nb]) zs.push_back(nb);
        if (zs.size() != 2) continue;  // z adjacent to the path twice: impossible in a tree
        out.push_back({MoveKind::Deg2Deg3Elim, {z, zs[0], zs[1], v, u, w}});
    }
}

void find_adj_deg3_split(const ChemicalTree& t, std::vector<MoveSpec>& out) {
    int u = first_pendent_with(t, [&](int nb) { return t.degree(nb) == 4; });
    if (u < 0) return;
    int v = t.neighbors(u)[0];
    std::vector<int> dist(t.order(), -1), q{u};
    dist[u] = 0;
    for (size_t i = 0; i < q.size(); ++i)
        for (int w : t.neighbors(q[i]))
            if (dist[w] < 0) {
                dist[w] = dist[q[i]] + 1;
                q.push_back(w);
            }
    for (int a : vertices_of_degree(t, 3))
        for (int b : t.neighbors(a)) {
            if (b < a || t.degree(b) != 3) continue;
            int z = dist[a] < dist[b] ? a : b;
            int w = (z == a) ? b : a;
            std::vector<int> ws;
            for (int nb : t.neighbors(w))
                if (nb != z) ws.push_back(nb);
            if (ws[0] == v || ws[1] == v) continue;  // cannot happen in a tree
            out.push_back({MoveKind::AdjDeg3Split, {w, z, ws[0], ws[1], u, v}});
        }
}

void find_deg3_between4s(const ChemicalTree& t, std::vector<MoveSpec>& out) {
    for (int z : vertices_of_degree(t, 3)) {
        std::vector<int> fours;
        for (int nb : t.neighbors(z))
            if (t.degree(nb) == 4) fours.push_back(nb);
        if (fours.size() < 2) continue;
        int x = fours[0], y = fours[1];
        std::vector<char> compz = component(t, z, {{z, x}, {z, y}});
        int u = first_pendent_with(
            t, [&](int nb) { return t.degree(nb) >= 3 && nb != z && !compz[nb]; });
        if (u < 0) continue;
        out.push_back({MoveKind::Deg3Between4s, {z, x, y, u, t.neighbors(u)[0]}});
    }
}

void find_cycle4_fix(const ChemicalTree& t, std::vector<MoveSpec>& out) {
    std::vector<int> d4 = vertices_of_degree(t, 4);
    for (size_t i = 0; i < d4.size(); ++i)
        for (size_t j = i + 1; j < d4.size(); ++j) {
            std::vector<int> pth = path_between(t, d4[i], d4[j]);
            if (pth.size() < 3) continue;
            bool all3 = true;
            for (size_t l = 1; l + 1 < pth.size(); ++l) all3 = all3 && t.degree(pth[l]) == 3;
            if (!all3) continue;
            int u0 = pth.front(), ur = pth.back();
            int u1 = pth[1], ur1 = pth[pth.size() - 2];
            std::vector<char> chain = component(t, u1, {{u0, u1}, {ur1, ur}});
            int v = first_pendent_with(
                t, [&](int nb) { return t.degree(nb) >= 3 && !chain[nb]; });
            if (v < 0) continue;
            out.push_back({MoveKind::Cycle4Fix, {u0, u1, ur1, ur, v, t.neighbors(v)[0]}});
        }
}

// ---- appliers ---------------------------------------------------------

ChemicalTree apply_merge_deg3(const ChemicalTree& t, const std::vector<int>& s) {
    require(s.size() == 5, "MergeDeg3 needs 5 sites");
    int u = s[0], v = s[1], w = s[2], w1 = s[3], w2 = s[4];
    require(t.degree(u) == 3 && t.degree(v) == 3 && t.degree(w) == 3, "three degree-3 vertices");
    require(u != v && u != w && v != w && w1 != w2, "distinct sites");
    require(adjacent(t, w, w1) && adjacent(t, w, w2), "w1,w2 neighbors of w");
    require(w1 != u && w1 != v && w2 != u && w2 != v, "w1,w2 off the u,v side");
    std::vector<char> comp = component(t, w, {{w, w1}, {w, w2}});
    require(comp[u] && comp[v], "u and v must stay attached to w");
    return rewire(t, {{w, w1}, {w, w2}}, {{u, w1}, {v, w2}});
}

ChemicalTree apply_contract_internal(const ChemicalTree& t, const std::vector<int>& s) {
    require(s.size() >= 5, "ContractInternal needs pendent pair and a path");
    int u = s[0], v = s[1];
    std::vector<int> p(s.begin() + 2, s.end());
    int r = static_cast<int>(p.size()) - 1;
    require(r >= 2, "internal path of length >= 2");
    require(t.degree(u) == 1 && adjacent(t, u, v), "u pendent on v");
    require(t.degree(p[0]) >= 3 && t.degree(p[r]) >= 3, "branching endpoints");
    for (int i = 1; i < r; ++i) require(t.degree(p[i]) == 2, "degree-2 interior");
    for (int i = 0; i < r; ++i) require(adjacent(t, p[i], p[i + 1]), "path edges");
    for (int x : p) require(x != u, "pendent vertex off the path");
    return rewire(t, {{u, v}, {p[0], p[1]}, {p[r - 1], p[r]}},
                  {{p[0], p[r]}, {u, p[1]}, {p[r - 1], v}});
}

ChemicalTree apply_shorten_pendent(const ChemicalTree& t, const std::vector<int>& s) {
    require(s.size() == 5, "ShortenPendent needs 5 sites");
    int u = s[0], v = s[1], p1 = s[2], p2 = s[3], p3 = s[4];
    require(t.degree(u) == 1 && adjacent(t, u, v) && t.degree(v) >= 3, "starlike pendent u on v");
    require(t.degree(p1) == 1 && t.degree(p2) == 2 && t.degree(p3) == 2,
            "pendent path of length >= 3");
    require(adjacent(t, p1, p2) && adjacent(t, p2, p3), "path head edges");
    require(u != p1, "two distinct pendent vertices");
    return rewire(t, {{u, v}, {p1, p2}, {p2, p3}}, {{u, p2}, {p2, v}, {p1, p3}});
}

ChemicalTree apply_leaf_swap24(const ChemicalTree& t, const std::vector<int>& s) {
    require(s.size() == 5, "LeafSwap24 needs 5 sites");
    int v = s[0], u = s[1], tt = s[2], p = s[3], w = s[4];
    require(t.degree(v) == 3 && t.degree(u) == 2 && t.degree(p) == 1 && t.degree(w) == 4,
            "degrees 3,2,1,4");
    require(adjacent(t, v, u) && adjacent(t, u, tt) && adjacent(t, p, w), "site edges");
    require(tt != v && tt != w, "far neighbor t distinct from v and w");
    return rewire(t, {{tt, u}, {u, v}, {p, w}}, {{tt, v}, {p, u}, {u, w}});
}

ChemicalTree apply_deg3_detach(const ChemicalTree& t, const std::vector<int>& s) {
    require(s.size() == 5, "Deg3Detach needs 5 sites");
    int u = s[0], v = s[1], w = s[2], vk = s[3], vk1 = s[4];
    require(t.degree(u) == 3 && t.degree(v) >= 3 && t.degree(w) == 4, "degrees");
    require(adjacent(t, u, v) && adjacent(t, u, w) && adjacent(t, vk, vk1), "site edges");
    require(t.degree(vk) == 4 && branching_neighbors(t, vk) == 1 && t.degree(vk1) <= 2,
            "splice edge shape");
    require(vk != u && vk1 != u, "splice edge away from u");
    std::vector<char> compu = component(t, u, {{u, v}, {u, w}});
    require(!compu[vk], "splice edge outside u's own subtree");
    return rewire(t, {{v, u}, {u, w}, {vk, vk1}}, {{v, w}, {vk, u}, {u, vk1}});
}

ChemicalTree apply_deg2_deg3_elim(const ChemicalTree& t, const std::vector<int>& s) {
    require(s.size() == 6, "Deg2Deg3Elim needs 6 sites");
    int z = s[0], z1 = s[1], z2 = s[2], v = s[3], u = s[4], w = s[5];
    require(t.degree(z) == 3 && t.degree(v) == 2, "degrees");
    require(adjacent(t, z, z1) && adjacent(t, z, z2) && z1 != z2, "z1,z2 neighbors of z");
    require(u != w && adjacent(t, v, u) && adjacent(t, v, w) && t.degree(w) >= 3,
            "v between u and w");
    std::vector<int> pth = path_between(t, v, z);
    for (int x : pth) require(x != z1 && x != z2, "z1,z2 off the v-z path");
    return rewire(t, {{z, z1}, {z, z2}}, {{v, z1}, {v, z2}});
}

ChemicalTree apply_adj_deg3_split(const ChemicalTree& t, const std::vector<int>& s) {
    require(s.size() == 6, "AdjDeg3Split needs 6 sites");
    int w = s[0], z = s[1], w1 = s[2], w2 = s[3], u = s[4], v = s[5];
    require(t.degree(w) == 3 && t.degree(z) == 3 && adjacent(t, w, z), "adjacent degree-3 pair");
    require(t.degree(u) == 1 && adjacent(t, u, v) && t.degree(v) == 4, "pendent u on degree-4 v");
    require(adjacent(t, w, w1) && adjacent(t, w, w2) && w1 != w2 && w1 != z && w2 != z,
            "w1,w2 the other neighbors of w");
    std::vector<int> pth = path_between(t, u, w);
    bool z_on = false;
    for (int x : pth) z_on = z_on || x == z;
    require(z_on, "z between u and w");
    return rewire(t, {{w1, w}, {w2, w}}, {{u, w1}, {u, w2}});
}

ChemicalTree apply_deg3_between4s(const ChemicalTree& t, const std::vector<int>& s) {
    require(s.size() == 5, "Deg3Between4s needs 5 sites");
    int z = s[0], x = s[1], y = s[2], u = s[3], v = s[4];
    require(t.degree(z) == 3 && t.degree(x) == 4 && t.degree(y) == 4, "degrees");
    require(adjacent(t, z, x) && adjacent(t, z, y) && x != y, "x,y neighbors of z");
    require(t.degree(u) == 1 && adjacent(t, u, v) && t.degree(v) >= 3 && v != z,
            "pendent u on branching v != z");
    std::vector<char> compz = component(t, z, {{z, x}, {z, y}});
    require(!compz[v], "v outside z's residual subtree");
    return rewire(t, {{x, z}, {z, y}, {u, v}}, {{x, y}, {u, z}, {z, v}});
}

ChemicalTree apply_cycle4_fix(const ChemicalTree& t, const std::vector<int>& s) {
    require(s.size() == 6, "Cycle4Fix needs 6 sites");
    int u0 = s[0], u1 = s[1], ur1 = s[2], ur = s[3], v = s[4], w = s[5];
    require(t.degree(u0) == 4 && t.degree(ur) == 4, "degree-4 path ends");
    require(t.degree(u1) == 3 && t.degree(ur1) == 3, "degree-3 interior");
    require(adjacent(t, u0, u1) && adjacent(t, ur1, ur), "boundary edges");
    require(t.degree(v) == 1 && adjacent(t, v, w) && t.degree(w) >= 3, "pendent v on branching w");
    std::vector<char> chain = component(t, u1, {{u0, u1}, {ur1, ur}});
    require(chain[ur1], "u1..ur1 connected interior");
    require(!chain[w], "w outside the interior chain");
    return rewire(t, {{u0, u1}, {ur1, ur}, {v, w}}, {{u0, ur}, {u1, v}, {ur1, w}});
}

}  // namespace

std::vector<MoveSpec> find_moves(const ChemicalTree& t, Family family) {
    std::vector<MoveSpec> out;
    if (family == Family::Segments) {
        find_merge_deg3(t, out);
        find_contract_internal(t, out);
        find_shorten_pendent(t, out);
        find_leaf_swap24(t, out);
        find_deg3_detach(t, out);
    } else {
        find_deg2_deg3_elim(t, out);
        find_contract_internal(t, out);
        find_shorten_pendent(t, out);
        find_adj_deg3_split(t, out);
        find_deg3_between4s(t, out);
        find_cycle4_fix(t, out);
    }
    std::sort(out.begin(), out.end(), [](const MoveSpec& a, const MoveSpec& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.sites < b.sites;
    });
    return out;
}

ChemicalTree apply_move(const ChemicalTree& t, const MoveSpec& m) {
    switch (m.kind) {
        case MoveKind::MergeDeg3: return apply_merge_deg3(t, m.sites);
        case MoveKind::ContractInternal: return apply_contract_internal(t, m.sites);
        case MoveKind::ShortenPendent: return apply_shorten_pendent(t, m.sites);
        case MoveKind::LeafSwap24: return apply_leaf_swap24(t, m.sites);
        case MoveKind::Deg3Detach: return apply_deg3_detach(t, m.sites);
        case MoveKind::Deg2Deg3Elim: return apply_deg2_deg3_elim(t, m.sites);
        case MoveKind::AdjDeg3Split: return apply_adj_deg3_split(t, m.sites);
        case MoveKind::Deg3Between4s: return apply_deg3_between4s(t, m.sites);
        case MoveKind::Cycle4Fix: return apply_cycle4_fix(t, m.sites);
    }
    throw NotApplicable("unknown move kind");
}

}  // namespace ct
