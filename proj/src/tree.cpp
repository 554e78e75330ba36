#include "ct/tree.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ct {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int v) {
        while (p[v] != v) v = p[v] = p[p[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

}  // namespace

ChemicalTree::ChemicalTree(int order, const std::vector<Edge>& edge_list) : n_(order) {
    if (n_ < 1) throw BadId("order must be positive, got " + std::to_string(n_));
    for (const auto& [u, v] : edge_list) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw BadId("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") out of range for order " + std::to_string(n_));
        if (u == v) throw NotATree("self-loop at vertex " + std::to_string(u));
    }
    if (static_cast<int>(edge_list.size()) != n_ - 1)
        throw NotATree("expected " + std::to_string(n_ - 1) + " edges, got " +
                       std::to_string(edge_list.size()));
    Dsu dsu(n_);
    for (const auto& [u, v] : edge_list)
        if (!dsu.unite(u, v)) throw NotATree("edge set contains a cycle or duplicate edge");
    // n-1 edges and acyclic => connected
    std::vector<int> deg(n_, 0);
    for (const auto& [u, v] : edge_list) {
        ++deg[u];
        ++deg[v];
    }
    for (int v = 0; v < n_; ++v)
        if (deg[v] > 4)
            throw DegreeExceeded("vertex " + std::to_string(v) + " has degree " +
                                 std::to_string(deg[v]));
    off_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) off_[v + 1] = off_[v] + deg[v];
    nbr_.resize(2 * (n_ - 1));
    std::vector<int> cur(off_.begin(), off_.end() - 1);
    for (const auto& [u, v] : edge_list) {
        nbr_[cur[u]++] = v;
        nbr_[cur[v]++] = u;
    }
    for (int v = 0; v < n_; ++v) std::sort(nbr_.begin() + off_[v], nbr_.begin() + off_[v + 1]);
}

std::vector<Edge> ChemicalTree::edges() const {
    std::vector<Edge> es;
    es.reserve(n_ - 1);
    for (int v = 0; v < n_; ++v)
        for (int w : neighbors(v))
            if (v < w) es.emplace_back(v, w);
    return es;
}

ChemicalTree build_tree(int order, const std::vector<Edge>& edges) {
    return ChemicalTree(order, edges);
}

DegreeCensus degree_census(const ChemicalTree& t) {
    DegreeCensus c;
    for (int v = 0; v < t.order(); ++v) {
        switch (t.degree(v)) {
            case 1: ++c.n1; break;
            case 2: ++c.n2; break;
            case 3: ++c.n3; break;
            case 4: ++c.n4; break;
            default: break;  // degree 0 of the 1-vertex tree
        }
    }
    return c;
}

long long zagreb_m1(const ChemicalTree& t) {
    long long s = 0;
    for (int v = 0; v < t.order(); ++v) s += static_cast<long long>(t.degree(v)) * t.degree(v);
    return s;
}

long long zagreb_m2(const ChemicalTree& t) {
    long long s = 0;
    for (int v = 0; v < t.order(); ++v)
        for (int w : t.neighbors(v))
            if (v < w) s += static_cast<long long>(t.degree(v)) * t.degree(w);
    return s;
}

int EdgeTypeMatrix::idx(int i, int j) {
    if (i > j) std::swap(i, j);
    // (i,j), 1 <= i <= j <= 4, packed row-major
    static constexpr int base[5] = {0, 0, 4, 7, 9};
    return base[i] + (j - i);
}

int EdgeTypeMatrix::total() const {
    int s = 0;
    for (int v : x_) s += v;
    return s;
}

long long EdgeTypeMatrix::m2() const {
    long long s = 0;
    for (int i = 1; i <= 4; ++i)
        for (int j = i; j <= 4; ++j) s += static_cast<long long>(i) * j * at(i, j);
    return s;
}

int EdgeTypeMatrix::incidence(int j) const {
    int s = 2 * at(j, j);
    for (int i = 1; i <= 4; ++i)
        if (i != j) s += at(i, j);
    return s;
}

EdgeTypeMatrix edge_type_counts(const ChemicalTree& t) {
    EdgeTypeMatrix m;
    for (int v = 0; v < t.order(); ++v)
        for (int w : t.neighbors(v))
            if (v < w) m.add(t.degree(v), t.degree(w), 1);
    return m;
}

PathReport path_report(const ChemicalTree& t) {
    PathReport r;
    const int n = t.order();
    DegreeCensus c = degree_census(t);
    r.branching_count = c.n3 + c.n4;
    if (n == 1) return r;  // k = 0 by convention
    for (int v = 0; v < n; ++v) {
        if (t.degree(v) == 2) continue;
        for (int w0 : t.neighbors(v)) {
            // walk through the degree-2 chain starting with edge v-w0
            int prev = v, w = w0, len = 1;
            while (t.degree(w) == 2) {
                int nxt = (t.neighbors(w)[0] == prev) ? t.neighbors(w)[1] : t.neighbors(w)[0];
                prev = w;
                w = nxt;
                ++len;
            }
            if (v > w) continue;  // each segment reported from its smaller end
            PathReport::Path p{v, w, len};
            r.segments.push_back(p);
            bool va = t.degree(v) >= 3, wb = t.degree(w) >= 3;
            if (va && wb)
                r.internal_paths.push_back(p);
            else if (va != wb)  // one branching end, one leaf end
                r.pendent_paths.push_back({va ? w : v, va ? v : w, len});
            // leaf-to-leaf segment (path graph): plain segment only
        }
    }
    r.segment_count = static_cast<int>(r.segments.size());
    return r;
}

namespace {

// Subtree sizes from root 0, iterative.
void subtree_sizes(const ChemicalTree& t, int root, std::vector<int>& parent,
                   std::vector<int>& order) {
    const int n = t.order();
    parent.assign(n, -1);
    order.clear();
    order.reserve(n);
    order.push_back(root);
    parent[root] = root;
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int w : t.neighbors(v))
            if (parent[w] == -1) {
                parent[w] = v;
                order.push_back(w);
            }
    }
    parent[root] = -1;
}

// Canonical depth sequence of the subtree rooted at v (parent p), root
// depth d; children subsequences in non-increasing lexicographic order.
std::string rooted_seq(const ChemicalTree& t, int v, int p, int d) {
    std::array<std::string, 4> kid;
    int k = 0;
    for (int w : t.neighbors(v))
        if (w != p) kid[k++] = rooted_seq(t, w, v, d + 1);
    std::sort(kid.begin(), kid.begin() + k, [](const std::string& a, const std::string& b) {
        return a > b;
    });
    std::string s(1, static_cast<char>(d));
    for (int i = 0; i < k; ++i) s += kid[i];
    return s;
}

std::vector<int> centroids(const ChemicalTree& t) {
    const int n = t.order();
    std::vector<int> parent, order, size(n, 1);
    subtree_sizes(t, 0, parent, order);
    for (int i = n - 1; i > 0; --i) size[parent[order[i]]] += size[order[i]];
    std::vector<int> cs;
    for (int v = 0; v < n; ++v) {
        int biggest = n - size[v];
        for (int w : t.neighbors(v))
            if (w != parent[v]) biggest = std::max(biggest, size[w]);
        if (2 * biggest <= n) cs.push_back(v);
    }
    return cs;  // one vertex, or two adjacent ones
}

}  // namespace

CanonicalCode canonical_code(const ChemicalTree& t) {
    const int n = t.order();
    if (n > 500) throw Error("canonical_code supports order <= 500");
    if (n == 1) return CanonicalCode{std::string("\x01", 1) + std::string(1, '\0')};
    std::vector<int> cs = centroids(t);
    if (cs.size() == 1) {
        return CanonicalCode{std::string(1, '\x01') + rooted_seq(t, cs[0], -1, 0)};
    }
    std::string a = rooted_seq(t, cs[0], cs[1], 0);
    std::string b = rooted_seq(t, cs[1], cs[0], 0);
    if (a < b) std::swap(a, b);
    return CanonicalCode{std::string(1, '\x02') + a + b};
}

int degree4_induced_components(const ChemicalTree& t) {
    const int n = t.order();
    Dsu dsu(n);
    int count = 0;
    for (int v = 0; v < n; ++v)
        if (t.degree(v) == 4) ++count;
    for (int v = 0; v < n; ++v) {
        if (t.degree(v) != 4) continue;
        for (int w : t.neighbors(v))
            if (v < w && t.degree(w) == 4 && dsu.unite(v, w)) --count;
    }
    return count;
}

namespace {

// Parse one 0-rooted depth sequence starting at pos; emits edges with
// vertex ids offset by base, returns vertex count.
int decode_seq(const std::string& bytes, size_t& pos, int base, std::vector<Edge>& edges) {
    if (pos >= bytes.size() || bytes[pos] != 0) throw InvalidCode("expected depth-0 root");
    std::vector<int> last_at_depth;  // vertex id most recently seen at each depth
    int count = 0;
    while (pos < bytes.size()) {
        int d = static_cast<unsigned char>(bytes[pos]);
        if (d == 0 && count > 0) break;  // next half starts
        if (d > static_cast<int>(last_at_depth.size()))
            throw InvalidCode("depth jump in canonical code");
        int id = base + count;
        if (d > 0) edges.emplace_back(last_at_depth[d - 1], id);
        if (d == static_cast<int>(last_at_depth.size()))
            last_at_depth.push_back(id);
        else {
            last_at_depth[d] = id;
            last_at_depth.resize(d + 1);
        }
        ++count;
        ++pos;
    }
    return count;
}

}  // namespace

ChemicalTree decode_canonical_code(const CanonicalCode& code) {
    const std::string& b = code.bytes;
    if (b.size() < 2) throw InvalidCode("canonical code too short");
    int tag = static_cast<unsigned char>(b[0]);
    std::vector<Edge> edges;
    size_t pos = 1;
    if (tag == 1) {
        int n = decode_seq(b, pos, 0, edges);
        if (pos != b.size()) throw InvalidCode("trailing bytes in canonical code");
        return ChemicalTree(n, edges);
    }
    if (tag == 2) {
        int n1 = decode_seq(b, pos, 0, edges);
        if (pos >= b.size()) throw InvalidCode("missing second half of bicentroid code");
        int n2 = decode_seq(b, pos, n1, edges);
        if (pos != b.size()) throw InvalidCode("trailing bytes in canonical code");
        if (n1 != n2) throw InvalidCode("bicentroid halves differ in size");
        edges.emplace_back(0, n1);  // the bicentroid edge
        return ChemicalTree(n1 + n2, edges);
    }
    throw InvalidCode("unknown canonical code tag");
}

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string h;
    h.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        h += digits[c >> 4];
        h += digits[c & 0xf];
    }
    return h;
}

CanonicalCode CanonicalCode::from_hex(const std::string& h) {
    if (h.size() % 2 != 0) throw InvalidCode("odd-length hex string");
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw InvalidCode("bad hex digit");
    };
    CanonicalCode code;
    code.bytes.reserve(h.size() / 2);
    for (size_t i = 0; i < h.size(); i += 2)
        code.bytes += static_cast<char>((nib(h[i]) << 4) | nib(h[i + 1]));
    return code;
}

ChemicalTree read_edge_list(std::istream& in) {
    int n;
    if (!(in >> n)) throw IoError("edge list: failed to read order");
    std::vector<Edge> edges;
    int u, v;
    while (in >> u) {
        if (!(in >> v)) throw IoError("edge list: dangling vertex id");
        edges.emplace_back(u, v);
    }
    if (in.fail() && !in.eof()) throw IoError("edge list: malformed edge line");
    return ChemicalTree(n, edges);
}

void write_edge_list(const ChemicalTree& t, std::ostream& out) {
    out << t.order() << "\n";
    for (const auto& [u, v] : t.edges()) out << u << " " << v << "\n";
}

}  // namespace ct
