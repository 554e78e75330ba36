#include "oracle.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace ct_oracle {

std::vector<ct::Edge> prufer_decode(const std::vector<int>& seq, int n) {
    std::vector<ct::Edge> edges;
    if (n == 1) return edges;
    std::vector<int> deg(n, 1);
    for (int a : seq) ++deg[a];
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int a : seq) {
        edges.emplace_back(leaf, a);
        if (--deg[a] == 1 && a < ptr) {
            leaf = a;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return edges;
}

namespace {

void record(const std::vector<int>& seq, int n, ClassSets& out) {
    ct::ChemicalTree t(n, prufer_decode(seq, n));
    std::string hex = ct::canonical_code(t).hex();
    ct::DegreeCensus c = ct::degree_census(t);
    int k = (n >= 2) ? c.n1 + c.n3 + c.n4 - 1 : 0;
    int b = c.n3 + c.n4;
    out.all.insert(hex);
    out.by_k[k].insert(hex);
    out.by_b[b].insert(hex);
}

// Enumerate sequences with every symbol used at most 3 times (degree <= 4),
// positions [pos, len), given symbol usage counts.
void gen(std::vector<int>& seq, int pos, int n, std::vector<int>& used, ClassSets& out) {
    if (pos == static_cast<int>(seq.size())) {
        record(seq, n, out);
        return;
    }
    for (int s = 0; s < n; ++s) {
        if (used[s] == 3) continue;
        seq[pos] = s;
        ++used[s];
        gen(seq, pos + 1, n, used, out);
        --used[s];
    }
}

void merge(ClassSets& into, const ClassSets& from) {
    into.all.insert(from.all.begin(), from.all.end());
    for (const auto& [k, set] : from.by_k) into.by_k[k].insert(set.begin(), set.end());
    for (const auto& [b, set] : from.by_b) into.by_b[b].insert(set.begin(), set.end());
}

}  // namespace

ClassSets enumerate_classes(int n, int threads) {
    ClassSets out;
    if (n > 10) throw ct::Error("oracle is exhaustive; n <= 10 only");
    if (n <= 2) {
        record({}, n, out);
        return out;
    }
    int len = n - 2;
    if (threads == 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, n));
    if (threads == 1 || n < 8) {
        std::vector<int> seq(len), used(n, 0);
        gen(seq, 0, n, used, out);
        return out;
    }
    // partition on the first symbol
    std::vector<ClassSets> parts(n);
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            while (true) {
                int s = next.fetch_add(1);
                if (s >= n) return;
                std::vector<int> seq(len), used(n, 0);
                seq[0] = s;
                used[s] = 1;
                gen(seq, 1, n, used, parts[s]);
            }
        });
    for (auto& th : pool) th.join();
    for (const auto& p : parts) merge(out, p);
    return out;
}

}  // namespace ct_oracle
