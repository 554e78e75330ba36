#include "ct/bounds.hpp"

#include <cassert>

namespace ct {

const char* family_name(Family f) { return f == Family::Segments ? "segments" : "branching"; }
const char* index_name(Index i) { return i == Index::M1 ? "m1" : "m2"; }

namespace {

// Exact division; the regime congruences make every division in the
// closed forms exact, so a remainder is a logic error.
long long exact_div3(long long v) {
    assert(v % 3 == 0);
    return v / 3;
}

int n3_for_k(int k) {
    switch (k % 3) {
        case 1: return 0;
        case 0: return 1;
        default: return 2;
    }
}

void require_feasible(Family family, int n, int p) {
    if (!feasible(family, n, p))
        throw Infeasible(std::string(family_name(family)) + " class (n=" + std::to_string(n) +
                         ", p=" + std::to_string(p) + ") is empty");
}

BoundResult path_value(int n, Index index) {
    BoundResult r;
    r.equality_class = "path";
    r.regime = "path";
    if (n == 1) {
        r.value = 0;
        r.equality_class = "degenerate";
        r.regime = "degenerate n=1";
    } else if (index == Index::M1) {
        r.value = 4LL * n - 6;  // also right at n=2
    } else {
        r.value = (n == 2) ? 1 : 4LL * n - 8;
    }
    return r;
}

}  // namespace

bool feasible(Family family, int n, int p) {
    if (n < 1 || p < 0) return false;
    if (family == Family::Segments) {
        if (p == 0) return n == 1;
        if (p == 1) return n >= 2;
        if (p == 2) return false;
        return p <= n - 1;
    }
    if (p == 0) return true;
    return 2 * p <= n - 2;
}

DegreeCensus segment_census(int n, int k, int n3) {
    if (k < 3 || k > n - 1)
        throw Infeasible("segment_census requires 3 <= k <= n-1");
    if (n3 < 0 || n3 > 2) throw Infeasible("segment_census requires n3 in {0,1,2}");
    if ((k - (2 * n3 + 1)) % 3 != 0)
        throw CongruenceViolation("k=" + std::to_string(k) + " incompatible with n3=" +
                                  std::to_string(n3) + " (k = 2*n3+1 mod 3 required)");
    DegreeCensus c;
    c.n2 = n - k - 1;
    c.n3 = n3;
    c.n1 = static_cast<int>(exact_div3(2 * k - n3 + 4));
    c.n4 = static_cast<int>(exact_div3(k - 2 * n3 - 1));
    if (c.n1 < 0 || c.n2 < 0 || c.n4 < 0) throw Infeasible("negative count in segment census");
    return c;
}

DegreeCensus branching_census(int n, int b) {
    require_feasible(Family::Branching, n, b);
    if (b < 1) throw Infeasible("branching_census requires b >= 1");
    DegreeCensus c;
    if (3 * b <= n - 3) {
        c = {2 * b + 2, n - 3 * b - 2, 0, b};
    } else {
        c = {n - b, 0, 3 * b - n + 2, n - 2 * b - 2};
    }
    return c;
}

DegreeCensus regime_census(Family family, int n, int p) {
    require_feasible(family, n, p);
    if (family == Family::Segments) {
        if (p == 0) return {};
        if (p == 1) return n == 2 ? DegreeCensus{2, 0, 0, 0} : DegreeCensus{2, n - 2, 0, 0};
        return segment_census(n, p, n3_for_k(p));
    }
    if (p == 0) return regime_census(Family::Segments, n, std::min(n - 1, 1));
    return branching_census(n, p);
}

namespace {

BoundResult segments_m1(int n, int k) {
    // M1 over CT_{n,k} equals 4n+2k-8-2*n3 and n3 is minimized at the
    // residue value, so the three branches share one expression.
    int c = n3_for_k(k);
    BoundResult r;
    r.value = 4LL * n + 2 * k - 8 - 2 * c;
    r.regime = "Thm2.2/k%3=" + std::to_string(k % 3);
    r.equality_class = "CT" + std::to_string(c);
    return r;
}

BoundResult segments_m2(int n, int k) {
    BoundResult r;
    int c = n3_for_k(k);
    r.equality_class = "CT" + std::to_string(c) + "'";
    if (k == 3) {
        // The generic k=0 (mod 3) formulas need k >= 6 (they assume a
        // degree-4 vertex); CT_{n,3} is the 3-leg spiders, where every
        // leg of length >= 2 contributes 4*len and a leg of length 1
        // contributes 3.
        r.value = 4LL * (n - 1) - std::max(0, 7 - n);
        r.regime = "delegated/k=3";
        return r;
    }
    if (k == 5) {
        if (n < 10) {
            r.value = 5LL * n - 9;
            r.regime = "Thm2.3/k=5/n<10";
        } else {
            r.value = 4LL * n + 1;
            r.regime = "Thm2.3/k=5/n>=10";
        }
        return r;
    }
    switch (k % 3) {
        case 0:
            if (3 * n < 5 * k + 3) {
                r.value = 6LL * n + 2 * k - 24;
                r.regime = "Thm2.3/k%3=0/3n<5k+3";
            } else if (3 * n == 5 * k + 3) {
                r.value = exact_div3(30LL * n - 14 * k - 87);
                r.regime = "Thm2.3/k%3=0/3n=5k+3";
            } else {
                r.value = exact_div3(12LL * n + 16 * k - 66);
                r.regime = "Thm2.3/k%3=0/3n>5k+3";
            }
            break;
        case 1:
            if (3 * n < 5 * k + 7) {
                r.value = 6LL * n + 2 * k - 22;
                r.regime = "Thm2.3/k%3=1/3n<5k+7";
            } else {
                r.value = exact_div3(12LL * n + 16 * k - 52);
                r.regime = "Thm2.3/k%3=1/3n>=5k+7";
            }
            break;
        default:
            if (3 * n <= 5 * k - 7) {
                r.value = 6LL * n + 2 * k - 26;
                r.regime = "Thm2.3/k%3=2/3n<=5k-7";
            } else if (3 * n <= 5 * k + 2) {
                r.value = exact_div3(15LL * n + 11 * k - 85);
                r.regime = "Thm2.3/k%3=2/5k-4<=3n<=5k+2";
            } else {
                r.value = exact_div3(12LL * n + 16 * k - 80);
                r.regime = "Thm2.3/k%3=2/3n>5k+2";
            }
            break;
    }
    return r;
}

BoundResult branching_m1(int n, int b) {
    BoundResult r;
    if (3 * b <= n - 3) {
        r.value = 4LL * n + 6 * b - 6;  // 2(2n+3b-3)
        r.regime = "Thm2.4/3b<=n-3";
        r.equality_class = "BT1";
    } else {
        r.value = 8LL * n - 6 * b - 14;  // 2(4n-3b-7)
        r.regime = "Thm2.4/3b>=n-2";
        r.equality_class = "BT2";
    }
    return r;
}

BoundResult branching_m2(int n, int b) {
    BoundResult r;
    if (3 * b <= n - 3) {
        r.equality_class = "BT1'";
        if (5 * b <= n - 4) {
            r.value = 4LL * n + 16 * b - 12;
            r.regime = "Thm2.5/5b<=n-4";
        } else {
            r.value = 6LL * n + 6 * b - 20;
            r.regime = "Thm2.5/n-4<5b,3b<=n-3";
        }
    } else {
        r.equality_class = "BT2'";
        if (7 * b < 3 * n - 4) {
            r.value = 10LL * n - 6 * b - 28;
            r.regime = "Thm2.5/n-2<=3b,7b<3n-4";
        } else {
            r.value = 16LL * n - 20 * b - 36;
            r.regime = "Thm2.5/7b>=3n-4";
        }
    }
    return r;
}

}  // namespace

BoundResult max_value(const ClassQuery& q) {
    require_feasible(q.family, q.n, q.p);
    if (q.family == Family::Segments) {
        if (q.p <= 1) return path_value(q.n, q.index);
        return q.index == Index::M1 ? segments_m1(q.n, q.p) : segments_m2(q.n, q.p);
    }
    if (q.p == 0) return path_value(q.n, q.index);
    if (2 * q.p == q.n - 2) {
        // every tree in the class has degrees in {1,3}; both indices are
        // constant over the whole class
        BoundResult r;
        r.value = q.index == Index::M1 ? 5LL * q.n - 8 : 6LL * q.n - 15;
        r.regime = "boundary b=n/2-1";
        r.equality_class = "all";
        return r;
    }
    return q.index == Index::M1 ? branching_m1(q.n, q.p) : branching_m2(q.n, q.p);
}

namespace {

EdgeTypeMatrix path_profile(int n) {
    EdgeTypeMatrix m;
    if (n == 2) {
        m.set(1, 1, 1);
    } else if (n >= 3) {
        m.set(1, 2, 2);
        m.set(2, 2, n - 3);
    }
    return m;
}

EdgeTypeMatrix segments_profile(int n, int k) {
    EdgeTypeMatrix m;
    if (k == 3) {
        int paths = std::min(3, n - 4);
        m.set(2, 3, paths);
        m.set(1, 3, 3 - paths);
        m.set(1, 2, paths);
        m.set(2, 2, std::max(0, n - 7));
        return m;
    }
    if (k == 5) {
        m.set(3, 3, 1);
        int paths = std::min(4, n - 6);
        m.set(2, 3, paths);
        m.set(1, 3, 4 - paths);
        m.set(1, 2, paths);
        m.set(2, 2, std::max(0, n - 10));
        return m;
    }
    switch (k % 3) {
        case 1:
            m.set(4, 4, static_cast<int>(exact_div3(k - 4)));
            if (3 * n < 5 * k + 7) {
                m.set(1, 2, n - k - 1);
                m.set(2, 4, n - k - 1);
                m.set(1, 4, static_cast<int>(exact_div3(5 * k - 3 * n + 7)));
            } else {
                m.set(1, 2, static_cast<int>(exact_div3(2 * k + 4)));
                m.set(2, 4, static_cast<int>(exact_div3(2 * k + 4)));
                m.set(2, 2, static_cast<int>(exact_div3(3 * n - 5 * k - 7)));
            }
            break;
        case 0:
            m.set(4, 4, static_cast<int>(exact_div3(k - 6)));
            m.set(3, 4, 1);
            if (3 * n < 5 * k + 3) {
                m.set(2, 4, n - k - 1);
                m.set(1, 2, n - k - 1);
                m.set(1, 3, 2);
                m.set(1, 4, static_cast<int>(exact_div3(5 * k - 3 * n)));
            } else if (3 * n == 5 * k + 3) {
                m.set(1, 2, n - k - 1);
                m.set(1, 3, 1);
                m.set(2, 3, 1);
                m.set(2, 4, n - k - 2);
            } else {
                m.set(1, 2, static_cast<int>(exact_div3(2 * k + 3)));
                m.set(2, 2, static_cast<int>(exact_div3(3 * n - 5 * k - 6)));
                m.set(2, 3, 2);
                m.set(2, 4, static_cast<int>(exact_div3(2 * k - 3)));
            }
            break;
        default:  // k = 2 (mod 3), k >= 8
            m.set(4, 4, static_cast<int>(exact_div3(k - 8)));
            m.set(3, 4, 2);
            if (3 * n <= 5 * k - 7) {
                m.set(1, 2, n - k - 1);
                m.set(2, 4, n - k - 1);
                m.set(1, 3, 4);
                m.set(1, 4, static_cast<int>(exact_div3(5 * k - 3 * n - 7)));
            } else if (3 * n <= 5 * k + 2) {
                m.set(1, 2, n - k - 1);
                m.set(2, 3, static_cast<int>(exact_div3(3 * n - 5 * k + 7)));
                m.set(2, 4, static_cast<int>(2 * exact_div3(k - 5)));
                m.set(1, 3, static_cast<int>(exact_div3(5 * k - 3 * n + 5)));
            } else {
                m.set(1, 2, static_cast<int>(exact_div3(2 * k + 2)));
                m.set(2, 2, static_cast<int>(exact_div3(3 * n - 5 * k - 5)));
                m.set(2, 3, 4);
                m.set(2, 4, static_cast<int>(2 * exact_div3(k - 5)));
            }
            break;
    }
    return m;
}

EdgeTypeMatrix branching_profile(int n, int b) {
    EdgeTypeMatrix m;
    if (2 * b == n - 2) {  // boundary: degrees 1 and 3 only
        m.set(1, 3, n - b);
        m.set(3, 3, n - 1 - (n - b));
        return m;
    }
    if (3 * b <= n - 3) {
        m.set(4, 4, b - 1);
        if (5 * b <= n - 4) {
            m.set(1, 2, 2 * b + 2);
            m.set(2, 4, 2 * b + 2);
            m.set(2, 2, n - 5 * b - 4);
        } else {
            m.set(1, 2, n - 3 * b - 2);
            m.set(2, 4, n - 3 * b - 2);
            m.set(1, 4, 5 * b - n + 4);
        }
    } else {
        m.set(4, 4, n - 2 * b - 3);
        if (7 * b < 3 * n - 4) {
            m.set(1, 4, 3 * n - 7 * b - 4);
            m.set(1, 3, 6 * b - 2 * n + 4);
            m.set(3, 4, 3 * b - n + 2);
        } else {
            m.set(1, 3, n - b);
            m.set(3, 4, 2 * n - 4 * b - 2);
            m.set(3, 3, 7 * b - 3 * n + 4);
        }
    }
    return m;
}

}  // namespace

EdgeTypeMatrix extremal_profile(Family family, int n, int p) {
    require_feasible(family, n, p);
    if (family == Family::Segments) {
        if (p == 0) return {};
        if (p == 1) return path_profile(n);
        return segments_profile(n, p);
    }
    if (p == 0) return path_profile(n);
    return branching_profile(n, p);
}

}  // namespace ct
