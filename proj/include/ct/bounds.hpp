#ifndef CT_BOUNDS_HPP
#define CT_BOUNDS_HPP

#include <string>

#include "ct/tree.hpp"

namespace ct {

enum class Family { Segments, Branching };
enum class Index { M1, M2 };

const char* family_name(Family f);
const char* index_name(Index i);

struct ClassQuery {
    Family family = Family::Segments;
    int n = 0;
    int p = 0;  // k for Segments, b for Branching
    Index index = Index::M1;
};

struct BoundResult {
    long long value = 0;
    std::string regime;          // which case of the dispatch fired
    std::string equality_class;  // CT0..CT2, CT0'..CT2', BT1/BT2, BT1'/BT2', path, all, degenerate
};

/// True iff the class CT_{n,k} (Segments) or CT*_{n,b} (Branching) is
/// non-empty.
bool feasible(Family family, int n, int p);

/// Degree census forced by (n, k, n3) for trees with k segments,
/// 3 <= k <= n-1 and n3 in {0,1,2}. Throws CongruenceViolation when
/// k != 2*n3+1 (mod 3), Infeasible when a count would be negative.
DegreeCensus segment_census(int n, int k, int n3);

/// Degree census of the extremal trees in CT*_{n,b}, b >= 1.
DegreeCensus branching_census(int n, int b);

/// Exact maximum of the index over the class, with the regime and the
/// characterized equality class.
BoundResult max_value(const ClassQuery& q);

/// Complete edge-type matrix of the M2-maximizers for the regime.
EdgeTypeMatrix extremal_profile(Family family, int n, int p);

/// Census of the maximizers for the regime (segments pick n3 from the
/// residue of k; branching dispatches on b vs (n-2)/3).
DegreeCensus regime_census(Family family, int n, int p);

}  // namespace ct

#endif
