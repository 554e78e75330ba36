#ifndef CT_TESTS_ORACLE_HPP
#define CT_TESTS_ORACLE_HPP

// Independent enumeration oracle: walks every Pruefer sequence, keeps
// the trees with maximum degree <= 4 and dedups isomorphism classes by
// canonical code. Test-only; algorithmically unrelated to the canonical
// level-sequence generator it is used to check.

#include <map>
#include <set>
#include <string>

#include "ct/tree.hpp"

namespace ct_oracle {

struct ClassSets {
    std::set<std::string> all;                 // canonical code hex
    std::map<int, std::set<std::string>> by_k; // per segment count
    std::map<int, std::set<std::string>> by_b; // per branching count
};

/// Exhaustive over all n^(n-2) labeled trees (count-pruned), n <= 10.
ClassSets enumerate_classes(int n, int threads = 0);

/// Decode a Pruefer sequence over [0, n) into edges.
std::vector<ct::Edge> prufer_decode(const std::vector<int>& seq, int n);

}  // namespace ct_oracle

#endif
