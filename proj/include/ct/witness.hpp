#ifndef CT_WITNESS_HPP
#define CT_WITNESS_HPP

#include <string>
#include <vector>

#include "ct/bounds.hpp"
#include "ct/tree.hpp"

namespace ct {

struct MembershipVerdict {
    bool member = true;
    std::vector<std::string> failed_conditions;  // empty iff member
};

/// Deterministic tree attaining the maximum of both indices over the
/// class; its census, edge profile and membership match the regime.
ChemicalTree build_witness(Family family, int n, int p);

/// Equality-class membership test. For M1 this is the degree-sequence
/// check of the unprimed class; for M2 it also evaluates the structural
/// bullets of the primed class. All conditions are evaluated even after
/// the first failure.
MembershipVerdict class_membership(const ChemicalTree& t, Family family, int n, int p,
                                   Index index);

}  // namespace ct

#endif
