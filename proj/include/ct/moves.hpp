#ifndef CT_MOVES_HPP
#define CT_MOVES_HPP

#include <string>
#include <vector>

#include "ct/bounds.hpp"
#include "ct/tree.hpp"

namespace ct {

/// Local rewirings with proven index-delta signs. Site layout per kind:
///   MergeDeg3       {u, v, w, w1, w2}        w loses w1,w2 to u,v
///   ContractInternal{u, v, p0, p1, ..., pr}  internal path p0..pr, pendent u on v
///   ShortenPendent  {u, v, p1, p2, p3}       long pendent path head p1p2p3, starlike u on v
///   LeafSwap24      {v, u, t, p, w}          deg3 v - deg2 u (other nbr t), pendent p on deg4 w
///   Deg3Detach      {u, v, w, vk, vk1}       deg3 u between branchings v,w; splice into vk-vk1
///   Deg2Deg3Elim    {z, z1, z2, v, u, w}     deg3 z donates z1,z2 to deg2 v (nbrs u,w)
///   AdjDeg3Split    {w, z, w1, w2, u, v}     adjacent deg3 pair, far one w; pendent u on deg4 v
///   Deg3Between4s   {z, x, y, u, v}          deg3 z between deg4 x,y; pendent u on branching v
///   Cycle4Fix       {u0, u1, ur1, ur, v, w}  deg4 ends, all-deg3 interior; pendent v on w
enum class MoveKind {
    MergeDeg3,
    ContractInternal,
    ShortenPendent,
    LeafSwap24,
    Deg3Detach,
    Deg2Deg3Elim,
    AdjDeg3Split,
    Deg3Between4s,
    Cycle4Fix,
};

const char* move_kind_name(MoveKind k);

struct MoveSpec {
    MoveKind kind = MoveKind::MergeDeg3;
    std::vector<int> sites;
    bool operator==(const MoveSpec&) const = default;
};

/// All applicable rewrites of the family's lemma set, in canonical
/// (kind, sites) order. Empty iff the tree satisfies every structural
/// conclusion of that family's maximizer lemmas.
///   Segments:  MergeDeg3, ContractInternal, ShortenPendent, LeafSwap24, Deg3Detach
///   Branching: Deg2Deg3Elim, ContractInternal, ShortenPendent, AdjDeg3Split,
///              Deg3Between4s, Cycle4Fix
std::vector<MoveSpec> find_moves(const ChemicalTree& t, Family family);

/// Performs the rewrite; the result has the same order, preserves the
/// family parameter (k for segment kinds, b for branching kinds) and
/// strictly increases M2 (MergeDeg3 and Deg2Deg3Elim also increase M1).
/// Throws NotApplicable when the sites do not satisfy the precondition.
ChemicalTree apply_move(const ChemicalTree& t, const MoveSpec& m);

}  // namespace ct

#endif
