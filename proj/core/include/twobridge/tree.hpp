#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "twobridge/arith.hpp"
#include "twobridge/smoothing.hpp"

namespace twobridge {

enum class SubtreeKind { Linear, Parasol };

/// Parasol shape by the smoothings of the neighboring twists
/// (sentinels count as horizontal):
///   C1  both neighbors horizontal         valence n_i
///   C2a previous vertical, next horizontal valence n_i + 1
///   C2b previous horizontal, next vertical valence n_i + 1
///   C3  both neighbors vertical            valence n_i + 2
enum class ParasolCase { None, C1, C2a, C2b, C3 };

struct TwistSubtree {
    std::size_t index = 0;  // 1-based twist position
    SubtreeKind kind = SubtreeKind::Parasol;
    ParasolCase pcase = ParasolCase::None;
    Int valence;
};

enum class AnchorSide { A, B };

/// One branch of a subtree's star. Branches are numbered 1..valence; a
/// linear subtree's two ends are its branches 1 and 2.
struct BranchRef {
    std::size_t twist = 0;
    Int branch;

    friend bool operator==(const BranchRef& a, const BranchRef& b) {
        return a.twist == b.twist && a.branch == b.branch;
    }
};

/// A declared coincidence between an end of a linear subtree and a branch
/// of another subtree. With segment anchors, end 1 is the end kept on the
/// origin's side and end 2 is the end laid through the anchor segment; with
/// a single anchor point, end 1 faces the previous twist and end 2 the next.
struct Overlap {
    std::size_t linear_twist = 0;
    int end = 0;  // 1 or 2
    BranchRef partner;
};

/// The assembled skeleton of the tree for one essential surface: anchor
/// vertices, one star of branches per twist, and the declared coincidences
/// between linear-tree ends and neighboring branches. Axis-end labels are
/// not modeled; the structure is everything downstream computations use.
struct BasicTree {
    Expansion n;
    Smoothing eps;
    bool single_point = false;  // true when one origin set is empty
    std::vector<AnchorSide> origin_side;
    std::vector<TwistSubtree> subtrees;
    std::vector<Overlap> overlaps;
};

/// Shape and valence of the subtree contributed by twist i (1-based).
/// Throws IndexOutOfRange.
TwistSubtree classify_twist_subtree(const Expansion& n, const Smoothing& s, std::size_t i);

/// Builds the basic tree: origins of odd twists start on side A and even
/// twists on side B, vertical twists flip sides, and the anchors collapse
/// to a single point when one side empties. Overlap declarations follow
/// fixed placement rules:
///   - segment anchors: a linear tree's kept end coincides with a branch of
///     the adjacent parasol (preferring the previous twist), and its
///     through end runs to the nearest subtree anchored on the opposite
///     side;
///   - single anchor point: each linear end coincides with the facing
///     branch of the adjacent parasol, and a boundary end with no neighbor
///     pairs with the facing end of the nearest other linear tree.
/// A branch entered from a higher-indexed twist is the partner's last
/// branch, from a lower-indexed twist its first.
BasicTree assemble_basic_tree(const Expansion& n, const Smoothing& s);

/// (gamma + prod(v_i - 1)) / 2, with gamma = -1 iff m is all even.
Int weight_from_tree(const BasicTree& t, const Expansion& m);

/// One angle multiplier per twist, 1 <= mult_i <= v_i - 1. Linear subtrees
/// force mult_i = 1.
struct AngleAssignment {
    std::vector<Int> multipliers;

    friend bool operator==(const AngleAssignment& a, const AngleAssignment& b) {
        return a.multipliers == b.multipliers;
    }
};

/// All angle assignments up to symmetry: the straight-angle tuple
/// (mult_i = v_i/2 everywhere, present only when every valence is even) is
/// removed as the reducible action, and of each reflection pair
/// mult <-> v - mult the lexicographically smaller tuple is kept. The
/// result is ordered lexicographically and its length equals the weight.
std::vector<AngleAssignment> enumerate_actions(const BasicTree& t, const Expansion& m);

/// Deterministic DOT rendering. Anchors are "PA", "O", "PB" (or "P");
/// branch vertices are "T{i}.b{j}.d{1,2}"; coincident branches share vertex
/// names; anchor labels list the subtrees attached there. Output is sorted
/// and byte-stable.
std::string export_dot(const BasicTree& t);

}  // namespace twobridge
