#include "twobridge/tree.hpp"

#include "twobridge/surface.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

namespace twobridge {

TwistSubtree classify_twist_subtree(const Expansion& n, const Smoothing& s, std::size_t i) {
    if (!is_allowable(n, s))
        throw NotAllowable("smoothing " + s.str() + " is not allowable for " + n.str());
    if (i < 1 || i > n.length())
        throw IndexOutOfRange("twist index " + std::to_string(i) + " outside 1.." +
                              std::to_string(n.length()));
    TwistSubtree t;
    t.index = i;
    if (s.at(i) == 1) {
        t.kind = SubtreeKind::Linear;
        t.pcase = ParasolCase::None;
        t.valence = 2;
        return t;
    }
    t.kind = SubtreeKind::Parasol;
    const int prev = s.at(i - 1);
    const int next = s.at(i + 1);
    if (prev == 0 && next == 0) {
        t.pcase = ParasolCase::C1;
        t.valence = n.terms[i - 1];
    } else if (prev == 1 && next == 0) {
        t.pcase = ParasolCase::C2a;
        t.valence = n.terms[i - 1] + 1;
    } else if (prev == 0 && next == 1) {
        t.pcase = ParasolCase::C2b;
        t.valence = n.terms[i - 1] + 1;
    } else {
        t.pcase = ParasolCase::C3;
        t.valence = n.terms[i - 1] + 2;
    }
    return t;
}

namespace {

// Nearest twist to i among those satisfying pred, ties to the smaller index.
template <typename Pred>
std::optional<std::size_t> nearest_twist(std::size_t k, std::size_t i, Pred pred) {
    std::optional<std::size_t> best;
    std::size_t best_dist = 0;
    for (std::size_t j = 1; j <= k; ++j) {
        if (j == i || !pred(j)) continue;
        std::size_t dist = j > i ? j - i : i - j;
        if (!best || dist < best_dist) {
            best = j;
            best_dist = dist;
        }
    }
    return best;
}

// Branch of subtree j met when approaching from twist i: the first branch
// from below, the last from above.
BranchRef approach_branch(const std::vector<TwistSubtree>& subtrees, std::size_t i,
                          std::size_t j) {
    BranchRef ref;
    ref.twist = j;
    ref.branch = i < j ? Int(1) : subtrees[j - 1].valence;
    return ref;
}

}  // namespace

BasicTree assemble_basic_tree(const Expansion& n, const Smoothing& s) {
    if (!is_allowable(n, s))
        throw NotAllowable("smoothing " + s.str() + " is not allowable for " + n.str());
    const std::size_t k = n.length();

    BasicTree tree;
    tree.n = n;
    tree.eps = s;
    tree.origin_side.reserve(k);
    tree.subtrees.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) {
        bool side_a = (i % 2 == 1);
        if (s.at(i) == 1) side_a = !side_a;  // vertical twists move across
        tree.origin_side.push_back(side_a ? AnchorSide::A : AnchorSide::B);
        tree.subtrees.push_back(classify_twist_subtree(n, s, i));
    }
    tree.single_point =
        std::all_of(tree.origin_side.begin(), tree.origin_side.end(),
                    [&](AnchorSide side) { return side == tree.origin_side.front(); });

    for (std::size_t i = 1; i <= k; ++i) {
        if (s.at(i) != 1) continue;
        if (tree.single_point) {
            // End 1 faces the previous twist, end 2 the next. A boundary end
            // with no neighbor pairs with the nearest other linear tree.
            for (int end = 1; end <= 2; ++end) {
                std::size_t j = end == 1 ? i - 1 : i + 1;
                if (j >= 1 && j <= k) {
                    tree.overlaps.push_back({i, end, approach_branch(tree.subtrees, i, j)});
                    continue;
                }
                auto other = nearest_twist(k, i, [&](std::size_t cand) { return s.at(cand) == 1; });
                if (other) {
                    // Facing end of the partner: its end 2 when below i, else end 1.
                    BranchRef ref;
                    ref.twist = *other;
                    ref.branch = *other < i ? Int(2) : Int(1);
                    tree.overlaps.push_back({i, end, ref});
                }
            }
        } else {
            AnchorSide side = tree.origin_side[i - 1];
            // End 1 stays on this side and coincides with a branch of the
            // adjacent parasol, preferring the previous twist.
            std::size_t local = (i > 1) ? i - 1 : i + 1;
            tree.overlaps.push_back({i, 1, approach_branch(tree.subtrees, i, local)});
            // End 2 is laid through the anchor segment toward the nearest
            // subtree anchored on the opposite side.
            auto across = nearest_twist(
                k, i, [&](std::size_t cand) { return tree.origin_side[cand - 1] != side; });
            if (across) {
                if (tree.subtrees[*across - 1].kind == SubtreeKind::Linear) {
                    tree.overlaps.push_back({i, 2, BranchRef{*across, Int(2)}});
                } else {
                    tree.overlaps.push_back({i, 2, approach_branch(tree.subtrees, i, *across)});
                }
            }
        }
    }
    return tree;
}

Int weight_from_tree(const BasicTree& t, const Expansion& m) {
    Int product = 1;
    for (const TwistSubtree& sub : t.subtrees) product *= sub.valence - 1;
    bool orientable = is_orientable(m);
    Int total = product + (orientable ? Int(-1) : Int(0));
    if (total % 2 != 0)
        throw IntegralityViolation("odd action count before halving in weight_from_tree");
    return total / 2;
}

std::vector<AngleAssignment> enumerate_actions(const BasicTree& t, const Expansion& m) {
    const std::size_t k = t.subtrees.size();
    bool all_even = true;
    for (const TwistSubtree& sub : t.subtrees) {
        if (sub.valence % 2 != 0) all_even = false;
    }
    // The straight-angle action exists exactly when the surface is
    // orientable; disagreement means the tree and expansion are inconsistent.
    if (all_even != is_orientable(m))
        throw IntegralityViolation("valence parity disagrees with expansion parity for " +
                                   m.str());

    std::vector<AngleAssignment> out;
    std::vector<Int> mult(k, Int(1));
    Int fixed_points = 0;
    while (true) {
        // Compare against the reflection v - mult lexicographically.
        int cmp = 0;
        for (std::size_t i = 0; i < k; ++i) {
            Int reflected = t.subtrees[i].valence - mult[i];
            if (mult[i] != reflected) {
                cmp = mult[i] < reflected ? -1 : 1;
                break;
            }
        }
        if (cmp == 0) ++fixed_points;
        if (cmp < 0) out.push_back(AngleAssignment{mult});

        // Odometer step over 1..v_i - 1, last twist fastest.
        std::size_t pos = k;
        while (pos > 0) {
            if (mult[pos - 1] < t.subtrees[pos - 1].valence - 1) {
                ++mult[pos - 1];
                break;
            }
            mult[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) break;
    }
    if (fixed_points != (all_even ? 1 : 0))
        throw IntegralityViolation("reflection involution has an unexpected fixed point");
    return out;
}

namespace {

std::size_t to_size(const Int& v) {
    if (v < 0 || v > Int(std::numeric_limits<std::size_t>::max() / 4))
        throw DomainError("valence too large to materialize: " + v.str());
    return static_cast<std::size_t>(v);
}

struct SlotKey {
    std::size_t twist;
    std::size_t branch;

    friend bool operator<(const SlotKey& a, const SlotKey& b) {
        return std::tie(a.twist, a.branch) < std::tie(b.twist, b.branch);
    }
    friend bool operator==(const SlotKey& a, const SlotKey& b) {
        return a.twist == b.twist && a.branch == b.branch;
    }
};

struct SlotUnion {
    std::map<SlotKey, SlotKey> parent;

    SlotKey find(SlotKey x) {
        auto it = parent.find(x);
        if (it == parent.end() || it->second == x) return x;
        SlotKey root = find(it->second);
        parent[x] = root;
        return root;
    }

    void unite(SlotKey a, SlotKey b) {
        SlotKey ra = find(a), rb = find(b);
        if (!(ra == rb)) parent[ra] = rb;
    }
};

std::string case_label(ParasolCase c) {
    switch (c) {
        case ParasolCase::C1: return "C1";
        case ParasolCase::C2a: return "C2a";
        case ParasolCase::C2b: return "C2b";
        case ParasolCase::C3: return "C3";
        default: return "";
    }
}

}  // namespace

std::string export_dot(const BasicTree& t) {
    const std::size_t k = t.subtrees.size();
    auto anchor_name = [&](std::size_t i) -> std::string {
        if (t.single_point) return "P";
        return t.origin_side[i - 1] == AnchorSide::A ? "PA" : "PB";
    };

    // Branch slots that materialize as drawn chains. With segment anchors a
    // linear tree's end 2 is the anchor segment itself, so only end 1 owns
    // a chain.
    std::vector<SlotKey> slots;
    for (std::size_t i = 1; i <= k; ++i) {
        const TwistSubtree& sub = t.subtrees[i - 1];
        std::size_t branches =
            (sub.kind == SubtreeKind::Linear && !t.single_point) ? 1 : to_size(sub.valence);
        for (std::size_t b = 1; b <= branches; ++b) slots.push_back({i, b});
    }

    SlotUnion uf;
    for (const Overlap& o : t.overlaps) {
        if (!t.single_point && o.end == 2) continue;  // through end: no drawn chain
        uf.unite({o.linear_twist, static_cast<std::size_t>(o.end)},
                 {o.partner.twist, to_size(o.partner.branch)});
    }

    // Pick a canonical representative per class: a parasol branch when one
    // is present, otherwise the smallest slot.
    std::map<SlotKey, SlotKey> rep;
    for (const SlotKey& slot : slots) {
        SlotKey root = uf.find(slot);
        auto it = rep.find(root);
        bool parasol = t.subtrees[slot.twist - 1].kind == SubtreeKind::Parasol;
        if (it == rep.end()) {
            rep[root] = slot;
        } else {
            bool incumbent_parasol = t.subtrees[it->second.twist - 1].kind == SubtreeKind::Parasol;
            if ((parasol && !incumbent_parasol) ||
                (parasol == incumbent_parasol && slot < it->second))
                it->second = slot;
        }
    }

    std::map<std::string, std::string> nodes;  // name -> label
    std::set<std::pair<std::string, std::string>> edges;

    auto add_edge = [&](std::string a, std::string b) {
        if (b < a) std::swap(a, b);
        edges.insert({std::move(a), std::move(b)});
    };

    if (t.single_point) {
        nodes["P"] = "P";
    } else {
        nodes["PA"] = "PA";
        nodes["O"] = "O";
        nodes["PB"] = "PB";
        add_edge("PA", "O");
        add_edge("O", "PB");
    }
    for (std::size_t i = 1; i <= k; ++i) {
        const TwistSubtree& sub = t.subtrees[i - 1];
        std::string desc = "T" + std::to_string(i) + ":" +
                           (sub.kind == SubtreeKind::Linear ? "linear" : "parasol") +
                           (sub.pcase == ParasolCase::None ? "" : "(" + case_label(sub.pcase) + ")") +
                           " v=" + sub.valence.str();
        std::string& label = nodes[anchor_name(i)];
        label += " | " + desc;
    }

    std::set<SlotKey> emitted;
    for (const SlotKey& slot : slots) {
        SlotKey chain = rep[uf.find(slot)];
        if (!emitted.insert(chain).second) continue;
        std::string base = "T" + std::to_string(chain.twist) + ".b" + std::to_string(chain.branch);
        std::string d1 = base + ".d1";
        std::string d2 = base + ".d2";
        nodes[d1] = d1;
        nodes[d2] = d2;
        add_edge(anchor_name(chain.twist), d1);
        add_edge(d1, d2);
    }

    std::ostringstream out;
    out << "graph basic_tree {\n";
    for (const auto& [name, label] : nodes)
        out << "  \"" << name << "\" [label=\"" << label << "\"];\n";
    for (const auto& [a, b] : edges) out << "  \"" << a << "\" -- \"" << b << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace twobridge
