#pragma once

#include <string>
#include <vector>

#include "twobridge/arith.hpp"
#include "twobridge/smoothing.hpp"

namespace twobridge {

/// One essential state surface of a 2-bridge knot, keyed by its smoothing.
struct Surface {
    Fraction knot;              // canonical beta/alpha
    Expansion n;                // positive expansion of the diagram
    Smoothing eps;              // the allowable smoothing
    Expansion m;                // expansion generated by eps
    Int slope;                  // boundary slope N_[m]
    bool orientable;            // gamma = -1 iff true, else 0
    std::vector<Int> deltas;    // delta_i per twist
    Int weight;                 // (gamma + prod delta_i) / 2
};

struct PeripheralCurve {
    Int p;
    Int q;
};

/// Boundary slope 2*(sigma(m) - sigma(m0)), where sigma alternates the term
/// signs and m0 is the all-even expansion of the class representative of f
/// in (-1,1) with even numerator. The overall sign is a fixed convention;
/// published tables may differ by global negation.
Int boundary_slope(const Expansion& m, const Fraction& f);

/// True iff every term of m is even.
bool is_orientable(const Expansion& m);

/// Ideal-point count from the smoothing data: (gamma + prod delta_i)/2 with
/// delta_i = 1 on vertical twists and n_i - 1 + eps_{i-1} + eps_{i+1} on
/// horizontal ones. Throws IntegralityViolation if the halving is inexact.
Int weight_from_smoothing(const Expansion& n, const Smoothing& s);

/// The same count from the generated expansion: (gamma + prod(|m_i|-1))/2.
Int weight_from_expansion(const Expansion& m);

/// The per-twist delta values for an allowable smoothing.
std::vector<Int> deltas_from_smoothing(const Expansion& n, const Smoothing& s);

/// One Surface per allowable smoothing of f's diagram, in lexicographic
/// smoothing order. Accepts any representative of a knot fraction.
std::vector<Surface> build_surfaces(const Fraction& f);

/// The seminorm 1/2 * (-|p| + sum over surfaces of |p - N q| * prod(|m_i|-1)).
Int cgls_seminorm(const Fraction& f, const PeripheralCurve& c);

/// Same, reusing an already computed surface list for f.
Int cgls_seminorm(const std::vector<Surface>& surfaces, const PeripheralCurve& c);

/// Side-by-side comparison of the two enumeration routes: expansions
/// generated from allowable smoothings versus the brute-force |b_i| >= 2
/// depth-first search. Discrepancies are data, not errors.
struct CrosscheckReport {
    Fraction knot;
    std::set<Expansion> generated;
    std::set<Expansion> enumerated;
    std::vector<Expansion> only_generated;   // in generated, missed by the DFS
    std::vector<Expansion> only_enumerated;  // found by the DFS, not generated

    bool match() const { return only_generated.empty() && only_enumerated.empty(); }
};

CrosscheckReport crosscheck_expansions(const Fraction& f);

}  // namespace twobridge
