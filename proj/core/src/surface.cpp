#include "twobridge/surface.hpp"

#include <algorithm>

namespace twobridge {

namespace {

void require_generated_form(const Expansion& m) {
    if (m.terms.empty()) throw DomainError("expansion has no terms: " + m.str());
    for (const Int& b : m.terms) {
        if (abs(b) < 2)
            throw DomainError("expansion term |" + b.str() + "| < 2 in " + m.str());
    }
}

// Alternating sign sum sigma([b1,...,bj]) = sum_i (-1)^{i+1} sign(b_i).
Int sigma(const Expansion& m) {
    Int total = 0;
    int parity = 1;
    for (const Int& b : m.terms) {
        total += parity * (b > 0 ? 1 : -1);
        parity = -parity;
    }
    return total;
}

// The representative of f's class inside (-1,1) with even numerator.
// For odd alpha exactly one of beta, beta - alpha is even.
Fraction even_numerator_representative(const Fraction& f) {
    Fraction k = normalize_knot_fraction(f);
    if (k.num() % 2 == 0) return k;
    return k - Fraction(1, 1);
}

Int halve_with_gamma(const Int& product, bool orientable, const std::string& context) {
    Int total = product + (orientable ? Int(-1) : Int(0));
    if (total % 2 != 0)
        throw IntegralityViolation("odd ideal-point count before halving in " + context);
    return total / 2;
}

}  // namespace

Int boundary_slope(const Expansion& m, const Fraction& f) {
    require_generated_form(m);
    Fraction value = cf_value(m);
    if (!same_knot_class(value, normalize_knot_fraction(f)))
        throw DomainError("expansion " + m.str() + " does not represent " + f.str());
    Expansion base = even_expansion(even_numerator_representative(f));
    return 2 * (sigma(m) - sigma(base));
}

bool is_orientable(const Expansion& m) {
    require_generated_form(m);
    return std::all_of(m.terms.begin(), m.terms.end(),
                       [](const Int& b) { return b % 2 == 0; });
}

std::vector<Int> deltas_from_smoothing(const Expansion& n, const Smoothing& s) {
    if (!is_allowable(n, s))
        throw NotAllowable("smoothing " + s.str() + " is not allowable for " + n.str());
    std::vector<Int> deltas;
    deltas.reserve(n.length());
    for (std::size_t i = 1; i <= n.length(); ++i) {
        if (s.at(i) == 1) {
            deltas.push_back(1);
        } else {
            deltas.push_back(n.terms[i - 1] - 1 + s.at(i - 1) + s.at(i + 1));
        }
    }
    return deltas;
}

Int weight_from_smoothing(const Expansion& n, const Smoothing& s) {
    std::vector<Int> deltas = deltas_from_smoothing(n, s);
    Int product = 1;
    for (const Int& d : deltas) product *= d;
    bool orientable = is_orientable(generate_expansion(n, s));
    return halve_with_gamma(product, orientable, "weight_from_smoothing(" + s.str() + ")");
}

Int weight_from_expansion(const Expansion& m) {
    require_generated_form(m);
    Int product = 1;
    for (const Int& b : m.terms) product *= abs(b) - 1;
    return halve_with_gamma(product, is_orientable(m), "weight_from_expansion(" + m.str() + ")");
}

std::vector<Surface> build_surfaces(const Fraction& f) {
    Fraction knot = normalize_knot_fraction(f);
    Expansion n = positive_expansion(knot);
    std::vector<Surface> out;
    for (Smoothing& s : enumerate_allowable(n)) {
        Surface surf;
        surf.knot = knot;
        surf.n = n;
        surf.m = generate_expansion(n, s);
        surf.slope = boundary_slope(surf.m, knot);
        surf.orientable = is_orientable(surf.m);
        surf.deltas = deltas_from_smoothing(n, s);
        Int product = 1;
        for (const Int& d : surf.deltas) product *= d;
        surf.weight = halve_with_gamma(product, surf.orientable,
                                       "build_surfaces(" + knot.str() + ", " + s.str() + ")");
        surf.eps = std::move(s);
        out.push_back(std::move(surf));
    }
    return out;
}

Int cgls_seminorm(const std::vector<Surface>& surfaces, const PeripheralCurve& c) {
    Int total = -abs(c.p);
    for (const Surface& s : surfaces) {
        Int product = 1;
        for (const Int& b : s.m.terms) product *= abs(b) - 1;
        total += abs(c.p - s.slope * c.q) * product;
    }
    if (total % 2 != 0) throw IntegralityViolation("odd seminorm total before halving");
    return total / 2;
}

Int cgls_seminorm(const Fraction& f, const PeripheralCurve& c) {
    return cgls_seminorm(build_surfaces(f), c);
}

CrosscheckReport crosscheck_expansions(const Fraction& f) {
    CrosscheckReport report;
    report.knot = normalize_knot_fraction(f);
    Expansion n = positive_expansion(report.knot);
    for (const Smoothing& s : enumerate_allowable(n))
        report.generated.insert(generate_expansion(n, s));
    report.enumerated = enumerate_ht_expansions(report.knot, default_search_depth(n));
    std::set_difference(report.generated.begin(), report.generated.end(),
                        report.enumerated.begin(), report.enumerated.end(),
                        std::back_inserter(report.only_generated));
    std::set_difference(report.enumerated.begin(), report.enumerated.end(),
                        report.generated.begin(), report.generated.end(),
                        std::back_inserter(report.only_enumerated));
    return report;
}

}  // namespace twobridge
