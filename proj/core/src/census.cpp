#include "twobridge/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <thread>
#include <utility>

#include "twobridge/smoothing.hpp"
#include "twobridge/surface.hpp"
#include "twobridge/tree.hpp"

namespace twobridge {

namespace {

struct SlopeTerm {
    std::int64_t slope;
    std::int64_t product;
};

// Exercising the seminorm laws across a 41x41 grid per knot is only
// tractable in machine integers. The terms are converted once with a bound
// check; the bound keeps |p - N q| * product summed over surfaces far below
// the int64 range for every lambda and u+v the checks use.
constexpr std::int64_t kTermLimit = 1'000'000;

bool to_terms(const std::vector<Surface>& surfaces, std::vector<SlopeTerm>& terms) {
    terms.clear();
    terms.reserve(surfaces.size());
    for (const Surface& s : surfaces) {
        Int product = 1;
        for (const Int& b : s.m.terms) product *= abs(b) - 1;
        if (abs(s.slope) > kTermLimit || product > kTermLimit) return false;
        terms.push_back({s.slope.convert_to<std::int64_t>(), product.convert_to<std::int64_t>()});
    }
    return true;
}

std::int64_t seminorm_i64(const std::vector<SlopeTerm>& terms, std::int64_t p, std::int64_t q,
                          bool& even) {
    std::int64_t total = -std::llabs(p);
    for (const SlopeTerm& t : terms) total += std::llabs(p - t.slope * q) * t.product;
    even = (total % 2) == 0;
    return total / 2;
}

std::vector<Int> weight_multiset(const std::vector<Surface>& surfaces) {
    std::vector<Int> out;
    out.reserve(surfaces.size());
    for (const Surface& s : surfaces) out.push_back(s.weight);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> slope_multiset(const std::vector<Surface>& surfaces, bool negate) {
    std::vector<Int> out;
    out.reserve(surfaces.size());
    for (const Surface& s : surfaces) out.push_back(negate ? Int(-s.slope) : s.slope);
    std::sort(out.begin(), out.end());
    return out;
}

std::string int_list(const std::vector<Int>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += values[i].str();
    }
    return out + "}";
}

constexpr std::array<std::pair<std::int64_t, std::int64_t>, 12> kTriangleSample = {{
    {1, 0}, {0, 1}, {1, 1}, {-1, 2}, {3, -2}, {5, 7},
    {-4, -3}, {2, -5}, {7, 1}, {-6, 5}, {20, 20}, {-20, 19},
}};

void check_seminorm_laws(const Fraction& knot, const std::vector<Surface>& surfaces,
                         const CensusOptions& options, CensusReport& report) {
    auto bad = [&](const std::string& invariant, std::string detail) {
        report.violations.push_back({knot, invariant, std::move(detail)});
    };
    std::vector<SlopeTerm> terms;
    if (!to_terms(surfaces, terms)) {
        // Far outside the machine-integer envelope: fall back to a handful
        // of exact evaluations rather than the full grid.
        for (auto [p, q] : kTriangleSample) {
            Int n1 = cgls_seminorm(surfaces, {Int(2 * p), Int(2 * q)});
            Int n2 = cgls_seminorm(surfaces, {Int(p), Int(q)});
            if (n1 != 2 * n2) bad("seminorm-homogeneity", "at (" + std::to_string(p) + "," + std::to_string(q) + ")");
        }
        return;
    }

    const std::int64_t grid = options.seminorm_grid;
    auto eval = [&](std::int64_t p, std::int64_t q) {
        bool even = true;
        std::int64_t value = seminorm_i64(terms, p, q, even);
        if (!even)
            bad("seminorm-integrality",
                "odd total at (" + std::to_string(p) + "," + std::to_string(q) + ")");
        return value;
    };

    // Tie the fast path to the exact route at a few points.
    for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{1, 0}, {0, 1}, {3, 5}, {-7, 2}}) {
        Int exact = cgls_seminorm(surfaces, {Int(p), Int(q)});
        if (Int(eval(p, q)) != exact)
            bad("seminorm-internal", "fast path disagrees with exact route at (" +
                                         std::to_string(p) + "," + std::to_string(q) + ")");
    }

    for (std::int64_t p = -grid; p <= grid; ++p) {
        for (std::int64_t q = -grid; q <= grid; ++q) {
            std::int64_t base = eval(p, q);
            for (std::int64_t lambda = -3; lambda <= 3; ++lambda) {
                if (eval(lambda * p, lambda * q) != std::llabs(lambda) * base) {
                    bad("seminorm-homogeneity",
                        "lambda=" + std::to_string(lambda) + " at (" + std::to_string(p) + "," +
                            std::to_string(q) + ")");
                }
            }
            for (auto [vp, vq] : kTriangleSample) {
                if (eval(p + vp, q + vq) > base + eval(vp, vq)) {
                    bad("seminorm-triangle",
                        "u=(" + std::to_string(p) + "," + std::to_string(q) + ") v=(" +
                            std::to_string(vp) + "," + std::to_string(vq) + ")");
                }
            }
        }
    }
}

}  // namespace

void check_knot(const Fraction& knot, const CensusOptions& options, CensusReport& report) {
    auto bad = [&](const std::string& invariant, std::string detail) {
        report.violations.push_back({knot, invariant, std::move(detail)});
    };

    std::vector<Surface> surfaces;
    try {
        surfaces = build_surfaces(knot);
    } catch (const std::exception& e) {
        bad("build", e.what());
        return;
    }
    report.knots += 1;
    report.surfaces += static_cast<std::int64_t>(surfaces.size());

    std::set<Expansion> generated;
    int orientable_count = 0;
    for (const Surface& s : surfaces) {
        generated.insert(s.m);
        if (s.orientable) ++orientable_count;
        try {
            Int w_expansion = weight_from_expansion(s.m);
            BasicTree tree = assemble_basic_tree(s.n, s.eps);
            Int w_tree = weight_from_tree(tree, s.m);
            std::vector<AngleAssignment> actions = enumerate_actions(tree, s.m);
            report.actions += static_cast<std::int64_t>(actions.size());
            if (!(s.weight == w_expansion && s.weight == w_tree &&
                  Int(actions.size()) == s.weight)) {
                bad("triple-weight-equality",
                    "eps=" + s.eps.str() + ": smoothing=" + s.weight.str() + " expansion=" +
                        w_expansion.str() + " tree=" + w_tree.str() + " actions=" +
                        std::to_string(actions.size()));
            }
        } catch (const std::exception& e) {
            bad("triple-weight-equality", "eps=" + s.eps.str() + ": " + e.what());
        }
        // Orientable surfaces sit at slope 0. The converse is false: from
        // alpha = 19 on, some knots carry a non-orientable essential
        // surface of boundary slope 0 as well.
        if (s.orientable && s.slope != 0) {
            bad("orientable-slope-zero",
                "eps=" + s.eps.str() + " orientable with slope=" + s.slope.str());
        }
    }
    if (orientable_count != 1) {
        bad("unique-orientable-surface",
            "found " + std::to_string(orientable_count) + " orientable surfaces");
    }

    try {
        Expansion n = positive_expansion(knot);
        std::set<Expansion> enumerated =
            enumerate_ht_expansions(knot, default_search_depth(n));
        if (enumerated != generated) {
            bad("oracle-equivalence", "generated " + std::to_string(generated.size()) +
                                          " expansions, search found " +
                                          std::to_string(enumerated.size()));
        }
    } catch (const std::exception& e) {
        bad("oracle-equivalence", e.what());
    }

    try {
        std::vector<Surface> mirror = build_surfaces(mirror_fraction(knot));
        if (weight_multiset(mirror) != weight_multiset(surfaces))
            bad("mirror-weights", int_list(weight_multiset(mirror)) + " vs " +
                                      int_list(weight_multiset(surfaces)));
        if (slope_multiset(mirror, false) != slope_multiset(surfaces, true))
            bad("mirror-slopes", int_list(slope_multiset(mirror, false)) + " vs negated " +
                                     int_list(slope_multiset(surfaces, false)));
    } catch (const std::exception& e) {
        bad("mirror-weights", e.what());
    }

    try {
        Fraction partner = inverse_representative(knot);
        if (partner != knot) {
            std::vector<Surface> alt = build_surfaces(partner);
            if (weight_multiset(alt) != weight_multiset(surfaces))
                bad("representative-weights", partner.str() + ": " +
                                                  int_list(weight_multiset(alt)) + " vs " +
                                                  int_list(weight_multiset(surfaces)));
            if (slope_multiset(alt, false) != slope_multiset(surfaces, false))
                bad("representative-slopes", partner.str() + ": " +
                                                 int_list(slope_multiset(alt, false)) + " vs " +
                                                 int_list(slope_multiset(surfaces, false)));
        }
    } catch (const std::exception& e) {
        bad("representative-weights", e.what());
    }

    check_seminorm_laws(knot, surfaces, options, report);
}

CensusReport run_census(const CensusOptions& options) {
    std::vector<Fraction> knots;
    for (std::int64_t alpha = 3; alpha <= options.max_alpha; alpha += 2) {
        for (std::int64_t beta = 1; beta < alpha; ++beta) {
            if (std::gcd(alpha, beta) != 1) continue;
            Fraction f(beta, alpha);
            if (canonical_class_representative(f) == f) knots.push_back(std::move(f));
        }
    }

    const int jobs = std::max(1, options.jobs);
    std::vector<CensusReport> parts(static_cast<std::size_t>(jobs));
    if (jobs == 1) {
        for (const Fraction& f : knots) check_knot(f, options, parts[0]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= knots.size()) break;
                    check_knot(knots[i], options, parts[static_cast<std::size_t>(w)]);
                }
            });
        }
        for (std::thread& t : workers) t.join();
    }

    CensusReport report;
    for (CensusReport& part : parts) {
        report.knots += part.knots;
        report.surfaces += part.surfaces;
        report.actions += part.actions;
        std::move(part.violations.begin(), part.violations.end(),
                  std::back_inserter(report.violations));
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const CensusViolation& a, const CensusViolation& b) {
                  if (a.knot.den() != b.knot.den()) return a.knot.den() < b.knot.den();
                  if (a.knot.num() != b.knot.num()) return a.knot.num() < b.knot.num();
                  if (a.invariant != b.invariant) return a.invariant < b.invariant;
                  return a.detail < b.detail;
              });
    return report;
}

void print_report(const CensusReport& report, std::ostream& out) {
    out << "census: " << report.knots << " knots, " << report.surfaces << " surfaces, "
        << report.actions << " group actions, " << report.violations.size() << " violations\n";
    for (const CensusViolation& v : report.violations) {
        out << "  [" << v.invariant << "] " << v.knot.str() << ": " << v.detail << "\n";
    }
}

}  // namespace twobridge
