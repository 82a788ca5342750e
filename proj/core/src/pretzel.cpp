#include "twobridge/pretzel.hpp"

namespace twobridge {

std::vector<PretzelSurfaceRecord> pretzel_surface_table(const Int& p, const Int& q, const Int& r) {
    for (const Int* v : {&p, &q, &r}) {
        if (*v <= 1 || *v % 2 == 0)
            throw DomainError("pretzel parameters must be odd and > 1, got " + v->str());
    }
    const bool is_357 = (p == 3 && q == 5 && r == 7);

    auto record = [&](PretzelSurfaceType type, std::string id, Int weight,
                      std::optional<Int> slope) {
        PretzelSurfaceRecord rec;
        rec.surface_type = type;
        rec.weight_formula_id = std::move(id);
        rec.weight = std::move(weight);
        rec.slope = std::move(slope);
        rec.conjectural = true;
        return rec;
    };
    auto slope_if_357 = [&](long long v) -> std::optional<Int> {
        if (is_357) return Int(v);
        return std::nullopt;
    };

    std::vector<PretzelSurfaceRecord> out;
    out.reserve(9);
    out.push_back(record(PretzelSurfaceType::TypeIII, "(p-1)(q-1)(r-1)/2",
                         (p - 1) * (q - 1) * (r - 1) / 2, slope_if_357(0)));
    out.push_back(record(PretzelSurfaceType::TypeIII, "(r-1)/2", (r - 1) / 2, slope_if_357(-16)));
    out.push_back(record(PretzelSurfaceType::TypeIII, "(q-1)/2", (q - 1) / 2, slope_if_357(-20)));
    out.push_back(record(PretzelSurfaceType::TypeIII, "(p-1)/2", (p - 1) / 2, slope_if_357(-24)));
    out.push_back(record(PretzelSurfaceType::TypeIII, "1", Int(1), slope_if_357(-30)));
    out.push_back(record(PretzelSurfaceType::TypeII, "(pqr-1)/2", (p * q * r - 1) / 2,
                         slope_if_357(0)));
    out.push_back(record(PretzelSurfaceType::TypeII, "(qr-1)/2", (q * r - 1) / 2,
                         slope_if_357(-4)));
    out.push_back(record(PretzelSurfaceType::TypeII, "(pr-1)/2", (p * r - 1) / 2,
                         slope_if_357(-8)));
    out.push_back(record(PretzelSurfaceType::TypeII, "(pq-1)/2", (p * q - 1) / 2,
                         slope_if_357(-12)));
    return out;
}

}  // namespace twobridge
