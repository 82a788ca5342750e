#include "twobridge/json_io.hpp"

#include <json.hpp>

namespace twobridge {

namespace {

using nlohmann::json;

std::int64_t json_int(const Int& v) {
    if (v < Int(std::numeric_limits<std::int64_t>::min()) ||
        v > Int(std::numeric_limits<std::int64_t>::max()))
        throw std::overflow_error("value does not fit a JSON integer: " + v.str());
    return v.convert_to<std::int64_t>();
}

json int_array(const std::vector<Int>& values) {
    json arr = json::array();
    for (const Int& v : values) arr.push_back(json_int(v));
    return arr;
}

json surface_record(const Surface& s) {
    json rec;
    rec["alpha"] = json_int(s.knot.den());
    rec["beta"] = json_int(s.knot.num());
    rec["n"] = int_array(s.n.terms);
    rec["eps"] = s.eps.str();
    rec["m"] = int_array(s.m.terms);
    rec["slope"] = json_int(s.slope);
    rec["orientable"] = s.orientable;
    rec["weight"] = json_int(s.weight);
    rec["deltas"] = int_array(s.deltas);
    return rec;
}

json expansion_array(const std::set<Expansion>& list) {
    json arr = json::array();
    for (const Expansion& e : list) arr.push_back(e.str());
    return arr;
}

std::string finish(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string surface_to_json(const Surface& s) { return finish(surface_record(s)); }

std::string surfaces_to_json(const std::vector<Surface>& list) {
    json arr = json::array();
    for (const Surface& s : list) arr.push_back(surface_record(s));
    return finish(arr);
}

std::string tree_to_json(const BasicTree& t) {
    json j;
    j["n"] = int_array(t.n.terms);
    j["eps"] = t.eps.str();
    j["anchors"] = t.single_point ? "point" : "segment";
    json origins = json::array();
    for (AnchorSide side : t.origin_side) origins.push_back(side == AnchorSide::A ? "A" : "B");
    j["origins"] = origins;
    json subtrees = json::array();
    for (const TwistSubtree& sub : t.subtrees) {
        json rec;
        rec["index"] = sub.index;
        rec["kind"] = sub.kind == SubtreeKind::Linear ? "linear" : "parasol";
        switch (sub.pcase) {
            case ParasolCase::C1: rec["case"] = "C1"; break;
            case ParasolCase::C2a: rec["case"] = "C2a"; break;
            case ParasolCase::C2b: rec["case"] = "C2b"; break;
            case ParasolCase::C3: rec["case"] = "C3"; break;
            case ParasolCase::None: rec["case"] = nullptr; break;
        }
        rec["valence"] = json_int(sub.valence);
        subtrees.push_back(rec);
    }
    j["subtrees"] = subtrees;
    json overlaps = json::array();
    for (const Overlap& o : t.overlaps) {
        json rec;
        rec["linear_twist"] = o.linear_twist;
        rec["end"] = o.end;
        rec["partner_twist"] = o.partner.twist;
        rec["partner_branch"] = json_int(o.partner.branch);
        overlaps.push_back(rec);
    }
    j["overlaps"] = overlaps;
    return finish(j);
}

std::string pretzel_table_to_json(const std::vector<PretzelSurfaceRecord>& table) {
    json arr = json::array();
    for (const PretzelSurfaceRecord& rec : table) {
        json r;
        r["surface_type"] = rec.surface_type == PretzelSurfaceType::TypeIII ? "TypeIII" : "TypeII";
        r["weight_formula_id"] = rec.weight_formula_id;
        r["weight"] = json_int(rec.weight);
        if (rec.slope) r["slope"] = json_int(*rec.slope);
        else r["slope"] = nullptr;
        r["conjectural"] = rec.conjectural;
        arr.push_back(r);
    }
    return finish(arr);
}

std::string crosscheck_to_json(const CrosscheckReport& report) {
    json j;
    j["alpha"] = json_int(report.knot.den());
    j["beta"] = json_int(report.knot.num());
    j["generated"] = expansion_array(report.generated);
    j["enumerated"] = expansion_array(report.enumerated);
    json og = json::array();
    for (const Expansion& e : report.only_generated) og.push_back(e.str());
    j["only_generated"] = og;
    json oe = json::array();
    for (const Expansion& e : report.only_enumerated) oe.push_back(e.str());
    j["only_enumerated"] = oe;
    j["match"] = report.match();
    return finish(j);
}

}  // namespace twobridge
