#include "minlink/io.hpp"

#include <cstdint>
#include <limits>

#include <json.hpp>

namespace minlink {

using nlohmann::json;

namespace {

std::string at(const std::string& path, std::size_t k) { return path + "[" + std::to_string(k) + "]"; }

json num(const Rational& r) {
    if (r.is_integer()) {
        const mpz_class& z = r.raw().get_num();
        if (z.fits_slong_p()) {
            return static_cast<std::int64_t>(z.get_si());
        }
    }
    return r.str();
}

json pt(const Point& p) { return json::array({num(p.x), num(p.y)}); }

Rational read_rational(const json& j, const std::string& path) {
    if (j.is_number_integer()) {
        return Rational(static_cast<long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(path, e.what());
        }
    }
    throw ParseError(path, "expected an integer or a \"p/q\" string");
}

std::int64_t read_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) {
        throw ParseError(path, "expected an integer");
    }
    return j.get<std::int64_t>();
}

const json& field(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) {
        throw ParseError(path.empty() ? "$" : path, "expected an object");
    }
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(path.empty() ? key : path + "." + key, "missing field");
    }
    return *it;
}

const json& array_of(const json& j, const std::string& path, std::optional<std::size_t> size = std::nullopt) {
    if (!j.is_array()) {
        throw ParseError(path, "expected an array");
    }
    if (size && j.size() != *size) {
        throw ParseError(path, "expected " + std::to_string(*size) + " elements");
    }
    return j;
}

Point read_point(const json& j, const std::string& path) {
    array_of(j, path, 2);
    return {read_rational(j[0], at(path, 0)), read_rational(j[1], at(path, 1))};
}

json parse_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col), "syntax error");
    }
}

std::string orient_message(OrientationError::Code code) {
    switch (code) {
        case OrientationError::Code::empty: return "empty";
        case OrientationError::Code::duplicate: return "duplicate";
        case OrientationError::Code::not_closed_under_negation: return "not-closed-under-negation";
        case OrientationError::Code::not_spanning: return "not-spanning";
        case OrientationError::Code::invalid_direction: return "invalid-direction";
    }
    return "invalid";
}

}  // namespace

Instance parse_instance(std::string_view text) {
    const json doc = parse_text(text);
    const json& raw_dirs = array_of(field(doc, "orientations", ""), "orientations");
    std::vector<std::pair<std::int64_t, std::int64_t>> dirs;
    for (std::size_t k = 0; k < raw_dirs.size(); ++k) {
        const std::string path = at("orientations", k);
        array_of(raw_dirs[k], path, 2);
        dirs.emplace_back(read_int(raw_dirs[k][0], at(path, 0)), read_int(raw_dirs[k][1], at(path, 1)));
    }
    std::optional<OrientationSet> oset;
    try {
        oset = OrientationSet::build(dirs);
    } catch (const OrientationError& e) {
        throw ParseError("orientations", orient_message(e.code()) + ": " + e.what());
    }
    const Point s = read_point(field(doc, "s", ""), "s");
    const Point t = read_point(field(doc, "t", ""), "t");
    const json& raw_segs = array_of(field(doc, "segments", ""), "segments");
    std::vector<SegmentGeom> segs;
    for (std::size_t k = 0; k < raw_segs.size(); ++k) {
        const std::string path = at("segments", k);
        array_of(raw_segs[k], path, 2);
        segs.push_back({read_point(raw_segs[k][0], at(path, 0)), read_point(raw_segs[k][1], at(path, 1))});
    }
    return make_instance(std::move(*oset), s, t, segs);
}

std::string emit_instance(const Instance& inst) {
    json dirs = json::array();
    for (const Direction& d : inst.oset.dirs()) {
        dirs.push_back(json::array({d.dx(), d.dy()}));
    }
    json segs = json::array();
    for (const Segment& e : inst.segments) {
        segs.push_back(json::array({pt(e.geom.p), pt(e.geom.q)}));
    }
    json doc;
    doc["orientations"] = std::move(dirs);
    doc["s"] = pt(inst.s);
    doc["t"] = pt(inst.t);
    doc["segments"] = std::move(segs);
    return doc.dump(2) + "\n";
}

ResultDocument make_result(const Ledger& ledger, const Tour& tour, bool with_families, Timing timing) {
    ResultDocument doc;
    doc.link_count = tour.link_count;
    for (const LayerRecord& r : ledger.layers) {
        doc.layer_links.push_back(r.links);
    }
    doc.tour = tour;
    if (with_families) {
        doc.families = ledger;
    }
    doc.timing = timing;
    return doc;
}

namespace {

json family_json(const OrientedIntervalFamily& fam) {
    json out = json::array();
    for (std::size_t j = 0; j < fam.orientations(); ++j) {
        json list = json::array();
        for (const Interval& a : fam[j]) {
            list.push_back(json::array({num(a.range.lo), num(a.range.hi)}));
        }
        out.push_back(std::move(list));
    }
    return out;
}

OrientedIntervalFamily read_family(const json& j, std::size_t seg, int links, const std::string& path) {
    array_of(j, path);
    OrientedIntervalFamily fam(j.size());
    for (std::size_t c = 0; c < j.size(); ++c) {
        const std::string cp = at(path, c);
        array_of(j[c], cp);
        for (std::size_t k = 0; k < j[c].size(); ++k) {
            const std::string rp = at(cp, k);
            array_of(j[c][k], rp, 2);
            fam[c].push_back({seg, {read_rational(j[c][k][0], at(rp, 0)), read_rational(j[c][k][1], at(rp, 1))},
                              links, c});
        }
    }
    return fam;
}

}  // namespace

std::string emit_result(const ResultDocument& doc) {
    json out;
    out["link_count"] = doc.link_count;
    out["layer_links"] = doc.layer_links;
    json verts = json::array();
    for (const Point& p : doc.tour.vertices) {
        verts.push_back(pt(p));
    }
    json visits = json::array();
    for (const VisitPoint& v : doc.tour.visits) {
        visits.push_back({{"segment", v.segment}, {"point", pt(v.point)}});
    }
    out["tour"] = {{"vertices", std::move(verts)}, {"visits", std::move(visits)}, {"link_count", doc.tour.link_count}};
    if (doc.families) {
        json layers = json::array();
        for (const LayerRecord& r : doc.families->layers) {
            layers.push_back({{"layer", r.index}, {"links", r.links}, {"base", family_json(r.base)},
                              {"plus", family_json(r.plus)}});
        }
        out["families"] = std::move(layers);
    }
    out["timing_ms"] = {{"stage_one", doc.timing.stage_one_ms}, {"stage_two", doc.timing.stage_two_ms}};
    return out.dump(2) + "\n";
}

ResultDocument parse_result(std::string_view text) {
    const json j = parse_text(text);
    ResultDocument doc;
    doc.link_count = static_cast<int>(read_int(field(j, "link_count", ""), "link_count"));
    const json& ll = array_of(field(j, "layer_links", ""), "layer_links");
    for (std::size_t k = 0; k < ll.size(); ++k) {
        doc.layer_links.push_back(static_cast<int>(read_int(ll[k], at("layer_links", k))));
    }
    const json& tour = field(j, "tour", "");
    const json& verts = array_of(field(tour, "vertices", "tour"), "tour.vertices");
    for (std::size_t k = 0; k < verts.size(); ++k) {
        doc.tour.vertices.push_back(read_point(verts[k], at("tour.vertices", k)));
    }
    const json& visits = array_of(field(tour, "visits", "tour"), "tour.visits");
    for (std::size_t k = 0; k < visits.size(); ++k) {
        const std::string path = at("tour.visits", k);
        doc.tour.visits.push_back({static_cast<std::size_t>(read_int(field(visits[k], "segment", path), path + ".segment")),
                                   read_point(field(visits[k], "point", path), path + ".point")});
    }
    doc.tour.link_count = static_cast<int>(read_int(field(tour, "link_count", "tour"), "tour.link_count"));
    if (const auto it = j.find("families"); it != j.end()) {
        Ledger ledger;
        array_of(*it, "families");
        for (std::size_t k = 0; k < it->size(); ++k) {
            const std::string path = at("families", k);
            const json& r = (*it)[k];
            const auto idx = static_cast<std::size_t>(read_int(field(r, "layer", path), path + ".layer"));
            const int links = static_cast<int>(read_int(field(r, "links", path), path + ".links"));
            ledger.layers.push_back({idx, links, read_family(field(r, "base", path), idx, links, path + ".base"),
                                     read_family(field(r, "plus", path), idx, links + 1, path + ".plus")});
        }
        doc.families = std::move(ledger);
    }
    const json& timing = field(j, "timing_ms", "");
    const json& s1 = field(timing, "stage_one", "timing_ms");
    const json& s2 = field(timing, "stage_two", "timing_ms");
    if (!s1.is_number() || !s2.is_number()) {
        throw ParseError("timing_ms", "expected numbers");
    }
    doc.timing = {s1.get<double>(), s2.get<double>()};
    return doc;
}

}  // namespace minlink
