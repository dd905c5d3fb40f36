#include "minlink/recovery.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "minlink/region.hpp"
#include "minlink/stage_one.hpp"

namespace minlink {

namespace {

struct Landing {
    Interval d;
    Point at;
    Rational dist;
};

void keep_closer(std::optional<Landing>& best, const Interval& d, const Point& origin, const Direction& dir,
                 const ConvexRegion& r) {
    const auto range = clip_ray(origin, dir, r);
    if (!range || (best && best->dist <= range->lo)) {
        return;
    }
    best = Landing{d, origin + range->lo * dir.vec(), range->lo};
}

// Closest point of Ray(origin, dir) lying in one of the given intervals.
std::optional<Landing> landing_on(const Point& origin, const Direction& dir, const std::vector<Interval>& fam,
                                  const Instance& inst) {
    std::optional<Landing> best;
    for (const Interval& d : fam) {
        keep_closer(best, d, origin, dir, ConvexRegion::sweep(interval_geom(d, inst), {}));
    }
    return best;
}

// Returns the point of d reached by walking back from q against c_d.
Point back_to(const Interval& d, const Point& q, const Instance& inst) {
    const auto hit = landing_on(q, inst.oset.dir(inst.oset.opposite(d.orient)), {d}, inst);
    if (!hit) {
        throw InternalConsistencyError("point outside PT of its source interval");
    }
    return hit->at;
}

// Two links back via some d in `sources`: p -> q in PT(d) -> p' in d.
std::optional<SubPath> via_pt(const std::vector<Interval>& sources, const Point& p, const Direction& back,
                              const Instance& inst) {
    for (const Interval& d : sources) {
        if (const auto q = first_point_on_ray(p, back, pt_region(d, inst))) {
            const Point landing = back_to(d, *q, inst);
            return SubPath{d, landing, {p, *q, landing}};
        }
    }
    return std::nullopt;
}

// Three links back via d in I(e_{i-1}): p -> v in psi(d, k) -> q in PT(d) -> p' in d.
std::optional<SubPath> via_psi(const std::vector<Interval>& sources, const Point& p, const Direction& back,
                               const Instance& inst) {
    const OrientationSet& c = inst.oset;
    for (const Interval& d : sources) {
        if (d.links == 0) {
            continue;
        }
        const std::size_t rev = c.opposite(d.orient);
        std::optional<Landing> best;
        std::size_t turn = 0;
        for (const std::size_t k : {c.succ(rev), c.pred(rev)}) {
            const bool had = best.has_value();
            const Rational before = had ? best->dist : Rational(0);
            keep_closer(best, d, p, back, psi_region(d, k, inst));
            if (best && (!had || best->dist < before)) {
                turn = k;
            }
        }
        if (!best) {
            continue;
        }
        const Point v = best->at;
        const auto q = first_point_on_ray(v, c.dir(c.opposite(turn)), pt_region(d, inst));
        if (!q) {
            throw InternalConsistencyError("psi point does not project back onto PT");
        }
        const Point landing = back_to(d, *q, inst);
        return SubPath{d, landing, {p, v, *q, landing}};
    }
    return std::nullopt;
}

std::string where(std::size_t i, const Interval& a) {
    return "layer " + std::to_string(i) + ", l=" + std::to_string(a.links) + ", c=" + std::to_string(a.orient);
}

}  // namespace

SubPath recover_subpath(const Ledger& ledger, const Instance& inst, std::size_t i, const Interval& a,
                        const Point& p) {
    const OrientationSet& c = inst.oset;
    const LayerRecord& prev = ledger[i - 1];
    const int lp = prev.links;
    const Direction back = c.dir(c.opposite(a.orient));

    if (a.links == lp) {
        if (const auto hit = landing_on(p, back, prev.base[a.orient], inst)) {
            return {hit->d, hit->at, {p, hit->at}};
        }
    } else if (a.links == lp + 1) {
        if (const auto hit = landing_on(p, back, prev.plus[a.orient], inst)) {
            return {hit->d, hit->at, {p, hit->at}};
        }
        if (auto sub = via_pt(prev.base.all_except(a.orient), p, back, inst)) {
            return std::move(*sub);
        }
    } else if (a.links == lp + 3) {
        const LayerRecord& cur = ledger[i];
        for (std::size_t j = 0; j < c.size(); ++j) {
            for (const Interval& anchor : cur.base[j]) {
                if (interval_contains(anchor, inst, p)) {
                    SubPath sub = recover_subpath(ledger, inst, i, anchor, p);
                    sub.path.insert(sub.path.begin(), p);
                    return sub;
                }
            }
        }
    } else if (a.links == lp + 2) {
        if (auto sub = via_pt(prev.plus.all_except(a.orient), p, back, inst)) {
            return std::move(*sub);
        }
        if (auto sub = via_psi(prev.base.all(), p, back, inst)) {
            return std::move(*sub);
        }
    }
    throw InternalConsistencyError("no recovery branch applies at " + where(i, a));
}

Tour run_stage_two(const Ledger& ledger, const Instance& inst) {
    const std::size_t last = ledger.size() - 1;
    const LayerRecord& end = ledger[last];
    std::optional<Interval> a;
    for (std::size_t j = 0; j < end.base.orientations() && !a; ++j) {
        if (!end.base[j].empty()) {
            a = end.base[j].front();
        }
    }
    if (!a) {
        throw InternalConsistencyError("no interval reaches t");
    }

    Tour raw;
    raw.vertices.push_back(inst.t);
    Point p = inst.t;
    for (std::size_t i = last; i >= 1; --i) {
        SubPath sub = recover_subpath(ledger, inst, i, *a, p);
        raw.vertices.insert(raw.vertices.end(), sub.path.begin() + 1, sub.path.end());
        if (i - 1 >= 1) {
            raw.visits.push_back({i - 1, sub.landing});
        }
        a = sub.b;
        p = sub.landing;
    }
    std::reverse(raw.vertices.begin(), raw.vertices.end());
    std::reverse(raw.visits.begin(), raw.visits.end());
    raw.link_count = static_cast<int>(raw.vertices.size()) - 1;
    return simplify_tour(std::move(raw));
}

Tour simplify_tour(Tour raw) {
    std::vector<Point> out;
    out.reserve(raw.vertices.size());
    for (Point& v : raw.vertices) {
        if (!out.empty() && out.back() == v) {
            continue;
        }
        if (out.size() >= 2) {
            const Vector u = out[out.size() - 1] - out[out.size() - 2];
            const Vector w = v - out.back();
            if (cross(u, w).is_zero() && dot(u, w).sign() > 0) {
                out.back() = std::move(v);
                continue;
            }
        }
        out.push_back(std::move(v));
    }
    raw.vertices = std::move(out);
    raw.link_count = raw.vertices.empty() ? 0 : static_cast<int>(raw.vertices.size()) - 1;
    return raw;
}

}  // namespace minlink
