#include "minlink/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "minlink/region.hpp"

namespace minlink {

namespace {

using RangeList = std::vector<ParamRange>;

// Union of closed ranges; touching ranges join.
RangeList canonical(RangeList r) {
    std::sort(r.begin(), r.end(), [](const ParamRange& a, const ParamRange& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    RangeList out;
    for (ParamRange& x : r) {
        if (!out.empty() && x.lo <= out.back().hi) {
            out.back().hi = max(out.back().hi, x.hi);
        } else {
            out.push_back(std::move(x));
        }
    }
    return out;
}

// (mask of swept orientations, last orientation) reachable with exactly k turns
// after arriving with orientation `arrive` (none for a link-free source).
std::vector<std::pair<unsigned, std::size_t>> turn_patterns(std::size_t m, std::optional<std::size_t> arrive,
                                                            int k) {
    std::vector<std::pair<unsigned, std::size_t>> cur;
    if (arrive) {
        cur.push_back({1u << *arrive, *arrive});
    } else {
        cur.push_back({0u, m});
    }
    for (int step = 0; step < k; ++step) {
        std::vector<std::pair<unsigned, std::size_t>> nxt;
        for (const auto& [mask, last] : cur) {
            for (std::size_t c = 0; c < m; ++c) {
                if (c != last) {
                    nxt.push_back({mask | (1u << c), c});
                }
            }
        }
        std::sort(nxt.begin(), nxt.end());
        nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
        cur = std::move(nxt);
    }
    return cur;
}

class Propagator {
public:
    Propagator(const Instance& inst, int max_turns) : inst_(inst), m_(inst.oset.size()), max_turns_(max_turns) {}

    LayerRecord step(const LayerRecord& cur) {
        const std::size_t next = cur.index + 1;
        sources_.clear();
        for (const auto* fam : {&cur.base, &cur.plus}) {
            for (const Interval& a : fam->all()) {
                sources_.push_back({a, {}});
            }
        }
        const int floor = cur.links;
        const int ceiling = cur.links + 1 + max_turns_;
        for (int target = floor; target <= ceiling; ++target) {
            auto found = reach(target, next);
            if (found.empty()) {
                continue;
            }
            LayerRecord rec{next, target, to_family(found, next, target), {}};
            rec.plus = to_family(reach(target + 1, next), next, target + 1);
            return rec;
        }
        throw InternalConsistencyError("oracle: layer " + std::to_string(next) + " unreachable");
    }

private:
    struct Source {
        Interval a;
        std::map<unsigned, std::optional<ParamRange>> memo;
    };

    // orientation -> ranges reached on layer `next` with exactly `target` links
    std::map<std::size_t, RangeList> reach(int target, std::size_t next) {
        std::map<std::size_t, RangeList> out;
        const SegmentGeom onto = inst_.layer(next);
        for (Source& src : sources_) {
            const int k = target - src.a.links;
            if (k < 0 || k > max_turns_) {
                continue;
            }
            const SegmentGeom from = inst_.layer(src.a.seg).sub(src.a.range);
            std::optional<std::size_t> arrive;
            if (src.a.links > 0) {
                arrive = src.a.orient;
            }
            for (const auto& [mask, last] : turn_patterns(m_, arrive, k)) {
                auto it = src.memo.find(mask);
                if (it == src.memo.end()) {
                    std::vector<Direction> dirs;
                    for (std::size_t c = 0; c < m_; ++c) {
                        if (mask & (1u << c)) {
                            dirs.push_back(inst_.oset.dir(c));
                        }
                    }
                    it = src.memo.emplace(mask, region_clip_segment(ConvexRegion::sweep(from, dirs), onto)).first;
                }
                if (!it->second) {
                    continue;
                }
                // A link-free source keeps every arrival label: it reached s with no link yet.
                const std::size_t label = last == m_ ? src.a.orient : last;
                out[label].push_back(*it->second);
            }
        }
        return out;
    }

    OrientedIntervalFamily to_family(std::map<std::size_t, RangeList> found, std::size_t seg, int links) const {
        OrientedIntervalFamily fam(m_);
        for (auto& [c, ranges] : found) {
            for (ParamRange& r : canonical(std::move(ranges))) {
                fam[c].push_back({seg, std::move(r), links, c});
            }
        }
        return fam;
    }

    const Instance& inst_;
    std::size_t m_;
    int max_turns_;
    std::vector<Source> sources_;
};

}  // namespace

Ledger oracle_reachable_sets(const Instance& inst, int max_turns_per_hop, const OracleLimits& limits) {
    if (inst.n() > limits.max_segments || inst.oset.size() > limits.max_orientations ||
        max_turns_per_hop < 1 || max_turns_per_hop > limits.max_turns) {
        throw OracleTooLarge("oracle size guard: n=" + std::to_string(inst.n()) +
                             ", |C|=" + std::to_string(inst.oset.size()) +
                             ", turns=" + std::to_string(max_turns_per_hop));
    }
    const std::size_t m = inst.oset.size();
    Ledger out;
    LayerRecord start{0, 0, OrientedIntervalFamily(m), OrientedIntervalFamily(m)};
    for (std::size_t c = 0; c < m; ++c) {
        start.base[c].push_back({0, {0, 0}, 0, c});
        start.plus[c].push_back({0, {0, 0}, 1, c});
    }
    out.layers.push_back(std::move(start));
    Propagator prop(inst, max_turns_per_hop);
    for (std::size_t i = 0; i <= inst.n(); ++i) {
        out.layers.push_back(prop.step(out.layers.back()));
    }
    return out;
}

int oracle_min_links(const Instance& inst) { return oracle_reachable_sets(inst).final_links(); }

namespace {

struct PolylinePos {
    std::size_t link = 0;
    Rational u{0};

    bool operator<=(const PolylinePos& o) const { return link < o.link || (link == o.link && u <= o.u); }
};

// Earliest position at or after `from` where the polyline passes through p.
std::optional<PolylinePos> locate(const std::vector<Point>& v, const Point& p, const PolylinePos& from) {
    if (v.size() == 1) {
        return v[0] == p ? std::optional<PolylinePos>(PolylinePos{}) : std::nullopt;
    }
    for (std::size_t k = from.link; k + 1 < v.size(); ++k) {
        const SegmentGeom link{v[k], v[k + 1]};
        if (!link.contains(p)) {
            continue;
        }
        const PolylinePos pos{k, link.param_of(p)};
        if (from <= pos) {
            return pos;
        }
    }
    return std::nullopt;
}

}  // namespace

ValidationReport validate_tour(const Instance& inst, const Tour& tour) {
    ValidationReport report;
    const auto& v = tour.vertices;
    if (v.empty()) {
        report.add("empty-tour", "tour has no vertices");
        return report;
    }
    if (v.front() != inst.s) {
        report.add("wrong-start", "tour does not start at s", "vertices[0]");
    }
    if (v.back() != inst.t) {
        report.add("wrong-end", "tour does not end at t", "vertices[" + std::to_string(v.size() - 1) + "]");
    }
    int runs = 0;
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        const std::string loc = "links[" + std::to_string(k) + "]";
        const Vector d = v[k + 1] - v[k];
        if (d.x.is_zero() && d.y.is_zero()) {
            report.add("zero-length-link", "consecutive vertices coincide", loc);
            continue;
        }
        if (!inst.oset.index_along(d)) {
            std::ostringstream os;
            os << "link " << v[k] << " -> " << v[k + 1] << " has no orientation in C";
            report.add("non-c-oriented-link", os.str(), loc);
        }
        ++runs;
        if (k >= 1) {
            const Vector u = v[k] - v[k - 1];
            if (cross(u, d).is_zero() && dot(u, d).sign() > 0) {
                report.add("redundant-vertex", "path goes straight on through a vertex",
                           "vertices[" + std::to_string(k) + "]");
                --runs;
            }
        }
    }
    if (tour.link_count != runs || tour.link_count != static_cast<int>(v.size()) - 1) {
        report.add("link-count-mismatch",
                   "reported " + std::to_string(tour.link_count) + " links, polyline has " + std::to_string(runs));
    }
    if (tour.visits.size() != inst.n()) {
        report.add("visit-count-mismatch", "expected " + std::to_string(inst.n()) + " visit points, got " +
                                               std::to_string(tour.visits.size()));
        return report;
    }
    PolylinePos pos;
    for (std::size_t i = 0; i < tour.visits.size(); ++i) {
        const VisitPoint& vp = tour.visits[i];
        const std::string loc = "visits[" + std::to_string(i) + "]";
        if (vp.segment != i + 1) {
            report.add("visit-index-mismatch", "visit points must name segments 1..n in order", loc);
            continue;
        }
        if (!inst.segments[i].geom.contains(vp.point)) {
            std::ostringstream os;
            os << vp.point << " is not on e_" << vp.segment;
            report.add("visit-point-off-segment", os.str(), loc);
        }
        if (auto at = locate(v, vp.point, pos)) {
            pos = *at;
        } else {
            report.add("visit-points-out-of-order", "visit point not found on the tour after its predecessor", loc);
        }
    }
    return report;
}

std::string LedgerDiff::describe() const {
    std::ostringstream os;
    for (const LedgerDivergence& d : items) {
        os << "layer " << d.layer << ' ' << d.family;
        if (d.orient) {
            os << " c" << *d.orient;
        }
        os << ": " << d.detail << '\n';
    }
    return os.str();
}

namespace {

std::string render(const RangeList& r, int links) {
    std::ostringstream os;
    os << "l=" << links << " {";
    for (std::size_t k = 0; k < r.size(); ++k) {
        os << (k ? " " : "") << r[k];
    }
    os << '}';
    return os.str();
}

void compare_family(std::size_t layer, const char* name, const OrientedIntervalFamily& a,
                    const OrientedIntervalFamily& b, LedgerDiff& diff) {
    const std::size_t m = std::max(a.orientations(), b.orientations());
    for (std::size_t j = 0; j < m; ++j) {
        RangeList ra;
        RangeList rb;
        int la = -1;
        int lb = -1;
        bool mixed = false;
        if (j < a.orientations()) {
            for (const Interval& x : a[j]) {
                mixed |= la >= 0 && la != x.links;
                la = x.links;
                ra.push_back(x.range);
            }
        }
        if (j < b.orientations()) {
            for (const Interval& x : b[j]) {
                mixed |= lb >= 0 && lb != x.links;
                lb = x.links;
                rb.push_back(x.range);
            }
        }
        ra = canonical(std::move(ra));
        rb = canonical(std::move(rb));
        if (mixed || ra != rb || (!ra.empty() && la != lb)) {
            diff.items.push_back({layer, name, j, render(ra, la) + " vs " + render(rb, lb)});
        }
    }
}

}  // namespace

LedgerDiff compare_ledgers(const Ledger& a, const Ledger& b) {
    LedgerDiff diff;
    if (a.size() != b.size()) {
        diff.items.push_back({0, "links", std::nullopt,
                              "layer counts differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size())});
        return diff;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].links != b[i].links) {
            diff.items.push_back({i, "links", std::nullopt,
                                  std::to_string(a[i].links) + " vs " + std::to_string(b[i].links)});
        }
        compare_family(i, "base", a[i].base, b[i].base, diff);
        compare_family(i, "plus", a[i].plus, b[i].plus, diff);
    }
    return diff;
}

}  // namespace minlink
