#include "checks.hpp"

#include <sstream>

#include "minlink/region.hpp"
#include "minlink/stage_one.hpp"

namespace minlink::testing {

namespace {

std::string at(std::size_t i, std::size_t j) {
    return "layer " + std::to_string(i) + " c" + std::to_string(j);
}

bool full(const std::vector<Interval>& fam, const Instance& inst, std::size_t i) {
    const Rational hi = inst.layer(i).degenerate() ? 0 : 1;
    return fam.size() == 1 && fam[0].range == ParamRange{0, hi};
}

}  // namespace

Findings check_link_growth(const Ledger& ledger) {
    Findings f;
    for (std::size_t i = 1; i < ledger.size(); ++i) {
        const int d = ledger[i].links - ledger[i - 1].links;
        if (d < 0 || d > 2) {
            f.push_back("layer " + std::to_string(i) + ": l jumps by " + std::to_string(d));
        }
    }
    return f;
}

Findings check_family_sizes(const Ledger& ledger) {
    Findings f;
    for (std::size_t i = 0; i < ledger.size(); ++i) {
        const LayerRecord& r = ledger[i];
        for (std::size_t j = 0; j < r.base.orientations(); ++j) {
            if (r.base[j].size() > 2 * i + 1 || r.plus[j].size() > 2 * i + 1) {
                f.push_back(at(i, j) + ": family sizes " + std::to_string(r.base[j].size()) + "/" +
                            std::to_string(r.plus[j].size()));
            }
        }
    }
    return f;
}

Findings check_containment(const Ledger& ledger, const Instance& inst) {
    Findings f;
    for (std::size_t i = 0; i < ledger.size(); ++i) {
        const LayerRecord& r = ledger[i];
        for (const Interval& a : r.base.all()) {
            for (std::size_t j = 0; j < inst.oset.size(); ++j) {
                if (j == a.orient) {
                    continue;
                }
                bool inside = false;
                for (const Interval& b : r.plus[j]) {
                    inside |= b.range.contains(a.range);
                }
                if (!inside) {
                    std::ostringstream os;
                    os << at(i, j) << ": " << a.range << " (c" << a.orient << ") not inside I+";
                    f.push_back(os.str());
                }
            }
        }
    }
    return f;
}

Findings check_exclusivity(const Ledger& ledger, const Instance& inst) {
    Findings f;
    const OrientationSet& c = inst.oset;
    for (std::size_t i = 0; i + 1 < ledger.size(); ++i) {
        const LayerRecord& r = ledger[i];
        const SegmentGeom next = inst.layer(i + 1);
        auto hits = [&](std::size_t j) {
            for (const auto* fam : {&r.base[j], &r.plus[j]}) {
                for (const Interval& a : *fam) {
                    if (region_clip_segment(pt_region(a, inst), next)) {
                        return true;
                    }
                }
            }
            return false;
        };
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (hits(c.opposite(j)) && hits(j)) {
                f.push_back(at(i, j) + ": PT from both c_j and its opposite reach the next layer");
            }
        }
    }
    return f;
}

Findings check_full_plus_after_jump(const Ledger& ledger, const Instance& inst) {
    Findings f;
    for (std::size_t i = 1; i < ledger.size(); ++i) {
        if (ledger[i].links != ledger[i - 1].links + 2) {
            continue;
        }
        for (std::size_t j = 0; j < ledger[i].plus.orientations(); ++j) {
            if (!full(ledger[i].plus[j], inst, i)) {
                f.push_back(at(i, j) + ": I+ is not the whole segment after a jump of two");
            }
        }
    }
    return f;
}

Findings check_turn_bounds(const Ledger& ledger) {
    Findings f;
    for (std::size_t i = 0; i + 1 < ledger.size(); ++i) {
        const LayerRecord& cur = ledger[i];
        const LayerRecord& nxt = ledger[i + 1];
        const int jump = nxt.links - cur.links;
        const std::size_t m = cur.base.orientations();
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t opp = (j + m / 2) % m;
            const std::size_t one_turn = std::max(cur.base[opp].size(), cur.plus[j].size()) + 2;
            const std::size_t two_turn = cur.plus[opp].size() + 2;
            // Family holding the one-turn output, then the one holding the two-turn output.
            const std::vector<Interval>* ones = jump == 0 ? &nxt.plus[j] : jump == 1 ? &nxt.base[j] : nullptr;
            const std::vector<Interval>* twos = jump == 1 ? &nxt.plus[j] : jump == 2 ? &nxt.base[j] : nullptr;
            if (ones && ones->size() > one_turn) {
                f.push_back(at(i + 1, j) + ": one-turn family has " + std::to_string(ones->size()) + " > " +
                            std::to_string(one_turn));
            }
            if (twos && twos->size() > two_turn) {
                f.push_back(at(i + 1, j) + ": two-turn family has " + std::to_string(twos->size()) + " > " +
                            std::to_string(two_turn));
            }
        }
    }
    return f;
}

Findings check_subpaths(const Ledger& ledger, const Instance& inst) {
    Findings f;
    const OrientationSet& c = inst.oset;
    for (std::size_t i = 1; i < ledger.size(); ++i) {
        const LayerRecord& r = ledger[i];
        const int lp = ledger[i - 1].links;
        for (const auto* fam : {&r.base, &r.plus}) {
            for (const Interval& a : fam->all()) {
                const SegmentGeom g = inst.layer(i);
                for (const Rational& u : {a.range.lo, (a.range.lo + a.range.hi) / Rational(2), a.range.hi}) {
                    const Point p = g.at(u);
                    if (a.links == lp + 3) {
                        // Re-anchoring needs p inside I(e_i).
                        bool covered = false;
                        for (const Interval& b : r.base.all()) {
                            covered |= interval_contains(b, inst, p);
                        }
                        if (!covered) {
                            continue;
                        }
                    }
                    std::ostringstream where;
                    where << at(i, a.orient) << " l=" << a.links << " p=" << p << ": ";
                    SubPath sub;
                    try {
                        sub = recover_subpath(ledger, inst, i, a, p);
                    } catch (const std::exception& e) {
                        f.push_back(where.str() + e.what());
                        continue;
                    }
                    const auto& path = sub.path;
                    const int links = static_cast<int>(path.size()) - 1;
                    if (path.front() != p || path.back() != sub.landing) {
                        f.push_back(where.str() + "path endpoints wrong");
                    }
                    if (sub.b.seg != i - 1 || !interval_contains(sub.b, inst, sub.landing)) {
                        f.push_back(where.str() + "landing outside b");
                    }
                    if (links != a.links - sub.b.links + 1) {
                        f.push_back(where.str() + "subpath has " + std::to_string(links) + " links");
                    }
                    // Links read forward: from path[k+1] to path[k].
                    std::optional<std::size_t> after;
                    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
                        const Vector d = path[k] - path[k + 1];
                        if (d.x.is_zero() && d.y.is_zero()) {
                            after.reset();
                            continue;
                        }
                        const auto o = c.index_along(d);
                        if (!o) {
                            f.push_back(where.str() + "link not in C");
                            break;
                        }
                        if (k == 0 && *o != a.orient) {
                            f.push_back(where.str() + "last link does not have orientation c_a");
                        }
                        if (k + 2 == path.size() && sub.b.links > 0 && *o != sub.b.orient) {
                            f.push_back(where.str() + "first link does not continue c_b");
                        }
                        if (after && *after == *o) {
                            f.push_back(where.str() + "consecutive links share an orientation");
                        }
                        after = o;
                    }
                }
            }
        }
    }
    return f;
}

std::vector<GenParams> corpus() {
    std::vector<GenParams> out;
    for (const std::size_t c : {4, 6, 8}) {
        for (std::uint64_t k = 0; k < 170; ++k) {
            out.push_back({static_cast<std::size_t>(k % 13), c, 50, 20240 + k});
        }
    }
    return out;
}

OrientationSet c4() { return OrientationSet::build({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }

Instance instance_w() {
    const std::vector<SegmentGeom> segs{{{2, 1}, {2, 3}}};
    return make_instance(c4(), {0, 0}, {4, 0}, segs);
}

Instance instance_empty(Point t) { return make_instance(c4(), {0, 0}, std::move(t), {}); }

}  // namespace minlink::testing
