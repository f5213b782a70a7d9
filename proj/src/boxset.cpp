#include "polyerg/boxset.hpp"

#include <algorithm>
#include <map>

namespace polyerg {

namespace {

// Merge a set of [lo,hi) intervals on the line.
std::vector<std::pair<Rat, Rat>> merge_intervals(std::vector<std::pair<Rat, Rat>> v) {
    std::erase_if(v, [](const auto& p) { return p.second <= p.first; });
    std::sort(v.begin(), v.end());
    std::vector<std::pair<Rat, Rat>> out;
    for (auto& p : v) {
        if (!out.empty() && p.first <= out.back().second)
            out.back().second = std::max(out.back().second, p.second);
        else
            out.push_back(p);
    }
    return out;
}

// Recursive normalization: split on the first axis, recurse on the rest.
std::vector<Box> normalize_rec(std::size_t dim, const std::vector<Box>& boxes) {
    if (boxes.empty()) return {};
    if (dim == 1) {
        std::vector<std::pair<Rat, Rat>> iv;
        iv.reserve(boxes.size());
        for (const auto& b : boxes) iv.emplace_back(b.lo[0], b.hi[0]);
        std::vector<Box> out;
        for (auto& p : merge_intervals(std::move(iv))) out.push_back(Box{{p.first}, {p.second}});
        return out;
    }
    std::vector<Rat> cuts;
    for (const auto& b : boxes) {
        cuts.push_back(b.lo[0]);
        cuts.push_back(b.hi[0]);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Box> out;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const Rat& a = cuts[s];
        const Rat& b = cuts[s + 1];
        std::vector<Box> tails;
        for (const auto& bx : boxes) {
            if (bx.lo[0] <= a && b <= bx.hi[0]) {
                Box tail;
                tail.lo.assign(bx.lo.begin() + 1, bx.lo.end());
                tail.hi.assign(bx.hi.begin() + 1, bx.hi.end());
                tails.push_back(std::move(tail));
            }
        }
        for (auto& t : normalize_rec(dim - 1, tails)) {
            Box full;
            full.lo.reserve(dim);
            full.hi.reserve(dim);
            full.lo.push_back(a);
            full.hi.push_back(b);
            full.lo.insert(full.lo.end(), t.lo.begin(), t.lo.end());
            full.hi.insert(full.hi.end(), t.hi.begin(), t.hi.end());
            out.push_back(std::move(full));
        }
    }
    return out;
}

}  // namespace

BoxSet::BoxSet(std::size_t dim, std::vector<Box> boxes) : dim_(dim) {
    for (const auto& b : boxes) {
        if (b.lo.size() != dim || b.hi.size() != dim) throw ArgumentError("BoxSet: box dimension mismatch");
        for (std::size_t i = 0; i < dim; ++i)
            if (b.lo[i] < 0 || b.hi[i] > 1) throw ArgumentError("BoxSet: boxes must lie in [0,1)^d");
    }
    boxes_ = normalize_rec(dim, boxes);
}

BoxSet BoxSet::full(std::size_t dim) {
    Box b;
    b.lo.assign(dim, Rat(0));
    b.hi.assign(dim, Rat(1));
    return BoxSet(dim, {b});
}

BoxSet BoxSet::interval(const Rat& lo, const Rat& hi) { return BoxSet(1, {Box{{lo}, {hi}}}); }

BoxSet BoxSet::product(const BoxSet& a, const BoxSet& b) {
    std::vector<Box> boxes;
    for (const auto& x : a.boxes_)
        for (const auto& y : b.boxes_) {
            Box bx;
            bx.lo = x.lo;
            bx.hi = x.hi;
            bx.lo.insert(bx.lo.end(), y.lo.begin(), y.lo.end());
            bx.hi.insert(bx.hi.end(), y.hi.begin(), y.hi.end());
            boxes.push_back(std::move(bx));
        }
    return BoxSet(a.dim_ + b.dim_, std::move(boxes));
}

Rat BoxSet::measure() const {
    Rat m(0);
    for (const auto& b : boxes_) m += b.volume();
    return m;
}

bool BoxSet::contains(const std::vector<Rat>& x) const {
    for (const auto& b : boxes_) {
        bool in = true;
        for (std::size_t i = 0; i < dim_ && in; ++i) in = b.lo[i] <= x[i] && x[i] < b.hi[i];
        if (in) return true;
    }
    return false;
}

bool BoxSet::contains(const std::vector<double>& x) const {
    for (const auto& b : boxes_) {
        bool in = true;
        for (std::size_t i = 0; i < dim_ && in; ++i)
            in = b.lo[i].get_d() <= x[i] && x[i] < b.hi[i].get_d();
        if (in) return true;
    }
    return false;
}

std::vector<std::pair<Rat, Rat>> BoxSet::axis_intervals(std::size_t axis) const {
    std::vector<std::pair<Rat, Rat>> iv;
    iv.reserve(boxes_.size());
    for (const auto& b : boxes_) iv.emplace_back(b.lo[axis], b.hi[axis]);
    return merge_intervals(std::move(iv));
}

Rat circle_intersection_measure(const std::vector<std::vector<std::pair<Rat, Rat>>>& unions) {
    // reduce everything mod 1, splitting wrapped arcs, then sweep
    std::size_t k = unions.size();
    std::vector<Rat> cuts;
    std::vector<std::vector<std::pair<Rat, Rat>>> arcs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& [lo, hi] : unions[i]) {
            if (hi <= lo) continue;
            if (hi - lo >= 1) {
                arcs[i].emplace_back(Rat(0), Rat(1));
                continue;
            }
            Rat flo = frac_part(lo);
            Rat len = hi - lo;
            if (flo + len <= 1) {
                arcs[i].emplace_back(flo, flo + len);
            } else {
                arcs[i].emplace_back(flo, Rat(1));
                arcs[i].emplace_back(Rat(0), flo + len - 1);
            }
        }
        arcs[i] = merge_intervals(std::move(arcs[i]));
        if (arcs[i].empty()) return Rat(0);
        for (const auto& [lo, hi] : arcs[i]) {
            cuts.push_back(lo);
            cuts.push_back(hi);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Rat total(0);
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const Rat& a = cuts[s];
        const Rat& b = cuts[s + 1];
        bool in_all = true;
        for (std::size_t i = 0; i < k && in_all; ++i) {
            bool in = false;
            for (const auto& [lo, hi] : arcs[i])
                if (lo <= a && b <= hi) {
                    in = true;
                    break;
                }
            in_all = in;
        }
        if (in_all) total += b - a;
    }
    return total;
}

}  // namespace polyerg
