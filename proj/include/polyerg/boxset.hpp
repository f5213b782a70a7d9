#pragma once

#include <vector>

#include "polyerg/arith.hpp"

namespace polyerg {

/// Axis-aligned half-open box in [0,1)^d with rational corners.
struct Box {
    std::vector<Rat> lo, hi;
    Rat volume() const {
        Rat v(1);
        for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
        return v;
    }
};

/// Finite union of boxes in [0,1)^d, normalized on construction so the
/// stored boxes are pairwise disjoint: the first axis is split at every
/// endpoint and the remaining dimensions handled recursively, a deterministic
/// canonical form.
class BoxSet {
  public:
    BoxSet() = default;
    BoxSet(std::size_t dim, std::vector<Box> boxes);

    static BoxSet full(std::size_t dim);
    static BoxSet interval(const Rat& lo, const Rat& hi);                 // d = 1
    static BoxSet product(const BoxSet& a, const BoxSet& b);              // concatenates axes

    std::size_t dim() const { return dim_; }
    const std::vector<Box>& boxes() const { return boxes_; }
    bool empty() const { return boxes_.empty(); }

    Rat measure() const;

    bool contains(const std::vector<Rat>& x) const;
    bool contains(const std::vector<double>& x) const;

    /// Union of the coordinate-i intervals over all boxes (merged, sorted).
    std::vector<std::pair<Rat, Rat>> axis_intervals(std::size_t axis) const;

  private:
    std::size_t dim_ = 0;
    std::vector<Box> boxes_;
};

/// Sorted disjoint arcs covering the intersection of unions of circle arcs;
/// each input is a union of half-open intervals mod 1 given by endpoints in
/// any real position (reduced mod 1 internally). Returns total measure.
Rat circle_intersection_measure(const std::vector<std::vector<std::pair<Rat, Rat>>>& unions);

}  // namespace polyerg
