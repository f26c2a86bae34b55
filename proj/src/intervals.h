#pragma once

#include "geom.h"

#include <string>
#include <vector>

namespace rp {

// Interval of a scalar parameter with per-end open/closed status.
// A single point is [v,v] with both ends closed.
struct Interval {
    Scalar lo, hi;
    bool lo_closed = true, hi_closed = true;

    static Interval closed(Scalar a, Scalar b) { return {std::move(a), std::move(b), true, true}; }
    static Interval open(Scalar a, Scalar b) { return {std::move(a), std::move(b), false, false}; }
    static Interval point(const Scalar& v) { return {v, v, true, true}; }

    bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
    bool is_point() const { return lo == hi && lo_closed && hi_closed; }
    bool contains(const Scalar& v) const;
    // a point strictly inside, or the single point
    Scalar interior_point() const;
    bool operator==(const Interval& o) const;
    std::string str() const;
};

// Sorted, disjoint, maximally merged union of intervals.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(const Interval& iv) { add(iv); }

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    size_t size() const { return parts_.size(); }

    void add(const Interval& iv);
    void unite(const IntervalSet& other);
    IntervalSet united(const IntervalSet& other) const;
    IntervalSet minus(const IntervalSet& other) const;
    IntervalSet intersected(const IntervalSet& other) const;
    IntervalSet intersected(const Interval& iv) const { return intersected(IntervalSet(iv)); }
    bool contains(const Scalar& v) const;
    bool covers(const IntervalSet& other) const { return other.minus(*this).empty(); }
    Scalar measure() const;

    bool operator==(const IntervalSet& o) const { return parts_ == o.parts_; }
    std::string str() const;

private:
    std::vector<Interval> parts_;
};

IntervalSet interval_union(const std::vector<Interval>& ivs);
IntervalSet interval_subtract(const Interval& a, const Interval& b);

}  // namespace rp
