#include "intervals.h"

#include <algorithm>
#include <sstream>

namespace rp {

bool Interval::contains(const Scalar& v) const
{
    int a = cmp(v, lo), b = cmp(v, hi);
    if (a < 0 || b > 0)
        return false;
    if (a == 0 && !lo_closed)
        return false;
    if (b == 0 && !hi_closed)
        return false;
    return true;
}

Scalar Interval::interior_point() const
{
    if (lo == hi)
        return lo;
    Scalar m = (lo + hi) / 2;
    return m;
}

bool Interval::operator==(const Interval& o) const
{
    return lo == o.lo && hi == o.hi && lo_closed == o.lo_closed && hi_closed == o.hi_closed;
}

std::string Interval::str() const
{
    std::ostringstream os;
    os << (lo_closed ? "[" : "(") << format_scalar(lo) << ", " << format_scalar(hi) << (hi_closed ? "]" : ")");
    return os.str();
}

// does a (sorted before b) reach b so that the union is connected?
static bool joins(const Interval& a, const Interval& b)
{
    int c = cmp(a.hi, b.lo);
    if (c > 0)
        return true;
    if (c < 0)
        return false;
    return a.hi_closed || b.lo_closed;
}

static bool starts_before(const Interval& a, const Interval& b)
{
    int c = cmp(a.lo, b.lo);
    if (c != 0)
        return c < 0;
    return a.lo_closed && !b.lo_closed;
}

void IntervalSet::add(const Interval& iv)
{
    if (iv.empty())
        return;
    std::vector<Interval> all = parts_;
    all.push_back(iv);
    std::sort(all.begin(), all.end(), starts_before);
    std::vector<Interval> out;
    for (auto& cur : all) {
        if (!out.empty() && joins(out.back(), cur)) {
            Interval& last = out.back();
            int c = cmp(cur.hi, last.hi);
            if (c > 0) {
                last.hi = cur.hi;
                last.hi_closed = cur.hi_closed;
            } else if (c == 0) {
                last.hi_closed = last.hi_closed || cur.hi_closed;
            }
            if (cur.lo == last.lo)
                last.lo_closed = last.lo_closed || cur.lo_closed;
        } else {
            out.push_back(cur);
        }
    }
    parts_ = std::move(out);
}

void IntervalSet::unite(const IntervalSet& other)
{
    for (auto& iv : other.parts_)
        add(iv);
}

IntervalSet IntervalSet::united(const IntervalSet& other) const
{
    IntervalSet r = *this;
    r.unite(other);
    return r;
}

IntervalSet IntervalSet::intersected(const IntervalSet& other) const
{
    IntervalSet r;
    for (auto& a : parts_) {
        for (auto& b : other.parts_) {
            Interval x;
            int c = cmp(a.lo, b.lo);
            if (c > 0) { x.lo = a.lo; x.lo_closed = a.lo_closed; }
            else if (c < 0) { x.lo = b.lo; x.lo_closed = b.lo_closed; }
            else { x.lo = a.lo; x.lo_closed = a.lo_closed && b.lo_closed; }
            c = cmp(a.hi, b.hi);
            if (c < 0) { x.hi = a.hi; x.hi_closed = a.hi_closed; }
            else if (c > 0) { x.hi = b.hi; x.hi_closed = b.hi_closed; }
            else { x.hi = a.hi; x.hi_closed = a.hi_closed && b.hi_closed; }
            r.add(x);
        }
    }
    return r;
}

IntervalSet IntervalSet::minus(const IntervalSet& other) const
{
    std::vector<Interval> cur = parts_;
    for (auto& b : other.parts_) {
        std::vector<Interval> next;
        for (auto& a : cur) {
            // left remainder: a ∩ (-inf, b.lo) with b.lo's complement status
            Interval left{a.lo, b.lo, a.lo_closed, !b.lo_closed};
            if (cmp(a.hi, b.lo) < 0 || (a.hi == b.lo && !(a.hi_closed && b.lo_closed))) {
                next.push_back(a);
                continue;
            }
            if (cmp(b.hi, a.lo) < 0 || (b.hi == a.lo && !(b.hi_closed && a.lo_closed))) {
                next.push_back(a);
                continue;
            }
            if (!left.empty() && cmp(left.lo, left.hi) <= 0)
                next.push_back(left);
            Interval right{b.hi, a.hi, !b.hi_closed, a.hi_closed};
            if (!right.empty() && cmp(right.lo, right.hi) <= 0)
                next.push_back(right);
        }
        cur = std::move(next);
    }
    IntervalSet r;
    for (auto& iv : cur)
        r.add(iv);
    return r;
}

bool IntervalSet::contains(const Scalar& v) const
{
    for (auto& iv : parts_)
        if (iv.contains(v))
            return true;
    return false;
}

Scalar IntervalSet::measure() const
{
    Scalar m = 0;
    for (auto& iv : parts_)
        m += iv.hi - iv.lo;
    return m;
}

std::string IntervalSet::str() const
{
    if (parts_.empty())
        return "{}";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i)
        os << (i ? " u " : "") << parts_[i].str();
    return os.str();
}

IntervalSet interval_union(const std::vector<Interval>& ivs)
{
    IntervalSet r;
    for (auto& iv : ivs)
        r.add(iv);
    return r;
}

IntervalSet interval_subtract(const Interval& a, const Interval& b)
{
    return IntervalSet(a).minus(IntervalSet(b));
}

}  // namespace rp
