#ifndef PWROT_GEOMETRY_HPP
#define PWROT_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "pwrot/cyclotomic.hpp"

namespace pwrot {

// Points are complex field elements z = x + i*y.  The geometry layer insists
// on fields containing i (4 | n), so coordinates and half-plane coefficients
// are always honest field elements.
using Point = Cyclo;

Point make_point(const Cyclo& x, const Cyclo& y);
Cyclo point_x(const Point& p);
Cyclo point_y(const Point& p);

// Orientation-preserving similarity z -> mul*z + add with mul != 0.
// Isometries are the |mul| = 1 case.
struct Similarity {
    Cyclo mul, add;

    static Similarity identity(unsigned n) { return {Cyclo::one(n), Cyclo::zero(n)}; }
    bool is_isometry() const { return (mul * mul.conj()) == Cyclo::one(mul.order()); }
    bool is_identity() const {
        return mul == Cyclo::one(mul.order()) && add.is_zero();
    }
    Point operator()(const Point& p) const { return mul * p + add; }
    // composition: apply this first, then g
    Similarity then(const Similarity& g) const { return {g.mul * mul, g.mul * add + g.add}; }
    Similarity inverse() const {
        Cyclo inv = mul.inverse();
        return {inv, -(inv * add)};
    }
    bool operator==(const Similarity& o) const { return mul == o.mul && add == o.add; }
    std::string str() const;
};

// Open half-plane {(x,y) : a x + b y + c > 0}, coefficients in the maximal
// real subfield.  Stored normalized: first nonzero of (a,b) scaled to +-1.
struct HalfPlane {
    Cyclo a, b, c;

    HalfPlane(Cyclo a_, Cyclo b_, Cyclo c_);
    static HalfPlane upper(unsigned n);  // y > 0
    static HalfPlane lower(unsigned n);  // y < 0

    unsigned order() const { return a.order(); }
    HalfPlane complement() const;  // opposite open side
    Cyclo eval(const Point& p) const;
    bool operator==(const HalfPlane& o) const { return a == o.a && b == o.b && c == o.c; }
    std::string str() const;
};

struct VRep {
    bool empty = false;
    bool whole_plane = false;
    std::vector<Point> vertices;  // counterclockwise boundary order
    std::vector<Point> rays;      // recession directions, at most two after dedupe
    bool bounded() const { return !empty && !whole_plane && rays.empty(); }
};

// Intersection of finitely many open half-planes, kept in a canonical
// irredundant form, so set equality is list equality.
class ConvexRegion {
public:
    ConvexRegion() : n_(4), empty_(false) {}  // whole plane over Q(i)
    explicit ConvexRegion(unsigned n) : n_(n), empty_(false) {}

    static ConvexRegion whole_plane(unsigned n) { return ConvexRegion(n); }
    static ConvexRegion empty_region(unsigned n);
    static ConvexRegion from_halfplanes(std::vector<HalfPlane> hs);

    unsigned order() const { return n_; }
    const std::vector<HalfPlane>& halfplanes() const { return hs_; }
    bool is_empty() const { return empty_; }
    bool is_whole_plane() const { return !empty_ && hs_.empty(); }

    ConvexRegion clipped(const HalfPlane& h) const;
    ConvexRegion intersect(const ConvexRegion& o) const;
    // this minus the closure of o, as disjoint open pieces
    std::vector<ConvexRegion> subtract(const ConvexRegion& o) const;

    enum class Location { interior, boundary, outside };
    Location locate(const Point& p) const;
    bool contains_region(const ConvexRegion& o) const;  // o subseteq this (up to boundary)

    ConvexRegion transformed(const Similarity& g) const;

    const VRep& vrep() const;  // cached
    bool is_bounded() const { return vrep().bounded(); }
    // exact area; nullopt designates an unbounded region
    std::optional<Cyclo> area() const;
    Point interior_point() const;  // requires nonempty

    bool operator==(const ConvexRegion& o) const;
    std::string str() const;
    size_t hash() const;

    // closures share a boundary segment of positive length
    static bool share_boundary_segment(const ConvexRegion& r1, const ConvexRegion& r2);

private:
    void canonicalize();

    unsigned n_;
    std::vector<HalfPlane> hs_;
    bool empty_ = false;
    mutable std::optional<VRep> vrep_;
};

int sign_of(const Cyclo& real_value);  // sign of a real field element

}  // namespace pwrot

#endif
