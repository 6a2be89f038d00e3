#include <doctest.h>

#include <cmath>
#include <random>

#include "pwrot/geometry.hpp"

using namespace pwrot;

namespace {

Cyclo rat(long num, long den = 1, unsigned n = 4) { return Cyclo::from_rational(n, mpq_class(num, den)); }

ConvexRegion box_region(mpq_class x0, mpq_class y0, mpq_class x1, mpq_class y1, unsigned n = 4) {
    Cyclo one = Cyclo::one(n), zero = Cyclo::zero(n);
    return ConvexRegion::from_halfplanes({
        HalfPlane(one, zero, Cyclo::from_rational(n, -x0)),
        HalfPlane(zero, one, Cyclo::from_rational(n, -y0)),
        HalfPlane(-one, zero, Cyclo::from_rational(n, x1)),
        HalfPlane(zero, -one, Cyclo::from_rational(n, y1)),
    });
}

Point pt(mpq_class x, mpq_class y, unsigned n = 4) {
    return make_point(Cyclo::from_rational(n, x), Cyclo::from_rational(n, y));
}

Cyclo sqrt3() {
    Cyclo z = Cyclo::zeta(12);
    return z + z.conj();
}

// cone with vertex (-1,0) between directions 120 and 180 degrees
ConvexRegion cone_sixth() {
    Cyclo s3 = sqrt3();
    unsigned n = 12;
    return ConvexRegion::from_halfplanes({
        HalfPlane(Cyclo::zero(n), Cyclo::one(n), Cyclo::zero(n)),
        HalfPlane(-s3, -Cyclo::one(n), -s3),
    });
}

}  // namespace

TEST_CASE("halfplane normalization and evaluation") {
    unsigned n = 4;
    HalfPlane h(rat(2), rat(4), rat(6));
    CHECK(h.a == Cyclo::one(n));
    CHECK(h.b == rat(2));
    CHECK(h.c == rat(3));
    CHECK(sign_of(h.eval(pt(0, 0))) == 1);
    CHECK(sign_of(h.eval(pt(-3, 0))) == 0);
    CHECK(sign_of(h.eval(pt(-10, 0))) == -1);
    CHECK(h.complement().complement() == h);
    CHECK_THROWS(HalfPlane(rat(0), rat(0), rat(1)));
}

TEST_CASE("region construction basics") {
    ConvexRegion plane = ConvexRegion::whole_plane(4);
    CHECK(plane.is_whole_plane());
    CHECK(plane.locate(pt(3, -7)) == ConvexRegion::Location::interior);

    ConvexRegion upper = ConvexRegion::from_halfplanes({HalfPlane::upper(4)});
    CHECK(!upper.is_empty());
    CHECK(!upper.is_bounded());
    CHECK(upper.locate(pt(5, 1)) == ConvexRegion::Location::interior);
    CHECK(upper.locate(pt(5, 0)) == ConvexRegion::Location::boundary);
    CHECK(upper.locate(pt(5, -1)) == ConvexRegion::Location::outside);

    ConvexRegion nothing = ConvexRegion::from_halfplanes({HalfPlane::upper(4), HalfPlane::lower(4)});
    CHECK(nothing.is_empty());
}

TEST_CASE("unit square vertices and area") {
    ConvexRegion sq = box_region(0, 0, 1, 1);
    const VRep& v = sq.vrep();
    REQUIRE(v.vertices.size() == 4);
    CHECK(v.rays.empty());
    CHECK(sq.is_bounded());
    auto a = sq.area();
    REQUIRE(a.has_value());
    CHECK(*a == Cyclo::one(sq.order()));
    // counterclockwise ordering
    for (size_t i = 0; i < 4; ++i) {
        Point p = v.vertices[i], q = v.vertices[(i + 1) % 4], r = v.vertices[(i + 2) % 4];
        Cyclo cr = ((q - p).conj() * (r - q)).imag_part();
        CHECK(sign_of(cr) >= 0);
    }
    CHECK(sq.locate(pt(mpq_class(1, 2), mpq_class(1, 2))) == ConvexRegion::Location::interior);
    CHECK(sq.locate(pt(0, mpq_class(1, 2))) == ConvexRegion::Location::boundary);
    CHECK(sq.locate(pt(2, 0)) == ConvexRegion::Location::outside);
}

TEST_CASE("clipping") {
    ConvexRegion plane = ConvexRegion::whole_plane(4);
    ConvexRegion upper = plane.clipped(HalfPlane::upper(4));
    CHECK(upper == ConvexRegion::from_halfplanes({HalfPlane::upper(4)}));
    CHECK(upper.clipped(HalfPlane::upper(4)) == upper);

    ConvexRegion sq = box_region(0, 0, 1, 1);
    ConvexRegion half = sq.clipped(HalfPlane(Cyclo::one(4), Cyclo::zero(4), rat(-1, 2)));
    auto a = half.area();
    REQUIRE(a.has_value());
    CHECK(*a == Cyclo::from_rational(half.order(), mpq_class(1, 2)));
}

TEST_CASE("area additivity under clipping") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> coef(-3, 3);
    ConvexRegion sq = box_region(-1, -1, 2, 1);
    for (int t = 0; t < 25; ++t) {
        long a = coef(rng), b = coef(rng), c = coef(rng);
        if (a == 0 && b == 0) continue;
        HalfPlane h(rat(a), rat(b), rat(c));
        auto a1 = sq.clipped(h).area();
        auto a2 = sq.clipped(h.complement()).area();
        auto tot = sq.area();
        REQUIRE(a1.has_value());
        REQUIRE(a2.has_value());
        CHECK(*a1 + *a2 == *tot);
    }
}

TEST_CASE("redundant constraints removed") {
    ConvexRegion r = ConvexRegion::from_halfplanes({
        HalfPlane::upper(4),
        HalfPlane(Cyclo::zero(4), Cyclo::one(4), rat(1)),  // y > -1, implied
    });
    CHECK(r.halfplanes().size() == 1);
    CHECK(r == ConvexRegion::from_halfplanes({HalfPlane::upper(4)}));
}

TEST_CASE("wedge cone has one vertex and two rays") {
    ConvexRegion cone = cone_sixth();
    const VRep& v = cone.vrep();
    REQUIRE(v.vertices.size() == 1);
    CHECK(v.vertices[0] == pt(-1, 0, 12));
    REQUIRE(v.rays.size() == 2);
    CHECK(!cone.is_bounded());
    CHECK(!cone.area().has_value());
    CHECK(cone.locate(pt(-3, 1, 12)) == ConvexRegion::Location::interior);
    CHECK(cone.locate(pt(0, 1, 12)) == ConvexRegion::Location::outside);
    Point ip = cone.interior_point();
    CHECK(cone.locate(ip) == ConvexRegion::Location::interior);
}

TEST_CASE("strip and half-plane vreps") {
    ConvexRegion strip = ConvexRegion::from_halfplanes({
        HalfPlane::upper(4),
        HalfPlane(Cyclo::zero(4), -Cyclo::one(4), rat(1)),  // y < 1
    });
    const VRep& v = strip.vrep();
    CHECK(v.vertices.empty());
    REQUIRE(v.rays.size() == 2);
    CHECK(!strip.is_bounded());
    Point ip = strip.interior_point();
    CHECK(strip.locate(ip) == ConvexRegion::Location::interior);

    ConvexRegion tight = ConvexRegion::from_halfplanes({
        HalfPlane::upper(4),
        HalfPlane(Cyclo::zero(4), -Cyclo::one(4), rat(0)),  // y < 0
    });
    CHECK(tight.is_empty());
}

TEST_CASE("half-strip has two vertices and one recession direction") {
    ConvexRegion hs = ConvexRegion::from_halfplanes({
        HalfPlane::upper(4),
        HalfPlane(Cyclo::zero(4), -Cyclo::one(4), rat(1)),
        HalfPlane(Cyclo::one(4), Cyclo::zero(4), rat(0)),  // x > 0
    });
    const VRep& v = hs.vrep();
    CHECK(v.vertices.size() == 2);
    CHECK(v.rays.size() == 1);
}

TEST_CASE("transform by isometries") {
    ConvexRegion sq = box_region(0, 0, 1, 1);
    Similarity shift{Cyclo::one(4), Cyclo::from_rational(4, 1)};  // z + 1
    ConvexRegion moved = sq.transformed(shift);
    CHECK(moved == box_region(1, 0, 2, 1));
    CHECK(*moved.area() == *sq.area());

    Similarity rot{Cyclo::zeta(4), Cyclo::zero(4)};  // z -> iz
    ConvexRegion upper = ConvexRegion::from_halfplanes({HalfPlane::upper(4)});
    ConvexRegion left = upper.transformed(rot);
    CHECK(left == ConvexRegion::from_halfplanes({HalfPlane(-Cyclo::one(4), Cyclo::zero(4), Cyclo::zero(4))}));

    // square centered at -1+i is invariant under the quarter turn about -1+i
    ConvexRegion inv_sq = box_region(-2, 0, 0, 2);
    Similarity g{Cyclo::zeta(4), Cyclo::zeta(4).scaled(2)};  // i z + 2i
    CHECK(inv_sq.transformed(g) == inv_sq);

    // round trip through the inverse
    ConvexRegion cone = cone_sixth();
    Similarity h{Cyclo::zeta(12, 5), make_point(rat(1, 3, 12), rat(-7, 2, 12))};
    CHECK(cone.transformed(h).transformed(h.inverse()) == cone);
}

TEST_CASE("octagon area matches the float oracle") {
    unsigned n = 8;
    Cyclo half = Cyclo::from_rational(n, mpq_class(1, 2));
    std::vector<HalfPlane> hs;
    for (int k = 0; k < 8; ++k) {
        Cyclo zk = Cyclo::zeta(n, k);
        hs.push_back(HalfPlane(-zk.real_part(), -zk.imag_part(), half));
    }
    ConvexRegion oct = ConvexRegion::from_halfplanes(hs);
    CHECK(oct.halfplanes().size() == 8);
    auto a = oct.area();
    REQUIRE(a.has_value());
    double expect = 8.0 * 0.25 * std::tan(M_PI / 8.0);
    auto box = a->approx(60);
    CHECK(box.re.lo_d() <= expect + 1e-12);
    CHECK(box.re.hi_d() >= expect - 1e-12);
    CHECK(oct.vrep().vertices.size() == 8);
}

TEST_CASE("region equality is representation independent") {
    ConvexRegion a = box_region(0, 0, 1, 1);
    ConvexRegion b = ConvexRegion::from_halfplanes({
        HalfPlane(Cyclo::zero(4), -Cyclo::one(4), rat(1)),
        HalfPlane(Cyclo::one(4), Cyclo::zero(4), rat(0)),
        HalfPlane(Cyclo::zero(4), Cyclo::one(4), rat(0)),
        HalfPlane(-Cyclo::one(4), Cyclo::zero(4), rat(1)),
        HalfPlane(Cyclo::one(4), Cyclo::one(4), rat(2)),  // redundant
    });
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
    CHECK(!(a == box_region(1, 0, 2, 1)));
}

TEST_CASE("subtraction yields disjoint pieces covering the difference") {
    ConvexRegion big = box_region(0, 0, 3, 3);
    ConvexRegion hole = box_region(1, 1, 2, 2);
    auto pieces = big.subtract(hole);
    Cyclo total = Cyclo::zero(4);
    for (const auto& p : pieces) {
        auto a = p.area();
        REQUIRE(a.has_value());
        Cyclo v = *a;
        Cyclo::lift_pair(total, v);
        total = total + v;
    }
    CHECK(total == Cyclo::from_rational(total.order(), 8));
    for (size_t i = 0; i < pieces.size(); ++i)
        for (size_t j = i + 1; j < pieces.size(); ++j)
            CHECK(pieces[i].intersect(pieces[j]).is_empty());
    for (const auto& p : pieces) CHECK(p.intersect(hole).is_empty());
}

TEST_CASE("contains_region") {
    ConvexRegion big = box_region(0, 0, 3, 3);
    ConvexRegion small = box_region(1, 1, 2, 2);
    CHECK(big.contains_region(small));
    CHECK(!small.contains_region(big));
    CHECK(big.contains_region(ConvexRegion::empty_region(4)));
    // closure containment counts
    CHECK(big.contains_region(box_region(0, 0, 3, 1)));
}

TEST_CASE("shared boundary segments") {
    ConvexRegion a = box_region(0, 0, 1, 1);
    ConvexRegion b = box_region(1, 0, 2, 1);
    ConvexRegion c = box_region(2, 5, 3, 6);
    ConvexRegion corner = box_region(1, 1, 2, 2);
    CHECK(ConvexRegion::share_boundary_segment(a, b));
    CHECK(!ConvexRegion::share_boundary_segment(a, c));
    CHECK(!ConvexRegion::share_boundary_segment(a, corner));  // single point only
}

TEST_CASE("interior points land inside") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<long> coef(-4, 4);
    int built = 0;
    for (int t = 0; t < 60 && built < 25; ++t) {
        std::vector<HalfPlane> hs;
        int m = 2 + static_cast<int>(rng() % 4);
        bool ok = true;
        for (int k = 0; k < m; ++k) {
            long a = coef(rng), b = coef(rng), c = coef(rng);
            if (a == 0 && b == 0) {
                ok = false;
                break;
            }
            hs.push_back(HalfPlane(rat(a), rat(b), rat(c)));
        }
        if (!ok) continue;
        ConvexRegion r = ConvexRegion::from_halfplanes(hs);
        if (r.is_empty()) continue;
        ++built;
        CHECK(r.locate(r.interior_point()) == ConvexRegion::Location::interior);
    }
    CHECK(built > 0);
}
