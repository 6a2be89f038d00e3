#include "pwrot/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pwrot {

int sign_of(const Cyclo& v) {
    assert(v.is_real());
    return v.sign_real();
}

Point make_point(const Cyclo& x, const Cyclo& y) {
    unsigned n = Cyclo::common_order(x, y);
    if (n % 4 != 0) n = std::lcm(n, 4u);
    return x.lifted(n) + imaginary_unit(n) * y.lifted(n);
}

Cyclo point_x(const Point& p) { return p.real_part(); }

Cyclo point_y(const Point& p) {
    if (p.order() % 4 != 0) return p.lifted(std::lcm(p.order(), 4u)).imag_part();
    return p.imag_part();
}

std::string Similarity::str() const {
    return "z -> (" + mul.str() + ")*z + (" + add.str() + ")";
}

namespace {

Cyclo cross2(const Cyclo& ax, const Cyclo& ay, const Cyclo& bx, const Cyclo& by) {
    return ax * by - ay * bx;
}

Cyclo dot2(const Cyclo& ax, const Cyclo& ay, const Cyclo& bx, const Cyclo& by) {
    return ax * bx + ay * by;
}

// octant of a nonzero direction, counterclockwise from the positive x-axis
int angle_class(int sa, int sb) {
    if (sa > 0 && sb == 0) return 0;
    if (sa > 0 && sb > 0) return 1;
    if (sa == 0 && sb > 0) return 2;
    if (sa < 0 && sb > 0) return 3;
    if (sa < 0 && sb == 0) return 4;
    if (sa < 0 && sb < 0) return 5;
    if (sa == 0 && sb < 0) return 6;
    return 7;
}

struct AngleKey {
    int cls;
    const HalfPlane* h;
};

// strict "normal of h1 comes before normal of h2" in counterclockwise order
bool normal_angle_less(const HalfPlane& h1, const HalfPlane& h2) {
    int c1 = angle_class(sign_of(h1.a), sign_of(h1.b));
    int c2 = angle_class(sign_of(h2.a), sign_of(h2.b));
    if (c1 != c2) return c1 < c2;
    int cr = sign_of(cross2(h1.a, h1.b, h2.a, h2.b));
    if (cr != 0) return cr > 0;
    // parallel same-direction: order by offset, then by text for determinism
    Cyclo d = h1.c - h2.c;
    int s = sign_of(d);
    if (s != 0) return s < 0;
    return h1.str() < h2.str();
}

std::optional<Point> line_intersection(const HalfPlane& h1, const HalfPlane& h2) {
    Cyclo det = cross2(h1.a, h1.b, h2.a, h2.b);
    if (sign_of(det) == 0) return std::nullopt;
    // a1 x + b1 y = -c1 ; a2 x + b2 y = -c2
    Cyclo x = (h1.b * h2.c - h2.b * h1.c) / det;
    Cyclo y = (h2.a * h1.c - h1.a * h2.c) / det;
    return make_point(x, y);
}

Point boundary_point(const HalfPlane& h) {
    unsigned n = h.order();
    Cyclo zero = Cyclo::zero(n);
    if (sign_of(h.b) != 0) return make_point(zero, -(h.c / h.b));
    return make_point(-(h.c / h.a), zero);
}

}  // namespace

HalfPlane::HalfPlane(Cyclo a_, Cyclo b_, Cyclo c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    unsigned n = std::lcm(Cyclo::common_order(a, b), c.order());
    if (n % 4 != 0) n = std::lcm(n, 4u);
    a = a.lifted(n);
    b = b.lifted(n);
    c = c.lifted(n);
    int sa = sign_of(a);
    int sb = sign_of(b);
    if (sa == 0 && sb == 0) throw std::invalid_argument("degenerate half-plane");
    // scale so the first nonzero of (a,b) becomes +-1
    Cyclo scale = sa != 0 ? a : b;
    if ((sa != 0 ? sa : sb) < 0) scale = -scale;
    a = a / scale;
    b = b / scale;
    c = c / scale;
}

HalfPlane HalfPlane::upper(unsigned n) {
    unsigned m = n % 4 == 0 ? n : std::lcm(n, 4u);
    return HalfPlane(Cyclo::zero(m), Cyclo::one(m), Cyclo::zero(m));
}

HalfPlane HalfPlane::lower(unsigned n) {
    unsigned m = n % 4 == 0 ? n : std::lcm(n, 4u);
    return HalfPlane(Cyclo::zero(m), -Cyclo::one(m), Cyclo::zero(m));
}

HalfPlane HalfPlane::complement() const { return HalfPlane(-a, -b, -c); }

Cyclo HalfPlane::eval(const Point& p) const {
    Point q = p.order() == order() ? p : p.lifted(std::lcm(p.order(), order()));
    if (q.order() != order()) {
        HalfPlane h(a.lifted(q.order()), b.lifted(q.order()), c.lifted(q.order()));
        return h.eval(q);
    }
    return a * q.real_part() + b * q.imag_part() + c;
}

std::string HalfPlane::str() const {
    return "(" + a.str() + ")x + (" + b.str() + ")y + (" + c.str() + ") > 0";
}

ConvexRegion ConvexRegion::empty_region(unsigned n) {
    ConvexRegion r(n % 4 == 0 ? n : std::lcm(n, 4u));
    r.empty_ = true;
    return r;
}

ConvexRegion ConvexRegion::from_halfplanes(std::vector<HalfPlane> hs) {
    unsigned n = 4;
    for (const auto& h : hs) n = std::lcm(n, h.order());
    ConvexRegion r(n);
    for (auto& h : hs)
        r.hs_.push_back(HalfPlane(h.a.lifted(n), h.b.lifted(n), h.c.lifted(n)));
    r.canonicalize();
    return r;
}

ConvexRegion ConvexRegion::clipped(const HalfPlane& h) const {
    if (empty_) return *this;
    std::vector<HalfPlane> hs = hs_;
    hs.push_back(h);
    return from_halfplanes(std::move(hs));
}

ConvexRegion ConvexRegion::intersect(const ConvexRegion& o) const {
    if (empty_) return *this;
    if (o.empty_) return o;
    std::vector<HalfPlane> hs = hs_;
    hs.insert(hs.end(), o.hs_.begin(), o.hs_.end());
    return from_halfplanes(std::move(hs));
}

std::vector<ConvexRegion> ConvexRegion::subtract(const ConvexRegion& o) const {
    std::vector<ConvexRegion> pieces;
    if (empty_) return pieces;
    if (o.empty_ || o.is_whole_plane()) {
        if (o.empty_) pieces.push_back(*this);
        return pieces;
    }
    ConvexRegion rem = *this;
    for (const auto& h : o.hs_) {
        ConvexRegion piece = rem.clipped(h.complement());
        if (!piece.is_empty()) pieces.push_back(piece);
        rem = rem.clipped(h);
        if (rem.is_empty()) break;
    }
    return pieces;
}

ConvexRegion::Location ConvexRegion::locate(const Point& p) const {
    if (empty_) return Location::outside;
    bool on_boundary = false;
    for (const auto& h : hs_) {
        int s = sign_of(h.eval(p));
        if (s < 0) return Location::outside;
        if (s == 0) on_boundary = true;
    }
    return on_boundary ? Location::boundary : Location::interior;
}

bool ConvexRegion::contains_region(const ConvexRegion& o) const {
    if (o.is_empty()) return true;
    if (empty_) return false;
    for (const auto& h : hs_) {
        if (!o.clipped(h.complement()).is_empty()) return false;
    }
    return true;
}

ConvexRegion ConvexRegion::transformed(const Similarity& g) const {
    if (empty_) return *this;
    unsigned n = std::lcm(std::lcm(n_, g.mul.order()), g.add.order());
    if (n % 4 != 0) n = std::lcm(n, 4u);
    Cyclo rho = g.mul.lifted(n), t = g.add.lifted(n);
    Cyclo i = imaginary_unit(n);
    std::vector<HalfPlane> out;
    out.reserve(hs_.size());
    for (const auto& h : hs_) {
        Cyclo w = h.a.lifted(n) + i * h.b.lifted(n);
        Cyclo v = w.conj() / rho;
        // constraint Re(v z) + c' > 0 with c' = c - Re(v t)
        Cyclo vre = v.real_part(), vim = v.imag_part();
        Cyclo cp = h.c.lifted(n) - (v * t).real_part();
        out.push_back(HalfPlane(vre, -vim, cp));
    }
    ConvexRegion r(n);
    r.hs_ = std::move(out);
    r.canonicalize();
    return r;
}

void ConvexRegion::canonicalize() {
    vrep_.reset();
    empty_ = false;
    // dedupe
    std::vector<HalfPlane> hs;
    for (const auto& h : hs_) {
        bool dup = false;
        for (const auto& g : hs)
            if (g == h) {
                dup = true;
                break;
            }
        if (!dup) hs.push_back(h);
    }
    hs_ = std::move(hs);
    if (hs_.empty()) return;

    // all normals pairwise parallel?
    bool all_parallel = true;
    for (size_t i = 1; i < hs_.size() && all_parallel; ++i)
        if (sign_of(cross2(hs_[0].a, hs_[0].b, hs_[i].a, hs_[i].b)) != 0) all_parallel = false;

    if (all_parallel) {
        // 1-dimensional: constraints s*(a0 x + b0 y) + c > 0 with s = +-1
        // keep the tightest lower and upper bound on u = a0 x + b0 y
        std::optional<size_t> lower, upper;  // u > -c (s=+1), u < c (s=-1)
        for (size_t i = 0; i < hs_.size(); ++i) {
            bool same_dir = sign_of(dot2(hs_[0].a, hs_[0].b, hs_[i].a, hs_[i].b)) > 0;
            if (same_dir) {
                if (!lower || sign_of(hs_[i].c - hs_[*lower].c) < 0) lower = i;
            } else {
                if (!upper || sign_of(hs_[i].c - hs_[*upper].c) < 0) upper = i;
            }
        }
        if (lower && upper) {
            // u > -c_l and -u > -c_u i.e. u < c_u (in normalized first-sign terms both stored generically)
            // nonempty iff there is u with both strict: f_l + f_u evaluated consistently:
            // f_l(x)+f_u(x) = c_l + c_u must be positive somewhere on the line; since
            // the linear parts cancel, the sum is constant:
            Cyclo s = hs_[*lower].c + hs_[*upper].c;
            if (sign_of(s) <= 0) {
                hs_.clear();
                empty_ = true;
                return;
            }
        }
        std::vector<HalfPlane> keep;
        if (lower) keep.push_back(hs_[*lower]);
        if (upper) keep.push_back(hs_[*upper]);
        std::sort(keep.begin(), keep.end(), normal_angle_less);
        hs_ = std::move(keep);
        return;
    }

    // general position: enumerate candidate vertices of the closure
    auto feasible_closed = [&](const Point& p) {
        for (const auto& h : hs_)
            if (sign_of(h.eval(p)) < 0) return false;
        return true;
    };
    std::vector<Point> verts;
    for (size_t i = 0; i < hs_.size(); ++i)
        for (size_t j = i + 1; j < hs_.size(); ++j) {
            auto p = line_intersection(hs_[i], hs_[j]);
            if (!p) continue;
            if (!feasible_closed(*p)) continue;
            bool dup = false;
            for (const auto& q : verts)
                if (q == *p) {
                    dup = true;
                    break;
                }
            if (!dup) verts.push_back(*p);
        }
    if (verts.empty()) {
        hs_.clear();
        empty_ = true;
        return;
    }

    // full-dimension test at one vertex: the feasible cone of the active
    // constraints must contain two independent directions
    {
        const Point& v = verts.front();
        std::vector<size_t> active;
        for (size_t i = 0; i < hs_.size(); ++i)
            if (sign_of(hs_[i].eval(v)) == 0) active.push_back(i);
        bool fulldim = active.empty();
        if (!fulldim) {
            std::vector<std::pair<Cyclo, Cyclo>> cands;
            for (size_t i : active) {
                cands.push_back({hs_[i].b, -hs_[i].a});
                cands.push_back({-hs_[i].b, hs_[i].a});
                cands.push_back({hs_[i].a, hs_[i].b});
            }
            auto cone_ok = [&](const std::pair<Cyclo, Cyclo>& d) {
                for (size_t i : active)
                    if (sign_of(dot2(hs_[i].a, hs_[i].b, d.first, d.second)) < 0) return false;
                return true;
            };
            std::vector<std::pair<Cyclo, Cyclo>> feas;
            for (const auto& d : cands)
                if (cone_ok(d)) feas.push_back(d);
            for (size_t i = 0; i < feas.size() && !fulldim; ++i)
                for (size_t j = i + 1; j < feas.size() && !fulldim; ++j)
                    if (sign_of(cross2(feas[i].first, feas[i].second, feas[j].first, feas[j].second)) != 0)
                        fulldim = true;
        }
        if (!fulldim) {
            hs_.clear();
            empty_ = true;
            return;
        }
    }

    // redundancy elimination
    for (size_t i = 0; i < hs_.size();) {
        std::vector<HalfPlane> others;
        for (size_t j = 0; j < hs_.size(); ++j)
            if (j != i) others.push_back(hs_[j]);
        if (others.empty()) break;
        const HalfPlane& f = hs_[i];
        bool unbounded_below = false;
        // candidate extreme directions of the recession cone of the others,
        // intersected with {f decreasing}; normals cover half-plane cones
        std::vector<std::pair<Cyclo, Cyclo>> dirs;
        for (const auto& h : others) {
            dirs.push_back({h.b, -h.a});
            dirs.push_back({-h.b, h.a});
            dirs.push_back({h.a, h.b});
        }
        dirs.push_back({f.b, -f.a});
        dirs.push_back({-f.b, f.a});
        for (const auto& d : dirs) {
            bool ok = true;
            for (const auto& h : others)
                if (sign_of(dot2(h.a, h.b, d.first, d.second)) < 0) {
                    ok = false;
                    break;
                }
            if (ok && sign_of(dot2(f.a, f.b, d.first, d.second)) < 0) {
                unbounded_below = true;
                break;
            }
        }
        bool redundant = false;
        if (!unbounded_below) {
            std::optional<int> min_sign;
            auto consider = [&](const Point& p) {
                for (const auto& h : others)
                    if (sign_of(h.eval(p)) < 0) return;
                int s = sign_of(f.eval(p));
                if (!min_sign || s < *min_sign) min_sign = s;
            };
            for (size_t a = 0; a < others.size(); ++a)
                for (size_t b = a + 1; b < others.size(); ++b) {
                    auto p = line_intersection(others[a], others[b]);
                    if (p) consider(*p);
                }
            // boundaries of others parallel to f carry constant f-values
            for (const auto& h : others)
                if (sign_of(cross2(f.a, f.b, h.a, h.b)) == 0) consider(boundary_point(h));
            redundant = min_sign && *min_sign >= 0;
        }
        if (redundant)
            hs_.erase(hs_.begin() + static_cast<long>(i));
        else
            ++i;
    }

    std::sort(hs_.begin(), hs_.end(), normal_angle_less);
}

const VRep& ConvexRegion::vrep() const {
    if (vrep_) return *vrep_;
    VRep v;
    if (empty_) {
        v.empty = true;
        vrep_ = std::move(v);
        return *vrep_;
    }
    if (hs_.empty()) {
        v.whole_plane = true;
        vrep_ = std::move(v);
        return *vrep_;
    }
    auto edge_dir = [&](const HalfPlane& h) { return make_point(h.b, -h.a); };
    if (hs_.size() == 1) {
        Point d = edge_dir(hs_[0]);
        v.rays = {-d, d};
        vrep_ = std::move(v);
        return *vrep_;
    }
    bool parallel_pair = hs_.size() == 2 && sign_of(cross2(hs_[0].a, hs_[0].b, hs_[1].a, hs_[1].b)) == 0;
    if (parallel_pair) {
        Point d = edge_dir(hs_[0]);
        v.rays = {-d, d};
        vrep_ = std::move(v);
        return *vrep_;
    }

    size_t m = hs_.size();
    // constraints are angle-sorted already; find the single gap >= pi if any
    std::optional<size_t> gap_at;  // between index i and i+1 (mod m)
    for (size_t i = 0; i < m; ++i) {
        const HalfPlane& h1 = hs_[i];
        const HalfPlane& h2 = hs_[(i + 1) % m];
        int cr = sign_of(cross2(h1.a, h1.b, h2.a, h2.b));
        bool wide = cr < 0 || (cr == 0 && sign_of(dot2(h1.a, h1.b, h2.a, h2.b)) < 0);
        if (wide) {
            gap_at = i;
            break;
        }
    }
    std::vector<Point> verts;
    size_t start = gap_at ? (*gap_at + 1) % m : 0;
    size_t pair_count = gap_at ? m - 1 : m;
    for (size_t k = 0; k < pair_count; ++k) {
        size_t i = (start + k) % m;
        size_t j = (i + 1) % m;
        auto p = line_intersection(hs_[i], hs_[j]);
        if (!p) throw std::logic_error("canonical region: consecutive edges parallel");
        for (const auto& h : hs_)
            if (sign_of(h.eval(*p)) < 0) throw std::logic_error("canonical region: infeasible vertex");
        verts.push_back(*p);
    }
    if (gap_at) {
        // boundary arrives from infinity along the edge after the gap and
        // leaves along the edge before it
        Point arrive = -edge_dir(hs_[start]);
        Point leave = edge_dir(hs_[*gap_at]);
        v.rays.push_back(arrive);
        if (!(leave == arrive)) v.rays.push_back(leave);
        v.vertices = std::move(verts);
    } else {
        // bounded: rotate so the lexicographically smallest vertex comes first
        size_t best = 0;
        for (size_t i = 1; i < verts.size(); ++i) {
            Cyclo dx = point_x(verts[i]) - point_x(verts[best]);
            int sx = sign_of(dx);
            if (sx < 0 || (sx == 0 && sign_of(point_y(verts[i]) - point_y(verts[best])) < 0)) best = i;
        }
        std::rotate(verts.begin(), verts.begin() + static_cast<long>(best), verts.end());
        v.vertices = std::move(verts);
    }
    vrep_ = std::move(v);
    return *vrep_;
}

std::optional<Cyclo> ConvexRegion::area() const {
    if (empty_) return Cyclo::zero(n_);
    const VRep& v = vrep();
    if (!v.bounded()) return std::nullopt;
    Cyclo two_area = Cyclo::zero(n_);
    const auto& vs = v.vertices;
    for (size_t i = 0; i < vs.size(); ++i) {
        const Point& p = vs[i];
        const Point& q = vs[(i + 1) % vs.size()];
        two_area = two_area + (p.conj() * q).imag_part();
    }
    return two_area.scaled(mpq_class(1, 2));
}

Point ConvexRegion::interior_point() const {
    if (empty_) throw std::logic_error("interior_point of empty region");
    const VRep& v = vrep();
    if (v.whole_plane) return Cyclo::zero(n_);
    if (v.vertices.empty()) {
        if (hs_.size() == 1) {
            Point p0 = boundary_point(hs_[0]);
            return p0 + make_point(hs_[0].a, hs_[0].b);
        }
        // strip: midpoint between the two boundary lines
        Point p0 = boundary_point(hs_[0]);
        Point p1 = boundary_point(hs_[1]);
        // project p1 onto the normal line through p0: midpoint of offsets
        // (for parallel boundaries the average of one point from each line is interior)
        return (p0 + p1).scaled(mpq_class(1, 2));
    }
    Point acc = Cyclo::zero(n_);
    for (const auto& p : v.vertices) acc = acc + p;
    acc = acc.scaled(mpq_class(1, static_cast<long>(v.vertices.size())));
    for (const auto& r : v.rays) acc = acc + r;
    return acc;
}

bool ConvexRegion::operator==(const ConvexRegion& o) const {
    if (empty_ != o.empty_) return false;
    if (empty_) return true;
    if (hs_.size() != o.hs_.size()) return false;
    unsigned n = std::lcm(n_, o.n_);
    for (size_t i = 0; i < hs_.size(); ++i) {
        if (!(hs_[i].a.lifted(n) == o.hs_[i].a.lifted(n)) || !(hs_[i].b.lifted(n) == o.hs_[i].b.lifted(n)) ||
            !(hs_[i].c.lifted(n) == o.hs_[i].c.lifted(n)))
            return false;
    }
    return true;
}

std::string ConvexRegion::str() const {
    if (empty_) return "{empty}";
    if (hs_.empty()) return "{plane}";
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < hs_.size(); ++i) {
        if (i) os << " & ";
        os << hs_[i].str();
    }
    os << "}";
    return os.str();
}

size_t ConvexRegion::hash() const {
    if (empty_) return 0x5167;
    size_t h = 0x9e3779b9;
    for (const auto& hp : hs_) {
        h ^= hp.a.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= hp.b.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= hp.c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

bool ConvexRegion::share_boundary_segment(const ConvexRegion& r1, const ConvexRegion& r2) {
    if (r1.is_empty() || r2.is_empty()) return false;
    unsigned n = std::lcm(r1.order(), r2.order());
    for (const auto& h1 : r1.hs_) {
        for (const auto& h2 : r2.hs_) {
            HalfPlane a(h1.a.lifted(n), h1.b.lifted(n), h1.c.lifted(n));
            HalfPlane bc = HalfPlane(h2.a.lifted(n), h2.b.lifted(n), h2.c.lifted(n)).complement();
            if (!(a == bc)) continue;
            // common line; compare the 1-d extents of both regions on it
            Point p0 = boundary_point(a);
            Point d = make_point(a.b, -a.a);
            auto extent = [&](const ConvexRegion& r, Cyclo& lo, Cyclo& hi, bool& has_lo, bool& has_hi) -> bool {
                has_lo = has_hi = false;
                for (const auto& h : r.hs_) {
                    Cyclo alpha = h.eval(p0);
                    Cyclo beta = dot2(h.a.lifted(n), h.b.lifted(n), d.real_part(), d.imag_part());
                    int sb = sign_of(beta);
                    if (sb == 0) {
                        if (sign_of(alpha) < 0) return false;
                        continue;
                    }
                    Cyclo bound = -(alpha / beta);
                    if (sb > 0) {
                        if (!has_lo || sign_of(bound - lo) > 0) lo = bound, has_lo = true;
                    } else {
                        if (!has_hi || sign_of(bound - hi) < 0) hi = bound, has_hi = true;
                    }
                }
                return true;
            };
            Cyclo lo1, hi1, lo2, hi2;
            bool hlo1, hhi1, hlo2, hhi2;
            if (!extent(r1, lo1, hi1, hlo1, hhi1)) continue;
            if (!extent(r2, lo2, hi2, hlo2, hhi2)) continue;
            Cyclo lo, hi;
            bool has_lo = false, has_hi = false;
            if (hlo1) lo = lo1, has_lo = true;
            if (hlo2 && (!has_lo || sign_of(lo2 - lo) > 0)) lo = lo2, has_lo = true;
            if (hhi1) hi = hi1, has_hi = true;
            if (hhi2 && (!has_hi || sign_of(hi2 - hi) < 0)) hi = hi2, has_hi = true;
            if (!has_lo || !has_hi) return true;  // overlap is a ray or line
            if (sign_of(hi - lo) > 0) return true;
        }
    }
    return false;
}

}  // namespace pwrot
