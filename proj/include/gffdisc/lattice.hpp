#pragma once

/// Geometry of Z^d: boxes, boundaries, windows, the coarse lattice L = L*Z^d,
/// the nested box hierarchy of the coarse-graining, and columns of L-boxes.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace gffdisc::lattice {

inline constexpr int kMaxDim = 8;

struct Point {
    std::array<std::int32_t, kMaxDim> c{};
    int d = 3;

    Point() = default;
    Point(std::initializer_list<std::int32_t> xs) {
        d = static_cast<int>(xs.size());
        int i = 0;
        for (auto v : xs) c[i++] = v;
    }
    static Point zero(int dim) {
        Point p;
        p.d = dim;
        return p;
    }
    static Point unit(int dim, int axis, int sign = 1) {
        Point p = zero(dim);
        p.c[axis] = sign;
        return p;
    }
    std::int32_t& operator[](int i) { return c[i]; }
    std::int32_t operator[](int i) const { return c[i]; }
    bool operator==(const Point& o) const {
        if (d != o.d) return false;
        for (int i = 0; i < d; ++i)
            if (c[i] != o.c[i]) return false;
        return true;
    }
    bool operator!=(const Point& o) const { return !(*this == o); }
    Point operator+(const Point& o) const {
        Point r = *this;
        for (int i = 0; i < d; ++i) r.c[i] += o.c[i];
        return r;
    }
    Point operator-(const Point& o) const {
        Point r = *this;
        for (int i = 0; i < d; ++i) r.c[i] -= o.c[i];
        return r;
    }
    Point operator-() const {
        Point r = *this;
        for (int i = 0; i < d; ++i) r.c[i] = -r.c[i];
        return r;
    }
    std::int64_t linf() const {
        std::int64_t m = 0;
        for (int i = 0; i < d; ++i) m = std::max<std::int64_t>(m, std::abs((std::int64_t)c[i]));
        return m;
    }
    std::int64_t l1() const {
        std::int64_t s = 0;
        for (int i = 0; i < d; ++i) s += std::abs((std::int64_t)c[i]);
        return s;
    }
    double l2() const {
        double s = 0;
        for (int i = 0; i < d; ++i) s += double(c[i]) * c[i];
        return std::sqrt(s);
    }
    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < d; ++i) s += std::to_string(c[i]) + (i + 1 < d ? "," : ")");
        return s;
    }
};

struct PointHash {
    std::size_t operator()(const Point& p) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (int i = 0; i < p.d; ++i) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.c[i]));
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

using PointSet = std::vector<Point>;
using PointHashSet = std::unordered_set<Point, PointHash>;

inline std::int64_t linf_dist(const Point& a, const Point& b) { return (a - b).linf(); }

inline std::int64_t linf_diameter(const PointSet& k) {
    std::int64_t m = 0;
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = i + 1; j < k.size(); ++j)
            m = std::max(m, linf_dist(k[i], k[j]));
    return m;
}

/// Half-open product box [lo, hi). The closed l_inf ball B(x,r) is the
/// box [x-r, x+r+1).
struct Box {
    Point lo, hi;

    Box() = default;
    Box(const Point& l, const Point& h) : lo(l), hi(h) {
        if (l.d != h.d) throw std::invalid_argument("Box: corner dimensions differ");
        for (int i = 0; i < l.d; ++i)
            if (!(l[i] < h[i])) throw std::invalid_argument("Box: requires lo < hi componentwise");
    }
    static Box ball(const Point& center, int radius) {
        if (radius < 0) throw std::invalid_argument("Box::ball: radius must be >= 0");
        Point l = center, h = center;
        for (int i = 0; i < center.d; ++i) {
            l.c[i] -= radius;
            h.c[i] += radius + 1;
        }
        return Box(l, h);
    }
    static Box ball0(int d, int radius) { return ball(Point::zero(d), radius); }
    int dim() const { return lo.d; }
    std::int64_t volume() const {
        std::int64_t v = 1;
        for (int i = 0; i < dim(); ++i) v *= (hi[i] - lo[i]);
        return v;
    }
    bool contains(const Point& p) const {
        for (int i = 0; i < dim(); ++i)
            if (p[i] < lo[i] || p[i] >= hi[i]) return false;
        return true;
    }
    bool contains(const Box& o) const {
        for (int i = 0; i < dim(); ++i)
            if (o.lo[i] < lo[i] || o.hi[i] > hi[i]) return false;
        return true;
    }
    bool intersects(const Box& o) const {
        for (int i = 0; i < dim(); ++i)
            if (o.hi[i] <= lo[i] || o.lo[i] >= hi[i]) return false;
        return true;
    }
    Box translated(const Point& z) const {
        Box b = *this;
        b.lo = b.lo + z;
        b.hi = b.hi + z;
        return b;
    }
    Box grown(int m) const {
        Box b = *this;
        for (int i = 0; i < dim(); ++i) {
            b.lo.c[i] -= m;
            b.hi.c[i] += m;
        }
        return b;
    }
    bool operator==(const Box& o) const { return lo == o.lo && hi == o.hi; }
};

/// A finite sublattice with a stable site index <-> Point bijection
/// (row-major over the box, first coordinate slowest).
class Window {
  public:
    Window() = default;
    explicit Window(const Box& b) : box_(b) {
        strides_.fill(0);
        std::int64_t s = 1;
        for (int i = b.dim() - 1; i >= 0; --i) {
            strides_[i] = s;
            s *= (b.hi[i] - b.lo[i]);
        }
        size_ = s;
    }
    const Box& box() const { return box_; }
    int dim() const { return box_.dim(); }
    std::int64_t size() const { return size_; }
    bool contains(const Point& p) const { return box_.contains(p); }
    std::int64_t index(const Point& p) const {
        std::int64_t ix = 0;
        for (int i = 0; i < box_.dim(); ++i) ix += strides_[i] * (p[i] - box_.lo[i]);
        return ix;
    }
    Point point(std::int64_t ix) const {
        Point p = Point::zero(box_.dim());
        for (int i = 0; i < box_.dim(); ++i) {
            p.c[i] = static_cast<std::int32_t>(box_.lo[i] + ix / strides_[i]);
            ix %= strides_[i];
        }
        return p;
    }
    std::int64_t stride(int axis) const { return strides_[axis]; }

    template <typename F>
    void for_each(F&& f) const {
        for (std::int64_t i = 0; i < size_; ++i) f(i, point(i));
    }

  private:
    Box box_;
    std::array<std::int64_t, kMaxDim> strides_{};
    std::int64_t size_ = 0;
};

inline PointSet box_points(const Box& b) {
    Window w(b);
    PointSet out;
    out.reserve(static_cast<std::size_t>(w.size()));
    for (std::int64_t i = 0; i < w.size(); ++i) out.push_back(w.point(i));
    return out;
}

/// Outer boundary: sites outside K adjacent (one axis step) to K. Empty K gives
/// an empty result.
inline PointSet boundary(const PointSet& k) {
    PointHashSet in(k.begin(), k.end());
    PointHashSet seen;
    PointSet out;
    for (const Point& x : k) {
        for (int a = 0; a < x.d; ++a)
            for (int s = -1; s <= 1; s += 2) {
                Point y = x;
                y.c[a] += s;
                if (!in.count(y) && seen.insert(y).second) out.push_back(y);
            }
    }
    return out;
}

/// Inner boundary: sites of K with a neighbor outside K.
inline PointSet inner_boundary(const PointSet& k) {
    PointHashSet in(k.begin(), k.end());
    PointSet out;
    for (const Point& x : k) {
        bool edge = false;
        for (int a = 0; a < x.d && !edge; ++a)
            for (int s = -1; s <= 1 && !edge; s += 2) {
                Point y = x;
                y.c[a] += s;
                if (!in.count(y)) edge = true;
            }
        if (edge) out.push_back(x);
    }
    return out;
}

/// Shell {|x - center|_inf == r} of the closed ball B(center, r).
inline PointSet ball_shell(const Point& center, int radius) {
    if (radius == 0) return {center};
    PointSet out;
    Window w(Box::ball(center, radius));
    for (std::int64_t i = 0; i < w.size(); ++i) {
        Point p = w.point(i);
        if (linf_dist(p, center) == radius) out.push_back(p);
    }
    return out;
}

/// The nested boxes (4.3)-(4.4): B_z = z+[0,L)^d, D_z = z+[-3L,4L)^d,
/// U_z = z+[-KL+1, L+KL-1)^d, Btilde_z = z+[-KL, L+KL)^d with z in L*Z^d.
/// Full nesting B in D in U in Btilde requires K >= 4; the paper regime is
/// K >= 100. Smaller K (down to 2) is accepted for scaled experiments.
struct BoxHierarchy {
    Point z;
    int L = 0, K = 0;
    Box b, dbox, u, btilde;
    bool paper_regime = false;

    BoxHierarchy(const Point& z_, int L_, int K_) : z(z_), L(L_), K(K_) {
        if (L < 1 || K < 2) throw std::invalid_argument("BoxHierarchy: need L >= 1, K >= 2");
        for (int i = 0; i < z.d; ++i)
            if (z[i] % L != 0) throw std::invalid_argument("BoxHierarchy: z must lie in L*Z^d");
        const int d = z.d;
        auto mk = [&](int lo, int hi) {
            Point l = Point::zero(d), h = Point::zero(d);
            for (int i = 0; i < d; ++i) {
                l.c[i] = lo;
                h.c[i] = hi;
            }
            return Box(l, h).translated(z);
        };
        b = mk(0, L);
        dbox = mk(-3 * L, 4 * L);
        u = mk(-K * L + 1, L + K * L - 1);
        btilde = mk(-K * L, L + K * L);
        paper_regime = (K >= 100);
    }
    bool nested() const { return u.contains(dbox); }  // b in d and u in btilde always hold
};

/// One column of L-boxes attached to a face of B_N (see section 5): boxes lie in
/// {x.e > N} cap B_{(M+1)N}, share the same footprint transverse to e, and the
/// footprint is contained in the face F_{e,N}. Boxes are ordered by increasing x.e.
struct ColumnSpec {
    int axis = 0;
    int sign = +1;                 // face direction e = sign * e_axis
    Point footprint_lo;            // transverse corner of the L-box footprint (axis coord = 0)
    std::vector<Point> boxes;      // L-box labels z in L*Z^d, ordered outward
};

struct ColumnGeometry {
    std::vector<ColumnSpec> columns;
    long columns_per_face = 0;
    long boxes_total = 0;          // m of (5.21)
    double face_fraction_covered = 0.0;  // footprint coverage of each face
};

/// Enumerates the columns of L-boxes for all 2d faces of B_N inside B_{(M+1)N}.
/// Requires [MN] >= N+1. Columns with no box are omitted; if no column has a box
/// the result is an explicit empty geometry.
ColumnGeometry enumerate_columns(int d, int N, double M, int L);

}  // namespace gffdisc::lattice
