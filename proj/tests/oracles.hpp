#pragma once

// Independent reference implementations used to check the library. They are
// deliberately slow and simple, and share no code with src/.

#include <rcesdf/bspline.hpp>
#include <rcesdf/distance_field.hpp>
#include <rcesdf/scene.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <random>
#include <span>
#include <vector>

namespace oracle
{

using rcesdf::Vec2;

inline std::vector<double> edt_1d_brute(std::span<const double> f)
{
    std::vector<double> out(f.size(), std::numeric_limits<double>::infinity());
    for (std::size_t p = 0; p < f.size(); ++p)
        for (std::size_t q = 0; q < f.size(); ++q)
        {
            const double d = static_cast<double>(p) - static_cast<double>(q);
            out[p] = std::min(out[p], d * d + f[q]);
        }
    return out;
}

/// Distance in site units from every site to the nearest marked site.
inline std::vector<double> edt_2d_brute(const rcesdf::SiteMask &mask)
{
    std::vector<double> out(mask.set.size(), std::numeric_limits<double>::infinity());
    for (int j = 0; j < mask.h; ++j)
        for (int i = 0; i < mask.w; ++i)
            for (int b = 0; b < mask.h; ++b)
                for (int a = 0; a < mask.w; ++a)
                    if (mask.at(a, b))
                    {
                        const double d = std::hypot(double(i - a), double(j - b));
                        auto &o = out[static_cast<std::size_t>(j) * mask.w + i];
                        o = std::min(o, d);
                    }
    return out;
}

enum class VertexClass
{
    Outside,
    Boundary,
    Inside
};

/// Classification by the occupied state of the (up to 4) cells touching a
/// vertex of the occupancy grid.
inline VertexClass classify_vertex(const rcesdf::OccupancyGrid2D &g, int vi, int vj)
{
    int total = 0, occ = 0;
    for (int dj = -1; dj <= 0; ++dj)
        for (int di = -1; di <= 0; ++di)
        {
            const int ci = vi + di, cj = vj + dj;
            if (ci < 0 || cj < 0 || ci >= g.nx || cj >= g.ny)
                continue;
            ++total;
            occ += g.occupied(ci, cj) ? 1 : 0;
        }
    if (occ == 0)
        return VertexClass::Outside;
    return occ == total ? VertexClass::Inside : VertexClass::Boundary;
}

/// Signed vertex field by exhaustive nearest-vertex scans.
inline std::vector<double> signed_field_brute(const rcesdf::OccupancyGrid2D &g, bool outside_positive)
{
    const int w = g.nx + 1, h = g.ny + 1;
    std::vector<VertexClass> cls(static_cast<std::size_t>(w) * h);
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i)
            cls[static_cast<std::size_t>(j) * w + i] = classify_vertex(g, i, j);
    auto nearest = [&](int i, int j, auto pred) {
        double best = std::numeric_limits<double>::infinity();
        for (int b = 0; b < h; ++b)
            for (int a = 0; a < w; ++a)
                if (pred(cls[static_cast<std::size_t>(b) * w + a]))
                    best = std::min(best, std::hypot(double(i - a), double(j - b)));
        return best * g.resolution;
    };
    std::vector<double> out(cls.size(), 0.0);
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i)
        {
            const auto c = cls[static_cast<std::size_t>(j) * w + i];
            double &v = out[static_cast<std::size_t>(j) * w + i];
            if (c == VertexClass::Inside)
                v = -nearest(i, j, [](VertexClass k) { return k != VertexClass::Inside; });
            else if (c == VertexClass::Outside && outside_positive)
                v = nearest(i, j, [](VertexClass k) { return k != VertexClass::Outside; });
        }
    return out;
}

inline double segment_distance(const Vec2 &q, const Vec2 &a, const Vec2 &b)
{
    const Vec2 ab = b - a;
    const double t = std::clamp((q - a).dot(ab) / ab.squaredNorm(), 0.0, 1.0);
    return (a + t * ab - q).norm();
}

/// Crossing-number point-in-polygon test.
inline bool point_in_ring(const Vec2 &q, const std::vector<Vec2> &ring)
{
    bool in = false;
    for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++)
    {
        const Vec2 &a = ring[i], &b = ring[j];
        if ((a.y() > q.y()) != (b.y() > q.y()) && q.x() < (b.x() - a.x()) * (q.y() - a.y()) / (b.y() - a.y()) + a.x())
            in = !in;
    }
    return in;
}

/// Distance from q to the union of rings: 0 inside.
inline double union_distance(const Vec2 &q, const std::vector<std::vector<Vec2>> &rings)
{
    double best = std::numeric_limits<double>::infinity();
    for (const auto &r : rings)
    {
        if (point_in_ring(q, r))
            return 0.0;
        for (std::size_t i = 0; i < r.size(); ++i)
            best = std::min(best, segment_distance(q, r[i], r[(i + 1) % r.size()]));
    }
    return best;
}

inline std::vector<std::vector<Vec2>> rings_of(const rcesdf::RobotShape &s)
{
    std::vector<std::vector<Vec2>> out;
    for (const auto &p : s.parts)
        out.push_back(p.vertices());
    return out;
}

/// Cox-de Boor recursion on the uniform knot vector t_i = (i - 3) dt, so
/// that the curve domain [t_3, t_{N}] maps to [0, (N - 3) dt].
inline double basis(int i, int k, double t, double dt, int n_knots)
{
    auto knot = [&](int m) { return (m - 3) * dt; };
    if (k == 0)
    {
        // The domain end belongs to the last interval only.
        const int last = n_knots - 5;
        if (t == knot(last + 1))
            return i == last ? 1.0 : 0.0;
        return t >= knot(i) && t < knot(i + 1) ? 1.0 : 0.0;
    }
    const double l = (t - knot(i)) / (knot(i + k) - knot(i));
    const double r = (knot(i + k + 1) - t) / (knot(i + k + 1) - knot(i + 1));
    return l * basis(i, k - 1, t, dt, n_knots) + r * basis(i + 1, k - 1, t, dt, n_knots);
}

/// Position and yaw of the spline at t by direct basis summation.
inline rcesdf::SE2Pose de_boor(const rcesdf::BSplineSE2 &s, double t)
{
    const int n = s.size();
    const int n_knots = n + 4;
    rcesdf::SE2Pose out;
    out.p.setZero();
    for (int i = 0; i < n; ++i)
    {
        const double b = basis(i, 3, t, s.knot_span(), n_knots);
        out.p += b * s.positions()[i];
        out.yaw += b * s.yaws()[i];
    }
    return out;
}

/// Central differences of f over every coordinate of x.
inline std::vector<double> fd_gradient(const std::function<double(const std::vector<double> &)> &f,
                                       std::vector<double> x, double h)
{
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        const double x0 = x[i];
        x[i] = x0 + h;
        const double fp = f(x);
        x[i] = x0 - h;
        const double fm = f(x);
        x[i] = x0;
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

/// max_i |a_i - b_i| / max(scale, max_i |b_i|): relative error normalised by
/// the reference vector, robust to individual near-zero components.
inline double rel_error(std::span<const double> a, std::span<const double> b, double scale = 1e-12)
{
    double num = 0.0, den = scale;
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        num = std::max(num, std::abs(a[i] - b[i]));
        den = std::max(den, std::abs(b[i]));
    }
    return num / den;
}

/// 8-connected Dijkstra over free cells with the same corner rule as the
/// planner (a diagonal move needs both side cells free). Returns the
/// shortest path length in meters or +inf.
inline double dijkstra_length(const std::vector<std::uint8_t> &blocked, int nx, int ny, double res, int si, int sj,
                              int gi, int gj)
{
    auto idx = [&](int i, int j) { return static_cast<std::size_t>(j) * nx + i; };
    std::vector<double> dist(blocked.size(), std::numeric_limits<double>::infinity());
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[idx(si, sj)] = 0.0;
    pq.push({0.0, idx(si, sj)});
    while (!pq.empty())
    {
        const auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u])
            continue;
        const int ui = static_cast<int>(u % nx), uj = static_cast<int>(u / nx);
        if (ui == gi && uj == gj)
            return d * res;
        for (int dj = -1; dj <= 1; ++dj)
            for (int di = -1; di <= 1; ++di)
            {
                if (!di && !dj)
                    continue;
                const int vi = ui + di, vj = uj + dj;
                if (vi < 0 || vj < 0 || vi >= nx || vj >= ny || blocked[idx(vi, vj)])
                    continue;
                if (di && dj && (blocked[idx(ui + di, uj)] || blocked[idx(ui, uj + dj)]))
                    continue;
                const double nd = d + ((di && dj) ? std::sqrt(2.0) : 1.0);
                if (nd < dist[idx(vi, vj)])
                {
                    dist[idx(vi, vj)] = nd;
                    pq.push({nd, idx(vi, vj)});
                }
            }
    }
    return std::numeric_limits<double>::infinity();
}

/// Exact test of whether a convex or simple polygon overlaps the interior of
/// an axis-aligned square: any polygon edge crossing the square, any square
/// corner inside the polygon, or any polygon vertex inside the square.
inline bool polygon_overlaps_square(const std::vector<Vec2> &poly, const Vec2 &lo, const Vec2 &hi)
{
    auto inside_sq = [&](const Vec2 &p) {
        return p.x() > lo.x() && p.x() < hi.x() && p.y() > lo.y() && p.y() < hi.y();
    };
    for (const auto &v : poly)
        if (inside_sq(v))
            return true;
    const Vec2 c = 0.5 * (lo + hi);
    if (point_in_ring(c, poly))
        return true;
    const std::vector<Vec2> sq{lo, {hi.x(), lo.y()}, hi, {lo.x(), hi.y()}};
    for (const auto &v : sq)
        if (point_in_ring(v, poly))
            return true;
    auto cross = [](const Vec2 &a, const Vec2 &b) { return a.x() * b.y() - a.y() * b.x(); };
    auto proper = [&](const Vec2 &a, const Vec2 &b, const Vec2 &c2, const Vec2 &d) {
        const double d1 = cross(b - a, c2 - a), d2 = cross(b - a, d - a);
        const double d3 = cross(d - c2, a - c2), d4 = cross(d - c2, b - c2);
        return d1 * d2 < 0.0 && d3 * d4 < 0.0;
    };
    for (std::size_t i = 0; i < poly.size(); ++i)
        for (std::size_t k = 0; k < 4; ++k)
            if (proper(poly[i], poly[(i + 1) % poly.size()], sq[k], sq[(k + 1) % 4]))
                return true;
    return false;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

} // namespace oracle
