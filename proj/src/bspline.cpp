#include <rcesdf/bspline.hpp>

#include <algorithm>
#include <cmath>

namespace rcesdf
{

BSplineSE2::BSplineSE2(double knot_span, std::vector<Vec2> positions, std::vector<double> yaws)
    : knot_span_(knot_span), positions_(std::move(positions)), yaws_(std::move(yaws))
{
    if (!(knot_span_ > 0.0) || !std::isfinite(knot_span_))
        throw InvariantError("B-spline knot span must be positive");
    if (positions_.size() != yaws_.size())
        throw InvariantError("B-spline needs as many yaw as position control points");
    if (size() < kMinControlPoints)
        throw InvariantError("B-spline needs at least " + std::to_string(kMinControlPoints) +
                             " control points, got " + std::to_string(size()));
}

DerivativeCtrl derivative_ctrl(const BSplineSE2 &spline)
{
    const double inv = 1.0 / spline.knot_span();
    auto diff = [inv](const auto &in, auto &out) {
        out.resize(in.size() - 1);
        for (std::size_t k = 0; k + 1 < in.size(); ++k)
            out[k] = (in[k + 1] - in[k]) * inv;
    };
    DerivativeCtrl d;
    const std::vector<Vec2> q(spline.positions().begin(), spline.positions().end());
    const std::vector<double> psi(spline.yaws().begin(), spline.yaws().end());
    diff(q, d.vel);
    diff(d.vel, d.acc);
    diff(d.acc, d.jerk);
    diff(psi, d.yaw_vel);
    diff(d.yaw_vel, d.yaw_acc);
    diff(d.yaw_acc, d.yaw_jerk);
    return d;
}

SE2Pose constraint_point(const BSplineSE2 &spline, int k)
{
    if (k < 0 || k > spline.size() - 3)
        throw Error("constraint_point: index " + std::to_string(k) + " outside [0, " +
                    std::to_string(spline.size() - 3) + "]");
    const auto q = spline.positions();
    const auto y = spline.yaws();
    return {(q[k] + 4.0 * q[k + 1] + q[k + 2]) / 6.0, (y[k] + 4.0 * y[k + 1] + y[k + 2]) / 6.0};
}

TrajectoryState evaluate(const BSplineSE2 &spline, double t)
{
    const double T = spline.duration();
    const double slack = 1e-12 * std::max(1.0, T);
    if (!(t >= -slack && t <= T + slack))
        throw Error("evaluate: t = " + std::to_string(t) + " outside [0, " + std::to_string(T) + "]");
    t = std::clamp(t, 0.0, T);
    const double dt = spline.knot_span();
    const int segments = spline.size() - 3;
    int s = std::min(static_cast<int>(t / dt), segments - 1);
    const double u = t / dt - s;
    const double u2 = u * u, u3 = u2 * u;

    // Uniform cubic basis and its derivatives with respect to u.
    const double b[4] = {(1.0 - 3.0 * u + 3.0 * u2 - u3) / 6.0, (4.0 - 6.0 * u2 + 3.0 * u3) / 6.0,
                         (1.0 + 3.0 * u + 3.0 * u2 - 3.0 * u3) / 6.0, u3 / 6.0};
    const double db[4] = {(-3.0 + 6.0 * u - 3.0 * u2) / 6.0, (-12.0 * u + 9.0 * u2) / 6.0,
                          (3.0 + 6.0 * u - 9.0 * u2) / 6.0, 3.0 * u2 / 6.0};
    const double ddb[4] = {1.0 - u, -2.0 + 3.0 * u, 1.0 - 3.0 * u, u};
    const double dddb[4] = {-1.0, 3.0, -3.0, 1.0};

    const auto q = spline.positions();
    const auto y = spline.yaws();
    TrajectoryState st;
    const double i1 = 1.0 / dt, i2 = i1 * i1, i3 = i2 * i1;
    for (int k = 0; k < 4; ++k)
    {
        const Vec2 &qk = q[s + k];
        const double yk = y[s + k];
        st.pose.p += b[k] * qk;
        st.pose.yaw += b[k] * yk;
        st.vel += db[k] * i1 * qk;
        st.yaw_rate += db[k] * i1 * yk;
        st.acc += ddb[k] * i2 * qk;
        st.yaw_acc += ddb[k] * i2 * yk;
        st.jerk += dddb[k] * i3 * qk;
        st.yaw_jerk += dddb[k] * i3 * yk;
    }
    return st;
}

BSplineSE2 fit_from_path(std::span<const SE2Pose> path, double knot_span, int num_ctrl)
{
    if (path.size() < 2)
        throw InvariantError("fit_from_path: need at least two poses");
    if (num_ctrl < BSplineSE2::kMinControlPoints)
        throw InvariantError("fit_from_path: need at least 7 control points");

    std::vector<double> yaw(path.size());
    yaw[0] = path[0].yaw;
    for (std::size_t i = 1; i < path.size(); ++i)
        yaw[i] = unwrap_near(path[i].yaw, yaw[i - 1]);

    std::vector<double> arc(path.size(), 0.0);
    for (std::size_t i = 1; i < path.size(); ++i)
        arc[i] = arc[i - 1] + (path[i].p - path[i - 1].p).norm();
    const double length = arc.back();
    const bool by_index = !(length > 0.0);
    if (by_index && path.front().p != path.back().p)
        throw InvariantError("fit_from_path: zero-length path between distinct start and goal");
    if (by_index)
        for (std::size_t i = 0; i < path.size(); ++i)
            arc[i] = static_cast<double>(i);
    const double total = arc.back();

    auto sample = [&](double s) -> std::pair<Vec2, double> {
        auto it = std::upper_bound(arc.begin(), arc.end(), s);
        std::size_t hi = std::min<std::size_t>(static_cast<std::size_t>(it - arc.begin()), path.size() - 1);
        std::size_t lo = hi == 0 ? 0 : hi - 1;
        const double span = arc[hi] - arc[lo];
        const double w = span > 0.0 ? std::clamp((s - arc[lo]) / span, 0.0, 1.0) : 0.0;
        return {path[lo].p + w * (path[hi].p - path[lo].p), yaw[lo] + w * (yaw[hi] - yaw[lo])};
    };

    std::vector<Vec2> q(num_ctrl);
    std::vector<double> psi(num_ctrl);
    const int interior = num_ctrl - 6;
    for (int k = 0; k < 3; ++k)
    {
        q[k] = path.front().p;
        psi[k] = yaw.front();
        q[num_ctrl - 1 - k] = path.back().p;
        psi[num_ctrl - 1 - k] = yaw.back();
    }
    for (int m = 1; m <= interior; ++m)
    {
        const auto [p, y] = sample(total * m / (interior + 1));
        q[2 + m] = p;
        psi[2 + m] = y;
    }
    return BSplineSE2(knot_span, std::move(q), std::move(psi));
}

RateBounds rate_bounds(const BSplineSE2 &spline)
{
    const auto d = derivative_ctrl(spline);
    RateBounds r;
    for (const auto &v : d.vel)
        r.speed = std::max(r.speed, v.norm());
    for (double w : d.yaw_vel)
        r.yaw_rate = std::max(r.yaw_rate, std::abs(w));
    return r;
}

} // namespace rcesdf
