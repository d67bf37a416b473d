#include <rcesdf/objective.hpp>

#include <cmath>
#include <exception>

namespace rcesdf
{

namespace
{

// Second and third difference stencils, scaled by dt^-2 and dt^-3.
constexpr double kAccStencil[3] = {1.0, -2.0, 1.0};
constexpr double kJerkStencil[4] = {-1.0, 3.0, -3.0, 1.0};

struct Penalty
{
    double value;
    double slope; ///< d value / d x
};

Penalty over_limit(double x, FeasibilityPenalty shape)
{
    if (!(x > 0.0))
        return {0.0, 0.0};
    if (shape == FeasibilityPenalty::Hinge)
        return {x, 1.0};
    return {x * x * x, 3.0 * x * x};
}

} // namespace

TermPair smoothness(const BSplineSE2 &spline)
{
    const int n = spline.size();
    const auto d = derivative_ctrl(spline);
    const double dt = spline.knot_span();
    const double s2 = 1.0 / (dt * dt), s3 = s2 / dt;
    TermPair t{0.0, 0.0, ControlGradient(n)};
    for (std::size_t k = 0; k < d.acc.size(); ++k)
    {
        t.position += d.acc[k].squaredNorm();
        t.yaw += d.yaw_acc[k] * d.yaw_acc[k];
        for (int m = 0; m < 3; ++m)
        {
            t.grad.q[k + m] += 2.0 * s2 * kAccStencil[m] * d.acc[k];
            t.grad.yaw[k + m] += 2.0 * s2 * kAccStencil[m] * d.yaw_acc[k];
        }
    }
    for (std::size_t k = 0; k < d.jerk.size(); ++k)
    {
        t.position += d.jerk[k].squaredNorm();
        t.yaw += d.yaw_jerk[k] * d.yaw_jerk[k];
        for (int m = 0; m < 4; ++m)
        {
            t.grad.q[k + m] += 2.0 * s3 * kJerkStencil[m] * d.jerk[k];
            t.grad.yaw[k + m] += 2.0 * s3 * kJerkStencil[m] * d.yaw_jerk[k];
        }
    }
    return t;
}

TermPair feasibility(const BSplineSE2 &spline, const Limits &limits, FeasibilityPenalty shape)
{
    const int n = spline.size();
    const auto d = derivative_ctrl(spline);
    const double dt = spline.knot_span();
    const double s1 = 1.0 / dt, s2 = s1 * s1;
    TermPair t{0.0, 0.0, ControlGradient(n)};

    const double v2 = limits.v_max * limits.v_max, a2 = limits.a_max * limits.a_max;
    const double w2 = limits.yaw_rate_max * limits.yaw_rate_max;
    const double wa2 = limits.yaw_acc_max * limits.yaw_acc_max;

    for (std::size_t k = 0; k < d.vel.size(); ++k)
    {
        if (const auto p = over_limit(d.vel[k].squaredNorm() - v2, shape); p.slope != 0.0)
        {
            t.position += p.value;
            const Vec2 g = 2.0 * p.slope * s1 * d.vel[k];
            t.grad.q[k] -= g;
            t.grad.q[k + 1] += g;
        }
        if (const auto p = over_limit(d.yaw_vel[k] * d.yaw_vel[k] - w2, shape); p.slope != 0.0)
        {
            t.yaw += p.value;
            const double g = 2.0 * p.slope * s1 * d.yaw_vel[k];
            t.grad.yaw[k] -= g;
            t.grad.yaw[k + 1] += g;
        }
    }
    for (std::size_t k = 0; k < d.acc.size(); ++k)
    {
        if (const auto p = over_limit(d.acc[k].squaredNorm() - a2, shape); p.slope != 0.0)
        {
            t.position += p.value;
            const Vec2 g = 2.0 * p.slope * s2 * d.acc[k];
            for (int m = 0; m < 3; ++m)
                t.grad.q[k + m] += kAccStencil[m] * g;
        }
        if (const auto p = over_limit(d.yaw_acc[k] * d.yaw_acc[k] - wa2, shape); p.slope != 0.0)
        {
            t.yaw += p.value;
            const double g = 2.0 * p.slope * s2 * d.yaw_acc[k];
            for (int m = 0; m < 3; ++m)
                t.grad.yaw[k + m] += kAccStencil[m] * g;
        }
    }
    return t;
}

CollisionTerm collision(const BSplineSE2 &spline, const CollisionModel &model, Exec exec)
{
    const int n = spline.size();
    const int points = constraint_point_count(spline);
    std::vector<SE2Pose> poses(points);
    for (int k = 0; k < points; ++k)
        poses[k] = constraint_point(spline, k);

    std::vector<CollisionEval> evals(points);
    if (exec == Exec::Serial)
    {
        for (int k = 0; k < points; ++k)
            evals[k] = model.evaluate(poses[k]);
    }
    else
    {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
        for (int k = 0; k < points; ++k)
        {
            try
            {
                evals[k] = model.evaluate(poses[k]);
            }
            catch (...)
            {
#pragma omp critical(rcesdf_collision_failure)
                if (!failure)
                    failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);
    }

    CollisionTerm t{0.0, ControlGradient(n), 0};
    constexpr double w[3] = {1.0 / 6.0, 4.0 / 6.0, 1.0 / 6.0};
    for (int k = 0; k < points; ++k)
    {
        const auto &e = evals[k];
        t.value += e.cost;
        t.penetrating += e.samples;
        if (e.samples == 0)
            continue;
        for (int m = 0; m < 3; ++m)
        {
            t.grad.q[k + m] += w[m] * e.grad_p;
            t.grad.yaw[k + m] += w[m] * e.grad_yaw;
        }
    }
    for (int m = 0; m < kFixedControlPoints; ++m)
    {
        t.grad.q[m].setZero();
        t.grad.q[n - 1 - m].setZero();
        t.grad.yaw[m] = 0.0;
        t.grad.yaw[n - 1 - m] = 0.0;
    }
    return t;
}

std::vector<double> pack_free(const BSplineSE2 &spline)
{
    const int n = spline.size(), m = free_control_points(n);
    std::vector<double> x(3 * static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
    {
        const int c = k + kFixedControlPoints;
        x[k] = spline.positions()[c].x();
        x[m + k] = spline.positions()[c].y();
        x[2 * m + k] = spline.yaws()[c];
    }
    return x;
}

void unpack_free(std::span<const double> x, BSplineSE2 &spline)
{
    const int m = free_control_points(spline.size());
    if (x.size() != 3 * static_cast<std::size_t>(m))
        throw Error("unpack_free: decision vector has wrong length");
    for (int k = 0; k < m; ++k)
    {
        const int c = k + kFixedControlPoints;
        spline.positions()[c] = Vec2(x[k], x[m + k]);
        spline.yaws()[c] = x[2 * m + k];
    }
}

std::vector<double> pack_gradient(const ControlGradient &g)
{
    const int n = static_cast<int>(g.q.size()), m = free_control_points(n);
    std::vector<double> x(3 * static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
    {
        const int c = k + kFixedControlPoints;
        x[k] = g.q[c].x();
        x[m + k] = g.q[c].y();
        x[2 * m + k] = g.yaw[c];
    }
    return x;
}

CostBreakdown total_cost(const BSplineSE2 &spline, const PenaltyWeights &w, const Limits &limits,
                         const CollisionModel &model, FeasibilityPenalty shape, Exec exec)
{
    const int n = spline.size();
    CostBreakdown out;
    ControlGradient g(n);

    const auto smooth = smoothness(spline);
    const auto feas = feasibility(spline, limits, shape);
    out.position_smooth = smooth.position;
    out.yaw_smooth = smooth.yaw;
    out.position_feasible = feas.position;
    out.yaw_feasible = feas.yaw;
    for (int k = 0; k < n; ++k)
    {
        g.q[k] = w.position_smooth * smooth.grad.q[k] + w.position_feasible * feas.grad.q[k];
        g.yaw[k] = w.yaw_smooth * smooth.grad.yaw[k] + w.yaw_feasible * feas.grad.yaw[k];
    }
    const auto col = collision(spline, model, exec);
    out.collision = col.value;
    for (int k = 0; k < n; ++k)
    {
        g.q[k] += w.collision * col.grad.q[k];
        g.yaw[k] += w.collision * col.grad.yaw[k];
    }
    out.total = w.position_smooth * out.position_smooth + w.position_feasible * out.position_feasible +
                w.yaw_smooth * out.yaw_smooth + w.yaw_feasible * out.yaw_feasible + w.collision * out.collision;
    out.gradient = pack_gradient(g);
    return out;
}

double mean_jerk(const BSplineSE2 &spline, int samples)
{
    double sum = 0.0;
    const double T = spline.duration();
    for (int i = 0; i < samples; ++i)
        sum += evaluate(spline, T * (i + 0.5) / samples).jerk.norm();
    return sum / samples;
}

double path_length(const BSplineSE2 &spline, int samples)
{
    double len = 0.0;
    const double T = spline.duration();
    Vec2 prev = evaluate(spline, 0.0).pose.p;
    for (int i = 1; i <= samples; ++i)
    {
        const Vec2 p = evaluate(spline, T * i / samples).pose.p;
        len += (p - prev).norm();
        prev = p;
    }
    return len;
}

} // namespace rcesdf
