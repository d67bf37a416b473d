#include <rcesdf/lbfgs.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

namespace rcesdf
{

namespace
{

using Clock = std::chrono::steady_clock;

double dot(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

double inf_norm(std::span<const double> a)
{
    double m = 0.0;
    for (double v : a)
        m = std::max(m, std::abs(v));
    return m;
}

void check_params(const SolverParams &p)
{
    if (p.memory < 1)
        throw InvariantError("solver: memory must be at least 1");
    if (!(p.wolfe_c1 > 0.0 && p.wolfe_c1 < p.wolfe_c2 && p.wolfe_c2 < 1.0))
        throw InvariantError("solver: need 0 < wolfe_c1 < wolfe_c2 < 1");
    if (p.max_iterations < 0 || p.max_line_search_steps < 1 || p.past < 1)
        throw InvariantError("solver: iteration limits must be positive");
    if (!(p.grad_tolerance >= 0.0) || !(p.rel_cost_tolerance >= 0.0))
        throw InvariantError("solver: tolerances must be non-negative");
}

/// Curvature pairs in a ring buffer, oldest first.
class History
{
  public:
    History(int memory, std::size_t n) : memory_(memory), s_(memory, std::vector<double>(n)), y_(memory, std::vector<double>(n)), rho_(memory) {}

    void push(std::span<const double> s, std::span<const double> y, double ys)
    {
        const int slot = (head_ + count_) % memory_;
        if (count_ == memory_)
            head_ = (head_ + 1) % memory_;
        else
            ++count_;
        std::copy(s.begin(), s.end(), s_[slot].begin());
        std::copy(y.begin(), y.end(), y_[slot].begin());
        rho_[slot] = 1.0 / ys;
        gamma_ = ys / dot(y, y);
    }

    void clear() { count_ = 0; head_ = 0; }
    bool empty() const { return count_ == 0; }

    /// d = -H g by the two-loop recursion.
    void direction(std::span<const double> g, std::span<double> d)
    {
        for (std::size_t i = 0; i < g.size(); ++i)
            d[i] = -g[i];
        alpha_.assign(memory_, 0.0);
        for (int k = count_ - 1; k >= 0; --k)
        {
            const int slot = (head_ + k) % memory_;
            alpha_[slot] = rho_[slot] * dot(s_[slot], d);
            for (std::size_t i = 0; i < d.size(); ++i)
                d[i] -= alpha_[slot] * y_[slot][i];
        }
        if (count_ > 0)
            for (double &v : d)
                v *= gamma_;
        for (int k = 0; k < count_; ++k)
        {
            const int slot = (head_ + k) % memory_;
            const double beta = rho_[slot] * dot(y_[slot], d);
            for (std::size_t i = 0; i < d.size(); ++i)
                d[i] += (alpha_[slot] - beta) * s_[slot][i];
        }
    }

  private:
    int memory_;
    int head_ = 0;
    int count_ = 0;
    std::vector<std::vector<double>> s_, y_;
    std::vector<double> rho_, alpha_;
    double gamma_ = 1.0;
};

} // namespace

const char *to_string(Termination t)
{
    switch (t)
    {
    case Termination::GradTol: return "grad_tolerance";
    case Termination::RelCostTol: return "rel_cost_tolerance";
    case Termination::MaxIter: return "max_iterations";
    case Termination::LineSearchFail: return "line_search_failure";
    }
    return "unknown";
}

MinimizeResult minimize(const Objective &objective, std::vector<double> x0, const SolverParams &params)
{
    check_params(params);
    const auto t_begin = Clock::now();
    const std::size_t n = x0.size();

    MinimizeResult out;
    SolveReport &rep = out.report;
    std::vector<double> x = std::move(x0), g(n), xt(n), gt(n), d(n), s(n), y(n);

    auto eval = [&](std::span<const double> at, std::span<double> grad) {
        const auto t0 = Clock::now();
        const double f = objective(at, grad);
        rep.objective_time += std::chrono::duration<double>(Clock::now() - t0).count();
        ++rep.evaluations;
        if (std::isnan(f))
            throw Error("solver: objective returned NaN after " + std::to_string(rep.evaluations) + " evaluations");
        return f;
    };

    double f = eval(x, g);
    if (!std::isfinite(f))
        throw Error("solver: objective is not finite at the initial point");
    rep.trace.push_back(f);

    auto finish = [&](Termination why) {
        rep.termination = why;
        rep.final_cost = f;
        rep.final_grad_norm = inf_norm(g);
        rep.total_time = std::chrono::duration<double>(Clock::now() - t_begin).count();
        out.x = std::move(x);
        return std::move(out);
    };

    if (inf_norm(g) <= params.grad_tolerance)
        return finish(Termination::GradTol);

    History hist(params.memory, n);
    for (std::size_t i = 0; i < n; ++i)
        d[i] = -g[i];
    double step = 1.0 / std::sqrt(dot(d, d));

    while (rep.iterations < params.max_iterations)
    {
        double dg0 = dot(g, d);
        if (!(dg0 < 0.0))
        {
            // Stale curvature produced an ascent direction; restart from
            // steepest descent.
            hist.clear();
            for (std::size_t i = 0; i < n; ++i)
                d[i] = -g[i];
            dg0 = dot(g, d);
            step = 1.0 / std::sqrt(-dg0);
        }

        // Weak Wolfe search: mu is the largest step known to satisfy
        // sufficient decrease but not the curvature test, nu the smallest
        // step known to fail sufficient decrease.
        double mu = 0.0, nu = std::numeric_limits<double>::infinity();
        double ft = f;
        bool accepted = false;
        for (int ls = 0; ls < params.max_line_search_steps; ++ls)
        {
            for (std::size_t i = 0; i < n; ++i)
                xt[i] = x[i] + step * d[i];
            ft = eval(xt, gt);
            if (!(ft <= f + params.wolfe_c1 * step * dg0))
                nu = step;
            else if (dot(gt, d) < params.wolfe_c2 * dg0)
                mu = step;
            else
            {
                accepted = true;
                break;
            }
            step = std::isfinite(nu) ? 0.5 * (mu + nu) : 2.0 * step;
            if (std::isfinite(nu) && nu - mu <= std::numeric_limits<double>::epsilon() * nu)
                break;
        }
        if (!accepted)
            return finish(Termination::LineSearchFail);

        for (std::size_t i = 0; i < n; ++i)
        {
            s[i] = xt[i] - x[i];
            y[i] = gt[i] - g[i];
        }
        std::swap(x, xt);
        std::swap(g, gt);
        f = ft;
        ++rep.iterations;
        rep.trace.push_back(f);

        if (inf_norm(g) <= params.grad_tolerance)
            return finish(Termination::GradTol);
        const int k = rep.iterations;
        if (k >= params.past)
        {
            const double before = rep.trace[k - params.past];
            if ((before - f) / std::max(1.0, std::abs(f)) <= params.rel_cost_tolerance)
                return finish(Termination::RelCostTol);
        }

        const double ys = dot(y, s);
        if (ys > std::numeric_limits<double>::epsilon() * dot(y, y))
            hist.push(s, y, ys);
        hist.direction(g, d);
        step = 1.0;
    }
    return finish(Termination::MaxIter);
}

} // namespace rcesdf
