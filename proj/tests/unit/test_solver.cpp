#include <rcesdf/distance_field.hpp>
#include <rcesdf/lbfgs.hpp>

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace rcesdf;

namespace
{

double half_norm2(std::span<const double> x, std::span<double> g)
{
    double f = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        f += 0.5 * x[i] * x[i];
        g[i] = x[i];
    }
    return f;
}

double rosenbrock(std::span<const double> x, std::span<double> g)
{
    const double a = 1.0 - x[0], b = x[1] - x[0] * x[0];
    g[0] = -2.0 * a - 400.0 * x[0] * b;
    g[1] = 200.0 * b;
    return a * a + 100.0 * b * b;
}

double abs_fn(std::span<const double> x, std::span<double> g)
{
    g[0] = x[0] > 0.0 ? 1.0 : (x[0] < 0.0 ? -1.0 : 0.0);
    return std::abs(x[0]);
}

SolverParams tight()
{
    SolverParams p;
    p.grad_tolerance = 1e-10;
    p.rel_cost_tolerance = 0.0;
    return p;
}

} // namespace

TEST_SUITE("solver")
{
    TEST_CASE("quadratic converges in a few iterations")
    {
        const auto r = minimize(half_norm2, {5.0, -3.0}, SolverParams{});
        CHECK(std::hypot(r.x[0], r.x[1]) <= 1e-6);
        CHECK(r.report.iterations <= 5);
        CHECK(r.report.termination == Termination::GradTol);
    }

    TEST_CASE("Rosenbrock from the classical start")
    {
        const auto r = minimize(rosenbrock, {-1.2, 1.0}, tight());
        CHECK(r.report.final_cost <= 1e-10);
        CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-4));
        CHECK(r.x[1] == doctest::Approx(1.0).epsilon(1e-4));
    }

    TEST_CASE("absolute value: kink at the minimiser")
    {
        SolverParams p;
        p.rel_cost_tolerance = 0.0;
        p.max_iterations = 200;
        const auto r = minimize(abs_fn, {1.0}, p);
        CHECK(std::abs(r.x[0]) <= 1e-4);
        CHECK(r.report.termination != Termination::LineSearchFail);
    }

    TEST_CASE("trace is monotone and starts at x0")
    {
        const auto r = minimize(rosenbrock, {-1.2, 1.0}, tight());
        REQUIRE(!r.report.trace.empty());
        CHECK(r.report.trace.front() == doctest::Approx(24.2));
        for (std::size_t k = 1; k < r.report.trace.size(); ++k)
            CHECK(r.report.trace[k] <= r.report.trace[k - 1]);
        CHECK(r.report.trace.size() == static_cast<std::size_t>(r.report.iterations) + 1);
        CHECK(r.report.evaluations >= r.report.iterations);
    }

    TEST_CASE("runs are deterministic")
    {
        const auto a = minimize(rosenbrock, {-1.2, 1.0}, tight());
        const auto b = minimize(rosenbrock, {-1.2, 1.0}, tight());
        CHECK(a.x == b.x);
        CHECK(a.report.trace == b.report.trace);
    }

    TEST_CASE("scaling the objective preserves the first direction")
    {
        std::vector<double> first_a, first_b;
        auto record = [](double scale, std::vector<double> &first) {
            int calls = 0;
            return [scale, &first, calls](std::span<const double> x, std::span<double> g) mutable {
                const double f = rosenbrock(x, g);
                for (auto &v : g)
                    v *= scale;
                if (calls++ == 1)
                    first.assign(x.begin(), x.end());
                return scale * f;
            };
        };
        SolverParams p;
        p.max_iterations = 1;
        minimize(record(1.0, first_a), {-1.2, 1.0}, p);
        minimize(record(37.0, first_b), {-1.2, 1.0}, p);
        REQUIRE(first_a.size() == 2);
        REQUIRE(first_b.size() == 2);
        const double da0 = first_a[0] + 1.2, da1 = first_a[1] - 1.0;
        const double db0 = first_b[0] + 1.2, db1 = first_b[1] - 1.0;
        CHECK(da0 * db1 - da1 * db0 == doctest::Approx(0.0).scale(1e-9));
    }

    TEST_CASE("piecewise-linear interpolated field converges")
    {
        // |x| sampled on vertices and linearly interpolated: kinks at every vertex.
        std::vector<double> v;
        for (int i = 0; i <= 40; ++i)
            v.push_back(std::abs(-2.0 + 0.1 * i));
        const ScalarField2D f({-2.0, 0.0}, 0.1, 40, 1, [&] {
            std::vector<double> all(v);
            all.insert(all.end(), v.begin(), v.end());
            return all;
        }());
        auto obj = [&](std::span<const double> x, std::span<double> g) {
            const auto vg = interpolate_with_gradient(f, {x[0], 0.05}, OutOfBounds::Error);
            g[0] = vg.gradient.x();
            return vg.value;
        };
        const auto r = minimize(obj, {1.37}, SolverParams{});
        INFO("x* = " << r.x[0] << ", " << to_string(r.report.termination) << " after " << r.report.iterations);
        CHECK(std::abs(r.x[0]) <= 1e-4);
        CHECK(r.report.termination != Termination::LineSearchFail);
    }

    TEST_CASE("infinite trial costs shorten the step")
    {
        // Feasible only for x < 2; the unconstrained step from x0 overshoots.
        auto obj = [](std::span<const double> x, std::span<double> g) {
            if (x[0] >= 2.0)
                return std::numeric_limits<double>::infinity();
            g[0] = 2.0 * (x[0] - 1.5);
            return (x[0] - 1.5) * (x[0] - 1.5);
        };
        const auto r = minimize(obj, {-10.0}, SolverParams{});
        CHECK(r.x[0] == doctest::Approx(1.5).epsilon(1e-5));
    }

    TEST_CASE("maximum iterations and relative cost termination")
    {
        SolverParams p;
        p.max_iterations = 3;
        p.rel_cost_tolerance = 0.0;
        const auto r = minimize(rosenbrock, {-1.2, 1.0}, p);
        CHECK(r.report.iterations == 3);
        CHECK(r.report.termination == Termination::MaxIter);

        SolverParams q;
        q.grad_tolerance = 0.0;
        q.rel_cost_tolerance = 1e-3;
        const auto s = minimize(rosenbrock, {-1.2, 1.0}, q);
        CHECK(s.report.termination == Termination::RelCostTol);
    }

    TEST_CASE("bad inputs are reported")
    {
        SolverParams p;
        p.wolfe_c1 = 0.95;
        CHECK_THROWS_AS(minimize(half_norm2, {1.0}, p), InvariantError);
        SolverParams m;
        m.memory = 0;
        CHECK_THROWS_AS(minimize(half_norm2, {1.0}, m), InvariantError);
        auto nan_obj = [](std::span<const double>, std::span<double> g) {
            g[0] = 0.0;
            return std::nan("");
        };
        CHECK_THROWS_AS(minimize(nan_obj, {1.0}, SolverParams{}), Error);
    }

    TEST_CASE("termination names")
    {
        CHECK(std::string(to_string(Termination::GradTol)) == "grad_tolerance");
        CHECK(std::string(to_string(Termination::LineSearchFail)) == "line_search_failure");
    }
}
