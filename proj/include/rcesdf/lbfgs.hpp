#pragma once

#include <rcesdf/config.hpp>
#include <rcesdf/types.hpp>

#include <functional>
#include <span>
#include <vector>

namespace rcesdf
{

enum class Termination
{
    GradTol,
    RelCostTol,
    MaxIter,
    LineSearchFail
};

const char *to_string(Termination t);

struct SolveReport
{
    int iterations = 0;
    int evaluations = 0;
    double final_cost = 0.0;
    double final_grad_norm = 0.0; ///< infinity norm
    Termination termination = Termination::MaxIter;
    double total_time = 0.0;     ///< seconds inside minimize
    double objective_time = 0.0; ///< seconds inside the objective callable
    std::vector<double> trace;   ///< cost after each accepted step, trace[0] at x0
};

/// Writes the gradient into `grad` and returns the cost. A return value of
/// +inf marks an infeasible trial point: the line search shortens the step.
using Objective = std::function<double(std::span<const double> x, std::span<double> grad)>;

struct MinimizeResult
{
    std::vector<double> x;
    SolveReport report;
};

/// L-BFGS with a weak Wolfe line search that brackets by bisection and
/// expands by doubling, which stays valid on objectives with kinks.
/// Throws InvariantError for inconsistent parameters and Error when the
/// objective returns NaN or a non-finite cost at x0.
MinimizeResult minimize(const Objective &objective, std::vector<double> x0, const SolverParams &params);

} // namespace rcesdf
