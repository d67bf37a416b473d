#pragma once

#include <optional>

namespace rcesdf
{

/// Weights of the five penalty terms of the total cost.
struct PenaltyWeights
{
    double position_smooth = 1.0;
    double position_feasible = 100.0;
    double yaw_smooth = 1.0;
    double yaw_feasible = 100.0;
    double collision = 1.0e4;

    bool operator==(const PenaltyWeights &) const = default;
};

/// Kinematic limits. Yaw limits are in rad/s and rad/s^2.
struct Limits
{
    double v_max = 2.0;
    double a_max = 2.0;
    double yaw_rate_max = 1.0;
    double yaw_acc_max = 2.0;

    bool operator==(const Limits &) const = default;
};

/// Shape of the over-limit penalty applied to x = |v|^2 - v_max^2.
enum class FeasibilityPenalty
{
    Hinge, ///< max(0, x)
    Cubic  ///< max(0, x)^3
};

struct SolverParams
{
    int memory = 8;
    int max_iterations = 10000;
    double grad_tolerance = 1e-6;     ///< infinity norm of the gradient
    double rel_cost_tolerance = 1e-8; ///< (f_{k-past} - f_k) / max(1, |f_k|)
    int past = 3;
    double wolfe_c1 = 1e-4;
    double wolfe_c2 = 0.9;
    int max_line_search_steps = 64;

    bool operator==(const SolverParams &) const = default;
};

enum class YawSeed
{
    Tangent,
    Constant
};

struct PlannerConfig
{
    PenaltyWeights weights;
    Limits limits;
    FeasibilityPenalty feasibility_penalty = FeasibilityPenalty::Cubic;
    double rc_resolution = 0.1;
    double inflation = 0.1;
    std::optional<double> knot_span; ///< empty means automatic allocation
    double validator_density = 0.05;
    YawSeed yaw_seed = YawSeed::Tangent;
    SolverParams solver;
    int threads = 0; ///< 0 keeps the OpenMP default

    bool operator==(const PlannerConfig &) const = default;
};

} // namespace rcesdf
