#pragma once

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>
#include <string>

namespace rcesdf
{

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document (scenario, dump, CSV).
class ParseError : public Error
{
  public:
    using Error::Error;
};

/// A domain invariant was violated by otherwise well-formed input.
class InvariantError : public Error
{
  public:
    using Error::Error;
};

/// Point query outside a field queried with the Error policy.
class OutOfBoundsError : public Error
{
  public:
    using Error::Error;
};

/// Execution mode for kernels that have an OpenMP variant. Both modes
/// produce bit-identical results.
enum class Exec
{
    Serial,
    Parallel
};

/// Planar pose. Yaw is an unwrapped real so splines stay continuous.
struct SE2Pose
{
    Vec2 p{0.0, 0.0};
    double yaw = 0.0;

    bool operator==(const SE2Pose &o) const { return p == o.p && yaw == o.yaw; }
};

inline Mat2 rotation(double yaw)
{
    const double c = std::cos(yaw), s = std::sin(yaw);
    Mat2 r;
    r << c, -s, s, c;
    return r;
}

/// d R(yaw) / d yaw
inline Mat2 rotation_derivative(double yaw)
{
    const double c = std::cos(yaw), s = std::sin(yaw);
    Mat2 r;
    r << -s, -c, c, -s;
    return r;
}

inline double wrap_angle(double a)
{
    a = std::remainder(a, 2.0 * M_PI);
    if (a <= -M_PI)
        a += 2.0 * M_PI;
    return a;
}

/// Returns the representative of `a` (mod 2pi) closest to `reference`.
inline double unwrap_near(double a, double reference)
{
    return reference + std::remainder(a - reference, 2.0 * M_PI);
}

struct Aabb
{
    Vec2 min{0.0, 0.0};
    Vec2 max{0.0, 0.0};

    bool contains(const Vec2 &q) const
    {
        return q.x() >= min.x() && q.x() <= max.x() && q.y() >= min.y() && q.y() <= max.y();
    }
    Vec2 size() const { return max - min; }
};

} // namespace rcesdf
