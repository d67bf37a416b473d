#pragma once

#include <rcesdf/scene.hpp>
#include <rcesdf/types.hpp>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace rcesdf
{

/// Stand-in for +inf in squared-distance transforms. Exceeds the squared
/// diagonal of any grid we build (~1e10 cells^2) by many orders of magnitude
/// while keeping parabola intersections finite.
inline constexpr double kEdtInfinity = 1e20;

/// Scalar values stored at grid vertices; vertex (i, j) sits at
/// origin + (i res, j res). nx, ny count cells, so there are
/// (nx + 1) x (ny + 1) values, row-major by j.
class ScalarField2D
{
  public:
    ScalarField2D() = default;
    ScalarField2D(Vec2 origin, double resolution, int nx, int ny, std::vector<double> values);

    const Vec2 &origin() const { return origin_; }
    double resolution() const { return resolution_; }
    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int vertices_x() const { return nx_ + 1; }
    int vertices_y() const { return ny_ + 1; }
    double vertex(int i, int j) const { return values_[static_cast<std::size_t>(j) * (nx_ + 1) + i]; }
    Vec2 vertex_position(int i, int j) const { return origin_ + Vec2(i * resolution_, j * resolution_); }
    const std::vector<double> &values() const { return values_; }
    Aabb bounds() const { return {origin_, origin_ + Vec2(nx_ * resolution_, ny_ * resolution_)}; }
    double min_value() const;

    bool operator==(const ScalarField2D &) const = default;

  private:
    Vec2 origin_{0.0, 0.0};
    double resolution_ = 1.0;
    int nx_ = 0;
    int ny_ = 0;
    std::vector<double> values_;
};

enum class SignConvention
{
    InsideNegativeOutsideZero,
    InsideNegativeOutsidePositive
};

enum class OutOfBounds
{
    Zero, ///< value 0, zero gradient
    Error ///< throw OutOfBoundsError
};

/// Row-major boolean mask of w x h sites.
struct SiteMask
{
    int w = 0;
    int h = 0;
    std::vector<std::uint8_t> set;

    SiteMask() = default;
    SiteMask(int w_, int h_) : w(w_), h(h_), set(static_cast<std::size_t>(w_) * h_, 0) {}
    bool at(int i, int j) const { return set[static_cast<std::size_t>(j) * w + i] != 0; }
    void mark(int i, int j, bool v = true) { set[static_cast<std::size_t>(j) * w + i] = v ? 1 : 0; }
};

/// Lower envelope of parabolas: out[p] = min_q (p - q)^2 + f[q], O(n).
/// Entries of f may be kEdtInfinity.
std::vector<double> edt_1d(std::span<const double> f);

/// Workspace form used by the 2D passes. `hull` needs f.size() entries and
/// `breaks` f.size() + 1.
void edt_1d(std::span<const double> f, std::span<double> out, std::span<int> hull, std::span<double> breaks);

/// Squared distance (in site units) from every site to the nearest marked
/// site; kEdtInfinity everywhere when nothing is marked.
std::vector<double> edt_squared(const SiteMask &mask, Exec exec = Exec::Parallel);

/// Exact Euclidean distance in meters to the nearest marked site, for a
/// mask of vertices of a (w-1) x (h-1) cell grid. Throws InvariantError
/// when nothing is marked or the mask is smaller than 2x2.
ScalarField2D edt_2d(const SiteMask &vertices, const Vec2 &origin, double resolution, Exec exec = Exec::Parallel);

/// Signed field over the vertices of an occupancy grid. A vertex is inside
/// when every adjacent cell is occupied, solid when any adjacent cell is
/// occupied. Inside vertices get -(distance to the nearest non-inside
/// vertex). Non-inside vertices get 0 (InsideNegativeOutsideZero) or the
/// distance to the nearest solid vertex (InsideNegativeOutsidePositive), so
/// boundary vertices are 0 under both conventions.
ScalarField2D signed_field(const OccupancyGrid2D &occupancy, SignConvention convention, Exec exec = Exec::Parallel);

struct ValueGradient
{
    double value = 0.0;
    Vec2 gradient{0.0, 0.0};
};

/// Bilinear interpolation and its analytic gradient. The upper bound of the
/// field is closed (falls in the last cell); outside the closed bounds the
/// policy applies.
ValueGradient interpolate_with_gradient(const ScalarField2D &field, const Vec2 &p, OutOfBounds policy);
double interpolate(const ScalarField2D &field, const Vec2 &p, OutOfBounds policy);
Vec2 gradient(const ScalarField2D &field, const Vec2 &p, OutOfBounds policy);

/// Text dump: one line of JSON header (origin, resolution, nx, ny,
/// convention) followed by ny + 1 CSV rows of nx + 1 vertex values, rows
/// ordered by increasing j. Values are written with 17 significant digits.
void write_field_dump(std::ostream &out, const ScalarField2D &field, SignConvention convention);

struct FieldDump
{
    ScalarField2D field;
    SignConvention convention = SignConvention::InsideNegativeOutsideZero;
};
FieldDump read_field_dump(std::istream &in);

const char *to_string(SignConvention c);

} // namespace rcesdf
