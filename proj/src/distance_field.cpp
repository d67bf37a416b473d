#include <rcesdf/distance_field.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace rcesdf
{

ScalarField2D::ScalarField2D(Vec2 origin, double resolution, int nx, int ny, std::vector<double> values)
    : origin_(std::move(origin)), resolution_(resolution), nx_(nx), ny_(ny), values_(std::move(values))
{
    if (!(resolution_ > 0.0))
        throw InvariantError("field resolution must be positive");
    if (nx_ < 1 || ny_ < 1)
        throw InvariantError("field needs at least one cell in each direction");
    if (values_.size() != static_cast<std::size_t>(nx_ + 1) * static_cast<std::size_t>(ny_ + 1))
        throw InvariantError("field value count does not match (nx+1)(ny+1)");
}

double ScalarField2D::min_value() const { return *std::min_element(values_.begin(), values_.end()); }

std::vector<double> edt_1d(std::span<const double> f)
{
    std::vector<double> out(f.size());
    std::vector<int> hull(f.size());
    std::vector<double> breaks(f.size() + 1);
    edt_1d(f, out, hull, breaks);
    return out;
}

void edt_1d(std::span<const double> f, std::span<double> out, std::span<int> hull, std::span<double> breaks)
{
    const int n = static_cast<int>(f.size());
    if (n == 0)
        return;
    int k = 0;
    hull[0] = 0;
    breaks[0] = -kEdtInfinity;
    breaks[1] = kEdtInfinity;
    for (int q = 1; q < n; ++q)
    {
        const double fq = f[q] + static_cast<double>(q) * q;
        double s = 0.0;
        for (;;)
        {
            const int v = hull[k];
            s = (fq - (f[v] + static_cast<double>(v) * v)) / (2.0 * (q - v));
            if (s > breaks[k] || k == 0)
                break;
            --k;
        }
        if (s <= breaks[k])
        {
            // k == 0 and the new parabola dominates everywhere
            hull[0] = q;
            breaks[0] = -kEdtInfinity;
            breaks[1] = kEdtInfinity;
            continue;
        }
        ++k;
        hull[k] = q;
        breaks[k] = s;
        breaks[k + 1] = kEdtInfinity;
    }
    k = 0;
    for (int p = 0; p < n; ++p)
    {
        while (breaks[k + 1] < p)
            ++k;
        const double d = p - hull[k];
        out[p] = d * d + f[hull[k]];
    }
}

namespace
{

void column_pass(const SiteMask &mask, std::vector<double> &g, int i, std::vector<double> &f, std::vector<double> &o,
                 std::vector<int> &hull, std::vector<double> &breaks)
{
    const int w = mask.w, h = mask.h;
    for (int j = 0; j < h; ++j)
        f[j] = mask.at(i, j) ? 0.0 : kEdtInfinity;
    edt_1d(std::span<const double>(f.data(), h), std::span<double>(o.data(), h), hull, breaks);
    for (int j = 0; j < h; ++j)
        g[static_cast<std::size_t>(j) * w + i] = o[j];
}

void row_pass(const SiteMask &mask, std::vector<double> &g, int j, std::vector<double> &o, std::vector<int> &hull,
              std::vector<double> &breaks)
{
    const int w = mask.w;
    double *row = g.data() + static_cast<std::size_t>(j) * w;
    edt_1d(std::span<const double>(row, w), std::span<double>(o.data(), w), hull, breaks);
    std::copy(o.begin(), o.begin() + w, row);
}

} // namespace

std::vector<double> edt_squared(const SiteMask &mask, Exec exec)
{
    const int w = mask.w, h = mask.h;
    std::vector<double> g(static_cast<std::size_t>(w) * h, kEdtInfinity);
    const int n = std::max(w, h);
    if (exec == Exec::Serial)
    {
        std::vector<double> f(n), o(n), breaks(n + 1);
        std::vector<int> hull(n);
        for (int i = 0; i < w; ++i)
            column_pass(mask, g, i, f, o, hull, breaks);
        for (int j = 0; j < h; ++j)
            row_pass(mask, g, j, o, hull, breaks);
        return g;
    }
#pragma omp parallel
    {
        std::vector<double> f(n), o(n), breaks(n + 1);
        std::vector<int> hull(n);
#pragma omp for schedule(static)
        for (int i = 0; i < w; ++i)
            column_pass(mask, g, i, f, o, hull, breaks);
#pragma omp for schedule(static)
        for (int j = 0; j < h; ++j)
            row_pass(mask, g, j, o, hull, breaks);
    }
    return g;
}

ScalarField2D edt_2d(const SiteMask &vertices, const Vec2 &origin, double resolution, Exec exec)
{
    if (vertices.w < 2 || vertices.h < 2)
        throw InvariantError("edt_2d: need at least 2x2 vertices");
    if (std::none_of(vertices.set.begin(), vertices.set.end(), [](auto v) { return v != 0; }))
        throw InvariantError("edt_2d: no occupied vertex, distances would all be infinite");
    auto g = edt_squared(vertices, exec);
    for (auto &v : g)
        v = std::sqrt(v) * resolution;
    return ScalarField2D(origin, resolution, vertices.w - 1, vertices.h - 1, std::move(g));
}

ScalarField2D signed_field(const OccupancyGrid2D &occ, SignConvention convention, Exec exec)
{
    const int w = occ.nx + 1, h = occ.ny + 1;
    SiteMask inside(w, h), solid(w, h), not_inside(w, h);
    bool any_occupied = false, any_free = false;
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i)
        {
            bool all = true, any = false;
            for (int dj = -1; dj <= 0; ++dj)
                for (int di = -1; di <= 0; ++di)
                {
                    const int ci = i + di, cj = j + dj;
                    if (!occ.in_range(ci, cj))
                        continue;
                    const bool o = occ.occupied(ci, cj);
                    all = all && o;
                    any = any || o;
                }
            inside.mark(i, j, all);
            not_inside.mark(i, j, !all);
            solid.mark(i, j, any);
            any_occupied = any_occupied || any;
            any_free = any_free || !all;
        }
    if (!any_occupied)
        throw InvariantError("signed_field: grid has no occupied cell");
    if (occ.occupied_count() == occ.occupancy.size())
        throw InvariantError("signed_field: grid has no free cell");

    const auto to_inside_boundary = edt_squared(not_inside, exec);
    std::vector<double> values(to_inside_boundary.size());
    const double res = occ.resolution;
    if (convention == SignConvention::InsideNegativeOutsideZero)
    {
        for (std::size_t k = 0; k < values.size(); ++k)
            values[k] = inside.set[k] ? -std::sqrt(to_inside_boundary[k]) * res : 0.0;
    }
    else
    {
        const auto to_solid = edt_squared(solid, exec);
        for (std::size_t k = 0; k < values.size(); ++k)
            values[k] = inside.set[k] ? -std::sqrt(to_inside_boundary[k]) * res : std::sqrt(to_solid[k]) * res;
    }
    return ScalarField2D(occ.origin, res, occ.nx, occ.ny, std::move(values));
}

ValueGradient interpolate_with_gradient(const ScalarField2D &field, const Vec2 &p, OutOfBounds policy)
{
    const double inv = 1.0 / field.resolution();
    double gx = (p.x() - field.origin().x()) * inv;
    double gy = (p.y() - field.origin().y()) * inv;
    // Rounding in origin + i * res can land a query on a boundary vertex a
    // few ulps outside; such queries are snapped back in.
    constexpr double kSnap = 1e-9;
    if (gx >= -kSnap && gy >= -kSnap && gx <= field.nx() + kSnap && gy <= field.ny() + kSnap)
    {
        gx = std::clamp(gx, 0.0, static_cast<double>(field.nx()));
        gy = std::clamp(gy, 0.0, static_cast<double>(field.ny()));
    }
    if (!(gx >= 0.0 && gy >= 0.0 && gx <= field.nx() && gy <= field.ny()))
    {
        if (policy == OutOfBounds::Zero)
            return {};
        std::ostringstream msg;
        msg << "field query (" << p.x() << ", " << p.y() << ") outside bounds [" << field.bounds().min.x() << ", "
            << field.bounds().max.x() << "] x [" << field.bounds().min.y() << ", " << field.bounds().max.y() << "]";
        throw OutOfBoundsError(msg.str());
    }
    const int i = std::min(static_cast<int>(gx), field.nx() - 1);
    const int j = std::min(static_cast<int>(gy), field.ny() - 1);
    const double u = gx - i, v = gy - j;
    const double v00 = field.vertex(i, j), v10 = field.vertex(i + 1, j);
    const double v01 = field.vertex(i, j + 1), v11 = field.vertex(i + 1, j + 1);
    const double b0 = v00 + u * (v10 - v00); // along x at j
    const double b1 = v01 + u * (v11 - v01); // along x at j + 1
    ValueGradient r;
    r.value = b0 + v * (b1 - b0);
    r.gradient.x() = ((v10 - v00) * (1.0 - v) + (v11 - v01) * v) * inv;
    r.gradient.y() = (b1 - b0) * inv;
    return r;
}

double interpolate(const ScalarField2D &field, const Vec2 &p, OutOfBounds policy)
{
    return interpolate_with_gradient(field, p, policy).value;
}

Vec2 gradient(const ScalarField2D &field, const Vec2 &p, OutOfBounds policy)
{
    return interpolate_with_gradient(field, p, policy).gradient;
}

const char *to_string(SignConvention c)
{
    return c == SignConvention::InsideNegativeOutsideZero ? "InsideNegativeOutsideZero"
                                                           : "InsideNegativeOutsidePositive";
}

void write_field_dump(std::ostream &out, const ScalarField2D &field, SignConvention convention)
{
    nlohmann::json header = {{"origin", {field.origin().x(), field.origin().y()}},
                             {"resolution", field.resolution()},
                             {"nx", field.nx()},
                             {"ny", field.ny()},
                             {"convention", to_string(convention)}};
    out << header.dump() << "\n";
    out << std::setprecision(17);
    for (int j = 0; j < field.vertices_y(); ++j)
    {
        for (int i = 0; i < field.vertices_x(); ++i)
        {
            if (i)
                out << ',';
            out << field.vertex(i, j);
        }
        out << '\n';
    }
}

FieldDump read_field_dump(std::istream &in)
{
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("field dump: missing header line");
    nlohmann::json h;
    try
    {
        h = nlohmann::json::parse(line);
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw ParseError(std::string("field dump header: ") + e.what());
    }
    FieldDump d;
    std::string conv;
    int nx = 0, ny = 0;
    double res = 0.0;
    Vec2 origin = Vec2::Zero();
    try
    {
        conv = h.at("convention").get<std::string>();
        nx = h.at("nx").get<int>();
        ny = h.at("ny").get<int>();
        res = h.at("resolution").get<double>();
        origin = {h.at("origin").at(0).get<double>(), h.at("origin").at(1).get<double>()};
    }
    catch (const nlohmann::json::exception &e)
    {
        throw ParseError(std::string("field dump header: ") + e.what());
    }
    if (conv == "InsideNegativeOutsideZero")
        d.convention = SignConvention::InsideNegativeOutsideZero;
    else if (conv == "InsideNegativeOutsidePositive")
        d.convention = SignConvention::InsideNegativeOutsidePositive;
    else
        throw ParseError("field dump: unknown convention '" + conv + "'");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(nx + 1) * (ny + 1));
    for (int j = 0; j <= ny; ++j)
    {
        if (!std::getline(in, line))
            throw ParseError("field dump: expected " + std::to_string(ny + 1) + " rows, got " + std::to_string(j));
        std::stringstream ss(line);
        std::string cell;
        int count = 0;
        while (std::getline(ss, cell, ','))
        {
            try
            {
                values.push_back(std::stod(cell));
            }
            catch (const std::exception &)
            {
                throw ParseError("field dump: bad value '" + cell + "' in row " + std::to_string(j));
            }
            ++count;
        }
        if (count != nx + 1)
            throw ParseError("field dump: row " + std::to_string(j) + " has " + std::to_string(count) + " values");
    }
    if (nx < 1 || ny < 1 || !(res > 0.0))
        throw ParseError("field dump: bad grid dimensions");
    d.field = ScalarField2D(origin, res, nx, ny, std::move(values));
    return d;
}

} // namespace rcesdf
