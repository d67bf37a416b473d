#include <rcesdf/io.hpp>
#include <rcesdf/scenarios.hpp>

#include <doctest.h>

#include <sstream>

using namespace rcesdf;

TEST_SUITE("io")
{
    TEST_CASE("trajectory CSV round trip")
    {
        std::vector<Vec2> q;
        std::vector<double> y;
        for (int k = 0; k < 9; ++k)
        {
            q.emplace_back(0.4 * k, std::sin(0.5 * k));
            y.push_back(0.1 * k * k);
        }
        const BSplineSE2 s(0.3, q, y);
        std::stringstream ss;
        write_trajectory_csv(ss, s, 0.05);
        const auto text = ss.str();
        CHECK(text.rfind("t,x,y,yaw,vx,vy,yaw_rate,ax,ay,yaw_acc\n", 0) == 0);
        const SampledView v = read_trajectory_csv(ss);
        CHECK(v.duration() == doctest::Approx(s.duration()));
        for (double t : {0.0, 0.3, 0.65, s.duration()})
        {
            const auto a = v.state(t), b = evaluate(s, t);
            CHECK((a.pose.p - b.pose.p).norm() <= 1e-12);
            CHECK(a.yaw_rate == doctest::Approx(b.yaw_rate));
        }
    }

    TEST_CASE("seven-column CSV is accepted")
    {
        std::stringstream ss("t,x,y,yaw,vx,vy,yaw_rate\n0,1,2,0,0,0,0\n1,2,2,0,1,0,0\n");
        const auto v = read_trajectory_csv(ss);
        CHECK(v.state(0.5).pose.p.x() == doctest::Approx(1.5));
    }

    TEST_CASE("malformed CSV names the line")
    {
        std::stringstream bad("t,x,y,yaw,vx,vy,yaw_rate\n0,1,2,0,0,0,0\n1,2,oops,0,0,0,0\n");
        try
        {
            read_trajectory_csv(bad);
            FAIL("expected ParseError");
        }
        catch (const ParseError &e)
        {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
        std::stringstream cols("t,x,y,yaw\n0,1,2\n");
        CHECK_THROWS_AS(read_trajectory_csv(cols), ParseError);
        std::stringstream header("a,b\n");
        CHECK_THROWS_AS(read_trajectory_csv(header), ParseError);
    }

    TEST_CASE("result JSON carries the trace only on request")
    {
        const auto r = plan(open_field_scenario());
        const auto with = plan_result_json(r, true), without = plan_result_json(r, false);
        CHECK(with["report"].contains("trace"));
        CHECK_FALSE(without["report"].contains("trace"));
        CHECK(with["report"]["trace"].size() == static_cast<std::size_t>(r.report.iterations) + 1);
        CHECK(with["validation"]["collision_free"].get<bool>());
        for (const char *k : {"field_build", "init", "optimize", "validate"})
            CHECK(with["timings"].contains(k));
        const auto cp = control_points_json(r.trajectory);
        CHECK(cp["positions"].size() == static_cast<std::size_t>(r.trajectory.size()));
    }

    TEST_CASE("SVG output is well formed")
    {
        const Scenario s = open_field_scenario();
        const auto r = plan(s);
        std::stringstream svg;
        write_plan_svg(svg, s, r);
        CHECK(svg.str().rfind("<svg", 0) == 0);
        CHECK(svg.str().find("</svg>") != std::string::npos);
    }
}
