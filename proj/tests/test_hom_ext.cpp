#include <doctest.h>

#include <algorithm>

#include "arcmodel/arc_set.hpp"
#include "arcmodel/hom_ext.hpp"

using namespace arcmodel;

TEST_CASE("ext dimensions on known pairs")
{
    const ModelParams n3(3);
    CHECK(ext_dim(Arc(2, 9), Arc(-1, 6), 1, n3) == 1);
    CHECK(ext_dim(Arc(-4, 3), Arc(-4, 6), 1, n3) == 0);
    CHECK_THROWS_AS(ext_dim(Arc(2, 9), Arc(-1, 6), 0, n3), ArcError);
    CHECK_THROWS_AS(ext_dim(Arc(3, 6), Arc(-1, 6), 1, n3), ArcError);
}

TEST_CASE("ext profile of a crossing pair has exactly one nonzero degree")
{
    const ModelParams n3(3);
    const auto profile = ext_profile(Arc(-4, 3), Arc(2, 6), n3);
    REQUIRE(profile.size() == 3);
    CHECK(std::count(profile.begin(), profile.end(), 1) >= 1);
}

TEST_CASE("hom to self is one-dimensional")
{
    for (int n : {1, 2, 3, 5}) {
        const ModelParams p(n);
        for (const Arc& a : admissible_arcs(Window(-8, 8), p))
            CHECK(hom_dim(a, a, p) == 1);
    }
}

TEST_CASE("ext triangle middle terms")
{
    const ModelParams n3(3);
    const ExtTriangle tri = ext_triangle(Arc(2, 6), Arc(-4, 3), n3);
    CHECK(tri.left == Arc(-4, 3));
    CHECK(tri.right == Arc(2, 6));
    const auto mid = tri.middle();
    REQUIRE(mid.size() == 1);
    CHECK(mid[0] == Arc(-4, 6));
    CHECK_THROWS_AS(ext_triangle(Arc(-4, 3), Arc(-4, 6), n3), ArcError);
}

TEST_CASE("ext1 classification never reports overlap")
{
    for (int n : {1, 2, 3, 5}) {
        const ModelParams p(n);
        const auto arcs = admissible_arcs(Window(-10, 10), p);
        for (const Arc& x : arcs)
            for (const Arc& y : arcs)
                CHECK_FALSE(ext1_case(x, y, p).overlap);
    }
}

TEST_CASE("middle terms of every extension triangle do not cross either end")
{
    const ModelParams n3(3);
    const auto arcs = admissible_arcs(Window(-12, 12), n3);
    for (const Arc& x : arcs) {
        for (const Arc& y : arcs) {
            if (ext_dim(x, y, 1, n3) == 0)
                continue;
            const ExtTriangle tri = ext_triangle(x, y, n3);
            for (const Arc& m : tri.middle()) {
                CHECK(is_admissible(m, n3));
                CHECK_FALSE(cross(m, x));
                CHECK_FALSE(cross(m, y));
            }
        }
    }
}

TEST_CASE("shift invariance of ext")
{
    const ModelParams n2(2);
    const auto arcs = admissible_arcs(Window(-8, 8), n2);
    for (const Arc& x : arcs)
        for (const Arc& y : arcs)
            for (int k : {-3, 1, 4})
                CHECK(ext_profile(x, y, n2) == ext_profile(shift(x, k), shift(y, k), n2));
}
