#include <doctest.h>

#include "nltoric/fan.hpp"

using namespace nltoric;

namespace {

std::vector<Int> ray(std::initializer_list<long> xs) {
    std::vector<Int> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Fan p3() {
    Fan f;
    f.dim = 3;
    f.rays = {ray({1, 0, 0}), ray({0, 1, 0}), ray({0, 0, 1}), ray({-1, -1, -1})};
    f.max_cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    return f;
}

Fan p2() {
    Fan f;
    f.dim = 2;
    f.rays = {ray({1, 0}), ray({0, 1}), ray({-1, -1})};
    f.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    return f;
}

Fan wp1122() {
    Fan f;
    f.dim = 3;
    f.rays = {ray({1, 0, 0}), ray({0, 1, 0}), ray({0, 0, 1}), ray({-1, -2, -2})};
    f.max_cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    return f;
}

Fan p1xp2() {
    Fan f;
    f.dim = 3;
    f.rays = {ray({1, 0, 0}), ray({0, 1, 0}), ray({-1, -1, 0}), ray({0, 0, 1}), ray({0, 0, -1})};
    f.max_cones = {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 4}, {0, 2, 4}, {1, 2, 4}};
    return f;
}

}  // namespace

TEST_CASE("p3 fan validates") {
    ValidationReport r = validate_fan(p3());
    CHECK(r.valid);
    for (const Int& m : r.cone_multiplicities) CHECK(m == 1);
}

TEST_CASE("deleting a cone produces dangling walls") {
    Fan f = p3();
    f.max_cones.pop_back();
    ValidationReport r = validate_fan(f);
    CHECK_FALSE(r.valid);
    bool dangling = false;
    for (const auto& i : r.issues)
        if (i.kind == "dangling-wall") dangling = true;
    CHECK(dangling);
}

TEST_CASE("duplicate and non-primitive rays are reported") {
    Fan f = p3();
    f.rays[1] = f.rays[0];
    ValidationReport r = validate_fan(f);
    CHECK_FALSE(r.valid);
    bool dup = false;
    for (const auto& i : r.issues)
        if (i.kind == "duplicate-ray") dup = true;
    CHECK(dup);

    Fan g = p3();
    g.rays[0] = ray({2, 0, 0});
    r = validate_fan(g);
    CHECK_FALSE(r.valid);
    bool nonprim = false;
    for (const auto& i : r.issues)
        if (i.kind == "non-primitive-ray") nonprim = true;
    CHECK(nonprim);
}

TEST_CASE("wp1122 validates and is singular in the right places") {
    Fan f = wp1122();
    CHECK(validate_fan(f).valid);
    SingularSummary s = singular_locus_summary(f);
    // the two max cones containing both weight-1 rays have multiplicity 2
    std::vector<long> mults;
    for (const Int& m : s.max_cone_mult) mults.push_back(m.get_si());
    CHECK(std::count(mults.begin(), mults.end(), 2) == 2);
    CHECK(std::count(mults.begin(), mults.end(), 1) == 2);
    // exactly one singular wall, the one shared by the two singular cones
    int sing_walls = 0;
    for (const Int& m : s.wall_mult)
        if (m == 2) ++sing_walls;
    CHECK(sing_walls == 1);
    CHECK_FALSE(s.smooth);
}

TEST_CASE("walls of p2") {
    std::vector<Wall> ws = walls(p2());
    CHECK(ws.size() == 3);
    Fan f = p2();
    for (const Wall& w : ws) {
        CHECK(w.lambda_a == 1);
        CHECK(w.lambda_b == 1);
        // relation evaluates to zero
        std::vector<Int> sum(2, Int(0));
        for (int j = 0; j < 2; ++j) {
            sum[j] += w.lambda_a * f.rays[w.off_a][j];
            sum[j] += w.lambda_b * f.rays[w.off_b][j];
            for (size_t i = 0; i < w.wall_rays.size(); ++i)
                sum[j] += w.mu[i] * f.rays[w.wall_rays[i]][j];
        }
        CHECK(sum[0] == 0);
        CHECK(sum[1] == 0);
        CHECK(w.mu.size() == 1);
        CHECK(w.mu[0] == 1);  // the p2 pattern u_a + u_b + u_mid = 0
    }
}

TEST_CASE("wall counts match r * cones / 2") {
    CHECK(walls(p3()).size() == 6);
    CHECK(walls(p1xp2()).size() == 9);
    CHECK(walls(wp1122()).size() == 6);
}

TEST_CASE("wall relations evaluate to zero on every catalog-sized fan") {
    for (const Fan& f : {p3(), wp1122(), p1xp2()}) {
        for (const Wall& w : walls(f)) {
            std::vector<Int> sum(f.dim, Int(0));
            for (int j = 0; j < f.dim; ++j) {
                sum[j] += w.lambda_a * f.rays[w.off_a][j] + w.lambda_b * f.rays[w.off_b][j];
                for (size_t i = 0; i < w.wall_rays.size(); ++i)
                    sum[j] += w.mu[i] * f.rays[w.wall_rays[i]][j];
            }
            for (const Int& x : sum) CHECK(x == 0);
            CHECK(w.lambda_a > 0);
            CHECK(w.lambda_b > 0);
            std::vector<Int> rel{w.lambda_a, w.lambda_b};
            rel.insert(rel.end(), w.mu.begin(), w.mu.end());
            CHECK(vec_content(rel) == 1);
        }
    }
}

TEST_CASE("star subdivision of p3 along a two-face") {
    Fan f = star_subdivision(p3(), ray({1, 1, 0}));
    CHECK(f.n_rays() == 5);
    CHECK(f.n_cones() == 6);  // two cones split into two each
    ValidationReport r = validate_fan(f);
    CHECK(r.valid);
}

TEST_CASE("star subdivision of p2") {
    Fan f = star_subdivision(p2(), ray({1, 1}));
    CHECK(f.n_rays() == 4);
    CHECK(f.n_cones() == 4);
    CHECK(validate_fan(f).valid);
}

TEST_CASE("star subdivision rejects an existing ray") {
    CHECK_THROWS(star_subdivision(p3(), ray({1, 0, 0})));
}

TEST_CASE("star subdivision preserves completeness and adds one ray") {
    Fan base = p1xp2();
    Fan f = star_subdivision(base, ray({1, 0, 1}));
    CHECK(f.n_rays() == base.n_rays() + 1);
    CHECK(validate_fan(f).valid);
}
