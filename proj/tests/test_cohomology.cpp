#include <doctest.h>

#include <random>

#include "nltoric/catalog.hpp"
#include "nltoric/cohomology.hpp"

using namespace nltoric;

namespace {

std::vector<Int> iv(std::initializer_list<long> xs) {
    std::vector<Int> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

// independent oracle: cohomology of O(a) (x) O(b) on the product of a line
// and a plane, by the product formula
std::vector<long> kunneth_p1xp2(long p1_deg, long p2_deg) {
    auto h_p1 = [](long a) {
        std::vector<long> h(2, 0);
        if (a >= 0) h[0] = a + 1;
        if (a <= -2) h[1] = -a - 1;
        return h;
    };
    auto h_p2 = [](long b) {
        std::vector<long> h(3, 0);
        if (b >= 0) h[0] = (b + 1) * (b + 2) / 2;
        if (b <= -3) h[2] = (b + 1) * (b + 2) / 2;  // (-b-1)(-b-2)/2
        return h;
    };
    std::vector<long> a = h_p1(p1_deg), b = h_p2(p2_deg), out(4, 0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) out[i + j] += a[i] * b[j];
    return out;
}

// brute-force count of monomials of total degree d in 4 variables
long monomials_p3(long d) {
    long cnt = 0;
    for (long a = 0; a <= d; ++a)
        for (long b = 0; a + b <= d; ++b)
            for (long c = 0; a + b + c <= d; ++c) ++cnt;
    return cnt;
}

}  // namespace

TEST_CASE("lattice point counts") {
    CatalogEntry p3 = load_catalog("p3");
    DivisorClass h = divisor_from_class(p3.cg, iv({1}));
    CHECK(lattice_points(divisor_polytope(p3.fan, h.coeffs)).size() == 4);
    DivisorClass h4 = divisor_from_class(p3.cg, iv({4}));
    CHECK(static_cast<long>(lattice_points(divisor_polytope(p3.fan, h4.coeffs)).size()) ==
          monomials_p3(4));  // 35

    CatalogEntry wp = load_catalog("wp1122");
    CHECK(lattice_points(divisor_polytope(wp.fan, wp.eta.coeffs)).size() == 5);
}

TEST_CASE("lattice enumeration rejects unbounded systems") {
    std::vector<IHalfspace> half_line = {{iv({1, 0}), Int(0)}, {iv({0, 1}), Int(0)}};
    CHECK_THROWS_AS(lattice_points(half_line, 2), PolytopeUnbounded);
}

TEST_CASE("a non-complete input is caught through its unbounded chamber") {
    // a single cone is not a complete fan; the trivial class has an
    // unbounded section chamber, which the engine must refuse to sum
    Fan f;
    f.dim = 3;
    f.rays = {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})};
    f.max_cones = {{0, 1, 2}};
    ClassGroup cg(f);
    DivisorClass zero = make_divisor(cg, iv({0, 0, 0}));
    CHECK_THROWS_AS(graded_cohomology(f, zero), std::invalid_argument);
}

TEST_CASE("serial and parallel enumeration agree") {
    CatalogEntry p3 = load_catalog("p3");
    DivisorClass d = divisor_from_class(p3.cg, iv({7}));
    auto a = lattice_points(divisor_polytope(p3.fan, d.coeffs), Exec::serial);
    auto b = lattice_points(divisor_polytope(p3.fan, d.coeffs), Exec::parallel);
    CHECK(a == b);
}

TEST_CASE("cohomology of projective space") {
    CatalogEntry p3 = load_catalog("p3");
    auto h = [&](long k) { return graded_cohomology(p3.fan, divisor_from_class(p3.cg, iv({k}))).h; };
    CHECK(h(-1) == std::vector<Int>({0, 0, 0, 0}));
    CHECK(h(-2) == std::vector<Int>({0, 0, 0, 0}));
    CHECK(h(-3) == std::vector<Int>({0, 0, 0, 0}));
    CHECK(h(-4) == std::vector<Int>({0, 0, 0, 1}));
    CHECK(h(-5) == std::vector<Int>({0, 0, 0, 4}));
    CHECK(h(0) == std::vector<Int>({1, 0, 0, 0}));
    CHECK(h(2) == std::vector<Int>({10, 0, 0, 0}));
}

TEST_CASE("kunneth oracle on the product fan") {
    CatalogEntry e = load_catalog("p1xp2");
    // class coordinates: (plane degree, line degree)
    auto engine = [&](long p2d, long p1d) {
        return graded_cohomology(e.fan, divisor_from_class(e.cg, iv({p2d, p1d}))).h;
    };
    // the worked example: O(-2) from the line factor, O(1) from the plane
    std::vector<Int> t = engine(1, -2);
    CHECK(t == std::vector<Int>({0, 3, 0, 0}));

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        long p2d = static_cast<long>(rng() % 11) - 5;
        long p1d = static_cast<long>(rng() % 11) - 5;
        std::vector<long> oracle = kunneth_p1xp2(p1d, p2d);
        std::vector<Int> got = engine(p2d, p1d);
        for (int q = 0; q <= 3; ++q) CHECK(got[q] == oracle[q]);
    }
}

TEST_CASE("demazure vanishing for nef cartier classes") {
    for (const std::string& name : catalog_names()) {
        CatalogEntry e = load_catalog(name);
        std::mt19937_64 rng(43);
        std::vector<DivisorClass> basis = picard_nef_basis(e.fan, e.cg);
        for (int t = 0; t < 10; ++t) {
            DivisorClass d = scale(e.cg, Int(static_cast<long>(rng() % 5)), basis[0]);
            for (size_t i = 1; i < basis.size(); ++i)
                d = add(e.cg, d, scale(e.cg, Int(static_cast<long>(rng() % 5)), basis[i]));
            CohomologyTable table = graded_cohomology(e.fan, d);
            for (int q = 1; q <= e.fan.dim; ++q) CHECK(table.h[q] == 0);
            CHECK(table.h[0] == h0(e.fan, d));
        }
    }
}

TEST_CASE("serre duality on fixed and random classes") {
    CatalogEntry p3 = load_catalog("p3");
    CHECK(serre_duality_check(p3.fan, p3.cg, divisor_from_class(p3.cg, iv({2}))).pass);

    CatalogEntry wp = load_catalog("wp1122");
    CHECK(serre_duality_check(wp.fan, wp.cg, wp.eta).pass);

    for (const std::string& name : catalog_names()) {
        CatalogEntry e = load_catalog(name);
        std::mt19937_64 rng(47);
        int done = 0;
        while (done < 12) {
            std::vector<Int> coeffs(e.fan.n_rays());
            for (auto& x : coeffs) x = Int(static_cast<long>(rng() % 9) - 4);
            if (!cartier_data(e.fan, coeffs).cartier) continue;
            ++done;
            SerreCheck chk = serre_duality_check(e.fan, e.cg, make_divisor(e.cg, coeffs));
            CHECK(chk.pass);
        }
    }
}

TEST_CASE("serial and parallel cohomology agree") {
    CatalogEntry e = load_catalog("blowup-p3-line");
    std::mt19937_64 rng(53);
    for (int t = 0; t < 8; ++t) {
        std::vector<Int> coeffs(e.fan.n_rays());
        for (auto& x : coeffs) x = Int(static_cast<long>(rng() % 9) - 4);
        DivisorClass d = make_divisor(e.cg, coeffs);
        CohomologyTable a = graded_cohomology(e.fan, d, Exec::serial);
        CohomologyTable b = graded_cohomology(e.fan, d, Exec::parallel);
        CHECK(a.h == b.h);
        REQUIRE(a.chambers.size() == b.chambers.size());
        for (size_t i = 0; i < a.chambers.size(); ++i) {
            CHECK(a.chambers[i].violated_mask == b.chambers[i].violated_mask);
            CHECK(a.chambers[i].lattice_count == b.chambers[i].lattice_count);
        }
    }
}

TEST_CASE("h0 chamber partition") {
    CatalogEntry p3 = load_catalog("p3");
    DivisorClass d = divisor_from_class(p3.cg, iv({3}));
    CohomologyTable t = graded_cohomology(p3.fan, d);
    Int h0_from_chambers = 0;
    for (const auto& c : t.chambers)
        if (c.reduced_betti[0] != 0) h0_from_chambers += c.reduced_betti[0] * c.lattice_count;
    CHECK(h0_from_chambers == h0(p3.fan, d));
}

TEST_CASE("minkowski decomposition checks") {
    CatalogEntry p3 = load_catalog("p3");
    DivisorClass h = divisor_from_class(p3.cg, iv({1}));
    DivisorClass h3 = divisor_from_class(p3.cg, iv({3}));
    DivisorClass zero = divisor_from_class(p3.cg, iv({0}));

    CHECK(minkowski_decomposition_check(p3.fan, p3.cg, h, zero).holds);
    MinkowskiResult r = minkowski_decomposition_check(p3.fan, p3.cg, h, h3);
    CHECK(r.holds);
    CHECK(r.points_checked == 35);

    CatalogEntry e = load_catalog("p1xp2");
    DivisorClass a1 = add(e.cg, e.nef_basis[0], e.nef_basis[1]);
    CHECK(minkowski_decomposition_check(e.fan, e.cg, a1, e.nef_basis[0]).holds);

    DivisorClass minus = divisor_from_class(p3.cg, iv({-1}));
    CHECK_THROWS(minkowski_decomposition_check(p3.fan, p3.cg, h, minus));
}

TEST_CASE("brute-force decomposition oracle on degree 4") {
    // every degree-4 monomial in 4 variables factors as degree-1 times
    // degree-3: verified directly on exponent vectors
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; a + b <= 4; ++b)
            for (long c = 0; a + b + c <= 4; ++c) {
                long d = 4 - a - b - c;
                bool split = false;
                long e1[4] = {a, b, c, d};
                for (int pick = 0; pick < 4 && !split; ++pick)
                    if (e1[pick] >= 1) split = true;  // subtract one variable: degree 3 remains
                CHECK(split);
            }
}
