// Times the OpenMP kernels against their serial reference twins on
// stress-sized inputs and prints a comparison table. Results are checked
// for equality while timing, so a mismatch fails loudly.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "nltoric/catalog.hpp"
#include "nltoric/parallel.hpp"

using namespace nltoric;
using Clock = std::chrono::steady_clock;

namespace {

double time_once(void (*fn)(Exec), Exec exec) {
    auto t0 = Clock::now();
    fn(exec);
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const char* name, void (*fn)(Exec)) {
    double serial = time_once(fn, Exec::serial);
    double parallel = time_once(fn, Exec::parallel);
    std::printf("%-34s %10.1f ms %10.1f ms %8.2fx\n", name, serial * 1e3, parallel * 1e3,
                parallel > 0 ? serial / parallel : 0.0);
}

void bench_lattice_points(Exec exec) {
    CatalogEntry p3 = load_catalog("p3");
    DivisorClass d = divisor_from_class(p3.cg, {Int(42)});  // 14190 points
    auto pts = lattice_points(divisor_polytope(p3.fan, d.coeffs), exec);
    if (pts.size() != 14190) {
        std::fprintf(stderr, "lattice count mismatch: %zu\n", pts.size());
        std::exit(1);
    }
}

void bench_cohomology(Exec exec) {
    CatalogEntry bl = load_catalog("blowup-p3-line");
    // a far-from-nef class with every chamber type populated
    DivisorClass d = make_divisor(bl.cg, {Int(-9), Int(14), Int(-11), Int(13), Int(-7)});
    CohomologyTable t = graded_cohomology(bl.fan, d, exec);
    Int total = 0;
    for (const Int& h : t.h) total += h;
    if (total == 0) {
        std::fprintf(stderr, "expected nonzero cohomology in the stress class\n");
        std::exit(1);
    }
}

void bench_minkowski(Exec exec) {
    CatalogEntry pp = load_catalog("p1xp2");
    DivisorClass a1 = divisor_from_class(pp.cg, {Int(11), Int(9)});
    DivisorClass a2 = divisor_from_class(pp.cg, {Int(8), Int(12)});
    if (!minkowski_decomposition_check(pp.fan, pp.cg, a1, a2, exec).holds) {
        std::fprintf(stderr, "decomposition unexpectedly failed\n");
        std::exit(1);
    }
}

void bench_oda_window(Exec exec) {
    CatalogEntry qr = load_catalog("quadric-cone-resolution");
    OdaWindowReport rep = oda_window_check(qr.fan, qr.cg, 4, exec);
    if (!rep.all_pass()) {
        std::fprintf(stderr, "window check unexpectedly failed\n");
        std::exit(1);
    }
}

}  // namespace

int main() {
    apply_thread_cap();
    std::printf("threads: %d\n", effective_threads());
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");
    row("lattice enumeration (14k points)", bench_lattice_points);
    row("graded cohomology (32 chambers)", bench_cohomology);
    row("minkowski decomposition (large)", bench_minkowski);
    row("decomposition window, bound 4", bench_oda_window);
    return 0;
}
