#include "pnhom/cubical.hpp"
#include "pnhom/homology.hpp"
#include "pnhom/pipelines.hpp"
#include "pnhom/reference.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

// Times the OpenMP kernels against their serial reference implementations on
// growing pipeline nets (full power set of places, so 2^(n-1) states).

namespace {

template <typename F>
double time_call(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

void report(const char* kernel, std::size_t n, double serial, double parallel) {
    std::printf("%-22s n=%-3zu serial %8.3fs  parallel %8.3fs  speedup %5.2fx\n", kernel, n,
                serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> sizes = {10, 12, 14};
    std::size_t max_dim = 4;
    if (argc > 1) {
        sizes.clear();
        for (int i = 1; i < argc; ++i) {
            std::string arg = argv[i];
            if (arg == "--max-dim" && i + 1 < argc)
                max_dim = std::stoul(argv[++i]);
            else
                sizes.push_back(std::stoul(arg));
        }
    }

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("cube dimension cap: %zu\n\n", max_dim);

    for (std::size_t n : sizes) {
        auto net = pnhom::make_pipeline(n);
        auto space = std::make_shared<const pnhom::StateSpace>(
            pnhom::explore(net, pnhom::ExploreMode::all_states, std::uint64_t{1} << 26));

        pnhom::SemicubicalSet serial_complex = pnhom::reference::build_complex(*space, max_dim);
        pnhom::SemicubicalSet parallel_complex = pnhom::build_complex(space, max_dim);
        double t_build_s = time_call([&] {
            serial_complex = pnhom::reference::build_complex(*space, max_dim);
        });
        double t_build_p =
            time_call([&] { parallel_complex = pnhom::build_complex(space, max_dim); });
        if (!(serial_complex == parallel_complex)) {
            std::printf("MISMATCH: build_complex serial vs parallel at n=%zu\n", n);
            return 1;
        }
        report("build_complex", n, t_build_s, t_build_p);
        std::printf("%-22s       states %zu, cubes %zu\n", "", space->size(),
                    parallel_complex.total_cubes());

        double t_val_s =
            time_call([&] { (void)pnhom::reference::validate(serial_complex); });
        double t_val_p = time_call([&] { (void)pnhom::validate(parallel_complex); });
        report("validate", n, t_val_s, t_val_p);

        pnhom::ChainComplex cs, cp;
        double t_bd_s =
            time_call([&] { cs = pnhom::reference::boundary_matrices(serial_complex); });
        double t_bd_p = time_call([&] { cp = pnhom::boundary_matrices(parallel_complex); });
        if (!(cs.ranks == cp.ranks && cs.boundaries == cp.boundaries)) {
            std::printf("MISMATCH: boundary_matrices serial vs parallel at n=%zu\n", n);
            return 1;
        }
        report("boundary_matrices", n, t_bd_s, t_bd_p);

        double t_dl_s = time_call([&] { (void)pnhom::reference::deadlocks(*space); });
        double t_dl_p = time_call([&] { (void)pnhom::deadlocks(*space); });
        report("deadlocks", n, t_dl_s, t_dl_p);

        double t_sn_s = time_call([&] { (void)pnhom::reference::senders(*space); });
        double t_sn_p = time_call([&] { (void)pnhom::senders(*space); });
        report("senders", n, t_sn_s, t_sn_p);
        std::printf("\n");
    }
    return 0;
}
