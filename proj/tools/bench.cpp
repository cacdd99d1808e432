// Benchmark harness: times each parallel kernel against its serial
// arbitrary-precision (or single-pass) reference over identical workloads,
// and confirms the two produce the same result while timing them.
//
// Usage: shadowcalc-bench [--quick]

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <string>

#include "shadowcalc/sieve.hpp"
#include "shadowcalc/sweeps.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void print_row(const char* name, double serial_s, double kernel_s, bool same) {
    std::printf("%-34s serial %8.3fs   kernel %8.3fs   speedup %5.2fx   %s\n", name, serial_s,
                kernel_s, kernel_s > 0 ? serial_s / kernel_s : 0.0,
                same ? "results match" : "RESULTS DIFFER");
}

// Times one serial/kernel pair of sweep functions on the same bounds.
template <typename Serial, typename Kernel>
bool bench_sweep(const char* name, Serial serial, Kernel kernel) {
    const auto t0 = Clock::now();
    const shadowcalc::SweepResult a = serial();
    const double serial_s = seconds_since(t0);

    const auto t1 = Clock::now();
    const shadowcalc::SweepResult b = kernel();
    const double kernel_s = seconds_since(t1);

    const bool same = a.checked == b.checked && a.ok() && b.ok();
    print_row(name, serial_s, kernel_s, same);
    return same;
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) {
            quick = true;
        } else {
            std::fprintf(stderr, "usage: %s [--quick]\n", argv[0]);
            return 2;
        }
    }

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled (serial kernels)\n");
#endif

    const std::uint64_t sieve_limit = quick ? 2'000'000 : 20'000'000;
    const std::uint64_t verify_limit = quick ? 1'000'000 : 10'000'000;
    const std::uint64_t roundtrip_n = quick ? 20'000 : 200'000;
    const unsigned roundtrip_k = 8;
    const std::uint64_t exchange_nm = quick ? 300 : 1'000;
    const unsigned exchange_k = 4;

    bool all_same = true;

    {
        const auto t0 = Clock::now();
        const shadowcalc::SieveTable serial = shadowcalc::build_sieve(sieve_limit);
        const double serial_s = seconds_since(t0);
        const auto t1 = Clock::now();
        const shadowcalc::SieveTable segmented = shadowcalc::build_sieve_segmented(sieve_limit);
        const double kernel_s = seconds_since(t1);
        bool same = true;
        for (std::uint64_t m = 1; m <= sieve_limit; ++m) {
            if (serial.omega(m) != segmented.omega(m) ||
                serial.is_squarefree(m) != segmented.is_squarefree(m)) {
                same = false;
                break;
            }
        }
        const std::string name = "sieve build (limit " + std::to_string(sieve_limit) + ")";
        print_row(name.c_str(), serial_s, kernel_s, same);
        all_same = all_same && same;

        const auto t2 = Clock::now();
        const auto bulk_serial = shadowcalc::verify_inequalities_up_to(segmented, verify_limit);
        const double bulk_serial_s = seconds_since(t2);
        const auto t3 = Clock::now();
        const auto bulk_kernel =
            shadowcalc::verify_inequalities_up_to_parallel(segmented, verify_limit);
        const double bulk_kernel_s = seconds_since(t3);
        const bool bulk_same = bulk_serial.checks == bulk_kernel.checks &&
                               bulk_serial.failures == bulk_kernel.failures &&
                               bulk_serial.all_ok() && bulk_kernel.all_ok();
        const std::string bulk_name =
            "inequality verify (limit " + std::to_string(verify_limit) + ")";
        print_row(bulk_name.c_str(), bulk_serial_s, bulk_kernel_s, bulk_same);
        all_same = all_same && bulk_same;
    }

    all_same = all_same && bench_sweep(
        "expansion roundtrip sweep",
        [&] { return shadowcalc::sweep_roundtrip_exact(roundtrip_n, roundtrip_k); },
        [&] { return shadowcalc::sweep_roundtrip_fast(roundtrip_n, roundtrip_k); });

    all_same = all_same && bench_sweep(
        "operator identity sweep",
        [&] { return shadowcalc::sweep_identities_exact(roundtrip_n, roundtrip_k); },
        [&] { return shadowcalc::sweep_identities_fast(roundtrip_n, roundtrip_k); });

    all_same = all_same && bench_sweep(
        "exchange equivalence sweep",
        [&] { return shadowcalc::sweep_exchange_exact(exchange_nm, exchange_k); },
        [&] { return shadowcalc::sweep_exchange_fast(exchange_nm, exchange_k); });

    if (!all_same) {
        std::printf("FAILURE: a kernel disagreed with its reference\n");
        return 1;
    }
    return 0;
}
