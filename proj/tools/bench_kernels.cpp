// Timing comparison between the serial reference kernels and their
// OpenMP counterparts. Results must agree exactly; the speedup column
// is informational.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "specdiss/enumerate.hpp"
#include "specdiss/reduced.hpp"
#include "specdiss/search.hpp"
#include "specdiss/verify.hpp"

using namespace specdiss;

namespace {

double timed(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-28s %10.3fs %10.3fs %7.2fx   %s\n", name, serial, parallel, serial / parallel,
                equal ? "results match" : "RESULTS DIFFER");
}

}  // namespace

int main() {
    std::printf("kernel                            serial   parallel  speedup   check (threads: %d)\n",
                omp_get_max_threads());

    {
        double worst_serial = 0.0, worst_parallel = 0.0;
        double ts = timed([&] {
            for (const auto& e : case_table()) worst_serial = std::max(worst_serial, verify_case_poly_serial(e, 200000).max_rel_err);
        });
        double tp = timed([&] {
            for (const auto& e : case_table()) worst_parallel = std::max(worst_parallel, verify_case_poly(e, 200000).max_rel_err);
        });
        row("case-poly audit (33x200k)", ts, tp, worst_serial == worst_parallel);
    }

    {
        RunConfig serial_cfg;
        serial_cfg.workers = 1;
        RunConfig parallel_cfg;
        SearchResult rs, rp;
        double ts = timed([&] { rs = min_rho_search(enumerate_free_trees(16), 16, 13, serial_cfg); });
        double tp = timed([&] { rp = min_rho_search(enumerate_free_trees(16), 16, 13, parallel_cfg); });
        bool equal = rs.winner.graph6 == rp.winner.graph6 && rs.candidates_examined == rp.candidates_examined &&
                     rs.ties.size() == rp.ties.size();
        row("tree search (n=16)", ts, tp, equal);
    }

    {
        RunConfig serial_cfg;
        serial_cfg.workers = 1;
        RunConfig parallel_cfg;
        VerifyReport rs, rp;
        double ts = timed([&] { rs = verify_smith_sweep(serial_cfg); });
        double tp = timed([&] { rp = verify_smith_sweep(parallel_cfg); });
        row("smith sweep (n<=7)", ts, tp, rs.ok == rp.ok && rs.lines == rp.lines);
    }

    return 0;
}
