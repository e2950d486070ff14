// Compares the serial and the OpenMP oracle grid scan on the same boxes and
// checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <numbers>

#include "arcfit/oracle.hpp"

using namespace arcfit;

namespace {

double time_scan(const CircularArc& arc, const CaseId& id, int grid_n,
                 ScanMode mode, OracleReport* out) {
    const SearchBox box = default_search_box(arc, id);
    const auto start = std::chrono::steady_clock::now();
    *out = oracle_minimax(arc, id, box, grid_n, mode);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

int main() {
    const double phi = std::numbers::pi / 3;
    const CircularArc arc(phi);
    struct Job {
        CaseId id;
        int grid_n;
    };
    const Job jobs[] = {
        {CaseId{3, 1, Side::inner}, 20000},
        {CaseId{4, 2, Side::outer}, 20000},
        {CaseId{3, 0, Side::inner}, 192},
        {CaseId{4, 1, Side::outer}, 192},
    };

    std::printf("%-14s %10s %12s %12s %9s  %s\n", "case", "grid", "serial[s]",
                "parallel[s]", "speedup", "identical");
    bool all_identical = true;
    for (const Job& job : jobs) {
        OracleReport serial{job.id}, parallel{job.id};
        const double ts = time_scan(arc, job.id, job.grid_n, ScanMode::serial, &serial);
        const double tp = time_scan(arc, job.id, job.grid_n, ScanMode::parallel, &parallel);
        const bool same =
            serial.best_error_found == parallel.best_error_found &&
            serial.feasible_found == parallel.feasible_found &&
            serial.best_params_found.has_value() ==
                parallel.best_params_found.has_value() &&
            (!serial.best_params_found ||
             serial.best_params_found->xi == parallel.best_params_found->xi);
        all_identical = all_identical && same;
        std::printf("%-14s %10d %12.4f %12.4f %8.2fx  %s\n",
                    (job.id.table_id() + " " + to_string(job.id.side)).c_str(),
                    job.grid_n, ts, tp, ts / tp, same ? "yes" : "NO");
    }
    if (!all_identical) {
        std::printf("determinism violation between scan modes\n");
        return 1;
    }
    return 0;
}
