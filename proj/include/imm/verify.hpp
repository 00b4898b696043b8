#pragma once

#include <string>
#include <vector>

#include "imm/cache.hpp"

namespace imm {

struct VerificationReport {
    std::string suite;
    long cases = 0;
    std::vector<std::string> failures; // each entry carries a minimal witness
    double wall_seconds = 0.0;

    bool passed() const { return failures.empty(); }
    std::string to_json() const;
};

/// Known-good reference tables: the 7x7 hook-shape Kostka values (rows are
/// hooks (i,1^{7-i}), columns are contents with k parts) and the 8x8
/// two-column values for n = 14 and n = 15 (rows/columns indexed by the
/// two-column shapes lam^0..lam^k).
extern const long kHookTable7[7][7];
extern const long kTwoColumnTable14[8][8];
extern const long kTwoColumnTable15[8][8];

/// Suites: tables, injections, maximality, hooks, two-column, intervals,
/// statistics, all. Throws std::invalid_argument for an unknown suite name.
VerificationReport run_verify(const std::string& suite, int max_n, TableCache& cache);

VerificationReport verify_tables(TableCache& cache);
VerificationReport verify_injections(int max_n);
VerificationReport verify_maximality(int max_n);
VerificationReport verify_hooks(int max_n, TableCache& cache);
VerificationReport verify_two_column(int max_n, TableCache& cache);
VerificationReport verify_intervals(int min_n, int max_n);
VerificationReport verify_statistics(int max_n);

} // namespace imm
