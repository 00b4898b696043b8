#include "imm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "imm/injections.hpp"
#include "imm/poset.hpp"
#include "imm/symfunc.hpp"

namespace imm {

using nlohmann::json;

std::string VerificationReport::to_json() const {
    json j{{"suite", suite},
           {"cases", cases},
           {"failures", failures},
           {"passed", passed()},
           {"wall_seconds", wall_seconds}};
    return j.dump(2);
}

// Hook-shape Kostka values for n=7: rows i=1..7 for shapes (i,1^{7-i}),
// columns k=1..7 for contents with k parts.
const long kHookTable7[7][7] = {
    {1, 1, 1, 1, 1, 1, 1},     // (7)
    {0, 1, 2, 3, 4, 5, 6},     // (6,1)
    {0, 0, 1, 3, 6, 10, 15},   // (5,1,1)
    {0, 0, 0, 1, 4, 10, 20},   // (4,1^3)
    {0, 0, 0, 0, 1, 5, 15},    // (3,1^4)
    {0, 0, 0, 0, 0, 1, 6},     // (2,1^5)
    {0, 0, 0, 0, 0, 0, 1},     // (1^7)
};

// Two-column Kostka values T[i][j] = K_{lam^i, lam^j} for n=14 and n=15,
// 0 <= i, j <= 7.
const long kTwoColumnTable14[8][8] = {
    {1, 1, 2, 5, 14, 42, 132, 429},
    {0, 1, 3, 9, 28, 90, 297, 1001},
    {0, 0, 1, 5, 20, 75, 275, 1001},
    {0, 0, 0, 1, 7, 35, 154, 637},
    {0, 0, 0, 0, 1, 9, 54, 273},
    {0, 0, 0, 0, 0, 1, 11, 77},
    {0, 0, 0, 0, 0, 0, 1, 13},
    {0, 0, 0, 0, 0, 0, 0, 1},
};
const long kTwoColumnTable15[8][8] = {
    {1, 2, 5, 14, 42, 132, 429, 1430},
    {0, 1, 4, 14, 48, 165, 572, 2002},
    {0, 0, 1, 6, 27, 110, 429, 1638},
    {0, 0, 0, 1, 8, 44, 208, 910},
    {0, 0, 0, 0, 1, 10, 65, 350},
    {0, 0, 0, 0, 0, 1, 12, 90},
    {0, 0, 0, 0, 0, 0, 1, 14},
    {0, 0, 0, 0, 0, 0, 0, 1},
};

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void fail(VerificationReport& rep, const std::string& witness) {
    rep.failures.push_back(witness);
}

// Brute-force maximality: lam is maximal iff no distinct mu lies above it.
std::set<Partition> brute_maximal(const PosetRelation& r) {
    auto v = maximal_elements(r);
    return {v.begin(), v.end()};
}

} // namespace

VerificationReport verify_tables(TableCache& /*cache*/) {
    VerificationReport rep;
    rep.suite = "tables";
    Timer timer;
    {
        KostkaMemo memo;
        for (int i = 1; i <= 7; i++)
            for (int k = 1; k <= 7; k++) {
                rep.cases++;
                // A canonical content with k parts: (8-k, 1^{k-1}).
                Partition content = Partition::hook(8 - k, k - 1);
                mpz_class direct = memo.kostka(Partition::hook(i, 7 - i), content);
                long expect = kHookTable7[7 - i][k - 1];
                if (direct != expect)
                    fail(rep, "n=7 hook (" + std::to_string(i) + "," + std::to_string(k) +
                                  "): kostka gives " + direct.get_str() + ", table says " +
                                  std::to_string(expect));
                if (hook_kostka_closed_form(i, k, 7) != expect)
                    fail(rep, "n=7 hook closed form mismatch at (" + std::to_string(i) + "," +
                                  std::to_string(k) + ")");
            }
    }
    for (int n : {14, 15}) {
        KostkaMemo memo;
        for (int i = 0; i <= 7; i++)
            for (int j = 0; j <= 7; j++) {
                rep.cases++;
                mpz_class direct = memo.kostka(two_column_shape(i, n), two_column_shape(j, n));
                long expect = n == 14 ? kTwoColumnTable14[i][j] : kTwoColumnTable15[i][j];
                if (direct != expect)
                    fail(rep, "n=" + std::to_string(n) + " two-column (" + std::to_string(i) +
                                  "," + std::to_string(j) + "): kostka gives " + direct.get_str() +
                                  ", table says " + std::to_string(expect));
                if (two_column_kostka_closed_form(i, j, n) != expect)
                    fail(rep, "n=" + std::to_string(n) + " two-column closed form mismatch at (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }
    rep.wall_seconds = timer.seconds();
    return rep;
}

VerificationReport verify_injections(int max_n) {
    VerificationReport rep;
    rep.suite = "injections";
    Timer timer;

    auto run_map = [&](const TwoColumnContext& ctx, int which) {
        // which: 0 = phi0/psi0, 1 = phi1/psi1, 2 = phi2 (no inverse).
        int n = ctx.lambda.n();
        for (const Partition& nu : PartitionUniverse(n).items()) {
            auto domain = enumerate_ssyt(ctx.lambda, nu);
            std::set<std::vector<std::vector<int>>> image;
            for (const Tableau& t : domain) {
                rep.cases++;
                Tableau out = which == 0   ? phi0(ctx, t)
                              : which == 1 ? phi1(ctx, t)
                                           : phi2(ctx, t);
                if (out.shape != ctx.mu || !out.is_semistandard() || out.content() != t.content()) {
                    fail(rep, "phi" + std::to_string(which) + " broke invariants on " + t.str() +
                                  " for shape " + ctx.lambda.str());
                    continue;
                }
                image.insert(out.rows);
                if (which == 0) {
                    if (psi0(ctx, out) != t)
                        fail(rep, "psi0 round trip failed on " + t.str());
                } else if (which == 1) {
                    if (psi1(ctx, out) != t)
                        fail(rep, "psi1 round trip failed on " + t.str());
                }
            }
            if (image.size() != domain.size())
                fail(rep, "phi" + std::to_string(which) + " not injective on shape " +
                              ctx.lambda.str() + " content " + nu.str());
        }
    };

    for (int n = 2; n <= std::min(max_n, 10); n++)
        for (const Partition& lam : PartitionUniverse(n).items())
            for (const TwoColumnContext& ctx : all_two_column_contexts(lam)) {
                if (ctx.beta >= ctx.alpha + 2) run_map(ctx, 0);
                if (ctx.beta == ctx.alpha + 1 && ctx.alpha >= 2) run_map(ctx, 1);
            }
    // phi2 over its two-column family at desk scale: (2^a, 1^a), a >= 4.
    for (int a = 4; 3 * a <= std::min(max_n, 12); a++) {
        std::vector<int> parts(a, 2);
        parts.insert(parts.end(), a, 1);
        Partition lam(std::move(parts));
        run_map(make_two_column_context(lam, 1), 2);
    }

    // Box-move injectivity: shapes starting with a repeated part.
    for (int n = 4; n <= std::min(max_n, 10); n++)
        for (const Partition& lam : PartitionUniverse(n).items()) {
            if (lam.length() < 2 || lam.part(0) != lam.part(1)) continue;
            for (const Partition& nu : PartitionUniverse(n).items()) {
                auto domain = enumerate_ssyt(lam, nu);
                std::set<std::vector<std::vector<int>>> image;
                for (const Tableau& t : domain) {
                    rep.cases++;
                    Tableau out = move_box_injection(lam, t);
                    if (!out.is_semistandard() || out.content() != t.content())
                        fail(rep, "box move broke invariants on " + t.str());
                    image.insert(out.rows);
                }
                if (image.size() != domain.size())
                    fail(rep, "box move not injective on " + lam.str() + " / " + nu.str());
            }
        }
    rep.wall_seconds = timer.seconds();
    return rep;
}

VerificationReport verify_maximality(int max_n) {
    VerificationReport rep;
    rep.suite = "maximality";
    Timer timer;
    for (int n = 1; n <= std::min(max_n, 14); n++) {
        PosetRelation std_poset = build_poset(n, PosetKind::standard_immersion);
        std::set<Partition> maximal = brute_maximal(std_poset);
        for (const Partition& lam : std_poset.universe.items()) {
            auto verdict = std_maximal_closed_form(lam);
            if (!verdict) continue;
            rep.cases++;
            if (*verdict != (maximal.count(lam) > 0))
                fail(rep, "closed-form maximality disagrees with brute force at " + lam.str());
        }
        // Staircase predicate true implies maximal.
        for (const Partition& lam : std_poset.universe.items()) {
            auto verdict = conjecture_staircase_maximal(lam);
            if (!verdict) continue;
            rep.cases++;
            if (*verdict && maximal.count(lam) == 0)
                fail(rep, "staircase predicate true but " + lam.str() + " is not maximal");
        }
        // Standard-poset maximal elements stay maximal in the immersion poset.
        PosetRelation imm = build_poset(n, PosetKind::immersion);
        std::set<Partition> imm_maximal = brute_maximal(imm);
        for (const Partition& lam : maximal) {
            rep.cases++;
            if (imm_maximal.count(lam) == 0)
                fail(rep, lam.str() + " maximal in standard but not immersion poset");
        }
    }
    rep.wall_seconds = timer.seconds();
    return rep;
}

VerificationReport verify_hooks(int max_n, TableCache& cache) {
    VerificationReport rep;
    rep.suite = "hooks";
    Timer timer;
    for (int n = 4; n <= std::min(max_n, 16); n++) {
        KostkaTable kt = cache.kostka(n);
        SubposetReport sub = hook_subposet(n, kt);
        rep.cases += static_cast<long>(sub.members.size()) * sub.members.size();
        for (const std::string& v : sub.violations)
            fail(rep, "n=" + std::to_string(n) + ": " + v);
        // lam <=_D lam^t implies lam <=_I lam^t for hooks.
        for (const Partition& lam : sub.members) {
            Partition t = conjugate(lam);
            if (dominance_leq(lam, t)) {
                rep.cases++;
                if (!immersion_leq(lam, t, kt))
                    fail(rep, "hook " + lam.str() + " is dominated by its transpose but not below it");
            }
        }
    }
    for (int n = 2; n <= std::min(max_n, 14); n++) {
        rep.cases++;
        PosetRelation imm = build_poset(cache.kostka(n), PosetKind::immersion);
        if (rank(imm) < n / 2)
            fail(rep, "immersion poset rank below n/2 at n=" + std::to_string(n));
    }
    rep.wall_seconds = timer.seconds();
    return rep;
}

VerificationReport verify_two_column(int max_n, TableCache& cache) {
    VerificationReport rep;
    rep.suite = "two-column";
    Timer timer;
    for (int n = 4; n <= std::min(max_n, 16); n++) {
        KostkaTable kt = cache.kostka(n);
        SubposetReport sub = two_column_subposet(n, kt);
        rep.cases += static_cast<long>(sub.members.size()) * sub.members.size();
        for (const std::string& v : sub.violations)
            fail(rep, "n=" + std::to_string(n) + ": " + v);
        // Two-column covers in the subposet are covers in the full poset.
        if (n <= 12) {
            PosetRelation full = covers(build_poset(kt, PosetKind::immersion));
            for (auto [lo, hi] : sub.cover_pairs) {
                rep.cases++;
                if (!full.less_eq(sub.members[lo], sub.members[hi]))
                    fail(rep, "n=" + std::to_string(n) + ": subposet cover " +
                                  sub.members[lo].str() + " < " + sub.members[hi].str() +
                                  " is not a cover in the full poset");
            }
        }
    }
    rep.wall_seconds = timer.seconds();
    return rep;
}

VerificationReport verify_intervals(int min_n, int max_n) {
    VerificationReport rep;
    rep.suite = "intervals";
    Timer timer;
    for (int n = std::max(5, min_n); n <= max_n; n++)
        for (const IntervalConjectureCheck& c : verify_interval_conjectures(n)) {
            rep.cases++;
            if (!c.passed)
                fail(rep, "n=" + std::to_string(n) + ": " + c.name +
                              (c.detail.empty() ? "" : " (" + c.detail + ")"));
        }
    rep.wall_seconds = timer.seconds();
    return rep;
}

VerificationReport verify_statistics(int max_n) {
    VerificationReport rep;
    rep.suite = "statistics";
    Timer timer;
    // Exact fractions for 6 <= n <= 11, frozen from an exhaustive run over all
    // lower intervals. Rounds to 91%+ at n in {6,8,9} and 81%+ at n in {10,11};
    // n = 7 is the one small size that dips to 80% (tops (6,1), (5,2), (4,3)).
    static const std::map<int, mpq_class> kFraction = {
        {6, mpq_class(10, 11)}, {7, mpq_class(4, 5)},   {8, mpq_class(10, 11)},
        {9, mpq_class(14, 15)}, {10, mpq_class(17, 21)}, {11, mpq_class(23, 28)},
    };
    for (int n = 6; n <= std::min(max_n, 11); n++) {
        rep.cases++;
        PosetRelation imm = build_poset(n, PosetKind::immersion);
        mpq_class frac = schur_positive_interval_fraction(n, imm);
        mpq_class want = kFraction.at(n);
        if (frac != want)
            fail(rep, "Schur-positive interval fraction " + frac.get_str() + " != " +
                          want.get_str() + " at n=" + std::to_string(n));
    }
    rep.wall_seconds = timer.seconds();
    return rep;
}

VerificationReport run_verify(const std::string& suite, int max_n, TableCache& cache) {
    if (suite == "tables") return verify_tables(cache);
    if (suite == "injections") return verify_injections(max_n);
    if (suite == "maximality") return verify_maximality(max_n);
    if (suite == "hooks") return verify_hooks(max_n, cache);
    if (suite == "two-column") return verify_two_column(max_n, cache);
    if (suite == "intervals") return verify_intervals(5, std::min(max_n, 14));
    if (suite == "statistics") return verify_statistics(max_n);
    if (suite == "all") {
        VerificationReport all;
        all.suite = "all";
        Timer timer;
        for (const char* s : {"tables", "injections", "maximality", "hooks", "two-column",
                              "intervals", "statistics"}) {
            VerificationReport r = run_verify(s, max_n, cache);
            all.cases += r.cases;
            for (const std::string& f : r.failures) all.failures.push_back(r.suite + ": " + f);
        }
        all.wall_seconds = timer.seconds();
        return all;
    }
    throw std::invalid_argument("unknown suite: " + suite);
}

} // namespace imm
