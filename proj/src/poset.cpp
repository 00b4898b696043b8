#include "imm/poset.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <sstream>
#include <stdexcept>

#include "imm/errors.hpp"

namespace imm {

std::string poset_kind_name(PosetKind k) {
    switch (k) {
        case PosetKind::dominance: return "dominance";
        case PosetKind::standard_immersion: return "standard";
        case PosetKind::immersion: return "immersion";
    }
    return "?";
}

PosetKind parse_poset_kind(const std::string& name) {
    if (name == "dominance") return PosetKind::dominance;
    if (name == "standard" || name == "standard-immersion") return PosetKind::standard_immersion;
    if (name == "immersion") return PosetKind::immersion;
    throw std::invalid_argument("unknown order: " + name);
}

bool immersion_leq(const Partition& a, const Partition& b, const KostkaTable& kt) {
    if (a.n() != kt.n || b.n() != kt.n)
        throw std::invalid_argument("partitions do not match the table size");
    int ia = kt.universe.index(a), ib = kt.universe.index(b);
    for (int j = 0; j < kt.universe.size(); j++)
        if (kt.values[ia][j] > kt.values[ib][j]) return false;
    return true;
}

bool standard_leq(const Partition& a, const Partition& b) {
    return dominance_leq(a, b) && syt_count(a) <= syt_count(b);
}

PosetRelation build_poset(const KostkaTable& kt, PosetKind kind) {
    PosetRelation r;
    r.kind = kind;
    r.universe = kt.universe;
    int m = r.universe.size();
    r.leq.assign(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) {
            switch (kind) {
                case PosetKind::dominance:
                    r.leq[i][j] = dominance_leq(r.universe[i], r.universe[j]);
                    break;
                case PosetKind::standard_immersion:
                    r.leq[i][j] = standard_leq(r.universe[i], r.universe[j]);
                    break;
                case PosetKind::immersion:
                    r.leq[i][j] = immersion_leq(r.universe[i], r.universe[j], kt);
                    break;
            }
        }
    return r;
}

PosetRelation build_poset(int n, PosetKind kind, int max_n) {
    if (n > max_n)
        throw resource_limit_error("poset construction limited to n <= " + std::to_string(max_n));
    if (kind == PosetKind::immersion) return build_poset(kostka_table(n, max_n), kind);
    PosetRelation r;
    r.kind = kind;
    r.universe = PartitionUniverse(n);
    int m = r.universe.size();
    r.leq.assign(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++)
            r.leq[i][j] = kind == PosetKind::dominance
                              ? dominance_leq(r.universe[i], r.universe[j])
                              : standard_leq(r.universe[i], r.universe[j]);
    return r;
}

PosetRelation covers(const PosetRelation& r) {
    int m = r.universe.size();
    PosetRelation c;
    c.kind = r.kind;
    c.universe = r.universe;
    c.leq.assign(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) {
            if (i == j || !r.leq[i][j]) continue;
            bool cover = true;
            for (int k = 0; k < m && cover; k++)
                if (k != i && k != j && r.leq[i][k] && r.leq[k][j]) cover = false;
            c.leq[i][j] = cover;
        }
    return c;
}

PosetRelation dominance_covers(const PartitionUniverse& u) {
    PosetRelation r;
    r.kind = PosetKind::dominance;
    r.universe = u;
    int m = u.size();
    r.leq.assign(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) r.leq[i][j] = dominance_leq(u[i], u[j]);
    return covers(r);
}

std::vector<Partition> maximal_elements(const PosetRelation& r) {
    std::vector<Partition> out;
    int m = r.universe.size();
    for (int i = 0; i < m; i++) {
        bool maximal = true;
        for (int j = 0; j < m && maximal; j++)
            if (j != i && r.leq[i][j]) maximal = false;
        if (maximal) out.push_back(r.universe[i]);
    }
    return out;
}

int rank(const PosetRelation& r) {
    int m = r.universe.size();
    std::vector<int> memo(m, -1);
    auto height = [&](auto&& self, int i) -> int {
        if (memo[i] >= 0) return memo[i];
        memo[i] = 0;
        int best = 0;
        for (int j = 0; j < m; j++)
            if (j != i && r.leq[i][j]) best = std::max(best, 1 + self(self, j));
        return memo[i] = best;
    };
    int best = 0;
    for (int i = 0; i < m; i++) best = std::max(best, height(height, i));
    return best;
}

Interval lower_interval(const PosetRelation& r, const Partition& top) {
    Interval iv;
    iv.top = top;
    int it = r.universe.index(top);
    for (int i = 0; i < r.universe.size(); i++)
        if (r.leq[i][it]) iv.members.push_back(r.universe[i]);
    return iv;
}

std::optional<bool> std_maximal_closed_form(const Partition& lam) {
    int len = lam.length();
    if (len >= 2 && lam.part(0) == lam.part(1)) return false;
    if (len == 1) return true;
    long a, b;
    if (len == 2) { // (a+b, a)
        a = lam.part(1);
        b = lam.part(0) - lam.part(1);
        return b * (b + 3) / 2 >= a;
    }
    // hooks (a, 1^b) with a > 2
    if (lam.part(1) == 1 && lam.part(0) > 2) return len - 1 <= 2;
    if (len == 3 && lam.part(2) == 1 && lam.part(1) >= 2) { // (a+b, a, 1), a >= 2
        a = lam.part(1);
        b = lam.part(0) - lam.part(1);
        return a <= (b + 1) * (b + 2) / 2;
    }
    if (len == 3 && lam.part(2) == 2 && lam.part(1) >= 3) { // (a+b, a, 2), a >= 3
        a = lam.part(1);
        b = lam.part(0) - lam.part(1);
        return a <= (b + 1) * (b + 2) / 2;
    }
    return std::nullopt;
}

std::optional<bool> conjecture_staircase_maximal(const Partition& lam) {
    int len = lam.length();
    if (len <= 2) return std::nullopt;
    for (int i = 1; i < len; i++)
        if (lam.part(i) >= lam.part(i - 1)) return std::nullopt;
    // lam_i = a_1 + ... + a_{len-i+1} with all a_t >= 1; the inequality for
    // index j reads binom(a_j + 2, 2) >= lam_{len-j+2} + j - 2.
    for (int j = 2; j <= len; j++) {
        long aj = lam.part(len - j) - lam.part(len - j + 1);
        long prev = lam.part(len - j + 1); // a_1 + ... + a_{j-1}
        if ((aj + 2) * (aj + 1) / 2 < prev + j - 2) return false;
    }
    return true;
}

namespace {

std::string relation_witness(const Partition& a, const Partition& b, bool closed, bool brute) {
    std::ostringstream os;
    os << a.str() << " <= " << b.str() << ": closed form says " << (closed ? "yes" : "no")
       << ", Kostka comparison says " << (brute ? "yes" : "no");
    return os.str();
}

void fill_cover_pairs(SubposetReport& rep) {
    int m = static_cast<int>(rep.members.size());
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) {
            if (i == j || !rep.leq[i][j]) continue;
            bool cover = true;
            for (int k = 0; k < m && cover; k++)
                if (k != i && k != j && rep.leq[i][k] && rep.leq[k][j]) cover = false;
            if (cover) rep.cover_pairs.emplace_back(i, j);
        }
}

} // namespace

SubposetReport hook_subposet(int n, const KostkaTable& kt) {
    if (kt.n != n) throw std::invalid_argument("table size mismatch");
    SubposetReport rep;
    std::vector<mpz_class> last(n + 1); // last[i] = T_{i,n} = binom(n-1, n-i)
    for (int i = 1; i <= n; i++) {
        rep.members.push_back(Partition::hook(i, n - i)); // canonical order: i = n..1
        last[i] = hook_kostka_closed_form(i, n, n);
    }
    std::reverse(rep.members.begin(), rep.members.end());
    int m = n;
    // members[s] is the hook with i = n - s.
    rep.leq.assign(m, std::vector<bool>(m, false));
    for (int si = 0; si < m; si++)
        for (int sj = 0; sj < m; sj++) {
            int i = n - si, j = n - sj; // lam^i = members[si]
            rep.leq[si][sj] = (i == j) || (i < j && last[i] <= last[j]);
        }
    // Cross-check against the full Kostka comparison.
    for (int si = 0; si < m; si++)
        for (int sj = 0; sj < m; sj++) {
            bool brute = immersion_leq(rep.members[si], rep.members[sj], kt);
            if (brute != rep.leq[si][sj])
                rep.violations.push_back(
                    relation_witness(rep.members[si], rep.members[sj], rep.leq[si][sj], brute));
        }
    // The structural relation list, by parity.
    auto geq = [&](int i, int j) { // lam^i >=_I lam^j in the closed form
        return rep.leq[n - j][n - i];
    };
    int k = n / 2;
    bool odd = n % 2 == 1;
    auto note = [&](bool ok, const std::string& what) {
        if (!ok) rep.violations.push_back("structure: " + what);
    };
    for (int l = 1; l <= (odd ? k : k - 1); l++)
        note(geq(l + 1, l), "lam^" + std::to_string(l + 1) + " >= lam^" + std::to_string(l));
    if (odd) {
        for (int l = 1; l <= k; l++) {
            note(conjugate(Partition::hook(k + 1 - l, n - (k + 1 - l))) ==
                     Partition::hook(k + 1 + l, n - (k + 1 + l)),
                 "transpose pairing at l=" + std::to_string(l));
            note(geq(k + 1 + l, k + 1 - l),
                 "lam^" + std::to_string(k + 1 + l) + " >= lam^" + std::to_string(k + 1 - l));
        }
        for (int i = 2; i <= k + 1; i++)
            for (int j = n - i + 2; j <= n; j++)
                note(!geq(i, j) && !geq(j, i) && i != j,
                     "incomparability lam^" + std::to_string(i) + " / lam^" + std::to_string(j));
        for (int i = k + 2; i < n; i++)
            for (int j = i + 1; j <= n; j++)
                note(!geq(i, j) && !geq(j, i),
                     "incomparability lam^" + std::to_string(i) + " / lam^" + std::to_string(j));
    } else {
        for (int l = 0; l <= k - 1; l++) {
            note(conjugate(Partition::hook(k - l, n - (k - l))) ==
                     Partition::hook(k + 1 + l, n - (k + 1 + l)),
                 "transpose pairing at l=" + std::to_string(l));
            note(geq(k + 1 + l, k - l),
                 "lam^" + std::to_string(k + 1 + l) + " >= lam^" + std::to_string(k - l));
        }
        for (int i = 2; i <= k; i++)
            for (int j = n - i + 2; j <= n; j++)
                note(!geq(i, j) && !geq(j, i),
                     "incomparability lam^" + std::to_string(i) + " / lam^" + std::to_string(j));
        for (int i = k + 1; i < n; i++)
            for (int j = i + 1; j <= n; j++)
                note(!geq(i, j) && !geq(j, i),
                     "incomparability lam^" + std::to_string(i) + " / lam^" + std::to_string(j));
    }
    fill_cover_pairs(rep);
    return rep;
}

SubposetReport two_column_subposet(int n, const KostkaTable& kt) {
    if (kt.n != n) throw std::invalid_argument("table size mismatch");
    SubposetReport rep;
    int k = n / 2;
    std::vector<mpz_class> last(k + 1);
    for (int i = 0; i <= k; i++) {
        rep.members.push_back(two_column_shape(i, n)); // canonical order: i = 0..k
        last[i] = two_column_kostka_closed_form(i, k, n);
    }
    int m = k + 1;
    rep.leq.assign(m, std::vector<bool>(m, false));
    // members[i] = lam^i; lam^j <=_I lam^i iff i < j and T_{i,k} >= T_{j,k}.
    for (int i = 0; i <= k; i++)
        for (int j = 0; j <= k; j++)
            rep.leq[j][i] = (i == j) || (i < j && last[i] >= last[j]);
    for (int i = 0; i <= k; i++)
        for (int j = 0; j <= k; j++) {
            bool brute = immersion_leq(rep.members[i], rep.members[j], kt);
            if (brute != rep.leq[i][j])
                rep.violations.push_back(
                    relation_witness(rep.members[i], rep.members[j], rep.leq[i][j], brute));
        }
    fill_cover_pairs(rep);
    auto note = [&](bool ok, const std::string& what) {
        if (!ok) rep.violations.push_back("structure: " + what);
    };
    auto is_cover = [&](int lower, int upper) {
        return std::find(rep.cover_pairs.begin(), rep.cover_pairs.end(),
                         std::make_pair(lower, upper)) != rep.cover_pairs.end();
    };
    bool even = n % 2 == 0;
    auto chain_rule = [&](long i) {
        return even ? 2 * i * i + 4 * i + 2 > k : 2 * i * i + 6 * i + 4 > k;
    };
    int i_max = -1;
    for (int i = 0; i < k; i++) {
        if (chain_rule(i))
            note(is_cover(i + 1, i),
                 "cover lam^" + std::to_string(i + 1) + " < lam^" + std::to_string(i));
        else
            i_max = i;
    }
    for (int i = 0; i <= i_max; i++)
        for (int j = 0; j <= i_max; j++)
            if (i != j)
                note(!rep.leq[i][j],
                     "incomparability lam^" + std::to_string(i) + " / lam^" + std::to_string(j));
    // Smallest-m cover rule below the column maximum.
    for (int i = 0; i <= i_max; i++)
        for (int mstep = i_max - i + 1; i + mstep <= k; mstep++)
            if (last[i] >= last[i + mstep]) {
                note(is_cover(i + mstep, i), "cover lam^" + std::to_string(i + mstep) + " < lam^" +
                                                 std::to_string(i) + " (smallest m)");
                break;
            }
    return rep;
}

mpq_class estimate_comparability_probability(const KostkaTable& kt, long samples,
                                             unsigned long seed) {
    if (samples <= 0) throw std::invalid_argument("sample count must be positive");
    int m = kt.universe.size();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++)
            if (i != j && dominance_leq(kt.universe[i], kt.universe[j])) pairs.emplace_back(i, j);
    if (pairs.empty()) throw std::invalid_argument("no strictly dominance-comparable pairs");

    auto comparable = [&](const std::pair<int, int>& p) {
        return immersion_leq(kt.universe[p.first], kt.universe[p.second], kt);
    };
    long hits = 0;
    if (static_cast<long>(pairs.size()) <= samples) {
        for (const auto& p : pairs)
            if (comparable(p)) hits++;
        mpq_class q(hits, pairs.size());
        q.canonicalize();
        return q;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, pairs.size() - 1);
    for (long s = 0; s < samples; s++)
        if (comparable(pairs[pick(rng)])) hits++;
    mpq_class q(hits, samples);
    q.canonicalize();
    return q;
}

} // namespace imm
