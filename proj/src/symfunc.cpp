#include "imm/symfunc.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "imm/errors.hpp"
#include "imm/tableau.hpp"

namespace imm {

namespace {

// All ways to remove a border strip of s cells from lam, as (new shape,
// height) pairs. The strip spanning rows r..t leaves lam'_i = lam_{i+1} - 1
// for r <= i < t and lam'_t = lam_r - s + (t - r); height = t - r.
std::vector<std::pair<Partition, int>> strip_removals(const Partition& lam, int s) {
    std::vector<std::pair<Partition, int>> out;
    int len = lam.length();
    for (int r = 0; r < len; r++)
        for (int t = r; t < len; t++) {
            int tail = lam.part(r) - s + (t - r);
            if (tail < lam.part(t + 1)) continue;
            if (t > r && tail > lam.part(t) - 1) continue;
            std::vector<int> parts;
            for (int i = 0; i < r; i++) parts.push_back(lam.part(i));
            for (int i = r; i < t; i++)
                if (lam.part(i + 1) - 1 > 0) parts.push_back(lam.part(i + 1) - 1);
            if (tail > 0) parts.push_back(tail);
            for (int i = t + 1; i < len; i++) parts.push_back(lam.part(i));
            out.emplace_back(Partition(std::move(parts)), t - r);
        }
    return out;
}

} // namespace

const mpz_class& CharacterMemo::character(const Partition& lam, const Partition& mu) {
    Key key{lam, mu};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    mpz_class v;
    if (mu.empty()) {
        v = lam.empty() ? 1 : 0;
    } else {
        std::vector<int> rest_parts(mu.parts().begin() + 1, mu.parts().end());
        Partition rest(std::move(rest_parts));
        v = 0;
        for (const auto& [inner, height] : strip_removals(lam, mu.part(0))) {
            const mpz_class& sub = character(inner, rest);
            if (height % 2 == 0) v += sub;
            else v -= sub;
        }
    }
    return memo_.emplace(std::move(key), std::move(v)).first->second;
}

mpz_class character(const Partition& lam, const Partition& mu) {
    if (lam.n() != mu.n())
        throw std::invalid_argument("shape and type sizes differ");
    CharacterMemo memo;
    return memo.character(lam, mu);
}

int RibbonTableau::total_height() const {
    return std::accumulate(heights.begin(), heights.end(), 0);
}

std::vector<RibbonTableau> enumerate_ribbon_tableaux(const Partition& lam, const Partition& mu) {
    if (lam.n() != mu.n())
        throw std::invalid_argument("shape and type sizes differ");
    std::vector<RibbonTableau> out;
    int k = mu.length();
    std::vector<std::vector<std::pair<int, int>>> ribbons(k);
    std::vector<int> heights(k);

    // Strips are peeled largest index first: strip j must be a border strip
    // of whatever shape remains after strips j+1..k are removed.
    auto rec = [&](auto&& self, const Partition& shape, int j) -> void {
        if (j < 0) {
            assert(shape.empty());
            out.push_back(RibbonTableau{lam, mu, ribbons, heights});
            return;
        }
        for (const auto& [inner, height] : strip_removals(shape, mu.part(j))) {
            ribbons[j].clear();
            for (int r = 0; r < shape.length(); r++)
                for (int c = inner.part(r); c < shape.part(r); c++) ribbons[j].emplace_back(r, c);
            heights[j] = height;
            self(self, inner, j - 1);
        }
    };
    if (lam.empty() && k == 0)
        out.push_back(RibbonTableau{lam, mu, ribbons, heights});
    else if (k > 0)
        rec(rec, lam, k - 1);
    return out;
}

CharacterTable character_table(int n, int max_n) {
    if (n > max_n)
        throw resource_limit_error("character table limited to n <= " + std::to_string(max_n));
    CharacterTable ct;
    ct.n = n;
    ct.universe = PartitionUniverse(n);
    int m = ct.universe.size();
    ct.values.assign(m, std::vector<mpz_class>(m));
    CharacterMemo memo;
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++)
            ct.values[i][j] = memo.character(ct.universe[i], ct.universe[j]);
    return ct;
}

mpz_class z_of(const Partition& mu) {
    mpz_class z = 1;
    int i = 0;
    while (i < mu.length()) {
        int v = mu.part(i), mult = 0;
        while (i < mu.length() && mu.part(i) == v) { i++; mult++; }
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), mult);
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), v, mult);
        z *= f * p;
    }
    return z;
}

SchurExpansion power_sum_in_schur(const Partition& mu) {
    SchurExpansion e;
    e.n = mu.n();
    CharacterMemo memo;
    for (const Partition& lam : PartitionUniverse(mu.n()).items()) {
        mpz_class c = memo.character(lam, mu);
        if (c != 0) e.coeffs.emplace(lam, std::move(c));
    }
    return e;
}

SchurExpansion power_sum_in_schur(const Partition& mu, const CharacterTable& ct) {
    SchurExpansion e;
    e.n = mu.n();
    int j = ct.universe.index(mu);
    for (int i = 0; i < ct.universe.size(); i++)
        if (ct.values[i][j] != 0) e.coeffs.emplace(ct.universe[i], ct.values[i][j]);
    return e;
}

static SchurExpansion sum_expansions(const std::vector<SchurExpansion>& parts, int n) {
    SchurExpansion e;
    e.n = n;
    for (const SchurExpansion& p : parts)
        for (const auto& [lam, c] : p.coeffs) {
            auto& slot = e.coeffs[lam];
            slot += c;
            if (slot == 0) e.coeffs.erase(lam);
        }
    return e;
}

static void check_interval_members(const std::vector<Partition>& a_set) {
    if (a_set.empty()) throw std::invalid_argument("empty interval");
    for (size_t i = 0; i < a_set.size(); i++) {
        if (a_set[i].n() != a_set[0].n())
            throw std::invalid_argument("interval members have mixed sizes");
        for (size_t j = i + 1; j < a_set.size(); j++)
            if (a_set[i] == a_set[j])
                throw std::invalid_argument("duplicate interval member " + a_set[i].str());
    }
}

SchurExpansion interval_power_sum(const std::vector<Partition>& a_set) {
    check_interval_members(a_set);
    std::vector<SchurExpansion> parts;
    for (const Partition& mu : a_set) parts.push_back(power_sum_in_schur(mu));
    return sum_expansions(parts, a_set[0].n());
}

SchurExpansion interval_power_sum(const std::vector<Partition>& a_set, const CharacterTable& ct) {
    check_interval_members(a_set);
    std::vector<SchurExpansion> parts;
    for (const Partition& mu : a_set) parts.push_back(power_sum_in_schur(mu, ct));
    return sum_expansions(parts, a_set[0].n());
}

std::pair<bool, std::optional<Partition>> is_schur_positive(const SchurExpansion& e) {
    for (const auto& [lam, c] : e.coeffs)
        if (c < 0) return {false, lam};
    return {true, std::nullopt};
}

mpq_class schur_positive_interval_fraction(int n, const PosetRelation& r,
                                           const CharacterTable& ct) {
    if (r.kind != PosetKind::immersion)
        throw std::invalid_argument("fraction is defined over the immersion poset");
    if (r.universe.n() != n || ct.n != n) throw std::invalid_argument("size mismatch");
    long positive = 0;
    for (const Partition& mu : r.universe.items()) {
        Interval iv = lower_interval(r, mu);
        if (is_schur_positive(interval_power_sum(iv.members, ct)).first) positive++;
    }
    mpq_class q(positive, r.universe.size());
    q.canonicalize();
    return q;
}

mpq_class schur_positive_interval_fraction(int n, const PosetRelation& r) {
    return schur_positive_interval_fraction(n, r, character_table(n));
}

std::vector<IntervalConjectureCheck> verify_interval_conjectures(int n) {
    if (n < 5) throw std::invalid_argument("needs n >= 5");
    std::vector<IntervalConjectureCheck> out;
    KostkaTable kt = kostka_table(n);
    PosetRelation poset = build_poset(kt, PosetKind::immersion);
    CharacterTable ct = character_table(n);

    auto chain_check = [&](const std::string& name, const Partition& top,
                           std::vector<Partition> chain, bool applicable) {
        IntervalConjectureCheck c;
        c.name = name;
        c.applicable = applicable;
        if (applicable) {
            Interval iv = lower_interval(poset, top);
            std::sort(chain.begin(), chain.end());
            c.passed = iv.members == chain;
            if (!c.passed) {
                std::ostringstream os;
                os << "computed interval {";
                for (const Partition& p : iv.members) os << ' ' << p.str();
                os << " } differs from the conjectured chain";
                c.detail = os.str();
            }
        } else {
            c.detail = "outside applicability window";
        }
        return c;
    };
    auto positivity_check = [&](const std::string& name, const std::vector<Partition>& members,
                                bool asserted) {
        IntervalConjectureCheck c;
        c.name = name;
        c.applicable = asserted;
        auto [pos, witness] = is_schur_positive(interval_power_sum(members, ct));
        if (asserted) {
            c.passed = pos;
            if (!pos) c.detail = "negative coefficient at " + witness->str();
        } else {
            c.detail = pos ? "positive anyway (not asserted)" : "not Schur-positive (as expected)";
        }
        return c;
    };

    Partition ones = Partition::rectangle(1, n);

    // A_{(n-2,2)}: the 4-chain, for n = 5 or n >= 9.
    {
        Partition top({n - 2, 2});
        std::vector<Partition> chain = {ones, Partition::hook(2, n - 2)};
        std::vector<int> v22{2, 2};
        for (int i = 0; i < n - 4; i++) v22.push_back(1);
        chain.push_back(Partition(v22));
        chain.push_back(top);
        bool window = n == 5 || n >= 9;
        out.push_back(chain_check("interval (n-2,2) chain", top, chain, window));
        out.push_back(positivity_check("power sum over computed interval of " + top.str(),
                                       lower_interval(poset, top).members, n != 7));
    }
    // A_{(n-2,1,1)}: the 5-chain, for n >= 9.
    {
        Partition top({n - 2, 1, 1});
        std::vector<Partition> chain = {ones, Partition::hook(2, n - 2), Partition::hook(3, n - 3)};
        std::vector<int> v22{2, 2};
        for (int i = 0; i < n - 4; i++) v22.push_back(1);
        chain.push_back(Partition(v22));
        chain.push_back(top);
        out.push_back(chain_check("interval (n-2,1,1) chain", top, chain, n >= 9));
        out.push_back(positivity_check("power sum over computed interval of " + top.str(),
                                       lower_interval(poset, top).members, true));
    }
    return out;
}

} // namespace imm
