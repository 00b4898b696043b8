#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "imm/partition.hpp"
#include "imm/poset.hpp"

namespace imm {

/// Memo shared by character() calls: keyed by (shape, remaining type), where
/// the type is consumed largest part first.
class CharacterMemo {
public:
    const mpz_class& character(const Partition& lam, const Partition& mu);

private:
    struct Key {
        Partition shape, type;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            PartitionHash h;
            return h(k.shape) * 0x9e3779b97f4a7c15ull ^ h(k.type);
        }
    };
    std::unordered_map<Key, mpz_class, KeyHash> memo_;
};

/// Symmetric group character chi^lam(mu) by border-strip removal.
mpz_class character(const Partition& lam, const Partition& mu);

/// A border-strip tiling of lam: strip i (0-based) has mu_{i+1} cells, strips
/// placed in type order; height = rows spanned - 1.
struct RibbonTableau {
    Partition shape;
    Partition type;
    std::vector<std::vector<std::pair<int, int>>> ribbons; // (row, col), 0-based
    std::vector<int> heights;
    int total_height() const;
};

/// All border-strip tilings of shape lam with strip sizes mu_1, mu_2, ...
/// The signed count sum (-1)^{ht} equals character(lam, mu).
std::vector<RibbonTableau> enumerate_ribbon_tableaux(const Partition& lam, const Partition& mu);

struct CharacterTable {
    int n = 0;
    PartitionUniverse universe{0};
    std::vector<std::vector<mpz_class>> values; // values[lam][mu]

    const mpz_class& at(const Partition& lam, const Partition& mu) const {
        return values[universe.index(lam)][universe.index(mu)];
    }
};

CharacterTable character_table(int n, int max_n = kMaxTableN);

/// Centralizer size z_mu = prod over part values i of i^{m_i} m_i!.
mpz_class z_of(const Partition& mu);

/// A symmetric function of degree n written in the Schur basis. Absent keys
/// are zero coefficients; stored keys are nonzero.
struct SchurExpansion {
    int n = 0;
    std::map<Partition, mpz_class> coeffs;

    mpz_class coeff(const Partition& lam) const {
        auto it = coeffs.find(lam);
        return it == coeffs.end() ? mpz_class(0) : it->second;
    }
};

/// p_mu = sum over lam of chi^lam(mu) s_lam.
SchurExpansion power_sum_in_schur(const Partition& mu);
SchurExpansion power_sum_in_schur(const Partition& mu, const CharacterTable& ct);

/// p_A = sum over mu in a_set of p_mu. Rejects duplicates and mixed sizes.
SchurExpansion interval_power_sum(const std::vector<Partition>& a_set);
SchurExpansion interval_power_sum(const std::vector<Partition>& a_set, const CharacterTable& ct);

/// True iff all coefficients are non-negative; otherwise the witness is the
/// canonically first partition with a negative coefficient.
std::pair<bool, std::optional<Partition>> is_schur_positive(const SchurExpansion& e);

/// Fraction of mu (over all partitions of n) whose lower-interval power sum
/// in the immersion poset r is Schur-positive. Exact rational.
mpq_class schur_positive_interval_fraction(int n, const PosetRelation& r);
mpq_class schur_positive_interval_fraction(int n, const PosetRelation& r,
                                           const CharacterTable& ct);

/// One checked claim about the conjectured lower intervals.
struct IntervalConjectureCheck {
    std::string name;
    bool applicable = false;
    bool passed = true;
    std::string detail;
};

/// Checks, for this n, that the computed lower intervals A_{(n-2,2)} and
/// A_{(n-2,1,1)} equal the conjectured chains (in their applicability
/// windows: n = 5 or n >= 9, resp. n >= 9) and that the interval power sums
/// are Schur-positive (skipping the (n-2,2) positivity claim at n = 7).
std::vector<IntervalConjectureCheck> verify_interval_conjectures(int n);

} // namespace imm
