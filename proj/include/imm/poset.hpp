#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "imm/partition.hpp"
#include "imm/tableau.hpp"

namespace imm {

enum class PosetKind { dominance, standard_immersion, immersion };

std::string poset_kind_name(PosetKind k);
PosetKind parse_poset_kind(const std::string& name);

/// A partial order on the canonical universe of partitions of n, stored as a
/// full relation matrix: leq[i][j] means items[i] <= items[j].
struct PosetRelation {
    PosetKind kind = PosetKind::dominance;
    PartitionUniverse universe{0};
    std::vector<std::vector<bool>> leq;

    bool less_eq(const Partition& a, const Partition& b) const {
        return leq[universe.index(a)][universe.index(b)];
    }
};

/// Lower interval: all lam with (1^n) <= lam <= top in the relation.
struct Interval {
    Partition top;
    std::vector<Partition> members; // canonical order
};

/// lam <= mu in the immersion order: K_{lam,alpha} <= K_{mu,alpha} for every
/// content alpha.
bool immersion_leq(const Partition& a, const Partition& b, const KostkaTable& kt);

/// lam <= mu in the standard immersion order: dominance plus f^lam <= f^mu.
bool standard_leq(const Partition& a, const Partition& b);

PosetRelation build_poset(int n, PosetKind kind, int max_n = kMaxTableN);
/// Same, but reusing an already built Kostka table (immersion only).
PosetRelation build_poset(const KostkaTable& kt, PosetKind kind);

/// Transitive reduction; the result's leq matrix holds only cover pairs.
PosetRelation covers(const PosetRelation& r);

/// The cover relation of dominance order on the universe.
PosetRelation dominance_covers(const PartitionUniverse& u);

std::vector<Partition> maximal_elements(const PosetRelation& r);

/// Longest chain, counted in edges: a one-element poset has rank 0.
int rank(const PosetRelation& r);

Interval lower_interval(const PosetRelation& r, const Partition& top);

/// Closed-form maximality in the standard immersion poset for the covered
/// shape families: (a+b,a); (a+b,a,1) with a >= 2; (a+b,a,2) with a >= 3;
/// hooks (a,1^b) with a > 2; and any lam with lam_1 = lam_2 (never maximal).
/// Returns nullopt for shapes outside these families.
std::optional<bool> std_maximal_closed_form(const Partition& lam);

/// Staircase predicate: for lam = (a_l + ... + a_1, a_{l-1} + ... + a_1, ...,
/// a_1) with strictly decreasing parts and l > 2, evaluates the inequality
/// family binom(a_j + 2, 2) >= a_1 + ... + a_{j-1} + j - 2 for 2 <= j <= l.
/// Returns nullopt when lam is not of this form.
std::optional<bool> conjecture_staircase_maximal(const Partition& lam);

/// Structured findings for the closed-form subposet checks; failures carry a
/// human-readable witness.
struct SubposetReport {
    std::vector<Partition> members;     // restricted universe, canonical order
    std::vector<std::vector<bool>> leq; // closed-form relation on members
    std::vector<std::pair<int, int>> cover_pairs; // (lower, upper) indices
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Immersion poset restricted to hooks (i,1^{n-i}), built from the binomial
/// criterion and cross-checked against the Kostka table.
SubposetReport hook_subposet(int n, const KostkaTable& kt);

/// Immersion poset restricted to two-column shapes, built from the
/// last-column criterion and cover inequalities, cross-checked against the
/// Kostka table.
SubposetReport two_column_subposet(int n, const KostkaTable& kt);

/// Fraction of uniformly sampled strictly dominance-comparable ordered pairs
/// (lam, mu) with lam <_D mu that also satisfy lam <=_I mu. Exhaustive when
/// the pair count is at most `samples`; otherwise samples with the given
/// seed. Deterministic.
mpq_class estimate_comparability_probability(const KostkaTable& kt, long samples,
                                             unsigned long seed);

} // namespace imm
