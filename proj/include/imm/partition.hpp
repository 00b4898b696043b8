#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace imm {

/// An integer partition: weakly decreasing positive parts. Immutable value
/// type; the empty partition is the unique partition of 0. Trailing zeros are
/// never stored.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition rectangle(int part, int count);
    /// Hook (a, 1^b).
    static Partition hook(int a, int b);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// parts()[i] for 0-based i, 0 past the end.
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    bool operator==(const Partition& o) const = default;
    /// Canonical total order: descending lexicographic on parts, so for fixed
    /// n the order runs (n) first down to (1^n) last.
    std::strong_ordering operator<=>(const Partition& o) const;

    /// Text form "[4,2,1]"; "[]" for the empty partition.
    std::string str() const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Parses "[4,2,1]" or exponent shorthand "[2^3,1^2]"; whitespace tolerated.
Partition parse_partition(const std::string& text);

struct PartitionHash {
    size_t operator()(const Partition& p) const;
};

/// All partitions of a fixed n in canonical order, with O(1) index lookup.
class PartitionUniverse {
public:
    explicit PartitionUniverse(int n);

    int n() const { return n_; }
    // Ref-qualified so iterating over a temporary universe stays valid.
    const std::vector<Partition>& items() const& { return items_; }
    std::vector<Partition> items() const&& { return items_; }
    int size() const { return static_cast<int>(items_.size()); }
    const Partition& operator[](int i) const { return items_[i]; }
    int index(const Partition& p) const;
    bool contains(const Partition& p) const;

private:
    int n_;
    std::vector<Partition> items_;
    std::unordered_map<Partition, int, PartitionHash> index_;
};

inline constexpr int kMaxPartitionN = 40;

/// All partitions of n, canonical order. Throws resource_limit_error past
/// max_n.
PartitionUniverse generate_partitions(int n, int max_n = kMaxPartitionN);

/// Dominance order; requires |a| = |b|.
bool dominance_leq(const Partition& a, const Partition& b);

/// Conjugate (transpose) partition.
Partition conjugate(const Partition& p);

/// Hook lengths as a row-shaped grid.
std::vector<std::vector<int>> hook_lengths(const Partition& p);

/// Number of standard Young tableaux of shape p, by the hook length formula.
mpz_class syt_count(const Partition& p);

/// Padded partition (N - |p|, p_1, p_2, ...); requires N - |p| >= p_1.
Partition pad(const Partition& p, int N);

} // namespace imm
