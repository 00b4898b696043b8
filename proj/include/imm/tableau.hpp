#pragma once

#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "imm/partition.hpp"

namespace imm {

/// A filling of a Young diagram. Invariants (when semistandard): rows weakly
/// increase left to right, columns strictly increase top to bottom.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    bool operator==(const Tableau& o) const = default;

    /// Entry at row r, column c (0-based); caller must stay in shape.
    int at(int r, int c) const { return rows[r][c]; }

    bool rows_match_shape() const;
    bool is_semistandard() const;
    /// Multiplicity of each entry value 1..max, trailing zeros trimmed.
    std::vector<int> content() const;
    /// Entries of column c read bottom to top (so result[0] is the bottom
    /// cell). Empty when the column is absent.
    std::vector<int> column_bottom_up(int c) const;
    /// Concatenation of rows, top to bottom.
    std::vector<int> row_reading_word() const;

    std::string str() const;
};

/// Rebuilds a tableau from its columns (top-to-bottom entry lists). The
/// column lengths must be weakly decreasing.
Tableau tableau_from_columns(const std::vector<std::vector<int>>& cols);
std::vector<std::vector<int>> tableau_columns(const Tableau& t);

/// All semistandard tableaux of the given shape whose entry multiplicities
/// equal `content` (a composition: content[v-1] copies of v). Ordered
/// lexicographically by row-reading word.
std::vector<Tableau> enumerate_ssyt_composition(const Partition& shape,
                                                const std::vector<int>& content);
std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& content);

/// Memo shared by kostka() calls within one table build. Key is the
/// (shape, remaining content) pair after content normalization.
class KostkaMemo {
public:
    const mpz_class& kostka(const Partition& shape, const Partition& content);

private:
    struct Key {
        Partition shape, content;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            PartitionHash h;
            return h(k.shape) * 0x9e3779b97f4a7c15ull ^ h(k.content);
        }
    };
    std::unordered_map<Key, mpz_class, KeyHash> memo_;
};

/// K_{shape,content}: the number of semistandard tableaux of the given shape
/// and content, by horizontal-strip recursion. Content may be any
/// composition; it is sorted before computation.
mpz_class kostka(const Partition& shape, const Partition& content);

struct KostkaTable {
    int n = 0;
    PartitionUniverse universe{0};
    std::vector<std::vector<mpz_class>> values; // values[i][j] = K_{items[i], items[j]}

    const mpz_class& at(const Partition& shape, const Partition& content) const {
        return values[universe.index(shape)][universe.index(content)];
    }
};

inline constexpr int kMaxTableN = 24;

KostkaTable kostka_table(int n, int max_n = kMaxTableN);

/// K_{(i,1^{n-i}), alpha} for any content alpha with k_parts parts dominated
/// by the hook: binomial(k_parts-1, n-i), read as 0 when n-i is out of range.
mpz_class hook_kostka_closed_form(int i, int k_parts, int n);

/// Two-column shapes: for n = 2k, lam^j = (2^{k-j}, 1^{2j}); for n = 2k+1,
/// lam^j = (2^{k-j}, 1^{2j+1}); 0 <= j <= floor(n/2).
Partition two_column_shape(int j, int n);

/// K_{lam^i, lam^j}: the two-row count f^{(j+i, j-i)} for even n and
/// f^{(j+i+1, j-i)} for odd n when i <= j, else 0.
mpz_class two_column_kostka_closed_form(int i, int j, int n);

} // namespace imm
