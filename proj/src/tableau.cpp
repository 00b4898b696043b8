#include "imm/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "imm/errors.hpp"

namespace imm {

bool Tableau::rows_match_shape() const {
    if (static_cast<int>(rows.size()) != shape.length()) return false;
    for (int r = 0; r < shape.length(); r++)
        if (static_cast<int>(rows[r].size()) != shape.part(r)) return false;
    return true;
}

bool Tableau::is_semistandard() const {
    if (!rows_match_shape()) return false;
    for (int r = 0; r < shape.length(); r++) {
        for (int c = 0; c < shape.part(r); c++) {
            if (rows[r][c] < 1) return false;
            if (c > 0 && rows[r][c] < rows[r][c - 1]) return false;
            if (r > 0 && c < shape.part(r - 1) && rows[r][c] <= rows[r - 1][c]) return false;
        }
    }
    return true;
}

std::vector<int> Tableau::content() const {
    std::vector<int> cnt;
    for (const auto& row : rows)
        for (int v : row) {
            if (static_cast<int>(cnt.size()) < v) cnt.resize(v, 0);
            cnt[v - 1]++;
        }
    return cnt;
}

std::vector<int> Tableau::column_bottom_up(int c) const {
    std::vector<int> out;
    for (int r = static_cast<int>(rows.size()) - 1; r >= 0; r--)
        if (c < static_cast<int>(rows[r].size())) out.push_back(rows[r][c]);
    return out;
}

std::vector<int> Tableau::row_reading_word() const {
    std::vector<int> w;
    for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
    return w;
}

std::string Tableau::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t r = 0; r < rows.size(); r++) {
        if (r) os << ',';
        os << '[';
        for (size_t c = 0; c < rows[r].size(); c++) {
            if (c) os << ',';
            os << rows[r][c];
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

std::vector<std::vector<int>> tableau_columns(const Tableau& t) {
    int width = t.shape.part(0);
    std::vector<std::vector<int>> cols(width);
    for (const auto& row : t.rows)
        for (size_t c = 0; c < row.size(); c++) cols[c].push_back(row[c]);
    return cols;
}

Tableau tableau_from_columns(const std::vector<std::vector<int>>& cols) {
    std::vector<int> col_lens;
    for (const auto& col : cols) {
        if (!col_lens.empty() && static_cast<int>(col.size()) > col_lens.back())
            throw std::invalid_argument("column lengths must be weakly decreasing");
        col_lens.push_back(static_cast<int>(col.size()));
    }
    while (!col_lens.empty() && col_lens.back() == 0) col_lens.pop_back();
    Partition shape = conjugate(Partition(col_lens));
    Tableau t;
    t.shape = shape;
    t.rows.resize(shape.length());
    for (int r = 0; r < shape.length(); r++) {
        t.rows[r].resize(shape.part(r));
        for (int c = 0; c < shape.part(r); c++) t.rows[r][c] = cols[c][r];
    }
    return t;
}

std::vector<Tableau> enumerate_ssyt_composition(const Partition& shape,
                                                const std::vector<int>& content) {
    int total = std::accumulate(content.begin(), content.end(), 0);
    if (total != shape.n())
        throw std::invalid_argument("shape and content sizes differ");

    std::vector<Tableau> out;
    Tableau t;
    t.shape = shape;
    t.rows.resize(shape.length());
    for (int r = 0; r < shape.length(); r++) t.rows[r].resize(shape.part(r));
    std::vector<int> left = content;
    int maxval = static_cast<int>(content.size());

    // Row-major backtracking in increasing entry order yields the tableaux in
    // lexicographic row-reading-word order.
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == shape.length()) {
            out.push_back(t);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == shape.part(r)) { nr = r + 1; nc = 0; }
        int lo = c > 0 ? t.rows[r][c - 1] : 1;
        for (int v = lo; v <= maxval; v++) {
            if (left[v - 1] == 0) continue;
            if (r > 0 && v <= t.rows[r - 1][c]) continue;
            t.rows[r][c] = v;
            left[v - 1]--;
            self(self, nr, nc);
            left[v - 1]++;
        }
    };
    if (shape.length() == 0)
        out.push_back(t);
    else
        rec(rec, 0, 0);
    return out;
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& content) {
    return enumerate_ssyt_composition(shape, content.parts());
}

// Sum of K_{mu, rest} over all mu obtained from `shape` by removing a
// horizontal strip of size `strip` (no two removed cells in a column).
static mpz_class strip_sum(KostkaMemo& memo, const Partition& shape,
                           const std::vector<int>& rest_parts, int strip);

const mpz_class& KostkaMemo::kostka(const Partition& shape, const Partition& content) {
    Key key{shape, content};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    mpz_class v;
    if (content.empty()) {
        v = shape.empty() ? 1 : 0;
    } else if (!dominance_leq(content, shape)) {
        v = 0;
    } else {
        // Remove the cells holding the largest entry value: a horizontal
        // strip of size equal to the last (smallest) content part.
        std::vector<int> rest(content.parts().begin(), content.parts().end() - 1);
        v = strip_sum(*this, shape, rest, content.parts().back());
    }
    return memo_.emplace(std::move(key), std::move(v)).first->second;
}

static mpz_class strip_sum(KostkaMemo& memo, const Partition& shape,
                           const std::vector<int>& rest_parts, int strip) {
    Partition rest(rest_parts);
    mpz_class total = 0;
    std::vector<int> mu(shape.length());
    // Row r keeps mu[r] cells with shape.part(r+1) <= mu[r] <= shape.part(r);
    // the strip condition is exactly mu[r] >= shape.part(r+1).
    auto rec = [&](auto&& self, int r, int removed) -> void {
        if (removed > strip) return;
        if (r == shape.length()) {
            if (removed != strip) return;
            std::vector<int> mu_parts;
            for (int x : mu)
                if (x > 0) mu_parts.push_back(x);
            total += memo.kostka(Partition(std::move(mu_parts)), rest);
            return;
        }
        int lo = shape.part(r + 1);
        for (int keep = shape.part(r); keep >= lo; keep--) {
            mu[r] = keep;
            self(self, r + 1, removed + (shape.part(r) - keep));
        }
    };
    rec(rec, 0, 0);
    return total;
}

mpz_class kostka(const Partition& shape, const Partition& content) {
    if (shape.n() != content.n())
        throw std::invalid_argument("shape and content sizes differ");
    KostkaMemo memo;
    return memo.kostka(shape, content);
}

KostkaTable kostka_table(int n, int max_n) {
    if (n > max_n)
        throw resource_limit_error("kostka table limited to n <= " + std::to_string(max_n) +
                                   ", got n = " + std::to_string(n));
    KostkaTable kt;
    kt.n = n;
    kt.universe = PartitionUniverse(n);
    int m = kt.universe.size();
    kt.values.assign(m, std::vector<mpz_class>(m));
    KostkaMemo memo;
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++)
            kt.values[i][j] = memo.kostka(kt.universe[i], kt.universe[j]);
    return kt;
}

mpz_class hook_kostka_closed_form(int i, int k_parts, int n) {
    if (i < 1 || i > n || k_parts < 1 || k_parts > n) return 0;
    if (n - i < 0 || n - i > k_parts - 1) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k_parts - 1),
                 static_cast<unsigned long>(n - i));
    return b;
}

Partition two_column_shape(int j, int n) {
    int k = n / 2;
    if (j < 0 || j > k) throw std::invalid_argument("two-column index out of range");
    std::vector<int> parts;
    for (int t = 0; t < k - j; t++) parts.push_back(2);
    int ones = (n % 2 == 0) ? 2 * j : 2 * j + 1;
    for (int t = 0; t < ones; t++) parts.push_back(1);
    return Partition(std::move(parts));
}

mpz_class two_column_kostka_closed_form(int i, int j, int n) {
    int k = n / 2;
    if (i < 0 || i > k || j < 0 || j > k)
        throw std::invalid_argument("two-column index out of range");
    if (i > j) return 0;
    int a = (n % 2 == 0) ? j + i : j + i + 1;
    int b = j - i;
    std::vector<int> parts;
    if (a > 0) parts.push_back(a);
    if (b > 0) parts.push_back(b);
    return syt_count(Partition(std::move(parts)));
}

} // namespace imm
