#include "imm/partition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "imm/errors.hpp"

namespace imm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); i++) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::rectangle(int part, int count) {
    if (part <= 0 || count < 0)
        throw std::invalid_argument("bad rectangle dimensions");
    return Partition(std::vector<int>(count, part));
}

Partition Partition::hook(int a, int b) {
    if (a <= 0 || b < 0 || (b > 0 && a < 1))
        throw std::invalid_argument("bad hook dimensions");
    std::vector<int> v;
    v.reserve(1 + b);
    v.push_back(a);
    for (int i = 0; i < b; i++) v.push_back(1);
    return Partition(std::move(v));
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    // Descending lex: larger first part sorts earlier. A proper prefix of a
    // partition has smaller remaining parts than the longer one's next part,
    // so the longer vector sorts earlier among equal prefixes.
    size_t m = std::min(parts_.size(), o.parts_.size());
    for (size_t i = 0; i < m; i++) {
        if (parts_[i] != o.parts_[i])
            return parts_[i] > o.parts_[i] ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
    }
    if (parts_.size() != o.parts_.size())
        return parts_.size() > o.parts_.size() ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); i++) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.str();
}

Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("partition must be bracketed, e.g. [4,2,1]");
    s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    if (!s.empty()) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            size_t caret = tok.find('^');
            int value, mult = 1;
            try {
                if (caret == std::string::npos) {
                    value = std::stoi(tok);
                } else {
                    value = std::stoi(tok.substr(0, caret));
                    mult = std::stoi(tok.substr(caret + 1));
                }
            } catch (const std::exception&) {
                throw std::invalid_argument("bad partition component: " + tok);
            }
            if (mult < 0) throw std::invalid_argument("negative multiplicity");
            for (int i = 0; i < mult; i++) parts.push_back(value);
        }
        if (s.back() == ',') throw std::invalid_argument("trailing comma");
    }
    return Partition(std::move(parts));
}

size_t PartitionHash::operator()(const Partition& p) const {
    size_t h = 1469598103934665603ull;
    for (int x : p.parts()) {
        h ^= static_cast<size_t>(x);
        h *= 1099511628211ull;
    }
    return h;
}

static void gen_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; p--) {
        cur.push_back(p);
        gen_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

PartitionUniverse::PartitionUniverse(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative n");
    std::vector<int> cur;
    gen_rec(n, n == 0 ? 1 : n, cur, items_);
    index_.reserve(items_.size());
    for (size_t i = 0; i < items_.size(); i++)
        index_.emplace(items_[i], static_cast<int>(i));
}

int PartitionUniverse::index(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end())
        throw std::invalid_argument("partition " + p.str() + " is not a partition of " +
                                    std::to_string(n_));
    return it->second;
}

bool PartitionUniverse::contains(const Partition& p) const {
    return index_.count(p) != 0;
}

PartitionUniverse generate_partitions(int n, int max_n) {
    if (n > max_n)
        throw resource_limit_error("partition generation limited to n <= " +
                                   std::to_string(max_n) + ", got n = " + std::to_string(n));
    return PartitionUniverse(n);
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("dominance compares partitions of equal size");
    int sa = 0, sb = 0;
    int m = std::max(a.length(), b.length());
    for (int i = 0; i < m; i++) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols(p.empty() ? 0 : p.part(0), 0);
    for (int r = 0; r < p.length(); r++)
        for (int c = 0; c < p.part(r); c++) cols[c]++;
    return Partition(std::move(cols));
}

std::vector<std::vector<int>> hook_lengths(const Partition& p) {
    Partition q = conjugate(p);
    std::vector<std::vector<int>> h(p.length());
    for (int r = 0; r < p.length(); r++) {
        h[r].resize(p.part(r));
        for (int c = 0; c < p.part(r); c++)
            h[r][c] = (p.part(r) - c) + (q.part(c) - r) - 1;
    }
    return h;
}

mpz_class syt_count(const Partition& p) {
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(p.n()));
    mpz_class den = 1;
    for (const auto& row : hook_lengths(p))
        for (int h : row) den *= h;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    assert(r == 0);
    return q;
}

Partition pad(const Partition& p, int N) {
    int head = N - p.n();
    if (head < p.part(0) || head < 0)
        throw std::invalid_argument("pad: N - |p| must be at least the largest part");
    if (head == 0) return p; // only possible for the empty partition
    std::vector<int> v;
    v.reserve(p.length() + 1);
    v.push_back(head);
    for (int x : p.parts()) v.push_back(x);
    return Partition(std::move(v));
}

} // namespace imm
