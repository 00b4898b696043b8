#include "imm/injections.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "imm/errors.hpp"

namespace imm {

TwoColumnContext make_two_column_context(const Partition& lambda, int c) {
    if (c < 1) throw std::invalid_argument("column value must be >= 1");
    TwoColumnContext ctx;
    ctx.c = c;
    ctx.lambda = lambda;
    for (int p : lambda.parts()) {
        if (p > c) ctx.alpha++;
        else if (p == c) ctx.beta++;
    }
    if (ctx.beta < 2)
        throw std::invalid_argument("part " + std::to_string(c) + " occurs fewer than twice in " +
                                    lambda.str());
    std::vector<int> mu;
    for (int i = 0; i < ctx.alpha; i++) mu.push_back(lambda.part(i));
    mu.push_back(c + 1);
    for (int i = 0; i < ctx.beta - 2; i++) mu.push_back(c);
    if (c > 1) mu.push_back(c - 1);
    for (int i = ctx.alpha + ctx.beta; i < lambda.length(); i++) mu.push_back(lambda.part(i));
    ctx.mu = Partition(std::move(mu));
    return ctx;
}

std::vector<TwoColumnContext> all_two_column_contexts(const Partition& lambda) {
    std::vector<TwoColumnContext> out;
    int i = 0;
    while (i < lambda.length()) {
        int c = lambda.part(i), mult = 0;
        while (i < lambda.length() && lambda.part(i) == c) { i++; mult++; }
        if (mult >= 2) out.push_back(make_two_column_context(lambda, c));
    }
    return out;
}

namespace {

// Bottom-up column reads of the two working columns. x has alpha+beta
// entries, y has alpha; both are 1-indexed from the bottom via X()/Y().
struct ColumnView {
    std::vector<int> x, y;
    int X(int j) const { return x[j - 1]; }
    int Y(int j) const { return y[j - 1]; }
};

ColumnView read_columns(const TwoColumnContext& ctx, const Tableau& t) {
    return ColumnView{t.column_bottom_up(ctx.c - 1), t.column_bottom_up(ctx.c)};
}

// Smallest i with x_i > y_i, or alpha+1 when the columns are termwise
// compatible.
int inversion_index(const ColumnView& v, int alpha) {
    for (int j = 1; j <= alpha; j++)
        if (v.X(j) > v.Y(j)) return j;
    return alpha + 1;
}

Tableau rebuild(const TwoColumnContext& ctx, const Tableau& t, std::vector<int> colC,
                std::vector<int> colC1) {
    auto cols = tableau_columns(t);
    // Column c+1 may not exist in the source shape (alpha = 0 with lambda_1 = c).
    if (static_cast<int>(cols.size()) <= ctx.c) cols.resize(ctx.c + 1);
    cols[ctx.c - 1] = std::move(colC);
    cols[ctx.c] = std::move(colC1);
    return tableau_from_columns(cols);
}

void require_domain(const TwoColumnContext& ctx, const Tableau& t) {
    if (t.shape != ctx.lambda || !t.is_semistandard())
        throw std::invalid_argument("tableau is not semistandard of shape " + ctx.lambda.str());
}

// The shared move-and-swap construction, without any precondition on
// (alpha, beta) and without requiring the result to be semistandard.
Tableau phi0_raw(const TwoColumnContext& ctx, const Tableau& t) {
    ColumnView v = read_columns(ctx, t);
    int alpha = ctx.alpha, beta = ctx.beta;
    int i = inversion_index(v, alpha);
    std::vector<int> colC, colC1; // top to bottom
    for (int j = alpha + beta; j >= i + 1; j--) colC.push_back(v.X(j));
    for (int j = i - 1; j >= 1; j--) colC.push_back(v.Y(j));
    for (int j = alpha; j >= i; j--) colC1.push_back(v.Y(j));
    for (int j = i; j >= 1; j--) colC1.push_back(v.X(j));
    return rebuild(ctx, t, std::move(colC), std::move(colC1));
}

Tableau checked_result(const TwoColumnContext& ctx, const Tableau& t, Tableau out) {
    assert(out.shape == ctx.mu);
    assert(out.is_semistandard());
    assert(out.content() == t.content());
    (void)t;
    return out;
}

// Reconstruction shared by psi0 and psi1: undoes the move-and-swap around the
// smallest index i' with y'_{i'} > x'_{i'}. Returns false when no such index
// exists (the tableau cannot be in the image).
bool psi0_reconstruct(const TwoColumnContext& ctx, const Tableau& t2, Tableau& out) {
    std::vector<int> xp = t2.column_bottom_up(ctx.c - 1); // alpha+beta-1 entries
    std::vector<int> yp = t2.column_bottom_up(ctx.c);     // alpha+1 entries
    int alpha = ctx.alpha, beta = ctx.beta;
    int ip = 0;
    for (int j = 1; j <= alpha + 1; j++)
        if (yp[j - 1] > xp[j - 1]) { ip = j; break; }
    if (ip == 0) return false;
    std::vector<int> colC, colC1; // top to bottom
    for (int j = alpha + beta - 1; j >= ip; j--) colC.push_back(xp[j - 1]);
    for (int j = ip; j >= 1; j--) colC.push_back(yp[j - 1]);
    for (int j = alpha + 1; j >= ip + 1; j--) colC1.push_back(yp[j - 1]);
    for (int j = ip - 1; j >= 1; j--) colC1.push_back(xp[j - 1]);
    out = rebuild(ctx, t2, std::move(colC), std::move(colC1));
    return true;
}

void require_image_shape(const TwoColumnContext& ctx, const Tableau& t2) {
    if (t2.shape != ctx.mu || !t2.is_semistandard())
        throw std::invalid_argument("tableau is not semistandard of shape " + ctx.mu.str());
}

} // namespace

Tableau phi0(const TwoColumnContext& ctx, const Tableau& t) {
    if (ctx.beta < ctx.alpha + 2)
        throw std::invalid_argument("phi0 requires beta >= alpha + 2");
    require_domain(ctx, t);
    return checked_result(ctx, t, phi0_raw(ctx, t));
}

Tableau psi0(const TwoColumnContext& ctx, const Tableau& t2) {
    if (ctx.beta < ctx.alpha + 2)
        throw std::invalid_argument("psi0 requires beta >= alpha + 2");
    require_image_shape(ctx, t2);
    Tableau cand;
    if (!psi0_reconstruct(ctx, t2, cand))
        throw not_in_image_error("no inversion index: " + t2.str() + " is not a phi0 image");
    if (cand.shape != ctx.lambda || !cand.is_semistandard() || phi0_raw(ctx, cand) != t2)
        throw not_in_image_error(t2.str() + " is not a phi0 image");
    return cand;
}

Tableau phi1(const TwoColumnContext& ctx, const Tableau& t) {
    if (ctx.beta != ctx.alpha + 1 || ctx.alpha < 2)
        throw std::invalid_argument("phi1 requires beta = alpha + 1 with alpha >= 2");
    require_domain(ctx, t);
    Tableau base = phi0_raw(ctx, t);
    if (base.is_semistandard()) return checked_result(ctx, t, std::move(base));

    // phi0 only fails here when i = alpha+1 and y_alpha > x_1: rotate the
    // column-c boundary pair and swap x_1 past y_alpha.
    ColumnView v = read_columns(ctx, t);
    int alpha = ctx.alpha, beta = ctx.beta;
    assert(inversion_index(v, alpha) == alpha + 1 && v.Y(alpha) > v.X(1));
    std::vector<int> colC, colC1; // top to bottom
    for (int j = beta + alpha; j >= beta + 2; j--) colC.push_back(v.X(j));
    colC.push_back(v.X(beta));
    colC.push_back(v.X(1));
    for (int j = alpha - 1; j >= 1; j--) colC.push_back(v.Y(j));
    colC1.push_back(v.X(beta + 1));
    for (int j = beta - 1; j >= 2; j--) colC1.push_back(v.X(j));
    colC1.push_back(v.Y(alpha));
    return checked_result(ctx, t, rebuild(ctx, t, std::move(colC), std::move(colC1)));
}

Tableau psi1(const TwoColumnContext& ctx, const Tableau& t2) {
    if (ctx.beta != ctx.alpha + 1 || ctx.alpha < 2)
        throw std::invalid_argument("psi1 requires beta = alpha + 1 with alpha >= 2");
    require_image_shape(ctx, t2);
    Tableau cand;
    bool ok = psi0_reconstruct(ctx, t2, cand);
    if (!ok) {
        // No inversion pair: undo the boundary swaps of the phi1 fallback
        // branch first, which restores an inversion at index alpha+1.
        int alpha = ctx.alpha, beta = ctx.beta;
        auto cols = tableau_columns(t2);
        auto& colC = cols[ctx.c - 1]; // alpha+beta-1 entries, top to bottom
        auto& colC1 = cols[ctx.c];    // alpha+1 entries
        auto bottom_up = [](std::vector<int>& col, int j) -> int& {
            return col[col.size() - j];
        };
        std::swap(bottom_up(colC, beta), bottom_up(colC1, alpha + 1));
        std::swap(bottom_up(colC, beta - 1), bottom_up(colC1, 1));
        Tableau swapped = tableau_from_columns(cols);
        ok = psi0_reconstruct(ctx, swapped, cand);
    }
    if (!ok || cand.shape != ctx.lambda || !cand.is_semistandard())
        throw not_in_image_error(t2.str() + " is not a phi1 image");
    Tableau roundtrip = phi1(ctx, cand);
    if (roundtrip != t2) throw not_in_image_error(t2.str() + " is not a phi1 image");
    return cand;
}

Tableau phi2(const TwoColumnContext& ctx, const Tableau& t) {
    if (ctx.beta != ctx.alpha || ctx.alpha < 4)
        throw std::invalid_argument("phi2 requires beta = alpha >= 4");
    require_domain(ctx, t);
    Tableau base = phi0_raw(ctx, t);
    if (base.is_semistandard()) return checked_result(ctx, t, std::move(base));

    ColumnView v = read_columns(ctx, t);
    int alpha = ctx.alpha, beta = ctx.beta;
    int i = inversion_index(v, alpha);
    assert(i == alpha || i == alpha + 1);
    std::vector<int> colC, colC1; // top to bottom

    if (i == alpha + 1) {
        // Two-row overlap: the moved block collides with both y_{alpha-1} and
        // y_alpha territory; split on which of the two swaps are needed.
        bool swap_lo = v.Y(alpha - 1) > v.X(1);
        bool swap_hi = v.Y(alpha) > v.X(2);
        assert(swap_lo || swap_hi);
        if (swap_lo && !swap_hi) {
            for (int j = 2 * alpha; j >= beta + 4; j--) colC.push_back(v.X(j));
            colC.push_back(v.X(beta + 2));
            colC.push_back(v.X(beta + 1));
            colC.push_back(v.Y(alpha));
            colC.push_back(v.X(1));
            for (int j = alpha - 2; j >= 1; j--) colC.push_back(v.Y(j));
            colC1.push_back(v.X(beta + 3));
            for (int j = beta; j >= 2; j--) colC1.push_back(v.X(j));
            colC1.push_back(v.Y(alpha - 1));
        } else if (!swap_lo && swap_hi) {
            for (int j = 2 * alpha; j >= beta + 3; j--) colC.push_back(v.X(j));
            colC.push_back(v.X(beta));
            colC.push_back(v.X(2));
            for (int j = alpha - 1; j >= 1; j--) colC.push_back(v.Y(j));
            colC1.push_back(v.X(beta + 2));
            colC1.push_back(v.X(beta + 1));
            for (int j = beta - 1; j >= 3; j--) colC1.push_back(v.X(j));
            colC1.push_back(v.Y(alpha));
            colC1.push_back(v.X(1));
        } else {
            for (int j = 2 * alpha; j >= beta + 4; j--) colC.push_back(v.X(j));
            colC.push_back(v.X(beta + 2));
            colC.push_back(v.X(beta));
            colC.push_back(v.X(2));
            colC.push_back(v.X(1));
            for (int j = alpha - 2; j >= 1; j--) colC.push_back(v.Y(j));
            colC1.push_back(v.X(beta + 3));
            colC1.push_back(v.X(beta + 1));
            for (int j = beta - 1; j >= 3; j--) colC1.push_back(v.X(j));
            colC1.push_back(v.Y(alpha));
            colC1.push_back(v.Y(alpha - 1));
        }
    } else {
        // One-row overlap (i = alpha): split on where y_alpha lands among
        // x_{beta+1}, x_{beta+2}.
        assert(v.Y(alpha - 1) > v.X(1));
        if (v.Y(alpha) < v.X(beta + 2)) {
            for (int j = 2 * alpha; j >= beta + 3; j--) colC.push_back(v.X(j));
            colC.push_back(v.X(beta + 1));
            colC.push_back(v.X(beta));
            colC.push_back(v.X(1));
            for (int j = alpha - 2; j >= 1; j--) colC.push_back(v.Y(j));
            colC1.push_back(v.Y(alpha));
            colC1.push_back(v.X(beta + 2));
            for (int j = beta - 1; j >= 2; j--) colC1.push_back(v.X(j));
            colC1.push_back(v.Y(alpha - 1));
        } else if (v.Y(alpha) < v.X(beta + 1)) {
            for (int j = 2 * alpha; j >= beta + 3; j--) colC.push_back(v.X(j));
            colC.push_back(v.Y(alpha));
            colC.push_back(v.X(beta));
            colC.push_back(v.X(1));
            for (int j = alpha - 2; j >= 1; j--) colC.push_back(v.Y(j));
            colC1.push_back(v.X(beta + 2));
            colC1.push_back(v.X(beta + 1));
            for (int j = beta - 1; j >= 2; j--) colC1.push_back(v.X(j));
            colC1.push_back(v.Y(alpha - 1));
        } else {
            for (int j = 2 * alpha; j >= beta + 3; j--) colC.push_back(v.X(j));
            colC.push_back(v.X(beta + 1));
            colC.push_back(v.X(beta - 1));
            colC.push_back(v.X(1));
            for (int j = alpha - 2; j >= 1; j--) colC.push_back(v.Y(j));
            colC1.push_back(v.X(beta + 2));
            colC1.push_back(v.Y(alpha));
            colC1.push_back(v.X(beta));
            for (int j = beta - 2; j >= 2; j--) colC1.push_back(v.X(j));
            colC1.push_back(v.Y(alpha - 1));
        }
    }
    return checked_result(ctx, t, rebuild(ctx, t, std::move(colC), std::move(colC1)));
}

static void validate_rotation_spec(const Tableau& s, const RotationSpec& spec) {
    Partition colLens = conjugate(s.shape);
    int c = spec.col;
    if (c < 1 || c >= s.shape.part(0))
        throw std::invalid_argument("rotation needs two adjacent columns inside the shape");
    auto in_col = [&](int col, int lo, int hi) {
        return lo >= 1 && lo <= hi && hi <= colLens.part(col - 1);
    };
    if (!in_col(c, spec.rowLoLeft, spec.rowHiLeft) ||
        !in_col(c + 1, spec.rowLoRight, spec.rowHiRight))
        throw std::invalid_argument("rotation rows out of range");
}

Tableau apply_clockwise_rotation(const Tableau& s, const RotationSpec& spec) {
    validate_rotation_spec(s, spec);
    Tableau out = s;
    int c = spec.col - 1; // 0-based column indices below
    for (int r = spec.rowLoLeft + 1; r <= spec.rowHiLeft; r++)
        out.rows[r - 2][c] = s.rows[r - 1][c]; // left column shifts up
    for (int r = spec.rowLoRight; r < spec.rowHiRight; r++)
        out.rows[r][c + 1] = s.rows[r - 1][c + 1]; // right column shifts down
    out.rows[spec.rowLoRight - 1][c + 1] = s.rows[spec.rowLoLeft - 1][c];
    out.rows[spec.rowHiLeft - 1][c] = s.rows[spec.rowHiRight - 1][c + 1];
    return out;
}

bool rotation_conditions_hold(const Tableau& s, const RotationSpec& spec) {
    validate_rotation_spec(s, spec);
    int c = spec.col - 1;
    int crossRight = s.rows[spec.rowLoLeft - 1][c];      // moves to column c+1
    int crossLeft = s.rows[spec.rowHiRight - 1][c + 1];  // moves to column c
    if (s.rows[spec.rowHiLeft - 1][c] > s.rows[spec.rowLoRight - 1][c + 1]) return false; // (1)
    if (!(spec.rowLoRight < spec.rowLoLeft)) return false;                               // (2)
    if (!(spec.rowHiLeft > spec.rowHiRight)) return false;                               // (3)
    if (spec.rowLoRight >= 2 && !(crossRight > s.rows[spec.rowLoRight - 2][c + 1]))
        return false;                                                                    // (4)
    Partition colLens = conjugate(s.shape);
    if (spec.rowHiLeft < colLens.part(c) && !(crossLeft < s.rows[spec.rowHiLeft][c]))
        return false;                                                                    // (5)
    return true;
}

bool rotation_is_semistandard_check(const Tableau& s, const RotationSpec& spec) {
    return apply_clockwise_rotation(s, spec).is_semistandard();
}

Tableau move_box_injection(const Partition& lam, const Tableau& t) {
    int a = lam.part(0);
    int b = 0;
    while (b < lam.length() && lam.part(b) == a) b++;
    if (b < 2) throw std::invalid_argument("shape must start with a repeated part");
    if (t.shape != lam || !t.is_semistandard())
        throw std::invalid_argument("tableau is not semistandard of shape " + lam.str());
    Tableau out = t;
    int moved = out.rows[b - 1].back();
    out.rows[b - 1].pop_back();
    out.rows[0].push_back(moved);
    if (out.rows[b - 1].empty()) out.rows.erase(out.rows.begin() + (b - 1));
    std::vector<int> parts;
    for (auto& row : out.rows) parts.push_back(static_cast<int>(row.size()));
    out.shape = Partition(std::move(parts));
    assert(out.is_semistandard());
    return out;
}

} // namespace imm
