#pragma once

#include <vector>

#include "imm/partition.hpp"
#include "imm/tableau.hpp"

namespace imm {

/// A column value c occurring with multiplicity beta >= 2 inside lambda:
/// lambda = (lambda_1, ..., lambda_alpha, c^beta, rest) with every rest part
/// < c < lambda_alpha (or alpha = 0). The target shape replaces the c-block:
/// mu = (lambda_1, ..., lambda_alpha, c+1, c^{beta-2}, c-1, rest), dropping
/// the c-1 part when c = 1.
struct TwoColumnContext {
    int c = 0;
    int alpha = 0;
    int beta = 0;
    Partition lambda;
    Partition mu;
};

/// Builds the context for the block of parts equal to c in lambda. Throws
/// std::invalid_argument unless c occurs with multiplicity >= 2.
TwoColumnContext make_two_column_context(const Partition& lambda, int c);

/// Every valid context of lambda (one per part value with multiplicity >= 2),
/// in decreasing order of c.
std::vector<TwoColumnContext> all_two_column_contexts(const Partition& lambda);

/// The move-and-swap map around the smallest i with x_i > y_i, defined for
/// beta >= alpha + 2; maps SSYT(lambda, nu) into SSYT(mu, nu) injectively.
Tableau phi0(const TwoColumnContext& ctx, const Tableau& t);

/// Inverse of phi0 on its image; throws not_in_image_error otherwise.
Tableau psi0(const TwoColumnContext& ctx, const Tableau& t2);

/// Variant for beta = alpha + 1 with alpha >= 2: equals phi0 when that output
/// is semistandard, else applies the boundary swaps.
Tableau phi1(const TwoColumnContext& ctx, const Tableau& t);

/// Inverse of phi1 on its image; throws not_in_image_error otherwise.
Tableau psi1(const TwoColumnContext& ctx, const Tableau& t2);

/// Variant for beta = alpha >= 4: equals phi0 when semistandard, else one of
/// six clockwise-rotation cases split by one-row/two-row overlap. Injective;
/// no inverse is provided (injectivity is established by exhaustive
/// image-cardinality tests instead).
Tableau phi2(const TwoColumnContext& ctx, const Tableau& t);

/// A clockwise rotation on contiguous cell ranges of two adjacent columns.
/// Rows are 1-based from the top; both ranges are inclusive and non-empty.
/// Entries of column col (rows rowLoLeft..rowHiLeft) move up one cell, except
/// the topmost, which moves to row rowLoRight of column col+1; entries of
/// column col+1 (rows rowLoRight..rowHiRight) move down one cell, except the
/// bottommost, which moves to row rowHiLeft of column col.
struct RotationSpec {
    int col = 1; // 1-based left column
    int rowLoLeft = 0, rowHiLeft = 0;
    int rowLoRight = 0, rowHiRight = 0;
};

Tableau apply_clockwise_rotation(const Tableau& s, const RotationSpec& spec);

/// The five sufficient conditions under which a clockwise rotation preserves
/// semistandardness:
///  (1) bottommost rotated entry in the left column <= topmost rotated entry
///      in the right column;
///  (2) the entry crossing left-to-right moves strictly up;
///  (3) the entry crossing right-to-left moves strictly down;
///  (4) the left-to-right entry exceeds the entry above its new cell, if any;
///  (5) the right-to-left entry is below-compatible: less than the entry
///      under its new cell, if any.
bool rotation_conditions_hold(const Tableau& s, const RotationSpec& spec);

/// Applies the rotation and reports whether the result is semistandard.
bool rotation_is_semistandard_check(const Tableau& s, const RotationSpec& spec);

/// For lam = (a^b, rest) with a > rest_1 and b >= 2: moves the entry in cell
/// (b, a) to the new cell (1, a+1), giving a semistandard tableau of shape
/// (a+1, a^{b-2}, a-1, rest) with the same content.
Tableau move_box_injection(const Partition& lam, const Tableau& t);

} // namespace imm
