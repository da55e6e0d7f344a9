#pragma once

#include "tropknap/core/monotone_seq.hpp"

namespace tk::conv {

// C[k] = min over in-window pairs i + j = k of A[i] + B[j]; +inf absorbs.
// Start is A.start + B.start, length |A| + |B| - 1.
MonotoneSeq minplus_naive(const MonotoneSeq& a, const MonotoneSeq& b);
// Max analog; -inf absorbs.
MonotoneSeq maxplus_naive(const MonotoneSeq& a, const MonotoneSeq& b);

// Direction of a tropical product: preserved when both inputs share it.
Direction product_direction(const MonotoneSeq& a, const MonotoneSeq& b);

}  // namespace tk::conv
