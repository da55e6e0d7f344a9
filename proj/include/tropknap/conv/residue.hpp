#pragma once

#include <cstdint>
#include <vector>

#include "tropknap/core/monotone_seq.hpp"
#include "tropknap/core/seed.hpp"

namespace tk::conv {

inline constexpr std::int64_t kInf = ExtInt::kPosInf;

// A[i] kept when A[i] mod p lies in [xp/3, (x+1)p/3), shifted down by ceil(xp/3).
// After the shift every finite residue r satisfies 3r < p.
struct ResidueClassPair {
  int x = 0, y = 0;
  MonotoneSeq a_shifted, b_shifted;
  std::int64_t shift_back = 0;  // ceil(xp/3) + ceil(yp/3)
};

std::int64_t third_ceil(std::int64_t x, std::int64_t p);  // ceil(x * p / 3)
int residue_class(std::int64_t value, std::int64_t p);      // x with value mod p in [xp/3, (x+1)p/3)

// The nine class pairs for min-plus inputs with finite entries in [0, M].
std::vector<ResidueClassPair> residue_split(const MonotoneSeq& a, const MonotoneSeq& b, std::int64_t p);

// Class-x part of a raw vector (kInf marks missing entries).
std::vector<std::int64_t> residue_part(const std::vector<std::int64_t>& a, std::int64_t p, int x);

// Number of maximal runs of kInf.
std::size_t infinity_runs(const std::vector<std::int64_t>& a);

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);
// Uniform prime from [ceil(sqrt M), floor(2 sqrt M)] by rejection; at least 2.
std::int64_t sample_prime(std::int64_t M, Rng& rng);

}  // namespace tk::conv
