// Fusion coefficients for the level-l sl2 theory and conformal-block
// dimensions computed two independent ways: counting admissible labelings of
// a pair-of-pants decomposition (transfer matrices), and an exact evaluation
// of the character-sum formula in a cyclotomic field.  Both return the same
// nonnegative integer, which the acceptance suite checks exhaustively.
#ifndef MONODROMY_FUSION_HPP_
#define MONODROMY_FUSION_HPP_

#include <cstdint>
#include <vector>

#include "monodromy/common.hpp"

namespace monodromy {

// Admissible labels at level l are the integers 0..l (twice the spin).
// c appears in the product a (x) b iff
//   |a - b| <= c <= min(a + b, 2l - a - b)  and  a + b + c is even.
std::vector<long> fusion_product(long a, long b, long level);

struct BlockSpec {
  long level = 1;
  unsigned genus = 0;
  std::vector<long> weights;  // marked-point labels
};

// Number of admissible labelings of a trivalent caterpillar graph with
// `genus` handles: dim = (N_{w1} ... N_{wn} H^g)[0][0] with H = sum_m N_m^2.
// Evaluated in two bracketing orders (handles applied last and first) and
// cross-checked before returning.
std::uint64_t block_dimension(const BlockSpec& spec);

// Exact character-sum evaluation in Q(zeta_{4(l+2)}):
//   dim = (2/(l+2))^(1-g) * (-4)^(g-1)
//         * sum_p shat(1,p)^(2-2g-n) * prod_i shat(w_i+1, p)
// with shat(j,p) = zeta^{2jp} - zeta^{-2jp} (the sine matrix scaled by 2i,
// which clears the square-root normalization exactly).  The result is
// checked to be a nonnegative rational integer before being returned.
std::uint64_t verlinde_dimension(const BlockSpec& spec);

}  // namespace monodromy

#endif  // MONODROMY_FUSION_HPP_
