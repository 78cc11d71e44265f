#pragma once

#include "knotamp/laurent_poly.hpp"
#include "knotamp/morse.hpp"

namespace knotamp {

// Ground-truth bracket amplitude by full skein expansion: every classical
// crossing is resolved both ways (positive: A * vertical + A^-1 * turnback,
// negative: coefficients exchanged), loops of each complete smoothing are
// counted by union-find, and each state contributes its monomial times
// (-A^2 - A^-2)^loops. Matches the transfer-matrix amplitude, loop value
// included. Structurally unlike the engine on purpose.
LaurentPoly skein_bracket(const MorseDiagram& d, int max_crossings = 16);

// (-A^3)^{-writhe} * skein_bracket
LaurentPoly normalized_skein(const MorseDiagram& d, int max_crossings = 16);

// loop count of one smoothing state (bit i = 1 resolves crossing i with the
// turnback smoothing); exposed for cross-validation against the tensor path
int skein_state_loops(const MorseDiagram& d, unsigned long mask);

}  // namespace knotamp
