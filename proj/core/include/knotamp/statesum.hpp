#pragma once

#include <vector>

#include "knotamp/models.hpp"
#include "knotamp/morse.hpp"

namespace knotamp {

struct EvalOptions {
    // maximum slice width; <= 0 picks the default (12 for dim 2, 8 for dim 3).
    // The state vector holds dim^width scalars, so this is the memory guard.
    int max_width = 0;
    double tol = 1e-9;  // numeric comparisons only
};

// Transfer-matrix sweep over the event list: vacuum amplitude at width 0,
// cups inject M^{ab}, caps contract with M_{ab}, crossings update two
// adjacent factors in place. Requires a closed diagram.
template <class S>
S evaluate(const MorseDiagram& d, const TangleModel<S>& m, const EvalOptions& opt = {});

// curl_pos^{-writhe} * Z; the model must carry scalar curl factors
template <class S>
S normalized(const MorseDiagram& d, const TangleModel<S>& m, const EvalOptions& opt = {});

// independent diagrams in parallel; exact scalars make the result
// independent of the partitioning
template <class S>
std::vector<S> evaluate_batch(const std::vector<MorseDiagram>& ds, const TangleModel<S>& m,
                              int jobs = 1, const EvalOptions& opt = {});

enum class ClosedFormCase { product, swap };

// Closed-form value of the writhe-normalized invariant from diagram
// combinatorics alone. Product case: delta^(SC - w - 1); the exponent is
// always even, so the value is 1 for delta = +-1. Swap case:
// (FG)^(w + N - P) = identity since w = P - N.
struct ClosedFormReport {
    ClosedFormCase which = ClosedFormCase::product;
    int seifert_circles = 0;
    int writhe = 0;
    int positive = 0;
    int negative = 0;
    long exponent = 0;
    bool trivial = true;  // exponent even (product) / zero (swap)
};

ClosedFormReport oriented_closed_form(const MorseDiagram& d, ClosedFormCase which);

}  // namespace knotamp
