#pragma once

#include <optional>
#include <string>

#include "knotamp/tensor.hpp"

namespace knotamp {

enum class Normalization { none, writhe_monomial };

// Everything one state-sum invariant needs: cup/cap matrices, the two
// crossing tensors, the optional virtual-crossing tensor, the loop value and
// the Reidemeister-I curl factors (absent when the curl contraction is not a
// scalar multiple of the identity, as in the swap model where it is FG).
template <class S>
struct TangleModel {
    std::string name;
    std::size_t dim = 2;
    Tensor<S> cup;    // M^{ab}, entry (a,b)
    Tensor<S> cap;    // M_{ab}
    Tensor<S> r_pos;  // positive crossing on V (x) V
    Tensor<S> r_neg;  // its inverse
    std::optional<Tensor<S>> virtual_tensor;
    S loop_value = scalar_ops<S>::zero();  // circle amplitude, cup contracted with cap
    std::optional<S> curl_pos, curl_neg;
    Normalization normalization = Normalization::none;
};

using ExactModel = TangleModel<LaurentPoly>;
using NumericModel = TangleModel<ComplexNum>;

// Contract a single curl against R: returns the factor when the result is a
// scalar multiple of the identity, nullopt otherwise.
template <class S>
std::optional<S> curl_factor(const Tensor<S>& cup, const Tensor<S>& cap, const Tensor<S>& r,
                             std::size_t n, double tol = 0.0);

// Kauffman bracket model: n = 2, cup = cap = M with M^2 = I,
// positive crossing A*Id + A^-1*(cup cap), loop value -A^2 - A^-2,
// writhe-normalized with computed curl factor -A^3.
ExactModel bracket_model();

// Unoriented swap-case model over n = 3: R = S (F (x) G) with the standard
// involutions F, G (FG = GF), identity cups/caps, loop value 3. Curl factors
// are matrix valued (FG), so no writhe normalization.
ExactModel swap_fg_model();

// Product-case model R = s*Id with s = i^s_power a fourth root of unity.
ExactModel product_model(int s_power);
// same model with the alternative cup/cap pair (used to check cup/cap freedom)
ExactModel product_model_alt(int s_power);

// Virtual-knot model: the anti-diagonal/diagonal R with unit-circle A,
// virtual crossings as the swap gate, identity cups/caps, loop value 2.
ExactModel virtual_model();

// substitute A = a in every tensor of an exact model
NumericModel to_numeric(const ExactModel& m, ComplexNum a, double tol = 1e-12);

// virtual model at A = e^{i theta}; numeric A must be on the unit circle
NumericModel virtual_model_numeric(ComplexNum a);

// CLI model names: bracket | swapfg | product | virtual
ExactModel make_model(const std::string& name, int s_power = 1);

extern template struct TangleModel<LaurentPoly>;
extern template struct TangleModel<ComplexNum>;

}  // namespace knotamp
