#pragma once

#include <utility>
#include <vector>

#include "angtensor/tensor.hpp"

namespace angtensor {

/// Angular-momentum-ell component of the rank-L unit-vector monomial as an
/// X-symbol combination (closed form). Returns the zero combination when
/// ell > L or L-ell is odd; negative arguments are a domain error.
XCombo component(int L, int ell);

/// The maximal (ell = L) component; symmetric and traceless.
XCombo max_component(int L);

/// Same component built by descending the Legendre three-term recursion from
/// the ell = 0 and ell = 1 closed forms, materializing the rank-(L+1)
/// intermediate that the recursion's first term demands.
XCombo component_via_recursion(int L, int ell);

/// Same component as the symmetrized product of the rank-ell traceless part
/// with the rank-(L-ell) isotropic part, scaled by
/// (2ell+1)!!(L-ell+1)!!/(L+ell+1)!!.
XCombo component_via_product(int L, int ell);

/// Every component, by descending ell: L, L-2, ..., down to 1 or 0.
std::vector<std::pair<int, XCombo>> all_components(int L);

/// True iff every trace of the combination vanishes. Rank must be >= 2.
bool check_traceless(const XCombo& c);

}  // namespace angtensor
