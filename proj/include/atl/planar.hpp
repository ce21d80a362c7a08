#ifndef ATL_PLANAR_HPP
#define ATL_PLANAR_HPP

#include "atl/morphism.hpp"
#include "atl/report.hpp"

namespace atl {

/// Every term has seam 0 and no essential circles.
bool is_planar(const Morphism& x);

/// P_1 = id_1, P_{m+1} = ι(P_m) + m/(m+1) · ι(P_m) U_m ι(P_m).  Memoized;
/// m = 0 throws std::invalid_argument.
const Morphism& jones_wenzl(int m);

/// Closing the last strand of P_m gives -(m+1)/m · P_{m-1}.
bool jw_partial_trace_check(int m);

/// The two maps splitting P_m ⊗ P_1 into P_{m+1} ⊕ P_{m-1}:
/// f = -m/(m+1) · (P_m ⊗ id_1)(id_{m-1} ⊗ cup), g = (id_{m-1} ⊗ cap)(P_m ⊗ id_1).
struct JwSplitting {
    Morphism f; // m-1 -> m+1
    Morphism g; // m+1 -> m-1
};
JwSplitting jw_splitting(int m);
/// g∘f = P_{m-1} and f∘g = -m/(m+1) · ι(P_m) U_m ι(P_m), with P_{m+1} + f∘g = ι(P_m).
bool jw_k0_check(int m);

/// Idempotency, U_i annihilation, s_i absorption and rank φ(P_m) = m + 1.
Report verify_jw(int m);

} // namespace atl

#endif // ATL_PLANAR_HPP
