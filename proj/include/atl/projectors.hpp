#ifndef ATL_PROJECTORS_HPP
#define ATL_PROJECTORS_HPP

#include <utility>

#include "atl/hybrid.hpp"
#include "atl/report.hpp"

namespace atl {

/// T_0 = 2·id_0, T_1 = id_1, T_2 = id_2 + U_1/2 + U_0/2 and
/// T_{m+1} = ι(T_m) s_m ι(T_m).  Memoized; kept as diagrams while the
/// hybrid limits allow it.
Hybrid extremal(int m);
/// T_{+^m} and T_{-^m}: the six-diagram base case at m = 2 and the same
/// recursion as extremal() above it.
Hybrid highest(int m);
Hybrid lowest(int m);

/// e_{1,1} = -U_1/2 - D^{-1}U_1D/2, otherwise -(T_m⊗T_n) U_m (T_m⊗T_n).
Hybrid split_idempotent(int m, int n);
/// Nested caps followed by nested cups on 2r strands.
Morphism cupcap(int r);

/// The five items: idempotency, s_i absorption, U_i annihilation (i mod m),
/// absorption of ι^{m-n}(T_n), invariance under D-conjugation.
Report verify_properties(int m);

/// (T_m⊗T_n) s_m (T_m⊗T_n) = T_{m+n}.
bool linked_check(int m, int n);
/// The four overlap identities, 1 <= n <= m, 0 <= r < n.
bool overlap_check(int m, int n, int r);
/// e_{m,n} = (-1)^r (T_m⊗T_n)(T_{m-r} ⊗ Cu_rCa_r ⊗ T_{n-r})(T_m⊗T_n).
bool nested_form_check(int m, int n, int r);
/// (-1)^n (id_{m-n} ⊗ Ca_n)(T_m⊗T_n)(id_{m-n} ⊗ Cu_n) = T_{m-n}, 1 <= n <= m.
bool kariso_check(int m, int n);

/// fwd: src -> tgt with bwd∘fwd ≡ src_idem and fwd∘bwd ≡ tgt_idem.
struct IsoPair {
    Hybrid fwd;
    Hybrid bwd;
    Hybrid src_idem;
    Hybrid tgt_idem;
};

/// Between T_{|m-n|} and e_{m,n}, m != n.
IsoPair iso_diff(int m, int n);
/// iso_diff conjugated by a power of D so that both maps use wrap-around
/// caps and cups; the target idempotent is the conjugated e_{m,n}.
IsoPair iso_diff_twisted(int m, int n);
/// The two summands id_0 -> e_{m,m}: fwd = f_i, bwd = g_i, tgt_idem = f_i g_i.
std::pair<IsoPair, IsoPair> iso_equal(int m);

Report verify_iso(const IsoPair& iso, const std::string& name);
/// g_i f_j = δ_ij id_0 and f_1g_1 + f_2g_2 ≡ e_{m,m}.
Report verify_iso_equal(int m);
/// T_m ⊗ T_n ≡ T_{m+n} + e_{m,n}, e idempotent, e·T_{m+n} = T_{m+n}·e = 0.
Report verify_split(int m, int n);

} // namespace atl

#endif // ATL_PROJECTORS_HPP
