#ifndef ATL_SUITES_HPP
#define ATL_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "atl/report.hpp"

namespace atl::suites {

/// Relations U_i^2 = -2U_i, U_iU_{i±1}U_i = U_i, distant commutation and
/// U_i D = D U_{i+1} (indices mod n) as raw morphism equalities, 2 <= n <= max_n.
Report presentation(int max_n, int min_n = 2);
/// R1 (sign -1) on either side, R2 and R3 embedded in ATL_n, n <= max_n.
Report reidemeister(int max_n);
/// The generator matrices agree on both ways of sliding a cap or cup across
/// the base point, with 0..bystanders extra strands.
Report welldef(int bystanders);
/// rank φ(basis of hom(0, 2n)) = C(2n, n), 1 <= n <= max_n.
Report faithfulness(int max_n);
/// φ(T_m) against the diagonal oracle (1 <= m <= max_m), the five
/// projector properties (2 <= m <= max_m) and the highest/lowest projectors.
Report technical(int max_m);
/// φ(T_m) = extremal_matrix(m) for 1 <= m <= max_m.
Report extremal_images(int max_m);
/// Idempotency of T_m for 2 <= m <= max_m.
Report extremal_idempotent(int max_m);
/// φ(T_{±^m}) rank-1 projectors, sum ess-equal to T_m, swapped by s2, 2 <= m <= max_m.
Report highest_lowest(int max_m);
/// pTr(T_m) = -T_{m-1} for 1 <= m <= max_m, JW ratio -(m+1)/m for 2 <= m <= max_m.
Report ptr(int max_m);
/// Jones-Wenzl projector properties and splitting contracts for m <= max_m.
Report jones_wenzl(int max_m);
/// Product formula in every cell 1 <= n <= m <= max_m: decomposition,
/// linked/overlap/nested/kariso lemmas, iso_diff (plain and twisted), iso_equal.
Report product(int max_m, int max_equal = 3);
/// K0 layer: rank additivity per cell, JW splitting, s2 symmetry.
Report k0(int max_m);
/// Chebyshev identities for m, n <= max.
Report chebyshev(int max);
/// φ of essential circles on 0..max_k strands is zero and D^2 ess-equals -id_1.
Report quotient_relations(int max_k);

struct RandomConfig {
    int cases = 1000;
    int max_len = 12;
    int max_strands = 5;
    std::uint64_t seed = 20240611;
};
/// Round-trip, associativity, functoriality and tensor interchange on random words.
Report randomized(const RandomConfig& cfg);

/// Names accepted by run().
const std::vector<std::string>& names();
/// Dispatches a named suite; "all" runs every one with the same bound.
/// Throws std::invalid_argument for unknown names.
Report run(const std::string& name, int max);

} // namespace atl::suites

#endif // ATL_SUITES_HPP
