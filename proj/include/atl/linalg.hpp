#ifndef ATL_LINALG_HPP
#define ATL_LINALG_HPP

#include <optional>
#include <vector>

#include "atl/scalar.hpp"

namespace atl::linalg {

using Matrix = std::vector<std::vector<Scalar>>;

/// Exact rank: rows are scaled into Z[i] and reduced by Bareiss elimination.
int rank(const Matrix& a);

/// Unique solution of a·x = b, or nullopt when a has a kernel or the system
/// is inconsistent.  Gauss-Jordan over Q(i).
std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b);

} // namespace atl::linalg

#endif // ATL_LINALG_HPP
