#ifndef ATL_CANON_HPP
#define ATL_CANON_HPP

#include <string>
#include <vector>

#include "atl/diagram.hpp"
#include "atl/morphism.hpp"
#include "atl/scalar.hpp"

namespace atl {

enum class Label : unsigned char { in, out };
using LabelString = std::vector<Label>;

/// "io" spelling: 'i' for in, 'o' for out.
std::string label_text(const LabelString& ls);
LabelString parse_labels(const std::string& text);

/// Outer points of hom(0, 2n), labelled by clockwise orientation of each arc:
/// in at the tail, out at the head.  Throws std::invalid_argument when the
/// labels are unbalanced.
AnnularDiagram matching_from_labels(const LabelString& ls);
/// Inverse of matching_from_labels; the diagram must lie in hom(0, 2n)
/// without essential circles.
LabelString labels_from_matching(const AnnularDiagram& d);

/// Balanced label strings of length two_n, lexicographic with in < out.
std::vector<LabelString> enumerate_labels(int two_n);
/// Basis diagrams of hom(0, two_n) in label order.  Odd arguments throw.
std::vector<AnnularDiagram> enumerate_basis(int two_n);

/// (X ⊗ id_a) ∘ Cu_a for X: a -> m, landing in hom(0, a + m).
Morphism f_apply(const Morphism& x, Mode mode = Mode::quotient);
/// (id_m ⊗ Ca_a) ∘ (Y ⊗ id_a) with a = 2n - m, so f_inverse(f_apply(X), X.cod()) ess-equals X.
Morphism f_inverse(const Morphism& y, int m, Mode mode = Mode::quotient);

/// Coordinates of f_apply(X) on enumerate_basis(m + n), solved exactly from
/// the φ images.  Throws std::logic_error if the system is singular.
std::vector<Scalar> coordinates(const Morphism& x);
/// Same coordinates read directly off the ess-free terms of f_apply(X).
std::vector<Scalar> basis_expansion(const Morphism& x);

bool ess_equal(const Morphism& x, const Morphism& y);

/// An ess-equal morphism supported on a fixed set of C(m+n, (m+n)/2) diagrams
/// of low seam degree.  Coefficients are found modulo word-sized primes and
/// rebuilt by rational reconstruction; the result is checked exactly through
/// φ and std::runtime_error is thrown if no prime budget suffices.
Morphism ess_reduce(const Morphism& x);
/// The diagrams ess_reduce expands on, for hom(m, n).
const std::vector<AnnularDiagram>& reduction_basis(int m, int n);

} // namespace atl

#endif // ATL_CANON_HPP
