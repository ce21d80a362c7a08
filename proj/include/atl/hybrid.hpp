#ifndef ATL_HYBRID_HPP
#define ATL_HYBRID_HPP

#include <cstddef>
#include <memory>
#include <optional>

#include "atl/morphism.hpp"
#include "atl/rep.hpp"

namespace atl {

/// Size limits past which an operation is carried out on φ images instead
/// of diagrams.  φ is faithful on the quotient, so the result is the same
/// element either way.
struct HybridLimits {
    std::size_t compose_pairs = 4'000'000; // |x|·|y| diagram pairs
    std::size_t iota_terms = 400'000;      // smoothings produced by one ι
    int reduce_max_points = 12;            // ess_reduce when dom + cod is at most this
};

HybridLimits& hybrid_limits();

/// Quotient-mode morphism held as diagrams while that stays affordable and
/// as its φ image afterwards.
class Hybrid {
public:
    Hybrid() = default;
    Hybrid(Morphism m); // NOLINT(google-explicit-constructor)
    static Hybrid from_image(WeightMap w);

    int dom() const { return dom_; }
    int cod() const { return cod_; }
    bool has_diagrams() const { return mor_.has_value(); }
    /// Throws std::logic_error when only the image is known.
    const Morphism& morphism() const;
    const WeightMap& image() const;

private:
    int dom_ = 0;
    int cod_ = 0;
    std::optional<Morphism> mor_;
    mutable std::shared_ptr<const WeightMap> img_;
};

Hybrid compose(const Hybrid& x, const Hybrid& y);
Hybrid operator+(const Hybrid& x, const Hybrid& y);
Hybrid operator-(const Hybrid& x, const Hybrid& y);
Hybrid operator*(const Scalar& c, const Hybrid& x);
Hybrid iota(const Hybrid& x);
Hybrid iota_prime(const Hybrid& x);
Hybrid iota_pow(const Hybrid& x, int times);
Hybrid iota_prime_pow(const Hybrid& x, int times);
Hybrid tensor(const Hybrid& x, const Hybrid& y);
/// Composes right to left: chain(a, b, c) = a ∘ b ∘ c.
template <typename... Rest>
Hybrid chain(const Hybrid& first, const Rest&... rest) {
    if constexpr (sizeof...(rest) == 0) return first;
    else return compose(first, chain(rest...));
}
/// ess_reduce when the hom space is small enough and the term count exceeds its dimension.
Hybrid simplify(const Hybrid& x);
bool ess_equal(const Hybrid& x, const Hybrid& y);
bool is_zero(const Hybrid& x);

} // namespace atl

#endif // ATL_HYBRID_HPP
