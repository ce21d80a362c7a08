#include "atl/hybrid.hpp"

#include <stdexcept>

#include "atl/canon.hpp"

namespace atl {

HybridLimits& hybrid_limits() {
    static HybridLimits limits;
    return limits;
}

Hybrid::Hybrid(Morphism m) : dom_(m.dom()), cod_(m.cod()), mor_(std::move(m)) {}

Hybrid Hybrid::from_image(WeightMap w) {
    Hybrid h;
    h.dom_ = w.dom_len();
    h.cod_ = w.cod_len();
    h.img_ = std::make_shared<const WeightMap>(std::move(w));
    return h;
}

const Morphism& Hybrid::morphism() const {
    if (!mor_) throw std::logic_error("morphism known only through its phi image");
    return *mor_;
}

const WeightMap& Hybrid::image() const {
    if (!img_) img_ = std::make_shared<const WeightMap>(phi(*mor_));
    return *img_;
}

namespace {

std::size_t smoothings(const Morphism& x) {
    std::size_t total = 0;
    for (const auto& [d, c] : x.terms()) total += std::size_t{1} << std::min(d.seam() + d.ess(), 40);
    return total;
}

std::size_t binomial(int n, int k) {
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

} // namespace

Hybrid simplify(const Hybrid& x) {
    if (!x.has_diagrams()) return x;
    const int points = x.dom() + x.cod();
    if (points % 2 || points > hybrid_limits().reduce_max_points) return x;
    if (x.morphism().size() <= binomial(points, points / 2)) return x;
    return ess_reduce(x.morphism());
}

Hybrid compose(const Hybrid& x, const Hybrid& y) {
    if (y.cod() != x.dom()) throw std::invalid_argument("compose: arity mismatch");
    if (x.has_diagrams() && y.has_diagrams() &&
        x.morphism().size() * y.morphism().size() <= hybrid_limits().compose_pairs)
        return simplify(compose(x.morphism(), y.morphism()));
    return Hybrid::from_image(wm_mul(x.image(), y.image()));
}

Hybrid operator+(const Hybrid& x, const Hybrid& y) {
    if (x.has_diagrams() && y.has_diagrams()) return simplify(x.morphism() + y.morphism());
    return Hybrid::from_image(x.image() + y.image());
}

Hybrid operator-(const Hybrid& x, const Hybrid& y) { return x + Scalar(-1) * y; }

Hybrid operator*(const Scalar& c, const Hybrid& x) {
    if (x.has_diagrams()) return c * x.morphism();
    return Hybrid::from_image(x.image() * c);
}

Hybrid iota(const Hybrid& x) {
    if (x.has_diagrams() && smoothings(x.morphism()) <= hybrid_limits().iota_terms)
        return simplify(iota(x.morphism()));
    return Hybrid::from_image(wm_tensor(x.image(), WeightMap::identity(1)));
}

Hybrid iota_prime(const Hybrid& x) {
    if (x.has_diagrams() && smoothings(x.morphism()) <= hybrid_limits().iota_terms)
        return simplify(iota_prime(x.morphism()));
    return Hybrid::from_image(wm_tensor(WeightMap::identity(1), x.image()));
}

Hybrid iota_pow(const Hybrid& x, int times) {
    Hybrid r = x;
    for (int k = 0; k < times; ++k) r = iota(r);
    return r;
}

Hybrid iota_prime_pow(const Hybrid& x, int times) {
    Hybrid r = x;
    for (int k = 0; k < times; ++k) r = iota_prime(r);
    return r;
}

Hybrid tensor(const Hybrid& x, const Hybrid& y) {
    return compose(iota_pow(x, y.cod()), iota_prime_pow(y, x.dom()));
}

bool ess_equal(const Hybrid& x, const Hybrid& y) {
    if (x.dom() != y.dom() || x.cod() != y.cod()) return false;
    return wm_eq(x.image(), y.image());
}

bool is_zero(const Hybrid& x) { return x.image().is_zero(); }

} // namespace atl
