#ifndef ATL_SCALAR_HPP
#define ATL_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace atl {

/// Exact element a + b·i of the Gaussian rationals Q(i).
///
/// Both parts are kept canonical (lowest terms, positive denominator), so
/// structural equality is field equality.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {} // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class re, mpq_class im = 0);

    static GaussianRational i() { return {0, 1}; }
    static GaussianRational fraction(long num, long den, bool imaginary = false);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    /// Lexicographic on (re, im); only used for deterministic containers.
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

    std::size_t hash() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

using Scalar = GaussianRational;

/// Parses `sign? rat (sign rat? "i")?`, plus the pure imaginary forms `3/4i`, `-i`.
/// Throws std::invalid_argument on malformed text or a zero denominator.
GaussianRational parse_scalar(std::string_view text);

/// Canonical text: `1/2+1/2i`, `-2`, `3/4i`, `i`, `-i`, `0`.
std::string format_scalar(const GaussianRational& a);

/// (-2)^k, the value of k inessential circles.
GaussianRational loop_factor(int k);

} // namespace atl

template <>
struct std::hash<atl::GaussianRational> {
    std::size_t operator()(const atl::GaussianRational& a) const noexcept { return a.hash(); }
};

#endif // ATL_SCALAR_HPP
