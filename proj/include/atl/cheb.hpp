#ifndef ATL_CHEB_HPP
#define ATL_CHEB_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "atl/report.hpp"

namespace atl {

/// Integer polynomial in X, coefficient k at X^k, no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(long c); // NOLINT(google-explicit-constructor)
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    static IntPolynomial x();

    const std::vector<mpz_class>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    mpz_class eval(const mpz_class& at) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

    /// Dense form, highest degree first: "X^4-4X^2+2", "0" for zero.
    std::string text() const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

/// L_0 = 2, L_1 = X, L_m = X L_{m-1} - L_{m-2}.
IntPolynomial cheb_first(int m);
/// J_0 = 1, J_1 = X, same recursion.
IntPolynomial cheb_second(int m);

/// L_m L_n = L_{m+n} + L_{|m-n|} and J_m J_n = J_{m+n} + J_{m+n-2} + ... + J_{|m-n|}.
bool verify_mult(int m, int n);
/// J_m = L_m + J_{m-2}, with J_{-1} = 0 and J_{-2} = -1.
bool verify_basis_change(int m);
Report chebyshev_report(int max);

/// T_m ⊗ T_n ≡ T_{m+n} + e_{m,n}, rank φ(T_m⊗T_n) = rank φ(T_{m+n}) + rank φ(e_{m,n}),
/// and the matching identity L_m L_n = L_{m+n} + L_{|m-n|}.
Report decat_check(int m, int n);
/// s2_conjugate fixes φ of T_m, e_{m,n} and the twisted isomorphism data, m, n <= max.
Report symmetric_check(int max);

} // namespace atl

#endif // ATL_CHEB_HPP
