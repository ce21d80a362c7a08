#include "atl/cheb.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

#include "atl/projectors.hpp"

namespace atl {

IntPolynomial::IntPolynomial(long c) : c_{mpz_class(c)} { trim(); }

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::x() { return IntPolynomial({0, 1}); }

void IntPolynomial::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

mpz_class IntPolynomial::eval(const mpz_class& at) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::text() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class& c = c_[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) continue;
        mpz_class mag = abs(c);
        if (sgn(c) < 0) s += '-';
        else if (!s.empty()) s += '+';
        if (k == 0 || mag != 1) s += mag.get_str();
        if (k >= 1) s += 'X';
        if (k >= 2) s += '^' + std::to_string(k);
    }
    return s;
}

namespace {

IntPolynomial recurrence(int m, const IntPolynomial& p0, const IntPolynomial& p1) {
    if (m < 0) throw std::invalid_argument("chebyshev index must be non-negative");
    if (m == 0) return p0;
    IntPolynomial a = p0, b = p1;
    for (int k = 2; k <= m; ++k) {
        IntPolynomial c = IntPolynomial::x() * b - a;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

IntPolynomial second_extended(int m) {
    if (m == -1) return 0;
    if (m == -2) return -1;
    return cheb_second(m);
}

} // namespace

IntPolynomial cheb_first(int m) { return recurrence(m, 2, IntPolynomial::x()); }
IntPolynomial cheb_second(int m) { return recurrence(m, 1, IntPolynomial::x()); }

bool verify_mult(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("verify_mult: negative index");
    bool first = cheb_first(m) * cheb_first(n) == cheb_first(m + n) + cheb_first(std::abs(m - n));
    IntPolynomial sum;
    for (int k = std::abs(m - n); k <= m + n; k += 2) sum += cheb_second(k);
    return first && cheb_second(m) * cheb_second(n) == sum;
}

bool verify_basis_change(int m) {
    if (m < 0) throw std::invalid_argument("verify_basis_change: negative index");
    return cheb_second(m) == cheb_first(m) + second_extended(m - 2);
}

Report chebyshev_report(int max) {
    Report r;
    bool rec = true, mult = true, basis = true;
    for (int m = 2; m <= max; ++m) {
        rec = rec && cheb_first(m) == IntPolynomial::x() * cheb_first(m - 1) - cheb_first(m - 2);
        rec = rec && cheb_second(m) == IntPolynomial::x() * cheb_second(m - 1) - cheb_second(m - 2);
    }
    for (int m = 0; m <= max; ++m) {
        basis = basis && verify_basis_change(m);
        for (int n = 0; n <= max; ++n) mult = mult && verify_mult(m, n);
    }
    const std::string range = " for m, n <= " + std::to_string(max);
    r.add("recursion X p_{m-1} - p_{m-2}" + range, rec);
    r.add("L_m L_n = L_{m+n} + L_{|m-n|}, J_m J_n = sum J" + range, mult);
    r.add("J_m = L_m + J_{m-2}" + range, basis);
    r.add("L_4 = " + cheb_first(4).text(), cheb_first(4).text() == "X^4-4X^2+2");
    return r;
}

Report decat_check(int m, int n) {
    Report r;
    const std::string tag = "k0(" + std::to_string(m) + "," + std::to_string(n) + ")";
    Hybrid p = tensor(extremal(m), extremal(n)), t = extremal(m + n), e = split_idempotent(m, n);
    r.add(tag + " T_m(x)T_n = T_{m+n} + e", ess_equal(p, t + e));
    const int rp = wm_rank(p.image()), rt = wm_rank(t.image()), re = wm_rank(e.image());
    r.add(tag + " rank " + std::to_string(rp) + " = " + std::to_string(rt) + " + " + std::to_string(re),
          rp == rt + re && rp == 4 && re == 2);
    r.add(tag + " L_m L_n = L_{m+n} + L_{|m-n|}",
          cheb_first(m) * cheb_first(n) == cheb_first(m + n) + cheb_first(std::abs(m - n)));
    return r;
}

Report symmetric_check(int max) {
    Report r;
    auto fixed = [](const Hybrid& h) { return wm_eq(s2_conjugate(h.image()), h.image()); };
    for (int m = 1; m <= max; ++m) r.add("s2 fixes phi(T_" + std::to_string(m) + ")", fixed(extremal(m)));
    for (int m = 1; m <= max; ++m)
        for (int n = 1; n <= max; ++n) {
            const std::string cell = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
            r.add("s2 fixes phi(e" + cell + ")", fixed(split_idempotent(m, n)));
            if (m != n) {
                IsoPair iso = iso_diff_twisted(m, n);
                r.add("s2 fixes twisted iso" + cell, fixed(iso.fwd) && fixed(iso.bwd));
            }
        }
    return r;
}

} // namespace atl
