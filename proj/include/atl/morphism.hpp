#ifndef ATL_MORPHISM_HPP
#define ATL_MORPHISM_HPP

#include <string>
#include <utility>
#include <vector>

#include "atl/diagram.hpp"
#include "atl/scalar.hpp"

namespace atl {

/// Quotient mode drops every term carrying an essential circle; raw mode
/// keeps them in AnnularDiagram::ess.
enum class Mode { quotient, raw };

Mode parse_mode(const std::string& text);
std::string mode_name(Mode mode);

/// Finite Q(i)-linear combination of canonical diagrams with a common
/// domain and codomain.  Terms are kept sorted by diagram with no zero
/// coefficients, so structural equality is syntactic equality.
class Morphism {
public:
    using Term = std::pair<AnnularDiagram, Scalar>;

    Morphism() = default;
    Morphism(int dom, int cod) : dom_(dom), cod_(cod) {}
    explicit Morphism(const AnnularDiagram& d, const Scalar& c = 1);

    int dom() const { return dom_; }
    int cod() const { return cod_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Coefficient of `d`, zero when absent.
    Scalar coefficient(const AnnularDiagram& d) const;

    /// Builds from unsorted terms, merging duplicates and dropping zeros.
    static Morphism from_terms(int dom, int cod, std::vector<Term> terms);

    Morphism& operator+=(const Morphism& o);
    Morphism& operator-=(const Morphism& o);
    Morphism& operator*=(const Scalar& c);

    friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
    friend Morphism operator-(Morphism a, const Morphism& b) { return a -= b; }
    friend Morphism operator*(const Scalar& c, Morphism a) { return a *= c; }
    Morphism operator-() const;

    friend bool operator==(const Morphism&, const Morphism&) = default;

private:
    int dom_ = 0;
    int cod_ = 0;
    std::vector<Term> terms_;
};

/// x ∘ y (y applied first).  Throws std::invalid_argument on arity mismatch.
Morphism compose(const Morphism& x, const Morphism& y, Mode mode = Mode::quotient);
/// Composition in quotient mode.
inline Morphism operator*(const Morphism& x, const Morphism& y) { return compose(x, y); }
/// Drops terms with essential circles.
Morphism quotient(const Morphism& x);

bool syntactic_eq(const Morphism& x, const Morphism& y);

namespace gen {

Morphism id(int n);
/// U_i on n strands, i taken mod n; U_0 = D U_1 D^{-1}.
Morphism u(int n, int i);
/// D^{e} on n strands, e = +1 or -1.
Morphism d(int n, int e);
/// D^{p} for any integer power p.
Morphism d_pow(int n, int p);
Morphism cap(int n, int i);
Morphism cup(int n, int i);
/// s_i = id + U_i.
Morphism crossing(int n, int i);
/// Essential circle superposed on k through strands (raw mode value).
Morphism essential_circle(int k);
/// n nested caps on 2n strands (position j joined to 2n-1-j): 2n -> 0.
Morphism nested_caps(int n);
/// n nested cups: 0 -> 2n.
Morphism nested_cups(int n);

} // namespace gen

/// X ⊗ id_1, the strand superposed after the last boundary position.
Morphism iota(const Morphism& x, Mode mode = Mode::quotient);
/// id_1 ⊗ X = D^{-1} iota(X) D.
Morphism iota_prime(const Morphism& x, Mode mode = Mode::quotient);
Morphism iota_pow(const Morphism& x, int times, Mode mode = Mode::quotient);
Morphism iota_prime_pow(const Morphism& x, int times, Mode mode = Mode::quotient);
/// (X ⊗ id) ∘ (id ⊗ Y).
Morphism tensor(const Morphism& x, const Morphism& y, Mode mode = Mode::quotient);
/// Closes the last strand of an endomorphism of n+1 strands.
Morphism partial_trace(const Morphism& x, Mode mode = Mode::quotient);

} // namespace atl

#endif // ATL_MORPHISM_HPP
