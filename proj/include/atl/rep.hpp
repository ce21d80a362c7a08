#ifndef ATL_REP_HPP
#define ATL_REP_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "atl/diagram.hpp"
#include "atl/morphism.hpp"
#include "atl/scalar.hpp"

namespace atl {

/// Basis vector v_{e_1...e_n} of V^{⊗n} stored as an integer: position j is
/// bit n-1-j and '-' is 1, so numeric order is lexicographic order with + < -.
using BasisIndex = std::uint32_t;

std::string sign_string(BasisIndex index, int length);
/// Throws std::invalid_argument on characters other than + and -.
BasisIndex parse_sign_string(const std::string& signs);
/// (#+) - (#-).
int weight(BasisIndex index, int length);

/// Exact sparse weight-preserving map V^{⊗dom} -> V^{⊗cod}.
class WeightMap {
public:
    using Key = std::pair<BasisIndex, BasisIndex>; // (row, col)

    WeightMap() = default;
    WeightMap(int dom_len, int cod_len) : dom_(dom_len), cod_(cod_len) {}

    static WeightMap identity(int n);
    /// Builds from (row, col) -> value pairs, summing duplicates.
    static WeightMap from_entries(int dom_len, int cod_len, std::vector<std::pair<Key, Scalar>> entries);

    int dom_len() const { return dom_; }
    int cod_len() const { return cod_; }
    const std::map<Key, Scalar>& entries() const { return entries_; }
    Scalar at(BasisIndex row, BasisIndex col) const;
    bool is_zero() const { return entries_.empty(); }
    /// True when every nonzero entry joins basis vectors of equal weight.
    bool weight_preserving() const;

    WeightMap& operator+=(const WeightMap& o);
    WeightMap& operator*=(const Scalar& c);
    friend WeightMap operator+(WeightMap a, const WeightMap& b) { return a += b; }
    friend WeightMap operator-(WeightMap a, const WeightMap& b) { return a += b * Scalar(-1); }
    friend WeightMap operator*(WeightMap a, const Scalar& c) { return a *= c; }

    friend bool operator==(const WeightMap&, const WeightMap&) = default;

private:
    int dom_ = 0;
    int cod_ = 0;
    std::map<Key, Scalar> entries_;
};

/// a·b (b applied first).  Throws std::invalid_argument on arity mismatch.
WeightMap wm_mul(const WeightMap& a, const WeightMap& b);
WeightMap wm_tensor(const WeightMap& a, const WeightMap& b);
/// Exact rank over Q(i), computed blockwise by weight with fraction-free
/// elimination over Z[i].
int wm_rank(const WeightMap& a);
bool wm_eq(const WeightMap& a, const WeightMap& b);
/// Conjugation by the global sign flip.
WeightMap s2_conjugate(const WeightMap& a);
/// Diagonal projector onto v_{+^m} and v_{-^m}.
WeightMap extremal_matrix(int m);
/// Rank-one projector onto v_{+^m} (plus = true) or v_{-^m}.
WeightMap extreme_vector_projector(int m, bool plus);

/// One generator: cap_i or cup_i (1-based, as in diagrams::cap/cup) on `arity`
/// input strands, or D^{power} on `arity` strands.
struct Letter {
    enum class Kind { cap, cup, rotation };
    Kind kind;
    int arity;
    int index; // cap/cup position, or the power (+1/-1) for rotation

    int output_arity() const;
    friend bool operator==(const Letter&, const Letter&) = default;
};

std::string letter_text(const Letter& l);

/// Letters in application order (first letter applied first).
struct GeneratorWord {
    int dom = 0;
    std::vector<Letter> letters;

    int cod() const { return letters.empty() ? dom : letters.back().output_arity(); }
};

/// Factorizes a canonical diagram without essential circles into generators.
/// Throws std::invalid_argument for diagrams carrying essential circles and
/// std::runtime_error if the bounded search fails.
GeneratorWord factorize(const AnnularDiagram& w);
/// Composes the letters, returning the result with its loop counts.
Reduction recompose(const GeneratorWord& word);

WeightMap phi_generator(const Letter& g);
/// φ of one diagram; zero for diagrams with essential circles.  Memoized.
WeightMap phi(const AnnularDiagram& d);
WeightMap phi(const Morphism& x);

/// Entry of φ(d) for a single diagram; these are always Gaussian integers.
struct IntegralEntry {
    BasisIndex row;
    BasisIndex col;
    long re;
    long im;
};
std::vector<IntegralEntry> phi_integral(const AnnularDiagram& d);

} // namespace atl

#endif // ATL_REP_HPP
