#include "atl/canon.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "atl/linalg.hpp"
#include "atl/rep.hpp"

namespace atl {

std::string label_text(const LabelString& ls) {
    std::string s;
    for (Label l : ls) s += l == Label::in ? 'i' : 'o';
    return s;
}

LabelString parse_labels(const std::string& text) {
    LabelString ls;
    for (char c : text) {
        if (c == 'i') ls.push_back(Label::in);
        else if (c == 'o') ls.push_back(Label::out);
        else throw std::invalid_argument("label string: expected 'i' or 'o', got '" + std::string(1, c) + "'");
    }
    return ls;
}

AnnularDiagram matching_from_labels(const LabelString& ls) {
    const int len = static_cast<int>(ls.size());
    if (std::count(ls.begin(), ls.end(), Label::in) * 2 != len)
        throw std::invalid_argument("unbalanced label string '" + label_text(ls) + "'");
    RawDiagram raw{0, len, 0, 0, {}};
    std::vector<int> stack, open_outs;
    for (int p = 0; p < len; ++p) {
        if (ls[static_cast<std::size_t>(p)] == Label::in) {
            stack.push_back(p);
        } else if (!stack.empty()) {
            raw.arcs.push_back({{Side::outer, stack.back()}, {Side::outer, p}});
            stack.pop_back();
        } else {
            open_outs.push_back(p);
        }
    }
    // Leftover pattern is out^a ... in^a; those arcs wrap across the base point.
    const int a = static_cast<int>(open_outs.size());
    raw.seam = a;
    for (int t = 0; t < a; ++t) {
        int out = open_outs[static_cast<std::size_t>(t)];
        int in = stack[static_cast<std::size_t>(a - 1 - t)];
        int j = a - 1 - t;
        raw.arcs.push_back({{Side::outer, out}, {Side::left, j}});
        raw.arcs.push_back({{Side::right, j}, {Side::outer, in}});
    }
    return canonicalize(raw).diagram;
}

LabelString labels_from_matching(const AnnularDiagram& d) {
    if (d.dom() != 0 || d.ess() != 0)
        throw std::invalid_argument("labels_from_matching: expected a diagram in hom(0, 2n) without essential circles");
    LabelString ls(static_cast<std::size_t>(d.cod()), Label::in);
    std::vector<bool> seen(static_cast<std::size_t>(d.cod()), false);
    for (int a = 0; a < d.cod(); ++a) {
        if (seen[static_cast<std::size_t>(a)]) continue;
        Point p = d.partner({Side::outer, a});
        int wraps = 0;
        while (p.side != Side::outer) {
            if (p.side == Side::inner) throw std::logic_error("through strand in hom(0, 2n)");
            p = d.partner({p.side == Side::left ? Side::right : Side::left, p.index});
            ++wraps;
        }
        int b = p.index;
        if (wraps > 1) throw std::logic_error("arc wraps more than once in hom(0, 2n)");
        seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = true;
        int lo = std::min(a, b), hi = std::max(a, b);
        ls[static_cast<std::size_t>(wraps ? hi : lo)] = Label::in;
        ls[static_cast<std::size_t>(wraps ? lo : hi)] = Label::out;
    }
    return ls;
}

std::vector<LabelString> enumerate_labels(int two_n) {
    if (two_n < 0 || two_n % 2) throw std::invalid_argument("enumerate_labels: length must be even");
    std::vector<LabelString> out;
    LabelString cur;
    auto rec = [&](auto&& self, int ins, int outs) -> void {
        if (ins == 0 && outs == 0) {
            out.push_back(cur);
            return;
        }
        if (ins > 0) {
            cur.push_back(Label::in);
            self(self, ins - 1, outs);
            cur.pop_back();
        }
        if (outs > 0) {
            cur.push_back(Label::out);
            self(self, ins, outs - 1);
            cur.pop_back();
        }
    };
    rec(rec, two_n / 2, two_n / 2);
    return out;
}

std::vector<AnnularDiagram> enumerate_basis(int two_n) {
    std::vector<AnnularDiagram> out;
    for (const auto& ls : enumerate_labels(two_n)) out.push_back(matching_from_labels(ls));
    return out;
}

Morphism f_apply(const Morphism& x, Mode mode) {
    const int a = x.dom();
    return compose(iota_pow(x, a, mode), gen::nested_cups(a), mode);
}

Morphism f_inverse(const Morphism& y, int m, Mode mode) {
    if (y.dom() != 0) throw std::invalid_argument("f_inverse: expected a morphism out of 0");
    const int a = y.cod() - m;
    if (a < 0) throw std::invalid_argument("f_inverse: target has more points than the source");
    return compose(iota_prime_pow(gen::nested_caps(a), m, mode), iota_pow(y, a, mode), mode);
}

namespace {

std::vector<BasisIndex> zero_weight_vectors(int len) {
    std::vector<BasisIndex> out;
    for (BasisIndex v = 0; v < (BasisIndex{1} << len); ++v)
        if (weight(v, len) == 0) out.push_back(v);
    return out;
}

} // namespace

std::vector<Scalar> coordinates(const Morphism& x) {
    const int len = x.dom() + x.cod();
    if (len % 2) return {};
    const auto basis = enumerate_basis(len);
    const auto rows = zero_weight_vectors(len);
    linalg::Matrix a(rows.size(), std::vector<Scalar>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        WeightMap w = phi(basis[j]);
        for (std::size_t r = 0; r < rows.size(); ++r) a[r][j] = w.at(rows[r], 0);
    }
    WeightMap target = phi(f_apply(x));
    std::vector<Scalar> b(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) b[r] = target.at(rows[r], 0);
    auto sol = linalg::solve(a, b);
    if (!sol) throw std::logic_error("coordinates: basis images are dependent or the system is inconsistent");
    return *sol;
}

std::vector<Scalar> basis_expansion(const Morphism& x) {
    const int len = x.dom() + x.cod();
    if (len % 2) return {};
    const auto basis = enumerate_basis(len);
    std::unordered_map<AnnularDiagram, std::size_t> index;
    for (std::size_t j = 0; j < basis.size(); ++j) index.emplace(basis[j], j);
    std::vector<Scalar> out(basis.size());
    const Morphism y = quotient(f_apply(x));
    for (const auto& [d, c] : y.terms()) {
        auto it = index.find(d);
        if (it == index.end()) throw std::logic_error("basis_expansion: term outside the canonical basis");
        out[it->second] = c;
    }
    return out;
}

bool ess_equal(const Morphism& x, const Morphism& y) {
    if (x.dom() != y.dom() || x.cod() != y.cod()) return false;
    return wm_eq(phi(x), phi(y));
}

// ---------------------------------------------------------------------------
// Modular reduction onto a low-seam basis

namespace {

struct PrimeData {
    std::uint64_t p;
    std::uint64_t root; // a square root of -1
};

constexpr std::array<PrimeData, 8> kPrimes{{
    {2147483629ULL, 629208553ULL},
    {2147483549ULL, 895500278ULL},
    {2147483497ULL, 415680079ULL},
    {2147483489ULL, 625866212ULL},
    {2147483477ULL, 833330490ULL},
    {2147483353ULL, 520788222ULL},
    {2147483269ULL, 26476420ULL},
    {2147483249ULL, 207203101ULL},
}};

template <std::uint64_t P>
struct Fp {
    static std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return a * b % P; }
    static std::uint64_t add(std::uint64_t a, std::uint64_t b) { return (a + b) % P; }
    static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return (a + P - b) % P; }
    static std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        for (; e; e >>= 1, a = mul(a, a))
            if (e & 1) r = mul(r, a);
        return r;
    }
    static std::uint64_t inv(std::uint64_t a) { return pow(a, P - 2); }
};

template <typename F>
auto with_prime(std::size_t k, F&& f) {
    switch (k) {
    case 0: return f.template operator()<kPrimes[0].p>();
    case 1: return f.template operator()<kPrimes[1].p>();
    case 2: return f.template operator()<kPrimes[2].p>();
    case 3: return f.template operator()<kPrimes[3].p>();
    case 4: return f.template operator()<kPrimes[4].p>();
    case 5: return f.template operator()<kPrimes[5].p>();
    case 6: return f.template operator()<kPrimes[6].p>();
    default: return f.template operator()<kPrimes[7].p>();
    }
}

std::uint64_t reduce_long(long v, std::uint64_t p) {
    long r = v % static_cast<long>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(p) : r);
}

std::optional<std::uint64_t> reduce_rational(const mpq_class& q, std::uint64_t p) {
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class num = q.get_num() % pz, den = q.get_den() % pz;
    if (num < 0) num += pz;
    if (den == 0) return std::nullopt;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    mpz_class r = num * inv % pz;
    return r.get_ui();
}

/// Square LU factorisation with row pivoting over F_P.
struct LU {
    std::size_t n = 0;
    std::vector<std::uint64_t> a; // row-major, L below the diagonal (unit), U on and above
    std::vector<std::size_t> perm;
    bool singular = false;
};

template <std::uint64_t P>
LU factor(std::vector<std::uint64_t> a, std::size_t n) {
    using F = Fp<P>;
    LU lu{n, {}, {}, false};
    lu.perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) lu.perm[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv * n + k] == 0) ++piv;
        if (piv == n) {
            lu.singular = true;
            return lu;
        }
        if (piv != k) {
            std::swap_ranges(a.begin() + static_cast<long>(piv * n), a.begin() + static_cast<long>(piv * n + n),
                             a.begin() + static_cast<long>(k * n));
            std::swap(lu.perm[piv], lu.perm[k]);
        }
        const std::uint64_t inv = F::inv(a[k * n + k]);
        const std::uint64_t* rk = &a[k * n];
        for (std::size_t i = k + 1; i < n; ++i) {
            std::uint64_t* ri = &a[i * n];
            if (ri[k] == 0) continue;
            const std::uint64_t f = F::mul(ri[k], inv);
            ri[k] = f;
            const std::uint64_t nf = P - f;
            for (std::size_t j = k + 1; j < n; ++j) ri[j] = (ri[j] + nf * rk[j]) % P;
        }
    }
    lu.a = std::move(a);
    return lu;
}

template <std::uint64_t P>
std::vector<std::uint64_t> lu_solve(const LU& lu, const std::vector<std::uint64_t>& b) {
    using F = Fp<P>;
    const std::size_t n = lu.n;
    std::vector<std::uint64_t> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = b[lu.perm[i]];
        for (std::size_t j = 0; j < i; ++j) s = F::sub(s, F::mul(lu.a[i * n + j], y[j]));
        y[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        std::uint64_t s = y[i];
        for (std::size_t j = i + 1; j < n; ++j) s = F::sub(s, F::mul(lu.a[i * n + j], y[j]));
        y[i] = F::mul(s, F::inv(lu.a[i * n + i]));
    }
    return y;
}

/// All noncrossing perfect matchings of `count` points on a circle.
void noncrossing_matchings(int lo, int hi, std::vector<std::pair<int, int>>& cur,
                           const std::function<void()>& emit) {
    if (lo > hi) {
        emit();
        return;
    }
    for (int k = lo + 1; k <= hi; k += 2) {
        cur.push_back({lo, k});
        std::function<void()> rest = [&] { noncrossing_matchings(k + 1, hi, cur, emit); };
        noncrossing_matchings(lo + 1, k - 1, cur, rest);
        cur.pop_back();
    }
}

Point cycle_point(int pos, int m, int n, int s) {
    if (pos < m) return {Side::inner, pos};
    pos -= m;
    if (pos < s) return {Side::right, pos};
    pos -= s;
    if (pos < n) return {Side::outer, n - 1 - pos};
    pos -= n;
    return {Side::left, s - 1 - pos};
}

struct Basis {
    int m = 0;
    int n = 0;
    std::vector<AnnularDiagram> diagrams;
    std::unordered_map<std::uint64_t, std::size_t> position; // (row << 32 | col) -> row of the system
    std::vector<std::uint64_t> positions;
    // Per prime, the two embeddings i -> +root and i -> -root.
    std::map<std::pair<std::size_t, int>, LU> factors;
};

std::uint64_t key(BasisIndex row, BasisIndex col) { return (std::uint64_t{row} << 32) | col; }

template <std::uint64_t P>
std::vector<std::uint64_t> column_mod(const Basis& b, const AnnularDiagram& d, std::uint64_t root) {
    std::vector<std::uint64_t> v(b.positions.size(), 0);
    for (const auto& e : phi_integral(d)) {
        auto it = b.position.find(key(e.row, e.col));
        if (it == b.position.end()) throw std::logic_error("phi image leaves the weight-preserving positions");
        v[it->second] = Fp<P>::add(reduce_long(e.re, P), Fp<P>::mul(reduce_long(e.im, P), root));
    }
    return v;
}

std::unique_ptr<Basis> build_basis(int m, int n) {
    auto b = std::make_unique<Basis>();
    b->m = m;
    b->n = n;
    for (BasisIndex col = 0; col < (BasisIndex{1} << m); ++col)
        for (BasisIndex row = 0; row < (BasisIndex{1} << n); ++row)
            if (weight(row, n) == weight(col, m)) {
                b->position.emplace(key(row, col), b->positions.size());
                b->positions.push_back(key(row, col));
            }
    const std::size_t target = b->positions.size();
    if ((m + n) % 2 || target == 0) return b;

    // Greedy independent selection modulo the first prime, lowest seam first.
    constexpr std::uint64_t P = kPrimes[0].p;
    const std::uint64_t root = kPrimes[0].root;
    std::vector<std::vector<std::uint64_t>> echelon;
    std::vector<std::size_t> pivots;
    std::unordered_set<AnnularDiagram> tried;
    const int max_seam = m + n + 2;
    for (int s = 0; s <= max_seam && b->diagrams.size() < target; ++s) {
        const int count = m + n + 2 * s;
        std::vector<std::pair<int, int>> cur;
        std::vector<AnnularDiagram> level;
        std::function<void()> emit = [&] {
            if (b->diagrams.size() + level.size() >= 4 * target) return;
            RawDiagram raw{m, n, s, 0, {}};
            for (auto [x, y] : cur) {
                Point p = cycle_point(x, m, n, s), q = cycle_point(y, m, n, s);
                if ((p.side == Side::left && q.side == Side::right) || (p.side == Side::right && q.side == Side::left))
                    if (p.index == q.index) return;
                raw.arcs.push_back({p, q});
            }
            Reduction r = canonicalize(raw);
            if (r.inessential || r.essential || r.diagram.seam() != s) return;
            if (tried.insert(r.diagram).second) level.push_back(r.diagram);
        };
        noncrossing_matchings(0, count - 1, cur, emit);
        std::sort(level.begin(), level.end());
        for (const auto& d : level) {
            if (b->diagrams.size() == target) break;
            auto v = column_mod<P>(*b, d, root);
            for (std::size_t k = 0; k < echelon.size(); ++k) {
                std::uint64_t f = v[pivots[k]];
                if (f == 0) continue;
                const auto& row = echelon[k];
                const std::uint64_t nf = P - f;
                for (std::size_t j = 0; j < target; ++j)
                    if (row[j]) v[j] = (v[j] + nf * row[j]) % P;
            }
            std::size_t piv = 0;
            while (piv < target && v[piv] == 0) ++piv;
            if (piv == target) continue;
            const std::uint64_t inv = Fp<P>::inv(v[piv]);
            for (auto& x : v) x = Fp<P>::mul(x, inv);
            echelon.push_back(std::move(v));
            pivots.push_back(piv);
            b->diagrams.push_back(d);
        }
    }
    if (b->diagrams.size() != target)
        throw std::runtime_error("reduction basis: found only " + std::to_string(b->diagrams.size()) + " of " +
                                 std::to_string(target) + " independent diagrams");
    return b;
}

std::mutex& basis_mutex() {
    static std::mutex m;
    return m;
}

Basis& basis_for(int m, int n) {
    static std::map<std::pair<int, int>, std::unique_ptr<Basis>> cache;
    auto& slot = cache[{m, n}];
    if (!slot) slot = build_basis(m, n);
    return *slot;
}

const LU& factor_for(Basis& b, std::size_t prime, int sign) {
    auto it = b.factors.find({prime, sign});
    if (it != b.factors.end()) return it->second;
    const std::size_t n = b.positions.size();
    LU lu = with_prime(prime, [&]<std::uint64_t P>() {
        std::uint64_t root = sign > 0 ? kPrimes[prime].root : P - kPrimes[prime].root;
        std::vector<std::uint64_t> a(n * n);
        for (std::size_t j = 0; j < n; ++j) {
            auto col = column_mod<P>(b, b.diagrams[j], root);
            for (std::size_t i = 0; i < n; ++i) a[i * n + j] = col[i];
        }
        return factor<P>(std::move(a), n);
    });
    return b.factors.emplace(std::pair{prime, sign}, std::move(lu)).first->second;
}

/// Smallest |num|/den congruent to r modulo mod, if one exists with both
/// parts below sqrt(mod / 2).
std::optional<mpq_class> reconstruct(const mpz_class& r, const mpz_class& mod) {
    mpz_class bound;
    mpz_class half = mod / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = mod, r1 = r, t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    mpq_class q(r1, t1);
    q.canonicalize();
    return q;
}

} // namespace

const std::vector<AnnularDiagram>& reduction_basis(int m, int n) {
    std::lock_guard<std::mutex> lock(basis_mutex());
    return basis_for(m, n).diagrams;
}

Morphism ess_reduce(const Morphism& x) {
    const WeightMap target = phi(x);
    std::lock_guard<std::mutex> lock(basis_mutex());
    Basis& b = basis_for(x.dom(), x.cod());
    const std::size_t n = b.positions.size();
    if (target.is_zero() || b.diagrams.empty()) return Morphism(x.dom(), x.cod());

    // Residues of the real and imaginary coordinate parts, combined by CRT.
    std::vector<mpz_class> re(n), im(n);
    mpz_class modulus = 1;
    for (std::size_t prime = 0; prime < kPrimes.size(); ++prime) {
        const std::uint64_t p = kPrimes[prime].p;
        std::vector<std::uint64_t> rhs_re(n, 0), rhs_im(n, 0);
        bool usable = true;
        for (const auto& [k, v] : target.entries()) {
            auto it = b.position.find(key(k.first, k.second));
            if (it == b.position.end()) throw std::logic_error("ess_reduce: phi image is not weight preserving");
            auto r = reduce_rational(v.re(), p), i = reduce_rational(v.im(), p);
            if (!r || !i) {
                usable = false;
                break;
            }
            rhs_re[it->second] = *r;
            rhs_im[it->second] = *i;
        }
        if (!usable) continue;
        const LU& plus = factor_for(b, prime, +1);
        const LU& minus = factor_for(b, prime, -1);
        if (plus.singular || minus.singular) continue;
        auto parts = with_prime(prime, [&]<std::uint64_t P>() {
            using F = Fp<P>;
            const std::uint64_t root = kPrimes[prime].root;
            std::vector<std::uint64_t> bp(n), bm(n);
            for (std::size_t i = 0; i < n; ++i) {
                bp[i] = F::add(rhs_re[i], F::mul(rhs_im[i], root));
                bm[i] = F::sub(rhs_re[i], F::mul(rhs_im[i], root));
            }
            auto u = lu_solve<P>(plus, bp), w = lu_solve<P>(minus, bm);
            const std::uint64_t half = F::inv(2), inv2r = F::inv(F::mul(2, root));
            std::vector<std::pair<std::uint64_t, std::uint64_t>> out(n);
            for (std::size_t i = 0; i < n; ++i)
                out[i] = {F::mul(F::add(u[i], w[i]), half), F::mul(F::sub(u[i], w[i]), inv2r)};
            return out;
        });
        mpz_class pz(static_cast<unsigned long>(p));
        for (std::size_t i = 0; i < n; ++i) {
            for (int part = 0; part < 2; ++part) {
                mpz_class& acc = part == 0 ? re[i] : im[i];
                mpz_class r(static_cast<unsigned long>(part == 0 ? parts[i].first : parts[i].second));
                // acc ≡ old mod modulus, acc ≡ r mod p
                mpz_class diff = r - acc, inv;
                mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
                mpz_class t = diff * inv % pz;
                if (t < 0) t += pz;
                acc += modulus * t;
            }
        }
        modulus *= pz;

        std::vector<Morphism::Term> terms;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            auto a = reconstruct(re[i], modulus), c = reconstruct(im[i], modulus);
            if (!a || !c) {
                ok = false;
                break;
            }
            Scalar s(*a, *c);
            if (!s.is_zero()) terms.emplace_back(b.diagrams[i], s);
        }
        if (!ok) continue;
        Morphism candidate = Morphism::from_terms(x.dom(), x.cod(), std::move(terms));
        if (wm_eq(phi(candidate), target)) return candidate;
    }
    throw std::runtime_error("ess_reduce: coefficients not recovered within the prime budget");
}

} // namespace atl
