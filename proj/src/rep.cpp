#include "atl/rep.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "atl/linalg.hpp"

namespace atl {

std::string sign_string(BasisIndex index, int length) {
    std::string s(static_cast<std::size_t>(length), '+');
    for (int j = 0; j < length; ++j)
        if ((index >> (length - 1 - j)) & 1U) s[static_cast<std::size_t>(j)] = '-';
    return s;
}

BasisIndex parse_sign_string(const std::string& signs) {
    if (signs.size() > 31) throw std::invalid_argument("sign string too long");
    BasisIndex v = 0;
    for (char c : signs) {
        if (c != '+' && c != '-') throw std::invalid_argument("bad sign string '" + signs + "'");
        v = (v << 1) | (c == '-' ? 1U : 0U);
    }
    return v;
}

int weight(BasisIndex index, int length) { return length - 2 * __builtin_popcount(index); }

// ---------------------------------------------------------------------------
// WeightMap

WeightMap WeightMap::identity(int n) {
    WeightMap w(n, n);
    for (BasisIndex x = 0; x < (BasisIndex{1} << n); ++x) w.entries_.emplace(Key{x, x}, Scalar(1));
    return w;
}

WeightMap WeightMap::from_entries(int dom_len, int cod_len, std::vector<std::pair<Key, Scalar>> entries) {
    WeightMap w(dom_len, cod_len);
    for (auto& [k, v] : entries) {
        if (v.is_zero()) continue;
        auto [it, fresh] = w.entries_.try_emplace(k, std::move(v));
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) w.entries_.erase(it);
        }
    }
    return w;
}

Scalar WeightMap::at(BasisIndex row, BasisIndex col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? Scalar(0) : it->second;
}

bool WeightMap::weight_preserving() const {
    for (const auto& [k, v] : entries_)
        if (weight(k.first, cod_) != weight(k.second, dom_)) return false;
    return true;
}

WeightMap& WeightMap::operator+=(const WeightMap& o) {
    if (dom_ != o.dom_ || cod_ != o.cod_) throw std::invalid_argument("weight map arity mismatch");
    for (const auto& [k, v] : o.entries_) {
        auto [it, fresh] = entries_.try_emplace(k, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }
    return *this;
}

WeightMap& WeightMap::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [k, v] : entries_) v *= c;
    return *this;
}

WeightMap wm_mul(const WeightMap& a, const WeightMap& b) {
    if (a.dom_len() != b.cod_len())
        throw std::invalid_argument("wm_mul: arity mismatch " + std::to_string(a.dom_len()) + " vs " +
                                    std::to_string(b.cod_len()));
    std::unordered_map<BasisIndex, std::vector<std::pair<BasisIndex, const Scalar*>>> a_by_col;
    for (const auto& [k, v] : a.entries()) a_by_col[k.second].emplace_back(k.first, &v);
    std::map<WeightMap::Key, Scalar> acc;
    for (const auto& [k, v] : b.entries()) {
        auto it = a_by_col.find(k.first);
        if (it == a_by_col.end()) continue;
        for (const auto& [row, av] : it->second) acc[{row, k.second}] += *av * v;
    }
    std::vector<std::pair<WeightMap::Key, Scalar>> entries(acc.begin(), acc.end());
    return WeightMap::from_entries(b.dom_len(), a.cod_len(), std::move(entries));
}

WeightMap wm_tensor(const WeightMap& a, const WeightMap& b) {
    std::vector<std::pair<WeightMap::Key, Scalar>> entries;
    entries.reserve(a.entries().size() * b.entries().size());
    for (const auto& [ka, va] : a.entries())
        for (const auto& [kb, vb] : b.entries())
            entries.push_back({{(ka.first << b.cod_len()) | kb.first, (ka.second << b.dom_len()) | kb.second}, va * vb});
    return WeightMap::from_entries(a.dom_len() + b.dom_len(), a.cod_len() + b.cod_len(), std::move(entries));
}

int wm_rank(const WeightMap& a) {
    std::map<int, std::map<WeightMap::Key, Scalar>> blocks;
    for (const auto& [k, v] : a.entries()) blocks[weight(k.second, a.dom_len())].emplace(k, v);
    int total = 0;
    for (const auto& [w, entries] : blocks) {
        std::map<BasisIndex, std::size_t> rows, cols;
        for (const auto& [k, v] : entries) {
            rows.emplace(k.first, 0);
            cols.emplace(k.second, 0);
        }
        std::size_t i = 0;
        for (auto& [r, idx] : rows) idx = i++;
        i = 0;
        for (auto& [c, idx] : cols) idx = i++;
        linalg::Matrix m(rows.size(), std::vector<Scalar>(cols.size()));
        for (const auto& [k, v] : entries) m[rows[k.first]][cols[k.second]] = v;
        total += linalg::rank(m);
    }
    return total;
}

bool wm_eq(const WeightMap& a, const WeightMap& b) { return a == b; }

WeightMap s2_conjugate(const WeightMap& a) {
    const BasisIndex row_mask = (BasisIndex{1} << a.cod_len()) - 1;
    const BasisIndex col_mask = (BasisIndex{1} << a.dom_len()) - 1;
    std::vector<std::pair<WeightMap::Key, Scalar>> entries;
    for (const auto& [k, v] : a.entries()) entries.push_back({{~k.first & row_mask, ~k.second & col_mask}, v});
    return WeightMap::from_entries(a.dom_len(), a.cod_len(), std::move(entries));
}

WeightMap extremal_matrix(int m) {
    if (m < 1) throw std::invalid_argument("extremal_matrix: m >= 1 required");
    return extreme_vector_projector(m, true) + extreme_vector_projector(m, false);
}

WeightMap extreme_vector_projector(int m, bool plus) {
    BasisIndex x = plus ? 0 : (BasisIndex{1} << m) - 1;
    return WeightMap::from_entries(m, m, {{{x, x}, Scalar(1)}});
}

// ---------------------------------------------------------------------------
// Generators and words

int Letter::output_arity() const {
    switch (kind) {
    case Kind::cap: return arity - 2;
    case Kind::cup: return arity + 2;
    case Kind::rotation: return arity;
    }
    return arity;
}

std::string letter_text(const Letter& l) {
    std::string n = "(" + std::to_string(l.arity) + ")";
    switch (l.kind) {
    case Letter::Kind::cap: return "cap" + std::to_string(l.index) + n;
    case Letter::Kind::cup: return "cup" + std::to_string(l.index) + n;
    case Letter::Kind::rotation: return (l.index > 0 ? "D" : "D^-1") + n;
    }
    return "?";
}

namespace {

AnnularDiagram letter_diagram(const Letter& l) {
    switch (l.kind) {
    case Letter::Kind::cap: return diagrams::cap(l.arity, l.index);
    case Letter::Kind::cup: return diagrams::cup(l.arity, l.index);
    case Letter::Kind::rotation: return diagrams::rotation(l.arity, l.index);
    }
    throw std::invalid_argument("bad letter");
}

// Removes the boundary points j, j+1 of one side (joined by an arc) and
// shifts the later indices down.
AnnularDiagram strip_pair(const AnnularDiagram& w, Side side, int j) {
    RawDiagram raw{w.dom() - (side == Side::inner ? 2 : 0), w.cod() - (side == Side::outer ? 2 : 0), w.seam(), 0, {}};
    auto shift = [&](Point p) {
        if (p.side == side && p.index > j + 1) p.index -= 2;
        return p;
    };
    for (auto [a, b] : w.arcs()) {
        if (a.side == side && (a.index == j || a.index == j + 1)) continue;
        raw.arcs.emplace_back(shift(a), shift(b));
    }
    return canonicalize(raw).diagram;
}

bool is_identity(const AnnularDiagram& w) {
    if (w.dom() != w.cod() || w.seam() != 0 || w.ess() != 0) return false;
    for (int j = 0; j < w.dom(); ++j)
        if (w.partner({Side::inner, j}) != Point{Side::outer, j}) return false;
    return true;
}

AnnularDiagram rotate_below(const AnnularDiagram& w, int power) {
    return compose(diagrams::rotation(w.dom(), power), w).diagram;
}

AnnularDiagram rotate_above(const AnnularDiagram& w, int power) {
    return compose(w, diagrams::rotation(w.cod(), power)).diagram;
}

AnnularDiagram rotate_below_pow(AnnularDiagram w, int power) {
    for (int k = 0; k < std::abs(power); ++k) w = rotate_below(w, power > 0 ? 1 : -1);
    return w;
}

AnnularDiagram rotate_above_pow(AnnularDiagram w, int power) {
    for (int k = 0; k < std::abs(power); ++k) w = rotate_above(w, power > 0 ? 1 : -1);
    return w;
}

} // namespace

GeneratorWord factorize(const AnnularDiagram& w) {
    if (w.ess() > 0) throw std::invalid_argument("factorize: diagram carries essential circles");
    std::vector<Letter> bottom;
    std::vector<Letter> top; // reverse application order
    AnnularDiagram cur = w;
    for (;;) {
        bool stripped = false;
        for (int j = 0; j + 1 < cur.dom() && !stripped; ++j) {
            if (cur.partner({Side::inner, j}) == Point{Side::inner, j + 1}) {
                bottom.push_back({Letter::Kind::cap, cur.dom(), j + 1});
                cur = strip_pair(cur, Side::inner, j);
                stripped = true;
            }
        }
        for (int j = 0; j + 1 < cur.cod() && !stripped; ++j) {
            if (cur.partner({Side::outer, j}) == Point{Side::outer, j + 1}) {
                top.push_back({Letter::Kind::cup, cur.cod() - 2, j + 1});
                cur = strip_pair(cur, Side::outer, j);
                stripped = true;
            }
        }
        if (stripped) continue;
        if (cur.seam() == 0) break;

        // Single rotation first; cur = next ∘ D^{-e} below, or D^{-e} ∘ next above.
        int best_seam = cur.seam();
        int best_below = 0, best_above = 0;
        AnnularDiagram best;
        for (int e : {1, -1}) {
            if (cur.dom() > 0) {
                AnnularDiagram c = rotate_below(cur, e);
                if (c.seam() < best_seam) best_seam = c.seam(), best = c, best_below = e, best_above = 0;
            }
            if (cur.cod() > 0) {
                AnnularDiagram c = rotate_above(cur, e);
                if (c.seam() < best_seam) best_seam = c.seam(), best = c, best_below = 0, best_above = e;
            }
        }
        if (best_seam == cur.seam()) {
            const int bound = std::max(cur.dom(), cur.cod()) + 1;
            for (int a = -bound; a <= bound && best_seam == cur.seam(); ++a) {
                if (a != 0 && cur.dom() == 0) continue;
                AnnularDiagram below = rotate_below_pow(cur, a);
                for (int b = -bound; b <= bound; ++b) {
                    if ((a == 0 && b == 0) || (b != 0 && cur.cod() == 0)) continue;
                    AnnularDiagram c = rotate_above_pow(below, b);
                    if (c.seam() < best_seam) {
                        best_seam = c.seam(), best = c, best_below = a, best_above = b;
                        break;
                    }
                }
            }
        }
        if (best_seam == cur.seam())
            throw std::runtime_error("factorize: no rotation word reduces the seam within the search bound");
        for (int k = 0; k < std::abs(best_below); ++k)
            bottom.push_back({Letter::Kind::rotation, cur.dom(), best_below > 0 ? -1 : 1});
        for (int k = 0; k < std::abs(best_above); ++k)
            top.push_back({Letter::Kind::rotation, cur.cod(), best_above > 0 ? -1 : 1});
        cur = best;
    }
    if (!is_identity(cur)) throw std::runtime_error("factorize: residual diagram is not an identity");
    GeneratorWord word{w.dom(), bottom};
    word.letters.insert(word.letters.end(), top.rbegin(), top.rend());
    return word;
}

Reduction recompose(const GeneratorWord& word) {
    Reduction acc{diagrams::identity(word.dom), 0, 0};
    for (const Letter& l : word.letters) {
        Reduction step = compose(acc.diagram, letter_diagram(l));
        step.inessential += acc.inessential;
        step.essential += acc.essential;
        acc = std::move(step);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// φ

namespace {

struct GInt {
    long re = 0;
    long im = 0;

    GInt& operator+=(const GInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend GInt operator*(const GInt& a, const GInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    bool zero() const { return re == 0 && im == 0; }
};

using SparseVec = std::vector<std::pair<BasisIndex, GInt>>;

void normalize(SparseVec& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (out > 0 && v[out - 1].first == v[i].first)
            v[out - 1].second += v[i].second;
        else
            v[out++] = v[i];
        if (v[out - 1].second.zero()) --out;
    }
    v.resize(out);
}

void apply_letter(const Letter& l, const SparseVec& in, SparseVec& out) {
    out.clear();
    const int n = l.arity;
    switch (l.kind) {
    case Letter::Kind::cap: {
        const int p = l.index - 1;
        const int below = n - 2 - p; // bits to the right of the pair
        for (const auto& [x, c] : in) {
            unsigned pair = (x >> below) & 3U;
            if (pair == 1U || pair == 2U) {
                BasisIndex high = x >> (below + 2);
                BasisIndex low = x & ((BasisIndex{1} << below) - 1);
                GInt s = pair == 2U ? GInt{1, 0} : GInt{-1, 0}; // -+ -> 1, +- -> -1
                out.emplace_back((high << below) | low, s * c);
            }
        }
        normalize(out);
        return;
    }
    case Letter::Kind::cup: {
        const int p = l.index - 1;
        const int below = n - p;
        for (const auto& [x, c] : in) {
            BasisIndex high = x >> below;
            BasisIndex low = x & ((BasisIndex{1} << below) - 1);
            out.emplace_back((high << (below + 2)) | (BasisIndex{1} << below) | low, c);
            out.emplace_back((high << (below + 2)) | (BasisIndex{2} << below) | low, GInt{-1, 0} * c);
        }
        normalize(out);
        return;
    }
    case Letter::Kind::rotation: {
        const BasisIndex mask = (BasisIndex{1} << n) - 1;
        for (const auto& [x, c] : in) {
            if (l.index > 0) {
                BasisIndex a = (x >> (n - 1)) & 1U;
                GInt s = a ? GInt{0, -1} : GInt{0, 1};
                out.emplace_back(((x << 1) & mask) | a, s * c);
            } else {
                BasisIndex a = x & 1U;
                GInt s = a ? GInt{0, 1} : GInt{0, -1};
                out.emplace_back((x >> 1) | (a << (n - 1)), s * c);
            }
        }
        return;
    }
    }
}

struct DiagramImage {
    int dom = 0;
    int cod = 0;
    std::vector<SparseVec> columns;
};

DiagramImage image_of_word(const GeneratorWord& word) {
    DiagramImage img{word.dom, word.cod(), {}};
    const BasisIndex ncols = BasisIndex{1} << word.dom;
    img.columns.resize(ncols);
    SparseVec a, b;
    for (BasisIndex col = 0; col < ncols; ++col) {
        a.assign(1, {col, GInt{1, 0}});
        for (const Letter& l : word.letters) {
            apply_letter(l, a, b);
            std::swap(a, b);
            if (a.empty()) break;
        }
        img.columns[col] = a;
    }
    return img;
}

std::shared_ptr<const DiagramImage> diagram_image(const AnnularDiagram& d) {
    static std::mutex mutex;
    static std::unordered_map<AnnularDiagram, std::shared_ptr<const DiagramImage>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    std::shared_ptr<const DiagramImage> img;
    if (d.ess() > 0) {
        img = std::make_shared<DiagramImage>(DiagramImage{d.dom(), d.cod(), {}});
    } else {
        img = std::make_shared<DiagramImage>(image_of_word(factorize(d)));
    }
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(d, img);
    return img;
}

Scalar to_scalar(const GInt& g) { return {mpq_class(g.re), mpq_class(g.im)}; }

} // namespace

WeightMap phi_generator(const Letter& g) {
    DiagramImage img = image_of_word({g.arity, {g}});
    std::vector<std::pair<WeightMap::Key, Scalar>> entries;
    for (BasisIndex col = 0; col < img.columns.size(); ++col)
        for (const auto& [row, c] : img.columns[col]) entries.push_back({{row, col}, to_scalar(c)});
    return WeightMap::from_entries(img.dom, img.cod, std::move(entries));
}

WeightMap phi(const AnnularDiagram& d) { return phi(Morphism(d)); }

std::vector<IntegralEntry> phi_integral(const AnnularDiagram& d) {
    auto img = diagram_image(d);
    std::vector<IntegralEntry> out;
    for (BasisIndex col = 0; col < img->columns.size(); ++col)
        for (const auto& [row, g] : img->columns[col]) out.push_back({row, col, g.re, g.im});
    return out;
}

WeightMap phi(const Morphism& x) {
    std::unordered_map<std::uint64_t, Scalar> acc;
    for (const auto& [d, c] : x.terms()) {
        auto img = diagram_image(d);
        bool real = sgn(c.im()) == 0;
        for (BasisIndex col = 0; col < img->columns.size(); ++col) {
            for (const auto& [row, g] : img->columns[col]) {
                Scalar v = c;
                if (real && g.im == 0) {
                    if (g.re != 1) v = Scalar(c.re() * g.re);
                } else {
                    v *= to_scalar(g);
                }
                acc[(std::uint64_t{row} << 32) | col] += v;
            }
        }
    }
    std::vector<std::pair<WeightMap::Key, Scalar>> entries;
    entries.reserve(acc.size());
    for (auto& [k, v] : acc)
        if (!v.is_zero())
            entries.push_back({{static_cast<BasisIndex>(k >> 32), static_cast<BasisIndex>(k & 0xffffffffU)}, std::move(v)});
    return WeightMap::from_entries(x.dom(), x.cod(), std::move(entries));
}

} // namespace atl
