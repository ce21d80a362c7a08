#include "atl/morphism.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace atl {

Mode parse_mode(const std::string& text) {
    if (text == "quotient") return Mode::quotient;
    if (text == "raw") return Mode::raw;
    throw std::invalid_argument("unknown mode '" + text + "' (expected quotient or raw)");
}

std::string mode_name(Mode mode) { return mode == Mode::quotient ? "quotient" : "raw"; }

Morphism::Morphism(const AnnularDiagram& d, const Scalar& c) : dom_(d.dom()), cod_(d.cod()) {
    if (!c.is_zero()) terms_.emplace_back(d, c);
}

Scalar Morphism::coefficient(const AnnularDiagram& d) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                               [](const Term& t, const AnnularDiagram& key) { return t.first < key; });
    if (it != terms_.end() && it->first == d) return it->second;
    return 0;
}

Morphism Morphism::from_terms(int dom, int cod, std::vector<Term> terms) {
    Morphism m(dom, cod);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
        if (t.first.dom() != dom || t.first.cod() != cod)
            throw std::invalid_argument("term arity does not match morphism arity");
        if (!m.terms_.empty() && m.terms_.back().first == t.first)
            m.terms_.back().second += t.second;
        else
            m.terms_.push_back(std::move(t));
        if (m.terms_.back().second.is_zero()) m.terms_.pop_back();
    }
    return m;
}

namespace {

void require_same_arity(const Morphism& a, const Morphism& b) {
    if (a.dom() != b.dom() || a.cod() != b.cod())
        throw std::invalid_argument("morphism arity mismatch: " + std::to_string(a.dom()) + "->" +
                                    std::to_string(a.cod()) + " vs " + std::to_string(b.dom()) + "->" +
                                    std::to_string(b.cod()));
}

class Accumulator {
public:
    void add(const AnnularDiagram& d, const Scalar& c) {
        auto [it, fresh] = map_.try_emplace(d, c);
        if (!fresh) it->second += c;
    }
    Morphism finish(int dom, int cod) {
        std::vector<Morphism::Term> terms;
        terms.reserve(map_.size());
        for (auto& [d, c] : map_)
            if (!c.is_zero()) terms.emplace_back(d, std::move(c));
        return Morphism::from_terms(dom, cod, std::move(terms));
    }

private:
    std::unordered_map<AnnularDiagram, Scalar> map_;
};

} // namespace

Morphism& Morphism::operator+=(const Morphism& o) {
    require_same_arity(*this, o);
    std::vector<Term> merged = terms_;
    merged.insert(merged.end(), o.terms_.begin(), o.terms_.end());
    *this = from_terms(dom_, cod_, std::move(merged));
    return *this;
}

Morphism& Morphism::operator-=(const Morphism& o) { return *this += -o; }

Morphism& Morphism::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

Morphism Morphism::operator-() const {
    Morphism r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Morphism compose(const Morphism& x, const Morphism& y, Mode mode) {
    if (y.cod() != x.dom())
        throw std::invalid_argument("compose: codomain " + std::to_string(y.cod()) + " does not match domain " +
                                    std::to_string(x.dom()));
    Accumulator acc;
    for (const auto& [dy, cy] : y.terms()) {
        for (const auto& [dx, cx] : x.terms()) {
            Reduction r = compose(dy, dx);
            if (mode == Mode::quotient && r.diagram.ess() > 0) continue;
            Scalar c = cy * cx;
            if (r.inessential > 0) c *= loop_factor(r.inessential);
            acc.add(r.diagram, c);
        }
    }
    return acc.finish(y.dom(), x.cod());
}

Morphism quotient(const Morphism& x) {
    std::vector<Morphism::Term> kept;
    for (const auto& t : x.terms())
        if (t.first.ess() == 0) kept.push_back(t);
    return Morphism::from_terms(x.dom(), x.cod(), std::move(kept));
}

bool syntactic_eq(const Morphism& x, const Morphism& y) { return x == y; }

namespace gen {

Morphism id(int n) { return Morphism(diagrams::identity(n)); }

Morphism d(int n, int e) { return Morphism(diagrams::rotation(n, e)); }

Morphism d_pow(int n, int p) {
    Morphism r = id(n);
    Morphism step = d(n, p >= 0 ? 1 : -1);
    for (int k = 0; k < (p >= 0 ? p : -p); ++k) r = compose(step, r, Mode::raw);
    return r;
}

Morphism u(int n, int i) {
    if (n < 2) throw std::out_of_range("U_i needs at least 2 strands");
    int r = ((i % n) + n) % n;
    if (r != 0) return Morphism(diagrams::planar_u(n, r));
    return compose(d(n, 1), compose(Morphism(diagrams::planar_u(n, 1)), d(n, -1), Mode::raw), Mode::raw);
}

Morphism cap(int n, int i) { return Morphism(diagrams::cap(n, i)); }
Morphism cup(int n, int i) { return Morphism(diagrams::cup(n, i)); }

Morphism crossing(int n, int i) { return id(n) + u(n, i); }

Morphism essential_circle(int k) {
    return iota_pow(Morphism(diagrams::essential_circle()), k, Mode::raw);
}

Morphism nested_caps(int n) {
    Morphism r = id(2 * n);
    for (int j = n; j >= 1; --j) r = compose(cap(2 * j, j), r, Mode::raw);
    return r;
}

Morphism nested_cups(int n) {
    Morphism r = id(0);
    for (int j = 0; j < n; ++j) r = compose(cup(2 * j, j + 1), r, Mode::raw);
    return r;
}

} // namespace gen

Morphism iota(const Morphism& x, Mode mode) {
    Accumulator acc;
    for (const auto& [d, c] : x.terms()) {
        for (const Reduction& r : append_strand(d)) {
            if (mode == Mode::quotient && r.diagram.ess() > 0) continue;
            Scalar v = c;
            if (r.inessential > 0) v *= loop_factor(r.inessential);
            acc.add(r.diagram, v);
        }
    }
    return acc.finish(x.dom() + 1, x.cod() + 1);
}

Morphism iota_prime(const Morphism& x, Mode mode) {
    return compose(gen::d(x.cod() + 1, -1), compose(iota(x, mode), gen::d(x.dom() + 1, 1), mode), mode);
}

Morphism iota_pow(const Morphism& x, int times, Mode mode) {
    Morphism r = x;
    for (int k = 0; k < times; ++k) r = iota(r, mode);
    return r;
}

Morphism iota_prime_pow(const Morphism& x, int times, Mode mode) {
    Morphism r = x;
    for (int k = 0; k < times; ++k) r = iota_prime(r, mode);
    return r;
}

Morphism tensor(const Morphism& x, const Morphism& y, Mode mode) {
    return compose(iota_pow(x, y.cod(), mode), iota_prime_pow(y, x.dom(), mode), mode);
}

Morphism partial_trace(const Morphism& x, Mode mode) {
    if (x.dom() != x.cod()) throw std::invalid_argument("partial_trace: not an endomorphism");
    if (x.dom() == 0) throw std::invalid_argument("partial_trace: no strand to close");
    int n = x.dom() - 1;
    Morphism closed = compose(iota(x, mode), gen::cup(n, n + 1), mode);
    return compose(gen::cap(n + 2, n + 1), closed, mode);
}

} // namespace atl
