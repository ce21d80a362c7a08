#include "atl/planar.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "atl/rep.hpp"

namespace atl {

bool is_planar(const Morphism& x) {
    for (const auto& [d, c] : x.terms())
        if (d.seam() != 0 || d.ess() != 0) return false;
    return true;
}

const Morphism& jones_wenzl(int m) {
    if (m < 1) throw std::invalid_argument("jones_wenzl: m must be at least 1");
    static std::mutex mutex;
    static std::map<int, Morphism> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (cache.empty()) cache.emplace(1, gen::id(1));
    for (int k = cache.rbegin()->first; k < m; ++k) {
        Morphism lifted = iota(cache.at(k));
        Morphism cupcap = compose(compose(lifted, gen::u(k + 1, k)), lifted);
        cache.emplace(k + 1, lifted + Scalar::fraction(k, k + 1) * cupcap);
    }
    return cache.at(m);
}

bool jw_partial_trace_check(int m) {
    if (m < 2) throw std::invalid_argument("jw_partial_trace_check: m must be at least 2");
    Morphism closed = partial_trace(jones_wenzl(m));
    return closed == Scalar::fraction(-(m + 1), m) * jones_wenzl(m - 1);
}

JwSplitting jw_splitting(int m) {
    if (m < 2) throw std::invalid_argument("jw_splitting: m must be at least 2");
    Morphism lifted = iota(jones_wenzl(m));
    Morphism f = Scalar::fraction(-m, m + 1) * compose(lifted, gen::cup(m - 1, m));
    Morphism g = compose(gen::cap(m + 1, m), lifted);
    return {std::move(f), std::move(g)};
}

bool jw_k0_check(int m) {
    JwSplitting s = jw_splitting(m);
    Morphism lifted = iota(jones_wenzl(m));
    Morphism cupcap = Scalar::fraction(-m, m + 1) * compose(compose(lifted, gen::u(m + 1, m)), lifted);
    Morphism fg = compose(s.f, s.g);
    return compose(s.g, s.f) == jones_wenzl(m - 1) && fg == cupcap && jones_wenzl(m + 1) + fg == lifted;
}

Report verify_jw(int m) {
    Report r;
    const Morphism& p = jones_wenzl(m);
    const std::string tag = "P_" + std::to_string(m);
    r.add(tag + " planar", is_planar(p));
    r.add(tag + " idempotent", compose(p, p) == p);
    for (int i = 1; i < m; ++i) {
        r.add(tag + " U_" + std::to_string(i) + " = 0",
              compose(p, gen::u(m, i)).is_zero() && compose(gen::u(m, i), p).is_zero());
        r.add(tag + " s_" + std::to_string(i) + " absorbed",
              compose(p, gen::crossing(m, i)) == p && compose(gen::crossing(m, i), p) == p);
    }
    int rank = wm_rank(phi(p));
    r.add(tag + " rank " + std::to_string(m + 1), rank == m + 1, "rank " + std::to_string(rank));
    return r;
}

} // namespace atl
