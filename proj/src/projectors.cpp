#include "atl/projectors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace atl {

namespace {

std::string cell(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

Scalar sign(int k) { return k % 2 ? Scalar(-1) : Scalar(1); }

/// T_k as a tensor factor: the empty identity when k = 0.
Hybrid factor(int k) { return k == 0 ? Hybrid(gen::id(0)) : extremal(k); }

/// T_m ⊗ T_n, memoized.
Hybrid pair(int m, int n) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, Hybrid> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find({m, n}); it != cache.end()) return it->second;
    }
    Hybrid p = tensor(factor(m), factor(n));
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::pair{m, n}, std::move(p)).first->second;
}

using Builder = Hybrid (*)(int);

Hybrid recurse(std::map<int, Hybrid>& cache, int m) {
    for (int k = cache.rbegin()->first; k < m; ++k) {
        Hybrid lifted = iota(cache.at(k));
        cache.emplace(k + 1, chain(lifted, Hybrid(gen::crossing(k + 1, k)), lifted));
    }
    return cache.at(m);
}

Morphism weight_two(bool plus) {
    // ¼(2 id + 2ε D + U_1 + U_0 + ε D U_1 + ε U_1 D) with ε = -i for the highest projector.
    const Scalar eps = plus ? -Scalar::i() : Scalar::i();
    const Morphism d = gen::d(2, 1), u1 = gen::u(2, 1);
    Morphism t = Scalar(2) * gen::id(2) + (Scalar(2) * eps) * d + u1 + gen::u(2, 0) + eps * compose(d, u1) +
                 eps * compose(u1, d);
    return Scalar::fraction(1, 4) * t;
}

} // namespace

Hybrid extremal(int m) {
    if (m < 0) throw std::invalid_argument("extremal: m must be non-negative");
    static std::mutex mutex;
    static std::map<int, Hybrid> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (cache.empty()) {
        cache.emplace(2, Hybrid(gen::id(2) + Scalar::fraction(1, 2) * gen::u(2, 1) + Scalar::fraction(1, 2) * gen::u(2, 0)));
    }
    if (m == 0) return Scalar(2) * gen::id(0);
    if (m == 1) return gen::id(1);
    return recurse(cache, m);
}

Hybrid highest(int m) {
    if (m < 2) throw std::invalid_argument("highest: m must be at least 2");
    static std::mutex mutex;
    static std::map<int, Hybrid> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (cache.empty()) cache.emplace(2, Hybrid(weight_two(true)));
    return recurse(cache, m);
}

Hybrid lowest(int m) {
    if (m < 2) throw std::invalid_argument("lowest: m must be at least 2");
    static std::mutex mutex;
    static std::map<int, Hybrid> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (cache.empty()) cache.emplace(2, Hybrid(weight_two(false)));
    return recurse(cache, m);
}

Hybrid split_idempotent(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("split_idempotent: m, n must be at least 1");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, Hybrid> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find({m, n}); it != cache.end()) return it->second;
    }
    Hybrid e;
    if (m == 1 && n == 1) {
        Morphism conj = compose(gen::d(2, -1), compose(gen::u(2, 1), gen::d(2, 1)));
        e = Scalar::fraction(-1, 2) * gen::u(2, 1) + Scalar::fraction(-1, 2) * conj;
    } else {
        Hybrid p = pair(m, n);
        e = Scalar(-1) * chain(p, Hybrid(gen::u(m + n, m)), p);
    }
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::pair{m, n}, std::move(e)).first->second;
}

Morphism cupcap(int r) { return compose(gen::nested_cups(r), gen::nested_caps(r)); }

Report verify_properties(int m) {
    if (m < 2) throw std::invalid_argument("verify_properties: m must be at least 2");
    Report r;
    const Hybrid t = extremal(m);
    const std::string tag = "T_" + std::to_string(m);
    r.add(tag + " idempotent", ess_equal(compose(t, t), t));
    bool absorb = true, annihilate = true;
    for (int i = 0; i < m; ++i) {
        Hybrid s = gen::crossing(m, i), u = gen::u(m, i);
        absorb = absorb && ess_equal(compose(t, s), t) && ess_equal(compose(s, t), t);
        annihilate = annihilate && is_zero(compose(t, u)) && is_zero(compose(u, t));
    }
    r.add(tag + " absorbs every s_i", absorb);
    r.add(tag + " kills every U_i", annihilate);
    bool lower = true;
    for (int n = 1; n < m; ++n) {
        Hybrid low = iota_pow(extremal(n), m - n);
        lower = lower && ess_equal(compose(t, low), t) && ess_equal(compose(low, t), t);
    }
    r.add(tag + " absorbs lower projectors", lower);
    r.add(tag + " D-conjugation invariant",
          ess_equal(chain(Hybrid(gen::d(m, -1)), t, Hybrid(gen::d(m, 1))), t));
    return r;
}

bool linked_check(int m, int n) {
    if (m < 1 || n < 1 || m + n < 3) throw std::invalid_argument("linked_check: need m, n >= 1 and m + n >= 3");
    Hybrid p = pair(m, n);
    return ess_equal(chain(p, Hybrid(gen::crossing(m + n, m)), p), extremal(m + n));
}

bool overlap_check(int m, int n, int r) {
    if (!(1 <= n && n <= m && 0 <= r && r < n)) throw std::invalid_argument("overlap_check: need 1 <= n <= m, 0 <= r < n");
    const Hybrid target = extremal(m + r);
    const Hybrid idr = gen::id(r), idk = gen::id(m - n + r);
    Hybrid a = tensor(extremal(m), idr), b = tensor(idk, extremal(n));
    Hybrid c = tensor(idr, extremal(m)), d = tensor(extremal(n), idk);
    return ess_equal(compose(a, b), target) && ess_equal(compose(b, a), target) && ess_equal(compose(c, d), target) &&
           ess_equal(compose(d, c), target);
}

bool nested_form_check(int m, int n, int r) {
    if (!(m >= 1 && n >= 1 && m + n >= 3 && 1 <= r && r <= std::min(m, n) && r < std::max(m, n)))
        throw std::invalid_argument("nested_form_check: parameters out of range");
    Hybrid p = pair(m, n);
    Hybrid middle = tensor(tensor(factor(m - r), Hybrid(cupcap(r))), factor(n - r));
    return ess_equal(sign(r) * chain(p, middle, p), split_idempotent(m, n));
}

bool kariso_check(int m, int n) {
    if (!(1 <= n && n <= m)) throw std::invalid_argument("kariso_check: need 1 <= n <= m");
    Hybrid caps = tensor(Hybrid(gen::id(m - n)), Hybrid(gen::nested_caps(n)));
    Hybrid cups = tensor(Hybrid(gen::id(m - n)), Hybrid(gen::nested_cups(n)));
    return ess_equal(sign(n) * chain(caps, pair(m, n), cups), extremal(m - n));
}

IsoPair iso_diff(int m, int n) {
    if (m == n) throw std::invalid_argument("iso_diff: m = n, use iso_equal");
    if (m < 1 || n < 1) throw std::invalid_argument("iso_diff: m, n must be at least 1");
    Hybrid p = pair(m, n);
    const int k = std::min(m, n), rest = std::abs(m - n);
    Hybrid cups, caps;
    if (m > n) {
        cups = tensor(factor(rest), Hybrid(gen::nested_cups(k)));
        caps = tensor(factor(rest), Hybrid(gen::nested_caps(k)));
    } else {
        cups = tensor(Hybrid(gen::nested_cups(k)), factor(rest));
        caps = tensor(Hybrid(gen::nested_caps(k)), factor(rest));
    }
    return {sign(k) * compose(p, cups), compose(caps, p), factor(rest), split_idempotent(m, n)};
}

IsoPair iso_diff_twisted(int m, int n) {
    IsoPair iso = iso_diff(m, n);
    const int total = m + n, power = m > n ? -n : m;
    Hybrid twist = gen::d_pow(total, power), untwist = gen::d_pow(total, -power);
    return {compose(twist, iso.fwd), compose(iso.bwd, untwist), iso.src_idem, chain(twist, iso.tgt_idem, untwist)};
}

std::pair<IsoPair, IsoPair> iso_equal(int m) {
    if (m < 1) throw std::invalid_argument("iso_equal: m must be at least 1");
    Hybrid p = pair(m, m);
    const Scalar half = Scalar::fraction(1, 2);
    Hybrid f1 = sign(m) * compose(p, Hybrid(gen::nested_cups(m)));
    Hybrid g1 = half * compose(Hybrid(gen::nested_caps(m)), p);
    Hybrid cups = tensor(Hybrid(gen::nested_cups(1)), Hybrid(gen::nested_cups(m - 1)));
    Hybrid caps = tensor(Hybrid(gen::nested_caps(1)), Hybrid(gen::nested_caps(m - 1)));
    Hybrid f2 = sign(m) * chain(p, Hybrid(gen::d(2 * m, 1)), cups);
    Hybrid g2 = half * chain(caps, Hybrid(gen::d(2 * m, -1)), p);
    Hybrid id0 = gen::id(0);
    IsoPair first{f1, g1, id0, compose(f1, g1)};
    IsoPair second{f2, g2, id0, compose(f2, g2)};
    return {first, second};
}

Report verify_iso(const IsoPair& iso, const std::string& name) {
    Report r;
    Hybrid back = compose(iso.bwd, iso.fwd), forth = compose(iso.fwd, iso.bwd);
    r.add(name + " bwd.fwd = source idempotent", ess_equal(back, iso.src_idem),
          describe_difference(back.image(), iso.src_idem.image()));
    r.add(name + " fwd.bwd = target idempotent", ess_equal(forth, iso.tgt_idem),
          describe_difference(forth.image(), iso.tgt_idem.image()));
    return r;
}

Report verify_iso_equal(int m) {
    Report r;
    auto [a, b] = iso_equal(m);
    const std::string tag = "iso_equal(" + std::to_string(m) + ")";
    const Hybrid id0 = gen::id(0);
    const IsoPair* pairs[2] = {&a, &b};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Hybrid gf = compose(pairs[i]->bwd, pairs[j]->fwd);
            bool ok = i == j ? ess_equal(gf, id0) : is_zero(gf);
            r.add(tag + " g" + std::to_string(i + 1) + "f" + std::to_string(j + 1) + (i == j ? " = id_0" : " = 0"), ok,
                  describe_difference(gf.image(), i == j ? id0.image() : WeightMap(0, 0)));
        }
    r.add(tag + " f1g1 + f2g2 = e_{m,m}", ess_equal(a.tgt_idem + b.tgt_idem, split_idempotent(m, m)));
    return r;
}

Report verify_split(int m, int n) {
    Report r;
    const std::string tag = "split" + cell(m, n);
    Hybrid p = pair(m, n), e = split_idempotent(m, n), t = extremal(m + n);
    r.add(tag + " T_m(x)T_n = T_{m+n} + e", ess_equal(p, t + e));
    r.add(tag + " e idempotent", ess_equal(compose(e, e), e));
    r.add(tag + " e T_{m+n} = T_{m+n} e = 0", is_zero(compose(e, t)) && is_zero(compose(t, e)));
    const int len = m + n;
    const BasisIndex plus_minus = (BasisIndex{1} << n) - 1; // +^m -^n
    const BasisIndex minus_plus = ((BasisIndex{1} << len) - 1) ^ plus_minus;
    WeightMap expected = WeightMap::from_entries(len, len, {{{plus_minus, plus_minus}, 1}, {{minus_plus, minus_plus}, 1}});
    r.add(tag + " phi(e) projects onto v(+^m-^n), v(-^m+^n)", wm_eq(e.image(), expected),
          describe_difference(e.image(), expected));
    return r;
}

} // namespace atl
