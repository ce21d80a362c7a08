#include "atl/suites.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "atl/canon.hpp"
#include "atl/cheb.hpp"
#include "atl/hybrid.hpp"
#include "atl/linalg.hpp"
#include "atl/planar.hpp"
#include "atl/projectors.hpp"
#include "atl/rep.hpp"

namespace atl::suites {

namespace {

std::string num(int k) { return std::to_string(k); }

bool raw_eq(const Morphism& a, const Morphism& b) { return a == b; }

Morphism rc(const Morphism& a, const Morphism& b) { return compose(a, b, Mode::raw); }

Morphism rc(const Morphism& a, const Morphism& b, const Morphism& c) { return rc(a, rc(b, c)); }

Hybrid closure(const Hybrid& x) {
    const int n = x.dom() - 1;
    return chain(Hybrid(gen::cap(n + 2, n + 1)), iota(x), Hybrid(gen::cup(n, n + 1)));
}

long binomial(int n, int k) {
    long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

} // namespace

Report presentation(int max_n, int min_n) {
    Report r;
    for (int n = std::max(2, min_n); n <= max_n; ++n) {
        const std::string tag = "n=" + num(n) + " ";
        bool square = true, braid_up = true, braid_down = true, far = true, slide = true;
        std::string bad;
        for (int i = 0; i < n; ++i) {
            Morphism ui = gen::u(n, i);
            Morphism up = gen::u(n, i + 1), down = gen::u(n, i + n - 1);
            if (!raw_eq(rc(ui, ui), Scalar(-2) * ui)) square = false;
            if (!raw_eq(rc(ui, up, ui), ui)) {
                braid_up = false;
                if (bad.empty()) bad = "U_" + num(i) + "U_" + num((i + 1) % n) + "U_" + num(i) + " != U_" + num(i);
            }
            if (!raw_eq(rc(ui, down, ui), ui)) braid_down = false;
            for (int j = 0; j < n; ++j) {
                int gap = std::min((i - j + n) % n, (j - i + n) % n);
                if (gap > 1 && !raw_eq(rc(ui, gen::u(n, j)), rc(gen::u(n, j), ui))) far = false;
            }
            if (!raw_eq(rc(ui, gen::d(n, 1)), rc(gen::d(n, 1), up))) slide = false;
        }
        r.add(tag + "U_i^2 = -2U_i", square);
        r.add(tag + "U_iU_{i+1}U_i = U_i", braid_up, bad);
        r.add(tag + "U_iU_{i-1}U_i = U_i", braid_down);
        r.add(tag + "[U_i,U_j] = 0 for distant i, j", far);
        r.add(tag + "U_iD = DU_{i+1}", slide);
        r.add(tag + "D D^{-1} = id", raw_eq(rc(gen::d(n, 1), gen::d(n, -1)), gen::id(n)));
    }
    return r;
}

Report reidemeister(int max_n) {
    Report r;
    for (int n = 1; n <= max_n; ++n) {
        const std::string tag = "n=" + num(n) + " ";
        bool r1 = true;
        for (int i = 1; i <= n; ++i) {
            Morphism right = rc(gen::cap(n + 2, i + 1), gen::crossing(n + 2, i), gen::cup(n, i + 1));
            Morphism left = rc(gen::cap(n + 2, i), gen::crossing(n + 2, i + 1), gen::cup(n, i));
            r1 = r1 && raw_eq(right, -gen::id(n)) && raw_eq(left, -gen::id(n));
        }
        r.add(tag + "R1 closing a kink gives -id", r1);
        if (n < 2) continue;
        bool r2 = true, r3 = true;
        for (int i = 0; i < n; ++i) {
            Morphism s = gen::crossing(n, i), t = gen::crossing(n, i + 1);
            r2 = r2 && raw_eq(rc(s, s), gen::id(n));
            if (n >= 3) r3 = r3 && raw_eq(rc(s, t, s), rc(t, s, t));
        }
        r.add(tag + "R2 s_i s_i = id", r2);
        if (n >= 3) r.add(tag + "R3 s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}", r3);
    }
    return r;
}

Report welldef(int bystanders) {
    using K = Letter::Kind;
    Report r;
    for (int b = 0; b <= bystanders; ++b) {
        const int n = b + 2;
        const std::string tag = "bystanders=" + num(b) + " ";
        WeightMap dp = phi_generator({K::rotation, n, 1}), dm = phi_generator({K::rotation, n, -1});
        WeightMap cap_right = wm_mul(phi_generator({K::cap, n, n - 1}), dp);
        WeightMap cap_left = wm_mul(phi_generator({K::cap, n, 1}), dm);
        WeightMap cap_diagram = phi(compose(gen::cap(n, n - 1), gen::d(n, 1), Mode::raw));
        r.add(tag + "cap slid across the base point", wm_eq(cap_right, cap_left) && wm_eq(cap_left, cap_diagram),
              describe_difference(cap_right, cap_left));
        WeightMap cup_right = wm_mul(dm, phi_generator({K::cup, n - 2, n - 1}));
        WeightMap cup_left = wm_mul(dp, phi_generator({K::cup, n - 2, 1}));
        WeightMap cup_diagram = phi(compose(gen::d(n, -1), gen::cup(n - 2, n - 1), Mode::raw));
        r.add(tag + "cup slid across the base point", wm_eq(cup_right, cup_left) && wm_eq(cup_left, cup_diagram),
              describe_difference(cup_right, cup_left));
    }
    return r;
}

Report faithfulness(int max_n) {
    Report r;
    for (int n = 1; n <= max_n; ++n) {
        const int len = 2 * n;
        std::vector<BasisIndex> cols;
        for (BasisIndex v = 0; v < (BasisIndex{1} << len); ++v)
            if (weight(v, len) == 0) cols.push_back(v);
        linalg::Matrix m;
        for (const auto& d : enumerate_basis(len)) {
            WeightMap w = phi(d);
            std::vector<Scalar> row;
            row.reserve(cols.size());
            for (BasisIndex v : cols) row.push_back(w.at(v, 0));
            m.push_back(std::move(row));
        }
        const long want = binomial(len, n);
        const int got = linalg::rank(m);
        r.add("hom(0," + num(len) + ") rank " + num(got) + " of " + std::to_string(want),
              got == want && static_cast<long>(m.size()) == want);
    }
    return r;
}

Report extremal_images(int max_m) {
    Report r;
    for (int m = 1; m <= max_m; ++m) {
        WeightMap img = extremal(m).image(), want = extremal_matrix(m);
        bool two_units = img.entries().size() == 2;
        for (const auto& [k, v] : img.entries()) two_units = two_units && v.is_one();
        r.add("phi(T_" + num(m) + ") = extremal oracle", wm_eq(img, want) && two_units,
              describe_difference(img, want));
    }
    return r;
}

Report extremal_idempotent(int max_m) {
    Report r;
    for (int m = 2; m <= max_m; ++m) {
        Hybrid t = extremal(m);
        r.add("T_" + num(m) + "^2 = T_" + num(m), ess_equal(compose(t, t), t));
    }
    return r;
}

Report highest_lowest(int max_m) {
    Report r;
    for (int m = 2; m <= max_m; ++m) {
        const std::string tag = "m=" + num(m) + " ";
        WeightMap hi = highest(m).image(), lo = lowest(m).image();
        r.add(tag + "phi(T_{+^m}) projects onto v_{+^m}", wm_eq(hi, extreme_vector_projector(m, true)),
              describe_difference(hi, extreme_vector_projector(m, true)));
        r.add(tag + "phi(T_{-^m}) projects onto v_{-^m}", wm_eq(lo, extreme_vector_projector(m, false)),
              describe_difference(lo, extreme_vector_projector(m, false)));
        r.add(tag + "T_{+^m} + T_{-^m} = T_m", ess_equal(highest(m) + lowest(m), extremal(m)));
        r.add(tag + "s2 swaps T_{+^m} and T_{-^m}", wm_eq(s2_conjugate(hi), lo) && wm_eq(s2_conjugate(lo), hi));
    }
    return r;
}

Report technical(int max_m) {
    Report r = extremal_images(max_m);
    for (int m = 2; m <= max_m; ++m) r.append(verify_properties(m));
    r.append(highest_lowest(max_m));
    return r;
}

Report ptr(int max_m) {
    Report r;
    for (int m = 1; m <= max_m; ++m) {
        Hybrid lhs = closure(extremal(m)), rhs = Scalar(-1) * extremal(m - 1);
        r.add("pTr(T_" + num(m) + ") = -T_" + num(m - 1), ess_equal(lhs, rhs),
              describe_difference(lhs.image(), rhs.image()));
    }
    for (int m = 2; m <= max_m; ++m)
        r.add("pTr(P_" + num(m) + ") = -" + num(m + 1) + "/" + num(m) + " P_" + num(m - 1), jw_partial_trace_check(m));
    return r;
}

Report jones_wenzl(int max_m) {
    Report r;
    for (int m = 1; m <= max_m; ++m) r.append(verify_jw(m));
    for (int m = 2; m <= max_m; ++m)
        r.add("P_" + num(m) + "(x)P_1 splits as P_" + num(m + 1) + " + P_" + num(m - 1), jw_k0_check(m));
    return r;
}

Report product(int max_m, int max_equal) {
    Report r;
    for (int m = 1; m <= max_m; ++m)
        for (int n = 1; n <= m; ++n) {
            const std::string cell = "(" + num(m) + "," + num(n) + ")";
            r.append(verify_split(m, n));
            if (m != n) r.append(verify_split(n, m));
            if (m + n >= 3) r.add("linked" + cell, linked_check(m, n));
            r.add("kariso" + cell, kariso_check(m, n));
            for (int k = 0; k < n; ++k) r.add("overlap" + cell + " r=" + num(k), overlap_check(m, n, k));
            for (int k = 1; k <= n; ++k)
                if (k < m) r.add("nested form" + cell + " r=" + num(k), nested_form_check(m, n, k));
            if (m != n) {
                r.append(verify_iso(iso_diff(m, n), "iso_diff" + cell));
                r.append(verify_iso(iso_diff(n, m), "iso_diff(" + num(n) + "," + num(m) + ")"));
                r.append(verify_iso(iso_diff_twisted(m, n), "twisted iso" + cell));
                r.append(verify_iso(iso_diff_twisted(n, m), "twisted iso(" + num(n) + "," + num(m) + ")"));
            } else if (m <= max_equal) {
                r.append(verify_iso_equal(m));
            }
        }
    return r;
}

Report k0(int max_m) {
    Report r;
    for (int m = 1; m <= max_m; ++m)
        for (int n = 1; n <= m; ++n) r.append(decat_check(m, n));
    for (int m = 2; m <= max_m; ++m)
        r.add("[P_" + num(m) + "][P_1] = [P_" + num(m + 1) + "] + [P_" + num(m - 1) + "]", jw_k0_check(m));
    r.append(symmetric_check(max_m));
    return r;
}

Report chebyshev(int max) { return chebyshev_report(max); }

Report quotient_relations(int max_k) {
    Report r;
    for (int k = 0; k <= max_k; ++k)
        r.add("phi(essential circle on " + num(k) + " strands) = 0", phi(gen::essential_circle(k)).is_zero());
    r.add("D^2 = -id_1", ess_equal(gen::d_pow(1, 2), -gen::id(1)));
    r.add("D = -D^{-1} on 1 strand", ess_equal(gen::d(1, 1), -gen::d(1, -1)));
    return r;
}

namespace {

using Rng = std::mt19937_64;

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

GeneratorWord random_word(Rng& rng, int max_len, int max_strands) {
    using K = Letter::Kind;
    GeneratorWord w;
    w.dom = pick(rng, 0, max_strands);
    int a = w.dom;
    const int len = pick(rng, 1, max_len);
    for (int k = 0; k < len; ++k) {
        std::vector<K> options;
        if (a >= 2) options.push_back(K::cap);
        if (a + 2 <= max_strands) options.push_back(K::cup);
        if (a >= 1) options.insert(options.end(), {K::rotation, K::rotation});
        K kind = options[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(options.size()) - 1))];
        if (kind == K::cap) w.letters.push_back({kind, a, pick(rng, 1, a - 1)});
        else if (kind == K::cup) w.letters.push_back({kind, a, pick(rng, 1, a + 1)});
        else w.letters.push_back({kind, a, pick(rng, 0, 1) ? 1 : -1});
        a = w.letters.back().output_arity();
    }
    return w;
}

/// Product of generators, occasionally crossings, starting on dom strands.
Morphism random_morphism(Rng& rng, int dom, int max_len, int max_strands) {
    Morphism x = gen::id(dom);
    int a = dom;
    const int len = pick(rng, 1, max_len);
    for (int k = 0; k < len; ++k) {
        const int c = pick(rng, 0, 9);
        Morphism g;
        if (c <= 1 && a >= 2) g = gen::cap(a, pick(rng, 1, a - 1));
        else if (c <= 3 && a + 2 <= max_strands) g = gen::cup(a, pick(rng, 1, a + 1));
        else if (c == 4 && a >= 2) g = gen::crossing(a, pick(rng, 0, a - 1));
        else if (c <= 6 && a >= 2) g = gen::u(a, pick(rng, 0, a - 1));
        else g = gen::d(a, pick(rng, 0, 1) ? 1 : -1);
        x = compose(g, x, Mode::raw);
        a = x.cod();
    }
    if (pick(rng, 0, 3) == 0) x *= Scalar(pick(rng, -3, 3), pick(rng, -2, 2));
    return x;
}

} // namespace

Report randomized(const RandomConfig& cfg) {
    Report r;
    Rng rng(cfg.seed);
    int round_trip_bad = 0, round_trip_cases = 0;
    while (round_trip_cases < cfg.cases) {
        Reduction red = recompose(random_word(rng, cfg.max_len, cfg.max_strands));
        if (red.diagram.ess() != 0) continue;
        ++round_trip_cases;
        Reduction back = recompose(factorize(red.diagram));
        if (!(back.diagram == red.diagram) || back.inessential != 0 || back.essential != 0) ++round_trip_bad;
    }
    r.add("recompose(factorize(W)) = W on " + num(round_trip_cases) + " random diagrams", round_trip_bad == 0,
          num(round_trip_bad) + " mismatches");

    int assoc_bad = 0, functor_bad = 0;
    for (int t = 0; t < cfg.cases; ++t) {
        const int third = std::max(1, cfg.max_len / 3);
        Morphism z = random_morphism(rng, pick(rng, 0, cfg.max_strands), third, cfg.max_strands);
        Morphism y = random_morphism(rng, z.cod(), third, cfg.max_strands);
        Morphism x = random_morphism(rng, y.cod(), third, cfg.max_strands);
        if (!(rc(rc(x, y), z) == rc(x, rc(y, z)))) ++assoc_bad;
        if (!wm_eq(phi(rc(x, y)), wm_mul(phi(x), phi(y)))) ++functor_bad;
    }
    r.add("(XY)Z = X(YZ) on " + num(cfg.cases) + " random triples", assoc_bad == 0, num(assoc_bad) + " mismatches");
    r.add("phi(XY) = phi(X)phi(Y) on " + num(cfg.cases) + " random pairs", functor_bad == 0,
          num(functor_bad) + " mismatches");

    int interchange_bad = 0;
    for (int t = 0; t < cfg.cases; ++t) {
        const int nx = pick(rng, 0, cfg.max_strands), ny = pick(rng, 0, cfg.max_strands - nx);
        const int half = std::max(1, cfg.max_len / 2);
        Morphism x = random_morphism(rng, nx, half, cfg.max_strands - ny);
        Morphism y = random_morphism(rng, ny, half, cfg.max_strands - x.cod());
        Morphism lhs = tensor(x, y);
        Morphism rhs = compose(iota_prime_pow(y, x.cod()), iota_pow(x, y.dom()));
        if (!ess_equal(lhs, rhs) || !wm_eq(phi(lhs), wm_tensor(phi(x), phi(y)))) ++interchange_bad;
    }
    r.add("(X(x)id)(id(x)Y) = (id(x)Y)(X(x)id) on " + num(cfg.cases) + " random pairs", interchange_bad == 0,
          num(interchange_bad) + " mismatches");
    return r;
}

const std::vector<std::string>& names() {
    static const std::vector<std::string> n{"presentation", "reidemeister", "welldef", "faithfulness", "technical",
                                            "ptr",          "product",      "k0",      "chebyshev",    "all"};
    return n;
}

Report run(const std::string& name, int max) {
    if (max < 1) throw std::invalid_argument("suite bound must be at least 1");
    if (name == "presentation") return presentation(std::max(max, 2));
    if (name == "reidemeister") return reidemeister(max);
    if (name == "welldef") return welldef(max);
    if (name == "faithfulness") return faithfulness(max);
    if (name == "technical") return technical(max);
    if (name == "ptr") return ptr(max);
    if (name == "product") return product(max);
    if (name == "k0") return k0(max);
    if (name == "chebyshev") return chebyshev(max);
    if (name == "all") {
        Report r;
        for (const auto& n : names())
            if (n != "all") r.append(run(n, max));
        r.append(jones_wenzl(max));
        r.append(quotient_relations(max));
        RandomConfig cfg;
        cfg.cases = 100;
        r.append(randomized(cfg));
        return r;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace atl::suites
