// One PASS/FAIL line per acceptance criterion.  A criterion passes when every
// check in it holds exactly and it finishes inside its time limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "atl/planar.hpp"
#include "atl/projectors.hpp"
#include "atl/rep.hpp"
#include "atl/suites.hpp"

using namespace atl;

namespace {

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Report()> run;
};

Report rank_additivity(int max_m) {
    Report r;
    for (int m = 1; m <= max_m; ++m)
        for (int n = 1; n <= m; ++n) {
            const int whole = wm_rank(tensor(extremal(m), extremal(n)).image());
            const int top = wm_rank(extremal(m + n).image()), rest = wm_rank(split_idempotent(m, n).image());
            r.add("rank (" + std::to_string(m) + "," + std::to_string(n) + ") " + std::to_string(whole) + " = " +
                      std::to_string(top) + " + " + std::to_string(rest),
                  whole == 4 && top == 2 && rest == 2);
        }
    return r;
}

Report properties(int max_m) {
    Report r;
    for (int m = 2; m <= max_m; ++m) r.append(verify_properties(m));
    return r;
}

Report jw(int max_m) {
    Report r;
    for (int m = 1; m <= max_m; ++m) r.append(verify_jw(m));
    for (int m = 2; m <= max_m; ++m)
        r.add("P_" + std::to_string(m) + " splitting contracts", jw_k0_check(m));
    return r;
}

std::string first_failures(const Report& r) {
    std::string s;
    int shown = 0;
    for (const auto& l : r.lines()) {
        if (l.pass) continue;
        if (shown == 2) return s + "; ...";
        s += (shown ? "; " : "") + l.name + (l.detail.empty() ? "" : " (" + l.detail + ")");
        ++shown;
    }
    return s;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "presentation relations hold exactly for 2 <= n <= 6", 5, [] { return suites::presentation(6); }},
        {2, "Reidemeister moves R1 (sign -1), R2, R3 for n <= 4", 5, [] { return suites::reidemeister(4); }},
        {3, "cap and cup seam slides agree under phi, up to 4 bystanders", 5, [] { return suites::welldef(4); }},
        {4, "phi of the hom(0,2n) basis has full rank 2, 6, 20, 70", 60, [] { return suites::faithfulness(4); }},
        {5, "phi(T_m) is the extremal oracle for m <= 8, T_m idempotent for m <= 6", 60,
         [] {
             Report r = suites::extremal_images(8);
             r.append(suites::extremal_idempotent(6));
             return r;
         }},
        {6, "projector properties (1)-(5) for 2 <= m <= 6", 60, [] { return properties(6); }},
        {7, "pTr(T_m) = -T_{m-1} for m <= 6, JW closure ratio for 2 <= m <= 6", 30, [] { return suites::ptr(6); }},
        {8, "Jones-Wenzl idempotents, U_i annihilation and splitting for m <= 5", 60, [] { return jw(5); }},
        {9, "product formula in every cell 1 <= n <= m <= 4", 120,
         [] {
             Report r = suites::product(4, 3);
             r.append(rank_additivity(4));
             return r;
         }},
        {10, "essential circles vanish under phi, D^2 = -id_1", 5, [] { return suites::quotient_relations(4); }},
        {11, "highest and lowest weight projectors for 2 <= m <= 5", 30, [] { return suites::highest_lowest(5); }},
        {12, "Chebyshev recursions and product rules for m, n <= 12", 1, [] { return suites::chebyshev(12); }},
        {13, "randomized round trip, associativity, functoriality, interchange (1000 each)", 120,
         [] {
             suites::RandomConfig cfg;
             cfg.cases = 1000;
             cfg.max_len = 12;
             cfg.max_strands = 5;
             return suites::randomized(cfg);
         }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Report r;
        std::string error;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_s;
        const bool pass = error.empty() && r.all_pass() && in_time && !r.lines().empty();
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", secs, c.limit_s);
        std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << r.lines().size()
                  << " checks, " << timing << ")";
        if (!pass) {
            ++failed;
            if (!error.empty()) std::cout << ": exception: " << error;
            else if (!r.all_pass()) std::cout << ": " << first_failures(r);
            else if (!in_time) std::cout << ": over time limit";
        }
        std::cout << std::endl;
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << " of " << criteria.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
