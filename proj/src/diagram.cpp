#include "atl/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace atl {

namespace {

constexpr int kNone = -1;

// Working form used by the reduction passes: a flat partner table in the
// standard id layout for (dom, cod, seam).
struct Layout {
    int dom;
    int cod;
    int seam;

    int size() const { return dom + cod + 2 * seam; }
    int inner(int j) const { return j; }
    int outer(int j) const { return dom + j; }
    int left(int j) const { return dom + cod + j; }
    int right(int j) const { return dom + cod + seam + j; }
    bool is_boundary(int id) const { return id < dom + cod; }
    bool is_left(int id) const { return id >= dom + cod && id < dom + cod + seam; }
    int seam_index(int id) const {
        int s = id - dom - cod;
        return s < seam ? s : s - seam;
    }
    int twin(int id) const {
        int s = id - dom - cod;
        return s < seam ? id + seam : id - seam;
    }
};

int point_id(const Layout& lay, Point p) {
    auto check = [](int idx, int bound) {
        if (idx < 0 || idx >= bound) throw std::invalid_argument("point index out of range");
    };
    switch (p.side) {
    case Side::inner: check(p.index, lay.dom); return lay.inner(p.index);
    case Side::outer: check(p.index, lay.cod); return lay.outer(p.index);
    case Side::left: check(p.index, lay.seam); return lay.left(p.index);
    case Side::right: check(p.index, lay.seam); return lay.right(p.index);
    }
    throw std::invalid_argument("bad point side");
}

Point id_point(const Layout& lay, int id) {
    if (id < lay.dom) return {Side::inner, id};
    id -= lay.dom;
    if (id < lay.cod) return {Side::outer, id};
    id -= lay.cod;
    if (id < lay.seam) return {Side::left, id};
    return {Side::right, id - lay.seam};
}

int cycle_pos(const Layout& lay, Point p) {
    switch (p.side) {
    case Side::inner: return p.index;
    case Side::right: return lay.dom + p.index;
    case Side::outer: return lay.dom + lay.seam + (lay.cod - 1 - p.index);
    case Side::left: return lay.dom + lay.seam + lay.cod + (lay.seam - 1 - p.index);
    }
    return 0;
}

bool noncrossing(const Layout& lay, const std::vector<int>& partner) {
    int n = lay.size();
    std::vector<int> at(static_cast<std::size_t>(n));
    for (int id = 0; id < n; ++id) at[static_cast<std::size_t>(cycle_pos(lay, id_point(lay, id)))] = id;
    std::vector<int> stack;
    for (int pos = 0; pos < n; ++pos) {
        int id = at[static_cast<std::size_t>(pos)];
        int q = cycle_pos(lay, id_point(lay, partner[static_cast<std::size_t>(id)]));
        if (q > pos) {
            stack.push_back(q);
        } else {
            if (stack.empty() || stack.back() != pos) return false;
            stack.pop_back();
        }
    }
    return true;
}

// Drops the seam indices with keep[j] == false and renumbers the rest.
std::vector<int> drop_seam(const Layout& lay, const std::vector<int>& partner, const std::vector<bool>& keep,
                           Layout& out) {
    std::vector<int> newidx(static_cast<std::size_t>(lay.seam), kNone);
    int k = 0;
    for (int j = 0; j < lay.seam; ++j)
        if (keep[static_cast<std::size_t>(j)]) newidx[static_cast<std::size_t>(j)] = k++;
    out = {lay.dom, lay.cod, k};
    auto remap = [&](int id) {
        if (lay.is_boundary(id)) return id < lay.dom ? id : out.outer(id - lay.dom);
        int j = newidx[static_cast<std::size_t>(lay.seam_index(id))];
        return lay.is_left(id) ? out.left(j) : out.right(j);
    };
    std::vector<int> res(static_cast<std::size_t>(out.size()), kNone);
    for (int id = 0; id < lay.size(); ++id) {
        if (!lay.is_boundary(id) && !keep[static_cast<std::size_t>(lay.seam_index(id))]) continue;
        res[static_cast<std::size_t>(remap(id))] = remap(partner[static_cast<std::size_t>(id)]);
    }
    return res;
}

} // namespace

struct DiagramBuilder {
    static AnnularDiagram make(const Layout& lay, int ess, std::vector<int> partner) {
        AnnularDiagram d;
        d.dom_ = lay.dom;
        d.cod_ = lay.cod;
        d.seam_ = lay.seam;
        d.ess_ = ess;
        d.partner_ = std::move(partner);
        return d;
    }

    // Closed components first, then seam bigons.
    static Reduction reduce(Layout lay, int ess, std::vector<int> p) {
        Reduction out;
        std::vector<char> used(static_cast<std::size_t>(lay.size()), 0);
        for (int b = 0; b < lay.dom + lay.cod; ++b) {
            if (used[static_cast<std::size_t>(b)]) continue;
            int cur = b;
            for (;;) {
                used[static_cast<std::size_t>(cur)] = 1;
                int q = p[static_cast<std::size_t>(cur)];
                used[static_cast<std::size_t>(q)] = 1;
                if (lay.is_boundary(q)) break;
                cur = lay.twin(q);
            }
        }
        std::vector<bool> keep(static_cast<std::size_t>(lay.seam), true);
        bool any_closed = false;
        for (int j = 0; j < lay.seam; ++j) {
            int start = lay.left(j);
            if (used[static_cast<std::size_t>(start)]) continue;
            any_closed = true;
            int winding = 0;
            int cur = start;
            do {
                int q = p[static_cast<std::size_t>(cur)];
                used[static_cast<std::size_t>(cur)] = used[static_cast<std::size_t>(q)] = 1;
                keep[static_cast<std::size_t>(lay.seam_index(cur))] = false;
                keep[static_cast<std::size_t>(lay.seam_index(q))] = false;
                winding += lay.is_left(q) ? -1 : 1;
                cur = lay.twin(q);
            } while (cur != start);
            if (winding == 0)
                ++out.inessential;
            else
                ++out.essential;
        }
        if (any_closed) {
            Layout nl{};
            p = drop_seam(lay, p, keep, nl);
            lay = nl;
        }
        for (;;) {
            int hit = kNone;
            for (int j = 0; j + 1 < lay.seam && hit == kNone; ++j) {
                if (p[static_cast<std::size_t>(lay.left(j))] == lay.left(j + 1)) hit = lay.right(j);
                else if (p[static_cast<std::size_t>(lay.right(j))] == lay.right(j + 1)) hit = lay.left(j);
            }
            if (hit == kNone) break;
            int j = lay.seam_index(hit);
            int x = p[static_cast<std::size_t>(hit)];
            int y = p[static_cast<std::size_t>(hit + 1)];
            p[static_cast<std::size_t>(x)] = y;
            p[static_cast<std::size_t>(y)] = x;
            std::vector<bool> k2(static_cast<std::size_t>(lay.seam), true);
            k2[static_cast<std::size_t>(j)] = k2[static_cast<std::size_t>(j + 1)] = false;
            Layout nl{};
            p = drop_seam(lay, p, k2, nl);
            lay = nl;
        }
        out.diagram = make(lay, ess + out.essential, std::move(p));
        return out;
    }

    static const std::vector<int>& partners(const AnnularDiagram& d) { return d.partner_; }
};

std::string point_label(Point p) {
    static constexpr char kSide[] = {'I', 'O', 'L', 'R'};
    return kSide[static_cast<int>(p.side)] + std::to_string(p.index);
}

Point parse_point_label(const std::string& label) {
    if (label.size() < 2) throw std::invalid_argument("bad point label '" + label + "'");
    Side side{};
    switch (label[0]) {
    case 'I': side = Side::inner; break;
    case 'O': side = Side::outer; break;
    case 'L': side = Side::left; break;
    case 'R': side = Side::right; break;
    default: throw std::invalid_argument("bad point label '" + label + "'");
    }
    int idx = 0;
    for (std::size_t i = 1; i < label.size(); ++i) {
        char c = label[i];
        if (c < '0' || c > '9' || idx > 100000) throw std::invalid_argument("bad point label '" + label + "'");
        idx = idx * 10 + (c - '0');
    }
    return {side, idx};
}

int AnnularDiagram::id(Point p) const { return point_id({dom_, cod_, seam_}, p); }
Point AnnularDiagram::point(int id) const { return id_point({dom_, cod_, seam_}, id); }
int AnnularDiagram::cycle_position(Point p) const { return cycle_pos({dom_, cod_, seam_}, p); }

std::vector<std::pair<Point, Point>> AnnularDiagram::arcs() const {
    std::vector<std::pair<Point, Point>> out;
    for (int a = 0; a < point_count(); ++a) {
        int b = partner_[static_cast<std::size_t>(a)];
        if (a < b) out.emplace_back(point(a), point(b));
    }
    return out;
}

int AnnularDiagram::through_strands() const {
    Layout lay{dom_, cod_, seam_};
    int count = 0;
    for (int j = 0; j < dom_; ++j) {
        int cur = j;
        for (;;) {
            int q = partner_[static_cast<std::size_t>(cur)];
            if (lay.is_boundary(q)) {
                if (q >= dom_) ++count;
                break;
            }
            cur = lay.twin(q);
        }
    }
    return count;
}

std::strong_ordering operator<=>(const AnnularDiagram& a, const AnnularDiagram& b) {
    if (auto c = a.dom_ <=> b.dom_; c != 0) return c;
    if (auto c = a.cod_ <=> b.cod_; c != 0) return c;
    if (auto c = a.seam_ <=> b.seam_; c != 0) return c;
    if (auto c = a.ess_ <=> b.ess_; c != 0) return c;
    // Sorted arc lists, compared without building them: point order is id order.
    const int n = a.point_count();
    for (int i = 0, j = 0;; ++i, ++j) {
        while (i < n && a.partner_[static_cast<std::size_t>(i)] < i) ++i;
        while (j < n && b.partner_[static_cast<std::size_t>(j)] < j) ++j;
        if (i == n || j == n) return (i < n) <=> (j < n);
        if (auto c = i <=> j; c != 0) return c;
        if (auto c = a.partner_[static_cast<std::size_t>(i)] <=> b.partner_[static_cast<std::size_t>(j)]; c != 0)
            return c;
    }
}

std::size_t AnnularDiagram::hash() const {
    std::size_t h = 1469598103934665603ULL;
    auto mix = [&h](std::size_t v) { h = (h ^ v) * 1099511628211ULL; };
    mix(static_cast<std::size_t>(dom_));
    mix(static_cast<std::size_t>(cod_));
    mix(static_cast<std::size_t>(seam_));
    mix(static_cast<std::size_t>(ess_));
    for (int v : partner_) mix(static_cast<std::size_t>(v));
    return h;
}

Reduction canonicalize(const RawDiagram& raw) {
    if (raw.dom < 0 || raw.cod < 0 || raw.seam < 0 || raw.ess < 0)
        throw std::invalid_argument("negative diagram size");
    Layout lay{raw.dom, raw.cod, raw.seam};
    if (static_cast<int>(raw.arcs.size()) * 2 != lay.size())
        throw std::invalid_argument("arc list is not a perfect matching");
    std::vector<int> p(static_cast<std::size_t>(lay.size()), kNone);
    for (const auto& [a, b] : raw.arcs) {
        int x = point_id(lay, a);
        int y = point_id(lay, b);
        if (x == y || p[static_cast<std::size_t>(x)] != kNone || p[static_cast<std::size_t>(y)] != kNone)
            throw std::invalid_argument("arc list is not a perfect matching");
        p[static_cast<std::size_t>(x)] = y;
        p[static_cast<std::size_t>(y)] = x;
    }
    if (!noncrossing(lay, p)) throw std::invalid_argument("arcs cross in the cut rectangle");
    return DiagramBuilder::reduce(lay, raw.ess, std::move(p));
}

Reduction compose(const AnnularDiagram& inner, const AnnularDiagram& outer) {
    if (inner.cod() != outer.dom())
        throw std::invalid_argument("compose: codomain " + std::to_string(inner.cod()) + " does not match domain " +
                                    std::to_string(outer.dom()));
    const int glue = inner.cod();
    Layout la{inner.dom(), inner.cod(), inner.seam()};
    Layout lb{outer.dom(), outer.cod(), outer.seam()};
    Layout lr{inner.dom(), outer.cod(), inner.seam() + outer.seam()};
    const auto& pa = DiagramBuilder::partners(inner);
    const auto& pb = DiagramBuilder::partners(outer);

    // Result ids for points of each factor; kNone marks glued points.
    auto res_a = [&](int id) {
        if (id < la.dom) return id;
        if (id < la.dom + la.cod) return kNone;
        int j = la.seam_index(id);
        return la.is_left(id) ? lr.left(j) : lr.right(j);
    };
    auto res_b = [&](int id) {
        if (id < lb.dom) return kNone;
        if (id < lb.dom + lb.cod) return lr.outer(id - lb.dom);
        int j = la.seam + lb.seam_index(id);
        return lb.is_left(id) ? lr.left(j) : lr.right(j);
    };

    std::vector<int> p(static_cast<std::size_t>(lr.size()), kNone);
    std::vector<char> glued(static_cast<std::size_t>(glue), 0);

    // Follows the strand leaving point `id` of factor `in_a` until it reaches a result point.
    auto follow = [&](bool in_a, int id) {
        for (;;) {
            int q = in_a ? pa[static_cast<std::size_t>(id)] : pb[static_cast<std::size_t>(id)];
            int r = in_a ? res_a(q) : res_b(q);
            if (r != kNone) return r;
            int g = in_a ? q - la.dom : q;
            glued[static_cast<std::size_t>(g)] = 1;
            in_a = !in_a;
            id = in_a ? la.dom + g : g;
        }
    };

    for (int id = 0; id < la.size(); ++id) {
        int r = res_a(id);
        if (r == kNone || p[static_cast<std::size_t>(r)] != kNone) continue;
        int s = follow(true, id);
        p[static_cast<std::size_t>(r)] = s;
        p[static_cast<std::size_t>(s)] = r;
    }
    for (int id = 0; id < lb.size(); ++id) {
        int r = res_b(id);
        if (r == kNone || p[static_cast<std::size_t>(r)] != kNone) continue;
        int s = follow(false, id);
        p[static_cast<std::size_t>(r)] = s;
        p[static_cast<std::size_t>(s)] = r;
    }

    int loops = 0;
    for (int g = 0; g < glue; ++g) {
        if (glued[static_cast<std::size_t>(g)]) continue;
        ++loops;
        int cur = g;
        bool in_a = true;
        do {
            glued[static_cast<std::size_t>(cur)] = 1;
            int q = in_a ? pa[static_cast<std::size_t>(la.dom + cur)] : pb[static_cast<std::size_t>(cur)];
            cur = in_a ? q - la.dom : q;
            glued[static_cast<std::size_t>(cur)] = 1;
            in_a = !in_a;
        } while (!(in_a && cur == g));
    }

    Reduction red = DiagramBuilder::reduce(lr, inner.ess() + outer.ess(), std::move(p));
    red.inessential += loops;
    return red;
}

RawDiagram expand(const AnnularDiagram& d) {
    RawDiagram raw{d.dom(), d.cod(), d.seam() + d.ess(), 0, {}};
    Layout lay{d.dom(), d.cod(), d.seam()};
    const auto& p = DiagramBuilder::partners(d);
    // Seam indices crossed by arcs attached to the inner boundary come first.
    int split = 0;
    if (d.ess() > 0) {
        for (int b = 0; b < lay.dom; ++b) {
            int cur = b;
            for (;;) {
                int q = p[static_cast<std::size_t>(cur)];
                if (lay.is_boundary(q)) break;
                split = std::max(split, lay.seam_index(q) + 1);
                cur = lay.twin(q);
            }
        }
    }
    auto shift = [&](Point pt) {
        if ((pt.side == Side::left || pt.side == Side::right) && pt.index >= split) pt.index += d.ess();
        return pt;
    };
    for (auto [a, b] : d.arcs()) raw.arcs.emplace_back(shift(a), shift(b));
    for (int c = 0; c < d.ess(); ++c)
        raw.arcs.emplace_back(Point{Side::left, split + c}, Point{Side::right, split + c});
    return raw;
}

std::vector<Reduction> append_strand(const AnnularDiagram& d) {
    RawDiagram raw = expand(d);
    const int k = raw.seam;
    Layout src{raw.dom, raw.cod, k};
    Layout lr{raw.dom + 1, raw.cod + 1, k};
    const int base = lr.size();
    // Crossing j owns four ends: the old arc coming in from the left, the stub
    // to R_j, and the new strand below and above it.
    auto end_left = [&](int j) { return base + 4 * j; };
    auto end_right = [&](int j) { return base + 4 * j + 1; };
    auto end_below = [&](int j) { return base + 4 * j + 2; };
    auto end_above = [&](int j) { return base + 4 * j + 3; };
    const int total = base + 4 * k;

    std::vector<int> fixed(static_cast<std::size_t>(total), kNone);
    auto link = [&](int a, int b) {
        fixed[static_cast<std::size_t>(a)] = b;
        fixed[static_cast<std::size_t>(b)] = a;
    };
    auto map_old = [&](Point pt) {
        switch (pt.side) {
        case Side::inner: return lr.inner(pt.index);
        case Side::outer: return lr.outer(pt.index);
        case Side::left: return lr.left(pt.index);
        case Side::right: return end_left(pt.index);
        }
        return kNone;
    };
    for (auto [a, b] : raw.arcs) link(map_old(a), map_old(b));
    for (int j = 0; j < k; ++j) link(end_right(j), lr.right(j));
    const int new_in = lr.inner(src.dom);
    const int new_out = lr.outer(src.cod);
    if (k == 0) {
        link(new_in, new_out);
    } else {
        link(new_in, end_below(0));
        for (int j = 0; j + 1 < k; ++j) link(end_above(j), end_below(j + 1));
        link(end_above(k - 1), new_out);
    }

    std::vector<Reduction> out;
    std::vector<int> smooth(static_cast<std::size_t>(total), kNone);
    std::vector<char> seen(static_cast<std::size_t>(total), 0);
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
        for (int j = 0; j < k; ++j) {
            bool turn = (mask >> j) & 1UL;
            int a = end_below(j), b = turn ? end_right(j) : end_left(j);
            int c = end_above(j), e = turn ? end_left(j) : end_right(j);
            smooth[static_cast<std::size_t>(a)] = b;
            smooth[static_cast<std::size_t>(b)] = a;
            smooth[static_cast<std::size_t>(c)] = e;
            smooth[static_cast<std::size_t>(e)] = c;
        }
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<int> p(static_cast<std::size_t>(base), kNone);
        for (int r = 0; r < base; ++r) {
            if (p[static_cast<std::size_t>(r)] != kNone) continue;
            int cur = fixed[static_cast<std::size_t>(r)];
            while (cur >= base) {
                seen[static_cast<std::size_t>(cur)] = 1;
                cur = smooth[static_cast<std::size_t>(cur)];
                seen[static_cast<std::size_t>(cur)] = 1;
                cur = fixed[static_cast<std::size_t>(cur)];
            }
            p[static_cast<std::size_t>(r)] = cur;
            p[static_cast<std::size_t>(cur)] = r;
        }
        int loops = 0;
        for (int x = base; x < total; ++x) {
            if (seen[static_cast<std::size_t>(x)]) continue;
            ++loops;
            int cur = x;
            do {
                seen[static_cast<std::size_t>(cur)] = 1;
                cur = fixed[static_cast<std::size_t>(cur)];
                seen[static_cast<std::size_t>(cur)] = 1;
                cur = smooth[static_cast<std::size_t>(cur)];
            } while (cur != x);
        }
        Reduction red = DiagramBuilder::reduce(lr, 0, std::move(p));
        red.inessential += loops;
        out.push_back(std::move(red));
    }
    return out;
}

namespace diagrams {

namespace {

AnnularDiagram from_arcs(int dom, int cod, int seam, const std::vector<std::pair<Point, Point>>& arcs) {
    Reduction r = canonicalize({dom, cod, seam, 0, arcs});
    return r.diagram;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::out_of_range(what);
}

} // namespace

AnnularDiagram identity(int n) {
    require(n >= 0, "identity: negative strand count");
    std::vector<std::pair<Point, Point>> arcs;
    for (int j = 0; j < n; ++j) arcs.push_back({{Side::inner, j}, {Side::outer, j}});
    return from_arcs(n, n, 0, arcs);
}

AnnularDiagram cap(int n, int i) {
    require(n >= 2 && i >= 1 && i <= n - 1, "cap: index out of range");
    std::vector<std::pair<Point, Point>> arcs{{{Side::inner, i - 1}, {Side::inner, i}}};
    for (int j = 0; j < n; ++j) {
        if (j == i - 1 || j == i) continue;
        arcs.push_back({{Side::inner, j}, {Side::outer, j < i ? j : j - 2}});
    }
    return from_arcs(n, n - 2, 0, arcs);
}

AnnularDiagram cup(int n, int i) {
    require(n >= 0 && i >= 1 && i <= n + 1, "cup: index out of range");
    std::vector<std::pair<Point, Point>> arcs{{{Side::outer, i - 1}, {Side::outer, i}}};
    for (int j = 0; j < n; ++j) arcs.push_back({{Side::inner, j}, {Side::outer, j < i - 1 ? j : j + 2}});
    return from_arcs(n, n + 2, 0, arcs);
}

AnnularDiagram rotation(int n, int power) {
    require(n >= 0 && (power == 1 || power == -1), "rotation: bad arguments");
    if (n == 0) return identity(0);
    std::vector<std::pair<Point, Point>> arcs;
    if (power == 1) {
        arcs.push_back({{Side::inner, 0}, {Side::left, 0}});
        arcs.push_back({{Side::right, 0}, {Side::outer, n - 1}});
        for (int j = 1; j < n; ++j) arcs.push_back({{Side::inner, j}, {Side::outer, j - 1}});
    } else {
        arcs.push_back({{Side::inner, n - 1}, {Side::right, 0}});
        arcs.push_back({{Side::left, 0}, {Side::outer, 0}});
        for (int j = 0; j + 1 < n; ++j) arcs.push_back({{Side::inner, j}, {Side::outer, j + 1}});
    }
    return from_arcs(n, n, 1, arcs);
}

AnnularDiagram planar_u(int n, int i) {
    require(n >= 2 && i >= 1 && i <= n - 1, "planar_u: index out of range");
    std::vector<std::pair<Point, Point>> arcs{{{Side::inner, i - 1}, {Side::inner, i}},
                                               {{Side::outer, i - 1}, {Side::outer, i}}};
    for (int j = 0; j < n; ++j)
        if (j != i - 1 && j != i) arcs.push_back({{Side::inner, j}, {Side::outer, j}});
    return from_arcs(n, n, 0, arcs);
}

AnnularDiagram essential_circle() {
    Reduction r = canonicalize({0, 0, 1, 0, {{{Side::left, 0}, {Side::right, 0}}}});
    return r.diagram;
}

} // namespace diagrams

} // namespace atl
