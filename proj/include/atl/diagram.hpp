#ifndef ATL_DIAGRAM_HPP
#define ATL_DIAGRAM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace atl {

/// Boundary point families of the cut rectangle: inner (I), outer (O), and the
/// left/right copies (L/R) of each crossing of the base-point arc.
enum class Side : std::uint8_t { inner, outer, left, right };

struct Point {
    Side side;
    int index;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

/// "I0", "O3", "L1", "R0".
std::string point_label(Point p);
/// Inverse of point_label; throws std::invalid_argument.
Point parse_point_label(const std::string& label);

/// Arc list as written before reduction.  Closed components and seam bigons
/// are allowed here; canonicalize() removes them.
struct RawDiagram {
    int dom = 0;
    int cod = 0;
    int seam = 0;
    int ess = 0;
    std::vector<std::pair<Point, Point>> arcs;
};

/// Canonical annular crossingless tangle in cut-rectangle form.
///
/// Points are numbered I_0..I_{dom-1}, O_0..O_{cod-1}, L_0..L_{seam-1},
/// R_0..R_{seam-1}; seam crossings are ordered from the inner to the outer
/// boundary.  The matching is noncrossing along the boundary cycle
/// I_0..I_{dom-1}, R_0..R_{seam-1}, O_{cod-1}..O_0, L_{seam-1}..L_0, contains
/// no L_j-R_j arc (recorded in `ess` instead) and no L_j-L_{j+1} or
/// R_j-R_{j+1} arc.
class AnnularDiagram {
public:
    AnnularDiagram() = default;

    int dom() const { return dom_; }
    int cod() const { return cod_; }
    int seam() const { return seam_; }
    int ess() const { return ess_; }

    int point_count() const { return dom_ + cod_ + 2 * seam_; }
    int id(Point p) const;
    Point point(int id) const;
    Point partner(Point p) const { return point(partner_[static_cast<std::size_t>(id(p))]); }
    const std::vector<int>& partners() const { return partner_; }

    /// Arcs as (smaller, larger) point pairs in increasing order.
    std::vector<std::pair<Point, Point>> arcs() const;
    int through_strands() const;

    /// Position of a point along the boundary cycle of the cut rectangle.
    int cycle_position(Point p) const;

    friend bool operator==(const AnnularDiagram&, const AnnularDiagram&) = default;
    /// Total order on (dom, cod, seam, ess, sorted arc list).
    friend std::strong_ordering operator<=>(const AnnularDiagram& a, const AnnularDiagram& b);

    std::size_t hash() const;

private:
    friend struct DiagramBuilder;

    int dom_ = 0;
    int cod_ = 0;
    int seam_ = 0;
    int ess_ = 0;
    std::vector<int> partner_;
};

/// Canonical diagram together with the closed components removed from it.
struct Reduction {
    AnnularDiagram diagram;
    int inessential = 0;
    int essential = 0;
};

/// Removes closed components (classified by net signed seam crossings; zero
/// means inessential) and seam bigons until none remain.  Essential circles
/// are added to diagram.ess and also reported in `essential`.
/// Throws std::invalid_argument if the arcs do not form a noncrossing perfect matching.
Reduction canonicalize(const RawDiagram& raw);

/// Glues inner.cod to outer.dom (inner applied first).  Throws
/// std::invalid_argument on a boundary mismatch.
Reduction compose(const AnnularDiagram& inner, const AnnularDiagram& outer);

/// The diagram as a raw arc list, with essential circles written out as
/// L_j-R_j arcs placed between the inner- and outer-attached arcs.
RawDiagram expand(const AnnularDiagram& d);

/// Superposes a radial strand to the right of the last boundary points.  The
/// new strand crosses every seam crossing (essential circles included); each
/// crossing is replaced by the sum of its two smoothings, so the result has
/// 2^(seam+ess) terms before merging.
std::vector<Reduction> append_strand(const AnnularDiagram& d);

namespace diagrams {

AnnularDiagram identity(int n);
/// Cap joining strands i and i+1 (1-based) of n strands: n -> n-2.
AnnularDiagram cap(int n, int i);
/// Cup creating strands i and i+1 (1-based) of n+2 strands: n -> n+2.
AnnularDiagram cup(int n, int i);
/// Rotation on n strands; the first strand travels across the base-point
/// arc to the last position (power = +1) or the reverse (power = -1).
AnnularDiagram rotation(int n, int power);
/// Planar U_i, 1 <= i <= n-1.
AnnularDiagram planar_u(int n, int i);
/// Closed essential circle with no boundary points.
AnnularDiagram essential_circle();

} // namespace diagrams

} // namespace atl

template <>
struct std::hash<atl::AnnularDiagram> {
    std::size_t operator()(const atl::AnnularDiagram& d) const noexcept { return d.hash(); }
};

#endif // ATL_DIAGRAM_HPP
