#ifndef ATL_RENDER_HPP
#define ATL_RENDER_HPP

#include <string>

#include "atl/morphism.hpp"

namespace atl::render {

/// One annulus per term, inner boundary = domain, outer = codomain, the
/// base-point arc dashed and pointing down.  Output depends only on the
/// canonical terms, so equal morphisms render byte-identically.
std::string svg(const Morphism& x);
std::string tikz(const Morphism& x);
/// Strands traced through the seam, one line each.
std::string ascii(const Morphism& x);

} // namespace atl::render

#endif // ATL_RENDER_HPP
