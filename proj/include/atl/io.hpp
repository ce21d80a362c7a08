#ifndef ATL_IO_HPP
#define ATL_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "atl/canon.hpp"
#include "atl/morphism.hpp"
#include "atl/rep.hpp"

namespace atl::io {

using Json = nlohmann::ordered_json;

/// {"dom":m,"cod":n,"terms":[{"coeff":"1/2","diagram":{"seam":k,"ess":c,"arcs":[["I0","O0"],...]}}]}
Json to_json(const Morphism& x);
/// Arc lists are canonicalized on the way in; closed components they contain
/// are absorbed into the coefficient (inessential) or the ess count.
/// Throws std::invalid_argument on schema violations.
Morphism morphism_from_json(const Json& j);

/// {"dom":m,"cod":n,"entries":[["<row signs>","<col signs>","<scalar>"],...]}
Json to_json(const WeightMap& w);
WeightMap weight_map_from_json(const Json& j);

/// {"labels":["io",...],"coords":["<scalar>",...]}
Json coordinates_json(int two_n, const std::vector<Scalar>& coords);

std::string dump(const Json& j);
Json parse(const std::string& text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace atl::io

#endif // ATL_IO_HPP
