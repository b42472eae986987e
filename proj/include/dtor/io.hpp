#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dtor/atlas.hpp"
#include "dtor/drinfeld.hpp"
#include "dtor/fan.hpp"
#include "dtor/xi.hpp"

namespace dtor {

using json = nlohmann::json;

json zvecs_json(const std::vector<ZVec>& v);
json qvec_json(const QVec& v);
json qmat_json(const QMat& m);
json cone_json(const Cone& c);
json fan_json(const Fan& f);
// per maximal source cone: source, image and the certified matrix l with xi_{k'} = l o pi_{k,sigma}
json image_fan_json(const ImageFan& f, bool with_maps, std::uint64_t seed);

// inverse of cone_json / fan_json, from rays and lineality (a fan from its maximal cones)
Cone cone_from_json(const json& j);
Fan fan_from_json(const json& j);

json laurent_json(const Laurent& x);
json module_json(const DrinfeldModule& phi);

// {q, d, phi_T: [...]} or {q, base: {d, phi_T}, lattice_steps: [{m, unit}]}; coefficients
// are polynomials in t such as "t^2+1"
struct ModuleSpec {
    long q = 2;
    DrinfeldModule base;
    std::vector<LatticeStep> steps;
};
ModuleSpec parse_module_spec(const json& j);

json atlas_json(const Atlas& at);
std::string atlas_dot(const Atlas& at);

std::string dump(const json& j);

}  // namespace dtor
