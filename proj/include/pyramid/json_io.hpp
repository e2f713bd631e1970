#pragma once

#include <string>

#include "json.hpp"
#include "pyramid/board.hpp"
#include "pyramid/phi.hpp"
#include "pyramid/series.hpp"
#include "pyramid/solid.hpp"

namespace pyramid {

using Json = nlohmann::ordered_json;

// {"vars":["q0","q1"],"max_total_degree":D,"terms":[{"e0":..,"e1":..,"c":"..."]}
// with terms sorted by (e0,e1); (z,q) series carry "max_degrees":[d0,d1]
// instead of the total bound.
Json series_to_json(const Series& s);
Series series_from_json(const Json& j);

Json dimer_to_json(const Dimer& d); // [[x1,y1],[x2,y2]], endpoints sorted
Dimer dimer_from_json(const Json& j);

// {"n":..,"window":[xmin,ymin,xmax,ymax],"diff_dimers":[...]} where
// diff_dimers lists the dimers present here but absent from the empty
// room (the removed empty-room dimers are recoverable); deficient covers
// add "missing":[[x,y],...] and "missing_parity".
Json config_to_json(const DimerConfig& cfg);
DimerConfig config_from_json(const Json& j, const Board& eps);

Json deficient_to_json(const DeficientConfig& def);

// {"lambda":[...],"pi0_extra":[[x,y,z],...],"piInf_extra":[...]}
Json superrigid_to_json(const SuperRigid& sr);
SuperRigid superrigid_from_json(const Json& j);

} // namespace pyramid
