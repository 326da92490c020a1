#pragma once

#include <json.hpp>

#include "orbivertex/correspondence.hpp"

namespace orbivertex {

using nlohmann::json;

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const MultiPartition& m);
MultiPartition multipartition_from_json(const json& j, long modulus);

json to_json(const ColoredDiagram& d);

json to_json(const Cyclo& c);
Cyclo cyclo_from_json(const json& j);

json to_json(const ExpMonomial& m);
ExpMonomial monomial_from_json(const json& j);

json to_json(const Window& w);
json to_json(const PuiseuxSeries& s);
PuiseuxSeries series_from_json(const json& j);

json to_json(const AffineForm& f);

// every CLI document carries this schema tag
inline json schema_doc() { return json{{"schema", "orbivertex/1"}}; }

} // namespace orbivertex
