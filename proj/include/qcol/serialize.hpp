#pragma once

#include <json.hpp>

#include "qcol/bounds.hpp"
#include "qcol/coloring.hpp"
#include "qcol/diagram.hpp"
#include "qcol/families.hpp"
#include "qcol/laurent.hpp"

namespace qcol {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

// {min_exp, coeffs}
Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

// {name, arcs, crossings: [{sign, under_in, over, under_out}], components};
// arcs are 1-based.
Json to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

// {p, m, colors: {"1": c1, ...}}
Json to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

Json to_json(const BoundReport& r);
Json to_json(const CollapseReport& r);
Json to_json(const MinColorsResult& r);
Json to_json(const KhResult& r);
Json to_json(const TorusInterval& r);
Json to_json(const ScanEntry& e);

}  // namespace qcol
