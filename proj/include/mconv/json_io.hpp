#pragma once

#include <nlohmann/json.hpp>

#include "mconv/euler.hpp"
#include "mconv/geometry.hpp"
#include "mconv/sdcheck.hpp"
#include "mconv/solver.hpp"
#include "mconv/transforms.hpp"

namespace mconv {

// Key order is preserved everywhere so identical inputs serialize to
// byte-identical output.
using ojson = nlohmann::ordered_json;

// Parse text, translating parser failures into ValidationError.
ojson parse_json(const std::string& text);

ojson to_json(const Rational& r);
Rational rational_from_json(const ojson& j);

ojson to_json(const PointDistribution& T);
PointDistribution distribution_from_json(const ojson& j);

ojson to_json(const EulerOperator& P);
EulerOperator operator_from_json(const ojson& j);
// {"dim":..., "xd":[{"alpha":..., "coef":...}]} for the x^a d^a presentation.
ojson xd_form_to_json(std::size_t dim, const std::map<MultiIndex, Rational>& xd);

ojson to_json(const SeriesTable& S);
SeriesTable series_from_json(const ojson& j);

ojson to_json(const RationalTransform& F);
RationalTransform transform_from_json(const ojson& j);

ojson to_json(const Interval& i);
Interval interval_from_json(const ojson& j);
ojson to_json(const Box& b);
Box box_from_json(const ojson& j);
ojson to_json(const PointSet& s);
PointSet pointset_from_json(const ojson& j);

ojson to_json(const GridFunction& g);
GridFunction grid_from_json(const ojson& j);

ojson to_json(const SDReport& r);

} // namespace mconv
