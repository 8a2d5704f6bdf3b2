#pragma once

#include <string>
#include <vector>

#include "cauchon/cells.hpp"
#include "cauchon/diagram.hpp"
#include "cauchon/exactmat.hpp"
#include "cauchon/flow.hpp"
#include "cauchon/minors.hpp"
#include "cauchon/network.hpp"
#include "cauchon/perm.hpp"
#include "json.hpp"

namespace cauchon {

using Json = nlohmann::json;

std::string read_file(const std::string& path);

// {"m":2,"p":2,"entries":[["1","2"],["3","4"]]}; entries may also be numbers.
RatMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const RatMatrix& a);
// One row per line, entries separated by commas and/or whitespace.
RatMatrix matrix_from_csv(const std::string& text);
std::string matrix_to_csv(const RatMatrix& a);
// JSON when the text starts with '{', CSV otherwise.
RatMatrix parse_matrix(const std::string& text);
RatMatrix load_matrix(const std::string& path);

// Any matrix whose entries have a to_string(), as rows of strings.
template <class T, class F>
Json matrix_to_json_with(const Matrix<T>& a, F&& show) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(show(a(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"m", a.rows()}, {"p", a.cols()}, {"entries", std::move(rows)}};
}

// {"rows":[1,2],"cols":[2,3]}
Json minor_to_json(const MinorIndex& ix);
MinorIndex minor_from_json(const Json& j);
// {"m":3,"p":3,"family":[{"rows":..,"cols":..},...]}
Json family_to_json(const MinorFamily& f);
MinorFamily family_from_json(const Json& j);
MinorFamily load_family(const std::string& path);

// {"m":3,"p":3,"black":[[1,2],[2,1],[2,2]]}
Json diagram_to_json(const CauchonDiagram& d);
Grid grid_from_json(const Json& j);
// JSON or the '.'/'#' (or Le 0/1) text form.
Grid parse_grid(const std::string& text);
CauchonDiagram load_diagram(const std::string& path);

// {"diagram":{...},"permutation":"135246","family":{...}}
Json descriptor_to_json(const CellDescriptor& d);

Json network_to_json(const PlanarNetwork& net);
PlanarNetwork network_from_json(const Json& j);
std::string network_to_dot(const PlanarNetwork& net);

// {"m":2,"p":2,"params":{"beta":"3"},"entries":[["0","beta"],["gamma","2*beta*gamma*t"]]}
FlowPath flow_from_json(const Json& j);

}  // namespace cauchon
