#include "cauchon/io.hpp"

#include <fstream>
#include <sstream>

#include "cauchon/error.hpp"

namespace cauchon {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace {

Rat rat_from_json(const Json& v) {
  if (v.is_string()) return parse_rat(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long>());
  throw DomainError("matrix entries must be strings or integers, got " + v.dump());
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw DomainError(std::string("bad field \"") + key + "\": " + e.what());
  }
}


std::string trim_left(const std::string& s) {
  const auto pos = s.find_first_not_of(" \t\r\n");
  return pos == std::string::npos ? "" : s.substr(pos);
}

}  // namespace

RatMatrix matrix_from_json(const Json& j) {
  const Json rows = field<Json>(j, "entries");
  if (!rows.is_array() || rows.empty()) throw DomainError("\"entries\" must be a nonempty array of rows");
  std::vector<std::vector<Rat>> out;
  for (const auto& row : rows) {
    if (!row.is_array()) throw DomainError("each matrix row must be an array");
    std::vector<Rat> r;
    for (const auto& v : row) r.push_back(rat_from_json(v));
    out.push_back(std::move(r));
  }
  RatMatrix a = RatMatrix::from_rows(out);
  if (j.contains("m") && field<std::size_t>(j, "m") != a.rows()) throw DomainError("\"m\" disagrees with the rows");
  if (j.contains("p") && field<std::size_t>(j, "p") != a.cols()) throw DomainError("\"p\" disagrees with the rows");
  return a;
}

Json matrix_to_json(const RatMatrix& a) {
  return matrix_to_json_with(a, [](const Rat& r) { return to_string(r); });
}

RatMatrix matrix_from_csv(const std::string& text) {
  std::vector<std::vector<Rat>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    for (char& ch : line)
      if (ch == ',' || ch == ';' || ch == '\t' || ch == '\r') ch = ' ';
    std::istringstream cells(line);
    std::vector<Rat> row;
    for (std::string cell; cells >> cell;) row.push_back(parse_rat(cell));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return RatMatrix::from_rows(rows);
}

std::string matrix_to_csv(const RatMatrix& a) {
  std::string out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out += (c ? "," : "") + to_string(a(r, c));
    out += '\n';
  }
  return out;
}

RatMatrix parse_matrix(const std::string& text) {
  const std::string t = trim_left(text);
  if (!t.empty() && t.front() == '{') return matrix_from_json(parse_json(t));
  return matrix_from_csv(text);
}

RatMatrix load_matrix(const std::string& path) { return parse_matrix(read_file(path)); }

Json minor_to_json(const MinorIndex& ix) { return Json{{"rows", ix.rows}, {"cols", ix.cols}}; }

MinorIndex minor_from_json(const Json& j) {
  return MinorIndex(field<std::vector<int>>(j, "rows"), field<std::vector<int>>(j, "cols"));
}

Json family_to_json(const MinorFamily& f) {
  Json members = Json::array();
  for (const auto& ix : f.members) members.push_back(minor_to_json(ix));
  return Json{{"m", f.m}, {"p", f.p}, {"family", std::move(members)}};
}

MinorFamily family_from_json(const Json& j) {
  MinorFamily f(field<std::size_t>(j, "m"), field<std::size_t>(j, "p"));
  if (f.m == 0 || f.p == 0) throw DomainError("family shape must be positive");
  for (const auto& item : field<Json>(j, "family")) {
    // "[1,2|2,3]" strings are accepted too
    if (item.is_string())
      f.insert(parse_minor_index(item.get<std::string>()));
    else
      f.insert(minor_from_json(item));
  }
  return f;
}

MinorFamily load_family(const std::string& path) { return family_from_json(parse_json(read_file(path))); }

Json diagram_to_json(const CauchonDiagram& d) {
  Json black = Json::array();
  for (const auto& c : d.black_cells()) black.push_back({c.row, c.col});
  return Json{{"m", d.rows()}, {"p", d.cols()}, {"black", std::move(black)}};
}

Grid grid_from_json(const Json& j) {
  Grid g(field<std::size_t>(j, "m"), field<std::size_t>(j, "p"));
  for (const auto& cell : field<Json>(j, "black")) {
    if (!cell.is_array() || cell.size() != 2) throw DomainError("black cells must be [row, col] pairs");
    g.set_black(cell[0].get<int>(), cell[1].get<int>());
  }
  return g;
}

Grid parse_grid(const std::string& text) {
  const std::string t = trim_left(text);
  if (!t.empty() && t.front() == '{') return grid_from_json(parse_json(t));
  return parse_grid_text(text);
}

CauchonDiagram load_diagram(const std::string& path) { return CauchonDiagram::from_grid(parse_grid(read_file(path))); }

Json descriptor_to_json(const CellDescriptor& d) {
  return Json{{"diagram", diagram_to_json(d.diagram)},
              {"permutation", to_one_line(d.permutation.w)},
              {"family", family_to_json(d.family)}};
}

Json network_to_json(const PlanarNetwork& net) {
  Json vs = Json::array(), es = Json::array();
  for (std::size_t v = 0; v < net.vertices.size(); ++v)
    vs.push_back({{"id", v}, {"name", net.vertices[v].name}, {"x", net.vertices[v].x}, {"y", net.vertices[v].y}});
  for (const auto& e : net.edges) es.push_back({{"from", e.from}, {"to", e.to}, {"weight", to_string(e.weight)}});
  return Json{{"vertices", vs}, {"edges", es}, {"sources", net.sources}, {"sinks", net.sinks}};
}

PlanarNetwork network_from_json(const Json& j) {
  PlanarNetwork net;
  std::size_t expect = 0;
  for (const auto& v : field<Json>(j, "vertices")) {
    if (v.contains("id") && field<std::size_t>(v, "id") != expect++)
      throw DomainError("vertex ids must be 0, 1, 2, ... in order");
    net.add_vertex(v.value("name", ""), v.value("x", 0), v.value("y", 0));
  }
  for (const auto& e : field<Json>(j, "edges"))
    net.add_edge(field<std::size_t>(e, "from"), field<std::size_t>(e, "to"),
                 e.contains("weight") ? rat_from_json(e.at("weight")) : Rat(1));
  net.sources = field<std::vector<std::size_t>>(j, "sources");
  net.sinks = field<std::vector<std::size_t>>(j, "sinks");
  net.validate();
  return net;
}

std::string network_to_dot(const PlanarNetwork& net) {
  std::ostringstream os;
  os << "digraph network {\n  node [shape=circle, fixedsize=true, width=0.4];\n";
  for (std::size_t v = 0; v < net.vertices.size(); ++v) {
    const auto& vx = net.vertices[v];
    os << "  n" << v << " [label=\"" << vx.name << "\", pos=\"" << vx.x << "," << -vx.y << "!\"];\n";
  }
  for (const auto& e : net.edges) {
    os << "  n" << e.from << " -> n" << e.to;
    if (e.weight != 1) os << " [label=\"" << to_string(e.weight) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

FlowPath flow_from_json(const Json& j) {
  FlowPath path;
  if (j.contains("params"))
    for (const auto& [name, v] : j.at("params").items()) path.params.emplace(name, rat_from_json(v));
  std::vector<std::vector<ExpPoly>> rows;
  for (const auto& row : field<Json>(j, "entries")) {
    std::vector<ExpPoly> r;
    for (const auto& v : row) {
      if (v.is_number_integer())
        r.emplace_back(Rat(v.get<long>()));
      else
        r.push_back(parse_exp_poly(v.get<std::string>(), path.params));
    }
    rows.push_back(std::move(r));
  }
  path.entries = Matrix<ExpPoly>::from_rows(rows);
  path.m = path.entries.rows();
  path.p = path.entries.cols();
  return path;
}

}  // namespace cauchon
