#include "colligate/colligation_io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace colligate {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Complex complex_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(path + ": complex entry must be a two-element [re, im] array");
  const double re = j[0].get<double>(), im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im))
    throw ParseError(path + ": non-finite entry");
  return {re, im};
}

Matrix matrix_from_json(const json& j, Index rows, Index cols, const std::string& path) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    throw ParseError(path + ": expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw ParseError(path + "[" + std::to_string(i) + "]: expected " + std::to_string(cols) +
                       " entries");
    for (Index k = 0; k < cols; ++k)
      m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)],
                                  path + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return m;
}

Index index_field(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(path + "." + key + ": expected an integer");
  return j[key].get<Index>();
}

Colligation load_parsed(const json& j) {
  if (!j.is_object()) throw ParseError("colligation file: expected a JSON object");
  if (!j.contains("structure")) throw ParseError("structure: missing");
  const json& sj = j["structure"];
  if (!sj.contains("kind") || !sj["kind"].is_string())
    throw ParseError("structure.kind: expected a string");

  StateStructure structure;
  const std::string kind = sj["kind"].get<std::string>();
  if (kind == "partition") {
    if (!sj.contains("dims") || !sj["dims"].is_array())
      throw ParseError("structure.dims: expected an array");
    PartitionStructure p;
    for (const json& dj : sj["dims"]) {
      if (!dj.is_number_integer()) throw ParseError("structure.dims: expected integers");
      p.dims.push_back(dj.get<Index>());
    }
    structure = std::move(p);
  } else if (kind == "matrix_ball") {
    QPencil q;
    q.s = index_field(sj, "s", "structure");
    q.r = index_field(sj, "r", "structure");
    const Index h = index_field(sj, "dim_h", "structure");
    if (!sj.contains("q") || !sj["q"].is_array())
      throw ParseError("structure.q: expected an array of coefficient matrices");
    for (std::size_t k = 0; k < sj["q"].size(); ++k)
      q.coeffs.push_back(
          matrix_from_json(sj["q"][k], q.s, q.r, "structure.q[" + std::to_string(k) + "]"));
    structure = MatrixBallStructure{std::move(q), h};
  } else {
    throw ParseError("structure.kind: unknown kind '" + kind + "'");
  }

  const Index in = input_dim(structure), out = output_dim(structure);
  for (const char* key : {"A", "B", "C", "D"})
    if (!j.contains(key)) throw ParseError(std::string(key) + ": missing");

  const Matrix a = matrix_from_json(j["A"], 1, 1, "A");
  Matrix b = matrix_from_json(j["B"], 1, in, "B");
  Matrix c = matrix_from_json(j["C"], out, 1, "C");
  Matrix d = matrix_from_json(j["D"], out, in, "D");
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";

  try {
    return assemble(std::move(structure), a(0, 0), std::move(b), std::move(c), std::move(d),
                    std::move(name));
  } catch (const ShapeError& e) {
    throw ParseError(std::string("colligation file: ") + e.what());
  }
}

}  // namespace

std::string save(const Colligation& v) {
  json j;
  j["name"] = v.name;
  if (v.is_partition()) {
    j["structure"] = {{"kind", "partition"}, {"dims", v.partition().dims}};
  } else {
    const MatrixBallStructure& mb = v.matrix_ball();
    json q = json::array();
    for (const Matrix& c : mb.pencil.coeffs) q.push_back(matrix_to_json(c));
    j["structure"] = {{"kind", "matrix_ball"},
                      {"s", mb.pencil.s},
                      {"r", mb.pencil.r},
                      {"dim_h", mb.dim_h},
                      {"q", std::move(q)}};
  }
  j["A"] = matrix_to_json((Matrix(1, 1) << v.A).finished());
  j["B"] = matrix_to_json(v.B);
  j["C"] = matrix_to_json(v.C);
  j["D"] = matrix_to_json(v.D);
  return j.dump(2) + "\n";
}

Colligation load(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("colligation file: ") + e.what());
  }
  try {
    return load_parsed(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("colligation file: ") + e.what());
  }
}


Colligation load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load(ss.str());
}

void save_file(const Colligation& v, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot open for writing");
  out << save(v);
}

}  // namespace colligate
