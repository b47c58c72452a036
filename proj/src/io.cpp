#include "pxmod/io.hpp"

#include <fstream>
#include <sstream>

namespace pxmod {

namespace {

const json& need(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::string variety_name(AlgVariety v) {
  return v == AlgVariety::Associative ? "assoc" : "leibniz";
}

AlgVariety variety_parse(const std::string& s) {
  if (s == "assoc") return AlgVariety::Associative;
  if (s == "leibniz") return AlgVariety::Leibniz;
  throw ParseError("unknown algebra variety \"" + s + "\"");
}

/// A reference is an inline object or a string path relative to dir.
json resolve_ref(const json& j, const std::filesystem::path& dir,
                 std::filesystem::path& subdir) {
  if (j.is_string()) {
    std::filesystem::path p = dir / j.get<std::string>();
    subdir = p.parent_path();
    return read_json_file(p);
  }
  subdir = dir;
  return j;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------- groups --

json group_to_json(const FiniteGroup& g) {
  return json{{"name", g.name}, {"order", g.order}, {"mult", g.mult}};
}

GroupRef group_from_json(const json& j) {
  try {
    std::size_t order = need(j, "order").get<std::size_t>();
    auto mult = need(j, "mult").get<std::vector<std::vector<Elt>>>();
    if (mult.size() != order) throw ParseError("mult table size disagrees with order");
    std::string name = j.value("name", "");
    return group_validate(mult, name);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad group file: ") + e.what());
  }
}

// -------------------------------------------------------------- algebras --

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (const Vec& r : m) {
    json row = json::array();
    for (const Scalar& s : r) row.push_back(scalar_to_string(s));
    rows.push_back(row);
  }
  return rows;
}

Mat matrix_from_json(const Field& k, const json& j) {
  try {
    Mat m;
    for (const json& row : j) {
      Vec r;
      for (const json& cell : row) r.push_back(scalar_parse(k, cell.get<std::string>()));
      m.push_back(r);
    }
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad matrix: ") + e.what());
  }
}

json algebra_to_json(const StructAlgebra& a) {
  json c = json::array();
  for (const Mat& ci : a.c) c.push_back(matrix_to_json(ci));
  return json{{"name", a.name},         {"field", a.field.name()},
              {"dim", a.dim},           {"variety", variety_name(a.variety)},
              {"lie", a.lie},           {"c", c}};
}

AlgebraRef algebra_from_json(const json& j) {
  try {
    Field k = Field::parse(need(j, "field").get<std::string>());
    std::size_t dim = need(j, "dim").get<std::size_t>();
    AlgVariety v = variety_parse(need(j, "variety").get<std::string>());
    bool lie = need(j, "lie").get<bool>();
    std::vector<Mat> c;
    for (const json& ci : need(j, "c")) c.push_back(matrix_from_json(k, ci));
    if (c.size() != dim) throw ParseError("structure tensor size disagrees with dim");
    return algebra_validate(k, dim, v, lie, c, j.value("name", ""));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad algebra file: ") + e.what());
  }
}

// --------------------------------------------------------------- actions --

json action_to_json(const GroupAction& a) {
  return json{{"variety", "group"},
              {"b", group_to_json(*a.acting)},
              {"x", group_to_json(*a.acted)},
              {"table", a.table}};
}

GroupAction group_action_from_json(const json& j, const std::filesystem::path& dir) {
  try {
    if (need(j, "variety").get<std::string>() != "group")
      throw ParseError("action variety is not \"group\"");
    std::filesystem::path sub;
    GroupRef b = group_from_json(resolve_ref(need(j, "b"), dir, sub));
    GroupRef x = group_from_json(resolve_ref(need(j, "x"), dir, sub));
    auto table = need(j, "table").get<std::vector<std::vector<Elt>>>();
    return action_validate(b, x, table);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad action file: ") + e.what());
  }
}

json action_to_json(const AlgebraAction& a) {
  json lambda = json::array(), rho = json::array();
  for (const Mat& m : a.lambda) lambda.push_back(matrix_to_json(m));
  for (const Mat& m : a.rho) rho.push_back(matrix_to_json(m));
  return json{{"variety", variety_name(a.acted->variety)},
              {"b", algebra_to_json(*a.acting)},
              {"x", algebra_to_json(*a.acted)},
              {"lambda", lambda},
              {"rho", rho}};
}

AlgebraAction algebra_action_from_json(const json& j, const std::filesystem::path& dir) {
  try {
    variety_parse(need(j, "variety").get<std::string>());  // must be an algebra tag
    std::filesystem::path sub;
    AlgebraRef b = algebra_from_json(resolve_ref(need(j, "b"), dir, sub));
    AlgebraRef x = algebra_from_json(resolve_ref(need(j, "x"), dir, sub));
    std::vector<Mat> lambda, rho;
    for (const json& m : need(j, "lambda")) lambda.push_back(matrix_from_json(x->field, m));
    for (const json& m : need(j, "rho")) rho.push_back(matrix_from_json(x->field, m));
    return action_validate(b, x, lambda, rho);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad action file: ") + e.what());
  }
}

// ------------------------------------------------------------------ pcms --

json pcm_to_json(const GroupPcm& p) {
  return json{{"variety", "group"},
              {"name", p.name},
              {"x", group_to_json(*p.x)},
              {"b", group_to_json(*p.b)},
              {"delta", p.delta.map},
              {"action", action_to_json(p.xi)}};
}

json pcm_to_json(const AlgebraPcm& p) {
  return json{{"variety", variety_name(p.x->variety)},
              {"name", p.name},
              {"x", algebra_to_json(*p.x)},
              {"b", algebra_to_json(*p.b)},
              {"delta", matrix_to_json(p.delta.matrix)},
              {"action", action_to_json(p.xi)}};
}

LoadedPcm pcm_from_json(const json& j, const std::filesystem::path& dir) {
  std::string variety;
  try {
    variety = need(j, "variety").get<std::string>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad pcm file: ") + e.what());
  }
  std::filesystem::path sub;
  if (variety == "group") {
    GroupRef x, b;
    std::vector<Elt> dmap;
    GroupAction xi{nullptr, nullptr, {}};
    try {
      x = group_from_json(resolve_ref(need(j, "x"), dir, sub));
      b = group_from_json(resolve_ref(need(j, "b"), dir, sub));
      dmap = need(j, "delta").get<std::vector<Elt>>();
      xi = group_action_from_json(resolve_ref(need(j, "action"), dir, sub), sub);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad pcm file: ") + e.what());
    }
    LoadedPcm out;
    out.group = pcm_validate(x, b, morphism_validate(x, b, dmap), xi, j.value("name", ""));
    return out;
  }
  AlgVariety v = variety_parse(variety);
  AlgebraRef x, b;
  Mat dmat;
  std::optional<AlgebraAction> xi;
  try {
    x = algebra_from_json(resolve_ref(need(j, "x"), dir, sub));
    b = algebra_from_json(resolve_ref(need(j, "b"), dir, sub));
    dmat = matrix_from_json(b->field, need(j, "delta"));
    xi = algebra_action_from_json(resolve_ref(need(j, "action"), dir, sub), sub);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad pcm file: ") + e.what());
  }
  if (x->variety != v) throw ParseError("pcm variety tag disagrees with the carrier algebra");
  LoadedPcm out;
  out.algebra =
      pcm_validate(x, b, linear_map_validate(x, b, dmat), *xi, j.value("name", ""));
  return out;
}

LoadedPcm load_pcm(const std::filesystem::path& path) {
  return pcm_from_json(read_json_file(path), path.parent_path());
}

// ------------------------------------------------- morphisms, subobjects --

json morphism_to_json(const GroupPXMorphism& f) {
  return json{{"source", pcm_to_json(*f.source)},
              {"target", pcm_to_json(*f.target)},
              {"map", f.f.map}};
}

json morphism_to_json(const AlgebraPXMorphism& f) {
  return json{{"source", pcm_to_json(*f.source)},
              {"target", pcm_to_json(*f.target)},
              {"map", matrix_to_json(f.f.matrix)}};
}

json subobject_to_json(const GroupSubPcm& s) {
  return json{{"ambient", pcm_to_json(*s.ambient)}, {"elements", s.elems}};
}

json subobject_to_json(const AlgebraSubPcm& s) {
  return json{{"ambient", pcm_to_json(*s.ambient)},
              {"basis", matrix_to_json(s.space.basis)}};
}

}  // namespace pxmod
