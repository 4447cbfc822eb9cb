#include "crclass/manifold.hpp"

#include "crclass/errors.hpp"
#include "crclass/parser.hpp"

namespace crclass {

PointAssignment PointAssignment::origin(Shape shape) {
  PointAssignment p;
  p.z.assign(shape.n, GaussianRational());
  p.u.assign(shape.c, mpq_class(0));
  return p;
}

SlotValues PointAssignment::slot_values() const {
  SlotValues v{};
  for (std::size_t k = 0; k < z.size(); ++k) {
    v[VarId::z(static_cast<int>(k) + 1).slot()] = z[k];
    v[VarId::zbar(static_cast<int>(k) + 1).slot()] = z[k].conj();
  }
  for (std::size_t l = 0; l < u.size(); ++l) v[VarId::u(static_cast<int>(l) + 1).slot()] = GaussianRational(u[l]);
  return v;
}

ExprMatrix cramer_system_matrix(Shape shape, const std::vector<RationalExpr>& phi) {
  ExprMatrix m(shape.c, std::vector<RationalExpr>(shape.c));
  for (int j = 0; j < shape.c; ++j) {
    for (int l = 0; l < shape.c; ++l) {
      m[j][l] = phi[j].diff(VarId::u(l + 1));
      if (j == l) m[j][l] += RationalExpr(GaussianRational::i());
    }
  }
  return m;
}

namespace {

unsigned allowed_slots(Shape shape) {
  unsigned mask = 0;
  for (int d = 0; d < shape.dim(); ++d) mask |= 1u << shape.direction_slot(d);
  return mask;
}

}  // namespace

ValidatedSpec validate_manifold(ManifoldSpec spec) {
  using Kind = ValidationError::Kind;
  const Shape shape = spec.shape;
  if (!shape.supported()) {
    throw ValidationError(Kind::Dimension, "unsupported (n, c) = (" + std::to_string(shape.n) + ", " +
                                               std::to_string(shape.c) +
                                               "); expected one of (1,1), (1,2), (1,3), (2,1)");
  }
  if (static_cast<int>(spec.phi.size()) != shape.c) {
    throw ValidationError(Kind::Dimension, "expected " + std::to_string(shape.c) + " graphing functions, got " +
                                               std::to_string(spec.phi.size()));
  }
  if (static_cast<int>(spec.point.z.size()) != shape.n || static_cast<int>(spec.point.u.size()) != shape.c) {
    throw ValidationError(Kind::Dimension, "base point does not match (n, c)");
  }
  const unsigned allowed = allowed_slots(shape);
  for (int j = 0; j < shape.c; ++j) {
    const auto& f = spec.phi[j];
    const std::string name = "phi" + std::to_string(j + 1);
    if (((f.num().used_slots() | f.den().used_slots()) & ~allowed) != 0) {
      throw ValidationError(Kind::Dimension, name + " uses a variable outside the declared (n, c)");
    }
    if (!f.is_real()) throw ValidationError(Kind::Reality, name + " is not real: conj(" + name + ") != " + name);
  }

  const SlotValues p = spec.point.slot_values();
  ValidatedSpec out(std::move(spec));
  const auto& phi = out.spec_.phi;
  for (int j = 0; j < shape.c; ++j) {
    const std::string name = "phi" + std::to_string(j + 1);
    GaussianRational value;
    try {
      value = phi[j].eval(p);
    } catch (const PoleError&) {
      throw ValidationError(Kind::Pole, name + " has a pole at the base point");
    }
    if (!value.is_zero()) out.warnings_.push_back(name + "(p) = " + value.to_string() + " is not 0");
    for (int d = 0; d < shape.dim(); ++d) {
      const std::size_t slot = shape.direction_slot(d);
      if (!phi[j].diff_slot(slot).eval(p).is_zero()) {
        out.warnings_.push_back("d" + name + "/d" + VarId::from_slot(slot).name() + "(p) is not 0");
      }
    }
  }
  const RationalExpr det = determinant(cramer_system_matrix(shape, phi));
  GaussianRational det_at_p;
  try {
    det_at_p = det.eval(p);
  } catch (const PoleError&) {
    throw ValidationError(Kind::FrameSingular, "det(i*I + Phi_u) has a pole at the base point");
  }
  if (det_at_p.is_zero()) throw ValidationError(Kind::FrameSingular, "det(i*I + Phi_u) vanishes at the base point");
  return out;
}

ValidatedSpec ValidatedSpec::at_point(PointAssignment point) const {
  ManifoldSpec copy = spec_;
  copy.point = std::move(point);
  return validate_manifold(std::move(copy));
}

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw ValidationError(ValidationError::Kind::Schema, "manifold file: " + what);
}

std::vector<std::string> string_array(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) schema_error(std::string("\"") + key + "\" must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : doc[key]) {
    if (!item.is_string()) schema_error(std::string("\"") + key + "\" must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

GaussianRational number_at(const std::string& text, const std::string& where) {
  try {
    return parse_number(text);
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.offset(), where + ": " + std::string(e.what()).substr(0, std::string(e.what()).rfind(" at offset")));
  }
}

}  // namespace

PointAssignment point_from_json(const nlohmann::json& doc, Shape shape) {
  if (!doc.is_object()) schema_error("\"point\" must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "z" && key != "u") schema_error("unknown key \"" + key + "\" in point");
  }
  const auto zs = string_array(doc, "z");
  const auto us = string_array(doc, "u");
  if (static_cast<int>(zs.size()) != shape.n) schema_error("point.z must have n entries");
  if (static_cast<int>(us.size()) != shape.c) schema_error("point.u must have c entries");
  PointAssignment p;
  for (std::size_t k = 0; k < zs.size(); ++k) p.z.push_back(number_at(zs[k], "point.z[" + std::to_string(k) + "]"));
  for (std::size_t l = 0; l < us.size(); ++l) {
    const GaussianRational v = number_at(us[l], "point.u[" + std::to_string(l) + "]");
    if (!v.is_real()) {
      throw ValidationError(ValidationError::Kind::Reality, "point.u[" + std::to_string(l) + "] must be real");
    }
    p.u.push_back(v.re());
  }
  return p;
}

ManifoldSpec manifold_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) schema_error("top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "c" && key != "phi" && key != "point") schema_error("unknown key \"" + key + "\"");
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) schema_error("\"n\" must be an integer");
  if (!doc.contains("c") || !doc["c"].is_number_integer()) schema_error("\"c\" must be an integer");
  ManifoldSpec spec;
  spec.shape = Shape{doc["n"].get<int>(), doc["c"].get<int>()};
  if (!spec.shape.supported()) {
    throw ValidationError(ValidationError::Kind::Dimension,
                          "unsupported (n, c) = (" + std::to_string(spec.shape.n) + ", " + std::to_string(spec.shape.c) + ")");
  }
  const auto phis = string_array(doc, "phi");
  for (std::size_t j = 0; j < phis.size(); ++j) {
    try {
      spec.phi.push_back(parse_expr(phis[j], spec.shape));
    } catch (const ParseError& e) {
      const std::string msg = e.what();
      throw ParseError(e.kind(), e.offset(), "phi[" + std::to_string(j) + "]: " + msg.substr(0, msg.rfind(" at offset")));
    }
  }
  spec.point = doc.contains("point") ? point_from_json(doc["point"], spec.shape) : PointAssignment::origin(spec.shape);
  return spec;
}

ManifoldSpec manifold_from_json_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    schema_error(std::string("invalid JSON: ") + e.what());
  }
  return manifold_from_json(doc);
}

nlohmann::ordered_json manifold_to_json(const ManifoldSpec& spec) {
  nlohmann::ordered_json out;
  out["n"] = spec.shape.n;
  out["c"] = spec.shape.c;
  auto phi = nlohmann::ordered_json::array();
  for (const auto& f : spec.phi) phi.push_back(f.to_string());
  out["phi"] = phi;
  auto z = nlohmann::ordered_json::array();
  for (const auto& v : spec.point.z) z.push_back(v.to_string());
  auto u = nlohmann::ordered_json::array();
  for (const auto& v : spec.point.u) u.push_back(v.get_str());
  out["point"] = {{"z", z}, {"u", u}};
  return out;
}

}  // namespace crclass
