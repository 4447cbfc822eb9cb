#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "crclass/matrix.hpp"
#include "crclass/rational_expr.hpp"
#include "crclass/variables.hpp"

namespace crclass {

/// Base point: z in Q(i)^n, u in Q^c. zb is always conj(z).
struct PointAssignment {
  std::vector<GaussianRational> z;
  std::vector<mpq_class> u;

  static PointAssignment origin(Shape shape);
  SlotValues slot_values() const;
};

/// Graph v_j = phi_j(z, zb, u) of a CR-generic M^{2n+c} in C^{n+c}.
struct ManifoldSpec {
  Shape shape;
  std::vector<RationalExpr> phi;
  PointAssignment point;
};

/// A ManifoldSpec that passed validate_manifold().
class ValidatedSpec {
 public:
  const ManifoldSpec& spec() const noexcept { return spec_; }
  Shape shape() const noexcept { return spec_.shape; }
  const std::vector<RationalExpr>& phi() const noexcept { return spec_.phi; }
  const PointAssignment& point() const noexcept { return spec_.point; }
  SlotValues base_values() const { return spec_.point.slot_values(); }
  /// Non-fatal diagnostics, e.g. phi(p) != 0 or dphi(p) != 0.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// Same graph, different base point (revalidated).
  ValidatedSpec at_point(PointAssignment point) const;

 private:
  friend ValidatedSpec validate_manifold(ManifoldSpec spec);
  explicit ValidatedSpec(ManifoldSpec spec) : spec_(std::move(spec)) {}

  ManifoldSpec spec_;
  std::vector<std::string> warnings_;
};

/// c x c matrix i*I + (d phi_j / d u_l).
ExprMatrix cramer_system_matrix(Shape shape, const std::vector<RationalExpr>& phi);

/// Checks shape, reality, variable bounds, finiteness at the base point and
/// frame regularity det(i*I + Phi_u)(p) != 0. Throws ValidationError.
ValidatedSpec validate_manifold(ManifoldSpec spec);

/// Reads the manifold file schema
/// {"n": int, "c": int, "phi": [string,...], "point": {"z": [...], "u": [...]}}
/// with "point" optional. Throws ValidationError (schema) or ParseError.
ManifoldSpec manifold_from_json(const nlohmann::json& doc);
ManifoldSpec manifold_from_json_text(std::string_view text);
/// Reads {"z": [...], "u": [...]} for a given shape.
PointAssignment point_from_json(const nlohmann::json& doc, Shape shape);

/// Canonical echo of a spec in the same schema.
nlohmann::ordered_json manifold_to_json(const ManifoldSpec& spec);

}  // namespace crclass
