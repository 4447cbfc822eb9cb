#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crclass/classifier.hpp"
#include "crclass/parser.hpp"

namespace crtest {

using namespace crclass;

inline std::string model_path(const std::string& name) { return std::string(CRCLASS_MODEL_DIR) + "/" + name + ".json"; }

inline ManifoldSpec load_model(const std::string& name) {
  std::ifstream in(model_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return manifold_from_json_text(ss.str());
}

inline ValidatedSpec model(const std::string& name) { return validate_manifold(load_model(name)); }

inline ValidatedSpec spec_of(int n, int c, const std::vector<std::string>& phis) {
  ManifoldSpec s;
  s.shape = Shape{n, c};
  for (const auto& p : phis) s.phi.push_back(parse_expr(p, n, c));
  s.point = PointAssignment::origin(s.shape);
  return validate_manifold(std::move(s));
}

inline GaussianRational random_gr(std::mt19937& rng, int bound = 5) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, 4);
  return GaussianRational(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

/// Random polynomial with up to `terms` monomials of total degree <= max_degree in `slots`.
inline MultiPoly random_poly(std::mt19937& rng, const std::vector<std::size_t>& slots, int terms, int max_degree) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(slots.size()) - 1), deg(0, max_degree);
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) {
      const std::size_t s = slots[pick(rng)];
      ++m.exp[s];
      ++m.degree;
    }
    p += MultiPoly::monomial(m, random_gr(rng, 3));
  }
  return p;
}

inline std::vector<std::size_t> slots_of(Shape shape) {
  std::vector<std::size_t> out;
  for (int d = 0; d < shape.dim(); ++d) out.push_back(shape.direction_slot(d));
  return out;
}

/// Real polynomial q + conj(q) with q random of degree in [1, max_degree].
inline RationalExpr random_real_phi(std::mt19937& rng, Shape shape, int terms, int max_degree) {
  for (;;) {
    const MultiPoly q = random_poly(rng, slots_of(shape), terms, max_degree);
    const MultiPoly phi = q + q.conj();
    if (!phi.is_constant()) return RationalExpr(phi);
  }
}

/// A valid random hypersurface spec in C^3 (n = 2, c = 1) with u-dependence.
inline ValidatedSpec random_c3_spec(std::mt19937& rng, int terms = 4, int max_degree = 3) {
  const Shape shape{2, 1};
  ManifoldSpec s{shape, {random_real_phi(rng, shape, terms, max_degree)}, PointAssignment::origin(shape)};
  return validate_manifold(std::move(s));
}

inline VectorField random_field(std::mt19937& rng, Shape shape, int terms = 3, int max_degree = 2) {
  VectorField x(shape);
  for (int d = 0; d < shape.dim(); ++d) x[d] = RationalExpr(random_poly(rng, slots_of(shape), terms, max_degree));
  return x;
}

inline ExprMatrix constant_matrix(const std::vector<std::vector<GaussianRational>>& rows) {
  ExprMatrix m;
  for (const auto& row : rows) {
    std::vector<RationalExpr> r;
    for (const auto& v : row) r.emplace_back(v);
    m.push_back(std::move(r));
  }
  return m;
}

inline ExprMatrix random_gl2(std::mt19937& rng) {
  for (;;) {
    ExprMatrix m = constant_matrix({{random_gr(rng), random_gr(rng)}, {random_gr(rng), random_gr(rng)}});
    if (!determinant(m).is_zero()) return m;
  }
}

inline RationalExpr expr(const std::string& text, int n = 2, int c = 3) { return parse_expr(text, n, c); }

}  // namespace crtest
