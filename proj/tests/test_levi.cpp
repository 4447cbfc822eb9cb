#include <gtest/gtest.h>

#include <random>

#include "crclass/errors.hpp"
#include "support.hpp"

using namespace crclass;

namespace {

const Shape kC3{2, 1};
RationalExpr e(const std::string& text) { return parse_expr(text, kC3); }

std::vector<ValidatedSpec> closed_form_corpus() {
  std::vector<ValidatedSpec> out;
  std::mt19937 rng(20240);
  for (int t = 0; t < 24; ++t) out.push_back(crtest::random_c3_spec(rng, 4, 3));
  for (const char* name : {"sphere_c3", "light_cone_tube", "product_m3_c", "product_slanted", "flat_c3"}) {
    out.push_back(crtest::model(name));
  }
  out.push_back(crtest::spec_of(2, 1, {"z1*zb1"}));
  out.push_back(crtest::spec_of(2, 1, {"z1*zb1*u"}));
  return out;
}

// Hypersurfaces in C^3 with generic Levi rank 1.
std::vector<ValidatedSpec> rank_one_corpus() {
  std::vector<ValidatedSpec> out;
  for (const char* name : {"light_cone_tube", "product_m3_c", "product_slanted"}) out.push_back(crtest::model(name));
  for (const char* phi : {"z2*zb2", "(z1 + z2^2)*(zb1 + zb2^2)", "z1*zb1*(1 + u^2)", "z2*zb2 + u*(z2 + zb2)",
                          "(z1 + zb1)^2/(2 + z2 + zb2)", "(z1 + I*z2)*(zb1 - I*zb2)"}) {
    out.push_back(crtest::spec_of(2, 1, {phi}));
  }
  return out;
}

}  // namespace

TEST(LeviMatrix, RigidIsTwiceComplexHessian) {
  const ValidatedSpec spec = crtest::spec_of(2, 1, {"z1*zb1 + z1^2*zb2 + zb1^2*z2 + z2^2*zb2^2"});
  const LeviMatrix m = levi_matrix(spec);
  const RationalExpr& phi = spec.phi()[0];
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      EXPECT_EQ(m[r][c], RationalExpr(2) * phi.diff(VarId::z(c + 1)).diff(VarId::zbar(r + 1)));
    }
  }
}

TEST(LeviMatrix, SphereAndHeisenberg) {
  EXPECT_EQ(levi_matrix(crtest::model("sphere_c3")), crtest::constant_matrix({{2, 0}, {0, 2}}));
  EXPECT_EQ(levi_matrix(crtest::model("heisenberg")), crtest::constant_matrix({{2}}));
  EXPECT_EQ(levi_det(crtest::model("sphere_c3")), RationalExpr(4));
}

TEST(LeviMatrix, RequiresHypersurface) {
  EXPECT_THROW(levi_matrix(crtest::model("class_ii")), ValidationError);
  EXPECT_THROW(levi_det(crtest::model("heisenberg")), ValidationError);
}

TEST(LeviMatrix, Hermitian) {
  for (const auto& spec : closed_form_corpus()) {
    const LeviMatrix m = levi_matrix(spec);
    EXPECT_EQ(m, transpose(conj(m)));
  }
}

TEST(LeviDet, LightConeTubeVanishesBothWays) {
  const ValidatedSpec spec = crtest::model("light_cone_tube");
  EXPECT_TRUE(levi_det(spec).is_zero());
  EXPECT_TRUE(levi_det_closed_form(spec).is_zero());
}

TEST(LeviDet, EngineMatchesClosedForm) {
  for (const auto& spec : closed_form_corpus()) {
    EXPECT_EQ(levi_det(spec), levi_det_closed_form(spec)) << spec.phi()[0].to_string();
  }
}

TEST(L1A1, EngineMatchesClosedForm) {
  for (const char* phi : {"z1*zb1", "z1*zb1*u"}) {
    const ValidatedSpec spec = crtest::spec_of(2, 1, {phi});
    EXPECT_EQ(l1a1(spec), l1a1_closed_form(spec)) << phi;
  }
  for (const auto& spec : closed_form_corpus()) {
    EXPECT_EQ(l1a1(spec), l1a1_closed_form(spec)) << spec.phi()[0].to_string();
  }
}

TEST(SlantK, RigidFormula) {
  const ValidatedSpec spec = crtest::spec_of(2, 1, {"(z1 + z2^2)*(zb1 + zb2^2)"});
  const RationalExpr& phi = spec.phi()[0];
  const KernelData kd = slant_k(spec);
  EXPECT_EQ(kd.k, -phi.diff(VarId::z(2)).diff(VarId::zbar(1)) / phi.diff(VarId::z(1)).diff(VarId::zbar(1)));
  EXPECT_EQ(kd.k, e("-2*z2"));
}

TEST(SlantK, ProductWithC) {
  const ValidatedSpec spec = crtest::model("product_m3_c");
  const KernelData kd = slant_k(spec);
  EXPECT_TRUE(kd.k.is_zero());
  EXPECT_EQ(kd.K, VectorField::coordinate(kC3, 1));
  EXPECT_EQ(kd.K, cramer_frame(spec).L()[1]);
  EXPECT_EQ(kd.frame_adjust, identity_matrix(2));
}

TEST(SlantK, Slanted) {
  const ValidatedSpec spec = crtest::model("product_slanted");
  EXPECT_EQ(levi_matrix(spec), crtest::constant_matrix({{2, 2}, {2, 2}}));
  const KernelData kd = slant_k(spec);
  const FrameSet fs = cramer_frame(spec);
  EXPECT_EQ(kd.k, RationalExpr(-1));
  EXPECT_EQ(kd.K, fs.L()[1] - fs.L()[0]);
  EXPECT_TRUE(kd.freeman.is_zero());
}

TEST(SlantK, AdjustsFrameWhenL11Vanishes) {
  const ValidatedSpec spec = crtest::spec_of(2, 1, {"z2*zb2"});
  const KernelData kd = slant_k(spec);
  EXPECT_EQ(kd.frame_adjust, crtest::constant_matrix({{0, 1}, {1, 0}}));
  EXPECT_FALSE(kd.levi[0][0].is_zero());
  EXPECT_TRUE(kd.k.is_zero());
  EXPECT_EQ(kd.K, cramer_frame(spec).L()[0]);
}

TEST(SlantK, RankMismatch) {
  EXPECT_THROW(slant_k(crtest::model("sphere_c3")), RankMismatchError);
  EXPECT_THROW(slant_k(crtest::model("flat_c3")), RankMismatchError);
}

TEST(SlantK, SurprisingQuotientIdentity) {
  int checked = 0;
  for (const auto& spec : rank_one_corpus()) {
    ASSERT_TRUE(levi_det(spec).is_zero());
    const KQuotients q = k_quotients(spec);
    if (q.main && q.via_l2) EXPECT_EQ(*q.main, *q.via_l2) << spec.phi()[0].to_string();
    if (q.main && q.via_lbar1) EXPECT_EQ(*q.main, *q.via_lbar1) << spec.phi()[0].to_string();
    if (q.via_l2 && q.via_lbar1) EXPECT_EQ(*q.via_l2, *q.via_lbar1) << spec.phi()[0].to_string();
    if (q.main && q.via_l2 && q.via_lbar1) ++checked;
  }
  EXPECT_GE(checked, 5);
}

TEST(SlantK, MainQuotientIsMinusL12OverL11) {
  for (const auto& spec : rank_one_corpus()) {
    const KQuotients q = k_quotients(spec);
    const LeviMatrix m = levi_matrix(spec);
    if (!q.main) continue;
    EXPECT_EQ(*q.main, -m[0][1] / m[0][0]);
  }
}

TEST(KernelData, Invariants) {
  for (const auto& spec : rank_one_corpus()) {
    const KernelData kd = slant_k(spec);
    const std::string phi = spec.phi()[0].to_string();
    EXPECT_TRUE((kd.levi[0][0] * kd.k + kd.levi[0][1]).is_zero()) << phi;
    EXPECT_TRUE((kd.levi[1][0] * kd.k + kd.levi[1][1]).is_zero()) << phi;
    EXPECT_TRUE(kd.kappa0.apply(kd.K).is_zero()) << phi;
    EXPECT_TRUE(kd.kappa0.apply(kd.frame.Lbar[0]).is_zero()) << phi;
    EXPECT_TRUE(kd.kappa0.apply(kd.K.conj()).is_zero()) << phi;
    EXPECT_FALSE(kd.kappa0.apply(kd.frame.L[0]).is_zero()) << phi;
    EXPECT_EQ(kd.freeman, -kd.frame.Lbar[0].apply(kd.k)) << phi;
  }
}

TEST(KernelData, UnadjustedKappa0) {
  const KernelData kd = slant_k(crtest::model("light_cone_tube"));
  ASSERT_EQ(kd.frame_adjust, identity_matrix(2));
  EXPECT_EQ(kd.kappa0, OneForm(kC3, {1, -kd.k, 0, 0, 0}));
}

TEST(Freeman, VanishesForProductsAndConstantK) {
  EXPECT_TRUE(freeman(crtest::model("product_m3_c")).is_zero());
  EXPECT_TRUE(freeman(crtest::model("product_slanted")).is_zero());
}

TEST(Freeman, LightConeTubeNonzero) {
  const KernelData kd = slant_k(crtest::model("light_cone_tube"));
  EXPECT_FALSE(kd.freeman.is_zero());
  EXPECT_EQ(kd.freeman, e("-1/(z2*zb2 - 1)"));
  ASSERT_TRUE(kd.freeman_at_point.has_value());
  EXPECT_EQ(*kd.freeman_at_point, GaussianRational(1));
}

TEST(Freeman, DegenerateProductCertificate) {
  int degenerate = 0;
  for (const auto& spec : rank_one_corpus()) {
    const KernelData kd = slant_k(spec);
    if (!kd.freeman.is_zero()) continue;
    ++degenerate;
    EXPECT_TRUE(is_cr_function(kd.k, spec)) << spec.phi()[0].to_string();
    // Coefficient of d/du in K, i.e. k*A1 + A2 in the unadjusted frame.
    EXPECT_TRUE(is_cr_function(kd.K[4], spec)) << spec.phi()[0].to_string();
  }
  EXPECT_GE(degenerate, 5);
}

TEST(CrFunction, Examples) {
  EXPECT_TRUE(is_cr_function(e("z1"), crtest::model("light_cone_tube")));
  const Shape s{1, 1};
  EXPECT_FALSE(is_cr_function(parse_expr("zb", s), crtest::model("heisenberg")));
  EXPECT_TRUE(is_cr_function(parse_expr("u + I*z*zb", s), crtest::model("heisenberg")));
  const ValidatedSpec p = crtest::spec_of(2, 1, {"z1*zb1"});
  EXPECT_TRUE(is_cr_function(slant_k(p).k, p));
}

TEST(Transformation, ConstantFrameChangeLaw) {
  std::mt19937 rng(808);
  for (const auto& spec : closed_form_corpus()) {
    const FrameSet fs = cramer_frame(spec);
    const OneForm rho = rho0(fs)[0];
    const LeviMatrix base = levi_matrix(fs.frame, rho);
    const int rank = generic_rank(base).rank;
    for (int t = 0; t < 10; ++t) {
      const ExprMatrix m = crtest::random_gl2(rng);
      const LeviMatrix changed = levi_matrix(change_frame(fs.frame, m), rho);
      EXPECT_EQ(changed, multiply(multiply(conj(m), base), transpose(m)));
      EXPECT_EQ(generic_rank(changed).rank, rank);
    }
  }
}

TEST(Transformation, RescalingByFunctions) {
  std::mt19937 rng(99);
  const std::vector<std::size_t> slots = crtest::slots_of(kC3);
  for (const auto& spec : closed_form_corpus()) {
    const FrameSet fs = cramer_frame(spec);
    const OneForm rho = rho0(fs)[0];
    const LeviMatrix base = levi_matrix(fs.frame, rho);
    std::vector<RationalExpr> s;
    for (int k = 0; k < 2; ++k) {
      s.push_back(RationalExpr(1) + RationalExpr(crtest::random_poly(rng, slots, 2, 2)));
      if (s.back().is_zero()) s.back() = RationalExpr(1);
    }
    Frame scaled;
    for (int k = 0; k < 2; ++k) {
      scaled.L.push_back(s[k] * fs.L()[k]);
      scaled.Lbar.push_back(s[k].conj() * fs.Lbar()[k]);
    }
    const LeviMatrix m = levi_matrix(scaled, rho);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        EXPECT_EQ(m[r][c], s[c] * s[r].conj() * base[r][c]);
        EXPECT_EQ(m[r][c].is_zero(), base[r][c].is_zero());
      }
    }
    EXPECT_EQ(determinant(m).is_zero(), determinant(base).is_zero());
  }
}
