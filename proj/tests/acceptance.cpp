// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "crclass/errors.hpp"
#include "support.hpp"

using namespace crclass;

namespace {

const RationalExpr kI{GaussianRational::i()};

// Collects the first few mismatches of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    if (failures_.size() < 3) failures_.push_back(what);
    ++failed_;
  }
  bool ok() const { return failed_ == 0 && total_ > 0; }
  std::string summary() const {
    std::ostringstream out;
    out << total_ << " checks";
    if (failed_) out << ", " << failed_ << " failed";
    for (const auto& f : failures_) out << "; " << f;
    return out.str();
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

std::string id_of(const ValidatedSpec& spec) {
  const ClassificationReport r = classify(spec);
  return verdict_id(r.verdict, r.degenerate);
}

std::vector<ValidatedSpec> random_c3(std::uint32_t seed, int count) {
  std::mt19937 rng(seed);
  std::vector<ValidatedSpec> out;
  for (int t = 0; t < count; ++t) out.push_back(crtest::random_c3_spec(rng, 4, 3));
  return out;
}

// Random valid specs of shape (1, c); u-dependence included.
std::vector<ValidatedSpec> random_n1(std::mt19937& rng, int c, int count) {
  std::vector<ValidatedSpec> out;
  const Shape shape{1, c};
  while (static_cast<int>(out.size()) < count) {
    ManifoldSpec s{shape, {}, PointAssignment::origin(shape)};
    for (int j = 0; j < c; ++j) s.phi.push_back(crtest::random_real_phi(rng, shape, 3, 3));
    try {
      out.push_back(validate_manifold(std::move(s)));
    } catch (const ValidationError&) {
    }
  }
  return out;
}

const char* const kModelNames[] = {"heisenberg",      "class_ii",     "class_iii1",      "class_iii2",
                                   "sphere_c3",       "light_cone_tube", "product_m3_c", "product_slanted",
                                   "flat_c3",         "product_m3_r", "product_m3_r2",   "product_m4_r"};

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(CRCLASS_CLI) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int raw = pclose(pipe);
  if (!WIFEXITED(raw) || WEXITSTATUS(raw) != 0) out += "<exit " + std::to_string(raw) + ">";
  return out;
}

void model_classifications(Check& ck) {
  const ClassificationReport r = classify(crtest::model("class_iii2"));
  ck.expect(r.verdict == Verdict::ClassIII2, "III2 verdict");
  ck.expect(r.rank("r3") && r.rank("r3")->generic == 3, "III2 r3 = 3");
  ck.expect(r.rank("r4") && r.rank("r4")->generic == 4, "III2 r4 = 4");
  ck.expect(r.rank("r5") && r.rank("r5")->generic == 5, "III2 r5 = 5");
  const std::pair<std::string, std::string> cases[] = {
      {"heisenberg", "ClassI"},        {"class_ii", "ClassII"},
      {"class_iii1", "ClassIII1"},     {"sphere_c3", "ClassIV1"},
      {"light_cone_tube", "ClassIV2"}, {"product_m3_c", "DegenerateProduct(M3xC)"},
      {"flat_c3", "LeviFlat"},
  };
  for (const auto& [name, want] : cases) {
    const std::string got = id_of(crtest::model(name));
    ck.expect(got == want, name + " -> " + got);
  }
  ck.expect(id_of(crtest::spec_of(1, 1, {"0"})) == "LeviFlat", "phi = 0 (1,1)");
}

void closed_forms(Check& ck) {
  std::vector<ValidatedSpec> corpus = random_c3(20240, 24);
  for (const char* name : {"sphere_c3", "light_cone_tube", "product_m3_c", "product_slanted", "flat_c3"}) {
    corpus.push_back(crtest::model(name));
  }
  for (const auto& spec : corpus) {
    const std::string phi = spec.phi()[0].to_string();
    ck.expect(levi_det(spec) == levi_det_closed_form(spec), "det " + phi);
    ck.expect(l1a1(spec) == l1a1_closed_form(spec), "L1(A1bar) " + phi);
  }
}

void surprising_fact(Check& ck) {
  for (const auto& spec : {crtest::model("light_cone_tube"), crtest::model("product_m3_c"),
                           crtest::model("product_slanted")}) {
    const std::string phi = spec.phi()[0].to_string();
    ck.expect(levi_det(spec).is_zero(), "det == 0 for " + phi);
    const KQuotients q = k_quotients(spec);
    const bool all = q.main && q.via_l2 && q.via_lbar1;
    ck.expect(all, "all quotients defined for " + phi);
    if (!all) continue;
    ck.expect(*q.main == *q.via_l2, "main == via_l2 for " + phi);
    ck.expect(*q.main == *q.via_lbar1, "main == via_lbar1 for " + phi);
  }
}

void identity_suites(Check& ck) {
  std::mt19937 rng(4);
  for (const Shape s : {Shape{1, 1}, Shape{1, 2}, Shape{1, 3}, Shape{2, 1}}) {
    for (int t = 0; t < 6; ++t) {
      const VectorField x = crtest::random_field(rng, s), y = crtest::random_field(rng, s),
                        z = crtest::random_field(rng, s);
      const VectorField jac = lie_bracket(lie_bracket(x, y), z) + lie_bracket(lie_bracket(y, z), x) +
                              lie_bracket(lie_bracket(z, x), y);
      ck.expect(jac.is_zero(), "Jacobi");
      ck.expect(lie_bracket(x, y).conj() == lie_bracket(x.conj(), y.conj()), "conj/bracket");
    }
  }
  std::vector<ValidatedSpec> specs = random_c3(77, 10);
  for (int c = 1; c <= 3; ++c) {
    for (auto& s : random_n1(rng, c, 5)) specs.push_back(std::move(s));
  }
  for (const char* name : kModelNames) specs.push_back(crtest::model(name));
  for (const auto& spec : specs) {
    const FrameSet fs = cramer_frame(spec);
    const int n = spec.shape().n;
    if (n == 2) {
      ck.expect(lie_bracket(fs.L()[0], fs.L()[1]).is_zero(), "[L1,L2] = 0");
      const LeviMatrix m = levi_matrix(spec);
      ck.expect(m == transpose(conj(m)), "Hermitian Levi");
    } else {
      const VectorField t = kI * lie_bracket(fs.L()[0], fs.Lbar()[0]);
      ck.expect(t.conj() == t, "T real");
    }
    for (const auto& rho : rho0(fs)) {
      for (int i = 0; i < n; ++i) {
        ck.expect(rho.apply(fs.L()[i]).is_zero(), "rho0(L) = 0");
        ck.expect(rho.apply(fs.Lbar()[i]).is_zero(), "rho0(Lbar) = 0");
      }
    }
  }
}

void observational_lemma(Check& ck) {
  int seen_ii = 0, seen_iii2 = 0;
  std::vector<ValidatedSpec> corpus;
  for (const char* name : kModelNames) corpus.push_back(crtest::model(name));
  corpus.push_back(crtest::spec_of(1, 2, {"z*zb + u2*z*zb", "z*zb*(z + zb)"}));
  corpus.push_back(crtest::spec_of(1, 2, {"z*zb", "z*zb*(z + zb) + u1*z^2*zb^2"}));
  // Real linear recombination of the III_2 model.
  corpus.push_back(crtest::spec_of(
      1, 3, {"2*z*zb", "z*zb*(z + zb) + z*zb", "3*z*zb*(z^2 + 3/2*z*zb + zb^2) - z*zb*(z + zb)"}));
  for (const auto& spec : corpus) {
    const ClassificationReport r = classify(spec);
    if (r.verdict != Verdict::ClassII && r.verdict != Verdict::ClassIII2) continue;
    (r.verdict == Verdict::ClassII ? seen_ii : seen_iii2)++;
    // Recompute independently of the classifier's own check.
    const FrameSet fs = cramer_frame(spec);
    const VectorField& L = fs.L()[0];
    const VectorField& Lb = fs.Lbar()[0];
    const VectorField T = kI * lie_bracket(L, Lb);
    const Decomposition d = decompose_in_frame(lie_bracket(Lb, T), {L, Lb, T, lie_bracket(L, T)});
    ck.expect(d.coeffs[3] * d.coeffs[3].conj() == RationalExpr(1), "d*conj(d) = 1");
  }
  ck.expect(seen_ii >= 2, "Class II corpus nonempty");
  ck.expect(seen_iii2 >= 2, "Class III_2 corpus nonempty");
}

void transformation_law(Check& ck) {
  std::vector<ValidatedSpec> corpus = random_c3(606, 2);
  for (const char* name : {"sphere_c3", "light_cone_tube", "product_m3_c", "product_slanted"}) {
    corpus.push_back(crtest::model(name));
  }
  std::mt19937 rng(8);
  for (const auto& spec : corpus) {
    const FrameSet fs = cramer_frame(spec);
    const OneForm rho = rho0(fs)[0];
    const LeviMatrix base = levi_matrix(fs.frame, rho);
    const int rank = generic_rank(base).rank;
    for (int t = 0; t < 10; ++t) {
      const ExprMatrix m = crtest::random_gl2(rng);
      const LeviMatrix changed = levi_matrix(change_frame(fs.frame, m), rho);
      ck.expect(changed == multiply(multiply(conj(m), base), transpose(m)), "conj(M) Levi M^T");
      ck.expect(generic_rank(changed).rank == rank, "rank invariant");
    }
  }
}

void degenerate_freeman(Check& ck) {
  for (const char* name : {"product_m3_c", "product_slanted"}) {
    const ValidatedSpec spec = crtest::model(name);
    const KernelData kd = slant_k(spec);
    ck.expect(kd.freeman.is_zero(), std::string(name) + ": freeman == 0");
    ck.expect(is_cr_function(kd.k, spec), std::string(name) + ": k is CR");
    const FrameSet fs = cramer_frame(spec);
    ck.expect(kd.frame_adjust == identity_matrix(2), std::string(name) + ": unadjusted frame");
    const RationalExpr ka = kd.k * fs.A[0][0] + fs.A[1][0];
    ck.expect(is_cr_function(ka, spec), std::string(name) + ": k*A1 + A2 is CR");
  }
}

void round_trip(Check& ck) {
  std::vector<ValidatedSpec> corpus;
  for (const char* name : kModelNames) corpus.push_back(crtest::model(name));
  for (auto& s : random_c3(20240, 24)) corpus.push_back(std::move(s));
  for (const auto& spec : corpus) {
    for (const auto& phi : spec.phi()) {
      ck.expect(parse_expr(phi.to_string(), spec.shape()) == phi, "round trip " + phi.to_string());
    }
    const ManifoldSpec echo = manifold_from_json(manifold_to_json(spec.spec()));
    ck.expect(echo.phi == spec.phi(), "manifold echo");
  }
  for (const char* name : kModelNames) {
    const std::string args = "classify --json --input " + crtest::model_path(name);
    const std::string a = run_cli(args), b = run_cli(args);
    ck.expect(!a.empty() && a.front() == '{' && a == b, std::string("byte-identical JSON for ") + name);
  }
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"model classifications", model_classifications},
      {"closed-form Levi determinant and L1(A1bar)", closed_forms},
      {"three slant quotients agree when det == 0", surprising_fact},
      {"algebraic identity suites", identity_suites},
      {"observational lemma d*conj(d) = 1", observational_lemma},
      {"Levi transformation law under GL2", transformation_law},
      {"degenerate Freeman certificate", degenerate_freeman},
      {"round trip and deterministic JSON", round_trip},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Check ck;
    std::string error;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(ck);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = error.empty() && ck.ok();
    failed += !ok;
    std::printf("%s %d %s (%s%s, %.2f s)\n", ok ? "PASS" : "FAIL", index, name, ck.summary().c_str(),
                error.empty() ? "" : ("; exception: " + error).c_str(), secs);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = total < 60.0;
  std::printf("%s total time %.2f s (limit 60 s)\n", in_time ? "PASS" : "FAIL", total);
  return failed == 0 && in_time ? 0 : 1;
}
