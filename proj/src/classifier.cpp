#include "crclass/classifier.hpp"

#include "crclass/errors.hpp"

namespace crclass {

const RankRecord* ClassificationReport::rank(const std::string& name) const {
  for (const auto& r : ranks) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::string verdict_id(Verdict v, DegenerateKind kind) {
  switch (v) {
    case Verdict::ClassI: return "ClassI";
    case Verdict::ClassII: return "ClassII";
    case Verdict::ClassIII1: return "ClassIII1";
    case Verdict::ClassIII2: return "ClassIII2";
    case Verdict::ClassIV1: return "ClassIV1";
    case Verdict::ClassIV2: return "ClassIV2";
    case Verdict::LeviFlat: return "LeviFlat";
    case Verdict::DegenerateProduct: break;
  }
  switch (kind) {
    case DegenerateKind::M3xR: return "DegenerateProduct(M3xR)";
    case DegenerateKind::M3xR2: return "DegenerateProduct(M3xR2)";
    case DegenerateKind::M4xR: return "DegenerateProduct(M4xR)";
    case DegenerateKind::M3xC: return "DegenerateProduct(M3xC)";
    case DegenerateKind::None: break;
  }
  throw InternalError("degenerate verdict without a product kind");
}

std::string verdict_text(Verdict v, DegenerateKind kind) {
  switch (v) {
    case Verdict::ClassI: return "Class I";
    case Verdict::ClassII: return "Class II";
    case Verdict::ClassIII1: return "Class III_1";
    case Verdict::ClassIII2: return "Class III_2";
    case Verdict::ClassIV1: return "Class IV_1";
    case Verdict::ClassIV2: return "Class IV_2";
    case Verdict::LeviFlat: return "Levi-flat";
    case Verdict::DegenerateProduct: break;
  }
  switch (kind) {
    case DegenerateKind::M3xR: return "Degenerate product M^3 x R";
    case DegenerateKind::M3xR2: return "Degenerate product M^3 x R^2";
    case DegenerateKind::M4xR: return "Degenerate product M^4 x R";
    case DegenerateKind::M3xC: return "Degenerate product M^3 x C";
    case DegenerateKind::None: break;
  }
  throw InternalError("degenerate verdict without a product kind");
}

namespace {

const RationalExpr kI{GaussianRational::i()};

Frame working_frame(const FrameSet& fs, const ExprMatrix* frame_change) {
  return frame_change ? change_frame(fs.frame, *frame_change) : fs.frame;
}

// L, Lbar, T, [L,T], [Lbar,T], [L,[L,T]] for n = 1.
std::vector<NamedField> n1_fields(const Frame& frame) {
  const VectorField& L = frame.L[0];
  const VectorField& Lb = frame.Lbar[0];
  const VectorField T = kI * lie_bracket(L, Lb);
  const VectorField LT = lie_bracket(L, T);
  return {{"L", L},
          {"Lb", Lb},
          {"T", T},
          {"[L,T]", LT},
          {"[Lb,T]", lie_bracket(Lb, T)},
          {"[L,[L,T]]", lie_bracket(L, LT)}};
}

RankRecord field_rank(const std::string& name, const std::vector<NamedField>& all, std::vector<int> which,
                      const PointAssignment& point) {
  RankRecord r;
  r.name = name;
  std::vector<VectorField> fields;
  for (int w : which) {
    r.fields.push_back(all[w].name);
    fields.push_back(all[w].field);
  }
  r.witness = generic_rank(fields);
  r.generic = r.witness.rank;
  r.at_point = rank_at_point(fields, point);
  return r;
}

void set_degenerate(ClassificationReport& rep, DegenerateKind kind, std::string reduction) {
  rep.verdict = Verdict::DegenerateProduct;
  rep.degenerate = kind;
  rep.reduction = std::move(reduction);
}

// Decomposes [Lbar,T] in {L, Lbar, T, [L,T]} and checks d*conj(d) = 1.
Decomposition observational_lemma(const std::vector<NamedField>& f) {
  Decomposition dec;
  try {
    dec = decompose_in_frame(f[4].field, {f[0].field, f[1].field, f[2].field, f[3].field});
  } catch (const Error& e) {
    throw InternalError(std::string("observational lemma: ") + e.what());
  }
  const RationalExpr& d = dec.coeffs[3];
  if (d * d.conj() != RationalExpr(1)) {
    throw InternalError("observational lemma: d*conj(d) = " + (d * d.conj()).to_string() + ", expected 1");
  }
  return dec;
}

void classify_n1(const ValidatedSpec& spec, const Frame& frame, ClassificationReport& rep) {
  const int c = spec.shape().c;
  const auto f = n1_fields(frame);
  const PointAssignment& p = spec.point();
  rep.ranks.push_back(field_rank("r3", f, {0, 1, 2}, p));
  const int r3 = rep.ranks.back().generic;
  if (r3 == 2) {
    rep.verdict = Verdict::LeviFlat;
    return;
  }
  if (c == 1) {
    rep.verdict = Verdict::ClassI;
    return;
  }
  if (c == 2) rep.ranks.push_back(field_rank("r4_LT", f, {0, 1, 2, 3}, p));
  rep.ranks.push_back(field_rank("r4", f, {0, 1, 2, 3, 4}, p));
  const int r4 = rep.ranks.back().generic;
  if (c == 2) {
    if (r4 == 3) {
      set_degenerate(rep, DegenerateKind::M3xR,
                     "locally M^3 x R: a Levi nondegenerate hypersurface M^3 in C^2 (Class I) times one real parameter");
      return;
    }
    if (rep.rank("r4_LT")->generic != 4) {
      throw InternalError("r4 = 4 but {L, Lb, T, [L,T]} has rank " + std::to_string(rep.rank("r4_LT")->generic));
    }
    rep.verdict = Verdict::ClassII;
    rep.observational = observational_lemma(f);
    return;
  }
  // c == 3
  if (r4 == 3) {
    set_degenerate(rep, DegenerateKind::M3xR2,
                   "locally M^3 x R^2: a Levi nondegenerate hypersurface M^3 in C^2 (Class I) times two real parameters");
    return;
  }
  if (r4 == 5) {
    rep.verdict = Verdict::ClassIII1;
    return;
  }
  rep.ranks.push_back(field_rank("r5", f, {0, 1, 2, 3, 4, 5}, p));
  const int r5 = rep.ranks.back().generic;
  if (r5 == 5) {
    rep.verdict = Verdict::ClassIII2;
    rep.observational = observational_lemma(f);
    return;
  }
  set_degenerate(rep, DegenerateKind::M4xR,
                 "locally M^4 x R: a Class II submanifold M^4 in C^3 times one real parameter");
}

void classify_n2(const ValidatedSpec& spec, const Frame& frame, const OneForm& rho, ClassificationReport& rep) {
  const LeviMatrix levi = levi_matrix(frame, rho);
  RankRecord r;
  r.name = "levi";
  r.fields = {"L1", "L2"};
  r.witness = generic_rank(levi);
  r.generic = r.witness.rank;
  r.at_point = rank_at_point(levi, spec.base_values());
  rep.ranks.push_back(r);
  if (r.generic == 2) {
    rep.verdict = Verdict::ClassIV1;
    return;
  }
  if (r.generic == 0) {
    rep.verdict = Verdict::LeviFlat;
    return;
  }
  rep.kernel = slant_k(spec, frame, rho);
  if (!rep.kernel->freeman.is_zero()) {
    rep.verdict = Verdict::ClassIV2;
    return;
  }
  set_degenerate(rep, DegenerateKind::M3xC,
                 "locally M^3 x C: a Levi nondegenerate hypersurface M^3 in C^2 (Class I) times one complex parameter");
}

}  // namespace

ClassificationReport classify(const ValidatedSpec& spec, const ExprMatrix* frame_change) {
  const FrameSet fs = cramer_frame(spec);
  const Frame frame = working_frame(fs, frame_change);
  ClassificationReport rep;
  if (spec.shape().n == 1) {
    classify_n1(spec, frame, rep);
  } else {
    classify_n2(spec, frame, rho0(fs)[0], rep);
  }
  for (const auto& r : rep.ranks) {
    if (r.at_point > r.generic) throw InternalError("point rank exceeds generic rank for " + r.name);
    if (r.at_point < r.generic) rep.sigma_flag = true;
  }
  return rep;
}

HullResult lie_hull_rank(const ValidatedSpec& spec, int max_depth) {
  if (max_depth < 1) throw InternalError("lie_hull_rank needs max_depth >= 1");
  const FrameSet fs = cramer_frame(spec);
  const int full = spec.shape().dim();
  std::vector<VectorField> generators = fs.frame.L;
  generators.insert(generators.end(), fs.frame.Lbar.begin(), fs.frame.Lbar.end());

  HullResult out;
  std::vector<VectorField> basis;
  std::vector<VectorField> added;
  int rank = 0;
  auto offer = [&](const VectorField& x) {
    if (x.is_zero() || rank == full) return;
    basis.push_back(x);
    const int r = generic_rank(basis).rank;
    if (r > rank) {
      rank = r;
      added.push_back(x);
    } else {
      basis.pop_back();
    }
  };

  for (const auto& g : generators) offer(g);
  out.rank_by_depth.push_back(rank);
  if (rank == full) out.stabilized_at = 1;
  for (int depth = 2; depth <= max_depth; ++depth) {
    const std::vector<VectorField> previous = std::move(added);
    added.clear();
    for (const auto& g : generators) {
      for (const auto& x : previous) offer(lie_bracket(g, x));
    }
    out.rank_by_depth.push_back(rank);
    if (out.stabilized_at) continue;
    if (rank == out.rank_by_depth[depth - 2]) {
      out.stabilized_at = depth - 1;
    } else if (rank == full) {
      out.stabilized_at = depth;
    }
  }
  out.rank = rank;
  return out;
}

std::vector<NamedField> named_brackets(const ValidatedSpec& spec) {
  const FrameSet fs = cramer_frame(spec);
  if (spec.shape().n == 1) return n1_fields(fs.frame);
  const auto& L = fs.L();
  const auto& Lb = fs.Lbar();
  std::vector<NamedField> out = {{"L1", L[0]}, {"L2", L[1]}, {"Lb1", Lb[0]}, {"Lb2", Lb[1]}};
  for (int c = 0; c < 2; ++c) {
    for (int r = 0; r < 2; ++r) {
      out.push_back({"[L" + std::to_string(c + 1) + ",Lb" + std::to_string(r + 1) + "]", lie_bracket(L[c], Lb[r])});
    }
  }
  out.push_back({"[L1,L2]", lie_bracket(L[0], L[1])});
  return out;
}

namespace {

nlohmann::ordered_json expr_matrix_json(const ExprMatrix& m) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& row : m) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    out.push_back(r);
  }
  return out;
}

}  // namespace

nlohmann::ordered_json report_to_json(const ValidatedSpec& spec, const ClassificationReport& report) {
  using json = nlohmann::ordered_json;
  const Shape shape = spec.shape();
  json out;
  out["input"] = manifold_to_json(spec.spec());
  out["verdict"] = verdict_id(report.verdict, report.degenerate);

  json ranks = json::object();
  json witnesses = json::array();
  for (const auto& r : report.ranks) {
    ranks[r.name] = {{"generic", r.generic}, {"at_point", r.at_point}};
    json w;
    w["kind"] = "rank_minor";
    w["set"] = r.name;
    w["fields"] = r.fields;
    w["rank"] = r.generic;
    json rows = json::array();
    for (int row : r.witness.rows) {
      rows.push_back(r.name == "levi" ? "Lb" + std::to_string(row + 1) : "d/d" + shape.direction_var(row).name());
    }
    json cols = json::array();
    for (int col : r.witness.cols) cols.push_back(r.fields.at(col));
    w["rows"] = rows;
    w["cols"] = cols;
    w["minor"] = r.witness.minor.to_string();
    witnesses.push_back(w);
  }
  if (report.observational) {
    json coeffs = json::array();
    for (const auto& c : report.observational->coeffs) coeffs.push_back(c.to_string());
    const RationalExpr& d = report.observational->coeffs[3];
    witnesses.push_back({{"kind", "observational_lemma"},
                         {"decomposed", "[Lb,T]"},
                         {"frame", {"L", "Lb", "T", "[L,T]"}},
                         {"coeffs", coeffs},
                         {"d_conj_d", (d * d.conj()).to_string()}});
  }
  if (!report.reduction.empty()) witnesses.push_back({{"kind", "reduction"}, {"text", report.reduction}});
  out["ranks"] = ranks;
  out["witnesses"] = witnesses;

  if (report.kernel) {
    const KernelData& kd = *report.kernel;
    json k;
    k["k"] = kd.k.to_string();
    k["K"] = kd.K.to_string();
    k["kappa0"] = kd.kappa0.to_string();
    k["frame_adjust"] = expr_matrix_json(kd.frame_adjust);
    k["levi"] = expr_matrix_json(kd.levi);
    k["freeman"] = kd.freeman.to_string();
    k["freeman_identically_zero"] = kd.freeman.is_zero();
    k["freeman_at_point"] = kd.freeman_at_point ? json(kd.freeman_at_point->to_string()) : json(nullptr);
    out["kernel"] = k;
  }
  out["sigma_flag"] = report.sigma_flag;
  return out;
}

}  // namespace crclass
