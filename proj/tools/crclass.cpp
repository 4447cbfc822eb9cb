// crclass: classify CR manifolds M^{2n+c} with 2n+c <= 5 from a graph file.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "crclass/classifier.hpp"
#include "crclass/errors.hpp"

namespace {

using namespace crclass;
using json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::string input_path;
  bool as_json = false;
  int depth = 4;
  std::string point_path;
};

class FileError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ValidatedSpec load(const RunConfig& cfg) {
  ManifoldSpec spec = manifold_from_json_text(read_file(cfg.input_path));
  if (!cfg.point_path.empty()) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(read_file(cfg.point_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw ValidationError(ValidationError::Kind::Schema, "point file: invalid JSON: " + std::string(e.what()));
    }
    spec.point = point_from_json(doc, spec.shape);
  }
  return validate_manifold(std::move(spec));
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

void print_matrix(std::ostream& out, const ExprMatrix& m, const std::string& indent) {
  for (const auto& row : m) {
    std::vector<std::string> cells;
    for (const auto& e : row) cells.push_back(e.to_string());
    out << indent << "[" << join(cells, ", ") << "]\n";
  }
}

json matrix_json(const ExprMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    out.push_back(r);
  }
  return out;
}

void print_kernel(std::ostream& out, const KernelData& kd) {
  out << "kernel:\n";
  out << "  k = " << kd.k.to_string() << "\n";
  out << "  K = " << kd.K.to_string() << "\n";
  out << "  kappa0 = " << kd.kappa0.to_string() << "\n";
  out << "  frame adjustment:\n";
  print_matrix(out, kd.frame_adjust, "    ");
  out << "  freeman = " << kd.freeman.to_string() << (kd.freeman.is_zero() ? " (identically zero)" : "") << "\n";
  out << "  freeman at point = " << (kd.freeman_at_point ? kd.freeman_at_point->to_string() : "pole") << "\n";
}

int run_classify(const RunConfig& cfg, const ValidatedSpec& spec) {
  const ClassificationReport rep = classify(spec);
  if (cfg.as_json) {
    std::cout << report_to_json(spec, rep).dump(2) << "\n";
    return 0;
  }
  std::cout << "verdict: " << verdict_text(rep.verdict, rep.degenerate) << "\n";
  if (!rep.reduction.empty()) std::cout << "reduction: " << rep.reduction << "\n";
  std::cout << "ranks:\n";
  for (const auto& r : rep.ranks) {
    std::cout << "  " << r.name << " = " << r.generic << "  (at point: " << r.at_point << ")  {" << join(r.fields, ", ")
              << "}\n";
    std::cout << "    witness minor = " << r.witness.minor.to_string() << "\n";
  }
  if (rep.observational) {
    const RationalExpr& d = rep.observational->coeffs[3];
    std::vector<std::string> coeffs;
    for (const auto& c : rep.observational->coeffs) coeffs.push_back(c.to_string());
    std::cout << "observational lemma: [Lb,T] = (" << join(coeffs, ", ") << ") in {L, Lb, T, [L,T]}, d*conj(d) = "
              << (d * d.conj()).to_string() << "\n";
  }
  if (rep.kernel) print_kernel(std::cout, *rep.kernel);
  std::cout << "sigma_flag: " << (rep.sigma_flag ? "true" : "false") << "\n";
  return 0;
}

int run_frame(const RunConfig& cfg, const ValidatedSpec& spec) {
  const FrameSet fs = cramer_frame(spec);
  const auto rho = rho0(fs);
  const Shape shape = spec.shape();
  if (cfg.as_json) {
    json out;
    out["input"] = manifold_to_json(spec.spec());
    out["A"] = matrix_json(fs.A);
    json L = json::array(), Lb = json::array(), r = json::array();
    for (const auto& x : fs.L()) L.push_back(x.to_string());
    for (const auto& x : fs.Lbar()) Lb.push_back(x.to_string());
    for (const auto& w : rho) r.push_back(w.to_string());
    out["L"] = L;
    out["Lbar"] = Lb;
    out["rho0"] = r;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  for (int i = 0; i < shape.n; ++i) {
    for (int l = 0; l < shape.c; ++l) {
      std::cout << "A" << i + 1 << "^" << l + 1 << " = " << fs.A[i][l].to_string() << "\n";
    }
  }
  for (int i = 0; i < shape.n; ++i) std::cout << "L" << i + 1 << " = " << fs.L()[i].to_string() << "\n";
  for (int i = 0; i < shape.n; ++i) std::cout << "Lb" << i + 1 << " = " << fs.Lbar()[i].to_string() << "\n";
  for (int j = 0; j < shape.c; ++j) std::cout << "rho0_" << j + 1 << " = " << rho[j].to_string() << "\n";
  return 0;
}

int run_levi(const RunConfig& cfg, const ValidatedSpec& spec) {
  const LeviMatrix m = levi_matrix(spec);
  const RankCertificate cert = generic_rank(m);
  const RationalExpr det = determinant(m);
  std::optional<KernelData> kd;
  if (spec.shape().n == 2 && cert.rank == 1) kd = slant_k(spec);
  if (cfg.as_json) {
    json out;
    out["input"] = manifold_to_json(spec.spec());
    out["levi"] = matrix_json(m);
    out["det"] = det.to_string();
    out["rank"] = {{"generic", cert.rank}, {"at_point", rank_at_point(m, spec.base_values())}};
    if (kd) {
      out["kernel"] = {{"k", kd->k.to_string()},
                       {"K", kd->K.to_string()},
                       {"kappa0", kd->kappa0.to_string()},
                       {"frame_adjust", matrix_json(kd->frame_adjust)},
                       {"freeman", kd->freeman.to_string()},
                       {"freeman_identically_zero", kd->freeman.is_zero()},
                       {"freeman_at_point", kd->freeman_at_point ? json(kd->freeman_at_point->to_string()) : json(nullptr)}};
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "levi matrix:\n";
  print_matrix(std::cout, m, "  ");
  std::cout << "determinant = " << det.to_string() << "\n";
  std::cout << "generic rank = " << cert.rank << "  (at point: " << rank_at_point(m, spec.base_values()) << ")\n";
  if (kd) print_kernel(std::cout, *kd);
  return 0;
}

int run_brackets(const RunConfig& cfg, const ValidatedSpec& spec) {
  const auto fields = named_brackets(spec);
  if (cfg.as_json) {
    json out;
    out["input"] = manifold_to_json(spec.spec());
    json b = json::object();
    for (const auto& f : fields) b[f.name] = f.field.to_string();
    out["brackets"] = b;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  for (const auto& f : fields) std::cout << f.name << " = " << f.field.to_string() << "\n";
  return 0;
}

int run_hull(const RunConfig& cfg, const ValidatedSpec& spec) {
  const HullResult h = lie_hull_rank(spec, cfg.depth);
  if (cfg.as_json) {
    json out;
    out["input"] = manifold_to_json(spec.spec());
    out["rank"] = h.rank;
    out["stabilized_at"] = h.stabilized_at ? json(*h.stabilized_at) : json(nullptr);
    out["rank_by_depth"] = h.rank_by_depth;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "depth  rank\n";
  for (std::size_t d = 0; d < h.rank_by_depth.size(); ++d) std::cout << "  " << d + 1 << "    " << h.rank_by_depth[d] << "\n";
  if (h.stabilized_at) {
    std::cout << "rank " << h.rank << ", stabilized at depth " << *h.stabilized_at << "\n";
  } else {
    std::cout << "rank " << h.rank << ", not stabilized by depth " << cfg.depth << "\n";
  }
  return 0;
}

int run(const RunConfig& cfg) {
  const ValidatedSpec spec = load(cfg);
  for (const auto& w : spec.warnings()) std::cerr << "crclass: warning: " << w << "\n";
  if (cfg.command == "classify") return run_classify(cfg, spec);
  if (cfg.command == "frame") return run_frame(cfg, spec);
  if (cfg.command == "levi") return run_levi(cfg, spec);
  if (cfg.command == "brackets") return run_brackets(cfg, spec);
  return run_hull(cfg, spec);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of CR manifolds of dimension at most 5"};
  app.require_subcommand(1);
  RunConfig cfg;
  for (const char* name : {"classify", "frame", "levi", "brackets", "hull"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", cfg.input_path, "manifold file")->required();
    sub->add_flag("--json", cfg.as_json, "emit JSON");
    sub->add_option("--point", cfg.point_path, "base point file {\"z\": [...], \"u\": [...]}");
    if (std::string(name) == "hull") sub->add_option("--depth", cfg.depth, "maximum bracket depth")->check(CLI::PositiveNumber);
    sub->callback([&cfg, name] { cfg.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return run(cfg);
  } catch (const ParseError& e) {
    std::cerr << "crclass: " << cfg.input_path << ": parse error: " << e.what() << "\n";
  } catch (const FileError& e) {
    std::cerr << "crclass: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    std::cerr << "crclass: " << cfg.input_path << ": invalid manifold: " << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << "crclass: " << e.what() << "\n";
  } catch (const InternalError& e) {
    std::cerr << "crclass: internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "crclass: internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
