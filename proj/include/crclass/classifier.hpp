#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crclass/levi.hpp"

namespace crclass {

enum class Verdict { ClassI, ClassII, ClassIII1, ClassIII2, ClassIV1, ClassIV2, LeviFlat, DegenerateProduct };

/// Which product a degenerate verdict reduces to.
enum class DegenerateKind { None, M3xR, M3xR2, M4xR, M3xC };

/// Rank of one named field set, generically and at the base point.
struct RankRecord {
  std::string name;
  std::vector<std::string> fields;
  int generic = 0;
  int at_point = 0;
  RankCertificate witness;
};

struct ClassificationReport {
  Verdict verdict = Verdict::LeviFlat;
  DegenerateKind degenerate = DegenerateKind::None;
  /// Reduction statement for degenerate verdicts, empty otherwise.
  std::string reduction;
  /// In canonical set order: r3, r4' (n=1, c=2), r4, r5, or levi.
  std::vector<RankRecord> ranks;
  std::optional<KernelData> kernel;
  /// Coefficient d of [L,T] when [Lbar,T] is decomposed in {L, Lbar, T, [L,T]}
  /// (Class II and Class III_2 only); d*conj(d) = 1 is asserted.
  std::optional<Decomposition> observational;
  bool sigma_flag = false;

  const RankRecord* rank(const std::string& name) const;
};

/// "ClassIII2", "DegenerateProduct(M3xC)", ...
std::string verdict_id(Verdict v, DegenerateKind kind);
/// "Class III_2", "Degenerate product M^3 x C", ...
std::string verdict_text(Verdict v, DegenerateKind kind);

/// Runs the decision tree on the intrinsic frame. With frame_change, the frame
/// is first replaced by L#_i = sum_j M_ij L_j for the given constant matrix.
ClassificationReport classify(const ValidatedSpec& spec, const ExprMatrix* frame_change = nullptr);

struct HullResult {
  int rank = 0;
  /// First depth whose rank repeats at the next depth, or at which the rank
  /// already equals 2n+c. Absent when neither happens by max_depth.
  std::optional<int> stabilized_at;
  /// rank_by_depth[d-1] is the generic rank of the depth-d span.
  std::vector<int> rank_by_depth;
};

/// Requires max_depth >= 1.
HullResult lie_hull_rank(const ValidatedSpec& spec, int max_depth);

/// Named bracket sets for the shape: L, Lbar, T, [L,T], [Lbar,T], [L,[L,T]] for
/// n = 1; L1, L2, Lbar1, Lbar2, [L1,Lbar1], ... for n = 2.
struct NamedField {
  std::string name;
  VectorField field;
};
std::vector<NamedField> named_brackets(const ValidatedSpec& spec);

nlohmann::ordered_json report_to_json(const ValidatedSpec& spec, const ClassificationReport& report);

}  // namespace crclass
