#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace crclass {

/// Every polynomial lives in the fixed ring Q(i)[z1, z2, zb1, zb2, u1, u2, u3].
/// A manifold of shape (n, c) only uses the first n z/zb slots and the first c
/// u slots, so conjugation (z_k <-> zb_k) never depends on the shape.
inline constexpr std::size_t kNumSlots = 7;
inline constexpr std::size_t kMaxCrDim = 2;
inline constexpr std::size_t kMaxCodim = 3;

enum class VarKind { Z, Zbar, U };

/// Intrinsic coordinate z_k, zb_k or u_l (1-based index).
struct VarId {
  VarKind kind{VarKind::Z};
  int index{1};

  static constexpr VarId z(int k) { return {VarKind::Z, k}; }
  static constexpr VarId zbar(int k) { return {VarKind::Zbar, k}; }
  static constexpr VarId u(int l) { return {VarKind::U, l}; }

  constexpr std::size_t slot() const {
    switch (kind) {
      case VarKind::Z: return static_cast<std::size_t>(index - 1);
      case VarKind::Zbar: return kMaxCrDim + static_cast<std::size_t>(index - 1);
      case VarKind::U: return 2 * kMaxCrDim + static_cast<std::size_t>(index - 1);
    }
    return 0;
  }

  static constexpr VarId from_slot(std::size_t s) {
    if (s < kMaxCrDim) return z(static_cast<int>(s) + 1);
    if (s < 2 * kMaxCrDim) return zbar(static_cast<int>(s - kMaxCrDim) + 1);
    return u(static_cast<int>(s - 2 * kMaxCrDim) + 1);
  }

  std::string name() const;

  friend constexpr bool operator==(VarId a, VarId b) { return a.kind == b.kind && a.index == b.index; }
};

/// Slot of the conjugate variable: z_k <-> zb_k, u_l fixed.
constexpr std::size_t conj_slot(std::size_t s) {
  if (s < kMaxCrDim) return s + kMaxCrDim;
  if (s < 2 * kMaxCrDim) return s - kMaxCrDim;
  return s;
}

/// Dimensions (n, c) of a CR-generic M^{2n+c} in C^{n+c}.
///
/// Directions of vector fields and 1-forms are ordered
/// d/dz_1..d/dz_n, d/dzb_1..d/dzb_n, d/du_1..d/du_c.
struct Shape {
  int n{1};
  int c{1};

  constexpr int dim() const { return 2 * n + c; }
  constexpr VarId direction_var(int d) const {
    if (d < n) return VarId::z(d + 1);
    if (d < 2 * n) return VarId::zbar(d - n + 1);
    return VarId::u(d - 2 * n + 1);
  }
  constexpr std::size_t direction_slot(int d) const { return direction_var(d).slot(); }
  /// Direction index of the conjugate direction.
  constexpr int conj_direction(int d) const {
    if (d < n) return d + n;
    if (d < 2 * n) return d - n;
    return d;
  }
  constexpr bool contains(VarId v) const {
    const int bound = v.kind == VarKind::U ? c : n;
    return v.index >= 1 && v.index <= bound;
  }
  /// One of (1,1), (1,2), (1,3), (2,1).
  constexpr bool supported() const {
    return (n == 1 && c >= 1 && c <= 3) || (n == 2 && c == 1);
  }

  friend constexpr bool operator==(Shape a, Shape b) { return a.n == b.n && a.c == b.c; }
};

}  // namespace crclass
