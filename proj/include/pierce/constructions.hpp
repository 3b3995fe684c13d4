#pragma once

// Generators for the extremal and small configurations: regular polygons and
// their generic rotations on the circle, the bipartite 3k-direction example,
// the small planar instances with |R| = n - 1, the three-parallel-lines
// bipartite instance, and coset instances on curves over F_p.

#include <map>
#include <optional>
#include <vector>

#include "pierce/abelian.hpp"
#include "pierce/cubic.hpp"
#include "pierce/plane.hpp"

namespace pierce {

/// Points on the circle (as angle parameters) by role, with the direction set R
/// recorded as chord classes.
struct AngleConfig {
  std::map<Role, std::vector<AngleElem>> roles;  // P alone, or B and G
  std::vector<AngleElem> directions;             // R

  bool bipartite() const { return roles.count(Role::B) != 0; }
  const std::vector<AngleElem>& operator[](Role r) const;

  /// Roles distinct and disjoint, P alone or B with G, directions distinct.
  void validate() const;

  /// Chord classes determined by the roles that are absent from the directions.
  std::vector<AngleElem> missing_directions() const;

  friend bool operator==(const AngleConfig&, const AngleConfig&) = default;
};

/// Chord classes a + b over unordered pairs of distinct points.
std::vector<AngleElem> chord_classes(const std::vector<AngleElem>& pts);

/// Chord classes b + g over b in B, g in G.
std::vector<AngleElem> cross_chord_classes(const std::vector<AngleElem>& b, const std::vector<AngleElem>& g);

/// {j/m : 0 <= j < m}.
std::vector<AngleElem> regular_mgon(int m);

/// P with R set to its own chord classes.
AngleConfig angle_config_from_points(std::vector<AngleElem> pts);

/// P = {j/m} ∪ {j/m + θ}, R = {j/m} ∪ {j/m + θ} ∪ {j/m + 2θ}: n = 2m, |R| = 3n/2.
AngleConfig rotated_union(int m);

/// Z = {j/k}, Z' = Z + θ, point reflection = shift by 1/2:
/// B = Z ∪ (Z' + 1/2), G = (Z + 1/2) ∪ Z'. Needs k odd and at least 3.
AngleConfig bipartite_construction(int k);

/// P = {(0,0), (1,0)}, R = {(2,0)}.
PointConfig<Rational> two_point();

/// Unit square with its three diagonal points (1:0:0), (0:1:0), (1/2,1/2).
PointConfig<Rational> complete_quadrilateral();

/// Three points of each colour on the lines y = 0, 1, 2. On those lines
/// (x0,0), (x1,1), (x2,2) are collinear iff x0 + x2 = 2 x1.
PointConfig<Rational> three_line_bipartite();

/// Affine image of the regular hexagon with integer vertices; determines 6 directions.
std::vector<ProjPoint<Rational>> lattice_hexagon();

struct FpCosetInstance {
  std::vector<ECPoint<ModP>> subgroup;  // H, sorted
  ECPoint<ModP> offset;                 // g
  std::vector<ECPoint<ModP>> P;         // g + H
  std::vector<ECPoint<ModP>> R;         // -(P +. P)
};

/// First g in enumeration order with 3g outside H, if any. Such g keeps g + H in
/// general position and disjoint from -(2g + H).
std::optional<ECPoint<ModP>> admissible_offset(const WeierstrassCurve<ModP>& c,
                                               const std::vector<ECPoint<ModP>>& subgroup);

/// Coset configuration g + H with its forced piercing set. Throws DegenerateInput
/// when 3g lies in H (g + H would then contain collinear triples).
FpCosetInstance fp_coset_instance(const WeierstrassCurve<ModP>& c, const std::vector<ECPoint<ModP>>& subgroup,
                                  const ECPoint<ModP>& offset);

}  // namespace pierce
