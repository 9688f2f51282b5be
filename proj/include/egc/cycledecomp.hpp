#pragma once

#include <string>
#include <vector>

#include "egc/ordering.hpp"
#include "egc/scalar.hpp"

namespace egc {

/// One convex-combination term: a 0/1 orientation of the cycle's edges
/// (never all-zeros or all-ones) and its positive weight.
struct OrientationTerm {
  std::vector<int> orientation;
  Scalar weight;
  friend bool operator==(const OrientationTerm&, const OrientationTerm&) = default;
};

struct OrientationDecomposition {
  int length = 0;
  std::vector<OrientationTerm> terms;

  Scalar total_weight() const;
  /// Coordinate-wise weighted sum of the orientations.
  std::vector<Scalar> reconstruct() const;
  friend bool operator==(const OrientationDecomposition&, const OrientationDecomposition&) = default;
};

/// One support-reduction pull: weight z on the support indicator (scaled by
/// 1 - 1/l and expanded into complement-of-singleton terms when the support
/// is still full).
struct DecompStep {
  std::vector<int> support;
  Scalar z;
  bool full_support = false;
  bool reached_norm_one = false;
};

struct DecompTrace {
  /// The input was decomposed through its coordinate-wise complement (the
  /// orientation set is closed under complement, and of f and 1-f at least
  /// one admits the full-support pull without pushing an entry above 1).
  bool complemented = false;
  std::vector<DecompStep> steps;
  /// Per-support-coordinate weights of the terminal norm-1 vector, empty when
  /// a z = 1 pull consumed the remainder exactly.
  std::vector<Scalar> finisher;
};

/// The l-term expansion of (1 - 1/l) * ones: each complement-of-a-singleton
/// orientation weighted 1/l.
OrientationDecomposition expand_scaled_ones(int length);

/// Decomposes a curl-consistent cycle weight vector (entries in [0,1) --
/// zeros restrict to the support -- with 1 < sum, and sum < l-1 when the
/// support is full) into a convex combination of acyclic orientations that
/// reconstructs it exactly. At most l support-reduction pulls: each pull
/// either lands the remaining norm exactly on 1 (finished by singleton
/// orientations) or zeroes out at least one coordinate.
OrientationDecomposition decompose_cycle(const std::vector<Scalar>& f0,
                                         DecompTrace* trace = nullptr);

/// A full ranking of the cycle's vertices whose pairwise opinions on cycle
/// edges match the orientation (bit i set means vertex i precedes vertex
/// i+1). Topological order of the implied constraints, smallest vertex index
/// first among ties. All-zeros and all-ones admit no ranking.
Ranking orientation_to_ranking(const std::vector<int>& orientation);

/// Ranking distribution generating the cycle's edge weights: decomposition
/// terms mapped through orientation_to_ranking, duplicates merged.
RankingDistribution cycle_to_ranking_distribution(const std::vector<Scalar>& f0,
                                                  std::vector<std::string> labels = {});

}  // namespace egc
