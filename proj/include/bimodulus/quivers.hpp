#pragma once

#include <array>
#include <string>
#include <vector>

#include "bimodulus/bimodules.hpp"

namespace bimodulus {

struct Arrow {
  int source;  // vertices numbered from 1
  int target;
  std::string label;
};

struct Quiver {
  std::string name;
  int vertices = 4;
  std::vector<Arrow> arrows;
  int arrow_index(const std::string& label) const;
};

Quiver quiver_q0();
Quiver quiver_q1();
Quiver quiver_sigma2();

/// Arrow indices in traversal order (first arrow leaves the source).
using Path = std::vector<int>;
std::string path_label(const Quiver& q, const Path& p);
/// All paths i -> j, ordered lexicographically by their label sequences.
std::vector<Path> path_basis(const Quiver& q, int i, int j);

using IntMatrix4 = std::array<std::array<int, 4>, 4>;
struct HomExt {
  IntMatrix4 hom{};
  IntMatrix4 ext1{};
};
int hom_p1(int s, int t);
int ext1_p1(int s, int t);
HomExt hom_ext_matrix(const SplitType& s, int m);

bool is_strong(const SplitType& s, int m);
/// The case lists for chi in {1, 2} at m = 1.
bool strong_m1_table(const BimodDescriptor& d);

/// One scalar per arrow (dimension vector (1,1,1,1)).
struct Rep1111 {
  std::vector<Scalar> arrows;
};
using Theta = std::array<int, 4>;
inline constexpr Theta kTheta{-3, 1, 1, 1};
/// Vertex subsets (bit i = vertex i+1) closed under the nonzero arrows.
std::vector<unsigned> subrepresentations(const Quiver& q, const Rep1111& r);
/// King stability: theta(N) > 0 for every proper nonzero subrepresentation N.
bool theta_stable(const Quiver& q, const Rep1111& r, const Theta& theta = kTheta);

struct MrelDims {
  int ambient;  // dim of the product of the four 2-dim spaces' relation tensor
  int group;
  int kernel;
  int result;
};
MrelDims mrel_dim_check();

struct ToricReport {
  Eigen::MatrixXi weights;  // 3 x 7, rows t2, t3, t4
  Eigen::MatrixXi kernel;   // 7 x 4
  Eigen::MatrixXi product;
  bool product_zero;
  int rank_weights;
  int rank_kernel;
  /// Weight matrix with (t2, a3) set to 0, the value the quiver's incidence gives.
  Eigen::MatrixXi corrected_weights;
  bool corrected_product_zero;
  int corrected_rank;
};
ToricReport toric_matrices_check();

}  // namespace bimodulus
