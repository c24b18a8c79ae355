#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "bimodulus/quivers.hpp"

namespace bimodulus {

// S = k<x,y,z>/(yx - xy, zx - lambda xz, zy - yz), deg z = d.

/// #{(i,j,k) >= 0 : i + j + d k = n}.
long s_graded_dim(int d, int n);

using Word = std::string;  // letters 'x', 'y', 'z'
/// x^i y^j z^k -> coefficient.
using PBWPoly = std::map<std::array<int, 3>, Scalar>;
PBWPoly qweyl_normal_form(const Word& w, const Scalar& lambda);
/// The overlap zyx reduces to the same normal form both ways.
bool qweyl_confluent(const Scalar& lambda);

/// Hom dimensions of (O, O(1), O(e), O(e+1)) with e = 2 for d = 2 and e = d otherwise.
std::array<std::array<long, 4>, 4> collection_hom_dims(int d);

/// Linear combination of paths of a single quiver.
struct PathRelation {
  int source, target;
  std::vector<std::pair<Scalar, Path>> terms;
};
PathRelation make_relation(const Quiver& q, const std::vector<std::pair<Scalar, std::vector<std::string>>>& terms);

/// b2a1 - a2b1, b3a2 - a3b2, c2a1 - lambda a3c1, c2b1 - b3c1 (paths written right to left).
std::vector<PathRelation> stephenson_relations(const Scalar& lambda);
/// Two-sided closure of the relations inside e_j kQ e_i, rows in path_basis(q, i, j) order.
Matrix relation_closure(const Quiver& q, const std::vector<PathRelation>& rels, int i, int j);

/// Path evaluation e_4 kQ e_1 -> Hom(O(-1), O(2) + O) through the explicit generator matrices.
Matrix bimodule_path_evaluation(const Scalar& lambda);
/// Kernel of the evaluation, rows in path order.
Matrix bimodule_relations(const Scalar& lambda);

struct McKayReport {
  Scalar lambda;
  int closure_dim = 0;
  int kernel_dim = 0;
  int surviving = 0;
  long expected = 0;  // s_graded_dim(2, 3)
  bool subspaces_equal = false;
  bool confluent = false;
  bool hom_dims_match = false;  // path counts modulo closure = collection_hom_dims(2)
  bool pass() const;
};
McKayReport mckay_verify(const Scalar& lambda);

}  // namespace bimodulus
