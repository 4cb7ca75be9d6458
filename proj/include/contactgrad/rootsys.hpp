#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "contactgrad/rational.hpp"

namespace contactgrad {

using IVec = Eigen::VectorXi;
using IMat = Eigen::MatrixXi;

/* Root system conventions, fixed once for the whole project:
 *
 *  - Bourbaki node numbering for every type (A..G).  In particular the
 *    E-series branch node is alpha_2 attached to alpha_4, F4 starts with
 *    the long roots, and G2 has alpha_1 short.
 *  - Roots are stored as integer coordinate vectors in the simple-root
 *    basis.
 *  - cartan(i,j) = <alpha_j, alpha_i^vee>, so the i-th fundamental-weight
 *    coefficient of a root mu is (cartan * mu)(i).
 *  - Lengths are normalized so long roots have squared length 2; the
 *    rational d(i) = (alpha_i,alpha_i)/2 makes (alpha_i,alpha_j) =
 *    d(i)*cartan(i,j).
 */
struct RootSystem {
  char type = 0;  // 'A'..'G'
  int rank = 0;
  IMat cartan;
  std::vector<Rat> d;  // half squared lengths of simple roots

  std::vector<IVec> roots;     // every root, negatives included
  std::vector<int> positive;   // indices into roots
  IVec highest_root;
  std::optional<IVec> highest_short_root;  // absent for simply-laced
  std::vector<int> dynkin_marks;           // coordinates of highest_root

  std::string label() const;
  int root_count() const { return static_cast<int>(roots.size()); }
  bool is_root(const IVec& v) const;
  int root_index(const IVec& v) const;  // -1 if absent

  /// <mu, alpha_i^vee> for each i.
  IVec weight_coefficients(const IVec& mu) const;
  Rat inner(const IVec& a, const IVec& b) const;
  Rat norm2(const IVec& a) const { return inner(a, a); }
  /// Integer coordinates of the coroot mu^vee in the simple coroots.
  IVec coroot_coordinates(const IVec& mu) const;
  bool is_long(const IVec& a) const;
};

/// Generates the root system by closing the simple roots under the Weyl
/// group. Throws std::invalid_argument for an invalid type/rank pair.
RootSystem build_root_system(char type, int rank);

/// Expansion of the highest root in fundamental weights (nonzero entries).
std::map<int, int> highest_root_in_weights(const RootSystem& rs);

/// Simple roots carrying the contact grading (support of the highest root
/// in fundamental weights).
std::set<int> contact_grading_node_set(const RootSystem& rs);

/// Simple roots of Dynkin mark 1; each defines a depth-one gradation.
std::set<int> depth_one_node_set(const RootSystem& rs);

/// Deterministic JSON-ish serialization, roots sorted lexicographically.
std::string serialize(const RootSystem& rs);

}  // namespace contactgrad
