#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liemech/algebra.hpp"
#include "liemech/rational.hpp"

namespace liemech {

enum class Family { A, B, C, D };

Family family_from_char(char c);
char family_char(Family f);

using RationalVec = std::vector<Rational>;

/// Root system of a classical family.  Root vectors are the exact values
/// of the root functionals on the chosen Cartan basis (g_m for A_n, f_pp
/// for B_n/D_n, A_ii for C_n); all entries are integers.  The inner
/// product (alpha, beta) = a^T K^-1 b, where K is the Killing form
/// restricted to the Cartan basis; kinv stores K^-1 exactly.
struct RootSystem {
  Family family;
  int rank;
  std::vector<std::string> labels;      // per root, f/g-basis index pairs
  std::vector<RationalVec> roots;       // functional coordinates
  std::vector<int> positive;            // indices into roots
  std::vector<int> simple;              // ordered indices into roots
  std::vector<std::vector<Rational>> kinv;  // inverse Cartan-block Killing
  std::vector<std::vector<Rational>> gram;  // on simple roots

  Rational inner(const RationalVec& a, const RationalVec& b) const;
};

/// Builds the family from its defining index conventions; throws on
/// unsupported rank (rank >= 1, and rank >= 2 for D).
RootSystem build_root_system(Family family, int rank);

/// Integer Cartan matrix A_ij = 2 (b_i, b_j) / (b_i, b_i).
Eigen::MatrixXi cartan_matrix(const RootSystem& rs);

/// Exact integer coefficients of roots[root_index] on the simple roots;
/// coefficients are all nonnegative or all nonpositive.
std::vector<long long> simple_root_expansion(const RootSystem& rs,
                                             int root_index);

struct DynkinEdge {
  int i, j;          // positions in rs.simple
  int multiplicity;  // A_ij * A_ji
  std::optional<int> arrow_to;  // position of the shorter root, if lengths differ
};

struct DynkinDiagram {
  std::vector<std::string> nodes;  // simple root labels, family numbering
  std::vector<DynkinEdge> edges;
};

DynkinDiagram dynkin(const RootSystem& rs);
std::string render_text(const DynkinDiagram& d);
std::string render_dot(const DynkinDiagram& d);

/// Independent oracle: simultaneous ad-eigenvalue tuples of the given
/// commuting Cartan elements, found by integer candidate search with
/// common-kernel rank tests.  Eigenvalues are snapped to integers with
/// tolerance snap_tol.  Entries repeat with their multiplicity.
std::vector<std::vector<long long>> roots_from_adjoint(
    const LieAlgebra& g, const std::vector<int>& cartan_indices,
    double snap_tol = 1e-8);

}  // namespace liemech
