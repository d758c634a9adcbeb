#pragma once

// Invariant subspaces of the function space on S_n and the machinery to
// certify their properties exactly: projections, representation matrices,
// characters, the wedge-square isomorphism, and the potential/circulation
// description of the two nontrivial summands.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lop/exactlin.hpp"
#include "lop/funcspace.hpp"
#include "lop/symgroup.hpp"

namespace lop {

enum class SubspaceTag { V0, V1, V2, UInv, UTilde, Custom };

std::string_view to_string(SubspaceTag tag);

/// Span of linearly independent functions on S_n with its Gram matrix.
class Subspace {
 public:
  /// Throws Error(SingularGram) when the basis is dependent and
  /// Error(SizeMismatch) when the functions live on different groups.
  Subspace(int n, std::vector<GroupFunction> basis, SubspaceTag tag = SubspaceTag::Custom);

  int degree() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  SubspaceTag tag() const noexcept { return tag_; }
  const std::vector<GroupFunction>& basis() const noexcept { return basis_; }
  const Matrix& gram() const noexcept { return projector_.gram(); }

  /// Coefficients of the orthogonal projection of f in this basis.
  Vector coefficients(const GroupFunction& f) const;
  GroupFunction combine(const Vector& coefficients) const;
  GroupFunction project(const GroupFunction& f) const;
  /// Coefficients of f when f lies in the span, nullopt otherwise.
  std::optional<Vector> membership(const GroupFunction& f) const;
  bool contains(const GroupFunction& f) const { return membership(f).has_value(); }

 private:
  int n_;
  SubspaceTag tag_;
  std::vector<GroupFunction> basis_;
  GramProjector projector_;
};

/// project_gram with the subspace's basis and Gram matrix.
GroupFunction project(const Subspace& sub, const GroupFunction& f);

/// True when both spans coincide.
bool same_span(const Subspace& a, const Subspace& b);
/// Rank of the union of several spanning families.
std::size_t joint_rank(const std::vector<const Subspace*>& spaces);

Subspace v0_space(int n);
/// span{v_1, ..., v_{n-1}}
Subspace v1_space(int n);
/// span{w_ij : i < j <= n-1}
Subspace v2_space(int n);
/// span{1, k_ij}
Subspace u_inv_space(int n);
/// span{tk_ij : i < j}
Subspace u_tilde_space(int n);
/// span{k_ij}; not invariant under relabeling.
Subspace k_span(int n);

struct DecompositionBundle {
  int n = 0;
  Subspace v0;
  Subspace v1;
  Subspace v2;
  /// Pullback of the function inner product along e_(i,j) -> tk_ij.
  Matrix coordinate_gram;
};

/// Throws Error(NOutOfRange) outside 3 <= n <= 6.
DecompositionBundle build_bundle(int n);
/// Entry ((i,j),(k,l)) = inner(tk_ij, tk_kl), pairs in lexicographic order.
Matrix coordinate_gram(int n);

/// The reversal acting from the left: the Z_2 factor.
struct Duality {
  friend bool operator==(Duality, Duality) { return true; }
};
using GroupAction = std::variant<Permutation, Duality>;

GroupFunction act(const GroupAction& g, const GroupFunction& f);
std::string describe(const GroupAction& g);

/// Column k holds the coordinates of g * basis[k]. Throws Error(NotInvariant)
/// when some acted basis vector leaves the span.
Matrix rep_matrix(const Subspace& sub, const GroupAction& g);

struct Character {
  int n = 0;
  /// One value per class of conjugacy_classes(n).
  Vector values;
};

Character character(const Subspace& sub);
/// (1/n!) sum over classes of size * a * b.
Rational char_inner(const Character& a, const Character& b);

/// psi(a ^ b) = sum_{i<j} (a_i b_j - a_j b_i) tk_ij for a, b in F = Q^n.
GroupFunction psi_wedge(int n, const Vector& a, const Vector& b);

struct WedgeReport {
  bool pass = true;
  std::vector<std::string> passed;
  std::string failure;  // first failing identity, empty on success
};
/// Checks that psi: F ^ F -> span{tk_ij} is an equivariant isomorphism and
/// that it carries F_1 ^ F_0 onto V_1 and F_1 ^ F_1 onto V_2.
WedgeReport wedge_iso_check(int n);

/// Node-balance matrix: row j is sum_{i != j} u(i, j) with u(j, i) = -u(i, j).
Matrix circulation_constraints(int n);
/// The g with u(i, j) = g(i) - g(j) and g(n) = 0, if one exists.
std::optional<Vector> potential_of(int n, const Vector& u);
bool is_potential(int n, const Vector& u);
bool is_circulation(int n, const Vector& u);
/// Coordinates of f in the {tk_ij} basis; nullopt when f is outside span{tk_ij}.
std::optional<Vector> tk_coordinates(const GroupFunction& f);

struct CharacterizationReport {
  bool pass = true;
  std::size_t potential_dim = 0;    // dimension of the potential space
  std::size_t circulation_dim = 0;  // dimension of the circulation space
  std::string failure;
};
/// Coordinates of V_1 are potentials, those of V_2 are circulations, and the
/// dimensions agree, so the coordinate images are exactly those spaces.
CharacterizationReport potential_circulation_check(int n);

struct InvarianceReport {
  bool pass = true;
  std::string failure;
};
/// rep_matrix succeeds on V_0, V_1, V_2 for every transposition generator,
/// the n-cycle, and the duality; the duality is +1 on V_0 and -1 on V_1, V_2.
InvarianceReport invariance_check(const DecompositionBundle& bundle);

/// Pulls a function on S_{m-1} back to S_m through the coset representative
/// fixing m: E(h)(p) = h(restrict_last(coset_representative(p))).
GroupFunction embed_previous(const GroupFunction& h);
/// Iterates coset_representative + restrict_last down to S_level.
Permutation reduce_to(const Permutation& p, int level);
/// Applies embed_previous until the function lives on S_n.
GroupFunction embed_into(const GroupFunction& h, int n);

struct CorollaryLevel {
  int level = 0;                       // i, with dim = i - 1
  Subspace space;                      // embedded v_1..v_{i-1} of level i
  std::vector<GroupFunction> generators;  // embedded v_1..v_i of level i
};

/// W_n, W_{n-1}, ..., W_2 inside the function space on S_n.
/// Throws Error(NOutOfRange) outside 3 <= n <= 6.
std::vector<CorollaryLevel> iterate_decomposition(int n);

}  // namespace lop
