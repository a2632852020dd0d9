#pragma once

// Finitely generated abelian groups in invariant-factor form, their elements,
// homomorphisms and subgroups. Every value is immutable once constructed;
// copies share storage.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace coincalc {

inline constexpr Int kEnumerationCap = 1'000'000;

/// Z^free_rank + Z/t_1 + ... + Z/t_k with t_i >= 2 and t_i | t_{i+1}.
/// Generators are ordered free first, then torsion in chain order.
class FgAbGroup {
 public:
  FgAbGroup();
  FgAbGroup(std::size_t free_rank, std::vector<Int> torsion, std::vector<std::string> labels = {});

  static FgAbGroup integers(std::string label = {});
  static FgAbGroup cyclic(Int order, std::string label = {});

  std::size_t free_rank() const { return data_->free_rank; }
  const std::vector<Int>& torsion() const { return data_->torsion; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  bool has_labels() const { return !data_->labels.empty(); }
  std::size_t generator_count() const { return data_->free_rank + data_->torsion.size(); }

  // Order of generator i, or 0 for a free generator.
  Int modulus(std::size_t i) const { return i < free_rank() ? 0 : torsion()[i - free_rank()]; }

  bool is_trivial() const { return generator_count() == 0; }
  bool is_finite() const { return free_rank() == 0; }
  // Group order; nullopt when infinite.
  std::optional<Int> order() const;

  // Square diagonal matrix whose columns generate the relation lattice.
  Matrix relation_matrix() const;

  FgAbGroup with_labels(std::vector<std::string> labels) const;
  FgAbGroup unlabeled() const { return with_labels({}); }

  // Reduce torsion coordinates into [0, t).
  std::vector<Int> reduce(std::vector<Int> coords) const;

  std::string to_string() const;
  std::string label(std::size_t i) const;

  friend bool operator==(const FgAbGroup& a, const FgAbGroup& b);

 private:
  struct Data {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;
    std::vector<std::string> labels;
  };
  std::shared_ptr<const Data> data_;
};

/// Same invariants; labels are ignored.
bool groups_isomorphic(const FgAbGroup& a, const FgAbGroup& b);

class GroupElement {
 public:
  GroupElement(FgAbGroup group, std::vector<Int> coords);

  static GroupElement zero(const FgAbGroup& group);
  static GroupElement generator(const FgAbGroup& group, std::size_t i);

  const FgAbGroup& group() const { return group_; }
  const std::vector<Int>& coords() const { return coords_; }
  bool is_zero() const;

  // Coordinates with generator labels, e.g. "nu_4 + 11 E nu'".
  std::string to_string() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b);

 private:
  FgAbGroup group_;
  std::vector<Int> coords_;
};

GroupElement add(const GroupElement& a, const GroupElement& b);
GroupElement negate(const GroupElement& a);
GroupElement scalar_multiply(Int k, const GroupElement& a);
inline GroupElement operator+(const GroupElement& a, const GroupElement& b) { return add(a, b); }
inline GroupElement operator-(const GroupElement& a) { return negate(a); }
inline GroupElement operator-(const GroupElement& a, const GroupElement& b) { return add(a, negate(b)); }
inline GroupElement operator*(Int k, const GroupElement& a) { return scalar_multiply(k, a); }

/// nullopt means infinite order.
std::optional<Int> element_order(const GroupElement& x);

/// All elements with zero free coordinates. Throws TooLarge above `cap`.
std::vector<GroupElement> enumerate_torsion_part(const FgAbGroup& group, Int cap = kEnumerationCap);

class Subgroup;

/// Homomorphism given on generators: column j is the image of domain
/// generator j in codomain coordinates. Well-definedness is checked on
/// construction.
class GroupHom {
 public:
  GroupHom(FgAbGroup domain, FgAbGroup codomain, Matrix matrix);

  static GroupHom identity(const FgAbGroup& group);
  static GroupHom zero(const FgAbGroup& domain, const FgAbGroup& codomain);
  static GroupHom multiplication(const FgAbGroup& group, Int k);

  const FgAbGroup& domain() const { return domain_; }
  const FgAbGroup& codomain() const { return codomain_; }
  const Matrix& matrix() const { return matrix_; }

  GroupElement operator()(const GroupElement& x) const;

  bool is_zero() const { return matrix_.is_zero(); }
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  // Throws InvalidArgument unless bijective.
  GroupHom inverse() const;

  friend bool operator==(const GroupHom& a, const GroupHom& b);

 private:
  FgAbGroup domain_;
  FgAbGroup codomain_;
  Matrix matrix_;
};

/// outer after inner.
GroupHom compose_homs(const GroupHom& outer, const GroupHom& inner);

/// Z^n modulo the column span of `relations`, brought to canonical form.
/// `to_canonical` (k x n) sends old coordinates to canonical ones;
/// `from_canonical` (n x k) lifts canonical generators back.
struct CanonicalPresentation {
  FgAbGroup group;
  Matrix to_canonical;
  Matrix from_canonical;
};

CanonicalPresentation present_quotient(const Matrix& relations, std::size_t generator_count);

/// Subgroup of `ambient` generated by a finite list of elements.
class Subgroup {
 public:
  Subgroup(FgAbGroup ambient, const std::vector<GroupElement>& generators);
  // Generators given as matrix columns in ambient coordinates.
  Subgroup(FgAbGroup ambient, Matrix generators);

  static Subgroup whole(const FgAbGroup& group);
  static Subgroup trivial(const FgAbGroup& group);

  const FgAbGroup& ambient() const { return data_->ambient; }
  std::vector<GroupElement> generators() const;
  const Matrix& generator_matrix() const { return data_->generators; }

  // The subgroup as an abstract group, in canonical form.
  const FgAbGroup& canonical_form() const { return data_->self.group; }

  bool contains(const GroupElement& x) const;
  // Integer combination of the generators equal to x, if any.
  std::optional<std::vector<Int>> coefficients(const GroupElement& x) const;

  bool is_subgroup_of(const Subgroup& other) const;
  bool same_as(const Subgroup& other) const;
  bool is_whole() const;

  // canonical_form() -> ambient.
  GroupHom inclusion() const;
  // Canonical coordinates of a member; throws InvalidArgument otherwise.
  GroupElement to_canonical(const GroupElement& x) const;

  const FgAbGroup& quotient_group() const { return data_->quotient.group; }
  GroupHom quotient_projection() const;
  // Ambient representative of quotient generator i.
  GroupElement quotient_lift(std::size_t i) const;

 private:
  struct Data {
    FgAbGroup ambient;
    Matrix generators;
    CanonicalPresentation self;
    CanonicalPresentation quotient;
  };
  std::shared_ptr<const Data> data_;
};

Subgroup hom_kernel(const GroupHom& h);
Subgroup hom_image(const GroupHom& h);
bool element_in_subgroup(const GroupElement& x, const Subgroup& s);

struct Quotient {
  FgAbGroup group;
  GroupHom projection;
};
Quotient quotient(const FgAbGroup& g, const Subgroup& s);

/// Sum of two subgroups of the same ambient group.
Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b);
/// Image of a subgroup under a homomorphism.
Subgroup subgroup_image(const GroupHom& h, const Subgroup& s);
/// Preimage of a subgroup of the codomain.
Subgroup subgroup_preimage(const GroupHom& h, const Subgroup& s);

struct DirectSum {
  FgAbGroup group;
  GroupHom inject_first;
  GroupHom inject_second;
  GroupHom project_first;
  GroupHom project_second;
};
DirectSum direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/// Map induced by `h` on s_source/t_source -> s_target/t_target, given as
/// subquotients of domain and codomain. Requires h(s) in s' and h(t) in t'.
GroupHom induced_on_subquotient(const GroupHom& h, const Subgroup& numerator_source,
                                const Subgroup& denominator_source, const Subgroup& numerator_target,
                                const Subgroup& denominator_target);

/// s / t for t contained in s, both inside the same ambient group.
FgAbGroup subquotient(const Subgroup& numerator, const Subgroup& denominator);

}  // namespace coincalc
