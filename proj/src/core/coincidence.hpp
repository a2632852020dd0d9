#pragma once

// Looseness, Nielsen and minimum coincidence numbers for maps from spheres
// into spheres, projective spaces and Grassmannians of 2-planes, and the
// configuration-space filtration of pi_m.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fibration.hpp"

namespace coincalc {

/// A natural number or infinity.
class ExtendedCount {
 public:
  constexpr ExtendedCount(Int value = 0) : value_(value) {}
  static constexpr ExtendedCount infinite() {
    ExtendedCount c;
    c.value_.reset();
    return c;
  }

  bool is_infinite() const { return !value_; }
  Int value() const;
  std::string to_string() const;

  friend bool operator==(const ExtendedCount&, const ExtendedCount&) = default;
  friend bool operator<=(const ExtendedCount& a, const ExtendedCount& b) {
    return b.is_infinite() || (!a.is_infinite() && *a.value_ <= *b.value_);
  }

 private:
  std::optional<Int> value_;
};

struct CoincidenceVerdict {
  bool loose = false;
  Int nielsen = 0;
  Int mcc = 0;
  ExtendedCount mc;
  std::string rule;
  std::optional<int> table_row;
  std::vector<std::string> trace;

  bool same_numbers(const CoincidenceVerdict& o) const {
    return nielsen == o.nielsen && mcc == o.mcc && mc == o.mc;
  }
};

struct SphereSpace {
  int n = 1;
};
struct GrassmannSpace {
  int r = 4;
};
struct GenericSpace {
  std::string name;
};

struct SpaceDescriptor {
  std::variant<SphereSpace, ProjectiveSpace, GrassmannSpace, GenericSpace> family;
  bool compact = true;
  int dimension = 0;
  bool euler_characteristic_zero = false;

  static SpaceDescriptor sphere(int n);
  static SpaceDescriptor projective(Field k, int n_prime);
  static SpaceDescriptor grassmann(int r);
  static SpaceDescriptor generic(std::string name, int dimension, bool compact, bool euler_characteristic_zero);

  std::string name() const;
};

// ------------------------------------------------------------------ spheres

/// Classifier for pairs in pi_m(S^n). Structure maps are looked up once;
/// a lookup failure is reported only when a verdict actually needs it.
class SphereClassifier {
 public:
  SphereClassifier(const Database& db, int m, int n);

  const FgAbGroup& group() const { return group_; }
  int m() const { return m_; }
  int n() const { return n_; }

  const GroupHom& antipodal() const;
  const Subgroup& suspension_image() const;

  bool loose(const GroupElement& z1, const GroupElement& z2) const;
  CoincidenceVerdict classify(const GroupElement& z1, const GroupElement& z2) const;

 private:
  int m_, n_;
  FgAbGroup group_;
  std::variant<GroupHom, Error> antipodal_;
  std::variant<Subgroup, Error> suspension_image_;
};

CoincidenceVerdict classify_sphere_pair(const Database& db, int m, int n, const GroupElement& z1,
                                        const GroupElement& z2);

// -------------------------------------------------------- projective spaces

/// The seven-case classification of pairs in pi_m(KP(n')), m, n' >= 2.
class ProjectiveClassifier {
 public:
  ProjectiveClassifier(const Database& db, Field k, int m, int n_prime);

  const ProjectiveHomotopyGroup& group() const { return group_; }
  const FgAbGroup& lift_group() const { return group_.lift_group; }
  Field field() const { return group_.space.field; }

  const Subgroup& ker_boundary() const;
  const Subgroup& ker_E_boundary() const;
  const GroupHom& antipodal() const;
  const Subgroup& suspension_image() const;
  const std::string& boundary_rule() const { return boundary_rule_; }

  /// Base point free homotopy of p o f~_1 and p o f~_2.
  bool freely_homotopic(const GroupElement& z1, const GroupElement& z2) const;
  /// Row predicate 1..7 on lift components.
  bool row_holds(int row, const GroupElement& z1, const GroupElement& z2) const;
  /// First row that holds, in listed order.
  int matching_row(const GroupElement& z1, const GroupElement& z2) const;
  /// Every row that holds; exactly one is expected.
  std::vector<int> matching_rows(const GroupElement& z1, const GroupElement& z2) const;

  CoincidenceVerdict classify_lifts(const GroupElement& z1, const GroupElement& z2) const;
  CoincidenceVerdict classify(const HomotopyClass& c1, const HomotopyClass& c2) const;

  /// Loose iff some z_i lies in ker partial_K and the projected lifts are
  /// freely homotopic.
  bool loose(const GroupElement& z1, const GroupElement& z2) const;

 private:
  ProjectiveHomotopyGroup group_;
  std::string boundary_rule_;
  std::variant<Subgroup, Error> ker_boundary_;
  std::variant<Subgroup, Error> ker_e_boundary_;
  std::variant<GroupHom, Error> antipodal_;
  std::variant<Subgroup, Error> suspension_image_;
};

CoincidenceVerdict classify_projective_pair(const Database& db, Field k, int m, int n_prime,
                                            const HomotopyClass& c1, const HomotopyClass& c2);

struct ExclusivityReport {
  std::size_t pairs_checked = 0;
  std::size_t violations = 0;
  // A few offending pairs with the rows that matched.
  std::vector<std::string> examples;
};

/// Checks over every pair of torsion lifts that exactly one row holds.
ExclusivityReport validate_table_exclusivity(const ProjectiveClassifier& c, Int cap = kEnumerationCap);

// ------------------------------------------------------------- looseness

struct LooseResult {
  bool loose = false;
  std::string witness;
  std::vector<std::string> trace;
};

/// Elements are given in pi_m of the space (total group for projective
/// spaces, the Grassmann group for Grassmannians).
LooseResult loose_pair(const Database& db, const SpaceDescriptor& space, int m, const GroupElement& x1,
                       const GroupElement& x2);

// ------------------------------------------------------------- filtration

/// pi_m of the space in the coordinates used by pi_c and pi_q.
FgAbGroup pi_space(const Database& db, const SpaceDescriptor& space, int m);

Subgroup pi_c(const Database& db, const SpaceDescriptor& space, int m);

struct FiltrationResult {
  std::optional<int> q;  // nullopt means the intersection over all q
  Subgroup subgroup;
  int stabilized_at = 1;
  std::vector<std::string> trace;
};

FiltrationResult pi_q(const Database& db, const SpaceDescriptor& space, int m, std::optional<int> q);

struct ShortcutResult {
  bool applies = false;
  std::string rule;
};

/// Sufficient conditions for pi^(q) to be everything for all q.
ShortcutResult full_filtration_shortcut(int m_dimension, bool m_compact, const SpaceDescriptor& n);

// -------------------------------------------------------------- Grassmann

/// pi_m(G_{r,2}(R)) = pi_m(RP(r-2)) + pi_m(CP(r/2-1)) for even r >= 4, m >= 3.
FgAbGroup grassmann_pi(const Database& db, int m, int r);

enum class Tristate { False, True, Unknown };
const char* to_string(Tristate t);

Tristate grassmann_all_loose(int r);

// ------------------------------------------------------------------- c

/// The isomorphism c on pi^(2)/pi^c.
GroupHom c_isomorphism(const Database& db, const SpaceDescriptor& space, int m);

}  // namespace coincalc
