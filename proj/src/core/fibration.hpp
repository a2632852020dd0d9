#pragma once

// The Hopf-type fibrations S^{n+d-1} -> KP(n') and V_{n'+1,2}(K) -> S^{n+d-1}:
// the splitting of pi_m(KP(n')), the boundary partial_K and its kernels.

#include <string>

#include "homotopy_db.hpp"

namespace coincalc {

struct ProjectiveSpace {
  Field field = Field::R;
  int n_prime = 2;

  int d() const { return field_dimension(field); }
  // Real dimension of KP(n').
  int n() const { return d() * n_prime; }
  // The sphere S^{n+d-1} covering KP(n').
  int total_sphere() const { return n() + d() - 1; }
  std::string name() const;
};

/// pi_m(KP(n')) = p_*(pi_m(S^{n+d-1})) + pi^c_m with pi^c_m = pi_{m-1}(S^{d-1}).
struct ProjectiveHomotopyGroup {
  ProjectiveSpace space;
  int m = 0;
  FgAbGroup lift_group;
  FgAbGroup c_group;
  FgAbGroup total;
  GroupHom lift_inclusion;   // p_*
  GroupHom c_inclusion;
  GroupHom lift_projection;
  GroupHom c_projection;

  Subgroup lift_image() const { return hom_image(lift_inclusion); }
  Subgroup c_subgroup() const { return hom_image(c_inclusion); }
};

/// Requires m, n' >= 2.
ProjectiveHomotopyGroup pi_projective(const Database& db, Field k, int m, int n_prime);

/// A class in pi_m(KP(n')) split into its lift [f~] and its pi^c part.
struct HomotopyClass {
  ProjectiveSpace space;
  int m = 0;
  GroupElement lift;
  GroupElement c;

  static HomotopyClass from_total(const ProjectiveHomotopyGroup& g, const GroupElement& x);
  static HomotopyClass from_lift(const ProjectiveHomotopyGroup& g, const GroupElement& lift);
  GroupElement total(const ProjectiveHomotopyGroup& g) const;
};

/// Stable-range boundary pi_m(S^n) -> pi_{m-1}(S^{n-1}) for the real Stiefel
/// fibration: E^{-1} composed with multiplication by 1 + (-1)^n, sign fixed
/// to +. For n odd the fibration has a section and the boundary is zero in
/// every degree. Needs m < 2n - 2 otherwise.
GroupHom stable_range_boundary(const Database& db, int m, int n);

/// Which closed form or record produces partial_K at (m, n').
std::string boundary_rule(const Database& db, Field k, int m, int n_prime);

Subgroup ker_boundary(const Database& db, Field k, int m, int n_prime);
/// Kernel of E after partial_K; refuses when E is not available.
Subgroup ker_E_boundary(const Database& db, Field k, int m, int n_prime);

struct ExactnessReport {
  enum class Status { Verified, Failed, Unverifiable };
  Status status = Status::Unverifiable;
  std::string key;
  std::string message;
};

const char* to_string(ExactnessReport::Status s);

/// Checks im(p_{K*}) = ker(partial_K) inside pi_m(S^{n+d-1}).
ExactnessReport validate_exactness(const Database& db, Field k, int m, int n_prime);

}  // namespace coincalc
