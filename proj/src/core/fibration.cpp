#include "fibration.hpp"

namespace coincalc {

std::string ProjectiveSpace::name() const {
  const char* prefix = field == Field::R ? "RP" : field == Field::C ? "CP" : "HP";
  return std::string(prefix) + "(" + std::to_string(n_prime) + ")";
}

namespace {

FgAbGroup relabel(const FgAbGroup& g, const std::string& wrap) {
  if (!g.has_labels()) return g;
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back(wrap + "(" + l + ")");
  return g.with_labels(std::move(labels));
}

}  // namespace

ProjectiveHomotopyGroup pi_projective(const Database& db, Field k, int m, int n_prime) {
  if (m < 2 || n_prime < 2) fail(ErrorKind::Unsupported, "pi_m(KP(n')) splits only for m, n' >= 2");
  ProjectiveSpace space{k, n_prime};
  FgAbGroup lift = pi_sphere(db, m, space.total_sphere());
  FgAbGroup c = relabel(pi_sphere(db, m - 1, space.d() - 1), "c");
  DirectSum sum = direct_sum(relabel(lift, "p"), c);
  // Keep the lift group with its sphere labels so elements print naturally.
  GroupHom lift_in(lift, sum.group, sum.inject_first.matrix());
  GroupHom lift_out(sum.group, lift, sum.project_first.matrix());
  return {space, m, lift, c, sum.group, lift_in, sum.inject_second, lift_out, sum.project_second};
}

HomotopyClass HomotopyClass::from_total(const ProjectiveHomotopyGroup& g, const GroupElement& x) {
  return {g.space, g.m, g.lift_projection(x), g.c_projection(x)};
}

HomotopyClass HomotopyClass::from_lift(const ProjectiveHomotopyGroup& g, const GroupElement& lift) {
  return {g.space, g.m, lift, GroupElement::zero(g.c_group)};
}

GroupElement HomotopyClass::total(const ProjectiveHomotopyGroup& g) const {
  return g.lift_inclusion(lift) + g.c_inclusion(c);
}

GroupHom stable_range_boundary(const Database& db, int m, int n) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "stable boundary needs n >= 2");
  FgAbGroup domain = pi_sphere(db, m, n);
  FgAbGroup codomain = pi_sphere(db, m - 1, n - 1);
  if (n % 2 == 1) return GroupHom::zero(domain, codomain);
  if (m >= 2 * n - 2)
    fail(ErrorKind::Unknown, "boundary unknown: " + sphere_key(m, n) + " lies outside the stable range m < 2n - 2");
  GroupHom e = suspension_hom(db, m - 1, n - 1);
  if (!e.is_bijective())
    fail(ErrorKind::Invariant, "suspension " + sphere_key(m - 1, n - 1) + " -> " + sphere_key(m, n) +
                                   " is not an isomorphism in the stable range");
  return compose_homs(e.inverse(), GroupHom::multiplication(domain, 2));
}

std::string boundary_rule(const Database& db, Field k, int m, int n_prime) {
  if (db.find_hom(HomKind::Boundary, k, m, n_prime)) return "db-record";
  ProjectiveSpace s{k, n_prime};
  if (k == Field::R && s.n() % 2 == 1) return "stiefel-section";
  if (k == Field::R && m < 2 * s.n() - 2) return "stable-boundary-kernel";
  return "trivial-group";
}

Subgroup ker_boundary(const Database& db, Field k, int m, int n_prime) {
  return hom_kernel(boundary_hom(db, k, m, n_prime));
}

Subgroup ker_E_boundary(const Database& db, Field k, int m, int n_prime) {
  ProjectiveSpace s{k, n_prime};
  GroupHom boundary = boundary_hom(db, k, m, n_prime);
  GroupHom e = suspension_hom(db, m - 1, s.n() - 1);
  return hom_kernel(compose_homs(e, boundary));
}

const char* to_string(ExactnessReport::Status s) {
  switch (s) {
    case ExactnessReport::Status::Verified: return "verified";
    case ExactnessReport::Status::Failed: return "failed";
    case ExactnessReport::Status::Unverifiable: return "unverifiable";
  }
  return "?";
}

ExactnessReport validate_exactness(const Database& db, Field k, int m, int n_prime) {
  ExactnessReport report;
  report.key = std::string("exactness(K=") + to_string(k) + ",m=" + std::to_string(m) + ",n'=" +
               std::to_string(n_prime) + ")";
  ProjectiveSpace s{k, n_prime};
  try {
    FgAbGroup target = pi_sphere(db, m, s.total_sphere());
    if (target.is_trivial()) {
      report.status = ExactnessReport::Status::Verified;
      report.message = "trivial group";
      return report;
    }

    std::optional<Subgroup> image;
    if (const auto* p = db.find_hom(HomKind::StiefelProjection, k, m, n_prime)) {
      image = hom_image(p->hom);
      report.message = "p_K* from record";
    } else if (k == Field::R && n_prime % 2 == 1 && n_prime >= 3 && m >= 3) {
      // V_{n'+1,2}(R) -> S^{n'} has a section: p_R* is the projection onto the
      // second summand of the split group.
      DirectSum v = pi_stiefel_real(db, m, n_prime + 1);
      image = hom_image(GroupHom(v.group, target, v.project_second.matrix()));
      report.message = "p_R* from the split Stiefel group";
    }
    if (!image) {
      report.status = ExactnessReport::Status::Unverifiable;
      report.message = "no data for p_K*";
      return report;
    }
    Subgroup kernel = ker_boundary(db, k, m, n_prime);
    if (image->same_as(kernel)) {
      report.status = ExactnessReport::Status::Verified;
    } else {
      report.status = ExactnessReport::Status::Failed;
      report.message += ": im p_K* = " + image->canonical_form().to_string() +
                        " differs from ker boundary = " + kernel.canonical_form().to_string();
    }
  } catch (const Error& e) {
    report.status =
        e.kind() == ErrorKind::Unknown ? ExactnessReport::Status::Unverifiable : ExactnessReport::Status::Failed;
    report.message = e.what();
  }
  return report;
}

}  // namespace coincalc
