#include "coincidence.hpp"

#include <algorithm>

namespace coincalc {

namespace {

template <class T>
const T& value_or_throw(const std::variant<T, Error>& v) {
  if (const auto* e = std::get_if<Error>(&v)) throw *e;
  return std::get<T>(v);
}

template <class F>
auto capture(F&& f) -> std::variant<decltype(f()), Error> {
  try {
    return f();
  } catch (const Error& e) {
    return e;
  }
}

void require_member(const GroupElement& x, const FgAbGroup& g, const char* what) {
  if (!groups_isomorphic(x.group(), g))
    fail(ErrorKind::InvalidArgument, std::string(what) + " lies in " + x.group().to_string() + ", expected " +
                                         g.to_string());
}

CoincidenceVerdict verdict(Int nielsen, Int mcc, ExtendedCount mc, std::string rule) {
  CoincidenceVerdict v;
  v.loose = mcc == 0;
  v.nielsen = nielsen;
  v.mcc = mcc;
  v.mc = mc;
  v.trace.push_back(rule);
  v.rule = std::move(rule);
  return v;
}

}  // namespace

Int ExtendedCount::value() const {
  if (!value_) fail(ErrorKind::InvalidArgument, "infinite count has no finite value");
  return *value_;
}

std::string ExtendedCount::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

// ----------------------------------------------------------- descriptors

SpaceDescriptor SpaceDescriptor::sphere(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "sphere dimension must be at least 1");
  return {SphereSpace{n}, true, n, n % 2 == 1};
}

SpaceDescriptor SpaceDescriptor::projective(Field k, int n_prime) {
  if (n_prime < 1) fail(ErrorKind::InvalidArgument, "projective space needs n' >= 1");
  ProjectiveSpace p{k, n_prime};
  // chi(RP(n')) is 0 for n' odd; chi(CP(n')) = chi(HP(n')) = n' + 1.
  bool chi_zero = k == Field::R && n_prime % 2 == 1;
  return {p, true, p.n(), chi_zero};
}

SpaceDescriptor SpaceDescriptor::grassmann(int r) {
  if (r < 3) fail(ErrorKind::InvalidArgument, "G_{r,2}(R) needs r >= 3");
  // chi(G_{r,2}(R)) = floor(r/2) is never zero.
  return {GrassmannSpace{r}, true, 2 * (r - 2), false};
}

SpaceDescriptor SpaceDescriptor::generic(std::string name, int dimension, bool compact, bool chi_zero) {
  if (dimension < 0) fail(ErrorKind::InvalidArgument, "dimension must be nonnegative");
  return {GenericSpace{std::move(name)}, compact, dimension, chi_zero};
}

std::string SpaceDescriptor::name() const {
  if (const auto* s = std::get_if<SphereSpace>(&family)) return "S^" + std::to_string(s->n);
  if (const auto* p = std::get_if<ProjectiveSpace>(&family)) return p->name();
  if (const auto* g = std::get_if<GrassmannSpace>(&family)) return "G_{" + std::to_string(g->r) + ",2}(R)";
  return std::get<GenericSpace>(family).name;
}

// ---------------------------------------------------------------- spheres

SphereClassifier::SphereClassifier(const Database& db, int m, int n)
    : m_(m),
      n_(n),
      group_(pi_sphere(db, m, n)),
      antipodal_(capture([&] { return antipodal_action(db, m, n); })),
      suspension_image_(capture([&]() -> Subgroup {
        if (m < 2 || n < 2) fail(ErrorKind::Unsupported, "no suspension into " + sphere_key(m, n));
        return hom_image(suspension_hom(db, m - 1, n - 1));
      })) {
  if (m < 1 || n < 1) fail(ErrorKind::InvalidArgument, "sphere pairs need m, n >= 1");
}

const GroupHom& SphereClassifier::antipodal() const { return value_or_throw(antipodal_); }

const Subgroup& SphereClassifier::suspension_image() const { return value_or_throw(suspension_image_); }

bool SphereClassifier::loose(const GroupElement& z1, const GroupElement& z2) const {
  require_member(z1, group_, "first class");
  require_member(z2, group_, "second class");
  if (group_.is_trivial()) return true;
  return z1 == antipodal()(z2);
}

CoincidenceVerdict SphereClassifier::classify(const GroupElement& z1, const GroupElement& z2) const {
  if (loose(z1, z2)) return verdict(0, 0, 0, "sphere-antipodal-rule");
  if (m_ == 1 && n_ == 1) {
    Int d = checked::abs(checked::sub(z1.coords()[0], z2.coords()[0]));
    return verdict(d, d, d, "circle-degree-rule");
  }
  CoincidenceVerdict v = verdict(1, 1, 1, "sphere-antipodal-rule");
  if (!suspension_image().contains(z1 - antipodal()(z2))) v.mc = ExtendedCount::infinite();
  v.trace.emplace_back(v.mc.is_infinite() ? "suspension-image-miss" : "suspension-image-hit");
  return v;
}

CoincidenceVerdict classify_sphere_pair(const Database& db, int m, int n, const GroupElement& z1,
                                        const GroupElement& z2) {
  return SphereClassifier(db, m, n).classify(z1, z2);
}

// ------------------------------------------------------- projective spaces

ProjectiveClassifier::ProjectiveClassifier(const Database& db, Field k, int m, int n_prime)
    : group_(pi_projective(db, k, m, n_prime)),
      ker_boundary_(capture([&] { return coincalc::ker_boundary(db, k, m, n_prime); })),
      ker_e_boundary_(capture([&] { return coincalc::ker_E_boundary(db, k, m, n_prime); })),
      antipodal_(capture([&]() -> GroupHom {
        if (k != Field::R) fail(ErrorKind::Unsupported, "antipodal action enters only for K = R");
        return antipodal_action(db, m, group_.space.total_sphere());
      })),
      suspension_image_(capture([&]() -> Subgroup {
        if (k != Field::R) fail(ErrorKind::Unsupported, "suspension image enters only for K = R");
        return hom_image(suspension_hom(db, m - 1, group_.space.n() - 1));
      })) {
  if (std::holds_alternative<Subgroup>(ker_boundary_)) boundary_rule_ = coincalc::boundary_rule(db, k, m, n_prime);
}

const Subgroup& ProjectiveClassifier::ker_boundary() const { return value_or_throw(ker_boundary_); }
const Subgroup& ProjectiveClassifier::ker_E_boundary() const { return value_or_throw(ker_e_boundary_); }
const GroupHom& ProjectiveClassifier::antipodal() const { return value_or_throw(antipodal_); }
const Subgroup& ProjectiveClassifier::suspension_image() const { return value_or_throw(suspension_image_); }

bool ProjectiveClassifier::freely_homotopic(const GroupElement& z1, const GroupElement& z2) const {
  require_member(z1, lift_group(), "first lift");
  require_member(z2, lift_group(), "second lift");
  if (z1 == z2) return true;
  if (field() != Field::R) return false;
  // Free classes in RP(n') are orbits of the deck involution.
  return z1 == antipodal()(z2);
}

bool ProjectiveClassifier::row_holds(int row, const GroupElement& z1, const GroupElement& z2) const {
  const bool real = field() == Field::R;
  switch (row) {
    case 1: return freely_homotopic(z1, z2) && ker_boundary().contains(z2);
    case 2:
      return freely_homotopic(z1, z2) && ker_E_boundary().contains(z2) && !ker_boundary().contains(z2);
    case 3: return real && freely_homotopic(z1, z2) && !(antipodal()(z2) == z2);
    case 4: return real && !freely_homotopic(z1, z2) && suspension_image().contains(z1 - z2);
    case 5: return real && !suspension_image().contains(z1 - z2);
    case 6: return !real && z1 == z2 && !ker_E_boundary().contains(z1);
    case 7: return !real && !(z1 == z2);
  }
  fail(ErrorKind::InvalidArgument, "table rows are numbered 1 to 7");
}

int ProjectiveClassifier::matching_row(const GroupElement& z1, const GroupElement& z2) const {
  for (int row = 1; row <= 7; ++row)
    if (row_holds(row, z1, z2)) return row;
  fail(ErrorKind::Invariant, "no row of the classification table holds for lifts (" + z1.to_string() + ", " +
                                 z2.to_string() + ")");
}

std::vector<int> ProjectiveClassifier::matching_rows(const GroupElement& z1, const GroupElement& z2) const {
  std::vector<int> rows;
  for (int row = 1; row <= 7; ++row)
    if (row_holds(row, z1, z2)) rows.push_back(row);
  return rows;
}

CoincidenceVerdict ProjectiveClassifier::classify_lifts(const GroupElement& z1, const GroupElement& z2) const {
  struct Numbers {
    Int nielsen, mcc;
    ExtendedCount mc;
  };
  static const Numbers table[] = {
      {0, 0, 0}, {0, 1, 1}, {1, 1, 1}, {2, 2, 2}, {2, 2, ExtendedCount::infinite()}, {1, 1, 1},
      {1, 1, ExtendedCount::infinite()},
  };
  int row = matching_row(z1, z2);
  const Numbers& n = table[row - 1];
  CoincidenceVerdict v = verdict(n.nielsen, n.mcc, n.mc, "projective-table-row-" + std::to_string(row));
  v.table_row = row;
  bool used_boundary = row <= 2 || row == 6 || freely_homotopic(z1, z2);
  if (used_boundary && !boundary_rule_.empty()) v.trace.push_back(boundary_rule_);
  return v;
}

CoincidenceVerdict ProjectiveClassifier::classify(const HomotopyClass& c1, const HomotopyClass& c2) const {
  // The pi^c components play no role.
  return classify_lifts(c1.lift, c2.lift);
}

bool ProjectiveClassifier::loose(const GroupElement& z1, const GroupElement& z2) const {
  return freely_homotopic(z1, z2) && (ker_boundary().contains(z1) || ker_boundary().contains(z2));
}

CoincidenceVerdict classify_projective_pair(const Database& db, Field k, int m, int n_prime,
                                            const HomotopyClass& c1, const HomotopyClass& c2) {
  return ProjectiveClassifier(db, k, m, n_prime).classify(c1, c2);
}

ExclusivityReport validate_table_exclusivity(const ProjectiveClassifier& c, Int cap) {
  ExclusivityReport report;
  const FgAbGroup& g = c.lift_group();
  if (!g.is_finite()) fail(ErrorKind::InvalidArgument, "exclusivity is checked on finite lift groups only");
  Int order = *g.order();
  if (order > cap / std::max<Int>(order, 1))
    fail(ErrorKind::TooLarge, "pair count for " + g.to_string() + " exceeds the enumeration cap");
  auto elements = enumerate_torsion_part(g, cap);
  for (const auto& z1 : elements)
    for (const auto& z2 : elements) {
      ++report.pairs_checked;
      std::vector<int> rows = c.matching_rows(z1, z2);
      if (rows.size() == 1) continue;
      ++report.violations;
      if (report.examples.size() < 5) {
        std::string list;
        for (int r : rows) list += (list.empty() ? "" : ",") + std::to_string(r);
        report.examples.push_back("(" + z1.to_string() + ", " + z2.to_string() + ") rows [" + list + "]");
      }
    }
  return report;
}

// ---------------------------------------------------------------- Grassmann

FgAbGroup grassmann_pi(const Database& db, int m, int r) {
  if (r < 4 || r % 2 != 0) fail(ErrorKind::Unsupported, "pi_m(G_{r,2}(R)) is computed only for even r >= 4");
  if (m < 3) fail(ErrorKind::Unsupported, "pi_m(G_{r,2}(R)) is computed only for m >= 3");
  FgAbGroup real = pi_projective(db, Field::R, m, r - 2).total;
  int cp = r / 2 - 1;
  // CP(1) is the 2-sphere.
  FgAbGroup complex = cp == 1 ? pi_sphere(db, m, 2) : pi_projective(db, Field::C, m, cp).total;
  return direct_sum(real, complex).group;
}

const char* to_string(Tristate t) {
  switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    case Tristate::Unknown: return "unknown";
  }
  return "?";
}

Tristate grassmann_all_loose(int r) { return r >= 4 && r % 2 == 0 ? Tristate::True : Tristate::Unknown; }

// -------------------------------------------------------------- filtration

FgAbGroup pi_space(const Database& db, const SpaceDescriptor& space, int m) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "m must be at least 1");
  if (const auto* s = std::get_if<SphereSpace>(&space.family)) return pi_sphere(db, m, s->n);
  if (const auto* p = std::get_if<ProjectiveSpace>(&space.family))
    return pi_projective(db, p->field, m, p->n_prime).total;
  if (const auto* g = std::get_if<GrassmannSpace>(&space.family)) return grassmann_pi(db, m, g->r);
  fail(ErrorKind::Unsupported, "no homotopy groups available for " + space.name());
}

Subgroup pi_c(const Database& db, const SpaceDescriptor& space, int m) {
  if (std::holds_alternative<SphereSpace>(space.family)) return Subgroup::trivial(pi_space(db, space, m));
  if (const auto* p = std::get_if<ProjectiveSpace>(&space.family))
    return pi_projective(db, p->field, m, p->n_prime).c_subgroup();
  if (std::holds_alternative<GrassmannSpace>(space.family)) return Subgroup::whole(pi_space(db, space, m));
  fail(ErrorKind::Unsupported, "pi^c is not available for " + space.name());
}

FiltrationResult pi_q(const Database& db, const SpaceDescriptor& space, int m, std::optional<int> q) {
  if (q && *q < 1) fail(ErrorKind::InvalidArgument, "filtration index q must be at least 1");
  FgAbGroup g = pi_space(db, space, m);
  auto whole = [&](std::vector<std::string> trace) {
    return FiltrationResult{q, Subgroup::whole(g), 1, std::move(trace)};
  };
  if (q == 1) {
    FiltrationResult r = whole({"filtration-first-term"});
    if (!std::holds_alternative<GrassmannSpace>(space.family) && !g.is_trivial()) {
      try {
        r.stabilized_at = pi_q(db, space, m, std::nullopt).stabilized_at;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Unknown) throw;
        r.stabilized_at = std::holds_alternative<SphereSpace>(space.family) ? 3 : 2;
      }
    }
    return r;
  }

  if (const auto* s = std::get_if<SphereSpace>(&space.family)) {
    if (g.is_trivial()) return whole({"trivial-group"});
    if (s->n % 2 == 1) return whole({"stiefel-section"});
    if (q == 2) {
      // The answer is known even when the limit is not; 3 bounds it.
      FiltrationResult r = whole({"sphere-antipodal-rule"});
      r.stabilized_at = 3;
      try {
        if (ker_boundary(db, Field::R, m, s->n).is_whole()) r.stabilized_at = 1;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Unknown) throw;
      }
      return r;
    }
    Subgroup k = ker_boundary(db, Field::R, m, s->n);
    int stable = k.is_whole() ? 1 : 3;
    return {q, k, stable, {"sphere-filtration-stiefel", boundary_rule(db, Field::R, m, s->n)}};
  }
  if (const auto* p = std::get_if<ProjectiveSpace>(&space.family)) {
    ProjectiveHomotopyGroup pg = pi_projective(db, p->field, m, p->n_prime);
    Subgroup k = ker_boundary(db, p->field, m, p->n_prime);
    Subgroup sub = subgroup_sum(subgroup_image(pg.lift_inclusion, k), pg.c_subgroup());
    int stable = sub.is_whole() ? 1 : 2;
    return {q, sub, stable, {"projective-filtration-collapse", boundary_rule(db, p->field, m, p->n_prime)}};
  }
  if (std::holds_alternative<GrassmannSpace>(space.family)) return whole({"grassmann-split"});
  fail(ErrorKind::Unsupported, "filtration is not available for " + space.name());
}

ShortcutResult full_filtration_shortcut(int m_dimension, bool m_compact, const SpaceDescriptor& n) {
  if (m_compact && !n.compact) return {true, "shortcut-noncompact-target"};
  if (n.euler_characteristic_zero) return {true, "shortcut-vector-field"};
  if (m_dimension < n.dimension) return {true, "shortcut-low-dimension"};
  return {false, ""};
}

LooseResult loose_pair(const Database& db, const SpaceDescriptor& space, int m, const GroupElement& x1,
                       const GroupElement& x2) {
  if (const auto* s = std::get_if<SphereSpace>(&space.family)) {
    SphereClassifier c(db, m, s->n);
    bool loose = c.loose(x1, x2);
    return {loose, loose ? "z1 = A_*(z2)" : "z1 != A_*(z2)", {"sphere-antipodal-rule"}};
  }
  if (const auto* p = std::get_if<ProjectiveSpace>(&space.family)) {
    ProjectiveClassifier c(db, p->field, m, p->n_prime);
    require_member(x1, c.group().total, "first class");
    require_member(x2, c.group().total, "second class");
    GroupElement z1 = c.group().lift_projection(x1);
    GroupElement z2 = c.group().lift_projection(x2);
    LooseResult r;
    r.trace = {"projective-lift-criterion"};
    if (!c.freely_homotopic(z1, z2)) {
      r.witness = "projected lifts are not freely homotopic";
      return r;
    }
    r.trace.push_back(c.boundary_rule());
    if (c.ker_boundary().contains(z1)) {
      r.loose = true;
      r.witness = "lift of the first class lies in ker boundary";
    } else if (c.ker_boundary().contains(z2)) {
      r.loose = true;
      r.witness = "lift of the second class lies in ker boundary";
    } else {
      r.witness = "neither lift lies in ker boundary";
    }
    return r;
  }
  if (const auto* g = std::get_if<GrassmannSpace>(&space.family)) {
    if (grassmann_all_loose(g->r) != Tristate::True)
      fail(ErrorKind::Unknown, "looseness in " + space.name() + " is only known for even r >= 4");
    if (m >= 3) {
      FgAbGroup group = grassmann_pi(db, m, g->r);
      require_member(x1, group, "first class");
      require_member(x2, group, "second class");
    }
    return {true, "every pair into G_{r,2}(R) with r even is loose", {"grassmann-even-loose"}};
  }
  fail(ErrorKind::Unsupported, "looseness is not available for " + space.name());
}

GroupHom c_isomorphism(const Database& db, const SpaceDescriptor& space, int m) {
  Subgroup numerator = pi_q(db, space, m, 2).subgroup;
  Subgroup denominator = pi_c(db, space, m);
  GroupHom h = GroupHom::identity(numerator.ambient());
  if (const auto* s = std::get_if<SphereSpace>(&space.family)) h = antipodal_action(db, m, s->n);
  return induced_on_subquotient(h, numerator, denominator, numerator, denominator);
}

}  // namespace coincalc
