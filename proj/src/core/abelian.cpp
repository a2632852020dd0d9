#include "abelian.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "smith.hpp"

namespace coincalc {

// ---------------------------------------------------------------- FgAbGroup

FgAbGroup::FgAbGroup() : data_(std::make_shared<const Data>()) {}

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<Int> torsion, std::vector<std::string> labels) {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2)
      fail(ErrorKind::Invariant, "torsion coefficient " + std::to_string(torsion[i]) + " is below 2");
    if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
      fail(ErrorKind::Invariant, "torsion coefficients " + std::to_string(torsion[i]) + ", " +
                                     std::to_string(torsion[i + 1]) + " violate the divisibility chain");
  }
  if (!labels.empty() && labels.size() != free_rank + torsion.size())
    fail(ErrorKind::Invariant, "label count " + std::to_string(labels.size()) + " does not match generator count " +
                                   std::to_string(free_rank + torsion.size()));
  data_ = std::make_shared<const Data>(Data{free_rank, std::move(torsion), std::move(labels)});
}

FgAbGroup FgAbGroup::integers(std::string label) {
  if (label.empty()) return FgAbGroup(1, {});
  return FgAbGroup(1, {}, {std::move(label)});
}

FgAbGroup FgAbGroup::cyclic(Int order, std::string label) {
  if (order == 0) return integers(std::move(label));
  if (order == 1) return FgAbGroup();
  if (label.empty()) return FgAbGroup(0, {order});
  return FgAbGroup(0, {order}, {std::move(label)});
}

std::optional<Int> FgAbGroup::order() const {
  if (!is_finite()) return std::nullopt;
  Int n = 1;
  for (Int t : torsion()) n = checked::mul(n, t);
  return n;
}

Matrix FgAbGroup::relation_matrix() const {
  std::vector<Int> diag(generator_count(), 0);
  for (std::size_t i = 0; i < torsion().size(); ++i) diag[free_rank() + i] = torsion()[i];
  return Matrix::diagonal(diag);
}

FgAbGroup FgAbGroup::with_labels(std::vector<std::string> labels) const {
  return FgAbGroup(free_rank(), torsion(), std::move(labels));
}

std::vector<Int> FgAbGroup::reduce(std::vector<Int> coords) const {
  if (coords.size() != generator_count())
    fail(ErrorKind::InvalidArgument, "expected " + std::to_string(generator_count()) + " coordinates, got " +
                                         std::to_string(coords.size()));
  for (std::size_t i = free_rank(); i < coords.size(); ++i) coords[i] = checked::mod(coords[i], modulus(i));
  return coords;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (free_rank() == 1) parts.emplace_back("Z");
  if (free_rank() > 1) parts.push_back("Z^" + std::to_string(free_rank()));
  for (std::size_t i = 0; i < torsion().size();) {
    std::size_t j = i;
    while (j < torsion().size() && torsion()[j] == torsion()[i]) ++j;
    std::string part = "Z" + std::to_string(torsion()[i]);
    if (j - i > 1) part += "^" + std::to_string(j - i);
    parts.push_back(part);
    i = j;
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

std::string FgAbGroup::label(std::size_t i) const {
  if (has_labels()) return labels()[i];
  return "g" + std::to_string(i);
}

bool operator==(const FgAbGroup& a, const FgAbGroup& b) {
  return a.free_rank() == b.free_rank() && a.torsion() == b.torsion() && a.labels() == b.labels();
}

bool groups_isomorphic(const FgAbGroup& a, const FgAbGroup& b) {
  return a.free_rank() == b.free_rank() && a.torsion() == b.torsion();
}

// ------------------------------------------------------------- GroupElement

GroupElement::GroupElement(FgAbGroup group, std::vector<Int> coords)
    : group_(std::move(group)), coords_(group_.reduce(std::move(coords))) {}

GroupElement GroupElement::zero(const FgAbGroup& group) {
  return GroupElement(group, std::vector<Int>(group.generator_count(), 0));
}

GroupElement GroupElement::generator(const FgAbGroup& group, std::size_t i) {
  std::vector<Int> c(group.generator_count(), 0);
  c.at(i) = 1;
  return GroupElement(group, std::move(c));
}

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
}

std::string GroupElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (coords_[i] != 1) out += std::to_string(coords_[i]) + " ";
    out += group_.label(i);
  }
  return out.empty() ? "0" : out;
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return groups_isomorphic(a.group(), b.group()) && a.coords() == b.coords();
}

namespace {

void require_same_group(const FgAbGroup& a, const FgAbGroup& b, const char* what) {
  if (!groups_isomorphic(a, b))
    fail(ErrorKind::InvalidArgument, std::string(what) + ": elements of different groups (" + a.to_string() +
                                         " vs " + b.to_string() + ")");
}

}  // namespace

GroupElement add(const GroupElement& a, const GroupElement& b) {
  require_same_group(a.group(), b.group(), "add");
  std::vector<Int> c(a.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::add(a.coords()[i], b.coords()[i]);
  return GroupElement(a.group(), std::move(c));
}

GroupElement negate(const GroupElement& a) { return scalar_multiply(-1, a); }

GroupElement scalar_multiply(Int k, const GroupElement& a) {
  std::vector<Int> c(a.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::mul(k, a.coords()[i]);
  return GroupElement(a.group(), std::move(c));
}

std::optional<Int> element_order(const GroupElement& x) {
  const FgAbGroup& g = x.group();
  for (std::size_t i = 0; i < g.free_rank(); ++i)
    if (x.coords()[i] != 0) return std::nullopt;
  Int order = 1;
  for (std::size_t i = g.free_rank(); i < g.generator_count(); ++i) {
    Int t = g.modulus(i);
    order = checked::lcm(order, t / checked::gcd(x.coords()[i], t));
  }
  return order;
}

std::vector<GroupElement> enumerate_torsion_part(const FgAbGroup& group, Int cap) {
  Int count = 1;
  for (Int t : group.torsion()) {
    if (__builtin_mul_overflow(count, t, &count) || count > cap)
      fail(ErrorKind::TooLarge, "torsion part of " + group.to_string() + " exceeds the enumeration cap of " +
                                    std::to_string(cap) + " elements");
  }
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<Int> c(group.generator_count(), 0);
  for (Int n = 0; n < count; ++n) {
    out.emplace_back(group, c);
    // Mixed-radix increment over the torsion coordinates.
    for (std::size_t i = group.free_rank(); i < c.size(); ++i) {
      if (++c[i] < group.modulus(i)) break;
      c[i] = 0;
    }
  }
  return out;
}

// ---------------------------------------------------------------- GroupHom

namespace {

Matrix reduce_rows(const FgAbGroup& codomain, Matrix m) {
  for (std::size_t i = codomain.free_rank(); i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = checked::mod(m(i, j), codomain.modulus(i));
  return m;
}

}  // namespace

GroupHom::GroupHom(FgAbGroup domain, FgAbGroup codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (matrix.rows() != codomain_.generator_count() || matrix.cols() != domain_.generator_count())
    fail(ErrorKind::InvalidArgument, "homomorphism matrix is " + std::to_string(matrix.rows()) + "x" +
                                         std::to_string(matrix.cols()) + ", expected " +
                                         std::to_string(codomain_.generator_count()) + "x" +
                                         std::to_string(domain_.generator_count()) + " for " +
                                         domain_.to_string() + " -> " + codomain_.to_string());
  matrix_ = reduce_rows(codomain_, std::move(matrix));
  for (std::size_t j = domain_.free_rank(); j < domain_.generator_count(); ++j) {
    Int t = domain_.modulus(j);
    for (std::size_t i = 0; i < codomain_.generator_count(); ++i) {
      Int s = codomain_.modulus(i);
      Int image = checked::mul(t, matrix_(i, j));
      bool ok = s == 0 ? image == 0 : image % s == 0;
      if (!ok)
        fail(ErrorKind::Invariant, "homomorphism " + domain_.to_string() + " -> " + codomain_.to_string() +
                                       " is not well defined: generator " + std::to_string(j) + " of order " +
                                       std::to_string(t) + " maps to an element of incompatible order");
    }
  }
}

GroupHom GroupHom::identity(const FgAbGroup& group) {
  return GroupHom(group, group, Matrix::identity(group.generator_count()));
}

GroupHom GroupHom::zero(const FgAbGroup& domain, const FgAbGroup& codomain) {
  return GroupHom(domain, codomain, Matrix(codomain.generator_count(), domain.generator_count()));
}

GroupHom GroupHom::multiplication(const FgAbGroup& group, Int k) {
  Matrix m = Matrix::identity(group.generator_count());
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = k;
  return GroupHom(group, group, std::move(m));
}

GroupElement GroupHom::operator()(const GroupElement& x) const {
  require_same_group(x.group(), domain_, "apply homomorphism");
  return GroupElement(codomain_, matrix_ * std::span<const Int>(x.coords()));
}

bool GroupHom::is_injective() const { return hom_kernel(*this).canonical_form().is_trivial(); }

bool GroupHom::is_surjective() const { return hom_image(*this).is_whole(); }

GroupHom GroupHom::inverse() const {
  if (!is_bijective())
    fail(ErrorKind::InvalidArgument,
         "homomorphism " + domain_.to_string() + " -> " + codomain_.to_string() + " is not invertible");
  // Solve M x = e_i modulo the codomain relations for each codomain generator.
  Matrix system = hconcat(matrix_, codomain_.relation_matrix());
  Matrix inv(domain_.generator_count(), codomain_.generator_count());
  for (std::size_t i = 0; i < codomain_.generator_count(); ++i) {
    std::vector<Int> e(codomain_.generator_count(), 0);
    e[i] = 1;
    auto sol = solve_integer(system, e);
    if (!sol) fail(ErrorKind::InvalidArgument, "homomorphism is not surjective");
    for (std::size_t j = 0; j < domain_.generator_count(); ++j) inv(j, i) = (*sol)[j];
  }
  return GroupHom(codomain_, domain_, reduce_rows(domain_, std::move(inv)));
}

bool operator==(const GroupHom& a, const GroupHom& b) {
  return groups_isomorphic(a.domain(), b.domain()) && groups_isomorphic(a.codomain(), b.codomain()) &&
         a.matrix() == b.matrix();
}

GroupHom compose_homs(const GroupHom& outer, const GroupHom& inner) {
  require_same_group(inner.codomain(), outer.domain(), "compose");
  return GroupHom(inner.domain(), outer.codomain(), outer.matrix() * inner.matrix());
}

// ---------------------------------------------------- CanonicalPresentation

CanonicalPresentation present_quotient(const Matrix& relations, std::size_t generator_count) {
  if (relations.rows() != generator_count) fail(ErrorKind::InvalidArgument, "relation matrix row mismatch");
  SmithForm s = smith_normal_form(relations);

  // Free directions first (indices past the rank), then nontrivial torsion.
  std::vector<std::size_t> keep;
  std::vector<Int> torsion;
  for (std::size_t i = s.rank; i < generator_count; ++i) keep.push_back(i);
  std::size_t free_rank = keep.size();
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.d(i, i) > 1) {
      keep.push_back(i);
      torsion.push_back(s.d(i, i));
    }

  Matrix to(keep.size(), generator_count);
  Matrix from(generator_count, keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    for (std::size_t j = 0; j < generator_count; ++j) {
      to(k, j) = s.u(keep[k], j);
      from(j, k) = s.u_inverse(j, keep[k]);
    }
  }
  FgAbGroup group(free_rank, torsion);
  return {group, reduce_rows(group, std::move(to)), std::move(from)};
}

// ---------------------------------------------------------------- Subgroup

namespace {

Matrix generator_columns(const FgAbGroup& ambient, const std::vector<GroupElement>& generators) {
  Matrix m(ambient.generator_count(), generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j) {
    require_same_group(generators[j].group(), ambient, "subgroup generator");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = generators[j].coords()[i];
  }
  return m;
}

}  // namespace

Subgroup::Subgroup(FgAbGroup ambient, const std::vector<GroupElement>& generators)
    : Subgroup(ambient, generator_columns(ambient, generators)) {}

Subgroup::Subgroup(FgAbGroup ambient, Matrix generators) {
  if (generators.rows() != ambient.generator_count())
    fail(ErrorKind::InvalidArgument, "subgroup generators have the wrong number of coordinates");
  generators = reduce_rows(ambient, std::move(generators));
  const std::size_t p = generators.cols();
  const Matrix rel = ambient.relation_matrix();

  // Relations among the generators: c with Sgen*c in the ambient relation lattice.
  Matrix kernel = integer_nullspace(hconcat(generators, rel));
  CanonicalPresentation self = present_quotient(kernel.row_block(0, p), p);
  CanonicalPresentation quot = present_quotient(hconcat(rel, generators), ambient.generator_count());
  data_ = std::make_shared<const Data>(Data{std::move(ambient), std::move(generators), std::move(self), std::move(quot)});
}

Subgroup Subgroup::whole(const FgAbGroup& group) {
  return Subgroup(group, Matrix::identity(group.generator_count()));
}

Subgroup Subgroup::trivial(const FgAbGroup& group) { return Subgroup(group, Matrix(group.generator_count(), 0)); }

std::vector<GroupElement> Subgroup::generators() const {
  std::vector<GroupElement> out;
  for (std::size_t j = 0; j < data_->generators.cols(); ++j) out.emplace_back(ambient(), data_->generators.column(j));
  return out;
}

bool Subgroup::contains(const GroupElement& x) const {
  require_same_group(x.group(), ambient(), "subgroup membership");
  auto image = data_->quotient.to_canonical * std::span<const Int>(x.coords());
  return GroupElement(quotient_group(), std::move(image)).is_zero();
}

std::optional<std::vector<Int>> Subgroup::coefficients(const GroupElement& x) const {
  require_same_group(x.group(), ambient(), "subgroup membership");
  auto sol = solve_integer(hconcat(data_->generators, ambient().relation_matrix()), x.coords());
  if (!sol) return std::nullopt;
  sol->resize(data_->generators.cols());
  return sol;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  require_same_group(ambient(), other.ambient(), "subgroup comparison");
  for (const auto& g : generators())
    if (!other.contains(g)) return false;
  return true;
}

bool Subgroup::same_as(const Subgroup& other) const { return is_subgroup_of(other) && other.is_subgroup_of(*this); }

bool Subgroup::is_whole() const { return quotient_group().is_trivial(); }

GroupHom Subgroup::inclusion() const {
  return GroupHom(canonical_form(), ambient(), data_->generators * data_->self.from_canonical);
}

GroupElement Subgroup::to_canonical(const GroupElement& x) const {
  auto c = coefficients(x);
  if (!c) fail(ErrorKind::InvalidArgument, "element " + x.to_string() + " is not in the subgroup");
  return GroupElement(canonical_form(), data_->self.to_canonical * std::span<const Int>(*c));
}

GroupHom Subgroup::quotient_projection() const {
  return GroupHom(ambient(), quotient_group(), data_->quotient.to_canonical);
}

GroupElement Subgroup::quotient_lift(std::size_t i) const {
  return GroupElement(ambient(), data_->quotient.from_canonical.column(i));
}

Subgroup hom_kernel(const GroupHom& h) {
  const std::size_t n = h.domain().generator_count();
  Matrix null = integer_nullspace(hconcat(h.matrix(), h.codomain().relation_matrix()));
  return Subgroup(h.domain(), null.row_block(0, n));
}

Subgroup hom_image(const GroupHom& h) { return Subgroup(h.codomain(), h.matrix()); }

bool element_in_subgroup(const GroupElement& x, const Subgroup& s) { return s.contains(x); }

Quotient quotient(const FgAbGroup& g, const Subgroup& s) {
  if (!groups_isomorphic(g, s.ambient()))
    fail(ErrorKind::InvalidArgument, "quotient: subgroup lives in " + s.ambient().to_string() + ", not " + g.to_string());
  return {s.quotient_group(), s.quotient_projection()};
}

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b) {
  require_same_group(a.ambient(), b.ambient(), "subgroup sum");
  return Subgroup(a.ambient(), hconcat(a.generator_matrix(), b.generator_matrix()));
}

Subgroup subgroup_image(const GroupHom& h, const Subgroup& s) {
  require_same_group(h.domain(), s.ambient(), "subgroup image");
  return Subgroup(h.codomain(), h.matrix() * s.generator_matrix());
}

Subgroup subgroup_preimage(const GroupHom& h, const Subgroup& s) {
  require_same_group(h.codomain(), s.ambient(), "subgroup preimage");
  return hom_kernel(compose_homs(s.quotient_projection(), h));
}

// --------------------------------------------------------------- DirectSum

DirectSum direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  const std::size_t na = a.generator_count();
  const std::size_t nb = b.generator_count();
  CanonicalPresentation p = present_quotient(block_diagonal(a.relation_matrix(), b.relation_matrix()), na + nb);

  // When the canonical generators are just a reordering of the summand
  // generators, carry the labels across.
  FgAbGroup group = p.group;
  if (a.has_labels() || b.has_labels()) {
    std::vector<std::string> labels;
    bool permutation = p.to_canonical.rows() == na + nb;
    for (std::size_t k = 0; permutation && k < p.to_canonical.rows(); ++k) {
      std::optional<std::size_t> source;
      for (std::size_t j = 0; j < na + nb; ++j) {
        Int x = p.to_canonical(k, j);
        if (x == 0) continue;
        if (x != 1 || source || p.from_canonical(j, k) != 1) {
          permutation = false;
          break;
        }
        source = j;
      }
      if (!permutation || !source) {
        permutation = false;
        break;
      }
      labels.push_back(*source < na ? a.label(*source) : b.label(*source - na));
    }
    if (permutation) group = group.with_labels(std::move(labels));
  }

  GroupHom inject_a(a, group, p.to_canonical.column_block(0, na));
  GroupHom inject_b(b, group, p.to_canonical.column_block(na, nb));
  GroupHom project_a(group, a, p.from_canonical.row_block(0, na));
  GroupHom project_b(group, b, p.from_canonical.row_block(na, nb));
  return {group, inject_a, inject_b, project_a, project_b};
}

// -------------------------------------------------------------- Subquotients

namespace {

struct SubquotientFrame {
  Subgroup numerator;
  GroupHom include;     // canonical(numerator) -> ambient
  Subgroup denominator; // preimage of the denominator inside canonical(numerator)
};

SubquotientFrame frame(const Subgroup& numerator, const Subgroup& denominator) {
  if (!denominator.is_subgroup_of(numerator))
    fail(ErrorKind::InvalidArgument, "subquotient: denominator is not contained in numerator");
  GroupHom include = numerator.inclusion();
  return {numerator, include, subgroup_preimage(include, denominator)};
}

}  // namespace

FgAbGroup subquotient(const Subgroup& numerator, const Subgroup& denominator) {
  return frame(numerator, denominator).denominator.quotient_group();
}

GroupHom induced_on_subquotient(const GroupHom& h, const Subgroup& numerator_source,
                                const Subgroup& denominator_source, const Subgroup& numerator_target,
                                const Subgroup& denominator_target) {
  SubquotientFrame src = frame(numerator_source, denominator_source);
  SubquotientFrame dst = frame(numerator_target, denominator_target);
  const FgAbGroup& qs = src.denominator.quotient_group();
  const FgAbGroup& qt = dst.denominator.quotient_group();
  GroupHom project_target = dst.denominator.quotient_projection();

  Matrix m(qt.generator_count(), qs.generator_count());
  for (std::size_t j = 0; j < qs.generator_count(); ++j) {
    GroupElement image = h(src.include(src.denominator.quotient_lift(j)));
    if (!numerator_target.contains(image))
      fail(ErrorKind::InvalidArgument, "induced map: image leaves the target numerator");
    GroupElement q = project_target(numerator_target.to_canonical(image));
    for (std::size_t i = 0; i < qt.generator_count(); ++i) m(i, j) = q.coords()[i];
  }
  return GroupHom(qs, qt, std::move(m));
}

}  // namespace coincalc
