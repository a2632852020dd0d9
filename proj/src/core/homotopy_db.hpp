#pragma once

// Curated homotopy groups of spheres and the structure homomorphisms between
// them (suspension, stable suspension, boundaries, antipodal actions).

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "abelian.hpp"

namespace coincalc {

enum class Field { R, C, H };

int field_dimension(Field k);
const char* to_string(Field k);
Field parse_field(std::string_view text);

enum class HomKind { Suspension, StableSuspension, Boundary, Antipodal, StiefelProjection };

const char* to_string(HomKind kind);

struct SphereGroupRecord {
  int m = 0;
  int n = 0;
  FgAbGroup group;
  std::string provenance;
};

// pi_m(V_{n'+1,2}(K)), used only to check exactness against p_{K*}.
struct StiefelGroupRecord {
  Field field = Field::R;
  int m = 0;
  int n_prime = 0;
  FgAbGroup group;
  std::string provenance;
};

struct HomRecord {
  HomKind kind = HomKind::Suspension;
  std::optional<Field> field;
  int m = 0;
  int n_or_nprime = 0;
  GroupHom hom;
  std::string provenance;
};

struct DatabaseRange {
  int n_min = 1;
  int n_max = 0;
  int stem_max = 0;

  bool covers(int m, int n) const { return n >= n_min && n <= n_max && m >= n && m - n <= stem_max; }
};

/// Immutable after loading. Load-time validation covers record invariants,
/// range holes, hom shapes and well-definedness, Freudenthal bijectivity and
/// that antipodal records are automorphisms.
class Database {
 public:
  static Database load(const std::filesystem::path& path);
  static Database parse(std::string_view text, const std::string& source = "<memory>");

  const std::optional<DatabaseRange>& range() const { return range_; }
  bool is_empty() const { return !range_ && spheres_.empty() && homs_.empty(); }

  const std::map<std::pair<int, int>, SphereGroupRecord>& sphere_records() const { return spheres_; }
  const std::vector<StiefelGroupRecord>& stiefel_records() const { return stiefel_; }
  std::vector<const HomRecord*> hom_records(HomKind kind) const;

  const SphereGroupRecord* find_sphere(int m, int n) const;
  const HomRecord* find_hom(HomKind kind, std::optional<Field> field, int m, int n) const;
  const StiefelGroupRecord* find_stiefel(Field field, int m, int n_prime) const;

 private:
  using HomKey = std::tuple<HomKind, int, int, int>;
  static HomKey key(HomKind kind, std::optional<Field> field, int m, int n);

  void check_sphere_group(const SphereGroupRecord& r) const;
  void check_range_holes() const;
  void add_hom(HomRecord r);
  void check_hom(const HomRecord& r) const;

  std::string source_;
  std::optional<DatabaseRange> range_;
  std::map<std::pair<int, int>, SphereGroupRecord> spheres_;
  std::vector<StiefelGroupRecord> stiefel_;
  std::map<HomKey, HomRecord> homs_;
};

/// Human-readable instance keys used in error messages and reports.
std::string sphere_key(int m, int n);
std::string hom_key(HomKind kind, std::optional<Field> field, int m, int n);

/// pi_m(S^n). m < n gives 0 and m = n gives Z without consulting the data;
/// n = 1 with m >= 2 and n = 0 with m >= 1 are trivial as well.
/// Anything else outside the records raises ErrorKind::Unknown.
FgAbGroup pi_sphere(const Database& db, int m, int n);

/// E : pi_m(S^n) -> pi_{m+1}(S^{n+1}).
GroupHom suspension_hom(const Database& db, int m, int n);

/// E^oo : pi_m(S^n) -> pi_{m-n+N}(S^N) with N the top sphere of the range.
GroupHom stable_suspension(const Database& db, int m, int n);

/// Dimension of the sphere used as the stable target.
int stable_target_dimension(const Database& db);

/// partial_K : pi_m(S^{n+d-1}) -> pi_{m-1}(S^{n-1}) with n = d n'.
/// Records take precedence; for K = R the stable-range formula is used.
GroupHom boundary_hom(const Database& db, Field k, int m, int n_prime);

/// A_* on pi_m(S^n): identity for n odd, (-1)^{n+1} in the stable range,
/// otherwise the stored record.
GroupHom antipodal_action(const Database& db, int m, int n);

/// pi_m(V_{r,2}(R)) = pi_m(S^{r-2}) + pi_m(S^{r-1}) for r even.
DirectSum pi_stiefel_real(const Database& db, int m, int r);

/// Whether a label sequence is a suspension of another: the same names once
/// trailing sphere-dimension subscripts are removed.
bool labels_match_under_suspension(const FgAbGroup& a, const FgAbGroup& b);

}  // namespace coincalc
