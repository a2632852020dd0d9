#include "homotopy_db.hpp"

#include <fstream>
#include <json.hpp>
#include <regex>
#include <set>
#include <sstream>

#include "fibration.hpp"

namespace coincalc {

using nlohmann::json;

int field_dimension(Field k) {
  switch (k) {
    case Field::R: return 1;
    case Field::C: return 2;
    case Field::H: return 4;
  }
  return 0;
}

const char* to_string(Field k) {
  switch (k) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
  }
  return "?";
}

Field parse_field(std::string_view text) {
  if (text == "R") return Field::R;
  if (text == "C") return Field::C;
  if (text == "H") return Field::H;
  fail(ErrorKind::InvalidArgument, "unknown field '" + std::string(text) + "' (expected R, C or H)");
}

const char* to_string(HomKind kind) {
  switch (kind) {
    case HomKind::Suspension: return "suspension";
    case HomKind::StableSuspension: return "stable_suspension";
    case HomKind::Boundary: return "boundary";
    case HomKind::Antipodal: return "antipodal";
    case HomKind::StiefelProjection: return "stiefel_projection";
  }
  return "?";
}

namespace {

HomKind parse_kind(const std::string& text) {
  for (HomKind k : {HomKind::Suspension, HomKind::StableSuspension, HomKind::Boundary, HomKind::Antipodal,
                    HomKind::StiefelProjection})
    if (text == to_string(k)) return k;
  fail(ErrorKind::Parse, "unknown hom kind '" + text + "'");
}

bool needs_field(HomKind kind) { return kind == HomKind::Boundary || kind == HomKind::StiefelProjection; }

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  fail(ErrorKind::Parse, where + ": " + what);
}

void require_keys(const json& obj, const std::string& where, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  for (const char* k : required)
    if (!obj.contains(k)) parse_fail(where, std::string("missing key '") + k + "'");
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* r : required) known |= k == r;
    for (const char* o : optional) known |= k == o;
    if (!known) parse_fail(where, "unexpected key '" + k + "'");
  }
}

int get_int(const json& obj, const char* key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number_integer()) parse_fail(where, std::string("'") + key + "' must be an integer");
  auto x = v.get<std::int64_t>();
  if (x < -1'000'000 || x > 1'000'000) parse_fail(where, std::string("'") + key + "' out of range");
  return static_cast<int>(x);
}

std::string get_string(const json& obj, const char* key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_string()) parse_fail(where, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<Int> get_int_list(const json& v, const std::string& where) {
  if (!v.is_array()) parse_fail(where, "expected an array of integers");
  std::vector<Int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) parse_fail(where, "expected an array of integers");
    out.push_back(x.get<Int>());
  }
  return out;
}

std::vector<std::string> get_string_list(const json& v, const std::string& where) {
  if (!v.is_array()) parse_fail(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) parse_fail(where, "expected an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

FgAbGroup get_group(const json& obj, const std::string& where) {
  int free_rank = get_int(obj, "free_rank", where);
  if (free_rank < 0) parse_fail(where, "free_rank must be nonnegative");
  std::vector<Int> torsion = get_int_list(obj.at("torsion"), where + " torsion");
  std::vector<std::string> labels;
  if (obj.contains("labels")) labels = get_string_list(obj.at("labels"), where + " labels");
  try {
    return FgAbGroup(static_cast<std::size_t>(free_rank), std::move(torsion), std::move(labels));
  } catch (const Error& e) {
    fail(ErrorKind::Invariant, where + ": " + e.what());
  }
}

// Matrix with `cols` columns; an empty row list means a 0 x cols matrix.
Matrix get_matrix(const json& v, std::size_t expected_cols, const std::string& where) {
  if (!v.is_array()) parse_fail(where, "matrix must be an array of rows");
  Matrix m(v.size(), v.empty() ? expected_cols : v.front().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::vector<Int> row = get_int_list(v[i], where + " matrix row");
    if (row.size() != m.cols()) parse_fail(where, "ragged matrix");
    for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = row[j];
  }
  return m;
}

std::string strip_subscripts(const std::string& label) {
  static const std::regex subscript("_[0-9]+");
  return std::regex_replace(label, subscript, "");
}

}  // namespace

// ------------------------------------------------------------------- keys

std::string sphere_key(int m, int n) {
  return "pi_" + std::to_string(m) + "(S^" + std::to_string(n) + ")";
}

std::string hom_key(HomKind kind, std::optional<Field> field, int m, int n) {
  std::string out = std::string(to_string(kind)) + "(";
  if (field) out += std::string("K=") + to_string(*field) + ",";
  out += "m=" + std::to_string(m) + ",";
  out += (needs_field(kind) ? "n'=" : "n=") + std::to_string(n) + ")";
  return out;
}

Database::HomKey Database::key(HomKind kind, std::optional<Field> field, int m, int n) {
  return {kind, field ? static_cast<int>(*field) : -1, m, n};
}

// ---------------------------------------------------------------- loading

Database Database::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open database file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str(), path.string());
}

Database Database::parse(std::string_view text, const std::string& source) {
  Database db;
  db.source_ = source;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return db;

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, source + ": " + e.what());
  }
  require_keys(doc, source, {"range", "sphere_groups", "homs"}, {"stiefel_groups"});

  const json& range = doc.at("range");
  require_keys(range, "range", {"n_min", "n_max", "stem_max"});
  DatabaseRange r{get_int(range, "n_min", "range"), get_int(range, "n_max", "range"),
                  get_int(range, "stem_max", "range")};
  if (r.n_min < 1 || r.n_max < r.n_min || r.stem_max < 0)
    fail(ErrorKind::Invariant, "range: expected 1 <= n_min <= n_max and stem_max >= 0");
  db.range_ = r;

  if (!doc.at("sphere_groups").is_array()) parse_fail("sphere_groups", "expected an array");
  for (const json& rec : doc.at("sphere_groups")) {
    std::string where = "sphere_groups entry";
    require_keys(rec, where, {"m", "n", "free_rank", "torsion", "provenance"}, {"labels"});
    int m = get_int(rec, "m", where);
    int n = get_int(rec, "n", where);
    where = sphere_key(m, n);
    SphereGroupRecord s{m, n, get_group(rec, where), get_string(rec, "provenance", where)};
    db.check_sphere_group(s);
    db.spheres_.emplace(std::pair{m, n}, std::move(s));
  }
  db.check_range_holes();

  if (doc.contains("stiefel_groups")) {
    if (!doc.at("stiefel_groups").is_array()) parse_fail("stiefel_groups", "expected an array");
    for (const json& rec : doc.at("stiefel_groups")) {
      std::string where = "stiefel_groups entry";
      require_keys(rec, where, {"K", "m", "n_prime", "free_rank", "torsion", "provenance"}, {"labels"});
      Field k = parse_field(get_string(rec, "K", where));
      int m = get_int(rec, "m", where);
      int np = get_int(rec, "n_prime", where);
      where = std::string("pi_") + std::to_string(m) + "(V_{" + std::to_string(np + 1) + ",2}(" + to_string(k) + "))";
      if (m < 1 || np < 1) fail(ErrorKind::Invariant, where + ": m and n' must be positive");
      if (db.find_stiefel(k, m, np)) fail(ErrorKind::Invariant, where + ": duplicate record");
      db.stiefel_.push_back({k, m, np, get_group(rec, where), get_string(rec, "provenance", where)});
    }
  }

  if (!doc.at("homs").is_array()) parse_fail("homs", "expected an array");
  for (const json& rec : doc.at("homs")) {
    std::string where = "homs entry";
    require_keys(rec, where, {"kind", "m", "n_or_nprime", "matrix", "provenance"}, {"K"});
    HomKind kind = parse_kind(get_string(rec, "kind", where));
    std::optional<Field> field;
    if (rec.contains("K")) field = parse_field(get_string(rec, "K", where));
    int m = get_int(rec, "m", where);
    int n = get_int(rec, "n_or_nprime", where);
    where = hom_key(kind, field, m, n);
    if (needs_field(kind) != field.has_value())
      fail(ErrorKind::Invariant, where + (field ? ": K is not allowed for this kind" : ": K is required"));
    if (db.find_hom(kind, field, m, n)) fail(ErrorKind::Invariant, where + ": duplicate record");

    // Resolve domain and codomain so the matrix shape can be checked.
    FgAbGroup domain, codomain;
    try {
      switch (kind) {
        case HomKind::Suspension:
          domain = pi_sphere(db, m, n);
          codomain = pi_sphere(db, m + 1, n + 1);
          break;
        case HomKind::StableSuspension: {
          int top = stable_target_dimension(db);
          if (m - n >= top - 1)
            fail(ErrorKind::Invariant, "stem " + std::to_string(m - n) + " is not stable at S^" + std::to_string(top));
          domain = pi_sphere(db, m, n);
          codomain = pi_sphere(db, m - n + top, top);
          break;
        }
        case HomKind::Boundary: {
          int d = field_dimension(*field);
          domain = pi_sphere(db, m, d * n + d - 1);
          codomain = pi_sphere(db, m - 1, d * n - 1);
          break;
        }
        case HomKind::Antipodal:
          domain = codomain = pi_sphere(db, m, n);
          break;
        case HomKind::StiefelProjection: {
          const StiefelGroupRecord* v = db.find_stiefel(*field, m, n);
          if (!v) fail(ErrorKind::Invariant, "no matching stiefel_groups record");
          int d = field_dimension(*field);
          domain = v->group;
          codomain = pi_sphere(db, m, d * n + d - 1);
          break;
        }
      }
    } catch (const Error& e) {
      fail(ErrorKind::Invariant, where + ": " + e.what());
    }

    Matrix matrix = get_matrix(rec.at("matrix"), domain.generator_count(), where);
    HomRecord h{kind, field, m, n, GroupHom::zero(domain, codomain), get_string(rec, "provenance", where)};
    try {
      h.hom = GroupHom(domain, codomain, matrix);
    } catch (const Error& e) {
      fail(ErrorKind::Invariant, where + ": " + e.what());
    }
    db.check_hom(h);
    db.homs_.emplace(key(kind, field, m, n), std::move(h));
  }
  return db;
}

void Database::check_sphere_group(const SphereGroupRecord& s) const {
  const std::string where = sphere_key(s.m, s.n);
  if (s.m < 1 || s.n < 1) fail(ErrorKind::Invariant, where + ": m and n must be positive");
  if (!range_->covers(s.m, s.n) && s.m >= s.n)
    fail(ErrorKind::Invariant, where + ": outside the declared range");
  if (spheres_.count({s.m, s.n})) fail(ErrorKind::Invariant, where + ": duplicate record");
  if (s.m < s.n && !s.group.is_trivial())
    fail(ErrorKind::Invariant, where + ": must be trivial below the dimension");
  if (s.m == s.n && !(s.group.free_rank() == 1 && s.group.torsion().empty()))
    fail(ErrorKind::Invariant, where + ": must be Z (degree)");
  if (s.n == 1 && s.m >= 2 && !s.group.is_trivial())
    fail(ErrorKind::Invariant, where + ": higher homotopy of the circle is trivial");
}

void Database::check_range_holes() const {
  const DatabaseRange& r = *range_;
  for (int n = std::max(r.n_min, 2); n <= r.n_max; ++n)
    for (int m = n + 1; m <= n + r.stem_max; ++m)
      if (!spheres_.count({m, n}))
        fail(ErrorKind::Invariant, sphere_key(m, n) + ": missing from the declared range (hole in the table)");
}

void Database::check_hom(const HomRecord& h) const {
  const std::string where = hom_key(h.kind, h.field, h.m, h.n_or_nprime);
  if (h.kind == HomKind::Suspension) {
    if (h.m < 2 * h.n_or_nprime - 1 && !h.hom.is_bijective())
      fail(ErrorKind::Invariant, where + ": suspension must be an isomorphism for m < 2n - 1 (Freudenthal)");
    if (h.m == 2 * h.n_or_nprime - 1 && !h.hom.is_surjective())
      fail(ErrorKind::Invariant, where + ": suspension must be surjective for m = 2n - 1 (Freudenthal)");
  }
  if (h.kind == HomKind::StableSuspension && h.m < 2 * h.n_or_nprime - 1 && !h.hom.is_bijective())
    fail(ErrorKind::Invariant, where + ": stable suspension must be an isomorphism for m < 2n - 1 (Freudenthal)");
  if (h.kind == HomKind::Antipodal && !h.hom.is_bijective())
    fail(ErrorKind::Invariant, where + ": antipodal action must be an automorphism");
}

std::vector<const HomRecord*> Database::hom_records(HomKind kind) const {
  std::vector<const HomRecord*> out;
  for (const auto& [k, h] : homs_)
    if (h.kind == kind) out.push_back(&h);
  return out;
}

const SphereGroupRecord* Database::find_sphere(int m, int n) const {
  auto it = spheres_.find({m, n});
  return it == spheres_.end() ? nullptr : &it->second;
}

const HomRecord* Database::find_hom(HomKind kind, std::optional<Field> field, int m, int n) const {
  auto it = homs_.find(key(kind, field, m, n));
  return it == homs_.end() ? nullptr : &it->second;
}

const StiefelGroupRecord* Database::find_stiefel(Field field, int m, int n_prime) const {
  for (const auto& s : stiefel_)
    if (s.field == field && s.m == m && s.n_prime == n_prime) return &s;
  return nullptr;
}

// ---------------------------------------------------------------- lookups

FgAbGroup pi_sphere(const Database& db, int m, int n) {
  if (m < 1 || n < 0) fail(ErrorKind::InvalidArgument, "pi_m(S^n) needs m >= 1 and n >= 0");
  if (const auto* r = db.find_sphere(m, n)) return r->group;
  if (m < n || n == 0) return FgAbGroup();
  if (m == n) return FgAbGroup::integers("iota_" + std::to_string(n));
  if (n == 1) return FgAbGroup();
  fail(ErrorKind::Unknown, sphere_key(m, n) + " is not in the database");
}

bool labels_match_under_suspension(const FgAbGroup& a, const FgAbGroup& b) {
  if (!groups_isomorphic(a, b) || !a.has_labels() || !b.has_labels()) return false;
  for (std::size_t i = 0; i < a.generator_count(); ++i)
    if (strip_subscripts(a.labels()[i]) != strip_subscripts(b.labels()[i])) return false;
  return true;
}

GroupHom suspension_hom(const Database& db, int m, int n) {
  if (const auto* r = db.find_hom(HomKind::Suspension, std::nullopt, m, n)) return r->hom;
  FgAbGroup domain = pi_sphere(db, m, n);
  if (m == n) return GroupHom(domain, pi_sphere(db, m + 1, n + 1), Matrix{{1}});
  FgAbGroup codomain = pi_sphere(db, m + 1, n + 1);
  if (domain.is_trivial()) return GroupHom::zero(domain, codomain);
  if (m < 2 * n - 1 && labels_match_under_suspension(domain, codomain))
    return GroupHom(domain, codomain, Matrix::identity(domain.generator_count()));
  fail(ErrorKind::Unknown, "suspension " + sphere_key(m, n) + " -> " + sphere_key(m + 1, n + 1) +
                               " is not in the database");
}

int stable_target_dimension(const Database& db) {
  if (!db.range()) fail(ErrorKind::Unknown, "database has no declared range, so no stable target");
  return db.range()->n_max;
}

GroupHom stable_suspension(const Database& db, int m, int n) {
  if (const auto* r = db.find_hom(HomKind::StableSuspension, std::nullopt, m, n)) return r->hom;
  int top = stable_target_dimension(db);
  if (n > top) fail(ErrorKind::Unknown, sphere_key(m, n) + " lies above the stable target S^" + std::to_string(top));
  if (m - n >= top - 1)
    fail(ErrorKind::Unknown, "stem " + std::to_string(m - n) + " is not stable at S^" + std::to_string(top));
  GroupHom h = GroupHom::identity(pi_sphere(db, m, n));
  for (int j = n; j < top; ++j) h = compose_homs(suspension_hom(db, m - n + j, j), h);
  return h;
}

GroupHom boundary_hom(const Database& db, Field k, int m, int n_prime) {
  if (m < 2 || n_prime < 1) fail(ErrorKind::InvalidArgument, "boundary needs m >= 2 and n' >= 1");
  if (const auto* r = db.find_hom(HomKind::Boundary, k, m, n_prime)) return r->hom;
  int d = field_dimension(k);
  int n = d * n_prime;
  if (k == Field::R) {
    if (n % 2 == 1 || m < 2 * n - 2) return stable_range_boundary(db, m, n);
  }
  FgAbGroup domain = pi_sphere(db, m, n + d - 1);
  FgAbGroup codomain = pi_sphere(db, m - 1, n - 1);
  if (domain.is_trivial() || codomain.is_trivial()) return GroupHom::zero(domain, codomain);
  fail(ErrorKind::Unknown, std::string("boundary unknown: ") + hom_key(HomKind::Boundary, k, m, n_prime) +
                               " has no record and no closed form applies");
}

GroupHom antipodal_action(const Database& db, int m, int n) {
  FgAbGroup g = pi_sphere(db, m, n);
  if (g.is_trivial() || n % 2 == 1) return GroupHom::identity(g);
  if (m < 2 * n - 1) return GroupHom::multiplication(g, -1);
  if (const auto* r = db.find_hom(HomKind::Antipodal, std::nullopt, m, n)) return r->hom;
  fail(ErrorKind::Unknown, "antipodal action unknown on " + sphere_key(m, n));
}

DirectSum pi_stiefel_real(const Database& db, int m, int r) {
  if (r < 4 || r % 2 != 0) fail(ErrorKind::Unsupported, "pi_m(V_{r,2}(R)) splits only for even r >= 4");
  if (m < 3) fail(ErrorKind::Unsupported, "pi_m(V_{r,2}(R)) is computed only for m >= 3");
  return direct_sum(pi_sphere(db, m, r - 2), pi_sphere(db, m, r - 1));
}

}  // namespace coincalc
