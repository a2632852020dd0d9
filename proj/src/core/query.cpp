#include "query.hpp"

#include <sstream>

#include "coincidence.hpp"

namespace coincalc::query {

namespace {

// ------------------------------------------------------------ serialization

json group_json(const FgAbGroup& g) {
  return {{"free_rank", g.free_rank()}, {"torsion", g.torsion()}, {"labels", g.labels()}, {"text", g.to_string()}};
}

json element_json(const GroupElement& x) { return {{"coords", x.coords()}, {"text", x.to_string()}}; }

json subgroup_json(const Subgroup& s) {
  // Generators matching the invariant factors of the canonical form.
  json gens = json::array();
  GroupHom incl = s.inclusion();
  auto weight = [](const GroupElement& x) {
    Int w = 0;
    for (Int c : x.coords()) w += c < 0 ? -c : c;
    return w;
  };
  for (std::size_t i = 0; i < s.canonical_form().generator_count(); ++i) {
    GroupElement x = incl(GroupElement::generator(s.canonical_form(), i));
    GroupElement y = -x;
    gens.push_back(element_json(weight(y) < weight(x) ? y : x));
  }
  return {{"group", group_json(s.canonical_form())}, {"generators", gens}};
}

json count_json(const ExtendedCount& c) {
  if (c.is_infinite()) return "inf";
  return c.value();
}

// ------------------------------------------------------------------ params

const json& param(const json& req, const char* key) {
  if (!req.contains(key)) fail(ErrorKind::InvalidArgument, std::string("missing parameter '") + key + "'");
  return req.at(key);
}

int int_param(const json& req, const char* key) {
  const json& v = param(req, key);
  if (!v.is_number_integer()) fail(ErrorKind::InvalidArgument, std::string("parameter '") + key + "' must be an integer");
  auto x = v.get<std::int64_t>();
  if (x < -100000 || x > 100000) fail(ErrorKind::InvalidArgument, std::string("parameter '") + key + "' is out of range");
  return static_cast<int>(x);
}

std::vector<Int> coords_param(const json& req, const char* key) {
  const json& v = param(req, key);
  if (!v.is_array()) fail(ErrorKind::InvalidArgument, std::string("parameter '") + key + "' must be a coordinate list");
  std::vector<Int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer())
      fail(ErrorKind::InvalidArgument, std::string("parameter '") + key + "' must contain integers only");
    out.push_back(x.get<Int>());
  }
  return out;
}

std::optional<int> q_param(const json& req) {
  const json& v = param(req, "q");
  if (v.is_string() && (v == "inf" || v == "infinity")) return std::nullopt;
  if (!v.is_number_integer()) fail(ErrorKind::InvalidArgument, "parameter 'q' must be a positive integer or \"inf\"");
  return int_param(req, "q");
}

SpaceDescriptor space_param(const json& req) {
  const json& v = param(req, "space");
  if (!v.is_string()) fail(ErrorKind::InvalidArgument, "parameter 'space' must be a string");
  const std::string s = v.get<std::string>();
  if (s == "sphere") return SpaceDescriptor::sphere(int_param(req, "n"));
  if (s == "rp") return SpaceDescriptor::projective(Field::R, int_param(req, "nprime"));
  if (s == "cp") return SpaceDescriptor::projective(Field::C, int_param(req, "nprime"));
  if (s == "hp") return SpaceDescriptor::projective(Field::H, int_param(req, "nprime"));
  if (s == "grassmann") return SpaceDescriptor::grassmann(int_param(req, "r"));
  fail(ErrorKind::InvalidArgument, "unknown space '" + s + "' (expected sphere, rp, cp, hp or grassmann)");
}

std::string pi_name(int m, const SpaceDescriptor& space) { return "pi_" + std::to_string(m) + "(" + space.name() + ")"; }

// --------------------------------------------------------------- commands

struct Outcome {
  json payload = json::object();
  std::vector<std::string> trace;
  std::string status = "ok";
  std::string message;
};

Outcome pi_sphere_command(const Database& db, const json& req) {
  int m = int_param(req, "m");
  int n = int_param(req, "n");
  // Computed before the initializer list: GCC leaks its partial elements on a throw.
  json group = group_json(pi_sphere(db, m, n));
  Outcome o;
  o.payload = {{"m", m}, {"n", n}, {"group", group}, {"name", sphere_key(m, n)}};
  o.trace = {db.find_sphere(m, n) ? "db-record" : "analytic"};
  return o;
}

Outcome pi_space_command(const Database& db, const json& req) {
  SpaceDescriptor space = space_param(req);
  int m = int_param(req, "m");
  Outcome o;
  o.payload = {{"space", space.name()}, {"m", m}, {"name", pi_name(m, space)}};
  if (const auto* p = std::get_if<ProjectiveSpace>(&space.family)) {
    ProjectiveHomotopyGroup g = pi_projective(db, p->field, m, p->n_prime);
    o.payload["group"] = group_json(g.total);
    o.payload["lift_summand"] = group_json(g.lift_group);
    o.payload["lift_sphere"] = p->total_sphere();
    o.payload["c_summand"] = group_json(g.c_group);
    o.trace = {"projective-splitting"};
  } else if (std::holds_alternative<GrassmannSpace>(space.family)) {
    o.payload["group"] = group_json(pi_space(db, space, m));
    o.trace = {"grassmann-split"};
  } else {
    o.payload["group"] = group_json(pi_space(db, space, m));
    const auto& s = std::get<SphereSpace>(space.family);
    o.trace = {db.find_sphere(m, s.n) ? "db-record" : "analytic"};
  }
  return o;
}

Outcome filtration_command(const Database& db, const json& req) {
  SpaceDescriptor space = space_param(req);
  int m = int_param(req, "m");
  std::optional<int> q = q_param(req);
  FiltrationResult r = pi_q(db, space, m, q);
  Subgroup c = pi_c(db, space, m);
  ShortcutResult shortcut = full_filtration_shortcut(m, true, space);
  Outcome o;
  o.payload = {{"space", space.name()},
               {"m", m},
               {"q", q ? json(*q) : json("inf")},
               {"ambient", group_json(r.subgroup.ambient())},
               {"subgroup", subgroup_json(r.subgroup)},
               {"pi_c", subgroup_json(c)},
               {"stabilized_at", r.stabilized_at},
               {"shortcut", {{"applies", shortcut.applies}, {"rule", shortcut.rule}}}};
  o.trace = r.trace;
  return o;
}

CoincidenceVerdict classify_space(const Database& db, const SpaceDescriptor& space, int m,
                                  const std::vector<Int>& f1, const std::vector<Int>& f2, json& extra) {
  if (const auto* s = std::get_if<SphereSpace>(&space.family)) {
    SphereClassifier c(db, m, s->n);
    GroupElement z1(c.group(), f1), z2(c.group(), f2);
    extra["f1"] = element_json(z1);
    extra["f2"] = element_json(z2);
    return c.classify(z1, z2);
  }
  if (const auto* p = std::get_if<ProjectiveSpace>(&space.family)) {
    ProjectiveClassifier c(db, p->field, m, p->n_prime);
    const ProjectiveHomotopyGroup& g = c.group();
    HomotopyClass c1 = HomotopyClass::from_total(g, GroupElement(g.total, f1));
    HomotopyClass c2 = HomotopyClass::from_total(g, GroupElement(g.total, f2));
    extra["f1"] = element_json(c1.total(g));
    extra["f2"] = element_json(c2.total(g));
    extra["lift1"] = element_json(c1.lift);
    extra["lift2"] = element_json(c2.lift);
    return c.classify(c1, c2);
  }
  LooseResult l = loose_pair(db, space, m, GroupElement(pi_space(db, space, m), f1),
                             GroupElement(pi_space(db, space, m), f2));
  CoincidenceVerdict v;
  v.loose = l.loose;
  v.rule = l.trace.front();
  v.trace = l.trace;
  return v;
}

Outcome classify_command(const Database& db, const json& req) {
  SpaceDescriptor space = space_param(req);
  int m = int_param(req, "m");
  Outcome o;
  o.payload = {{"space", space.name()}, {"m", m}};
  CoincidenceVerdict v = classify_space(db, space, m, coords_param(req, "f1"), coords_param(req, "f2"), o.payload);
  o.payload["loose"] = v.loose;
  o.payload["nielsen"] = v.nielsen;
  o.payload["mcc"] = v.mcc;
  o.payload["mc"] = count_json(v.mc);
  o.payload["rule"] = v.rule;
  if (v.table_row) o.payload["table_row"] = *v.table_row;
  o.trace = v.trace;
  return o;
}

Outcome loose_command(const Database& db, const json& req) {
  SpaceDescriptor space = space_param(req);
  int m = int_param(req, "m");
  std::vector<Int> f1 = coords_param(req, "f1"), f2 = coords_param(req, "f2");
  Outcome o;
  LooseResult r;
  if (std::holds_alternative<GrassmannSpace>(space.family) && m < 3) {
    // Too low for the group computation; coordinates cannot be checked.
    r = loose_pair(db, space, m, GroupElement(FgAbGroup(f1.size(), {}), f1), GroupElement(FgAbGroup(f2.size(), {}), f2));
  } else {
    FgAbGroup g = pi_space(db, space, m);
    GroupElement x1(g, f1), x2(g, f2);
    o.payload["f1"] = element_json(x1);
    o.payload["f2"] = element_json(x2);
    r = loose_pair(db, space, m, x1, x2);
  }
  o.payload["space"] = space.name();
  o.payload["m"] = m;
  o.payload["loose"] = r.loose;
  o.payload["witness"] = r.witness;
  o.trace = r.trace;
  return o;
}

Outcome grassmann_command(const Database& db, const json& req) {
  int r = int_param(req, "r");
  Outcome o;
  Tristate loose = grassmann_all_loose(r);
  o.payload = {{"r", r}, {"all_loose", to_string(loose)}};
  o.trace = {"grassmann-even-loose"};
  if (req.contains("m")) {
    int m = int_param(req, "m");
    o.payload["m"] = m;
    o.payload["group"] = group_json(grassmann_pi(db, m, r));
    o.trace.emplace_back("grassmann-split");
  }
  if (loose == Tristate::Unknown) {
    o.status = "unknown";
    o.message = "looseness in G_{" + std::to_string(r) + ",2}(R) is only known for even r >= 4";
  }
  return o;
}

Outcome validate_command(const Database& db) {
  Outcome o;
  o.payload = validate_database(db);
  o.trace = {"validate-db"};
  if (!o.payload.at("passed").get<bool>()) {
    o.status = "error";
    o.message = "database validation failed";
  }
  return o;
}

// ------------------------------------------------------------- validation

struct Check {
  std::string name;
  std::size_t instances = 0;
  json failures = json::array();

  void failure(const std::string& key, const std::string& message) {
    failures.push_back({{"key", key}, {"message", message}});
  }
  json to_json() const {
    return {{"name", name}, {"instances", instances}, {"passed", failures.empty()}, {"failures", failures}};
  }
};

std::string key_of(const std::string& message) {
  auto pos = message.find(": ");
  return pos == std::string::npos ? message : message.substr(0, pos);
}

struct ProjectiveInstance {
  Field field;
  int m;
  int n_prime;
};

std::vector<ProjectiveInstance> projective_instances(const Database& db) {
  std::vector<ProjectiveInstance> out;
  if (!db.range()) return out;
  const DatabaseRange& r = *db.range();
  for (Field k : {Field::R, Field::C, Field::H}) {
    int d = field_dimension(k);
    for (int np = 2; d * np + d - 1 <= r.n_max; ++np) {
      int top = d * np + d - 1;
      for (int m = 2; m <= top + r.stem_max; ++m) out.push_back({k, m, np});
    }
  }
  return out;
}

std::string instance_key(const ProjectiveInstance& p) {
  return std::string("K=") + to_string(p.field) + ",m=" + std::to_string(p.m) + ",n'=" + std::to_string(p.n_prime);
}

}  // namespace

json validate_database(const Database& db) {
  std::vector<Check> checks;
  json unverifiable = json::array();

  Check load{"load"};
  load.instances = db.sphere_records().size();
  for (HomKind k : {HomKind::Suspension, HomKind::StableSuspension, HomKind::Boundary, HomKind::Antipodal,
                    HomKind::StiefelProjection})
    load.instances += db.hom_records(k).size();
  checks.push_back(load);

  Check freudenthal{"freudenthal"};
  for (const HomRecord* r : db.hom_records(HomKind::Suspension)) {
    int m = r->m, n = r->n_or_nprime;
    if (m > 2 * n - 1) continue;
    ++freudenthal.instances;
    bool ok = m < 2 * n - 1 ? r->hom.is_bijective() : r->hom.is_surjective();
    if (!ok) freudenthal.failure(hom_key(r->kind, r->field, m, n), "violates the Freudenthal suspension theorem");
  }
  checks.push_back(freudenthal);

  Check involution{"antipodal-involution"};
  for (const auto& [key, rec] : db.sphere_records()) {
    if (db.find_hom(HomKind::Antipodal, std::nullopt, rec.m, rec.n)) continue;  // checked below
    try {
      GroupHom a = antipodal_action(db, rec.m, rec.n);
      ++involution.instances;
      if (!(compose_homs(a, a) == GroupHom::identity(rec.group)))
        involution.failure(hom_key(HomKind::Antipodal, std::nullopt, rec.m, rec.n), "A_* o A_* is not the identity");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Unknown) throw;
      unverifiable.push_back(hom_key(HomKind::Antipodal, std::nullopt, rec.m, rec.n));
    }
  }
  // Records must also agree with the closed forms where those apply.
  for (const HomRecord* r : db.hom_records(HomKind::Antipodal)) {
    ++involution.instances;
    const std::string k = hom_key(r->kind, r->field, r->m, r->n_or_nprime);
    if (!(compose_homs(r->hom, r->hom) == GroupHom::identity(r->hom.domain())))
      involution.failure(k, "A_* o A_* is not the identity");
    else if (!(antipodal_action(db, r->m, r->n_or_nprime) == r->hom))
      involution.failure(k, "record disagrees with the closed form for this (m, n)");
  }
  checks.push_back(involution);

  Check stability{"stability-consistency"};
  for (const HomRecord* r : db.hom_records(HomKind::StableSuspension)) {
    const std::string k = hom_key(r->kind, r->field, r->m, r->n_or_nprime);
    try {
      GroupHom chain = GroupHom::identity(r->hom.domain());
      for (int j = r->n_or_nprime; j < stable_target_dimension(db); ++j)
        chain = compose_homs(suspension_hom(db, r->m - r->n_or_nprime + j, j), chain);
      ++stability.instances;
      if (!(chain == r->hom)) stability.failure(k, "composite of suspensions " + chain.matrix().to_string() +
                                                       " differs from record " + r->hom.matrix().to_string());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Unknown) throw;
      unverifiable.push_back(k);
    }
  }
  checks.push_back(stability);

  Check oracle{"stable-boundary-oracle"};
  for (const auto& [key, rec] : db.sphere_records()) {
    int m = rec.m, n = rec.n;
    if (n < 2 || m >= 2 * n - 2 || !rec.group.is_finite()) continue;
    std::optional<Subgroup> kernel;
    try {
      kernel = hom_kernel(stable_range_boundary(db, m, n));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Unknown) throw;
      unverifiable.push_back("stable_boundary(" + sphere_key(m, n) + ")");
      continue;
    }
    const Subgroup& k = *kernel;
    ++oracle.instances;
    const Int factor = n % 2 == 0 ? 2 : 0;
    std::size_t expected = 0;
    for (const auto& z : enumerate_torsion_part(rec.group)) {
      bool in = (factor * z).is_zero();
      expected += in;
      if (k.contains(z) != in) {
        oracle.failure(sphere_key(m, n), "kernel membership of " + z.to_string() + " disagrees with enumeration");
        break;
      }
    }
    if (static_cast<Int>(expected) != *k.canonical_form().order())
      oracle.failure(sphere_key(m, n), "kernel order disagrees with enumeration");
  }
  checks.push_back(oracle);

  Check exactness{"exactness"};
  Check exclusivity{"table-exclusivity"};
  for (const ProjectiveInstance& p : projective_instances(db)) {
    ExactnessReport r = validate_exactness(db, p.field, p.m, p.n_prime);
    if (r.status == ExactnessReport::Status::Unverifiable) {
      unverifiable.push_back(r.key);
    } else {
      ++exactness.instances;
      if (r.status == ExactnessReport::Status::Failed) exactness.failure(r.key, r.message);
    }

    const std::string key = "table(" + instance_key(p) + ")";
    try {
      ProjectiveClassifier c(db, p.field, p.m, p.n_prime);
      if (!c.lift_group().is_finite()) continue;
      ExclusivityReport e = validate_table_exclusivity(c);
      ++exclusivity.instances;
      for (const auto& ex : e.examples) exclusivity.failure(key, "not exactly one row for " + ex);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Unknown) throw;
      unverifiable.push_back(key);
    }
  }
  checks.push_back(exactness);
  checks.push_back(exclusivity);

  json out = {{"passed", true}, {"checks", json::array()}, {"unverifiable", unverifiable}};
  for (const Check& c : checks) {
    out["checks"].push_back(c.to_json());
    if (!c.failures.empty()) out["passed"] = false;
  }
  return out;
}

json validate_db_file(const std::filesystem::path& path) {
  std::optional<Database> db;
  try {
    db = Database::load(path);
  } catch (const Error& e) {
    Check load{"load"};
    load.failure(key_of(e.what()), e.what());
    return {{"passed", false}, {"checks", json::array({load.to_json()})}, {"unverifiable", json::array()}};
  }
  return validate_database(*db);
}

json error_response(const std::string& command, const Error& e) {
  return {{"status", e.kind() == ErrorKind::Unknown ? "unknown" : "error"},
          {"command", command},
          {"payload", json::object()},
          {"rule_trace", json::array()},
          {"message", e.what()},
          {"error_kind", to_string(e.kind())}};
}

json run(const Database& db, const json& request) {
  std::string command;
  try {
    if (!request.is_object()) fail(ErrorKind::InvalidArgument, "request must be a JSON object");
    const json& c = param(request, "command");
    if (!c.is_string()) fail(ErrorKind::InvalidArgument, "'command' must be a string");
    command = c.get<std::string>();

    Outcome o;
    if (command == "pi-sphere")
      o = pi_sphere_command(db, request);
    else if (command == "pi-space")
      o = pi_space_command(db, request);
    else if (command == "filtration")
      o = filtration_command(db, request);
    else if (command == "classify")
      o = classify_command(db, request);
    else if (command == "loose")
      o = loose_command(db, request);
    else if (command == "grassmann")
      o = grassmann_command(db, request);
    else if (command == "validate-db")
      o = validate_command(db);
    else
      fail(ErrorKind::InvalidArgument, "unknown command '" + command + "'");

    json response = {{"status", o.status}, {"command", command}, {"payload", o.payload}, {"rule_trace", o.trace}};
    if (o.status != "ok") {
      response["message"] = o.message;
      response["error_kind"] = o.status == "unknown" ? "unknown" : "validation_failed";
    }
    return response;
  } catch (const Error& e) {
    return error_response(command, e);
  } catch (const json::exception& e) {
    return error_response(command, Error(ErrorKind::InvalidArgument, e.what()));
  }
}

int exit_code(const json& response) {
  const std::string status = response.value("status", "error");
  if (status == "ok") return 0;
  if (status == "unknown") return 2;
  return 1;
}

// ---------------------------------------------------------------- rendering

namespace {

std::string group_text(const json& g) {
  std::string out = g.at("text").get<std::string>();
  const auto& labels = g.at("labels");
  if (!labels.empty()) {
    out += "  [";
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? ", " : "") + labels[i].get<std::string>();
    out += "]";
  }
  return out;
}

std::string subgroup_text(const json& s) {
  std::string out = s.at("group").at("text").get<std::string>();
  const auto& gens = s.at("generators");
  if (!gens.empty()) {
    out += " generated by ";
    for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + gens[i].at("text").get<std::string>();
  }
  return out;
}

std::string count_text(const json& c) { return c.is_string() ? "infinity" : std::to_string(c.get<Int>()); }

void render_validation(std::ostringstream& out, const json& p) {
  for (const auto& c : p.at("checks")) {
    out << (c.at("passed").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>() << " ("
        << c.at("instances").get<std::size_t>() << " instances)\n";
    for (const auto& f : c.at("failures")) {
      const std::string key = f.at("key"), message = f.at("message");
      out << "  " << (message.rfind(key, 0) == 0 ? message : key + ": " + message) << "\n";
    }
  }
  if (!p.at("unverifiable").empty())
    out << p.at("unverifiable").size() << " instances unverifiable for lack of data\n";
  out << (p.at("passed").get<bool>() ? "database valid\n" : "database INVALID\n");
}

}  // namespace

std::string render_human(const json& r) {
  std::ostringstream out;
  const std::string status = r.value("status", "error");
  const std::string command = r.value("command", "");
  const json& p = r.at("payload");

  if (status != "ok" && command != "validate-db" && !(command == "grassmann" && !p.empty())) {
    out << status << ": " << r.value("message", "") << "\n";
    return out.str();
  }
  if (command == "pi-sphere") {
    out << p.at("name").get<std::string>() << " = " << group_text(p.at("group")) << "\n";
  } else if (command == "pi-space") {
    out << p.at("name").get<std::string>() << " = " << group_text(p.at("group")) << "\n";
    if (p.contains("lift_summand"))
      out << "  lift summand pi_" << p.at("m").get<int>() << "(S^" << p.at("lift_sphere").get<int>()
          << ") = " << p.at("lift_summand").at("text").get<std::string>() << "\n"
          << "  pi^c summand = " << p.at("c_summand").at("text").get<std::string>() << "\n";
  } else if (command == "filtration") {
    std::string q = p.at("q").is_string() ? "inf" : std::to_string(p.at("q").get<int>());
    out << "pi^(" << q << ")_" << p.at("m").get<int>() << "(" << p.at("space").get<std::string>()
        << ") = " << subgroup_text(p.at("subgroup")) << "\n"
        << "  inside " << p.at("ambient").at("text").get<std::string>() << "\n"
        << "  pi^c = " << subgroup_text(p.at("pi_c")) << "\n"
        << "  stable from q = " << p.at("stabilized_at").get<int>() << "\n";
  } else if (command == "classify") {
    if (p.contains("table_row")) out << "table row " << p.at("table_row").get<int>() << ": ";
    out << (p.at("loose").get<bool>() ? "loose" : "not loose") << ", N# = " << p.at("nielsen").get<Int>()
        << ", MCC = " << p.at("mcc").get<Int>() << ", MC = " << count_text(p.at("mc")) << "\n";
  } else if (command == "loose") {
    out << (p.at("loose").get<bool>() ? "loose" : "not loose") << " (" << p.at("witness").get<std::string>()
        << ")\n";
  } else if (command == "grassmann") {
    out << "all pairs into G_{" << p.at("r").get<int>() << ",2}(R) loose: " << p.at("all_loose").get<std::string>()
        << "\n";
    if (p.contains("group"))
      out << "pi_" << p.at("m").get<int>() << "(G_{" << p.at("r").get<int>()
          << ",2}(R)) = " << p.at("group").at("text").get<std::string>() << "\n";
  } else if (command == "validate-db") {
    render_validation(out, p);
  }
  const auto& trace = r.at("rule_trace");
  if (!trace.empty() && command != "validate-db") {
    out << "rules:";
    for (const auto& t : trace) out << " " << t.get<std::string>();
    out << "\n";
  }
  return out.str();
}

}  // namespace coincalc::query
