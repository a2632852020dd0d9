#include "coincalc/coincalc.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include "coincidence.hpp"
#include "query.hpp"

#ifndef COINCALC_DEFAULT_DB
#define COINCALC_DEFAULT_DB "data/spheres.json"
#endif

using namespace coincalc;
using query::json;

struct coincalc_db {
  Database db;
};

namespace {

thread_local std::string last_error;

coincalc_status set_error(coincalc_status s, const std::string& message) {
  last_error = message;
  return s;
}

coincalc_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return COINCALC_INVALID_ARGUMENT;
    case ErrorKind::Parse: return COINCALC_PARSE_ERROR;
    case ErrorKind::Invariant: return COINCALC_INVARIANT_VIOLATION;
    case ErrorKind::Overflow: return COINCALC_OVERFLOW;
    case ErrorKind::TooLarge: return COINCALC_TOO_LARGE;
    case ErrorKind::Unsupported: return COINCALC_UNSUPPORTED;
    case ErrorKind::Unknown: return COINCALC_UNKNOWN;
  }
  return COINCALC_INTERNAL_ERROR;
}

coincalc_status status_of(const std::string& error_kind) {
  static const std::pair<const char*, coincalc_status> table[] = {
      {"invalid_argument", COINCALC_INVALID_ARGUMENT}, {"parse_error", COINCALC_PARSE_ERROR},
      {"invariant_violation", COINCALC_INVARIANT_VIOLATION}, {"validation_failed", COINCALC_INVARIANT_VIOLATION},
      {"overflow", COINCALC_OVERFLOW}, {"too_large", COINCALC_TOO_LARGE},
      {"unsupported", COINCALC_UNSUPPORTED}, {"unknown", COINCALC_UNKNOWN}};
  for (const auto& [name, s] : table)
    if (error_kind == name) return s;
  return COINCALC_INTERNAL_ERROR;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs f, translating exceptions into status codes.
template <class F>
coincalc_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const json::exception& e) {
    return set_error(COINCALC_PARSE_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(COINCALC_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return set_error(COINCALC_INTERNAL_ERROR, e.what());
  }
}

std::vector<Int> coords(const int64_t* p, int length) {
  if (length < 0 || (length > 0 && !p)) fail(ErrorKind::InvalidArgument, "bad coordinate array");
  return std::vector<Int>(p, p + length);
}

void fill(const CoincidenceVerdict& v, coincalc_verdict* out) {
  out->loose = v.loose ? 1 : 0;
  out->nielsen = v.nielsen;
  out->mcc = v.mcc;
  out->mc.is_infinite = v.mc.is_infinite() ? 1 : 0;
  out->mc.value = v.mc.is_infinite() ? 0 : v.mc.value();
  out->table_row = v.table_row.value_or(0);
}

}  // namespace

extern "C" {

const char* coincalc_default_db_path(void) {
  const char* env = std::getenv("COINCALC_DB");
  return env && *env ? env : COINCALC_DEFAULT_DB;
}

coincalc_status coincalc_db_open(const char* path, coincalc_db** out) {
  if (!out) return set_error(COINCALC_INVALID_ARGUMENT, "null output handle");
  *out = nullptr;
  return guarded([&] {
    std::string p = path ? path : coincalc_default_db_path();
    if (!std::ifstream(p)) return set_error(COINCALC_IO_ERROR, "cannot open database file " + p);
    *out = new coincalc_db{Database::load(p)};
    return COINCALC_OK;
  });
}

void coincalc_db_close(coincalc_db* db) { delete db; }

coincalc_status coincalc_query(const coincalc_db* db, const char* request_json, char** response_json) {
  if (!db || !request_json || !response_json) return set_error(COINCALC_INVALID_ARGUMENT, "null argument");
  *response_json = nullptr;
  return guarded([&] {
    json request;
    json response;
    try {
      request = json::parse(request_json);
      response = query::run(db->db, request);
    } catch (const json::parse_error& e) {
      response = query::error_response("", Error(ErrorKind::Parse, std::string("request: ") + e.what()));
    }
    *response_json = copy_out(response.dump(2) + "\n");
    if (!*response_json) return set_error(COINCALC_INTERNAL_ERROR, "out of memory");
    const std::string status = response.at("status");
    if (status == "ok") return COINCALC_OK;
    return set_error(status_of(response.value("error_kind", std::string())), response.value("message", ""));
  });
}

coincalc_status coincalc_validate_db_file(const char* path, char** report_json) {
  if (!path || !report_json) return set_error(COINCALC_INVALID_ARGUMENT, "null argument");
  *report_json = nullptr;
  return guarded([&] {
    json report = query::validate_db_file(path);
    *report_json = copy_out(report.dump(2) + "\n");
    if (!*report_json) return set_error(COINCALC_INTERNAL_ERROR, "out of memory");
    if (report.at("passed").get<bool>()) return COINCALC_OK;
    return set_error(COINCALC_INVARIANT_VIOLATION, "database validation failed");
  });
}

coincalc_status coincalc_render_human(const char* response_json, char** text) {
  if (!response_json || !text) return set_error(COINCALC_INVALID_ARGUMENT, "null argument");
  *text = nullptr;
  return guarded([&] {
    *text = copy_out(query::render_human(json::parse(response_json)));
    return *text ? COINCALC_OK : set_error(COINCALC_INTERNAL_ERROR, "out of memory");
  });
}

coincalc_status coincalc_pi_sphere(const coincalc_db* db, int m, int n, char** group_text) {
  if (!db || !group_text) return set_error(COINCALC_INVALID_ARGUMENT, "null argument");
  *group_text = nullptr;
  return guarded([&] {
    *group_text = copy_out(pi_sphere(db->db, m, n).to_string());
    return *group_text ? COINCALC_OK : set_error(COINCALC_INTERNAL_ERROR, "out of memory");
  });
}

coincalc_status coincalc_classify_sphere(const coincalc_db* db, int m, int n, const int64_t* f1, const int64_t* f2,
                                         int length, coincalc_verdict* out) {
  if (!db || !out) return set_error(COINCALC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    FgAbGroup g = pi_sphere(db->db, m, n);
    fill(classify_sphere_pair(db->db, m, n, GroupElement(g, coords(f1, length)), GroupElement(g, coords(f2, length))),
         out);
    return COINCALC_OK;
  });
}

coincalc_status coincalc_classify_projective(const coincalc_db* db, char field, int m, int n_prime, const int64_t* f1,
                                             const int64_t* f2, int length, coincalc_verdict* out) {
  if (!db || !out) return set_error(COINCALC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Field k = parse_field(std::string(1, field));
    ProjectiveClassifier c(db->db, k, m, n_prime);
    const ProjectiveHomotopyGroup& g = c.group();
    fill(c.classify(HomotopyClass::from_total(g, GroupElement(g.total, coords(f1, length))),
                    HomotopyClass::from_total(g, GroupElement(g.total, coords(f2, length)))),
         out);
    return COINCALC_OK;
  });
}

void coincalc_string_free(char* s) { std::free(s); }

const char* coincalc_last_error(void) { return last_error.c_str(); }

const char* coincalc_status_name(coincalc_status status) {
  switch (status) {
    case COINCALC_OK: return "ok";
    case COINCALC_UNKNOWN: return "unknown";
    case COINCALC_INVALID_ARGUMENT: return "invalid_argument";
    case COINCALC_PARSE_ERROR: return "parse_error";
    case COINCALC_INVARIANT_VIOLATION: return "invariant_violation";
    case COINCALC_OVERFLOW: return "overflow";
    case COINCALC_TOO_LARGE: return "too_large";
    case COINCALC_UNSUPPORTED: return "unsupported";
    case COINCALC_IO_ERROR: return "io_error";
    case COINCALC_INTERNAL_ERROR: return "internal_error";
  }
  return "invalid_status";
}

int coincalc_exit_code(coincalc_status status) {
  if (status == COINCALC_OK) return 0;
  if (status == COINCALC_UNKNOWN) return 2;
  return 1;
}

}  // extern "C"
