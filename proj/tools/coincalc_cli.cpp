// coincalc: command-line front end over the C interface.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "coincalc/coincalc.h"

using nlohmann::json;

namespace {

struct Options {
  std::string db_path;
  std::string format = "human";
  std::string space;
  std::optional<int> m, n, nprime, r;
  std::string q;
  std::vector<int64_t> f1, f2;
};

std::string take(char* s) {
  std::string out = s ? s : "";
  coincalc_string_free(s);
  return out;
}

json failure(const std::string& command, coincalc_status s, const std::string& message) {
  return {{"status", s == COINCALC_UNKNOWN ? "unknown" : "error"},
          {"command", command},
          {"payload", json::object()},
          {"rule_trace", json::array()},
          {"message", message},
          {"error_kind", coincalc_status_name(s)}};
}

int emit(const json& response, const std::string& format) {
  std::string doc = response.dump(2) + "\n";
  if (format == "machine") {
    std::cout << doc;
  } else {
    char* text = nullptr;
    coincalc_status s = coincalc_render_human(doc.c_str(), &text);
    std::cout << (s == COINCALC_OK ? take(text) : doc);
  }
  const std::string status = response.value("status", "error");
  return status == "ok" ? 0 : status == "unknown" ? 2 : 1;
}

json build_request(const std::string& command, const Options& o) {
  json req = {{"command", command}};
  if (!o.space.empty()) req["space"] = o.space;
  if (o.m) req["m"] = *o.m;
  if (o.n) req["n"] = *o.n;
  if (o.nprime) req["nprime"] = *o.nprime;
  if (o.r) req["r"] = *o.r;
  if (!o.q.empty()) {
    if (o.q == "inf" || o.q == "infinity")
      req["q"] = "inf";
    else
      req["q"] = std::stoi(o.q);
  }
  if (command == "classify" || command == "loose") {
    req["f1"] = o.f1;
    req["f2"] = o.f2;
  }
  return req;
}

int run_query(const std::string& command, const Options& o) {
  const char* path = o.db_path.empty() ? nullptr : o.db_path.c_str();
  coincalc_db* db = nullptr;
  coincalc_status s = coincalc_db_open(path, &db);
  if (s != COINCALC_OK) return emit(failure(command, s, coincalc_last_error()), o.format);

  std::string request = build_request(command, o).dump();
  char* response = nullptr;
  coincalc_query(db, request.c_str(), &response);
  coincalc_db_close(db);
  if (!response) return emit(failure(command, COINCALC_INTERNAL_ERROR, coincalc_last_error()), o.format);
  return emit(json::parse(take(response)), o.format);
}

int run_validate(const Options& o) {
  std::string path = o.db_path.empty() ? coincalc_default_db_path() : o.db_path;
  char* report = nullptr;
  coincalc_status s = coincalc_validate_db_file(path.c_str(), &report);
  if (!report) return emit(failure("validate-db", s, coincalc_last_error()), o.format);
  json payload = json::parse(take(report));
  json response = {{"status", s == COINCALC_OK ? "ok" : "error"},
                   {"command", "validate-db"},
                   {"payload", payload},
                   {"rule_trace", json::array({"validate-db"})}};
  if (s != COINCALC_OK) {
    response["message"] = "database validation failed: " + path;
    response["error_kind"] = "validation_failed";
  }
  return emit(response, o.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coincidence numbers and looseness for maps from spheres"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--db", o.db_path, "Homotopy database (default: $COINCALC_DB or the shipped table)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "machine"}));

  auto space_opt = [&](CLI::App* sub, bool with_grassmann) {
    std::vector<std::string> families{"sphere", "rp", "cp", "hp"};
    if (with_grassmann) families.emplace_back("grassmann");
    sub->add_option("--space", o.space, "Target space family")->required()->check(CLI::IsMember(families));
    sub->add_option("--n", o.n, "Sphere dimension");
    sub->add_option("--nprime", o.nprime, "Projective dimension n'");
    sub->add_option("--r", o.r, "Grassmannian G_{r,2}(R)");
  };
  auto pair_opt = [&](CLI::App* sub) {
    sub->add_option("--f1", o.f1, "First class, comma-separated coordinates")->required()->delimiter(',');
    sub->add_option("--f2", o.f2, "Second class, comma-separated coordinates")->required()->delimiter(',');
  };

  CLI::App* pi_sphere = app.add_subcommand("pi-sphere", "pi_m(S^n)");
  pi_sphere->add_option("--m", o.m)->required();
  pi_sphere->add_option("--n", o.n)->required();

  CLI::App* pi_space = app.add_subcommand("pi-space", "pi_m of a sphere, projective space or Grassmannian");
  space_opt(pi_space, true);
  pi_space->add_option("--m", o.m)->required();

  CLI::App* filtration = app.add_subcommand("filtration", "The filtration subgroup pi^(q) and pi^c");
  space_opt(filtration, true);
  filtration->add_option("--m", o.m)->required();
  filtration->add_option("--q", o.q, "Filtration index, or inf")->required();

  CLI::App* classify = app.add_subcommand("classify", "N#, MCC and MC of a pair of classes");
  space_opt(classify, true);
  classify->add_option("--m", o.m)->required();
  pair_opt(classify);

  CLI::App* loose = app.add_subcommand("loose", "Whether a pair can be deformed coincidence free");
  space_opt(loose, true);
  loose->add_option("--m", o.m)->required();
  pair_opt(loose);

  CLI::App* grassmann = app.add_subcommand("grassmann", "Looseness and pi_m for G_{r,2}(R)");
  grassmann->add_option("--r", o.r)->required();
  grassmann->add_option("--m", o.m);

  CLI::App* validate = app.add_subcommand("validate-db", "Check the database against the structural invariants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (!o.q.empty() && o.q != "inf" && o.q != "infinity" && (o.q.find_first_not_of("0123456789") != std::string::npos || o.q.size() > 6)) {
    std::cerr << "--q must be a non-negative integer or inf\n";
    return 1;
  }

  if (validate->parsed()) return run_validate(o);
  for (CLI::App* sub : {pi_sphere, pi_space, filtration, classify, loose, grassmann})
    if (sub->parsed()) return run_query(sub->get_name(), o);
  return 1;
}
