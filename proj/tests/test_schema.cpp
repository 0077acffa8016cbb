// Validates live tool output against the published report schema, and the
// two output invariants: parse-serialize round trips are the identity, and
// repeated runs are byte-identical.
#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <string>

#include "monodromy/serialize.hpp"

using namespace monodromy;

namespace {

// Interprets the subset of JSON Schema the published schema uses: $ref into
// $defs, type, enum, const, required, properties, additionalProperties,
// items, pattern, minimum, anyOf.
class SchemaValidator {
 public:
  explicit SchemaValidator(Json root) : root_(std::move(root)) {}

  bool validate(const Json& value, std::string* why) const {
    return check(value, root_, "$", why);
  }

 private:
  const Json& resolve(const Json& schema) const {
    if (!schema.contains("$ref")) return schema;
    std::string ref = schema["$ref"].get<std::string>();
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) throw Error("unsupported $ref: " + ref);
    const Json& target = root_["$defs"].at(ref.substr(prefix.size()));
    return target;
  }

  static bool type_matches(const Json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    throw Error("unsupported schema type: " + t);
  }

  bool fail(const std::string& path, const std::string& msg,
            std::string* why) const {
    if (why) *why = path + ": " + msg;
    return false;
  }

  bool check(const Json& v, const Json& schema_in, const std::string& path,
             std::string* why) const {
    const Json& s = resolve(schema_in);
    if (s.contains("const") && v != s["const"])
      return fail(path, "constant mismatch", why);
    if (s.contains("enum")) {
      bool hit = false;
      for (const Json& cand : s["enum"]) hit = hit || v == cand;
      if (!hit) return fail(path, "not in enum: " + v.dump(), why);
    }
    if (s.contains("type") && !type_matches(v, s["type"].get<std::string>()))
      return fail(path, "wrong type, got " + v.dump().substr(0, 40), why);
    if (s.contains("pattern") && v.is_string()) {
      std::regex re(s["pattern"].get<std::string>());
      if (!std::regex_search(v.get<std::string>(), re))
        return fail(path, "pattern mismatch: " + v.get<std::string>(), why);
    }
    if (s.contains("minimum") && v.is_number_integer() &&
        v.get<long long>() < s["minimum"].get<long long>())
      return fail(path, "below minimum", why);
    if (v.is_object()) {
      if (s.contains("required"))
        for (const Json& k : s["required"])
          if (!v.contains(k.get<std::string>()))
            return fail(path, "missing required key " + k.get<std::string>(),
                        why);
      const Json props =
          s.contains("properties") ? s["properties"] : Json::object();
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (props.contains(it.key())) {
          if (!check(it.value(), props[it.key()], path + "." + it.key(), why))
            return false;
        } else if (s.contains("additionalProperties")) {
          const Json& ap = s["additionalProperties"];
          if (ap.is_boolean() && !ap.get<bool>())
            return fail(path, "unexpected key " + it.key(), why);
          if (ap.is_object() &&
              !check(it.value(), ap, path + "." + it.key(), why))
            return false;
        }
      }
    }
    if (v.is_array() && s.contains("items")) {
      size_t i = 0;
      for (const Json& el : v) {
        if (!check(el, s["items"], path + "[" + std::to_string(i) + "]", why))
          return false;
        ++i;
      }
    }
    if (s.contains("anyOf")) {
      for (const Json& branch : s["anyOf"]) {
        std::string scratch;
        if (check(v, branch, path, &scratch)) return true;
      }
      return fail(path, "no anyOf branch matched", why);
    }
    return true;
  }

  Json root_;
};

SchemaValidator& published_schema() {
  static SchemaValidator* v = [] {
    std::ifstream in(MONODROMY_SCHEMA_PATH);
    REQUIRE(in.good());
    return new SchemaValidator(Json::parse(in));
  }();
  return *v;
}

std::string run_tool(const std::string& args) {
  std::string cmd = std::string(MONODROMY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  REQUIRE(WEXITSTATUS(status) == 0);
  return out;
}

void expect_valid(const std::string& args) {
  Json report = Json::parse(run_tool(args));
  std::string why;
  bool ok = published_schema().validate(report, &why);
  INFO(args << " -> " << why);
  CHECK(ok);
  // Round trip: parse(serialize(x)) == x.
  CHECK(Json::parse(report.dump()) == report);
}

}  // namespace

TEST_CASE("every subcommand's report validates against the published schema") {
  expect_valid("rep --level 2 --classify");
  expect_valid("rep --level 1 --classify");
  expect_valid("rep --levels 3..4 --word \"s1^-1 s2\" --alphabet sigma");
  expect_valid("scan --levels 1..3");
  expect_valid("scan --level 10");
  expect_valid("fivepoint --level 5 --word \"x3 x1\"");
  expect_valid("fusion --level 5 --genus 1 --weights 2,2");
  expect_valid("modular --level 2");
}

TEST_CASE("the validator is not vacuous") {
  Json report = Json::parse(run_tool("fusion --level 2 --genus 0 --weights 1,1"));
  std::string why;
  REQUIRE(published_schema().validate(report, &why));

  Json wrong_version = report;
  wrong_version["schema_version"] = "2.0";
  CHECK_FALSE(published_schema().validate(wrong_version, &why));

  Json missing_key = report;
  missing_key["results"].erase("agree");
  CHECK_FALSE(published_schema().validate(missing_key, &why));

  Json floating = report;
  floating["results"]["dimension"] = 1.5;
  CHECK_FALSE(published_schema().validate(floating, &why));

  Json extra = report;
  extra["results"]["surprise"] = 1;
  CHECK_FALSE(published_schema().validate(extra, &why));

  Json bad_rational = Json::parse(run_tool("modular --level 1"));
  bad_rational["results"]["unitarity_defect_bound"] = "0.25";
  CHECK_FALSE(published_schema().validate(bad_rational, &why));
}

TEST_CASE("reports are byte-identical across runs") {
  CHECK(run_tool("modular --level 2") == run_tool("modular --level 2"));
  CHECK(run_tool("rep --level 4 --classify") ==
        run_tool("rep --level 4 --classify"));
  CHECK(run_tool("scan --level 12 --format csv") ==
        run_tool("scan --level 12 --format csv"));
}
