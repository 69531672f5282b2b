#include <doctest.h>

#include <fstream>

#include "helpers.hpp"
#include "nc/hypersurface.hpp"
#include "nc/jsonio.hpp"
#include "nc/oracle.hpp"

using namespace nc;
using namespace tests;

namespace {

// Minimal structural validator: type tags, required keys, item schemas.
bool validate(const Json& schema, const Json& value, std::string& err) {
  if (schema.contains("type")) {
    auto matches = [&](const std::string& t) {
      if (t == "object") return value.is_object();
      if (t == "array") return value.is_array();
      if (t == "string") return value.is_string();
      if (t == "integer") return value.is_number_integer();
      if (t == "number") return value.is_number();
      if (t == "boolean") return value.is_boolean();
      if (t == "null") return value.is_null();
      return false;
    };
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"]) ok = ok || matches(t.get<std::string>());
    } else {
      ok = matches(schema["type"].get<std::string>());
    }
    if (!ok) {
      err = "type mismatch at " + value.dump().substr(0, 60);
      return false;
    }
  }
  if (schema.contains("required"))
    for (const auto& key : schema["required"])
      if (!value.contains(key.get<std::string>())) {
        err = "missing key " + key.get<std::string>();
        return false;
      }
  if (schema.contains("properties") && value.is_object())
    for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
      if (value.contains(it.key()))
        if (!validate(it.value(), value[it.key()], err)) return false;
  if (schema.contains("items") && value.is_array())
    for (const auto& item : value)
      if (!validate(schema["items"], item, err)) return false;
  return true;
}

Json load(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  Json j;
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("polynomial serialization matches the documented shape") {
  MixedPolynomial f = mp("Re(w) + |z1|^2", 2);
  Json j = to_json(f);
  CHECK(j["nvars"] == 2);
  CHECK(j["terms"].size() == 3);
  for (const auto& t : j["terms"]) {
    CHECK(t.contains("alpha"));
    CHECK(t.contains("beta"));
    CHECK(t["coef"].contains("re"));
    CHECK(t["coef"].contains("im"));
  }
}

TEST_CASE("json output is deterministic") {
  ModelHypersurface m = normalize_auto(star_product_surface());
  TypeReport rep1 = compute_type(m);
  TypeReport rep2 = compute_type(m);
  CHECK(to_json(rep1).dump(2) == to_json(rep2).dump(2));
}

TEST_CASE("reports validate against the shipped schemas") {
  std::string dir = std::string(TEST_SOURCE_DIR) + "/../schemas/";
  std::string err;

  ModelHypersurface m = normalize_auto(star_product_surface());
  RunManifest manifest{"type", hex64(fnv1a64("fixture")), Json::object(), tool_version(), {0, 1, 2}};
  Json out = wrap_output(manifest, to_json(compute_type(m)));
  CHECK_MESSAGE(validate(load(dir + "type.schema.json"), out, err), err);

  Json poly = wrap_output(manifest, to_json(m.F));
  CHECK_MESSAGE(validate(load(dir + "polynomial.schema.json"), poly, err), err);

  LatticePolyhedron P = newton_polyhedron(m.F);
  Json ph = wrap_output(manifest, to_json(P));
  CHECK_MESSAGE(validate(load(dir + "polyhedron.schema.json"), ph, err), err);

  SearchConfig cfg;
  cfg.max_exponent = 2;
  cfg.palette = {GaussianRational(1)};
  cfg.two_term_jets = false;
  Json oracle = wrap_output(manifest, to_json(sup_contact_lower_bound(m.F, cfg)));
  CHECK_MESSAGE(validate(load(dir + "oracle.schema.json"), oracle, err), err);

  Json verdict = wrap_output(manifest, to_json(check_all(m.F)));
  CHECK_MESSAGE(validate(load(dir + "verdict.schema.json"), verdict, err), err);
}
