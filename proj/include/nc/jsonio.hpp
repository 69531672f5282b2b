// JSON rendering for every report type, plus the run manifest embedded in
// CLI outputs.  ordered_json keeps key order stable so identical inputs give
// byte-identical output.
#pragma once

#include <json.hpp>

#include <string>

#include "nc/classify.hpp"
#include "nc/contact.hpp"
#include "nc/hypersurface.hpp"
#include "nc/nondegen.hpp"
#include "nc/oracle.hpp"
#include "nc/polyhedron.hpp"
#include "nc/verdict.hpp"

namespace nc {

using Json = nlohmann::ordered_json;

std::uint64_t fnv1a64(const std::string& data);
std::string hex64(std::uint64_t v);

struct RunManifest {
  std::string command;
  std::string input_digest;
  Json config = Json::object();
  std::string version;
  std::vector<size_t> permutation;  // descending-intercept slot order
};

Json to_json(const RunManifest& m);
Json wrap_output(const RunManifest& m, Json result);

Json to_json(const Rational& q);
Json to_json(const GaussianRational& c);
Json to_json(const ExtendedInt& v);
Json to_json(const ExtendedRat& v);
Json to_json(const Exponents& e);
Json to_json(const MixedPolynomial& f);
Json to_json(const FaceHandle& f);
Json to_json(const LatticePolyhedron& p);
Json to_json(const JetCurve& g);
Json to_json(const MonomialCurve& g);
Json to_json(const NondegeneracyVerdict& v);
Json to_json(const ContactReport& r);
Json to_json(const TypeReport& r);
Json to_json(const OracleResult& r);
Json to_json(const ClassReport& r);
Json to_json(const KouchnirenkoReport& r);
Json to_json(const RegularFaceAudit& r);

std::string tool_version();

}  // namespace nc
