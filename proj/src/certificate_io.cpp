#include "zerocert/certificate_io.hpp"

#include <json.hpp>

#include "zerocert/errors.hpp"

namespace zerocert {

namespace {

using json = nlohmann::ordered_json;

json region_to_json(const Region& r) {
  json j;
  if (r.is_disk()) {
    j["kind"] = "disk";
    j["center"] = r.center();
    j["radius"] = r.radius();
  } else {
    j["kind"] = "box";
    j["lower"] = r.lower();
    j["upper"] = r.upper();
  }
  return j;
}

Region region_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "disk") return Region::disk(j.at("center").get<Vec>(), j.at("radius").get<double>());
  if (kind == "box") return Region::box(j.at("lower").get<Vec>(), j.at("upper").get<Vec>());
  throw InvalidInput("unknown region kind '" + kind + "'");
}

json check_to_json(const CheckResult& c) {
  json j;
  j["check"] = c.check;
  j["passed"] = c.passed;
  j["margin"] = c.margin;
  j["threshold"] = c.threshold;
  j["witness"] = c.witness ? json(*c.witness) : json(nullptr);
  j["rigor"] = to_string(c.rigor);
  return j;
}

CheckResult check_from_json(const json& j) {
  CheckResult c;
  c.check = j.at("check").get<std::string>();
  c.passed = j.at("passed").get<bool>();
  c.margin = j.at("margin").get<double>();
  c.threshold = j.at("threshold").get<double>();
  if (!j.at("witness").is_null()) c.witness = j.at("witness").get<Vec>();
  c.rigor = rigor_from_string(j.at("rigor").get<std::string>());
  return c;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
  json j;
  j["map_digest"] = cert.map_digest;
  j["region"] = region_to_json(cert.region);
  j["verdict"] = to_string(cert.verdict);
  j["route"] = cert.route ? json(to_string(*cert.route)) : json(nullptr);
  j["obstruction"] = cert.obstruction ? json(*cert.obstruction) : json(nullptr);
  j["reason"] = cert.reason ? json(to_string(*cert.reason)) : json(nullptr);
  j["min_boundary_norm"] = cert.min_boundary_norm;
  j["rigor"] = to_string(cert.rigor);
  j["evidence"] = json::array();
  for (const CheckResult& c : cert.evidence) j["evidence"].push_back(check_to_json(c));
  j["extension_witness_present"] = cert.extension_witness_present;
  return j.dump(2);
}

Certificate certificate_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    Certificate cert;
    cert.map_digest = j.at("map_digest").get<std::string>();
    cert.region = region_from_json(j.at("region"));
    cert.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    if (!j.at("route").is_null()) cert.route = route_from_string(j.at("route").get<std::string>());
    if (!j.at("obstruction").is_null()) cert.obstruction = j.at("obstruction").get<long>();
    if (j.contains("reason") && !j.at("reason").is_null()) {
      cert.reason = cat_reason_from_string(j.at("reason").get<std::string>());
    }
    cert.min_boundary_norm = j.at("min_boundary_norm").get<double>();
    cert.rigor = rigor_from_string(j.at("rigor").get<std::string>());
    for (const json& c : j.at("evidence")) cert.evidence.push_back(check_from_json(c));
    cert.extension_witness_present = j.at("extension_witness_present").get<bool>();
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed certificate JSON: ") + e.what());
  }
}

}  // namespace zerocert
