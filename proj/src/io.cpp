#include "proxyrep/io.hpp"

#include <json.hpp>

namespace proxyrep {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
  Json doc = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw ParseError("malformed JSON document");
  return doc;
}

Rat rational_field(const Json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where + ": rationals must be strings like \"11/30\"");
  return parse_rational_strict(value.get<std::string>());
}

std::vector<Rat> rational_list(const Json& doc, const std::string& key) {
  if (!doc.contains(key)) throw ParseError("missing field: " + key);
  const Json& list = doc.at(key);
  if (!list.is_array() || list.empty()) throw ParseError(key + " must be a nonempty list");
  std::vector<Rat> out;
  out.reserve(list.size());
  for (const Json& item : list) out.push_back(rational_field(item, key));
  return out;
}

Json rational_strings(const std::vector<Rat>& values) {
  Json list = Json::array();
  for (const Rat& v : values) list.push_back(to_string(v));
  return list;
}

Json violation_json(const Violation& v) {
  Json out;
  out["voter"] = to_string(v.voter);
  out["voter_top"] = v.voter_top + 1;
  out["proxy"] = to_string(v.proxy);
  out["proxy_top"] = v.proxy_top + 1;
  return out;
}

Violation violation_from_json(const Json& doc) {
  Violation v;
  v.voter = rational_field(doc.at("voter"), "violation.voter");
  v.voter_top = doc.at("voter_top").get<std::size_t>() - 1;
  v.proxy = rational_field(doc.at("proxy"), "violation.proxy");
  v.proxy_top = doc.at("proxy_top").get<std::size_t>() - 1;
  return v;
}

}  // namespace

Rat parse_rational_strict(const std::string& text) {
  if (text.find('.') != std::string::npos)
    throw ParseError("decimal literal rejected, use an exact fraction: " + text);
  auto value = try_parse_rational(text);
  if (!value) throw ParseError("malformed rational: " + text);
  return *value;
}

NamedInstance parse_instance(const std::string& text) {
  const Json doc = parse_json(text);
  std::vector<Rat> candidates = rational_list(doc, "candidates");
  if (!doc.contains("theta")) throw ParseError("missing field: theta");
  const Rat theta = rational_field(doc.at("theta"), "theta");
  std::optional<std::string> name;
  if (doc.contains("name")) name = doc.at("name").get<std::string>();
  try {
    return NamedInstance{Instance(std::move(candidates), theta), std::move(name)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string emit_instance(const Instance& inst, const std::optional<std::string>& name,
                          const std::optional<std::string>& status) {
  Json doc;
  doc["candidates"] = rational_strings(inst.candidates());
  doc["theta"] = to_string(inst.theta());
  if (name) doc["name"] = *name;
  if (status) doc["status"] = *status;
  return doc.dump(2) + "\n";
}

Arrangement parse_arrangement(const std::string& text) {
  const Json doc = parse_json(text);
  try {
    return Arrangement(rational_list(doc, "proxies"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string emit_arrangement(const Arrangement& arr) {
  Json doc;
  doc["proxies"] = rational_strings(arr.proxies());
  return doc.dump(2) + "\n";
}

Profile parse_profile(const std::string& text) {
  const Json doc = parse_json(text);
  try {
    return Profile(rational_list(doc, "voters"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string emit_result(const ResultDocument& doc) {
  Json out;
  out["mode"] = doc.mode;
  out["theta"] = to_string(doc.theta);
  out["count"] = doc.count;
  out["proxies"] = rational_strings(doc.proxies);
  out["status"] = doc.status;
  if (doc.violation) out["violation"] = violation_json(*doc.violation);
  if (doc.bound_worst_case || doc.bound_certificate) {
    Json bounds;
    if (doc.bound_worst_case) bounds["worst_case"] = *doc.bound_worst_case;
    if (doc.bound_certificate) bounds["certificate"] = *doc.bound_certificate;
    out["bounds"] = bounds;
  }
  if (doc.distance) out["distance"] = to_string(*doc.distance);
  if (doc.direct_winner) out["winners"] = Json{{"direct", *doc.direct_winner}, {"proxy", *doc.proxy_winner}};
  return out.dump(2) + "\n";
}

ResultDocument parse_result(const std::string& text) {
  const Json doc = parse_json(text);
  ResultDocument out;
  out.mode = doc.at("mode").get<std::string>();
  out.theta = rational_field(doc.at("theta"), "theta");
  out.count = doc.at("count").get<std::size_t>();
  for (const Json& p : doc.at("proxies")) out.proxies.push_back(rational_field(p, "proxies"));
  out.status = doc.at("status").get<std::string>();
  if (doc.contains("violation")) out.violation = violation_from_json(doc.at("violation"));
  if (doc.contains("bounds")) {
    const Json& bounds = doc.at("bounds");
    if (bounds.contains("worst_case")) out.bound_worst_case = bounds.at("worst_case").get<std::size_t>();
    if (bounds.contains("certificate")) out.bound_certificate = bounds.at("certificate").get<std::size_t>();
  }
  if (doc.contains("distance")) out.distance = rational_field(doc.at("distance"), "distance");
  if (doc.contains("winners")) {
    out.direct_winner = doc.at("winners").at("direct").get<std::size_t>();
    out.proxy_winner = doc.at("winners").at("proxy").get<std::size_t>();
  }
  return out;
}

}  // namespace proxyrep
