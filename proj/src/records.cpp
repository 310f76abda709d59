#include "quartic/records.hpp"

#include "quartic/errors.hpp"

namespace quartic::records {

Json to_json(const Quadruple& q) {
  Json j;
  j["type"] = "quadruple";
  j["h"] = q.h.str();
  j["A"] = to_string(q.A);
  j["B"] = to_string(q.B);
  j["C"] = to_string(q.C);
  j["D"] = to_string(q.D);
  j["provenance"] = std::string(source_tag(q.provenance.source));
  j["detail"] = q.provenance.detail;
  j["chain"] = q.provenance.chain;
  j["twist_t"] = q.provenance.twist_t ? Json(q.provenance.twist_t->str()) : Json(nullptr);
  return j;
}

Json to_json(const method_two::HValue& hv) {
  Json j;
  j["type"] = "hvalue";
  j["z"] = hv.Z.str();
  j["multiple_index"] = hv.multiple_index;
  j["h"] = hv.h.str();
  j["Y"] = hv.Y.str();
  j["point"] = hv.source_point.str();
  return j;
}

Json to_json(const search::SearchHit& hit) {
  Json j;
  j["type"] = "search_hit";
  j["h"] = hit.h.str();
  j["A"] = std::to_string(hit.A);
  j["B"] = std::to_string(hit.B);
  j["C"] = std::to_string(hit.C);
  j["D"] = std::to_string(hit.D);
  j["max"] = std::to_string(hit.max_coordinate());
  return j;
}

Quadruple quadruple_from_json(const Json& j) {
  try {
    Quadruple q;
    q.h = Rational::parse(j.at("h").get<std::string>());
    q.A = parse_bigint(j.at("A").get<std::string>());
    q.B = parse_bigint(j.at("B").get<std::string>());
    q.C = parse_bigint(j.at("C").get<std::string>());
    q.D = parse_bigint(j.at("D").get<std::string>());
    if (j.contains("provenance") && j["provenance"].is_string()) {
      q.provenance.source =
          parse_source_tag(j["provenance"].get<std::string>()).value_or(Source::Supplied);
    } else if (j.value("type", "") == "search_hit") {
      q.provenance.source = Source::SearchHit;
    }
    if (j.contains("detail") && j["detail"].is_string()) q.provenance.detail = j["detail"];
    if (j.contains("chain") && j["chain"].is_array()) {
      q.provenance.chain = j["chain"].get<std::vector<std::string>>();
    }
    if (j.contains("twist_t") && j["twist_t"].is_string()) {
      q.provenance.twist_t = Rational::parse(j["twist_t"].get<std::string>());
    }
    return q;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed record: ") + e.what());
  }
}

std::string to_line(const Json& j) { return j.dump(); }

}  // namespace quartic::records
