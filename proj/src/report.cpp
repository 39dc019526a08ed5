#include "digitblock/report.hpp"

namespace digitblock {

namespace {

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string VerifyReport::label() const { return spec ? spec->label() : target; }

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j;
  j["spec"] = spec ? spec->to_json() : nlohmann::json(target);
  j["terms_used"] = terms_used;
  j["precision_bits"] = precision_bits;
  j["lhs"] = lhs.to_string();
  j["rhs"] = rhs.to_string();
  j["abs_gap"] = abs_gap.to_string();
  j["rel_gap"] = rel_gap.to_string();
  j["tail_estimate"] = tail_estimate.to_string();
  j["tolerance"] = tolerance;
  j["tail_factor"] = tail_factor;
  j["verdict"] = pass ? "pass" : "fail";
  return j;
}

VerifyReport VerifyReport::from_json(const nlohmann::json& j) {
  VerifyReport r;
  const auto& spec = j.at("spec");
  if (spec.is_string()) {
    r.target = spec.get<std::string>();
  } else {
    r.target = "word";
    r.spec = ProductSpec::from_json(spec);
  }
  r.terms_used = j.at("terms_used").get<std::uint64_t>();
  r.precision_bits = j.at("precision_bits").get<long>();
  const long bits = r.precision_bits;
  r.lhs = BigReal::parse(j.at("lhs").get<std::string>(), bits);
  r.rhs = BigReal::parse(j.at("rhs").get<std::string>(), bits);
  r.abs_gap = BigReal::parse(j.at("abs_gap").get<std::string>(), bits);
  r.rel_gap = BigReal::parse(j.at("rel_gap").get<std::string>(), bits);
  r.tail_estimate = BigReal::parse(j.at("tail_estimate").get<std::string>(), bits);
  r.tolerance = j.value("tolerance", 1e-3);
  r.tail_factor = j.value("tail_factor", 0.0);
  r.pass = j.at("verdict").get<std::string>() == "pass";
  return r;
}

std::string VerifyReport::csv_header() {
  return "spec,terms_used,precision_bits,lhs,rhs,abs_gap,rel_gap,tail_estimate,verdict";
}

std::string VerifyReport::csv_row() const {
  return csv_quote(label()) + "," + std::to_string(terms_used) + "," +
         std::to_string(precision_bits) + "," + lhs.to_string() + "," + rhs.to_string() + "," +
         abs_gap.to_string() + "," + rel_gap.to_string() + "," + tail_estimate.to_string() + "," +
         (pass ? "pass" : "fail");
}

}  // namespace digitblock
