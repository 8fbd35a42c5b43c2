#include "p2coh/report_io.hpp"

#include "p2coh/errors.hpp"

namespace p2coh {

Json integerJson(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integerFromJson(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return parseInteger(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

Json toJson(const ChernCharacter& v) {
  Json j;
  j["r"] = integerJson(v.rank());
  j["c1"] = integerJson(v.c1());
  j["ch2"] = toString(v.ch2());
  return j;
}

ChernCharacter characterFromJson(const Json& j) {
  try {
    return {integerFromJson(j.at("r")), integerFromJson(j.at("c1")),
            parseRational(j.at("ch2").get<std::string>())};
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad character JSON: ") + e.what());
  }
}

Json toJson(const ExceptionalSlope& e) {
  Json j;
  j["index"] = e.index.str();
  j["mu"] = toString(e.mu);
  j["rank"] = integerJson(e.rank);
  j["disc"] = toString(e.disc);
  j["half_width"] = e.halfWidth.str();
  return j;
}

Json toJson(const KroneckerShape& s) {
  Json j;
  j["N"] = s.n;
  j["b"] = integerJson(s.b);
  j["a"] = integerJson(s.a);
  return j;
}

Json toJson(const CohomologyReport& r) {
  Json j;
  j["h0"] = integerJson(r.h0);
  j["h1"] = integerJson(r.h1);
  j["h2"] = integerJson(r.h2);
  j["chi"] = integerJson(r.chi);
  j["region"] = toString(r.region);
  j["dual_region"] = r.dualRegion ? Json(toString(*r.dualRegion)) : Json(nullptr);
  j["special"] = r.special;
  j["requires_divisibility"] = r.requiresDivisibility;
  j["sufficient_multiple"] =
      r.sufficientMultiple ? integerJson(*r.sufficientMultiple) : Json(nullptr);
  j["notes"] = r.notes;
  return j;
}

CohomologyReport reportFromJson(const Json& j) {
  CohomologyReport r;
  try {
    r.h0 = integerFromJson(j.at("h0"));
    r.h1 = integerFromJson(j.at("h1"));
    r.h2 = integerFromJson(j.at("h2"));
    r.chi = integerFromJson(j.at("chi"));
    r.region = parseRegion(j.at("region").get<std::string>());
    if (j.contains("dual_region") && !j["dual_region"].is_null())
      r.dualRegion = parseRegion(j["dual_region"].get<std::string>());
    r.special = j.at("special").get<bool>();
    r.requiresDivisibility = j.at("requires_divisibility").get<bool>();
    if (!j.at("sufficient_multiple").is_null())
      r.sufficientMultiple = integerFromJson(j["sufficient_multiple"]);
    r.notes = j.at("notes").get<std::vector<std::string>>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad report JSON: ") + e.what());
  }
  checkReport(r);
  return r;
}

Json toJson(const ResolutionData& rd, const CorrespondingExceptionals& ce,
            const std::optional<OrthogonalPair>& op) {
  Json j;
  j["nu_plus"] = toJson(ce.nuPlus);
  j["nu_minus"] = ce.nuMinus ? toJson(*ce.nuMinus) : Json(nullptr);
  j["sign_case"] = toString(rd.signCase);
  j["alpha"] = toJson(rd.alpha);
  j["beta"] = toJson(rd.beta);
  j["m1"] = integerJson(rd.m1);
  j["m2"] = integerJson(rd.m2);
  j["m3"] = integerJson(rd.m3);
  j["k_char"] = toJson(rd.kChar);
  j["kronecker"] = toJson(rd.kroneckerShape);
  j["u_plus"] = op ? toJson(op->uPlus) : Json(nullptr);
  j["u_minus"] = op ? toJson(op->uMinus) : Json(nullptr);
  return j;
}

}  // namespace p2coh
