#include "cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "p2coh/cohomology.hpp"
#include "p2coh/errors.hpp"
#include "p2coh/oracle.hpp"
#include "p2coh/report_io.hpp"

namespace p2coh::cli {

namespace {

enum class Format { Plain, Json, Csv };

std::string approx(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

std::string approx(const Rational& x) { return approx(x.get_d()); }

// Plain: "key: value" per top-level entry.  Csv: "key,value".  Json: compact.
void emit(std::ostream& out, Format f, const Json& j) {
  if (f == Format::Json) {
    out << j.dump() << "\n";
    return;
  }
  const char* sep = f == Format::Csv ? "," : ": ";
  for (const auto& [k, v] : j.items()) {
    out << k << sep;
    if (v.is_string()) out << v.get<std::string>();
    else out << v.dump();
    out << "\n";
  }
}

Json slopeJson(const ExceptionalSlope& e) { return toJson(e); }

Json characterSummary(const ChernCharacter& v) {
  Json j = toJson(v);
  if (v.isTorsion()) {
    j["kind"] = "torsion";
    j["d"] = integerJson(v.c1());
  } else if (v.isPositiveRank()) {
    j["kind"] = "positive-rank";
    j["mu"] = toString(v.slope());
    j["delta"] = toString(v.discriminant());
  } else {
    j["kind"] = "virtual";
  }
  j["c2"] = toString(v.c2());
  j["chi"] = toString(v.euler());
  j["integral"] = v.isIntegral();
  return j;
}

std::string stableVerdict(const ChernCharacter& v, Json& j) {
  if (v.isTorsion()) return "torsion (one-dimensional sheaves, moduli nonempty)";
  j["mu"] = toString(v.slope());
  j["delta"] = toString(v.discriminant());
  j["delta_curve"] = toString(delta(v.slope()));
  if (auto em = exceptionalMultiple(v)) {
    if (em->second == 1) return "exceptional (moduli = point)";
    return "semistable only as E^" + toString(em->second) + " (polystable, no stable sheaves)";
  }
  if (existsPositiveDimensionalModuli(v)) return "positive-dimensional moduli (Delta >= delta(mu))";
  return "no semistable sheaves (Delta < delta(mu))";
}

Json correspondJson(const ChernCharacter& v) {
  CorrespondingExceptionals ce = correspondingExceptionals(v);
  ResolutionData rd = resolution(v);
  std::optional<OrthogonalPair> op;
  if (v.isPositiveRank()) op = orthogonalCharacters(v);
  Json j = toJson(rd, ce, op);
  if (v.isTorsion()) j["u_plus"] = toJson(primaryOrthogonal(v));
  if (op) j["lattice_exponent"] = integerJson(orthogonalLatticeExponent(v));
  return j;
}

Json homExtJson(const HomExt& h) {
  Json j;
  j["hom"] = integerJson(h.hom);
  j["ext"] = integerJson(h.ext);
  return j;
}

void regionMap(std::ostream& out, const ChernCharacter& v, const Rational& muMin,
               const Rational& muMax, const Rational& dMin, const Rational& dMax,
               const Integer& den) {
  if (den <= 0) throw ParseError("denominator must be positive");
  RegionContext ctx = regionContext(v);
  Rational step = makeRational(1, den);
  out << "mu,mu_approx,delta,delta_approx,region\n";
  for (Rational mu = muMin; mu <= muMax; mu += step) {
    for (Rational d = dMin; d <= dMax; d += step) {
      ChernCharacter w = minimalIntegralOnParabolaPoint({mu, d});
      std::string label;
      if (exceptionalMultiple(w)) label = "ExceptionalPath";
      else if (!existsPositiveDimensionalModuli(w)) label = "none";
      else label = toString(classifyRegion(ctx, w));
      out << toString(mu) << "," << approx(mu) << "," << toString(d) << "," << approx(d) << ","
          << label << "\n";
    }
  }
}

void dlpSample(std::ostream& out, const Rational& lo, const Rational& hi, const Integer& den) {
  if (den <= 0) throw ParseError("denominator must be positive");
  Rational step = makeRational(1, den);
  out << "mu,mu_approx,delta,delta_approx\n";
  for (Rational mu = lo; mu <= hi; mu += step) {
    Rational d = delta(mu);
    out << toString(mu) << "," << approx(mu) << "," << toString(d) << "," << approx(d) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generic cohomology of tensor products of sheaves on P^2", "p2coh"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string formatName;
  app.add_option("--format", formatName, "json | plain | csv")
      ->check(CLI::IsMember({"json", "plain", "csv"}));

  std::function<void(Format)> action;
  auto fmt = [&](Format dflt) {
    if (formatName == "json") return Format::Json;
    if (formatName == "plain") return Format::Plain;
    if (formatName == "csv") return Format::Csv;
    return dflt;
  };

  // chern
  std::string chV, chW;
  long chTwist = 0;
  bool chDual = false, chSerre = false;
  auto* chern = app.add_subcommand("chern", "invariants and ring operations of a character");
  chern->add_option("V", chV, "\"r c1 ch2\" (torsion: \"0 d chi\")")->required();
  chern->add_option("--with", chW, "second character for tensor and chi");
  chern->add_option("--twist", chTwist, "twist by O(n)");
  chern->add_flag("--dual", chDual);
  chern->add_flag("--serre-dual", chSerre);
  chern->callback([&] {
    action = [&](Format f) {
      ChernCharacter v = parseCharacter(chV);
      if (chTwist != 0) v = twist(v, chTwist);
      if (chDual) v = dual(v);
      if (chSerre) v = serreDual(v);
      Json j = characterSummary(v);
      if (!chW.empty()) {
        ChernCharacter w = parseCharacter(chW);
        j["tensor"] = toJson(tensor(v, w));
        j["chi_tensor"] = toString(chiTensor(v, w));
      }
      emit(out, f, j);
    };
  });

  // exceptional
  std::string exD, exWith;
  auto* exc = app.add_subcommand("exceptional", "exceptional slope for a dyadic index");
  exc->add_option("INDEX", exD, "\"p/2^q\" or a dyadic rational")->required();
  exc->add_option("--with", exWith, "second index: pair cohomology and Hom global generation");
  exc->callback([&] {
    action = [&](Format f) {
      ExceptionalSlope e = epsilon(parseDyadic(exD));
      Json j = slopeJson(e);
      j["order"] = e.order();
      j["character"] = toJson(e.character());
      auto [a, b] = decompose(e);
      j["decompose"] = {a.mu.get_str(), b.mu.get_str()};
      if (!e.isInteger()) {
        MutationSlopes m = mutationSlopes(e);
        j["mutation"] = {{"alpha", m.alpha.mu.get_str()},
                         {"eta", m.eta.mu.get_str()},
                         {"zeta", m.zeta.mu.get_str()},
                         {"omega", m.omega.mu.get_str()}};
      }
      j["globally_generated"] = excGloballyGenerated(e);
      if (!exWith.empty()) {
        ExceptionalSlope g = epsilon(parseDyadic(exWith));
        Cohomology h = excPairCohomology(e, g);
        j["pair_cohomology"] = {integerJson(h.h0), integerJson(h.h1), integerJson(h.h2)};
        j["hom_globally_generated"] = excHomGloballyGenerated(e, g);
      }
      emit(out, f, j);
    };
  });

  // dlp
  auto* dlp = app.add_subcommand("dlp", "Drezet-Le Potier curve");
  dlp->require_subcommand(1);
  std::string dlpMu;
  unsigned dlpOrder = kDefaultMaxOrder;
  auto* dlpDelta = dlp->add_subcommand("delta", "delta(mu) with its locating slope");
  dlpDelta->add_option("MU", dlpMu)->required();
  dlpDelta->add_option("--max-order", dlpOrder);
  dlpDelta->callback([&] {
    action = [&](Format f) {
      Rational mu = parseRational(dlpMu);
      LocateResult r = locate(QuadraticNumber(mu), dlpOrder);
      if (r.kind == LocateResult::Kind::DepthExceeded)
        throw DepthExceededError("locate depth exceeded for " + toString(mu));
      Json j;
      j["mu"] = toString(mu);
      j["delta"] = toString(delta(mu));
      j["located"] = slopeJson(*r.slope);
      emit(out, f, j);
    };
  });
  std::string smin = "0", smax = "1", sden = "64";
  auto* dlpSampleCmd = dlp->add_subcommand("sample", "CSV samples of delta on a grid");
  dlpSampleCmd->add_option("--min", smin);
  dlpSampleCmd->add_option("--max", smax);
  dlpSampleCmd->add_option("--denominator", sden);
  dlpSampleCmd->callback([&] {
    action = [&](Format) {
      dlpSample(out, parseRational(smin), parseRational(smax), parseInteger(sden));
    };
  });

  // stable
  std::string stV;
  auto* stable = app.add_subcommand("stable", "existence verdict for semistable sheaves");
  stable->add_option("V", stV)->required();
  stable->callback([&] {
    action = [&](Format f) {
      ChernCharacter v = parseIntegralCharacter(stV);
      Json j;
      std::string verdict = stableVerdict(v, j);
      if (f == Format::Plain) {
        out << verdict << "\n";
        return;
      }
      Json k;
      k["verdict"] = verdict;
      k.update(j);
      emit(out, f, k);
    };
  });

  // correspond
  std::string coV;
  auto* corr = app.add_subcommand("correspond", "nu+-, resolution data, u+-");
  corr->add_option("V", coV)->required();
  corr->callback([&] {
    action = [&](Format f) { emit(out, f, correspondJson(parseIntegralCharacter(coV))); };
  });

  // kronecker
  auto* kr = app.add_subcommand("kronecker", "Kronecker quiver calculator (shapes \"N:b,a\")");
  kr->require_subcommand(1);
  std::string kF, kE;
  long kN = 3, kCount = 5;
  auto* krEuler = kr->add_subcommand("euler", "chi(f, e)");
  krEuler->add_option("F", kF)->required();
  krEuler->add_option("E", kE)->required();
  krEuler->callback([&] {
    action = [&](Format f) {
      Json j;
      j["chi"] = integerJson(eulerForm(parseShape(kF), parseShape(kE)));
      emit(out, f, j);
    };
  });
  auto* krOrbit = kr->add_subcommand("orbit", "exceptional tau-orbit of (0,1)");
  krOrbit->add_option("N", kN)->required();
  krOrbit->add_option("COUNT", kCount)->required();
  krOrbit->callback([&] {
    action = [&](Format f) {
      Json list = Json::array();
      for (const auto& s : exceptionalOrbit(kN, kCount)) list.push_back(toJson(s));
      Json j;
      j["orbit"] = list;
      emit(out, f, j);
    };
  });
  auto* krSemi = kr->add_subcommand("semistable", "does a semistable module exist");
  krSemi->add_option("S", kF)->required();
  krSemi->callback([&] {
    action = [&](Format f) {
      KroneckerShape s = parseShape(kF);
      Json j;
      j["semistable"] = semistableExists(s);
      j["expected_dimension"] = integerJson(expectedDimension(s));
      emit(out, f, j);
    };
  });
  auto* krDec = kr->add_subcommand("decompose", "canonical decomposition of the general module");
  krDec->add_option("S", kF)->required();
  krDec->callback([&] {
    action = [&](Format f) {
      Json list = Json::array();
      for (const auto& [s, m] : decomposeGeneral(parseShape(kF)).summands) {
        Json item = toJson(s);
        item["multiplicity"] = integerJson(m);
        list.push_back(item);
      }
      Json j;
      j["summands"] = list;
      emit(out, f, j);
    };
  });
  auto* krHom = kr->add_subcommand("hom", "generic hom and ext");
  krHom->add_option("F", kF)->required();
  krHom->add_option("E", kE)->required();
  krHom->callback([&] {
    action = [&](Format f) { emit(out, f, homExtJson(generalHomExt(parseShape(kF), parseShape(kE)))); };
  });

  // cohomology
  std::string cV, cW;
  auto* coh = app.add_subcommand("cohomology", "generic cohomology of V (x) W");
  coh->add_option("V", cV)->required();
  coh->add_option("W", cW)->required();
  coh->callback([&] {
    action = [&](Format f) {
      emit(out, f, toJson(genericCohomology(parseIntegralCharacter(cV), parseIntegralCharacter(cW))));
    };
  });

  // regions
  std::string rV, rMuMin = "-2", rMuMax = "2", rDMin = "1/2", rDMax = "4", rDen = "8";
  auto* reg = app.add_subcommand("regions", "CSV region map for a fixed V");
  reg->add_option("V", rV)->required();
  reg->add_option("--mu-min", rMuMin);
  reg->add_option("--mu-max", rMuMax);
  reg->add_option("--delta-min", rDMin);
  reg->add_option("--delta-max", rDMax);
  reg->add_option("--denominator,--grid", rDen, "grid step is 1/denominator");
  reg->callback([&] {
    action = [&](Format) {
      ChernCharacter v = parseIntegralCharacter(rV);
      requireModuli(v);
      regionMap(out, v, parseRational(rMuMin), parseRational(rMuMax), parseRational(rDMin),
                parseRational(rDMax), parseInteger(rDen));
    };
  });

  // gg
  std::string gV, gW;
  auto* gg = app.add_subcommand("gg", "global generation of Hom(W,V) and V (x) W");
  gg->add_option("V", gV)->required();
  gg->add_option("W", gW)->required();
  gg->callback([&] {
    action = [&](Format f) {
      ChernCharacter v = parseIntegralCharacter(gV), w = parseIntegralCharacter(gW);
      Json j;
      j["hom_globally_generated"] = toString(homGloballyGenerated(v, w));
      j["tensor_globally_generated"] = toString(tensorGloballyGenerated(v, w));
      emit(out, f, j);
    };
  });

  // orthogonal
  std::string oV, oW;
  auto* orth = app.add_subcommand("orthogonal", "u+-, and cohomological orthogonality of W");
  orth->add_option("V", oV)->required();
  orth->add_option("W", oW);
  orth->callback([&] {
    action = [&](Format f) {
      ChernCharacter v = parseIntegralCharacter(oV);
      requireModuli(v);
      OrthogonalPair op = orthogonalCharacters(v);
      Json j;
      j["u_plus"] = toJson(op.uPlus);
      j["u_minus"] = toJson(op.uMinus);
      j["lattice_exponent"] = integerJson(orthogonalLatticeExponent(v));
      if (!oW.empty()) {
        ChernCharacter w = parseIntegralCharacter(oW);
        j["cohomologically_orthogonal"] = cohomologicallyOrthogonal(v, w);
        j["sufficient_multiple"] = integerJson(sufficientMultiple(v, w));
      }
      emit(out, f, j);
    };
  });

  // oracle
  auto* orc = app.add_subcommand("oracle", "independent verification engines");
  orc->require_subcommand(1);
  OracleConfig cfg;
  std::string oF, oE, oMu;
  unsigned oOrder = 10;
  auto* orcHom = orc->add_subcommand("kronecker-hom", "finite-field generic hom dimension");
  orcHom->add_option("F", oF)->required();
  orcHom->add_option("E", oE)->required();
  orcHom->add_option("--prime", cfg.prime);
  orcHom->add_option("--trials", cfg.trials);
  orcHom->add_option("--seed", cfg.seed);
  orcHom->callback([&] {
    action = [&](Format f) {
      KroneckerShape fs = parseShape(oF), es = parseShape(oE);
      Json j;
      j["hom"] = kroneckerHomOracle(fs, es, cfg);
      j["general_hom_ext"] = homExtJson(generalHomExt(fs, es));
      emit(out, f, j);
    };
  });
  auto* orcDelta = orc->add_subcommand("delta", "brute-force delta over slopes of bounded order");
  orcDelta->add_option("MU", oMu)->required();
  orcDelta->add_option("--order", oOrder);
  orcDelta->callback([&] {
    action = [&](Format f) {
      Rational mu = parseRational(oMu);
      Json j;
      j["brute_force"] = toString(deltaBruteForce(mu, oOrder));
      j["delta"] = toString(delta(mu));
      emit(out, f, j);
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    action(fmt(Format::Plain));
    return 0;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const IntegralityError& e) {
    err << "integrality error: " << e.what() << "\n";
    return 2;
  } catch (const UnstableCharacterError& e) {
    err << "no stable character: " << e.what() << "\n";
    return 3;
  } catch (const DepthExceededError& e) {
    err << "locate depth exceeded: " << e.what() << "\n";
    return 4;
  } catch (const OracleConfigError& e) {
    err << "oracle configuration: " << e.what() << "\n";
    return 5;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace p2coh::cli
