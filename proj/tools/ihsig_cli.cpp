// Batch front-end: one command per process, JSON report on stdout.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "ihsig/complex.hpp"
#include "ihsig/io/complex_io.hpp"
#include "ihsig/io/report_json.hpp"
#include "ihsig/version.hpp"

using namespace ihsig;

namespace {

struct Options {
  std::string command;
  std::vector<std::string> inputs;
  std::string perversity = "lower-middle";
  std::string coefficients = "Z";
  bool relative = false;
  bool audit = false;
  bool strict = false;
  bool report = false;
  std::string stratification;
  std::string out;
};

struct Outcome {
  Json results;
  bool verdict = true;  // false makes --strict exit with 1
  std::optional<ComplexDocument> document;  // written by --out for constructive commands
};

std::uint64_t fnv1a64(std::uint64_t h, const std::string& bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string resolve(const std::string& path) {
  if (std::filesystem::exists(path)) return path;
  if (std::filesystem::exists(path + ".json")) return path + ".json";
  return path;
}

Field parse_field(const std::string& s) {
  if (s == "Z") return Field::Z;
  if (s == "Q") return Field::Q;
  throw ParseError("--coefficients must be Z or Q, got '" + s + "'");
}

Perversity parse_perversity(const std::string& s) {
  if (auto name = parse_perversity_name(s)) return Perversity::classical(*name);
  if (s.rfind("file:", 0) != 0)
    throw ParseError("unknown perversity '" + s +
                     "' (expected zero, lower-middle, upper-middle, top or file:<path>)");
  const std::string path = s.substr(5);
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const Json::exception& e) {
    throw ParseError("invalid perversity file " + path + ": " + e.what());
  }
  auto read_map = [&](const char* key) {
    std::map<long long, int> out;
    if (!j[key].is_object()) throw ParseError(std::string("'") + key + "' must be an object");
    for (const auto& [k, v] : j[key].items()) {
      if (!v.is_number_integer()) throw ParseError("perversity values must be integers");
      try {
        out[std::stoll(k)] = v.get<int>();
      } catch (const std::exception&) {
        throw ParseError("perversity keys must be integers, got '" + k + "'");
      }
    }
    return out;
  };
  if (j.is_object() && j.contains("strata")) {
    std::map<std::size_t, int> values;
    for (auto [k, v] : read_map("strata")) values[static_cast<std::size_t>(k)] = v;
    return Perversity::general(std::move(values), s);
  }
  if (j.is_object() && j.contains("codimensions")) {
    std::map<int, int> values;
    for (auto [k, v] : read_map("codimensions")) values[static_cast<int>(k)] = v;
    return Perversity::from_codimensions(std::move(values), s);
  }
  throw ParseError("perversity file needs a 'strata' or 'codimensions' object");
}

std::optional<std::vector<StratificationLevel>> levels_for(const Options& o,
                                                           const ComplexDocument& doc) {
  if (!o.stratification.empty()) return load_stratification_file(o.stratification);
  return doc.stratification;
}

Orientation orientation_for(const ComplexDocument& doc) {
  if (doc.orientation) return orientation_from_document(doc.complex, *doc.orientation);
  return orient(doc.complex);
}

Json complex_summary(const SimplicialComplex& k) {
  return {{"name", k.name()},
          {"dimension", k.dim()},
          {"f_vector", k.f_vector()},
          {"euler_characteristic", k.euler_characteristic()}};
}

Json document_json(const ComplexDocument& d) { return Json::parse(save_complex(d)); }

void need_inputs(const Options& o, std::size_t n) {
  if (o.inputs.size() != n)
    throw ParseError("command '" + o.command + "' takes " + std::to_string(n) + " input file" +
                     (n == 1 ? "" : "s") + ", got " + std::to_string(o.inputs.size()));
}

Outcome run_validate(const Options&, const ComplexDocument& doc) {
  const auto& k = doc.complex;
  Outcome out;
  auto closed = check_pseudomanifold(k);
  auto bd = check_boundary_pseudomanifold(k);
  Json r = complex_summary(k);
  r["pseudomanifold"] = closed.ok;
  r["boundary_pseudomanifold"] = bd.ok;
  if (!closed.ok) {
    r["reason"] = closed.reason;
    if (closed.witness) r["witness"] = simplex_to_json(*closed.witness);
  }
  if (!bd.ok) {
    r["boundary_reason"] = bd.reason;
    if (bd.witness) r["boundary_witness"] = simplex_to_json(*bd.witness);
  } else if (!bd.decomposition.empty()) {
    r["boundary_f_vector"] = bd.decomposition.boundary.f_vector();
    r["collar"] = bd.collar;
  }
  r["verdict"] = closed.ok ? "pseudomanifold"
                 : bd.ok   ? "pseudomanifold-with-boundary"
                           : "not-pseudomanifold";
  out.verdict = bd.ok;
  out.results = r;
  return out;
}

Outcome run_orient(const Options&, const ComplexDocument& doc) {
  Outcome out;
  auto verdict = check_boundary_pseudomanifold(doc.complex);
  if (!verdict.ok) throw NotPseudomanifold(verdict.reason);
  auto attempt = try_orient(doc.complex);
  Json r = complex_summary(doc.complex);
  r["orientable"] = attempt.orientation.has_value();
  if (attempt.orientation) {
    auto by_facet = orientation_to_document(doc.complex, *attempt.orientation);
    Json o = Json::object();
    for (auto [i, s] : by_facet) o[std::to_string(i)] = s;
    r["orientation"] = o;
    ComplexDocument d = doc;
    d.orientation = by_facet;
    out.document = d;
  } else {
    Json cyc = Json::array();
    for (const auto& s : attempt.odd_cycle) cyc.push_back(simplex_to_json(s));
    r["odd_cycle"] = cyc;
  }
  out.verdict = attempt.orientation.has_value();
  out.results = r;
  return out;
}

Outcome run_stratify(const Options& o, const ComplexDocument& doc) {
  Outcome out;
  Stratification st = skeletal_stratification(doc.complex, levels_for(o, doc));
  out.results = complex_summary(doc.complex);
  out.results["stratification"] = stratification_json(doc.complex, st);
  ComplexDocument d = doc;
  d.stratification = st.skeleta(doc.complex);
  out.document = d;
  return out;
}

Outcome run_ih(const Options& o, const ComplexDocument& doc) {
  Outcome out;
  Stratification st = skeletal_stratification(doc.complex, levels_for(o, doc));
  Perversity p = parse_perversity(o.perversity);
  IHResult r = ih(doc.complex, st, p, parse_field(o.coefficients), o.relative);
  out.results = complex_summary(doc.complex);
  out.results["perversity"] = p.tag();
  out.results["stratification"] = st.source;
  out.results["ih"] = ih_json(r);
  return out;
}

Outcome run_check(const Options& o, const ComplexDocument& doc, bool witt) {
  Outcome out;
  IPOptions ipo;
  ipo.audit = o.audit;
  ipo.stratification = levels_for(o, doc);
  IPReport r = witt ? check_witt(doc.complex, ipo) : check_ip(doc.complex, ipo);
  out.results = complex_summary(doc.complex);
  out.results["report"] = ip_json(r);
  out.verdict = witt ? r.witt : *r.ip;
  return out;
}

Outcome run_signature(const Options& o, const ComplexDocument& doc) {
  Outcome out;
  DualityOptions dopt;
  dopt.field = parse_field(o.coefficients);
  auto r = signature_report(doc.complex, orientation_for(doc), levels_for(o, doc), dopt);
  out.results = complex_summary(doc.complex);
  out.results["signature"] = r.signature;
  out.results["dimension_rule"] = r.dimension_rule;
  out.results["ip_verdict"] = *r.ip.ip ? "IP" : "not-IP";
  if (r.duality) out.results["duality"] = duality_json(*r.duality);
  return out;
}

Outcome run_symmetric(const Options& o, const ComplexDocument& doc) {
  Outcome out;
  auto levels = levels_for(o, doc);
  FundamentalCycle xi = fundamental_cycle(doc.complex, orientation_for(doc), levels);
  SymmetricComplexData s = symmetric_complex(doc.complex, xi, levels);
  ConditionOptions copt;
  copt.duality.field = parse_field(o.coefficients);
  const bool small = s.square().count(s.dim()) <= copt.duality.quotient_limit;
  copt.chain_map = small;
  copt.kunneth = small;
  ConditionReport r = verify_symmetric_conditions(s, copt);
  Json c = Json::array();
  for (int k = 0; k <= s.dim(); ++k) c.push_back(s.c->rank(k));
  out.results = complex_summary(doc.complex);
  out.results["C_ranks"] = c;
  out.results["D_ambient_f_vector"] = s.square().f_vector();
  out.results["phi_terms"] = s.phi.size();
  out.results["conditions"] = conditions_json(r);
  out.verdict = r.closed && r.phi_allowable && r.phi_invariant && r.nondegenerate() &&
                (!small || (r.chain_map && r.beta_in_d && *r.kunneth_holds));
  return out;
}

Outcome run_construction(const Options& o, const std::vector<ComplexDocument>& docs) {
  Outcome out;
  SimplicialComplex k;
  if (o.command == "product") {
    k = product_staircase(docs[0].complex, docs[1].complex).product;
  } else if (o.command == "suspend") {
    k = build_suspension(docs[0].complex);
  } else {
    k = build_cone(docs[0].complex);
  }
  ComplexDocument d{k, std::nullopt, std::nullopt};
  out.results = complex_summary(k);
  out.results["complex"] = document_json(d);
  out.document = d;
  return out;
}

Json error_json(const std::string& kind, const std::string& message) {
  return {{"kind", kind}, {"message", message}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection homology, IP/Witt verdicts and symmetric signatures"};
  Options o;
  app.add_option("command", o.command,
                 "validate | orient | stratify | ih | check-ip | check-witt | signature | "
                 "symmetric-complex | product | suspend | cone")
      ->required();
  app.add_option("inputs", o.inputs, "complex files (a .json suffix may be omitted)");
  app.add_option("--perversity", o.perversity,
                 "zero | lower-middle | upper-middle | top | file:<path>");
  app.add_option("--coefficients", o.coefficients, "Z | Q");
  app.add_flag("--relative", o.relative, "intersection homology relative to the boundary");
  app.add_flag("--audit", o.audit, "examine every stratum simplex and full link tables");
  app.add_flag("--strict", o.strict, "exit with 1 when the verdict is negative");
  app.add_flag("--report", o.report, "accepted for symmetric-complex; the report is always full");
  app.add_option("--stratification", o.stratification, "file with stratification levels");
  app.add_option("--out", o.out, "output complex (constructive commands) or report file");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    Json j{{"tool_version", IHSIG_VERSION}, {"error", error_json("UsageError", e.what())}};
    std::cout << j.dump(2) << "\n";
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Json report;
  report["tool_version"] = IHSIG_VERSION;
  report["input_digest"] = nullptr;
  report["command"] = o.command;
  report["parameters"] = {{"inputs", o.inputs},
                          {"perversity", o.perversity},
                          {"coefficients", o.coefficients},
                          {"relative", o.relative},
                          {"audit", o.audit},
                          {"strict", o.strict},
                          {"stratification", o.stratification.empty() ? Json() : Json(o.stratification)},
                          {"out", o.out.empty() ? Json() : Json(o.out)}};
  int code = 0;
  try {
    static const std::set<std::string> commands{
        "validate",  "orient",  "stratify", "ih",     "check-ip", "check-witt",
        "signature", "symmetric-complex",   "product", "suspend", "cone"};
    if (!commands.count(o.command)) throw ParseError("unknown command '" + o.command + "'");

    std::uint64_t digest = 0xcbf29ce484222325ULL;
    std::vector<ComplexDocument> docs;
    Json inputs = Json::array();
    for (auto& path : o.inputs) {
      path = resolve(path);
      std::string text = read_text_file(path);
      digest = fnv1a64(digest, text);
      docs.push_back(parse_complex(text));
      inputs.push_back(path);
    }
    for (const std::string& extra :
         {o.stratification, o.perversity.rfind("file:", 0) == 0 ? o.perversity.substr(5) : ""})
      if (!extra.empty()) digest = fnv1a64(digest, read_text_file(extra));
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(digest));
    report["input_digest"] = std::string("fnv1a64:") + hex;
    report["parameters"]["inputs"] = inputs;

    Outcome outcome;
    const std::string& c = o.command;
    if (c == "product") {
      need_inputs(o, 2);
      outcome = run_construction(o, docs);
    } else {
      need_inputs(o, 1);
      const ComplexDocument& doc = docs[0];
      if (c == "validate") outcome = run_validate(o, doc);
      else if (c == "orient") outcome = run_orient(o, doc);
      else if (c == "stratify") outcome = run_stratify(o, doc);
      else if (c == "ih") outcome = run_ih(o, doc);
      else if (c == "check-ip") outcome = run_check(o, doc, false);
      else if (c == "check-witt") outcome = run_check(o, doc, true);
      else if (c == "signature") outcome = run_signature(o, doc);
      else if (c == "symmetric-complex") outcome = run_symmetric(o, doc);
      else outcome = run_construction(o, docs);
    }
    report["results"] = outcome.results;
    if (!o.out.empty() && outcome.document) save_complex_file(*outcome.document, o.out);
    if (o.strict && !outcome.verdict) code = 1;
  } catch (const Error& e) {
    report["error"] = error_json(e.kind(), e.what());
    code = 2;
  } catch (const std::exception& e) {
    report["error"] = error_json("InternalError", e.what());
    code = 2;
  }
  report["timings"] = {
      {"total_seconds",
       std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
  std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!o.out.empty() && code != 2 && report.contains("results") &&
      (o.command == "validate" || o.command == "ih" || o.command == "check-ip" ||
       o.command == "check-witt" || o.command == "signature" ||
       o.command == "symmetric-complex")) {
    std::ofstream f(o.out, std::ios::binary);
    f << text;
  }
  return code;
}
