// effalg: command-line front end. Every subcommand writes one canonical JSON
// report (stdout, or --out) and exits 0 on success, 1 on a refuted or failed
// check, 2 when a budget ran out first, 3 on input errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "effalg/acceptance.hpp"
#include "effalg/colimit.hpp"
#include "effalg/corpus.hpp"
#include "effalg/enumerate.hpp"
#include "effalg/hom_gea.hpp"
#include "effalg/json_io.hpp"
#include "effalg/monoidal.hpp"
#include "effalg/pog.hpp"
#include "effalg/tensor_ea.hpp"
#include "effalg/wehrung.hpp"

using namespace effalg;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUndecided = 2, kInput = 3 };

struct Flags {
  std::size_t budget = 0;  // 0: the operation's default
  int bound = kDefaultCertificationBound;
  std::string variant = "nonneg-cone";
  unsigned jobs = 1;
  std::string out;
  std::size_t samples = 1000;
};

struct Outcome {
  int code = kOk;
  Json report = Json::object();
};

Outcome finish(int code, Json body, const std::string& command) {
  body["version"] = kFormatVersion;
  body["kind"] = "report";
  body["command"] = command;
  body["exit"] = code;
  return {code, std::move(body)};
}

std::string status_name(int code) {
  switch (code) {
    case kOk: return "ok";
    case kFailed: return "failed";
    case kUndecided: return "undecided";
    default: return "input-error";
  }
}

EffectAlgebra load_algebra(const std::string& path) { return algebra_from_json(read_json_file(path), path); }

UnitalPoGroup load_pog(const std::string& path) { return pog_from_json(read_json_file(path), path); }

Json elements_json(const FpAbGroup& g, const std::vector<GroupElement>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(json_detail::put_int_vec(g.invariant_coords(x.coords)));
  return a;
}

Json group_summary(const UnitalPoGroup& a) {
  return Json{{"pog", pog_body(a)}, {"invariant_factors", json_detail::put_int_vec(a.group.invariant_factors())},
              {"torsion", json_detail::put_int_vec(a.group.torsion_factors())}, {"free_rank", a.group.free_rank()},
              {"unit_invariant", json_detail::put_int_vec(a.group.invariant_coords(a.unit.coords))}};
}

wehrung::Variant parse_variant(const std::string& v) {
  if (v == "as-printed") return wehrung::Variant::as_printed;
  if (v == "nonneg-cone") return wehrung::Variant::nonneg_cone;
  throw InputError("--variant", "expected as-printed or nonneg-cone, got \"" + v + "\"");
}

// ---------------------------------------------------------------- subcommands

Outcome cmd_validate(const std::string& path) {
  const Json j = read_json_file(path);
  const std::string kind = document_kind(j);
  if (kind == "effect_algebra") {
    const PartialTable t = table_from_json(j, path);
    const ValidationReport r = validate_effect_algebra(t);
    Json vs = Json::array();
    for (const auto& v : r.violations) vs.push_back(Json{{"axiom", v.axiom}, {"witness", v.witness}});
    return finish(r.valid() ? kOk : kFailed, Json{{"valid", r.valid()}, {"violations", vs}, {"total", r.total}},
                  "validate");
  }
  // other kinds validate while parsing
  if (kind == "group") group_from_json(j, path);
  else if (kind == "pog") pog_from_json(j, path);
  else if (kind == "ea_diagram") ea_diagram_from_json(j, path);
  else if (kind == "pog_diagram") pog_diagram_from_json(j, path);
  else if (kind == "tensor_candidate") tensor_candidate_from_json(j, path);
  else throw InputError(path + ".kind", "unknown kind \"" + kind + "\"");
  return finish(kOk, Json{{"valid", true}, {"document_kind", kind}}, "validate");
}

Outcome cmd_enumerate(int size, const std::string& corpus_dir, const Flags& fl) {
  if (size < 1 || size > 12) throw InputError("size", "expected 1..12");
  if (!corpus_dir.empty()) {
    const CorpusWrite w = write_corpus(corpus_dir, size);
    return finish(w.complete ? kOk : kUndecided, Json{{"corpus", corpus_dir}, {"files", w.files}, {"complete", w.complete}},
                  "enumerate");
  }
  Json per = Json::array();
  bool complete = true;
  for (int n = 1; n <= size; ++n) {
    const EnumerationResult en =
        fl.budget ? enumerate_effect_algebras(n, fl.budget) : enumerate_effect_algebras(n);
    complete = complete && en.complete;
    Json algs = Json::array();
    for (const auto& e : en.algebras) algs.push_back(algebra_body(e));
    per.push_back(Json{{"size", n}, {"count", en.algebras.size()}, {"complete", en.complete}, {"algebras", algs}});
  }
  return finish(complete ? kOk : kUndecided, Json{{"sizes", per}}, "enumerate");
}

Outcome cmd_homs(const std::string& ep, const std::string& fp, const std::string& kind) {
  const EffectAlgebra e = load_algebra(ep), f = load_algebra(fp);
  if (kind != "ea" && kind != "gea") throw InputError("--kind", "expected ea or gea");
  Json body;
  if (kind == "ea") {
    Json maps = Json::array();
    for (const auto& m : enumerate_morphisms(e, f, MorphismKind::ea)) maps.push_back(m.map);
    body = Json{{"kind_of_hom", "ea"}, {"count", maps.size()}, {"maps", maps}};
  } else {
    const HomGEA h = build_hom_gea(e, f);
    const ValidationReport v = validate_generalized_effect_algebra(h.table);
    body = Json{{"kind_of_hom", "gea"}, {"count", h.size()}, {"maps", h.maps}, {"table", table_body(h.table)["sum"]},
                {"is_gea", v.valid()}};
    if (!v.valid()) return finish(kFailed, body, "homs");
  }
  return finish(kOk, body, "homs");
}

Outcome cmd_gr(const std::string& ep) {
  const EffectAlgebra e = load_algebra(ep);
  const UniversalGroup gr = gr_universal_group(e);
  const bool certified = acceptance::gr_smith_certified(gr);
  Json body = group_summary(gr.pog);
  body["eta"] = elements_json(gr.pog.group, gr.eta);
  body["smith_certified"] = certified;
  return finish(certified ? kOk : kFailed, body, "gr");
}

Outcome cmd_gamma(const std::string& ap, const Flags& fl) {
  const UnitalPoGroup a = load_pog(ap);
  const GammaResult g = gamma_interval(a, fl.budget ? fl.budget : kDefaultGammaBudget);
  Json body{{"status", g.status == GammaStatus::ok ? "ok" : g.status == GammaStatus::invalid ? "invalid" : "undecided"},
            {"note", g.note}, {"elements", elements_json(a.group, g.elements)}};
  if (g.algebra) body["algebra"] = algebra_body(*g.algebra);
  const int code = g.status == GammaStatus::ok ? kOk : g.status == GammaStatus::invalid ? kFailed : kUndecided;
  return finish(code, body, "gamma");
}

Outcome cmd_tensor_pog(const std::string& ap, const std::string& bp) {
  const PogTensor t = tensor_pog(load_pog(ap), load_pog(bp));
  const bool strict = cone_is_strict(t.pog);
  Json body = group_summary(t.pog);
  body["cone_strict"] = strict;
  return finish(kOk, body, "tensor-pog");
}

Outcome cmd_tensor_ea(const std::string& ep, const std::string& fp, const Flags& fl) {
  const TensorSaturation t =
      saturate_tensor(load_algebra(ep), load_algebra(fp), fl.budget ? fl.budget : kDefaultSaturationBudget);
  Json body{{"transcript", t.saturation.transcript}, {"classes", t.saturation.classes}};
  if (!t.candidate) {
    const bool invalid = t.saturation.status == SaturationStatus::invalid;
    body["result"] = invalid ? "invalid" : "budget-exhausted";
    return finish(invalid ? kFailed : kUndecided, body, "tensor-ea");
  }
  body["result"] = "ok";
  body["candidate"] = to_json(*t.candidate);
  return finish(kOk, body, "tensor-ea");
}

Outcome cmd_certify(const std::string& cp, const Flags& fl) {
  const TensorCandidate c = tensor_candidate_from_json(read_json_file(cp), cp);
  const CertificationReport r = certify_universal(c, fl.bound, fl.jobs);
  Json body{{"bound", r.bound}, {"targets", r.targets}, {"bimorphisms", r.bimorphisms}, {"note", r.note},
            {"ungenerated", r.ungenerated}};
  if (r.certified()) {
    const bool full = r.bound == fl.bound;
    body["verdict"] = "certified-to-bound " + std::to_string(r.bound);
    return finish(full ? kOk : kUndecided, body, "certify");
  }
  body["verdict"] = "refuted";
  body["replayed"] = replay_refutation(c, r);
  if (r.witness_target) {
    body["witness_target"] = algebra_body(*r.witness_target);
    body["witness_bimorphism"] = r.witness_bimorphism;
    body["witness_factorizations"] = r.witness_factorizations;
  }
  return finish(kFailed, body, "certify");
}

Outcome cmd_colimit(const std::string& dp, const std::string& tensor_with, const Flags& fl) {
  const Json j = read_json_file(dp);
  const std::string kind = document_kind(j);
  const std::size_t budget = fl.budget ? fl.budget : kDefaultSaturationBudget;
  if (kind == "pog_diagram") {
    const PogDiagramFile d = pog_diagram_from_json(j, dp);
    const PogColimit c = colimit_pog(d.diagram);
    Json legs = Json::array();
    for (const auto& l : c.legs) legs.push_back(hom_body(l));
    Json body = group_summary(c.apex);
    body["legs"] = legs;
    body["cocone_verified"] = c.cocone_verified;
    body["complete"] = c.complete;
    body["quotiented"] = c.quotiented;
    return finish(!c.cocone_verified ? kFailed : c.complete ? kOk : kUndecided, body, "colimit");
  }
  if (kind != "ea_diagram") throw InputError(dp + ".kind", "expected ea_diagram or pog_diagram");
  const EaDiagramFile d = ea_diagram_from_json(j, dp);
  if (!tensor_with.empty()) {
    const ComparisonReport c = canonical_comparison(load_algebra(tensor_with), d.diagram, fl.bound, budget);
    Json body = acceptance::comparison_json(c);
    body["connected"] = is_connected(d.diagram.category);
    const int code = c.status == ComparisonStatus::iso ? kOk : c.status == ComparisonStatus::not_iso ? kFailed : kUndecided;
    return finish(code, body, "colimit");
  }
  const EaColimit c = colimit_ea(d.diagram, budget);
  Json body{{"transcript", c.transcript}, {"cocone_verified", c.cocone_verified}};
  if (c.apex) {
    body["apex"] = algebra_body(*c.apex);
    body["legs"] = c.legs;
  }
  const int code = c.status == SaturationStatus::budget_exhausted ? kUndecided
                   : c.status == SaturationStatus::ok && c.cocone_verified ? kOk
                                                                           : kFailed;
  return finish(code, body, "colimit");
}

Outcome cmd_verify_monoidal(const std::string& ep, const std::string& fp, const std::string& gp, const Flags& fl) {
  const EffectAlgebra e = load_algebra(ep), f = load_algebra(fp);
  const EffectAlgebra g = gp.empty() ? EffectAlgebra::two_element() : load_algebra(gp);
  const StrongMonoidalReport s = verify_strong_monoidality(e, f, g, fl.bound);
  MonoidalReport all = s.combined();
  if (const auto m = gamma_map(e, f, fl.bound)) {
    all.check("candidate certified to bound " + std::to_string(fl.bound), m->certification.certified());
    all.absorb(verify_conjugacy_square(*m, fl.budget ? fl.budget : kDefaultGammaBudget), "conjugacy: ");
  }
  Json body = acceptance::monoidal_json(all);
  return finish(all.ok() ? kOk : all.undecided && all.passed ? kUndecided : kFailed, body, "verify-monoidal");
}

Outcome cmd_verify_adjunction(const std::string& ep, const std::string& bp, const std::string& hp, const Flags& fl) {
  const EffectAlgebra e = load_algebra(ep);
  const UnitalPoGroup b = load_pog(bp);
  const UniversalGroup gr = gr_universal_group(e);
  std::vector<IntVec> values(static_cast<std::size_t>(e.size()), IntVec(b.group.gens()));
  if (!hp.empty()) {
    // {"version", "kind": "values", "values": [[...] per element]}: images of [x] in B
    const Json j = read_json_file(hp);
    json_detail::expect_object(j, hp, {"version", "kind", "values"});
    json_detail::check_header(j, hp, "values");
    const Json& vs = json_detail::array_at(j.at("values"), hp + ".values");
    if (vs.size() != values.size()) throw InputError(hp + ".values", "one image per element expected");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      values[i] = json_detail::get_int_vec(vs[i], hp + ".values[" + std::to_string(i) + "]");
      if (values[i].size() != b.group.gens()) throw InputError(hp + ".values[" + std::to_string(i) + "]", "width differs from gens");
    }
  }
  if (!values_additive(e, b.group, values)) throw InputError(hp, "values are not additive on E");
  const GroupHom h = hom_from_values(gr, b.group, values);
  const AdjunctionIsoReport r = verify_under_adjunction_iso(e, b, h, fl.budget ? fl.budget : kDefaultGammaBudget);
  Json body = acceptance::monoidal_json(r.report);
  body["left_size"] = r.left_size;
  body["right_size"] = r.right_size;
  body["bijection"] = r.bijection;
  return finish(r.ok() ? kOk : r.report.undecided && r.report.passed ? kUndecided : kFailed, body, "verify-adjunction");
}

Outcome cmd_rdp(const std::string& ep) {
  const RdpResult r = check_rdp(load_algebra(ep));
  Json body{{"rdp", r.pass()}, {"decomposition_form", r.decomposition_form}, {"refinement_form", r.refinement_form},
            {"decomposition_witness", r.decomposition_witness}, {"refinement_witness", r.refinement_witness}};
  return finish(r.pass() ? kOk : kFailed, body, "rdp");
}

Outcome cmd_interpolation(const std::string& ap, const std::string& qp, const Flags& fl) {
  const UnitalPoGroup a = load_pog(ap);
  const Json j = read_json_file(qp);
  json_detail::expect_object(j, qp, {"version", "kind", "a1", "a2", "b1", "b2"});
  json_detail::check_header(j, qp, "quadruple");
  auto el = [&](const char* k) {
    const IntVec v = json_detail::get_int_vec(j.at(k), qp + "." + k);
    if (v.size() != a.group.gens()) throw InputError(qp + "." + k, "width differs from gens");
    return a.element(v);
  };
  const InterpolationResult r =
      check_interpolation(a, el("a1"), el("a2"), el("b1"), el("b2"), fl.budget ? fl.budget : kDefaultGammaBudget);
  const char* st = r.status == InterpolationStatus::found               ? "found"
                   : r.status == InterpolationStatus::refuted           ? "refuted"
                   : r.status == InterpolationStatus::precondition_failed ? "precondition-failed"
                                                                        : "none-within-bound";
  Json body{{"status", st}, {"examined", r.examined}, {"offending_pair", r.offending_pair}};
  if (r.interpolant) body["interpolant"] = json_detail::put_int_vec(a.group.invariant_coords(r.interpolant->coords));
  const int code = r.status == InterpolationStatus::found ? kOk
                   : r.status == InterpolationStatus::none_within_bound ? kUndecided
                   : r.status == InterpolationStatus::precondition_failed ? kInput
                                                                          : kFailed;
  return finish(code, body, "interpolation");
}

Outcome cmd_wehrung(const Flags& fl, bool bound_given) {
  using namespace wehrung;
  const Variant var = parse_variant(fl.variant);
  const Model m = build_wehrung(var);
  Json checks = Json::array();
  for (const auto& c : m.checks) checks.push_back(Json{{"name", c.name}, {"holds", c.holds}});
  const SamplingReport sa = sample_interpolation(var, Side::A, fl.samples);
  const SamplingReport sb = sample_interpolation(var, Side::B, fl.samples);
  const FailureSearchReport s = interpolation_failure_search(var, bound_given ? fl.bound : 4, fl.jobs);
  Json witness = nullptr;
  if (s.witness) {
    witness = Json::array();
    for (const auto& x : *s.witness)
      witness.push_back(Json{{"qq", x.qq.get_str()}, {"qh", x.qh.get_str()},
                             {"gq", {x.gq[0].get_str(), x.gq[1].get_str(), x.gq[2].get_str()}},
                             {"gh", json_detail::put_int_vec(x.gh)}});
  }
  Json body{{"variant", variant_name(var)},
            {"model_valid", m.valid()},
            {"cone_is_subgroup", m.cone_is_subgroup},
            {"checks", checks},
            {"sampling", Json{{"A", Json{{"samples", sa.samples}, {"interpolated", sa.interpolated}}},
                              {"B", Json{{"samples", sb.samples}, {"interpolated", sb.interpolated}}}}},
            {"failure_search", Json{{"bound", s.bound}, {"grid", s.grid_size}, {"quadruples", s.quadruples},
                                    {"interpolated", s.interpolated}, {"witness", witness},
                                    {"transcript", s.transcript}}}};
  return finish(m.valid() && sa.ok() && sb.ok() ? kOk : kFailed, body, "wehrung");
}

Outcome cmd_suite(const std::string& data, const std::string& corpus, const std::vector<int>& only, const Flags& fl) {
  acceptance::SuiteOptions o;
  o.data_dir = data;
  o.corpus_dir = corpus;
  o.jobs = fl.jobs;
  o.wehrung_samples = fl.samples;
  const acceptance::SuiteContext ctx = acceptance::load_context(o);
  const auto rs = acceptance::run_suite(ctx, only, [](const acceptance::CriterionResult& r) {
    std::cerr << acceptance::verdict_line(r) << std::endl;
  });
  Json body = acceptance::suite_report(rs);
  body.erase("version");
  body.erase("kind");
  return finish(body["all_passed"].get<bool>() ? kOk : kFailed, body, "suite");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"effalg: finite effect algebras, universal groups and tensor products"};
  app.require_subcommand(1);
  Flags fl;
  bool bound_given = false;
  auto common = [&](CLI::App* s) {
    s->add_option("--budget", fl.budget, "search budget (0: default)");
    s->add_option("--bound", fl.bound, "size or grid bound")->each([&](const std::string&) { bound_given = true; });
    s->add_option("--jobs", fl.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    s->add_option("--out", fl.out, "write the report here instead of stdout");
  };
  std::string a1, a2, a3, kind = "ea", with, dir;
  int size = 6;
  std::vector<int> only;
  std::function<Outcome()> run;

  auto* validate = app.add_subcommand("validate", "parse and validate a document");
  validate->add_option("file", a1)->required();
  common(validate);
  validate->callback([&] { run = [&] { return cmd_validate(a1); }; });

  auto* enumerate = app.add_subcommand("enumerate", "effect algebras up to isomorphism");
  enumerate->add_option("size", size, "largest size")->required();
  enumerate->add_option("--corpus", dir, "write the corpus files and manifest into this directory");
  common(enumerate);
  enumerate->callback([&] { run = [&] { return cmd_enumerate(size, dir, fl); }; });

  auto* homs = app.add_subcommand("homs", "ea-homs or the generalized effect algebra [E,F]");
  homs->add_option("E", a1)->required();
  homs->add_option("F", a2)->required();
  homs->add_option("--kind", kind, "ea or gea");
  common(homs);
  homs->callback([&] { run = [&] { return cmd_homs(a1, a2, kind); }; });

  auto* gr = app.add_subcommand("gr", "universal group of an effect algebra");
  gr->add_option("E", a1)->required();
  common(gr);
  gr->callback([&] { run = [&] { return cmd_gr(a1); }; });

  auto* gamma = app.add_subcommand("gamma", "the interval [0,u] of a unital po-group");
  gamma->add_option("A", a1)->required();
  common(gamma);
  gamma->callback([&] { run = [&] { return cmd_gamma(a1, fl); }; });

  auto* tpog = app.add_subcommand("tensor-pog", "tensor product of unital po-groups");
  tpog->add_option("A", a1)->required();
  tpog->add_option("B", a2)->required();
  common(tpog);
  tpog->callback([&] { run = [&] { return cmd_tensor_pog(a1, a2); }; });

  auto* tea = app.add_subcommand("tensor-ea", "tensor product candidate by saturation");
  tea->add_option("E", a1)->required();
  tea->add_option("F", a2)->required();
  common(tea);
  tea->callback([&] { run = [&] { return cmd_tensor_ea(a1, a2, fl); }; });

  auto* cert = app.add_subcommand("certify", "bounded universality check of a tensor candidate");
  cert->add_option("candidate", a1)->required();
  common(cert);
  cert->callback([&] { run = [&] { return cmd_certify(a1, fl); }; });

  auto* colim = app.add_subcommand("colimit", "colimit of an EA or POG_u diagram");
  colim->add_option("diagram", a1)->required();
  colim->add_option("--tensor-with", with, "compare colim (E (x) F) with E (x) colim F for this E");
  common(colim);
  colim->callback([&] {
    if (colim->get_option("--bound")->count() == 0) fl.bound = 0;
    run = [&] { return cmd_colimit(a1, with, fl); };
  });

  auto* vm = app.add_subcommand("verify-monoidal", "gamma, unitality, hexagon and conjugacy checks");
  vm->add_option("E", a1)->required();
  vm->add_option("F", a2)->required();
  vm->add_option("G", a3, "third factor for the hexagon (default 2)");
  common(vm);
  vm->callback([&] { run = [&] { return cmd_verify_monoidal(a1, a2, a3, fl); }; });

  auto* va = app.add_subcommand("verify-adjunction", "[E, Gamma(B,v)]_hbar against Gamma([Gr E, B], h)");
  va->add_option("E", a1)->required();
  va->add_option("B", a2)->required();
  va->add_option("--values", a3, "images of [x] in B (default: h = 0)");
  common(va);
  va->callback([&] { run = [&] { return cmd_verify_adjunction(a1, a2, a3, fl); }; });

  auto* rdp = app.add_subcommand("rdp", "Riesz decomposition property");
  rdp->add_option("E", a1)->required();
  common(rdp);
  rdp->callback([&] { run = [&] { return cmd_rdp(a1); }; });

  auto* interp = app.add_subcommand("interpolation", "interpolant for a quadruple in a unital po-group");
  interp->add_option("A", a1)->required();
  interp->add_option("quadruple", a2)->required();
  common(interp);
  interp->callback([&] { run = [&] { return cmd_interpolation(a1, a2, fl); }; });

  auto* weh = app.add_subcommand("wehrung", "lexicographic groups A, B and interpolation in A (x) B");
  weh->add_option("--variant", fl.variant, "as-printed or nonneg-cone");
  weh->add_option("--samples", fl.samples, "interpolation samples per group");
  common(weh);
  weh->callback([&] { run = [&] { return cmd_wehrung(fl, bound_given); }; });

  auto* suite = app.add_subcommand("suite", "the acceptance battery");
  std::string data_dir = EFFALG_DATA_DIR, corpus_dir;
  suite->add_option("--data", data_dir, "bundled data directory");
  suite->add_option("--corpus", corpus_dir, "corpus directory (default: enumerate in memory)");
  suite->add_option("--only", only, "criterion ids");
  suite->add_option("--samples", fl.samples, "Wehrung interpolation samples");
  common(suite);
  suite->callback([&] { run = [&] { return cmd_suite(data_dir, corpus_dir, only, fl); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  Outcome o;
  try {
    o = run();
  } catch (const InputError& e) {
    o = finish(kInput, Json{{"error", e.what()}, {"path", e.path()}}, "error");
  } catch (const InvalidAlgebra& e) {
    o = finish(kInput, Json{{"error", e.what()}}, "error");
  } catch (const std::invalid_argument& e) {
    o = finish(kInput, Json{{"error", e.what()}}, "error");
  }
  o.report["status"] = status_name(o.code);
  const std::string text = canonical_dump(o.report);
  if (fl.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(fl.out, std::ios::binary);
    if (!f) {
      std::cerr << fl.out << ": cannot write\n";
      return kInput;
    }
    f << text;
  }
  if (o.code == kInput) std::cerr << o.report.value("error", std::string("input error")) << "\n";
  return o.code;
}
