// Batch front door: build instances into bundles, re-verify bundles, emit
// canonical-element and braiding matrices, measure Yang-Baxter defects.
//
// Exit codes: 0 = everything attempted passed, 1 = a machine check failed
// (the report, when requested, is still written), 2 = unusable input or a
// truncation budget too small for the request (the tool refuses rather than
// under-verify). All outputs are deterministic: identical inputs produce
// byte-identical files.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhopf/bundle.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/module_io.hpp"

namespace {

using namespace qhopf;

Field field_from_cli(const std::string& s) {
  if (s == "rational") return Field::rational();
  if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos)
    return Field::prime(std::stoull(s));
  throw input_error("--field wants \"rational\" or an odd prime, got \"" + s + "\"");
}

uint32_t resolve_group_element(const FiniteGroup& g, const std::string& s) {
  if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
    const unsigned long e = std::stoul(s);
    if (e < g.order()) return uint32_t(e);
    throw input_error("group element index " + s + " out of range");
  }
  for (uint32_t e = 0; e < g.order(); ++e)
    if (g.name(e) == s) return e;
  throw input_error("no group element named \"" + s + "\"");
}

// "builtin:trivial" | "builtin:conjugation" | "builtin:class:<element>" | path.
FiniteCycleModule resolve_module(const LoadedBundle& b, const std::string& spec) {
  const GradedHopfAlgebra& d = b.inst.dcp.d();
  if (spec.rfind("builtin:", 0) != 0) return load_module_file(d, spec);
  const std::string which = spec.substr(8);
  if (which == "trivial") return trivial_module(d, "trivial");
  if (which == "conjugation")
    return conjugation_module(b.inst.dcp, b.spec.group, "conjugation");
  if (which.rfind("class:", 0) == 0) {
    const uint32_t member = resolve_group_element(b.spec.group, which.substr(6));
    return class_module(b.inst.dcp, b.spec.group, member,
                        "class-" + b.spec.group.name(b.spec.group.class_rep(member)));
  }
  throw input_error("unknown builtin module \"" + spec +
                    "\" (trivial, conjugation, class:<element>)");
}

void require_level_stored(const LoadedBundle& b, uint32_t level) {
  if (level > b.inst.r.max_level())
    throw input_error("bundle stores levels 0.." + std::to_string(b.inst.r.max_level()) +
                      ", requested " + std::to_string(level));
}

void require_budget(const LoadedBundle& b, uint32_t needed, const std::string& what) {
  if (b.spec.max_degree < needed)
    throw budget_error("refusing to under-verify: " + what + " needs degree budget >= " +
                       std::to_string(needed) + ", bundle has " +
                       std::to_string(b.spec.max_degree));
}

Json d_labels_json(const GradedHopfAlgebra& d) {
  Json out = Json::array();
  for (uint32_t deg = 0; deg <= d.max_degree(); ++deg) {
    Json row = Json::array();
    for (uint32_t o = 0; o < d.dim(deg); ++o) row.push_back(d.label(BasisIndex{deg, o}));
    out.push_back(std::move(row));
  }
  return out;
}

int finish(const Report& rep, const std::optional<std::string>& out) {
  if (out) write_json_file(*out, report_json(rep));
  std::cout << rep.summary();
  return rep.all_passed() ? 0 : 1;
}

int run_build(const std::string& input, const std::string& out,
              const std::optional<uint32_t>& max_degree, const std::optional<uint32_t>& level,
              const std::optional<std::string>& field, const std::optional<std::string>& variant,
              const std::optional<std::string>& r_unit, const std::optional<std::string>& name) {
  // Overrides land in the document before parsing, so that everything the
  // parse derives from them (preset characters in particular, whose scalars
  // live in the field) is consistent.
  Json j = load_json_file(input);
  if (field) j["field"] = field_json(field_from_cli(*field));
  if (max_degree) j["max_degree"] = *max_degree;
  if (level) j["level"] = *level;
  if (variant) j["variant"] = *variant;
  if (r_unit) j["r_unit"] = *r_unit;
  if (name) j["name"] = *name;
  const InstanceSpec spec = instance_from_json(j, input);
  const LqtInstance inst = build_instance(spec);
  write_json_file(out, bundle_json(spec, inst));
  const GradedHopfAlgebra& d = inst.dcp.d();
  std::cout << spec.name << ": " << double_kind_name(spec.kind) << ", "
            << r_unit_variant_name(spec.r_unit) << " padding, budget " << spec.max_degree
            << ", levels 0.." << spec.level << ", total dimension " << d.total_dim() << "\n";
  return 0;
}

int run_verify(const std::string& input, const std::string& what,
               const std::optional<uint32_t>& level, const std::optional<std::string>& out) {
  const LoadedBundle b = load_bundle_file(input);
  const uint32_t n = level.value_or(b.spec.level);
  Report rep;
  rep.subject = b.spec.name;
  rep.merge(verify_bundle_tables(b));
  if (what == "hopf") {
    Report ra = verify_hopf(b.inst.dcp.a());
    Report rh = verify_hopf(b.inst.dcp.h());
    Report rd = verify_hopf(b.inst.dcp.d());
    ra.subject = "a";
    rh.subject = "h";
    rd.subject = "d";
    rep.merge(ra);
    rep.merge(rh);
    rep.merge(rd);
  } else if (what == "pairing") {
    Report rp = verify_skew_pairing(b.inst.dcp.tau());
    rp.subject = "tau";
    rep.merge(rp);
  } else if (what == "duality") {
    Report rp = verify_duality(b.inst.dcp.tau(), b.spec.max_degree);
    rp.subject = "tau";
    rep.merge(rp);
  } else if (what == "copairing") {
    require_level_stored(b, n);
    require_budget(b, 2 * n, "copairing level " + std::to_string(n));
    Report rp = verify_copairing(b.inst.p, b.inst.dcp.tau(), n);
    rp.subject = "cp";
    rep.merge(rp);
  } else if (what == "lqt") {
    require_level_stored(b, n);
    require_budget(b, 2 * n, "level " + std::to_string(n));
    Report rp = verify_lqt(b.inst.r, n);
    rp.subject = "lqt";
    rep.merge(rp);
  } else {
    throw input_error("--what must be hopf, pairing, copairing, lqt, or duality");
  }
  return finish(rep, out);
}

int run_emit_r(const std::string& input, const std::optional<uint32_t>& level,
               const std::string& out, bool inverse) {
  const LoadedBundle b = load_bundle_file(input);
  const uint32_t n = level.value_or(b.inst.r.max_level());
  require_level_stored(b, n);
  Json doc{{"format", "qhopf-r-v1"},
           {"bundle", b.spec.name},
           {"level", n},
           {"labels", d_labels_json(b.inst.dcp.d())},
           {"r", tensor_json(b.inst.r.r(n))}};
  if (inverse) doc["r_inverse"] = tensor_json(b.inst.r.r_inverse(n));
  write_json_file(out, doc);
  std::cout << "level " << n << ": " << b.inst.r.r(n).size() << " terms\n";
  return 0;
}

int run_braid(const std::string& input, const std::vector<std::string>& module_specs,
              const std::optional<uint32_t>& level, const std::string& out, bool yd,
              const std::optional<std::string>& save_dir) {
  const LoadedBundle b = load_bundle_file(input);
  if (module_specs.empty() || module_specs.size() > 2)
    throw input_error("--module wants one or two certificates");
  std::vector<FiniteCycleModule> mods;
  for (const std::string& s : module_specs) mods.push_back(resolve_module(b, s));
  if (save_dir) {
    std::filesystem::create_directories(*save_dir);
    for (const FiniteCycleModule& m : mods)
      write_json_file(*save_dir + "/" + m.name + ".json", module_json(m));
  }

  Report rep;
  rep.subject = b.spec.name;
  const GradedHopfAlgebra& d = b.inst.dcp.d();
  for (const FiniteCycleModule& m : mods) rep.merge(check_module(m, d));
  Json doc{{"format", "qhopf-braid-v1"}, {"bundle", b.spec.name}};
  if (!rep.all_passed()) {
    doc["report"] = report_json(rep);
    write_json_file(out, doc);
    std::cout << rep.summary();
    return 1;
  }

  Json ops = Json::array();
  if (mods.size() == 1) {
    const BraidingOperator c = braiding_matrix(b.inst.r, mods[0], mods[0], level);
    ops.push_back(braiding_json(c, mods[0], mods[0]));
  } else {
    const BraidingOperator c01 = braiding_matrix(b.inst.r, mods[0], mods[1], level);
    const BraidingOperator c10 = braiding_matrix(b.inst.r, mods[1], mods[0], level);
    ops.push_back(braiding_json(c01, mods[0], mods[1]));
    ops.push_back(braiding_json(c10, mods[1], mods[0]));
  }
  doc["operators"] = std::move(ops);

  // Braid relation and both hexagons over every triple drawn from the
  // loaded modules.
  for (const FiniteCycleModule& u : mods)
    for (const FiniteCycleModule& v : mods)
      for (const FiniteCycleModule& w : mods) {
        rep.merge(check_braid_relation(braiding_matrix(b.inst.r, u, v, level),
                                       braiding_matrix(b.inst.r, u, w, level),
                                       braiding_matrix(b.inst.r, v, w, level)));
        rep.merge(hexagon_check(b.inst.r, u, v, w));
      }

  if (yd) {
    Json yds = Json::array();
    for (const FiniteCycleModule& m : mods) {
      const YdStructure y = yd_structure(b.inst.r, m);
      rep.merge(verify_yd(b.inst.r, y));
      yds.push_back(yd_json(y));
    }
    doc["yd"] = std::move(yds);
  }
  doc["report"] = report_json(rep);
  write_json_file(out, doc);
  std::cout << rep.summary();
  return rep.all_passed() ? 0 : 1;
}

int run_defect(const std::string& input, const std::optional<uint32_t>& level,
               const std::optional<std::string>& out, bool expect_zero) {
  const LoadedBundle b = load_bundle_file(input);
  const uint32_t n = level.value_or(b.inst.r.max_level());
  require_level_stored(b, n);
  require_budget(b, 3 * n, "the Yang-Baxter defect at level " + std::to_string(n));
  const SparseTensor defect = qybe_defect(b.inst.r, n);
  Json doc{{"format", "qhopf-defect-v1"},
           {"bundle", b.spec.name},
           {"level", n},
           {"zero", defect.is_zero()}};
  if (const auto low = lowest_nonzero_total_degree(defect)) doc["lowest_total_degree"] = *low;
  doc["defect"] = tensor_json(defect);
  if (out) write_json_file(*out, doc);
  if (defect.is_zero()) {
    std::cout << "level " << n << ": defect is zero\n";
  } else {
    std::cout << "level " << n << ": defect has " << defect.size()
              << " terms, lowest total degree " << *lowest_nonzero_total_degree(defect) << "\n";
  }
  return expect_zero && !defect.is_zero() ? 1 : 0;
}

int run_report(const std::string& input, const std::optional<uint32_t>& level,
               const std::optional<std::string>& out) {
  const LoadedBundle b = load_bundle_file(input);
  const uint32_t n = level.value_or(b.spec.level);
  require_level_stored(b, n);
  require_budget(b, 2 * n, "the full battery at level " + std::to_string(n));

  Report rep;
  rep.subject = b.spec.name;
  rep.info["variant"] = double_kind_name(b.spec.kind);
  rep.info["r_unit"] = r_unit_variant_name(b.spec.r_unit);
  rep.info["level"] = std::to_string(n);
  for (uint32_t deg = 0; deg <= b.spec.max_degree; ++deg)
    rep.info["dim.d." + std::to_string(deg)] = std::to_string(b.inst.dcp.d().dim(deg));
  rep.merge(verify_bundle_tables(b));
  Report ra = verify_hopf(b.inst.dcp.a());
  Report rh = verify_hopf(b.inst.dcp.h());
  Report rd = verify_hopf(b.inst.dcp.d());
  ra.subject = "a";
  rh.subject = "h";
  rd.subject = "d";
  rep.merge(ra);
  rep.merge(rh);
  rep.merge(rd);
  Report rt = verify_duality(b.inst.dcp.tau(), b.spec.max_degree);
  rt.subject = "tau";
  rep.merge(rt);
  Report rl = verify_lqt(b.inst.r, n);
  rl.subject = "lqt";
  rep.merge(rl);

  // Arbitration between the two padding conventions: rebuild the tower the
  // other way and record which one the axioms accept. Informational only —
  // the exit code reflects the bundle's own variant.
  const auto verdict_of = [](const Report& r) -> std::string {
    for (const CheckResult& c : r.checks)
      if (c.status == CheckStatus::Fail) return "fail(" + c.name + ")";
    return "pass";
  };
  const RUnitVariant other =
      b.spec.r_unit == RUnitVariant::Unit ? RUnitVariant::Vertex : RUnitVariant::Unit;
  const LqtStructure other_r = build_r(b.inst.dcp, b.inst.p, other);
  rep.info["arbitration." + r_unit_variant_name(b.spec.r_unit)] = verdict_of(rl);
  rep.info["arbitration." + r_unit_variant_name(other)] = verdict_of(verify_lqt(other_r, n));
  return finish(rep, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact kernel for quiver-built quasitriangular structures"};
  app.require_subcommand(1);
  uint32_t threads = 1;
  app.add_option("--threads", threads,
                 "reserved; verification sweeps are single-threaded and deterministic")
      ->check(CLI::PositiveNumber);

  std::string input, out_req, what;
  std::optional<std::string> out_opt, field, variant, r_unit, name, save_dir;
  std::optional<uint32_t> max_degree, level;
  std::vector<std::string> modules;
  bool inverse = false, yd = false, expect_zero = false;

  CLI::App* build = app.add_subcommand("build", "construct an instance and write its bundle");
  build->fallthrough();
  build->add_option("--input", input, "instance description (qhopf-instance-v1)")->required();
  build->add_option("--out", out_req, "bundle path to write")->required();
  build->add_option("--max-degree", max_degree, "override the truncation budget");
  build->add_option("--level", level, "override the level cap");
  build->add_option("--field", field, "override the field: rational | <odd prime>");
  build->add_option("--variant", variant, "override: path-double | semipath-double");
  build->add_option("--r-unit-variant", r_unit, "override: unit | vertex");
  build->add_option("--name", name, "override the instance name");

  CLI::App* verify = app.add_subcommand("verify", "re-run a verifier suite on a bundle");
  verify->fallthrough();
  verify->add_option("--input", input, "bundle path")->required();
  verify->add_option("--what", what, "hopf | pairing | copairing | lqt | duality")->required();
  verify->add_option("--level", level, "level to verify (default: the bundle's)");
  verify->add_option("--out", out_opt, "report path to write");

  CLI::App* emitr = app.add_subcommand("emit-r", "write one canonical-element level");
  emitr->fallthrough();
  emitr->add_option("--input", input, "bundle path")->required();
  emitr->add_option("--level", level, "level to emit (default: highest stored)");
  emitr->add_option("--out", out_req, "matrix document to write")->required();
  emitr->add_flag("--inverse", inverse, "also emit the antipode-side inverse");

  CLI::App* braid = app.add_subcommand("braid", "emit braiding operators on module certificates");
  braid->fallthrough();
  braid->add_option("--input", input, "bundle path")->required();
  braid
      ->add_option("--module", modules,
                   "certificate file or builtin:{trivial,conjugation,class:<element>} (1-2 times)")
      ->required();
  braid->add_option("--level", level, "force an evaluation level");
  braid->add_option("--out", out_req, "braid document to write")->required();
  braid->add_flag("--yd", yd, "also expand and verify the coaction of each module");
  braid->add_option("--save-modules", save_dir, "directory to write the loaded certificates to");

  CLI::App* defect = app.add_subcommand("ybe-defect", "measure the Yang-Baxter defect");
  defect->fallthrough();
  defect->add_option("--input", input, "bundle path")->required();
  defect->add_option("--level", level, "level to measure (default: highest stored)");
  defect->add_option("--out", out_opt, "defect document to write");
  defect->add_flag("--expect-zero", expect_zero, "exit 1 when the defect is nonzero");

  CLI::App* report = app.add_subcommand("report", "full battery plus padding arbitration");
  report->fallthrough();
  report->add_option("--input", input, "bundle path")->required();
  report->add_option("--level", level, "level to verify (default: the bundle's)");
  report->add_option("--out", out_opt, "report path to write");

  int rc = 0;
  build->callback([&] {
    rc = run_build(input, out_req, max_degree, level, field, variant, r_unit, name);
  });
  verify->callback([&] { rc = run_verify(input, what, level, out_opt); });
  emitr->callback([&] { rc = run_emit_r(input, level, out_req, inverse); });
  braid->callback([&] { rc = run_braid(input, modules, level, out_req, yd, save_dir); });
  defect->callback([&] { rc = run_defect(input, level, out_opt, expect_zero); });
  report->callback([&] { rc = run_report(input, level, out_opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int cli_rc = app.exit(e);
    return cli_rc == 0 ? 0 : 2;
  } catch (const qhopf::verification_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const qhopf::budget_error& e) {
    std::cerr << "budget refusal: " << e.what() << "\n";
    return 2;
  } catch (const qhopf::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
