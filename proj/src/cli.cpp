#include "ainf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ainf/ainf_checks.hpp"
#include "ainf/appendix_suite.hpp"
#include "ainf/floer.hpp"
#include "ainf/kunneth.hpp"
#include "ainf/pseudoisotopy.hpp"
#include "ainf/spec_io.hpp"

namespace ainf {

namespace {

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Mutations {
  std::optional<std::string> flip;
  bool drop_parity_factor = false;
  bool drop_n2_twist = false;
  std::optional<std::string> drop_unit_twist;  // element name, empty for all odd elements
};

Mutations parse_mutations(const std::vector<std::string>& specs) {
  Mutations m;
  for (const auto& s : specs) {
    if (s.rfind("flip:", 0) == 0 && s.size() > 5) {
      if (m.flip) throw InputError("only one flip mutation is supported");
      m.flip = s.substr(5);
    } else if (s == "drop:n+1-factor") {
      m.drop_parity_factor = true;
    } else if (s == "drop:n2-twist") {
      m.drop_n2_twist = true;
    } else if (s == "drop:unit-twist") {
      m.drop_unit_twist = "";
    } else if (s.rfind("drop:unit-twist:", 0) == 0) {
      m.drop_unit_twist = s.substr(16);
    } else {
      throw InputError("unknown mutation '" + s + "'");
    }
  }
  return m;
}

struct Context {
  SpecDocument doc;
  CliFlags flags;
  Mutations mut;
};

using Reports = std::vector<Report>;

Report tagged(Report r, const std::string& subject) {
  r.data["subject"] = subject;
  return r;
}

AlgElement cochain_or_zero(const Context& ctx, const std::optional<std::string>& name, const AInfAlgebra& alg) {
  if (name) return ctx.doc.cochain(*name).element;
  return AlgElement(alg.cutoff());
}

const std::vector<PairSpec>& require_pairs(const Context& ctx) {
  if (ctx.doc.pairs.empty()) throw InputError("the spec defines no pairs");
  return ctx.doc.pairs;
}

AInfAlgebra maybe_truncated(const Context& ctx, const AInfAlgebra& alg) {
  return ctx.flags.cutoff ? alg.truncated(*ctx.flags.cutoff) : alg;
}

/// (algebra, cochain name or empty) subjects: every cochain, then every algebra without one.
std::vector<std::pair<const AInfAlgebra*, const CochainSpec*>> floer_subjects(const Context& ctx) {
  std::vector<std::pair<const AInfAlgebra*, const CochainSpec*>> out;
  std::set<std::string> covered;
  for (const auto& c : ctx.doc.cochains) {
    out.emplace_back(&ctx.doc.algebra(c.algebra), &c);
    covered.insert(c.algebra);
  }
  for (const auto& a : ctx.doc.algebras)
    if (!covered.count(a.name)) out.emplace_back(&a.value, nullptr);
  if (out.empty()) throw InputError("the spec defines no algebras");
  return out;
}

Reports cmd_check_ainf(const Context& ctx) {
  Reports out;
  for (const auto& [name, alg] : ctx.doc.algebras) {
    const auto a = maybe_truncated(ctx, alg);
    CheckOptions opts;
    if (ctx.mut.flip && a.constant_index(*ctx.mut.flip)) opts = mutation_options(a, *ctx.mut.flip);
    out.push_back(tagged(check_ainf(a, opts), name));
  }
  return out;
}

Reports cmd_check_unit(const Context& ctx) {
  Reports out;
  for (const auto& [name, alg] : ctx.doc.algebras) {
    if (!alg.unit()) continue;
    auto a = maybe_truncated(ctx, alg);
    if (ctx.mut.drop_unit_twist) a = drop_unit_twist(a, *ctx.mut.drop_unit_twist);
    out.push_back(tagged(check_unit(a), name));
  }
  if (out.empty()) throw InputError("the spec defines no unital algebras");
  return out;
}

Reports cmd_check_subalgebra(const Context& ctx) {
  Reports out;
  for (const auto& e : ctx.doc.embeddings) out.push_back(tagged(check_subalgebra(e), e.name));
  if (out.empty()) throw InputError("the spec defines no embeddings");
  return out;
}

Reports cmd_check_commuting(const Context& ctx) {
  Reports out;
  for (const auto& p : require_pairs(ctx))
    out.push_back(tagged(check_commuting(ctx.doc.embedding(p.emb_a), ctx.doc.embedding(p.emb_b)), p.name));
  return out;
}

Reports cmd_mc_defect(const Context& ctx) {
  Reports out;
  for (const auto& c : ctx.doc.cochains) {
    const auto& alg = ctx.doc.algebra(c.algebra);
    const auto d = mc_defect(alg, c.element, ctx.flags.cutoff);
    Report r;
    r.check = "mc-defect";
    r.instances = 1;
    r.data["potential"] = d.potential.serialize();
    r.data["remainder"] = d.remainder.to_string(alg.basis());
    r.data["result"] = "P(b) = " + d.potential.to_string();
    if (!d.remainder.is_zero())
      r.add_violation("bounding", Json{{"cochain", c.name}}, "m(e^b) has non-unit part " + d.remainder.to_string(alg.basis()));
    out.push_back(tagged(std::move(r), c.name));
  }
  if (out.empty()) throw InputError("the spec defines no cochains");
  return out;
}

Reports cmd_box_product(const Context& ctx) {
  Reports out;
  for (const auto& p : require_pairs(ctx)) {
    const auto& ea = ctx.doc.embedding(p.emb_a);
    const auto& eb = ctx.doc.embedding(p.emb_b);
    const auto bp = box_product(ea, eb, cochain_or_zero(ctx, p.b1, ea.source), cochain_or_zero(ctx, p.b2, eb.source),
                                ctx.flags.cutoff);
    auto r = bp.report;
    r.data["element"] = bp.element.to_string(ea.target.basis());
    r.data["result"] = "b = " + r.data["element"].get<std::string>() + ", P(b) = " + bp.defect_c.potential.to_string();
    out.push_back(tagged(std::move(r), p.name));
  }
  return out;
}

Reports cmd_cohomology(const Context& ctx) {
  Reports out;
  for (const auto& [name, alg] : ctx.doc.algebras) {
    const auto h = mu1_cohomology(alg);
    Report r;
    r.check = "cohomology";
    r.instances = 1;
    Json dims = Json::object();
    for (const auto& [deg, n] : h.dims) dims[std::to_string(deg)] = n;
    r.data["dims"] = dims;
    r.data["total"] = h.total();
    std::string line = "dim H =";
    for (const auto& [deg, n] : h.dims) line += " " + std::to_string(n) + " (deg " + std::to_string(deg) + ")";
    r.data["result"] = line;
    out.push_back(tagged(std::move(r), name));
  }
  if (out.empty()) throw InputError("the spec defines no algebras");
  return out;
}

Reports cmd_hf(const Context& ctx) {
  Reports out;
  for (const auto& [alg, c] : floer_subjects(ctx)) {
    Report r;
    r.check = "hf";
    r.instances = 1;
    const int hf = hf_dimension(*alg, c ? c->element : AlgElement(alg->cutoff()));
    r.data["hf"] = hf;
    r.data["algebra"] = alg->name();
    r.data["result"] = "dim HF = " + std::to_string(hf);
    out.push_back(tagged(std::move(r), c ? c->name : alg->name()));
  }
  return out;
}

Reports cmd_barcode(const Context& ctx) {
  Reports out;
  for (const auto& [alg, c] : floer_subjects(ctx)) {
    const AlgElement b = c ? c->element : AlgElement(alg->cutoff());
    const auto bc = barcode(*alg, b);
    const int hf = hf_dimension(*alg, b);
    Report r;
    r.check = "barcode";
    r.instances = 1;
    r.data["barcode"] = bc.to_json();
    r.data["hf"] = hf;
    r.data["algebra"] = alg->name();
    std::string bars;
    for (const auto& len : bc.bars) bars += (bars.empty() ? "" : ", ") + format_scalar(len);
    r.data["result"] = "bars [" + bars + "], free rank " + std::to_string(bc.free_rank);
    if (bc.free_rank != hf)
      r.add_violation("free-rank", Json{{"algebra", alg->name()}},
                      "free rank " + std::to_string(bc.free_rank) + " differs from dim HF " + std::to_string(hf));
    out.push_back(tagged(std::move(r), c ? c->name : alg->name()));
  }
  return out;
}

Reports cmd_check_hf_kunneth(const Context& ctx) {
  Reports out;
  for (const auto& p : require_pairs(ctx)) {
    const auto& ea = ctx.doc.embedding(p.emb_a);
    const auto& eb = ctx.doc.embedding(p.emb_b);
    auto r = check_hf_kunneth(ea, eb, cochain_or_zero(ctx, p.b1, ea.source), cochain_or_zero(ctx, p.b2, eb.source));
    r.data["result"] = "dim HF(C) = " + r.data["hf_c"].dump() + ", dim HF(A) * dim HF(B) = " + r.data["hf_a"].dump() +
                       " * " + r.data["hf_b"].dump();
    out.push_back(tagged(std::move(r), p.name));
  }
  return out;
}

Reports cmd_check_isotopy(const Context& ctx) {
  Reports out;
  for (const auto& [name, p] : ctx.doc.isotopies)
    out.push_back(tagged(check_pseudoisotopy(p, {ctx.mut.drop_parity_factor}), name));
  if (out.empty()) throw InputError("the spec defines no isotopies");
  return out;
}

Extension run_extension(const Context& ctx, const ExtensionSpec& e) {
  std::vector<AInfAlgebra> targets;
  for (const auto& t : e.targets) targets.push_back(ctx.doc.algebra(t));
  return extend_to(ctx.doc.algebra(e.start), targets, ctx.doc.isotopy(e.isotopy));
}

Reports cmd_extend(const Context& ctx) {
  Reports out;
  for (const auto& e : ctx.doc.extensions) {
    const auto ext = run_extension(ctx, e);
    Report r;
    r.check = "extend";
    r.absorb(check_ainf(ext.algebra), "algebra");
    r.absorb(check_pseudoisotopy(ext.isotopy), "isotopy");
    r.data["algebra"] = algebra_to_json(ext.algebra);
    r.data["isotopy"] = isotopy_to_json(ext.isotopy);
    out.push_back(tagged(std::move(r), e.name));
  }
  if (out.empty()) throw InputError("the spec defines no extensions");
  return out;
}

Reports cmd_check_commuting_isotopy(const Context& ctx) {
  Reports out;
  for (const auto& t : ctx.doc.triples) {
    const auto& ea = ctx.doc.embedding(t.emb_a);
    const auto& eb = ctx.doc.embedding(t.emb_b);
    auto r = check_commuting_isotopy(ctx.doc.isotopy(t.pc), ctx.doc.isotopy(t.pa), ctx.doc.isotopy(t.pb), ea, eb, t.n1,
                                     t.n2, {ctx.mut.drop_n2_twist});
    if (t.ext_a) {
      const auto xa = run_extension(ctx, ctx.doc.extension(*t.ext_a));
      const auto xb = run_extension(ctx, ctx.doc.extension(*t.ext_b));
      const auto xc = run_extension(ctx, ctx.doc.extension(*t.ext_c));
      const SubalgebraEmbedding na{ea.name, xa.algebra, xc.algebra, ea.images};
      const SubalgebraEmbedding nb{eb.name, xb.algebra, xc.algebra, eb.images};
      r.absorb(check_commuting(na, nb), "extended");
      r.data["extended_cutoff"] = xc.algebra.cutoff() ? format_scalar(*xc.algebra.cutoff()) : "none";
    }
    out.push_back(tagged(std::move(r), t.name));
  }
  if (out.empty()) throw InputError("the spec defines no triples");
  return out;
}

Reports cmd_torus_suite(const Context& ctx) {
  const int trials = ctx.flags.trials.value_or(200);
  if (trials <= 0) throw InputError("--trials must be positive");
  return {appendix_suite(ctx.flags.seed.value_or(1), trials)};
}

struct Command {
  Reports (*run)(const Context&);
  bool needs_spec;
  bool uses_cutoff;
  std::vector<std::string> drops;  // allowed drop mutations
};

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> table{
      {"check-ainf", {cmd_check_ainf, true, true, {}}},
      {"check-unit", {cmd_check_unit, true, true, {"unit-twist"}}},
      {"check-subalgebra", {cmd_check_subalgebra, true, false, {}}},
      {"check-commuting", {cmd_check_commuting, true, false, {}}},
      {"mc-defect", {cmd_mc_defect, true, true, {}}},
      {"box-product", {cmd_box_product, true, true, {}}},
      {"cohomology", {cmd_cohomology, true, false, {}}},
      {"hf", {cmd_hf, true, false, {}}},
      {"barcode", {cmd_barcode, true, false, {}}},
      {"check-hf-kunneth", {cmd_check_hf_kunneth, true, false, {}}},
      {"check-isotopy", {cmd_check_isotopy, true, false, {"n+1-factor"}}},
      {"extend", {cmd_extend, true, false, {}}},
      {"check-commuting-isotopy", {cmd_check_commuting_isotopy, true, false, {"n2-twist"}}},
      {"torus-suite", {cmd_torus_suite, false, false, {}}},
  };
  return table;
}

void check_flags(const std::string& name, const Command& cmd, const CliFlags& flags, const Mutations& mut,
                 std::size_t n_specs) {
  if (cmd.needs_spec && n_specs == 0) throw InputError(name + " needs at least one spec file");
  if (!cmd.needs_spec && n_specs > 0) throw InputError(name + " takes no spec files");
  if (flags.cutoff && !cmd.uses_cutoff) throw InputError("--cutoff is not used by " + name);
  if (flags.cutoff && sgn(*flags.cutoff) <= 0) throw InputError("--cutoff must be positive");
  if ((flags.seed || flags.trials) && name != "torus-suite") throw InputError("--seed/--trials only apply to torus-suite");
  if (mut.flip && !cmd.needs_spec) throw InputError("flip mutations need a spec file");
  auto allowed = [&](const char* d) { return std::find(cmd.drops.begin(), cmd.drops.end(), d) != cmd.drops.end(); };
  if (mut.drop_parity_factor && !allowed("n+1-factor")) throw InputError("drop:n+1-factor does not apply to " + name);
  if (mut.drop_n2_twist && !allowed("n2-twist")) throw InputError("drop:n2-twist does not apply to " + name);
  if (mut.drop_unit_twist && !allowed("unit-twist")) throw InputError("drop:unit-twist does not apply to " + name);
}

Json flags_json(const CliFlags& f) {
  Json out = Json::object();
  if (f.seed) out["seed"] = *f.seed;
  if (f.trials) out["trials"] = *f.trials;
  if (f.cutoff) out["cutoff"] = format_scalar(*f.cutoff);
  if (!f.mutations.empty()) out["mutate"] = f.mutations;
  return out;
}

}  // namespace

const std::vector<std::string>& cli_commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : command_table()) v.push_back(k);
    return v;
  }();
  return names;
}

CommandResult run_command(const std::string& command, const std::vector<std::string>& spec_paths,
                          const CliFlags& flags) {
  CommandResult result;
  try {
    const auto it = command_table().find(command);
    if (it == command_table().end()) throw InputError("unknown command '" + command + "'");
    Context ctx;
    ctx.flags = flags;
    ctx.mut = parse_mutations(flags.mutations);
    check_flags(command, it->second, flags, ctx.mut, spec_paths.size());
    if (it->second.needs_spec) {
      std::vector<Json> docs;
      for (const auto& p : spec_paths) docs.push_back(read_spec_json(p));
      Json merged = merge_spec_json(docs);
      if (ctx.mut.flip) flip_op(merged, *ctx.mut.flip);
      ctx.doc = parse_spec(merged);
    }
    const Reports reports = it->second.run(ctx);
    const bool passed = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
    result.exit_code = passed ? 0 : 1;
    Json list = Json::array();
    std::ostringstream text;
    for (const auto& r : reports) {
      list.push_back(r.to_json());
      text << "[" << r.data.value("subject", command) << "] " << r.summary() << "\n";
      if (r.data.contains("result")) text << "  " << r.data["result"].get<std::string>() << "\n";
    }
    text << (passed ? "PASS" : "FAIL") << "\n";
    result.text = text.str();
    result.report = {{"tool", kSpecVersion},  {"command", command}, {"specs", spec_paths},
                     {"flags", flags_json(flags)}, {"status", passed ? "PASS" : "FAIL"}, {"reports", std::move(list)}};
  } catch (const std::exception& e) {
    result.exit_code = 2;
    result.report = nullptr;
    result.text = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks and computations for filtered A-infinity algebras", "ainfctl"};
  app.set_version_flag("--version", std::string(kSpecVersion));
  std::string command;
  std::vector<std::string> specs;
  std::string report_path, cutoff_text;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<std::string> mutations;
  std::string command_help = "one of:";
  for (const auto& c : cli_commands()) command_help += " " + c;
  app.add_option("command", command, command_help)->required();
  app.add_option("specs", specs, "spec files (JSON, version ainfctl/1)");
  auto* report_opt = app.add_option("--report", report_path, "write the full JSON report to this path");
  auto* seed_opt = app.add_option("--seed", seed, "random seed (torus-suite)");
  auto* trials_opt = app.add_option("--trials", trials, "trials per identity group (torus-suite)");
  auto* cutoff_opt = app.add_option("--cutoff", cutoff_text, "energy cutoff p/q");
  app.add_option("--mutate", mutations,
                 "flip:<id> | drop:n+1-factor | drop:n2-twist | drop:unit-twist[:<element>]")
      ->take_last()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  CliFlags flags;
  if (report_opt->count()) flags.report_path = report_path;
  if (seed_opt->count()) flags.seed = seed;
  if (trials_opt->count()) flags.trials = trials;
  if (cutoff_opt->count()) {
    try {
      flags.cutoff = parse_scalar(cutoff_text);
    } catch (const std::invalid_argument& e) {
      err << "error: --cutoff: " << e.what() << "\n";
      return 2;
    }
  }
  flags.mutations = mutations;

  auto result = run_command(command, specs, flags);
  (result.exit_code == 2 ? err : out) << result.text;
  if (flags.report_path && !result.report.is_null()) {
    std::ofstream f(*flags.report_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write report to " << *flags.report_path << "\n";
      return 2;
    }
    f << result.report.dump(2) << "\n";
  }
  return result.exit_code;
}

}  // namespace ainf
