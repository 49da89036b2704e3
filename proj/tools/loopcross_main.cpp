#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "loopcross/arrangement.hpp"
#include "loopcross/bounds.hpp"
#include "loopcross/constructions.hpp"
#include "loopcross/io.hpp"

using namespace loopcross;
using ordered_json = nlohmann::ordered_json;

namespace {

struct ReportSink {
  ordered_json doc;
  std::string path;
  bool stable = false;
  bool failed = false;

  ReportSink(const std::string& command, bool stable_flag) : stable(stable_flag) {
    doc["command"] = command;
    doc["params"] = ordered_json::object();
    doc["checks"] = ordered_json::array();
    doc["stats"] = ordered_json::object();
  }
  void param(const std::string& key, const ordered_json& v) { doc["params"][key] = v; }
  void stat(const std::string& key, const ordered_json& v) { doc["stats"][key] = v; }
  void check(const std::string& name, const std::string& expected, const std::string& measured,
             bool pass) {
    doc["checks"].push_back(
        {{"name", name}, {"expected", expected}, {"measured", measured}, {"pass", pass}});
    if (!pass) failed = true;
  }
  int flush() {
    if (!stable) {
      auto now = std::chrono::system_clock::now().time_since_epoch();
      doc["timestamp_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
    }
    doc["pass"] = !failed;
    std::string text = doc.dump(2) + "\n";
    if (path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(path);
      out << text;
    }
    return failed ? 1 : 0;
  }
};

void stats_into(ReportSink& sink, const CrossingStats& st) {
  sink.stat("cr", st.cr);
  sink.stat("self_crossings", st.self_crossings);
  sink.stat("pair_crossings", st.pair_crossings);
  sink.stat("crossing_pairs", st.crossing_pairs);
  sink.stat("max_pairwise", st.max_pairwise);
  sink.stat("max_self", st.max_self);
}

std::vector<PolyCurve> instance_curves(const Instance& inst) {
  std::vector<PolyCurve> out;
  if (inst.loops)
    out = inst.loops->loops;
  else
    for (const auto& e : inst.graph->edges) out.push_back(e.curve);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for non-homotopic curve systems in punctured planes"};
  app.require_subcommand(1);
  bool stable = false;
  app.add_flag("--stable", stable, "omit timestamps from reports (deterministic output)");

  std::string out_path, in_path, report_path;
  long long k = 1;
  int n = 2, m = 9, j = 3;

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->require_subcommand(1);
  auto add_gen_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "instance file to write")->required();
    cmd->add_option("--report", report_path, "write the report here instead of stdout");
  };
  auto* gw = gen->add_subcommand("winding", "2k+1 loops of windings -k..k around one puncture");
  gw->add_option("--k", k)->required();
  add_gen_common(gw);
  auto* ge = gen->add_subcommand("elementary", "elementary loops with < k sign changes");
  ge->add_option("--n", n)->required();
  ge->add_option("--k", m)->required();
  add_gen_common(ge);
  auto* gc = gen->add_subcommand("concat", "concatenations of j elementary loops");
  gc->add_option("--n", n)->required();
  gc->add_option("--j", j)->required();
  add_gen_common(gc);
  auto* gm = gen->add_subcommand("multigraph", "Theorem-2 style instance");
  gm->add_option("--n", n)->required();
  gm->add_option("--m", m)->required();
  add_gen_common(gm);
  auto* gl = gen->add_subcommand("loose", "loose extremal multigraph with 3n-3 edges");
  gl->add_option("--n", n)->required();
  add_gen_common(gl);
  auto* gb = gen->add_subcommand("bouquets", "n/2 disjoint bouquets of 2m/n loops");
  gb->add_option("--n", n)->required();
  gb->add_option("--m", m)->required();
  add_gen_common(gb);

  // ---- analyze / verify / bounds / export ----------------------------------
  auto* an = app.add_subcommand("analyze", "measure an instance");
  an->require_subcommand(1);
  auto* ac = an->add_subcommand("crossings", "exact crossing statistics");
  ac->add_option("--in", in_path)->required();
  ac->add_option("--report", report_path);
  auto* aw = an->add_subcommand("words", "reduced words / edge classes");
  aw->add_option("--in", in_path)->required();
  aw->add_option("--report", report_path);
  auto* aa = an->add_subcommand("arrangement", "planarize and check Euler counts");
  aa->add_option("--in", in_path)->required();
  aa->add_option("--report", report_path);

  auto* ve = app.add_subcommand("verify", "check properties, exit 1 on failure");
  ve->require_subcommand(1);
  auto* vn = ve->add_subcommand("nonhomotopic", "no trivial loop, no homotopic parallel pair");
  vn->add_option("--in", in_path)->required();
  vn->add_option("--report", report_path);
  auto* vb = ve->add_subcommand("bounds", "audit measured statistics against the bounds");
  vb->add_option("--in", in_path)->required();
  vb->add_option("--report", report_path);
  bool with_thm2 = false;
  vb->add_flag("--thm2", with_thm2, "also check the generated-instance upper bound");

  auto* bo = app.add_subcommand("bounds", "evaluate formulas");
  bo->require_subcommand(1);
  auto* bf = bo->add_subcommand("f", "bounds on f(n,k)");
  bf->add_option("--n", n)->required();
  bf->add_option("--k", m)->required();
  bf->add_option("--report", report_path);

  auto* ex = app.add_subcommand("export", "render an instance");
  ex->require_subcommand(1);
  auto* es = ex->add_subcommand("svg", "write an SVG drawing");
  es->add_option("--in", in_path)->required();
  es->add_option("--out", out_path)->required();
  bool mark_crossings = false;
  es->add_flag("--crossings", mark_crossings, "dot the crossing points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      Instance inst;
      std::string name;
      if (gw->parsed()) {
        name = "gen winding";
        LoopFamily fam = gen_winding_loops(k);
        inst = Instance::of(std::move(fam));
      } else if (ge->parsed()) {
        name = "gen elementary";
        inst = Instance::of(gen_elementary_loops(n, m));
      } else if (gc->parsed()) {
        name = "gen concat";
        inst = Instance::of(gen_concatenated_loops(n, j));
      } else if (gm->parsed()) {
        name = "gen multigraph";
        inst = Instance::of(gen_upperbound_multigraph(n, m));
      } else if (gl->parsed()) {
        name = "gen loose";
        inst = Instance::of(gen_loose_extremal(n));
      } else {
        name = "gen bouquets";
        inst = Instance::of(gen_disjoint_bouquets(n, m));
      }
      save_instance(inst, out_path);
      ReportSink sink(name, stable);
      sink.path = report_path;
      sink.param("out", out_path);
      auto curves = instance_curves(inst);
      sink.stat("curves", curves.size());
      auto viol = check_general_position(curves, inst.loops ? &inst.loops->plane : nullptr);
      sink.check("general position", "0 violations", std::to_string(viol.size()), viol.empty());
      return sink.flush();
    }

    if (an->parsed()) {
      Instance inst = load_instance(in_path);
      if (ac->parsed()) {
        ReportSink sink("analyze crossings", stable);
        sink.path = report_path;
        sink.param("in", in_path);
        stats_into(sink, family_crossing_stats(instance_curves(inst)));
        return sink.flush();
      }
      if (aw->parsed()) {
        ReportSink sink("analyze words", stable);
        sink.path = report_path;
        sink.param("in", in_path);
        ordered_json words = ordered_json::array();
        if (inst.loops) {
          for (std::size_t i = 0; i < inst.loops->loops.size(); ++i)
            words.push_back(curve_word(inst.loops->loops[i], inst.loops->plane).str());
        } else {
          for (const auto& e : inst.graph->edges) words.push_back(edge_word(*inst.graph, e).str());
        }
        sink.stat("words", words);
        return sink.flush();
      }
      ReportSink sink("analyze arrangement", stable);
      sink.path = report_path;
      sink.param("in", in_path);
      Arrangement arr = planarize(instance_curves(inst));
      sink.stat("nodes", arr.nodes.size());
      sink.stat("fragments", arr.fragments.size());
      sink.stat("faces", arr.face_count());
      sink.stat("components", arr.component_count);
      bool euler_ok = true;
      for (long long chi : arr.euler_characteristics()) euler_ok &= chi == 2;
      sink.check("euler V-E+F=2 per component", "true", euler_ok ? "true" : "false", euler_ok);
      return sink.flush();
    }

    if (ve->parsed()) {
      Instance inst = load_instance(in_path);
      if (vn->parsed()) {
        ReportSink sink("verify nonhomotopic", stable);
        sink.path = report_path;
        sink.param("in", in_path);
        if (inst.graph) {
          NonHomotopicReport rep = validate_nonhomotopic(*inst.graph);
          sink.check("general position", "0 violations", std::to_string(rep.violations.size()),
                     rep.violations.empty());
          std::string trivial;
          for (const auto& t : rep.trivial_loops) trivial += t + " ";
          sink.check("trivial loops", "none", rep.trivial_loops.empty() ? "none" : trivial,
                     rep.trivial_loops.empty());
          std::string pairs;
          for (const auto& [a, b] : rep.homotopic_pairs) pairs += a + "~" + b + " ";
          sink.check("homotopic parallel pairs", "none",
                     rep.homotopic_pairs.empty() ? "none" : pairs, rep.homotopic_pairs.empty());
        } else {
          const LoopFamily& fam = *inst.loops;
          std::set<ReducedWord> words;
          bool distinct = true;
          for (const auto& c : fam.loops) distinct &= words.insert(curve_word(c, fam.plane)).second;
          sink.check("pairwise distinct words", "true", distinct ? "true" : "false", distinct);
        }
        return sink.flush();
      }
      ReportSink sink("verify bounds", stable);
      sink.path = report_path;
      sink.param("in", in_path);
      if (!inst.graph) throw SchemaError("verify bounds expects a multigraph instance");
      std::optional<Rational> thm2;
      if (with_thm2)
        thm2 = cr_upper_thm2(inst.graph->vertex_count(), inst.graph->edge_count()).upper;
      AuditReport audit = audit_instance(*inst.graph, thm2);
      sink.stat("n", audit.n);
      sink.stat("m", audit.m);
      stats_into(sink, audit.stats);
      for (const auto& c : audit.checks) sink.check(c.name, c.expected, c.measured, c.pass);
      return sink.flush();
    }

    if (bo->parsed()) {
      ReportSink sink("bounds f", stable);
      sink.path = report_path;
      sink.param("n", n);
      sink.param("k", m);
      BoundValue up = f_upper(n, m);
      if (up.exact) sink.stat("f_upper", up.exact->str());
      sink.stat("f_upper_log2_upper", to_string(up.log2_upper));
      sink.stat("f_upper_closed_form_log2", up.closed_form_log2.str());
      sink.stat("f_upper_provenance", up.provenance);
      if (n >= 2) sink.stat("f_lower", f_lower(n, m).str());
      return sink.flush();
    }

    if (es->parsed()) {
      Instance inst = load_instance(in_path);
      SvgOptions opts;
      opts.mark_crossings = mark_crossings;
      export_svg(inst, out_path, opts);
      return 0;
    }
  } catch (const ParameterOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
