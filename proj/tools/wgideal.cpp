// Command-line harness: load a Coxeter system config, enumerate, export
// R-polynomial tables, solve r-tables, and run the claim checks.
// Exit codes: 0 all pass, 1 some check failed, 2 configuration error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wgi/checks.hpp"
#include "wgi/io.hpp"

using namespace wgi;

namespace {

void print_report(const CheckReport& r, bool verbose) {
  const char* tag = r.status == CheckReport::Status::Pass ? "PASS"
                    : r.status == CheckReport::Status::Fail ? "FAIL"
                                                            : "SKIP";
  std::cout << tag << " " << r.claim;
  if (!r.instance.empty()) std::cout << " [" << r.instance << "]";
  if (r.status == CheckReport::Status::Skipped)
    std::cout << " -- " << r.skip_reason;
  std::cout << "\n";
  if (r.status == CheckReport::Status::Fail)
    for (const auto& w : r.witnesses) std::cout << "      witness: " << w << "\n";
  if (verbose)
    for (const auto& a : r.assumptions) std::cout << "      note: " << a << "\n";
}

int summarize(const std::vector<CheckReport>& reports) {
  size_t pass = 0, fail = 0, skip = 0;
  for (const auto& r : reports) {
    if (r.status == CheckReport::Status::Pass) ++pass;
    if (r.status == CheckReport::Status::Fail) ++fail;
    if (r.status == CheckReport::Status::Skipped) ++skip;
  }
  std::cout << pass << " passed, " << fail << " failed, " << skip
            << " skipped\n";
  return fail == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification harness for weighted Hecke modules on "
               "W-graph ideals"};
  app.require_subcommand(1);

  // --- describe ---------------------------------------------------------
  std::string describe_system;
  auto* describe = app.add_subcommand("describe", "summarize a system config");
  describe->add_option("--system", describe_system, "system JSON")->required();

  // --- enumerate --------------------------------------------------------
  std::string enum_system;
  auto* enumerate = app.add_subcommand("enumerate", "list the group elements");
  enumerate->add_option("--system", enum_system, "system JSON")->required();

  // --- rpoly ------------------------------------------------------------
  std::string rp_system, rp_kind, rp_j, rp_ideal, rp_variant = "minus_one",
              rp_norm = "signed", rp_out = "csv", rp_file;
  auto* rpoly = app.add_subcommand("rpoly", "export an R-polynomial table");
  rpoly->add_option("--system", rp_system, "system JSON")->required();
  rpoly->add_option("--kind", rp_kind, "classical|parabolic|ideal")
      ->required()
      ->check(CLI::IsMember({"classical", "parabolic", "ideal"}));
  rpoly->add_option("--J", rp_j, "comma-separated generators");
  rpoly->add_option("--E", rp_ideal, "ideal JSON (kind=ideal)");
  rpoly->add_option("--variant", rp_variant, "minus_one|q_s")
      ->check(CLI::IsMember({"minus_one", "q_s"}));
  rpoly->add_option("--norm", rp_norm, "signed|unsigned")
      ->check(CLI::IsMember({"signed", "unsigned"}));
  rpoly->add_option("--out", rp_out, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  rpoly->add_option("--out-file", rp_file, "output path (default stdout)");

  // --- verify -----------------------------------------------------------
  std::string v_system, v_claim, v_j, v_k, v_ideal, v_rtable, v_wgraph,
      v_report;
  bool v_all = false, v_list = false, v_timing = false, v_verbose = false;
  auto* verify = app.add_subcommand("verify", "run claim checks");
  verify->add_option("--system", v_system, "system JSON");
  verify->add_option("--claim", v_claim, "claim id (see --list)");
  verify->add_flag("--all", v_all, "run the whole catalog");
  verify->add_flag("--list", v_list, "print the claim catalog");
  verify->add_option("--J", v_j, "comma-separated generators");
  verify->add_option("--K", v_k, "comma-separated generators");
  verify->add_option("--E", v_ideal, "ideal JSON");
  verify->add_option("--rtable", v_rtable, "r-table JSON for (E, J)");
  verify->add_option("--wgraph", v_wgraph, "W-graph JSON (def1.2)");
  verify->add_option("--report", v_report, "write reports as JSON");
  verify->add_flag("--timing", v_timing, "include timing in the JSON report");
  verify->add_flag("--verbose", v_verbose, "print assumption notes");

  // --- check-hypotheses ---------------------------------------------------
  std::string h_system, h_ideal, h_j, h_k;
  auto* hyp = app.add_subcommand("check-hypotheses",
                                 "run the precondition gates for (E, J[, K])");
  hyp->add_option("--system", h_system, "system JSON")->required();
  hyp->add_option("--E", h_ideal, "ideal JSON")->required();
  hyp->add_option("--J", h_j, "comma-separated generators");
  hyp->add_option("--K", h_k, "comma-separated generators");

  // --- solve-rtable -------------------------------------------------------
  std::string s_system, s_ideal, s_j, s_variant = "minus_one", s_out;
  auto* solve = app.add_subcommand("solve-rtable",
                                   "search for structure polynomials");
  solve->add_option("--system", s_system, "system JSON")->required();
  solve->add_option("--E", s_ideal, "ideal JSON")->required();
  solve->add_option("--J", s_j, "comma-separated generators");
  solve->add_option("--variant", s_variant, "minus_one|q_s")
      ->check(CLI::IsMember({"minus_one", "q_s"}));
  solve->add_option("--out", s_out, "write the solved table as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (describe->parsed()) {
      LoadedSystem sys = load_system(describe_system);
      const auto& W = sys.group();
      std::cout << "system: " << sys.name() << "\n";
      std::cout << "rank: " << W.rank() << "\n";
      std::cout << "order: " << W.order() << "\n";
      std::cout << "positive roots: " << W.num_positive_roots() << "\n";
      std::cout << "bonds:";
      for (Gen s = 0; s < W.rank(); ++s)
        for (Gen t = s + 1; t < W.rank(); ++t)
          if (W.bond(s, t) != 2)
            std::cout << " m(" << sys.gen_name(s) << "," << sys.gen_name(t)
                      << ")="
                      << (W.bond(s, t) == kInfiniteBond
                              ? std::string("inf")
                              : std::to_string(W.bond(s, t)));
      std::cout << "\n";
      std::cout << "gamma rank: " << sys.algebra().gamma_rank() << "\n";
      for (Gen s = 0; s < W.rank(); ++s) {
        ExpVec u = sys.algebra().weights().doubled(s);
        std::cout << "L(" << sys.gen_name(s) << ") = [";
        for (size_t i = 0; i < u.size(); ++i)
          std::cout << (i ? "," : "") << u[i] / 2;
        std::cout << "]\n";
      }
      std::cout << "phi-compatible: "
                << (sys.algebra().weights().phi_ok() ? "yes" : "no") << "\n";
      return 0;
    }

    if (enumerate->parsed()) {
      LoadedSystem sys = load_system(enum_system);
      const auto& W = sys.group();
      std::cout << "element,length,left_descents,right_descents\n";
      for (Elt w = 0; w < W.order(); ++w) {
        std::string n = sys.elt_name(w);
        std::cout << (n.empty() ? "e" : n) << "," << W.length(w) << ","
                  << sys.genset_name(W.left_descents(w)) << ","
                  << sys.genset_name(W.right_descents(w)) << "\n";
      }
      return 0;
    }

    if (rpoly->parsed()) {
      LoadedSystem sys = load_system(rp_system);
      RTable table;
      Variant var = rp_variant == "q_s" ? Variant::Qs : Variant::MinusOne;
      RNorm norm = rp_norm == "unsigned" ? RNorm::Unsigned : RNorm::Signed;
      if (rp_kind == "classical") {
        table = classical_r_oracle(sys.algebra());
      } else if (rp_kind == "parabolic") {
        GenSet J = sys.parse_genset(rp_j);
        table = ParabolicModule(sys.algebra(), J, var).rpoly(norm);
      } else {
        if (rp_ideal.empty())
          throw Error(Errc::BadParams, "kind=ideal needs --E");
        GenSet J = sys.parse_genset(rp_j);
        IdealE E = load_ideal(sys, rp_ideal);
        SolveOutcome sol = solve_r_table(sys.algebra(), E, J, var);
        if (!sol.success)
          throw Error(sol.failure,
                      "cannot build the ideal module: " + sol.detail);
        WGraphIdealModule M(sys.algebra(), E, J, var, sol.table);
        table = M.rpoly(norm);
      }
      std::string payload =
          rp_out == "csv" ? rpoly_csv(sys, table)
                          : rpoly_json(sys, table).dump(2) + "\n";
      if (rp_file.empty())
        std::cout << payload;
      else
        write_file(rp_file, payload);
      return 0;
    }

    if (verify->parsed()) {
      if (v_list) {
        for (const auto& c : claim_catalog())
          std::cout << c.id << "  [sec " << c.anchor << "]  " << c.summary
                    << "\n";
        return 0;
      }
      if (v_system.empty())
        throw Error(Errc::BadParams, "verify needs --system");
      LoadedSystem sys = load_system(v_system);
      Checker checker(sys);
      std::vector<CheckReport> reports;
      if (v_all) {
        reports = checker.run_all();
      } else {
        if (v_claim.empty())
          throw Error(Errc::BadParams, "verify needs --claim or --all");
        CheckParams p;
        if (!v_j.empty() || claim_info(v_claim).needs_jk ||
            claim_info(v_claim).needs_ideal)
          p.J = sys.parse_genset(v_j);
        if (!v_k.empty()) p.K = sys.parse_genset(v_k);
        if (!v_ideal.empty()) p.E = load_ideal(sys, v_ideal);
        if (!v_rtable.empty())
          p.rtable = rtable_from_json(sys, read_json_file(v_rtable));
        if (!v_wgraph.empty())
          p.wgraph = wgraph_from_json(sys, read_json_file(v_wgraph));
        reports.push_back(checker.run(v_claim, p));
      }
      for (const auto& r : reports) print_report(r, v_verbose);
      if (!v_report.empty())
        write_file(v_report, reports_to_json(reports, v_timing).dump(2) + "\n");
      return summarize(reports);
    }

    if (hyp->parsed()) {
      LoadedSystem sys = load_system(h_system);
      Checker checker(sys);
      IdealE E = load_ideal(sys, h_ideal);
      std::optional<GenSet> K;
      if (!h_k.empty()) K = sys.parse_genset(h_k);
      CheckReport rep = checker.check_hypotheses(E, sys.parse_genset(h_j), K);
      print_report(rep, true);
      return rep.status == CheckReport::Status::Fail ? 1 : 0;
    }

    if (solve->parsed()) {
      LoadedSystem sys = load_system(s_system);
      IdealE E = load_ideal(sys, s_ideal);
      GenSet J = sys.parse_genset(s_j);
      Variant var = s_variant == "q_s" ? Variant::Qs : Variant::MinusOne;
      SolveOutcome out = solve_r_table(sys.algebra(), E, J, var);
      if (!out.success) {
        std::cout << "FAIL " << errc_name(out.failure) << ": " << out.detail
                  << "\n";
        for (const auto& eq : out.unresolved)
          std::cout << "      unresolved: " << eq << "\n";
        return 1;
      }
      std::cout << "PASS solved " << out.table.rows.size()
                << " weak-ascent rows\n";
      json j = rtable_to_json(sys, out.table);
      if (s_out.empty())
        std::cout << j.dump(2) << "\n";
      else
        write_file(s_out, j.dump(2) + "\n");
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::BadParams:
      case Errc::InvalidMatrix:
      case Errc::UnknownClaim:
      case Errc::InfiniteOrTooLarge:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
