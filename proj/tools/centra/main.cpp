#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "centra/classify.hpp"
#include "centra/error.hpp"
#include "centra/group_ops.hpp"
#include "centra/groupspec.hpp"
#include "centra/json_io.hpp"
#include "centra/lattice.hpp"
#include "centra/verifier.hpp"

namespace {

  using nlohmann::json;

  constexpr int kUsage = 2;

  void emit(json const& j, std::string const& out) {
    if (out.empty()) {
      std::cout << j.dump() << '\n';
      return;
    }
    std::ofstream f(out);
    if (!f) {
      throw centra::UsageError("cannot write " + out);
    }
    f << j.dump(2) << '\n';
  }

  int write_reports(std::vector<centra::TheoremReport> const& reports, std::string const& report) {
    auto const text = centra::reports_to_jsonl(reports);
    if (report.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(report, std::ios::binary);
      if (!f) {
        throw centra::UsageError("cannot write " + report);
      }
      f << text;
    }
    auto const s = centra::summarize(reports);
    std::cerr << "pass " << s.pass << "  fail " << s.fail << "  skipped " << s.skipped << '\n';
    return centra::exit_status(reports);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"centra: self-centralizing subgroup classes of finite groups"};
  app.require_subcommand(1);

  std::string spec;
  std::string out;
  std::string data_dir = centra::VerifyOptions::default_data_dir().string();
  app.add_option("--data-dir", data_dir, "fallback directory for @ paths in group specs");

  auto* construct = app.add_subcommand("construct", "build a group and print its generators");
  construct->add_option("spec", spec, "group spec")->required();
  construct->add_option("--out", out, "write JSON here instead of stdout");

  bool  bruteforce = false;
  auto* check_x    = app.add_subcommand("check-x", "decide membership in class X");
  check_x->add_option("spec", spec, "group spec")->required();
  check_x->add_flag("--bruteforce", bruteforce, "scan every subgroup instead of pairs");

  auto* check_c = app.add_subcommand("check-c", "decide membership in class C");
  check_c->add_option("spec", spec, "group spec")->required();

  bool  count_only = false;
  auto* subgroups  = app.add_subcommand("subgroups", "enumerate subgroups");
  subgroups->add_option("spec", spec, "group spec")->required();
  subgroups->add_flag("--count", count_only, "print counts only");

  auto* structure = app.add_subcommand("structure", "print structural invariants");
  structure->add_option("spec", spec, "group spec")->required();

  std::string                theorem;
  std::size_t                jobs = 1;
  std::optional<std::size_t> max_order;
  std::string                report;
  bool                       emit_manifest = false;
  auto* verify = app.add_subcommand("verify", "run the built-in sweep for a theorem id or 'all'");
  verify->add_option("theorem", theorem, "theorem id")->required();
  verify->add_option("--max-order", max_order, "skip groups larger than this");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--report", report, "write JSON lines here instead of stdout");
  verify->add_flag("--emit-manifest", emit_manifest, "print the sweep as a manifest instead");

  std::string manifest;
  auto*       run_manifest = app.add_subcommand("run-manifest", "run every instance of a manifest");
  run_manifest->add_option("file", manifest, "manifest JSON")->required()->check(CLI::ExistingFile);
  run_manifest->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  run_manifest->add_option("--max-order", max_order, "skip groups larger than this");
  run_manifest->add_option("--report", report, "write JSON lines here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    centra::SpecContext ctx;
    ctx.base_dir     = std::filesystem::current_path();
    ctx.fallback_dir = data_dir;

    if (*construct) {
      auto r = centra::resolve_group_spec(spec, ctx);
      auto j = centra::group_to_json(*r.group);
      if (r.realization) {
        j["convention"] = std::string(centra::to_string(r.realization->convention));
        j["order_a"]    = r.realization->order_a ? json(*r.realization->order_a) : json(nullptr);
        j["order_b"]    = r.realization->order_b ? json(*r.realization->order_b) : json(nullptr);
      }
      emit(j, out);
      return 0;
    }
    if (*check_x) {
      auto G = centra::build_group(spec, ctx);
      auto v = bruteforce ? centra::in_class_X_bruteforce(*G) : centra::in_class_X(*G);
      emit(centra::verdict_to_json(v, spec), "");
      return 0;
    }
    if (*check_c) {
      auto G = centra::build_group(spec, ctx);
      emit(centra::verdict_to_json(centra::in_class_C(*G), spec), "");
      return 0;
    }
    if (*subgroups) {
      auto G    = centra::build_group(spec, ctx);
      auto list = centra::all_subgroups(*G);
      auto j    = centra::subgroup_counts_to_json(*G, list);
      if (!count_only) {
        json items = json::array();
        for (auto const& S : list) {
          json gens = json::array();
          for (auto g : centra::generating_set(S)) {
            gens.push_back(G->element(g).to_cycles());
          }
          items.push_back({{"order", S.order()}, {"generators", gens}});
        }
        j["items"] = items;
      }
      emit(j, "");
      return 0;
    }
    if (*structure) {
      auto G = centra::build_group(spec, ctx);
      auto j = centra::structure_to_json(centra::structure(*G));
      j["recognized"] = centra::describe(*G);
      emit(j, "");
      return 0;
    }

    centra::VerifyOptions opts;
    opts.jobs      = jobs;
    opts.max_order = max_order;
    opts.data_dir  = data_dir;
    if (*verify) {
      if (theorem != "all") {
        auto const& ids = centra::theorem_ids();
        if (std::find(ids.begin(), ids.end(), theorem) == ids.end()) {
          std::cerr << "unknown theorem id '" << theorem << "'\n";
          return kUsage;
        }
      }
      if (emit_manifest) {
        std::cout << centra::manifest_to_json(centra::default_instances(theorem)).dump(2) << '\n';
        return 0;
      }
      return write_reports(centra::verify(theorem, opts), report);
    }
    if (*run_manifest) {
      return write_reports(centra::run_manifest(manifest, opts), report);
    }
  } catch (centra::UsageError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (centra::ParseError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (centra::CapExceeded const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
