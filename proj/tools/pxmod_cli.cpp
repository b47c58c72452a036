#include "pxmod/io.hpp"
#include "pxmod/peiffer.hpp"
#include "pxmod/theorems.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace pxmod;

namespace {

struct Flags {
  std::string format = "json";
  std::string out;
};

/// Emits the machine result on stdout and a one-line summary on stderr; when
/// --out is given the result is also written to a file in that directory.
void emit(const Flags& fl, const json& result, const std::string& summary,
          const std::string& filename) {
  if (fl.format == "json")
    std::cout << result.dump(2) << "\n";
  else
    std::cout << summary << "\n";
  std::cerr << summary << "\n";
  if (!fl.out.empty()) {
    fs::create_directories(fl.out);
    write_json_file(fs::path(fl.out) / filename, result);
  }
}

void add_common(CLI::App* cmd, Flags& fl) {
  cmd->add_option("--format", fl.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", fl.out, "directory to write result files into");
}

std::string pcm_summary(const LoadedPcm& p) {
  if (p.group) {
    const auto& g = **p.group;
    return "group pre-crossed module '" + g.name + "': |X| = " +
           std::to_string(g.x->order) + ", |B| = " + std::to_string(g.b->order);
  }
  const auto& a = **p.algebra;
  return std::string(a.x->variety == AlgVariety::Associative ? "associative" : "Leibniz") +
         " pre-crossed module '" + a.name + "': dim X = " + std::to_string(a.x->dim) +
         ", dim B = " + std::to_string(a.b->dim);
}

int cmd_validate(const std::string& path, const Flags& fl) {
  LoadedPcm p = load_pcm(path);  // all axioms are checked during loading
  json r{{"ok", true}, {"kind", p.group ? "group" : "algebra"}};
  if (p.group) r["pcm"] = pcm_to_json(**p.group);
  else r["pcm"] = pcm_to_json(**p.algebra);
  emit(fl, r, "valid: " + pcm_summary(p), "validate.json");
  return 0;
}

int cmd_check_crossed(const std::string& path, const Flags& fl) {
  LoadedPcm p = load_pcm(path);
  CrossedCheck c = p.group ? is_crossed(**p.group) : is_crossed(**p.algebra);
  json r{{"crossed", c.crossed}, {"witness", c.witness}};
  emit(fl, r,
       c.crossed ? "crossed: " + pcm_summary(p)
                 : "not crossed (" + c.witness + "): " + pcm_summary(p),
       "check-crossed.json");
  return c.crossed ? 0 : 1;
}

int cmd_commutator(const std::string& path, const std::vector<int>& xgens,
                   const std::vector<int>& ygens, const Flags& fl) {
  LoadedPcm p = load_pcm(path);
  json r;
  std::string summary;
  if (p.group) {
    const GroupPcmRef& a = *p.group;
    GroupSubPcm x = xgens.empty() ? whole_sub_pcm(a)
                                  : sub_pcm_generate(a, EltSet(xgens.begin(), xgens.end()));
    GroupSubPcm y = ygens.empty() ? whole_sub_pcm(a)
                                  : sub_pcm_generate(a, EltSet(ygens.begin(), ygens.end()));
    GroupPeifferWordSet w = peiffer_words(x, y);
    GroupSubPcm c = peiffer_commutator(x, y);
    json words = json::array();
    for (const auto& word : w.words)
      words.push_back({{"word", word.word}, {"x", word.x}, {"y", word.y},
                       {"swapped", word.swapped}});
    r = {{"x", subobject_to_json(x)["elements"]},
         {"y", subobject_to_json(y)["elements"]},
         {"words", words},
         {"commutator", subobject_to_json(c)}};
    summary = "commutator has order " + std::to_string(c.elems.size());
  } else {
    const AlgebraPcmRef& a = *p.algebra;
    Mat xg, yg;
    for (int i : xgens) xg.push_back(a->x->basis_vec(static_cast<std::size_t>(i)));
    for (int i : ygens) yg.push_back(a->x->basis_vec(static_cast<std::size_t>(i)));
    AlgebraSubPcm x = xgens.empty() ? whole_sub_pcm(a) : sub_pcm_generate(a, xg);
    AlgebraSubPcm y = ygens.empty() ? whole_sub_pcm(a) : sub_pcm_generate(a, yg);
    AlgebraPeifferWordSet w = peiffer_words(x, y);
    AlgebraSubPcm c = peiffer_commutator(x, y);
    json words = json::array();
    for (const auto& word : w.words)
      words.push_back({{"word", matrix_to_json({word.word})[0]}, {"x", word.x},
                       {"y", word.y}, {"orientation", word.orientation}});
    r = {{"x", subobject_to_json(x)["basis"]},
         {"y", subobject_to_json(y)["basis"]},
         {"words", words},
         {"commutator", subobject_to_json(c)}};
    summary = "commutator has dimension " + std::to_string(c.space.dim());
  }
  emit(fl, r, summary, "commutator.json");
  return 0;
}

int cmd_product(const std::string& xpath, const std::string& ypath, bool as_coproduct,
                const Flags& fl) {
  LoadedPcm xp = load_pcm(xpath);
  LoadedPcm yp = load_pcm(ypath);
  if (static_cast<bool>(xp.group) != static_cast<bool>(yp.group))
    throw ValidationError("the two inputs are of different kinds");
  json r;
  std::string summary;
  const char* file = as_coproduct ? "coproduct.json" : "product.json";
  if (xp.group) {
    GroupPeifferProduct p = as_coproduct ? coproduct_xmod(*xp.group, *yp.group)
                                         : peiffer_product(*xp.group, *yp.group);
    r = {{"pcm", pcm_to_json(*p.pcm)},
         {"lx", morphism_to_json(p.lx)},
         {"ly", morphism_to_json(p.ly)},
         {"relations", subobject_to_json(p.relations)}};
    summary = "product has order " + std::to_string(p.pcm->x->order);
  } else {
    AlgebraPeifferProduct p = as_coproduct ? coproduct_xmod(*xp.algebra, *yp.algebra)
                                           : peiffer_product(*xp.algebra, *yp.algebra);
    r = {{"pcm", pcm_to_json(*p.pcm)},
         {"lx", morphism_to_json(p.lx)},
         {"ly", morphism_to_json(p.ly)},
         {"relations", subobject_to_json(p.relations)}};
    summary = "product has dimension " + std::to_string(p.pcm->x->dim);
  }
  emit(fl, r, summary, file);
  if (!fl.out.empty())  // the constructed object alone, re-ingestible as input
    write_json_file(fs::path(fl.out) / (std::string(as_coproduct ? "coproduct" : "product") +
                                        "-pcm.json"),
                    r["pcm"]);
  return 0;
}

int cmd_reflect(const std::string& path, const Flags& fl) {
  LoadedPcm in = load_pcm(path);
  json r;
  std::string summary;
  if (in.group) {
    GroupReflection refl = reflect(*in.group);
    r = {{"pcm", pcm_to_json(*refl.pcm)}, {"eta", morphism_to_json(refl.eta)}};
    summary = "reflection has order " + std::to_string(refl.pcm->x->order);
  } else {
    AlgebraReflection refl = reflect(*in.algebra);
    r = {{"pcm", pcm_to_json(*refl.pcm)}, {"eta", morphism_to_json(refl.eta)}};
    summary = "reflection has dimension " + std::to_string(refl.pcm->x->dim);
  }
  emit(fl, r, summary, "reflect.json");
  if (!fl.out.empty())
    write_json_file(fs::path(fl.out) / "reflect-pcm.json", r["pcm"]);
  return 0;
}

int cmd_check_theorems(const CheckConfig& cfg, const Flags& fl) {
  auto reports = run_theorem_checks(cfg);
  std::size_t fails = 0;
  double seconds = 0.0;
  for (const auto& r : reports) {
    fails += !r.pass;
    seconds += r.seconds;
    if (fl.format == "json")
      std::cout << report_line(r) << "\n";
    else
      std::cout << (r.pass ? "pass " : "FAIL ") << r.check << " on " << r.instance
                << (r.pass ? "" : ": " + r.witness) << "\n";
  }
  std::ostringstream sum;
  sum << reports.size() << " checks, " << fails << " failures (" << seconds << "s)";
  std::cerr << sum.str() << "\n";
  if (!fl.out.empty()) {
    fs::create_directories(fl.out);
    std::ofstream os(fs::path(fl.out) / "report.jsonl");
    for (const auto& r : reports) os << report_line(r) << "\n";
  }
  return fails == 0 ? 0 : 1;
}

int cmd_generate(const CheckConfig& cfg, std::size_t budget, const Flags& fl) {
  std::vector<json> files;
  if (cfg.variety == "mixed" || cfg.variety == "group")
    for (const auto& p : random_group_pcms(cfg.seed, cfg.count, cfg.max_order))
      files.push_back(pcm_to_json(*p));
  if (cfg.variety != "group")
    for (const auto& p : random_algebra_pcms(cfg.seed, cfg.count, cfg.max_dim)) {
      if (cfg.variety == "assoc" && p->x->variety != AlgVariety::Associative) continue;
      if (cfg.variety == "leibniz" && p->x->variety != AlgVariety::Leibniz) continue;
      files.push_back(pcm_to_json(*p));
    }
  if (files.size() > budget) files.resize(budget);
  if (files.empty()) std::cerr << "warning: no instance found within budget\n";
  json names = json::array();
  if (!fl.out.empty()) {
    fs::create_directories(fl.out);
    for (std::size_t i = 0; i < files.size(); ++i) {
      std::string name = "pcm-" + std::to_string(i) + ".json";
      write_json_file(fs::path(fl.out) / name, files[i]);
      names.push_back(name);
    }
  }
  json r{{"count", files.size()}, {"files", names}};
  if (fl.out.empty()) r["instances"] = files;
  emit(fl, r, "generated " + std::to_string(files.size()) + " instances",
       "generate.json");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations with pre-crossed and crossed modules over a fixed base"};
  app.require_subcommand(1);

  Flags fl;
  CheckConfig cfg;
  std::string path, xpath, ypath;
  std::vector<int> xgens, ygens;
  std::size_t budget = 1000;

  auto* validate = app.add_subcommand("validate", "check a pre-crossed module file");
  validate->add_option("path", path)->required();
  add_common(validate, fl);

  auto* crossed = app.add_subcommand("check-crossed", "test the Peiffer identity");
  crossed->add_option("path", path)->required();
  add_common(crossed, fl);

  auto* comm = app.add_subcommand("commutator", "Peiffer commutator of two subobjects");
  comm->add_option("path", path)->required();
  comm->add_option("--x", xgens, "generators of X (element or basis indices; empty = all)");
  comm->add_option("--y", ygens, "generators of Y (element or basis indices; empty = all)");
  add_common(comm, fl);

  auto* prod = app.add_subcommand("product", "Peiffer product of two pre-crossed modules");
  prod->add_option("x-path", xpath)->required();
  prod->add_option("y-path", ypath)->required();
  add_common(prod, fl);

  auto* refl = app.add_subcommand("reflect", "reflection onto crossed modules");
  refl->add_option("path", path)->required();
  add_common(refl, fl);

  auto* coprod = app.add_subcommand("coproduct", "coproduct of two crossed modules");
  coprod->add_option("x-path", xpath)->required();
  coprod->add_option("y-path", ypath)->required();
  add_common(coprod, fl);

  auto* check = app.add_subcommand("check-theorems", "run the property-check suites");
  check->add_option("--seed", cfg.seed);
  check->add_option("--max-order", cfg.max_order);
  check->add_option("--max-dim", cfg.max_dim);
  check->add_option("--variety", cfg.variety)
      ->check(CLI::IsMember({"group", "assoc", "leibniz", "mixed"}));
  check->add_option("--count", cfg.count, "random instances per variety");
  check->add_flag("--corrupt", cfg.corrupt, "inject a broken instance (negative path)");
  add_common(check, fl);

  auto* gen = app.add_subcommand("generate", "emit validated random instances");
  gen->add_option("--seed", cfg.seed);
  gen->add_option("--max-order", cfg.max_order);
  gen->add_option("--max-dim", cfg.max_dim);
  gen->add_option("--variety", cfg.variety)
      ->check(CLI::IsMember({"group", "assoc", "leibniz", "mixed"}));
  gen->add_option("--count", cfg.count, "instances per variety");
  gen->add_option("--budget", budget, "overall cap on emitted instances");
  add_common(gen, fl);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors map to exit code 2
  }

  try {
    if (validate->parsed()) return cmd_validate(path, fl);
    if (crossed->parsed()) return cmd_check_crossed(path, fl);
    if (comm->parsed()) return cmd_commutator(path, xgens, ygens, fl);
    if (prod->parsed()) return cmd_product(xpath, ypath, false, fl);
    if (refl->parsed()) return cmd_reflect(path, fl);
    if (coprod->parsed()) return cmd_product(xpath, ypath, true, fl);
    if (check->parsed()) return cmd_check_theorems(cfg, fl);
    if (gen->parsed()) return cmd_generate(cfg, budget, fl);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
