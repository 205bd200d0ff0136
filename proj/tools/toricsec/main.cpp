#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "commands.hpp"

using namespace toricsec::cli;

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly exceptional collections of line bundles on smooth complete toric varieties"};
  app.require_subcommand(1);
  app.fallthrough();

  CommandRequest req;
  std::string workspace_path;
  app.add_flag("--json", req.json, "Machine-readable output");
  app.add_option("--threads", req.threads, "Worker threads for Ext tables (0 = all cores)")
      ->envname("TORICSEC_THREADS");

  auto add_ws = [&](CLI::App* sub) { sub->add_option("workspace", workspace_path, "Workspace JSON file")->required(); };

  auto* check = app.add_subcommand("check", "Exceptionality checks and the K0 length condition for a collection");
  add_ws(check);
  check->add_option("collection", req.operands, "Collection name")->required()->expected(1);

  auto* coh = app.add_subcommand("cohomology", "Sheaf cohomology dimensions of a divisor");
  add_ws(coh);
  coh->add_option("divisor", req.operands, "Divisor name")->required()->expected(1);

  auto* ext = app.add_subcommand("ext-table", "Full Ext table of a collection");
  add_ws(ext);
  ext->add_option("collection", req.operands, "Collection name")->required()->expected(1);

  auto* quiver = app.add_subcommand("hom-quiver", "dim Hom(E_j, E_k) matrix of a collection");
  add_ws(quiver);
  quiver->add_option("collection", req.operands, "Collection name")->required()->expected(1);

  auto* k0 = app.add_subcommand("k0", "Compare the length of a collection with rank K0");
  add_ws(k0);
  k0->add_option("collection", req.operands, "Collection name")->required()->expected(1);

  auto* beil = app.add_subcommand("construct-beilinson", "O, O(1), ..., O(n) on P^n");
  beil->add_option("--n", req.n, "Dimension")->required()->check(CLI::PositiveNumber);

  auto* prod = app.add_subcommand("construct-product", "Box products of two collections");
  add_ws(prod);
  prod->add_option("collections", req.operands, "Two collection names")->required()->expected(2);

  auto* fib = app.add_subcommand("construct-fibration", "Collection on the total space of a fibration");
  add_ws(fib);
  fib->add_option("fibration", req.operands, "Fibration name")->required()->expected(1);
  fib->add_option("--fiber", req.fiber, "Fiber collection (default: the structure sheaf)");
  fib->add_option("--base", req.base, "Base collection")->required();
  fib->add_option("--twist", req.twist, "Twist divisor on the base (default: 0)");

  auto* search = app.add_subcommand("twist-search", "Smallest k such that the k*A twist is strongly exceptional");
  add_ws(search);
  search->add_option("fibration", req.operands, "Fibration name")->required()->expected(1);
  search->add_option("--fiber", req.fiber, "Fiber collection (default: the structure sheaf)");
  search->add_option("--base", req.base, "Base collection")->required();
  search->add_option("--ample", req.ample, "Ample divisor on the base (default: searched)");
  search->add_option("--kmax", req.k_max, "Largest k tried")->check(CLI::NonNegativeNumber);

  for (int i = 1; i < argc; ++i) {
    const std::string tok = argv[i];
    if (tok == "--threads") {
      ++i;
      continue;
    }
    if (tok.starts_with("-")) continue;
    const auto& known = known_commands();
    if (std::find(known.begin(), known.end(), tok) == known.end()) {
      std::cerr << "UnknownCommand: " << tok << "\n";
      return kInputError;
    }
    break;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  req.command = app.get_subcommands().front()->get_name();

  std::optional<WorkspaceDocument> doc;
  if (!workspace_path.empty()) {
    auto text = read_file(workspace_path);
    if (!text) {
      std::cerr << "error: cannot read " << workspace_path << "\n";
      return kInputError;
    }
    try {
      doc = parse_workspace(*text);
    } catch (const WorkspaceError& e) {
      std::cerr << "error: " << workspace_path << ": " << e.what() << "\n";
      return kInputError;
    }
  }

  const CommandResult res = run_command(doc ? &*doc : nullptr, req);
  std::cout << res.output;
  std::cerr << res.error;
  return res.exit_code;
}
