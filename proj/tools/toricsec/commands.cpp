#include "commands.hpp"

#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"

#include "toricsec/constructors.hpp"
#include "toricsec/error.hpp"

namespace toricsec::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string list_str(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

ordered_json violations_json(const std::vector<Violation>& vs) {
  ordered_json out = ordered_json::array();
  for (const auto& v : vs) {
    out.push_back(ordered_json{{"source", v.source}, {"target", v.target}, {"degree", v.degree},
                               {"dimension", v.dimension}});
  }
  return out;
}

ordered_json ext_table_json(const ExtTable& t) {
  ordered_json out = ordered_json::array();
  for (const auto& row : t) {
    ordered_json r = ordered_json::array();
    for (const auto& cell : row) r.push_back(cell.dims);
    out.push_back(std::move(r));
  }
  return out;
}

ordered_json report_json(const CheckReport& r) {
  return ordered_json{{"verdict", r.pass ? "pass" : "fail"},
                      {"violations", violations_json(r.violations)},
                      {"ext_table", ext_table_json(r.ext_table)}};
}

ordered_json bundles_json(const Collection& c) {
  ordered_json out = ordered_json::array();
  for (const auto& b : c.bundles()) out.push_back(b.coeffs());
  return out;
}

std::string verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

void render_violations(std::ostream& os, const std::vector<Violation>& vs) {
  if (vs.empty()) return;
  os << "  violations (Ext^degree(E_source, E_target) != 0):\n";
  os << "    source  target  degree  dimension\n";
  for (const auto& v : vs) {
    os << "    " << std::setw(6) << v.source << "  " << std::setw(6) << v.target << "  " << std::setw(6)
       << v.degree << "  " << std::setw(9) << v.dimension << "\n";
  }
}

void render_bundles(std::ostream& os, const Collection& c) {
  for (std::size_t i = 0; i < c.size(); ++i) os << "  E" << i << " = " << list_str(c[i].coeffs()) << "\n";
}

const std::string& operand(const CommandRequest& req, std::size_t i, const char* what) {
  if (req.operands.size() <= i) throw InputError(std::string("missing operand: ") + what);
  return req.operands[i];
}

const WorkspaceDocument& need(const WorkspaceDocument* ws) {
  if (!ws) throw InputError("this command needs a workspace file");
  return *ws;
}

CheckOptions check_options(const CommandRequest& req) { return CheckOptions{req.threads}; }

CommandResult cmd_check(const WorkspaceDocument* ws, const CommandRequest& req) {
  const auto& name = operand(req, 0, "collection");
  const Collection c = need(ws).collection(name);
  const ExtTable table = compute_ext_table(c, check_options(req));
  const CheckReport exc = check_exceptional(table);
  const CheckReport strong = check_strongly_exceptional(table);
  const bool k0 = k0_length_check(c);

  CommandResult res;
  res.exit_code = strong.pass ? kSuccess : kCheckFailed;
  if (req.json) {
    ordered_json out{{"command", "check"},
                     {"collection", name},
                     {"length", c.size()},
                     {"max_cones", c.fan().num_max_cones()},
                     {"exceptional", {{"verdict", exc.pass ? "pass" : "fail"}, {"violations", violations_json(exc.violations)}}},
                     {"strongly_exceptional",
                      {{"verdict", strong.pass ? "pass" : "fail"}, {"violations", violations_json(strong.violations)}}},
                     {"ext_table", ext_table_json(table)},
                     {"k0_length", k0},
                     {"fullness", "not verified"}};
    res.output = out.dump(2) + "\n";
    return res;
  }
  std::ostringstream os;
  os << "collection " << name << ": " << c.size() << " bundles, " << c.fan().num_max_cones() << " maximal cones\n";
  os << "exceptional: " << verdict(exc.pass) << "\n";
  render_violations(os, exc.violations);
  os << "strongly exceptional: " << verdict(strong.pass) << "\n";
  render_violations(os, strong.violations);
  os << "k0 length: " << verdict(k0) << " (" << c.size() << " bundles, " << c.fan().num_max_cones()
     << " maximal cones)\n";
  os << "fullness: not verified (the length condition is necessary only)\n";
  res.output = os.str();
  return res;
}

CommandResult cmd_cohomology(const WorkspaceDocument* ws, const CommandRequest& req) {
  const auto& name = operand(req, 0, "divisor");
  const TorusDivisor d = need(ws).divisor(name);
  require_smooth_complete(d.fan());
  const CohomologyTable t = cohomology_dims(d);
  CommandResult res;
  if (req.json) {
    res.output = ordered_json{{"command", "cohomology"}, {"divisor", name}, {"dims", t.dims}}.dump(2) + "\n";
    return res;
  }
  std::ostringstream os;
  for (std::size_t p = 0; p < t.size(); ++p) os << (p ? " " : "") << "h" << p << "=" << t[p];
  os << "\n";
  res.output = os.str();
  return res;
}

CommandResult cmd_ext_table(const WorkspaceDocument* ws, const CommandRequest& req) {
  const auto& name = operand(req, 0, "collection");
  const Collection c = need(ws).collection(name);
  const ExtTable t = compute_ext_table(c, check_options(req));
  CommandResult res;
  if (req.json) {
    res.output =
        ordered_json{{"command", "ext-table"}, {"collection", name}, {"ext_table", ext_table_json(t)}}.dump(2) + "\n";
    return res;
  }
  std::ostringstream os;
  for (std::size_t s = 0; s < t.size(); ++s) {
    for (std::size_t u = 0; u < t.size(); ++u) {
      os << "Ext(E" << s << ", E" << u << ") = " << list_str(t[s][u].dims) << "\n";
    }
  }
  res.output = os.str();
  return res;
}

CommandResult cmd_hom_quiver(const WorkspaceDocument* ws, const CommandRequest& req) {
  const auto& name = operand(req, 0, "collection");
  const Collection c = need(ws).collection(name);
  const auto q = hom_quiver(c, check_options(req));
  CommandResult res;
  if (req.json) {
    res.output = ordered_json{{"command", "hom-quiver"}, {"collection", name}, {"hom_quiver", q}}.dump(2) + "\n";
    return res;
  }
  std::ostringstream os;
  for (const auto& row : q) os << list_str(row) << "\n";
  res.output = os.str();
  return res;
}

CommandResult cmd_k0(const WorkspaceDocument* ws, const CommandRequest& req) {
  const auto& name = operand(req, 0, "collection");
  const Collection c = need(ws).collection(name);
  require_smooth_complete(c.fan());
  const bool ok = k0_length_check(c);
  CommandResult res;
  res.exit_code = ok ? kSuccess : kCheckFailed;
  if (req.json) {
    res.output = ordered_json{{"command", "k0"},
                              {"collection", name},
                              {"length", c.size()},
                              {"max_cones", c.fan().num_max_cones()},
                              {"k0_length", ok}}
                     .dump(2) +
                 "\n";
    return res;
  }
  res.output = "k0 length: " + verdict(ok) + " (" + std::to_string(c.size()) + " bundles, " +
               std::to_string(c.fan().num_max_cones()) + " maximal cones)\n";
  return res;
}

// Shared tail of the construct-* commands: verify and emit a workspace.
CommandResult emit_construction(const std::string& command, WorkspaceDocument doc, const std::string& coll_name,
                                const Collection& c, const CommandRequest& req) {
  const CheckReport report = check_strongly_exceptional(c, check_options(req));
  CommandResult res;
  res.exit_code = report.pass ? kSuccess : kCheckFailed;
  if (req.json) {
    ordered_json out{{"command", command},
                     {"workspace", ordered_json::parse(serialize_workspace(doc))},
                     {"collection", coll_name},
                     {"k0_length", k0_length_check(c)},
                     {"report", report_json(report)}};
    res.output = out.dump(2) + "\n";
    return res;
  }
  std::ostringstream os;
  os << command << ": collection " << coll_name << " with " << c.size() << " bundles\n";
  os << "strongly exceptional: " << verdict(report.pass) << "\n";
  render_violations(os, report.violations);
  os << "k0 length: " << verdict(k0_length_check(c)) << "\n";
  os << serialize_workspace(doc);
  res.output = os.str();
  return res;
}

CommandResult cmd_construct_beilinson(const WorkspaceDocument*, const CommandRequest& req) {
  if (req.n < 1) throw InputError("construct-beilinson needs --n >= 1");
  const Construction b = beilinson(req.n);
  WorkspaceDocument doc;
  const std::string fan_name = "P" + std::to_string(req.n);
  add_fan(doc, fan_name, b.fan);
  add_collection(doc, "beilinson", fan_name, b.collection);
  return emit_construction("construct-beilinson", std::move(doc), "beilinson", b.collection, req);
}

CommandResult cmd_construct_product(const WorkspaceDocument* ws, const CommandRequest& req) {
  const auto& n1 = operand(req, 0, "first collection");
  const auto& n2 = operand(req, 1, "second collection");
  const auto& w = need(ws);
  const Construction p = product(w.collection(n1), w.collection(n2), check_options(req));
  WorkspaceDocument doc;
  const std::string fan_name = w.collections.at(n1).fan + "x" + w.collections.at(n2).fan;
  const std::string coll_name = n1 + "x" + n2;
  add_fan(doc, fan_name, p.fan);
  add_collection(doc, coll_name, fan_name, p.collection);
  return emit_construction("construct-product", std::move(doc), coll_name, p.collection, req);
}

Collection fiber_collection(const WorkspaceDocument& w, const FibrationData& fd, const CommandRequest& req) {
  if (req.fiber.empty()) return Collection(fd.fiber, {TorusDivisor::zero(fd.fiber)});
  return w.collection(req.fiber);
}

Collection base_collection(const WorkspaceDocument& w, const CommandRequest& req) {
  if (req.base.empty()) throw InputError("missing --base collection");
  return w.collection(req.base);
}

CommandResult cmd_construct_fibration(const WorkspaceDocument* ws, const CommandRequest& req) {
  const auto& name = operand(req, 0, "fibration");
  const auto& w = need(ws);
  const FibrationData& fd = w.fibration(name);
  const Collection base = base_collection(w, req);
  const TorusDivisor d = req.twist.empty() ? TorusDivisor::zero(fd.base) : w.divisor(req.twist);
  const Collection c = fibration_collection(fd, fiber_collection(w, fd, req), base, d);
  WorkspaceDocument doc;
  const std::string& total = w.fibrations.at(name).total;
  add_fan(doc, total, fd.total);
  add_collection(doc, name + "_collection", total, c);
  return emit_construction("construct-fibration", std::move(doc), name + "_collection", c, req);
}

CommandResult cmd_twist_search(const WorkspaceDocument* ws, const CommandRequest& req) {
  const auto& name = operand(req, 0, "fibration");
  const auto& w = need(ws);
  const FibrationData& fd = w.fibration(name);
  const Collection fiber = fiber_collection(w, fd, req);
  const Collection base = base_collection(w, req);
  if (req.k_max < 0) throw InputError("--kmax must be non-negative");
  TorusDivisor ample = TorusDivisor::zero(fd.base);
  if (req.ample.empty()) {
    auto found = find_ample(fd.base);
    if (!found) throw InputError("no ample divisor found on the base; pass --ample");
    ample = *found;
  } else {
    ample = w.divisor(req.ample);
  }
  const std::string triviality = fd.locally_trivial_certified ? "certified" : "unverified";

  CommandResult res;
  std::ostringstream os;
  try {
    const TwistSearchResult r = twist_search(fd, fiber, base, ample, req.k_max, check_options(req));
    if (req.json) {
      ordered_json out{{"command", "twist-search"},
                       {"fibration", name},
                       {"local_triviality", triviality},
                       {"ample", ample.coeffs()},
                       {"k", r.k},
                       {"D", r.twist.coeffs()},
                       {"collection", bundles_json(r.collection)},
                       {"k0_length", k0_length_check(r.collection)},
                       {"report", report_json(r.report)}};
      res.output = out.dump(2) + "\n";
      return res;
    }
    os << "fibration " << name << ": local triviality " << triviality << "\n";
    os << "twist search: k = " << r.k << " (A = " << list_str(ample.coeffs()) << ", D = "
       << list_str(r.twist.coeffs()) << ")\n";
    os << "strongly exceptional: " << verdict(r.report.pass) << "\n";
    os << "k0 length: " << verdict(k0_length_check(r.collection)) << "\n";
    os << "collection (" << r.collection.size() << " bundles):\n";
    render_bundles(os, r.collection);
    res.output = os.str();
    return res;
  } catch (const SearchExhaustedError& e) {
    res.exit_code = kCheckFailed;
    if (req.json) {
      ordered_json out{{"command", "twist-search"},
                       {"fibration", name},
                       {"local_triviality", triviality},
                       {"ample", ample.coeffs()},
                       {"k", nullptr},
                       {"k_max", e.k_max()},
                       {"best_k", e.best_k()},
                       {"report", report_json(e.best_report())}};
      res.output = out.dump(2) + "\n";
      return res;
    }
    os << "fibration " << name << ": local triviality " << triviality << "\n";
    os << "twist search: exhausted k = 0.." << e.k_max() << " (A = " << list_str(ample.coeffs()) << ")\n";
    os << "best candidate k = " << e.best_k() << ":\n";
    render_violations(os, e.best_report().violations);
    res.output = os.str();
    return res;
  }
}

using Handler = std::function<CommandResult(const WorkspaceDocument*, const CommandRequest&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"check", cmd_check},
      {"cohomology", cmd_cohomology},
      {"ext-table", cmd_ext_table},
      {"hom-quiver", cmd_hom_quiver},
      {"construct-beilinson", cmd_construct_beilinson},
      {"construct-product", cmd_construct_product},
      {"construct-fibration", cmd_construct_fibration},
      {"twist-search", cmd_twist_search},
      {"k0", cmd_k0},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

CommandResult run_command(const WorkspaceDocument* workspace, const CommandRequest& request) {
  auto it = handlers().find(request.command);
  if (it == handlers().end()) {
    return {kInputError, "", "UnknownCommand: " + request.command + "\n"};
  }
  try {
    return it->second(workspace, request);
  } catch (const InputError& e) {
    return {kInputError, "", std::string("error: ") + e.what() + "\n"};
  } catch (const WorkspaceError& e) {
    return {kInputError, "", std::string("error: ") + e.what() + "\n"};
  } catch (const ToricError& e) {
    return {kInputError, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kInputError, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace toricsec::cli
