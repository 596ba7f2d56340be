#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetacorr/jacquet.hpp"
#include "thetacorr/selfcheck.hpp"
#include "thetacorr/session.hpp"
#include "thetacorr/tables.hpp"

using namespace thetacorr;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvariant = 2;

std::string join(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
  return s;
}

void print_result(const CommandResult& r, bool as_json) {
  if (as_json) {
    std::cout << r.to_json() << "\n";
    return;
  }
  std::cout << r.operation << ": " << r.output;
  if (!r.provenance.empty()) std::cout << "  [" << r.provenance << "]";
  std::cout << "\n";
  for (const auto& [name, ok] : r.invariant_checks)
    if (!ok) std::cout << "  invariant failed: " << name << "\n";
}

int report_error(const Error& e, bool as_json) {
  if (as_json) {
    json err{{"code", e.code()}, {"message", e.what()}};
    if (auto* p = dynamic_cast<const ParseError*>(&e)) {
      err["line"] = p->line();
      err["column"] = p->column();
      err["message"] = p->message();
    } else if (auto* l = dynamic_cast<const LocatedError*>(&e)) {
      err["line"] = l->line();
      err["column"] = l->column();
      err["message"] = l->message();
    }
    std::cout << json{{"error", err}}.dump() << "\n";
  } else {
    std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
  }
  return kUsage;
}

int run_checks(const std::string& which, bool as_json) {
  std::vector<CheckReport> reports;
  if (which == "all") reports = run_all_oracles();
  else reports.push_back(run_oracle(which));
  bool ok = true;
  json arr = json::array();
  for (const auto& r : reports) {
    ok = ok && r.pass;
    if (as_json)
      arr.push_back({{"oracle", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"failures", r.failures}, {"detail", r.detail}});
    else
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases) " << r.detail << "\n";
  }
  if (as_json) std::cout << arr.dump(2) << "\n";
  return ok ? kOk : kInvariant;
}

int emit_jacquet(bool as_json) {
  bool ok = true;
  json arr = json::array();
  for (auto s : {Specialization::P9_1, Specialization::P10_1, Specialization::P10_2, Specialization::P10_3}) {
    FiltrationSpec spec = specialization_spec(s);
    bool pass = specialize_check(s);
    ok = ok && pass;
    auto qs = filtration(spec);
    if (as_json) {
      json q = json::array();
      for (const auto& fq : qs) q.push_back(format(fq));
      arr.push_back({{"specialization", to_string(s)},
                     {"m", spec.m},
                     {"n", spec.n},
                     {"side", spec.side == Side::Orthogonal ? "orth" : "sympl"},
                     {"parabolic", spec.parabolic},
                     {"quotients", q},
                     {"check", pass}});
    } else {
      std::cout << to_string(s) << " (m=" << spec.m << ", n=" << spec.n << ", "
                << (spec.side == Side::Orthogonal ? "t=" : "k=") << spec.parabolic << ") "
                << (pass ? "PASS" : "FAIL") << "\n";
      for (const auto& fq : qs) std::cout << "  " << format(fq) << "\n";
    }
  }
  if (as_json) std::cout << arr.dump(2) << "\n";
  return ok ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit local theta correspondences for GSp4 and L-parameter tools"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string input_file;
  std::vector<std::string> decls;
  bool as_json = false, tables = false, jacquet_table = false, prelude = false;
  std::string check;
  app.add_option("--input", input_file, "Session file with declarations and queries")->check(CLI::ExistingFile);
  app.add_option("--decl", decls, "Extra declaration statement (repeatable)");
  app.add_flag("--prelude", prelude, "Declare the generic symbols used by the tables");
  app.add_flag("--json", as_json, "Emit JSON");
  app.add_flag("--emit-tables", tables, "Reproduce the three lift tables");
  app.add_flag("--jacquet", jacquet_table, "Print the four worked Jacquet filtrations");
  app.add_option("--check", check, "Run a self-check oracle (or 'all')");

  std::vector<std::string> expr;
  std::string from;
  auto* lift = app.add_subcommand("lift", "Theta lift of a representation");
  lift->add_option("--from", from, "Source group")->check(CLI::IsMember({"gso22", "gso40", "gsp4"}))->required();
  lift->add_option("expr", expr, "Representation")->required();

  std::vector<std::pair<std::string, CLI::App*>> simple;
  for (const char* name : {"preimage", "dichotomy", "lparam", "adjoint", "generic-check", "classify", "show"}) {
    auto* sub = app.add_subcommand(name, std::string(name) + " of a representation");
    sub->add_option("expr", expr, "Expression")->required();
    simple.push_back({name, sub});
  }

  std::vector<std::string> satake_args;
  auto* satake = app.add_subcommand("satake", "Satake transfer of an unramified Borel datum");
  satake->add_option("chars", satake_args, "t1 t2 v")->required()->expected(3);

  int jm = 0, jn = 0, jk = -1, jt = -1, witt = -1;
  std::string side = "orth";
  bool isometry = false;
  auto* jac = app.add_subcommand("jacquet", "Jacquet filtration of the induced Weil representation");
  jac->add_option("--m", jm, "Dimension of the quadratic space")->required();
  jac->add_option("--n", jn, "Half the symplectic dimension")->required();
  jac->add_option("--side", side, "Parabolic side")->check(CLI::IsMember({"orth", "sympl"}));
  jac->add_option("--k", jk, "Symplectic parabolic index");
  jac->add_option("--t", jt, "Orthogonal parabolic index");
  jac->add_option("--witt", witt, "Witt index (default m/2)");
  jac->add_flag("--isometry", isometry, "Isometry variant (drops e0, f0)");

  std::vector<std::string> stmt;
  auto* query = app.add_subcommand("query", "Run one statement of the declaration language");
  query->add_option("statement", stmt, "Statement")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!check.empty()) return run_checks(check, as_json);
    if (tables) {
      auto rows = emit_tables();
      if (as_json) std::cout << tables_to_json(rows) << "\n";
      else
        for (const auto& r : rows) std::cout << format(r) << "\n";
      return kOk;
    }
    if (jacquet_table) return emit_jacquet(as_json);

    Session session;
    if (prelude) session.run(tables_prelude());
    for (const auto& d : decls) session.run(d);
    std::vector<CommandResult> results;
    if (!input_file.empty()) {
      std::ifstream in(input_file);
      std::stringstream buf;
      buf << in.rdbuf();
      results = session.run(buf.str());
    }

    std::string statement;
    if (*lift) statement = "lift " + from + " " + join(expr);
    for (const auto& [name, sub] : simple)
      if (*sub) statement = std::string(name == std::string("generic-check") ? "generic_check" : name) + " " + join(expr);
    if (*satake) statement = "satake(" + satake_args[0] + ", " + satake_args[1] + ", " + satake_args[2] + ")";
    if (*jac) {
      if ((jk >= 0) == (jt >= 0)) {
        std::cerr << "jacquet: give exactly one of --k or --t\n";
        return kUsage;
      }
      if (jk >= 0 && side != "sympl" && jac->count("--side")) {
        std::cerr << "jacquet: --k belongs to --side sympl\n";
        return kUsage;
      }
      if (jt >= 0 && side != "orth") {
        std::cerr << "jacquet: --t belongs to --side orth\n";
        return kUsage;
      }
      statement = "jacquet m=" + std::to_string(jm) + " n=" + std::to_string(jn) +
                  (jk >= 0 ? " k=" + std::to_string(jk) : " t=" + std::to_string(jt)) +
                  (witt >= 0 ? " r=" + std::to_string(witt) : "") + (isometry ? " isometry" : "");
    }
    if (*query) statement = join(stmt);
    if (!statement.empty()) results.push_back(session.query(statement));

    if (results.empty() && input_file.empty()) {
      std::cerr << app.help();
      return kUsage;
    }
    bool ok = true;
    for (const auto& r : results) {
      print_result(r, as_json);
      ok = ok && r.checks_pass();
    }
    return ok ? kOk : kInvariant;
  } catch (const Error& e) {
    return report_error(e, as_json);
  }
}
