#include "aulist/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "aulist/error.hpp"
#include "aulist/oracle.hpp"
#include "aulist/problem_io.hpp"
#include "aulist/selector.hpp"

namespace aulist {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const std::pair<Expression, Expression>& single_equation(const ProblemFile& pf) {
  if (pf.equations.size() != 1)
    throw InputError("this command needs a problem file with exactly one equation");
  return pf.equations.front();
}

std::vector<Equation> normalized_equations(const ProblemFile& pf) {
  std::vector<Equation> eqs;
  eqs.reserve(pf.equations.size());
  for (const auto& [l, r] : pf.equations) eqs.push_back({normalize(l), normalize(r)});
  return eqs;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"unifiers of typed list expressions modulo associativity and unit laws"};
  app.require_subcommand(1);

  std::string file;
  bool minimize_flag = false;
  std::size_t max_solutions = 0;
  auto* solve_cmd = app.add_subcommand("solve", "print a complete set of unifiers, one per line");
  solve_cmd->add_option("file", file, "problem file")->required();
  solve_cmd->add_flag("--minimize", minimize_flag, "drop unifiers that are instances of others");
  solve_cmd->add_option("--max-solutions", max_solutions, "print at most N unifiers");

  std::string dot_path;
  auto* trace_cmd = app.add_subcommand("trace", "write the derivation tree in DOT format");
  trace_cmd->add_option("file", file, "problem file")->required();
  trace_cmd->add_option("--dot", dot_path, "output path ('-' for stdout)")->required();

  std::string unifier_text;
  auto* check_cmd =
      app.add_subcommand("check", "trace a path covering a given unifier and verify it");
  check_cmd->add_option("file", file, "problem file")->required();
  check_cmd->add_option("--unifier", unifier_text, "unifier, e.g. \"{x -> 1:2, y -> a:1}\"")
      ->required();

  GroundConfig cfg;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive completeness check over a bounded ground universe");
  oracle_cmd->add_option("file", file, "problem file")->required();
  oracle_cmd->add_option("--ints", cfg.int_pool, "integer pool")->delimiter(',');
  oracle_cmd->add_option("--strs", cfg.str_pool, "string pool")->delimiter(',');
  oracle_cmd->add_option("--maxlen", cfg.max_list_len, "list length bound");

  std::vector<const char*> argv;
  argv.push_back("aulist");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    ProblemFile pf = parse_problem(read_file(file));

    if (solve_cmd->parsed()) {
      UnifierSet set = solve_system(pf.equations);
      if (minimize_flag) set = minimize(set);
      std::size_t limit = max_solutions ? max_solutions : set.unifiers.size();
      for (std::size_t i = 0; i < set.unifiers.size() && i < limit; ++i)
        out << format_substitution(set.unifiers[i]) << "\n";
      return 0;
    }

    if (trace_cmd->parsed()) {
      const auto& [lhs, rhs] = single_equation(pf);
      UnifyResult result = unify(lhs, rhs);
      std::string dot = to_dot(result.tree);
      if (dot_path == "-") {
        out << dot;
      } else {
        std::ofstream sink(dot_path);
        if (!sink) throw InputError("cannot write file '" + dot_path + "'");
        sink << dot;
      }
      return 0;
    }

    if (check_cmd->parsed()) {
      const auto& [lhs, rhs] = single_equation(pf);
      Substitution delta = parse_substitution(unifier_text, pf.declarations);
      NormalExpr l = normalize(lhs), r = normalize(rhs);
      std::vector<Rule> path = select(l, r, delta);
      SelectionOutcome outcome =
          verify_selection(Problem{Equation{l, r}, {}, false, std::nullopt}, path, delta);
      out << "path:";
      for (Rule rule : path) out << " " << to_string(rule);
      out << "\n";
      out << "sigma: " << format_substitution(outcome.unifier) << "\n";
      out << "lambda: " << format_substitution(outcome.witness) << "\n";
      return 0;
    }

    if (oracle_cmd->parsed()) {
      UnifierSet set = solve_system(pf.equations);
      CompletenessVerdict verdict = check_completeness(set, normalized_equations(pf), cfg);
      out << "unifiers: " << set.unifiers.size() << "\n";
      out << "ground unifiers checked: " << verdict.checked << "\n";
      if (verdict.complete) {
        out << "complete: every ground unifier is an instance of a computed unifier\n";
        return 0;
      }
      out << "incomplete: " << format_substitution(*verdict.counterexample) +
                 " is not an instance of any computed unifier\n";
      return 1;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerifyError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace aulist
