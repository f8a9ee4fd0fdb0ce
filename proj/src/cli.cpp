#include "bang/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bang/parse.hpp"
#include "bang/props.hpp"
#include "bang/redex.hpp"
#include "bang/reduce.hpp"
#include "bang/translate.hpp"

namespace bang::cli {

namespace {

Profile makeProfile(const std::string& calculus, const std::string& ops) {
  std::vector<std::string> opList;
  if (ops == "oplus") {
    opList.push_back("oplus");
  } else if (ops != "none") {
    throw CLI::ValidationError("--ops", "expected none|oplus");
  }
  if (calculus == "bang") return Profile::bang(opList);
  if (calculus == "cbn") return Profile::cbn(opList);
  if (calculus == "cbv") return Profile::cbv(opList);
  throw CLI::ValidationError("--calculus", "expected cbn|cbv|bang");
}

StrategyId makeStrategy(const std::string& s) {
  if (s == "ll") return StrategyId::LeastLevelDeterministic;
  if (s == "lo") return StrategyId::LeftmostOutermost;
  if (s == "surface") return StrategyId::SurfaceFirst;
  if (s == "full") return StrategyId::FullLeftmost;
  throw CLI::ValidationError("--strategy", "expected ll|lo|surface|full");
}

TermPtr readTerm(const std::string& positional, std::istream& in) {
  std::string src = positional;
  if (src.empty()) {
    std::ostringstream buf;
    buf << in.rdbuf();
    src = buf.str();
  }
  return parse(src);
}

// Term errors exit with status 1 and the registry listing for unknown
// operators.
void checkValid(const TermPtr& t, const Profile& p) {
  auto violations = validate(t, p);
  if (violations.empty()) return;
  std::ostringstream os;
  os << "invalid term for " << p.label() << ":";
  bool unknownOp = false;
  for (const auto& v : violations) {
    os << "\n  " << v.path << ": " << v.message;
    if (v.message.rfind("unknown operator", 0) == 0) unknownOp = true;
  }
  if (unknownOp) {
    os << "\nregistered operators:";
    for (const auto& n : p.registry->names()) os << " " << n;
  }
  throw std::invalid_argument(os.str());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"rewriting workbench for the bang calculus and its CbN/CbV embeddings"};
  app.require_subcommand(1);

  std::string calculus = "bang", strategy = "ll", ops = "none", mode, termText, suiteText;
  std::string outPath, dotPath;
  std::size_t fuel = 100, cap = kDefaultGraphCap, size = 6, count = 0;
  std::uint64_t seed = 0;
  bool seedSet = false, traceFlag = false, inverseFlag = false, forgetFlag = false;

  auto addTermArg = [&](CLI::App* cmd) {
    cmd->add_option("term", termText, "term in the surface syntax (reads stdin when absent)");
  };
  auto addCalculus = [&](CLI::App* cmd) {
    cmd->add_option("--calculus", calculus, "cbn|cbv|bang")->capture_default_str();
    cmd->add_option("--ops", ops, "none|oplus")->capture_default_str();
  };

  CLI::App* cmdParse = app.add_subcommand("parse", "parse and pretty-print a term");
  addTermArg(cmdParse);

  CLI::App* cmdReduce = app.add_subcommand("reduce", "reduce a term under a strategy");
  addTermArg(cmdReduce);
  addCalculus(cmdReduce);
  cmdReduce->add_option("--strategy", strategy, "ll|lo|surface|full")->capture_default_str();
  cmdReduce->add_option("--fuel", fuel)->capture_default_str();
  auto* seedOpt = cmdReduce->add_option("--seed", seed, "seeded-random operator choice");
  cmdReduce->add_flag("--trace", traceFlag, "print one line per step");

  CLI::App* cmdTranslate = app.add_subcommand("translate", "CbN/CbV translation and inverses");
  addTermArg(cmdTranslate);
  cmdTranslate->add_option("--mode", mode, "cbn|cbv")->required();
  cmdTranslate->add_flag("--inverse", inverseFlag, "apply the CbN inverse");
  cmdTranslate->add_flag("--forget", forgetFlag, "apply the CbV forgetful map");

  CLI::App* cmdLl = app.add_subcommand("ll", "least level of a term");
  addTermArg(cmdLl);
  addCalculus(cmdLl);

  CLI::App* cmdRedexes = app.add_subcommand("redexes", "list redex occurrences with levels");
  addTermArg(cmdRedexes);
  addCalculus(cmdRedexes);

  CLI::App* cmdGraph = app.add_subcommand("graph", "bounded reduction graph");
  addTermArg(cmdGraph);
  addCalculus(cmdGraph);
  cmdGraph->add_option("--fuel", fuel)->capture_default_str();
  cmdGraph->add_option("--cap", cap)->capture_default_str();
  cmdGraph->add_option("--dot", dotPath, "write the graph in DOT format");

  CLI::App* cmdCheck = app.add_subcommand("check", "run a property suite");
  cmdCheck->add_option("suite", suiteText, "suite name")->required();
  addCalculus(cmdCheck);
  cmdCheck->add_option("--size", size, "max term size")->capture_default_str();
  cmdCheck->add_option("--count", count, "random corpus size (0 = exhaustive)")
      ->capture_default_str();
  cmdCheck->add_option("--seed", seed)->capture_default_str();
  cmdCheck->add_option("--fuel", fuel)->capture_default_str();
  cmdCheck->add_option("--cap", cap)->capture_default_str();
  cmdCheck->add_option("--out", outPath, "also write the report to a file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (cmdParse->parsed()) {
      TermPtr t = readTerm(termText, in);
      out << print(t) << "\n";
      return 0;
    }

    if (cmdReduce->parsed()) {
      Profile p = makeProfile(calculus, ops);
      TermPtr t = readTerm(termText, in);
      checkValid(t, p);
      seedSet = seedOpt->count() > 0;
      ReduceOutcome o = reduce(t, p, makeStrategy(strategy), fuel,
                               seedSet ? std::optional<std::uint64_t>(seed) : std::nullopt);
      if (traceFlag) out << formatTrace(o.trace);
      if (o.normalForm) {
        out << "normal form after " << o.trace.size() << " step"
            << (o.trace.size() == 1 ? "" : "s") << ": " << print(o.term) << "\n";
      } else {
        out << "fuel exhausted after " << o.trace.size() << " step"
            << (o.trace.size() == 1 ? "" : "s");
        if (o.cycleDetected) out << " (cycle detected, " << o.distinctStates << " distinct state"
                                 << (o.distinctStates == 1 ? "" : "s") << ")";
        out << ": " << print(o.term) << "\n";
      }
      return 0;
    }

    if (cmdTranslate->parsed()) {
      TermPtr t = readTerm(termText, in);
      if (mode != "cbn" && mode != "cbv") {
        throw std::invalid_argument("--mode expects cbn or cbv");
      }
      TermPtr result;
      if (inverseFlag) {
        if (mode != "cbn") throw std::invalid_argument("--inverse applies to --mode cbn");
        result = cbnInverse(t);
      } else if (forgetFlag) {
        if (mode != "cbv") throw std::invalid_argument("--forget applies to --mode cbv");
        result = forgetful(t);
      } else {
        checkValid(t, mode == "cbn" ? Profile::cbn({"oplus"}) : Profile::cbv({"oplus"}));
        result = mode == "cbn" ? cbnTranslate(t) : cbvTranslate(t);
      }
      out << print(result) << "\n";
      return 0;
    }

    if (cmdLl->parsed()) {
      Profile p = makeProfile(calculus, ops);
      TermPtr t = readTerm(termText, in);
      checkValid(t, p);
      out << levelToString(leastLevel(t, p).value) << "\n";
      return 0;
    }

    if (cmdRedexes->parsed()) {
      Profile p = makeProfile(calculus, ops);
      TermPtr t = readTerm(termText, in);
      checkValid(t, p);
      for (const auto& r : enumerateRedexes(t, p)) {
        out << pathToString(r.path) << ": " << r.rule.name() << "@" << r.level
            << (r.der ? " der" : "") << "\n";
      }
      return 0;
    }

    if (cmdGraph->parsed()) {
      Profile p = makeProfile(calculus, ops);
      TermPtr t = readTerm(termText, in);
      checkValid(t, p);
      ReductionGraph g = reachableGraph(t, p, fuel, cap);
      out << "nodes=" << g.nodes.size() << " edges=" << g.edges.size()
          << " truncated=" << (g.truncated ? "true" : "false") << "\n";
      if (!dotPath.empty()) {
        std::ofstream f(dotPath);
        if (!f) throw std::invalid_argument("cannot write " + dotPath);
        f << toDot(g);
      }
      return 0;
    }

    if (cmdCheck->parsed()) {
      auto suite = suiteFromName(suiteText);
      if (!suite) {
        std::ostringstream os;
        os << "unknown suite '" << suiteText << "'; available:";
        for (Suite s : allSuites()) os << " " << suiteName(s);
        throw std::invalid_argument(os.str());
      }
      Profile p = makeProfile(calculus, ops);
      GenSpec spec = count == 0 ? GenSpec::exhaustive(size, p, ops == "oplus")
                                : GenSpec::random(count, size, seed, p, ops == "oplus");
      CheckReport report = runSuite(*suite, spec, fuel, cap);
      std::string text = formatReport(report);
      out << text;
      err << "wall_ms=" << static_cast<long long>(report.wallMs) << "\n";
      if (!outPath.empty()) {
        std::ofstream f(outPath);
        if (!f) throw std::invalid_argument("cannot write " + outPath);
        f << text;
      }
      if (!report.failures.empty()) return 2;
      if (report.inconclusive > 0) return 3;
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  err << "error: no command\n";
  return 1;
}

}  // namespace bang::cli
