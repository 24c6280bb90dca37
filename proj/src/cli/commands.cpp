#include "qpnet/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpnet/expand.hpp"
#include "qpnet/inference.hpp"
#include "qpnet/network.hpp"
#include "qpnet/oracle.hpp"
#include "qpnet/pulse.hpp"
#include "qpnet/sat.hpp"
#include "qpnet/text.hpp"

namespace qpnet::cli {
namespace {

using nlohmann::ordered_json;

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

// Maps library errors to exit statuses after reporting them.
template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what();
    if (!e.residual_atoms().empty()) {
      err << " around";
      for (const std::string& a : e.residual_atoms()) err << ' ' << a;
    }
    err << "\n";
    return kBudgetError;
  } catch (const ExpansionLimit& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetError;
  } catch (const TooManyAtoms& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetError;
  } catch (const TooManyVariables& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetError;
  } catch (const ZeroEvidence& e) {
    err << "error: " << e.what() << "\n";
    return kZeroEvidence;
  } catch (const ZeroEvidenceArea& e) {
    err << "error: zero-probability evidence (" << e.what() << ")\n";
    return kZeroEvidence;
  } catch (const DegenerateDenominator& e) {
    err << "error: zero-probability evidence (" << e.what() << ")\n";
    return kZeroEvidence;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

struct InferArgs {
  std::string net, val, query, engine = "exact", format = "text", boost;
  bool symbolic = false;
  std::size_t budget = kDefaultExpansionCap;
  std::size_t periods = 20000, resolution = 64, repeats = 1;
  std::uint64_t seed = 1;
};

struct PulseStats {
  double mean = 0, stddev = 0;
};

PulseStats run_pulse(const Network& net, const Query& q, const Valuation& v,
                     const InferArgs& a) {
  std::vector<double> xs;
  for (std::size_t k = 0; k < a.repeats; ++k) {
    PulseConfig cfg{a.resolution, a.periods, a.seed + k};
    xs.push_back(q.evidence.empty() ? estimate_event(net, q.targets, v, cfg)
                                    : estimate_conditional(net, q, v, cfg));
  }
  PulseStats s;
  for (double x : xs) s.mean += x;
  s.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return s;
}

int cmd_infer(const InferArgs& a, std::ostream& out) {
  Network net = read_network(read_file(a.net));
  Valuation v = read_valuation(read_file(a.val));
  Query q = parse_query(a.query);
  check_query(net, q);
  const bool json = a.format == "json";
  ordered_json rec{{"query", to_string(q)}, {"engine", a.engine}};

  if (a.engine == "exact") {
    ElimBudget budget;
    budget.max_terms = a.budget;
    ConditionalQp c = conditional_qp(net, q, budget);
    double value;
    if (!a.boost.empty()) {
      BoostResult b = boosted_conditional(c, v, Atom(a.boost));
      value = b.value;
      rec["boosted"] = a.boost;
      rec["coefficients"] = {b.coefficients.c1, b.coefficients.c2,
                             b.coefficients.c3, b.coefficients.c4};
    } else {
      value = conditional_probability(c, v);
    }
    rec["value"] = value;
    if (a.symbolic) {
      rec["numerator"] = to_string(c.numerator);
      rec["denominator"] = to_string(c.denominator);
    }
    if (json) {
      out << rec.dump() << "\n";
    } else {
      out << fixed6(value) << "\n";
      if (a.symbolic) {
        out << "numerator: " << to_string(c.numerator) << "\n";
        out << "denominator: " << to_string(c.denominator) << "\n";
      }
    }
    return kOk;
  }

  if (a.engine == "oracle") {
    double value = enumerate_conditional(net, q, v);
    rec["value"] = value;
    if (json)
      out << rec.dump() << "\n";
    else
      out << fixed6(value) << "\n";
    return kOk;
  }

  PulseStats s = run_pulse(net, q, v, a);
  std::optional<double> exact;
  if (net.labels().size() <= kDefaultOracleAtoms) {
    try {
      exact = enumerate_conditional(net, q, v);
    } catch (const ZeroEvidence&) {
    }
  }
  rec["value"] = s.mean;
  rec["stddev"] = s.stddev;
  rec["repeats"] = a.repeats;
  rec["periods"] = a.periods;
  rec["resolution"] = a.resolution;
  rec["seed"] = a.seed;
  if (exact) rec["exact"] = *exact;
  if (json) {
    out << rec.dump() << "\n";
  } else {
    out << fixed6(s.mean) << "\n";
    out << "stddev: " << fixed6(s.stddev) << "\n";
    if (exact) out << "exact: " << fixed6(*exact) << "\n";
  }
  return kOk;
}

struct SatArgs {
  std::string file;
  bool count = false;
  std::size_t budget = kDefaultExpansionCap;
};

// DIMACS literal for a variable named v<k>.
std::string dimacs_literal(const std::string& var, bool value) {
  std::string index = var.size() > 1 && var[0] == 'v' ? var.substr(1) : var;
  return (value ? "" : "-") + index;
}

int cmd_sat(const SatArgs& a, std::ostream& out) {
  CnfFormula f = parse_dimacs(read_file(a.file));
  if (a.count) {
    out << "c models " << count_models(f, kDefaultCountVariables, a.budget) << "\n";
    return kOk;
  }
  ElimBudget budget;
  budget.max_terms = a.budget;
  SatResult r = decide_sat(f, budget);
  switch (r.status) {
    case SatStatus::Unsatisfiable:
      out << "s UNSATISFIABLE\n";
      return kUnsat;
    case SatStatus::Unknown:
      out << "s UNKNOWN\n";
      return kSatUnknown;
    case SatStatus::Satisfiable:
      break;
  }
  std::string residual = to_string(r.residual);
  if (residual.size() <= 1000) out << "c residual " << residual << "\n";
  out << "s SATISFIABLE\n";
  out << "v";
  for (const std::string& v : f.variables())
    out << ' ' << dimacs_literal(v, r.model.at(v));
  out << " 0\n";
  if (!r.free.empty()) {
    out << "c free";
    for (const std::string& v : r.free) out << ' ' << dimacs_literal(v, true);
    out << "\n";
  }
  return kSat;
}

struct ConvertArgs {
  std::string cpt, out_net, out_val;
};

int cmd_convert(const ConvertArgs& a, std::ostream& out) {
  CptNetwork cpt = read_cpt(read_file(a.cpt));
  if (auto vs = validate(cpt); !vs.empty()) {
    // A malformed table is an input problem for this command.
    throw InputError(ValidationError(std::move(vs)).what());
  }
  Converted c = from_cpt(cpt);
  std::string net_text = write_network(c.network);
  std::string val_text = write_valuation(c.symbols, c.symbol_order);
  if (read_network(net_text).nodes() != c.network.nodes())
    throw std::logic_error("converted network does not round-trip");
  write_file(a.out_net, net_text);
  write_file(a.out_val, val_text);
  out << "nodes " << c.network.nodes().size() << "\n";
  out << "symbols " << c.symbol_order.size() << "\n";
  return kOk;
}

struct ShowArgs {
  std::string net, node, query;
  bool expanded = false;
  std::size_t budget = kDefaultExpansionCap;
};

int cmd_show(const ShowArgs& a, std::ostream& out) {
  Network net = read_network(read_file(a.net));
  ElimBudget budget;
  budget.max_terms = a.budget;
  Qp raw;
  std::optional<Query> q;
  if (!a.node.empty()) {
    raw = marginal_qp(net, a.node);
  } else {
    q = parse_query(a.query);
    check_query(net, *q);
    std::vector<Literal> all = q->targets;
    all.insert(all.end(), q->evidence.begin(), q->evidence.end());
    raw = event_qp(net, all);
  }
  out << "raw: " << to_string(raw, TextStyle::Raw) << "\n";
  if (q && !q->evidence.empty()) {
    ConditionalQp c = conditional_qp(net, *q, budget);
    out << "numerator: " << to_string(c.numerator) << "\n";
    out << "denominator: " << to_string(c.denominator) << "\n";
    return kOk;
  }
  Qp dec = eliminate_star(raw, budget);
  out << "decomposed: " << to_string(dec) << "\n";
  if (a.expanded) out << "expanded: " << to_string(expand(raw, a.budget)) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Quasi-probability inference for AND-OR-NOT Bayesian networks",
               "qpnet"};
  app.require_subcommand(1);

  InferArgs ia;
  auto* infer = app.add_subcommand("infer", "Probability of a query");
  infer->add_option("--net", ia.net, "Network file (JSON)")->required();
  infer->add_option("--val", ia.val, "Valuation file (JSON)")->required();
  infer->add_option("--query", ia.query, "Query, e.g. \"B | F, !G\"")->required();
  infer->add_option("--engine", ia.engine, "exact, oracle or pulse")
      ->check(CLI::IsMember({"exact", "oracle", "pulse"}));
  auto* symbolic = infer->add_flag("--symbolic", ia.symbolic,
                                   "Also print numerator and denominator");
  auto* boost = infer->add_option("--boost", ia.boost,
                                  "Symbol to evaluate by boosting");
  auto* ibudget = infer->add_option("--budget", ia.budget, "Expansion term cap");
  auto* periods = infer->add_option("--periods", ia.periods, "Pulse periods");
  auto* resolution =
      infer->add_option("--resolution", ia.resolution, "Slots per pulse period");
  auto* seed = infer->add_option("--seed", ia.seed, "Pulse seed");
  auto* repeats = infer->add_option("--repeats", ia.repeats,
                                    "Pulse runs with consecutive seeds");
  infer->add_option("--format", ia.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  SatArgs sa;
  auto* sat = app.add_subcommand("sat", "Decide a DIMACS CNF formula");
  sat->add_option("file", sa.file, "DIMACS file")->required();
  sat->add_flag("--count", sa.count, "Count models instead");
  sat->add_option("--budget", sa.budget, "Expansion term cap");

  ConvertArgs ca;
  auto* convert = app.add_subcommand("convert", "Convert a CPT network");
  convert->add_option("--cpt", ca.cpt, "CPT network file (JSON)")->required();
  convert->add_option("--out-net", ca.out_net, "Output network file")->required();
  convert->add_option("--out-val", ca.out_val, "Output symbol values")->required();

  ShowArgs sh;
  auto* show = app.add_subcommand("show", "Print quasi-probability expressions");
  show->add_option("--net", sh.net, "Network file (JSON)")->required();
  auto* node = show->add_option("--node", sh.node, "Node");
  auto* query = show->add_option("--query", sh.query, "Event or query");
  node->excludes(query);
  show->add_flag("--expanded", sh.expanded, "Also print the expansion");
  show->add_option("--budget", sh.budget, "Expansion term cap");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (show->parsed() && node->count() + query->count() == 0)
      throw CLI::ValidationError("show needs --node or --query");
    if (infer->parsed()) {
      for (auto* opt : {periods, resolution, seed, repeats})
        if (opt->count() && ia.engine != "pulse")
          throw CLI::ValidationError(opt->get_name() +
                                     " applies to --engine pulse only");
      for (auto* opt : {symbolic, boost, ibudget})
        if (opt->count() && ia.engine != "exact")
          throw CLI::ValidationError(opt->get_name() +
                                     " applies to --engine exact only");
      if (ia.repeats < 1)
        throw CLI::ValidationError("--repeats must be at least 1");
    }
  } catch (const CLI::ParseError& e) {
    int status = app.exit(e, out, err);
    return status == 0 ? kOk : kInputError;
  }

  return guarded(err, [&] {
    if (infer->parsed()) return cmd_infer(ia, out);
    if (sat->parsed()) return cmd_sat(sa, out);
    if (convert->parsed()) return cmd_convert(ca, out);
    return cmd_show(sh, out);
  });
}

}  // namespace qpnet::cli
