#include "structctl/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <span>
#include <sstream>

#include "structctl/dot_export.hpp"
#include "structctl/generator.hpp"
#include "structctl/report.hpp"

namespace structctl::cli {
namespace {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotControllable:
    case ErrorCode::NotObservable:
    case ErrorCode::Infeasible:
    case ErrorCode::UncoverableScc:
    case ErrorCode::FlowTooSmall:
      return kNotControllable;
    default:
      return kUsage;
  }
}

std::string join_names(std::span<const std::size_t> indices, const char* prefix) {
  std::string s;
  for (std::size_t i : indices) {
    if (!s.empty()) s += ' ';
    s += prefix + std::to_string(i + 1);
  }
  return s;
}

std::string brace_states(const std::vector<std::size_t>& states) { return "{" + join_names(states, "x") + "}"; }

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  file << text;
  if (!file) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
}

Instance load(const std::string& path, std::ostream& err) {
  Instance inst = read_instance_file(path);
  for (const std::string& w : inst.warnings) err << "warning: " << w << '\n';
  return inst;
}

std::vector<Rational> parse_cost_list(const std::string& text) {
  std::vector<Rational> costs;
  std::string token;
  for (char c : text + ",") {
    if (c == ',' || c == ' ') {
      if (!token.empty()) {
        try {
          costs.push_back(Rational::parse(token));
        } catch (const std::exception& e) {
          throw Error(ErrorCode::ParseError, "--costs: " + std::string(e.what()));
        }
        if (costs.back() < Rational(0)) throw Error(ErrorCode::ParseError, "--costs: negative cost " + token);
      }
      token.clear();
    } else {
      token += c;
    }
  }
  return costs;
}

struct CommonOptions {
  std::string path;
  bool json = false;
};

// ---- check --------------------------------------------------------------

struct CheckOptions : CommonOptions {
  bool strict = false;
  bool verify = false;
  std::string method = "flow";
};

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  const Instance inst = load(opt.path, err);
  const StructuredSystem sys = inst.system();
  const SccDecomposition scc = scc_decompose(build_state_digraph(sys));
  const bool use_flow = opt.method == "flow";
  ControllabilityVerdict verdict = use_flow ? is_controllable_flow(sys) : is_controllable_lin(sys);
  std::optional<ControllabilityVerdict> other;
  if (opt.verify) other = use_flow ? is_controllable_lin(sys) : is_controllable_flow(sys);
  // The flow value is reported whichever decider ran.
  if (!use_flow) verdict.max_flow_value = (other ? *other : is_controllable_flow(sys)).max_flow_value;

  if (other && other->controllable != verdict.controllable) {
    const bool flow_says = use_flow ? verdict.controllable : other->controllable;
    err << "error: deciders disagree (lin=" << !flow_says << ", flow=" << flow_says << ") on instance:\n"
        << serialize_instance_text(inst);
    return kInternal;
  }

  const bool observability = inst.kind == InstanceKind::Outputs;
  if (opt.json) {
    out << check_report(inst, scc, verdict, other).dump(2) << '\n';
  } else {
    const char* yes = observability ? "observable" : "controllable";
    std::vector<std::size_t> ntl_states;
    if (verdict.controllable) {
      out << yes;
    } else {
      out << "not " << yes << ":";
      if (!verdict.accessible) {
        out << " inaccessible SCC";
        for (std::size_t c : verdict.uncovered_sccs) out << ' ' << brace_states(scc.components[c]);
        out << (verdict.dilation_free ? "" : ";");
      }
      if (!verdict.dilation_free) {
        out << " dilation (maximum matching " << verdict.matching_size << " of " << verdict.n << ")";
      }
    }
    out << ", q=" << verdict.q << ", maxflow=" << verdict.max_flow_value << '\n';
    out << "non-top-linked SCCs:";
    for (std::size_t i = 0; i < scc.q(); ++i) {
      out << " N" << i + 1 << '=' << brace_states(scc.components[scc.non_top_linked[i]]);
    }
    out << '\n';
    out << "accessible: " << (verdict.accessible ? "yes" : "no") << '\n';
    out << "dilation-free: " << (verdict.dilation_free ? "yes" : "no") << " (matching " << verdict.matching_size << '/'
        << verdict.n << ")\n";
    out << "required flow q+n: " << verdict.q + verdict.n << '\n';
    if (other) out << "verify: lin and flow deciders agree\n";
  }
  return (!verdict.controllable && opt.strict) ? kNotControllable : kOk;
}

// ---- select / oracle shared ---------------------------------------------

struct SelectOptions : CommonOptions {
  bool uniform = false;
  std::string costs;
  bool dual = false;
};

// Returns the controllability system to solve and whether it selects outputs.
std::pair<StructuredSystem, bool> prepare(Instance inst, const SelectOptions& opt) {
  bool outputs = inst.kind == InstanceKind::Outputs;
  if (opt.dual && !outputs) {
    // A system file read as (A, C^T): its b-lines are the output pattern transposed.
    inst.kind = InstanceKind::Outputs;
    inst.io_matrix = inst.io_matrix.transposed();
    outputs = true;
  }
  if (!opt.costs.empty()) inst.costs = parse_cost_list(opt.costs);
  StructuredSystem sys = [&] {
    try {
      return inst.system();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DimensionMismatch) throw Error(ErrorCode::ParseError, e.what());
      throw;
    }
  }();
  if (opt.uniform) sys.input_costs.assign(sys.input_count(), Rational(1));
  return {std::move(sys), outputs};
}

SelectionResult solve(const StructuredSystem& sys, bool outputs) {
  try {
    return solve_minccis_approx(sys);
  } catch (const Error& e) {
    if (outputs && e.code() == ErrorCode::NotControllable) {
      throw Error(ErrorCode::NotObservable, "the full output set does not make the system observable");
    }
    throw;
  }
}

int cmd_select(const SelectOptions& opt, std::ostream& out, std::ostream& err) {
  const Instance inst = load(opt.path, err);
  auto [sys, outputs] = prepare(inst, opt);
  const SelectionResult r = solve(sys, outputs);
  if (opt.json) {
    out << select_report(inst, r, outputs).dump(2) << '\n';
    return kOk;
  }
  const char* prefix = outputs ? "y" : "u";
  out << (outputs ? "outputs: " : "inputs: ") << join_names(r.inputs.indices(), prefix) << '\n';
  out << "cost: " << r.total_cost << '\n';
  out << "delta: " << r.delta << '\n';
  out << "bound: " << to_string(r.bound) << " (" << r.bound_rationale << ")\n";
  out << "lp objective: " << r.lp_objective << " (matching " << r.matching_cost << " + cover " << r.cover_cost << ")\n";
  const SystemLayout& layout = *r.network.layout();
  out << "certificate: flow " << flow_value(r.network, r.certificate) << " = q+n (q=" << layout.q << ", n=" << layout.n
      << ")";
  if (r.cover_rerouted) out << ", cover rerouted onto a matched " << (outputs ? "output" : "input");
  out << '\n';
  out << "cover:";
  for (const SccAssignment& a : r.cover.assignments) {
    out << " N" << a.scc + 1 << "<-" << prefix << a.input + 1;
  }
  out << '\n';
  return kOk;
}

struct OracleOptions : SelectOptions {
  bool compare = false;
  std::size_t max_inputs = 16;
};

int cmd_oracle(const OracleOptions& opt, std::ostream& out, std::ostream& err) {
  const Instance inst = load(opt.path, err);
  auto [sys, outputs] = prepare(inst, opt);
  OracleResult oracle;
  try {
    oracle = brute_force_minccis(sys, opt.max_inputs);
  } catch (const Error& e) {
    if (outputs && e.code() == ErrorCode::NotControllable) {
      throw Error(ErrorCode::NotObservable, "no output subset makes the system observable");
    }
    throw;
  }
  std::optional<SelectionResult> approx;
  if (opt.compare) approx = solve(sys, outputs);
  if (opt.json) {
    out << oracle_report(inst, oracle, approx, outputs).dump(2) << '\n';
    return kOk;
  }
  const char* prefix = outputs ? "y" : "u";
  out << "optimum: " << oracle.optimum_cost << '\n';
  out << "optimal sets:";
  for (const InputSet& s : oracle.optimal_sets) out << " {" << join_names(s.indices(), prefix) << '}';
  out << '\n';
  out << "subsets examined: " << oracle.subsets_examined << '\n';
  if (approx) {
    out << "approx: " << join_names(approx->inputs.indices(), prefix) << " cost " << approx->total_cost << '\n';
    if (oracle.optimum_cost == Rational(0)) {
      out << "ratio: undefined (optimum is 0)\n";
    } else {
      const Rational ratio = approx->total_cost / oracle.optimum_cost;
      out << "ratio: " << ratio << " (" << ratio.to_double() << "), delta " << approx->delta << '\n';
    }
  }
  return kOk;
}

// ---- gen / export -------------------------------------------------------

struct GenOptions {
  std::string family = "erdos";
  GeneratorSpec spec;
  std::string output;
  std::string format = "text";
};

int cmd_gen(GenOptions opt, std::ostream& out) {
  opt.spec.family = parse_family(opt.family);
  const Instance inst = instance_from_system(generate_system(opt.spec));
  const std::string text = opt.format == "json" ? serialize_instance_json(inst) : serialize_instance_text(inst);
  write_text(opt.output, text, out);
  return kOk;
}

struct ExportOptions {
  std::string path;
  std::string what = "flownet";
  bool with_flow = false;
  std::string output;
};

int cmd_export(const ExportOptions& opt, std::ostream& out, std::ostream& err) {
  const Instance inst = load(opt.path, err);
  const StructuredSystem sys = inst.system();
  std::string dot;
  if (opt.what == "digraph") {
    dot = dot_state_digraph(sys);
  } else if (opt.what == "sysdigraph") {
    dot = dot_system_digraph(sys);
  } else if (opt.what == "bipartite") {
    dot = dot_bipartite(sys);
  } else {
    FlowNetwork net = augment_costs(build_flow_network(sys), sys.input_costs);
    std::optional<FlowVector> flow;
    if (opt.with_flow) {
      // The selection certificate when there is one, a maximum flow otherwise.
      if (is_controllable_flow(sys).controllable) {
        SelectionResult r = solve_minccis_approx(sys);
        net = std::move(r.network);
        flow = std::move(r.certificate);
      } else {
        flow = max_flow(net);
      }
    }
    dot = dot_flow_network(net, flow);
  }
  write_text(opt.output, dot, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structural controllability checks and minimum-cost input selection", "structctl"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* c = app.add_subcommand("check", "decide structural controllability (observability for output files)");
  c->add_option("file", check.path, "instance file")->required();
  c->add_flag("--strict", check.strict, "exit 1 when not controllable");
  c->add_flag("--verify", check.verify, "run both deciders and require agreement");
  c->add_option("--method", check.method, "primary decider")->check(CLI::IsMember({"flow", "lin"}));
  c->add_flag("--json", check.json, "emit a JSON report");

  SelectOptions select;
  auto* s = app.add_subcommand("select", "approximate minimum-cost input (or output) selection");
  s->add_option("file", select.path, "instance file")->required();
  auto* uniform = s->add_flag("--uniform", select.uniform, "unit costs (minimum cardinality)");
  s->add_option("--costs", select.costs, "override costs, e.g. \"1,1,10\"")->excludes(uniform);
  s->add_flag("--dual-observability", select.dual, "read b-lines as C^T and select outputs");
  s->add_flag("--json", select.json, "emit a JSON report");

  OracleOptions oracle;
  auto* o = app.add_subcommand("oracle", "exact optimum by exhaustive search");
  o->add_option("file", oracle.path, "instance file")->required();
  o->add_flag("--compare", oracle.compare, "also run the approximation and report the ratio");
  o->add_option("--max-inputs", oracle.max_inputs, "refuse instances with more inputs")->capture_default_str();
  auto* ouniform = o->add_flag("--uniform", oracle.uniform, "unit costs");
  o->add_option("--costs", oracle.costs, "override costs")->excludes(ouniform);
  o->add_flag("--dual-observability", oracle.dual, "read b-lines as C^T and select outputs");
  o->add_flag("--json", oracle.json, "emit a JSON report");

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "generate a random instance");
  g->add_option("--family", gen.family, "erdos | chain | cycle | decoupled-diagonal | block")->capture_default_str();
  g->add_option("--n", gen.spec.n, "states")->capture_default_str();
  g->add_option("--m", gen.spec.m, "inputs")->capture_default_str();
  g->add_option("--density-a", gen.spec.density_a, "probability of extra state entries")->capture_default_str();
  g->add_option("--density-b", gen.spec.density_b, "probability of extra input entries")->capture_default_str();
  g->add_option("--blocks", gen.spec.blocks, "block family: number of blocks (0 = n/4)")->capture_default_str();
  g->add_option("--cost-min", gen.spec.cost_min, "smallest integer cost")->capture_default_str();
  g->add_option("--cost-max", gen.spec.cost_max, "largest integer cost")->capture_default_str();
  g->add_option("--seed", gen.spec.seed, "random seed")->capture_default_str();
  g->add_option("-o,--output", gen.output, "output file (default stdout)");
  g->add_option("--format", gen.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  ExportOptions exp;
  auto* x = app.add_subcommand("export", "write a Graphviz DOT rendering");
  x->add_option("file", exp.path, "instance file")->required();
  x->add_option("--what", exp.what, "digraph | sysdigraph | bipartite | flownet")
      ->check(CLI::IsMember({"digraph", "sysdigraph", "bipartite", "flownet"}))
      ->capture_default_str();
  x->add_flag("--with-flow", exp.with_flow, "flownet: label edges with the certificate (or a maximum) flow");
  x->add_option("-o,--output", exp.output, "output file (default stdout)");

  std::vector<std::string> argv_storage{"structctl"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const char* command = "structctl";
  bool json_errors = false;
  try {
    if (c->parsed()) {
      command = "check";
      json_errors = check.json;
      return cmd_check(check, out, err);
    }
    if (s->parsed()) {
      command = "select";
      json_errors = select.json;
      return cmd_select(select, out, err);
    }
    if (o->parsed()) {
      command = "oracle";
      json_errors = oracle.json;
      return cmd_oracle(oracle, out, err);
    }
    if (g->parsed()) return cmd_gen(gen, out);
    if (x->parsed()) return cmd_export(exp, out, err);
  } catch (const Error& e) {
    if (json_errors) out << error_report(command, e).dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace structctl::cli
