#include "structctl/report.hpp"

#include <span>
#include <string>

namespace structctl {
namespace {

using nlohmann::json;

json header(std::string_view command) {
  json doc;
  doc["schema"] = kReportSchema;
  doc["command"] = command;
  return doc;
}

json instance_summary(const Instance& inst) {
  const bool inputs = inst.kind == InstanceKind::Inputs;
  json j;
  j["kind"] = inputs ? "system" : "outputs";
  j["n"] = inst.a_bar.rows();
  j[inputs ? "m" : "p"] = inputs ? inst.io_matrix.cols() : inst.io_matrix.rows();
  return j;
}

json one_based(std::span<const std::size_t> indices) {
  json arr = json::array();
  for (std::size_t i : indices) arr.push_back(i + 1);
  return arr;
}

json scc_lists(const SccDecomposition& scc, const std::vector<std::size_t>& components) {
  json arr = json::array();
  for (std::size_t c : components) arr.push_back(one_based(scc.components[c]));
  return arr;
}

std::string item_name(std::size_t j, bool outputs) { return (outputs ? "y" : "u") + std::to_string(j + 1); }

json selection_block(const SelectionResult& r, bool outputs) {
  json j;
  j["selected"] = one_based(r.inputs.indices());
  json names = json::array();
  for (std::size_t i : r.inputs.indices()) names.push_back(item_name(i, outputs));
  j["selected_names"] = names;
  j["total_cost"] = r.total_cost.to_string();
  return j;
}

}  // namespace

json check_report(const Instance& inst, const SccDecomposition& scc, const ControllabilityVerdict& verdict,
                  const std::optional<ControllabilityVerdict>& cross_check) {
  json doc = header("check");
  doc["instance"] = instance_summary(inst);
  doc["property"] = inst.kind == InstanceKind::Inputs ? "controllability" : "observability";
  doc["method"] = verdict.method == DeciderMethod::Flow ? "flow" : "lin";
  doc["controllable"] = verdict.controllable;
  doc["q"] = verdict.q;
  doc["non_top_linked_sccs"] = scc_lists(scc, scc.non_top_linked);
  doc["max_flow"] = verdict.max_flow_value;
  doc["required_flow"] = verdict.q + verdict.n;
  json cond;
  cond["accessible"] = verdict.accessible;
  cond["dilation_free"] = verdict.dilation_free;
  cond["matching_size"] = verdict.matching_size;
  cond["uncovered_sccs"] = scc_lists(scc, verdict.uncovered_sccs);
  doc["conditions"] = cond;
  if (cross_check) {
    json v;
    v["lin"] = verdict.method == DeciderMethod::Lin ? verdict.controllable : cross_check->controllable;
    v["flow"] = verdict.method == DeciderMethod::Flow ? verdict.controllable : cross_check->controllable;
    v["agree"] = verdict.controllable == cross_check->controllable;
    doc["verify"] = v;
  }
  return doc;
}

json select_report(const Instance& inst, const SelectionResult& r, bool outputs) {
  json doc = header("select");
  doc["instance"] = instance_summary(inst);
  doc["selects"] = outputs ? "outputs" : "inputs";
  doc.update(selection_block(r, outputs));
  doc["delta"] = r.delta;
  doc["bound"] = to_string(r.bound);
  doc["bound_rationale"] = r.bound_rationale;
  doc["lp_objective"] = r.lp_objective.to_string();
  doc["matching_cost"] = r.matching_cost.to_string();
  doc["cover_cost"] = r.cover_cost.to_string();

  const FlowNetwork& net = r.network;
  const SystemLayout& layout = *net.layout();
  json cert;
  cert["flow_value"] = flow_value(net, r.certificate);
  cert["required_flow"] = layout.q + layout.n;
  cert["cover_rerouted"] = r.cover_rerouted;
  json matching = json::array();
  for (const auto& [left, right] : r.matching.pairs) {
    json pair;
    pair["primed_state"] = "x'" + std::to_string(right + 1);
    pair["partner"] = left < layout.n ? "x" + std::to_string(left + 1) : item_name(left - layout.n, outputs);
    matching.push_back(pair);
  }
  cert["matching"] = matching;
  json cover = json::array();
  for (const SccAssignment& a : r.cover.assignments) {
    json entry;
    entry["scc"] = one_based(layout.scc_members[a.scc]);
    entry["by"] = item_name(a.input, outputs);
    cover.push_back(entry);
  }
  cert["cover"] = cover;
  json edges = json::array();
  for (std::size_t e = 0; e < net.edges().size(); ++e) {
    if (r.certificate.flow[e] == 0) continue;
    json edge;
    edge["from"] = net.vertex_name(net.edges()[e].from);
    edge["to"] = net.vertex_name(net.edges()[e].to);
    edge["flow"] = r.certificate.flow[e];
    edges.push_back(edge);
  }
  cert["positive_edges"] = edges;
  doc["certificate"] = cert;
  return doc;
}

json oracle_report(const Instance& inst, const OracleResult& oracle, const std::optional<SelectionResult>& approx,
                   bool outputs) {
  json doc = header("oracle");
  doc["instance"] = instance_summary(inst);
  doc["selects"] = outputs ? "outputs" : "inputs";
  doc["optimum_cost"] = oracle.optimum_cost.to_string();
  json sets = json::array();
  for (const InputSet& s : oracle.optimal_sets) sets.push_back(one_based(s.indices()));
  doc["optimal_sets"] = sets;
  doc["subsets_examined"] = oracle.subsets_examined;
  if (approx) {
    json cmp = selection_block(*approx, outputs);
    cmp["delta"] = approx->delta;
    cmp["bound"] = to_string(approx->bound);
    if (oracle.optimum_cost == Rational(0)) {
      cmp["ratio"] = nullptr;
      cmp["ratio_decimal"] = nullptr;
    } else {
      const Rational ratio = approx->total_cost / oracle.optimum_cost;
      cmp["ratio"] = ratio.to_string();
      cmp["ratio_decimal"] = ratio.to_double();
    }
    doc["compare"] = cmp;
  }
  return doc;
}

json error_report(std::string_view command, const Error& error) {
  json doc = header(command);
  json err;
  err["code"] = to_string(error.code());
  err["message"] = error.what();
  doc["error"] = err;
  return doc;
}

}  // namespace structctl
