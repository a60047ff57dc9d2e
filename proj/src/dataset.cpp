#include "epistle/dataset.hpp"

#include "json.hpp"
#include <ostream>
#include <sstream>

#include "epistle/errors.hpp"
#include "epistle/syntax.hpp"
#include "epistle/verbalizer.hpp"

namespace epistle {

using ordered_json = nlohmann::ordered_json;

DatasetRecord to_record(const ProblemInstance& p) {
  DatasetRecord r;
  r.premise = render_premise(p);
  r.hypothesis = p.hyp().text;
  r.label = to_string(p.label);
  r.setup = std::string(setup_tag(p.setup));
  r.n_agents = p.n_agents;
  r.n_announcements = static_cast<int>(p.announcements.size());
  r.hypothesis_order = p.hyp().spec.order();
  for (const auto& a : p.announcements) r.premise_formulas.push_back(print_formula(a.formula));
  r.hypothesis_formula = print_formula(p.hyp().formula);
  r.names = p.names;
  r.seed = p.seed;
  r.index = p.draw_index;
  r.observability = p.obs.to_rows();
  return r;
}

std::string to_json_line(const DatasetRecord& r) {
  ordered_json j;
  j["premise"] = r.premise;
  j["hypothesis"] = r.hypothesis;
  j["label"] = r.label;
  j["setup"] = r.setup;
  j["n_agents"] = r.n_agents;
  j["n_announcements"] = r.n_announcements;
  j["hypothesis_order"] = r.hypothesis_order;
  j["premise_formulas"] = r.premise_formulas;
  j["hypothesis_formula"] = r.hypothesis_formula;
  j["names"] = r.names;
  j["seed"] = r.seed;
  j["index"] = r.index;
  j["observability"] = r.observability;
  return j.dump();
}

DatasetRecord record_from_json_line(const std::string& line) {
  try {
    const auto j = ordered_json::parse(line);
    DatasetRecord r;
    j.at("premise").get_to(r.premise);
    j.at("hypothesis").get_to(r.hypothesis);
    j.at("label").get_to(r.label);
    j.at("setup").get_to(r.setup);
    j.at("n_agents").get_to(r.n_agents);
    j.at("n_announcements").get_to(r.n_announcements);
    j.at("hypothesis_order").get_to(r.hypothesis_order);
    j.at("premise_formulas").get_to(r.premise_formulas);
    j.at("hypothesis_formula").get_to(r.hypothesis_formula);
    j.at("names").get_to(r.names);
    j.at("seed").get_to(r.seed);
    j.at("index").get_to(r.index);
    j.at("observability").get_to(r.observability);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad dataset record: ") + e.what());
  }
}

void write_jsonl(std::ostream& out, const std::vector<DatasetRecord>& records) {
  for (const auto& r : records) out << to_json_line(r) << '\n';
}

std::string to_jsonl(const std::vector<DatasetRecord>& records) {
  std::ostringstream out;
  write_jsonl(out, records);
  return out.str();
}

bool reverify(const DatasetRecord& r, Checker& checker) {
  const auto obs = ObservabilityMatrix::from_rows(r.observability);
  std::vector<Formula> anns;
  for (const auto& text : r.premise_formulas) anns.push_back(parse_formula(text, r.n_agents));
  const auto hyp = parse_formula(r.hypothesis_formula, r.n_agents);
  try {
    return to_string(checker.label(obs, anns, hyp)) == r.label;
  } catch (const ContradictoryPremise&) {
    return false;
  }
}

}  // namespace epistle
