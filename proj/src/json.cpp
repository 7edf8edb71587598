#include "slc/json.hpp"

namespace slc {

Json to_json(const Path& p) {
  Json out = Json::array();
  for (auto s : p.steps) out.push_back(s);
  return out;
}

Json to_json(const TermInfo& info) {
  Json out{{"size", info.size},
           {"depth", info.depth},
           {"rank", info.rank},
           {"free_vars", info.free_vars},
           {"temp_vars", info.temp_vars},
           {"is_term", info.is_term},
           {"is_well_formed", info.is_well_formed}};
  if (info.failure_witness)
    out["failure_witness"] = {{"path", to_json(info.failure_witness->path)}, {"clause", info.failure_witness->clause}};
  return out;
}

Json to_json(const MetricSnapshot& m) {
  return {{"n", m.n},         {"weight", m.weight}, {"nlet", m.nlet},  {"measure", m.measure},
          {"rank", m.rank},   {"size", m.size},     {"depth", m.depth}};
}

Json to_json(const Certificate& c) {
  return {{"size", c.size},
          {"depth", c.depth},
          {"degree", c.degree},
          {"bound", c.bound.str()},
          {"weight_at_size", c.weight_at_size.str()},
          {"weight_cube", c.weight_cube.str()}};
}

Json to_json(const Trace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json j{{"path", to_json(s.path)}, {"rule", to_string(s.rule)}};
    if (s.result) {
      j["size_after"] = s.result->size();
      j["term"] = print(s.result);
    }
    if (s.metrics) {
      j["size_after"] = s.metrics->size;
      j["weight_after"] = s.metrics->weight;
      j["measure_after"] = s.metrics->measure;
    }
    steps.push_back(std::move(j));
  }
  Json out{{"strategy", t.strategy.name()}, {"length", t.length()}, {"steps", std::move(steps)}};
  if (t.initial) out["initial"] = print(t.initial);
  if (t.final) out["normal_form"] = print(t.final);
  if (t.initial_metrics) out["initial_metrics"] = to_json(*t.initial_metrics);
  return out;
}

Json to_json(const TypeError& e) {
  return {{"kind", e.kind()},         {"path", to_json(e.path())},   {"rule", e.rule()},
          {"expected", e.expected()}, {"found", e.found()},          {"message", e.what()}};
}

Json to_json(const BoundCheckReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"size", row.size}, {"terms", row.terms}, {"sequences", row.sequences}, {"longest", row.longest}});
  Json out{{"ok", r.ok()}, {"terms", r.terms()}, {"sequences", r.sequences()}, {"rows", std::move(rows)}};
  if (r.failure) out["counterexample"] = {{"term", print(r.failure->term)}, {"reason", r.failure->reason}};
  return out;
}

}  // namespace slc
