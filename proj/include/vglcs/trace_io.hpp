#pragma once

// JSON-lines serialization of solver traces, one record per iteration.

#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "vglcs/imsbs.hpp"

namespace vglcs {

inline void write_trace(std::ostream& os, const RunTrace& tr) {
  for (const auto& r : tr.iterations) {
    nlohmann::json j;
    j["iteration"] = r.iteration;
    j["pool_size"] = r.pool_size;
    auto sel = nlohmann::json::array();
    for (const auto& s : r.selected) sel.push_back(s.ptrs);
    j["selected"] = std::move(sel);
    j["forward_best"] = r.forward_best;
    j["incumbent"] = r.incumbent;
    j["elapsed_s"] = r.elapsed_s;
    os << j.dump() << '\n';
  }
}

inline RunTrace read_trace(std::istream& is) {
  RunTrace tr;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    IterRecord r;
    r.iteration = j.at("iteration").get<int>();
    r.pool_size = j.at("pool_size").get<int>();
    for (const auto& p : j.at("selected")) {
      StateNode n;
      n.ptrs = p.get<std::vector<int>>();
      r.selected.push_back(std::move(n));
    }
    r.forward_best = j.at("forward_best").get<int>();
    r.incumbent = j.at("incumbent").get<int>();
    r.elapsed_s = j.at("elapsed_s").get<double>();
    tr.iterations.push_back(std::move(r));
  }
  return tr;
}

}  // namespace vglcs
