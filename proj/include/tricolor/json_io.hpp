#pragma once

// Needs nlohmann/json on the include path (vendored as json.hpp).
#include <json.hpp>

#include <string>

#include "graph.hpp"
#include "palette.hpp"

namespace tricolor {

// {"vertices": n, "colors": {"<1-based id>": 1|2|3}}
inline nlohmann::json coloring_to_json(const Graph &g, const Coloring &c) {
  nlohmann::json colors = nlohmann::json::object();
  for (Vertex v : g.vertices())
    colors[std::to_string(v + 1)] = static_cast<int>(c[v]);
  return {{"vertices", g.order()}, {"colors", colors}};
}

inline Coloring coloring_from_json(const nlohmann::json &j) {
  try {
    std::size_t n = j.at("vertices").get<std::size_t>();
    Coloring c(n);
    for (const auto &[key, val] : j.at("colors").items()) {
      std::size_t pos = 0;
      unsigned long v = std::stoul(key, &pos);
      int col = val.get<int>();
      if (pos != key.size() || v < 1 || v > n)
        throw InputError("coloring JSON: bad vertex id '" + key + "'");
      if (col < 1 || col > 3)
        throw InputError("coloring JSON: bad color for vertex " + key);
      c[static_cast<Vertex>(v - 1)] = static_cast<Color>(col);
    }
    return c;
  } catch (const InputError &) {
    throw;
  } catch (const std::exception &e) {
    throw InputError(std::string("coloring JSON: ") + e.what());
  }
}

} // namespace tricolor
