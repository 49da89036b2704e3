#pragma once

#include <optional>
#include <string>

#include "loopcross/constructions.hpp"

namespace loopcross {

// One self-describing document for both loop families and multigraphs,
// discriminated by `kind`; rationals travel as "p/q" strings.
struct Instance {
  int version = 1;
  std::string kind;  // "loops" or "multigraph"
  std::optional<LoopFamily> loops;
  std::optional<DrawnMultigraph> graph;

  static Instance of(LoopFamily fam) {
    Instance inst;
    inst.kind = "loops";
    inst.loops = std::move(fam);
    return inst;
  }
  static Instance of(DrawnMultigraph g) {
    Instance inst;
    inst.kind = "multigraph";
    inst.graph = std::move(g);
    return inst;
  }
};

// Canonical serialization: save(load(s)) == s byte for byte.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

struct SvgOptions {
  bool mark_crossings = false;
  double width = 900.0;
};

std::string instance_to_svg(const Instance& inst, const SvgOptions& opts = {});
void export_svg(const Instance& inst, const std::string& path, const SvgOptions& opts = {});

}  // namespace loopcross
