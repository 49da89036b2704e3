#include "loopcross/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace loopcross {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json point_json(const Point& p) {
  return ordered_json::array({to_string(p.x), to_string(p.y)});
}

Point point_from(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw SchemaError("point must be a [\"p/q\",\"p/q\"] pair");
  return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>())};
}

ordered_json points_json(const std::vector<Point>& pts) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : pts) arr.push_back(point_json(p));
  return arr;
}

std::vector<Point> points_from(const ordered_json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of points");
  std::vector<Point> out;
  for (const auto& e : j) out.push_back(point_from(e));
  return out;
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  ordered_json doc;
  doc["version"] = inst.version;
  doc["kind"] = inst.kind;
  if (inst.kind == "loops") {
    const LoopFamily& fam = *inst.loops;
    ordered_json punctures = ordered_json::array();
    for (const auto& p : fam.plane.punctures) punctures.push_back(point_json(p));
    doc["punctures"] = punctures;
    doc["basepoint"] = point_json(fam.plane.basepoint);
    ordered_json curves = ordered_json::array();
    for (std::size_t i = 0; i < fam.loops.size(); ++i) {
      ordered_json c;
      c["id"] = "c" + std::to_string(i);
      c["closed"] = fam.loops[i].closed;
      c["points"] = points_json(fam.loops[i].verts);
      curves.push_back(std::move(c));
    }
    doc["curves"] = curves;
    if (!fam.windings.empty()) doc["windings"] = fam.windings;
  } else if (inst.kind == "multigraph") {
    const DrawnMultigraph& g = *inst.graph;
    ordered_json verts = ordered_json::array();
    for (const auto& [label, p] : g.vertices) {
      ordered_json v;
      v["label"] = label;
      v["point"] = point_json(p);
      verts.push_back(std::move(v));
    }
    doc["vertices"] = verts;
    ordered_json edges = ordered_json::array();
    for (const auto& e : g.edges) {
      ordered_json je;
      je["id"] = e.id;
      je["u"] = e.u;
      je["v"] = e.v;
      je["closed"] = e.curve.closed;
      je["points"] = points_json(e.curve.verts);
      edges.push_back(std::move(je));
    }
    doc["edges"] = edges;
  } else {
    throw SchemaError("unknown instance kind '" + inst.kind + "'");
  }
  return doc.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json parse error: ") + e.what());
  }
  auto need = [&](const char* field) -> const ordered_json& {
    if (!doc.contains(field)) throw SchemaError(std::string("missing field '") + field + "'");
    return doc[field];
  };
  Instance inst;
  if (!need("version").is_number_integer()) throw SchemaError("version must be an integer");
  inst.version = doc["version"].get<int>();
  if (inst.version != 1) throw SchemaError("unsupported version");
  inst.kind = need("kind").get<std::string>();
  try {
    if (inst.kind == "loops") {
      std::vector<Point> punctures = points_from(need("punctures"));
      Point basepoint = point_from(need("basepoint"));
      LoopFamily fam{PuncturedPlane(punctures, basepoint), {}, {}};
      for (const auto& c : need("curves")) {
        if (!c.contains("points") || !c.contains("closed"))
          throw SchemaError("curve needs 'points' and 'closed'");
        std::vector<Point> pts = points_from(c["points"]);
        bool closed = c["closed"].get<bool>();
        if (closed && pts.size() > 2 && pts.front() == pts.back()) pts.pop_back();
        fam.loops.emplace_back(std::move(pts), closed);
      }
      if (doc.contains("windings"))
        for (const auto& w : doc["windings"]) fam.windings.push_back(w.get<long long>());
      inst.loops = std::move(fam);
    } else if (inst.kind == "multigraph") {
      DrawnMultigraph g;
      for (const auto& v : need("vertices")) {
        if (!v.contains("label") || !v.contains("point"))
          throw SchemaError("vertex needs 'label' and 'point'");
        g.vertices.push_back({v["label"].get<std::string>(), point_from(v["point"])});
      }
      for (const auto& e : need("edges")) {
        for (const char* f : {"id", "u", "v", "closed", "points"})
          if (!e.contains(f)) throw SchemaError(std::string("edge needs '") + f + "'");
        std::string u = e["u"].get<std::string>(), v2 = e["v"].get<std::string>();
        if (!g.has_vertex(u) || !g.has_vertex(v2))
          throw SchemaError("edge endpoint label not in vertices");
        std::vector<Point> pts = points_from(e["points"]);
        bool closed = e["closed"].get<bool>();
        if (closed && pts.size() > 2 && pts.front() == pts.back()) pts.pop_back();
        g.edges.push_back({e["id"].get<std::string>(), u, v2, PolyCurve(std::move(pts), closed)});
      }
      inst.graph = std::move(g);
    } else {
      throw SchemaError("unknown kind '" + inst.kind + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("schema error: ") + e.what());
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return instance_from_json(ss.str());
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << instance_to_json(inst);
}

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string instance_to_svg(const Instance& inst, const SvgOptions& opts) {
  std::vector<PolyCurve> curves;
  std::vector<Point> specials;  // punctures / vertices
  std::vector<std::string> labels;
  std::string meta;
  if (inst.kind == "loops") {
    const LoopFamily& fam = *inst.loops;
    curves = fam.loops;
    for (const auto& p : fam.plane.punctures) {
      specials.push_back(p);
      labels.push_back("");
    }
    specials.push_back(fam.plane.basepoint);
    labels.push_back("x");
    meta = "loops n=" + std::to_string(fam.plane.puncture_count()) +
           " curves=" + std::to_string(fam.loops.size());
  } else {
    const DrawnMultigraph& g = *inst.graph;
    for (const auto& e : g.edges) curves.push_back(e.curve);
    for (const auto& [label, p] : g.vertices) {
      specials.push_back(p);
      labels.push_back(label);
    }
    meta = "multigraph n=" + std::to_string(g.vertex_count()) +
           " m=" + std::to_string(g.edge_count());
  }

  double lox = 0, hix = 1, loy = 0, hiy = 1;
  bool first = true;
  auto grow = [&](const Point& p) {
    double x = to_double(p.x), y = to_double(p.y);
    if (first) {
      lox = hix = x;
      loy = hiy = y;
      first = false;
    }
    lox = std::min(lox, x);
    hix = std::max(hix, x);
    loy = std::min(loy, y);
    hiy = std::max(hiy, y);
  };
  for (const auto& c : curves)
    for (const auto& p : c.verts) grow(p);
  for (const auto& p : specials) grow(p);
  double margin = std::max((hix - lox), (hiy - loy)) * 0.05 + 0.5;
  lox -= margin;
  hix += margin;
  loy -= margin;
  hiy += margin;
  double scale = opts.width / (hix - lox);
  double height = (hiy - loy) * scale;
  auto X = [&](const Point& p) { return (to_double(p.x) - lox) * scale; };
  auto Y = [&](const Point& p) { return height - (to_double(p.y) - loy) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(opts.width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(opts.width) << " " << fmt(height) << "\">\n";
  svg << "<!-- " << meta << " -->\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const PolyCurve& c = curves[i];
    svg << "<path d=\"M " << fmt(X(c.verts[0])) << " " << fmt(Y(c.verts[0]));
    for (std::size_t v = 1; v < c.verts.size(); ++v)
      svg << " L " << fmt(X(c.verts[v])) << " " << fmt(Y(c.verts[v]));
    if (c.closed) svg << " Z";
    svg << "\" fill=\"none\" stroke=\"" << kPalette[i % 10]
        << "\" stroke-width=\"1.2\" stroke-linejoin=\"round\"/>\n";
  }
  if (opts.mark_crossings) {
    for (std::size_t i = 0; i < curves.size(); ++i) {
      for (const auto& r : curve_self_crossings(curves[i]))
        svg << "<circle cx=\"" << fmt(X(r.location)) << "\" cy=\"" << fmt(Y(r.location))
            << "\" r=\"2\" fill=\"black\"/>\n";
      for (std::size_t j2 = i + 1; j2 < curves.size(); ++j2)
        for (const auto& r : curve_pair_crossings(curves[i], curves[j2]))
          svg << "<circle cx=\"" << fmt(X(r.location)) << "\" cy=\"" << fmt(Y(r.location))
              << "\" r=\"2\" fill=\"black\"/>\n";
    }
  }
  for (std::size_t i = 0; i < specials.size(); ++i) {
    svg << "<circle cx=\"" << fmt(X(specials[i])) << "\" cy=\"" << fmt(Y(specials[i]))
        << "\" r=\"3\" fill=\"" << (labels[i].empty() ? "crimson" : "black") << "\"/>\n";
    if (!labels[i].empty())
      svg << "<text x=\"" << fmt(X(specials[i]) + 5) << "\" y=\"" << fmt(Y(specials[i]) - 5)
          << "\" font-size=\"11\">" << labels[i] << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void export_svg(const Instance& inst, const std::string& path, const SvgOptions& opts) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << instance_to_svg(inst, opts);
}

}  // namespace loopcross
