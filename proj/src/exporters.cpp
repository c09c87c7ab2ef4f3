#include "pathclass/exporters.hpp"

#include <sstream>

namespace pathclass {

namespace {

// reproducible region palette keyed by the label text
std::string region_color(const BigInt& label) {
  std::uint64_t h = fnv1a(label.str());
  int hue = static_cast<int>(h % 360);
  return "hsl(" + std::to_string(hue) + ",62%,72%)";
}

const char* kPathColors[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                             "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

}  // namespace

std::string to_svg(const Decomposition& d,
                   const std::vector<std::vector<Position>>& overlay_paths) {
  if (d.scene->dim != 2) throw InputError("SVG export is 2D only");
  const Scene& scene = *d.scene;
  const Triangulation& tri = *d.triangulation;
  const double x0 = scene.ws_min.d[0], y0 = scene.ws_min.d[1];
  const double x1 = scene.ws_max.d[0], y1 = scene.ws_max.d[1];
  const double w = x1 - x0, h = y1 - y0;
  const double margin = 0.03 * std::max(w, h);
  auto fy = [&](double y) { return y1 + y0 - y; };  // SVG y grows downward

  std::ostringstream out;
  out.precision(10);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 - margin << ' '
      << y0 - margin << ' ' << w + 2 * margin << ' ' << h + 2 * margin << "\">\n";
  out << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << w << "\" height=\"" << h
      << "\" fill=\"white\" stroke=\"black\" stroke-width=\"" << 0.004 * std::max(w, h)
      << "\"/>\n";

  const double thin = 0.0015 * std::max(w, h);
  for (const auto& r : d.regions) {
    const std::string color = region_color(r.label);
    for (int s : r.simplices) {
      out << "<polygon points=\"";
      for (int i = 0; i <= 2; ++i) {
        const Point& p = tri.vertex_point(tri.simplices()[s].v[i]);
        out << p.d[0] << ',' << fy(p.d[1]) << ' ';
      }
      out << "\" fill=\"" << color << "\" stroke=\"" << color << "\" stroke-width=\"" << thin
          << "\"/>\n";
    }
  }
  for (const auto& ob : scene.obstacles)
    for (const auto& piece : ob.pieces) {
      out << "<polygon points=\"";
      for (const auto& v : piece.vertices) out << v.d[0] << ',' << fy(v.d[1]) << ' ';
      out << "\" fill=\"#555555\" stroke=\"#222222\" stroke-width=\"" << thin << "\"/>\n";
    }
  for (std::size_t pi = 0; pi < overlay_paths.size(); ++pi) {
    out << "<polyline fill=\"none\" stroke=\"" << kPathColors[pi % std::size(kPathColors)]
        << "\" stroke-width=\"" << 3 * thin << "\" points=\"";
    for (const auto& p : overlay_paths[pi]) out << p[0] << ',' << fy(p[1]) << ' ';
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string to_obj(const Decomposition& d) {
  if (d.scene->dim != 3) throw InputError("OBJ export is 3D only");
  const Triangulation& tri = *d.triangulation;
  std::ostringstream out;
  out.precision(10);
  out << "# joint cover export\n";
  for (const auto& v : tri.vertices())
    out << "v " << v.position.d[0] << ' ' << v.position.d[1] << ' ' << v.position.d[2]
        << "\n";
  // region boundary shells: facets between a region simplex and anything else
  for (const auto& r : d.regions) {
    out << "g region_" << r.id << "_label_" << r.label.str() << "\n";
    for (int s : r.simplices) {
      const Simplex& sx = tri.simplices()[s];
      for (int f = 0; f <= 3; ++f) {
        int n = sx.nbr[f];
        if (n >= 0 && d.simplex_region[n] == r.id) continue;
        auto fv = tri.facet_vertices(s, f);
        out << "f " << fv[0] + 1 << ' ' << fv[1] + 1 << ' ' << fv[2] + 1 << "\n";
      }
    }
  }
  // obstacle meshes with their own vertices appended
  int base = static_cast<int>(tri.vertices().size());
  for (const auto& ob : d.scene->obstacles) {
    out << "g obstacle_" << ob.id << "\n";
    for (const auto& piece : ob.pieces) {
      for (const auto& v : piece.vertices)
        out << "v " << v.d[0] << ' ' << v.d[1] << ' ' << v.d[2] << "\n";
      for (const auto& f : piece.faces)
        out << "f " << base + f[0] + 1 << ' ' << base + f[1] + 1 << ' ' << base + f[2] + 1
            << "\n";
      base += static_cast<int>(piece.vertices.size());
    }
  }
  return out.str();
}

}  // namespace pathclass
