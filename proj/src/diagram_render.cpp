#include "nc/diagram_render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nc {

std::string diagram_svg(const LatticePolyhedron& p, const std::set<Exponents>& support) {
  if (p.flat()) throw std::invalid_argument("diagram_svg: flat polyhedron");
  if (p.ambient_dim() != 2) throw std::invalid_argument("diagram_svg: drawing requires 2 variables");

  std::int64_t mx = 1;
  for (const auto& s : support) mx = std::max({mx, s[0], s[1]});
  mx += 1;
  const double scale = 420.0 / static_cast<double>(mx);
  const double off = 40.0;
  auto X = [&](std::int64_t v) { return off + scale * static_cast<double>(v); };
  auto Y = [&](std::int64_t v) { return 460.0 - scale * static_cast<double>(v) - off + 40.0; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" "
         "viewBox=\"0 0 500 500\">\n";
  svg << "<rect width=\"500\" height=\"500\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(mx) << "\" y2=\"" << Y(0)
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(mx)
      << "\" stroke=\"black\"/>\n";
  for (std::int64_t v = 1; v <= mx; ++v) {
    svg << "<line x1=\"" << X(v) << "\" y1=\"" << Y(0) - 3 << "\" x2=\"" << X(v) << "\" y2=\""
        << Y(0) + 3 << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << X(0) - 3 << "\" y1=\"" << Y(v) << "\" x2=\"" << X(0) + 3 << "\" y2=\""
        << Y(v) << "\" stroke=\"black\"/>\n";
  }
  // Bounded edges of the diagram.
  for (const auto& f : p.faces()) {
    if (!f.bounded || f.dim != 1) continue;
    const auto& a = f.vertex_list.front();
    const auto& b = f.vertex_list.back();
    svg << "<line x1=\"" << X(a[0]) << "\" y1=\"" << Y(a[1]) << "\" x2=\"" << X(b[0]) << "\" y2=\""
        << Y(b[1]) << "\" stroke=\"crimson\" stroke-width=\"2\"/>\n";
  }
  for (const auto& s : support) {
    bool is_vertex = std::find(p.vertices().begin(), p.vertices().end(), s) != p.vertices().end();
    svg << "<circle cx=\"" << X(s[0]) << "\" cy=\"" << Y(s[1]) << "\" r=\""
        << (is_vertex ? 5 : 3) << "\" fill=\"" << (is_vertex ? "crimson" : "gray") << "\"/>\n";
    svg << "<text x=\"" << X(s[0]) + 6 << "\" y=\"" << Y(s[1]) - 6 << "\" font-size=\"12\">("
        << s[0] << "," << s[1] << ")</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string vertices_csv(const LatticePolyhedron& p) {
  std::ostringstream csv;
  for (size_t j = 0; j < p.ambient_dim(); ++j) {
    if (j) csv << ",";
    csv << "xi" << (j + 1);
  }
  csv << "\n";
  if (p.flat()) return csv.str();
  for (const auto& v : p.vertices()) {
    for (size_t j = 0; j < v.size(); ++j) {
      if (j) csv << ",";
      csv << v[j];
    }
    csv << "\n";
  }
  return csv.str();
}

}  // namespace nc
