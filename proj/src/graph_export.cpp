#include "picard/graph_export.hpp"

#include <fstream>
#include <sstream>

#include "picard/ag23.hpp"
#include "picard/cubic_lines.hpp"
#include "picard/dp6.hpp"

namespace picard {

bool write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return out.good();
}

std::string dot_lines27() {
  CubicLines cl;
  std::ostringstream out;
  out << "graph lines27 {\n";
  for (const auto& eq : cl.lines()) out << "  " << eq.label.str() << ";\n";
  for (int p = 0; p < 27; ++p)
    for (int q = p + 1; q < 27; ++q)
      if (cl.meets(p, q))
        out << "  " << LineLabel::from_index(p).str() << " -- "
            << LineLabel::from_index(q).str() << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

std::string curve_name(const LatticeVector& v) {
  if (v[0] == 0) {
    for (int i = 1; i < v.rank(); ++i)
      if (v[i] == 1) return "E" + std::to_string(i);
  }
  std::string name = "L";
  for (int i = 1; i < v.rank(); ++i)
    if (v[i] == -1) name += std::to_string(i);
  return name;
}

}  // namespace

std::string dot_hexagon() {
  DP6Hexagon hex;
  std::ostringstream out;
  out << "graph hexagon {\n";
  for (const auto& c : hex.curves()) out << "  " << curve_name(c.v) << ";\n";
  for (int p = 0; p < 6; ++p)
    for (int q = p + 1; q < 6; ++q)
      if (hex.adjacent(p, q))
        out << "  " << curve_name(hex.curves()[static_cast<std::size_t>(p)].v) << " -- "
            << curve_name(hex.curves()[static_cast<std::size_t>(q)].v) << ";\n";
  out << "}\n";
  return out.str();
}

std::string dot_ag23() {
  AG23 ag;
  std::ostringstream out;
  out << "graph ag23 {\n";
  for (int idx = 0; idx < 9; ++idx) {
    AffinePointF3 p = AffinePointF3::from_index(idx);
    out << "  p" << p.u << p.v << ";\n";
  }
  for (std::size_t k = 0; k < ag.config_lines().size(); ++k) out << "  l" << k << ";\n";
  for (std::size_t k = 0; k < ag.config_lines().size(); ++k)
    for (int idx : ag.config_lines()[k]) {
      AffinePointF3 p = AffinePointF3::from_index(idx);
      out << "  p" << p.u << p.v << " -- l" << k << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace picard
