#include "ploi/graph.hpp"

#include <iomanip>
#include <sstream>

namespace ploi {

namespace {

const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string graph_csv(const std::vector<NamedMap>& maps) {
  std::string out = "map,x,y\n";
  for (const auto& [name, f] : maps)
    for (const auto& p : f.points()) out += name + "," + p.x.str() + "," + p.y.str() + "\n";
  return out;
}

std::string graph_svg(const std::vector<NamedMap>& maps, int size) {
  const int margin = 30;
  const int full = size + 2 * margin;
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  auto px = [&](const Rational& x) { return margin + x.to_double() * size; };
  auto py = [&](const Rational& y) { return margin + (1.0 - y.to_double()) * size; };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << full << "\" height=\"" << full
     << "\" viewBox=\"0 0 " << full << ' ' << full << "\">\n";
  os << "  <rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << size << "\" height=\"" << size
     << "\" fill=\"none\" stroke=\"#000\"/>\n";
  os << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1) << "\" y2=\"" << py(1)
     << "\" stroke=\"#999\" stroke-dasharray=\"4 4\"/>\n";
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto& [name, f] = maps[i];
    const char* color = kColors[i % (sizeof(kColors) / sizeof(kColors[0]))];
    os << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < f.points().size(); ++k) {
      if (k) os << ' ';
      os << px(f.points()[k].x) << ',' << py(f.points()[k].y);
    }
    os << "\">\n    <title>" << escape(name) << ":";
    for (const auto& p : f.points()) os << " (" << p.x.str() << ", " << p.y.str() << ")";
    os << "</title>\n  </polyline>\n";
    os << "  <text x=\"" << margin + 8 << "\" y=\"" << margin + 16 + 16 * static_cast<int>(i) << "\" fill=\"" << color
       << "\" font-family=\"sans-serif\" font-size=\"13\">" << escape(name) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ploi
