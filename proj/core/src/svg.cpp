#include "arrlcs/svg.hpp"

#include <algorithm>
#include <sstream>

namespace arrlcs {

namespace {

// round(q * 10^6), rendered with a fixed 6-digit fraction
std::string dec6(const Rat& q) {
  Int num = q.get_num(), den = q.get_den();  // den > 0
  Int v = floor_div(2 * num * 1000000 + den, 2 * den);
  bool neg = v < 0;
  Int a = abs(v);
  Int ip = a / 1000000, fp = a % 1000000;
  std::ostringstream os;
  if (neg) os << "-";
  os << ip.get_str();
  std::string f = fp.get_str();
  os << "." << std::string(6 - f.size(), '0') << f;
  return os.str();
}

struct Box {
  Rat x0, x1, y0, y1;
};

}  // namespace

std::string render_svg(const WiringDiagram& diag, int infinity_label) {
  // gather the interesting region: all multiple points plus the base line
  std::vector<std::pair<Rat, Rat>> pts;
  for (const auto& ev : diag.events) {
    for (const auto& l : diag.lines)
      if (l.label == ev.wires.front()) pts.push_back({ev.x, l.y_at(ev.x)});
  }
  Box b;
  if (pts.empty()) {
    b = {Rat(-5), Rat(5), Rat(-5), Rat(5)};
  } else {
    b.x0 = b.x1 = pts[0].first;
    b.y0 = b.y1 = pts[0].second;
    for (const auto& [x, y] : pts) {
      b.x0 = std::min(b.x0, x);
      b.x1 = std::max(b.x1, x);
      b.y0 = std::min(b.y0, y);
      b.y1 = std::max(b.y1, y);
    }
    b.x0 = std::min(b.x0, diag.base_x);
  }
  Rat padx = (b.x1 - b.x0 + 2) / 4, pady = (b.y1 - b.y0 + 2) / 4;
  b.x0 -= padx;
  b.x1 += padx;
  b.y0 -= pady;
  b.y1 += pady;

  const int W = 860, H = 640, M = 50;
  auto sx = [&](const Rat& x) {
    return dec6(Rat(M) + Rat(W - 2 * M) * (x - b.x0) / (b.x1 - b.x0));
  };
  auto sy = [&](const Rat& y) {
    return dec6(Rat(M) + Rat(H - 2 * M) * (b.y1 - y) / (b.y1 - b.y0));
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << W << " "
     << H << "\">\n";
  os << "<rect width=\"" << W << "\" height=\"" << H
     << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << M << "\" y=\"24\" font-family=\"sans-serif\" "
        "font-size=\"14\" fill=\"#333\">"
     << diag.lines.size() + 1 << " lines, L" << infinity_label
     << " at infinity, shear t = " << rat_str(diag.t) << "</text>\n";

  // sweep base line
  os << "<line x1=\"" << sx(diag.base_x) << "\" y1=\"" << M << "\" x2=\""
     << sx(diag.base_x) << "\" y2=\"" << H - M
     << "\" stroke=\"#999\" stroke-dasharray=\"6 4\"/>\n";
  os << "<text x=\"" << sx(diag.base_x) << "\" y=\"" << H - M + 18
     << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#999\" "
        "text-anchor=\"middle\">x = "
     << rat_str(diag.base_x) << "</text>\n";

  for (const auto& l : diag.lines) {
    Rat ya = l.y_at(b.x0), yb = l.y_at(b.x1);
    os << "<line x1=\"" << sx(b.x0) << "\" y1=\"" << sy(ya) << "\" x2=\""
       << sx(b.x1) << "\" y2=\"" << sy(yb)
       << "\" stroke=\"#1a56a0\" stroke-width=\"1.4\"/>\n";
    // label at the visible right edge
    os << "<text x=\"" << W - M + 6 << "\" y=\"" << sy(yb)
       << "\" font-family=\"sans-serif\" font-size=\"12\" "
          "fill=\"#1a56a0\">L"
       << l.label << "</text>\n";
  }

  for (const auto& ev : diag.events) {
    Rat y;
    for (const auto& l : diag.lines)
      if (l.label == ev.wires.front()) y = l.y_at(ev.x);
    bool high = ev.len >= 3;
    os << "<circle cx=\"" << sx(ev.x) << "\" cy=\"" << sy(y) << "\" r=\""
       << (high ? 5 : 3) << "\" fill=\"" << (high ? "#c0392b" : "#333")
       << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const Arrangement& arr) {
  return render_svg(build_wiring(arr), arr.infinity);
}

}  // namespace arrlcs
