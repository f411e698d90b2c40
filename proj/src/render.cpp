#include "queuelay/render.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace queuelay {

namespace {

// Fixed palette; queue q uses color q%12 and picks up a dash pattern every
// time it wraps, so arbitrarily many queues stay tellable apart.
const char* kPalette[12] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#3a0ca3", "#b5179e"};

const char* kDashes[4] = {"", "8 4", "3 3", "12 3 3 3"};

constexpr int kStep = 40;    // horizontal distance between adjacent ranks
constexpr int kMargin = 30;  // padding on every side

bool in_witness(const Edge& e, const RainbowWitness* w) {
  if (!w) return false;
  for (const Edge& f : w->edges)
    if (f.u == e.u && f.v == e.v) return true;
  return false;
}

}  // namespace

std::string render_arc_diagram(const Graph& g, const QueueLayout& L,
                               const RainbowWitness* highlight) {
  const int n = g.vertex_count();
  int max_span = 0;
  for (const Edge& e : g.edges()) {
    int d = L.order.rank(e.v) - L.order.rank(e.u);
    if (d < 0) d = -d;
    max_span = std::max(max_span, d);
  }
  // Radius of a span-d arc is d*kStep/2, an integer multiple of 20.
  const int arc_room = max_span * kStep / 2;
  const int base_y = kMargin + arc_room;          // spine line
  const int width = 2 * kMargin + kStep * (n > 0 ? n - 1 : 0);
  const int height = base_y + kMargin + 18;       // room for labels below

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"#ffffff\"/>\n";
  if (n > 0) {
    svg << "<line x1=\"" << kMargin << "\" y1=\"" << base_y << "\" x2=\""
        << (width - kMargin) << "\" y2=\"" << base_y
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }

  auto x_of = [&](int v) { return kMargin + kStep * L.order.rank(v); };

  for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
    const Edge& e = g.edges()[ei];
    int xa = x_of(e.u), xb = x_of(e.v);
    if (xa > xb) std::swap(xa, xb);
    const int r = (xb - xa) / 2;
    const int q = ei < L.queue_of.size() ? L.queue_of[ei] : 0;
    const int cq = q < 0 ? 0 : q;
    const bool hot = in_witness(e, highlight);
    svg << "<path d=\"M " << xa << " " << base_y << " A " << r << " " << r
        << " 0 0 0 " << xb << " " << base_y << "\" fill=\"none\" stroke=\""
        << kPalette[cq % 12] << "\" stroke-width=\"" << (hot ? 5 : 2) << "\"";
    const char* dash = kDashes[(cq / 12) % 4];
    if (dash[0] != '\0') svg << " stroke-dasharray=\"" << dash << "\"";
    if (hot) svg << " stroke-linecap=\"round\"";
    svg << "><title>" << e.u << "-" << e.v << " queue " << q << "</title>"
        << "</path>\n";
  }

  for (int rank = 0; rank < n; ++rank) {
    const int v = L.order.vertex_at(rank);
    const int x = kMargin + kStep * rank;
    svg << "<circle cx=\"" << x << "\" cy=\"" << base_y
        << "\" r=\"3\" fill=\"#333333\"/>\n";
    svg << "<text x=\"" << x << "\" y=\"" << (base_y + 16)
        << "\" font-family=\"monospace\" font-size=\"12\" "
           "text-anchor=\"middle\" fill=\"#333333\">"
        << v << "</text>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace queuelay
