#include "pyramid/svg.hpp"

#include <sstream>

namespace pyramid {

namespace {

constexpr int kCell = 20;
constexpr int kPad = 14;

struct Canvas {
    std::ostringstream os;
    int xmin, ymax;
    int px(int x) const { return kPad + (x - xmin) * kCell; }
    int py(int y) const { return kPad + (ymax - y) * kCell; }

    void open(Window w) {
        int width = 2 * kPad + (w.width() - 1) * kCell;
        int height = 2 * kPad + (w.height() - 1) * kCell;
        xmin = w.xmin;
        ymax = w.ymax;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
           << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
           << "\">\n";
    }
    void close() { os << "</svg>\n"; }

    void dimer(const Dimer& d) {
        int x0 = px(d.u.x), y1 = py(d.v.y);
        int wpx = d.horizontal() ? kCell + 12 : 12;
        int hpx = d.horizontal() ? 12 : kCell + 12;
        os << "<rect x=\"" << x0 - 6 << "\" y=\"" << y1 - 6 << "\" width=\"" << wpx
           << "\" height=\"" << hpx
           << "\" rx=\"5\" fill=\"#9ecae1\" stroke=\"#3182bd\" stroke-width=\"1\"/>\n";
    }
    void missing_block(Vertex c) {
        os << "<rect x=\"" << px(c.x) - 4 << "\" y=\"" << py(c.y + 1) - 4 << "\" width=\""
           << kCell + 8 << "\" height=\"" << kCell + 8
           << "\" fill=\"#bdbdbd\" fill-opacity=\"0.6\"/>\n";
    }
    void vertex(Vertex v, bool black) {
        os << "<circle cx=\"" << px(v.x) << "\" cy=\"" << py(v.y) << "\" r=\"3\" fill=\""
           << (black ? "#000000" : "#ffffff") << "\" stroke=\"#636363\" stroke-width=\"1\"/>\n";
    }
    void seam(Window w) {
        int y = (py(0) + py(-1)) / 2;
        os << "<line x1=\"" << px(w.xmin) - 8 << "\" y1=\"" << y << "\" x2=\"" << px(w.xmax) + 8
           << "\" y2=\"" << y << "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    }
};

} // namespace

std::string svg_of_cover(const Board& b, Coloring col, const std::vector<Vertex>& missing) {
    Canvas c;
    c.open(b.window());
    for (Vertex m : missing) c.missing_block(m);
    for (const Dimer& d : b.dimers()) c.dimer(d);
    const Window& w = b.window();
    for (int y = w.ymin; y <= w.ymax; ++y)
        for (int x = w.xmin; x <= w.xmax; ++x) c.vertex({x, y}, col.black({x, y}));
    c.close();
    return c.os.str();
}

std::string svg_of_halfplanes(const HalfPlaneConfig& upper, const HalfPlaneConfig& lower) {
    Window w{std::min(upper.win.xmin, lower.win.xmin), lower.win.ymin,
             std::max(upper.win.xmax, lower.win.xmax), upper.win.ymax};
    Canvas c;
    c.open(w);
    c.seam(w);
    for (const Dimer& d : upper.dimers) c.dimer(d);
    for (const Dimer& d : lower.dimers)
        if (!(d.u.y == -1 && d.v.y == 0)) c.dimer(d); // pendants drawn once
    Coloring col{0};
    for (int y = w.ymin; y <= w.ymax; ++y)
        for (int x = w.xmin; x <= w.xmax; ++x) c.vertex({x, y}, col.black({x, y}));
    c.close();
    return c.os.str();
}

} // namespace pyramid
