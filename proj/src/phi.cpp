#include "pyramid/phi.hpp"

#include <algorithm>
#include <map>

namespace pyramid {

namespace {

// Column heights of a partition asymptotic to lambda; kInf on the leg and
// on the walls x=-1 / y=-1.
constexpr int kInf = 1 << 28;

struct HeightMap {
    const PlanePartition* p;
    int at(int x, int y) const {
        if (x < 0 || y < 0) return kInf;
        if (p->lambda.contains(x, y)) return kInf;
        int h = 0;
        while (p->member(x, y, h)) ++h;
        return h;
    }
};

// Upper-half depiction of one partition.  Every visible face of the box
// stack, viewed along the space diagonal, becomes one dimer:
//   top face of column (x,y) at height h  -> horizontal at row v0-x-y+2h-1
//   side face (x-step) at (x,y,z)         -> vertical at column y-x
//   side face (y-step) at (x,y,z)         -> vertical at column y-x-1
// The leg and the walls contribute side faces clipped at the window top.
HalfPlaneConfig render_upper(const PlanePartition& p, Window win, int v0) {
    HeightMap h{&p};
    Board b(win);
    int ymax = win.ymax;
    // z large enough that every face above it lies beyond the window
    auto ztop = [&](int x, int y) { return (ymax + x + y - v0) / 2 + 2; };

    int reach = std::max(win.width(), win.height()) + 2 * (p.size() + (int)p.lambda.rows.size()) + 8;
    for (int x = 0; x <= reach; ++x) {
        for (int y = 0; y <= reach; ++y) {
            int u = y - x;
            if (u < win.xmin - 1 || u > win.xmax + 1) continue;
            int hxy = h.at(x, y);
            if (hxy < kInf) {
                int r = v0 - x - y + 2 * hxy - 1;
                if (r >= 0 && r <= ymax) {
                    Dimer d({u - 1, r}, {u, r});
                    if (win.contains(d)) b.add(d);
                }
            }
            // x-step faces between (x-1,y) and (x,y)
            int hl = h.at(x - 1, y);
            for (int z = hxy; z < std::min(hl, ztop(x, y)); ++z) {
                int r = v0 - x - y + 2 * z;
                if (r < -1 || r + 1 > ymax) continue;
                Dimer d({u, r}, {u, r + 1});
                if (win.contains(d)) b.add(d);
            }
            // y-step faces between (x,y-1) and (x,y)
            int hb = h.at(x, y - 1);
            for (int z = hxy; z < std::min(hb, ztop(x, y)); ++z) {
                int r = v0 - x - y + 2 * z;
                if (r < -1 || r + 1 > ymax) continue;
                Dimer d({u - 1, r}, {u - 1, r + 1});
                if (win.contains(d)) b.add(d);
            }
        }
    }

    HalfPlaneConfig out;
    out.upper = true;
    out.win = win;
    out.dimers = b.dimers();
    for (const Dimer& d : out.dimers) {
        internal_check(!d.horizontal() || ((d.u.x + d.u.y) % 2 + 2) % 2 == 0,
                       "horizontal dimer off the brickwork checkerboard");
        if (!d.horizontal() && d.u.y == -1) out.pendants.push_back(d.u.x);
    }
    // Exact cover away from the side and top margins.
    for (int y = 0; y <= ymax - 2; ++y)
        for (int x = win.xmin + 2; x <= win.xmax - 2; ++x)
            internal_check(b.covered({x, y}), "half-plane depiction leaves a vertex uncovered");
    return out;
}

HalfPlaneConfig mirror_to_lower(const HalfPlaneConfig& up) {
    HalfPlaneConfig lo;
    lo.upper = false;
    lo.win = Window{up.win.xmin, -1 - up.win.ymax, up.win.xmax, 0};
    for (const Dimer& d : up.dimers)
        lo.dimers.push_back(Dimer({d.u.x, -1 - d.u.y}, {d.v.x, -1 - d.v.y}));
    std::sort(lo.dimers.begin(), lo.dimers.end());
    lo.pendants = up.pendants;
    return lo;
}

} // namespace

std::pair<HalfPlaneConfig, HalfPlaneConfig> phi_render_halfplanes(const SuperRigid& sr,
                                                                  int half_width, int height) {
    if (half_width < 4 || height < 8)
        throw std::invalid_argument("phi_render_halfplanes: window too small");
    Window win{-half_width - 1, -1, half_width, height};
    int v0 = (height / 2) & ~1;

    auto fits = [&](const PlanePartition& p) {
        int maxh = 0;
        for (auto [x, y, z] : p.extra) {
            maxh = std::max(maxh, z + 1);
            if (y - x < win.xmin + 2 || y - x - 1 > win.xmax - 2) return false;
        }
        for (auto [r, c] : p.lambda.cells())
            if (c - r < win.xmin + 3 || c - r > win.xmax - 3) return false;
        return v0 + 2 * maxh + 1 <= height && v0 >= 2 * (int)p.extra.size() + 2;
    };
    if (!fits(sr.pi0) || !fits(sr.piInf))
        throw std::invalid_argument("phi_render_halfplanes: window too small for the triple");

    HalfPlaneConfig upper = render_upper(sr.piInf, win, v0);
    HalfPlaneConfig lower = mirror_to_lower(render_upper(sr.pi0, win, v0));
    return {upper, lower};
}

std::vector<Dimer> halfplane_diff(const HalfPlaneConfig& a, const HalfPlaneConfig& b) {
    internal_check(a.win == b.win && a.upper == b.upper, "halfplane_diff window mismatch");
    std::vector<Dimer> out;
    std::set_symmetric_difference(a.dimers.begin(), a.dimers.end(), b.dimers.begin(),
                                  b.dimers.end(), std::back_inserter(out));
    return out;
}

} // namespace pyramid
