#include "strata/export_off.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

namespace strata {

namespace {

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

// Deterministic placement: vertices along a golden-angle spiral on the unit
// sphere, indexed by vertex id.
Vec3 spiral_point(int i, int n) {
    if (n == 1) return {0, 0, 0};
    double t = (i + 0.5) / n;
    double phi = std::acos(1 - 2 * t);
    double theta = 2.399963229728653 * i;
    return {std::sin(phi) * std::cos(theta), std::sin(phi) * std::sin(theta), std::cos(phi)};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v + 0.0);  // normalize -0
    return buf;
}

std::vector<int> vertex_list(const SimpSet& s, SimplexRef c) {
    std::vector<int> vs;
    for (int i = 0; i <= c.dim; ++i) vs.push_back(s.vertex(nondeg(c), i).idx);
    return vs;
}

}  // namespace

std::string export_off(const SimpSet& s) {
    if (s.dim() > 3) throw Error("export_off: dimension above 3 unsupported");
    int nv = s.count(0);

    // Vertex-faithful: every cell has distinct vertices and distinct cells
    // have distinct vertex sets.
    bool faithful = true;
    std::set<std::vector<int>> seen;
    for (int d = 0; d <= s.dim() && faithful; ++d)
        for (int i = 0; i < s.count(d) && faithful; ++i) {
            std::vector<int> vs = vertex_list(s, SimplexRef{d, i});
            std::vector<int> sorted = vs;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                faithful = false;
            else if (!seen.insert(sorted).second)
                faithful = false;
        }

    std::vector<Vec3> coords;
    for (int i = 0; i < nv; ++i) coords.push_back(spiral_point(i, nv));
    std::vector<std::vector<int>> triangles;

    if (faithful) {
        for (int i = 0; i < s.count(2); ++i) triangles.push_back(vertex_list(s, SimplexRef{2, i}));
    } else {
        // Fan each 2-cell around its barycenter.
        for (int i = 0; i < s.count(2); ++i) {
            std::vector<int> vs = vertex_list(s, SimplexRef{2, i});
            Vec3 bary;
            for (int v : vs) {
                bary.x += coords[v].x / 3;
                bary.y += coords[v].y / 3;
                bary.z += coords[v].z / 3;
            }
            int b = static_cast<int>(coords.size());
            coords.push_back(bary);
            // Fan over the three boundary edges (d_0, d_1, d_2).
            for (int k = 0; k <= 2; ++k) {
                const FormalSimplex& e = s.face_entry(SimplexRef{2, i}, k);
                if (!e.nondegenerate()) continue;
                std::vector<int> evs = vertex_list(s, e.target);
                triangles.push_back({b, evs[0], evs[1]});
            }
        }
    }

    std::ostringstream os;
    os << "OFF\n" << coords.size() << ' ' << triangles.size() << " 0\n";
    for (const Vec3& p : coords) os << fmt(p.x) << ' ' << fmt(p.y) << ' ' << fmt(p.z) << '\n';
    for (const auto& t : triangles) {
        os << t.size();
        for (int v : t) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

}  // namespace strata
