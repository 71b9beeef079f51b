#include "strata/homology.hpp"

#include <algorithm>
#include <sstream>

namespace strata {

void ChainComplex::validate() const {
    for (int n = 1; n < static_cast<int>(boundary.size()); ++n) {
        if (n + 1 >= static_cast<int>(boundary.size())) break;
        const IntMat& a = boundary[n];
        const IntMat& b = boundary[n + 1];
        if (ranks[n] == 0 || ranks[n + 1] == 0 || ranks[n - 1] == 0) continue;
        for (int i = 0; i < ranks[n - 1]; ++i) {
            for (int j = 0; j < ranks[n + 1]; ++j) {
                Zint acc = 0;
                for (int k = 0; k < ranks[n]; ++k) acc += a[i][k] * b[k][j];
                if (acc != 0) throw Error("chain complex: dd != 0");
            }
        }
    }
}

ChainComplex normalized_chain_complex(const SimpSet& x) {
    ChainComplex c;
    int d = x.dim();
    c.ranks.resize(d + 1);
    c.boundary.resize(d + 1);
    for (int n = 0; n <= d; ++n) c.ranks[n] = x.count(n);
    for (int n = 1; n <= d; ++n) {
        IntMat m(x.count(n - 1), std::vector<Zint>(x.count(n), 0));
        for (int idx = 0; idx < x.count(n); ++idx) {
            for (int i = 0; i <= n; ++i) {
                const FormalSimplex& f = x.face_entry(SimplexRef{n, idx}, i);
                if (!f.nondegenerate()) continue;
                m[f.target.idx][idx] += (i % 2 == 0) ? 1 : -1;
            }
        }
        c.boundary[n] = std::move(m);
    }
    c.validate();
    return c;
}

SmithResult smith_normal_form(IntMat m) {
    SmithResult out;
    if (m.empty() || m[0].empty()) return out;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0, c = 0;
    while (r < rows && c < cols) {
        // Find pivot of minimal absolute value in the remaining block.
        size_t pr = r, pc = c;
        Zint best = 0;
        for (size_t i = r; i < rows; ++i)
            for (size_t j = c; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || abs(m[i][j]) < best)) {
                    best = abs(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0) break;
        std::swap(m[r], m[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][pc]);
        bool clean = true;
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Zint q = m[i][c] / m[r][c];
            if (q != 0)
                for (size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
            if (m[i][c] != 0) clean = false;
        }
        for (size_t j = c + 1; j < cols; ++j) {
            if (m[r][j] == 0) continue;
            Zint q = m[r][j] / m[r][c];
            if (q != 0)
                for (size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][c];
            if (m[r][j] != 0) clean = false;
        }
        if (!clean) continue;  // re-pivot on the smaller remainder
        // Divisibility fix-up: pivot must divide the rest of the block.
        bool divides = true;
        for (size_t i = r + 1; i < rows && divides; ++i)
            for (size_t j = c + 1; j < cols && divides; ++j)
                if (m[i][j] % m[r][c] != 0) {
                    for (size_t jj = c; jj < cols; ++jj) m[r][jj] += m[i][jj];
                    divides = false;
                }
        if (!divides) continue;
        out.diagonal.push_back(abs(m[r][c]));
        ++r;
        ++c;
    }
    return out;
}

HomologyReport homology(const ChainComplex& c) {
    HomologyReport rep;
    int d = c.top_dim();
    rep.betti.assign(std::max(0, d + 1), 0);
    rep.torsion.assign(std::max(0, d + 1), {});
    std::vector<SmithResult> snf(d + 2);
    for (int n = 1; n <= d; ++n) snf[n] = smith_normal_form(c.boundary[n]);
    for (int n = 0; n <= d; ++n) {
        int rank_dn = (n >= 1) ? snf[n].rank() : 0;
        int rank_dn1 = (n + 1 <= d) ? snf[n + 1].rank() : 0;
        rep.betti[n] = c.ranks[n] - rank_dn - rank_dn1;
        if (rep.betti[n] < 0) throw Error("homology: negative betti number");
        if (n + 1 <= d)
            for (const Zint& v : snf[n + 1].diagonal)
                if (v > 1) rep.torsion[n].push_back(v);
        rep.euler += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(c.ranks[n]);
    }
    return rep;
}

HomologyReport homology(const SimpSet& x) { return homology(normalized_chain_complex(x)); }

bool HomologyReport::reduced_point() const {
    if (betti.empty() || betti[0] != 1) return false;
    for (size_t i = 1; i < betti.size(); ++i)
        if (betti[i] != 0) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

bool HomologyReport::equals(const HomologyReport& o) const {
    size_t n = std::max(betti.size(), o.betti.size());
    for (size_t i = 0; i < n; ++i) {
        int a = i < betti.size() ? betti[i] : 0;
        int b = i < o.betti.size() ? o.betti[i] : 0;
        if (a != b) return false;
        std::vector<Zint> ta = i < torsion.size() ? torsion[i] : std::vector<Zint>{};
        std::vector<Zint> tb = i < o.torsion.size() ? o.torsion[i] : std::vector<Zint>{};
        std::sort(ta.begin(), ta.end());
        std::sort(tb.begin(), tb.end());
        if (ta != tb) return false;
    }
    return true;
}

std::string HomologyReport::to_string() const {
    std::ostringstream os;
    os << "H = (";
    for (size_t i = 0; i < betti.size(); ++i) {
        if (i) os << ", ";
        if (betti[i] == 0 && torsion[i].empty()) {
            os << "0";
            continue;
        }
        bool first = true;
        if (betti[i] > 0) {
            os << "Z";
            if (betti[i] > 1) os << "^" << betti[i];
            first = false;
        }
        for (const Zint& t : torsion[i]) {
            if (!first) os << "+";
            os << "Z/" << t;
            first = false;
        }
    }
    os << ")";
    return os.str();
}

HomologyReport sphere_homology(int n) {
    HomologyReport rep;
    if (n < 0) return rep;  // empty space
    rep.betti.assign(n + 1, 0);
    rep.torsion.assign(n + 1, {});
    rep.betti[0] = 1;
    if (n == 0)
        rep.betti[0] = 2;
    else
        rep.betti[n] = 1;
    rep.euler = (n % 2 == 0) ? 2 : 0;
    return rep;
}

HomologyReport point_homology() {
    HomologyReport rep;
    rep.betti = {1};
    rep.torsion = {{}};
    rep.euler = 1;
    return rep;
}

}  // namespace strata
