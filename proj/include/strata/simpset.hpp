#ifndef STRATA_SIMPSET_HPP
#define STRATA_SIMPSET_HPP

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace strata {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degeneracy word in normal form: indices of s_{j1} s_{j2} ... s_{jk}
// with j1 > j2 > ... > jk (operator composition, leftmost applied last).
using DegenWord = std::vector<int>;

bool word_is_normal(const DegenWord& w);

// s_j . w, renormalized via s_i s_j = s_{j+1} s_i for i <= j.
DegenWord word_mul_left(int j, const DegenWord& w);

// a . b as operators, normal form.
DegenWord word_compose(const DegenWord& a, const DegenWord& b);

// A nondegenerate simplex of a SimpSet, addressed by (dimension, index).
struct SimplexRef {
    int dim = 0;
    int idx = 0;
    auto operator<=>(const SimplexRef&) const = default;
};

// s_{word}(target): a possibly degenerate simplex in normal form.
struct FormalSimplex {
    DegenWord word;
    SimplexRef target;

    int dim() const { return target.dim + static_cast<int>(word.size()); }
    bool nondegenerate() const { return word.empty(); }
    auto operator<=>(const FormalSimplex&) const = default;
};

FormalSimplex nondeg(SimplexRef s);

// A finite simplicial set stored by its nondegenerate simplices.
// Every face d_i of a stored simplex is kept in Eilenberg-Zilber normal
// form as a (degeneracy word, nondegenerate target) pair.
class SimpSet {
public:
    SimpSet() = default;

    int dim() const { return static_cast<int>(counts_.size()) - 1; }
    int count(int n) const {
        return (n >= 0 && n <= dim()) ? counts_[n] : 0;
    }
    int total_cells() const;
    std::vector<int> f_vector() const { return counts_; }
    bool empty() const { return counts_.empty(); }

    // Euler characteristic = alternating sum of nondegenerate counts.
    long long euler() const;

    const std::string& name(SimplexRef s) const;
    std::optional<SimplexRef> find_by_name(int dim, const std::string& name) const;

    // Stored face d_i of a nondegenerate simplex, s.dim >= 1, 0 <= i <= s.dim.
    const FormalSimplex& face_entry(SimplexRef s, int i) const;

    // d_i on a formal simplex, pushing through the degeneracy word.
    FormalSimplex face(const FormalSimplex& x, int i) const;

    // s_j on a formal simplex.
    FormalSimplex degenerate(const FormalSimplex& x, int j) const;

    // Iterated face spanned by the vertex subset `keep` (sorted ascending).
    FormalSimplex subface(const FormalSimplex& x, const std::vector<int>& keep) const;

    // The i-th vertex of a formal simplex.
    SimplexRef vertex(const FormalSimplex& x, int i) const;

    // All nondegenerate iterated faces of s, including s itself.
    std::vector<SimplexRef> closure(SimplexRef s) const;

    // Checks the simplicial identities d_i d_j = d_{j-1} d_i (i < j) on
    // every stored simplex, plus structural sanity of all face entries.
    void validate() const;

    bool has(SimplexRef s) const {
        return s.dim >= 0 && s.dim <= dim() && s.idx >= 0 && s.idx < count(s.dim);
    }

private:
    friend class SimpSetBuilder;
    std::vector<int> counts_;
    // faces_[n][idx] has n+1 entries, n >= 1. faces_[0] unused.
    std::vector<std::vector<std::vector<FormalSimplex>>> faces_;
    std::vector<std::vector<std::string>> names_;
    std::vector<std::map<std::string, int>> by_name_;
};

class SimpSetBuilder {
public:
    SimplexRef add(int dim, std::string name);
    void set_face(SimplexRef s, int i, FormalSimplex f);
    // Marks s as having all faces assigned later in one go (vector sized dim+1).
    void set_faces(SimplexRef s, std::vector<FormalSimplex> fs);
    SimpSet build(bool run_validate = true);

private:
    SimpSet out_;
};

// A simplicial map, determined by images of nondegenerate simplices.
struct SimplicialMap {
    const SimpSet* dom = nullptr;
    const SimpSet* cod = nullptr;
    // image[n][idx] = formal simplex of cod of dimension n.
    std::vector<std::vector<FormalSimplex>> image;

    FormalSimplex apply(const FormalSimplex& x) const;
    // Face-commutation check over all stored simplices.
    void verify() const;
    bool is_isomorphism() const;
};

// --- constructions -------------------------------------------------------

SimpSet standard_simplex(int n);

// Vertex-name based simplicial complex: facets given as sorted vertex lists.
SimpSet simplicial_complex(int n_vertices, const std::vector<std::vector<int>>& facets);

// Boundary of the standard n-simplex.
SimpSet boundary_simplex(int n);

struct ProductResult {
    SimpSet space;
    // For each cell: the pair of formal component simplices.
    std::vector<std::vector<std::pair<FormalSimplex, FormalSimplex>>> parts;

    // Projections, built against caller-held factors.
    SimplicialMap projection_a(const SimpSet& a) const;
    SimplicialMap projection_b(const SimpSet& b) const;
};

ProductResult product(const SimpSet& a, const SimpSet& b);

// Cell of a join: either from a, from b, or a joined pair.
struct JoinCell {
    enum class Kind { A, B, Pair } kind;
    SimplexRef a;  // valid for A and Pair
    SimplexRef b;  // valid for B and Pair
};

struct JoinResult {
    SimpSet space;
    std::vector<std::vector<JoinCell>> cells;  // per dim, idx
    std::optional<SimplexRef> cell_of_a(const SimpSet& a, SimplexRef s) const;
};

JoinResult join(const SimpSet& a, const SimpSet& b);

struct ConeResult {
    SimpSet space;
    SimplexRef apex;
    JoinResult join_data;
};

// cone(X) = {*} * X, apex first (Definition-style cone).
ConeResult cone(const SimpSet& x);
// X * {*}, apex last; the shape of lower stars.
ConeResult cone_right(const SimpSet& x);

// Canonical isomorphism checks used by property tests.
bool isomorphic_brute(const SimpSet& a, const SimpSet& b, int max_backtrack = 2000000);

}  // namespace strata

#endif
