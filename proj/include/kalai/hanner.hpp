#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>

#include "kalai/parallel.hpp"
#include "kalai/polytope.hpp"

namespace kalai {

// Graph on the coordinates [d]; edge {i,j} present iff the 2-D coordinate
// section P_{ij} is an axis-aligned quadrilateral.
struct GPGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;  // bit mask per vertex, no loops

    explicit GPGraph(int n_ = 0) : n(n_), adj(n_, 0) {}
    bool edge(int i, int j) const { return (adj[i] >> j) & 1; }
    void add_edge(int i, int j) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
    }
    GPGraph complement() const;
    GPGraph induced(IndexSet j) const;  // relabels to 0..|J|-1 in ascending order
    bool is_complete() const;
    bool is_clique(std::uint32_t mask) const;

    friend bool operator==(const GPGraph& a, const GPGraph& b) {
        return a.n == b.n && a.adj == b.adj;
    }
};

GPGraph disjoint_union(const GPGraph& a, const GPGraph& b);

enum class QuadClass { AxisAligned, Diamond };

// A proper LAB quadrilateral is either a product of segments (every vertex
// has both coordinates nonzero) or a free sum (every vertex on an axis).
QuadClass quad_classify(const Polytope& q);

// Pairwise section classification; requires every 2-D coordinate section to
// be a quadrilateral, else throws SectionNotQuadrilateral (the polytope is
// not a minimizer candidate).
GPGraph build_gp(const Polytope& p, Exec exec = Exec::Parallel);

// Rooted cotree: leaves carry coordinates, internal nodes alternate between
// UNION (disjoint union) and JOIN (complement-connected) with >= 2 children.
struct Cotree {
    enum Kind { Leaf, Union, Join } kind = Leaf;
    int label = -1;  // 0-based coordinate for leaves
    std::vector<Cotree> kids;

    int min_leaf() const;
    int leaf_count() const;
    // merge same-kind children into their parent, sort children by smallest
    // leaf label
    void canonicalize();
    std::string str() const;

    friend bool operator==(const Cotree& a, const Cotree& b) {
        return a.kind == b.kind && a.label == b.label && a.kids == b.kids;
    }
};

// Four vertices inducing a path, in path order (0-based).
struct P4Witness {
    std::array<int, 4> path;
};

// Complement-reducibility recursion; on failure returns an induced path on
// four vertices found by exhaustive search.
std::variant<Cotree, P4Witness> is_cograph(const GPGraph& g);

// conv{ sum_{i in J} +-e_i : J a clique of G }, the unconditional polytope
// reconstructing a minimizer from its graph.
Polytope clique_polytope(const GPGraph& g);

// Expression tree of a generalized Hanner polytope: segments [-a, b] with
// a, b > 0 combined by products and free sums.
struct HannerExpr {
    enum Kind { Seg, Product, FreeSum } kind = Seg;
    Rat a, b;  // segment bounds, used when kind == Seg
    std::vector<HannerExpr> kids;

    static HannerExpr seg(Rat a, Rat b);
    static HannerExpr prod(std::vector<HannerExpr> kids);
    static HannerExpr sum(std::vector<HannerExpr> kids);

    int dim() const;
    std::string str() const;
};

Polytope hanner_from_expr(const HannerExpr& e);

// Leaves labeled by in-order position; Product -> JOIN, FreeSum -> UNION.
Cotree cotree_of_expr(const HannerExpr& e);

// Unit segments [-1,1] at the leaves.
HannerExpr expr_of_cotree(const Cotree& t);

struct MinimizerInfo {
    HannerExpr expr;  // unit leaves
    Cotree cotree;
    std::vector<std::pair<Rat, Rat>> scales;  // per-coordinate (a_i, b_i) before normalization
};

struct NotMinimizer {
    long s = 0;
    long expected = 0;  // 3^d
    std::string reason;
};

// Classification pipeline: face count, G_P, cotree, reconstruction against the
// clique polytope of G_P. Requires P proper locally anti-blocking.
std::variant<MinimizerInfo, NotMinimizer> classify_minimizer(const Polytope& p);

// DSL for the CLI: seg(a,b), prod(e,...), sum(e,...), dual(e); dual expands
// via polar at build time.
Polytope build_hanner_dsl(const std::string& text);

}  // namespace kalai
