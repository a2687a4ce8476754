#include "kalai/hanner.hpp"

#include <algorithm>
#include <cctype>

#include "kalai/errors.hpp"
#include "kalai/face_lattice.hpp"
#include "kalai/lab.hpp"

namespace kalai {

GPGraph GPGraph::complement() const {
    GPGraph c(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!edge(i, j)) c.add_edge(i, j);
    return c;
}

GPGraph GPGraph::induced(IndexSet j) const {
    const auto idx = j.indices();
    GPGraph g(static_cast<int>(idx.size()));
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b)
            if (edge(idx[a], idx[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
}

bool GPGraph::is_complete() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!edge(i, j)) return false;
    return true;
}

bool GPGraph::is_clique(std::uint32_t mask) const {
    for (int i = 0; i < n; ++i) {
        if (!((mask >> i) & 1)) continue;
        std::uint32_t others = mask & ~(1u << i);
        if ((adj[i] & others) != others) return false;
    }
    return true;
}

GPGraph disjoint_union(const GPGraph& a, const GPGraph& b) {
    GPGraph g(a.n + b.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = i + 1; j < a.n; ++j)
            if (a.edge(i, j)) g.add_edge(i, j);
    for (int i = 0; i < b.n; ++i)
        for (int j = i + 1; j < b.n; ++j)
            if (b.edge(i, j)) g.add_edge(a.n + i, a.n + j);
    return g;
}

QuadClass quad_classify(const Polytope& q) {
    if (q.dim() != 2) throw DegenerateInput("quad_classify needs a 2-polytope");
    if (!q.origin_interior() || !is_locally_anti_blocking(q))
        throw NotLocallyAntiBlocking("quad_classify needs a proper LAB polytope");
    if (q.vertex_count() != 4) throw NotQuadrilateral("polytope has != 4 vertices");
    bool all_off_axes = true, all_on_axes = true;
    for (const auto& v : q.vertices()) {
        bool on_axis = sgn(v[0]) == 0 || sgn(v[1]) == 0;
        all_on_axes = all_on_axes && on_axis;
        all_off_axes = all_off_axes && !on_axis;
    }
    if (all_off_axes) return QuadClass::AxisAligned;
    if (all_on_axes) return QuadClass::Diamond;
    throw InvariantViolation("mixed quadrilateral cannot be locally anti-blocking");
}

GPGraph build_gp(const Polytope& p, Exec exec) {
    if (!p.origin_interior() || !is_locally_anti_blocking(p))
        throw NotLocallyAntiBlocking("G_P needs a proper LAB polytope");
    const int d = p.dim();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
    std::vector<char> is_edge(pairs.size(), 0);
    parallel_for(static_cast<int>(pairs.size()), exec, [&](int k) {
        auto [i, j] = pairs[k];
        Polytope sec = section(p, IndexSet::of({i, j}));
        try {
            is_edge[k] = quad_classify(sec) == QuadClass::AxisAligned;
        } catch (const NotQuadrilateral&) {
            throw SectionNotQuadrilateral(i + 1, j + 1);
        }
    });
    GPGraph g(d);
    for (size_t k = 0; k < pairs.size(); ++k)
        if (is_edge[k]) g.add_edge(pairs[k].first, pairs[k].second);
    return g;
}

int Cotree::min_leaf() const {
    if (kind == Leaf) return label;
    int m = kids[0].min_leaf();
    for (const auto& k : kids) m = std::min(m, k.min_leaf());
    return m;
}

int Cotree::leaf_count() const {
    if (kind == Leaf) return 1;
    int c = 0;
    for (const auto& k : kids) c += k.leaf_count();
    return c;
}

void Cotree::canonicalize() {
    if (kind == Leaf) return;
    for (auto& k : kids) k.canonicalize();
    std::vector<Cotree> merged;
    for (auto& k : kids) {
        if (k.kind == kind)
            for (auto& kk : k.kids) merged.push_back(std::move(kk));
        else
            merged.push_back(std::move(k));
    }
    kids = std::move(merged);
    if (kids.size() == 1) {
        *this = std::move(kids[0]);
        return;
    }
    std::sort(kids.begin(), kids.end(),
              [](const Cotree& a, const Cotree& b) { return a.min_leaf() < b.min_leaf(); });
}

std::string Cotree::str() const {
    if (kind == Leaf) return std::to_string(label + 1);
    std::string out = kind == Union ? "union(" : "join(";
    for (size_t i = 0; i < kids.size(); ++i) {
        if (i) out += ",";
        out += kids[i].str();
    }
    return out + ")";
}

namespace {

std::vector<std::vector<int>> components(const GPGraph& g, const std::vector<int>& verts) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(verts.size(), false);
    for (size_t s = 0; s < verts.size(); ++s) {
        if (seen[s]) continue;
        std::vector<size_t> stack{s};
        seen[s] = true;
        std::vector<int> comp;
        while (!stack.empty()) {
            size_t cur = stack.back();
            stack.pop_back();
            comp.push_back(verts[cur]);
            for (size_t t = 0; t < verts.size(); ++t)
                if (!seen[t] && g.edge(verts[cur], verts[t])) {
                    seen[t] = true;
                    stack.push_back(t);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool cotree_rec(const GPGraph& g, const std::vector<int>& verts, Cotree& out) {
    if (verts.size() == 1) {
        out = Cotree{Cotree::Leaf, verts[0], {}};
        return true;
    }
    auto comps = components(g, verts);
    if (comps.size() > 1) {
        out = Cotree{Cotree::Union, -1, {}};
        for (const auto& c : comps) {
            Cotree kid;
            if (!cotree_rec(g, c, kid)) return false;
            out.kids.push_back(std::move(kid));
        }
        return true;
    }
    auto co_comps = components(g.complement(), verts);
    if (co_comps.size() > 1) {
        out = Cotree{Cotree::Join, -1, {}};
        for (const auto& c : co_comps) {
            Cotree kid;
            if (!cotree_rec(g, c, kid)) return false;
            out.kids.push_back(std::move(kid));
        }
        return true;
    }
    return false;  // connected and co-connected: not a cograph
}

}  // namespace

std::variant<Cotree, P4Witness> is_cograph(const GPGraph& g) {
    std::vector<int> all(g.n);
    for (int i = 0; i < g.n; ++i) all[i] = i;
    Cotree t;
    if (cotree_rec(g, all, t)) {
        t.canonicalize();
        return t;
    }
    // A non-cograph contains an induced path on four vertices.
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c)
                for (int d = 0; d < g.n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (g.edge(a, b) && g.edge(b, c) && g.edge(c, d) && !g.edge(a, c) &&
                        !g.edge(a, d) && !g.edge(b, d))
                        return P4Witness{{a, b, c, d}};
                }
    throw InvariantViolation("cotree recursion failed on a P4-free graph");
}

Polytope clique_polytope(const GPGraph& g) {
    std::vector<Vec> pts;
    pts.push_back(Vec(g.n, Rat(0)));  // empty clique: the origin, never a vertex
    for (std::uint32_t mask = 1; mask < (1u << g.n); ++mask) {
        if (!g.is_clique(mask)) continue;
        std::vector<int> idx;
        for (int i = 0; i < g.n; ++i)
            if ((mask >> i) & 1) idx.push_back(i);
        for (std::uint32_t signs = 0; signs < (1u << idx.size()); ++signs) {
            Vec v(g.n, Rat(0));
            for (size_t k = 0; k < idx.size(); ++k)
                v[idx[k]] = Rat(((signs >> k) & 1) ? -1 : 1);
            pts.push_back(std::move(v));
        }
    }
    return Polytope::hull(g.n, std::move(pts));
}

HannerExpr HannerExpr::seg(Rat a, Rat b) {
    if (sgn(a) <= 0 || sgn(b) <= 0)
        throw DegenerateInput("segment [-a,b] needs a, b > 0");
    HannerExpr e;
    e.kind = Seg;
    e.a = std::move(a);
    e.b = std::move(b);
    return e;
}

HannerExpr HannerExpr::prod(std::vector<HannerExpr> kids) {
    if (kids.size() < 2) throw DegenerateInput("prod needs >= 2 factors");
    HannerExpr e;
    e.kind = Product;
    e.kids = std::move(kids);
    return e;
}

HannerExpr HannerExpr::sum(std::vector<HannerExpr> kids) {
    if (kids.size() < 2) throw DegenerateInput("sum needs >= 2 summands");
    HannerExpr e;
    e.kind = FreeSum;
    e.kids = std::move(kids);
    return e;
}

int HannerExpr::dim() const {
    if (kind == Seg) return 1;
    int d = 0;
    for (const auto& k : kids) d += k.dim();
    return d;
}

std::string HannerExpr::str() const {
    if (kind == Seg) return "seg(" + to_string(a) + "," + to_string(b) + ")";
    std::string out = kind == Product ? "prod(" : "sum(";
    for (size_t i = 0; i < kids.size(); ++i) {
        if (i) out += ",";
        out += kids[i].str();
    }
    return out + ")";
}

Polytope hanner_from_expr(const HannerExpr& e) {
    if (e.kind == HannerExpr::Seg)
        return Polytope::hull(1, {Vec{-e.a}, Vec{e.b}});
    Polytope acc = hanner_from_expr(e.kids[0]);
    for (size_t i = 1; i < e.kids.size(); ++i) {
        Polytope next = hanner_from_expr(e.kids[i]);
        acc = e.kind == HannerExpr::Product ? product(acc, next) : free_sum(acc, next);
    }
    return acc;
}

namespace {

Cotree cotree_of_expr_rec(const HannerExpr& e, int& next_label) {
    if (e.kind == HannerExpr::Seg) return Cotree{Cotree::Leaf, next_label++, {}};
    Cotree t;
    t.kind = e.kind == HannerExpr::Product ? Cotree::Join : Cotree::Union;
    for (const auto& k : e.kids) t.kids.push_back(cotree_of_expr_rec(k, next_label));
    return t;
}

}  // namespace

Cotree cotree_of_expr(const HannerExpr& e) {
    int next = 0;
    Cotree t = cotree_of_expr_rec(e, next);
    t.canonicalize();
    return t;
}

HannerExpr expr_of_cotree(const Cotree& t) {
    if (t.kind == Cotree::Leaf) return HannerExpr::seg(rat(1), rat(1));
    std::vector<HannerExpr> kids;
    for (const auto& k : t.kids) kids.push_back(expr_of_cotree(k));
    return t.kind == Cotree::Join ? HannerExpr::prod(std::move(kids))
                                  : HannerExpr::sum(std::move(kids));
}

std::variant<MinimizerInfo, NotMinimizer> classify_minimizer(const Polytope& p) {
    if (!p.origin_interior()) throw NotProper("classify_minimizer needs a proper polytope");
    if (!is_locally_anti_blocking(p))
        throw NotLocallyAntiBlocking("classify_minimizer needs a LAB polytope");
    long expected = 1;
    for (int i = 0; i < p.dim(); ++i) expected *= 3;
    FaceLattice l = FaceLattice::enumerate(p);
    if (l.s() != expected)
        return NotMinimizer{l.s(), expected, "face count differs from 3^d"};

    GPGraph g = build_gp(p);  // quadrilateral sections guaranteed at s = 3^d
    auto rec = is_cograph(g);
    if (std::holds_alternative<P4Witness>(rec))
        throw InvariantViolation("minimizer graph contains an induced 4-path");
    Cotree t = std::get<Cotree>(std::move(rec));

    MinimizerInfo info;
    Polytope normalized = normalize(p, &info.scales);
    if (!(normalized == clique_polytope(g)))
        throw ReconstructionMismatch("normalized minimizer differs from its clique polytope");
    info.expr = expr_of_cotree(t);
    info.cotree = std::move(t);
    return info;
}

namespace {

struct DslParser {
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' in hanner expression");
    }
    std::string word() {
        skip();
        size_t start = pos;
        while (pos < s.size() && isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    }
    Rat number() {
        skip();
        size_t start = pos;
        while (pos < s.size() && (isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/' ||
                                  s[pos] == '-'))
            ++pos;
        return rat_from_string(s.substr(start, pos - start));
    }

    Polytope expr() {
        std::string w = word();
        expect('(');
        if (w == "seg") {
            Rat a = number();
            expect(',');
            Rat b = number();
            expect(')');
            return hanner_from_expr(HannerExpr::seg(std::move(a), std::move(b)));
        }
        if (w == "dual") {
            Polytope inner = expr();
            expect(')');
            return polar(inner);
        }
        if (w == "prod" || w == "sum") {
            std::vector<Polytope> parts;
            parts.push_back(expr());
            while (eat(',')) parts.push_back(expr());
            expect(')');
            Polytope acc = parts[0];
            for (size_t i = 1; i < parts.size(); ++i)
                acc = w == "prod" ? product(acc, parts[i]) : free_sum(acc, parts[i]);
            return acc;
        }
        throw ParseError("unknown hanner operator: '" + w + "'");
    }
};

}  // namespace

Polytope build_hanner_dsl(const std::string& text) {
    DslParser parser{text};
    Polytope p = parser.expr();
    parser.skip();
    if (parser.pos != text.size()) throw ParseError("trailing input in hanner expression");
    return p;
}

}  // namespace kalai
