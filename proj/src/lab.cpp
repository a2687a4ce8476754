#include "kalai/lab.hpp"

namespace kalai {

bool is_centrally_symmetric(const Polytope& p, Witness* w) {
    for (const auto& v : p.vertices()) {
        Vec neg(v.size());
        for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        if (p.vertex_index(neg) < 0) {
            if (w) *w = Witness{"missing_negation", v, -1};
            return false;
        }
    }
    return true;
}

bool is_unconditional(const Polytope& p, Witness* w) {
    for (const auto& v : p.vertices())
        for (int i = 0; i < p.dim(); ++i) {
            Vec m = v;
            m[i] = -m[i];
            if (p.vertex_index(m) < 0) {
                if (w) *w = Witness{"missing_reflection", v, i};
                return false;
            }
        }
    return true;
}

bool is_locally_anti_blocking(const Polytope& p, Witness* w) {
    for (const auto& v : p.vertices())
        for (int i = 0; i < p.dim(); ++i) {
            if (sgn(v[i]) == 0) continue;
            Vec m = v;
            m[i] = 0;
            if (!p.contains(m)) {
                if (w) *w = Witness{"projection_escapes", v, i};
                return false;
            }
        }
    return true;
}

bool is_proper(const Polytope& p, Witness* w) {
    if (p.origin_interior()) return true;
    if (w) *w = Witness{"origin_on_boundary", Vec(p.dim(), Rat(0)), -1};
    return false;
}

ClassificationReport classify(const Polytope& p) {
    ClassificationReport r;
    Witness w;
    r.centrally_symmetric = is_centrally_symmetric(p, &w);
    if (!r.centrally_symmetric && !r.witness) r.witness = w;
    r.unconditional = is_unconditional(p, &w);
    if (!r.unconditional && !r.witness) r.witness = w;
    r.locally_anti_blocking = is_locally_anti_blocking(p, &w);
    if (!r.locally_anti_blocking && !r.witness) r.witness = w;
    r.proper = is_proper(p, &w);
    if (!r.proper && !r.witness) r.witness = w;
    return r;
}

}  // namespace kalai
