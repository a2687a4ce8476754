#include "kalai/io.hpp"

#include <fstream>

#include "kalai/errors.hpp"

namespace kalai {

Json to_json(const Polytope& p) {
    Json j;
    j["dim"] = p.dim();
    Json verts = Json::array();
    for (const auto& v : p.vertices()) {
        Json row = Json::array();
        for (const auto& e : v) row.push_back(to_string(e));
        verts.push_back(std::move(row));
    }
    j["vertices"] = std::move(verts);
    Json facets = Json::array();
    for (const auto& f : p.facets()) {
        Json fj;
        Json normal = Json::array();
        for (const auto& e : f.normal) normal.push_back(to_string(e));
        fj["normal"] = std::move(normal);
        fj["offset"] = to_string(f.offset);
        facets.push_back(std::move(fj));
    }
    j["facets"] = std::move(facets);
    return j;
}

Polytope polytope_from_json(const Json& j) {
    if (!j.contains("dim") || !j.contains("vertices"))
        throw ParseError("polytope JSON needs 'dim' and 'vertices'");
    try {
        int dim = j.at("dim").get<int>();
        std::vector<Vec> pts;
        for (const auto& row : j.at("vertices")) {
            Vec v;
            for (const auto& e : row) v.push_back(rat_from_string(e.get<std::string>()));
            pts.push_back(std::move(v));
        }
        return Polytope::hull(dim, std::move(pts));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed polytope JSON: ") + e.what());
    }
}

Polytope read_polytope(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("bad JSON in '" + path + "': " + e.what());
    }
    return polytope_from_json(j);
}

void write_polytope(const Polytope& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << to_json(p).dump(2) << "\n";
}

Json to_json(const GPGraph& g) {
    Json j;
    j["n"] = g.n;
    Json edges = Json::array();
    for (int i = 0; i < g.n; ++i)
        for (int k = i + 1; k < g.n; ++k)
            if (g.edge(i, k)) edges.push_back(Json::array({i + 1, k + 1}));
    j["edges"] = std::move(edges);
    return j;
}

Json to_json(const ClassificationReport& r) {
    Json j;
    j["centrally_symmetric"] = r.centrally_symmetric;
    j["unconditional"] = r.unconditional;
    j["locally_anti_blocking"] = r.locally_anti_blocking;
    j["proper"] = r.proper;
    if (r.witness) {
        Json w;
        w["kind"] = r.witness->kind;
        Json pt = Json::array();
        for (const auto& e : r.witness->point) pt.push_back(to_string(e));
        w["point"] = std::move(pt);
        if (r.witness->axis >= 0) w["axis"] = r.witness->axis + 1;
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json face_summary_json(const FaceLattice& l) {
    Json j;
    j["f_vector"] = l.f_vector();
    j["s"] = l.s();
    j["euler_ok"] = l.euler_ok();
    return j;
}

Json to_json(const SpecialCensus& census, const FaceLattice& l) {
    Json j;
    j["total"] = census.total;
    j["injective"] = census.injective;
    Json recs = Json::array();
    for (const auto& r : census.records) {
        Json rj;
        Json sigma = Json::array();
        for (int i = 0; i < r.sigma.dim(); ++i) sigma.push_back(static_cast<int>(r.sigma[i]));
        rj["sigma"] = std::move(sigma);
        Json pt = Json::array();
        for (const auto& c : r.point) pt.push_back(c.str(24));
        rj["point"] = std::move(pt);
        Json fv = Json::array();
        const Bits& verts = l.face(r.face).verts;
        for (int v = 0; v < static_cast<int>(verts.size()); ++v)
            if (verts[v]) fv.push_back(v);
        rj["face_vertices"] = std::move(fv);
        rj["face_dim"] = l.face(r.face).dim;
        rj["kkt_residual"] = r.kkt_residual;
        rj["active_slack"] = r.active_slack;
        recs.push_back(std::move(rj));
    }
    j["records"] = std::move(recs);
    return j;
}

Json to_json(const PartitionReport& r) {
    Json j;
    j["coord"] = r.coord + 1;
    j["face"] = r.face;
    j["s_plus"] = r.s_plus;
    j["s_zero"] = r.s_zero;
    j["s_minus"] = r.s_minus;
    j["bound"] = r.bound;
    j["complements_found"] = r.complements_found;
    j["all_in_s_plus"] = r.all_in_s_plus;
    j["sizes_cover"] = r.sizes_cover;
    return j;
}

Json to_json(const BoundReport& r) {
    Json j;
    j["s"] = r.s;
    j["bound"] = r.bound;
    j["ok"] = r.ok;
    Json coords = Json::array();
    for (const auto& c : r.coords) coords.push_back(to_json(c));
    j["coordinates"] = std::move(coords);
    return j;
}

}  // namespace kalai
