// kalai-lab: exact polytope workbench around centrally symmetric face
// counting. Subcommands operate on polytope JSON files (V-representation)
// and print JSON reports; `reproduce` checks the headline numbers and exits
// nonzero when a claim fails.

#include <CLI11.hpp>
#include <iostream>

#include "kalai/corpus.hpp"
#include "kalai/errors.hpp"
#include "kalai/io.hpp"

using namespace kalai;

namespace {

long pow3(int d) {
    long r = 1;
    for (int i = 0; i < d; ++i) r *= 3;
    return r;
}

int failures = 0;

void claim(bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << what << "\n";
    if (!ok) ++failures;
}

void reproduce_cube(int d) {
    Polytope c = cube(d);
    FaceLattice l = FaceLattice::enumerate(c);
    claim(l.s() == pow3(d),
          "s(C_" + std::to_string(d) + ") = " + std::to_string(l.s()) + ", expected " +
              std::to_string(pow3(d)));
    claim(l.euler_ok(), "Euler relation for C_" + std::to_string(d));
    SpecialCensus census = special_census(c, l, {default_precision(), Exec::Parallel});
    claim(census.total && census.injective,
          "special census of C_" + std::to_string(d) + " is total and injective");
}

void reproduce_fig2() {
    Polytope p = fig2();
    FaceLattice l = FaceLattice::enumerate(p);
    claim(l.f_vector() == std::vector<long>{8, 14, 8},
          "counterexample f-vector (8,14,8)");
    claim(l.s() == 31, "counterexample s = " + std::to_string(l.s()) + ", expected 31");
    FaceLattice lh = FaceLattice::enumerate(section(p, IndexSet::of({0, 1})));
    claim(lh.s() == 13, "hexagon section s = " + std::to_string(lh.s()) + ", expected 13");
    claim(l.s() < 3 * lh.s(), "31 < 3 * 13: the section exposes over a third of the faces");
}

void reproduce_pi3() {
    FaceLattice l = FaceLattice::enumerate(pi3_clique_polytope());
    claim(l.s() == 97, "clique polytope of the 4-path: s = " + std::to_string(l.s()) +
                           ", expected 97");
    claim(l.s() > pow3(4), "97 > 81: the 4-path graph gives no minimizer");
}

void reproduce_mahler(int d) {
    Rat m = mahler(cube(d));
    Rat expect(1);
    for (int i = 1; i <= d; ++i) expect = expect * 4 / i;
    claim(m == expect, "mahler(C_" + std::to_string(d) + ") = " + to_string(m) +
                           ", expected 4^d/d! = " + to_string(expect));
}

void reproduce_hanner(const std::string& expr) {
    Polytope p = build_hanner_dsl(expr);
    claim(is_locally_anti_blocking(p) && p.origin_interior(),
          "hanner expression builds a proper LAB polytope");
    FaceLattice l = FaceLattice::enumerate(p);
    claim(l.s() == pow3(p.dim()), "s = " + std::to_string(l.s()) + " = 3^" +
                                      std::to_string(p.dim()));
    auto c = classify_minimizer(p);
    if (std::holds_alternative<MinimizerInfo>(c)) {
        claim(true, "classified as Hanner: " + std::get<MinimizerInfo>(c).expr.str());
    } else {
        claim(false, "classify_minimizer returned NotMinimizer: " +
                         std::get<NotMinimizer>(c).reason);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for face counts of locally anti-blocking polytopes"};
    app.require_subcommand(1);

    std::string file, expr, out;
    int d = 3, n_points = 3;
    std::uint64_t seed = 1;
    long precision = static_cast<long>(default_precision());

    auto* check = app.add_subcommand("check", "classification report for a polytope file");
    check->add_option("file", file)->required();

    auto* faces = app.add_subcommand("faces", "f-vector and face count");
    faces->add_option("file", file)->required();

    auto* special = app.add_subcommand("special", "3^d special-point census");
    special->add_option("file", file)->required();
    special->add_option("--precision", precision, "solver mantissa bits");

    auto* gp = app.add_subcommand("gp", "coordinate-section graph G_P");
    gp->add_option("file", file)->required();

    auto* classify_cmd = app.add_subcommand("classify", "minimizer classification");
    classify_cmd->add_option("file", file)->required();

    auto* prove5 = app.add_subcommand("prove5", "complemented-lattice counting report");
    prove5->add_option("file", file)->required();

    auto* hanner = app.add_subcommand("hanner", "build a polytope from a hanner expression");
    hanner->add_option("expr", expr)->required();
    hanner->add_option("-o,--out", out)->required();

    auto* reproduce = app.add_subcommand("reproduce", "re-check a headline number");
    std::vector<std::string> target;
    reproduce->add_option("target", target, "cube D | fig2 | pi3 | mahler D | hanner EXPR")
        ->required()
        ->expected(1, 2);

    auto* random = app.add_subcommand("random", "seeded random proper LAB polytope");
    random->add_option("-d,--dim", d)->required()->check(CLI::Range(1, 5));
    random->add_option("--seed", seed)->required();
    random->add_option("-n,--points", n_points);
    random->add_option("-o,--out", out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) {
            std::cout << to_json(classify(read_polytope(file))).dump(2) << "\n";
        } else if (faces->parsed()) {
            std::cout << face_summary_json(FaceLattice::enumerate(read_polytope(file))).dump(2)
                      << "\n";
        } else if (special->parsed()) {
            Polytope p = read_polytope(file);
            FaceLattice l = FaceLattice::enumerate(p);
            SpecialOptions opts{static_cast<mpfr_prec_t>(precision), Exec::Parallel};
            std::cout << to_json(special_census(p, l, opts), l).dump(2) << "\n";
        } else if (gp->parsed()) {
            std::cout << to_json(build_gp(read_polytope(file))).dump(2) << "\n";
        } else if (classify_cmd->parsed()) {
            auto c = classify_minimizer(read_polytope(file));
            Json j;
            if (std::holds_alternative<MinimizerInfo>(c)) {
                const auto& info = std::get<MinimizerInfo>(c);
                j["minimizer"] = true;
                j["expr"] = info.expr.str();
                j["cotree"] = info.cotree.str();
                Json scales = Json::array();
                for (const auto& [a, b] : info.scales)
                    scales.push_back(Json::array({to_string(a), to_string(b)}));
                j["scales"] = std::move(scales);
            } else {
                const auto& nm = std::get<NotMinimizer>(c);
                j["minimizer"] = false;
                j["s"] = nm.s;
                j["expected"] = nm.expected;
                j["reason"] = nm.reason;
            }
            std::cout << j.dump(2) << "\n";
        } else if (prove5->parsed()) {
            BoundReport r = verify_unconditional_bound(read_polytope(file));
            std::cout << to_json(r).dump(2) << "\n";
            if (!r.ok) return 1;
        } else if (hanner->parsed()) {
            Polytope p = build_hanner_dsl(expr);
            write_polytope(p, out);
            Json j;
            j["dim"] = p.dim();
            j["vertices"] = p.vertex_count();
            j["facets"] = p.facet_count();
            j["written"] = out;
            std::cout << j.dump(2) << "\n";
        } else if (reproduce->parsed()) {
            const std::string& t = target[0];
            if (t == "cube") {
                if (target.size() != 2) throw ParseError("reproduce cube needs a dimension");
                int dd = std::stoi(target[1]);
                if (dd < 1 || dd > 6) throw ParseError("cube dimension must be 1..6");
                reproduce_cube(dd);
            } else if (t == "fig2") {
                reproduce_fig2();
            } else if (t == "pi3") {
                reproduce_pi3();
            } else if (t == "mahler") {
                if (target.size() != 2) throw ParseError("reproduce mahler needs a dimension");
                int dd = std::stoi(target[1]);
                if (dd < 1 || dd > 6) throw ParseError("mahler dimension must be 1..6");
                reproduce_mahler(dd);
            } else if (t == "hanner") {
                if (target.size() != 2) throw ParseError("reproduce hanner needs an expression");
                reproduce_hanner(target[1]);
            } else {
                throw ParseError("unknown reproduce target: '" + t + "'");
            }
            return failures == 0 ? 0 : 1;
        } else if (random->parsed()) {
            Polytope p = random_lab(d, seed, n_points);
            write_polytope(p, out);
            std::cout << to_json(classify(p)).dump(2) << "\n";
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
