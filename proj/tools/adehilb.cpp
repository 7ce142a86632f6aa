#include <CLI11.hpp>
#include <json.hpp>

#include <adehilb/deform.hpp>
#include <adehilb/evidence.hpp>
#include <adehilb/ext_dim.hpp>
#include <adehilb/ideal_io.hpp>
#include <adehilb/mcm.hpp>
#include <adehilb/pfaffian_test.hpp>
#include <adehilb/staircase.hpp>
#include <adehilb/tangent.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace adehilb;

namespace {

int g_exit = 0;
bool g_pretty = false;

void emit(const json& j) { std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n"; }

SingularityType type_arg(const std::string& family, int n) {
    if (family.size() != 1) throw std::invalid_argument("type must be one of A, D, E");
    return make_type(family[0], n);
}

json report_json(const TangentReport& r) {
    json j;
    j["d"] = r.d;
    j["tangent_dim"] = r.tangent_dim;
    j["syzygy_free"] = r.syzygy_free;
    j["generators_used"] = r.generators_used;
    j["syzygy_generators"] = r.syzygy_generators;
    switch (r.verdict) {
    case TangentReport::Verdict::Smooth: j["verdict"] = "smooth"; break;
    case TangentReport::Verdict::Singular: j["verdict"] = "singular"; break;
    case TangentReport::Verdict::Withheld: j["verdict"] = "withheld"; break;
    }
    return j;
}

json point_json(const LatticePoint& p) { return json::array({p.first, p.second}); }

Matrix matrix_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    json j = json::parse(in);
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix file: expected an array");
    Matrix m(j.size(), j[0].size());
    for (std::size_t r = 0; r < j.size(); ++r)
        for (std::size_t c = 0; c < j[r].size(); ++c) {
            const auto& v = j[r][c];
            if (v.is_number_integer()) m(r, c) = Rational(v.get<long>());
            else m(r, c) = Rational(v.get<std::string>());
        }
    return m;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"adehilb: exact computations for Hilbert schemes of points on ADE surfaces"};
    app.require_subcommand(1);
    app.add_flag("--pretty", g_pretty, "indent JSON output");

    std::string family;
    int n = 0, vi = 0, vj = 0, va = 0, vb = 0, d = 0, bound = 0;
    bool trace = false, charts = false, discs = false;
    std::string summands, ideal_path, t_text = "1";
    std::vector<std::string> matrix_paths;

    auto* ext = app.add_subcommand("ext", "dim Ext^1(M_i, M_j) on an ADE singularity");
    ext->add_option("--type", family)->required();
    ext->add_option("--n", n)->required();
    ext->add_option("--i", vi)->required();
    ext->add_option("--j", vj)->required();
    ext->add_flag("--trace", trace, "include the tuple walk");
    ext->callback([&] {
        SingularityType t = type_arg(family, n);
        json j;
        j["dim"] = ext_dim(t, vi, vj);
        if (trace) {
            WalkTrace w = ext_dim_walk(t, vi, vj);
            j["trace"] = w.tuples;
            if (w.tally != j["dim"].get<long>()) j["walk_dim"] = w.tally;
        }
        emit(j);
    });

    auto* exto = app.add_subcommand("ext-oracle", "Ext^1 between A_n matrix factorizations");
    exto->add_option("--type", family)->required()->check(CLI::IsMember({"A"}));
    exto->add_option("--n", n)->required();
    exto->add_option("--a", va)->required();
    exto->add_option("--b", vb)->required();
    exto->add_option("--bound", bound, "degree ceiling (default 20 or ADEHILB_DEGREE_CEILING)");
    exto->callback([&] {
        Ext1Result r = ext1_oracle_detail(mf_an(n, va), mf_an(n, vb), bound);
        json j;
        j["dim"] = r.dim;
        j["stabilized_at"] = r.stabilized_at;
        emit(j);
    });

    auto* adm = app.add_subcommand("admissible", "determinant-class admissibility of a module sum");
    adm->add_option("--type", family)->required();
    adm->add_option("--n", n)->required();
    adm->add_option("--summands", summands, "\"free;a1,...,an\"")->required();
    adm->callback([&] {
        SingularityType t = type_arg(family, n);
        ModuleSum s = parse_module_sum(t, summands);
        json j;
        j["admissible"] = is_admissible(s);
        j["det_class"] = det_class(s);
        j["class_group"] = diagram(t).class_group.str();
        emit(j);
    });

    auto* gen = app.add_subcommand("generalize", "generalization chain to a free module");
    gen->add_option("--type", family)->required();
    gen->add_option("--n", n)->required();
    gen->add_option("--summands", summands)->required();
    gen->callback([&] {
        SingularityType t = type_arg(family, n);
        ModuleSum s = parse_module_sum(t, summands);
        GeneralizationChain c = generalization_chain(s);
        json j;
        j["start"] = s.str();
        j["chain"] = json::array();
        for (const auto& [state, rule] : c.steps) {
            json st;
            st["state"] = state.str();
            st["rule"] = rule;
            j["chain"].push_back(st);
        }
        emit(j);
    });

    auto* mfv = app.add_subcommand("mf-verify", "verify a matrix factorization identity");
    mfv->add_option("--type", family)->required()->check(CLI::IsMember({"A", "E"}));
    mfv->add_option("--n", n)->required();
    mfv->add_option("--i", vi)->required();
    mfv->callback([&] {
        MatrixFactorization m;
        if (family == "A") m = mf_an(n, vi);
        else if (n == 8 && vi == 8) m = mf_e8_m8();
        else if (n == 8 && vi == 4) m = mf_e8_m4();
        else throw std::invalid_argument("mf-verify: printed factorizations are E8 M8 and M4");
        json j;
        j["verified"] = m.verify();
        j["size"] = m.size();
        j["f"] = m.f.str();
        emit(j);
    });

    auto* stc = app.add_subcommand("staircases", "torus-fixed staircases of colength d");
    stc->add_option("--n", n)->required();
    stc->add_option("--d", d)->required();
    stc->add_flag("--charts", charts, "include chart presentations (n = 1)");
    stc->add_flag("--discriminants", discs, "include lattice discriminants");
    stc->callback([&] {
        json out = json::array();
        for (const Staircase& s : enumerate_staircases(n, d)) {
            json j;
            j["delta"] = json::array();
            for (const auto& p : s.delta) j["delta"].push_back(point_json(p));
            j["corners"] = json::array();
            for (const auto& p : corner_set(s)) j["corners"].push_back(point_json(p));
            j["border"] = json::array();
            for (const auto& p : border(s)) j["border"].push_back(point_json(p));
            j["ideal"] = json::array();
            for (const auto& g : staircase_ideal(s).generators) j["ideal"].push_back(g.str());
            if (charts) {
                ChartPresentation c = chart_relations(s);
                j["chart_variables"] = c.variables;
                j["chart_relations"] = json::array();
                for (const auto& r : c.relations) j["chart_relations"].push_back(r.str());
            }
            if (discs) j["discriminant"] = discriminant(n, s.delta).str();
            out.push_back(j);
        }
        emit(out);
    });

    auto* tan = app.add_subcommand("tangent", "Zariski tangent dimension and smoothness verdict");
    tan->add_option("--ideal", ideal_path)->required();
    tan->callback([&] {
        IdealPresentation i = ideal_from_file(ideal_path);
        emit(report_json(smoothness_verdict(i)));
    });

    auto* smf = app.add_subcommand("smooth-family", "perturbed resolution at a parameter value");
    smf->add_option("--ideal", ideal_path)->required();
    smf->add_option("--t", t_text, "rational parameter value (default 1)");
    smf->callback([&] {
        IdealPresentation i = ideal_from_file(ideal_path);
        PolyMatrix phi = free_syzygy_presentation(i);
        Rational t(t_text);
        IdealPresentation moved = perturb_resolution(phi, i.variables, i.relations, t);
        auto samples = verify_smoothing(phi, i.variables, i.relations, {t});
        json j;
        j["t"] = t.str();
        j["colength"] = samples[0].colength;
        j["origin_in_support"] = samples[0].origin_in_support;
        j["generators"] = json::array();
        for (const auto& g : moved.generators) j["generators"].push_back(g.str());
        emit(j);
    });

    auto* pf = app.add_subcommand("pfaffian", "the 12x12 smoothability Pfaffian");
    pf->add_option("--ideal", ideal_path);
    pf->add_option("--matrices", matrix_paths)->expected(3);
    pf->callback([&] {
        Rational value;
        if (!ideal_path.empty()) {
            value = smoothability_pfaffian(ideal_from_file(ideal_path));
        } else if (matrix_paths.size() == 3) {
            QuadricTriple q{matrix_from_file(matrix_paths[0]), matrix_from_file(matrix_paths[1]),
                            matrix_from_file(matrix_paths[2])};
            value = pfaffian(block_matrix(q));
        } else {
            throw std::invalid_argument("pfaffian: pass --ideal or --matrices a1 a2 a3");
        }
        json j;
        j["pfaffian"] = value.str();
        j["vanishes"] = value.is_zero();
        emit(j);
    });

    auto* ev = app.add_subcommand("evidence", "irreducibility evidence harness");
    ev->add_option("--type", family)->required();
    ev->add_option("--n", n)->required();
    ev->add_option("--d", d)->required();
    ev->callback([&] {
        SingularityType t = type_arg(family, n);
        EvidenceReport r = run_evidence(t, d);
        json j;
        j["type"] = t.str();
        j["d"] = r.d;
        j["entries"] = json::array();
        for (const auto& e : r.entries) {
            json je;
            if (!e.delta.empty()) {
                je["delta"] = json::array();
                for (const auto& p : e.delta) je["delta"].push_back(point_json(p));
            }
            je["decomposition"] = e.decomposition.str();
            je["syzygy_classes"] = e.syzygy_classes;
            je["admissible"] = e.admissible;
            je["decomposition_consistent"] = e.decomposition_consistent;
            je["chain_found"] = e.chain_found;
            if (e.chain_found) je["chain_length"] = e.chain_length;
            if (e.report) je["tangent"] = report_json(*e.report);
            j["entries"].push_back(je);
        }
        j["summary"] = {{"ideals", r.entries.size()},
                        {"admissible", r.admissible_count},
                        {"chains", r.chain_count},
                        {"smooth", r.smooth_count},
                        {"singular", r.singular_count}};
        emit(j);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // malformed invocation
    } catch (const ConsistencyFailure& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 4;
    } catch (const InfiniteColengthError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NotAdmissibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NoChainFoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const WrongHilbertFunctionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NoStabilizationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NonTerminatingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
