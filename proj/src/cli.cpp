#include "nckit/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>

#include "nckit/assignments.hpp"
#include "nckit/cliques.hpp"
#include "nckit/crossed.hpp"
#include "nckit/homology.hpp"
#include "nckit/json_io.hpp"
#include "nckit/numerics.hpp"
#include "nckit/report.hpp"
#include "nckit/sigma_f.hpp"

namespace nckit {

namespace {

struct Ctx {
    ToleranceConfig tol;
    std::vector<std::string> tol_overrides;
    long seed = -1;
    bool no_timestamp = false;
    std::string output;

    unsigned long effective_seed() const {
        if (seed >= 0) return static_cast<unsigned long>(seed);
        if (const char* env = std::getenv("NCKIT_SEED")) return std::stoul(env);
        return 0;
    }

    void apply_tol_overrides() {
        for (const auto& kv : tol_overrides) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw std::runtime_error("--tol expects key=value");
            std::string key = kv.substr(0, eq);
            double val = std::stod(kv.substr(eq + 1));
            if (key == "eps_herm") tol.eps_herm = val;
            else if (key == "eps_eig") tol.eps_eig = val;
            else if (key == "eps_rel") tol.eps_rel = val;
            else if (key == "eps_idem") tol.eps_idem = val;
            else if (key == "eps_supp") tol.eps_supp = val;
            else throw std::runtime_error("unknown tolerance key: " + key);
        }
    }
};

int emit(Report& rep, const Ctx& c, std::ostream& out, int fail_code = 1) {
    rep.set_timestamp_enabled(!c.no_timestamp);
    std::string s = rep.to_json().dump(2);
    if (!c.output.empty()) {
        std::ofstream f(c.output);
        if (!f) throw std::runtime_error("cannot write " + c.output);
        f << s << "\n";
    } else {
        out << s << "\n";
    }
    return rep.pass() ? 0 : fail_code;
}

GroupOracle oracle_from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon);
        std::string arg = spec.substr(colon + 1);
        if (kind == "zn") return GroupOracle::zn(std::stoi(arg));
        if (kind == "free") return GroupOracle::free_group(std::stoi(arg));
        if (kind == "cyclic") return GroupOracle::finite(FiniteGroup::cyclic(std::stoi(arg)));
        if (kind == "sym") return GroupOracle::finite(FiniteGroup::symmetric(std::stoi(arg)));
        throw std::runtime_error("unknown group spec: " + spec);
    }
    return GroupOracle::finite(FiniteGroup::from_json(load_json_file(spec)));
}

FiniteGroup finite_group_from_spec(const std::string& spec) {
    GroupOracle g = oracle_from_spec(spec);
    if (g.kind() != GroupOracle::Kind::Finite)
        throw std::runtime_error("this subcommand needs a finite group");
    return g.table();
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

GammaSubset subset_from_list(const GroupOracle& g, const std::string& list) {
    std::vector<GroupElem> elems;
    for (const auto& tok : split_commas(list))
        if (!tok.empty()) elems.push_back(g.parse(tok));
    return GammaSubset(g, std::move(elems));
}

WindowSpec window_from_spec(const GroupOracle& g, const std::string& spec) {
    WindowSpec w;
    if (spec.empty()) {
        if (g.kind() != GroupOracle::Kind::Finite)
            throw std::runtime_error("--window is required for infinite groups");
        w.explicit_elems = g.all_elements();
        return w;
    }
    if (spec.rfind("ball:", 0) == 0) {
        w.radius = std::stoi(spec.substr(5));
        return w;
    }
    std::string list = spec.rfind("list:", 0) == 0 ? spec.substr(5) : spec;
    for (const auto& tok : split_commas(list))
        if (!tok.empty()) w.explicit_elems.push_back(g.parse(tok));
    return w;
}

Json complex_info(const SimplicialComplex& c) {
    Json j;
    j["num_vertices"] = c.vertices().size();
    j["num_maximal"] = c.maximal_simplexes().size();
    j["dimension"] = c.dimension();
    j["is_full"] = c.is_full();
    Json counts = Json::array();
    for (int k = 0; k <= c.dimension(); ++k) counts.push_back(c.simplexes_of_dim(k).size());
    j["simplex_counts"] = counts;
    return j;
}

SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices) {
    long nv = 3 + static_cast<long>(rng() % (max_vertices - 2));
    int nf = 2 + static_cast<int>(rng() % 7);
    std::vector<Simplex> facets;
    for (int i = 0; i < nf; ++i) {
        size_t sz = 1 + rng() % std::min<long>(4, nv);
        std::set<VertexId> s;
        while (s.size() < sz) s.insert(VertexId(static_cast<long>(rng() % nv)));
        facets.emplace_back(std::vector<VertexId>(s.begin(), s.end()));
    }
    return SimplicialComplex::from_maximal(std::move(facets));
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Verified: return "Verified";
        case Verdict::Undetermined: return "Undetermined";
        case Verdict::Failed: return "Failed";
    }
    return "?";
}

void add_assignment_check(Report& rep, const std::string& name, const GeneratorAssignment& a,
                          bool& undetermined) {
    VerifyResult r = verify_assignment(a);
    if (r.verdict == Verdict::Undetermined) undetermined = true;
    rep.add_verdict(name, verdict_name(r.verdict), r.verdict == Verdict::Verified,
                    r.relation.empty() ? r.note : r.relation);
}

// ---- suite pieces ----------------------------------------------------------

void suite_spheres(Report& rep) {
    for (int n = 0; n <= 4; ++n) {
        SimplicialComplex s = sphere_complex(n);
        std::string tag = "sphere n=" + std::to_string(n) + ": ";
        rep.add_verdict(tag + "vertex count", std::to_string(s.vertices().size()),
                        static_cast<int>(s.vertices().size()) == 2 * n + 2);
        rep.add_verdict(tag + "facet count", std::to_string(s.maximal_simplexes().size()),
                        static_cast<long>(s.maximal_simplexes().size()) == (1L << (n + 1)));
        HomologyResult h = homology(s);
        bool ok = true;
        for (int k = 0; k <= n; ++k) {
            long expect = (k == 0) ? (n == 0 ? 2 : 1) : (k == n ? 1 : 0);
            ok = ok && h.betti[k] == expect && h.torsion[k].empty();
        }
        rep.add_verdict(tag + "homology", ok ? "as expected" : "unexpected", ok);
        KTheoryRanks kr = rational_k_ranks(s);
        long e0 = (n % 2 == 0) ? 2 : 1;
        long e1 = (n % 2 == 0) ? 0 : 1;
        rep.add_verdict(tag + "rational K ranks",
                        "(" + std::to_string(kr.rank_K0) + "," + std::to_string(kr.rank_K1) + ")",
                        kr.rank_K0 == e0 && kr.rank_K1 == e1);
    }
}

void suite_flag(Report& rep, unsigned long seed) {
    std::mt19937_64 rng(seed ^ 0xf1a6f1a6ULL);
    bool all_bary = true, all_idem = true;
    for (int i = 0; i < 20; ++i) {
        SimplicialComplex c = random_complex(rng, 12);
        all_bary = all_bary && c.barycentric_subdivision().is_full();
        SimplicialComplex f = c.flag_saturation();
        all_idem = all_idem && f.flag_saturation() == f;
    }
    rep.add_verdict("barycentric subdivisions are full (20 random complexes)",
                    all_bary ? "yes" : "no", all_bary);
    rep.add_verdict("flag saturation idempotent (20 random complexes)", all_idem ? "yes" : "no",
                    all_idem);
    SimplicialComplex hollow = SimplicialComplex::from_maximal(
        {Simplex({"a", "b"}), Simplex({"b", "c"}), Simplex({"a", "c"})});
    SimplicialComplex full = SimplicialComplex::from_maximal({Simplex({"a", "b", "c"})});
    rep.add_verdict("flag saturation of hollow triangle", "full 2-simplex",
                    hollow.flag_saturation() == full);
}

void suite_monomials(Report& rep, unsigned long seed) {
    std::mt19937_64 rng(seed ^ 0x30303030ULL);
    long checked = 0;
    bool all_ok = true;

    for (int i = 0; i < 40 && all_ok; ++i) {
        SimplicialComplex c = random_complex(rng, 8);
        auto full = presentation_of(c, Variant::Full);
        auto flag = presentation_of(c, Variant::Flag);
        int ng = full->num_generators();
        for (int w = 0; w < 15; ++w) {
            Monomial word;
            size_t len = 1 + rng() % 5;
            for (size_t l = 0; l < len; ++l) word.push_back(static_cast<int>(rng() % ng));

            // full variant against the letter-set test
            std::set<VertexId> letters;
            for (int g : word) letters.insert(full->gen_label(g));
            bool set_ok = c.contains(Simplex(std::vector<VertexId>(letters.begin(), letters.end())));
            VanishVerdict vf = monomial_vanishes(*full, word);
            if (vf.zero != !set_ok) all_ok = false;
            if (!vf.zero && !vf.certificate) all_ok = false;

            // flag variant against the walk test over the saturated 1-skeleton
            bool walk = true;
            const SimplicialComplex& eff = flag->effective_complex();
            for (size_t l = 0; l + 1 < word.size(); ++l) {
                VertexId a = flag->gen_label(word[l]), b = flag->gen_label(word[l + 1]);
                if (!(a == b) && !eff.has_edge(a, b)) walk = false;
            }
            if (monomial_vanishes(*flag, word).zero != !walk) all_ok = false;
            ++checked;
        }
    }

    // window of the integer-group complex: rewriting vs walk vs F^n
    GroupOracle z = GroupOracle::zn(1);
    GammaSubset f(z, {{-1}, {0}, {1}});
    for (int i = 0; i < 450 && all_ok; ++i) {
        std::vector<GroupElem> word;
        size_t len = 2 + rng() % 4;
        for (size_t l = 0; l < len; ++l)
            word.push_back({static_cast<long>(rng() % 13) - 6});
        WalkCheck wc = word_walk_check(z, f, word);
        if (!wc.consistent) all_ok = false;
        ++checked;
    }
    GammaSubset f2 = powers(z, f, 2);
    for (int i = 0; i < 450 && all_ok; ++i) {
        std::vector<GroupElem> word;
        size_t len = 2 + rng() % 4;
        for (size_t l = 0; l < len; ++l)
            word.push_back({static_cast<long>(rng() % 17) - 8});
        WalkCheck wc = word_walk_check(z, f2, word);
        if (!wc.consistent) all_ok = false;
        ++checked;
    }
    rep.add_verdict("monomial calculus vs oracles (" + std::to_string(checked) + " words)",
                    all_ok ? "agree" : "disagree", all_ok);
}

void suite_homs(Report& rep, bool& undetermined) {
    SimplicialComplex full2 = SimplicialComplex::from_maximal({Simplex({"a", "b", "c"})});
    SimplicialComplex hollow = SimplicialComplex::from_maximal(
        {Simplex({"a", "b"}), Simplex({"b", "c"}), Simplex({"a", "c"})});
    SimplicialComplex path =
        SimplicialComplex::from_maximal({Simplex({"a", "b"}), Simplex({"b", "c"})});
    SimplicialComplex pt = SimplicialComplex::from_maximal({Simplex({"pt"})});
    SimplicialComplex edge = SimplicialComplex::from_maximal({Simplex({"x", "y"})});
    SimplicialComplex s1 = sphere_complex(1), s2 = sphere_complex(2);

    add_assignment_check(
        rep, "evaluation: full 2-simplex -> vertex",
        evaluation_hom(full2, SimplicialComplex::from_maximal({Simplex({"a"})})), undetermined);
    add_assignment_check(
        rep, "evaluation: full 2-simplex -> edge",
        evaluation_hom(full2, SimplicialComplex::from_maximal({Simplex({"a", "b"})})),
        undetermined);
    add_assignment_check(rep, "evaluation: sphere(2) -> 1-skeleton",
                         evaluation_hom(s2, s2.skeleton(1)), undetermined);
    add_assignment_check(rep, "evaluation: identity on hollow triangle",
                         evaluation_hom(hollow, hollow), undetermined);

    auto collapse = [&](const SimplicialComplex& src) {
        SimplicialMapDesc m;
        m.source = src;
        m.target = pt;
        for (const auto& v : src.vertices()) m.vertex_map[v] = VertexId("pt");
        return m;
    };
    auto identity_map = [&](const SimplicialComplex& c) {
        SimplicialMapDesc m;
        m.source = m.target = c;
        for (const auto& v : c.vertices()) m.vertex_map[v] = v;
        return m;
    };
    std::vector<std::pair<std::string, SimplicialMapDesc>> maps;
    maps.emplace_back("identity on full 2-simplex", identity_map(full2));
    maps.emplace_back("identity on hollow triangle", identity_map(hollow));
    maps.emplace_back("identity on path", identity_map(path));
    maps.emplace_back("identity on sphere(1)", identity_map(s1));
    maps.emplace_back("collapse hollow triangle", collapse(hollow));
    maps.emplace_back("collapse full 2-simplex", collapse(full2));
    maps.emplace_back("collapse sphere(1)", collapse(s1));
    {
        SimplicialMapDesc m;
        m.source = s1;
        m.target = edge;
        for (int i = 0; i <= 1; ++i) {
            m.vertex_map[sphere_vertex(i, true)] = VertexId(i == 0 ? "x" : "y");
            m.vertex_map[sphere_vertex(i, false)] = VertexId(i == 0 ? "x" : "y");
        }
        maps.emplace_back("fold sphere(1) onto edge", m);
    }
    {
        SimplicialMapDesc m;
        m.source = s2;
        m.target = full2;
        const char* names[] = {"a", "b", "c"};
        for (int i = 0; i <= 2; ++i) {
            m.vertex_map[sphere_vertex(i, true)] = VertexId(names[i]);
            m.vertex_map[sphere_vertex(i, false)] = VertexId(names[i]);
        }
        maps.emplace_back("fold sphere(2) onto full 2-simplex", m);
    }
    {
        SimplicialMapDesc m;
        m.source = path;
        m.target = edge;
        m.vertex_map[VertexId("a")] = VertexId("x");
        m.vertex_map[VertexId("b")] = VertexId("y");
        m.vertex_map[VertexId("c")] = VertexId("x");
        maps.emplace_back("zigzag path onto edge", m);
    }
    {
        SimplicialMapDesc m;
        m.source = SimplicialComplex::from_maximal({Simplex({"a", "b"})});
        m.target = full2;
        m.vertex_map[VertexId("a")] = VertexId("a");
        m.vertex_map[VertexId("b")] = VertexId("b");
        maps.emplace_back("edge inclusion into full 2-simplex", m);
    }
    for (const auto& [name, m] : maps) {
        auto check = verify_simplicial_map(m);
        rep.add_verdict("simplicial map: " + name, check.ok ? "simplicial" : check.violation,
                        check.ok);
        if (check.ok)
            add_assignment_check(rep, "induced hom: " + name, induced_hom(m), undetermined);
    }

    SimplicialComplex two_tri = SimplicialComplex::from_maximal(
        {Simplex({"a", "b", "c"}), Simplex({"b", "c", "d"})});
    add_assignment_check(rep, "simplex cp-lift into two-triangle complex",
                         simplex_cp_lift_hom(two_tri, Simplex({"a", "b", "c"})), undetermined);
    add_assignment_check(rep, "contraction homotopy on 2-simplex",
                         contraction_homotopy(Simplex({"a", "b", "c"})), undetermined);
    add_assignment_check(rep, "contraction homotopy on 3-simplex",
                         contraction_homotopy(Simplex({"a", "b", "c", "d"})), undetermined);
    add_assignment_check(rep, "face shrink family on 2-simplex",
                         face_shrink_family(Simplex({"a", "b", "c"}), VertexId("c")),
                         undetermined);

    for (int n = 1; n <= 3; ++n) {
        std::string tag = "sphere(" + std::to_string(n) + "): ";
        add_assignment_check(rep, tag + "kappa_0", kappa(n, 0), undetermined);
        add_assignment_check(rep, tag + "kappa_1", kappa(n, 1), undetermined);
        add_assignment_check(rep, tag + "alpha_1", alpha1_hom(n), undetermined);
        add_assignment_check(rep, tag + "beta_0", beta0_hom(n), undetermined);
        add_assignment_check(rep, tag + "beta_1", beta1_hom(n), undetermined);
        SphereHomotopies h = sphere_homotopies(n);
        add_assignment_check(rep, tag + "homotopy alpha_1 ~ kappa_0", h.alpha1_to_kappa0,
                             undetermined);
        add_assignment_check(rep, tag + "homotopy beta_0 ~ kappa_0", h.beta0_to_kappa0,
                             undetermined);
        add_assignment_check(rep, tag + "homotopy beta_1 ~ kappa_1", h.beta1_to_kappa1,
                             undetermined);
        // endpoint pinning: t=1 gives the named map, t=0 the point evaluations
        bool ends = h.alpha1_to_kappa0.at(1).same_images(alpha1_hom(n)) &&
                    h.alpha1_to_kappa0.at(0).same_images(kappa(n, 0)) &&
                    h.beta0_to_kappa0.at(1).same_images(beta0_hom(n)) &&
                    h.beta0_to_kappa0.at(0).same_images(kappa(n, 0)) &&
                    h.beta1_to_kappa1.at(1).same_images(beta1_hom(n)) &&
                    h.beta1_to_kappa1.at(0).same_images(kappa(n, 1));
        rep.add_verdict(tag + "homotopy endpoints", ends ? "exact" : "mismatch", ends);
    }
}

void suite_clifford(Report& rep, const ToleranceConfig& tol) {
    for (int n = 1; n <= 5; ++n) {
        std::string tag = "clifford n=" + std::to_string(n) + ": ";
        MatrixRep r = clifford_sphere_rep(n);
        ToleranceConfig tight = tol;
        tight.eps_rel = 1e-10;
        ResidualReport rr = verify_matrix_rep(r, tight);
        rep.add_check(tag + "flag relations (max residual)", rr.max_residual(), 1e-10);

        auto p = r.presentation;
        double exact = 0, sum_res = 0, round = 0;
        Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(r.dim, r.dim);
        auto gammas = clifford_gammas(n);
        for (int i = 0; i <= n; ++i) {
            const auto& hp = r.images[p->gen_index(sphere_vertex(i, true))];
            const auto& hm = r.images[p->gen_index(sphere_vertex(i, false))];
            exact = std::max(exact, (hp * hm).cwiseAbs().maxCoeff());
            total += hp + hm;
            Eigen::MatrixXcd xi = gammas[i] / std::sqrt(static_cast<double>(n + 1));
            round = std::max(round, (xi - (hermitian_sqrt(hp) - hermitian_sqrt(hm))).operatorNorm());
        }
        sum_res = (total - Eigen::MatrixXcd::Identity(r.dim, r.dim)).operatorNorm();
        rep.add_check(tag + "h_plus h_minus exactly zero", exact, 0.0);
        rep.add_check(tag + "sum of generators is 1", sum_res, 1e-12);
        rep.add_check(tag + "round trip through spectral parts", round, 1e-10);
    }
}

void suite_rotation(Report& rep, const ToleranceConfig& tol) {
    for (int n = 1; n <= 3; ++n) {
        ToleranceConfig t = tol;
        t.eps_rel = 1e-9;
        ResidualReport rr = rotation_homotopy_check(n, 11, t, 1e-12);
        double relmax = 0, endmax = 0;
        for (const auto& e : rr.entries)
            (e.name.rfind("endpoint", 0) == 0 ? endmax : relmax) =
                std::max(e.name.rfind("endpoint", 0) == 0 ? endmax : relmax, e.residual);
        rep.add_check("rotation homotopy n=" + std::to_string(n) + ": relations", relmax, 1e-9);
        rep.add_check("rotation homotopy n=" + std::to_string(n) + ": endpoints", endmax, 1e-12);
    }
}

void suite_crossed(Report& rep) {
    std::vector<std::pair<std::string, FiniteGroup>> groups = {
        {"cyclic2", FiniteGroup::cyclic(2)},
        {"cyclic3", FiniteGroup::cyclic(3)},
        {"cyclic4", FiniteGroup::cyclic(4)},
        {"sym3", FiniteGroup::symmetric(3)},
    };
    for (const auto& [gname, g] : groups)
        for (int d : {1, 2, 4})
            for (unsigned long seed : {0UL, 1UL, 2UL}) {
                std::string tag =
                    gname + " d=" + std::to_string(d) + " seed=" + std::to_string(seed) + ": ";
                GradedProjectionFamily fam = graded_projection_from_group_algebra(g, d, seed);
                ToleranceConfig famTol;
                famTol.eps_rel = 1e-12;
                famTol.eps_eig = 1e-12;
                ResidualReport fr = verify_family(fam, famTol);
                rep.add_check(tag + "(P1)/(P2)", fr.max_residual(), 1e-12);

                ToleranceConfig phTol;
                phTol.eps_idem = 1e-10;
                FFamilyResult ff = build_f_family(fam, phTol);
                double phat = 0, fmax = 0;
                for (const auto& e : ff.report.entries) {
                    if (e.name.rfind("p_hat", 0) == 0) phat = std::max(phat, e.residual);
                    else fmax = std::max(fmax, e.residual);
                }
                rep.add_check(tag + "p_hat projection", phat, 1e-10);
                rep.add_check(tag + "f-family identities", fmax, 1e-9);

                auto supp = fam.support();
                double comp = 0;
                std::vector<int> word;
                std::function<void(int)> rec = [&](int len) {
                    if (!word.empty())
                        comp = std::max(comp, compression_identity_check(fam, ff, word));
                    if (len == 3) return;
                    for (int s : supp) {
                        word.push_back(s);
                        rec(len + 1);
                        word.pop_back();
                    }
                };
                rec(0);
                rep.add_check(tag + "compression identity (words <= 3)", comp, 1e-8);
            }
}

void suite_cutoff(Report& rep) {
    for (int n : {2, 3}) {
        FiniteGroup g = FiniteGroup::cyclic(n);
        GroupOracle oracle = GroupOracle::finite(g);
        GammaSubset f(oracle, oracle.all_elements());
        std::vector<std::vector<double>> pts;
        for (int k = 0; k < 3; ++k) {
            std::vector<double> p(n);
            double rest = 1.0;
            for (int i = 0; i + 1 < n; ++i) {
                p[i] = (0.15 + 0.1 * k) / (i + 1);
                rest -= p[i];
            }
            p[n - 1] = rest;
            pts.push_back(std::move(p));
        }
        ToleranceConfig tol;
        tol.eps_idem = 1e-10;
        SampledCrossedRep r = cutoff_projection(g, f, pts, tol);
        double sum = 0, idem = 0;
        for (const auto& e : r.report.entries) {
            if (e.name.rfind("e ", 0) == 0) idem = std::max(idem, e.residual);
            else sum = std::max(sum, e.residual);
        }
        std::string tag = "cutoff cyclic" + std::to_string(n) + ": ";
        rep.add_check(tag + "translate sum is 1", sum, 1e-12);
        rep.add_check(tag + "e is a projection", idem, 1e-10);
    }
}

void suite_out_of_scope(Report& rep) {
    rep.add_out_of_scope(
        "bivariant K-theory equivalences for the complex algebras",
        "equivalence classes in (equivariant) bivariant K-theory are not computed; only the "
        "underlying homomorphisms and homotopies are verified");
    rep.add_out_of_scope(
        "K-theory isomorphism for the sphere algebra",
        "the isomorphism with the K-theory of the scalars is not computed; the homotopies "
        "between the block maps that drive it are verified numerically and symbolically");
    rep.add_out_of_scope(
        "Morita equivalence of graded projection algebras with crossed products",
        "only the finite-dimensional matrix identities behind the equivalence are checked");
    rep.add_out_of_scope(
        "K-groups of skeleton-ideal quotients",
        "no K-group computation is attempted; rational ranks of the abelianized algebras are "
        "reported instead");
}

// ---- subcommand handlers ---------------------------------------------------

int cmd_complex(const Ctx& ctx, std::ostream& out, const std::string& file, const std::string& op,
                int k) {
    Report rep("complex");
    rep.set_config({{"input", file}, {"op", op}, {"k", k}});
    SimplicialComplex c = complex_from_json(load_json_file(file));
    if (op == "info") {
        rep.set_payload("info", complex_info(c));
    } else if (op == "skeleton") {
        rep.set_payload("complex", to_json(c.skeleton(k)));
    } else if (op == "flag") {
        rep.set_payload("complex", to_json(c.flag_saturation()));
    } else if (op == "barycentric") {
        rep.set_payload("complex", to_json(c.barycentric_subdivision()));
    } else {
        throw CLI::ValidationError("--op must be info|skeleton|flag|barycentric");
    }
    return emit(rep, ctx, out);
}

int cmd_homology(const Ctx& ctx, std::ostream& out, const std::string& file, bool reduced) {
    Report rep("homology");
    rep.set_config({{"input", file}, {"reduced", reduced}});
    SimplicialComplex c = complex_from_json(load_json_file(file));
    HomologyResult h = homology(c, reduced);
    Json hj = Json::object();
    for (size_t kdeg = 0; kdeg < h.betti.size(); ++kdeg) {
        Json tors = Json::array();
        for (const auto& t : h.torsion[kdeg]) tors.push_back(t.str());
        hj[std::to_string(kdeg)] = {{"betti", h.betti[kdeg]}, {"torsion", tors}};
    }
    rep.set_payload("homology", hj);
    KTheoryRanks kr = rational_k_ranks(c);
    rep.set_payload("rank_K0", kr.rank_K0);
    rep.set_payload("rank_K1", kr.rank_K1);
    return emit(rep, ctx, out);
}

int cmd_sigma_f(const Ctx& ctx, std::ostream& out, const std::string& group, const std::string& f,
                const std::string& window, const std::string& variant) {
    Report rep("sigma-f");
    rep.set_config({{"group", group}, {"F", f}, {"window", window}, {"variant", variant}});
    GroupOracle g = oracle_from_spec(group);
    GammaSubset fs = subset_from_list(g, f);
    WindowSpec w = window_from_spec(g, window);
    SigmaFWindow sw = build_sigma_F(g, fs, w);
    rep.set_payload("complex", to_json(sw.complex));
    rep.set_payload("info", complex_info(sw.complex));
    rep.set_payload("variant", variant);
    rep.add_verdict("window complex is full", sw.complex.is_full() ? "yes" : "no",
                    sw.complex.is_full());
    return emit(rep, ctx, out);
}

int cmd_verify_hom(const Ctx& ctx, std::ostream& out, const std::string& presentation_file,
                   const std::string& assignment_file) {
    Report rep("verify-hom");
    rep.set_config({{"presentation", presentation_file}, {"assignment", assignment_file}});
    Json pj = load_json_file(presentation_file);
    Json aj = load_json_file(assignment_file);
    if (!aj.contains("source")) aj["source"] = pj;
    if (!aj.contains("target")) aj["target"] = pj;
    GeneratorAssignment a = assignment_from_json(aj);
    VerifyResult r = verify_assignment(a);
    rep.add_verdict("assignment", verdict_name(r.verdict), r.verdict == Verdict::Verified,
                    r.relation.empty() ? r.note : r.relation);
    int code = emit(rep, ctx, out, r.verdict == Verdict::Undetermined ? 2 : 1);
    return code;
}

int cmd_verify_rep(const Ctx& ctx, std::ostream& out, const std::string& file, int dim) {
    Report rep("verify-rep");
    unsigned long seed = ctx.effective_seed();
    rep.set_config({{"complex", file}, {"dim", dim}, {"seed", seed}});
    SimplicialComplex c = complex_from_json(load_json_file(file));
    MatrixRep r = random_complex_rep(c, dim, seed);
    rep.absorb(verify_matrix_rep(r, ctx.tol));
    return emit(rep, ctx, out);
}

int cmd_clifford(const Ctx& ctx, std::ostream& out, int n) {
    Report rep("clifford");
    rep.set_config({{"n", n}});
    MatrixRep r = clifford_sphere_rep(n);
    rep.absorb(verify_matrix_rep(r, ctx.tol));
    auto p = r.presentation;
    auto gammas = clifford_gammas(n);
    for (int i = 0; i <= n; ++i) {
        const auto& hp = r.images[p->gen_index(sphere_vertex(i, true))];
        const auto& hm = r.images[p->gen_index(sphere_vertex(i, false))];
        rep.add_check("exact orthogonality h_" + std::to_string(i) + "+ h_" + std::to_string(i) +
                          "-",
                      (hp * hm).cwiseAbs().maxCoeff(), 0.0);
        Eigen::MatrixXcd xi = gammas[i] / std::sqrt(static_cast<double>(n + 1));
        rep.add_check("round trip x_" + std::to_string(i),
                      (xi - (hermitian_sqrt(hp) - hermitian_sqrt(hm))).operatorNorm(), 1e-10);
    }
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(r.dim, r.dim);
    for (const auto& h : r.images) total += h;
    rep.add_check("sum of generators is 1",
                  (total - Eigen::MatrixXcd::Identity(r.dim, r.dim)).operatorNorm(), 1e-12);
    return emit(rep, ctx, out);
}

int cmd_crossed(const Ctx& ctx, std::ostream& out, const std::string& group, int dim,
                const std::string& subgroup, int max_word_len) {
    Report rep("crossed");
    unsigned long seed = ctx.effective_seed();
    rep.set_config(
        {{"group", group}, {"dim", dim}, {"seed", seed}, {"subgroup", subgroup},
         {"max_word_len", max_word_len}});
    FiniteGroup g = finite_group_from_spec(group);

    std::optional<std::vector<int>> sub;
    if (!subgroup.empty()) {
        std::vector<int> idx;
        for (const auto& tok : split_commas(subgroup)) {
            GroupOracle oracle = GroupOracle::finite(g);
            idx.push_back(static_cast<int>(oracle.parse(tok).at(0)));
        }
        sub = idx;
    }

    GradedProjectionFamily fam = graded_projection_from_group_algebra(g, dim, seed, sub);
    ToleranceConfig famTol = ctx.tol;
    famTol.eps_rel = 1e-12;
    famTol.eps_eig = 1e-12;
    rep.absorb(verify_family(fam, famTol), "family: ");

    ToleranceConfig phTol = ctx.tol;
    phTol.eps_idem = 1e-10;
    FFamilyResult ff = build_f_family(fam, phTol);
    rep.absorb(ff.report, "");

    auto supp = fam.support();
    double comp = 0;
    std::vector<int> word;
    std::function<void(int)> rec = [&](int len) {
        if (!word.empty()) comp = std::max(comp, compression_identity_check(fam, ff, word));
        if (len == max_word_len) return;
        for (int s : supp) {
            word.push_back(s);
            rec(len + 1);
            word.pop_back();
        }
    };
    rec(0);
    rep.add_check("compression identity (words <= " + std::to_string(max_word_len) + ")", comp,
                  1e-8);

    Json table = Json::array();
    for (const auto& e : product_norm_table(fam, std::min(max_word_len + 1, 4))) {
        Json w = Json::array();
        for (int s : e.word) w.push_back(g.names[s]);
        table.push_back(
            {{"word", w}, {"product_in_support", e.product_in_support}, {"norm", e.norm}});
    }
    rep.set_payload("single_relation_product_norms", table);
    return emit(rep, ctx, out);
}

int cmd_cutoff(const Ctx& ctx, std::ostream& out, const std::string& group, const std::string& f,
               const std::string& points_file) {
    Report rep("cutoff");
    rep.set_config({{"group", group}, {"F", f}, {"points", points_file}});
    FiniteGroup g = finite_group_from_spec(group);
    GroupOracle oracle = GroupOracle::finite(g);
    GammaSubset fs = f.empty() ? GammaSubset(oracle, oracle.all_elements())
                               : subset_from_list(oracle, f);
    Json pj = load_json_file(points_file);
    std::vector<std::vector<double>> pts;
    for (const auto& point : pj) {
        std::vector<double> p(g.size(), 0.0);
        if (point.is_array()) {
            if (static_cast<int>(point.size()) != g.size())
                throw std::runtime_error("point array must list a weight per group element");
            for (int i = 0; i < g.size(); ++i) p[i] = point[i].get<double>();
        } else {
            for (auto it = point.begin(); it != point.end(); ++it)
                p[oracle.parse(it.key()).at(0)] = it.value().get<double>();
        }
        pts.push_back(std::move(p));
    }
    ToleranceConfig tol = ctx.tol;
    tol.eps_idem = 1e-10;
    SampledCrossedRep r = cutoff_projection(g, fs, pts, tol);
    rep.absorb(r.report);
    rep.set_payload("num_sample_points", r.points.size());
    return emit(rep, ctx, out);
}

int cmd_suite(const Ctx& ctx, std::ostream& out, const std::string& name) {
    if (name != "paper")
        throw CLI::ValidationError("unknown suite: " + name);
    Report rep("suite");
    unsigned long seed = ctx.effective_seed();
    rep.set_config({{"suite", name}, {"seed", seed}});
    bool undetermined = false;
    suite_spheres(rep);
    suite_flag(rep, seed);
    suite_monomials(rep, seed);
    suite_homs(rep, undetermined);
    suite_clifford(rep, ctx.tol);
    suite_rotation(rep, ctx.tol);
    suite_crossed(rep);
    suite_cutoff(rep);
    suite_out_of_scope(rep);
    return emit(rep, ctx, out, undetermined ? 2 : 1);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"computable noncommutative simplicial complexes"};
    app.require_subcommand(1);

    Ctx ctx;
    app.add_option("--seed", ctx.seed, "random seed (NCKIT_SEED env as fallback)");
    app.add_option("--tol", ctx.tol_overrides, "tolerance override key=value")->take_all();
    app.add_flag("--no-timestamp", ctx.no_timestamp, "suppress the report timestamp");
    app.add_option("-o,--output", ctx.output, "write the report to this path");
    app.fallthrough();

    std::string file, op = "info", group, flist, window, variant = "flag", subgroup, points;
    std::string presentation_file, assignment_file, suite_name;
    int k = 1, n = 1, dim = 2, max_word_len = 3;
    bool reduced = false;

    auto* c_complex = app.add_subcommand("complex", "inspect or transform a complex");
    c_complex->add_option("input", file, "complex JSON (or - for stdin)")->required();
    c_complex->add_option("--op", op, "info|skeleton|flag|barycentric");
    c_complex->add_option("--k", k, "skeleton degree");

    auto* c_hom = app.add_subcommand("homology", "integer homology and rational K ranks");
    c_hom->add_option("input", file, "complex JSON")->required();
    c_hom->add_flag("--reduced", reduced, "reduced homology");

    auto* c_sigma = app.add_subcommand("sigma-f", "group-equivariant complex window");
    c_sigma->add_option("--group", group, "zn:k | free:k | cyclic:n | sym:n | table.json")
        ->required();
    c_sigma->add_option("--F", flist, "comma-separated group elements")->required();
    c_sigma->add_option("--window", window, "ball:r | list:a,b,c (finite groups: default all)");
    c_sigma->add_option("--variant", variant, "s|flag|ab");

    auto* c_vh = app.add_subcommand("verify-hom", "verify a generator assignment symbolically");
    c_vh->add_option("presentation", presentation_file, "presentation JSON")->required();
    c_vh->add_option("assignment", assignment_file, "assignment JSON")->required();

    auto* c_vr = app.add_subcommand("verify-rep", "verify a seeded random matrix representation");
    c_vr->add_option("--complex", file, "complex JSON")->required();
    c_vr->add_option("--dim", dim, "block dimension");

    auto* c_cl = app.add_subcommand("clifford", "exact sphere-algebra representation checks");
    c_cl->add_option("--n", n, "sphere index")->required();

    auto* c_cr = app.add_subcommand("crossed", "graded projection family harness");
    c_cr->add_option("--group", group, "cyclic:n | sym:n | table.json")->required();
    c_cr->add_option("--dim", dim, "matrix block dimension");
    c_cr->add_option("--subgroup", subgroup, "comma-separated subgroup elements");
    c_cr->add_option("--max-word-len", max_word_len, "compression word length bound");

    auto* c_cut = app.add_subcommand("cutoff", "cut-off projection on sampled measures");
    c_cut->add_option("--group", group, "cyclic:n | sym:n | table.json")->required();
    c_cut->add_option("--F", flist, "comma-separated elements (default: whole group)");
    c_cut->add_option("--points", points, "JSON array of unit measures")->required();

    auto* c_suite = app.add_subcommand("suite", "run a bundled check battery");
    c_suite->add_option("name", suite_name, "suite name (paper)")->required();

    for (CLI::App* sc : {c_complex, c_hom, c_sigma, c_vh, c_vr, c_cl, c_cr, c_cut, c_suite})
        sc->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("nckit");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }

    try {
        ctx.apply_tol_overrides();
        if (app.got_subcommand(c_complex)) return cmd_complex(ctx, out, file, op, k);
        if (app.got_subcommand(c_hom)) return cmd_homology(ctx, out, file, reduced);
        if (app.got_subcommand(c_sigma)) return cmd_sigma_f(ctx, out, group, flist, window, variant);
        if (app.got_subcommand(c_vh))
            return cmd_verify_hom(ctx, out, presentation_file, assignment_file);
        if (app.got_subcommand(c_vr)) return cmd_verify_rep(ctx, out, file, dim);
        if (app.got_subcommand(c_cl)) return cmd_clifford(ctx, out, n);
        if (app.got_subcommand(c_cr)) return cmd_crossed(ctx, out, group, dim, subgroup, max_word_len);
        if (app.got_subcommand(c_cut)) return cmd_cutoff(ctx, out, group, flist, points);
        if (app.got_subcommand(c_suite)) return cmd_suite(ctx, out, suite_name);
        err << "error: no subcommand\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace nckit
