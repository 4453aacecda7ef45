#include "ncformal/cliapp.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "ncformal/acceptance.hpp"
#include "ncformal/pbw.hpp"
#include "ncformal/repscheme.hpp"
#include "ncformal/rootalg.hpp"
#include "ncformal/sampling.hpp"
#include "ncformal/strata.hpp"

namespace ncformal {

namespace {

using nlohmann::json;

struct ResourceCapError : std::runtime_error {
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

struct Caps {
    int max_weight = 12;
    int max_degree = 12;
    int max_n = 8;

    void check_weight(int w) const {
        if (w > max_weight) throw ResourceCapError("weight exceeds --max-weight");
    }
    void check_degree(int d) const {
        if (d > max_degree) throw ResourceCapError("degree exceeds --max-degree");
    }
    void check_n(int n) const {
        if (n > max_n) throw ResourceCapError("size exceeds --max-n");
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json pbw_to_json(const PBWElement& e) {
    json terms = json::array();
    for (const auto& [m, f] : e.terms())
        terms.push_back({{"monomial", m.entries()}, {"coeff", to_string(f)}});
    return terms;
}

std::string pbw_to_text(const PBWElement& e) {
    if (e.is_zero()) return "0\n";
    std::string s;
    for (const auto& [m, f] : e.terms()) {
        s += "[[" + to_string(f) + "]]";
        if (!m.empty()) {
            s += " M[";
            for (size_t i = 0; i < m.entries().size(); ++i) {
                if (i) s += ",";
                s += std::to_string(m.entries()[i]);
            }
            s += "]";
        }
        s += "\n";
    }
    return s;
}

BracketMonomial monomial_from_json(const std::string& text, const HallBasis& basis) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad monomial JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("monomial must be a JSON list of basis indices");
    std::vector<int> entries;
    for (const auto& v : j) {
        int idx = v.get<int>();
        if (idx < 0 || idx >= basis.size())
            throw ParseError("basis index outside the registry");
        entries.push_back(idx);
    }
    return BracketMonomial(std::move(entries), basis);
}

FormalSection section_from_json(const std::string& text, int d,
                                std::shared_ptr<const HallBasis> basis, const CommPoly& center,
                                int K) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad section JSON: ") + e.what());
    }
    if (!j.contains("terms")) throw ParseError("section JSON needs 'terms'");
    FormalSection s(d, basis, center, K);
    for (const auto& term : j["terms"]) {
        BracketMonomial m = monomial_from_json(term["monomial"].dump(), *basis);
        CommPoly num = parse_commpoly(term["numerator"].get<std::string>(), d);
        int pow = term.value("denom_power", 0);
        s.add_term(m, LocalizedElement(num, pow, center));
    }
    return s;
}

json section_to_json(const FormalSection& s) {
    json terms = json::array();
    for (const auto& [m, g] : s.terms())
        terms.push_back({{"monomial", m.entries()},
                         {"numerator", to_string(g.numerator())},
                         {"denom_power", g.denom_power()}});
    return json{{"schema", "ncformal/1"},
                {"d", s.alphabet_size()},
                {"center", to_string(s.center())},
                {"K", s.truncation()},
                {"terms", terms}};
}

json local_setting_to_json(const LocalQuiverSetting& s) {
    return json{{"vertices", s.gamma.vertices},
                {"arrow_counts", s.arrow_counts},
                {"multiplicities", s.multiplicities.components},
                {"ambient_dim", s.ambient_dim}};
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact calculus for formal structures on representation schemes"};
    app.require_subcommand(1);

    Caps caps;
    std::string format = "text";
    app.add_option("--max-weight", caps.max_weight, "largest allowed basis weight")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-degree", caps.max_degree, "largest allowed polynomial degree")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-n", caps.max_n, "largest allowed matrix size / total dimension")
        ->check(CLI::PositiveNumber);

    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
    };

    // --- hall-basis --------------------------------------------------------
    int hb_d = 2, hb_weight = 3;
    CLI::App* hall = app.add_subcommand("hall-basis", "layered bracket basis of the free Lie algebra");
    hall->add_option("--d", hb_d, "alphabet size")->required();
    hall->add_option("--weight", hb_weight, "largest layer weight")->required();
    add_format(hall);

    // --- pbw-normalize -----------------------------------------------------
    int pn_d = 2;
    std::string pn_poly;
    CLI::App* pnorm = app.add_subcommand("pbw-normalize", "normal form of a free-algebra element");
    pnorm->add_option("--d", pn_d, "alphabet size")->required();
    pnorm->add_option("poly", pn_poly, "polynomial, e.g. \"3*x2*x1 - x1*x2\"")->required();
    add_format(pnorm);

    // --- trunc-mul ---------------------------------------------------------
    int tm_d = 2, tm_K = 2;
    std::string tm_a, tm_b;
    CLI::App* tmul = app.add_subcommand("trunc-mul", "product in the K-th truncated algebra");
    tmul->add_option("--d", tm_d, "alphabet size")->required();
    tmul->add_option("--K", tm_K, "truncation level")->required();
    tmul->add_option("a", tm_a, "left factor")->required();
    tmul->add_option("b", tm_b, "right factor")->required();
    add_format(tmul);

    // --- extract-op --------------------------------------------------------
    int eo_d = 2, eo_bound = 4, eo_weight = 6;
    std::string eo_lambda = "[]", eo_mu = "[]", eo_nu = "[]";
    CLI::App* extract = app.add_subcommand("extract-op", "bilinear differential operator of a product block");
    extract->add_option("--d", eo_d, "alphabet size")->required();
    extract->add_option("--lambda", eo_lambda, "left monomial, JSON list of basis indices");
    extract->add_option("--mu", eo_mu, "right monomial, JSON list of basis indices");
    extract->add_option("--nu", eo_nu, "target monomial, JSON list of basis indices");
    extract->add_option("--bound", eo_bound, "interpolation degree bound")->required();
    extract->add_option("--weight", eo_weight, "basis registry weight");
    add_format(extract);

    // --- section-mul -------------------------------------------------------
    int sm_d = 2, sm_K = 2, sm_weight = 6;
    std::string sm_center, sm_a, sm_b;
    CLI::App* smul = app.add_subcommand("section-mul", "product of truncated formal sections over a basic open");
    smul->add_option("--d", sm_d, "alphabet size")->required();
    smul->add_option("--center", sm_center, "center polynomial f of the basic open X(f)")->required();
    smul->add_option("--K", sm_K, "truncation level")->required();
    smul->add_option("--weight", sm_weight, "basis registry weight");
    smul->add_option("a", sm_a, "left section JSON")->required();
    smul->add_option("b", sm_b, "right section JSON")->required();
    add_format(smul);

    // --- euler -------------------------------------------------------------
    std::string eu_quiver;
    int eu_n = 0;
    CLI::App* euler = app.add_subcommand("euler", "Euler form matrix of a quiver or its extension");
    euler->add_option("--quiver", eu_quiver, "quiver JSON file")->required();
    euler->add_option("--n", eu_n, "extend by n arrow bundles first");
    add_format(euler);

    // --- extend ------------------------------------------------------------
    std::string ex_quiver;
    int ex_n = 1;
    bool ex_localized = false;
    CLI::App* extend = app.add_subcommand("extend", "extended quiver, optionally with localization data");
    extend->add_option("--quiver", ex_quiver, "quiver JSON file")->required();
    extend->add_option("--n", ex_n, "arrows per vertex")->required();
    extend->add_flag("--localized", ex_localized, "include inverse arrows and relations");
    add_format(extend);

    // --- dimvectors --------------------------------------------------------
    int dv_k = 1, dv_n = 0;
    CLI::App* dimv = app.add_subcommand("dimvectors", "dimension vectors of total n");
    dimv->add_option("--k", dv_k, "vertex count")->required();
    dimv->add_option("--n", dv_n, "total dimension")->required();
    add_format(dimv);

    // --- check-localization --------------------------------------------------
    std::string cl_quiver, cl_rep;
    int cl_n = 1;
    CLI::App* checkloc = app.add_subcommand("check-localization", "test a representation point of the localized extension");
    checkloc->add_option("--quiver", cl_quiver, "quiver JSON file")->required();
    checkloc->add_option("--n", cl_n, "arrows per vertex")->required();
    checkloc->add_option("--rep", cl_rep, "representation JSON file")->required();
    add_format(checkloc);

    // --- rep-ideal ---------------------------------------------------------
    std::string ri_pres;
    int ri_n = 1;
    CLI::App* repideal = app.add_subcommand("rep-ideal", "relation ideal of the representation scheme");
    repideal->add_option("--presentation", ri_pres, "presentation JSON file")->required();
    repideal->add_option("--n", ri_n, "matrix size")->required();
    add_format(repideal);

    // --- root --------------------------------------------------------------
    std::vector<int> rt_free;
    std::string rt_quiver;
    int rt_n = 1;
    CLI::App* root = app.add_subcommand("root", "presentation of the n-th root algebra");
    root->add_option("--free", rt_free, "free algebra: d n")->expected(2);
    root->add_option("--quiver", rt_quiver, "path algebra: quiver JSON file");
    root->add_option("--n", rt_n, "matrix size for the path algebra case");
    add_format(root);

    // --- root-roundtrip ------------------------------------------------------
    std::vector<int> rr_free;
    std::string rr_quiver;
    int rr_n = 1, rr_samples = 25;
    std::uint64_t rr_seed = 0;
    CLI::App* roundtrip = app.add_subcommand("root-roundtrip", "randomized verification of the universal correspondence");
    roundtrip->add_option("--free", rr_free, "free algebra: d n")->expected(2);
    roundtrip->add_option("--quiver", rr_quiver, "path algebra: quiver JSON file");
    roundtrip->add_option("--n", rr_n, "matrix size for the path algebra case");
    roundtrip->add_option("--samples", rr_samples, "samples per coefficient algebra");
    roundtrip->add_option("--seed", rr_seed, "random seed");
    add_format(roundtrip);

    // --- strata --------------------------------------------------------------
    std::string st_quiver;
    int st_n = 1, st_m = 1, st_local = -1;
    CLI::App* strata_cmd = app.add_subcommand("strata", "substrata of the semisimple quotient with local quiver settings");
    strata_cmd->add_option("--quiver", st_quiver, "quiver JSON file")->required();
    strata_cmd->add_option("--n", st_n, "total dimension of the underlying points")->required();
    strata_cmd->add_option("--m", st_m, "module dimension")->required();
    strata_cmd->add_option("--local-quiver", st_local, "full fiber report for one substratum index");
    add_format(strata_cmd);

    // --- selftest ------------------------------------------------------------
    CLI::App* selftest = app.add_subcommand("selftest", "run the full acceptance suite");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (*hall) {
            caps.check_weight(hb_weight);
            auto basis = generate_basis(hb_d, hb_weight);
            if (format == "json") {
                json elements = json::array();
                for (int i = 0; i < basis->size(); ++i) {
                    const HallElement& e = basis->element(i);
                    json item{{"index", e.index},
                              {"weight", e.weight},
                              {"ord", e.ord},
                              {"sexpr", basis->sexpr(i)}};
                    if (!e.is_leaf()) item["bracket_number"] = basis->bracket_number(i);
                    elements.push_back(item);
                }
                out << json{{"schema", "ncformal/1"},
                            {"d", hb_d},
                            {"max_weight", hb_weight},
                            {"elements", elements}}
                           .dump(2)
                    << "\n";
            } else {
                for (int i = 0; i < basis->size(); ++i)
                    out << i << ": " << basis->pretty(i) << "  (weight "
                        << basis->element(i).weight << ", ord " << basis->element(i).ord << ")\n";
            }
        } else if (*pnorm) {
            NCPoly p = parse_ncpoly(pn_poly, pn_d);
            caps.check_degree(p.degree());
            int weight = std::max(1, p.degree());
            PBWContext ctx(generate_basis(pn_d, weight));
            PBWElement e = pbw_normalize(ctx, p);
            if (format == "json")
                out << json{{"schema", "ncformal/1"}, {"d", pn_d}, {"terms", pbw_to_json(e)}}
                           .dump(2)
                    << "\n";
            else
                out << pbw_to_text(e);
        } else if (*tmul) {
            NCPoly a = parse_ncpoly(tm_a, tm_d);
            NCPoly b = parse_ncpoly(tm_b, tm_d);
            caps.check_degree(a.degree() + b.degree());
            int weight = std::max(1, std::max(a.degree() + b.degree(), tm_K));
            caps.check_weight(weight);
            PBWContext ctx(generate_basis(tm_d, weight));
            PBWElement product =
                truncated_mul(ctx, pbw_normalize(ctx, a), pbw_normalize(ctx, b), tm_K);
            if (format == "json")
                out << json{{"schema", "ncformal/1"},
                            {"d", tm_d},
                            {"K", tm_K},
                            {"terms", pbw_to_json(product)}}
                           .dump(2)
                    << "\n";
            else
                out << pbw_to_text(product);
        } else if (*extract) {
            caps.check_weight(eo_weight);
            caps.check_degree(eo_bound);
            auto basis = generate_basis(eo_d, eo_weight);
            PBWContext ctx(basis);
            BracketMonomial lambda = monomial_from_json(eo_lambda, *basis);
            BracketMonomial mu = monomial_from_json(eo_mu, *basis);
            BracketMonomial nu = monomial_from_json(eo_nu, *basis);
            BilinearOperatorEntry entry = extract_C_operator(ctx, lambda, mu, nu, eo_bound);
            if (format == "json") {
                json terms = json::array();
                for (const auto& t : entry.terms)
                    terms.push_back({{"coeff", to_string(t.coeff)},
                                     {"alpha", t.alpha},
                                     {"beta", t.beta}});
                out << json{{"schema", "ncformal/1"},
                            {"lambda", lambda.entries()},
                            {"mu", mu.entries()},
                            {"nu", nu.entries()},
                            {"bound", eo_bound},
                            {"stabilized", entry.stabilized},
                            {"terms", terms}}
                           .dump(2)
                    << "\n";
            } else {
                out << "stabilized: " << (entry.stabilized ? "yes" : "no") << "\n";
                for (const auto& t : entry.terms) {
                    out << "coeff " << to_string(t.coeff) << "  alpha (";
                    for (size_t i = 0; i < t.alpha.size(); ++i)
                        out << (i ? "," : "") << t.alpha[i];
                    out << ")  beta (";
                    for (size_t i = 0; i < t.beta.size(); ++i) out << (i ? "," : "") << t.beta[i];
                    out << ")\n";
                }
            }
        } else if (*smul) {
            caps.check_weight(sm_weight);
            auto basis = generate_basis(sm_d, sm_weight);
            PBWContext ctx(basis);
            CommPoly center = parse_commpoly(sm_center, sm_d);
            FormalSection a = section_from_json(sm_a, sm_d, basis, center, sm_K);
            FormalSection b = section_from_json(sm_b, sm_d, basis, center, sm_K);
            FormalSection product = formal_section_mul(ctx, a, b);
            if (format == "json") {
                out << section_to_json(product).dump(2) << "\n";
            } else {
                if (product.terms().empty()) out << "0\n";
                for (const auto& [m, g] : product.terms()) {
                    out << "[[" << to_string(g) << "]]";
                    if (!m.empty()) {
                        out << " M[";
                        for (size_t i = 0; i < m.entries().size(); ++i)
                            out << (i ? "," : "") << m.entries()[i];
                        out << "]";
                    }
                    out << "\n";
                }
            }
        } else if (*euler) {
            Quiver q = quiver_from_json_text(read_file(eu_quiver));
            EulerForm form;
            if (euler->count("--n")) {
                caps.check_n(eu_n);
                form = euler_form_extended(q, eu_n);
            } else {
                form = euler_form(q);
            }
            if (format == "json")
                out << json{{"schema", "ncformal/1"}, {"matrix", form.matrix}}.dump(2) << "\n";
            else {
                for (const auto& row : form.matrix) {
                    for (size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
                    out << "\n";
                }
            }
        } else if (*extend) {
            caps.check_n(ex_n);
            Quiver q = quiver_from_json_text(read_file(ex_quiver));
            if (!ex_localized) {
                ExtendedQuiver ext = extend_quiver(q, ex_n);
                Quiver plain = ext.as_quiver();
                if (format == "json")
                    out << json{{"schema", "ncformal/1"},
                                {"quiver", json::parse(quiver_to_json_text(plain))}}
                               .dump(2)
                        << "\n";
                else
                    out << quiver_to_json_text(plain) << "\n";
            } else {
                LocalizationData data = localization_data(q, ex_n);
                json rels = json::array();
                for (const auto& rel : data.relations) rels.push_back(rel.name);
                if (format == "json")
                    out << json{{"schema", "ncformal/1"},
                                {"quiver", json::parse(quiver_to_json_text(*data.carrier))},
                                {"sigma_matrix", data.sigma_matrix},
                                {"inverse_matrix", data.inverse_matrix},
                                {"relations", rels}}
                               .dump(2)
                        << "\n";
                else {
                    out << quiver_to_json_text(*data.carrier) << "\n";
                    out << "relations: " << data.relations.size() << "\n";
                }
            }
        } else if (*dimv) {
            caps.check_n(dv_n);
            auto vectors = enumerate_dimvectors(dv_k, dv_n);
            if (format == "json") {
                json arr = json::array();
                for (const auto& v : vectors) arr.push_back(v.components);
                out << json{{"schema", "ncformal/1"}, {"vectors", arr}}.dump(2) << "\n";
            } else {
                for (const auto& v : vectors) {
                    for (int i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
                    out << "\n";
                }
            }
        } else if (*checkloc) {
            caps.check_n(cl_n);
            Quiver q = quiver_from_json_text(read_file(cl_quiver));
            LocalizationData data = localization_data(q, cl_n);
            json rep_json;
            try {
                rep_json = json::parse(read_file(cl_rep));
            } catch (const json::exception& e) {
                throw ParseError(std::string("bad representation JSON: ") + e.what());
            }
            ExtendedRep rep;
            std::vector<int> dims;
            for (const auto& v : rep_json.at("dims")) dims.push_back(v.get<int>());
            rep.dims = DimVector(dims);
            for (const auto& entry : rep_json.at("matrices")) {
                int arrow_id = entry.at("arrow").get<int>();
                const auto& rows = entry.at("entries");
                QMat m(static_cast<int>(rows.size()),
                       rows.empty() ? 0 : static_cast<int>(rows[0].size()));
                for (int i = 0; i < m.rows; ++i)
                    for (int j = 0; j < m.cols; ++j)
                        m.at(i, j) = rational_from_string(rows[i][j].get<std::string>());
                rep.arrow_matrices[arrow_id] = std::move(m);
            }
            bool ok = check_localization_point(data, rep);
            if (format == "json")
                out << json{{"schema", "ncformal/1"}, {"valid", ok}}.dump(2) << "\n";
            else
                out << (ok ? "valid" : "invalid") << "\n";
        } else if (*repideal) {
            caps.check_n(ri_n);
            Presentation pres = presentation_from_json_text(read_file(ri_pres));
            RelationIdeal ideal = relation_ideal(pres, ri_n);
            auto labels = ideal.space.var_labels();
            if (format == "json") {
                json polys = json::array();
                for (const auto& entry : ideal.polynomials)
                    polys.push_back({{"label", entry.label},
                                     {"relation", entry.relation_index},
                                     {"i", entry.i},
                                     {"j", entry.j},
                                     {"poly", to_string(entry.poly, labels)}});
                out << json{{"schema", "ncformal/1"},
                            {"n", ri_n},
                            {"d", pres.d},
                            {"variables", labels},
                            {"polynomials", polys}}
                           .dump(2)
                    << "\n";
            } else {
                for (const auto& entry : ideal.polynomials)
                    out << entry.label << " = " << to_string(entry.poly, labels) << "\n";
            }
        } else if (*root) {
            RootPresentation pres;
            if (!rt_free.empty()) {
                caps.check_n(rt_free[1]);
                pres = root_presentation_free(rt_free[0], rt_free[1]);
            } else if (!rt_quiver.empty()) {
                caps.check_n(rt_n);
                pres = root_presentation_path(quiver_from_json_text(read_file(rt_quiver)), rt_n);
            } else {
                throw ParseError("root needs either --free d n or --quiver file --n N");
            }
            if (format == "json") {
                out << root_presentation_to_json_text(pres) << "\n";
            } else {
                std::vector<std::string> labels;
                for (const auto& g : pres.generators) labels.push_back(g.label);
                out << "generators (" << pres.generator_count() << "):";
                for (const auto& l : labels) out << " " << l;
                out << "\nrelations (" << pres.relations.size() << "):\n";
                for (const auto& r : pres.relations) out << "  " << to_string(r, labels) << " = 0\n";
            }
        } else if (*roundtrip) {
            Rng rng(rr_seed);
            std::vector<BaseAlgebraPtr> bases = {BaseAlgebra::matrix_algebra(2),
                                                 BaseAlgebra::truncated_poly(3),
                                                 BaseAlgebra::upper_triangular(2)};
            std::vector<std::string> base_names = {"M2(Q)", "Q[t]/(t^3)", "upper-triangular 2x2"};
            RootPresentation pres;
            bool is_free = !rr_free.empty();
            if (is_free) {
                caps.check_n(rr_free[1]);
                pres = root_presentation_free(rr_free[0], rr_free[1]);
            } else if (!rr_quiver.empty()) {
                caps.check_n(rr_n);
                pres = root_presentation_path(quiver_from_json_text(read_file(rr_quiver)), rr_n);
            } else {
                throw ParseError("root-roundtrip needs either --free d n or --quiver file --n N");
            }
            int failures = 0, checked = 0;
            for (size_t bi = 0; bi < bases.size(); ++bi) {
                for (int s = 0; s < rr_samples; ++s) {
                    MatrixAlgebraMap phi;
                    if (is_free) {
                        phi.base = bases[bi];
                        phi.n = pres.n;
                        for (int k = 0; k < pres.d; ++k)
                            phi.gen_images.push_back(random_alg_mat(rng, bases[bi], pres.n, pres.n));
                    } else {
                        phi = random_path_matrix_map(rng, bases[bi], pres.quiver, pres.n);
                    }
                    RootMap psi = lower(pres, phi);
                    if (!(raise(pres, psi) == phi)) ++failures;
                    if (!(lower(pres, raise(pres, psi)) == psi)) ++failures;
                    ++checked;
                }
                out << base_names[bi] << ": " << rr_samples << " samples\n";
            }
            out << "round trips checked: " << checked << ", failures: " << failures << "\n";
            if (failures > 0) return 2;
        } else if (*strata_cmd) {
            caps.check_n(st_n);
            caps.check_n(st_m);
            Quiver q = quiver_from_json_text(read_file(st_quiver));
            auto substrata = enumerate_substrata(st_m, st_n, q);
            if (st_local >= 0) {
                if (st_local >= static_cast<int>(substrata.size()))
                    throw ContractError("substratum index outside range");
                const SemisimpleType& t = substrata[static_cast<size_t>(st_local)];
                FiberReport report = fiber_setting_report(t, st_n, q);
                if (format == "json") {
                    out << json{{"schema", "ncformal/1"},
                                {"index", st_local},
                                {"partition", t.lambda.parts},
                                {"local_quiver", local_setting_to_json(report.setting)},
                                {"theta", report.theta.weights},
                                {"stratum_dim", report.stratum_dim}}
                               .dump(2)
                        << "\n";
                } else {
                    out << "partition:";
                    for (int p : t.lambda.parts) out << " " << p;
                    out << "\nlocal quiver vertices: " << report.setting.gamma.vertices
                        << "\nambient dim: " << report.setting.ambient_dim
                        << "\nstratum dim: " << report.stratum_dim << "\n";
                }
            } else {
                json arr = json::array();
                int index = 0;
                for (const auto& t : substrata) {
                    json item{{"index", index}, {"partition", t.lambda.parts}};
                    json dims = json::array();
                    for (const auto& a : t.dim_vectors) dims.push_back(a.components);
                    item["dim_vectors"] = dims;
                    item["stratum_dim"] = stratum_dimension(t, st_n, q);
                    try {
                        item["local_quiver"] = local_setting_to_json(local_quiver(t, st_n, q));
                    } catch (const ContractError& e) {
                        item["local_quiver"] = nullptr;
                        item["local_quiver_error"] = e.what();
                    }
                    arr.push_back(item);
                    ++index;
                }
                if (format == "json")
                    out << json{{"schema", "ncformal/1"},
                                {"m", st_m},
                                {"n", st_n},
                                {"substrata", arr}}
                               .dump(2)
                        << "\n";
                else {
                    for (const auto& item : arr) {
                        out << item["index"] << ": partition";
                        for (const auto& p : item["partition"]) out << " " << p;
                        out << ", dim " << item["stratum_dim"];
                        if (item.contains("local_quiver_error"))
                            out << ", empty (no local quiver)";
                        else
                            out << ", local ambient dim "
                                << item["local_quiver"]["ambient_dim"];
                        out << "\n";
                    }
                }
            }
        } else if (*selftest) {
            auto results = acceptance::run_all(out);
            if (!acceptance::all_pass(results)) return 2;
        }
    } catch (const ResourceCapError& e) {
        err << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const ContractError& e) {
        err << "contract violation: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace ncformal
