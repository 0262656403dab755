// rootorbits: construct affine and finite root systems from generalized
// Cartan matrices and compute the full Coxeter-element orbit structure.

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"

#include "rootorbits/json_io.hpp"
#include "rootorbits/plot.hpp"

using namespace rootorbits;

namespace {

struct SystemOpts {
    std::string type;
    int n = 0;
    int k = 0;
    std::string matrix;
    int aff = 0;  // 1-based; 0 = default
    std::string word;
};

void add_system_options(CLI::App* cmd, SystemOpts& s, bool with_word) {
    cmd->add_option("--type", s.type, "catalog label, e.g. A1 D2 E6(1) A5(2) (see --help-labels)");
    cmd->add_option("--n", s.n, "total rank (number of simple roots)");
    cmd->add_option("--k", s.k, "cycle labeling parameter for A(1), 1 <= k <= n-1");
    cmd->add_option("--matrix", s.matrix, "Cartan matrix as JSON, or @file");
    cmd->add_option("--aff", s.aff, "affine node override (1-based)");
    if (with_word) cmd->add_option("--word", s.word, "Coxeter word, comma-separated 1-based letters");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::BadInput, "cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct ResolvedSystem {
    CartanData cd;
    std::optional<int> aff;  // 0-based
};

ResolvedSystem resolve_system(const SystemOpts& s) {
    ResolvedSystem r;
    if (!s.matrix.empty()) {
        std::string text = s.matrix[0] == '@' ? slurp(s.matrix.substr(1)) : s.matrix;
        MatrixInput in = parse_matrix_json(text);
        r.cd = parse_cartan(in.matrix);
        r.cd.label = in.label;
        r.aff = in.aff;
    } else if (!s.type.empty()) {
        r.cd = builtin_system(s.type, s.n, s.k);
    } else {
        fail(Err::BadInput, "provide --type or --matrix");
    }
    if (s.aff > 0) r.aff = s.aff - 1;
    return r;
}

std::vector<int> parse_word(const std::string& text, int n) {
    std::vector<int> w;
    if (text.empty()) {
        w.resize(n);
        std::iota(w.begin(), w.end(), 0);
        return w;
    }
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        w.push_back(std::stoi(tok) - 1);
    }
    return w;
}

IVec parse_vector(const std::string& text) {
    IVec v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        v.push_back(std::stoll(tok));
    }
    return v;
}

std::pair<Int, Int> parse_mrange(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) fail(Err::BadInput, "mrange must look like A:B");
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) fail(Err::BadInput, "cannot write file: " + out_path);
        out << text;
    }
}

std::string vec_text(const IVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string qvec_text(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

std::string roots_text(std::vector<IVec> vs, bool sorted = true) {
    if (sorted) std::sort(vs.begin(), vs.end());
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ", ";
        s += vec_text(vs[i]);
    }
    return s + "}";
}

int run_classify(const SystemOpts& sys, const std::string& format, const std::string& out) {
    ResolvedSystem rs = resolve_system(sys);
    std::string text;
    if (rs.cd.typeclass == TypeClass::affine) {
        AffineFrame fr = affine_frame(rs.cd, rs.aff);
        if (format == "json") {
            text = to_json(rs.cd, fr).dump(2) + "\n";
        } else {
            text += "typeclass: affine\n";
            if (!rs.cd.label.empty()) text += "label: " + rs.cd.label + "\n";
            text += "d: " + vec_text(rs.cd.d) + "\n";
            text += "delta: " + vec_text(fr.delta) + "\n";
            text += "aff: " + std::to_string(fr.aff + 1) + "\n";
            text += "f: " + std::to_string(fr.f) + "\n";
            text += "theta: " + vec_text(fr.theta) + "\n";
        }
    } else {
        if (format == "json") {
            text = to_json(rs.cd).dump(2) + "\n";
        } else {
            text += std::string("typeclass: ") + typeclass_name(rs.cd.typeclass) + "\n";
            if (!rs.cd.label.empty()) text += "label: " + rs.cd.label + "\n";
            text += "d: " + vec_text(rs.cd.d) + "\n";
        }
    }
    emit(text, out);
    return 0;
}

int run_orbits(const SystemOpts& sys, const std::vector<std::string>& seeds, Int M, Int kmax,
               const std::string& mrange, const std::string& format, const std::string& out) {
    ResolvedSystem rs = resolve_system(sys);
    if (rs.cd.typeclass != TypeClass::affine) fail(Err::NotAffine, "orbits requires an affine system");
    AffineFrame fr = affine_frame(rs.cd, rs.aff);
    CoxeterWord c = make_coxeter(rs.cd, parse_word(sys.word, rs.cd.n));
    GammaData gd = gamma_c(rs.cd, fr, c);
    TransversalInf tv = transversal_inf(rs.cd, c);
    UpsilonData ud = upsilon_fin(rs.cd, fr, c, gd);
    auto [mlo, mhi] = mrange.empty() ? std::pair<Int, Int>{-1, 1} : parse_mrange(mrange);
    std::vector<IVec> ft = finite_transversal(ud, fr, mlo, mhi);
    if (M <= 0) M = 4 * rs.cd.n;

    // kappa by its definition (root membership), cross-checked against the
    // component sums.
    std::vector<std::pair<IVec, Int>> kappas;
    for (const IVec& b : ud.omega) {
        Int kb = kappa_bfs(rs.cd, fr, b, kmax);
        if (kb != ud.kappa_of(b)) fail(Err::SolveFailed, "kappa routes disagree");
        kappas.emplace_back(b, kb);
    }

    std::vector<OrbitReport> reports;
    for (const std::string& stext : seeds) {
        IVec seed = parse_vector(stext);
        if ((int)seed.size() != rs.cd.n) fail(Err::BadInput, "seed length must equal the rank");
        Int h = height(seed);
        FormK K = form_K(rs.cd);
        bool imaginary = !is_zero(seed) && K.value(seed, seed) == 0;
        if (!imaginary && !is_real_root(rs.cd, seed, h < 0 ? -h : h))
            fail(Err::BadInput, "seed " + stext + " is not a root of this system");
        reports.push_back(classify_orbit(rs.cd, fr, c, gd, tv, seed, M, &ud));
    }

    std::string text;
    DualFunctional xc = x_c(rs.cd, fr, c);
    if (format == "json") {
        Json j;
        j["system"] = to_json(rs.cd, fr);
        j["word"] = word_to_json(c.order);
        j["gamma"] = to_json(gd);
        j["x_c"] = to_json(xc);
        j["nabla"] = to_json(tv);
        j["upsilon"] = to_json(ud);
        j["finite_transversal"] = to_json(ft);
        Json kj = Json::array();
        for (const auto& [b, kb] : kappas) {
            Json e;
            e["beta"] = to_json(b);
            e["kappa"] = kb;
            kj.push_back(e);
        }
        j["kappa"] = kj;
        Json sj = Json::array();
        for (const OrbitReport& rep : reports) sj.push_back(to_json(rep));
        j["seed_orbits"] = sj;
        text = j.dump(2) + "\n";
    } else {
        if (!rs.cd.label.empty()) text += "system: " + rs.cd.label + "\n";
        text += "word: ";
        for (std::size_t i = 0; i < c.order.size(); ++i)
            text += (i ? "," : "") + std::to_string(c.order[i] + 1);
        text += "\n";
        text += "gamma_c: " + qvec_text(gd.gamma) + "\n";
        text += "phi_c: " + qvec_text(gd.phi.alpha_row) + "\n";
        text += "x_c: " + qvec_text(xc.alpha_row) + "\n";
        text += "order on U_c: " + std::to_string(gd.order_on_Uc) + "\n";
        text += "nabla_out: " + roots_text(tv.out, false) + "\n";
        text += "nabla_in: " + roots_text(tv.in, false) + "\n";
        text += "omega_c: " + roots_text(ud.omega, false) + "\n";
        for (const UpsilonComponent& comp : ud.components) {
            text += "component " + roots_text(comp.chain, false) +
                    " kappa=" + std::to_string(comp.kappa) + "\n";
        }
        for (const auto& [b, kb] : kappas)
            text += "kappa" + vec_text(b) + " = " + std::to_string(kb) + "\n";
        text += "finite transversal [" + std::to_string(mlo) + ":" + std::to_string(mhi) +
                "]: " + roots_text(ft, false) + "\n";
        for (const OrbitReport& rep : reports) {
            text += "orbit of " + vec_text(rep.seed) + ": ";
            if (rep.imaginary) {
                text += "fixed (imaginary)\n";
                continue;
            }
            if (rep.kind == OrbitKind::finite) {
                text += "finite " + roots_text(rep.members, false) + "\n";
            } else {
                text += "infinite; hits nabla at power " + std::to_string(*rep.hit_power) +
                        " in " + vec_text(*rep.transversal_hit) + "\n";
            }
        }
    }
    emit(text, out);
    return 0;
}

int run_table(int mutate, const std::string& format, const std::string& out) {
    TableReport rep = regenerate_table1(mutate);
    std::string text;
    if (format == "json") {
        text = to_json(rep).dump(2) + "\n";
    } else {
        for (const TableRowDiff& r : rep.rows) {
            text += (r.match ? "[ OK ] " : "[DIFF] ") + r.label;
            if (!r.detail.empty()) text += "  " + r.detail;
            text += "\n";
        }
        text += rep.all_match() ? "table: all rows match\n" : "table: MISMATCH\n";
    }
    emit(text, out);
    return rep.all_match() ? 0 : 1;
}

int run_verify(const SystemOpts& sys, bool all_catalog, int random_words, std::uint64_t rng_seed,
               Int M, Int H, const std::string& mrange, const std::string& expect,
               const std::string& format, const std::string& out) {
    VerifyOptions opt;
    opt.M = M > 0 ? M : 12;
    if (H > 0) opt.H = H;
    if (!mrange.empty()) std::tie(opt.mlo, opt.mhi) = parse_mrange(mrange);

    struct Target {
        CartanData cd;
        std::optional<int> aff;
        std::vector<std::vector<int>> words;
    };
    std::vector<Target> targets;

    if (all_catalog) {
        for (const CatalogEntry& e : default_catalog()) {
            Target t;
            t.cd = builtin_system(e.label, e.n, e.k);
            std::vector<int> id(t.cd.n);
            std::iota(id.begin(), id.end(), 0);
            t.words.push_back(id);
            std::uint64_t seed = rng_seed;
            for (char ch : t.cd.label) seed = seed * 131 + (unsigned char)ch;
            Int factorial = 1;
            for (int i = 2; i <= t.cd.n; ++i) factorial *= i;
            if (t.cd.typeclass == TypeClass::finite && factorial <= 24) {
                // exhaust all words on small finite systems
                std::vector<int> perm = id;
                t.words.clear();
                do t.words.push_back(perm);
                while (std::next_permutation(perm.begin(), perm.end()));
            } else {
                for (auto& w : random_permutation_words(t.cd.n, random_words, seed))
                    t.words.push_back(std::move(w));
            }
            targets.push_back(std::move(t));
        }
    } else {
        ResolvedSystem rs = resolve_system(sys);
        if (!expect.empty() && expect != typeclass_name(rs.cd.typeclass)) {
            VerifyReport r;
            r.system = rs.cd.label.empty() ? "matrix" : rs.cd.label;
            r.checks.push_back({"expected_typeclass", false,
                                std::string("classified ") + typeclass_name(rs.cd.typeclass) +
                                    ", expected " + expect});
            std::string text = format == "json" ? to_json(r).dump(2) + "\n"
                                                : "[FAIL] expected_typeclass: " + r.checks[0].detail +
                                                      "\nverify: 0/1 checks passed\n";
            emit(text, out);
            return 1;
        }
        Target t;
        t.cd = rs.cd;
        t.aff = rs.aff;
        t.words.push_back(parse_word(sys.word, rs.cd.n));
        if (random_words > 0 && sys.word.empty())
            for (auto& w : random_permutation_words(rs.cd.n, random_words, rng_seed))
                t.words.push_back(std::move(w));
        targets.push_back(std::move(t));
    }

    std::vector<VerifyReport> reports;
    for (const Target& t : targets) {
        if (t.cd.typeclass == TypeClass::affine) {
            AffineFrame fr = affine_frame(t.cd, t.aff);
            for (const auto& word : t.words) {
                CoxeterWord c = make_coxeter(t.cd, word);
                reports.push_back(verify_theorem_aff(t.cd, fr, c, opt));
                reports.push_back(verify_spectral(t.cd, fr, c));
                VerifyReport speyer;
                speyer.system = t.cd.label.empty() ? "matrix" : t.cd.label;
                speyer.word = word;
                bool ok = true;
                for (int kk = 1; kk <= 10 && ok; ++kk) ok = speyer_check(t.cd, c, kk);
                speyer.checks.push_back({"speyer_reduced_up_to_10", ok, ""});
                reports.push_back(std::move(speyer));
            }
        } else if (t.cd.typeclass == TypeClass::finite) {
            for (const auto& word : t.words)
                reports.push_back(verify_theorem_fin(t.cd, make_coxeter(t.cd, word)));
        } else {
            VerifyReport r;
            r.system = t.cd.label.empty() ? "matrix" : t.cd.label;
            r.checks.push_back({"typeclass_supported", false, "indefinite type is out of scope"});
            reports.push_back(std::move(r));
        }
    }

    bool all = std::all_of(reports.begin(), reports.end(),
                           [](const VerifyReport& r) { return r.all_pass(); });
    std::string text;
    if (format == "json") {
        Json j;
        Json arr = Json::array();
        for (const VerifyReport& r : reports) arr.push_back(to_json(r));
        j["reports"] = arr;
        j["pass"] = all;
        text = j.dump(2) + "\n";
    } else {
        int done = 0, failed = 0;
        for (const VerifyReport& r : reports) {
            for (const CheckResult& c : r.checks) {
                ++done;
                if (!c.pass) {
                    ++failed;
                    text += "[FAIL] " + r.system + " word=";
                    for (std::size_t i = 0; i < r.word.size(); ++i)
                        text += (i ? "," : "") + std::to_string(r.word[i] + 1);
                    text += " " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")") + "\n";
                }
            }
        }
        text += "verify: " + std::to_string(done - failed) + "/" + std::to_string(done) +
                " checks passed\n";
    }
    emit(text, out);
    return all ? 0 : 1;
}

int run_plot(const SystemOpts& sys, Int H, const std::string& out) {
    ResolvedSystem rs = resolve_system(sys);
    if (rs.cd.typeclass != TypeClass::affine) fail(Err::NotAffine, "plot requires an affine system");
    AffineFrame fr = affine_frame(rs.cd, rs.aff);
    CoxeterWord c = make_coxeter(rs.cd, parse_word(sys.word, rs.cd.n));
    GammaData gd = gamma_c(rs.cd, fr, c);
    emit(render_plot_svg(rs.cd, fr, c, gd, H > 0 ? H : 9), out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rootorbits: Coxeter-element orbit structure of affine root systems"};
    app.require_subcommand(1);
    app.footer(
        "Catalog labels: finite A,B,C,D (with --n), E6, E7, E8, F4, G2; affine A1(=A(1)),\n"
        "B1, C1, D1, E6(1), E7(1), E8(1), F4(1), G2(1), A2 (A_{2k}(2); rank from --n),\n"
        "subscripted forms A4(2), A5(2), D3(2), ..., E6(2), D4(3).  A trailing digit on\n"
        "A-D is the parenthesized superscript: 'D2 --n 3' is D_3^(2).");

    SystemOpts sys;
    std::string format = "text", out, mrange, expect;
    Int M = 0, H = 0, kmax = 6;
    std::vector<std::string> seeds;
    bool all_catalog = false;
    int random_words = 0;
    int mutate = -1;
    std::uint64_t rng_seed = 20240101;

    CLI::App* classify = app.add_subcommand("classify", "validate and classify a Cartan matrix");
    add_system_options(classify, sys, false);
    classify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    classify->add_option("--out", out);

    CLI::App* orbits = app.add_subcommand("orbits", "transversals, Upsilon, kappa, seed orbits");
    add_system_options(orbits, sys, true);
    orbits->add_option("--seed", seeds, "orbit seed vector, e.g. 0,1,0 (repeatable)");
    orbits->add_option("--M", M, "orbit window");
    orbits->add_option("--mrange", mrange, "finite transversal slice A:B");
    orbits->add_option("--kmax", kmax, "search bound for kappa");
    orbits->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    orbits->add_option("--out", out);

    CLI::App* table = app.add_subcommand("table", "regenerate the standard-type table and diff");
    table->add_option("--mutate-golden", mutate, "corrupt one golden entry (self-test)");
    table->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    table->add_option("--out", out);

    CLI::App* verify = app.add_subcommand("verify", "run the theorem verification suites");
    add_system_options(verify, sys, true);
    verify->add_flag("--all-catalog", all_catalog, "verify every catalog system");
    verify->add_option("--words", random_words, "random Coxeter words per system (default 20)");
    verify->add_option("--rng-seed", rng_seed, "seed for the word sampler");
    verify->add_option("--M", M, "chain window (default 12)");
    verify->add_option("--height", H, "enumeration height bound (default 3 height(delta) + 3)");
    verify->add_option("--mrange", mrange, "finite transversal slice (default -3:3)");
    verify->add_option("--expect", expect, "fail unless the system classifies as this typeclass")
        ->check(CLI::IsMember({"finite", "affine"}));
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out);

    CLI::App* plot = app.add_subcommand("plot", "stereographic SVG of positive roots (rank 3)");
    add_system_options(plot, sys, true);
    plot->add_option("--height", H, "plot height bound (default 9)");
    plot->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(classify)) return run_classify(sys, format, out);
        if (app.got_subcommand(orbits))
            return run_orbits(sys, seeds, M, kmax, mrange, format, out);
        if (app.got_subcommand(table)) return run_table(mutate, format, out);
        if (app.got_subcommand(verify))
            return run_verify(sys, all_catalog, random_words > 0 ? random_words : 20, rng_seed, M,
                              H, mrange, expect, format, out);
        if (app.got_subcommand(plot)) return run_plot(sys, H, out);
    } catch (const RootError& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case Err::NotGCM:
            case Err::NotSymmetrizable:
            case Err::UnknownLabel:
            case Err::RankOutOfRange:
            case Err::BadInput:
            case Err::NotPermutation:
                return 2;
            default:
                return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
