#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "dtor/atlas.hpp"
#include "dtor/bruhat_tits.hpp"
#include "dtor/epsilon.hpp"
#include "dtor/identities.hpp"
#include "dtor/io.hpp"
#include "dtor/verify.hpp"
#include "dtor/xi.hpp"

using namespace dtor;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Opts {
    long q = 2;
    int d = 3, k = 1, kp = -1, r = 1, trials = 200, extra = 0;
    long precision = 64;
    std::uint64_t seed = 1;
    std::string out, dot, format, input, input2;
    std::string point, s, x, fn = "eps", phi = "t;1", steps, units, module, N = "T", lattices, rays, lineality;
    std::string slopes = "1";
    bool powers = false, maps = false;
};

bool log_on() {
    const char* v = std::getenv("DTOR_LOG");
    return v && *v && std::string(v) != "0";
}

void log(const std::string& msg) {
    if (log_on()) std::cerr << "dtor: " << msg << "\n";
}

void check_q(long q) {
    if (q < 2 || q > 16 || !Fq::is_prime_power(static_cast<int>(q))) throw UsageError("--q must be a prime power <= 16");
}
void check_d(int d) {
    if (d < 2 || d > 5) throw UsageError("--d must lie in [2, 5]");
}
void check_k(int k) {
    if (k < 1 || k > 3) throw UsageError("--k must lie in [1, 3]");
}
void check_precision(long p) {
    if (p < 1 || p > 256) throw UsageError("--precision must lie in [1, 256]");
}

void write(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

void emit(const Opts& o, const json& j) { write(o.out, dump(j)); }

json rows_json(const std::vector<ReportRow>& rows) {
    json a = json::array();
    for (const auto& r : rows)
        a.push_back({{"suite", r.suite}, {"case", r.case_id}, {"expected", r.expected}, {"got", r.got}, {"pass", r.pass}});
    return a;
}

int emit_report(const Opts& o, const std::vector<ReportRow>& rows) {
    if (o.format == "json")
        emit(o, json{{"rows", rows_json(rows)}, {"pass", all_pass(rows)}});
    else
        write(o.out, report_tsv(rows));
    int bad = 0;
    for (const auto& r : rows) bad += !r.pass;
    if (bad) std::cerr << "dtor: " << bad << " of " << rows.size() << " checks failed\n";
    return bad ? 1 : 0;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<ZVec> parse_zvecs(const std::string& s) {
    std::vector<ZVec> out;
    for (const auto& part : split(s, ';')) {
        ZVec v;
        for (const auto& x : parse_rational_list(part)) {
            if (x.get_den() != 1) throw UsageError("integer vector expected: " + part);
            v.push_back(x.get_num());
        }
        out.push_back(v);
    }
    return out;
}

json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    try {
        return json::parse(f);
    } catch (const json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

ModuleSpec module_spec(const Opts& o) {
    if (!o.module.empty()) return parse_module_spec(read_json(o.module));
    check_q(o.q);
    json j{{"q", o.q}};
    json phi = json::array();
    for (const auto& c : split(o.phi, ';')) phi.push_back(c);
    j["base"] = {{"phi_T", phi}};
    json st = json::array();
    auto us = split(o.units, ';');
    auto ms = split(o.steps, ',');
    if (!us.empty() && us.size() != ms.size()) throw UsageError("--units needs one entry per step");
    for (size_t i = 0; i < ms.size(); ++i) {
        json e{{"m", std::stol(ms[i])}};
        if (!us.empty()) e["unit"] = us[i];
        st.push_back(e);
    }
    j["lattice_steps"] = st;
    return parse_module_spec(j);
}

json tower_json(const Tower& tw) {
    json mods = json::array();
    for (const auto& m : tw.modules) mods.push_back(module_json(m));
    json steps = json::array();
    for (const auto& s : tw.specs)
        steps.push_back({{"m", s.m}, {"unit", s.unit.has_field() && !s.unit.is_zero() ? s.unit.str("t") : "1"}});
    return json{{"precision", tw.precision},
                {"base_rank", tw.base_rank},
                {"lattice_steps", steps},
                {"modules", mods},
                {"s_powers", qvec_json(tw.s)},
                {"class_point", qvec_json(class_point(tw).full_powers())}};
}

Simplex parse_simplex(const std::string& s) {
    Simplex S;
    for (const auto& v : parse_zvecs(s)) {
        std::vector<long> a;
        for (const auto& x : v) a.push_back(x.get_si());
        S.push_back(Lattice::diagonal(a));
    }
    if (S.empty()) throw UsageError("--lattices is empty");
    return S;
}

void need(const std::string& v, const char* flag) {
    if (v.empty()) throw UsageError(std::string(flag) + " is required");
}

}  // namespace

int main(int argc, char** argv) {
    Opts o;
    CLI::App app{"Cone decompositions, Tate quotients and boundary charts for Drinfeld-module moduli"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--out", o.out, "output file (default stdout)");
    app.add_option("--seed", o.seed, "64-bit seed for every random draw");
    app.add_option("--format", o.format, "json, tsv or dot (defaults: tsv for verify and xi eval, json otherwise)")->check(CLI::IsMember({"json", "tsv", "dot"}));

    int code = -1;
    auto qopt = [&](CLI::App* a) { a->add_option("--q", o.q, "field size, prime power <= 16"); };
    auto dopt = [&](CLI::App* a) { a->add_option("--d", o.d, "rank d, 2..5"); };
    auto kopt = [&](CLI::App* a) { a->add_option("--k", o.k, "level degree k, 1..3"); };

    // fan
    auto* fan = app.add_subcommand("fan", "fans in C_d")->require_subcommand(1);
    auto* f_up = fan->add_subcommand("sigma-upper", "Sigma^(k): the sign fan of s_1 and q^h s_j - s_i, h < k, in power coordinates");
    qopt(f_up), dopt(f_up), kopt(f_up);
    f_up->callback([&] {
        check_q(o.q), check_d(o.d), check_k(o.k);
        auto sf = sigma_upper(o.q, o.d, o.k);
        json j = fan_json(sf.fan);
        json comps = json::array();
        for (const auto& c : sf.comps) comps.push_back(c.h < 0 ? "s1" : std::to_string(c.h) + ":" + std::to_string(c.i) + ">" + std::to_string(c.j));
        j["comparisons"] = comps;
        j["signs"] = sf.signs;
        emit(o, j);
        code = 0;
    });
    auto* f_k = fan->add_subcommand("sigma-k", "Sigma_k: the images xi_k(sigma) for sigma in Sigma^(k), plain coordinates");
    qopt(f_k), dopt(f_k), kopt(f_k);
    f_k->add_flag("--maps", o.maps, "attach the matrix l with xi_k = l o pi_{k,sigma} on each source cone");
    f_k->callback([&] {
        check_q(o.q), check_d(o.d), check_k(o.k);
        emit(o, image_fan_json(sigma_k(o.q, o.d, o.k), o.maps, o.seed));
        code = 0;
    });
    auto* f_kk = fan->add_subcommand("sigma-kk", "Sigma_{k,k'}: the images xi_k(sigma') for sigma' in Sigma^(k')");
    qopt(f_kk), dopt(f_kk), kopt(f_kk);
    f_kk->add_option("--kp", o.kp, "k' with k <= k' <= 3")->required();
    f_kk->add_flag("--maps", o.maps, "attach the matrix M with xi_{k'} = M o xi_k on each image cone");
    f_kk->callback([&] {
        check_q(o.q), check_d(o.d), check_k(o.k), check_k(o.kp);
        if (o.kp < o.k) throw UsageError("--kp must be at least --k");
        emit(o, image_fan_json(sigma_kk(o.q, o.d, o.k, o.kp), o.maps, o.seed));
        code = 0;
    });
    auto* f_join = fan->add_subcommand("join", "common refinement {a cap b} of two fans given as fan JSON");
    f_join->add_option("--a", o.input, "first fan JSON")->required();
    f_join->add_option("--b", o.input2, "second fan JSON")->required();
    f_join->callback([&] {
        Fan a = fan_from_json(read_json(o.input)), b = fan_from_json(read_json(o.input2));
        if (a.ambient() != b.ambient()) throw UsageError("fans live in different dimensions");
        emit(o, fan_json(join(a, b)));
        code = 0;
    });
    auto* f_ref = fan->add_subcommand("refine", "stellar refinement of a fan to regular cones, ambient dimension <= 4");
    f_ref->add_option("--input", o.input, "fan JSON")->required();
    f_ref->callback([&] {
        Fan a = fan_from_json(read_json(o.input));
        if (a.ambient() > 4) throw UsageError("refine needs ambient dimension <= 4");
        Fan r = regular_refine(a);
        std::string why;
        bool ok = fan_validate(r, &why) && is_subdivision(r, a);
        json j = fan_json(r);
        j["valid_subdivision"] = ok;
        emit(o, j);
        if (!ok) std::cerr << "dtor: refinement check failed " << why << "\n";
        code = ok ? 0 : 1;
    });

    // xi
    auto* xi = app.add_subcommand("xi", "the piecewise-linear maps xi^d_k on C_d")->require_subcommand(1);
    auto* x_eval = xi->add_subcommand("eval", "xi^d_k at a point of the chamber 0 <= s_1 <= ... <= s_{d-1}");
    qopt(x_eval), dopt(x_eval), kopt(x_eval);
    x_eval->add_option("--point", o.point, "comma separated rationals, d-1 of them")->required();
    x_eval->add_flag("--powers", o.powers, "the point is given in power coordinates s_i^r");
    x_eval->callback([&] {
        check_q(o.q), check_d(o.d), check_k(o.k);
        QVec p = parse_rational_list(o.point);
        if (static_cast<int>(p.size()) != o.d - 1) throw UsageError("--point needs d-1 coordinates");
        if (!o.powers) {
            if (!in_chamber(p)) throw UsageError("point is outside the chamber");
            p = plain_to_powers(p);
        } else if (!in_chamber(p)) {
            throw UsageError("point is outside the chamber");
        }
        QVec y = xi_eval(o.q, o.k, p);
        if (o.format == "json")
            emit(o, json{{"q", o.q}, {"d", o.d}, {"k", o.k}, {"value", qvec_json(y)}});
        else
            write(o.out, join(y) + "\n");
        code = 0;
    });
    auto* x_lin = xi->add_subcommand("linearize", "matrices l with xi_{k'} = l o pi_{k,sigma} on each sigma in Sigma^(k), certified on rays and interior points");
    qopt(x_lin), dopt(x_lin), kopt(x_lin);
    x_lin->add_option("--kp", o.kp, "k' with 0 <= k' <= k (default k)");
    x_lin->callback([&] {
        check_q(o.q), check_d(o.d), check_k(o.k);
        int kp = o.kp < 0 ? o.k : o.kp;
        if (kp > o.k) throw UsageError("--kp must not exceed --k");
        auto sf = sigma_upper(o.q, o.d, o.k);
        json pieces = json::array();
        bool ok = true;
        for (const auto& c : sf.fan.cones()) {
            auto lin = linearize_xi(o.q, o.k, kp, c, o.seed);
            ok = ok && lin.certified;
            json p{{"cone", cone_json(c)}, {"theta", theta(o.q, o.k, c)}, {"l", qmat_json(lin.l)}, {"certified", lin.certified}};
            if (!lin.certified) p["detail"] = lin.detail;
            pieces.push_back(p);
        }
        emit(o, json{{"q", o.q}, {"d", o.d}, {"k", o.k}, {"kp", kp}, {"pieces", pieces}, {"certified", ok}});
        code = ok ? 0 : 1;
    });

    // eps
    auto* ep = app.add_subcommand("eps", "the piecewise-linear functions eps^{r,n}_s, eps_hat^{r,n}_s and delta^{r,n}")->require_subcommand(1);
    auto eps_opts = [&](CLI::App* a) {
        qopt(a);
        a->add_option("--r", o.r, "r >= 1");
        a->add_option("--s", o.s, "comma separated positive rationals")->required();
        a->add_option("--x", o.x, "argument (ignored for delta)");
        a->add_option("--fn", o.fn, "eps, hat or delta")->check(CLI::IsMember({"eps", "hat", "delta"}));
    };
    auto read_eps = [&](QVec& s, Q& x) {
        check_q(o.q);
        if (o.r < 1 || o.r > 8) throw UsageError("--r must lie in [1, 8]");
        s = parse_rational_list(o.s);
        for (const auto& v : s)
            if (v <= 0) throw UsageError("--s entries must be positive");
        if (o.fn != "delta") {
            need(o.x, "--x");
            x = parse_rational(o.x);
        }
    };
    auto* e_eval = ep->add_subcommand("eval", "value by direct summation over y in A^n");
    eps_opts(e_eval);
    e_eval->callback([&] {
        QVec s;
        Q x;
        read_eps(s, x);
        Q v = o.fn == "eps" ? eps_oracle(o.q, o.r, s, x) : o.fn == "hat" ? eps_hat_oracle(o.q, o.r, s, x) : delta_oracle(o.q, o.r, s);
        if (o.format == "json")
            emit(o, json{{"fn", o.fn}, {"value", to_string(v)}});
        else
            write(o.out, to_string(v) + "\n");
        code = 0;
    });
    auto* e_closed = ep->add_subcommand("closed", "value by composing the n = 1 closed forms, compared with direct summation");
    eps_opts(e_closed);
    e_closed->callback([&] {
        QVec s;
        Q x;
        read_eps(s, x);
        ClosedValue cv;
        Q oracle;
        if (o.fn == "eps") {
            cv = eps_closed(o.q, o.r, s, x);
            oracle = eps_oracle(o.q, o.r, s, x);
        } else if (o.fn == "hat") {
            cv = eps_hat_closed(o.q, o.r, s, x);
            oracle = eps_hat_oracle(o.q, o.r, s, x);
        } else {
            cv.value = delta(o.q, o.r, s);
            oracle = delta_oracle(o.q, o.r, s);
        }
        bool ok = cv.value == oracle;
        emit(o, json{{"fn", o.fn}, {"closed", to_string(cv.value)}, {"oracle", to_string(oracle)}, {"fallback", cv.fallback}, {"agree", ok}});
        code = ok ? 0 : 1;
    });

    // verify
    auto* ve = app.add_subcommand("verify", "identity and consistency suites, TSV report (suite, case, expected, got, pass)")->require_subcommand(1);
    auto* v_id = ve->add_subcommand("identities", "scaling, composition, hat_composition, delta_split, delta_recursion, simplex_linearity");
    qopt(v_id);
    v_id->add_option("--trials", o.trials, "points per suite");
    v_id->callback([&] {
        check_q(o.q);
        if (o.trials < 0 || o.trials > 100000) throw UsageError("--trials must lie in [0, 100000]");
        code = emit_report(o, verify_identities(o.q, o.trials, o.seed));
    });
    auto* v_tate = ve->add_subcommand("tate", "leading valuation (q^d - 1) delta(s) and z-degree q^d of Tate quotients");
    v_tate->add_option("--precision", o.precision, "t-adic precision, <= 256");
    v_tate->callback([&] {
        check_precision(o.precision);
        code = emit_report(o, verify_tate(o.precision));
    });
    auto* v_sig = ve->add_subcommand("sigk3", "c(phi, N) by xi_k against Newton polygons of phi(N), and cone membership c(phi, N) in xi_k(sigma) iff c(phi) in sigma");
    v_sig->add_option("--extra", o.extra, "random instances added to the fixed list");
    v_sig->add_option("--precision", o.precision, "t-adic precision, <= 256");
    v_sig->callback([&] {
        check_precision(o.precision);
        if (o.extra < 0 || o.extra > 200) throw UsageError("--extra must lie in [0, 200]");
        code = emit_report(o, verify_sigk3(torsion_instances(o.extra, o.seed), o.precision));
    });

    // tate
    auto* ta = app.add_subcommand("tate", "Tate quotients Y / Lambda of modules over F_q[[t]] by rank-one lattices")->require_subcommand(1);
    auto mod_opts = [&](CLI::App* a) {
        qopt(a);
        a->add_option("--module", o.module, "module descriptor JSON (overrides --q/--phi/--steps)");
        a->add_option("--phi", o.phi, "base phi(T) coefficients c_0;c_1;... as polynomials in t");
        a->add_option("--steps", o.steps, "lattice valuations m_1,m_2,... of lambda_i = u_i t^{-m_i}");
        a->add_option("--units", o.units, "units u_1;u_2;... as polynomials in t (default 1)");
        a->add_option("--precision", o.precision, "t-adic precision, <= 256");
    };
    auto* t_q = ta->add_subcommand("quotient", "phi = e o psi o e^{-1} step by step, with the points s of the combined lattice");
    mod_opts(t_q);
    t_q->callback([&] {
        check_precision(o.precision);
        auto sp = module_spec(o);
        if (sp.base.d + static_cast<int>(sp.steps.size()) > 5) throw UsageError("total rank must be <= 5");
        log("tower with " + std::to_string(sp.steps.size()) + " steps");
        emit(o, tower_json(iterate_quotient(sp.base, sp.steps, o.precision)));
        code = 0;
    });
    auto* t_t = ta->add_subcommand("torsion", "valuations of the N-torsion of the top module and c(phi, N) two ways");
    mod_opts(t_t);
    t_t->add_option("--N", o.N, "N in F_q[T], degree 1..3");
    t_t->callback([&] {
        check_precision(o.precision);
        auto sp = module_spec(o);
        if (sp.base.d + static_cast<int>(sp.steps.size()) > 5) throw UsageError("total rank must be <= 5");
        Poly N = Poly::parse(sp.base.field(), o.N);
        if (N.degree() < 1 || N.degree() > 3) throw UsageError("--N must have degree 1..3");
        auto tw = iterate_quotient(sp.base, sp.steps, o.precision);
        auto tv = torsion_valuations(tw.top(), N, o.precision);
        json j{{"N", N.str()}, {"torsion_valuations", qvec_json(tv)}};
        bool ok = true;
        if (!sp.steps.empty()) {
            auto a = class_point_N(tw, N.degree());
            auto b = class_point_N_newton(tw, N);
            ok = a.powers == b.powers;
            j["c_phi"] = qvec_json(class_point(tw).full_powers());
            j["c_phi_N_xi"] = qvec_json(a.full_powers());
            j["c_phi_N_newton"] = qvec_json(b.full_powers());
            j["agree"] = ok;
        }
        emit(o, j);
        code = ok ? 0 : 1;
    });

    // bt
    auto* bt = app.add_subcommand("bt", "diagonal simplices of the Bruhat-Tits building and their cones of norms")->require_subcommand(1);
    auto* b_s = bt->add_subcommand("simplex", "whether a set of lattice classes is a simplex, with a chain L^0 > ... > pi L^0 or a witness pair");
    qopt(b_s);
    b_s->add_option("--lattices", o.lattices, "diagonal exponents, e.g. 0,0,1;0,1,1")->required();
    b_s->callback([&] {
        check_q(o.q);
        const Fq& F = Fq::get(static_cast<int>(o.q));
        Simplex S = parse_simplex(o.lattices);
        auto res = chain_test(F, S);
        json chain = json::array();
        for (const auto& L : res.chain) chain.push_back(L.str());
        json j{{"simplex", res.simplex}, {"chain", chain}};
        if (!res.x.empty()) {
            json x = json::array(), y = json::array();
            for (const auto& v : res.x) x.push_back(v.str());
            for (const auto& v : res.y) y.push_back(v.str());
            j["witness"] = {{"x", x}, {"y", y}};
        }
        emit(o, j);
        code = 0;
    });
    auto* b_c = bt->add_subcommand("cone", "sigma_r(S), the cone spanned by the r-th power weight vectors of the members of S");
    qopt(b_c);
    b_c->add_option("--lattices", o.lattices, "diagonal exponents, e.g. 0,0,1;0,1,1")->required();
    b_c->add_option("--r", o.r, "power r >= 1");
    b_c->callback([&] {
        check_q(o.q);
        if (o.r < 1 || o.r > 8) throw UsageError("--r must lie in [1, 8]");
        emit(o, cone_json(simplex_cone_r(o.q, o.r, parse_simplex(o.lattices))));
        code = 0;
    });

    // hilbert
    auto* hb = app.add_subcommand("hilbert", "Hilbert basis of the dual monoid of a rational cone");
    hb->add_option("--rays", o.rays, "integer rays, e.g. 1,0;1,2")->required();
    hb->add_option("--lineality", o.lineality, "lineality generators");
    hb->callback([&] {
        auto rays = parse_zvecs(o.rays), lin = parse_zvecs(o.lineality);
        if (rays.empty()) throw UsageError("--rays is empty");
        int n = static_cast<int>(rays[0].size());
        for (const auto& v : rays)
            if (static_cast<int>(v.size()) != n) throw UsageError("rays of different lengths");
        for (const auto& v : lin)
            if (static_cast<int>(v.size()) != n) throw UsageError("lineality of wrong length");
        if (n > 6) throw UsageError("ambient dimension must be <= 6");
        Cone c = Cone::from_rays(n, rays, lin);
        emit(o, json{{"cone", cone_json(c)}, {"dual", cone_json(c.dual())}, {"hilbert_basis", zvecs_json(hilbert_basis(c))}});
        code = 0;
    });

    // atlas
    auto* at = app.add_subcommand("atlas", "boundary components over P^2(F_q) for d = 3, N = T, their intersection graph and chart monoids");
    qopt(at);
    at->add_option("--slopes", o.slopes, "1 = alpha_0 < alpha_1 < ... as rationals, e.g. 1,3/2");
    at->add_option("--dot", o.dot, "also write the intersection graph in DOT");
    at->callback([&] {
        check_q(o.q);
        auto sd = make_slopes(parse_rational_list(o.slopes));
        auto a = build_atlas(o.q, sd);
        if (o.format == "dot")
            write(o.out, atlas_dot(a));
        else
            emit(o, atlas_json(a));
        if (!o.dot.empty()) write(o.dot, atlas_dot(a));
        bool ok = flag_chains_are_paths(a);
        for (size_t i = 0; i < a.smooth.size(); ++i) ok = ok && a.smooth[i] == a.sf.sigma[i].is_regular();
        code = ok ? 0 : 1;
    });

    // satake-check
    auto* sc = app.add_subcommand("satake-check", "q = 2 chart: t1 t2 + t2 t3 + t3 t1 = 0 and the shape of phi(T) as a product over V - {0}");
    sc->callback([&] {
        auto r = satake_chart_check();
        bool ok = r.relation && r.torsion_form && r.z_degree == 8 && r.additive && r.invariant && r.group_order == 168;
        emit(o, json{{"relation", r.relation},
                     {"torsion_form", r.torsion_form},
                     {"z_degree", r.z_degree},
                     {"additive", r.additive},
                     {"invariant", r.invariant},
                     {"group_order", r.group_order},
                     {"coefficients", r.coefficients},
                     {"pass", ok}});
        code = ok ? 0 : 1;
    });

    auto t0 = std::chrono::steady_clock::now();
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "dtor: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "dtor: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "dtor: " << e.what() << "\n";
        return 1;
    }
    log("done in " + std::to_string(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()) + " s");
    return code < 0 ? 2 : code;
}
