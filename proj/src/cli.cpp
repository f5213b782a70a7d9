#include "polyerg/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polyerg/averages.hpp"
#include "polyerg/classify.hpp"
#include "polyerg/congruence.hpp"
#include "polyerg/correlation.hpp"
#include "polyerg/counterexample.hpp"
#include "polyerg/extremal.hpp"
#include "polyerg/poly_parse.hpp"
#include "polyerg/report.hpp"

namespace polyerg {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, sep)) out.push_back(tok);
    return out;
}

PolyFamily parse_family(const std::string& s) {
    std::vector<IntPolynomial> ps;
    for (const auto& part : split(s, ',')) ps.push_back(parse_polynomial(part));
    return PolyFamily(std::move(ps));
}

std::vector<Character> parse_chars(const std::string& s, std::size_t dim) {
    std::vector<Character> out;
    for (const auto& member : split(s, ';')) {
        Character chi;
        for (const auto& f : split(member, ',')) chi.frequency.push_back(Int(f));
        if (chi.frequency.size() != dim)
            throw ArgumentError("character frequency length must equal the map dimension");
        out.push_back(std::move(chi));
    }
    return out;
}

std::vector<double> parse_point(const std::string& s) {
    std::vector<double> out;
    for (const auto& part : split(s, ',')) out.push_back(std::stod(part));
    return out;
}

BoxSet parse_intervals_1d(const std::string& s) {
    std::vector<Box> boxes;
    for (const auto& part : split(s, ',')) {
        auto lohi = split(part, ':');
        if (lohi.size() != 2) throw ArgumentError("interval must be lo:hi, got " + part);
        Rat lo(lohi[0]), hi(lohi[1]);
        lo.canonicalize();
        hi.canonicalize();
        boxes.push_back(Box{{lo}, {hi}});
    }
    return BoxSet(1, std::move(boxes));
}

UnipotentAffineMap resolve_map(const std::string& preset, const std::string& config_path) {
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw ArgumentError("cannot open config file: " + config_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_map_config(buf.str());
    }
    if (!preset.empty()) return map_from_preset(preset);
    throw ArgumentError("either --map preset or --config file is required");
}

nlohmann::json witness_json(const FamilyWitness& w) {
    nlohmann::json j;
    j["p"] = w.p.str();
    j["k"] = w.k.get_str();
    j["l"] = w.l.get_str();
    j["m"] = w.m.get_str();
    j["r"] = w.r.get_str();
    j["permutation"] = w.permutation;
    j["integer_certified"] = w.integer_certified;
    return j;
}

nlohmann::json verdict_json(const CongruenceVerdict& v) {
    nlohmann::json j;
    j["status"] = to_string(v.status);
    if (v.witness_modulus) j["witness_modulus"] = v.witness_modulus->get_str();
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& [q, c] : v.certificates) {
        nlohmann::json cj;
        cj["prime"] = q.get_str();
        cj["base_root"] = c.base_root.get_str();
        cj["valuation_f"] = c.valuation_f == kValInf ? nlohmann::json("inf") : nlohmann::json(c.valuation_f);
        cj["valuation_df"] = c.valuation_df == kValInf ? nlohmann::json("inf") : nlohmann::json(c.valuation_df);
        cj["lifts_forever"] = c.lifts_forever;
        cj["level"] = c.level;
        certs.push_back(cj);
    }
    j["certificates"] = certs;
    nlohmann::json inc = nlohmann::json::array();
    for (const auto& q : v.inconclusive_primes) inc.push_back(q.get_str());
    j["inconclusive_primes"] = inc;
    j["checked_prime_bound"] = v.checked_prime_bound.get_str();
    j["checked_exponent_cap"] = v.checked_exponent_cap;
    return j;
}

void emit(const Report& rep, const std::string& out_path, std::ostream& out) {
    std::string text = rep.to_json().dump(2);
    if (out_path.empty()) {
        out << text << "\n";
    } else {
        std::ofstream f(out_path);
        f << text << "\n";
    }
}

nlohmann::json classify_json(const PolyFamily& fam) {
    nlohmann::json res;
    res["weyl_complexity"] = weyl_complexity_3(fam).value;
    FamilyType ty = detect_family_type(fam);
    res["family_type"] = to_string(ty.tag);
    res["witness"] = ty.witness ? witness_json(*ty.witness) : nlohmann::json(nullptr);
    res["smallest_factor"] = smallest_factor(fam).str();
    bool zero_consts = true;
    for (const auto& p : fam.members()) zero_consts &= p.constant_term() == 0;
    res["lower_bound_exceptional"] =
        zero_consts ? nlohmann::json(lower_bound_exceptional(fam)) : nlohmann::json(nullptr);
    auto sol = solve_e12_system(fam);
    if (sol) {
        nlohmann::json sj = nlohmann::json::array();
        for (const auto& x : sol->v) sj.push_back(x.get_str());
        res["e12_solution"] = sj;
    } else {
        res["e12_solution"] = nullptr;
    }
    return res;
}

struct GalleryStatus {
    int failures = 0;
    nlohmann::json rows = nlohmann::json::array();

    void check(const std::string& name, const nlohmann::json& got, const nlohmann::json& want) {
        bool ok = got == want;
        failures += ok ? 0 : 1;
        rows.push_back({{"case", name}, {"expected", want}, {"got", got}, {"pass", ok}});
    }
};

nlohmann::json run_gallery(int& failures) {
    GalleryStatus g;

    auto classify_row = [&](const std::string& name, const std::string& fam_text,
                            const std::string& factor, int weyl) {
        PolyFamily fam = parse_family(fam_text);
        nlohmann::json got = {{"smallest_factor", smallest_factor(fam).str()},
                              {"weyl_complexity", weyl_complexity_3(fam).value}};
        g.check(name, got, {{"smallest_factor", factor}, {"weyl_complexity", weyl}});
    };
    classify_row("a: {n, n^2, n^3}", "n,n^2,n^3", "KRat", 1);
    classify_row("b: {n, n^2, n^2+n}", "n,n^2,n^2+n", "Kronecker", 2);
    classify_row("c: {n, 2n, n^3}", "n,2*n,n^3", "Kronecker", 2);
    classify_row("d: {n, 2n, n^2}", "n,2*n,n^2", "Affine2", 3);
    classify_row("e: {n, 2n, 3n}", "n,2*n,3*n", "Nil2", 3);
    classify_row("e': {n^2, 2n^2, 3n^2}", "n^2,2*n^2,3*n^2", "Nil2", 3);

    auto congruence_row = [&](const std::string& name, const std::string& poly, const std::string& status,
                              const std::string& witness) {
        CongruenceVerdict v = intersective_verdict(parse_polynomial(poly), Int(100), 12);
        nlohmann::json got = {{"status", to_string(v.status)},
                              {"witness", v.witness_modulus ? v.witness_modulus->get_str() : ""}};
        g.check(name, got, {{"status", status}, {"witness", witness}});
    };
    congruence_row("congruence: (n^2-13)(n^2-17)(n^2-221)", "(n^2-13)*(n^2-17)*(n^2-221)",
                   "CertifiedSolvable", "");
    congruence_row("congruence: (n^3-19)(n^2+n+1)", "(n^3-19)*(n^2+n+1)", "CertifiedSolvable", "");
    congruence_row("congruence: n^2-2", "n^2-2", "UnsolvableWitness", "4");

    {
        UnipotentAffineMap T = map_from_preset("rotation:sqrt2");
        PolyFamily fam = parse_family("n,n^2,n^3");
        std::vector<Character> chars = parse_chars("1;1;1", 1);
        std::complex<double> emp = empirical_multiple_average(T, fam, chars, {0.0}, 0, 1'000'000);
        std::complex<double> ana = analytic_multiple_limit(T, fam, chars, exact_point({0.0}));
        bool ok = std::abs(emp - ana) < 0.02;
        g.failures += ok ? 0 : 1;
        g.rows.push_back({{"case", "limit: rotation sqrt2, {n,n^2,n^3}"},
                          {"empirical_abs", std::abs(emp)},
                          {"analytic_abs", std::abs(ana)},
                          {"tolerance", 0.02},
                          {"pass", ok}});
    }

    failures = g.failures;
    nlohmann::json res;
    res["cases"] = g.rows;
    res["failures"] = g.failures;
    return res;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"polyerg: classification, congruence and torus-dynamics laboratory for polynomial families"};
    app.require_subcommand(1);

    std::string out_path, csv_path, seed_flag;
    app.add_option("--out", out_path, "write the JSON report to this path instead of stdout");
    app.add_option("--seed", seed_flag, "RNG seed (overrides POLYERG_SEED)");

    // classify
    auto* classify = app.add_subcommand("classify", "Weyl complexity, family type and smallest factor");
    std::vector<std::string> classify_polys;
    classify->add_option("polys", classify_polys, "three polynomial expressions in n")->expected(3);

    // congruence
    auto* congash = app.add_subcommand("congruence", "per-prime Hensel certification of congruence solvability");
    std::vector<std::string> cong_polys;
    long prime_bound = 100, exp_cap = 12;
    bool joint = false;
    congash->add_option("polys", cong_polys, "one polynomial, or three with --joint")->expected(1, 3);
    congash->add_option("--prime-bound", prime_bound, "certify all primes up to this bound");
    congash->add_option("--exp-cap", exp_cap, "lifting depth cap per prime");
    congash->add_flag("--joint", joint, "simultaneous congruence for three polynomials");

    // shared simulation options
    std::string map_preset, config_path, family_text, chars_text, x0_text = "0";
    long from_n = 0, to_n = 1'000'000;
    auto add_sim_opts = [&](CLI::App* cmd) {
        cmd->add_option("--map", map_preset, "map preset: rotation:<sym>[,<sym>...] or skew2:<sym>");
        cmd->add_option("--config", config_path, "map description file (see README)");
        cmd->add_option("--family", family_text, "comma-separated polynomials, e.g. n,2*n,n^2");
        cmd->add_option("--chars", chars_text, "character frequencies, members split by ';', coords by ','");
        cmd->add_option("--x0", x0_text, "initial point, comma-separated coordinates");
    };

    auto* simulate = app.add_subcommand("simulate", "empirical vs analytic character averages, CSV time series");
    add_sim_opts(simulate);
    simulate->add_option("--from", from_n, "first n");
    simulate->add_option("--to", to_n, "one past last n");
    simulate->add_option("--csv", csv_path, "CSV output path for the checkpoint series");

    auto* verify = app.add_subcommand("verify-limit", "check |empirical - analytic| against a tolerance");
    double tol = 0.02;
    add_sim_opts(verify);
    verify->add_option("--from", from_n, "first n");
    verify->add_option("--to", to_n, "one past last n");
    verify->add_option("--tol", tol, "absolute tolerance");

    auto* restricted = app.add_subcommand("restricted", "correlation averages over the return-time set S_delta");
    std::string a_text = "0:1/5", q1_text = "n", q2_text = "n", delta_text = "1/100";
    long big_n = 1'000'000;
    restricted->add_option("--map", map_preset, "rotation preset");
    restricted->add_option("--config", config_path, "map description file");
    restricted->add_option("--A", a_text, "union of intervals lo:hi, comma-separated");
    restricted->add_option("--family", family_text, "shift polynomials");
    restricted->add_option("--q1", q1_text, "first window polynomial");
    restricted->add_option("--q2", q2_text, "second window polynomial");
    restricted->add_option("--delta", delta_text, "window radius (rational)");
    restricted->add_option("--N", big_n, "scan bound");

    auto* weighted = app.add_subcommand("weighted", "step-weighted character averages against the product formula");
    std::string h_text = "1/4:3/4", beta_text = "sqrt2";
    add_sim_opts(weighted);
    weighted->add_option("--h", h_text, "indicator step lo:hi, or 'one'");
    weighted->add_option("--beta", beta_text, "weight rotation (symbolic)");
    weighted->add_option("--N", big_n, "average length");

    auto* extremal = app.add_subcommand("extremal", "solution-free sets: construction, search, type estimate");
    std::string eq_text;
    long ext_n = 0, behrend_n = 0;
    std::string mode_text = "exact", nlist_text;
    extremal->add_option("--equation", eq_text, "coefficients, e.g. 1,8,-6,-3");
    extremal->add_option("--N", ext_n, "range bound");
    extremal->add_option("--mode", mode_text, "exact or greedy");
    extremal->add_option("--behrend", behrend_n, "emit the progression-free construction for this N");
    extremal->add_option("--type-estimate", nlist_text, "comma-separated N list for the exponent fit");

    auto* counter = app.add_subcommand("counterexample", "correlation bound chain for the conditional constructions");
    std::string which = "i";
    long ce_n = 32, ce_nmax = 100;
    double ce_delta = 0.5;
    std::string ce_mode = "exact";
    counter->add_option("--which", which, "construction: i or ii");
    counter->add_option("--N", ce_n, "Lambda range bound");
    counter->add_option("--n-max", ce_nmax, "check the chain for n = 1..n_max");
    counter->add_option("--delta", ce_delta, "exponent parameter delta in (0,1)");
    counter->add_option("--mode", ce_mode, "Lambda search mode: exact or greedy");

    auto* gallery = app.add_subcommand("gallery", "regression gallery of the worked examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            std::ostringstream help;
            (void)app.exit(e, help, help);
            out << help.str();
            return 0;
        }
        std::ostringstream help;
        (void)app.exit(e, help, help);
        err << help.str();
        return 2;
    }

    Report rep;
    rep.config.set("tool_version", kToolVersion);
    auto started = std::chrono::steady_clock::now();
    int exit_code = 0;

    try {
        unsigned long seed = resolve_seed(seed_flag);
        rep.config.set("seed", std::to_string(seed));

        if (*classify) {
            rep.subcommand = "classify";
            for (std::size_t i = 0; i < classify_polys.size(); ++i)
                rep.config.set("p" + std::to_string(i + 1), classify_polys[i]);
            PolyFamily fam(
                {parse_polynomial(classify_polys[0]), parse_polynomial(classify_polys[1]), parse_polynomial(classify_polys[2])});
            rep.result = classify_json(fam);
        } else if (*congash) {
            rep.subcommand = "congruence";
            rep.config.set("prime_bound", std::to_string(prime_bound));
            rep.config.set("exp_cap", std::to_string(exp_cap));
            for (std::size_t i = 0; i < cong_polys.size(); ++i)
                rep.config.set("p" + std::to_string(i + 1), cong_polys[i]);
            if (joint || cong_polys.size() == 3) {
                if (cong_polys.size() != 3) throw ArgumentError("--joint requires exactly three polynomials");
                PolyFamily fam({parse_polynomial(cong_polys[0]), parse_polynomial(cong_polys[1]),
                                parse_polynomial(cong_polys[2])});
                rep.result = verdict_json(joint_verdict(fam, Int(prime_bound), exp_cap));
            } else {
                rep.result = verdict_json(intersective_verdict(parse_polynomial(cong_polys[0]), Int(prime_bound), exp_cap));
            }
        } else if (*simulate || *verify) {
            rep.subcommand = *simulate ? "simulate" : "verify-limit";
            UnipotentAffineMap T = resolve_map(map_preset, config_path);
            PolyFamily fam = parse_family(family_text);
            std::vector<Character> chars = parse_chars(chars_text, T.dim);
            std::vector<double> x0 = parse_point(x0_text);
            if (x0.size() != T.dim) throw ArgumentError("--x0 must have one coordinate per map dimension");
            rep.config.set("map", map_preset.empty() ? "config:" + config_path : map_preset);
            rep.config.set("family", family_text);
            rep.config.set("chars", chars_text);
            rep.config.set("x0", x0_text);
            rep.config.set("from", std::to_string(from_n));
            rep.config.set("to", std::to_string(to_n));

            std::complex<double> ana = analytic_multiple_limit(T, fam, chars, exact_point(x0));

            if (*simulate) {
                std::vector<long> checkpoints;
                for (long n = std::max(from_n + 16, 16L); n < to_n; n *= 4) checkpoints.push_back(n);
                checkpoints.push_back(to_n);
                std::ostringstream csv;
                csv << "n_or_N,empirical_re,empirical_im,analytic_re,analytic_im,abs_error\n";
                std::complex<double> emp{0, 0};
                for (long n : checkpoints) {
                    emp = empirical_multiple_average(T, fam, chars, x0, from_n, n);
                    csv << n << "," << format_sig12(emp.real()) << "," << format_sig12(emp.imag()) << ","
                        << format_sig12(ana.real()) << "," << format_sig12(ana.imag()) << ","
                        << format_sig12(std::abs(emp - ana)) << "\n";
                }
                if (!csv_path.empty()) {
                    std::ofstream f(csv_path);
                    f << csv.str();
                } else {
                    rep.result["csv"] = csv.str();
                }
                rep.result["empirical_re"] = prov_value(emp.real(), empirical_tag(to_n, seed));
                rep.result["empirical_im"] = prov_value(emp.imag(), empirical_tag(to_n, seed));
                rep.result["analytic_re"] = prov_value(ana.real(), "analytic");
                rep.result["analytic_im"] = prov_value(ana.imag(), "analytic");
            } else {
                std::complex<double> emp = empirical_multiple_average(T, fam, chars, x0, from_n, to_n);
                double errv = std::abs(emp - ana);
                rep.config.set("tol", format_sig12(tol));
                rep.result["empirical_re"] = prov_value(emp.real(), empirical_tag(to_n, seed));
                rep.result["empirical_im"] = prov_value(emp.imag(), empirical_tag(to_n, seed));
                rep.result["analytic_re"] = prov_value(ana.real(), "analytic");
                rep.result["analytic_im"] = prov_value(ana.imag(), "analytic");
                rep.result["abs_error"] = errv;
                rep.result["tolerance"] = tol;
                bool pass = errv <= tol;
                rep.result["pass"] = pass;
                if (!pass) exit_code = 3;
            }
        } else if (*restricted) {
            rep.subcommand = "restricted";
            UnipotentAffineMap T = resolve_map(map_preset, config_path);
            PolyFamily fam = parse_family(family_text);
            BoxSet A = parse_intervals_1d(a_text);
            Rat delta(delta_text);
            delta.canonicalize();
            rep.config.set("map", map_preset.empty() ? "config:" + config_path : map_preset);
            rep.config.set("A", a_text);
            rep.config.set("family", family_text);
            rep.config.set("q1", q1_text);
            rep.config.set("q2", q2_text);
            rep.config.set("delta", delta_text);
            rep.config.set("N", std::to_string(big_n));
            RestrictedAverage ra = restricted_average(T, A, fam, parse_polynomial(q1_text),
                                                      parse_polynomial(q2_text), delta, big_n);
            rep.result["has_samples"] = ra.has_samples;
            rep.result["sample_count"] = ra.sample_count;
            rep.result["average"] = prov_value(ra.average, "exact per-term, set scan " + empirical_tag(big_n, seed));
            rep.result["mu_A"] = prov_value(ra.mu_A, "exact");
        } else if (*weighted) {
            rep.subcommand = "weighted";
            UnipotentAffineMap T = resolve_map(map_preset, config_path);
            PolyFamily fam = parse_family(family_text);
            std::vector<Character> chars = parse_chars(chars_text, T.dim);
            std::vector<double> x0 = parse_point(x0_text);
            SymbolicReal beta = parse_symbolic(beta_text);
            StepFunction h;
            if (h_text == "one") {
                h = StepFunction::one();
            } else {
                auto lohi = split(h_text, ':');
                if (lohi.size() != 2) throw ArgumentError("--h must be lo:hi or 'one'");
                Rat lo(lohi[0]), hi(lohi[1]);
                lo.canonicalize();
                hi.canonicalize();
                h = StepFunction::indicator(lo, hi);
            }
            rep.config.set("map", map_preset.empty() ? "config:" + config_path : map_preset);
            rep.config.set("family", family_text);
            rep.config.set("chars", chars_text);
            rep.config.set("h", h_text);
            rep.config.set("beta", beta_text);
            rep.config.set("N", std::to_string(big_n));
            WeightedAverageResult wr = weighted_average(T, fam, chars, h, beta, x0, big_n);
            rep.result["weighted_re"] = prov_value(wr.weighted.real(), empirical_tag(big_n, seed));
            rep.result["weighted_im"] = prov_value(wr.weighted.imag(), empirical_tag(big_n, seed));
            rep.result["unweighted_re"] = prov_value(wr.unweighted.real(), empirical_tag(big_n, seed));
            rep.result["unweighted_im"] = prov_value(wr.unweighted.imag(), empirical_tag(big_n, seed));
            rep.result["h_integral"] = wr.h_integral;
            rep.result["product_re"] = wr.h_integral * wr.unweighted.real();
            rep.result["product_im"] = wr.h_integral * wr.unweighted.imag();
            rep.result["factorization_hypothesis_met"] = wr.factorization_hypothesis_met;
            if (!wr.factorization_hypothesis_met)
                rep.result["warning"] = "family is not {p, 2p, ..., kp} with deg p > 1; product comparison not implied";
        } else if (*extremal) {
            rep.subcommand = "extremal";
            if (behrend_n > 0) {
                rep.config.set("behrend", std::to_string(behrend_n));
                SolutionFreeSet s = behrend_set(behrend_n);
                rep.result["N"] = s.N;
                rep.result["size"] = s.elements.size();
                rep.result["elements"] = s.elements;
                rep.result["verified"] = s.verified;
            } else if (!nlist_text.empty()) {
                if (eq_text.empty()) throw ArgumentError("--type-estimate requires --equation");
                rep.config.set("equation", eq_text);
                rep.config.set("N_list", nlist_text);
                std::vector<long> ns;
                for (const auto& t : split(nlist_text, ',')) ns.push_back(std::stol(t));
                std::vector<long> coeffs;
                for (const auto& t : split(eq_text, ',')) coeffs.push_back(std::stol(t));
                TypeEstimate te = type_estimate(LinearEquation(coeffs), ns,
                                                mode_text == "greedy" ? SearchMode::Greedy : SearchMode::Exact);
                nlohmann::json samples = nlohmann::json::array();
                for (const auto& s : te.samples)
                    samples.push_back({{"N", s.N}, {"best_size", s.best_size}, {"exact", s.exact}});
                rep.result["samples"] = samples;
                rep.result["fitted_exponent"] =
                    te.fitted_exponent ? nlohmann::json(*te.fitted_exponent) : nlohmann::json(nullptr);
                rep.result["label"] = "empirical lower estimate of the equation type";
            } else {
                if (eq_text.empty() || ext_n < 1) throw ArgumentError("extremal requires --equation and --N");
                rep.config.set("equation", eq_text);
                rep.config.set("N", std::to_string(ext_n));
                rep.config.set("mode", mode_text);
                std::vector<long> coeffs;
                for (const auto& t : split(eq_text, ',')) coeffs.push_back(std::stol(t));
                SolutionFreeSet s = max_solution_free(LinearEquation(coeffs), ext_n,
                                                      mode_text == "greedy" ? SearchMode::Greedy : SearchMode::Exact);
                rep.result["N"] = s.N;
                rep.result["size"] = s.elements.size();
                rep.result["elements"] = s.elements;
                rep.result["verified"] = s.verified;
                rep.result["certified_maximum"] = s.certified_maximum;
            }
        } else if (*counter) {
            rep.subcommand = "counterexample";
            rep.config.set("which", which);
            rep.config.set("N", std::to_string(ce_n));
            rep.config.set("n_max", std::to_string(ce_nmax));
            rep.config.set("delta", format_sig12(ce_delta));
            rep.config.set("mode", ce_mode);
            SearchMode mode = ce_mode == "greedy" ? SearchMode::Greedy : SearchMode::Exact;
            SymbolicReal alpha = SymbolicReal::sqrt2();
            CounterexampleReport cr;
            if (which == "i") {
                SolutionFreeSet lam = max_solution_free(LinearEquation({1, 8, -6, -3}), ce_n, mode);
                cr = construct_counterexample_i(lam, alpha, exponent_from_delta(ce_delta, false), ce_nmax);
            } else if (which == "ii") {
                SolutionFreeSet lam = max_solution_free(LinearEquation({2, 1, 1, -2, -2}), ce_n, mode);
                // intersect with the progression-free requirement by greedy refinement
                std::vector<long> refined;
                for (long v : lam.elements)
                    if (!insertion_creates_solution(refined, v, three_ap_equation())) refined.push_back(v);
                lam.elements = refined;
                lam.verified = verify_solution_free(lam.elements, lam.equation);
                lam.certified_maximum = false;
                cr = construct_counterexample_ii(lam, alpha, exponent_from_delta(ce_delta, true), ce_nmax);
            } else {
                throw ArgumentError("--which must be i or ii");
            }
            rep.result["Lambda"] = cr.lambda;
            rep.result["mu_A"] = prov_exact(cr.mu_A);
            rep.result["c_or_d"] = cr.exponent;
            rep.result["correlation_bound"] = prov_exact(cr.correlation_bound);
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& r : cr.rows)
                rows.push_back({{"n", r.n},
                                {"correlation", prov_exact(r.correlation)},
                                {"within_bound", r.within_bound},
                                {"mu_pow", r.mu_pow}});
            rep.result["per_n_correlations"] = rows;
            rep.result["bound_satisfied"] = cr.all_bounds_hold;
            if (!cr.all_bounds_hold) exit_code = 3;
        } else if (*gallery) {
            rep.subcommand = "gallery";
            int failures = 0;
            rep.result = run_gallery(failures);
            if (failures > 0) exit_code = 3;
        }
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    emit(rep, out_path, out);
    return exit_code;
}

}  // namespace polyerg
