// Command-line surface: exact expansions, operator application, and the
// congruence-theorem verifiers, with machine-readable JSON output.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "carlitz/fixtures.hpp"
#include "carlitz/json_io.hpp"
#include "carlitz/parallel.hpp"
#include "carlitz/symfunc.hpp"
#include "carlitz/verify.hpp"

using namespace carlitz;

namespace {

struct RunConfig {
    std::uint32_t q = 0;
    std::uint32_t p_char = 0;
    std::uint32_t ext_deg = 0;
    std::string fq_modulus;
    std::string pi_text;
    int prec = 10;
    std::uint64_t seed = 1;
    std::string format = "text";
    std::string out;
    int threads = 0;
};

std::vector<std::uint32_t> parse_digit_list(const std::string& s) {
    std::vector<std::uint32_t> digits;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) digits.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    return digits;
}

Field make_field(const RunConfig& cfg) {
    std::uint32_t p = cfg.p_char, e = cfg.ext_deg;
    if (cfg.q != 0) {
        std::uint32_t q = cfg.q;
        std::uint32_t base = 2;
        while (base <= q && q % base != 0) ++base;
        if (base > q) throw std::invalid_argument("q must be a prime power");
        p = base;
        e = 0;
        std::uint32_t acc = 1;
        while (acc < q) {
            acc *= p;
            ++e;
        }
        if (acc != q) throw std::invalid_argument("q must be a prime power");
        if (cfg.p_char != 0 && cfg.p_char != p)
            throw std::invalid_argument("--q and --p-char disagree");
    }
    if (p == 0) throw std::invalid_argument("specify --q or --p-char/--ext-deg");
    if (e == 0) e = 1;
    if (!cfg.fq_modulus.empty()) return Field(p, e, parse_digit_list(cfg.fq_modulus));
    return Field(p, e);
}

Poly require_pi(const Field& F, const RunConfig& cfg) {
    if (cfg.pi_text.empty()) throw std::invalid_argument("this command needs --pi");
    Poly pi = poly_parse(F, cfg.pi_text);
    if (!poly_is_monic(pi) || !poly_is_irreducible(F, pi))
        throw std::invalid_argument("--pi must be monic irreducible");
    return pi;
}

void emit(const RunConfig& cfg, const std::string& text, const Json& j) {
    std::string payload = cfg.format == "json" ? j.dump(2) + "\n" : text + "\n";
    if (cfg.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
        f << payload;
    }
}

Json report_to_json(const CheckReport& rep) {
    Json cases = Json::array();
    for (const CheckCase& c : rep.cases) {
        Json jc;
        jc["check"] = c.name;
        Json params;
        for (const auto& [k, v] : c.params) {
            if (k == "q" || k == "pi")
                jc[k] = v;
            else
                params[k] = v;
        }
        jc["params"] = params;
        if (!c.valuation.empty()) jc["valuation"] = c.valuation;
        if (!c.bound.empty()) jc["bound"] = c.bound;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        jc["verdict"] = verdict_str(c.verdict);
        cases.push_back(jc);
    }
    Json out;
    out["check"] = rep.check;
    out["cases"] = cases;
    out["verdict"] = verdict_str(rep.overall);
    return out;
}

std::string report_to_text(const CheckReport& rep) {
    std::string s = "check " + rep.check + ": " + verdict_str(rep.overall);
    for (const CheckCase& c : rep.cases) {
        s += "\n  " + c.name;
        for (const auto& [k, v] : c.params) s += " " + k + "=" + v;
        if (!c.valuation.empty()) s += " valuation=" + c.valuation;
        if (!c.bound.empty()) s += " bound=" + c.bound;
        s += " -> " + verdict_str(c.verdict);
        if (!c.detail.empty()) s += " (" + c.detail + ")";
    }
    return s;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    if (text != "0" && !text.empty()) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, '+')) parts.push_back(std::stoi(item));
        std::sort(parts.begin(), parts.end(), std::greater<int>());
    }
    return Partition(parts);
}

int run_expand(const RunConfig& cfg, const std::string& target, const std::string& a_text, int k,
               const std::string& mu_text) {
    Limits lim = limits_from_env();
    if (target == "m-in-e" || target == "e-in-m") {
        // transition rows, keyed by partition strings
        Partition mu = parse_partition(mu_text);
        TransitionRow row =
            target == "m-in-e" ? expand_m_in_e(mu, lim) : expand_e_in_m(mu, lim);
        Json j;
        j["source"] = mu.str();
        j["basis"] = target;
        Json coeffs;
        for (const auto& [nu, c] : row.coeffs) coeffs[nu.str()] = c.str();
        j["coeffs"] = coeffs;
        std::string text = (target == "m-in-e" ? "m_{" : "e_{") + mu.str() + "} =";
        for (const auto& [nu, c] : row.coeffs)
            text += " + " + c.str() + "*" + (target == "m-in-e" ? "e" : "m") + "_{" + nu.str() + "}";
        emit(cfg, text, j);
        return 0;
    }
    Field F = make_field(cfg);
    KRing kring(F, CoeffTag::rational);
    if (target == "carlitz") {
        Poly a = poly_parse(F, a_text);
        AdditivePoly rho = carlitz_action(F, a);
        Json j;
        j["q"] = F.q();
        j["a"] = poly_to_json(F, a);
        Json beta = Json::array();
        for (const Poly& b : rho.beta) beta.push_back(poly_to_json(F, b));
        j["beta"] = beta;
        emit(cfg, additive_to_string(F, rho), j);
        return 0;
    }
    if (target == "inv-cyclotomic") {
        Poly a = a_text.empty() ? require_pi(F, cfg) : poly_parse(F, a_text);
        PolyInX f = inverse_cyclotomic_of(F, a);
        Json j;
        j["q"] = F.q();
        j["a"] = poly_to_json(F, a);
        Json coeffs = Json::array();
        for (const Poly& c : f) coeffs.push_back(poly_to_json(F, c));
        j["coeffs"] = coeffs;
        emit(cfg, poly_in_x_to_string(F, f, "X"), j);
        return 0;
    }
    if (target == "u-a") {
        Poly a = poly_parse(F, a_text);
        Series<KRing> s = u_sub_a(kring, a, cfg.prec);
        emit(cfg, series_to_text(s), series_to_json(s));
        return 0;
    }
    if (target == "false-e") {
        Series<KRing> s = false_eisenstein(kring, cfg.prec);
        Json j = series_to_json(s);
        j["provenance"] = {{"construction", "sum over monic a of a*u_a (weight 2, type 1)"},
                           {"literature_flag", true}};
        emit(cfg, series_to_text(s), j);
        return 0;
    }
    if (target == "g-k") {
        FullForm<KRing> g = eisenstein_gk(F, k, cfg.prec, lim);
        Series<KRing> s = series_to_rational(g.series);
        Json j = series_to_json(s);
        j["provenance"] = {{"construction", "Goss Eisenstein series, weight q^k-1, type 0, k=" +
                                                std::to_string(k)},
                           {"literature_flag", false}};
        emit(cfg, series_to_text(s), j);
        return 0;
    }
    throw std::invalid_argument("unknown expand target: " + target);
}

PairForm<KRing> pair_from_json(const Field& F, const Json& j) {
    Series<KRing> inf = series_from_json_in(F, j.at("at_inf"));
    Series<KRing> zero = series_from_json_in(F, j.at("at_zero"));
    return PairForm<KRing>{j.at("k").get<int>(), j.at("l").get<int>(),
                           Scaled<KRing>{j.at("at_inf").value("scale_e", 0), inf},
                           Scaled<KRing>{j.at("at_zero").value("scale_e", 0), zero}};
}

int run_op(const RunConfig& cfg, const std::string& op, const std::string& in_file, int prec_out,
           int alpha) {
    Field F = make_field(cfg);
    Limits lim = limits_from_env();
    std::ifstream in(in_file);
    if (!in) throw std::invalid_argument("cannot open input series file " + in_file);
    Json j = Json::parse(in);
    Poly pi = require_pi(F, cfg);
    PrimeModulus pm(F, pi);

    if (op == "trace" || op == "norm-tilde") {
        PairForm<KRing> f = pair_from_json(F, j);
        validate_pair(f);
        if (op == "trace") {
            Series<KRing> tr = scaled_to_series(pm, trace_pair(pm, f));
            emit(cfg, series_to_text(tr) + "  [prec " + std::to_string(tr.prec) + "]",
                 series_to_json(tr, &pi));
            return 0;
        }
        Series<KRing> nt = norm_tilde(pm, f, alpha, prec_out, lim);
        emit(cfg, series_to_text(nt) + "  [prec " + std::to_string(nt.prec) + "]",
             series_to_json(nt, &pi));
        return 0;
    }

    Series<KRing> f = series_from_json_in(F, j);
    Series<KRing> r(f.ring);
    if (op == "up") r = up_direct(f, pm);
    else if (op == "up-oracle") r = up_oracle_newton(f, pm);
    else if (op == "vp") r = vp_op(f, pm);
    else if (op == "norm-product") r = norm_product(f, pm, prec_out, lim);
    else throw std::invalid_argument("unknown operator: " + op);
    emit(cfg, series_to_text(r) + "  [prec " + std::to_string(r.prec) + "]",
         series_to_json(r, &pi));
    return 0;
}

int run_verify(const RunConfig& cfg, const std::string& check, int max_deg, int max_n, int count,
               int p_prime, int deg, int n_aux, std::vector<int> rs, int min_overlap, int digits,
               int prec_out) {
    Limits lim = limits_from_env();
    CheckReport rep;
    if (check == "conglemma") {
        rep = verify_conglemma(p_prime, max_n, lim);
    } else {
        Field F = make_field(cfg);
        if (check == "hayes") {
            rep = verify_hayes(F, max_deg, max_n, lim);
        } else if (check == "frobenius") {
            rep = verify_frobenius(F, max_deg, lim);
        } else if (check == "gd-congruence") {
            rep = verify_gd_congruence(F, deg, lim);
        } else if (check == "up-oracle-equality") {
            std::vector<Poly> pis;
            if (!cfg.pi_text.empty()) {
                pis.push_back(require_pi(F, cfg));
            } else {
                for (int d = 1; d <= max_deg; ++d)
                    for (const Poly& pi : monic_irreducibles_of_degree(F, d)) pis.push_back(pi);
            }
            rep = verify_up_oracle(F, pis, count, cfg.prec, cfg.seed);
        } else if (check == "normprop") {
            std::vector<Poly> pis;
            if (!cfg.pi_text.empty()) {
                pis.push_back(require_pi(F, cfg));
            } else {
                for (int d = 1; d <= max_deg; ++d)
                    for (const Poly& pi : monic_irreducibles_of_degree(F, d)) pis.push_back(pi);
            }
            rep = verify_normprop(F, pis, count, prec_out, cfg.seed, lim);
        } else if (check == "root-symmetrics") {
            std::vector<Poly> pis;
            if (!cfg.pi_text.empty()) {
                pis.push_back(require_pi(F, cfg));
            } else {
                for (int d = 1; d <= max_deg; ++d)
                    for (const Poly& pi : monic_irreducibles_of_degree(F, d)) pis.push_back(pi);
            }
            rep = verify_root_symmetrics(F, pis);
        } else if (check == "tracemap") {
            rep = verify_tracemap(F, require_pi(F, cfg), n_aux, rs, cfg.prec, digits, lim);
        } else if (check == "trace-theorem") {
            rep = verify_trace_theorem(F, require_pi(F, cfg), min_overlap, digits, lim);
        } else if (check == "norm-theorem") {
            rep = verify_norm_theorem(F, require_pi(F, cfg), prec_out, digits, lim);
        } else {
            throw std::invalid_argument("unknown check: " + check);
        }
    }
    emit(cfg, report_to_text(rep), report_to_json(rep));
    return rep.failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact u-series engine for Drinfeld modular forms over F_q[T]"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--q", cfg.q, "field size (prime power)");
    app.add_option("--p-char", cfg.p_char, "field characteristic");
    app.add_option("--ext-deg", cfg.ext_deg, "extension degree e with q = p^e");
    app.add_option("--fq-modulus", cfg.fq_modulus, "F_q defining modulus digits, comma separated");
    app.add_option("--pi", cfg.pi_text, "monic prime polynomial, e.g. \"T^2+1\"");
    app.add_option("--prec", cfg.prec, "u-series precision");
    app.add_option("--seed", cfg.seed, "seed for randomized checks");
    app.add_option("--format", cfg.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", cfg.out, "write output to this file");
    app.add_option("--threads", cfg.threads, "OpenMP thread count (0 = default)");

    std::string target, a_text, op_name, in_file, check_name, mu_text;
    int k = 1, prec_out = 8, alpha = 1;
    int max_deg = 1, max_n = 2, count = 10, p_prime = 2, deg = 1, n_aux = 1;
    int min_overlap = 15, digits = 2;
    std::vector<int> rs{0};

    CLI::App* expand = app.add_subcommand("expand", "print an exact expansion");
    expand
        ->add_option("target", target,
                     "carlitz | inv-cyclotomic | u-a | false-e | g-k | m-in-e | e-in-m")
        ->required();
    expand->add_option("--a", a_text, "element a of A");
    expand->add_option("--k", k, "Goss Eisenstein index k");
    expand->add_option("--mu", mu_text, "partition for the transition rows, e.g. \"3+1+1\"");

    CLI::App* op = app.add_subcommand("op", "apply an operator to a series file");
    op->add_option("name", op_name, "up | up-oracle | vp | trace | norm-product | norm-tilde")
        ->required();
    op->add_option("--in", in_file, "input series (JSON)")->required();
    op->add_option("--prec-out", prec_out, "output precision for the norm operators");
    op->add_option("--alpha", alpha, "Fricke eigenvalue (+1 or -1)");

    CLI::App* verify = app.add_subcommand("verify", "run a named congruence check");
    verify
        ->add_option("check", check_name,
                     "hayes | frobenius | gd-congruence | up-oracle-equality | normprop | "
                     "root-symmetrics | conglemma | tracemap | trace-theorem | norm-theorem")
        ->required();
    verify->add_option("--max-deg", max_deg, "maximum degree of pi");
    verify->add_option("--max-n", max_n, "maximum n (hayes) or m p^r (conglemma)");
    verify->add_option("--count", count, "random cases per prime");
    verify->add_option("--p", p_prime, "prime for conglemma");
    verify->add_option("--deg", deg, "degree d for gd-congruence");
    verify->add_option("--n", n_aux, "auxiliary exponent n for g_(0)");
    verify->add_option("--r", rs, "iteration exponents r for g_(r)");
    verify->add_option("--min-overlap", min_overlap, "required overlap precision");
    verify->add_option("--digits", digits, "pi-adic digits carried by the residue pipeline");
    verify->add_option("--prec-out", prec_out, "output precision for norm checks");

    try {
        app.parse(argc, argv);
        set_threads(cfg.threads);
        if (expand->parsed()) return run_expand(cfg, target, a_text, k, mu_text);
        if (op->parsed()) return run_op(cfg, op_name, in_file, prec_out, alpha);
        if (verify->parsed())
            return run_verify(cfg, check_name, max_deg, max_n, count, p_prime, deg, n_aux, rs,
                              min_overlap, digits, prec_out);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
