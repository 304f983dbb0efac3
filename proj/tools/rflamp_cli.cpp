// rflamp: exact computations in the lamplighter group Z/p wr Z and its
// finite congruence quotients. Subcommands cover divisibility values,
// RF growth tables, detection certificates, LCM-of-polynomials degree
// profiles, the hard-witness audit and the almost-periodic explorer.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rflamp/poly_text.hpp"
#include "rflamp/report.hpp"

using namespace rflamp;

namespace {

struct GlobalOpts {
    std::uint32_t prime = 2;
    std::string format = "human";
    std::string out;
    std::uint64_t seed = 0;
    std::int64_t cap_order = 1'000'000;
    int cap_radius = 12;
    int cap_k = 12;
    std::int64_t cap_expansion = 65536;
    std::size_t cap_ball_elements = 4'000'000;
};

ojson config_echo(const GlobalOpts& g, const std::string& sub, const ojson& params) {
    ojson c;
    c["prime"] = g.prime;
    c["subcommand"] = sub;
    c["params"] = params;
    c["format"] = g.format;
    c["seed"] = g.seed;
    ojson caps;
    caps["order"] = g.cap_order;
    caps["radius"] = g.cap_radius;
    caps["k"] = g.cap_k;
    caps["expansion"] = g.cap_expansion;
    caps["ball_elements"] = g.cap_ball_elements;
    c["caps"] = caps;
    return c;
}

void write_report(const GlobalOpts& g, const RunReport& report) {
    std::string bytes = emit(report, parse_format(g.format));
    if (g.out.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write output file '" + g.out + "'");
    f << bytes;
}

void flag_wordlen_warnings(RunReport& r, const LampElement& x) {
    WordLengthBound b = word_length_bound(x);
    if (b.guarded && !x.lamp.is_zero() && x.lamp.valuation() == 0 &&
        x.lamp.unit_part().degree() == 0 && x.shift == 0)
        r.warnings.push_back("flagged edge case (c, 0): raw length expression evaluates to " +
                             std::to_string(b.formula));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact residual-finiteness computations for lamplighter groups"};
    app.require_subcommand(1);
    GlobalOpts g;

    app.add_option("--prime", g.prime, "prime p of Z/p wr Z")->envname("RF_PRIME");
    app.add_option("--format", g.format, "output format: csv | json | human")->envname("RF_FORMAT");
    app.add_option("--out", g.out, "write output to a file instead of stdout")->envname("RF_OUT");
    app.add_option("--seed", g.seed, "seed for randomized self-checks")->envname("RF_SEED");
    app.add_option("--cap-order", g.cap_order, "divisibility search order cap")->envname("RF_CAP_ORDER");
    app.add_option("--cap-radius", g.cap_radius, "ball radius cap")->envname("RF_CAP_RADIUS");
    app.add_option("--cap-k", g.cap_k, "conjecture table k cap")->envname("RF_CAP_K");
    app.add_option("--cap-expansion", g.cap_expansion, "polynomial expansion cap on p^d")
        ->envname("RF_CAP_EXPANSION");
    app.add_option("--cap-ball-elements", g.cap_ball_elements, "ball element-count cap")
        ->envname("RF_CAP_BALL_ELEMENTS");

    std::string element_text, poly_text;
    int radius = 1, dee = 1, dmax = 0, kmax = 4;
    bool cross_check = false;

    CLI::App* c_rf = app.add_subcommand("rf-table", "RF growth table over metric balls");
    c_rf->add_option("--radius", radius, "maximal ball radius n")->required();

    CLI::App* c_div = app.add_subcommand("divisibility", "minimal detecting quotient of an element");
    c_div->add_option("element", element_text, "element \"(<laurent-poly>, <int>)\"")->required();
    c_div->add_flag("--cross-check", cross_check, "also run the full normal-subgroup oracle");

    CLI::App* c_cert = app.add_subcommand("certificate", "quantified upper-bound certificate");
    c_cert->add_option("element", element_text)->required();

    CLI::App* c_lcm = app.add_subcommand("lcm-deg", "degree profile of LCM(P_d)");
    CLI::Option* lcm_d = c_lcm->add_option("--d", dee, "single degree bound d");
    c_lcm->add_option("--d-max", dmax, "sweep d = 1..d-max")->excludes(lcm_d);

    CLI::App* c_aud = app.add_subcommand("witness-audit", "audit the hard-element witness family");
    c_aud->add_option("--d", dee)->required();

    CLI::App* c_conj = app.add_subcommand("conjecture", "almost-periodic LCM degree explorer");
    c_conj->add_option("--k-max", kmax)->required();

    CLI::App* c_ord = app.add_subcommand("order", "multiplicative order of t modulo g");
    c_ord->add_option("poly", poly_text)->required();

    CLI::App* c_fac = app.add_subcommand("factor", "factor a polynomial into monic irreducibles");
    c_fac->add_option("poly", poly_text)->required();

    CLI::App* c_wl = app.add_subcommand("wordlen", "exact word length and the closed-form bound");
    c_wl->add_option("element", element_text)->required();

    CLI::App* c_ball = app.add_subcommand("ball", "enumerate a metric ball (element, distance, witness)");
    c_ball->add_option("--radius", radius)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    try {
        Prime p(g.prime);
        RunReport report;

        if (c_rf->parsed()) {
            if (radius > g.cap_radius)
                throw cap_exceeded_error("radius " + std::to_string(radius) + " exceeds --cap-radius " +
                                         std::to_string(g.cap_radius));
            report.config = config_echo(g, "rf-table", ojson{{"radius", radius}});
            fill_rf_table(report, rf_growth_table(p, radius, g.cap_order, g.cap_ball_elements));
        } else if (c_div->parsed()) {
            report.config = config_echo(g, "divisibility",
                                        ojson{{"element", element_text}, {"cross_check", cross_check}});
            LampElement x = parse_element(element_text, p);
            QuotientScanner scan(p);
            DivisibilityResult d = scan.divisibility(x, g.cap_order);
            if (cross_check) {
                FullOracleResult f = divisibility_full_oracle(x, d.D, g.seed);
                fill_full_oracle(report, d, f);
            } else {
                fill_divisibility(report, d);
            }
        } else if (c_cert->parsed()) {
            report.config = config_echo(g, "certificate", ojson{{"element", element_text}});
            LampElement x = parse_element(element_text, p);
            QuotientScanner scan(p);
            fill_certificate(report, x, upper_bound_certificate(x, scan));
        } else if (c_lcm->parsed()) {
            ojson params;
            std::vector<LcmProfile> profiles;
            if (dmax > 0) {
                params["d_max"] = dmax;
                for (int d = 1; d <= dmax; ++d) profiles.push_back(lcm_profile(p, d, g.cap_expansion));
            } else {
                params["d"] = dee;
                profiles.push_back(lcm_profile(p, dee, g.cap_expansion));
            }
            report.config = config_echo(g, "lcm-deg", params);
            fill_lcm_profiles(report, profiles);
        } else if (c_aud->parsed()) {
            report.config = config_echo(g, "witness-audit", ojson{{"d", dee}});
            fill_witness_audit(report, witness_audit(p, dee, std::min<std::int64_t>(g.cap_order, 10'000)));
        } else if (c_conj->parsed()) {
            if (kmax > g.cap_k)
                throw cap_exceeded_error("k-max " + std::to_string(kmax) + " exceeds --cap-k " +
                                         std::to_string(g.cap_k));
            report.config = config_echo(g, "conjecture", ojson{{"k_max", kmax}});
            fill_conjecture(report, conjecture_table(p, kmax));
        } else if (c_ord->parsed()) {
            report.config = config_echo(g, "order", ojson{{"poly", poly_text}});
            Poly f = parse_poly(poly_text, p);
            fill_order(report, f, minimal_period(f));
        } else if (c_fac->parsed()) {
            report.config = config_echo(g, "factor", ojson{{"poly", poly_text}});
            Poly f = parse_poly(poly_text, p);
            fill_factor(report, f, factor(f));
        } else if (c_wl->parsed()) {
            report.config = config_echo(g, "wordlen", ojson{{"element", element_text}});
            LampElement x = parse_element(element_text, p);
            fill_wordlen(report, x, word_length_exact(x), word_length_bound(x));
            flag_wordlen_warnings(report, x);
        } else if (c_ball->parsed()) {
            if (radius > g.cap_radius)
                throw cap_exceeded_error("radius " + std::to_string(radius) + " exceeds --cap-radius " +
                                         std::to_string(g.cap_radius));
            report.config = config_echo(g, "ball", ojson{{"radius", radius}});
            fill_ball(report, ball_enumerate(p, radius, g.cap_ball_elements));
        }

        write_report(g, report);
    } catch (const cap_exceeded_error& e) {
        std::cerr << "error (cap exceeded): " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "error (parse): " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error (precondition): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "elapsed: " << format_double(ms) << " ms\n";
    return 0;
}
