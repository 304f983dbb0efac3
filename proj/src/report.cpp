#include "rflamp/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "rflamp/poly_text.hpp"

namespace rflamp {

OutputFormat parse_format(const std::string& name) {
    if (name == "human") return OutputFormat::human;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw precondition_error("unknown format '" + name + "' (expected csv, json or human)");
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string emit(const RunReport& report, OutputFormat format) {
    std::string out;
    switch (format) {
        case OutputFormat::json: {
            ojson j;
            j["config"] = report.config;
            j["version"] = kVersion;
            j["result"] = report.result;
            j["warnings"] = report.warnings;
            out = j.dump(2);
            out += '\n';
            break;
        }
        case OutputFormat::csv: {
            out += std::string("# rflamp ") + kVersion + "\n";
            out += "# config: " + report.config.dump() + "\n";
            for (const auto& w : report.warnings) out += "# warning: " + w + "\n";
            out += report.csv_header + "\n";
            for (const auto& row : report.csv_rows) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    if (i) out += ',';
                    out += csv_quote(row[i]);
                }
                out += '\n';
            }
            break;
        }
        case OutputFormat::human: {
            out += std::string("rflamp ") + kVersion + " | config " + report.config.dump() + "\n";
            for (const auto& line : report.human_lines) out += line + "\n";
            for (const auto& w : report.warnings) out += "warning: " + w + "\n";
            break;
        }
    }
    return out;
}

static ojson certificate_json(const DetectionCertificate& c) {
    ojson j;
    j["g"] = format_poly(c.quotient.modulus_poly());
    j["k"] = c.quotient.period();
    j["order"] = c.order;
    j["image_residue"] = format_poly(c.image.residue);
    j["image_shift"] = c.image.shift;
    return j;
}

void fill_divisibility(RunReport& r, const DivisibilityResult& d) {
    ojson j;
    j["element"] = format_element(d.element);
    j["D"] = d.D;
    j["g"] = format_poly(d.certificate.quotient.modulus_poly());
    j["k"] = d.certificate.quotient.period();
    j["order"] = d.certificate.order;
    j["exhaustive"] = d.exhaustive;
    j["search_bound"] = d.search_bound;
    j["certificate"] = certificate_json(d.certificate);
    r.result = j;
    r.csv_header = "element,D,g,k,order,exhaustive";
    r.csv_rows.push_back({format_element(d.element), std::to_string(d.D),
                          format_poly(d.certificate.quotient.modulus_poly()),
                          std::to_string(d.certificate.quotient.period()),
                          std::to_string(d.certificate.order), d.exhaustive ? "true" : "false"});
    r.human_lines.push_back("D(" + format_element(d.element) + ") = " + std::to_string(d.D));
    r.human_lines.push_back("  minimal quotient: g = " +
                            format_poly(d.certificate.quotient.modulus_poly()) +
                            ", k = " + std::to_string(d.certificate.quotient.period()) +
                            ", order " + std::to_string(d.certificate.order));
}

void fill_full_oracle(RunReport& r, const DivisibilityResult& d, const FullOracleResult& f) {
    fill_divisibility(r, d);
    ojson j;
    j["index"] = f.found ? f.index : d.D;
    j["alpha"] = f.found ? format_poly(f.alpha) : std::string("-");
    j["k"] = f.found ? f.k : 0;
    j["twist"] = f.found ? format_poly(f.twist) : std::string("-");
    j["cap"] = f.cap;
    r.result["full_oracle"] = j;
    std::int64_t fv = f.found ? f.index : d.D;
    r.human_lines.push_back("  full-oracle minimal index: " + std::to_string(fv));
    if (fv < d.D)
        r.warnings.push_back("full normal-subgroup oracle found index " + std::to_string(fv) +
                             " below the congruence value " + std::to_string(d.D) + " for " +
                             format_element(d.element));
}

void fill_rf_table(RunReport& r, const std::vector<RFRecord>& records) {
    ojson rows = ojson::array();
    r.csv_header = "n,rf,witness,ball_size";
    for (const RFRecord& rec : records) {
        ojson j;
        j["n"] = rec.n;
        j["rf"] = rec.rf;
        j["witness"] = format_element(rec.witness);
        j["ball_size"] = rec.ball_size;
        rows.push_back(j);
        r.csv_rows.push_back({std::to_string(rec.n), std::to_string(rec.rf),
                              format_element(rec.witness), std::to_string(rec.ball_size)});
        r.human_lines.push_back("RF(" + std::to_string(rec.n) + ") = " + std::to_string(rec.rf) +
                                "  witness " + format_element(rec.witness) + "  |ball| = " +
                                std::to_string(rec.ball_size));
    }
    double slope = rf_loglog_slope(records);
    r.result["rows"] = rows;
    r.result["loglog_slope"] = slope;
    r.human_lines.push_back("log-log slope (reporting only): " + format_double(slope));
}

void fill_certificate(RunReport& r, const LampElement& x, const UpperBoundCertificate& c) {
    std::int64_t n = word_length_exact(x);
    std::int64_t degf = c.witness_numerator.degree() ? *c.witness_numerator.degree() : 0;
    std::int64_t p = x.lamp.modulus();
    ojson j;
    j["element"] = format_element(x);
    j["witness_numerator"] = format_poly(c.witness_numerator);
    j["pi"] = format_poly(c.certificate.quotient.modulus_poly());
    j["field_size"] = c.field_size;
    j["field_bound"] = 2 * (degf + 1) * p;
    j["k"] = c.certificate.quotient.period();
    j["order"] = c.certificate.order;
    j["word_length"] = n;
    j["order_bound"] = (2 * (n + 1) * p) * (2 * (n + 1) * p);
    r.result = j;
    r.csv_header = "element,pi,field_size,field_bound,k,order,word_length,order_bound";
    r.csv_rows.push_back({format_element(x), format_poly(c.certificate.quotient.modulus_poly()),
                          std::to_string(c.field_size), std::to_string(2 * (degf + 1) * p),
                          std::to_string(c.certificate.quotient.period()),
                          std::to_string(c.certificate.order), std::to_string(n),
                          std::to_string((2 * (n + 1) * p) * (2 * (n + 1) * p))});
    r.human_lines.push_back("certificate for " + format_element(x) + ": pi = " +
                            format_poly(c.certificate.quotient.modulus_poly()) + ", field size " +
                            std::to_string(c.field_size) + " <= " + std::to_string(2 * (degf + 1) * p) +
                            ", order " + std::to_string(c.certificate.order) + " <= " +
                            std::to_string((2 * (n + 1) * p) * (2 * (n + 1) * p)));
}

void fill_lcm_profiles(RunReport& r, const std::vector<LcmProfile>& profiles) {
    ojson rows = ojson::array();
    r.csv_header = "d,degree,lower,upper";
    for (const LcmProfile& pr : profiles) {
        ojson j;
        j["d"] = pr.d;
        j["degree"] = pr.degree;
        j["lower"] = pr.lower_bound;
        j["upper"] = pr.upper_bound;
        if (pr.expanded) j["factored"] = pr.factored.to_string();
        rows.push_back(j);
        r.csv_rows.push_back({std::to_string(pr.d), std::to_string(pr.degree),
                              std::to_string(pr.lower_bound), std::to_string(pr.upper_bound)});
        std::string line = "d = " + std::to_string(pr.d) + ": deg = " + std::to_string(pr.degree) +
                           " in [" + std::to_string(pr.lower_bound) + ", " +
                           std::to_string(pr.upper_bound) + "]";
        if (pr.expanded) line += "  " + pr.factored.to_string();
        r.human_lines.push_back(line);
    }
    r.result["rows"] = rows;
}

void fill_witness_audit(RunReport& r, const WitnessAudit& a) {
    ojson j;
    j["d"] = a.witness.d;
    j["S"] = a.witness.S;
    j["lamp"] = format_poly(a.witness.lamp);
    j["lamp_degree"] = a.witness.degree;
    j["lcm_degree"] = a.witness.lcm_degree;
    j["word_length"] = a.witness.word_exact;
    j["word_bound"] = a.witness.word_bound;
    j["D"] = a.divisibility.D;
    j["g"] = format_poly(a.divisibility.certificate.quotient.modulus_poly());
    j["k"] = a.divisibility.certificate.quotient.period();
    j["index_lower"] = a.index_lower;
    j["ratio"] = a.ratio;
    j["all_detectors_deep"] = a.all_detectors_deep;
    j["all_detectors_long"] = a.all_detectors_long;
    j["k_ge_sqrt_pd"] = a.k_ge_sqrt_pd;
    j["k_ge_sqrt_dpd"] = a.k_ge_sqrt_dpd;
    j["quotients_checked"] = a.quotients_checked;
    j["audit_order_cap"] = a.audit_order_cap;
    r.result = j;
    r.csv_header = "d,word_length,D,index_lower,ratio,detectors_deep,detectors_long";
    r.csv_rows.push_back({std::to_string(a.witness.d), std::to_string(a.witness.word_exact),
                          std::to_string(a.divisibility.D), std::to_string(a.index_lower),
                          format_double(a.ratio), a.all_detectors_deep ? "true" : "false",
                          a.all_detectors_long ? "true" : "false"});
    r.human_lines.push_back("witness d = " + std::to_string(a.witness.d) + ": lamp " +
                            format_poly(a.witness.lamp));
    r.human_lines.push_back("  word length " + std::to_string(a.witness.word_exact) + " (bound " +
                            std::to_string(a.witness.word_bound) + "), D = " +
                            std::to_string(a.divisibility.D) + " >= " + std::to_string(a.index_lower) +
                            " (ratio " + format_double(a.ratio) + ")");
    r.human_lines.push_back(std::string("  every detector deep (deg g > d): ") +
                            (a.all_detectors_deep ? "yes" : "NO") + ", long (k > S): " +
                            (a.all_detectors_long ? "yes" : "NO"));
    r.human_lines.push_back(std::string("  minimal k vs sqrt(p^d): ") +
                            (a.k_ge_sqrt_pd ? "holds" : "fails") + ", vs sqrt(d p^d): " +
                            (a.k_ge_sqrt_dpd ? "holds" : "fails"));
}

void fill_conjecture(RunReport& r, const std::vector<AlmostPeriodicProfile>& profiles) {
    ojson rows = ojson::array();
    r.csv_header = "k,lcm_degree,ratio,running_min_ratio";
    double running = std::numeric_limits<double>::infinity();
    for (const AlmostPeriodicProfile& pr : profiles) {
        running = std::min(running, pr.ratio);
        ojson j;
        j["k"] = pr.k;
        j["lcm_degree"] = pr.lcm_degree;
        j["ratio"] = pr.ratio;
        j["running_min_ratio"] = running;
        j["members"] = pr.members.size();
        rows.push_back(j);
        r.csv_rows.push_back({std::to_string(pr.k), std::to_string(pr.lcm_degree),
                              format_double(pr.ratio), format_double(running)});
        r.human_lines.push_back("k = " + std::to_string(pr.k) + ": |A_k| = " +
                                std::to_string(pr.members.size()) + ", deg LCM(A_k) = " +
                                std::to_string(pr.lcm_degree) + ", ratio " + format_double(pr.ratio));
    }
    r.result["rows"] = rows;
    r.result["exploratory"] = true;
    r.human_lines.push_back("exploratory data; the conjecture itself is open");
}

void fill_order(RunReport& r, const Poly& g, std::int64_t order) {
    r.result["poly"] = format_poly(g);
    r.result["order"] = order;
    r.csv_header = "poly,order";
    r.csv_rows.push_back({format_poly(g), std::to_string(order)});
    r.human_lines.push_back("ord(t mod " + format_poly(g) + ") = " + std::to_string(order));
}

void fill_factor(RunReport& r, const Poly& f, const FactoredPoly& fp) {
    r.result["poly"] = format_poly(f);
    r.result["unit"] = fp.unit;
    r.result["factored"] = fp.to_string();
    ojson parts = ojson::array();
    for (const auto& [g, e] : fp.factors) {
        ojson j;
        j["factor"] = format_poly(g);
        j["multiplicity"] = e;
        parts.push_back(j);
    }
    r.result["factors"] = parts;
    r.csv_header = "factor,multiplicity";
    for (const auto& [g, e] : fp.factors) r.csv_rows.push_back({format_poly(g), std::to_string(e)});
    r.human_lines.push_back(format_poly(f) + " = " + fp.to_string());
}

void fill_wordlen(RunReport& r, const LampElement& x, std::int64_t exact, const WordLengthBound& b) {
    r.result["element"] = format_element(x);
    r.result["exact"] = exact;
    r.result["bound"] = b.value;
    r.result["formula"] = b.formula;
    r.result["guarded"] = b.guarded;
    r.csv_header = "element,exact,bound,formula,guarded";
    r.csv_rows.push_back({format_element(x), std::to_string(exact), std::to_string(b.value),
                          std::to_string(b.formula), b.guarded ? "true" : "false"});
    r.human_lines.push_back("|" + format_element(x) + "| = " + std::to_string(exact) +
                            ", upper bound " + std::to_string(b.value));
    if (b.guarded)
        r.warnings.push_back("constant-numerator lamp: the closed-form expression (" +
                             std::to_string(b.formula) +
                             ") omits the toggle cost; guarded bound " + std::to_string(b.value) +
                             " used for " + format_element(x));
}

void fill_ball(RunReport& r, const BallIndex& ball) {
    ojson rows = ojson::array();
    r.csv_header = "element,distance,witness";
    for (const BallEntry& e : ball.entries()) {
        ojson j;
        j["element"] = format_element(e.element);
        j["distance"] = e.distance;
        j["witness"] = e.witness;
        rows.push_back(j);
        r.csv_rows.push_back({format_element(e.element), std::to_string(e.distance), e.witness});
    }
    r.result["radius"] = ball.radius();
    r.result["size"] = ball.size();
    r.result["rows"] = rows;
    r.human_lines.push_back("|B(" + std::to_string(ball.radius()) + ")| = " + std::to_string(ball.size()));
    r.human_lines.push_back("letters: a = s0, A = s0^-1, t, T = t^-1");
}

double rf_loglog_slope(const std::vector<RFRecord>& records) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (const RFRecord& rec : records) {
        if (rec.n < 1 || rec.rf < 1) continue;
        double x = std::log(static_cast<double>(rec.n));
        double y = std::log(static_cast<double>(rec.rf));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 2) return 0.0;
    double den = m * sxx - sx * sx;
    return den == 0 ? 0.0 : (m * sxy - sx * sy) / den;
}

}  // namespace rflamp
