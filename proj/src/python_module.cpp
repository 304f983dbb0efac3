// pybind11 bindings: string-typed API over the core operations, using the
// same polynomial/element grammar as the CLI.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rflamp/poly_text.hpp"
#include "rflamp/report.hpp"

namespace py = pybind11;
using namespace rflamp;

namespace {

py::dict divisibility_dict(const DivisibilityResult& d) {
    py::dict out;
    out["element"] = format_element(d.element);
    out["D"] = d.D;
    out["g"] = format_poly(d.certificate.quotient.modulus_poly());
    out["k"] = d.certificate.quotient.period();
    out["order"] = d.certificate.order;
    out["exhaustive"] = d.exhaustive;
    return out;
}

}  // namespace

PYBIND11_MODULE(_rflamp, m) {
    m.doc() = "exact residual-finiteness computations for lamplighter groups Z/p wr Z";

    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<cap_exceeded_error>(m, "CapExceededError", PyExc_RuntimeError);

    // -- polynomial ring ------------------------------------------------
    m.def("normalize", [](const std::string& f, coeff_t p) {
        return format_laurent(parse_laurent(f, Prime(p)));
    }, py::arg("poly"), py::arg("p"), "canonical form of a Laurent polynomial literal");

    m.def("gcd", [](const std::string& a, const std::string& b, coeff_t p) {
        Prime pp(p);
        return format_poly(gcd(parse_poly(a, pp), parse_poly(b, pp)));
    }, py::arg("a"), py::arg("b"), py::arg("p"));

    m.def("lcm", [](const std::string& a, const std::string& b, coeff_t p) {
        Prime pp(p);
        return format_poly(lcm(parse_poly(a, pp), parse_poly(b, pp)));
    }, py::arg("a"), py::arg("b"), py::arg("p"));

    m.def("is_irreducible", [](const std::string& f, coeff_t p) {
        return is_irreducible(parse_poly(f, Prime(p)));
    }, py::arg("poly"), py::arg("p"));

    m.def("enumerate_irreducibles", [](coeff_t p, int d) {
        std::vector<std::string> out;
        for (const Poly& f : enumerate_irreducibles(Prime(p), d)) out.push_back(format_poly(f));
        return out;
    }, py::arg("p"), py::arg("d"));

    m.def("count_irreducibles", [](coeff_t p, int d) {
        return count_irreducibles(Prime(p), d);
    }, py::arg("p"), py::arg("d"));

    m.def("factor", [](const std::string& f, coeff_t p) {
        FactoredPoly fp = factor(parse_poly(f, Prime(p)));
        std::vector<std::pair<std::string, int>> parts;
        for (const auto& [g, e] : fp.factors) parts.emplace_back(format_poly(g), e);
        py::dict out;
        out["unit"] = fp.unit;
        out["factors"] = parts;
        out["text"] = fp.to_string();
        return out;
    }, py::arg("poly"), py::arg("p"));

    m.def("multiplicative_order_t", [](const std::string& g, coeff_t p) {
        return multiplicative_order_t(parse_poly(g, Prime(p)));
    }, py::arg("poly"), py::arg("p"));

    m.def("minimal_period", [](const std::string& g, coeff_t p) {
        return minimal_period(parse_poly(g, Prime(p)));
    }, py::arg("poly"), py::arg("p"));

    // -- lamplighter group ----------------------------------------------
    m.def("compose", [](const std::string& x, const std::string& y, coeff_t p) {
        Prime pp(p);
        return format_element(compose(parse_element(x, pp), parse_element(y, pp)));
    }, py::arg("x"), py::arg("y"), py::arg("p"));

    m.def("invert", [](const std::string& x, coeff_t p) {
        return format_element(invert(parse_element(x, Prime(p))));
    }, py::arg("x"), py::arg("p"));

    m.def("word_length_exact", [](const std::string& x, coeff_t p) {
        return word_length_exact(parse_element(x, Prime(p)));
    }, py::arg("element"), py::arg("p"));

    m.def("word_length_bound", [](const std::string& x, coeff_t p) {
        WordLengthBound b = word_length_bound(parse_element(x, Prime(p)));
        py::dict out;
        out["value"] = b.value;
        out["formula"] = b.formula;
        out["guarded"] = b.guarded;
        return out;
    }, py::arg("element"), py::arg("p"));

    m.def("ball", [](coeff_t p, int radius, std::size_t max_elements) {
        std::vector<std::tuple<std::string, int, std::string>> out;
        for (const BallEntry& e : ball_enumerate(Prime(p), radius, max_elements).entries())
            out.emplace_back(format_element(e.element), e.distance, e.witness);
        return out;
    }, py::arg("p"), py::arg("radius"), py::arg("max_elements") = 4'000'000,
       "elements as (text, distance, witness word over a/A/t/T)");

    // -- detection -------------------------------------------------------
    m.def("divisibility", [](const std::string& x, coeff_t p, std::int64_t cap) {
        Prime pp(p);
        QuotientScanner scan(pp);
        return divisibility_dict(scan.divisibility(parse_element(x, pp), cap));
    }, py::arg("element"), py::arg("p"), py::arg("cap") = 1'000'000);

    m.def("divisibility_full_oracle", [](const std::string& x, coeff_t p, std::int64_t cap,
                                         std::uint64_t seed) {
        Prime pp(p);
        FullOracleResult f = divisibility_full_oracle(parse_element(x, pp), cap, seed);
        py::dict out;
        out["found"] = f.found;
        out["index"] = f.index;
        out["alpha"] = f.found ? format_poly(f.alpha) : "";
        out["k"] = f.k;
        out["twist"] = f.found ? format_poly(f.twist) : "";
        return out;
    }, py::arg("element"), py::arg("p"), py::arg("cap"), py::arg("seed") = 0);

    m.def("upper_bound_certificate", [](const std::string& x, coeff_t p) {
        Prime pp(p);
        QuotientScanner scan(pp);
        LampElement el = parse_element(x, pp);
        UpperBoundCertificate c = upper_bound_certificate(el, scan);
        py::dict out;
        out["pi"] = format_poly(c.certificate.quotient.modulus_poly());
        out["field_size"] = c.field_size;
        out["k"] = c.certificate.quotient.period();
        out["order"] = c.certificate.order;
        out["witness_numerator"] = format_poly(c.witness_numerator);
        return out;
    }, py::arg("element"), py::arg("p"));

    m.def("rf_table", [](coeff_t p, int n_max, std::int64_t order_cap, std::size_t ball_cap) {
        std::vector<py::dict> rows;
        for (const RFRecord& r : rf_growth_table(Prime(p), n_max, order_cap, ball_cap)) {
            py::dict j;
            j["n"] = r.n;
            j["rf"] = r.rf;
            j["witness"] = format_element(r.witness);
            j["ball_size"] = r.ball_size;
            rows.push_back(j);
        }
        return rows;
    }, py::arg("p"), py::arg("n_max"), py::arg("order_cap") = 1'000'000,
       py::arg("ball_cap") = 4'000'000);

    // -- extremal ---------------------------------------------------------
    m.def("lcm_profile", [](coeff_t p, int d) {
        LcmProfile pr = lcm_profile(Prime(p), d);
        py::dict out;
        out["d"] = pr.d;
        out["degree"] = pr.degree;
        out["lower"] = pr.lower_bound;
        out["upper"] = pr.upper_bound;
        if (pr.expanded) out["factored"] = pr.factored.to_string();
        return out;
    }, py::arg("p"), py::arg("d"));

    m.def("prod_irreducibles_dividing", [](coeff_t p, int d) {
        return format_poly(prod_irreducibles_dividing(Prime(p), d));
    }, py::arg("p"), py::arg("d"));

    m.def("witness", [](coeff_t p, int d) {
        WitnessElement w = witness_element(Prime(p), d);
        py::dict out;
        out["d"] = w.d;
        out["S"] = w.S;
        out["lamp"] = format_poly(w.lamp);
        out["degree"] = w.degree;
        out["word_exact"] = w.word_exact;
        out["word_bound"] = w.word_bound;
        return out;
    }, py::arg("p"), py::arg("d"));

    m.def("witness_audit", [](coeff_t p, int d, std::int64_t cap) {
        WitnessAudit a = witness_audit(Prime(p), d, cap);
        py::dict out;
        out["d"] = a.witness.d;
        out["D"] = a.divisibility.D;
        out["g"] = format_poly(a.divisibility.certificate.quotient.modulus_poly());
        out["k"] = a.divisibility.certificate.quotient.period();
        out["index_lower"] = a.index_lower;
        out["ratio"] = a.ratio;
        out["all_detectors_deep"] = a.all_detectors_deep;
        out["all_detectors_long"] = a.all_detectors_long;
        return out;
    }, py::arg("p"), py::arg("d"), py::arg("cap") = 10'000);

    m.def("almost_periodic", [](coeff_t p, int k, const std::string& strategy) {
        ApStrategy s = strategy == "divisors" ? ApStrategy::divisor_collect : ApStrategy::filter_all;
        AlmostPeriodicProfile pr = enumerate_almost_periodic(Prime(p), k, s);
        std::vector<std::string> members;
        for (const Poly& g : pr.members) members.push_back(format_poly(g));
        py::dict out;
        out["k"] = pr.k;
        out["members"] = members;
        out["lcm_degree"] = pr.lcm_degree;
        out["ratio"] = pr.ratio;
        return out;
    }, py::arg("p"), py::arg("k"), py::arg("strategy") = "filter");

    m.attr("__version__") = kVersion;
}
