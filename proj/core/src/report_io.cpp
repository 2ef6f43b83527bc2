#include "enzeros/report_io.hpp"

#include <json.hpp>

namespace enz {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_pair(const Rational& r) {
    return ordered_json::array({r.get_num().get_str(), r.get_den().get_str()});
}

ordered_json interval_json(const RealEnclosure& e) {
    return ordered_json::array({rational_pair(e.lo), rational_pair(e.hi)});
}

ordered_json rectangle_json(const ComplexEnclosure& e) {
    return ordered_json{{"re", interval_json(e.re)}, {"im", interval_json(e.im)}};
}

ordered_json point_json(const AlgebraicPoint& p) {
    return ordered_json{
        {"base", p.base == Zeta::I ? "i" : "rho"},
        {"k", p.shift},
        {"form", p.form == PointForm::Base ? "base" : "inverted"},
    };
}

ordered_json term_json(const RelationTerm& t) {
    return ordered_json{
        {"etilde_power", t.etilde_power},
        {"e4", t.monomial.a},
        {"e6", t.monomial.b},
        {"coeff", rational_pair(t.coeff)},
    };
}

ordered_json params_json(const EvalParams& p) {
    return ordered_json{
        {"m", p.m},
        {"bits", p.bits},
        {"exp_terms", p.exp_terms},
        {"r_max", rational_pair(p.r_max)},
    };
}

ordered_json certificate_json(const Certificate& cert) {
    return ordered_json{
        {"point", point_json(cert.point)},
        {"verdict", to_string(cert.verdict)},
        {"etilde", rectangle_json(cert.etilde)},
        {"cofactor", rectangle_json(cert.cofactor)},
        {"relocated", cert.relocation.has_value()},
        {"params", params_json(cert.params)},
    };
}

}  // namespace

std::string render_report(const Report& report) {
    ordered_json j;
    j["level"] = report.level;
    j["relation"] = ordered_json::array();
    for (const RelationTerm& t : report.relation.terms)
        j["relation"].push_back(term_json(t));
    j["discrepancies"] = ordered_json::array();
    for (const RelationDiscrepancy& d : report.discrepancies) {
        j["discrepancies"].push_back(ordered_json{
            {"etilde_power", d.printed.etilde_power},
            {"e4", d.printed.monomial.a},
            {"e6", d.printed.monomial.b},
            {"printed", rational_pair(d.printed.coeff)},
            {"discovered", rational_pair(d.discovered_coeff)},
        });
    }
    j["candidates"] = ordered_json::array();
    for (const Certificate& cert : report.certificates)
        j["candidates"].push_back(certificate_json(cert));
    j["zeros"] = ordered_json::array();
    for (const AlgebraicPoint& p : report.zeros)
        j["zeros"].push_back(point_json(p));
    return j.dump(2) + "\n";
}

}  // namespace enz
