#include "enzeros/certify.hpp"
#include "enzeros/errors.hpp"
#include "enzeros/geometry.hpp"
#include "enzeros/graded.hpp"
#include "enzeros/qseries.hpp"
#include "enzeros/rational.hpp"
#include "enzeros/report_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace enz;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 64;

enum class Format { Text, Json, Csv };

// One parsed invocation: the shared knobs every subcommand understands.
struct RunConfig {
    int level = 0;
    EvalParams params;
    std::string out_path;  // empty means stdout
    Format format = Format::Text;
};

void add_param_flags(CLI::App* cmd, EvalParams& params) {
    cmd->add_option("--terms", params.m, "Retained q-series terms")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--bits", params.bits, "Enclosure rounding precision in bits")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--exp-terms", params.exp_terms,
                    "Taylor length for the nome exponential")
        ->check(CLI::PositiveNumber);
}

// Accepted point forms: "i", "rho", "base:i", "base:rho", "inv:i+3",
// "inv:rho-1", or an exact rectangle corner "x,y" with rational x, y.
std::variant<AlgebraicPoint, ComplexEnclosure> parse_point(const std::string& s) {
    auto comma = s.find(',');
    if (comma != std::string::npos) {
        Rational x = parse_rational(s.substr(0, comma));
        Rational y = parse_rational(s.substr(comma + 1));
        if (sgn(y) <= 0)
            throw Error("point '" + s + "' must have positive imaginary part");
        return ComplexEnclosure::exact(x, y);
    }
    std::string body = s;
    bool inverted = false;
    if (body.rfind("base:", 0) == 0) {
        body = body.substr(5);
    } else if (body.rfind("inv:", 0) == 0) {
        inverted = true;
        body = body.substr(4);
    }
    Zeta zeta;
    if (body.rfind("rho", 0) == 0) {
        zeta = Zeta::Rho;
        body = body.substr(3);
    } else if (body.rfind("i", 0) == 0) {
        zeta = Zeta::I;
        body = body.substr(1);
    } else {
        throw Error("point '" + s + "' is not i, rho, base:..., inv:..., or x,y");
    }
    if (!inverted) {
        if (!body.empty())
            throw Error("point '" + s + "' has trailing characters");
        return AlgebraicPoint::at_base(zeta);
    }
    long shift = 0;
    if (!body.empty()) {
        if (body[0] != '+' && body[0] != '-')
            throw Error("point '" + s + "' needs a signed shift, like inv:i+3");
        char* end = nullptr;
        shift = std::strtol(body.c_str(), &end, 10);
        if (end == nullptr || *end != '\0')
            throw Error("point '" + s + "' has a malformed shift");
    }
    return AlgebraicPoint::inverted(zeta, shift);
}

std::string describe_spec(const std::variant<AlgebraicPoint, ComplexEnclosure>& p) {
    if (const auto* alg = std::get_if<AlgebraicPoint>(&p)) return describe(*alg);
    const auto& rect = std::get<ComplexEnclosure>(p);
    return to_fraction_string(rect.re.lo) + " + " +
           to_fraction_string(rect.im.lo) + " i";
}

void print_rectangle(std::ostream& os, const ComplexEnclosure& value,
                     unsigned digits) {
    os << "  re in [" << decimal_lower(value.re.lo, digits) << ", "
       << decimal_upper(value.re.hi, digits) << "]\n";
    os << "  im in [" << decimal_lower(value.im.lo, digits) << ", "
       << decimal_upper(value.im.hi, digits) << "]\n";
    os << "  contains zero: " << (value.contains_zero() ? "yes" : "no") << "\n";
}

std::string term_text(const RelationTerm& t) {
    std::string out = to_fraction_string(t.coeff);
    if (t.monomial.a > 0) {
        out += " E4";
        if (t.monomial.a > 1) out += "^" + std::to_string(t.monomial.a);
    }
    if (t.monomial.b > 0) {
        out += " E6";
        if (t.monomial.b > 1) out += "^" + std::to_string(t.monomial.b);
    }
    if (t.etilde_power > 0) {
        out += " Et";
        if (t.etilde_power > 1) out += "^" + std::to_string(t.etilde_power);
    }
    return out;
}

int run_identities(std::optional<int> level, std::optional<unsigned> order,
                   bool as_printed) {
    std::vector<int> levels =
        level ? std::vector<int>{*level} : std::vector<int>{2, 3, 5, 7};
    bool all_ok = true;
    for (int n : levels) {
        RelationPoly rel = as_printed ? printed_relation(n) : discover_relation(n);
        unsigned ord = order ? *order : sturm_order(n) + 20;
        std::cout << "level " << n << " ("
                  << (as_printed ? "as printed" : "discovered")
                  << "), matching q^0..q^" << ord << "\n";

        const QSeries& et = series_for(SeriesId::etilde(n), ord);
        QSeries lhs = pow(et, static_cast<unsigned>(n) + 1);
        QSeries rhs(std::vector<Rational>(ord + 1, Rational(0)));
        for (const RelationTerm& t : rel.terms) {
            QSeries part = mul(pow(et, t.etilde_power),
                               monomial_series(t.monomial, ord));
            rhs = add(rhs, scale(t.coeff, part));
        }

        unsigned mismatches = 0;
        for (unsigned e = 0; e <= ord; ++e) {
            bool match = lhs.coeff(e) == rhs.coeff(e);
            std::cout << "  q^" << e << ": "
                      << (match ? "ok" : "MISMATCH") << "\n";
            if (!match) {
                ++mismatches;
                std::cout << "    lhs " << to_fraction_string(lhs.coeff(e))
                          << "  rhs " << to_fraction_string(rhs.coeff(e)) << "\n";
            }
        }
        if (mismatches > 0) {
            all_ok = false;
            Rational sum = coefficient_sum(rel);
            std::cout << "  " << mismatches << " mismatched coefficient(s); "
                      << "coefficient sum " << to_fraction_string(sum)
                      << ", deficit " << to_fraction_string(Rational(1) - sum)
                      << "\n";
        } else {
            std::cout << "  all " << ord + 1 << " coefficients match\n";
        }
    }
    return all_ok ? kExitOk : kExitMismatch;
}

int run_certify(const RunConfig& config) {
    Report report = certify_all(config.level, config.params);

    std::cout << "level " << report.level << " relation (discovered): Et^"
              << report.level + 1 << " =";
    bool first = true;
    for (const RelationTerm& t : report.relation.terms) {
        std::cout << (first ? " " : " + ") << term_text(t);
        first = false;
    }
    std::cout << "\n";
    for (const RelationDiscrepancy& d : report.discrepancies) {
        std::cout << "note: published coefficient of " << term_text(d.printed)
                  << " rediscovered as " << to_fraction_string(d.discovered_coeff)
                  << "\n";
    }
    std::cout << "factored: Et^" << report.factored.leading_power
              << " * cofactor, cofactor degree "
              << report.level + 1 - static_cast<int>(report.factored.leading_power)
              << "\n\n";

    bool undecided = false;
    for (const Certificate& cert : report.certificates) {
        std::cout << describe(cert.point) << ": " << to_string(cert.verdict);
        if (cert.relocation)
            std::cout << "  (via " << describe(cert.relocation->target) << ")";
        std::cout << "\n";
        print_rectangle(std::cout, cert.etilde, 40);
        undecided = undecided || cert.verdict == Verdict::Undecided;
    }

    std::cout << "\nzeros:";
    for (const AlgebraicPoint& p : report.zeros) std::cout << " " << describe(p);
    std::cout << "\n";

    if (config.format == Format::Json) {
        std::ofstream out(config.out_path);
        if (!out) throw Error("cannot open '" + config.out_path + "' for writing");
        out << render_report(report);
        std::cout << "report written to " << config.out_path << "\n";
    }
    return undecided ? kExitUndecided : kExitOk;
}

int run_eval(const std::string& series, const std::string& point_text,
             const EvalParams& params, bool auto_relocate) {
    SeriesId id;
    std::variant<AlgebraicPoint, ComplexEnclosure> point;
    try {
        id = parse_series_id(series);
        point = parse_point(point_text);
    } catch (const Error& bad_input) {
        std::cerr << "eval: " << bad_input.what() << "\n";
        return kExitUsage;
    }

    ComplexEnclosure value;
    std::optional<PointRelocation> relocation;
    try {
        if (const auto* alg = std::get_if<AlgebraicPoint>(&point))
            value = evaluate_at(id, *alg, params);
        else
            value = evaluate_at(id, std::get<ComplexEnclosure>(point), params);
    } catch (const RegionViolation& violation) {
        const auto* alg = std::get_if<AlgebraicPoint>(&point);
        bool relocatable = auto_relocate && alg != nullptr &&
                           alg->form == PointForm::Inverted &&
                           id.kind == SeriesKind::Etilde;
        if (!relocatable) {
            std::cout << "error: " << violation.what() << "\n";
            std::cout << "hint: for Etilde at -1/(zeta+k) the value can be "
                         "carried over from the shifted point -1/(zeta+k-N); "
                         "rerun with --auto-relocate\n";
            return kExitMismatch;
        }
        PointRelocation rel = relocate(*alg, id.level);
        value = rel.multiplier.inverse().enclosure(params.bits) *
                evaluate_at(id, rel.target, params);
        relocation = rel;
    }

    std::cout << series << " at " << describe_spec(point) << "\n";
    if (relocation)
        std::cout << "  (evaluated through " << describe(relocation->target)
                  << ")\n";
    print_rectangle(std::cout, value, 40);
    return kExitOk;
}

struct GridSpec {
    std::string xmin, xmax, ymin, ymax;
    unsigned nx = 10, ny = 10;
};

int run_scan(const RunConfig& config, const GridSpec& grid) {
    Rational x0, x1, y0, y1;
    try {
        x0 = parse_rational(grid.xmin);
        x1 = parse_rational(grid.xmax);
        y0 = parse_rational(grid.ymin);
        y1 = parse_rational(grid.ymax);
    } catch (const Error& bad_input) {
        std::cerr << "scan: " << bad_input.what() << "\n";
        return kExitUsage;
    }
    if (sgn(y0) <= 0 || x1 < x0 || y1 < y0 || grid.nx == 0 || grid.ny == 0) {
        std::cerr << "scan: grid must satisfy 0 < ymin <= ymax, xmin <= xmax, "
                     "nx >= 1, ny >= 1\n";
        return kExitUsage;
    }

    std::ofstream file;
    if (!config.out_path.empty()) {
        file.open(config.out_path);
        if (!file) throw Error("cannot open '" + config.out_path + "' for writing");
    }
    std::ostream& os = config.out_path.empty() ? std::cout : file;

    SeriesId id = SeriesId::etilde(config.level);
    Rational xstep = grid.nx > 1 ? (x1 - x0) / (grid.nx - 1) : Rational(0);
    Rational ystep = grid.ny > 1 ? (y1 - y0) / (grid.ny - 1) : Rational(0);

    os << "x,y,abs_lo,abs_hi,status\n";
    for (unsigned j = 0; j < grid.ny; ++j) {
        Rational y = y0 + Rational(j) * ystep;
        for (unsigned i = 0; i < grid.nx; ++i) {
            Rational x = x0 + Rational(i) * xstep;
            os << decimal_lower(x, 12) << "," << decimal_lower(y, 12) << ",";
            try {
                ComplexEnclosure v =
                    evaluate_at(id, ComplexEnclosure::exact(x, y), config.params);
                os << decimal_lower(v.abs_lower(config.params.bits), 20) << ","
                   << decimal_upper(v.abs_upper(config.params.bits), 20) << ",OK\n";
            } catch (const RegionViolation&) {
                os << ",,SKIPPED\n";
            }
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified zeros of the weight-2 level series Etilde_N "
                 "(N = 2, 3, 5, 7) by exact relations and interval exclusion"};
    app.require_subcommand(1);

    auto level_check = CLI::IsMember({2, 3, 5, 7});

    // identities
    auto* identities = app.add_subcommand(
        "identities", "Verify the level relations coefficient by coefficient");
    std::optional<int> id_level;
    std::optional<unsigned> id_order;
    bool as_printed = false;
    identities->add_option("--level", id_level, "Level (default: all)")
        ->check(level_check);
    identities->add_option("--order", id_order,
                           "Highest q-exponent to match (default: determining "
                           "order + 20)");
    identities->add_flag("--as-printed", as_printed,
                         "Use the published coefficients instead of the "
                         "rediscovered ones");

    // certify
    auto* certify = app.add_subcommand(
        "certify", "Certify every candidate point of a level");
    RunConfig certify_config;
    certify->add_option("--level", certify_config.level, "Level")
        ->required()
        ->check(level_check);
    certify->add_option("--json", certify_config.out_path,
                        "Write the machine-readable report to this path");
    add_param_flags(certify, certify_config.params);

    // eval
    auto* eval = app.add_subcommand(
        "eval", "Enclose one series value at one point");
    std::string eval_series;
    std::string eval_point;
    bool auto_relocate = false;
    EvalParams eval_params;
    eval->add_option("series", eval_series,
                     "Series name: E2, E4, E6, Etilde2, Etilde3, Etilde5, "
                     "Etilde7")
        ->required();
    eval->add_option("--point", eval_point,
                     "i, rho, base:i, base:rho, inv:i+3, inv:rho+5, or x,y")
        ->required();
    eval->add_flag("--auto-relocate", auto_relocate,
                   "Move an out-of-region Etilde point through the "
                   "translation identity");
    add_param_flags(eval, eval_params);

    // scan
    auto* scan = app.add_subcommand(
        "scan", "Tabulate |Etilde_N| enclosures over a rectangular grid (CSV)");
    RunConfig scan_config;
    scan_config.format = Format::Csv;
    GridSpec grid;
    scan->add_option("--level", scan_config.level, "Level")
        ->required()
        ->check(level_check);
    scan->add_option("--xmin", grid.xmin, "Left edge (rational)")->required();
    scan->add_option("--xmax", grid.xmax, "Right edge (rational)")->required();
    scan->add_option("--ymin", grid.ymin, "Bottom edge (rational, > 0)")
        ->required();
    scan->add_option("--ymax", grid.ymax, "Top edge (rational)")->required();
    scan->add_option("--nx", grid.nx, "Grid points across")->required();
    scan->add_option("--ny", grid.ny, "Grid points up")->required();
    scan->add_option("--out", scan_config.out_path,
                     "Output path (default: stdout)");
    add_param_flags(scan, scan_config.params);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& parse_error) {
        app.exit(parse_error);
        return kExitUsage;
    }

    try {
        if (identities->parsed())
            return run_identities(id_level, id_order, as_printed);
        if (certify->parsed()) {
            if (!certify_config.out_path.empty())
                certify_config.format = Format::Json;
            return run_certify(certify_config);
        }
        if (eval->parsed())
            return run_eval(eval_series, eval_point, eval_params, auto_relocate);
        if (scan->parsed()) return run_scan(scan_config, grid);
    } catch (const Error& failure) {
        std::cerr << "error: " << failure.what() << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}
