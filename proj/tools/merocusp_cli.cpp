#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "merocusp/basis_solver.hpp"
#include "merocusp/bigfloat.hpp"
#include "merocusp/coeff_engine.hpp"
#include "merocusp/elliptic_expansion.hpp"
#include "merocusp/error.hpp"
#include "merocusp/form_expression.hpp"
#include "merocusp/json_io.hpp"
#include "merocusp/lattice.hpp"
#include "merocusp/pipeline.hpp"
#include "merocusp/special_values.hpp"

using namespace merocusp;

namespace {

enum Exit { kOk = 0, kUsage = 1, kNumerical = 2, kVerifyFailed = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string form;
    std::string m_range = "0..10";
    long norm_bound = 5000;
    long precision = kDefaultPrecision;
    std::string output = "json";
    std::string out_path;
    std::string method = "auto";
    bool serial = false;
    double tol = 1e-8;
    std::string field = "gaussian";
    long bound = 100;
    std::string point = "i";
    int depth = 6;
    std::string input;
    std::string identity_form = "published";
    long identity_bound = 10000;
    int jet_depth = 3;
};

long default_precision() {
    const char* env = std::getenv("MEROCUSP_PRECISION");
    if (!env || !*env) return kDefaultPrecision;
    char* end = nullptr;
    long p = std::strtol(env, &end, 10);
    if (*end != '\0' || p < 64) throw UsageError("MEROCUSP_PRECISION must be an integer >= 64");
    return p;
}

// "a..b", "a" or "a,b,c"
std::vector<long> parse_m_range(const std::string& text) {
    std::vector<long> out;
    auto to_long = [&](const std::string& s) {
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(s, &pos);
        } catch (const std::exception&) {
            throw UsageError("bad m range \"" + text + "\"");
        }
        if (pos != s.size() || v < 0) throw UsageError("bad m range \"" + text + "\"");
        return v;
    };
    if (auto dots = text.find(".."); dots != std::string::npos) {
        long lo = to_long(text.substr(0, dots)), hi = to_long(text.substr(dots + 2));
        for (long m = lo; m <= hi; ++m) out.push_back(m);
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(to_long(item));
    }
    if (out.empty()) throw UsageError("m range is empty");
    return out;
}

void validate(const RunConfig& cfg) {
    if (cfg.precision < 64) throw UsageError("precision must be at least 64 bits");
    if (cfg.norm_bound < 16) throw UsageError("norm bound must be at least 16");
    if (cfg.output != "json" && cfg.output != "csv") throw UsageError("output must be json or csv");
}

class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot open " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

FormExpression parse_form(const RunConfig& cfg) {
    if (cfg.form.empty()) throw UsageError("--form is required");
    return FormExpression::parse(cfg.form);
}

QuasiMethod parse_method(const std::string& s) {
    if (s == "auto") return QuasiMethod::automatic;
    if (s == "simple") return QuasiMethod::simple_pole;
    if (s == "general") return QuasiMethod::general;
    throw UsageError("method must be auto, simple or general");
}

std::string short_number(const BigReal& x) { return x.to_string(6); }

struct CoeffRow {
    long m;
    TruncatedSum sum;
    std::optional<mpq_class> oracle;
    std::optional<BigReal> rel_err;
};

std::vector<CoeffRow> compute_rows(const RunConfig& cfg) {
    const prec_t prec = cfg.precision;
    FormExpression expr = parse_form(cfg);
    auto ms = parse_m_range(cfg.m_range);
    long m_max = 0;
    for (long m : ms) m_max = std::max(m_max, m);

    std::optional<std::vector<mpq_class>> oracle;
    try {
        oracle = oracle_coeffs(expr, static_cast<int>(m_max));
    } catch (const DomainError&) {
    }

    FormPipeline pipeline(expr, prec, parse_method(cfg.method));
    const Execution mode = cfg.serial ? Execution::serial : Execution::parallel;
    std::vector<CoeffRow> rows;
    for (long m : ms) {
        CoeffRow row{m, pipeline.coefficient(m, cfg.norm_bound, mode), std::nullopt, std::nullopt};
        if (oracle) {
            row.oracle = (*oracle)[m];
            row.rel_err = rel_diff(row.sum.value, BigComplex(BigReal(*row.oracle, prec)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_rows(std::ostream& os, const std::vector<CoeffRow>& rows, const std::string& format,
                std::optional<double> tol) {
    if (format == "csv") {
        os << "m,value_re,value_im,tail_bound,oracle,rel_err";
        if (tol) os << ",pass";
        os << "\n";
        for (const auto& r : rows) {
            os << r.m << "," << r.sum.value.re.to_string() << "," << r.sum.value.im.to_string() << ","
               << short_number(r.sum.tail_bound) << "," << (r.oracle ? rational_string(*r.oracle) : "") << ","
               << (r.rel_err ? short_number(*r.rel_err) : "");
            if (tol) os << "," << (r.rel_err && r.rel_err->to_double() <= *tol ? "true" : "false");
            os << "\n";
        }
        return;
    }
    json arr = json::array();
    for (const auto& r : rows) {
        json row{{"m", r.m},
                 {"value_re", r.sum.value.re.to_string()},
                 {"value_im", r.sum.value.im.to_string()},
                 {"tail_bound", short_number(r.sum.tail_bound)},
                 {"norm_bound", r.sum.norm_bound}};
        row["oracle"] = r.oracle ? json(rational_string(*r.oracle)) : json(nullptr);
        row["rel_err"] = r.rel_err ? json(short_number(*r.rel_err)) : json(nullptr);
        if (tol) row["pass"] = r.rel_err && r.rel_err->to_double() <= *tol;
        arr.push_back(row);
    }
    os << arr.dump(2) << "\n";
}

int cmd_coeffs(const RunConfig& cfg) {
    auto rows = compute_rows(cfg);
    Sink sink(cfg.out_path);
    write_rows(sink.out(), rows, cfg.output, std::nullopt);
    return kOk;
}

int cmd_verify(const RunConfig& cfg) {
    auto rows = compute_rows(cfg);
    Sink sink(cfg.out_path);
    write_rows(sink.out(), rows, cfg.output, cfg.tol);
    for (const auto& r : rows)
        if (!r.rel_err || r.rel_err->to_double() > cfg.tol) return kVerifyFailed;
    return kOk;
}

int cmd_oracle(const RunConfig& cfg) {
    FormExpression expr = parse_form(cfg);
    auto ms = parse_m_range(cfg.m_range);
    long m_max = 0;
    for (long m : ms) m_max = std::max(m_max, m);
    auto coeffs = oracle_coeffs(expr, static_cast<int>(m_max));
    Sink sink(cfg.out_path);
    if (cfg.output == "csv") {
        sink.out() << "m,coefficient\n";
        for (long m : ms) sink.out() << m << "," << rational_string(coeffs[m]) << "\n";
    } else {
        json arr = json::array();
        for (long m : ms) arr.push_back(rational_string(coeffs[m]));
        sink.out() << arr.dump() << "\n";
    }
    return kOk;
}

int cmd_identity(const RunConfig& cfg) {
    IdentityForm form;
    if (cfg.identity_form == "published")
        form = IdentityForm::published;
    else if (cfg.identity_form == "derived")
        form = IdentityForm::derived;
    else
        throw UsageError("identity form must be published or derived");
    auto check = identity_check_m0(cfg.identity_bound, cfg.precision, form);
    BigReal allowed = max(check.tail_bound, abs(check.rhs) * BigReal::from_double(1e-6, cfg.precision));
    bool pass = check.abs_err <= allowed;
    json out{{"form", cfg.identity_form},
             {"norm_bound", cfg.identity_bound},
             {"lhs", check.lhs.to_string()},
             {"rhs", check.rhs.to_string()},
             {"abs_err", short_number(check.abs_err)},
             {"tail_bound", short_number(check.tail_bound)},
             {"allowed", short_number(allowed)},
             {"pass", pass}};
    Sink sink(cfg.out_path);
    sink.out() << out.dump(2) << "\n";
    return pass ? kOk : kVerifyFailed;
}

int cmd_enumerate(const RunConfig& cfg) {
    Field field;
    if (cfg.field == "gaussian")
        field = Field::gaussian;
    else if (cfg.field == "eisenstein")
        field = Field::eisenstein;
    else
        throw UsageError("field must be gaussian or eisenstein");
    if (cfg.bound < 1) throw UsageError("bound must be positive");
    Sink sink(cfg.out_path);
    auto& os = sink.out();
    os << "field,c,d,norm,a,b\n";
    for (const auto& id : enumerate_primitive(field, cfg.bound))
        os << field_name(field) << "," << id.c << "," << id.d << "," << id.norm << "," << id.a << "," << id.b << "\n";
    return kOk;
}

int cmd_expand(const RunConfig& cfg) {
    FormExpression expr = parse_form(cfg);
    if (cfg.depth < 0) throw UsageError("depth must be non-negative");
    EllipticPoint point = parse_point(cfg.point, cfg.precision);
    LaurentSeries s = laurent_at(expr, point, cfg.depth, cfg.precision);
    LaurentSeries trimmed = s;
    trimmed.coeffs.resize(static_cast<std::size_t>(std::max(0, cfg.depth - s.lowest_order + 1)), BigComplex(cfg.precision));
    json out = to_json(trimmed);
    out["principal_part"] = to_json(principal_part(s));
    Sink sink(cfg.out_path);
    sink.out() << out.dump(2) << "\n";
    return kOk;
}

int cmd_basis(const RunConfig& cfg) {
    BasisRepresentation rep;
    if (!cfg.input.empty()) {
        std::ifstream in(cfg.input);
        if (!in) throw UsageError("cannot open " + cfg.input);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw UsageError(std::string("bad JSON input: ") + e.what());
        }
        BasisInput bi = basis_input_from_json(j, cfg.precision);
        rep = solve_basis(bi.parts, bi.k, cfg.precision);
    } else {
        FormExpression expr = parse_form(cfg);
        rep = solve_basis(elliptic_principal_parts(expr, cfg.precision), source_k(expr), cfg.precision);
    }
    Sink sink(cfg.out_path);
    sink.out() << to_json(rep).dump(2) << "\n";
    return kOk;
}

int cmd_constants(const RunConfig& cfg) {
    const prec_t prec = cfg.precision;
    json out;
    for (PointTag tag : {PointTag::I, PointTag::Rho}) {
        EllipticPoint point = EllipticPoint::from_tag(tag, prec);
        json entry;
        json values;
        for (int w : {2, 4, 6}) values["E" + std::to_string(w)] = closed_value(w, tag, prec).to_string();
        entry["closed_values"] = values;
        DerivativeJet jet = derivative_jet(point, cfg.jet_depth, prec);
        json jets;
        for (int w : {2, 4, 6}) {
            json rows = json::array();
            for (int r = 0; r <= cfg.jet_depth; ++r) {
                json v = to_json(jet.value(w, r));
                v["order"] = r;
                rows.push_back(v);
            }
            jets["E" + std::to_string(w)] = rows;
        }
        entry["derivatives"] = jets;
        out[point.name()] = entry;
    }
    Sink sink(cfg.out_path);
    sink.out() << out.dump(2) << "\n";
    return kOk;
}

json error_json(const Error& e) {
    const char* kind = e.kind() == ErrorKind::parse ? "parse" : e.kind() == ErrorKind::domain ? "domain" : "numerical";
    json err{{"kind", kind}, {"message", e.what()}};
    if (auto* r = dynamic_cast<const ResidualError*>(&e)) err["residual"] = r->residual();
    return json{{"error", err}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier coefficients of meromorphic and quasi-meromorphic cusp forms"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    try {
        cfg.precision = default_precision();
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }
    app.add_option("--precision,-p", cfg.precision, "working precision in bits (env MEROCUSP_PRECISION)");
    app.add_option("--output,-o", cfg.output, "json or csv");
    app.add_option("--out", cfg.out_path, "write to a file instead of stdout");
    app.add_flag("--serial", cfg.serial, "disable OpenMP in the ideal sums");

    auto add_form_options = [&](CLI::App* sub) {
        sub->add_option("--form,-f", cfg.form, "form expression, e.g. \"E2^2/E10\"")->required();
        sub->add_option("--m", cfg.m_range, "coefficient indices: a..b, a or a,b,c");
        sub->add_option("--norm-bound,-B", cfg.norm_bound, "largest ideal norm in the sums");
        sub->add_option("--method", cfg.method, "auto, simple or general (E2 powers)");
    };

    auto* coeffs = app.add_subcommand("coeffs", "coefficients from the ideal-sum formulas");
    add_form_options(coeffs);
    auto* verify = app.add_subcommand("verify", "compare formula coefficients with the exact q-series");
    add_form_options(verify);
    verify->add_option("--tol", cfg.tol, "relative tolerance");
    auto* oracle = app.add_subcommand("oracle", "exact rational coefficients");
    oracle->add_option("--form,-f", cfg.form)->required();
    oracle->add_option("--m", cfg.m_range);
    auto* identity = app.add_subcommand("identity", "constant-term identity for 1/E6^4");
    identity->add_option("--norm-bound,-B", cfg.identity_bound, "largest ideal norm in the sum");
    identity->add_option("--form", cfg.identity_form, "published or derived");
    auto* enumerate = app.add_subcommand("enumerate", "primitive ideals up to a norm bound (CSV)");
    enumerate->add_option("--field", cfg.field, "gaussian or eisenstein");
    enumerate->add_option("--bound", cfg.bound, "norm bound");
    auto* expand = app.add_subcommand("expand", "Laurent expansion at a point");
    expand->add_option("--form,-f", cfg.form)->required();
    expand->add_option("--point", cfg.point, "i, rho or tau=<re>,<im>");
    expand->add_option("--depth", cfg.depth, "highest order printed");
    auto* basis = app.add_subcommand("basis", "basis representation from principal parts");
    basis->add_option("--input", cfg.input, "JSON file {\"k\": K, \"principal_parts\": [...]}");
    basis->add_option("--form,-f", cfg.form, "derive principal parts from a form instead");
    auto* constants = app.add_subcommand("constants", "special values and derivative jets at i and rho");
    constants->add_option("--depth", cfg.jet_depth, "jet depth");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        validate(cfg);
        if (coeffs->parsed()) return cmd_coeffs(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (oracle->parsed()) return cmd_oracle(cfg);
        if (identity->parsed()) return cmd_identity(cfg);
        if (enumerate->parsed()) return cmd_enumerate(cfg);
        if (expand->parsed()) return cmd_expand(cfg);
        if (basis->parsed()) {
            if (cfg.input.empty() && cfg.form.empty()) throw UsageError("basis needs --input or --form");
            return cmd_basis(cfg);
        }
        if (constants->parsed()) return cmd_constants(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cout << error_json(e).dump() << "\n";
        return kNumerical;
    } catch (const json::exception& e) {
        std::cerr << "bad JSON input: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
