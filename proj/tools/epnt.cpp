// epnt: evaluate the explicit PNT / Bombieri-Vinogradov bounds, regenerate
// the published tables and run the verification suites.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "epnt/bv_bound.hpp"
#include "epnt/constants.hpp"
#include "epnt/reference_tables.hpp"
#include "epnt/truncation.hpp"
#include "epnt/verify.hpp"
#include "epnt/zero_data.hpp"
#include "epnt/zero_sums.hpp"

using json = nlohmann::ordered_json;
using namespace epnt;

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitStrict = 1;

struct RunConfig {
    int precision_bits = 128;
    double grid_step = 0.05;
    int tail_doublings = 4;
    std::uint64_t sieve_limit = 1000000;
    std::string output_format = "json";
    std::string errata_mode = "annotate";
    std::string reading = "reference";
    std::string domain = "loglog";

    EvalContext ctx() const {
        EvalContext c;
        c.precision_bits = precision_bits;
        c.grid_step = grid_step;
        c.tail_doublings = tail_doublings;
        c.validate();
        return c;
    }
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        double d = std::stod(v, &used);
        if (used == v.size()) return d;
    } catch (const std::exception&) {
    }
    throw ConfigError("config: bad number for " + key + ": " + v);
}

void load_config(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "precision_bits") cfg.precision_bits = int(to_double(key, val));
        else if (key == "grid_step") cfg.grid_step = to_double(key, val);
        else if (key == "tail_doublings") cfg.tail_doublings = int(to_double(key, val));
        else if (key == "sieve_limit") cfg.sieve_limit = std::uint64_t(to_double(key, val));
        else if (key == "output_format") cfg.output_format = val;
        else if (key == "errata_mode") cfg.errata_mode = val;
        else if (key == "reading") cfg.reading = val;
        else if (key == "domain") cfg.domain = val;
        else throw ConfigError("config line " + std::to_string(lineno) + ": unknown key " + key);
    }
}

void check_config(const RunConfig& cfg) {
    if (cfg.output_format != "json" && cfg.output_format != "csv")
        throw ConfigError("output_format must be json or csv");
    if (cfg.errata_mode != "strict" && cfg.errata_mode != "annotate")
        throw ConfigError("errata_mode must be strict or annotate");
    parse_reading(cfg.reading);
    parse_domain(cfg.domain);
    if (cfg.sieve_limit > kMaxSieveLimit) throw ConfigError("sieve_limit exceeds 10^9");
    cfg.ctx();
}

json value_json(const UBound& u) {
    double v = u.value();
    if (std::isfinite(v)) return v;
    return nullptr;
}

json log10_json(const UBound& u) {
    double v = u.log10_value();
    if (std::isfinite(v)) return v;
    return v > 0 ? json("inf") : json("-inf");
}

json bound_record(const std::string& target, json inputs, const UBound& u, bool certified) {
    json j;
    j["target"] = target;
    j["inputs"] = std::move(inputs);
    j["log10_value"] = log10_json(u);
    j["value_if_representable"] = value_json(u);
    j["certified"] = certified;
    return j;
}

json terms_json(const std::vector<std::pair<std::string, UBound>>& terms) {
    json a = json::array();
    for (const auto& [name, u] : terms) a.push_back({{"name", name}, {"log10_value", log10_json(u)}});
    return a;
}

std::string csv_field(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) {
        std::ostringstream os;
        os.precision(10);
        os << v.get<double>();
        return os.str();
    }
    return v.dump();
}

void emit_eval(const json& rec, const RunConfig& cfg) {
    if (cfg.output_format == "json") {
        std::cout << rec.dump() << "\n";
        return;
    }
    std::cout << "target,log10_value,value,certified\n"
              << csv_field(rec["target"]) << "," << csv_field(rec["log10_value"]) << ","
              << csv_field(rec["value_if_representable"]) << "," << csv_field(rec["certified"]) << "\n";
    if (rec.contains("terms"))
        for (const auto& t : rec["terms"])
            std::cout << csv_field(rec["target"]) << ":" << csv_field(t["name"]) << ","
                      << csv_field(t["log10_value"]) << ",,\n";
}

// ---- eval -------------------------------------------------------------

struct EvalArgs {
    double Y = 7.0;
    double alpha1 = 1.0, alpha2 = 1.0;
    std::optional<double> q, q_exp, T_exp;
    double lambda = 0.2;
    std::string branch = "auto";
    int i = 1, J = 0;
    std::optional<double> rate;
    double A = 5.0, Q1_exp = 5.0;
};

struct Point {
    Interval L, T, q;
};

Point point_of(const EvalArgs& a, Prec p, double default_T_exp, double default_q_exp) {
    Interval y(a.Y, p);
    Interval L = exp(y);
    Interval T = exp(y * a.T_exp.value_or(default_T_exp));
    Interval q = a.q ? Interval(*a.q, p) : exp(y * a.q_exp.value_or(default_q_exp));
    return {L, T, q};
}

json eval_rstar(const EvalArgs& a, const RunConfig& cfg) {
    Prec p = cfg.precision_bits;
    Reading reading = parse_reading(cfg.reading);
    Point pt = point_of(a, p, a.alpha1 + a.alpha2 + 3.0, a.alpha1);
    RStarParts parts = r_star_parts({pt.L, pt.T, pt.q}, reading);
    json in = {{"loglog_x", a.Y}, {"alpha1", a.alpha1}, {"alpha2", a.alpha2}, {"T_log10", std::log10(pt.T.mid())},
               {"reading", cfg.reading}};
    json rec = bound_record("rstar", in, UBound::from_interval(parts.total()), true);
    std::vector<std::pair<std::string, UBound>> terms = {
        {"log q/log 2", UBound::from_interval(parts.log_q_over_log2)},
        {"R2", UBound::from_interval(parts.R2)},
        {"R3", UBound::from_interval(parts.R3)},
        {"log 2", UBound::from_interval(parts.log2)},
        {"R5", UBound::from_interval(parts.R5)},
        {"R7", UBound::from_interval(parts.R7)},
        {"R8", UBound::from_interval(parts.R8)},
        {"log x", UBound::from_interval(parts.log_x)},
        {"x r4/(T-1)", UBound::from_interval(parts.r4_term)},
        {"R11", UBound::from_interval(parts.R11)}};
    rec["terms"] = terms_json(terms);
    Interval scaled = parts.total() * pt.T / (exp(pt.L) * pt.L * Interval(a.Y, p));
    rec["scaled_log10"] = log10_json(UBound::from_interval(scaled));
    return rec;
}

json eval_mu(const EvalArgs& a, const RunConfig& cfg) {
    Prec p = cfg.precision_bits;
    Point pt = point_of(a, p, 5.0, 1.0);
    Interval lam(a.lambda, p);
    json in = {{"loglog_x", a.Y}, {"q", pt.q.mid()}, {"T_log10", std::log10(pt.T.mid())}, {"lambda", a.lambda},
               {"branch", a.branch}};
    Interval v(p);
    if (a.branch == "1") v = mu_branch1_iv(pt.L, pt.q);
    else if (a.branch == "2") v = mu_branch2_iv(pt.L, pt.q);
    else if (a.branch == "3") v = mu_branch3_iv(lam, pt.L, pt.T, pt.q);
    else if (a.branch == "auto") v = mu_iv(lam, pt.L, pt.T, pt.q, MuRegion::large_gamma);
    else throw CLI::ValidationError("--branch", "must be 1, 2, 3 or auto");
    return bound_record("mu", in, UBound::from_interval(v), true);
}

json eval_sigma0(const EvalArgs& a, const RunConfig& cfg) {
    Prec p = cfg.precision_bits;
    Point pt = point_of(a, p, a.alpha1 + a.alpha2 + 3.0, a.alpha1);
    json in = {{"loglog_x", a.Y}, {"q_log10", std::log10(pt.q.mid())}, {"T_log10", std::log10(pt.T.mid())}};
    Interval v(p);
    if (a.rate) {
        in["rate"] = *a.rate;
        v = sigma0_rate_iv(pt.L, pt.T, pt.q, Interval(*a.rate, p));
    } else {
        in["i"] = a.i;
        in["J"] = a.J;
        v = sigma0_iv({pt.L, pt.T, pt.q, a.i, a.J});
    }
    return bound_record("sigma0", in, UBound::from_interval(v), true);
}

json eval_sigma1(const EvalArgs& a, const RunConfig& cfg) {
    Prec p = cfg.precision_bits;
    Point pt = point_of(a, p, a.alpha1 + a.alpha2 + 3.0, a.alpha1);
    json in = {{"loglog_x", a.Y}, {"q_log10", std::log10(pt.q.mid())}, {"T_log10", std::log10(pt.T.mid())},
               {"i", a.i}, {"J", a.J}};
    Interval small = sigma1_small_gamma_iv(pt.L, pt.q);
    Interval tail = sigma1_tail_iv({pt.L, pt.T, pt.q, a.i, a.J});
    json rec = bound_record("sigma1", in, UBound::from_interval(small + tail), true);
    rec["terms"] = terms_json({{"small_gamma", UBound::from_interval(small)}, {"tail", UBound::from_interval(tail)}});
    return rec;
}

json eval_eterm(const EvalArgs& a, const RunConfig& cfg) {
    Prec p = cfg.precision_bits;
    auto params = BVParams::from_exponent(a.Y, a.A, a.Q1_exp, p);
    auto parts = e_term_parts(params, p);
    json in = {{"loglog_x", a.Y}, {"A", a.A}, {"Q1_exp", a.Q1_exp}};
    json rec = bound_record("e-term", in, UBound::from_interval(parts[0].value + parts[1].value + parts[2].value), true);
    std::vector<std::pair<std::string, UBound>> terms;
    for (const auto& t : parts) terms.emplace_back(t.name, UBound::from_interval(t.value));
    for (const auto& t : e_term_middle_parts(params, p)) terms.emplace_back("E_exceptional/" + t.name, UBound::from_interval(t.value));
    rec["terms"] = terms_json(terms);
    return rec;
}

json eval_bv(const EvalArgs& a, const RunConfig& cfg) {
    EvalContext ctx = cfg.ctx();
    auto params = BVParams::from_exponent(a.Y, a.A, a.Q1_exp, ctx.prec());
    BVResult r = bv_rhs(params, ctx);
    json in = {{"loglog_x", a.Y}, {"A", a.A}, {"Q1_exp", a.Q1_exp}};
    json rec = bound_record("bv", in, r.total, r.certified);
    rec["terms"] = terms_json(r.terms);
    rec["C"] = {{"alpha1", a.A},
                {"alpha2", a.A - 3.0},
                {"Y0", bv_threshold(a.A)},
                {"log10_value", log10_json(r.C.value)},
                {"tail_certified", r.C.tail_certified}};
    // log10 of total/x, which is what "nontrivial" is about
    Real lx(ctx.prec());
    mpfr_set_d(lx.get(), a.Y, MPFR_RNDD);
    mpfr_exp(lx.get(), lx.get(), MPFR_RNDD);
    Real ratio(ctx.prec());
    mpfr_sub(ratio.get(), r.total.log_value().get(), lx.get(), MPFR_RNDU);
    rec["total_over_x_log10"] = UBound::from_log(ratio).log10_value();
    return rec;
}

// ---- table ------------------------------------------------------------

struct TableRow {
    double param, alpha1, alpha2;
    std::optional<double> paper;
    const char* errata = nullptr;
};

std::vector<TableRow> builtin_rows(TableKind kind) {
    std::vector<TableRow> rows;
    for (const auto& r : reference_rows(kind)) rows.push_back({r.param, r.alpha1, r.alpha2, std::stod(r.value), r.errata});
    return rows;
}

bool numeric(const std::string& s) {
    try {
        std::size_t used = 0;
        std::stod(s, &used);
        return used == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<TableRow> file_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read rows file " + path);
    std::vector<TableRow> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) f.push_back(trim(cell));
        if (rows.empty() && !f.empty() && !numeric(f[0])) continue;  // header
        if (f.size() < 3 || f.size() > 4) throw DataError(path + ":" + std::to_string(lineno) + ": expected 3 or 4 fields");
        for (const auto& x : f)
            if (!numeric(x)) throw DataError(path + ":" + std::to_string(lineno) + ": not a number: " + x);
        TableRow r{std::stod(f[0]), std::stod(f[1]), std::stod(f[2])};
        if (f.size() == 4) r.paper = std::stod(f[3]);
        rows.push_back(r);
    }
    return rows;
}

std::string largest(const std::vector<std::pair<std::string, const Interval*>>& parts) {
    const std::pair<std::string, const Interval*>* best = nullptr;
    for (const auto& p : parts)
        if (!best || cmp(p.second->hi(), best->second->hi()) > 0) best = &p;
    return best ? best->first : "";
}

std::string r_attribution(double Y, const TableRow& row, Prec p, Reading reading) {
    auto in = TruncationInputs::from_loglog(Y, row.alpha1 + row.alpha2 + 3.0, row.alpha1, p);
    RStarParts r = r_star_parts(in, reading);
    return largest({{"log q/log 2", &r.log_q_over_log2}, {"R2", &r.R2}, {"R3", &r.R3}, {"R5", &r.R5}, {"R7", &r.R7},
                    {"R8", &r.R8}, {"log x", &r.log_x}, {"x r4/(T-1)", &r.r4_term}, {"R11", &r.R11}});
}

std::string c_attribution(double Y, const TableRow& row, Prec p, Reading reading) {
    CTerms t = constant_C_terms(Y, row.alpha1, row.alpha2, p, reading);
    std::string name = largest({{"rstar_term", &t.rstar_term}, {"small_gamma", &t.small_gamma}, {"zero_sum", &t.zero_sum}});
    if (t.best_i) name += " (i=" + std::to_string(t.best_i) + ", J=" + std::to_string(t.best_J) + ")";
    return name;
}

int cmd_table(const std::string& which, const std::string& rows_src, const RunConfig& cfg) {
    TableKind kind = which == "r" ? TableKind::r : which == "c" ? TableKind::c : TableKind::c1;
    std::vector<TableRow> rows = rows_src == "builtin" ? builtin_rows(kind) : file_rows(rows_src);
    EvalContext ctx = cfg.ctx();
    Reading reading = parse_reading(cfg.reading);
    Domain domain = parse_domain(cfg.domain);
    bool json_out = cfg.output_format == "json";
    if (!json_out)
        std::cout << "param,alpha1,alpha2,paper_value,computed_value,ratio,status,dominant_term,argmax_Y,"
                     "tail_certified,q_monotone,note\n";
    bool any_loose = false;
    for (const auto& row : rows) {
        SupCertificate cert;
        std::string dominant;
        if (kind == TableKind::r) {
            cert = r_factor(row.param, row.alpha1, row.alpha2, ctx, reading);
            dominant = r_attribution(cert.argmax_Y, row, ctx.prec(), reading);
        } else {
            BoundParams bp{row.alpha1, row.alpha2, row.param};
            cert = kind == TableKind::c ? constant_C(bp, ctx, reading, domain) : constant_C1(bp, ctx, reading, domain);
            if (kind == TableKind::c1) {
                SupCertificate c = constant_C(bp, ctx, reading, domain);
                UBound s = siegel_absorption(cert.argmax_Y, row.alpha1, row.alpha2, ctx.prec());
                dominant = c.value < s ? "siegel" : c_attribution(c.argmax_Y, row, ctx.prec(), reading);
            } else {
                dominant = c_attribution(cert.argmax_Y, row, ctx.prec(), reading);
            }
        }
        double computed = cert.value.value();
        json ratio = nullptr;
        std::string status = "ok";
        if (row.paper) {
            double rt = computed / *row.paper;
            ratio = rt;
            bool within = kind == TableKind::r ? std::fabs(rt - 1.0) <= 0.02 : (rt >= 0.5 && rt <= 2.0);
            if (!within) status = "loose";
        }
        if (row.errata) status = "errata";
        if (status == "loose") any_loose = true;
        json rec = {{"table", which},
                    {"param", row.param},
                    {"alpha1", row.alpha1},
                    {"alpha2", row.alpha2},
                    {"paper_value", row.paper ? json(*row.paper) : json(nullptr)},
                    {"computed_value", std::isfinite(computed) ? json(computed) : json(nullptr)},
                    {"computed_log10", log10_json(cert.value)},
                    {"ratio", ratio},
                    {"status", status},
                    {"dominant_term", dominant},
                    {"argmax_Y", cert.argmax_Y},
                    {"tail_certified", cert.tail_certified},
                    {"q_monotone", cert.q_monotone},
                    {"note", row.errata ? row.errata : ""}};
        if (json_out) {
            std::cout << rec.dump() << "\n";
        } else {
            std::cout << csv_field(rec["param"]) << "," << csv_field(rec["alpha1"]) << "," << csv_field(rec["alpha2"])
                      << "," << csv_field(rec["paper_value"]) << "," << csv_field(rec["computed_value"]) << ","
                      << csv_field(rec["ratio"]) << "," << status << ",\"" << dominant << "\","
                      << csv_field(rec["argmax_Y"]) << "," << csv_field(rec["tail_certified"]) << ","
                      << csv_field(rec["q_monotone"]) << ",\"" << csv_field(rec["note"]) << "\"\n";
        }
    }
    return cfg.errata_mode == "strict" && any_loose ? kExitStrict : 0;
}

// ---- verify -----------------------------------------------------------

int cmd_verify(const std::string& suite, const RunConfig& cfg) {
    VerifyOptions opt;
    opt.sieve_limit = cfg.sieve_limit;
    opt.precision_bits = cfg.precision_bits;
    std::vector<CheckResult> results;
    if (suite == "oracle" || suite == "all") {
        auto r = oracle_suite(opt);
        results.insert(results.end(), r.begin(), r.end());
    }
    if (suite == "properties" || suite == "all") {
        auto r = property_suite(opt);
        results.insert(results.end(), r.begin(), r.end());
    }
    bool json_out = cfg.output_format == "json";
    if (!json_out) std::cout << "check,status,checked,detail\n";
    for (const auto& r : results) {
        if (json_out)
            std::cout << json{{"check", r.name}, {"status", to_string(r.status)}, {"checked", r.checked}, {"detail", r.detail}}.dump()
                      << "\n";
        else
            std::cout << r.name << "," << to_string(r.status) << "," << r.checked << ",\"" << r.detail << "\"\n";
    }
    return all_passed(results) ? 0 : kExitStrict;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit prime number theorem bounds: evaluation, tables and verification"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig flags;
    std::string config_path;
    app.add_option("--config", config_path, "key=value configuration file");
    auto* o_prec = app.add_option("--precision-bits", flags.precision_bits, "MPFR working precision");
    auto* o_step = app.add_option("--grid-step", flags.grid_step, "supremum grid step in log log x");
    auto* o_tail = app.add_option("--tail-doublings", flags.tail_doublings, "number of tail probes");
    auto* o_sieve = app.add_option("--sieve-limit", flags.sieve_limit, "sieve limit for the oracle suite");
    auto* o_fmt = app.add_option("--format", flags.output_format, "csv or json");
    auto* o_errata = app.add_option("--errata-mode", flags.errata_mode, "strict or annotate");
    auto* o_reading = app.add_option("--reading", flags.reading, "reference or verbatim");
    auto* o_domain = app.add_option("--domain", flags.domain, "loglog or raw");

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "evaluate one bound");
    eval->require_subcommand(1);
    auto common = [&](CLI::App* s) { s->add_option("--loglog-x", ea.Y, "log log x"); };
    auto family = [&](CLI::App* s) {
        s->add_option("--alpha1", ea.alpha1);
        s->add_option("--alpha2", ea.alpha2);
        s->add_option("--q", ea.q, "modulus q (overrides --q-exp)");
        s->add_option("--q-exp", ea.q_exp, "q = (log x)^e");
        s->add_option("--T-exp", ea.T_exp, "T = (log x)^e");
    };
    auto* e_rstar = eval->add_subcommand("rstar", "R*(x, T, q) with its summands");
    common(e_rstar);
    family(e_rstar);
    auto* e_mu = eval->add_subcommand("mu", "the three-branch mu bound");
    common(e_mu);
    family(e_mu);
    e_mu->add_option("--lambda", ea.lambda);
    e_mu->add_option("--branch", ea.branch, "1, 2, 3 or auto");
    auto* e_s0 = eval->add_subcommand("sigma0", "Sigma0 bound");
    common(e_s0);
    family(e_s0);
    e_s0->add_option("--i", ea.i);
    e_s0->add_option("--J", ea.J);
    e_s0->add_option("--rate", ea.rate, "use x^{-rate/log qT} instead of R_{i,J}");
    auto* e_s1 = eval->add_subcommand("sigma1", "Sigma1 bound (small-gamma part plus tail)");
    common(e_s1);
    family(e_s1);
    e_s1->add_option("--i", ea.i);
    e_s1->add_option("--J", ea.J);
    auto* e_e = eval->add_subcommand("e-term", "E(x, A)");
    auto* e_bv = eval->add_subcommand("bv", "right-hand side of the Bombieri-Vinogradov bound");
    for (auto* s : {e_e, e_bv}) {
        common(s);
        s->add_option("--A", ea.A);
        s->add_option("--Q1-exp", ea.Q1_exp, "Q1 = (log x)^e");
    }

    std::string table_which, rows_src = "builtin";
    auto* table = app.add_subcommand("table", "regenerate a published table");
    table->add_option("which", table_which, "r, c or c1")->required()->check(CLI::IsMember({"r", "c", "c1"}));
    table->add_option("--rows", rows_src, "builtin or a CSV file of param,alpha1,alpha2[,value]");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("suite", suite, "oracle, properties or all")->required()->check(CLI::IsMember({"oracle", "properties", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) load_config(config_path, cfg);
        if (o_prec->count()) cfg.precision_bits = flags.precision_bits;
        if (o_step->count()) cfg.grid_step = flags.grid_step;
        if (o_tail->count()) cfg.tail_doublings = flags.tail_doublings;
        if (o_sieve->count()) cfg.sieve_limit = flags.sieve_limit;
        if (o_fmt->count()) cfg.output_format = flags.output_format;
        if (o_errata->count()) cfg.errata_mode = flags.errata_mode;
        if (o_reading->count()) cfg.reading = flags.reading;
        if (o_domain->count()) cfg.domain = flags.domain;
        check_config(cfg);

        if (*eval) {
            json rec;
            if (*e_rstar) rec = eval_rstar(ea, cfg);
            else if (*e_mu) rec = eval_mu(ea, cfg);
            else if (*e_s0) rec = eval_sigma0(ea, cfg);
            else if (*e_s1) rec = eval_sigma1(ea, cfg);
            else if (*e_e) rec = eval_eterm(ea, cfg);
            else rec = eval_bv(ea, cfg);
            emit_eval(rec, cfg);
            return 0;
        }
        if (*table) return cmd_table(table_which, rows_src, cfg);
        return cmd_verify(suite, cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const RangeError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    }
}
