#include "lapn/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lapn/boom.hpp"
#include "lapn/charsum.hpp"
#include "lapn/diff.hpp"
#include "lapn/error.hpp"
#include "lapn/family.hpp"
#include "lapn/field.hpp"
#include "lapn/numtheory.hpp"
#include "lapn/parallel.hpp"
#include "lapn/predict.hpp"
#include "lapn/scan.hpp"
#include "lapn/serialize.hpp"

namespace lapn {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::uint64_t p = 0;
    unsigned n = 1;
    std::uint64_t r = 0;
    std::int64_t u = 1;
    std::optional<std::uint64_t> qmax;
    std::uint64_t rmin = 2;
    std::optional<std::uint64_t> rmax;
    std::string format = "json";
    std::string out_path;
    std::string theorem;
    std::string which;
    unsigned jobs = 1;
    bool verbose = false;
};

void add_field_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--p", cfg.p, "odd prime characteristic")->required();
    cmd->add_option("--n", cfg.n, "extension degree")->capture_default_str();
}

void add_jobs(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--jobs", cfg.jobs, "worker threads (default from LAPN_JOBS)")->check(CLI::PositiveNumber);
}

Field make_field(std::uint64_t p, unsigned n) {
    if (n >= 1 && p >= 2 && !nt::checked_pow(p, n)) {
        throw UsageError("--n: q = " + std::to_string(p) + "^" + std::to_string(n) + " does not fit below 2^63");
    }
    try {
        return Field::make(p, n);
    } catch (const Error& e) {
        throw UsageError(std::string(e.code() == ErrorCode::BadDegree ? "--n: " : "--p: ") + e.what());
    }
}

// Fields F_{p^n} with q <= qmax, ordered by q.
std::vector<std::pair<std::uint64_t, unsigned>> fields_up_to(std::uint64_t qmax) {
    std::vector<std::pair<std::uint64_t, std::pair<std::uint64_t, unsigned>>> found;
    for (std::uint64_t p = 3; p <= qmax; p += 2) {
        if (!nt::is_prime(p)) continue;
        std::uint64_t q = p;
        for (unsigned n = 1;; ++n) {
            found.push_back({q, {p, n}});
            if (q > qmax / p) break;
            q *= p;
        }
    }
    std::sort(found.begin(), found.end());
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (const auto& f : found) out.push_back(f.second);
    return out;
}

void print_spectrum_csv(std::ostream& out, const char* column, const Spectrum& s) {
    out << "i," << column << "\n";
    for (const auto& [i, c] : s) out << i << "," << c << "\n";
}

int cmd_field_info(const RunConfig& cfg, std::ostream& out) {
    const Field field = make_field(cfg.p, cfg.n);
    out << dump_line(field_json(field));
    return 0;
}

int cmd_families(const RunConfig& cfg, std::ostream& out) {
    const Field field = make_field(cfg.p, cfg.n);
    out << dump_line(families_json(field, table1_exponents(field)));
    return 0;
}

BinomialSpec spec_from(const Field& field, const RunConfig& cfg) {
    if (cfg.r == 0) throw UsageError("--r: exponent must be >= 1");
    return {cfg.r, field.from_int(cfg.u)};
}

int cmd_spectrum_diff(const RunConfig& cfg, std::ostream& out) {
    const Field field = make_field(cfg.p, cfg.n);
    const BinomialSpec spec = spec_from(field, cfg);
    const DeltaRow row = delta_row(field, spec);
    const DiffSpectrum s = diff_spectrum(row);
    if (cfg.format == "csv") {
        print_spectrum_csv(out, "omega", s.omega);
    } else {
        out << dump_line(diff_json(field, spec, s, locally_apn_check(field, row)));
    }
    return 0;
}

int cmd_spectrum_boom(const RunConfig& cfg, std::ostream& out) {
    const Field field = make_field(cfg.p, cfg.n);
    const BinomialSpec spec = spec_from(field, cfg);
    const BoomSpectrum s = boom_spectrum(field, spec, cfg.jobs);
    if (cfg.format == "csv") {
        print_spectrum_csv(out, "nu", s.nu);
    } else {
        out << dump_line(boom_json(field, spec, s));
    }
    return 0;
}

int cmd_charsum(const RunConfig& cfg, const std::string& name, std::ostream& out) {
    const Field field = make_field(cfg.p, cfg.n);
    const CharSumResult c = name == "gamma" ? gamma(field) : lambda(field);
    out << dump_line(charsum_json(field, name, c));
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto theorem = parse_theorem(cfg.theorem);
    if (!theorem) throw UsageError("--theorem: unknown theorem '" + cfg.theorem + "'");

    std::vector<Field> fields;
    if (cfg.qmax) {
        for (const auto& [p, n] : fields_up_to(*cfg.qmax)) {
            if (cfg.p != 0 && p != cfg.p) continue;
            Field f = make_field(p, n);
            if (applicable(f, *theorem)) fields.push_back(std::move(f));
        }
    } else {
        if (cfg.p == 0) throw UsageError("--p: required unless --qmax is given");
        fields.push_back(make_field(cfg.p, cfg.n));
    }

    std::uint64_t checked = 0, mismatches = 0;
    for (const Field& field : fields) {
        for (const VerifyReport& rep : verify(field, *theorem, cfg.jobs)) {
            ++checked;
            if (!rep.match) ++mismatches;
            if (cfg.format == "csv") {
                if (checked == 1) out << "p,n,q,r,match\n";
                out << rep.p << "," << rep.n << "," << rep.q << "," << rep.r << "," << (rep.match ? 1 : 0) << "\n";
            } else if (cfg.verbose || !rep.match || !cfg.qmax) {
                out << dump_line(verify_json(rep));
            }
        }
    }
    if (cfg.format != "csv") {
        out << dump_line({{"theorem", cfg.theorem},
                          {"fields", fields.size()},
                          {"reports", checked},
                          {"mismatches", mismatches}});
    }
    return mismatches == 0 ? 0 : 2;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
    const Field field = make_field(cfg.p, cfg.n);
    const std::uint64_t rmax = cfg.rmax.value_or(field.order() - 1);
    std::vector<ScanResult> results;
    try {
        results = scan_exponents(field, cfg.rmin, rmax, cfg.jobs);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::BadRange) throw UsageError(std::string("--rmin/--rmax: ") + e.what());
        throw;
    }
    std::ostringstream lines;
    for (const auto& s : results) lines << dump_line(scan_json(s));
    if (cfg.out_path.empty()) {
        out << lines.str();
    } else {
        std::ofstream file(cfg.out_path, std::ios::app);
        if (!file) throw UsageError("--out: cannot open " + cfg.out_path);
        file << lines.str();
    }
    return 0;
}

std::uint64_t count(const Spectrum& s, std::uint64_t i) {
    auto it = s.find(i);
    return it == s.end() ? 0 : it->second;
}

int cmd_tables(const RunConfig& cfg, std::ostream& out) {
    if (cfg.which == "ds-f3") {
        const std::uint64_t qmax = cfg.qmax.value_or(230);
        out << "q,Gamma,omega_0,omega_1,omega_2,omega_top\n";
        for (std::uint64_t q = 11; q <= qmax; q += 12) {
            if (!nt::is_prime(q)) continue;
            const Field field = make_field(q, 1);
            const DiffSpectrum s = diff_spectrum(field, BinomialSpec{3, field.one()});
            out << q << "," << gamma(field).value << "," << count(s.omega, 0) << "," << count(s.omega, 1) << ","
                << count(s.omega, 2) << "," << count(s.omega, (q + 1) / 4) << "\n";
        }
        return 0;
    }
    const unsigned nmax = cfg.qmax ? static_cast<unsigned>(*cfg.qmax) : 9;
    out << "n,Lambda,nu_0,nu_1\n";
    for (unsigned n = 3; n <= nmax; n += 2) {
        const Field field = make_field(3, n);
        const BoomSpectrum s = boom_spectrum(field, BinomialSpec{2, field.one()}, cfg.jobs);
        out << n << "," << lambda(field).value << "," << count(s.nu, 0) << "," << count(s.nu, 1) << "\n";
    }
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    cfg.jobs = default_jobs();

    CLI::App app{"Differential and boomerang analysis of x^r(1 + u chi(x)) over odd finite fields", "lapn"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"json", "csv"};

    auto* field = app.add_subcommand("field", "field parameters")->require_subcommand(1);
    auto* field_info = field->add_subcommand("info", "modulus and generator");
    add_field_options(field_info, cfg);

    auto* families = app.add_subcommand("families", "listed exponents applicable to the field");
    add_field_options(families, cfg);

    auto* spectrum = app.add_subcommand("spectrum", "differential or boomerang spectrum")->require_subcommand(1);
    auto* spec_diff = spectrum->add_subcommand("diff", "differential spectrum at a = 1");
    auto* spec_boom = spectrum->add_subcommand("boom", "boomerang spectrum at a = 1");
    for (auto* cmd : {spec_diff, spec_boom}) {
        add_field_options(cmd, cfg);
        cmd->add_option("--r", cfg.r, "exponent")->required();
        cmd->add_option("--u", cfg.u, "coefficient u as an integer")->capture_default_str();
        cmd->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
        cmd->add_flag("--json", [&](std::int64_t) { cfg.format = "json"; }, "same as --format json");
        add_jobs(cmd, cfg);
    }

    auto* charsum = app.add_subcommand("charsum", "character sums")->require_subcommand(1);
    auto* cs_gamma = charsum->add_subcommand("gamma", "the sum controlling omega_2 of F_3");
    auto* cs_lambda = charsum->add_subcommand("lambda", "the sum controlling nu_1 of F_2");
    add_field_options(cs_gamma, cfg);
    add_field_options(cs_lambda, cfg);

    auto* verify_cmd = app.add_subcommand("verify", "closed forms against brute force");
    verify_cmd->add_option("--theorem", cfg.theorem, "du, ds-f3, ds-f3inv, bs-f2 or cm-equiv")->required();
    verify_cmd->add_option("--p", cfg.p, "characteristic (restricts --qmax sweeps)");
    verify_cmd->add_option("--n", cfg.n, "extension degree");
    verify_cmd->add_option("--qmax", cfg.qmax, "sweep every applicable field with q <= qmax");
    verify_cmd->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
    verify_cmd->add_flag("--verbose", cfg.verbose, "print every report during sweeps");
    add_jobs(verify_cmd, cfg);

    auto* scan = app.add_subcommand("scan", "exponents satisfying the S00 hypothesis");
    add_field_options(scan, cfg);
    scan->add_option("--rmin", cfg.rmin)->capture_default_str();
    scan->add_option("--rmax", cfg.rmax, "default q-2");
    scan->add_option("--out", cfg.out_path, "append JSON lines here instead of stdout");
    add_jobs(scan, cfg);

    auto* tables = app.add_subcommand("tables", "differential spectra of F_3 or boomerang spectra of F_2 as CSV");
    tables->add_option("--which", cfg.which)->required()->check(CLI::IsMember({"ds-f3", "bs-f2"}));
    tables->add_option("--max", cfg.qmax, "largest q (ds-f3, default 230) or n (bs-f2, default 9)");
    add_jobs(tables, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        if (*field_info) return cmd_field_info(cfg, out);
        if (*families) return cmd_families(cfg, out);
        if (*spec_diff) return cmd_spectrum_diff(cfg, out);
        if (*spec_boom) return cmd_spectrum_boom(cfg, out);
        if (*cs_gamma) return cmd_charsum(cfg, "gamma", out);
        if (*cs_lambda) return cmd_charsum(cfg, "lambda", out);
        if (*verify_cmd) return cmd_verify(cfg, out);
        if (*scan) return cmd_scan(cfg, out);
        if (*tables) return cmd_tables(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace lapn
