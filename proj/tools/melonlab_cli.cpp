// melonlab command line tool: exact watermelon statistics and their limits.
//
// Output contract: CSV (default) has a header row, ',' separator, decimals
// with 12 significant digits, fractions as "num/den". JSON carries the same
// cells as strings, so both formats of one run hold identical numbers.
// Exit codes: 0 ok, 2 validation error, 3 capacity guard.

#include "melonlab/gauss.hpp"
#include "melonlab/limits.hpp"
#include "melonlab/melon.hpp"
#include "melonlab/real.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using melonlab::Rational;
using melonlab::Real;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string dec(const Real& x) { return melonlab::format_real(x, 12); }
std::string dec(const Rational& q) { return dec(melonlab::to_real(q)); }
std::string dec(double x) { return dec(Real(x)); }
std::string frac(const Rational& q) { return q.get_str(); }

std::string render_csv(const Table& t) {
    std::string out;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (c) out += ',';
        out += t.columns[c];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += row[c];
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const Table& t) {
    nlohmann::ordered_json doc;
    doc["columns"] = t.columns;
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < row.size(); ++c) obj[t.columns[c]] = row[c];
        rows.push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::domain_error("cannot open output file: " + out_path);
    f << text;
}

std::vector<double> make_grid(double t_min, double t_max, unsigned steps) {
    if (!(t_min > 0)) throw std::domain_error("t-min must be positive");
    if (t_max < t_min) throw std::domain_error("t-max must be >= t-min");
    if (steps < 1) throw std::domain_error("steps must be >= 1");
    std::vector<double> grid;
    if (steps == 1) {
        grid.push_back(t_min);
        return grid;
    }
    for (unsigned i = 0; i < steps; ++i)
        grid.push_back(t_min + (t_max - t_min) * i / (steps - 1));
    return grid;
}

melonlab::Stat parse_stat(const std::string& s) {
    return s == "range" ? melonlab::Stat::range : melonlab::Stat::height;
}

} // namespace

int main(int argc, char** argv) {
    melonlab::init_precision_from_env();

    CLI::App app{"Exact and asymptotic statistics of p-watermelons"};
    app.require_subcommand(0, 1);
    // accept the global options (--format, --out, ...) after the subcommand too
    app.fallthrough();

    std::string format = "csv";
    std::string out_path;
    unsigned precision = 0;
    int dump_symbolic_p = 0;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "Write output to FILE instead of stdout");
    app.add_option("--precision", precision, "Working precision in decimal digits");
    app.add_option("--dump-symbolic", dump_symbolic_p,
                   "Print the kappa_p/tau_p term lists as JSON and exit")
        ->check(CLI::Range(1, 6));

    unsigned p = 1, s_max = 1, steps = 2;
    unsigned long n = 1;
    long height_lt = -1, depth_gt = 1;
    double t_min = 0.5, t_max = 4.0, eps = 1e-8;
    bool with_asymptotic = false, refined = false;
    std::string stat = "height";

    auto add_pn = [&](CLI::App* cmd, bool need_n) {
        cmd->add_option("--p", p, "Number of paths")->required()->check(CLI::Range(1, 64));
        if (need_n)
            cmd->add_option("--n", n, "Half path length (paths have 2n steps)")
                ->required()
                ->check(CLI::Range(0ul, 1000000ul));
    };
    auto add_stat = [&](CLI::App* cmd) {
        cmd->add_option("--stat", stat, "Statistic")
            ->check(CLI::IsMember({"height", "range"}))
            ->capture_default_str();
    };
    auto add_grid = [&](CLI::App* cmd) {
        cmd->add_option("--t-min", t_min, "Grid start")->capture_default_str();
        cmd->add_option("--t-max", t_max, "Grid end")->capture_default_str();
        cmd->add_option("--steps", steps, "Grid points (inclusive)")->capture_default_str();
        cmd->add_option("--eps", eps, "Truncation/quadrature tolerance")->capture_default_str();
    };

    CLI::App* cmd_count = app.add_subcommand("count", "Exact watermelon counts");
    add_pn(cmd_count, true);
    cmd_count->add_option("--height-lt", height_lt, "Count only height < H");
    cmd_count->add_option("--depth-gt", depth_gt, "Count only depth > D (D <= -1)")
        ->check(CLI::Range(-1000000l, -1l));

    CLI::App* cmd_pmf = app.add_subcommand("pmf", "Exact distribution table");
    add_pn(cmd_pmf, true);
    add_stat(cmd_pmf);
    CLI::App* cmd_cdf = app.add_subcommand("cdf", "Exact cumulative table");
    add_pn(cmd_cdf, true);
    add_stat(cmd_cdf);

    CLI::App* cmd_moments = app.add_subcommand("moments", "Exact height moments");
    add_pn(cmd_moments, true);
    cmd_moments->add_option("--s-max", s_max, "Compute E(H^s) for s = 1..s-max")
        ->check(CLI::Range(1u, 12u))
        ->capture_default_str();
    cmd_moments->add_flag("--asymptotic", with_asymptotic,
                          "Add two-term asymptotic and abs_err columns (p <= 6)");
    cmd_moments->add_flag("--refined", refined,
                          "Use the refined subleading coefficient for s >= 2");

    CLI::App* cmd_limit = app.add_subcommand("limit", "Limiting CDF on a t-grid");
    add_pn(cmd_limit, false);
    add_stat(cmd_limit);
    add_grid(cmd_limit);

    CLI::App* cmd_compare = app.add_subcommand("compare", "Exact vs limiting CDF");
    add_pn(cmd_compare, true);
    add_stat(cmd_compare);
    add_grid(cmd_compare);

    CLI::App* cmd_table1 = app.add_subcommand(
        "table1", "Leading coefficient of E(H^s), p = 1..4, s = 1..3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (precision > 0) melonlab::set_precision_digits(precision);

        if (dump_symbolic_p > 0) {
            const unsigned dp = static_cast<unsigned>(dump_symbolic_p);
            nlohmann::ordered_json doc;
            doc["p"] = dp;
            doc["kappa"] = melonlab::gexpr_to_json(melonlab::kappa(dp));
            doc["tau"] = melonlab::gexpr_to_json(melonlab::tau(dp));
            emit(doc.dump(2) + "\n", out_path);
            return 0;
        }
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
            return 2;
        }

        const melonlab::MelonConfig cfg{p, n};
        Table table;

        if (cmd_count->parsed()) {
            cfg.validate();
            melonlab::BigInt value;
            const bool has_h = cmd_count->count("--height-lt") > 0;
            const bool has_d = cmd_count->count("--depth-gt") > 0;
            if (has_h && height_lt < 0)
                throw std::domain_error("--height-lt must be >= 0");
            if (!has_h && !has_d) {
                value = melonlab::count_total(cfg);
            } else if (has_h && !has_d) {
                value = melonlab::count_height_lt(cfg, height_lt);
            } else {
                // depth > D translates to the strip bound k = -D
                const long h = has_h ? height_lt : cfg.max_height() + 1;
                value = melonlab::count_strip(cfg, {h, -depth_gt});
            }
            if (format == "json") {
                nlohmann::ordered_json doc;
                doc["count"] = value.get_str();
                emit(doc.dump(2) + "\n", out_path);
            } else {
                emit(value.get_str() + "\n", out_path);
            }
            return 0;
        }

        if (cmd_pmf->parsed() || cmd_cdf->parsed()) {
            cfg.validate();
            const auto dist = parse_stat(stat) == melonlab::Stat::height
                                  ? melonlab::height_distribution(cfg)
                                  : melonlab::range_distribution(cfg);
            const bool cumulative = cmd_cdf->parsed();
            table.columns = {"value", "count", "fraction", "probability"};
            melonlab::BigInt running_count(0);
            Rational running_mass(0);
            for (std::size_t i = 0; i < dist.support.size(); ++i) {
                running_count += dist.count[i];
                running_mass += dist.mass[i];
                const auto& cnt = cumulative ? running_count : dist.count[i];
                const auto& mass = cumulative ? running_mass : dist.mass[i];
                table.rows.push_back({std::to_string(dist.support[i]), cnt.get_str(),
                                      frac(mass), dec(mass)});
            }
        } else if (cmd_moments->parsed()) {
            cfg.validate();
            if (with_asymptotic && p > 6)
                throw std::domain_error("moments --asymptotic needs p <= 6");
            table.columns = {"s", "exact_fraction", "exact"};
            if (with_asymptotic) {
                table.columns.push_back("asymptotic");
                table.columns.push_back("abs_err");
            }
            for (unsigned s = 1; s <= s_max; ++s) {
                const Rational exact = melonlab::height_moment_exact(cfg, s);
                std::vector<std::string> row{std::to_string(s), frac(exact), dec(exact)};
                if (with_asymptotic) {
                    const Real asym = refined
                                          ? melonlab::moment_asymptotic_corrected(p, s, n)
                                          : melonlab::moment_asymptotic(p, s, n);
                    row.push_back(dec(asym));
                    row.push_back(dec(abs(melonlab::to_real(exact) - asym)));
                }
                table.rows.push_back(std::move(row));
            }
        } else if (cmd_limit->parsed()) {
            const auto grid = make_grid(t_min, t_max, steps);
            const auto st = parse_stat(stat);
            table.columns = {"t", "limit"};
            for (double t : grid) {
                const Real value = st == melonlab::Stat::height
                                       ? melonlab::height_limit_cdf(p, Real(t))
                                       : melonlab::range_limit_cdf(p, Real(t), eps);
                table.rows.push_back({dec(t), dec(value)});
            }
        } else if (cmd_compare->parsed()) {
            cfg.validate();
            if (n < 1) throw std::domain_error("compare needs n >= 1");
            const auto grid = make_grid(t_min, t_max, steps);
            const auto rows =
                melonlab::convergence_report(parse_stat(stat), cfg, grid, eps);
            table.columns = {"t", "exact", "limit", "abs_err"};
            for (const auto& r : rows)
                table.rows.push_back({dec(r.t), dec(r.exact), dec(r.limit), dec(r.abs_err)});
        } else if (cmd_table1->parsed()) {
            table.columns = {"p", "s", "fraction", "decimal"};
            for (unsigned tp = 1; tp <= 4; ++tp)
                for (unsigned ts = 1; ts <= 3; ++ts) {
                    const auto coeff = melonlab::table1_coefficient(tp, ts);
                    table.rows.push_back({std::to_string(tp), std::to_string(ts),
                                          coeff.is_rational() ? frac(coeff.q0) : "",
                                          dec(coeff.to_real())});
                }
        }

        emit(format == "json" ? render_json(table) : render_csv(table), out_path);
        return 0;
    } catch (const melonlab::capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
