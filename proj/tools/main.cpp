// radgps: bound states of the radial Schrödinger equation for singular
// central potentials, via mapped Gauss-Lobatto collocation, with an
// independent finite-difference shooting cross-check.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "radgps/collocation.hpp"
#include "radgps/format.hpp"
#include "radgps/mapping.hpp"
#include "radgps/observables.hpp"
#include "radgps/operator.hpp"
#include "radgps/oracle.hpp"
#include "radgps/potentials.hpp"
#include "radgps/tables.hpp"

namespace {

using namespace radgps;

struct SolveConfig {
    std::string potential;
    std::vector<int> l_values{0};
    int num_states = 1;
    GridSpec grid;
    std::string format = "table";
    int digits = 12;
    std::string out;
};

// Streams either to stdout or to --out.
struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw CLI::ValidationError("--out", "cannot open '" + path + "'");
            os = &file;
        }
    }
    std::ostream& operator*() { return *os; }
};

void add_common_flags(CLI::App* cmd, SolveConfig& cfg, bool with_potential = true) {
    if (with_potential)
        cmd->add_option("--potential", cfg.potential, "potential descriptor, e.g. \"coulomb Z=1 g=0 lambda=0.1\"")
            ->required();
    cmd->add_option("--l", cfg.l_values, "angular momenta (list)")
        ->delimiter(',')
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--states", cfg.num_states, "states per angular momentum")
        ->check(CLI::PositiveNumber);
    cmd->add_option_function<std::string>(
        "--grid",
        [&cfg](const std::string& s) {
            int n = 0;
            double rmax = 0, alpha = 0;
            char tail = 0;
            if (std::sscanf(s.c_str(), "%d,%lf,%lf%c", &n, &rmax, &alpha, &tail) != 3 ||
                n < 8 || rmax <= 0 || alpha <= 0)
                throw CLI::ValidationError("--grid", "expected N,rmax,alpha with N>=8, rmax>0, alpha>0");
            cfg.grid.N = n;
            cfg.grid.r_max = rmax;
            cfg.grid.alpha = alpha;
        },
        "grid as N,rmax,alpha (default 300,200,25)");
    cmd->add_option("--digits", cfg.digits, "printed significant digits (truncated, not rounded)")
        ->check(CLI::Range(1, 12));
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"table", "csv"}));
    cmd->add_option("--out", cfg.out, "write output to this file instead of stdout");
}

void print_row(std::ostream& os, const std::string& format,
               const std::vector<std::string>& fields, const std::vector<int>& widths) {
    if (format == "csv") {
        for (std::size_t i = 0; i < fields.size(); ++i)
            os << (i ? "," : "") << csv_field(fields[i]);
        os << '\n';
        return;
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const int w = i < widths.size() ? widths[i] : 0;
        os << (i ? "  " : "");
        if (w > 0 && static_cast<int>(fields[i].size()) < w)
            os << std::string(w - fields[i].size(), ' ');
        os << fields[i];
    }
    os << '\n';
}

// ---- solve -----------------------------------------------------------------

int run_solve(const SolveConfig& cfg) {
    const PotentialSpec pot = parse_potential(cfg.potential);
    const CollocationSet set = build_collocation(cfg.grid.N);
    Sink sink(cfg.out);

    if (cfg.format == "table") {
        *sink << "# potential: " << describe(pot) << '\n'
              << "# grid: N=" << cfg.grid.N << " rmax=" << cfg.grid.r_max
              << " alpha=" << cfg.grid.alpha << '\n';
    }
    print_row(*sink, cfg.format, {"l", "nodes", "energy", "flag"}, {3, 5, 18, 4});

    int violations = 0;
    for (int l : cfg.l_values) {
        const Spectrum sp = solve_states(cfg.grid, set, pot, l, cfg.num_states);
        for (int s = 0; s < cfg.num_states; ++s) {
            const BoundState& st = sp.states[static_cast<std::size_t>(s)];
            std::string flag;
            if (!st.physical) flag += "*";  // confinement ceiling
            if (st.n_r != s) flag += "n";   // node-ladder violation
            if (sp.residual_norms[static_cast<std::size_t>(s)] >
                1e-12 * std::max(1.0, sp.operator_norm))
                flag += "r";  // residual above the backward-error scale
            if (!flag.empty()) ++violations;
            print_row(*sink, cfg.format,
                      {std::to_string(l), std::to_string(st.n_r),
                       truncate_significant(st.energy, cfg.digits), flag},
                      {3, 5, 18, 4});
        }
    }
    if (violations > 0)
        std::cerr << "radgps: " << violations
                  << " state(s) flagged (*: confinement ceiling, n: node ladder, r: residual)\n";
    return violations == 0 ? 0 : 1;
}

// ---- table -----------------------------------------------------------------

int run_table(int id, const SolveConfig& cfg) {
    const TableReport rep = verify_table(id, cfg.grid);
    Sink sink(cfg.out);

    print_row(*sink, cfg.format,
              {"potential", "l", "state", "kind", "computed", "reference", "delta", "status"},
              {-1, 2, 5, 6, 18, 18, 10, 6});
    int failures = 0;
    for (const CellResult& c : rep.cells) {
        const RefEntry& e = c.entry;
        const std::string kind =
            e.moment_power == 0 ? "E" : "<r^" + std::to_string(e.moment_power) + ">";
        char delta[32];
        std::snprintf(delta, sizeof delta, "%.2e", c.error);
        if (!c.pass) ++failures;
        print_row(*sink, cfg.format,
                  {e.potential, std::to_string(e.l), std::to_string(e.state), kind,
                   truncate_significant(c.computed, cfg.digits), e.printed, delta,
                   c.pass ? "ok" : "FAIL"},
                  {-1, 2, 5, 6, 18, 18, 10, 6});
        if (!c.pass) std::cerr << "radgps: table " << id << " cell failed: " << c.detail << '\n';
    }
    {
        char worst[32];
        std::snprintf(worst, sizeof worst, "%.3e", rep.worst_error);
        if (cfg.format == "table")
            *sink << "# table " << id << ": " << (rep.pass ? "PASS" : "FAIL") << ", worst |delta| "
                  << worst << ", tolerance " << table_tolerance(id) << '\n';
    }
    return failures == 0 ? 0 : 1;
}

// ---- scan ------------------------------------------------------------------

int run_scan(const SolveConfig& cfg, const std::string& axis, const std::vector<double>& values) {
    const PotentialSpec pot = parse_potential(cfg.potential);
    Sink sink(cfg.out);

    // Solve on each grid variant; collect energies keyed by (l, state).
    std::vector<std::vector<std::vector<double>>> energy;  // [variant][l_idx][state]
    for (double v : values) {
        GridSpec g = cfg.grid;
        if (axis == "N")
            g.N = static_cast<int>(v);
        else if (axis == "rmax" || axis == "r_max")
            g.r_max = v;
        else
            g.alpha = v;
        const CollocationSet set = build_collocation(g.N);
        std::vector<std::vector<double>> per_l;
        for (int l : cfg.l_values) {
            const Spectrum sp = solve_states(g, set, pot, l, cfg.num_states);
            std::vector<double> es;
            for (const BoundState& st : sp.states) es.push_back(st.energy);
            per_l.push_back(std::move(es));
        }
        energy.push_back(std::move(per_l));
    }

    // Machine-readable CSV: one row per (l, state), one column per axis value,
    // then the max pairwise spread across the axis.
    std::vector<std::string> head{"l", "state"};
    for (double v : values) {
        std::ostringstream col;
        col << axis << '=' << v;
        head.push_back(col.str());
    }
    head.push_back("spread");
    print_row(*sink, "csv", head, {});
    for (std::size_t li = 0; li < cfg.l_values.size(); ++li) {
        for (int s = 0; s < cfg.num_states; ++s) {
            std::vector<std::string> row{std::to_string(cfg.l_values[li]), std::to_string(s)};
            double lo = energy[0][li][static_cast<std::size_t>(s)], hi = lo;
            for (std::size_t vi = 0; vi < values.size(); ++vi) {
                const double e = energy[vi][li][static_cast<std::size_t>(s)];
                lo = std::min(lo, e);
                hi = std::max(hi, e);
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.17e", e);
                row.push_back(buf);
            }
            char spread[40];
            std::snprintf(spread, sizeof spread, "%.3e", hi - lo);
            row.push_back(spread);
            print_row(*sink, "csv", row, {});
        }
    }
    return 0;
}

// ---- density ---------------------------------------------------------------

int run_density(const SolveConfig& cfg, int state_index) {
    const PotentialSpec pot = parse_potential(cfg.potential);
    if (state_index < 0 || state_index >= cfg.num_states)
        throw CLI::ValidationError("--state", "state index out of range for --states");
    const int l = cfg.l_values.front();
    const CollocationSet set = build_collocation(cfg.grid.N);
    const Spectrum sp = solve_states(cfg.grid, set, pot, l, cfg.num_states);
    const BoundState& st = sp.states[static_cast<std::size_t>(state_index)];

    Sink sink(cfg.out);
    *sink << "# potential: " << describe(pot) << '\n'
          << "# l: " << l << "  state: " << state_index << "  nodes: " << st.n_r << '\n'
          << "# energy: " << truncate_significant(st.energy, cfg.digits) << " hartree\n"
          << "# columns: r_bohr  |r R(r)|^2\n";
    char buf[96];
    for (const auto& [r, d] : radial_density(st, set, cfg.grid)) {
        std::snprintf(buf, sizeof buf, "%.17e %.17e\n", r, d);
        *sink << buf;
    }
    return st.physical ? 0 : 1;
}

// ---- expect ----------------------------------------------------------------

int run_expect(const SolveConfig& cfg) {
    const PotentialSpec pot = parse_potential(cfg.potential);
    const CollocationSet set = build_collocation(cfg.grid.N);
    GridSpec refined = cfg.grid;
    refined.N += 50;
    const CollocationSet set2 = build_collocation(refined.N);
    Sink sink(cfg.out);

    static const int powers[] = {-2, -1, 1, 2};
    std::vector<std::string> head{"l", "state", "energy"};
    for (int p : powers) head.push_back("<r^" + std::to_string(p) + ">");
    head.push_back("flag");
    print_row(*sink, cfg.format, head, {3, 5, 18, 18, 18, 18, 18, 4});

    int violations = 0;
    bool drift = false;
    for (int l : cfg.l_values) {
        const Spectrum sp = solve_states(cfg.grid, set, pot, l, cfg.num_states);
        const Spectrum sp2 = solve_states(refined, set2, pot, l, cfg.num_states);
        for (int s = 0; s < cfg.num_states; ++s) {
            const BoundState& st = sp.states[static_cast<std::size_t>(s)];
            std::vector<std::string> row{std::to_string(l), std::to_string(st.n_r),
                                         truncate_significant(st.energy, cfg.digits)};
            std::string flag = st.physical ? "" : "*";
            for (int p : powers) {
                const double m = expectation(st, p, set, cfg.grid);
                const double m2 =
                    expectation(sp2.states[static_cast<std::size_t>(s)], p, set2, refined);
                if (std::abs(m - m2) > 1e-7 * std::max(1.0, std::abs(m))) {
                    flag += "~";  // grid-sensitive moment
                    drift = true;
                }
                row.push_back(truncate_significant(m, cfg.digits));
            }
            row.push_back(flag);
            if (!st.physical) ++violations;
            print_row(*sink, cfg.format, row, {3, 5, 18, 18, 18, 18, 18, 4});
        }
    }
    if (drift)
        std::cerr << "radgps: moments marked '~' moved more than 1e-7 upon refining N by 50; "
                     "increase --grid N or rmax\n";
    return violations == 0 ? 0 : 1;
}

// ---- validate --------------------------------------------------------------

int run_validate(const SolveConfig& cfg) {
    const PotentialSpec pot = parse_potential(cfg.potential);
    const CollocationSet set = build_collocation(cfg.grid.N);
    Sink sink(cfg.out);

    print_row(*sink, cfg.format,
              {"l", "state", "spectral", "shooting", "delta", "status"},
              {3, 5, 20, 20, 10, 6});
    int failures = 0;
    for (int l : cfg.l_values) {
        const Spectrum sp = solve_states(cfg.grid, set, pot, l, cfg.num_states);
        std::vector<double> es;
        for (const BoundState& st : sp.states) es.push_back(st.energy);
        for (const ValidationRow& r : cross_validate(pot, l, cfg.num_states, es)) {
            char spectral[40], shooting[40], delta[32];
            std::snprintf(spectral, sizeof spectral, "%.12f", r.spectral);
            std::snprintf(shooting, sizeof shooting, "%.12f", r.shooting);
            std::snprintf(delta, sizeof delta, "%.2e", r.delta);
            if (!r.ok) ++failures;
            print_row(*sink, cfg.format,
                      {std::to_string(l), std::to_string(r.state), spectral, shooting, delta,
                       r.ok ? "ok" : "FAIL"},
                      {3, 5, 20, 20, 10, 6});
        }
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bound states of singular central potentials (hartree atomic units)"};
    app.require_subcommand(1);

    SolveConfig cfg;

    CLI::App* solve = app.add_subcommand("solve", "solve one configuration");
    add_common_flags(solve, cfg);

    CLI::App* table = app.add_subcommand("table", "reproduce an embedded reference table (1..6)");
    int table_id = 0;
    table->add_option("id", table_id, "table id")->required()->check(CLI::Range(1, 6));
    add_common_flags(table, cfg, /*with_potential=*/false);

    CLI::App* scan = app.add_subcommand("scan", "grid-stability scan along one axis");
    std::string axis;
    std::vector<double> axis_values;
    scan->add_option("--axis", axis, "grid axis to vary")
        ->required()
        ->check(CLI::IsMember({"N", "rmax", "r_max", "alpha"}));
    scan->add_option("--values", axis_values, "axis values (>= 2)")
        ->required()
        ->delimiter(',')
        ->expected(2, -1);
    add_common_flags(scan, cfg);

    CLI::App* density = app.add_subcommand("density", "emit |rR|^2 samples for one state");
    int state_index = 0;
    density->add_option("--state", state_index, "0-based state index within --l")
        ->check(CLI::NonNegativeNumber);
    add_common_flags(density, cfg);

    CLI::App* expect = app.add_subcommand("expect", "radial moments <r^p>, p in {-2,-1,1,2}");
    add_common_flags(expect, cfg);

    CLI::App* validate = app.add_subcommand("validate", "cross-check energies against the shooting oracle");
    add_common_flags(validate, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(cfg);
        if (table->parsed()) return run_table(table_id, cfg);
        if (scan->parsed()) return run_scan(cfg, axis, axis_values);
        if (density->parsed()) return run_density(cfg, state_index);
        if (expect->parsed()) return run_expect(cfg);
        if (validate->parsed()) return run_validate(cfg);
    } catch (const PotentialParseError& e) {
        std::cerr << "radgps: bad potential descriptor at offset " << e.pos << ": " << e.what()
                  << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "radgps: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
