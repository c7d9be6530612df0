#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>
#include <vector>

#include "zetaform/errors.hpp"
#include "zetaform/forms.hpp"
#include "zetaform/numeric.hpp"
#include "zetaform/parse.hpp"
#include "zetaform/periods.hpp"
#include "zetaform/zeta_coeffs.hpp"

using json = nlohmann::ordered_json;
using namespace zetaform;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotIntegrable = 2;
constexpr int kExitVerifyFailed = 3;

json coeffs_to_json(const ZetaCoefficients& c) {
    json out;
    out["n"] = c.n;
    out["a0"] = to_string(c.a0);
    json coeffs = json::object();
    for (const auto& [r, value] : c.a) coeffs[std::to_string(r)] = to_string(value);
    out["coeffs"] = std::move(coeffs);
    return out;
}

json report_to_json(const VerificationReport& report) {
    json out;
    out["pass"] = report.pass;
    out["K"] = report.terms;
    out["digits"] = report.digits;
    out["lhs"] = report.lhs.to_string(30);
    out["rhs"] = report.rhs.to_string(30);
    return out;
}

void print_report(const VerificationReport& report) {
    std::cout << "series side:  " << report.lhs.to_string(30) << "\n"
              << "zeta side:    " << report.rhs.to_string(30) << "\n"
              << "K = " << report.terms << ", digits = " << report.digits << "\n"
              << (report.pass ? "PASS" : "FAIL") << ": intervals "
              << (report.pass ? "overlap" : "are disjoint") << "\n";
}

struct ScanRecord {
    std::vector<long> u, v;
    unsigned N = 0;
    std::string line;
};

json scan_tuple(const std::vector<long>& u, const std::vector<long>& v, unsigned N) {
    ZetaIntegrand form = ball_rivoal_form(u, v, N);
    json out;
    out["u"] = u;
    out["v"] = v;
    out["N"] = N;
    out["n"] = form.n;
    bool integrable = is_integrable(form);
    out["integrable"] = integrable;
    if (integrable) {
        ZetaCoefficients c = coefficients(form);
        out["a0"] = to_string(c.a0);
        json cm = json::object();
        for (const auto& [r, value] : c.a) cm[std::to_string(r)] = to_string(value);
        out["coeffs"] = std::move(cm);
    }
    out["tau"] = to_string(inversion_symmetry(form));
    json zeros = json::array();
    for (int r : predict_vanishing(form)) zeros.push_back(r);
    out["predicted_zeros"] = std::move(zeros);
    bool weight_drop = false;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] + v[i] <= static_cast<long>(N)) weight_drop = true;
    out["weight_drop"] = weight_drop;
    return out;
}

int run_scan(int n, unsigned max_N, bool well_poised, long max_u, long max_v,
             const std::string& out_path, unsigned jobs) {
    std::vector<std::pair<std::vector<long>, std::vector<long>>> tuples_uv;
    std::vector<unsigned> tuples_N;

    auto enumerate_vectors = [n](long bound) {
        std::vector<std::vector<long>> all;
        std::vector<long> cur(static_cast<std::size_t>(n), 1);
        for (;;) {
            all.push_back(cur);
            int i = n - 1;
            while (i >= 0 && cur[static_cast<std::size_t>(i)] == bound) {
                cur[static_cast<std::size_t>(i)] = 1;
                --i;
            }
            if (i < 0) break;
            ++cur[static_cast<std::size_t>(i)];
        }
        return all;
    };

    for (unsigned N = 1; N <= max_N; ++N) {
        if (well_poised) {
            long u_bound = static_cast<long>(N) / 2;  // v = N+1-2u >= 1
            if (u_bound < 1) continue;
            for (const auto& u : enumerate_vectors(u_bound)) {
                std::vector<long> v(u.size());
                for (std::size_t i = 0; i < u.size(); ++i)
                    v[i] = static_cast<long>(N) + 1 - 2 * u[i];
                tuples_uv.emplace_back(u, v);
                tuples_N.push_back(N);
            }
        } else {
            for (const auto& u : enumerate_vectors(max_u))
                for (const auto& v : enumerate_vectors(max_v)) {
                    tuples_uv.emplace_back(u, v);
                    tuples_N.push_back(N);
                }
        }
    }

    std::vector<std::string> lines(tuples_uv.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            lines[i] = scan_tuple(tuples_uv[i].first, tuples_uv[i].second,
                                  tuples_N[i]).dump();
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        work(0, lines.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (lines.size() + jobs - 1) / jobs;
        for (unsigned t = 0; t < jobs; ++t) {
            std::size_t begin = t * chunk;
            std::size_t end = std::min(lines.size(), begin + chunk);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::app);
        if (!file) {
            std::cerr << "cannot open " << out_path << "\n";
            return kExitUsage;
        }
        out = &file;
    }
    for (const auto& line : lines) *out << line << "\n";
    std::cerr << "scanned " << lines.size() << " parameter tuples\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linear forms in zeta values from cube integrals"};
    app.require_subcommand(1);

    std::string expr;
    bool as_json = false;
    std::optional<int> force_n;

    auto* cmd_coeffs = app.add_subcommand("coeffs", "exact coefficients of the linear form");
    cmd_coeffs->add_option("expr", expr)->required();
    cmd_coeffs->add_flag("--json", as_json);
    cmd_coeffs->add_option("--n", force_n, "force the number of variables");

    auto* cmd_integrable = app.add_subcommand("integrable", "does the cube integral converge");
    cmd_integrable->add_option("expr", expr)->required();
    cmd_integrable->add_option("--n", force_n);

    auto* cmd_tau = app.add_subcommand("tau", "image and symmetry under x -> 1/x");
    cmd_tau->add_option("expr", expr)->required();
    cmd_tau->add_flag("--json", as_json);
    cmd_tau->add_option("--n", force_n);

    std::vector<long> opt_u, opt_v;
    unsigned opt_N = 0;
    bool do_check = false;
    unsigned long opt_K = 100000;
    unsigned opt_digits = 30;
    auto* cmd_br = app.add_subcommand("ballrivoal", "hypergeometric family member");
    cmd_br->add_option("--u", opt_u)->required()->delimiter(',');
    cmd_br->add_option("--v", opt_v)->required()->delimiter(',');
    cmd_br->add_option("--N", opt_N)->required();
    cmd_br->add_flag("--check", do_check, "verify numerically");
    cmd_br->add_option("--K", opt_K, "partial-sum length for --check");
    cmd_br->add_option("--digits", opt_digits, "zeta precision for --check");
    cmd_br->add_flag("--json", as_json);

    int scan_n = 0;
    unsigned scan_max_N = 0;
    bool scan_well_poised = false;
    long scan_max_u = 3, scan_max_v = 3;
    std::string scan_out;
    unsigned scan_jobs = 1;
    auto* cmd_scan = app.add_subcommand("scan", "exhaustive parameter scan, one JSON per line");
    cmd_scan->add_option("--n", scan_n)->required();
    cmd_scan->add_option("--max-N", scan_max_N)->required();
    cmd_scan->add_flag("--well-poised", scan_well_poised);
    cmd_scan->add_option("--max-u", scan_max_u, "u bound for unrestricted scans");
    cmd_scan->add_option("--max-v", scan_max_v, "v bound for unrestricted scans");
    cmd_scan->add_option("--out", scan_out, "append JSON lines here (default stdout)");
    cmd_scan->add_option("--jobs", scan_jobs, "parallel workers (output order is fixed)");

    unsigned eul_r = 0, eul_table = 0;
    auto* cmd_eulerian = app.add_subcommand("eulerian", "Eulerian polynomials and numbers");
    auto* opt_r = cmd_eulerian->add_option("--r", eul_r, "print one polynomial");
    auto* opt_table = cmd_eulerian->add_option("--table", eul_table, "print the triangle");
    opt_r->excludes(opt_table);

    unsigned per_verify = 0, per_print_q = 0;
    auto* cmd_periods = app.add_subcommand("periods", "period-matrix identities");
    cmd_periods->add_option("--verify-n", per_verify)->required();
    cmd_periods->add_option("--print-Q", per_print_q);

    auto* cmd_check = app.add_subcommand("check", "numeric verification of the coefficients");
    cmd_check->add_option("expr", expr)->required();
    cmd_check->add_option("--K", opt_K);
    cmd_check->add_option("--digits", opt_digits);
    cmd_check->add_flag("--json", as_json);
    cmd_check->add_option("--n", force_n);

    try {
        app.parse(argc, argv);

        if (cmd_coeffs->parsed()) {
            ZetaCoefficients c = coefficients(parse_form(expr, force_n));
            if (as_json) {
                std::cout << coeffs_to_json(c).dump() << "\n";
            } else {
                std::cout << "a0 = " << to_string(c.a0) << "\n";
                for (int r = 2; r <= c.n; ++r)
                    std::cout << "a" << r << " = " << to_string(c.a_coeff(r)) << "\n";
            }
            return kExitOk;
        }

        if (cmd_integrable->parsed()) {
            bool ok = is_integrable(parse_form(expr, force_n));
            std::cout << (ok ? "true" : "false") << "\n";
            return ok ? kExitOk : kExitNotIntegrable;
        }

        if (cmd_tau->parsed()) {
            ZetaIntegrand form = parse_form(expr, force_n);
            ZetaIntegrand image = inversion_pullback(form);
            const char* sym = to_string(inversion_symmetry(form));
            if (as_json) {
                json out;
                out["image"] = print_form(image);
                out["symmetry"] = sym;
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "tau image: " << print_form(image) << "\n"
                          << "symmetry:  " << sym << "\n";
            }
            return kExitOk;
        }

        if (cmd_br->parsed()) {
            ZetaIntegrand form = ball_rivoal_form(opt_u, opt_v, opt_N);
            json out = scan_tuple(opt_u, opt_v, opt_N);
            HypergeometricSeries hyp = hypergeometric_params(opt_u, opt_v, opt_N);
            out["well_poised"] = hyp.well_poised;
            std::optional<VerificationReport> report;
            if (do_check && out["integrable"].get<bool>()) {
                report = verify_linear_form(form, coefficients(form), opt_K, opt_digits);
                out["verification"] = report_to_json(*report);
            }
            if (as_json) {
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "form: " << print_form(form) << "\n";
                if (out["integrable"].get<bool>()) {
                    std::cout << coefficients(form).to_string() << "\n";
                } else {
                    std::cout << "not integrable\n";
                }
                std::cout << "tau symmetry: " << out["tau"].get<std::string>() << "\n";
                std::cout << "predicted zero coefficients:";
                for (int r : predict_vanishing(form)) std::cout << " a" << r;
                std::cout << "\n";
                std::cout << "weight drop forced: "
                          << (out["weight_drop"].get<bool>() ? "yes" : "no") << "\n";
                std::cout << "well poised: " << (hyp.well_poised ? "yes" : "no") << "\n";
                if (report) print_report(*report);
            }
            if (report && !report->pass) return kExitVerifyFailed;
            return kExitOk;
        }

        if (cmd_scan->parsed())
            return run_scan(scan_n, scan_max_N, scan_well_poised, scan_max_u,
                            scan_max_v, scan_out, scan_jobs);

        if (cmd_eulerian->parsed()) {
            if (opt_table->count()) {
                for (unsigned n = 1; n <= eul_table; ++n) {
                    std::cout << n << ":";
                    for (unsigned k = 0; k < n; ++k)
                        std::cout << " " << eulerian_number(n, k).get_str();
                    std::cout << "\n";
                }
            } else if (opt_r->count()) {
                std::cout << eulerian_poly(eul_r).to_string("x") << "\n";
            } else {
                std::cerr << "eulerian needs --r or --table\n";
                return kExitUsage;
            }
            return kExitOk;
        }

        if (cmd_periods->parsed()) {
            bool all_ok = true;
            for (unsigned n = 1; n <= per_verify; ++n) {
                bool diag = verify_diagonal_identity(n);
                RationalMatrix q = basis_change_matrix(n);
                bool ones = true;
                for (std::size_t j = 0; j < q.cols(); ++j)
                    if (q.at(q.rows() - 1, j) != 1) ones = false;
                all_ok = all_ok && diag && ones;
                std::cout << "n = " << n << ": diagonal identity "
                          << (diag ? "holds" : "FAILS") << ", last row of Q "
                          << (ones ? "all ones" : "NOT all ones") << "\n";
            }
            if (per_print_q > 0)
                std::cout << "Q_" << per_print_q << " =\n"
                          << basis_change_matrix(per_print_q).to_string() << "\n";
            return all_ok ? kExitOk : kExitVerifyFailed;
        }

        if (cmd_check->parsed()) {
            ZetaIntegrand form = parse_form(expr, force_n);
            VerificationReport report =
                verify_linear_form(form, coefficients(form), opt_K, opt_digits);
            if (as_json)
                std::cout << report_to_json(report).dump() << "\n";
            else
                print_report(report);
            return report.pass ? kExitOk : kExitVerifyFailed;
        }

        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const NotIntegrable& e) {
        std::cerr << "not integrable: " << e.what() << "\n";
        return kExitNotIntegrable;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
