#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "concordia/cabling.hpp"
#include "concordia/engine.hpp"
#include "concordia/errors.hpp"
#include "concordia/fulltwist.hpp"
#include "concordia/knotexpr.hpp"
#include "concordia/poset.hpp"
#include "concordia/surgery.hpp"
#include "concordia/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitUncertified = 3;
constexpr int kExitBudget = 4;
constexpr int kExitInternal = 70;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
}

json interval_json(const concordia::NuInterval& iv) {
    json j;
    j["lo"] = iv.lo;
    if (iv.hi)
        j["hi"] = *iv.hi;
    else
        j["hi"] = nullptr;
    return j;
}

std::string csv_join(const std::vector<std::string>& cells) {
    std::string row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) row += ",";
        row += cells[i];
    }
    return row + "\n";
}

std::string seq_str(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(v[i]);
    }
    return s;
}

int run_invariants(const std::string& expr_text, const std::string& format,
                   const std::string& out_path) {
    concordia::KnotExpr e = concordia::parse_expr(expr_text);
    concordia::VSequence v = concordia::v_sequence_of(e);
    long long tau = concordia::tau_additive(e);
    long long gb = concordia::genus_bound(e);
    if (format == "csv") {
        std::string text = csv_join({"expression", "nu_plus", "tau", "v_sequence", "genus_bound"});
        text += csv_join({"\"" + e.str() + "\"", std::to_string(v.nu_plus()), std::to_string(tau),
                          "\"" + seq_str(v.values()) + "\"", std::to_string(gb)});
        emit(text, out_path);
    } else {
        json j;
        j["expression"] = e.str();
        j["nu_plus"] = v.nu_plus();
        j["tau"] = tau;
        j["v_sequence"] = v.values();
        j["genus_bound"] = gb;
        emit(j.dump(2) + "\n", out_path);
    }
    return kExitOk;
}

int run_obstruct(const std::string& from_text, const std::string& to_text,
                 const std::string& linking, const std::string& format,
                 const std::string& out_path) {
    concordia::KnotExpr from = concordia::parse_expr(from_text);
    concordia::KnotExpr to = concordia::parse_expr(to_text);
    int lo = 0, hi = 0;
    auto dots = linking.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(linking);
        } else {
            lo = std::stoi(linking.substr(0, dots));
            hi = std::stoi(linking.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw concordia::ParseError("linking range must be N or A..B", 0);
    }
    if (lo < 0 || hi < lo) throw concordia::ParseError("linking range must satisfy 0 <= A <= B", 0);

    std::vector<concordia::FullTwistReport> reports;
    for (int n = lo; n <= hi; ++n) reports.push_back(concordia::obstruct_full_twist(from, to, n));

    if (format == "csv") {
        std::string text = csv_join(
            {"n", "nu_diff", "interval_lo", "interval_hi", "interval_ok", "cp2_consistent",
             "verdict"});
        for (const auto& r : reports)
            text += csv_join({std::to_string(r.n), std::to_string(r.nu_diff),
                              std::to_string(r.interval.lo), std::to_string(*r.interval.hi),
                              r.interval_ok ? "true" : "false",
                              r.cp2.consistent ? "true" : "false",
                              r.obstructed ? "obstructed" : "consistent"});
        emit(text, out_path);
    } else {
        json j;
        j["from"] = from.str();
        j["to"] = to.str();
        j["difference"] = (to - from).str();
        json rows = json::array();
        json admissible = json::array();
        for (const auto& r : reports) {
            json row;
            row["n"] = r.n;
            row["nu_diff"] = r.nu_diff;
            row["interval"] = interval_json(r.interval);
            row["interval_ok"] = r.interval_ok;
            row["cp2_consistent"] = r.cp2.consistent;
            if (!r.cp2.consistent) {
                row["cp2_witness_k"] = r.cp2.witness_k;
                row["cp2_required"] = r.cp2.required;
                row["cp2_actual"] = r.cp2.actual;
            }
            row["verdict"] = r.obstructed ? "obstructed" : "consistent";
            rows.push_back(row);
            if (!r.obstructed) admissible.push_back(r.n);
        }
        j["reports"] = rows;
        j["admissible"] = admissible;
        emit(j.dump(2) + "\n", out_path);
    }
    return kExitOk;
}

int run_cable_bounds(const std::string& expr_text, long long max_p, long long max_q,
                     const std::string& format, const std::string& out_path) {
    concordia::KnotExpr e = concordia::parse_expr(expr_text);
    if (max_p < 1 || max_q < 1)
        throw concordia::ParseError("--p and --q must be positive bounds", 0);
    long long nu = concordia::nu_plus(e);
    long long gb = concordia::genus_bound(e);
    bool atomic = e.is_identity() || (e.terms().size() == 1 && e.terms().begin()->second == 1);

    struct Row {
        long long p, q, lo;
        std::optional<long long> hi, exact;
        std::string route;
        long long g4;
    };
    std::vector<Row> rows;
    for (long long p = 1; p <= max_p; ++p)
        for (long long q = 1; q <= max_q; ++q) {
            if (std::gcd(p, q) != 1) continue;
            Row row{p, q, 0, std::nullopt, std::nullopt, "", 0};
            if (atomic) {
                concordia::CableNu cn = concordia::cable_nu(e, p, q);
                row.lo = cn.bounds.lo;
                row.hi = cn.bounds.hi;
                row.exact = cn.exact;
                row.route = cn.route;
            } else {
                row.lo = concordia::cable_nu_lower(p, q, nu);
                row.hi = p * gb + (p - 1) * (q - 1) / 2;
                if (concordia::wu_regime(p, q, nu)) {
                    row.exact = p * nu + (p - 1) * (q - 1) / 2;
                    row.route = "wu";
                } else {
                    row.route = "bounds";
                }
            }
            row.g4 = concordia::g4_cable(p, q, nu);
            rows.push_back(row);
        }

    if (format == "csv") {
        std::string text =
            csv_join({"p", "q", "nu_lower", "nu_upper", "nu_exact", "route", "g4_if_nu_is_g4"});
        for (const Row& r : rows)
            text += csv_join({std::to_string(r.p), std::to_string(r.q), std::to_string(r.lo),
                              r.hi ? std::to_string(*r.hi) : "",
                              r.exact ? std::to_string(*r.exact) : "", r.route,
                              std::to_string(r.g4)});
        emit(text, out_path);
    } else {
        json j;
        j["expression"] = e.str();
        j["nu_plus"] = nu;
        j["genus_bound"] = gb;
        json arr = json::array();
        for (const Row& r : rows) {
            json row;
            row["p"] = r.p;
            row["q"] = r.q;
            row["nu_lower"] = r.lo;
            row["nu_upper"] = r.hi ? json(*r.hi) : json(nullptr);
            row["nu_exact"] = r.exact ? json(*r.exact) : json(nullptr);
            row["route"] = r.route;
            row["g4_if_nu_is_g4"] = r.g4;
            arr.push_back(row);
        }
        j["rows"] = arr;
        emit(j.dump(2) + "\n", out_path);
    }
    return kExitOk;
}

int run_surgery_d(const std::string& expr_text, long long p, long long q,
                  const std::string& format, const std::string& out_path) {
    concordia::KnotExpr e = concordia::parse_expr(expr_text);
    if (p < 1 || q < 1 || std::gcd(p, q) != 1)
        throw concordia::ParseError("surgery slope needs coprime p, q >= 1", 0);
    concordia::VSequence v =
        e.is_identity() ? concordia::VSequence({0}) : concordia::v_sequence_of(e);
    if (format == "csv") {
        std::string text = csv_join({"i", "d"});
        for (long long i = 0; i < p; ++i)
            text += csv_join({std::to_string(i), concordia::to_string(d_surgery(v, p, q, i))});
        emit(text, out_path);
    } else {
        json j;
        j["expression"] = e.str();
        j["p"] = p;
        j["q"] = q;
        json rows = json::array();
        for (long long i = 0; i < p; ++i) {
            json row;
            row["i"] = i;
            row["d"] = concordia::to_string(d_surgery(v, p, q, i));
            rows.push_back(row);
        }
        j["rows"] = rows;
        emit(j.dump(2) + "\n", out_path);
    }
    return kExitOk;
}

int run_poset(const std::vector<std::string>& generator_texts, int max_coeff,
              std::uint64_t budget, const std::string& out_prefix) {
    std::vector<concordia::Atom> gens;
    for (const std::string& text : generator_texts) {
        concordia::KnotExpr e = concordia::parse_expr(text);
        const auto& terms = e.terms();
        if (terms.size() != 1 || terms.begin()->second != 1)
            throw concordia::ParseError("poset generators must be single atoms: " + text, 0);
        gens.push_back(terms.begin()->first);
    }
    concordia::OrderUniverse u = concordia::build_universe(gens, max_coeff, budget);

    json j;
    json gen_arr = json::array();
    for (const auto& a : gens) gen_arr.push_back(a.str());
    j["generators"] = gen_arr;
    j["max_coeff"] = max_coeff;
    json elements = json::array();
    for (const auto& e : u.elements()) elements.push_back(e.str());
    j["elements"] = elements;
    json classes = json::array();
    for (std::size_t c = 0; c < u.class_count(); ++c) {
        json members = json::array();
        for (std::size_t m : u.class_members(c)) members.push_back(u.element(m).str());
        classes.push_back(members);
    }
    j["classes"] = classes;
    json hasse = json::array();
    for (const auto& [c, d] : u.hasse_edges()) {
        json edge;
        edge["from"] = u.class_rep(c).str();
        edge["to"] = u.class_rep(d).str();
        edge["provenance"] = "computed";
        hasse.push_back(edge);
    }
    j["hasse_edges"] = hasse;
    json rules = json::array();
    for (const auto& e : u.rule_edges()) {
        json edge;
        edge["from"] = u.class_rep(e.from).str();
        edge["to"] = u.class_rep(e.to).str();
        edge["provenance"] = concordia::to_string(e.prov);
        edge["strict"] = e.strict;
        edge["detail"] = e.detail;
        rules.push_back(edge);
    }
    j["rule_edges"] = rules;
    std::string dot = concordia::hasse_dot(u);

    if (out_prefix.empty()) {
        j["dot"] = dot;
        std::cout << j.dump(2) << "\n";
    } else {
        emit(j.dump(2) + "\n", out_prefix + ".json");
        emit(dot, out_prefix + ".dot");
    }
    return kExitOk;
}

int run_verify(const std::string& suite, const std::string& format,
               const std::string& out_path) {
    std::vector<concordia::CheckResult> results = concordia::run_verify(suite);
    bool all_passed = true;
    std::string text;
    if (format == "csv") {
        text = csv_join({"suite", "passed", "checks", "failure"});
        for (const auto& r : results) {
            all_passed = all_passed && r.passed;
            text += csv_join({r.suite, r.passed ? "true" : "false", std::to_string(r.checks),
                              "\"" + r.failure + "\""});
        }
    } else {
        json j;
        json arr = json::array();
        for (const auto& r : results) {
            all_passed = all_passed && r.passed;
            json row;
            row["suite"] = r.suite;
            row["passed"] = r.passed;
            row["checks"] = r.checks;
            row["failure"] = r.failure;
            arr.push_back(row);
        }
        j["results"] = arr;
        j["all_passed"] = all_passed;
        text = j.dump(2) + "\n";
    }
    emit(text, out_path);
    if (!all_passed) {
        for (const auto& r : results)
            if (!r.passed) std::cerr << "verification failed [" << r.suite << "]: " << r.failure << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Heegaard-Floer concordance invariants of torus-knot and cable sums"};
    app.require_subcommand(1);

    std::string expr_text, from_text, to_text, linking = "0..0";
    std::string format = "json", out_path;
    long long p_arg = 1, q_arg = 1;
    int max_coeff = 1;
    std::uint64_t budget = 250000;
    std::vector<std::string> generators;
    std::string suite = "all";

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "write output to this path instead of stdout");
    };

    CLI::App* inv = app.add_subcommand("invariants", "nu+, tau, V-sequence, genus bound");
    inv->add_option("expr", expr_text, "knot expression")->required();
    add_io(inv);

    CLI::App* obs = app.add_subcommand("obstruct-fulltwist",
                                       "test whether a positive full twist can connect two knots");
    obs->add_option("--from", from_text, "starting knot")->required();
    obs->add_option("--to", to_text, "resulting knot")->required();
    obs->add_option("--linking", linking, "linking number or range A..B")->required();
    add_io(obs);

    CLI::App* cab = app.add_subcommand("cable-bounds", "nu+ bounds/values for (p,q)-cables");
    cab->add_option("expr", expr_text, "companion expression")->required();
    cab->add_option("--p", p_arg, "largest longitudinal winding")->required();
    cab->add_option("--q", q_arg, "largest meridional parameter")->required();
    add_io(cab);

    CLI::App* sur = app.add_subcommand("surgery-d", "correction terms of p/q-surgery");
    sur->add_option("expr", expr_text, "knot expression")->required();
    sur->add_option("--p", p_arg, "surgery numerator")->required();
    sur->add_option("--q", q_arg, "surgery denominator")->required();
    add_io(sur);

    CLI::App* pos = app.add_subcommand("poset", "order universe over generator atoms");
    pos->add_option("generators", generators, "generator atoms")->required();
    pos->add_option("--max-coeff", max_coeff, "coefficient bound");
    pos->add_option("--budget", budget, "largest allowed number of order pairs");
    pos->add_option("--out", out_path, "write <prefix>.json and <prefix>.dot");

    CLI::App* ver = app.add_subcommand("verify", "run built-in verification suites");
    ver->add_option("suite", suite, "suite name or 'all'");
    add_io(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (inv->parsed()) return run_invariants(expr_text, format, out_path);
        if (obs->parsed()) return run_obstruct(from_text, to_text, linking, format, out_path);
        if (cab->parsed()) return run_cable_bounds(expr_text, p_arg, q_arg, format, out_path);
        if (sur->parsed()) return run_surgery_d(expr_text, p_arg, q_arg, format, out_path);
        if (pos->parsed()) return run_poset(generators, max_coeff, budget, out_path);
        if (ver->parsed()) return run_verify(suite, format, out_path);
    } catch (const concordia::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const concordia::CertificationError& e) {
        std::cerr << "uncertified knot: " << e.what() << "\n";
        return kExitUncertified;
    } catch (const concordia::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
