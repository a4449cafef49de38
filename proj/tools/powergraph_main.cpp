#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pg/corpus.hpp"
#include "pg/errors.hpp"
#include "pg/formulas.hpp"
#include "pg/groupspec.hpp"
#include "pg/mincut.hpp"
#include "pg/powergraph.hpp"
#include "pg/solver.hpp"

namespace {

using nlohmann::ordered_json;

long long env_brute_cap() {
    const char* env = std::getenv("POWERGRAPH_MAX_BRUTE");
    if (env == nullptr || *env == '\0') return pg::kDefaultBruteCap;
    char* end = nullptr;
    errno = 0;
    long long v = std::strtoll(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0' || v < 1) {
        throw pg::ParseError("POWERGRAPH_MAX_BRUTE must be a positive integer", 0);
    }
    return v;
}

long long elapsed_us(std::chrono::steady_clock::time_point from) {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now() - from)
        .count();
}

int cmd_solve(const std::string& spec_text, bool json, bool force_brute,
              const std::string& method_text, long long brute_cap) {
    pg::GroupSpec gs = pg::parse_group_spec(spec_text);
    pg::NilpotentGroup g = gs.build();
    pg::MaximalCyclicAnalysis mca(g);

    pg::SolveOptions opts;
    opts.force_brute = force_brute;
    opts.brute_cap = brute_cap;
    if (!method_text.empty()) {
        std::optional<pg::Method> m = pg::method_from_tag(method_text);
        if (!m) throw pg::ParseError("unknown method tag '" + method_text + "'", 0);
        opts.force_method = *m;
    }
    pg::SolveResult res = pg::solve_min_degree(g, mca, opts);

    if (json) {
        ordered_json o;
        o["spec"] = gs.text();
        o["order"] = g.order();
        o.update(pg::solve_result_json(g, res));
        std::cout << o.dump(2) << "\n";
    } else {
        std::cout << "group: " << gs.text() << " (order " << g.order() << ")\n";
        std::cout << "delta = " << res.delta << "\n";
        std::cout << "witness = " << g.element_name(res.witness) << " (element order "
                  << g.element_order(res.witness) << ")\n";
        std::cout << "method = " << pg::method_tag(res.method) << "\n";
        if (!res.hypothesis_trace.empty()) {
            std::cout << "hypotheses:\n";
            for (const pg::HypothesisCondition& c : res.hypothesis_trace) {
                std::cout << "  [" << (c.holds ? "ok" : "fail") << "] " << c.condition << "\n";
            }
        }
        if (!res.candidates_examined.empty()) {
            std::cout << "candidates examined: " << res.candidates_examined.size() << "\n";
        }
    }
    return 0;
}

int cmd_degree(const std::string& spec_text, const std::string& elem_text, bool json,
               long long brute_cap) {
    pg::GroupSpec gs = pg::parse_group_spec(spec_text);
    pg::NilpotentGroup g = gs.build();
    pg::MaximalCyclicAnalysis mca(g);
    const int x = g.element_from_text(elem_text);

    pg::PowerGraphView view(g, brute_cap);
    const long long brute = view.degree(x);
    std::optional<long long> closed;
    std::string reason;
    if (x == g.identity()) {
        reason = "identity element; its degree is the group order minus one";
    } else {
        closed = pg::closed_form_degree(mca, x);
        if (!closed) {
            reason = "element lies in " + std::to_string(mca.count_containing_hall(x)) +
                     " maximal cyclic subgroups of its support product";
        }
    }

    if (json) {
        ordered_json o;
        o["spec"] = gs.text();
        o["order"] = g.order();
        o["element"] = g.element_name(x);
        o["element_order"] = g.element_order(x);
        o["degree_brute"] = brute;
        if (closed) {
            o["degree_closed"] = *closed;
        } else {
            o["degree_closed"] = nullptr;
            o["closed_form_unavailable"] = reason;
        }
        std::cout << o.dump(2) << "\n";
    } else {
        std::cout << "group: " << gs.text() << " (order " << g.order() << ")\n";
        std::cout << "element = " << g.element_name(x) << ", order " << g.element_order(x)
                  << "\n";
        std::cout << "brute-force degree = " << brute << "\n";
        if (closed) {
            std::cout << "closed-form degree = " << *closed << "\n";
        } else {
            std::cout << "closed-form degree = NOT_APPLICABLE (" << reason << ")\n";
        }
    }
    return 0;
}

int cmd_maximal_cyclic(const std::string& spec_text, bool json) {
    pg::GroupSpec gs = pg::parse_group_spec(spec_text);
    pg::NilpotentGroup g = gs.build();
    pg::MaximalCyclicAnalysis mca(g);
    const std::vector<pg::CyclicSubgroup>& ms = mca.maximal();

    if (json) {
        ordered_json o;
        o["spec"] = gs.text();
        o["order"] = g.order();
        o["count"] = ms.size();
        ordered_json arr = ordered_json::array();
        for (const pg::CyclicSubgroup& m : ms) {
            ordered_json entry;
            entry["generator"] = g.element_name(m.canonical_generator);
            entry["order"] = m.order;
            arr.push_back(std::move(entry));
        }
        o["maximal"] = std::move(arr);
        std::cout << o.dump(2) << "\n";
    } else {
        std::cout << "group: " << gs.text() << " (order " << g.order() << ")\n";
        std::cout << "maximal cyclic subgroups: " << ms.size() << "\n";
        for (const pg::CyclicSubgroup& m : ms) {
            std::cout << "  generator " << g.element_name(m.canonical_generator) << ", order "
                      << m.order << "\n";
        }
    }
    return 0;
}

int cmd_verify(long long max_order, bool nonabelian, const std::string& checks_csv,
               const std::string& report_file, bool json, long long brute_cap) {
    pg::VerifyOptions vo;
    vo.max_order = max_order;
    vo.include_nonabelian = nonabelian;
    vo.brute_cap = brute_cap;
    if (!checks_csv.empty()) {
        std::string token;
        for (size_t i = 0; i <= checks_csv.size(); ++i) {
            if (i < checks_csv.size() && checks_csv[i] != ',') {
                token += checks_csv[i];
                continue;
            }
            std::optional<pg::Check> c = pg::check_from_tag(token);
            if (!c) throw pg::ParseError("unknown check '" + token + "'", 0);
            vo.checks.push_back(*c);
            token.clear();
        }
    }

    pg::VerificationReport rep = pg::verify(vo);
    ordered_json j = pg::report_json(rep, true);
    if (!report_file.empty()) {
        std::ofstream f(report_file);
        if (!f) throw pg::DomainError("cannot write report file '" + report_file + "'");
        f << j.dump(2) << "\n";
    }
    if (json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "groups checked: " << rep.groups_checked << "\n";
        std::cout << "failures: " << rep.failure_count << "\n";
        std::cout << "methods:\n";
        for (const auto& [tag, count] : rep.method_counts) {
            std::cout << "  " << tag << ": " << count << "\n";
        }
        for (const pg::GroupRecord& rec : rep.records) {
            if (rec.failure_count() == 0) continue;
            std::cout << "FAIL " << rec.spec << " (" << rec.failure_count() << " failures)\n";
            for (const pg::CheckOutcome& c : rec.checks) {
                for (const std::string& msg : c.messages) {
                    std::cout << "  [" << c.name << "] " << msg << "\n";
                }
            }
        }
    }
    return rep.failure_count == 0 ? 0 : 5;
}

int cmd_bench(const std::vector<std::string>& spec_texts, long long abelian_max, int repeat,
              long long brute_cap) {
    std::vector<pg::GroupSpec> specs;
    for (const std::string& t : spec_texts) specs.push_back(pg::parse_group_spec(t));
    if (abelian_max >= 2) {
        for (pg::GroupSpec& s : pg::enumerate_abelian(abelian_max)) specs.push_back(std::move(s));
    }
    if (specs.empty()) throw pg::ParseError("no groups to benchmark", 0);

    std::cout << "spec,order,method,t_formula_us,t_brute_us\n";
    for (const pg::GroupSpec& gs : specs) {
        pg::NilpotentGroup g = gs.build();
        std::string method;
        long long best_formula = -1;
        long long best_brute = -1;
        for (int rep = 0; rep < repeat; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            pg::MaximalCyclicAnalysis mca(g);
            pg::SolveOptions opts;
            opts.brute_cap = brute_cap;
            pg::SolveResult res = pg::solve_min_degree(g, mca, opts);
            const long long t_formula = elapsed_us(t0);
            method = pg::method_tag(res.method);

            const auto t1 = std::chrono::steady_clock::now();
            pg::PowerGraphView view(g, brute_cap);
            const long long delta_brute = view.min_degree();
            const long long t_brute = elapsed_us(t1);
            if (delta_brute != res.delta) {
                throw pg::StructureError("benchmark disagreement on " + gs.text());
            }
            if (best_formula < 0 || t_formula < best_formula) best_formula = t_formula;
            if (best_brute < 0 || t_brute < best_brute) best_brute = t_brute;
        }
        std::cout << gs.text() << "," << g.order() << "," << method << "," << best_formula
                  << "," << best_brute << "\n";
    }
    return 0;
}

int cmd_edges(const std::string& spec_text, long long brute_cap) {
    pg::GroupSpec gs = pg::parse_group_spec(spec_text);
    pg::NilpotentGroup g = gs.build();
    pg::PowerGraphView view(g, brute_cap);
    view.write_edges(std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum degree of the power graph of a finite nilpotent group"};
    app.require_subcommand(1);

    std::string spec_text;
    std::string elem_text;
    std::string method_text;
    std::string checks_csv;
    std::string report_file;
    std::vector<std::string> bench_specs;
    bool json = false;
    bool force_brute = false;
    bool nonabelian = false;
    long long max_order = 100;
    long long abelian_max = 0;
    int repeat = 1;

    CLI::App* solve = app.add_subcommand("solve", "Minimum degree, witness, and method");
    solve->add_option("spec", spec_text, "group expression, e.g. \"C2 x C3 x C3\"")->required();
    solve->add_flag("--json", json, "JSON output");
    solve->add_flag("--force-brute", force_brute, "skip the closed forms and scan the graph");
    solve->add_option("--method", method_text, "force a single method by tag");

    CLI::App* degree = app.add_subcommand("degree", "Degree of one element, both ways");
    degree->add_option("spec", spec_text, "group expression")->required();
    degree->add_option("element", elem_text, "comma-separated coordinates, e.g. 1,0,0")
        ->required();
    degree->add_flag("--json", json, "JSON output");

    CLI::App* maximal = app.add_subcommand("maximal-cyclic", "List the maximal cyclic subgroups");
    maximal->add_option("spec", spec_text, "group expression")->required();
    maximal->add_flag("--json", json, "JSON output");

    CLI::App* verify = app.add_subcommand("verify", "Run the verification harness");
    verify->add_option("--max-order", max_order, "largest group order in the corpus");
    verify->add_flag("--nonabelian", nonabelian, "include the nonabelian catalog");
    verify->add_option("--checks", checks_csv, "comma-separated check names");
    verify->add_option("--report", report_file, "write the JSON report to this file");
    verify->add_flag("--json", json, "print the JSON report to stdout");

    CLI::App* bench = app.add_subcommand("bench", "Closed form vs brute force timing, CSV");
    bench->add_option("spec", bench_specs, "group expressions");
    bench->add_option("--abelian-max", abelian_max, "also bench all abelian groups up to here");
    bench->add_option("--repeat", repeat, "measurements per group, minimum reported")
        ->check(CLI::PositiveNumber);

    CLI::App* edges = app.add_subcommand("edges", "Edge list of the power graph, one per line");
    edges->add_option("spec", spec_text, "group expression")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const long long brute_cap = env_brute_cap();
        if (solve->parsed()) {
            return cmd_solve(spec_text, json, force_brute, method_text, brute_cap);
        }
        if (degree->parsed()) {
            return cmd_degree(spec_text, elem_text, json, brute_cap);
        }
        if (maximal->parsed()) {
            return cmd_maximal_cyclic(spec_text, json);
        }
        if (verify->parsed()) {
            return cmd_verify(max_order, nonabelian, checks_csv, report_file, json, brute_cap);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_specs, abelian_max, repeat, brute_cap);
        }
        if (edges->parsed()) {
            return cmd_edges(spec_text, brute_cap);
        }
    } catch (const pg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pg::HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const pg::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
