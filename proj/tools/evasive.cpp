#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "evasive/case_trace.hpp"
#include "evasive/io.hpp"
#include "evasive/lemma.hpp"
#include "evasive/library.hpp"

#ifndef EVASIVE_DATA_DIR
#define EVASIVE_DATA_DIR "data"
#endif

using namespace evasive;

namespace {

enum Exit { ok = 0, mismatch = 1, usage = 2, truncated = 3 };

struct Options {
    std::string data_dir = EVASIVE_DATA_DIR;
    std::string format = "text";
    bool json() const { return format == "json"; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
    return s;
}

// ---- catalog -------------------------------------------------------------

int cmd_catalog(const Options& o, int n) {
    const Catalog cat = build_catalog(n);
    const std::size_t want = n == 10 ? 22 : 3;
    std::vector<std::pair<std::string, bool>> captions;
    if (n == 10)
        for (const auto& [a, b] : known_isomorphisms()) captions.emplace_back(a + " ~ " + b, check_isomorphism(n, a, b).holds);

    if (o.json()) {
        Json j = to_json(cat);
        Json caps = Json::array();
        for (const auto& [text, holds] : captions) caps.push_back({{"caption", text}, {"holds", holds}});
        j["captions"] = caps;
        print_json(j);
    } else {
        std::cout << cat.classes().size() << " transitive classes on " << n << " vertices\n";
        for (const auto& c : cat.classes()) {
            const auto degs = c.representative.degrees();
            std::cout << "  " << c.id << "  edges=" << c.edge_count() << " degree=" << (degs.empty() ? 0 : degs.front())
                      << "  members: " << join(c.members, " ") << '\n';
        }
        for (const auto& [text, holds] : captions)
            std::cout << (holds ? "PASS " : "FLAG ") << "caption " << text
                      << (holds ? "" : " (not isomorphic; see the computed classes above)") << '\n';
    }
    return cat.classes().size() == want ? ok : mismatch;
}

// ---- poset ---------------------------------------------------------------

int cmd_poset(const Options& o, bool dot) {
    const Catalog cat = build_catalog(10);
    const InclusionPoset P = build_poset(cat);
    if (dot) {
        std::cout << poset_dot(P, cat);
        return ok;
    }
    bool all = true;
    Json checks = Json::array();
    std::ostringstream text;
    for (const auto& r : known_inclusions()) {
        const auto c = check_inclusion(10, r);
        const auto lc = cat.class_of_member(r.lower), uc = cat.class_of_member(r.upper);
        const bool in_poset = lc && uc && P.le(*lc, *uc);
        const bool pass = c.holds && in_poset;
        all = all && pass;
        text << (pass ? "PASS " : "FAIL ") << r.source;
        if (c.witness) text << "  [" << relabeling_string(*c.witness) << "]";
        text << '\n';
        Json w = c.witness ? Json(*c.witness) : Json(nullptr);
        checks.push_back({{"relation", r.source}, {"lower", r.lower}, {"upper", r.upper}, {"pass", pass}, {"witness", w}});
    }
    if (o.json()) {
        Json j = to_json(P);
        j["checks"] = checks;
        print_json(j);
    } else {
        std::cout << "hasse diagram (" << P.hasse.size() << " covering pairs):\n";
        for (auto [a, b] : P.hasse) std::cout << "  " << P.classes[a] << " < " << P.classes[b] << '\n';
        std::cout << text.str();
    }
    return all ? ok : mismatch;
}

// ---- lemma ---------------------------------------------------------------

struct Loaded {
    Catalog cat;
    InclusionPoset poset;
    LemmaFile file;
    std::vector<LemmaReport> reports;
};

Loaded load(const Options& o, int n) {
    Catalog cat = build_catalog(n);
    InclusionPoset poset = build_poset(cat);
    LemmaFile file = load_lemma_file(o.data_dir + (n == 10 ? "/lemmas.json" : "/lemmas_n5.json"));
    auto reports = run_lemmas(file, cat, poset);
    return {std::move(cat), std::move(poset), std::move(file), std::move(reports)};
}

Json to_json(const LemmaReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    Json j{{"name", r.name}, {"pass", r.pass()}, {"checks", checks}, {"warnings", r.warnings}, {"notes", r.notes}};
    if (r.expansion) j["raw"] = raw_expansion_string(*r.expansion);
    if (r.generated) j["form"] = r.generated->to_string();
    if (!r.conclusion.empty()) j["conclusion"] = r.conclusion;
    return j;
}

int cmd_lemma(const Options& o, const std::string& name, int n) {
    const Loaded L = load(o, n);
    std::vector<const LemmaReport*> chosen;
    for (const auto& r : L.reports)
        if (name == "all" || r.name == name) chosen.push_back(&r);
    if (chosen.empty()) {
        std::cerr << "no lemma named " << name << '\n';
        return usage;
    }
    std::size_t passed = 0;
    Json out = Json::array();
    for (const auto* r : chosen) {
        passed += r->pass();
        if (o.json()) {
            out.push_back(to_json(*r));
            continue;
        }
        std::cout << r->name << ": " << (r->pass() ? "PASS" : "FAIL") << '\n';
        for (const auto& c : r->checks) std::cout << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << c.detail << '\n';
        for (const auto& s : r->notes) std::cout << "  note " << s << '\n';
        for (const auto& s : r->warnings) std::cout << "  warn " << s << '\n';
        if (r->expansion) std::cout << "  raw  " << raw_expansion_string(*r->expansion) << '\n';
    }
    if (o.json())
        print_json({{"lemmas", out}, {"passed", passed}, {"total", chosen.size()}});
    else if (chosen.size() > 1)
        std::cout << passed << "/" << chosen.size() << " PASS\n";
    return passed == chosen.size() ? ok : mismatch;
}

// ---- solve / trace -------------------------------------------------------

std::vector<LinearForm> system_forms(const Loaded& L, const std::string& which) {
    return which == "printed" ? printed_forms(L.file) : computed_forms(L.reports);
}

int cmd_solve(const Options& o, int n, const std::string& which, const std::vector<std::string>& extra, bool expect) {
    const Loaded L = load(o, n);
    std::vector<LinearForm> extra_forms;
    for (const auto& e : extra) extra_forms.push_back(parse_form(e));
    const auto sys = ConstraintSystem::build(L.cat, L.poset, system_forms(L, which)).with(extra_forms);
    const auto sols = enumerate_solutions(sys);

    std::optional<SolutionTable> expected;
    if (n == 10) expected = SolutionTable::parse(read_file(o.data_dir + "/six_columns.txt"));
    // the expected columns that survive the extra constraints
    std::size_t expected_count = 0;
    bool same = true;
    if (expected) {
        const auto labels = label_solutions(sols, *expected);
        for (const auto& col : expected->columns) {
            auto values = col.as_map();
            bool keep = std::all_of(extra_forms.begin(), extra_forms.end(), [&](const auto& f) {
                return f.substitute(forced_values()).satisfied_by(values);
            });
            expected_count += keep;
        }
        same = sols.size() == expected_count &&
               std::all_of(labels.begin(), labels.end(), [](const auto& l) { return l.has_value(); });
    } else {
        same = sols.empty();
    }

    const auto table = make_table(sols, expected ? &*expected : nullptr);
    if (o.json()) {
        Json j = to_json(table);
        j["forms"] = which;
        j["count"] = sols.size();
        j["matches_expected"] = same;
        print_json(j);
    } else if (sols.empty()) {
        std::cout << "no solutions";
        if (n == 5) std::cout << ": conjecture holds for 5 vertices";
        std::cout << '\n';
    } else {
        std::cout << sols.size() << " solution(s) from the " << which << " lemma forms\n" << table.to_text();
    }
    if (expect && !same) {
        std::cerr << "solution set differs from the expected table (" << sols.size() << " found, " << expected_count
                  << " expected)\n";
        return mismatch;
    }
    return ok;
}

int cmd_trace(const Options& o, const std::string& which) {
    const Loaded L = load(o, 10);
    const auto expected = SolutionTable::parse(read_file(o.data_dir + "/six_columns.txt"));
    std::map<std::string, LinearForm> forms;
    if (which == "printed")
        for (const auto& s : L.file.lemmas) forms[s.name] = s.form;
    else
        for (const auto& r : L.reports)
            if (r.generated) forms[r.name] = *r.generated;
    const auto t = case_trace(L.cat, L.poset, forms, expected);

    Json cases = Json::array();
    for (const auto& c : t.cases) {
        Json steps = Json::array();
        for (const auto& s : c.steps) steps.push_back({{"claim", s.claim}, {"status", to_string(s.status)}, {"detail", s.detail}});
        Json jc{{"case", c.name}, {"assumption", c.assumption}, {"steps", steps}};
        if (c.has_outcome) {
            jc["expected"] = c.expected;
            jc["obtained"] = c.obtained;
            jc["pass"] = c.outcome_ok();
        }
        cases.push_back(jc);
        if (o.json()) continue;
        std::cout << c.name << ": " << c.assumption << '\n';
        for (const auto& s : c.steps) std::cout << "  " << to_string(s.status) << "  " << s.claim << "  (" << s.detail << ")\n";
        if (c.has_outcome) {
            std::vector<std::string> e(c.expected.begin(), c.expected.end()), g(c.obtained.begin(), c.obtained.end());
            std::cout << "  " << (c.outcome_ok() ? "PASS" : "FAIL") << "  expected {" << join(e, ", ") << "}, obtained {"
                      << join(g, ", ") << "}\n";
        }
    }
    if (o.json()) print_json({{"forms", which}, {"cases", cases}, {"pass", t.pass()}});
    return t.pass() ? ok : mismatch;
}

// ---- search --------------------------------------------------------------

std::vector<std::string> split_generators(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (const auto& a : args) {
        std::stringstream ss(a);
        for (std::string g; std::getline(ss, g, ';');) {
            g.erase(0, g.find_first_not_of(' '));
            g.erase(g.find_last_not_of(' ') + 1);
            if (!g.empty()) out.push_back(g);
        }
    }
    return out;
}

int cmd_search(const Options& o, const std::vector<std::string>& ambient_args, int degree, std::size_t max_order,
               std::size_t budget, const std::string& output) {
    const PermGroup ambient = closure_of_strings(degree, split_generators(ambient_args));
    SearchOptions so;
    so.max_subgroup_order = max_order;
    so.budget = budget;
    const auto res = search_chains(ambient, so);

    FormLibrary lib;
    std::optional<Catalog> cat;
    if (degree == 5 || degree == 10) {
        cat = build_catalog(degree);
        lib = derive_forms(res.chains, *cat);
    } else {
        for (const auto& c : res.chains) lib.records.push_back({c, FormStatus::unidentified, std::nullopt});
    }

    Json chains = Json::array();
    for (const auto& r : lib.records) chains.push_back(to_json(r));
    Json forms = Json::array(), dropped = Json::array();
    for (const auto& f : lib.filtered.kept) forms.push_back(f.to_string());
    for (const auto& f : lib.filtered.discarded) dropped.push_back(f.to_string());
    Json j{{"ambient", to_json(ambient)},
           {"candidate_subgroups", res.candidate_subgroups},
           {"truncated", res.truncated},
           {"chains", chains},
           {"forms", forms},
           {"dependent_forms", dropped},
           {"rank", lib.filtered.rank}};

    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot write " + output);
        out << j.dump(2) << '\n';
    }
    if (o.json()) {
        print_json(j);
    } else {
        std::cout << "ambient order " << ambient.order() << ", " << res.candidate_subgroups << " candidate subgroups, "
                  << res.chains.size() << " chains" << (res.truncated ? " (truncated)" : "") << '\n';
        std::map<std::string, std::size_t> status;
        for (const auto& r : lib.records) ++status[to_string(r.status)];
        for (const auto& [s, k] : status) std::cout << "  " << s << ": " << k << '\n';
        std::cout << lib.forms.size() << " distinct forms, " << lib.filtered.discarded.size()
                  << " discarded as dependent, rank " << lib.filtered.rank << '\n';
        for (const auto& f : lib.filtered.kept) std::cout << "  " << f.to_string() << '\n';
    }
    return res.truncated ? truncated : ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Indicator constraints for nonevasive graph properties on 10 vertices"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--data-dir", o.data_dir, "Directory with lemmas.json and six_columns.txt");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    int n = 10;
    auto* catalog = app.add_subcommand("catalog", "List the transitive graph classes");
    catalog->add_option("--n", n, "Vertex count")->check(CLI::IsMember({5, 10}));

    bool dot = false;
    auto* poset = app.add_subcommand("poset", "Inclusion poset and the listed inclusions");
    poset->add_flag("--dot", dot, "Print the Hasse diagram in DOT");

    std::string lemma_name = "all";
    auto* lemma = app.add_subcommand("lemma", "Verify lemma groups, chains and forms");
    lemma->add_option("name", lemma_name, "Lemma name or 'all'");
    lemma->add_option("--n", n, "Vertex count")->check(CLI::IsMember({5, 10}));

    std::vector<std::string> extra;
    std::string forms = "computed";
    bool no_expect = false;
    auto* solve = app.add_subcommand("solve", "Enumerate indicator assignments");
    solve->add_option("--extra", extra, "Extra constraint, e.g. \"i2=0\"");
    solve->add_option("--n", n, "Vertex count")->check(CLI::IsMember({5, 10}));
    solve->add_option("--forms", forms, "Lemma forms to use")->check(CLI::IsMember({"computed", "printed"}));
    solve->add_flag("--no-expect", no_expect, "Do not compare with the expected table");

    auto* trace = app.add_subcommand("trace", "Replay the case analysis");
    trace->add_option("--forms", forms, "Lemma forms to use")->check(CLI::IsMember({"computed", "printed"}));

    std::vector<std::string> ambient;
    int degree = 10;
    std::size_t max_order = 0, budget = 100000;
    std::string output;
    auto* search = app.add_subcommand("search", "Search Oliver chains in an ambient group");
    search->add_option("--ambient", ambient, "Generators in cycle notation, ';'-separated or repeated")->required();
    search->add_option("--degree", degree, "Number of points")->check(CLI::Range(1, 64));
    search->add_option("--max-order", max_order, "Largest candidate subgroup order (0: no limit)");
    search->add_option("--budget", budget, "Maximum number of chains");
    search->add_option("--output", output, "Write the chain library to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*catalog) return cmd_catalog(o, n);
        if (*poset) return cmd_poset(o, dot);
        if (*lemma) return cmd_lemma(o, lemma_name, n);
        if (*solve) return cmd_solve(o, n, forms, extra, !no_expect);
        if (*trace) return cmd_trace(o, forms);
        if (*search) return cmd_search(o, ambient, degree, max_order, budget, output);
    } catch (const PermError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const FormError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return mismatch;
    }
    return usage;
}
