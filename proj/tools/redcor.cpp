// Command-line front end: classifiers, functors, derived checks and the property suites.

#include "redcor/errors.hpp"
#include "redcor/suites.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace redcor;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitInconclusive = 3;

// An error the user can fix by changing the input.
struct InputError : Error {
    using Error::Error;
};

struct Common {
    std::string ring;
    std::string ideal;
    std::string format = "text";
    std::uint64_t seed = default_seed();
    unsigned k_max = kDefaultKMax;
    unsigned window = kDefaultStabilityWindow;
};

std::string render(const Node& n, const std::string& format) {
    return format == "json" ? to_json(n).dump(2) + "\n" : write_text(n);
}

void emit(const Node& n, const Common& c) { std::cout << render(n, c.format); }

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Node load(const std::string& path) { return read_document(slurp(path)); }

RingSpec ring_option(const Common& c) {
    if (c.ring.empty()) throw InputError("--ring is required");
    return parse_ring(c.ring);
}

void check_ring(const Common& c, const RingSpec& found) {
    if (!c.ring.empty() && !(parse_ring(c.ring) == found))
        throw InputError("--ring " + c.ring + " does not match the input ring " + found.to_string());
}

Complex load_complex(const std::string& path, const Common& c) {
    const Node n = load(path);
    Complex C = n.kind == "module" ? Complex::concentrated(decode_module(n)) : decode_complex(n);
    check_ring(c, C.ring());
    return C;
}

Module load_module(const std::string& path, const Common& c) {
    Module M = decode_module(load(path));
    check_ring(c, M.ring);
    return M;
}

Ideal ideal_option(const Common& c, const RingSpec& ring) {
    if (c.ideal.empty()) throw InputError("--ideal is required");
    return parse_ideal(ring, c.ideal);
}

DerivedOptions derived_options(const Common& c) {
    DerivedOptions o;
    o.k_max = c.k_max;
    o.window = c.window;
    return o;
}

Value word_of(bool b) { return Value::word(b ? "true" : "false"); }
Value word_of(Tri t) { return Value::word(to_string(t)); }

Value count(std::size_t n) { return Value::of(Int(static_cast<unsigned long>(n))); }

Node table_node(const CohomologyTable& t, const std::string& name) {
    Node n("table");
    n.set("name", Value::quoted(name));
    Value degrees = Value::list(), groups = Value::list();
    for (const auto& [d, inv] : t.groups) {
        degrees.items.push_back(Value::of(Int(d)));
        groups.items.push_back(Value::quoted(inv.to_string()));
    }
    n.set("degrees", degrees);
    n.set("groups", groups);
    if (t.valid_lo != INT_MIN) n.set("valid_from", Value::of(Int(t.valid_lo)));
    if (t.valid_hi != INT_MAX) n.set("valid_to", Value::of(Int(t.valid_hi)));
    return n;
}

Node system_node(const SystemTable& s) {
    Node n("system");
    for (const auto& [d, v] : s.degrees) {
        Node x("degree");
        x.set("degree", Value::of(Int(d)));
        x.set("rule", Value::word(to_string(v.rule)));
        if (v.value) x.set("value", Value::quoted(v.value->to_string()));
        if (v.stage) x.set("stage", count(v.stage));
        n.add("h" + std::to_string(d), std::move(x));
    }
    return n;
}

Node verdict_node(const ComplexVerdict& v) {
    Node n("verdict");
    n.set("reduced", word_of(v.reduced));
    n.set("coreduced", word_of(v.coreduced));
    n.set("torsion", word_of(v.torsion));
    n.set("complete", word_of(v.complete));
    n.set("killed", word_of(v.killed));
    n.set("torsion_and_reduced", word_of(v.torsion_and_reduced()));
    n.set("complete_and_coreduced", word_of(v.complete_and_coreduced()));
    n.set("consistent", word_of(v.consistent()));
    std::size_t k = 0;
    for (const auto& w : v.witnesses) {
        Node x("witness");
        x.set("flag", Value::word(w.flag));
        x.set("degree", Value::of(Int(w.degree)));
        x.set("detail", Value::quoted(w.detail));
        n.add("w" + std::to_string(k++), std::move(x));
    }
    return n;
}

Node derived_node(const DerivedVerdict& v) {
    Node n("derived-verdict");
    n.set("basis", Value::word(to_string(v.basis)));
    n.set("reduced", word_of(v.d_reduced));
    n.set("coreduced", word_of(v.d_coreduced));
    n.set("torsion", word_of(v.d_torsion));
    n.set("complete", word_of(v.d_complete));
    if (v.basis == Basis::DirectComparison) {
        n.set("direct_reduced", word_of(v.direct_reduced));
        n.set("direct_coreduced", word_of(v.direct_coreduced));
        n.set("direct_torsion", word_of(v.direct_torsion));
        n.set("direct_complete", word_of(v.direct_complete));
        Value c = Value::list();
        for (const auto& s : v.contradictions) c.items.push_back(Value::quoted(s));
        n.set("contradictions", c);
    }
    std::size_t k = 0;
    for (const auto& [name, t] : v.tables) n.add("t" + std::to_string(k++), table_node(t, name));
    if (v.gamma_system) n.add("r_gamma", system_node(*v.gamma_system));
    if (v.lambda_system) n.add("l_lambda", system_node(*v.lambda_system));
    return n;
}

Node report_node(const DerivedReport& r, const std::string& kind) {
    Node n(kind);
    n.set("holds", word_of(r.holds()));
    std::size_t k = 0;
    for (const auto& c : r.comparisons) {
        Node x("comparison");
        x.set("name", Value::quoted(c.name));
        x.set("match", word_of(c.match));
        x.add("lhs", table_node(c.lhs, "lhs"));
        x.add("rhs", table_node(c.rhs, "rhs"));
        n.add("c" + std::to_string(k++), std::move(x));
    }
    return n;
}

Node groups_node(const std::string& kind, const std::vector<Module>& groups) {
    Node n(kind);
    Value degrees = Value::list(), values = Value::list();
    for (std::size_t i = 0; i < groups.size(); ++i) {
        degrees.items.push_back(count(i));
        values.items.push_back(Value::quoted(groups[i].invariants().to_string()));
    }
    n.set("degrees", degrees);
    n.set("groups", values);
    return n;
}

int exit_for(Status s) {
    switch (s) {
        case Status::Pass: return kExitPass;
        case Status::Fail: return kExitFailure;
        case Status::Skip: return kExitInconclusive;
    }
    return kExitFailure;
}

// Failure dominates, then passes, then inconclusive.
int combine(int a, int b) {
    if (a == kExitFailure || b == kExitFailure) return kExitFailure;
    if (a == kExitPass || b == kExitPass) return kExitPass;
    return kExitInconclusive;
}

SuiteConfig suite_config(const Common& c, std::optional<std::size_t> cases, unsigned workers) {
    SuiteConfig cfg;
    cfg.seed = c.seed;
    cfg.cases = cases;
    cfg.k_max = c.k_max;
    cfg.window = c.window;
    cfg.workers = workers;
    if (!c.ring.empty()) cfg.ring = parse_ring(c.ring);
    return cfg;
}

int replay(const std::string& path, const Common& c) {
    const Node doc = load(path);
    SuiteConfig cfg = suite_config(c, std::nullopt, 1);
    auto run = [&](const Node& n) {
        const Case k = decode_case(n);
        const Outcome o = check_case(k, cfg);
        std::cout << k.suite << " case " << k.index << ": " << to_string(o.status);
        if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
        std::cout << "\n";
        return exit_for(o.status);
    };
    if (doc.kind == "case") return run(doc);
    doc.expect("suite-report");
    int code = kExitInconclusive;
    bool any = false;
    for (const auto& [name, child] : doc.children)
        if (child.kind == "failure") {
            if (const Node* inst = child.find_child("instance")) {
                code = any ? combine(code, run(*inst)) : run(*inst);
                any = true;
            }
        }
    if (!any) std::cout << "no failures to replay\n";
    return any ? code : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reduced and coreduced modules and complexes: classifiers, functors and property suites"};
    app.require_subcommand(1);
    app.fallthrough();
    Common c;
    app.add_option("--ring", c.ring, "Z or Z/n");
    app.add_option("--ideal", c.ideal, "ideal generators, comma separated");
    app.add_option("--seed", c.seed, "generator seed (default: REDCOR_SEED or built in)");
    app.add_option("--kmax", c.k_max, "largest power of the ideal tried by stabilization searches");
    app.add_option("--window", c.window, "stabilization window for derived systems");
    app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));

    int code = kExitPass;
    std::function<int()> action;

    std::string input, second;
    bool derived = false;
    std::string basis = "characterization";

    auto* classify = app.add_subcommand("classify", "flags of a complex (or module) for the ideal");
    classify->add_option("input", input, "complex or module file, '-' for stdin")->required();
    classify->add_flag("--derived", derived, "derived-category flags");
    classify->add_option("--basis", basis, "derived basis")->check(CLI::IsMember({"characterization", "direct"}));
    classify->callback([&] {
        action = [&] {
            const Complex M = load_complex(input, c);
            const Ideal a = ideal_option(c, M.ring());
            if (!derived) {
                emit(verdict_node(mgm_c_classify(M, a, c.k_max)), c);
                return kExitPass;
            }
            const DerivedVerdict v = derived_classify(
                M, a, basis == "direct" ? Basis::DirectComparison : Basis::Characterization, derived_options(c));
            emit(derived_node(v), c);
            return v.agrees() ? kExitPass : kExitFailure;
        };
    });

    auto* gamma = app.add_subcommand("gamma", "the a-torsion complex");
    gamma->add_option("input", input, "complex or module file")->required();
    gamma->callback([&] {
        action = [&] {
            const Complex M = load_complex(input, c);
            emit(encode(gamma_complex(M, ideal_option(c, M.ring()), c.k_max).complex), c);
            return kExitPass;
        };
    });

    auto* lambda = app.add_subcommand("lambda", "the a-adic completion complex");
    lambda->add_option("input", input, "complex or module file")->required();
    lambda->callback([&] {
        action = [&] {
            const Complex M = load_complex(input, c);
            emit(encode(lambda_complex(M, ideal_option(c, M.ring()), c.k_max).complex), c);
            return kExitPass;
        };
    });

    int top_degree = 2;
    auto* ext = app.add_subcommand("ext", "Ext^i(X, M) for i = 0..max");
    ext->add_option("module", input, "module file X")->required();
    ext->add_option("complex", second, "complex or module file M")->required();
    ext->add_option("--max", top_degree, "largest degree")->check(CLI::NonNegativeNumber);
    ext->callback([&] {
        action = [&] {
            emit(groups_node("ext", ext_groups(load_module(input, c), load_complex(second, c), top_degree)), c);
            return kExitPass;
        };
    });

    auto* tor = app.add_subcommand("tor", "Tor_i(X, M) for i = 0..max");
    tor->add_option("module", input, "module file X")->required();
    tor->add_option("complex", second, "complex or module file M")->required();
    tor->add_option("--max", top_degree, "largest degree")->check(CLI::NonNegativeNumber);
    tor->callback([&] {
        action = [&] {
            emit(groups_node("tor", tor_groups(load_module(input, c), load_complex(second, c), top_degree)), c);
            return kExitPass;
        };
    });

    std::string sequence;
    unsigned power = 1, height = kDefaultTowerHeight, lag_window = 2;
    auto* koszul = app.add_subcommand("koszul", "the Koszul complex of a sequence raised to a power");
    koszul->add_option("--sequence", sequence, "comma separated ring elements")->required();
    koszul->add_option("--power", power, "exponent applied to each element")->check(CLI::PositiveNumber);
    koszul->callback([&] {
        action = [&] {
            emit(encode(koszul_complex(ring_option(c), parse_integer_list(sequence), power)), c);
            return kExitPass;
        };
    });

    auto* wpr = app.add_subcommand("wpr", "pro-zero witnesses for the Koszul tower of a sequence");
    wpr->add_option("--sequence", sequence, "comma separated ring elements")->required();
    wpr->add_option("--height", height, "tower height")->check(CLI::PositiveNumber);
    wpr->add_option("--lag", lag_window, "largest lag searched");
    wpr->callback([&] {
        action = [&] {
            const WprReport r = wpr_check(ring_option(c), parse_integer_list(sequence), height, lag_window);
            Node n("wpr");
            n.set("witnessed", word_of(r.witnessed()));
            for (const auto& d : r.degrees) {
                Node x("degree");
                x.set("degree", Value::of(Int(d.degree)));
                x.set("witnessed", word_of(d.witnessed));
                Value pairs = Value::list();
                for (const auto& [i, j] : d.witness) pairs.items.push_back(Value::list({count(i), count(j)}));
                x.set("witness", pairs);
                if (!d.detail.empty()) x.set("detail", Value::quoted(d.detail));
                n.add("q" + std::to_string(-d.degree), std::move(x));
            }
            emit(n, c);
            return r.witnessed() ? kExitPass : kExitInconclusive;
        };
    });

    auto* adjunction = app.add_subcommand("adjunction", "Hom(Lambda M, N) = Hom(M, Gamma N) for M coreduced, N reduced");
    adjunction->add_option("coreduced", input, "complex file M")->required();
    adjunction->add_option("reduced", second, "complex file N")->required();
    adjunction->add_flag("--derived", derived, "compare RHom(A/a (x)^L M, N) with RHom(M, RHom(A/a, N))");
    adjunction->callback([&] {
        action = [&] {
            const Complex M = load_complex(input, c), N = load_complex(second, c);
            const Ideal a = ideal_option(c, M.ring());
            if (derived) {
                const DerivedReport r = gm_duality_derived_check(M, N, a, derived_options(c));
                Node n = report_node(r, "gm-derived");
                if (auto k = classical_duality_check(M, N, a, derived_options(c)))
                    n.add("classical", report_node(*k, "gm-classical"));
                emit(n, c);
                return r.holds() ? kExitPass : kExitFailure;
            }
            const AdjunctionWitness w = adjunction_witness(M, N, a, c.k_max);
            Node n("adjunction");
            n.set("verified", word_of(w.verified));
            if (!w.detail.empty()) n.set("detail", Value::quoted(w.detail));
            n.add("lhs", encode(w.lhs));
            n.add("rhs", encode(w.rhs));
            if (w.iso) n.add("iso", encode(*w.iso));
            emit(n, c);
            return w.verified ? kExitPass : kExitFailure;
        };
    });

    auto* mgm = app.add_subcommand("mgm", "torsion and reduced versus complete and coreduced");
    mgm->add_option("input", input, "complex or module file")->required();
    mgm->add_flag("--derived", derived, "derived-category memberships");
    mgm->callback([&] {
        action = [&] {
            const Complex M = load_complex(input, c);
            const Ideal a = ideal_option(c, M.ring());
            if (!derived) {
                const ComplexVerdict v = mgm_c_classify(M, a, c.k_max);
                emit(verdict_node(v), c);
                if (!v.decidable()) return kExitInconclusive;
                return v.consistent() ? kExitPass : kExitFailure;
            }
            const MgmDerivedReport r = mgm_derived_check(M, a, derived_options(c));
            Node n("mgm-derived");
            n.set("torsion_and_reduced", word_of(r.tor_red));
            n.set("complete_and_coreduced", word_of(r.com_cor));
            n.set("rhom_fixed", word_of(r.rhom_fixed));
            n.set("tensor_fixed", word_of(r.tensor_fixed));
            n.set("membership_equal", word_of(r.membership_equal()));
            n.add("verdict", derived_node(r.verdict));
            emit(n, c);
            if (!r.decidable()) return kExitInconclusive;
            return r.membership_equal() ? kExitPass : kExitFailure;
        };
    });

    std::string suite_id;
    std::optional<std::size_t> cases;
    unsigned workers = 0;
    std::string report_dir;
    auto* suite = app.add_subcommand("suite", "run a property suite, or 'all'");
    suite->add_option("id", suite_id, "suite id or 'all'")->required();
    suite->add_option("--cases", cases, "number of cases (default: per suite)");
    suite->add_option("--workers", workers, "worker threads (0: one per core)");
    suite->add_option("--report-dir", report_dir, "write every report into this directory");
    suite->callback([&] {
        action = [&] {
            const SuiteConfig cfg = suite_config(c, cases, workers);
            auto save = [&](const SuiteReport& r) {
                if (report_dir.empty()) return;
                std::filesystem::create_directories(report_dir);
                std::ofstream out(std::filesystem::path(report_dir) / (r.suite + (c.format == "json" ? ".json" : ".rc")));
                out << render(encode(r), c.format);
            };
            if (suite_id != "all") {
                const SuiteReport r = run_suite(suite_id, cfg);
                emit(encode(r), c);
                save(r);
                std::cerr << r.summary() << "\n";
                return r.exit_code();
            }
            int overall = kExitInconclusive;
            bool first = true;
            for (const auto& info : suite_index()) {
                const SuiteReport r = run_suite(info.id, cfg);
                save(r);
                std::cout << r.summary() << " [" << std::fixed << std::setprecision(2) << r.seconds << " s]\n";
                overall = first ? r.exit_code() : combine(overall, r.exit_code());
                first = false;
            }
            return overall;
        };
    });

    auto* list = app.add_subcommand("suites", "list the suites and the statements each covers");
    list->callback([&] {
        action = [&] {
            for (const auto& s : suite_index()) {
                std::cout << s.id << " (" << s.default_cases << " cases): " << s.title << "\n";
                for (const auto& st : s.statements) std::cout << "  " << st << "\n";
            }
            return kExitPass;
        };
    });

    auto* rep = app.add_subcommand("replay", "re-run a stored case, or every failure in a suite report");
    rep->add_option("file", input, "case or suite-report file")->required();
    rep->callback([&] { action = [&] { return replay(input, c); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int r = app.exit(e);
        return r == 0 ? kExitPass : kExitInput;
    }

    try {
        code = action();
    } catch (const NotStabilized& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const TruncationExceeded& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return code;
}
