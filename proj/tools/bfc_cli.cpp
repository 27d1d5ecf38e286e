// bfc: command-line front end for the Fock, Heisenberg, quiver and coefficient computations.
// Exit codes: 0 success or all checks pass, 1 a verification failed, 2 usage or input error.

#include "json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <stdexcept>
#include <variant>

namespace {

using namespace bfc;
using json_io::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Operand = std::variant<Partition, ChargedSequence>;

Operand parse_operand(const std::string& text) {
    if (text.rfind("vac:", 0) == 0 || text.rfind("seq:", 0) == 0) return parse_sequence(text);
    return parse_partition(text);
}

FockVector as_fock(const Operand& x) {
    if (const auto* p = std::get_if<Partition>(&x)) return fock(*p);
    return fock(std::get<ChargedSequence>(x));
}

Partition as_partition(const Operand& x) {
    if (const auto* p = std::get_if<Partition>(&x)) return *p;
    const auto& s = std::get<ChargedSequence>(x);
    if (s.charge != 0) throw UsageError("this operator acts on partitions; charge-" + std::to_string(s.charge) + " sequence given");
    return from_sequence(s);
}

void print_line(const std::string& key, const std::string& value) {
    std::cout << std::left << std::setw(12) << key << " = " << value << '\n';
}

std::string join(const std::vector<Q>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
    return out + ")";
}

int run_act(const std::string& op_text, const std::string& on_text, bool as_json) {
    static const std::regex op_re(R"(^(t|psi\*|psi|p_row|q_row|p_col|q_col|s_bar|s|g_q|g_p|q|p)[_:]?(-?\d+)?$)");
    std::smatch m;
    if (!std::regex_match(op_text, m, op_re)) throw UsageError("unknown operator '" + op_text + "'");
    const std::string name = m[1];
    const bool has_index = m[2].matched;
    const int index = has_index ? std::stoi(m[2]) : 0;
    const Operand x = parse_operand(on_text);

    const bool indexed = name != "q" && name != "p" && name != "g_q" && name != "g_p";
    if (indexed && !has_index) throw UsageError("operator '" + name + "' needs an integer index, e.g. " + name + "1");
    if (!indexed && (name == "q" || name == "p") && has_index) throw UsageError("operator '" + name + "' takes no index");

    std::variant<FockVector, SchurVector> result;
    if (name == "t") result = apply_t(index, as_fock(x));
    else if (name == "psi") result = apply_psi(index, as_fock(x));
    else if (name == "psi*") result = apply_psi_star(index, as_fock(x));
    else if (name == "s_bar") result = s_bar_n(index, as_fock(x));
    else if (name == "s") result = s_n_op(index, as_fock(x));
    else if (name == "g_q" || name == "g_p") {
        const int N = has_index ? index : stability_bound(as_partition(x));
        result = (name == "g_q") ? g_q_trunc(N, as_fock(x)) : g_p_trunc(N, as_fock(x));
    } else {
        const SchurVector v = schur(as_partition(x));
        if (name == "q") result = apply_q(v);
        else if (name == "p") result = apply_p(v);
        else if (name == "p_row") result = apply_p_row(index, v);
        else if (name == "q_row") result = apply_q_row(index, v);
        else if (name == "p_col") result = apply_p_col(index, v);
        else result = apply_q_col(index, v);
    }
    if (as_json) {
        std::visit([&](const auto& v) { std::cout << json{{"op", op_text}, {"on", on_text}, {"result", json_io::to_json(v)}}.dump(2) << '\n'; },
                   result);
    } else {
        std::visit([](const auto& v) { std::cout << to_string(v) << '\n'; }, result);
    }
    return 0;
}

int run_coeff(const std::string& lam1_text, const std::string& lam_text, const std::string& mu_text, bool as_json) {
    const Partition lam1 = parse_partition(lam1_text), lam = parse_partition(lam_text), mu = parse_partition(mu_text);
    if (!is_edge(lam1, lam) || !is_edge(lam, mu))
        throw UsageError("not a path " + to_string(lam1) + " -> " + to_string(lam) + " -> " + to_string(mu));
    const auto nu = square_partner(lam1, lam, mu);
    const int d = added_box(lam, mu).content() - added_box(lam1, lam).content();
    const Q a = a_coeff(lam1, lam, mu, Branch::lam);
    const Q oracle = a_oracle(lam1, lam, mu, Branch::lam);
    const Q at = tilde_a(lam1, lam, mu, Branch::lam);
    const auto closed = a_closed(lam1, lam, mu);
    const auto g = g_vector(lam, lam1, mu.part(0));
    if (as_json) {
        json out{{"lam1", json_io::to_json(lam1)}, {"lam", json_io::to_json(lam)}, {"mu", json_io::to_json(mu)},
                 {"a_tilde", json_io::to_json(at)}, {"a", json_io::to_json(a)}, {"a_oracle", json_io::to_json(oracle)},
                 {"a_closed", closed ? json_io::to_json(*closed) : json(nullptr)}, {"d", d},
                 {"h_lam_mu", json_io::to_json(h_coeff(lam, mu))}, {"h_lam1_lam", json_io::to_json(h_coeff(lam1, lam))},
                 {"nu", nu ? json_io::to_json(*nu) : json(nullptr)}};
        json gj = json::array();
        for (const auto& x : g) gj.push_back(json_io::to_json(x));
        out["g"] = gj;
        if (nu) {
            out["a_tilde_nu"] = json_io::to_json(tilde_a(lam1, lam, mu, Branch::nu));
            out["a_nu"] = json_io::to_json(a_coeff(lam1, lam, mu, Branch::nu));
            out["a_oracle_nu"] = json_io::to_json(a_oracle(lam1, lam, mu, Branch::nu));
        }
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    print_line("a_tilde", to_string(at));
    print_line("a", to_string(a));
    print_line("a_oracle", to_string(oracle));
    print_line("a_closed", closed ? to_string(*closed) : "n/a");
    print_line("g", join(g));
    print_line("nu", nu ? to_string(*nu) : "none");
    if (nu) {
        print_line("a_tilde_nu", to_string(tilde_a(lam1, lam, mu, Branch::nu)));
        print_line("a_nu", to_string(a_coeff(lam1, lam, mu, Branch::nu)));
        print_line("a_oracle_nu", to_string(a_oracle(lam1, lam, mu, Branch::nu)));
    }
    print_line("d", std::to_string(d));
    print_line("h_lam_mu", to_string(h_coeff(lam, mu)));
    print_line("h_lam1_lam", to_string(h_coeff(lam1, lam)));
    return 0;
}

int run_complex(const std::string& lam_text, std::optional<int> k, bool as_json) {
    const Partition lam = parse_partition(lam_text);
    if (k && *k < lam.part(0)) throw UsageError("k must be at least the number of columns");
    const WtqComplex w = k ? wtq_tensor(lam, *k) : wtq_tensor(lam);
    const ChargedSequence x = to_sequence(lam);
    if (as_json) {
        json comps = json::array();
        for (const auto& c : w.degree0)
            comps.push_back({{"position", c.position},
                             {"kind", c.kind == WtqComponent::Kind::lam_copy ? "copy" : "removal"},
                             {"column", c.column},
                             {"label", json_io::to_json(to_sequence(c.label))}});
        std::cout << json{{"lam", json_io::to_json(lam)}, {"k", w.k}, {"degree0", comps},
                          {"degree1", json_io::to_json(x)}, {"differential", json_io::to_json(w.differential)}}
                         .dump(2)
                  << '\n';
        return 0;
    }
    std::cout << "Q~ (x) P(" << to_string(x) << "), k = " << w.k << '\n';
    std::cout << "degree 0:\n";
    for (const auto& c : w.degree0) {
        const bool copy = c.kind == WtqComponent::Kind::lam_copy;
        std::cout << "  i=" << c.position << "  " << (copy ? "copy    j=" : "removal l=") << c.column << "  P("
                  << to_string(to_sequence(c.label)) << ")\n";
    }
    std::cout << "degree 1:\n";
    for (int i = 1; i <= w.k; ++i) std::cout << "  i=" << i << "  P(" << to_string(x) << ")\n";
    std::cout << "arrows:\n";
    for (std::size_t c = 0; c < w.degree0.size(); ++c)
        for (int i = 1; i <= w.k; ++i) {
            const Q& v = w.differential(i - 1, c);
            if (v != 0) std::cout << "  i=" << w.degree0[c].position << " -> i=" << i << "  " << to_string(v) << '\n';
        }
    std::cout << "homotopic to:";
    const auto q = w.quotient_labels();
    if (q.empty()) std::cout << " 0";
    for (const auto& s : q) std::cout << " P(" << to_string(s) << ")";
    std::cout << '\n';
    return 0;
}

int run_resolve(const std::string& kind, const std::string& lam_text, int n, bool check, bool as_json) {
    const Partition lam = parse_partition(lam_text);
    if (n < 1) throw UsageError("--n must be positive");
    if (lam.length() > n) throw UsageError(to_string(lam) + " has more than " + std::to_string(n) + " rows");
    Resolution r;
    LabelDims target;
    if (kind == "q") {
        r = resolution_q(lam, n);
        target = [&](const Partition& eta) { return q_module_dim(lam, n, eta); };
    } else if (kind == "dfp") {
        r = resolution_df_p(lam, n);
        target = [&](const Partition& eta) { return df_p_dim(lam, eta); };
    } else if (kind == "dfp-subsets") {
        r = resolution_df_p_subset_lattice(lam, n);
        target = [&](const Partition& eta) { return df_p_dim(lam, eta); };
    } else if (kind == "simple") {
        r = resolution_simple(lam, n);
        target = [&](const Partition& eta) { return simple_dim(lam, eta); };
    } else {
        throw UsageError("unknown resolution kind '" + kind + "' (q, dfp, dfp-subsets, simple)");
    }
    const int m = lam.size() + 2 * n + 2;
    const Truncation tr = Truncation::rows_and_size(n, m);
    std::optional<bool> euler, exact;
    if (check) {
        euler = graded_euler_check(r, target, tr);
        if (r.has_boundary) exact = rank_exactness(r, target, tr);
    }
    if (as_json) {
        json out{{"kind", kind}, {"lam", json_io::to_json(lam)}, {"n", n}, {"terms", json_io::to_json(r)}};
        if (euler) out["euler"] = *euler;
        if (exact) out["exact"] = *exact;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << to_string(r) << '\n';
        if (r.has_boundary)
            for (int t = 1; t <= r.length(); ++t)
                for (const auto& e : r.boundary[t - 1])
                    std::cout << "  d" << t << ": P(" << to_string(r.terms[t][e.from]) << ") -> P("
                              << to_string(r.terms[t - 1][e.to]) << ")  " << to_string(e.coefficient) << '\n';
        if (euler) std::cout << "graded Euler check in F_" << n << "^" << m << ": " << (*euler ? "pass" : "fail") << '\n';
        if (exact) std::cout << "rank exactness in F_" << n << "^" << m << ": " << (*exact ? "pass" : "fail") << '\n';
    }
    const bool ok = (!euler || *euler) && (!exact || *exact);
    return ok ? 0 : kExitFail;
}

int run_det(const std::string& lam_text, std::optional<int> k_opt, bool as_json) {
    const Partition lam = parse_partition(lam_text);
    const int k = k_opt.value_or(std::max(lam.part(0), 1));
    if (k < lam.part(0) || k < 1) throw UsageError("k must be positive and at least the number of columns");
    const Matrix c = matrix_c(lam, k), b = matrix_b(k), a = matrix_a_closed(lam, k);
    const Q det_c = determinant(c), det_a = det_a_closed(lam, k);
    const bool ok = det_c == det_a && b * c == a && det_c != 0;
    if (as_json) {
        std::cout << json{{"lam", json_io::to_json(lam)}, {"k", k}, {"C", json_io::to_json(c)},
                          {"B", json_io::to_json(b)}, {"A", json_io::to_json(a)}, {"det_C", json_io::to_json(det_c)},
                          {"det_A_closed", json_io::to_json(det_a)}, {"agree", ok}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << "C =\n" << to_string(c) << "\nB =\n" << to_string(b) << "\nA =\n" << to_string(a) << '\n';
        print_line("det_C", to_string(det_c));
        print_line("det_A_closed", to_string(det_a));
        print_line("agree", ok ? "yes" : "no");
    }
    return ok ? 0 : kExitFail;
}

int run_verify(const std::string& suite, int max_size, const std::string& mu_text, bool as_json) {
    if (!mu_text.empty()) {
        if (suite != "bfhcl") throw UsageError("--mu applies to the bfhcl suite only");
        const BfReport r = verify_bf_hcl(parse_partition(mu_text));
        if (as_json) {
            std::cout << json_io::to_json(r).dump(2) << '\n';
        } else {
            for (const auto& c : r.cases)
                std::cout << (c.pass ? "PASS " : "FAIL ") << to_string(c.lam1) << " -> " << to_string(c.lam) << " -> "
                          << to_string(r.mu) << (c.branch == Branch::lam ? " lam" : " nu") << "  a = " << to_string(c.a)
                          << "  a_oracle = " << to_string(c.a_oracle) << "  a_tilde = " << to_string(c.a_tilde) << '\n';
            std::cout << "mu = " << to_string(r.mu) << ": " << (r.pass() ? "pass" : "fail") << '\n';
        }
        return r.pass() ? 0 : kExitFail;
    }
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw UsageError("unknown suite '" + suite + "'");
    const SuiteReport r = run_suite(suite, max_size);
    if (as_json) {
        std::cout << json_io::to_json(r).dump(2) << '\n';
    } else {
        for (const auto& c : r.checks) {
            std::cout << (c.pass() ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases";
            if (c.failures) std::cout << ", " << c.failures << " failures";
            std::cout << ")\n";
            for (const auto& e : c.examples) std::cout << "    " << e << '\n';
        }
        std::cout << "suite " << suite << " at max size " << max_size << ": " << (r.pass() ? "pass" : "fail") << '\n';
    }
    return r.pass() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for the boson-fermion correspondence on Young's lattice"};
    app.require_subcommand(1, 1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output");

    std::string op, on;
    auto* act = app.add_subcommand("act", "Apply an operator to a partition or charged sequence");
    act->add_option("--op", op, "t<i>, psi<j>, psi*<j>, q, p, p_row<m>, q_row<m>, p_col<m>, q_col<m>, s_bar<n>, s<n>, g_q[N], g_p[N]")
        ->required();
    act->add_option("--on", on, "\"(2,1)\", \"()\", \"vac:k\" or \"seq:k:x1,x2,...\"")->required();
    act->add_flag("--json", as_json);

    std::string lam1, lam, mu;
    auto* coeff = app.add_subcommand("coeff", "Coefficients a, a_tilde, a_oracle and h along lam1 -> lam -> mu");
    coeff->add_option("--lam1", lam1)->required();
    coeff->add_option("--lam", lam)->required();
    coeff->add_option("--mu", mu)->required();
    coeff->add_flag("--json", as_json);

    std::optional<int> k;
    auto* complex = app.add_subcommand("complex", "The complex Q~ (x) P(x(lam))");
    complex->add_option("--lam", lam)->required();
    complex->add_option("--k", k, "Number of tracked columns (default lam_1)");
    complex->add_flag("--json", as_json);

    std::string kind;
    int n = 0;
    bool check = false;
    auto* resolve = app.add_subcommand("resolve", "Projective resolutions over the truncated quiver algebra");
    resolve->add_option("--kind", kind, "q, dfp, dfp-subsets or simple")->required();
    resolve->add_option("--lam", lam)->required();
    resolve->add_option("--n", n)->required();
    resolve->add_flag("--check", check, "Run the graded Euler and rank checks in F_n^m, m = |lam|+2n+2");
    resolve->add_flag("--json", as_json);

    auto* det = app.add_subcommand("det", "Matrices C, B, A and their determinants");
    det->add_option("--lam", lam)->required();
    det->add_option("--k", k, "Matrix size (default max(lam_1, 1))");
    det->add_flag("--json", as_json);

    std::string suite;
    int max_size = 6;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "clifford, heisenberg, transport, bfhcl, serre, resolutions, identities")
        ->required();
    verify->add_option("--max-size", max_size, "Size bound of the sweep")->check(CLI::NonNegativeNumber);
    verify->add_option("--mu", mu, "With bfhcl: report every case for this partition");
    verify->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*act) return run_act(op, on, as_json);
        if (*coeff) return run_coeff(lam1, lam, mu, as_json);
        if (*complex) return run_complex(lam, k, as_json);
        if (*resolve) return run_resolve(kind, lam, n, check, as_json);
        if (*det) return run_det(lam, k, as_json);
        if (*verify) return run_verify(suite, max_size, mu, as_json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
