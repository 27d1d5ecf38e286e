#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace bfc {

// One named property swept over a finite range. A check with no cases fails.
struct Check {
    explicit Check(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    long cases = 0;
    long failures = 0;
    std::vector<std::string> examples;  // first few failures

    void record(bool ok, const std::function<std::string()>& describe);
    bool pass() const { return cases > 0 && failures == 0; }
};

struct SuiteReport {
    std::string suite;
    int max_size = 0;
    std::vector<Check> checks;
    bool pass() const;
};

// Fock space.
Check check_clifford(int max_energy, int max_charge, int max_index);
Check check_psi_projection(int max_energy, int max_charge, int max_index);
Check check_g_stability(int max_size);
Check check_transport(int max_size);

// Heisenberg.
Check check_heisenberg_relation(int max_size);
Check check_kh_commute(int max_size, int max_total);
Check check_kh_row_row(int max_size, int max_strip);
Check check_kh_row_col(int max_size, int max_strip);

// VO and coefficients.
Check check_golden();
Check check_rep_axioms(int max_size);
Check check_c_scale_paths(int max_size);
Check check_rel_h(int max_size);
Check check_a_closed(int max_size);
Check check_bf_hcl(int max_size);

// Twists.
Check check_bar_sn(int max_n, int max_size);
Check check_sn(int max_n, int max_size);
Check check_br_n(int max_n, int max_size);
Check check_serre_k0(int max_n, int max_size);

// Resolutions, inside F_n^m with m = |lam| + 2n + 2.
Check check_resolution_q(int max_n, int max_size);
Check check_resolution_df_p(int max_n, int max_size);
Check check_resolution_simple(int max_n, int max_size);

// Closed forms.
Check check_f_identity(int s_lo, int s_hi, int t_hi);
Check check_cauchy(int max_k, int instances, std::uint64_t seed);
Check check_subclaim(int max_size);
Check check_det(int max_size, int max_rows);
Check check_wtq(int max_size);

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument on an unknown suite name.
SuiteReport run_suite(const std::string& name, int max_size);

}  // namespace bfc
