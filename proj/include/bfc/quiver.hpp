#pragma once

#include "bfc/lincomb.hpp"
#include "bfc/partition.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bfc {

// mu_i >= lam_i >= mu_{i+1} for all i.
bool exists_hom(const Partition& lam, const Partition& mu);

// Basis element (source||target); construction enforces interlacing.
struct ArrowElement {
    Partition source;
    Partition target;

    // Throws std::invalid_argument unless exists_hom(source, target).
    ArrowElement(Partition s, Partition t);
    // The idempotent (p||p).
    static ArrowElement idempotent(const Partition& p) { return ArrowElement(p, p); }

    auto operator<=>(const ArrowElement&) const = default;
    bool operator==(const ArrowElement&) const = default;
};

using FElement = LinComb<ArrowElement>;

// (a||b)(b||c) = (a||c) when a, c interlace; zero otherwise and for non-composable pairs.
FElement multiply(const ArrowElement& a, const ArrowElement& b);
FElement multiply(const FElement& a, const FElement& b);

struct Truncation {
    enum class Kind { rows, columns, rows_and_size, none };
    Kind kind = Kind::none;
    int n = 0;
    int m = 0;

    static Truncation rows(int n);
    static Truncation columns(int n);
    static Truncation rows_and_size(int n, int m);
    static Truncation none() { return {}; }

    bool admits(const Partition& p) const;
    bool finite() const { return kind == Kind::rows_and_size; }
    // Every admitted partition. Throws std::logic_error unless finite().
    std::vector<Partition> partitions() const;
};

// Projective label; `infinite_first` prepends an unbounded first part to `rest`.
struct ProjLabel {
    bool infinite_first = false;
    Partition rest;

    static ProjLabel finite(Partition p) { return {false, std::move(p)}; }
    static ProjLabel unbounded(Partition rest) { return {true, std::move(rest)}; }

    // The partition obtained by clipping the unbounded part to `cap`.
    // Throws std::invalid_argument if the clipped sequence is not a partition.
    Partition clipped(int cap) const;

    bool operator==(const ProjLabel&) const = default;
};

std::string to_string(const ProjLabel& l);

// Interlacing with an unbounded first part treated as larger than anything.
bool exists_hom(const Partition& eta, const ProjLabel& zeta);

// All (eta||lam) with eta admitted. Throws std::invalid_argument if lam is
// not admitted, std::logic_error if the basis is infinite under tr.
std::vector<ArrowElement> projective_basis(const Partition& lam, const Truncation& tr);
std::vector<Partition> projective_sources(const ProjLabel& lam, const Truncation& tr);

// {(eta u 1^n || lam u 1^n) : eta in Par_n, exists_hom(eta, lam)}.
// Throws std::invalid_argument unless lam u 1^n lies in Par_n^m.
std::vector<ArrowElement> q_module_basis(const Partition& lam, int n, int m);

struct BoundaryEntry {
    std::size_t from;  // index into terms[t]
    std::size_t to;    // index into terms[t-1]
    Q coefficient;
};

// terms[t] holds the labels in homological degree t. boundary[t-1] is the
// map from degree t to degree t-1, by right multiplication with
// (from-label||to-label) scaled by the coefficient. `has_boundary` is
// false when only the K_0 class is known.
struct Resolution {
    std::vector<std::vector<ProjLabel>> terms;
    std::vector<std::vector<BoundaryEntry>> boundary;
    bool has_boundary = false;

    int length() const { return static_cast<int>(terms.size()) - 1; }
};

// "P(()) -> P((2)) -> P((2,1))", highest degree first; direct sums joined by " + ".
std::string to_string(const Resolution& r);

// lam^0 = lam u 1^n, lam^t = (lam_1+1, ..., lam_{n-t}+1, lam_{n-t+2}, ..., lam_n, 0).
Partition lam_t(const Partition& lam, int n, int t);

// Length-n chain P(lam^n) -> ... -> P(lam^0) resolving Q(lam).
// Throws std::invalid_argument unless n >= 1 and lam has at most n rows.
Resolution resolution_q(const Partition& lam, int n);

// Chain zeta^n -> ... -> zeta^0 = mu^inf resolving DF_n (x) P(mu), where
// zeta^t = (inf, mu_1, ..., mu_{n-1-t}, mu_{n-t+1}-1, ..., mu_n-1) for t < n and
// zeta^n = mu - 1^n. When mu_n = 0 only zeta^0 remains.
Resolution resolution_df_p(const Partition& mu, int n);

// Terms over (k-1)-subsets of {1..n-1}, each removing the boxes in those rows
// and row n from mu. K_0 data only; fails the graded Euler check for n >= 2.
Resolution resolution_df_p_subset_lattice(const Partition& mu, int n);

// Koszul-type resolution of L(lam): degree s carries lam minus one box in each
// row of an s-subset J of the nonzero rows, whenever that is a partition.
// The component J -> J \ {j} has sign (-1)^(position of j in J).
Resolution resolution_simple(const Partition& lam, int n);

using LabelDims = std::function<long(const Partition&)>;

// For every admitted eta, the alternating count of terms whose label admits
// a hom from eta equals target(eta).
bool graded_euler_check(const Resolution& r, const LabelDims& target, const Truncation& tr);

// Realizes every boundary over projective bases through multiply, then checks
// d o d = 0, exactness at every positive degree, and that the cokernel at
// degree 0 has target(eta) dimensions per label. Requires a finite truncation.
bool rank_exactness(const Resolution& r, const LabelDims& target, const Truncation& tr);

// Target dimensions of the three resolved modules.
long q_module_dim(const Partition& lam, int n, const Partition& eta);
long df_p_dim(const Partition& mu, const Partition& eta);
long simple_dim(const Partition& lam, const Partition& eta);

// dual(union_columns(lam, n)).
Partition serre_bar_k0(const Partition& lam, int n);

// sum_t (-1)^t #{finite labels equal to lam in degree t of resolution_df_p(mu, n)},
// the Euler pairing of DF_n (x) P(mu) against L(lam).
long serre_k0_pairing(const Partition& mu, const Partition& lam, int n);

}  // namespace bfc
