#pragma once

#include "bfc/matrix.hpp"
#include "bfc/partition.hpp"
#include "bfc/vo.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bfc {

// sum_{0<=j<=t-1} (-1)^{s+t-1-j} / ((s+t-1-j)! j!), with 1/r! = 0 for r < 0.
// Throws std::invalid_argument if t < 1.
Q f_sum(long s, long t);
// (-1)^s / ((s-1)! (t-1)! (s+t-1)) for s > 0, delta_{s+t,1} otherwise.
Q f_closed(long s, long t);

// prod (a_i+b_j)^{-1} prod_{i<i'} (a_i-a_i') prod_{j<j'} (b_j-b_j').
// Throws std::domain_error if some a_i + b_j = 0 or the sizes differ.
Q cauchy_det(const std::vector<Q>& a, const std::vector<Q>& b);
// det((a_i+b_j)^{-1}) by elimination.
Q cauchy_det_direct(const std::vector<Q>& a, const std::vector<Q>& b);

// c_ij = 1/(i - (j - dual_j))! for 1 <= i,j <= k. Throws std::invalid_argument if k < lam_1.
Matrix matrix_c(const Partition& lam, int k);
// b_ij = (-1)^{i-j}/(i-j)!, lower unitriangular.
Matrix matrix_b(int k);
// With e_j = dual_j - j: a_ij = (-1)^{i+1}/(e_j! (i-1)! (e_j+i)) when e_j >= 0,
// a_ij = delta_{i, j-dual_j} otherwise. Equals matrix_b(k) * matrix_c(lam, k).
Matrix matrix_a_closed(const Partition& lam, int k);
// det A = det C as the product
//   (-1)^v prod_{j<=p} 1/e_j! prod_{i in I} 1/(i-1)! prod_{i in I, j<=p} 1/(e_j+i)
//   prod_{j>j', both <=p} (e_j-e_j') prod_{i>i', both in I} (i-i'),
// p = #{j : e_j >= 0}, I = [1,k] minus {j - dual_j : j > p},
// v = sum_{i in I} (i+1) + sum_{j>p} dual_j.
Q det_a_closed(const Partition& lam, int k);

struct WtqComponent {
    enum class Kind { lam_copy, removal };
    Kind kind;
    int position;           // i in [-dual_1+1, k]
    int column;             // j for a copy of lam, l for lam^l
    Partition label;        // lam or lam^l
};

// Q~ (x) P(x(lam)) with k tracked columns. Degree 0 lists the components in
// position order; degree 1 is k copies of x(lam) indexed by i = 1..k.
// differential is k x degree0.size(): the C columns on the lam copies and
// the g^l columns (entries 1/(i - position)!) on the removals.
struct WtqComplex {
    Partition lam;
    int k = 0;
    std::vector<WtqComponent> degree0;
    Matrix differential;

    // Labels of the removal components, transported to sequences.
    std::vector<ChargedSequence> quotient_labels() const;
};

// Throws std::invalid_argument if k < lam_1.
WtqComplex wtq_tensor(const Partition& lam, int k);
WtqComplex wtq_tensor(const Partition& lam);

// Unique g with C g = f, f_i = -1/(i - base)!, base = j1 - dual(lam)_{j1} + 1,
// j1 the column of lam \ lam1. k defaults to max(lam_1, 1).
std::vector<Q> g_vector(const Partition& lam, const Partition& lam1, std::optional<int> k = std::nullopt);

// lam-branch: g_{j0}, j0 the column of mu \ lam, solved with k = mu_1.
// nu-branch: 1. Throws std::invalid_argument on an invalid path or a nu-branch
// request without a partner.
Q tilde_a(const Partition& lam1, const Partition& lam, const Partition& mu, Branch branch);

struct BfCase {
    Partition lam1;
    Partition lam;
    Branch branch;
    Q a;
    Q a_oracle;
    Q a_tilde;
    bool pass;
};

struct BfReport {
    Partition mu;
    std::vector<BfCase> cases;
    bool pass() const;
};

BfReport verify_bf_hcl(const Partition& mu);

// prod_{j<=s} (j+t-dual_j) prod_{i<=t} (mu_i+t+1-i) == (s+t)! with t rows, s columns.
bool subclaim_identity(const Partition& mu);

}  // namespace bfc
