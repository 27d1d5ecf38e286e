#include "bfc/bf.hpp"

#include <algorithm>
#include <stdexcept>

namespace bfc {

namespace {

Q sign(long e) {
    return (e % 2 == 0) ? Q(1) : Q(-1);
}

void require_path(const Partition& lam1, const Partition& lam, const Partition& mu) {
    if (!is_edge(lam1, lam) || !is_edge(lam, mu))
        throw std::invalid_argument("not a path " + to_string(lam1) + " -> " + to_string(lam) + " -> " + to_string(mu));
}

}  // namespace

Q f_sum(long s, long t) {
    if (t < 1) throw std::invalid_argument("f_sum: t < 1");
    Q r = 0;
    for (long j = 0; j <= t - 1; ++j) {
        const long e = s + t - 1 - j;
        r += sign(e) * inv_factorial(e) * inv_factorial(j);
    }
    return r;
}

Q f_closed(long s, long t) {
    if (t < 1) throw std::invalid_argument("f_closed: t < 1");
    if (s <= 0) return (s + t == 1) ? Q(1) : Q(0);
    Q r = sign(s) * inv_factorial(s - 1) * inv_factorial(t - 1) / Q(s + t - 1);
    return r;
}

Q cauchy_det(const std::vector<Q>& a, const std::vector<Q>& b) {
    if (a.size() != b.size()) throw std::domain_error("cauchy_det: size mismatch");
    Q r = 1;
    for (const auto& x : a)
        for (const auto& y : b) {
            if (x + y == 0) throw std::domain_error("cauchy_det: a_i + b_j = 0");
            r /= x + y;
        }
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) r *= (a[i] - a[j]) * (b[i] - b[j]);
    return r;
}

Q cauchy_det_direct(const std::vector<Q>& a, const std::vector<Q>& b) {
    if (a.size() != b.size()) throw std::domain_error("cauchy_det_direct: size mismatch");
    Matrix m(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (a[i] + b[j] == 0) throw std::domain_error("cauchy_det_direct: a_i + b_j = 0");
            m(i, j) = 1 / Q(a[i] + b[j]);
        }
    return determinant(m);
}

Matrix matrix_c(const Partition& lam, int k) {
    if (k < lam.part(0)) throw std::invalid_argument("matrix_c: k smaller than the number of columns");
    const Partition d = dual(lam);
    Matrix c(k, k);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) c(i - 1, j - 1) = inv_factorial(i - (j - d.part(j - 1)));
    return c;
}

Matrix matrix_b(int k) {
    if (k < 0) throw std::invalid_argument("matrix_b: k < 0");
    Matrix b(k, k);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= i; ++j) b(i - 1, j - 1) = sign(i - j) * inv_factorial(i - j);
    return b;
}

Matrix matrix_a_closed(const Partition& lam, int k) {
    if (k < lam.part(0)) throw std::invalid_argument("matrix_a_closed: k smaller than the number of columns");
    const Partition d = dual(lam);
    Matrix a(k, k);
    for (int j = 1; j <= k; ++j) {
        const int e = d.part(j - 1) - j;
        for (int i = 1; i <= k; ++i) {
            if (e >= 0) a(i - 1, j - 1) = sign(i + 1) * inv_factorial(e) * inv_factorial(i - 1) / Q(e + i);
            else a(i - 1, j - 1) = (i == j - d.part(j - 1)) ? 1 : 0;
        }
    }
    return a;
}

Q det_a_closed(const Partition& lam, int k) {
    if (k < lam.part(0)) throw std::invalid_argument("det_a_closed: k smaller than the number of columns");
    const Partition d = dual(lam);
    std::vector<int> e(k + 1);
    int p = 0;
    for (int j = 1; j <= k; ++j) {
        e[j] = d.part(j - 1) - j;
        if (e[j] >= 0) p = j;  // e_j is strictly decreasing
    }
    std::vector<int> unit_rows;
    long v = 0;
    for (int j = p + 1; j <= k; ++j) {
        unit_rows.push_back(j - d.part(j - 1));
        v += d.part(j - 1);
    }
    std::vector<int> rows;
    for (int i = 1; i <= k; ++i)
        if (std::find(unit_rows.begin(), unit_rows.end(), i) == unit_rows.end()) {
            rows.push_back(i);
            v += i + 1;
        }
    Q r = sign(v);
    for (int j = 1; j <= p; ++j) r *= inv_factorial(e[j]);
    for (int i : rows) r *= inv_factorial(i - 1);
    for (int i : rows)
        for (int j = 1; j <= p; ++j) r /= e[j] + i;
    for (int j = 1; j <= p; ++j)
        for (int jp = 1; jp < j; ++jp) r *= e[j] - e[jp];
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) r *= rows[a] - rows[b];
    return r;
}

std::vector<ChargedSequence> WtqComplex::quotient_labels() const {
    std::vector<ChargedSequence> out;
    for (const auto& c : degree0)
        if (c.kind == WtqComponent::Kind::removal) out.push_back(to_sequence(c.label));
    return out;
}

WtqComplex wtq_tensor(const Partition& lam, int k) {
    if (k < lam.part(0)) throw std::invalid_argument("wtq_tensor: k smaller than the number of columns");
    const Partition d = dual(lam);
    WtqComplex w{lam, k, {}, Matrix()};
    for (int j = 1; j <= k; ++j)
        w.degree0.push_back({WtqComponent::Kind::lam_copy, j - d.part(j - 1), j, lam});
    for (int l = 1; l <= k; ++l) {
        if (d.part(l - 1) == 0 || d.part(l - 1) == d.part(l)) continue;  // no corner in column l
        std::vector<int> dl = d.parts();
        --dl[l - 1];
        w.degree0.push_back({WtqComponent::Kind::removal, l - d.part(l - 1) + 1, l, dual(Partition(dl))});
    }
    std::sort(w.degree0.begin(), w.degree0.end(),
              [](const WtqComponent& a, const WtqComponent& b) { return a.position < b.position; });
    w.differential = Matrix(k, w.degree0.size());
    for (int i = 1; i <= k; ++i)
        for (std::size_t c = 0; c < w.degree0.size(); ++c)
            w.differential(i - 1, c) = inv_factorial(i - w.degree0[c].position);
    return w;
}

WtqComplex wtq_tensor(const Partition& lam) {
    return wtq_tensor(lam, lam.part(0));
}

std::vector<Q> g_vector(const Partition& lam, const Partition& lam1, std::optional<int> k) {
    const int size = k.value_or(std::max(lam.part(0), 1));
    const int j1 = added_box(lam1, lam).col;
    const int base = j1 - dual(lam).part(j1 - 1) + 1;
    std::vector<Q> f(size);
    for (int i = 1; i <= size; ++i) f[i - 1] = -inv_factorial(i - base);
    try {
        return solve_unique(matrix_c(lam, size), f);
    } catch (const std::domain_error&) {
        throw std::logic_error("g_vector: matrix C is singular for " + to_string(lam));
    }
}

Q tilde_a(const Partition& lam1, const Partition& lam, const Partition& mu, Branch branch) {
    require_path(lam1, lam, mu);
    if (branch == Branch::nu) {
        if (!square_partner(lam1, lam, mu)) throw std::invalid_argument("tilde_a: no nu-branch for this path");
        return Q(1);
    }
    const int j0 = added_box(lam, mu).col;
    return g_vector(lam, lam1, mu.part(0))[j0 - 1];
}

bool BfReport::pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const BfCase& c) { return c.pass; });
}

BfReport verify_bf_hcl(const Partition& mu) {
    BfReport report{mu, {}};
    for (const auto& lam : res_set(mu)) {
        for (const auto& lam1 : res_set(lam)) {
            std::vector<Branch> branches{Branch::lam};
            if (square_partner(lam1, lam, mu)) branches.push_back(Branch::nu);
            for (Branch b : branches) {
                BfCase c{lam1, lam, b, a_coeff(lam1, lam, mu, b), a_oracle(lam1, lam, mu, b),
                         tilde_a(lam1, lam, mu, b), false};
                c.pass = c.a == c.a_oracle && c.a == c.a_tilde;
                report.cases.push_back(std::move(c));
            }
        }
    }
    return report;
}

bool subclaim_identity(const Partition& mu) {
    if (mu.empty()) throw std::invalid_argument("subclaim_identity: empty partition");
    const int t = mu.length(), s = mu.part(0);
    const Partition d = dual(mu);
    Z lhs = 1;
    for (int j = 1; j <= s; ++j) lhs *= j + t - d.part(j - 1);
    for (int i = 1; i <= t; ++i) lhs *= mu.part(i - 1) + t + 1 - i;
    return lhs == factorial(s + t);
}

}  // namespace bfc
