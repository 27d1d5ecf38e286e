#include "bfc/quiver.hpp"

#include "bfc/matrix.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

namespace bfc {

bool exists_hom(const Partition& lam, const Partition& mu) {
    const int len = std::max(lam.length(), mu.length()) + 1;
    for (int i = 0; i < len; ++i)
        if (lam.part(i) > mu.part(i) || lam.part(i) < mu.part(i + 1)) return false;
    return true;
}

ArrowElement::ArrowElement(Partition s, Partition t) : source(std::move(s)), target(std::move(t)) {
    if (!exists_hom(source, target))
        throw std::invalid_argument("no arrow " + to_string(source) + " -> " + to_string(target));
}

FElement multiply(const ArrowElement& a, const ArrowElement& b) {
    if (a.target != b.source || !exists_hom(a.source, b.target)) return {};
    return FElement(ArrowElement(a.source, b.target));
}

FElement multiply(const FElement& a, const FElement& b) {
    FElement out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) out += multiply(x, y).scaled(cx * cy);
    return out;
}

Truncation Truncation::rows(int n) {
    if (n < 0) throw std::invalid_argument("truncation: n < 0");
    return {Kind::rows, n, 0};
}

Truncation Truncation::columns(int n) {
    if (n < 0) throw std::invalid_argument("truncation: n < 0");
    return {Kind::columns, n, 0};
}

Truncation Truncation::rows_and_size(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("truncation: negative bound");
    return {Kind::rows_and_size, n, m};
}

bool Truncation::admits(const Partition& p) const {
    switch (kind) {
        case Kind::rows: return p.length() <= n;
        case Kind::columns: return p.part(0) <= n;
        case Kind::rows_and_size: return p.length() <= n && p.size() <= m;
        case Kind::none: return true;
    }
    return false;
}

std::vector<Partition> Truncation::partitions() const {
    if (!finite()) throw std::logic_error("truncation does not bound the partitions");
    return partitions_in(n, m);
}

Partition ProjLabel::clipped(int cap) const {
    if (!infinite_first) return rest;
    std::vector<int> parts{cap};
    parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
    return Partition(parts);
}

std::string to_string(const ProjLabel& l) {
    if (!l.infinite_first) return to_string(l.rest);
    std::string out = "(inf";
    for (int x : l.rest.parts()) out += "," + std::to_string(x);
    return out + ")";
}

namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max();

// zeta_i, 0-based, with the unbounded part as kUnbounded.
int label_part(const ProjLabel& z, int i) {
    if (!z.infinite_first) return z.rest.part(i);
    return i == 0 ? kUnbounded : z.rest.part(i - 1);
}

int label_length(const ProjLabel& z) {
    return z.rest.length() + (z.infinite_first ? 1 : 0);
}

}  // namespace

bool exists_hom(const Partition& eta, const ProjLabel& zeta) {
    if (!zeta.infinite_first) return exists_hom(eta, zeta.rest);
    const int len = std::max(eta.length(), label_length(zeta)) + 1;
    for (int i = 0; i < len; ++i)
        if (eta.part(i) > label_part(zeta, i) || eta.part(i) < label_part(zeta, i + 1)) return false;
    return true;
}

std::vector<Partition> projective_sources(const ProjLabel& lam, const Truncation& tr) {
    if (!lam.infinite_first && !tr.admits(lam.rest))
        throw std::invalid_argument("label " + to_string(lam) + " not admitted by the truncation");
    int first_cap = label_part(lam, 0);
    if (lam.infinite_first) {
        if (tr.kind == Truncation::Kind::columns) first_cap = tr.n;
        else if (tr.kind == Truncation::Kind::rows_and_size) first_cap = tr.m;
        else throw std::logic_error("P" + to_string(lam) + " has an infinite basis; truncate by columns or size");
    }
    std::vector<Partition> out;
    const int rows = label_length(lam);
    std::vector<int> eta(rows);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == rows) {
            Partition p(eta);
            if (tr.admits(p)) out.push_back(std::move(p));
            return;
        }
        const int hi = (i == 0) ? first_cap : label_part(lam, i);
        for (int x = label_part(lam, i + 1); x <= hi; ++x) {
            eta[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ArrowElement> projective_basis(const Partition& lam, const Truncation& tr) {
    std::vector<ArrowElement> out;
    for (auto& eta : projective_sources(ProjLabel::finite(lam), tr)) out.emplace_back(std::move(eta), lam);
    return out;
}

namespace {

void require_rows(const Partition& p, int n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be positive");
    if (p.length() > n)
        throw std::invalid_argument(std::string(what) + ": " + to_string(p) + " has more than " + std::to_string(n) +
                                    " rows");
}

}  // namespace

std::vector<ArrowElement> q_module_basis(const Partition& lam, int n, int m) {
    require_rows(lam, n, "q_module_basis");
    const Partition top = union_columns(lam, n);
    if (top.size() > m) throw std::invalid_argument("q_module_basis: " + to_string(top) + " outside Par_n^m");
    std::vector<ArrowElement> out;
    for (const auto& eta : projective_sources(ProjLabel::finite(lam), Truncation::rows(n)))
        out.emplace_back(union_columns(eta, n), top);
    return out;
}

std::string to_string(const Resolution& r) {
    std::string out;
    for (int t = r.length(); t >= 0; --t) {
        std::string term;
        for (const auto& l : r.terms[t]) term += std::string(term.empty() ? "" : " + ") + "P(" + to_string(l) + ")";
        if (term.empty()) term = "0";
        out += term;
        if (t > 0) out += " -> ";
    }
    return out;
}

Partition lam_t(const Partition& lam, int n, int t) {
    if (t < 0 || t > n) throw std::invalid_argument("lam_t: t outside [0, n]");
    std::vector<int> parts;
    for (int i = 0; i < n - t; ++i) parts.push_back(lam.part(i) + 1);
    for (int i = n - t + 1; i < n; ++i) parts.push_back(lam.part(i));
    return Partition(parts);
}

namespace {

Resolution chain(std::vector<ProjLabel> labels) {
    Resolution r;
    r.has_boundary = true;
    for (std::size_t t = 0; t < labels.size(); ++t) {
        r.terms.push_back({labels[t]});
        if (t > 0) r.boundary.push_back({BoundaryEntry{0, 0, Q(1)}});
    }
    return r;
}

}  // namespace

Resolution resolution_q(const Partition& lam, int n) {
    require_rows(lam, n, "resolution_q");
    std::vector<ProjLabel> labels;
    for (int t = 0; t <= n; ++t) labels.push_back(ProjLabel::finite(lam_t(lam, n, t)));
    return chain(std::move(labels));
}

Resolution resolution_df_p(const Partition& mu, int n) {
    require_rows(mu, n, "resolution_df_p");
    const auto m = mu.padded(n);
    if (m[n - 1] == 0) return chain({ProjLabel::unbounded(Partition(std::vector<int>(m.begin(), m.end() - 1)))});
    std::vector<ProjLabel> labels;
    for (int t = 0; t < n; ++t) {
        std::vector<int> rest(m.begin(), m.begin() + (n - 1 - t));
        for (int i = n - t; i < n; ++i) rest.push_back(m[i] - 1);
        labels.push_back(ProjLabel::unbounded(Partition(rest)));
    }
    std::vector<int> last(m);
    for (int& x : last) --x;
    labels.push_back(ProjLabel::finite(Partition(last)));
    return chain(std::move(labels));
}

namespace {

bool is_partition(const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < 0 || (i + 1 < v.size() && v[i] < v[i + 1])) return false;
    return true;
}

// All s-subsets of {0..k-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int k, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == s) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < k; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

Resolution resolution_df_p_subset_lattice(const Partition& mu, int n) {
    require_rows(mu, n, "resolution_df_p_subset_lattice");
    const auto m = mu.padded(n);
    Resolution r;
    r.terms.push_back({ProjLabel::unbounded(Partition(std::vector<int>(m.begin(), m.end() - 1)))});
    if (m[n - 1] == 0) return r;
    for (int k = 1; k <= n; ++k) {
        std::vector<ProjLabel> term;
        for (const auto& j : subsets(n - 1, k - 1)) {
            std::vector<int> l(m);
            for (int i : j) --l[i];
            --l[n - 1];
            if (is_partition(l)) term.push_back(ProjLabel::finite(Partition(l)));
        }
        r.terms.push_back(std::move(term));
    }
    return r;
}

Resolution resolution_simple(const Partition& lam, int n) {
    require_rows(lam, n, "resolution_simple");
    const int k = lam.length();
    Resolution r;
    r.has_boundary = true;
    std::vector<std::vector<int>> prev_sets;
    for (int s = 0; s <= k; ++s) {
        std::vector<ProjLabel> term;
        std::vector<std::vector<int>> sets;
        for (const auto& j : subsets(k, s)) {
            std::vector<int> l = lam.parts();
            for (int i : j) --l[i];
            if (!is_partition(l)) continue;
            term.push_back(ProjLabel::finite(Partition(l)));
            sets.push_back(j);
        }
        if (s > 0) {
            std::vector<BoundaryEntry> d;
            for (std::size_t from = 0; from < sets.size(); ++from) {
                for (std::size_t pos = 0; pos < sets[from].size(); ++pos) {
                    std::vector<int> smaller = sets[from];
                    smaller.erase(smaller.begin() + static_cast<long>(pos));
                    auto it = std::find(prev_sets.begin(), prev_sets.end(), smaller);
                    if (it == prev_sets.end()) continue;
                    d.push_back({from, static_cast<std::size_t>(it - prev_sets.begin()), pos % 2 ? Q(-1) : Q(1)});
                }
            }
            r.boundary.push_back(std::move(d));
        }
        r.terms.push_back(std::move(term));
        prev_sets = std::move(sets);
    }
    return r;
}

bool graded_euler_check(const Resolution& r, const LabelDims& target, const Truncation& tr) {
    for (const auto& eta : tr.partitions()) {
        long sum = 0;
        for (int t = 0; t <= r.length(); ++t)
            for (const auto& z : r.terms[t])
                if (exists_hom(eta, z)) sum += (t % 2) ? -1 : 1;
        if (sum != target(eta)) return false;
    }
    return true;
}

namespace {

// Matrix of the degree-t boundary on the eta-isotypic part: column i is the
// image of (eta||z_i) for z_i in terms[t] admitting eta. Empty optional if a
// boundary entry is not an arrow.
std::optional<Matrix> eta_block(const Resolution& r, int t, const Partition& eta, int cap,
                                const std::vector<std::vector<std::size_t>>& present) {
    const auto& src = present[t];
    const auto& dst = present[t - 1];
    Matrix m(dst.size(), src.size());
    for (const auto& e : r.boundary[t - 1]) {
        auto col = std::find(src.begin(), src.end(), e.from);
        if (col == src.end()) continue;
        const Partition from = r.terms[t][e.from].clipped(cap);
        const Partition to = r.terms[t - 1][e.to].clipped(cap);
        if (!exists_hom(from, to)) return std::nullopt;
        const FElement prod = multiply(ArrowElement(eta, from), ArrowElement(from, to));
        if (prod.empty()) continue;
        const Q c = prod.coefficient(ArrowElement(eta, to));
        auto row = std::find(dst.begin(), dst.end(), e.to);
        if (row == dst.end()) return std::nullopt;  // product lands outside the projective basis
        m(static_cast<std::size_t>(row - dst.begin()), static_cast<std::size_t>(col - src.begin())) += c * e.coefficient;
    }
    return m;
}

}  // namespace

bool rank_exactness(const Resolution& r, const LabelDims& target, const Truncation& tr) {
    if (!r.has_boundary || static_cast<int>(r.boundary.size()) != r.length()) return false;
    const int cap = tr.m;
    for (const auto& eta : tr.partitions()) {
        std::vector<std::vector<std::size_t>> present(r.terms.size());
        for (std::size_t t = 0; t < r.terms.size(); ++t)
            for (std::size_t i = 0; i < r.terms[t].size(); ++i)
                if (exists_hom(eta, r.terms[t][i])) present[t].push_back(i);
        std::vector<Matrix> d(r.terms.size());  // d[t]: degree t -> t-1
        for (int t = 1; t <= r.length(); ++t) {
            auto m = eta_block(r, t, eta, cap, present);
            if (!m) return false;
            d[t] = std::move(*m);
        }
        std::vector<std::size_t> rk(r.terms.size() + 1, 0);
        for (int t = 1; t <= r.length(); ++t) rk[t] = rank(d[t]);
        for (int t = 2; t <= r.length(); ++t)
            if (d[t - 1].rows() && d[t].cols() && !(d[t - 1] * d[t]).is_zero()) return false;
        for (int t = 1; t <= r.length(); ++t)
            if (rk[t] + rk[t + 1] != present[t].size()) return false;
        if (static_cast<long>(present[0].size()) - static_cast<long>(rk[1]) != target(eta)) return false;
    }
    return true;
}

long q_module_dim(const Partition& lam, int n, const Partition& eta) {
    if (eta.length() != n) return 0;
    std::vector<int> e = eta.parts();
    for (int& x : e) --x;
    return exists_hom(Partition(e), lam) ? 1 : 0;
}

long df_p_dim(const Partition& mu, const Partition& eta) {
    return exists_hom(mu, eta) ? 1 : 0;
}

long simple_dim(const Partition& lam, const Partition& eta) {
    return eta == lam ? 1 : 0;
}

Partition serre_bar_k0(const Partition& lam, int n) {
    require_rows(lam, n, "serre_bar_k0");
    return dual(union_columns(lam, n));
}

long serre_k0_pairing(const Partition& mu, const Partition& lam, int n) {
    const Resolution r = resolution_df_p(mu, n);
    long sum = 0;
    for (int t = 0; t <= r.length(); ++t)
        for (const auto& z : r.terms[t])
            if (!z.infinite_first && z.rest == lam) sum += (t % 2) ? -1 : 1;
    return sum;
}

}  // namespace bfc
