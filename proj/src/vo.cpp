#include "bfc/vo.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace bfc {

std::vector<int> StandardTableau::contents() const {
    const int n = shape.size();
    std::vector<int> a(n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) a[rows[r][c] - 1] = static_cast<int>(c) - static_cast<int>(r);
    return a;
}

namespace {

std::vector<int> row_of(const StandardTableau& t) {
    std::vector<int> r(t.shape.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (int v : t.rows[i]) r[v - 1] = static_cast<int>(i);
    return r;
}

std::vector<StandardTableau> enumerate(const Partition& shape) {
    std::vector<StandardTableau> out;
    const int n = shape.size();
    StandardTableau cur{shape, std::vector<std::vector<int>>(shape.length())};
    std::function<void(int)> rec = [&](int m) {
        if (m > n) {
            out.push_back(cur);
            return;
        }
        for (int r = 0; r < shape.length(); ++r) {
            const auto c = static_cast<int>(cur.rows[r].size());
            if (c < shape.part(r) && (r == 0 || static_cast<int>(cur.rows[r - 1].size()) > c)) {
                cur.rows[r].push_back(m);
                rec(m + 1);
                cur.rows[r].pop_back();
            }
        }
    };
    rec(1);
    std::sort(out.begin(), out.end(),
              [](const StandardTableau& a, const StandardTableau& b) { return a.contents() > b.contents(); });
    return out;
}

std::mutex cache_mutex;
std::map<Partition, std::vector<StandardTableau>> tableaux_cache;
std::map<std::pair<int, Partition>, Matrix> rep_cache;

std::size_t index_of(const std::vector<StandardTableau>& ts, const StandardTableau& t) {
    auto it = std::find(ts.begin(), ts.end(), t);
    if (it == ts.end()) throw std::logic_error("tableau not found");
    return static_cast<std::size_t>(it - ts.begin());
}

}  // namespace

int StandardTableau::length() const {
    const auto r = row_of(*this);
    int l = 0;
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = a + 1; b < r.size(); ++b)
            if (r[b] < r[a]) ++l;
    return l;
}

StandardTableau swap_entries(const StandardTableau& t, int i) {
    StandardTableau s = t;
    for (auto& row : s.rows)
        for (int& v : row) {
            if (v == i) v = i + 1;
            else if (v == i + 1) v = i;
        }
    return s;
}

std::vector<int> descents(const StandardTableau& t) {
    const auto r = row_of(t);
    std::vector<int> out;
    for (int i = 1; i < static_cast<int>(r.size()); ++i)
        if (r[i] < r[i - 1]) out.push_back(i);
    return out;
}

const std::vector<StandardTableau>& tableaux(const Partition& shape) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = tableaux_cache.find(shape);
    if (it == tableaux_cache.end()) it = tableaux_cache.emplace(shape, enumerate(shape)).first;
    return it->second;
}

Q c_scale(const StandardTableau& t) {
    // Walk back to T^mu along the first descent.
    const auto ds = descents(t);
    if (ds.empty()) return Q(1);
    const int i = ds.front();
    const StandardTableau shorter = swap_entries(t, i);
    const auto a = shorter.contents();
    const int d = a[i] - a[i - 1];
    return frac(d, d - 1) * c_scale(shorter);
}

const Matrix& rep_action(int i, const Partition& shape) {
    if (i < 1 || i >= shape.size())
        throw std::out_of_range("rep_action: generator s_" + std::to_string(i) + " out of range for " + to_string(shape));
    const auto& ts = tableaux(shape);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(i, shape);
    auto it = rep_cache.find(key);
    if (it != rep_cache.end()) return it->second;
    Matrix m(ts.size(), ts.size());
    for (std::size_t j = 0; j < ts.size(); ++j) {
        const auto a = ts[j].contents();
        const int d = a[i] - a[i - 1];
        m(j, j) = frac(1, d);
        if (d != 1 && d != -1) m(index_of(ts, swap_entries(ts[j], i)), j) += frac(d - 1, d);
    }
    return rep_cache.emplace(key, std::move(m)).first->second;
}

Matrix f_map(const Partition& lam, const Partition& mu) {
    const Box b = added_box(lam, mu);
    const auto& tl = tableaux(lam);
    const auto& tm = tableaux(mu);
    Matrix m(tm.size(), tl.size());
    for (std::size_t j = 0; j < tl.size(); ++j) {
        StandardTableau t{mu, tl[j].rows};
        t.rows.resize(mu.length());
        t.rows[b.row - 1].push_back(mu.size());
        m(index_of(tm, t), j) = 1;
    }
    return m;
}

std::optional<Partition> square_partner(const Partition& lam1, const Partition& lam, const Partition& mu) {
    for (const auto& nu : res_set(mu))
        if (nu != lam && is_edge(lam1, nu)) return nu;
    return std::nullopt;
}

namespace {

std::vector<Q> flatten(const Matrix& m) {
    std::vector<Q> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

void require_path(const Partition& lam1, const Partition& lam, const Partition& mu) {
    if (!is_edge(lam1, lam) || !is_edge(lam, mu))
        throw std::invalid_argument("not a path " + to_string(lam1) + " -> " + to_string(lam) + " -> " + to_string(mu));
}

// Coefficients of s_n M1 in the span of the given composites.
std::vector<Q> decompose(const Matrix& s, const std::vector<Matrix>& basis) {
    const Matrix target = s * basis.front();
    const auto b = flatten(target);
    Matrix a(b.size(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto col = flatten(basis[k]);
        for (std::size_t r = 0; r < b.size(); ++r) a(r, k) = col[r];
    }
    return solve_unique(a, b);
}

}  // namespace

SquareCoeffs square_coeffs(const Partition& lam1, const Partition& lam, const Partition& nu, const Partition& mu) {
    require_path(lam1, lam, mu);
    require_path(lam1, nu, mu);
    if (nu == lam) throw std::invalid_argument("square_coeffs: the two middle partitions coincide");
    const Matrix m1 = f_map(lam, mu) * f_map(lam1, lam);
    const Matrix m2 = f_map(nu, mu) * f_map(lam1, nu);
    const auto x = decompose(rep_action(lam.size(), mu), {m1, m2});
    return SquareCoeffs{x[0], x[1]};
}

Q h_coeff(const Partition& lam1, const Partition& lam) {
    const Box b = added_box(lam1, lam);
    const int s = b.col - 1, t = b.row - 1;
    const Partition d = dual(lam);
    Q h = (s % 2) ? Q(-1) : Q(1);
    for (int i = 1; i <= t; ++i) h *= (lam.part(i - 1) - (s + 1)) + t + 1 - i;
    for (int j = 1; j <= s; ++j) h /= (d.part(j - 1) - (t + 1)) + s + 2 - j;
    return h;
}

Q a_coeff(const Partition& lam1, const Partition& lam, const Partition& mu, Branch branch) {
    require_path(lam1, lam, mu);
    const auto nu = square_partner(lam1, lam, mu);
    const Q ratio = h_coeff(lam, mu) / h_coeff(lam1, lam);
    if (nu) {
        const int d = added_box(lam, mu).content() - added_box(lam1, lam).content();
        if (branch == Branch::lam) return ratio / d;
        return frac(d - 1, d) * h_coeff(*nu, mu) / h_coeff(lam1, lam);
    }
    if (branch == Branch::nu) throw std::invalid_argument("a_coeff: no nu-branch when mu \\ lam1 is a domino");
    const bool horizontal = added_box(lam1, lam).row == added_box(lam, mu).row;
    return horizontal ? ratio : Q(-ratio);
}

std::optional<Q> a_closed(const Partition& lam1, const Partition& lam, const Partition& mu) {
    require_path(lam1, lam, mu);
    const Box upper = added_box(lam1, lam);  // (s1+s2+2, t1+1) as (col, row)
    const Box lower = added_box(lam, mu);    // (s1+1, t1+t2+2)
    if (!(upper.row < lower.row && upper.col > lower.col)) return std::nullopt;
    const int t1 = upper.row - 1, s1 = lower.col - 1;
    const int t2 = lower.row - t1 - 2, s2 = upper.col - s1 - 2;
    const Partition md = dual(mu);
    Q a = Q((s2 % 2) ? -(s2 + t2 + 2) : (s2 + t2 + 2));
    for (int j = 1; j <= s1; ++j) {
        const int yb = md.part(j - 1) - (t1 + t2 + 2);
        a *= frac(yb + s1 + s2 + t2 - j + 4, yb + s1 - j + 2);
    }
    for (int i = 1; i <= t1; ++i) {
        const int x = mu.part(i - 1) - (s1 + s2 + 2);
        a *= frac(x + s2 + t2 + t1 - i + 3, x + t1 - i + 1);
    }
    for (int j = 1; j <= s2; ++j) a *= (md.part(s1 + j) - (t1 + 1)) + s2 - j + 2;
    for (int i = 1; i <= t2; ++i) a *= (mu.part(t1 + i) - (s1 + 1)) + t2 - i + 1;
    a.canonicalize();
    return a;
}

Q a_oracle(const Partition& lam1, const Partition& lam, const Partition& mu, Branch branch) {
    require_path(lam1, lam, mu);
    const Matrix& s = rep_action(lam.size(), mu);
    const Matrix m1 = f_map(lam, mu) * f_map(lam1, lam);
    // q_{x y} corresponds to f_{x y} / h_{x y}.
    const auto nu = square_partner(lam1, lam, mu);
    if (!nu) {
        if (branch == Branch::nu) throw std::invalid_argument("a_oracle: no nu-branch when mu \\ lam1 is a domino");
        const auto x = decompose(s, {m1});
        return x[0] * h_coeff(lam, mu) / h_coeff(lam1, lam);
    }
    const Matrix m2 = f_map(*nu, mu) * f_map(lam1, *nu);
    const auto x = decompose(s, {m1, m2});
    if (branch == Branch::lam) return x[0] * h_coeff(lam, mu) / h_coeff(lam1, lam);
    return x[1] * h_coeff(*nu, mu) / h_coeff(lam1, lam);
}

}  // namespace bfc
