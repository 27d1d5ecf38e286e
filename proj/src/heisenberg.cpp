#include "bfc/heisenberg.hpp"

#include <algorithm>
#include <functional>

namespace bfc {

SchurVector schur(const Partition& p, const Q& c) {
    return SchurVector(p, c);
}

SchurVector apply_q(const SchurVector& v) {
    SchurVector out;
    for (const auto& [p, c] : v)
        for (const auto& r : res_set(p)) out.add(r, c);
    return out;
}

SchurVector apply_p(const SchurVector& v) {
    SchurVector out;
    for (const auto& [p, c] : v)
        for (const auto& r : ind_set(p)) out.add(r, c);
    return out;
}

std::vector<Partition> horizontal_strips_added(const Partition& p, int m) {
    std::vector<Partition> out;
    if (m < 0) return out;
    // eta_1 >= p_1 >= eta_2 >= p_2 >= ... ; eta has at most length(p)+1 rows.
    const int rows = p.length() + 1;
    std::vector<int> eta(rows);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == rows) {
            if (left == 0) out.emplace_back(eta);
            return;
        }
        const int lo = p.part(i);
        const int hi = (i == 0) ? lo + left : std::min(p.part(i - 1), lo + left);
        for (int x = lo; x <= hi; ++x) {
            eta[i] = x;
            rec(i + 1, left - (x - lo));
        }
    };
    rec(0, m);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<Partition> horizontal_strips_removed(const Partition& p, int m) {
    std::vector<Partition> out;
    if (m < 0) return out;
    // p_1 >= mu_1 >= p_2 >= mu_2 >= ...
    const int rows = p.length();
    std::vector<int> mu(rows);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == rows) {
            if (left == 0) out.emplace_back(mu);
            return;
        }
        const int hi = p.part(i);
        const int lo = std::max(p.part(i + 1), hi - left);
        for (int x = lo; x <= hi; ++x) {
            mu[i] = x;
            rec(i + 1, left - (hi - x));
        }
    };
    rec(0, m);
    return out;
}

template <class Enum>
SchurVector apply_strips(const SchurVector& v, Enum&& shapes) {
    SchurVector out;
    for (const auto& [p, c] : v)
        for (const auto& r : shapes(p)) out.add(r, c);
    return out;
}

}  // namespace

SchurVector apply_p_row(int m, const SchurVector& v) {
    return apply_strips(v, [m](const Partition& p) { return horizontal_strips_added(p, m); });
}

SchurVector apply_q_row(int m, const SchurVector& v) {
    return apply_strips(v, [m](const Partition& p) { return horizontal_strips_removed(p, m); });
}

SchurVector apply_p_col(int m, const SchurVector& v) {
    return apply_strips(v, [m](const Partition& p) {
        auto hs = horizontal_strips_added(dual(p), m);
        for (auto& h : hs) h = dual(h);
        return hs;
    });
}

SchurVector apply_q_col(int m, const SchurVector& v) {
    return apply_strips(v, [m](const Partition& p) {
        auto hs = horizontal_strips_removed(dual(p), m);
        for (auto& h : hs) h = dual(h);
        return hs;
    });
}

std::string to_string(const SchurVector& v) {
    if (v.empty()) return "0";
    std::string out;
    bool first = true;
    // Larger partitions first, so (2) precedes (1,1).
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
        Q a = it->second;
        if (!first) {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        } else if (a < 0) {
            out += "-";
            a = -a;
        }
        if (a != 1) out += to_string(a) + "*";
        out += to_string(it->first);
        first = false;
    }
    return out;
}

}  // namespace bfc
