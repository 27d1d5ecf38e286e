#include "bfc/fock.hpp"

#include <algorithm>

namespace bfc {

FockVector fock(const ChargedSequence& s, const Q& c) {
    return FockVector(s, c);
}

FockVector fock(const Partition& p, const Q& c) {
    return FockVector(to_sequence(p), c);
}

namespace {

// Long enough that every entry <= 2j is in the prefix.
std::vector<int> prefix_covering(const ChargedSequence& s, int j) {
    return s.prefix(std::max<int>(static_cast<int>(s.head.size()), j - s.charge));
}

}  // namespace

FockVector apply_psi(int j, const FockVector& v) {
    FockVector out;
    for (const auto& [s, c] : v) {
        auto x = prefix_covering(s, j);
        auto it = std::lower_bound(x.begin(), x.end(), 2 * j);
        if (it != x.end() && *it == 2 * j) continue;
        const auto n = it - x.begin();
        x.insert(it, 2 * j);
        out.add(make_sequence(s.charge - 1, std::move(x)), n % 2 ? Q(-c) : c);
    }
    return out;
}

FockVector apply_psi_star(int j, const FockVector& v) {
    FockVector out;
    for (const auto& [s, c] : v) {
        auto x = prefix_covering(s, j);
        auto it = std::lower_bound(x.begin(), x.end(), 2 * j);
        if (it == x.end() || *it != 2 * j) continue;
        const auto n = (it - x.begin()) + 1;
        x.erase(it);
        out.add(make_sequence(s.charge + 1, std::move(x)), (n - 1) % 2 ? Q(-c) : c);
    }
    return out;
}

FockVector apply_t(int i, const FockVector& v) {
    if (i % 2 == 0) return apply_psi(i / 2, v);
    // i = 2j - 1 with j = (i + 1) / 2, exact for negative odd i as well.
    const int j = (i + 1) / 2;
    return apply_psi_star(j, v) + apply_psi_star(j - 1, v);
}

FockVector apply_word(const std::vector<int>& word, const FockVector& v) {
    FockVector r = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = apply_t(*it, r);
    return r;
}

FockVector tau(const FockVector& v, int steps) {
    FockVector out;
    for (const auto& [s, c] : v) {
        ChargedSequence t{s.charge + steps, s.head};
        for (int& x : t.head) x += 2 * steps;
        out.add(t, c);
    }
    return out;
}

FockVector s_bar_n(int n, const FockVector& v) {
    FockVector sum;
    for (const auto& [s, c] : v) {
        const FockVector b = fock(s, c);
        // t_{2i+1} needs 2i or 2i+2 among the entries, all of which are >= x_1.
        for (int i = s.entry(1) / 2 - 1; i <= n; ++i) {
            FockVector term = apply_t(2 * i + 1, b);
            sum += (i % 2 == 0) ? term : term.scaled(Q(-1));
        }
    }
    return tau(sum, -1);
}

FockVector s_n_op(int n, const FockVector& v) {
    FockVector sum;
    for (const auto& [s, c] : v) {
        const FockVector b = fock(s, c);
        // Every even number >= 2(len+1)+2k is already present.
        const int hi = static_cast<int>(s.head.size()) + s.charge;
        for (int i = -n; i <= hi; ++i) {
            FockVector term = apply_t(2 * i, b);
            sum += (i % 2 == 0) ? term : term.scaled(Q(-1));
        }
    }
    return tau(sum, 1);
}

FockVector g_q_trunc(int N, const FockVector& v) {
    FockVector r;
    for (int i = -N; i <= 0; ++i) r += apply_t(2 * i, apply_t(2 * i - 1, v));
    for (int i = 1; i <= N; ++i) r -= apply_t(2 * i - 1, apply_t(2 * i, v));
    return r;
}

FockVector g_p_trunc(int N, const FockVector& v) {
    FockVector r;
    for (int i = -N; i <= 0; ++i) r += apply_t(2 * i, apply_t(2 * i + 1, v));
    for (int i = 1; i <= N; ++i) r -= apply_t(2 * i + 1, apply_t(2 * i, v));
    return r;
}

int stability_bound(const Partition& p) {
    return std::max(p.part(0), p.length()) + 2;
}

std::vector<ChargedSequence> sequences_of_energy(int k, int e) {
    std::vector<ChargedSequence> out;
    for (const auto& p : partitions_of(e)) {
        ChargedSequence s = to_sequence(p);
        s.charge += k;
        for (int& x : s.head) x += 2 * k;
        out.push_back(std::move(s));
    }
    return out;
}

std::string to_string(const FockVector& v) {
    if (v.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : v) {
        Q a = c;
        if (!first) {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        } else if (a < 0) {
            out += "-";
            a = -a;
        }
        if (a != 1) out += to_string(a) + "*";
        out += to_string(s);
        first = false;
    }
    return out;
}

}  // namespace bfc
