#include "bfc/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bfc {

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("partition has a negative part");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    parts_ = std::move(parts);
}

int Partition::size() const {
    int s = 0;
    for (int x : parts_) s += x;
    return s;
}

std::vector<int> Partition::padded(int n) const {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = part(i);
    return v;
}

Partition dual(const Partition& p) {
    std::vector<int> d(p.part(0));
    for (int j = 0; j < p.part(0); ++j) {
        int c = 0;
        while (c < p.length() && p.part(c) > j) ++c;
        d[j] = c;
    }
    return Partition(std::move(d));
}

std::vector<Partition> res_set(const Partition& p) {
    std::vector<Partition> out;
    for (int i = 0; i < p.length(); ++i) {
        if (p.part(i) > p.part(i + 1)) {
            auto v = p.parts();
            --v[i];
            out.emplace_back(std::move(v));
        }
    }
    return out;
}

std::vector<Partition> ind_set(const Partition& p) {
    std::vector<Partition> out;
    for (int i = 0; i <= p.length(); ++i) {
        if (i == 0 || p.part(i - 1) > p.part(i)) {
            auto v = p.padded(p.length() + 1);
            ++v[i];
            out.emplace_back(std::move(v));
        }
    }
    return out;
}

bool is_edge(const Partition& small, const Partition& big) {
    if (big.size() != small.size() + 1) return false;
    int diff = 0;
    for (int i = 0; i < big.length(); ++i) {
        int d = big.part(i) - small.part(i);
        if (d < 0 || d > 1) return false;
        diff += d;
    }
    return diff == 1 && small.length() <= big.length();
}

Box added_box(const Partition& small, const Partition& big) {
    if (!is_edge(small, big))
        throw std::invalid_argument(to_string(big) + " is not obtained from " + to_string(small) + " by adding a box");
    for (int i = 0; i < big.length(); ++i)
        if (big.part(i) != small.part(i)) return Box{i + 1, big.part(i)};
    throw std::logic_error("unreachable");
}

Partition union_columns(const Partition& p, int n) {
    if (n < 0) throw std::invalid_argument("union_columns: n must be nonnegative");
    if (p.length() > n)
        throw std::invalid_argument("union_columns: " + to_string(p) + " has more than " + std::to_string(n) + " rows");
    auto v = p.padded(n);
    for (int& x : v) ++x;
    return Partition(std::move(v));
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int x = std::min(remaining, max_part); x >= 1; --x) {
        cur.push_back(x);
        gen_partitions(remaining - x, x, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto ps = partitions_of(k);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

std::vector<Partition> partitions_in(int n, int m) {
    std::vector<Partition> out;
    for (auto& p : partitions_up_to(m))
        if (p.length() <= n) out.push_back(std::move(p));
    return out;
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.part(i));
    }
    return s + ")";
}

namespace {

std::vector<int> parse_int_list(const std::string& body, const std::string& whole) {
    std::vector<int> v;
    if (body.find_first_not_of(" \t") == std::string::npos) return v;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int x = 0;
        try {
            x = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse '" + whole + "'");
        }
        if (item.find_first_not_of(" \t", pos) != std::string::npos)
            throw std::invalid_argument("cannot parse '" + whole + "'");
        v.push_back(x);
    }
    return v;
}

}  // namespace

Partition parse_partition(const std::string& text) {
    auto b = text.find_first_not_of(" \t");
    auto e = text.find_last_not_of(" \t");
    if (b == std::string::npos || text[b] != '(' || text[e] != ')')
        throw std::invalid_argument("partition must look like (2,1) or (): '" + text + "'");
    return Partition(parse_int_list(text.substr(b + 1, e - b - 1), text));
}

int ChargedSequence::entry(int i) const {
    if (i >= 1 && i <= static_cast<int>(head.size())) return head[i - 1];
    return 2 * i + 2 * charge;
}

std::vector<int> ChargedSequence::prefix(int len) const {
    std::vector<int> v(std::max<int>(len, head.size()));
    for (int i = 1; i <= static_cast<int>(v.size()); ++i) v[i - 1] = entry(i);
    return v;
}

ChargedSequence vacuum(int charge) {
    return ChargedSequence{charge, {}};
}

ChargedSequence make_sequence(int charge, std::vector<int> prefix) {
    const int len = static_cast<int>(prefix.size());
    for (int i = 0; i < len; ++i) {
        if (prefix[i] % 2 != 0) throw std::invalid_argument("sequence entries must be even");
        if (i + 1 < len && prefix[i] >= prefix[i + 1]) throw std::invalid_argument("sequence must be strictly increasing");
    }
    if (len > 0 && prefix.back() >= 2 * (len + 1) + 2 * charge)
        throw std::invalid_argument("sequence prefix collides with its vacuum tail");
    while (!prefix.empty() && prefix.back() == 2 * static_cast<int>(prefix.size()) + 2 * charge) prefix.pop_back();
    return ChargedSequence{charge, std::move(prefix)};
}

ChargedSequence to_sequence(const Partition& p) {
    Partition d = dual(p);
    std::vector<int> v(d.length());
    for (int i = 0; i < d.length(); ++i) v[i] = 2 * (i + 1) - 2 * d.part(i);
    return make_sequence(0, std::move(v));
}

Partition from_sequence(const ChargedSequence& s) {
    if (s.charge != 0) throw std::invalid_argument("from_sequence: charge must be 0");
    std::vector<int> d(s.head.size());
    for (std::size_t i = 0; i < s.head.size(); ++i) d[i] = static_cast<int>(i + 1) - s.head[i] / 2;
    return dual(Partition(std::move(d)));
}

long energy(const std::vector<int>& prefix, int k) {
    long twice = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i) twice += 2L * k + 2L * static_cast<long>(i + 1) - prefix[i];
    return twice / 2;
}

long energy(const ChargedSequence& s) {
    return energy(s.head, s.charge);
}

std::optional<std::pair<int, ChargedSequence>> normalize(const std::vector<int>& prefix, int k) {
    const int len = static_cast<int>(prefix.size());
    const int tail_start = 2 * (len + 1) + 2 * k;
    std::vector<int> v = prefix;
    for (int x : v) {
        if (x % 2 != 0) throw std::invalid_argument("sequence entries must be even");
        if (x >= tail_start) return std::nullopt;  // repeats a tail entry
    }
    int sign = 1;
    for (int i = 1; i < len; ++i)  // insertion sort, counting transpositions
        for (int j = i; j > 0 && v[j - 1] >= v[j]; --j) {
            if (v[j - 1] == v[j]) return std::nullopt;
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    return std::make_pair(sign, make_sequence(k, std::move(v)));
}

std::string to_string(const ChargedSequence& s) {
    std::string out = "(";
    const int n = static_cast<int>(s.head.size());
    for (int i = 1; i <= n + 2; ++i) out += std::to_string(s.entry(i)) + ",";
    return out + "...)";
}

ChargedSequence parse_sequence(const std::string& text) {
    auto fail = [&] { return std::invalid_argument("sequence must look like vac:k or seq:k:x1,x2: '" + text + "'"); };
    auto c1 = text.find(':');
    if (c1 == std::string::npos) throw fail();
    const std::string kind = text.substr(0, c1);
    const std::string rest = text.substr(c1 + 1);
    auto parse_int = [&](const std::string& t) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(t, &pos);
        } catch (const std::exception&) {
            throw fail();
        }
        if (pos != t.size()) throw fail();
        return v;
    };
    if (kind == "vac") return vacuum(parse_int(rest));
    if (kind == "seq") {
        auto c2 = rest.find(':');
        if (c2 == std::string::npos) throw fail();
        int k = parse_int(rest.substr(0, c2));
        return make_sequence(k, parse_int_list(rest.substr(c2 + 1), text));
    }
    throw fail();
}

}  // namespace bfc
