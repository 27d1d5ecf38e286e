#pragma once

#include "bfc/rational.hpp"

#include <map>

namespace bfc {

// Finite formal sum over an ordered key type. Zero coefficients are never stored.
template <class Key>
class LinComb {
public:
    using Terms = std::map<Key, Q>;

    LinComb() = default;
    explicit LinComb(const Key& k, const Q& c = Q(1)) { add(k, c); }

    void add(const Key& k, const Q& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }

    LinComb scaled(const Q& s) const {
        LinComb r;
        if (s == 0) return r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
        return r;
    }

    Q coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Q(0) : it->second;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
};

}  // namespace bfc
