#include "json_io.hpp"

namespace bfc::json_io {

json to_json(const Q& x) {
    return to_string(x);
}

json to_json(const Partition& p) {
    return p.parts();
}

json to_json(const ChargedSequence& s) {
    return {{"charge", s.charge}, {"head", s.head}};
}

json to_json(const FockVector& v) {
    json out = json::array();
    for (const auto& [s, c] : v) out.push_back({{"sequence", to_json(s)}, {"coefficient", to_json(c)}});
    return out;
}

json to_json(const SchurVector& v) {
    json out = json::array();
    for (const auto& [p, c] : v) out.push_back({{"partition", to_json(p)}, {"coefficient", to_json(c)}});
    return out;
}

json to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

json to_json(const Resolution& r) {
    json out = json::array();
    for (int t = 0; t <= r.length(); ++t) {
        json labels = json::array();
        for (const auto& l : r.terms[t]) labels.push_back(to_string(l));
        json boundary = json::array();
        if (r.has_boundary && t > 0)
            for (const auto& e : r.boundary[t - 1])
                boundary.push_back({{"from", e.from}, {"to", e.to}, {"coefficient", to_json(e.coefficient)}});
        out.push_back({{"degree", t}, {"labels", labels}, {"boundary", boundary}});
    }
    return out;
}

json to_json(const Check& c) {
    return {{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"pass", c.pass()}, {"examples", c.examples}};
}

json to_json(const SuiteReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"suite", r.suite}, {"max_size", r.max_size}, {"pass", r.pass()}, {"checks", checks}};
}

json to_json(const BfReport& r) {
    json cases = json::array();
    for (const auto& c : r.cases)
        cases.push_back({{"lam1", to_json(c.lam1)},
                         {"lam", to_json(c.lam)},
                         {"branch", c.branch == Branch::lam ? "lam" : "nu"},
                         {"a", to_json(c.a)},
                         {"a_oracle", to_json(c.a_oracle)},
                         {"a_tilde", to_json(c.a_tilde)},
                         {"pass", c.pass}});
    return {{"mu", to_json(r.mu)}, {"pass", r.pass()}, {"cases", cases}};
}

}  // namespace bfc::json_io
