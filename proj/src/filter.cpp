#include "kites/filter.hpp"

#include <algorithm>
#include <numeric>

namespace kites {

bool LatticeFilter::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

std::string LatticeFilter::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(members[i]);
    }
    return s + "}";
}

namespace {

bool closed_checks(const FiniteResLat& g, const std::vector<int>& m, bool conj) {
    std::vector<char> in(g.size(), 0);
    for (int x : m) {
        if (x < 0 || x >= g.size()) return false;
        in[x] = 1;
    }
    if (!in[g.unit()]) return false;
    for (int x : m) {
        for (int y = 0; y < g.size(); ++y) {
            if (g.leq(x, y) && !in[y]) return false;  // upward
        }
        for (int y : m)
            if (!in[g.mul(x, y)]) return false;  // product
        if (conj) {
            for (int y = 0; y < g.size(); ++y) {
                if (!in[left_conjugate(g, y, x)]) return false;
                if (!in[right_conjugate(g, y, x)]) return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_filter(const FiniteResLat& g, const std::vector<int>& members) {
    return closed_checks(g, members, false);
}

bool is_normal_filter(const FiniteResLat& g, const std::vector<int>& members) {
    return closed_checks(g, members, true);
}

LatticeFilter filter_generated(const FiniteResLat& g, const std::vector<int>& generators,
                               bool normal) {
    std::vector<char> in(g.size(), 0);
    in[g.unit()] = 1;
    for (int x : generators) {
        if (x < 0 || x >= g.size()) throw DomainError("generator index out of range");
        in[x] = 1;
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < g.size(); ++x) {
            if (!in[x]) continue;
            for (int y = 0; y < g.size(); ++y) {
                if (g.leq(x, y) && !in[y]) in[y] = grew = true;
                if (in[y] && !in[g.mul(x, y)]) in[g.mul(x, y)] = grew = true;
                if (normal) {
                    int lc = left_conjugate(g, y, x);
                    int rc = right_conjugate(g, y, x);
                    if (!in[lc]) in[lc] = grew = true;
                    if (!in[rc]) in[rc] = grew = true;
                }
            }
        }
    }
    LatticeFilter f;
    for (int x = 0; x < g.size(); ++x)
        if (in[x]) f.members.push_back(x);
    return f;
}

std::vector<LatticeFilter> all_normal_filters(const FiniteResLat& g) {
    const int n = g.size();
    if (n > 20) throw ResourceError("normal-filter enumeration capped at carrier size 20");
    std::vector<LatticeFilter> out;
    const std::uint32_t ebit = 1u << g.unit();
    const std::uint32_t total = 1u << n;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (!(mask & ebit)) continue;
        std::vector<int> members;
        for (int x = 0; x < n; ++x)
            if (mask & (1u << x)) members.push_back(x);
        if (is_normal_filter(g, members)) out.push_back(LatticeFilter{std::move(members)});
    }
    std::sort(out.begin(), out.end(), [](const LatticeFilter& a, const LatticeFilter& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

Congruence congruence_from_filter(const FiniteResLat& g, const LatticeFilter& f) {
    if (!is_normal_filter(g, f.members)) throw DomainError("filter is not normal");
    const int n = g.size();
    std::vector<int> cls(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        cls[x] = next;
        for (int y = x + 1; y < n; ++y)
            if (cls[y] < 0 && f.contains(g.rdiv(x, y)) && f.contains(g.rdiv(y, x))) cls[y] = next;
        ++next;
    }
    return Congruence{std::move(cls), next};
}

LatticeFilter filter_from_congruence(const FiniteResLat& g, const Congruence& c) {
    LatticeFilter f;
    for (int x = 0; x < g.size(); ++x)
        if (c.class_of[x] == c.class_of[g.unit()]) f.members.push_back(x);
    return f;
}

bool is_congruence(const FiniteResLat& g, const Congruence& c) {
    const int n = g.size();
    if (static_cast<int>(c.class_of.size()) != n) return false;
    auto same = [&](int a, int b) { return c.class_of[a] == c.class_of[b]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!same(a, b)) continue;
            for (int u = 0; u < n; ++u) {
                if (!same(g.meet(a, u), g.meet(b, u)) || !same(g.meet(u, a), g.meet(u, b)))
                    return false;
                if (!same(g.join(a, u), g.join(b, u)) || !same(g.join(u, a), g.join(u, b)))
                    return false;
                if (!same(g.mul(a, u), g.mul(b, u)) || !same(g.mul(u, a), g.mul(u, b)))
                    return false;
                if (!same(g.ldiv(a, u), g.ldiv(b, u)) || !same(g.ldiv(u, a), g.ldiv(u, b)))
                    return false;
                if (!same(g.rdiv(a, u), g.rdiv(b, u)) || !same(g.rdiv(u, a), g.rdiv(u, b)))
                    return false;
            }
        }
    return true;
}

FiniteResLat quotient(const FiniteResLat& g, const LatticeFilter& f) {
    Congruence c = congruence_from_filter(g, f);  // validates normality
    const int n = g.size();
    const int q = c.classes;
    std::vector<int> rep(q, -1);
    for (int x = 0; x < n; ++x)
        if (rep[c.class_of[x]] < 0) rep[c.class_of[x]] = x;

    auto build = [&](auto&& op) {
        Table t(q * q);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) t[a * q + b] = c.class_of[op(rep[a], rep[b])];
        return t;
    };
    return FiniteResLat(
        q, c.class_of[g.unit()], build([&](int x, int y) { return g.meet(x, y); }),
        build([&](int x, int y) { return g.join(x, y); }),
        build([&](int x, int y) { return g.mul(x, y); }),
        build([&](int x, int y) { return g.ldiv(x, y); }),
        build([&](int x, int y) { return g.rdiv(x, y); }));
}

SiResult is_subdirectly_irreducible(const FiniteResLat& g) {
    SiResult res;
    if (g.trivial()) {
        res.trivial_algebra = true;
        res.detail = "one-element algebra (degenerate)";
        return res;
    }
    std::vector<char> inter(g.size(), 1);
    bool any = false;
    for (const auto& f : all_normal_filters(g)) {
        if (f.is_trivial(g)) continue;
        any = true;
        std::vector<char> keep(g.size(), 0);
        for (int x : f.members) keep[x] = 1;
        for (int x = 0; x < g.size(); ++x) inter[x] = inter[x] && keep[x];
    }
    if (!any) {
        // Cannot happen for valid tables: the full carrier is always a
        // non-trivial normal filter when size >= 2.
        res.detail = "no non-trivial normal filter";
        return res;
    }
    LatticeFilter m;
    for (int x = 0; x < g.size(); ++x)
        if (inter[x]) m.members.push_back(x);
    res.si = static_cast<int>(m.members.size()) > 1;
    if (res.si) {
        res.monolith = m;
        res.detail = "least non-trivial normal filter " + m.to_string();
    } else {
        res.detail = "intersection of non-trivial normal filters is {e}";
    }
    return res;
}

FiniteResLat direct_product(const std::vector<FiniteResLat>& factors, long long size_cap) {
    if (factors.empty()) throw DomainError("direct product needs at least one factor");
    long long n = 1;
    for (const auto& f : factors) {
        n *= f.size();
        if (n > size_cap) throw ResourceError("direct product exceeds size cap");
    }
    const int N = static_cast<int>(n);
    const int k = static_cast<int>(factors.size());
    // decode digit j of element x (last factor fastest)
    auto digits = [&](int x) {
        std::vector<int> d(k);
        for (int j = k - 1; j >= 0; --j) {
            d[j] = x % factors[j].size();
            x /= factors[j].size();
        }
        return d;
    };
    auto encode = [&](const std::vector<int>& d) {
        int x = 0;
        for (int j = 0; j < k; ++j) x = x * factors[j].size() + d[j];
        return x;
    };
    std::vector<std::vector<int>> digit_cache(N);
    for (int x = 0; x < N; ++x) digit_cache[x] = digits(x);

    auto build = [&](auto&& op) {
        Table t(static_cast<std::size_t>(N) * N);
        std::vector<int> d(k);
        for (int x = 0; x < N; ++x)
            for (int y = 0; y < N; ++y) {
                for (int j = 0; j < k; ++j)
                    d[j] = op(factors[j], digit_cache[x][j], digit_cache[y][j]);
                t[static_cast<std::size_t>(x) * N + y] = encode(d);
            }
        return t;
    };
    std::vector<int> ed(k);
    for (int j = 0; j < k; ++j) ed[j] = factors[j].unit();
    return FiniteResLat(
        N, encode(ed),
        build([](const FiniteResLat& f, int x, int y) { return f.meet(x, y); }),
        build([](const FiniteResLat& f, int x, int y) { return f.join(x, y); }),
        build([](const FiniteResLat& f, int x, int y) { return f.mul(x, y); }),
        build([](const FiniteResLat& f, int x, int y) { return f.ldiv(x, y); }),
        build([](const FiniteResLat& f, int x, int y) { return f.rdiv(x, y); }));
}

}  // namespace kites
