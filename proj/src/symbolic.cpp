#include "kites/symbolic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace kites {

SymbolicKite::SymbolicKite(FiniteResLat g, Frame f) : g_(std::move(g)), f_(std::move(f)) {
    if (f_.is_finite()) throw DomainError("SymbolicKite requires a symbolic frame");
}

bool SymbolicKite::valid(const SparseElement& x) const {
    if (x.level < 0) return false;
    IndexSet in = f_.level_set(x.level);
    for (auto [i, v] : x.support)
        if (!in.contains(i) || v < 0 || v >= g_.size()) return false;
    return true;
}

SparseElement SymbolicKite::normalize(SparseElement x) const {
    std::erase_if(x.support, [&](const auto& kv) { return kv.second == g_.unit(); });
    return x;
}

int SymbolicKite::get(const SparseElement& x, long long i) const {
    if (!f_.level_set(x.level).contains(i))
        throw DomainError("index outside the element's level set");
    auto it = x.support.find(i);
    return it == x.support.end() ? g_.unit() : it->second;
}

bool SymbolicKite::leq(const SparseElement& x, const SparseElement& y) const {
    if (x.level != y.level) return x.level > y.level;
    std::set<long long> idx;
    for (auto& [i, v] : x.support) idx.insert(i);
    for (auto& [i, v] : y.support) idx.insert(i);
    return std::all_of(idx.begin(), idx.end(),
                       [&](long long i) { return g_.leq(get(x, i), get(y, i)); });
}

SparseElement SymbolicKite::meet(const SparseElement& x, const SparseElement& y) const {
    if (x.level > y.level) return x;
    if (y.level > x.level) return y;
    SparseElement out{x.level, {}};
    std::set<long long> idx;
    for (auto& [i, v] : x.support) idx.insert(i);
    for (auto& [i, v] : y.support) idx.insert(i);
    for (long long i : idx) out.support[i] = g_.meet(get(x, i), get(y, i));
    return normalize(std::move(out));
}

SparseElement SymbolicKite::join(const SparseElement& x, const SparseElement& y) const {
    if (x.level > y.level) return y;
    if (y.level > x.level) return x;
    SparseElement out{x.level, {}};
    std::set<long long> idx;
    for (auto& [i, v] : x.support) idx.insert(i);
    for (auto& [i, v] : y.support) idx.insert(i);
    for (long long i : idx) out.support[i] = g_.join(get(x, i), get(y, i));
    return normalize(std::move(out));
}

SparseElement SymbolicKite::mul(const SparseElement& x, const SparseElement& y) const {
    const long long m = x.level, n = y.level;
    SparseElement out{m + n, {}};
    IndexSet in = f_.level_set(m + n);
    std::set<long long> idx;  // candidate indices with a possibly non-unit entry
    for (auto& [i, v] : x.support)
        if (auto j = f_.lambda_power_inv(n, i); j && in.contains(*j)) idx.insert(*j);
    for (auto& [i, v] : y.support)
        if (in.contains(i)) idx.insert(i);
    for (long long i : idx) {
        long long up = *f_.lambda_power(n, i);
        out.support[i] = g_.mul(get(x, up), get(y, i));
    }
    return normalize(std::move(out));
}

SparseElement SymbolicKite::ldiv(const SparseElement& x, const SparseElement& z) const {
    const long long n = x.level, m = z.level;  // divisor x@n, dividend z@m
    if (n > m) return top();
    const long long q = m - n;
    SparseElement out{q, {}};
    IndexSet im = f_.level_set(m);
    std::set<long long> idx;
    for (auto& [i, v] : x.support)
        if (auto j = f_.lambda_power_inv(q, i); j && im.contains(*j)) idx.insert(*j);
    for (auto& [i, v] : z.support)
        if (im.contains(i)) idx.insert(i);
    for (long long j : idx)
        out.support[j] = g_.ldiv(get(x, *f_.lambda_power(q, j)), get(z, j));
    return normalize(std::move(out));
}

SparseElement SymbolicKite::rdiv(const SparseElement& z, const SparseElement& y) const {
    const long long n = z.level, m = y.level;  // dividend z@n, divisor y@m
    if (m > n) return top();
    SparseElement out{n - m, {}};
    IndexSet in = f_.level_set(n);
    std::set<long long> idx;  // indices i in I_n whose image lambda^m(i) gets an entry
    for (auto& [i, v] : z.support)
        if (in.contains(i)) idx.insert(i);
    for (auto& [i, v] : y.support)
        if (in.contains(i)) idx.insert(i);
    for (long long i : idx)
        out.support[*f_.lambda_power(m, i)] = g_.rdiv(get(z, i), get(y, i));
    return normalize(std::move(out));
}

SparseElement SymbolicKite::sample(Rng& rng, int max_level, int radius, int max_entries) const {
    SparseElement out{static_cast<long long>(rng.pick(max_level + 1)), {}};
    long long lo = 0;
    switch (f_.kind()) {
        case FrameKind::ZShift: lo = -radius; break;
        case FrameKind::NForward: lo = 0; break;
        case FrameKind::NBackward: lo = out.level; break;
        case FrameKind::Finite: break;
    }
    long long window = f_.kind() == FrameKind::ZShift ? 2 * radius + 1 : radius + 1;
    int entries = rng.pick(max_entries + 1);
    for (int k = 0; k < entries; ++k) {
        long long i = lo + static_cast<long long>(rng.below(static_cast<std::uint64_t>(window)));
        out.support[i] = rng.pick(g_.size());
    }
    return normalize(std::move(out));
}

std::string SymbolicKite::to_string(const SparseElement& x) const {
    std::ostringstream os;
    os << "@" << x.level << "{";
    bool first = true;
    for (auto [i, v] : x.support) {
        os << (first ? "" : ",") << i << ":" << v;
        first = false;
    }
    os << "}";
    return os.str();
}

PeriodicZKite::PeriodicZKite(FiniteResLat g, long long period_cap)
    : g_(std::move(g)), period_cap_(period_cap) {}

bool PeriodicZKite::valid(const PeriodicElement& x) const {
    if (x.level < 0 || x.period < 1 ||
        static_cast<long long>(x.vals.size()) != x.period)
        return false;
    return std::all_of(x.vals.begin(), x.vals.end(),
                       [&](int v) { return v >= 0 && v < g_.size(); });
}

int PeriodicZKite::get(const PeriodicElement& x, long long i) const {
    long long r = i % x.period;
    if (r < 0) r += x.period;
    return x.vals[static_cast<size_t>(r)];
}

long long PeriodicZKite::joint_period(const PeriodicElement& x,
                                      const PeriodicElement& y) const {
    long long l = std::lcm(x.period, y.period);
    if (l > period_cap_) throw ResourceError("joint period exceeds cap");
    return l;
}

bool PeriodicZKite::equal(const PeriodicElement& x, const PeriodicElement& y) const {
    if (x.level != y.level) return false;
    long long l = joint_period(x, y);
    for (long long i = 0; i < l; ++i)
        if (get(x, i) != get(y, i)) return false;
    return true;
}

bool PeriodicZKite::leq(const PeriodicElement& x, const PeriodicElement& y) const {
    if (x.level != y.level) return x.level > y.level;
    long long l = joint_period(x, y);
    for (long long i = 0; i < l; ++i)
        if (!g_.leq(get(x, i), get(y, i))) return false;
    return true;
}

PeriodicElement PeriodicZKite::meet(const PeriodicElement& x, const PeriodicElement& y) const {
    if (x.level > y.level) return x;
    if (y.level > x.level) return y;
    long long l = joint_period(x, y);
    PeriodicElement out{x.level, l, std::vector<int>(static_cast<size_t>(l))};
    for (long long i = 0; i < l; ++i)
        out.vals[static_cast<size_t>(i)] = g_.meet(get(x, i), get(y, i));
    return out;
}

PeriodicElement PeriodicZKite::join(const PeriodicElement& x, const PeriodicElement& y) const {
    if (x.level > y.level) return y;
    if (y.level > x.level) return x;
    long long l = joint_period(x, y);
    PeriodicElement out{x.level, l, std::vector<int>(static_cast<size_t>(l))};
    for (long long i = 0; i < l; ++i)
        out.vals[static_cast<size_t>(i)] = g_.join(get(x, i), get(y, i));
    return out;
}

PeriodicElement PeriodicZKite::mul(const PeriodicElement& x, const PeriodicElement& y) const {
    long long l = joint_period(x, y);
    PeriodicElement out{x.level + y.level, l, std::vector<int>(static_cast<size_t>(l))};
    for (long long i = 0; i < l; ++i)
        out.vals[static_cast<size_t>(i)] = g_.mul(get(x, i + y.level), get(y, i));
    return out;
}

PeriodicElement PeriodicZKite::ldiv(const PeriodicElement& x, const PeriodicElement& z) const {
    const long long n = x.level, m = z.level;
    if (n > m) return top();
    long long l = joint_period(x, z);
    PeriodicElement out{m - n, l, std::vector<int>(static_cast<size_t>(l))};
    for (long long j = 0; j < l; ++j)
        out.vals[static_cast<size_t>(j)] = g_.ldiv(get(x, j + (m - n)), get(z, j));
    return out;
}

PeriodicElement PeriodicZKite::rdiv(const PeriodicElement& z, const PeriodicElement& y) const {
    const long long n = z.level, m = y.level;
    if (m > n) return top();
    long long l = joint_period(z, y);
    PeriodicElement out{n - m, l, std::vector<int>(static_cast<size_t>(l))};
    // Entry at j = lambda^m(i) = i + m, so i = j - m.
    for (long long j = 0; j < l; ++j)
        out.vals[static_cast<size_t>(j)] = g_.rdiv(get(z, j - m), get(y, j - m));
    return out;
}

std::string PeriodicZKite::to_string(const PeriodicElement& x) const {
    std::ostringstream os;
    os << "@" << x.level << "(" << x.period << ")[";
    for (size_t k = 0; k < x.vals.size(); ++k) os << (k ? "," : "") << x.vals[k];
    os << "]";
    return os.str();
}

}  // namespace kites
