#include "kites/frame.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace kites {

bool IndexSet::contains(long long i) const {
    switch (kind) {
        case Kind::Explicit: return std::binary_search(elems.begin(), elems.end(), i);
        case Kind::AllZ: return true;
        case Kind::FromN: return i >= from;
    }
    return false;
}

bool IndexSet::empty() const { return kind == Kind::Explicit && elems.empty(); }

std::string IndexSet::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Explicit: {
            os << "{";
            for (size_t k = 0; k < elems.size(); ++k) os << (k ? "," : "") << elems[k];
            os << "}";
            break;
        }
        case Kind::AllZ: os << "Z"; break;
        case Kind::FromN: os << "{" << from << ",...}"; break;
    }
    return os.str();
}

IndexSet IndexSet::explicit_set(std::vector<long long> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    IndexSet s;
    s.kind = Kind::Explicit;
    s.elems = std::move(v);
    return s;
}

IndexSet IndexSet::all_z() {
    IndexSet s;
    s.kind = Kind::AllZ;
    return s;
}

IndexSet IndexSet::from_n(long long from) {
    IndexSet s;
    s.kind = Kind::FromN;
    s.from = from;
    return s;
}

std::string to_string(FrameKind k) {
    switch (k) {
        case FrameKind::Finite: return "finite";
        case FrameKind::ZShift: return "z-shift";
        case FrameKind::NForward: return "n-forward";
        case FrameKind::NBackward: return "n-backward";
    }
    return "?";
}

Frame Frame::finite(int m, std::vector<int> i1,
                    const std::vector<std::pair<int, int>>& lambda) {
    if (m < 0) throw StructuralError("frame size must be non-negative");
    std::sort(i1.begin(), i1.end());
    if (std::adjacent_find(i1.begin(), i1.end()) != i1.end())
        throw StructuralError("I1 has repeated elements");
    for (int i : i1)
        if (i < 0 || i >= m) throw StructuralError("I1 element out of range");

    Frame f;
    f.kind_ = FrameKind::Finite;
    f.m_ = m;
    f.i1_ = std::move(i1);
    f.lambda_.assign(static_cast<size_t>(m), -1);
    f.lambda_inv_.assign(static_cast<size_t>(m), -1);
    for (auto [i, j] : lambda) {
        if (i < 0 || i >= m || j < 0 || j >= m)
            throw StructuralError("lambda pair out of range");
        if (!std::binary_search(f.i1_.begin(), f.i1_.end(), i))
            throw StructuralError("lambda defined outside I1");
        if (f.lambda_[static_cast<size_t>(i)] != -1)
            throw StructuralError("lambda defined twice at one index");
        if (f.lambda_inv_[static_cast<size_t>(j)] != -1)
            throw StructuralError("lambda is not injective");
        f.lambda_[static_cast<size_t>(i)] = j;
        f.lambda_inv_[static_cast<size_t>(j)] = i;
    }
    for (int i : f.i1_)
        if (f.lambda_[static_cast<size_t>(i)] == -1)
            throw StructuralError("lambda missing on an I1 element");
    return f;
}

Frame Frame::z_shift() {
    Frame f;
    f.kind_ = FrameKind::ZShift;
    return f;
}

Frame Frame::n_forward() {
    Frame f;
    f.kind_ = FrameKind::NForward;
    return f;
}

Frame Frame::n_backward() {
    Frame f;
    f.kind_ = FrameKind::NBackward;
    return f;
}

int Frame::size() const {
    if (!is_finite()) throw DomainError("size() needs a finite frame");
    return m_;
}

const std::vector<int>& Frame::i1() const {
    if (!is_finite()) throw DomainError("i1() needs a finite frame");
    return i1_;
}

bool Frame::in_i1(int i) const {
    if (!is_finite()) throw DomainError("in_i1() needs a finite frame");
    return i >= 0 && i < m_ && lambda_[static_cast<size_t>(i)] != -1;
}

int Frame::lambda(int i) const {
    if (!in_i1(i)) throw DomainError("lambda applied outside I1");
    return lambda_[static_cast<size_t>(i)];
}

std::optional<int> Frame::lambda_opt(int i) const {
    if (!is_finite()) throw DomainError("lambda_opt() needs a finite frame");
    if (i < 0 || i >= m_ || lambda_[static_cast<size_t>(i)] == -1) return std::nullopt;
    return lambda_[static_cast<size_t>(i)];
}

std::optional<int> Frame::lambda_inv(int i) const {
    if (!is_finite()) throw DomainError("lambda_inv() needs a finite frame");
    if (i < 0 || i >= m_ || lambda_inv_[static_cast<size_t>(i)] == -1) return std::nullopt;
    return lambda_inv_[static_cast<size_t>(i)];
}

IndexSet Frame::level_set(long long n) const {
    if (n < 0) throw DomainError("level sets are indexed by n >= 0");
    switch (kind_) {
        case FrameKind::ZShift: return IndexSet::all_z();
        case FrameKind::NForward: return IndexSet::from_n(0);
        case FrameKind::NBackward: return IndexSet::from_n(n);
        case FrameKind::Finite: {
            if (n > m_ + 1) n = m_ + 1;  // level sets stabilize by then
            auto v = level_elems(static_cast<int>(n));
            return IndexSet::explicit_set({v.begin(), v.end()});
        }
    }
    return IndexSet::explicit_set({});
}

std::vector<int> Frame::level_elems(int n) const {
    if (!is_finite()) throw DomainError("level_elems() needs a finite frame");
    if (n < 0) throw DomainError("level sets are indexed by n >= 0");
    std::vector<bool> cur(static_cast<size_t>(m_), true);
    for (int step = 0; step < n; ++step) {
        std::vector<bool> next(static_cast<size_t>(m_), false);
        bool changed = false;
        for (int i = 0; i < m_; ++i) {
            int li = cur[static_cast<size_t>(i)] ? lambda_[static_cast<size_t>(i)] : -1;
            bool keep = li != -1 && cur[static_cast<size_t>(li)];
            next[static_cast<size_t>(i)] = keep;
            changed = changed || keep != cur[static_cast<size_t>(i)];
        }
        cur = std::move(next);
        if (!changed) break;
    }
    std::vector<int> out;
    for (int i = 0; i < m_; ++i)
        if (cur[static_cast<size_t>(i)]) out.push_back(i);
    return out;
}

std::optional<long long> Frame::lambda_power(long long p, long long i) const {
    if (p < 0) throw DomainError("lambda_power needs p >= 0");
    switch (kind_) {
        case FrameKind::ZShift: return i + p;
        case FrameKind::NForward: return i < 0 ? std::nullopt : std::optional<long long>(i + p);
        case FrameKind::NBackward:
            return i - p < 0 ? std::nullopt : std::optional<long long>(i - p);
        case FrameKind::Finite: {
            if (i < 0 || i >= m_) return std::nullopt;
            long long cur = i;
            for (long long s = 0; s < p; ++s) {
                int next = lambda_[static_cast<size_t>(cur)];
                if (next == -1) return std::nullopt;
                cur = next;
            }
            return cur;
        }
    }
    return std::nullopt;
}

std::optional<long long> Frame::lambda_power_inv(long long p, long long i) const {
    if (p < 0) throw DomainError("lambda_power_inv needs p >= 0");
    switch (kind_) {
        case FrameKind::ZShift: return i - p;
        case FrameKind::NForward: return i - p < 0 ? std::nullopt : std::optional<long long>(i - p);
        case FrameKind::NBackward: return i < 0 ? std::nullopt : std::optional<long long>(i + p);
        case FrameKind::Finite: {
            if (i < 0 || i >= m_) return std::nullopt;
            long long cur = i;
            for (long long s = 0; s < p; ++s) {
                int prev = lambda_inv_[static_cast<size_t>(cur)];
                if (prev == -1) return std::nullopt;
                cur = prev;
            }
            return cur;
        }
    }
    return std::nullopt;
}

IndexSet Frame::lambda_level_image(long long m, long long n) const {
    if (m < 0 || n < m) throw DomainError("lambda_level_image needs 0 <= m <= n");
    switch (kind_) {
        case FrameKind::ZShift: return IndexSet::all_z();
        case FrameKind::NForward: return IndexSet::from_n(m);
        case FrameKind::NBackward: return IndexSet::from_n(n - m);
        case FrameKind::Finite: {
            std::vector<long long> img;
            for (int i : level_elems(static_cast<int>(std::min<long long>(n, m_ + 1)))) {
                auto j = lambda_power(m, i);
                if (j) img.push_back(*j);
            }
            return IndexSet::explicit_set(std::move(img));
        }
    }
    return IndexSet::explicit_set({});
}

std::vector<long long> forward_orbit(const Frame& f, long long i, long long cap) {
    if (!f.is_finite()) throw DomainError("forward_orbit needs a finite frame");
    if (i < 0 || i >= f.size()) throw DomainError("orbit start out of range");
    std::vector<long long> orbit;
    std::set<long long> seen;
    long long cur = i;
    while (seen.insert(cur).second && static_cast<long long>(orbit.size()) < cap) {
        orbit.push_back(cur);
        auto next = f.lambda_opt(static_cast<int>(cur));
        if (!next) break;
        cur = *next;
    }
    return orbit;
}

bool connected(const Frame& f, long long i, long long j) {
    if (!f.is_finite()) {
        bool ok = f.kind() == FrameKind::ZShift || (i >= 0 && j >= 0);
        if (!ok) throw DomainError("index outside I0");
        return true;  // single forward-meeting class in all three symbolic frames
    }
    auto oi = forward_orbit(f, i);
    auto oj = forward_orbit(f, j);
    std::set<long long> si(oi.begin(), oi.end());
    return std::any_of(oj.begin(), oj.end(), [&](long long v) { return si.count(v) > 0; });
}

std::vector<std::vector<int>> connected_components(const Frame& f) {
    if (!f.is_finite()) throw DomainError("connected_components needs a finite frame");
    const int m = f.size();
    std::vector<int> parent(static_cast<size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (int i = 0; i < m; ++i)
        if (auto j = f.lambda_opt(i)) parent[static_cast<size_t>(find(i))] = find(*j);
    std::map<int, std::vector<int>> buckets;
    for (int i = 0; i < m; ++i) buckets[find(i)].push_back(i);
    std::vector<std::vector<int>> comps;
    for (auto& [root, members] : buckets) {
        std::sort(members.begin(), members.end());
        comps.push_back(std::move(members));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

std::string to_string(FrameTag t) {
    switch (t) {
        case FrameTag::Empty: return "empty";
        case FrameTag::SingletonLoop: return "singleton-loop";
        case FrameTag::SingletonTail: return "singleton-tail";
        case FrameTag::Cycle: return "cycle";
        case FrameTag::Path: return "path";
        case FrameTag::ZShift: return "z-shift";
        case FrameTag::NForward: return "n-forward";
        case FrameTag::NBackward: return "n-backward";
        case FrameTag::Disconnected: return "disconnected";
    }
    return "?";
}

namespace {

// (is_cycle, vertex count) of one weak component of an injective partial map.
std::pair<bool, int> component_shape(const Frame& f, const std::vector<int>& comp) {
    int edges = 0;
    for (int i : comp)
        if (f.in_i1(i)) ++edges;
    return {edges == static_cast<int>(comp.size()), static_cast<int>(comp.size())};
}

}  // namespace

FrameClass classify_frame(const Frame& f) {
    FrameClass c;
    switch (f.kind()) {
        case FrameKind::ZShift:
            c.tag = FrameTag::ZShift;
            c.si_shape = true;
            c.detail = "bijective shift on Z";
            return c;
        case FrameKind::NForward:
            c.tag = FrameTag::NForward;
            c.si_shape = true;
            c.detail = "successor on N";
            return c;
        case FrameKind::NBackward:
            c.tag = FrameTag::NBackward;
            c.si_shape = true;
            c.detail = "predecessor on N \\ {0}";
            return c;
        case FrameKind::Finite: break;
    }
    if (f.size() == 0) {
        c.tag = FrameTag::Empty;
        c.si_shape = true;
        c.detail = "empty index set";
        return c;
    }
    auto comps = connected_components(f);
    if (comps.size() >= 2) {
        c.tag = FrameTag::Disconnected;
        c.si_shape = false;
        c.detail = std::to_string(comps.size()) + " components";
        return c;
    }
    auto [is_cycle, count] = component_shape(f, comps.front());
    if (is_cycle) {
        c.cycle_len = count;
        c.tag = count == 1 ? FrameTag::SingletonLoop : FrameTag::Cycle;
        c.detail = "cycle of length " + std::to_string(count);
    } else {
        c.path_len = count;
        c.tag = count == 1 ? FrameTag::SingletonTail : FrameTag::Path;
        c.detail = "path with " + std::to_string(count) + " vertices";
    }
    c.si_shape = true;
    return c;
}

bool i0_covered_by_i1_and_image(const Frame& f) {
    if (!f.is_finite()) return true;  // holds in closed form for all three
    std::vector<bool> covered(static_cast<size_t>(f.size()), false);
    for (int i : f.i1()) {
        covered[static_cast<size_t>(i)] = true;
        covered[static_cast<size_t>(f.lambda(i))] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

namespace {

// Vertices of one component in canonical traversal order: paths from the
// sole vertex without a predecessor, cycles from their smallest vertex.
std::vector<int> traversal_order(const Frame& f, const std::vector<int>& comp) {
    auto [is_cycle, count] = component_shape(f, comp);
    int start = comp.front();
    if (!is_cycle)
        for (int v : comp)
            if (!f.lambda_inv(v)) start = v;
    std::vector<int> order;
    int cur = start;
    for (int k = 0; k < count; ++k) {
        order.push_back(cur);
        if (k + 1 < count) cur = f.lambda(cur);
    }
    return order;
}

}  // namespace

std::string canonical_frame_form(const Frame& f) {
    if (!f.is_finite()) return to_string(f.kind());
    std::vector<std::string> parts;
    for (const auto& comp : connected_components(f)) {
        auto [is_cycle, count] = component_shape(f, comp);
        parts.push_back((is_cycle ? "C" : "P") + std::to_string(count));
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "finite:";
    for (size_t k = 0; k < parts.size(); ++k) out += (k ? "," : "") + parts[k];
    return out;
}

std::optional<std::vector<int>> find_frame_isomorphism(const Frame& a, const Frame& b) {
    if (a.kind() != b.kind()) return std::nullopt;
    if (!a.is_finite()) return std::vector<int>{};
    if (a.size() != b.size()) return std::nullopt;

    auto key = [](const Frame& f, const std::vector<int>& comp) {
        auto [is_cycle, count] = component_shape(f, comp);
        return std::pair<int, int>(is_cycle ? 1 : 0, count);
    };
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> ga, gb;
    for (const auto& comp : connected_components(a)) ga[key(a, comp)].push_back(comp);
    for (const auto& comp : connected_components(b)) gb[key(b, comp)].push_back(comp);
    if (ga.size() != gb.size()) return std::nullopt;

    std::vector<int> t(static_cast<size_t>(a.size()), -1);
    for (auto& [shape, comps_a] : ga) {
        auto it = gb.find(shape);
        if (it == gb.end() || it->second.size() != comps_a.size()) return std::nullopt;
        for (size_t c = 0; c < comps_a.size(); ++c) {
            auto oa = traversal_order(a, comps_a[c]);
            auto ob = traversal_order(b, it->second[c]);
            for (size_t k = 0; k < oa.size(); ++k) t[static_cast<size_t>(oa[k])] = ob[k];
        }
    }
    return t;
}

bool frame_isomorphic(const Frame& a, const Frame& b, const std::vector<int>& t) {
    if (a.kind() != b.kind()) return false;
    if (!a.is_finite()) return t.empty();
    const int m = a.size();
    if (b.size() != m || static_cast<int>(t.size()) != m) return false;
    std::vector<bool> hit(static_cast<size_t>(m), false);
    for (int v : t) {
        if (v < 0 || v >= m || hit[static_cast<size_t>(v)]) return false;
        hit[static_cast<size_t>(v)] = true;
    }
    for (int i = 0; i < m; ++i) {
        if (a.in_i1(i) != b.in_i1(t[static_cast<size_t>(i)])) return false;
        if (a.in_i1(i) &&
            t[static_cast<size_t>(a.lambda(i))] != b.lambda(t[static_cast<size_t>(i)]))
            return false;
    }
    return true;
}

bool frame_isomorphic(const Frame& a, const Frame& b) {
    if (a.kind() != b.kind()) return false;
    if (!a.is_finite()) return true;
    return a.size() == b.size() && canonical_frame_form(a) == canonical_frame_form(b);
}

std::vector<Frame> enumerate_frames(int m) {
    if (m < 0 || m > 7) throw DomainError("enumerate_frames supports sizes 0 to 7");
    if (m == 0) return {empty_frame()};
    std::map<std::string, Frame> reps;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> i1;
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i)) i1.push_back(i);
        std::vector<std::pair<int, int>> pairs(i1.size());
        std::vector<bool> used(static_cast<size_t>(m), false);
        auto rec = [&](auto&& self, size_t idx) -> void {
            if (idx == i1.size()) {
                Frame f = Frame::finite(m, i1, pairs);
                reps.emplace(canonical_frame_form(f), f);
                return;
            }
            for (int target = 0; target < m; ++target) {
                if (used[static_cast<size_t>(target)]) continue;
                used[static_cast<size_t>(target)] = true;
                pairs[idx] = {i1[idx], target};
                self(self, idx + 1);
                used[static_cast<size_t>(target)] = false;
            }
        };
        rec(rec, 0);
    }
    std::vector<Frame> out;
    out.reserve(reps.size());
    for (auto& [form, f] : reps) out.push_back(std::move(f));
    return out;
}

Frame restrict_to_component(const Frame& f, const std::vector<int>& component) {
    if (!f.is_finite()) throw DomainError("restrict_to_component needs a finite frame");
    std::vector<int> comp = component;
    std::sort(comp.begin(), comp.end());
    std::vector<int> relabel(static_cast<size_t>(f.size()), -1);
    for (size_t k = 0; k < comp.size(); ++k) {
        int v = comp[k];
        if (v < 0 || v >= f.size() || relabel[static_cast<size_t>(v)] != -1)
            throw StructuralError("component is not a valid vertex set");
        relabel[static_cast<size_t>(v)] = static_cast<int>(k);
    }
    std::vector<int> i1;
    std::vector<std::pair<int, int>> pairs;
    for (int v : comp) {
        if (auto w = f.lambda_opt(v)) {
            if (relabel[static_cast<size_t>(*w)] == -1)
                throw StructuralError("component is not closed under lambda");
            i1.push_back(relabel[static_cast<size_t>(v)]);
            pairs.emplace_back(relabel[static_cast<size_t>(v)], relabel[static_cast<size_t>(*w)]);
        }
        if (auto u = f.lambda_inv(v); u && relabel[static_cast<size_t>(*u)] == -1)
            throw StructuralError("component is not closed under lambda_inv");
    }
    return Frame::finite(static_cast<int>(comp.size()), i1, pairs);
}

Frame empty_frame() { return Frame::finite(0, {}, {}); }

Frame singleton_loop() { return cycle_frame(1); }

Frame singleton_tail() { return path_frame(1); }

Frame cycle_frame(int c) {
    if (c < 1) throw DomainError("cycle_frame needs c >= 1");
    std::vector<int> i1(static_cast<size_t>(c));
    std::iota(i1.begin(), i1.end(), 0);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < c; ++i) pairs.emplace_back(i, (i + 1) % c);
    return Frame::finite(c, i1, pairs);
}

Frame path_frame(int p) {
    if (p < 1) throw DomainError("path_frame needs p >= 1");
    std::vector<int> i1(static_cast<size_t>(p - 1));
    std::iota(i1.begin(), i1.end(), 0);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < p; ++i) pairs.emplace_back(i, i + 1);
    return Frame::finite(p, i1, pairs);
}

Frame loops_frame(int k) {
    if (k < 0) throw DomainError("loops_frame needs k >= 0");
    std::vector<int> i1(static_cast<size_t>(k));
    std::iota(i1.begin(), i1.end(), 0);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) pairs.emplace_back(i, i);
    return Frame::finite(k, i1, pairs);
}

}  // namespace kites
