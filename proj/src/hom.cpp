#include "kites/hom.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kites/error.hpp"
#include "kites/rng.hpp"

namespace kites {

namespace {

using MK = FrameTransformation::MapKind;

std::string idx(long long i) { return std::to_string(i); }

// Ambient vertex set of a frame.
IndexSet ambient_set(const Frame& f) {
    switch (f.kind()) {
        case FrameKind::ZShift:
            return IndexSet::all_z();
        case FrameKind::NForward:
        case FrameKind::NBackward:
            return IndexSet::from_n(0);
        case FrameKind::Finite: {
            std::vector<long long> v(static_cast<size_t>(f.size()));
            std::iota(v.begin(), v.end(), 0);
            return IndexSet::explicit_set(std::move(v));
        }
    }
    return IndexSet::explicit_set({});
}

// Vertices visited when a fact must be spot-checked pointwise; covers the
// whole vertex set of a finite frame and a stated window of an infinite one.
std::vector<long long> frame_window(const Frame& f, long long width) {
    std::vector<long long> out;
    switch (f.kind()) {
        case FrameKind::Finite:
            for (int i = 0; i < f.size(); ++i) out.push_back(i);
            break;
        case FrameKind::ZShift:
            for (long long i = -width; i <= width; ++i) out.push_back(i);
            break;
        case FrameKind::NForward:
        case FrameKind::NBackward:
            for (long long i = 0; i <= 2 * width; ++i) out.push_back(i);
            break;
    }
    return out;
}

// Exact t-preimage of an index set, where representable.
std::optional<IndexSet> preimage_set(const FrameTransformation& t, const IndexSet& s) {
    switch (t.kind) {
        case MK::Explicit: {
            std::vector<long long> v;
            for (int i = 0; i < t.source.size(); ++i)
                if (s.contains(t.table[static_cast<size_t>(i)])) v.push_back(i);
            return IndexSet::explicit_set(std::move(v));
        }
        case MK::Shift: {
            const bool one_sided = t.source.kind() != FrameKind::ZShift;
            switch (s.kind) {
                case IndexSet::Kind::AllZ:
                    return ambient_set(t.source);
                case IndexSet::Kind::FromN: {
                    long long from = s.from - t.shift;
                    if (one_sided && from < 0) from = 0;
                    return IndexSet::from_n(from);
                }
                case IndexSet::Kind::Explicit: {
                    std::vector<long long> v;
                    for (long long e : s.elems) {
                        long long i = e - t.shift;
                        if (!one_sided || i >= 0) v.push_back(i);
                    }
                    return IndexSet::explicit_set(std::move(v));
                }
            }
            return std::nullopt;
        }
        case MK::ModCollapse: {
            if (!s.finite()) return std::nullopt;
            if (s.empty()) return IndexSet::explicit_set({});
            if (static_cast<long long>(s.elems.size()) == t.target.size())
                return IndexSet::all_z();
            return std::nullopt;  // a proper union of residue classes
        }
    }
    return std::nullopt;
}

std::string violation_summary(const TransformationCheck& c) {
    std::ostringstream os;
    for (size_t i = 0; i < c.violations.size(); ++i) {
        if (i) os << "; ";
        os << "condition (" << c.violations[i].condition << ") at vertex "
           << c.violations[i].witness;
    }
    return os.str();
}

}  // namespace

long long FrameTransformation::apply(long long i) const {
    switch (kind) {
        case MapKind::Explicit:
            if (i < 0 || i >= source.size())
                throw DomainError("vertex outside the source frame");
            return table[static_cast<size_t>(i)];
        case MapKind::Shift:
            return i + shift;
        case MapKind::ModCollapse: {
            const long long m = target.size();
            return ((i % m) + m) % m;
        }
    }
    throw DomainError("unknown map kind");
}

FrameTransformation FrameTransformation::explicit_map(Frame source, Frame target,
                                                      std::vector<int> table) {
    if (!source.is_finite() || !target.is_finite())
        throw StructuralError("explicit maps need finite frames on both sides");
    if (static_cast<int>(table.size()) != source.size())
        throw StructuralError("map table must have one entry per source vertex");
    for (int v : table)
        if (v < 0 || v >= target.size())
            throw StructuralError("map table entry outside the target frame");
    FrameTransformation t;
    t.source = std::move(source);
    t.target = std::move(target);
    t.kind = MapKind::Explicit;
    t.table = std::move(table);
    return t;
}

FrameTransformation FrameTransformation::shift_map(Frame source, Frame target, long long shift) {
    if (source.is_finite() || source.kind() != target.kind())
        throw StructuralError("shift maps need symbolic frames of the same kind");
    if (source.kind() != FrameKind::ZShift && shift < 0)
        throw StructuralError("a negative shift leaves the one-sided index set");
    FrameTransformation t;
    t.source = std::move(source);
    t.target = std::move(target);
    t.kind = MapKind::Shift;
    t.shift = shift;
    return t;
}

FrameTransformation FrameTransformation::mod_collapse(Frame source, Frame target) {
    if (source.kind() != FrameKind::ZShift)
        throw StructuralError("mod collapse starts from the two-sided shift frame");
    if (!target.is_finite() || target.size() < 1 || !(target == cycle_frame(target.size())))
        throw StructuralError("mod collapse lands on the canonical cycle frame");
    FrameTransformation t;
    t.source = std::move(source);
    t.target = std::move(target);
    t.kind = MapKind::ModCollapse;
    return t;
}

std::string to_string(const FrameTransformation& t) {
    switch (t.kind) {
        case MK::Explicit: {
            std::ostringstream os;
            os << "explicit[";
            for (size_t i = 0; i < t.table.size(); ++i) {
                if (i) os << ' ';
                os << i << "->" << t.table[i];
            }
            os << ']';
            return os.str();
        }
        case MK::Shift:
            return "shift " + std::to_string(t.shift);
        case MK::ModCollapse:
            return "mod " + std::to_string(t.target.size());
    }
    return "?";
}

TransformationCheck is_transformation(const FrameTransformation& t) {
    TransformationCheck out;
    auto hit = [&](int cond, long long w, std::string d) {
        out.valid = false;
        for (const auto& v : out.violations)
            if (v.condition == cond) return;  // keep the smallest witness
        out.violations.push_back({cond, w, std::move(d)});
    };

    if (t.kind == MK::Explicit) {
        const Frame& s = t.source;
        const Frame& g = t.target;
        // (1) the t-preimage of J1 is I1.
        for (int i = 0; i < s.size(); ++i) {
            const int j = static_cast<int>(t.apply(i));
            const bool lhs = g.in_i1(j);
            const bool rhs = s.in_i1(i);
            if (lhs != rhs) {
                hit(1, i,
                    "vertex " + idx(i) + " is " + (rhs ? "inside" : "outside") +
                        " the source level-one set while t(" + idx(i) + ") = " + idx(j) +
                        " is " + (lhs ? "inside" : "outside") + " the target level-one set");
                break;
            }
        }
        // (2) the t-preimage of kappa(J1) is lambda(I1).
        std::vector<char> in_kappa_j1(static_cast<size_t>(g.size()), 0);
        for (int j : g.i1()) in_kappa_j1[static_cast<size_t>(g.lambda(j))] = 1;
        std::vector<char> in_lambda_i1(static_cast<size_t>(s.size()), 0);
        for (int i : s.i1()) in_lambda_i1[static_cast<size_t>(s.lambda(i))] = 1;
        for (int i = 0; i < s.size(); ++i) {
            const int j = static_cast<int>(t.apply(i));
            const bool lhs = in_kappa_j1[static_cast<size_t>(j)] != 0;
            const bool rhs = in_lambda_i1[static_cast<size_t>(i)] != 0;
            if (lhs != rhs) {
                hit(2, i,
                    "vertex " + idx(i) + " is " + (rhs ? "inside" : "outside") +
                        " the source successor image while t(" + idx(i) + ") = " + idx(j) +
                        " is " + (lhs ? "inside" : "outside") + " the target successor image");
                break;
            }
        }
        // (3) t(lambda(i)) = kappa(t(i)) on I1.
        for (int i : s.i1()) {
            const int j = static_cast<int>(t.apply(i));
            if (!g.in_i1(j)) continue;  // already caught under condition (1)
            const long long lhs = t.apply(s.lambda(i));
            const long long rhs = g.lambda(j);
            if (lhs != rhs) {
                hit(3, i,
                    "vertex " + idx(i) + ": t(lambda(" + idx(i) + ")) = " + idx(lhs) +
                        " but kappa(t(" + idx(i) + ")) = " + idx(rhs));
                break;
            }
        }
        out.note = "exhaustive over all source vertices";
        return out;
    }

    if (t.kind == MK::Shift) {
        if (t.source.kind() == FrameKind::ZShift) {
            out.note =
                "closed form: translation commutes with the successor map, and the "
                "level-one set and its successor image are the whole line on both sides";
        } else if (t.shift == 0) {
            out.note = "closed form: the identity map satisfies all three conditions";
        } else if (t.source.kind() == FrameKind::NForward) {
            hit(2, 0,
                "vertex 0: t(0) = " + idx(t.shift) +
                    " lies inside the target successor image but 0 lies outside the "
                    "source successor image");
            out.note = "closed form: positive translation of the one-sided forward frame";
        } else {
            hit(1, 0,
                "vertex 0: t(0) = " + idx(t.shift) +
                    " lies inside the target level-one set but 0 lies outside the "
                    "source level-one set");
            out.note = "closed form: positive translation of the one-sided backward frame";
        }
        return out;
    }

    out.note =
        "closed form: taking residues commutes with the successor map and every "
        "level-one set involved is full";
    return out;
}

Report lemma_checks(const FrameTransformation& t, int depth) {
    if (depth < 0) throw DomainError("lemma_checks needs depth >= 0");
    Report rep{"transformation-lemmas"};
    const Frame& s = t.source;
    const Frame& g = t.target;
    const bool finite = s.is_finite() && g.is_finite();
    const long long width =
        depth + std::llabs(t.shift) + (g.is_finite() ? g.size() : 0) + 8;
    const std::string window_note =
        "index sets compared in closed form where representable, pointwise on a "
        "window otherwise";

    // The t-preimage of J_n equals I_n for every n <= depth.
    CheckRecord pre{"level-set-preimage"};
    pre.mode = finite ? "exhaustive" : "closed-form";
    for (int n = 0; n <= depth && pre.pass; ++n) {
        const IndexSet want = s.level_set(n);
        const IndexSet tgt = g.level_set(n);
        if (auto got = preimage_set(t, tgt)) {
            ++pre.checked;
            if (!(*got == want)) {
                pre.pass = false;
                pre.witness = "n=" + std::to_string(n) + ": preimage " + got->to_string() +
                              ", level set " + want.to_string();
            }
        } else {
            pre.mode = "window";
            pre.note = window_note;
            for (long long i : frame_window(s, width)) {
                ++pre.checked;
                if (tgt.contains(t.apply(i)) != want.contains(i)) {
                    pre.pass = false;
                    pre.witness = "n=" + std::to_string(n) + ", vertex " + idx(i);
                    break;
                }
            }
        }
    }
    rep.add(pre);

    // lambda^{-1}(i) exists iff kappa^{-1}(t(i)) does, and t carries one to
    // the other.
    CheckRecord inv{"inverse-transport"};
    inv.mode = finite ? "exhaustive" : "window";
    for (long long i : frame_window(s, width)) {
        ++inv.checked;
        const auto a = s.lambda_power_inv(1, i);
        const auto b = g.lambda_power_inv(1, t.apply(i));
        const bool ok = a.has_value() == b.has_value() && (!a || t.apply(*a) == *b);
        if (!ok) {
            inv.pass = false;
            inv.witness = "vertex " + idx(i) + ": source inverse " +
                          (a ? idx(*a) : "none") + ", target inverse " +
                          (b ? idx(*b) : "none");
            break;
        }
    }
    rep.add(inv);

    // i lies in lambda^{m+1}(I_{n+1}) iff i lies in I_{n-m} and
    // lambda^{-1}(i) lies in lambda^m(I_n); checked on both frames.
    CheckRecord recur{"level-image-recursion"};
    recur.mode = finite ? "exhaustive" : "window";
    for (const Frame* fp : {&s, &g}) {
        const Frame& f = *fp;
        const auto dom = frame_window(f, width);
        for (int n = 0; n <= depth && recur.pass; ++n) {
            for (int m = 0; m <= n && recur.pass; ++m) {
                const IndexSet img_next = f.lambda_level_image(m + 1, n + 1);
                const IndexSet lvl = f.level_set(n - m);
                const IndexSet img = f.lambda_level_image(m, n);
                for (long long i : dom) {
                    ++recur.checked;
                    const bool lhs = img_next.contains(i);
                    const auto prev = f.lambda_power_inv(1, i);
                    const bool rhs = lvl.contains(i) && prev && img.contains(*prev);
                    if (lhs != rhs) {
                        recur.pass = false;
                        recur.witness = std::string(fp == &s ? "source" : "target") +
                                        " frame, m=" + std::to_string(m) +
                                        ", n=" + std::to_string(n) + ", vertex " + idx(i);
                        break;
                    }
                }
            }
        }
    }
    rep.add(recur);

    // The t-preimage of kappa^m(J_n) equals lambda^m(I_n) for m <= n <= depth.
    CheckRecord img{"level-image-preimage"};
    img.mode = finite ? "exhaustive" : "closed-form";
    for (int n = 0; n <= depth && img.pass; ++n) {
        for (int m = 0; m <= n && img.pass; ++m) {
            const IndexSet want = s.lambda_level_image(m, n);
            const IndexSet tgt = g.lambda_level_image(m, n);
            if (auto got = preimage_set(t, tgt)) {
                ++img.checked;
                if (!(*got == want)) {
                    img.pass = false;
                    img.witness = "m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                                  ": preimage " + got->to_string() + ", image " +
                                  want.to_string();
                }
            } else {
                img.mode = "window";
                img.note = window_note;
                for (long long i : frame_window(s, width)) {
                    ++img.checked;
                    if (tgt.contains(t.apply(i)) != want.contains(i)) {
                        img.pass = false;
                        img.witness = "m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                                      ", vertex " + idx(i);
                        break;
                    }
                }
            }
        }
    }
    rep.add(img);

    return rep;
}

KiteElement induced_hom(const FrameTransformation& t, const Kite& target_kite,
                        const Kite& source_kite, const KiteElement& x) {
    if (t.kind != MK::Explicit)
        throw DomainError("dense induced maps need an explicit transformation");
    if (!(target_kite.frame() == t.target) || !(source_kite.frame() == t.source))
        throw DomainError("kites do not match the transformation's frames");
    if (!target_kite.valid(x))
        throw StructuralError("input is not a valid target-kite element");
    if (x.level > source_kite.max_level())
        throw DomainError("source kite truncated below the needed level");
    KiteElement out = source_kite.all_e(x.level);
    const auto& labels = source_kite.labels(x.level);
    for (size_t p = 0; p < labels.size(); ++p) {
        const long long j = t.apply(labels[p]);
        const int pos = target_kite.position(x.level, static_cast<int>(j));
        if (pos < 0)
            throw StructuralError("map does not respect level sets: vertex " +
                                  idx(labels[p]) + " lands outside the target level set");
        out.values[p] = x.values[static_cast<size_t>(pos)];
    }
    return out;
}

SparseElement induced_hom(const FrameTransformation& t, const SymbolicKite& target_kite,
                          const SymbolicKite& source_kite, const SparseElement& x) {
    if (t.kind != MK::Shift)
        throw DomainError("sparse induced maps need a shift transformation");
    if (!(target_kite.frame() == t.target) || !(source_kite.frame() == t.source))
        throw DomainError("kites do not match the transformation's frames");
    if (!target_kite.valid(x))
        throw StructuralError("input is not a valid target-kite element");
    SparseElement out;
    out.level = x.level;
    const IndexSet dom = t.source.level_set(x.level);
    for (const auto& [j, v] : x.support) {
        const long long i = j - t.shift;  // the entry at i reads x at t(i) = j
        if (dom.contains(i)) out.support[i] = v;
    }
    return source_kite.normalize(out);
}

PeriodicElement induced_hom(const FrameTransformation& t, const Kite& target_kite,
                            const PeriodicZKite& source_kite, const KiteElement& x) {
    if (t.kind != MK::ModCollapse)
        throw DomainError("periodic induced maps need a mod collapse");
    if (!(target_kite.frame() == t.target))
        throw DomainError("kite does not match the transformation's target frame");
    if (!target_kite.valid(x))
        throw StructuralError("input is not a valid target-kite element");
    const long long m = t.target.size();
    PeriodicElement out;
    out.level = x.level;
    out.period = m;
    out.vals.assign(static_cast<size_t>(m), source_kite.algebra().unit());
    for (long long r = 0; r < m; ++r) {
        const int pos = target_kite.position(x.level, static_cast<int>(r));
        if (pos >= 0) out.vals[static_cast<size_t>(r)] = x.values[static_cast<size_t>(pos)];
    }
    return out;
}

namespace {

// Runs body(x, y) over pairs of target-kite elements with levels <= depth:
// exhaustively when the pair space fits the budget (or samples == 0),
// sampled otherwise.  Returns the mode used and fills `space`.
template <typename Body>
std::string for_element_pairs(const Kite& tk, const RunConfig& cfg, long long& space,
                              Body&& body) {
    const long long total = tk.total_elements(cfg.depth);
    const bool fits = total > 0 && total <= cfg.budget / total;
    space = fits ? total * total : 0;
    if (cfg.samples == 0 || fits) {
        for (long long a = 0; a < total; ++a) {
            const KiteElement x = tk.element_by_rank(a, cfg.depth);
            for (long long b = 0; b < total; ++b)
                body(x, tk.element_by_rank(b, cfg.depth));
        }
        return "exhaustive";
    }
    Rng rng(cfg.seed);
    for (long long i = 0; i < cfg.samples; ++i) {
        const KiteElement x = tk.sample(rng, cfg.depth);
        const KiteElement y = tk.sample(rng, cfg.depth);
        body(x, y);
    }
    return "sampled";
}

constexpr std::array<const char*, 5> kOpNames = {
    "meet-preserved", "join-preserved", "mul-preserved", "ldiv-preserved",
    "rdiv-preserved"};

}  // namespace

Report check_hom(const FrameTransformation& t, const FiniteResLat& g, const RunConfig& cfg) {
    if (cfg.depth < 0) throw DomainError("check_hom needs depth >= 0");
    Report rep{"induced-map-check"};

    const TransformationCheck cond = is_transformation(t);
    CheckRecord crec{"transformation-conditions"};
    crec.checked = 3;
    crec.pass = cond.valid;
    crec.witness = violation_summary(cond);
    crec.note = cond.note;
    rep.add(crec);

    const int lvl = 2 * cfg.depth;  // products of two depth-level elements
    std::array<CheckRecord, 5> ops{};
    for (size_t i = 0; i < ops.size(); ++i) ops[i].name = kOpNames[i];

    if (t.kind == MK::Explicit) {
        const Kite tk(g, t.target, lvl);
        const Kite sk(g, t.source, lvl);

        CheckRecord wd{"well-defined-on-levels"};
        wd.mode = "exhaustive";
        for (int n = 0; n <= lvl && wd.pass; ++n) {
            const IndexSet jn = t.target.level_set(n);
            for (int i : t.source.level_elems(n)) {
                ++wd.checked;
                if (!jn.contains(t.apply(i))) {
                    wd.pass = false;
                    wd.witness = "level " + std::to_string(n) + ", vertex " + idx(i);
                    break;
                }
            }
        }
        rep.add(wd);

        CheckRecord unit{"unit-preserved"};
        unit.checked = 1;
        if (wd.pass) {
            unit.pass = induced_hom(t, tk, sk, tk.top()) == sk.top();
        } else {
            unit.pass = false;
            unit.note = "skipped: the map does not respect level sets";
        }
        rep.add(unit);

        if (wd.pass) {
            long long space = 0;
            auto body = [&](const KiteElement& x, const KiteElement& y) {
                const KiteElement hx = induced_hom(t, tk, sk, x);
                const KiteElement hy = induced_hom(t, tk, sk, y);
                auto step = [&](CheckRecord& r, const KiteElement& whole,
                                const KiteElement& parts) {
                    ++r.checked;
                    if (r.pass && !(induced_hom(t, tk, sk, whole) == parts)) {
                        r.pass = false;
                        r.witness = "x=" + tk.to_string(x) + " y=" + tk.to_string(y);
                    }
                };
                step(ops[0], tk.meet(x, y), sk.meet(hx, hy));
                step(ops[1], tk.join(x, y), sk.join(hx, hy));
                step(ops[2], tk.mul(x, y), sk.mul(hx, hy));
                step(ops[3], tk.ldiv(x, y), sk.ldiv(hx, hy));
                step(ops[4], tk.rdiv(x, y), sk.rdiv(hx, hy));
            };
            const std::string mode = for_element_pairs(tk, cfg, space, body);
            for (auto& r : ops) {
                r.mode = mode;
                r.space = space;
            }
        } else {
            for (auto& r : ops) {
                r.pass = false;
                r.note = "skipped: the map does not respect level sets";
            }
        }
        for (auto& r : ops) rep.add(r);
        return rep;
    }

    if (t.kind == MK::Shift) {
        const SymbolicKite tk(g, t.target);
        const SymbolicKite sk(g, t.source);
        const long long width = lvl + std::llabs(t.shift) + 8;

        CheckRecord wd{"well-defined-on-levels"};
        wd.mode = "window";
        for (int n = 0; n <= lvl && wd.pass; ++n) {
            const IndexSet in_n = t.source.level_set(n);
            const IndexSet jn = t.target.level_set(n);
            for (long long i : frame_window(t.source, width)) {
                if (!in_n.contains(i)) continue;
                ++wd.checked;
                if (!jn.contains(t.apply(i))) {
                    wd.pass = false;
                    wd.witness = "level " + std::to_string(n) + ", vertex " + idx(i);
                    break;
                }
            }
        }
        rep.add(wd);

        CheckRecord unit{"unit-preserved"};
        unit.checked = 1;
        unit.pass = induced_hom(t, tk, sk, tk.top()) == sk.top();
        rep.add(unit);

        const int radius = 2 * cfg.depth + static_cast<int>(std::llabs(t.shift)) + 2;
        Rng rng(cfg.seed);
        for (auto& r : ops) r.mode = "sampled";
        for (long long i = 0; i < cfg.samples; ++i) {
            const SparseElement x = tk.sample(rng, cfg.depth, radius, 3);
            const SparseElement y = tk.sample(rng, cfg.depth, radius, 3);
            const SparseElement hx = induced_hom(t, tk, sk, x);
            const SparseElement hy = induced_hom(t, tk, sk, y);
            auto step = [&](CheckRecord& r, const SparseElement& whole,
                            const SparseElement& parts) {
                ++r.checked;
                if (r.pass && !(induced_hom(t, tk, sk, whole) == parts)) {
                    r.pass = false;
                    r.witness = "x=" + tk.to_string(x) + " y=" + tk.to_string(y);
                }
            };
            step(ops[0], tk.meet(x, y), sk.meet(hx, hy));
            step(ops[1], tk.join(x, y), sk.join(hx, hy));
            step(ops[2], tk.mul(x, y), sk.mul(hx, hy));
            step(ops[3], tk.ldiv(x, y), sk.ldiv(hx, hy));
            step(ops[4], tk.rdiv(x, y), sk.rdiv(hx, hy));
        }
        for (auto& r : ops) rep.add(r);
        return rep;
    }

    // Mod collapse: finite cycle kite on the target side, periodic two-sided
    // elements on the source side.
    const Kite tk(g, t.target, lvl);
    const PeriodicZKite sk(g);

    CheckRecord wd{"well-defined-on-levels"};
    wd.mode = "closed-form";
    wd.checked = lvl + 1;
    wd.note = "every level set involved is the full vertex set";
    rep.add(wd);

    CheckRecord unit{"unit-preserved"};
    unit.checked = 1;
    unit.pass = sk.equal(induced_hom(t, tk, sk, tk.top()), sk.top());
    rep.add(unit);

    long long space = 0;
    auto body = [&](const KiteElement& x, const KiteElement& y) {
        const PeriodicElement hx = induced_hom(t, tk, sk, x);
        const PeriodicElement hy = induced_hom(t, tk, sk, y);
        auto step = [&](CheckRecord& r, const KiteElement& whole, const PeriodicElement& parts) {
            ++r.checked;
            if (r.pass && !sk.equal(induced_hom(t, tk, sk, whole), parts)) {
                r.pass = false;
                r.witness = "x=" + tk.to_string(x) + " y=" + tk.to_string(y);
            }
        };
        step(ops[0], tk.meet(x, y), sk.meet(hx, hy));
        step(ops[1], tk.join(x, y), sk.join(hx, hy));
        step(ops[2], tk.mul(x, y), sk.mul(hx, hy));
        step(ops[3], tk.ldiv(x, y), sk.ldiv(hx, hy));
        step(ops[4], tk.rdiv(x, y), sk.rdiv(hx, hy));
    };
    const std::string mode = for_element_pairs(tk, cfg, space, body);
    for (auto& r : ops) {
        r.mode = mode;
        r.space = space;
        rep.add(r);
    }
    return rep;
}

FrameTransformation compose(const FrameTransformation& outer, const FrameTransformation& inner) {
    if (!(inner.target == outer.source))
        throw DomainError("composition needs the inner target to equal the outer source");
    if (inner.kind == MK::Explicit && outer.kind == MK::Explicit) {
        std::vector<int> table(inner.table.size());
        for (size_t i = 0; i < table.size(); ++i)
            table[i] = outer.table[static_cast<size_t>(inner.table[i])];
        return FrameTransformation::explicit_map(inner.source, outer.target, std::move(table));
    }
    if (inner.kind == MK::Shift && outer.kind == MK::Shift)
        return FrameTransformation::shift_map(inner.source, outer.target,
                                              inner.shift + outer.shift);
    if (inner.kind == MK::Shift && outer.kind == MK::ModCollapse && inner.shift == 0)
        return FrameTransformation::mod_collapse(inner.source, outer.target);
    throw DomainError("unsupported composition of map kinds");
}

Report check_composition(const FrameTransformation& outer, const FrameTransformation& inner,
                         const FiniteResLat& g, const RunConfig& cfg) {
    Report rep{"transformation-composition"};
    const FrameTransformation comp = compose(outer, inner);

    CheckRecord factors{"factors-are-transformations"};
    factors.checked = 2;
    const TransformationCheck ic = is_transformation(inner);
    const TransformationCheck oc = is_transformation(outer);
    factors.pass = ic.valid && oc.valid;
    if (!ic.valid) factors.witness = "inner: " + violation_summary(ic);
    if (!oc.valid)
        factors.witness += (factors.witness.empty() ? "" : "; ") + ("outer: " + violation_summary(oc));
    rep.add(factors);

    CheckRecord closed{"composite-is-transformation"};
    closed.checked = 3;
    const TransformationCheck cc = is_transformation(comp);
    closed.pass = cc.valid;
    closed.witness = violation_summary(cc);
    closed.note = "observed on this instance; composition results are not relied upon elsewhere";
    rep.add(closed);

    CheckRecord agree{"composite-induced-map-agrees"};
    if (comp.kind == MK::Explicit) {
        const Kite fk(g, outer.target, cfg.depth);  // far end: input elements
        const Kite mk(g, outer.source, cfg.depth);
        const Kite nk(g, inner.source, cfg.depth);
        const long long total = fk.total_elements(cfg.depth);
        const bool fits = cfg.samples == 0 || total <= cfg.budget;
        agree.mode = fits ? "exhaustive" : "sampled";
        agree.space = total;
        Rng rng(cfg.seed);
        const long long count = fits ? total : cfg.samples;
        for (long long i = 0; i < count && agree.pass; ++i) {
            const KiteElement x =
                fits ? fk.element_by_rank(i, cfg.depth) : fk.sample(rng, cfg.depth);
            ++agree.checked;
            const KiteElement direct = induced_hom(comp, fk, nk, x);
            const KiteElement chained =
                induced_hom(inner, mk, nk, induced_hom(outer, fk, mk, x));
            if (!(direct == chained)) {
                agree.pass = false;
                agree.witness = "x=" + fk.to_string(x);
            }
        }
    } else if (comp.kind == MK::Shift) {
        const SymbolicKite fk(g, outer.target);
        const SymbolicKite mk(g, outer.source);
        const SymbolicKite nk(g, inner.source);
        agree.mode = "sampled";
        const int radius =
            2 * cfg.depth + static_cast<int>(std::llabs(inner.shift) + std::llabs(outer.shift)) + 2;
        Rng rng(cfg.seed);
        for (long long i = 0; i < cfg.samples && agree.pass; ++i) {
            const SparseElement x = fk.sample(rng, cfg.depth, radius, 3);
            ++agree.checked;
            const SparseElement direct = induced_hom(comp, fk, nk, x);
            const SparseElement chained =
                induced_hom(inner, mk, nk, induced_hom(outer, fk, mk, x));
            if (!(direct == chained)) {
                agree.pass = false;
                agree.witness = "x=" + fk.to_string(x);
            }
        }
    } else {
        agree.mode = "direct";
        agree.pass = false;
        agree.note = "no element representation implemented for this composite kind";
    }
    rep.add(agree);
    return rep;
}

}  // namespace kites
