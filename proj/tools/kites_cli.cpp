// Command-line surface: algebra/frame/map parsing, kite checks, reports.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 input error,
// 3 budget exhausted (partial coverage).
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kites/embed.hpp"
#include "kites/enumerate.hpp"
#include "kites/error.hpp"
#include "kites/filter.hpp"
#include "kites/frame.hpp"
#include "kites/hom.hpp"
#include "kites/io.hpp"
#include "kites/kite.hpp"
#include "kites/lattice.hpp"
#include "kites/report.hpp"
#include "kites/rng.hpp"
#include "kites/symbolic.hpp"

namespace {

using namespace kites;

struct Opts {
    int depth = 2;
    long long samples = 1000;
    std::uint64_t seed = 1;
    int trunc_k = 8;
    long long budget = 1000000;
    int support = 4;
    int lemma_depth = 8;
    std::string format = "text";
    std::string corpus;
};

RunConfig make_cfg(const Opts& o) {
    RunConfig cfg;
    cfg.depth = o.depth;
    cfg.samples = o.samples;
    cfg.seed = o.seed;
    cfg.trunc_k = o.trunc_k;
    cfg.budget = o.budget;
    return cfg;
}

int finish(const Report& rep, const Opts& o) {
    std::cout << (o.format == "records" ? rep.to_records() : rep.to_text());
    if (!rep.pass()) return 1;
    if (rep.truncated) return 3;
    return 0;
}

// --- reference resolution ---------------------------------------------------

std::optional<Frame> builtin_frame(const std::string& name) {
    if (name == "empty") return empty_frame();
    if (name == "loop") return singleton_loop();
    if (name == "tail") return singleton_tail();
    if (name == "z-shift") return Frame::z_shift();
    if (name == "n-forward") return Frame::n_forward();
    if (name == "n-backward") return Frame::n_backward();
    auto suffix_int = [&](const std::string& prefix) -> std::optional<int> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        const std::string digits = name.substr(prefix.size());
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        return std::stoi(digits);
    };
    if (auto k = suffix_int("cycle")) return cycle_frame(*k);
    if (auto k = suffix_int("path")) return path_frame(*k);
    if (auto k = suffix_int("loops")) return loops_frame(*k);
    return std::nullopt;
}

FiniteResLat resolve_lattice(const std::string& ref, const Opts& o) {
    if (ref.rfind("builtin:", 0) == 0) {
        if (auto b = builtin_lattice(ref.substr(8))) return *b;
        throw DomainError("unknown builtin algebra '" + ref.substr(8) + "'");
    }
    if (std::filesystem::exists(ref)) return load_lattice(ref);
    if (!o.corpus.empty()) {
        const auto p = std::filesystem::path(o.corpus) / "lattices" / (ref + ".lat");
        if (std::filesystem::exists(p)) return load_lattice(p.string());
    }
    if (auto b = builtin_lattice(ref)) return *b;
    throw DomainError("cannot resolve algebra reference '" + ref + "'");
}

Frame resolve_frame(const std::string& ref, const Opts& o) {
    if (ref.rfind("builtin:", 0) == 0) {
        if (auto b = builtin_frame(ref.substr(8))) return *b;
        throw DomainError("unknown builtin frame '" + ref.substr(8) + "'");
    }
    if (std::filesystem::exists(ref)) return load_frame(ref);
    if (!o.corpus.empty()) {
        const auto p = std::filesystem::path(o.corpus) / "frames" / (ref + ".frame");
        if (std::filesystem::exists(p)) return load_frame(p.string());
    }
    if (auto b = builtin_frame(ref)) return *b;
    throw DomainError("cannot resolve frame reference '" + ref + "'");
}

MapSpec resolve_map(const std::string& ref, const Opts& o) {
    if (ref == "mod") {
        MapSpec m;
        m.kind = FrameTransformation::MapKind::ModCollapse;
        return m;
    }
    if (ref.rfind("shift:", 0) == 0) {
        MapSpec m;
        m.kind = FrameTransformation::MapKind::Shift;
        m.shift = std::stoll(ref.substr(6));
        return m;
    }
    if (std::filesystem::exists(ref)) return load_map(ref);
    if (!o.corpus.empty()) {
        const auto p = std::filesystem::path(o.corpus) / "maps" / (ref + ".map");
        if (std::filesystem::exists(p)) return load_map(p.string());
    }
    throw DomainError("cannot resolve map reference '" + ref + "'");
}

// --- subcommand bodies -------------------------------------------------------

int run_verify_lattice(const std::string& ref, const Opts& o) {
    const FiniteResLat g = resolve_lattice(ref, o);
    const AxiomReport ax = verify_axioms(g);
    Report rep{"algebra-axioms"};
    for (const auto& l : ax.laws) {
        CheckRecord r{l.law};
        r.mode = "exhaustive";
        r.checked = static_cast<long long>(g.size());
        r.pass = l.pass;
        if (!l.pass) {
            std::string w;
            for (int v : l.witness)
                if (v >= 0) w += (w.empty() ? "" : ",") + std::to_string(v);
            r.witness = w;
            r.note = l.detail;
        }
        rep.add(r);
    }
    if (ax.pass) {
        CheckRecord cls{"classification"};
        cls.mode = "direct";
        cls.checked = 1;
        cls.note = classify_algebra(g).to_string();
        rep.add(cls);
    }
    return finish(rep, o);
}

int run_classify_frame(const std::string& ref, const Opts& o) {
    const Frame f = resolve_frame(ref, o);
    const FrameClass c = classify_frame(f);
    Report rep{"frame-classification"};
    CheckRecord r{"shape"};
    r.mode = "direct";
    r.checked = 1;
    r.witness = to_string(c.tag);
    if (c.tag == FrameTag::Cycle) r.witness += "(" + std::to_string(c.cycle_len) + ")";
    if (c.tag == FrameTag::Path)
        r.witness += "(" + std::to_string(c.path_len) + "," + std::to_string(c.path_len - 1) + ")";
    r.note = std::string(c.si_shape ? "si shape" : "not an si shape");
    if (!c.detail.empty()) r.note += "; " + c.detail;
    rep.add(r);
    CheckRecord cf{"canonical-form"};
    cf.mode = "direct";
    cf.checked = 1;
    cf.witness = canonical_frame_form(f);
    rep.add(cf);
    return finish(rep, o);
}

// Sampled axiom suite for kites over infinite frames.
Report symbolic_suite(const SymbolicKite& k, const RunConfig& cfg) {
    Report rep{"kite-axioms"};
    Rng rng(cfg.seed);
    const int radius = 2 * cfg.depth + 2;
    CheckRecord adj{"residual-adjointness"};
    CheckRecord assoc{"mul-associativity"};
    CheckRecord unit{"unit-laws"};
    for (auto* r : {&adj, &assoc, &unit}) r->mode = "sampled";
    for (long long i = 0; i < cfg.samples; ++i) {
        const SparseElement x = k.sample(rng, cfg.depth, radius, 3);
        const SparseElement y = k.sample(rng, cfg.depth, radius, 3);
        const SparseElement z = k.sample(rng, cfg.depth, radius, 3);
        const std::string w = "x=" + k.to_string(x) + " y=" + k.to_string(y) + " z=" + k.to_string(z);
        ++adj.checked;
        const bool a1 = k.leq(k.mul(x, y), z);
        const bool a2 = k.leq(y, k.ldiv(x, z));
        const bool a3 = k.leq(x, k.rdiv(z, y));
        if (adj.pass && !(a1 == a2 && a2 == a3)) {
            adj.pass = false;
            adj.witness = w;
        }
        ++assoc.checked;
        if (assoc.pass && !(k.mul(k.mul(x, y), z) == k.mul(x, k.mul(y, z)))) {
            assoc.pass = false;
            assoc.witness = w;
        }
        ++unit.checked;
        const SparseElement top = k.top();
        if (unit.pass && !(k.mul(top, x) == x && k.mul(x, top) == x && k.leq(x, top))) {
            unit.pass = false;
            unit.witness = "x=" + k.to_string(x);
        }
    }
    rep.add(adj);
    rep.add(assoc);
    rep.add(unit);
    return rep;
}

int run_kite_check(const std::string& lref, const std::string& fref,
                   const std::vector<std::string>& mul_args,
                   const std::vector<std::string>& ldiv_args,
                   const std::vector<std::string>& rdiv_args, const Opts& o) {
    const FiniteResLat g = resolve_lattice(lref, o);
    const Frame f = resolve_frame(fref, o);
    const RunConfig cfg = make_cfg(o);

    const bool eval_only = !mul_args.empty() || !ldiv_args.empty() || !rdiv_args.empty();
    if (eval_only) {
        if (!f.is_finite())
            throw DomainError("element evaluation needs a finite frame");
        const Kite k(g, f, 3 * cfg.depth);
        auto eval = [&](const char* name, const std::vector<std::string>& args,
                        KiteElement (Kite::*op)(const KiteElement&, const KiteElement&) const) {
            if (args.empty()) return;
            const KiteElement a = parse_element(args[0], k);
            const KiteElement b = parse_element(args[1], k);
            std::cout << name << " " << k.to_string(a) << " " << k.to_string(b) << " = "
                      << k.to_string((k.*op)(a, b)) << "\n";
        };
        eval("mul", mul_args, &Kite::mul);
        eval("ldiv", ldiv_args, &Kite::ldiv);
        eval("rdiv", rdiv_args, &Kite::rdiv);
        return 0;
    }

    if (!f.is_finite()) {
        const SymbolicKite k(g, f);
        return finish(symbolic_suite(k, cfg), o);
    }

    const Kite k(g, f, 3 * cfg.depth);
    Report rep = kite_axiom_suite(k, cfg);
    if (classify_algebra(g).prelinear) {
        rep.merge(prelinearity_transfer_check(k, cfg));
    } else {
        CheckRecord skip{"prelinearity-transfer"};
        skip.mode = "direct";
        skip.note = "skipped: the base algebra is not prelinear";
        if (auto v = find_prelinearity_violation(k, 1, cfg.budget))
            skip.witness = "kite counterexample: " + v->law + " at x=" + k.to_string(v->x) +
                           " y=" + k.to_string(v->y);
        rep.add(skip);
    }
    return finish(rep, o);
}

int run_si_check(const std::string& lref, const std::string& fref, const Opts& o) {
    const FiniteResLat g = resolve_lattice(lref, o);
    const Frame f = resolve_frame(fref, o);
    const SiKiteResult r = is_si_kite(g, f);
    Report rep{"si-check"};
    CheckRecord rec{"si-verdict"};
    rec.mode = r.used_connectivity ? "connectivity" : "direct";
    rec.checked = 1;
    rec.witness = r.si ? "subdirectly irreducible" : "not subdirectly irreducible";
    rec.note = r.reason;
    rep.add(rec);
    return finish(rep, o);
}

int run_decompose(const std::string& lref, const std::string& fref, const Opts& o) {
    const FiniteResLat g = resolve_lattice(lref, o);
    const Frame f = resolve_frame(fref, o);
    if (!f.is_finite()) throw DomainError("decomposition needs a finite frame");
    const RunConfig cfg = make_cfg(o);

    Report rep{"decomposition"};
    const auto comps = connected_components(f);
    CheckRecord shape{"components"};
    shape.mode = "direct";
    shape.checked = static_cast<long long>(comps.size());
    shape.witness = canonical_frame_form(f);
    rep.add(shape);

    std::vector<Kite> small;
    small.reserve(comps.size());
    for (size_t c = 0; c < comps.size(); ++c) {
        const Frame sub = restrict_to_component(f, comps[c]);
        const Kite k(g, sub, 3 * cfg.depth);
        const Report suite = kite_axiom_suite(k, cfg);
        CheckRecord rc{"component-" + std::to_string(c) + "-axioms"};
        rc.mode = "suite";
        rc.pass = suite.pass();
        rc.note = canonical_frame_form(sub);
        for (const auto& s : suite.records) {
            rc.checked += s.checked;
            if (!s.pass && rc.witness.empty()) rc.witness = s.name;
        }
        rep.add(rc);
        small.emplace_back(g, sub, cfg.depth);
    }

    CheckRecord sep{"separation"};
    sep.mode = "sampled";
    if (comps.empty()) {
        sep.note = "empty frame: all levels are singletons, nothing to separate";
    } else if (g.trivial()) {
        sep.note = "trivial algebra: every kite level is a singleton";
    } else {
        const Kite big(g, f, cfg.depth);
        Rng rng(cfg.seed);
        for (long long s = 0; s < cfg.samples; ++s) {
            KiteElement x = big.sample(rng, cfg.depth);
            const auto& labels = big.labels(x.level);
            if (labels.empty()) continue;
            KiteElement y = x;
            const int pos = rng.pick(static_cast<int>(labels.size()));
            y.values[static_cast<size_t>(pos)] =
                (y.values[static_cast<size_t>(pos)] + 1 + rng.pick(g.size() - 1)) % g.size();
            ++sep.checked;
            bool separated = false;
            for (size_t c = 0; c < comps.size() && !separated; ++c)
                separated = !(component_projection(big, comps[c], small[c], x) ==
                              component_projection(big, comps[c], small[c], y));
            if (sep.pass && !separated) {
                sep.pass = false;
                sep.witness = "x=" + big.to_string(x) + " y=" + big.to_string(y);
            }
        }
    }
    rep.add(sep);
    return finish(rep, o);
}

int run_embed_check(const std::string& lref, const std::string& family, const Opts& o,
                    bool depth_given, bool trunc_given) {
    const FiniteResLat g = resolve_lattice(lref, o);
    EmbedCheckConfig ec;
    ec.trunc_k = trunc_given ? o.trunc_k : 12;
    ec.depth = depth_given ? o.depth : 3;
    ec.support = o.support;
    ec.samples = o.samples;
    ec.seed = o.seed;
    Report rep;
    if (family == "phi1")
        rep = check_embedding_phi1(g, ec);
    else if (family == "phi2")
        rep = check_embedding_phi2(g, ec);
    else if (family == "phi3")
        rep = check_embedding_phi3(g, ec);
    else if (family == "approx1")
        rep = check_congruence(ApproxKind::Approx1, g, ec);
    else
        rep = check_congruence(ApproxKind::Approx3, g, ec);
    return finish(rep, o);
}

int run_hom_check(const std::string& sref, const std::string& tref, const std::string& mref,
                  const std::string& lref, const Opts& o) {
    Frame source = resolve_frame(sref, o);
    Frame target = resolve_frame(tref, o);
    const MapSpec spec = resolve_map(mref, o);
    const FrameTransformation t = bind_map(spec, std::move(source), std::move(target));
    const FiniteResLat g = resolve_lattice(lref, o);

    Report rep{"hom-check"};
    rep.merge(check_hom(t, g, make_cfg(o)));
    rep.merge(lemma_checks(t, o.lemma_depth));
    return finish(rep, o);
}

int run_enumerate(const std::string& kind, int n, const Opts& o) {
    Report rep{"enumeration"};
    if (kind == "lattices") {
        // Size 0 is read as the degenerate query: only the trivial algebra.
        const auto all = enumerate_residuated_lattices(n == 0 ? 1 : n);
        CheckRecord head{"count"};
        head.mode = "exhaustive";
        head.checked = static_cast<long long>(all.size());
        head.witness = std::to_string(all.size());
        rep.add(head);
        for (size_t i = 0; i < all.size(); ++i) {
            CheckRecord r{"algebra-" + std::to_string(i)};
            r.mode = "direct";
            r.checked = all[i].size();
            r.note = classify_algebra(all[i]).to_string();
            rep.add(r);
        }
    } else {
        const auto all = enumerate_frames(n);
        CheckRecord head{"count"};
        head.mode = "exhaustive";
        head.checked = static_cast<long long>(all.size());
        head.witness = std::to_string(all.size());
        rep.add(head);
        for (size_t i = 0; i < all.size(); ++i) {
            CheckRecord r{"frame-" + std::to_string(i)};
            r.mode = "direct";
            r.checked = all[i].size();
            r.witness = canonical_frame_form(all[i]);
            r.note = classify_frame(all[i]).si_shape ? "si shape" : "not an si shape";
            rep.add(r);
        }
    }
    return finish(rep, o);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite integral residuated lattices and the kites built over frames"};
    app.require_subcommand(1);

    Opts o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--depth", o.depth, "element level bound");
        sub->add_option("--samples", o.samples,
                        "sampled cases per record (0 forces exhaustive)");
        sub->add_option("--seed", o.seed, "rng seed for sampled modes");
        sub->add_option("--trunc-k", o.trunc_k, "finite-dimensional factor bound");
        sub->add_option("--budget", o.budget, "exhaustive evaluation cap");
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "records"}));
        sub->add_option("--corpus-dir", o.corpus, "directory with lattices/, frames/, maps/");
    };

    std::string lref, fref, mref, family = "phi1", kind = "lattices";
    std::string hom_lref = "builtin:chain2";
    std::vector<std::string> mul_args, ldiv_args, rdiv_args;
    int enum_n = 2;

    auto* verify = app.add_subcommand("verify-lattice", "check the residuated-lattice axioms");
    verify->add_option("lattice", lref, "algebra reference")->required();
    add_common(verify);

    auto* classify = app.add_subcommand("classify-frame", "classify a frame's shape");
    classify->add_option("frame", fref, "frame reference")->required();
    add_common(classify);

    auto* kite = app.add_subcommand("kite-check", "axiom suite for the kite over a frame");
    kite->add_option("lattice", lref, "algebra reference")->required();
    kite->add_option("frame", fref, "frame reference")->required();
    kite->add_option("--mul", mul_args, "evaluate a product of two element literals")
        ->expected(2);
    kite->add_option("--ldiv", ldiv_args, "evaluate a left residual (divisor first)")
        ->expected(2);
    kite->add_option("--rdiv", rdiv_args, "evaluate a right residual (dividend first)")
        ->expected(2);
    add_common(kite);

    auto* si = app.add_subcommand("si-check", "subdirect-irreducibility verdict for a kite");
    si->add_option("lattice", lref, "algebra reference")->required();
    si->add_option("frame", fref, "frame reference")->required();
    add_common(si);

    auto* dec = app.add_subcommand("decompose", "componentwise decomposition of a kite");
    dec->add_option("lattice", lref, "algebra reference")->required();
    dec->add_option("frame", fref, "frame reference")->required();
    add_common(dec);

    auto* emb = app.add_subcommand("embed-check", "finite-dimensional embedding harnesses");
    emb->add_option("lattice", lref, "algebra reference")->required();
    emb->add_option("--family", family, "phi1 | phi2 | phi3 | approx1 | approx3")
        ->check(CLI::IsMember({"phi1", "phi2", "phi3", "approx1", "approx3"}));
    emb->add_option("--support", o.support, "support radius for sampled source elements");
    add_common(emb);

    auto* hom = app.add_subcommand("hom-check", "frame-transformation and induced-map checks");
    hom->add_option("--source", fref, "source frame reference")->required();
    hom->add_option("--target", mref, "target frame reference")->required();
    std::string map_ref;
    hom->add_option("--map", map_ref, "map reference (file, 'mod', or 'shift:<c>')")->required();
    hom->add_option("--lattice", hom_lref, "algebra reference");
    hom->add_option("--lemma-depth", o.lemma_depth, "depth for the supporting-fact checks");
    add_common(hom);

    auto* en = app.add_subcommand("enumerate", "atlas of small algebras or frames");
    en->add_option("--kind", kind, "lattices | frames")
        ->check(CLI::IsMember({"lattices", "frames"}));
    en->add_option("--n", enum_n, "carrier size (lattices) or vertex count (frames)")
        ->required();
    add_common(en);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify_lattice(lref, o);
        if (classify->parsed()) return run_classify_frame(fref, o);
        if (kite->parsed())
            return run_kite_check(lref, fref, mul_args, ldiv_args, rdiv_args, o);
        if (si->parsed()) return run_si_check(lref, fref, o);
        if (dec->parsed()) return run_decompose(lref, fref, o);
        if (emb->parsed())
            return run_embed_check(lref, family, o, emb->count("--depth") > 0,
                                   emb->count("--trunc-k") > 0);
        if (hom->parsed()) return run_hom_check(fref, mref, map_ref, hom_lref, o);
        if (en->parsed()) return run_enumerate(kind, enum_n, o);
    } catch (const ResourceError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
