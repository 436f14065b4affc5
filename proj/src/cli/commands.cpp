#include "logmonoid/cli.hpp"
#include "logmonoid/errors.hpp"
#include "logmonoid/hilbert.hpp"
#include "logmonoid/hom_analysis.hpp"
#include "logmonoid/nonneg.hpp"
#include "logmonoid/smith.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace logmonoid {
namespace {

struct Context {
    const CliOptions& options;
    const std::vector<Value>& docs;
    std::ostream& diag;

    const Value& doc(std::size_t i) const { return docs[i]; }
    void verified(const std::string& what) const { diag << "verify: " << what << "\n"; }
};

using Handler = std::function<Value(const Context&)>;

struct Command {
    std::size_t min_docs, max_docs;
    Handler run;
};

Value with_kind(const char* kind) {
    Value v;
    v.set("kind", Value::sym(kind));
    return v;
}

std::vector<Vector> select(const std::vector<Vector>& gens, const std::vector<std::size_t>& idx) {
    std::vector<Vector> out;
    for (std::size_t i : idx) out.push_back(gens[i]);
    sort_unique(out);
    return out;
}

// Lattice points of c with coordinates in [-bound, bound].
std::vector<Vector> box_points(const RationalCone& c, long bound) {
    const std::size_t n = c.ambient_rank();
    std::vector<Vector> out;
    Vector x(n, Integer(-bound));
    for (;;) {
        if (c.contains(x)) out.push_back(x);
        std::size_t i = 0;
        while (i < n && x[i] == bound) x[i++] = -bound;
        if (i == n) break;
        ++x[i];
    }
    return out;
}

void check(bool ok, const std::string& what) {
    if (!ok) throw InternalError("verification failed: " + what);
}

// ---- monoids ----------------------------------------------------------------

Value cmd_gp(const Context& ctx) {
    Value out = with_kind("group");
    if (is_presentation(ctx.doc(0))) {
        GroupImages g = grothendieck_group(load_presentation(ctx.doc(0)));
        out.set("free_rank", Value::of(g.group.free_rank()));
        out.set("torsion", Value::of(g.group.invariant_factors()));
        out.set("images", Value::of(g.images));
        return out;
    }
    AffineMonoid m = load_affine_monoid(ctx.doc(0));
    Subgroup gp = m.gp();
    std::vector<Vector> images;
    for (std::size_t i = 0; i < m.generators().size(); ++i) images.push_back(gp.generator_image(i));
    out.set("free_rank", Value::of(gp.group().free_rank()));
    out.set("torsion", Value::of(gp.group().invariant_factors()));
    out.set("images", Value::of(images));
    return out;
}

Value cmd_int(const Context& ctx) {
    AffineMonoid m = load_affine_monoid(ctx.doc(0));
    if (ctx.options.verify && is_presentation(ctx.doc(0))) {
        MonoidPresentation p = load_presentation(ctx.doc(0));
        GroupImages g = grothendieck_group(p);
        for (const auto& [u, v] : p.relations) {
            Vector a = g.group.zero(), b = g.group.zero();
            for (std::size_t i = 0; i < p.ngens; ++i) {
                a = add(a, scale(u[i], g.images[i]));
                b = add(b, scale(v[i], g.images[i]));
            }
            check(g.group.reduce(a) == g.group.reduce(b), "relation holds in the group");
        }
        ctx.verified("relations hold after integralization");
    }
    return to_value(m);
}

Value cmd_sat(const Context& ctx) {
    AffineMonoid m = load_affine_monoid(ctx.doc(0));
    AffineMonoid s = saturate(m);
    if (ctx.options.verify) {
        check(contains_monoid(s, m), "saturation contains the monoid");
        Subgroup gp = m.gp();
        RationalCone c = m.cone();
        for (const auto& g : s.generators()) {
            check(gp.contains(g), "saturation generator lies in the group");
            Vector free(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(m.ambient().free_rank()));
            check(c.contains(free), "saturation generator lies in the cone");
            // Some multiple up to the group exponent times the cone index lies in M.
            bool found = false;
            for (long k = 1; k <= 64 && !found; ++k) found = m.contains(m.ambient().reduce(scale(Integer(k), g)));
            if (found) continue;
            ctx.diag << "verify: no multiple up to 64 of " << to_string(g) << " found in the monoid\n";
        }
        ctx.verified("saturation is contained in the divisible hull and contains the monoid");
    }
    return to_value(s);
}

Value cmd_sharpen(const Context& ctx) {
    AffineMonoid m = load_affine_monoid(ctx.doc(0));
    AffineMonoid s = minimal_generators(sharpen(m));
    if (ctx.options.verify) {
        check(is_sharp(s), "sharpening is sharp");
        ctx.verified("sharpening is sharp");
    }
    return to_value(s);
}

Value cmd_spec(const Context& ctx) {
    AffineMonoid m = minimal_generators(load_affine_monoid(ctx.doc(0)));
    auto faces = spec(m);
    if (ctx.options.verify) {
        // Face axiom on generators: a + b in F forces a, b in F, tested on pairs.
        for (const auto& f : faces) {
            std::vector<Vector> fg = select(m.generators(), f.generator_indices);
            AffineMonoid face(m.ambient(), fg);
            for (std::size_t i = 0; i < m.generators().size(); ++i) {
                bool inside = std::find(f.generator_indices.begin(), f.generator_indices.end(), i) !=
                              f.generator_indices.end();
                check(inside || !face.contains(m.generators()[i]), "face is closed under summands");
            }
        }
        ctx.verified("face axiom holds for every listed face");
    }
    std::vector<Value> primes;
    for (const auto& f : faces) {
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < m.generators().size(); ++i)
            if (std::find(f.generator_indices.begin(), f.generator_indices.end(), i) == f.generator_indices.end())
                rest.push_back(i);
        Value p;
        p.set("face", Value::of(select(m.generators(), f.generator_indices)));
        p.set("ideal", Value::of(select(m.generators(), rest)));
        primes.push_back(std::move(p));
    }
    Value out = with_kind("spec");
    out.set("count", Value::of(faces.size()));
    out.set("primes", Value::list_of(std::move(primes)));
    return out;
}

Value cmd_props(const Context& ctx) {
    AffineMonoid m = load_affine_monoid(ctx.doc(0));
    MonoidPredicates p = predicates(m);
    Value out = with_kind("predicates");
    out.set("fine", Value::of(true));
    out.set("is_sharp", Value::of(p.is_sharp));
    out.set("is_saturated", Value::of(p.is_saturated));
    out.set("is_toric", Value::of(p.is_toric));
    out.set("is_free", Value::of(p.is_free));
    return out;
}

Value cmd_rank(const Context& ctx) {
    AffineMonoid m = load_affine_monoid(ctx.doc(0));
    Value out = with_kind("rank");
    out.set("characteristic_rank", Value::of(characteristic_rank(m)));
    return out;
}

// ---- pushouts and fiber products ----------------------------------------------

PushoutMode parse_mode(const std::string& s) {
    if (s == "presentation") return PushoutMode::presentation;
    if (s == "fine") return PushoutMode::fine;
    if (s == "fs") return PushoutMode::fs;
    throw std::invalid_argument("unknown mode '" + s + "' (expected presentation, fine or fs)");
}

std::vector<Vector> image_list(const Value& v, std::size_t count, std::size_t length) {
    if (v.as_list().size() != count) v.fail("need one image per base generator");
    std::vector<Vector> out;
    for (const auto& item : v.list) {
        if (item.as_list().size() != length) item.fail("image has the wrong length");
        out.push_back(item.as_vector());
    }
    return out;
}

void verify_pushout(const Context& ctx, const MonoidHom& f, const MonoidHom& g, const AffineMonoid& fine) {
    // The two legs agree on L: the images of f(l) and g(l) coincide.
    const std::size_t a = f.target().generators().size();
    for (std::size_t i = 0; i < f.images().size(); ++i) {
        auto u = f.target().witness(f.images()[i]);
        auto w = g.target().witness(g.images()[i]);
        check(u && w, "leg images lie in the targets");
        Vector x = fine.ambient().zero(), y = fine.ambient().zero();
        for (std::size_t j = 0; j < u->size(); ++j) x = add(x, scale((*u)[j], fine.generators()[j]));
        for (std::size_t j = 0; j < w->size(); ++j) y = add(y, scale((*w)[j], fine.generators()[a + j]));
        check(fine.ambient().reduce(x) == fine.ambient().reduce(y), "square commutes");
    }
    ctx.verified("pushout square commutes");
}

Value pushout_from_homs(const Context& ctx, const MonoidHom& f, const MonoidHom& g) {
    PushoutMode mode = parse_mode(ctx.options.mode);
    if (mode == PushoutMode::presentation) return to_value(pushout_presentation(f, g));
    if (ctx.options.verify) verify_pushout(ctx, f, g, pushout(f, g, PushoutMode::fine));
    return to_value(pushout(f, g, mode));
}

Value cmd_pushout(const Context& ctx) {
    if (ctx.docs.size() == 2) return pushout_from_homs(ctx, load_hom(ctx.doc(0)), load_hom(ctx.doc(1)));
    const Value& req = ctx.doc(0);
    const Value* kind = req.find("kind");
    if (!kind || kind->as_symbol() != "pushout-request") req.fail("expected kind pushout-request");
    for (const auto& [key, val] : req.map)
        if (key != "kind" && key != "base" && key != "left" && key != "right" && key != "left_map" &&
            key != "right_map")
            req.fail("unknown key '" + key + "'");
    PushoutMode mode = parse_mode(ctx.options.mode);
    const Value &base = req.at("base"), &left = req.at("left"), &right = req.at("right");
    const bool any_presented = is_presentation(base) || is_presentation(left) || is_presentation(right);
    if (mode != PushoutMode::presentation && any_presented)
        throw DomainError(ErrorCode::not_affine, "fine and fs pushouts need affine monoids");
    if (!any_presented) {
        AffineMonoid l = load_affine_monoid(base), m = load_affine_monoid(left), n = load_affine_monoid(right);
        MonoidHom f(l, m, image_list(req.at("left_map"), l.generators().size(), m.ambient().dimension()));
        MonoidHom g(l, n, image_list(req.at("right_map"), l.generators().size(), n.ambient().dimension()));
        return pushout_from_homs(ctx, f, g);
    }
    // Presentation mode with presented legs: images are exponent vectors there.
    const std::size_t lgens =
        is_presentation(base) ? load_presentation(base).ngens : load_affine_monoid(base).generators().size();
    auto side = [&](const Value& mon, const Value& map, std::vector<Vector>& exps) {
        if (is_presentation(mon)) {
            MonoidPresentation p = load_presentation(mon);
            exps = image_list(map, lgens, p.ngens);
            for (const auto& e : exps)
                for (const auto& x : e)
                    if (sgn(x) < 0) map.fail("exponents must be nonnegative");
            return p;
        }
        AffineMonoid m = load_affine_monoid(mon);
        for (const auto& y : image_list(map, lgens, m.ambient().dimension())) {
            auto w = m.witness(y);
            if (!w) throw DomainError(ErrorCode::not_a_homomorphism,
                                      "not a homomorphism: image " + to_string(y) + " is outside the target");
            exps.push_back(*w);
        }
        return presentation(m);
    };
    std::vector<Vector> fe, ge;
    MonoidPresentation pm = side(left, req.at("left_map"), fe);
    MonoidPresentation pn = side(right, req.at("right_map"), ge);
    return to_value(pushout_presentation(pm, pn, fe, ge));
}

Value cmd_fiber(const Context& ctx) {
    MonoidHom f = load_hom(ctx.doc(0)), g = load_hom(ctx.doc(1));
    AffineMonoid fp = fiber_product(f, g);
    if (ctx.options.verify) {
        // Every exponent pair up to 3 solving f = g is reached.
        const std::size_t a = f.images().size(), b = g.images().size();
        const AbelianGroup& l = f.target().ambient();
        DirectSum ds = direct_sum(f.source().ambient(), g.source().ambient());
        Vector e(a + b);
        for (;;) {
            Vector x = l.zero(), m = f.source().ambient().zero(), n = g.source().ambient().zero();
            for (std::size_t j = 0; j < a; ++j) {
                x = add(x, scale(e[j], f.images()[j]));
                m = add(m, scale(e[j], f.source().generators()[j]));
            }
            for (std::size_t j = 0; j < b; ++j) {
                x = sub(x, scale(e[a + j], g.images()[j]));
                n = add(n, scale(e[a + j], g.source().generators()[j]));
            }
            if (l.is_zero_element(x))
                check(fp.contains(ds.group.reduce(add(ds.left.apply(m), ds.right.apply(n)))),
                      "fiber product contains every solution");
            std::size_t i = 0;
            while (i < e.size() && e[i] == 3) e[i++] = 0;
            if (i == e.size()) break;
            ++e[i];
        }
        ctx.verified("all solutions with exponents up to 3 are generated");
    }
    return to_value(fp);
}

// ---- cones and fans -------------------------------------------------------------

Value cmd_dual(const Context& ctx) {
    RationalCone c = load_cone(ctx.doc(0), ctx.diag);
    RationalCone d = c.dual();
    if (ctx.options.verify) {
        check(d.dual() == c, "dual is an involution");
        for (const auto& x : box_points(c, 2))
            for (const auto& y : d.generators()) check(sgn(dot(x, y)) >= 0, "dual pairs nonnegatively");
        ctx.verified("duality checked on lattice points of the box [-2,2]");
    }
    return to_value(d);
}

Value cmd_faces(const Context& ctx) {
    RationalCone c = load_cone(ctx.doc(0), ctx.diag);
    auto fs = faces(c);
    std::vector<Value> items;
    for (const auto& f : fs) {
        Value v;
        v.set("dimension", Value::of(f.dimension()));
        v.set("rays", Value::of(f.rays()));
        items.push_back(std::move(v));
    }
    Value out = with_kind("faces");
    out.set("count", Value::of(fs.size()));
    out.set("faces", Value::list_of(std::move(items)));
    return out;
}

Value cmd_hilbert(const Context& ctx) {
    RationalCone c = load_cone(ctx.doc(0), ctx.diag);
    auto hb = hilbert_basis(c);
    if (ctx.options.verify) {
        for (const auto& x : hb)
            for (const auto& y : hb)
                if (x != y) check(!c.contains(sub(x, y)), "basis element is irreducible");
        Matrix a = Matrix::from_columns(c.ambient_rank(), hb);
        for (const auto& x : box_points(c, 4)) check(solve_nonneg(a, x).has_value(), "lattice point is generated");
        ctx.verified("irreducibility and generation on the box [-4,4]");
    }
    Value out = with_kind("hilbert-basis");
    out.set("ambient_rank", Value::of(c.ambient_rank()));
    out.set("elements", Value::of(hb));
    return out;
}

Value cmd_regular(const Context& ctx) {
    RationalCone c = load_cone(ctx.doc(0), ctx.diag);
    Value out = with_kind("regularity");
    out.set("simplicial", Value::of(c.is_simplicial()));
    out.set("regular", Value::of(is_regular(c)));
    if (c.is_simplicial()) out.set("multiplicity", Value::of(multiplicity(c)));
    return out;
}

Value cmd_mult(const Context& ctx) {
    RationalCone c = load_cone(ctx.doc(0), ctx.diag);
    Value out = with_kind("multiplicity");
    out.set("multiplicity", Value::of(multiplicity(c)));
    return out;
}

void verify_refinement(const Context& ctx, const Fan& input, const Fan& output) {
    auto in_cones = input.cone_list();
    for (const auto& c : output.cone_list()) {
        bool inside = false;
        for (const auto& d : in_cones) {
            bool all = true;
            for (const auto& r : c.rays()) all = all && d.contains(r);
            inside = inside || all;
        }
        check(inside, "output cone lies in an input cone");
    }
    for (const auto& d : in_cones)
        for (const auto& x : box_points(d, 3)) check(output.support_contains(x), "support is preserved");
    ctx.verified("refinement and support checked on the box [-3,3]");
}

Value cmd_resolve(const Context& ctx) {
    Fan f = load_fan(ctx.doc(0), ctx.diag);
    Fan r = resolve(f);
    if (ctx.options.verify) {
        check(r.is_regular(), "every cone is regular");
        verify_refinement(ctx, f, r);
    }
    return to_value(r);
}

Value cmd_barycentric(const Context& ctx) {
    Fan f = load_fan(ctx.doc(0), ctx.diag);
    Fan r = barycentric_subdivision(f);
    if (ctx.options.verify) {
        check(r.is_simplicial(), "every cone is simplicial");
        verify_refinement(ctx, f, r);
    }
    return to_value(r);
}

// ---- blowups ---------------------------------------------------------------------

struct BlowupInput {
    std::optional<RationalCone> cone;
    MonoidIdeal ideal;
};

BlowupInput load_blowup(const Context& ctx) {
    const Value& v = ctx.doc(0);
    const Value* kind = v.find("kind");
    const std::string k = kind ? kind->as_symbol() : "";
    BlowupInput in;
    if (k == "blowup-request") {
        for (const auto& [key, val] : v.map)
            if (key != "kind" && key != "cone" && key != "generators") v.fail("unknown key '" + key + "'");
        in.cone = load_cone(v.at("cone"), ctx.diag);
        in.ideal.host = monoid_of_cone(*in.cone);
    } else if (k == "ideal") {
        for (const auto& [key, val] : v.map)
            if (key != "kind" && key != "host" && key != "generators") v.fail("unknown key '" + key + "'");
        in.ideal.host = load_affine_monoid(v.at("host"));
    } else {
        v.fail("expected kind ideal or blowup-request");
    }
    const Value& gens = v.at("generators");
    if (gens.type == Value::Type::symbol) {
        if (gens.symbol != "maximal") gens.fail("expected a list of generators or the symbol maximal");
        in.ideal = maximal_ideal(in.ideal.host);
    } else {
        for (const auto& item : gens.as_list()) {
            if (item.as_list().size() != in.ideal.host.ambient().dimension()) item.fail("generator has the wrong length");
            in.ideal.generators.push_back(item.as_vector());
        }
    }
    return in;
}

Value cmd_blowup(const Context& ctx) {
    BlowupInput in = load_blowup(ctx);
    auto charts = blowup_charts(in.ideal);
    if (ctx.options.verify) {
        check(idempotence_check(in.ideal), "blowing up again changes nothing");
        ctx.verified("pulled-back ideals are principal and re-blowups are trivial");
    }
    std::vector<Value> items;
    for (const auto& c : charts) {
        Value v;
        v.set("center", Value::of(c.center));
        v.set("fine", Value::of(c.fine.canonical_generators()));
        v.set("fs", Value::of(c.fs.canonical_generators()));
        items.push_back(std::move(v));
    }
    Value out = with_kind("blowup-charts");
    out.set("ambient_rank", Value::of(in.ideal.host.ambient().free_rank()));
    out.set("torsion", Value::of(in.ideal.host.ambient().invariant_factors()));
    out.set("ideal", Value::of(reduce_ideal(in.ideal).generators));
    out.set("charts", Value::list_of(std::move(items)));
    return out;
}

Value cmd_blowup_fan(const Context& ctx) {
    BlowupInput in = load_blowup(ctx);
    if (!in.cone) ctx.doc(0).fail("blowup-fan needs a blowup-request with a cone");
    BlowupFan bf = blowup_fan(*in.cone, in.ideal);
    if (ctx.options.verify) {
        auto charts = blowup_charts(in.ideal);
        for (std::size_t i = 0; i < charts.size(); ++i)
            check(same_subset(monoid_of_cone(bf.chart_cones[i]), charts[i].fs), "chart cone is dual to the fs chart");
        verify_refinement(ctx, Fan::from_cone(*in.cone), bf.fan);
    }
    Value out = to_value(bf.fan);
    out.set("kind", Value::sym("blowup-fan"));
    std::vector<Value> items;
    for (std::size_t i = 0; i < bf.centers.size(); ++i) {
        Value v;
        v.set("center", Value::of(bf.centers[i]));
        v.set("rays", Value::of(bf.chart_cones[i].rays()));
        items.push_back(std::move(v));
    }
    out.set("charts", Value::list_of(std::move(items)));
    return out;
}

// ---- homomorphisms ----------------------------------------------------------------

Value cmd_hom_check(const Context& ctx) {
    MonoidHom phi = load_hom(ctx.doc(0));
    SmoothnessVerdict v = kato_criterion(phi, ctx.options.characteristic);
    if (ctx.options.verify) {
        check(!v.etale || v.smooth, "etale implies smooth");
        GroupHom h = phi.gp_map();
        check(cokernel(h) == v.coker && kernel(h) == v.ker, "kernel and cokernel agree with the gp map");
        ctx.verified("verdict consistent");
    }
    Value out = with_kind("smoothness");
    out.set("residue_char", Value::of(v.residue_char));
    out.set("smooth", Value::of(v.smooth));
    out.set("etale", Value::of(v.etale));
    out.set("ker", to_value(v.ker));
    out.set("coker", to_value(v.coker));
    out.set("ker_order", v.ker.is_finite() ? Value::of(torsion_order(v.ker)) : Value::sym("infinite"));
    out.set("coker_torsion", Value::of(torsion_order(v.coker)));
    out.set("gp_injective", Value::of(v.gp_injective));
    out.set("kernel_meets_monoid", Value::of(v.kernel_meets_monoid));
    out.set("scope", Value::sym("monoid-side"));
    return out;
}

Value cmd_kummer(const Context& ctx) {
    MonoidHom phi = load_hom(ctx.doc(0));
    Value out = with_kind("kummer");
    out.set("kummer", Value::of(is_kummer(phi)));
    return out;
}

Value cmd_neat(const Context& ctx) {
    MonoidHom phi = load_hom(ctx.doc(0));
    Value out = with_kind("neat-chart");
    out.set("residue_char", Value::of(ctx.options.characteristic));
    out.set("class", Value::sym(to_string(neat_chart_class(phi, ctx.options.characteristic))));
    out.set("coker", to_value(gp_cokernel(phi)));
    return out;
}

Value cmd_diff_rank(const Context& ctx) {
    MonoidHom phi = load_hom(ctx.doc(0));
    std::size_t r = differential_rank(phi, ctx.options.characteristic);
    if (ctx.options.verify) {
        // Direct count: invariant factors of Coker ⊗ F_p from the Smith form.
        AbelianGroup c = gp_cokernel(phi);
        std::size_t direct = c.free_rank();
        if (sgn(ctx.options.characteristic) != 0)
            for (const auto& d : c.invariant_factors())
                if (mpz_divisible_p(d.get_mpz_t(), ctx.options.characteristic.get_mpz_t())) ++direct;
        check(direct == r, "rank matches the invariant factors");
        ctx.verified("rank matches the invariant factors");
    }
    Value out = with_kind("differential-rank");
    out.set("residue_char", Value::of(ctx.options.characteristic));
    out.set("rank", Value::of(r));
    return out;
}

Value cmd_diff_pres(const Context& ctx) {
    MonoidHom phi = load_hom(ctx.doc(0));
    DifferentialPresentation d = universal_differential_presentation(phi, ctx.options.characteristic);
    if (ctx.options.verify) {
        Matrix rel = Matrix::from_columns(d.symbols, d.relations);
        AbelianGroup direct = d.symbols == 0 ? AbelianGroup() : cokernel(rel);
        check(direct == d.reduced, "relations present the cokernel");
        ctx.verified("relations present Coker(phi^gp)");
    }
    std::vector<Value> symbols;
    for (std::size_t i = 0; i < d.symbols; ++i) symbols.push_back(Value::sym("dlog_q" + std::to_string(i)));
    Value out = with_kind("differential-presentation");
    out.set("residue_char", Value::of(ctx.options.characteristic));
    out.set("symbols", Value::list_of(std::move(symbols)));
    out.set("relations", Value::of(d.relations));
    out.set("reduced", to_value(d.reduced));
    out.set("rank", Value::of(d.rank));
    out.set("ring_part", Value::sym("symbolic"));
    return out;
}

Value cmd_relchar(const Context& ctx) {
    return to_value(relative_characteristic(load_hom(ctx.doc(0))));
}

const std::map<std::string, Command>& commands() {
    static const std::map<std::string, Command> table{
        {"gp", {1, 1, cmd_gp}},
        {"int", {1, 1, cmd_int}},
        {"sat", {1, 1, cmd_sat}},
        {"sharpen", {1, 1, cmd_sharpen}},
        {"spec", {1, 1, cmd_spec}},
        {"props", {1, 1, cmd_props}},
        {"rank", {1, 1, cmd_rank}},
        {"pushout", {1, 2, cmd_pushout}},
        {"fiber", {2, 2, cmd_fiber}},
        {"dual", {1, 1, cmd_dual}},
        {"faces", {1, 1, cmd_faces}},
        {"hilbert", {1, 1, cmd_hilbert}},
        {"regular", {1, 1, cmd_regular}},
        {"mult", {1, 1, cmd_mult}},
        {"resolve", {1, 1, cmd_resolve}},
        {"barycentric", {1, 1, cmd_barycentric}},
        {"blowup", {1, 1, cmd_blowup}},
        {"blowup-fan", {1, 1, cmd_blowup_fan}},
        {"hom-check", {1, 1, cmd_hom_check}},
        {"kummer", {1, 1, cmd_kummer}},
        {"neat", {1, 1, cmd_neat}},
        {"diff-rank", {1, 1, cmd_diff_rank}},
        {"diff-pres", {1, 1, cmd_diff_pres}},
        {"relchar", {1, 1, cmd_relchar}},
    };
    return table;
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace

std::vector<std::string> command_names() {
    std::vector<std::string> out;
    for (const auto& [name, cmd] : commands()) out.push_back(name);
    return out;
}

Value run_command(const CliOptions& options, const std::vector<Value>& docs, std::ostream& diag) {
    auto it = commands().find(options.command);
    if (it == commands().end()) throw UsageError("unknown command '" + options.command + "'");
    const Command& cmd = it->second;
    if (docs.size() < cmd.min_docs || docs.size() > cmd.max_docs)
        throw UsageError("command '" + options.command + "' takes " + std::to_string(cmd.min_docs) +
                         (cmd.max_docs > cmd.min_docs ? "-" + std::to_string(cmd.max_docs) : "") + " input file(s)");
    if (options.command == "pushout") {
        try {
            parse_mode(options.mode);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return cmd.run(Context{options, docs, diag});
}

int run_cli(const CliOptions& options, const std::vector<std::string>& files,
            const std::optional<std::string>& out_file, std::ostream& out, std::ostream& err) {
    try {
        std::vector<Value> docs;
        for (const auto& path : files) {
            std::ifstream in(path);
            if (!in) {
                err << "error: cannot read " << path << "\n";
                return exit_usage;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            try {
                docs.push_back(parse_document(buf.str()));
            } catch (const InputError& e) {
                err << "error: " << path << ": " << e.what() << "\n";
                return exit_usage;
            }
        }
        check_characteristic(options.characteristic);
        std::string text;
        try {
            text = emit_document(run_command(options, docs, err));
        } catch (const InputError& e) {
            err << "error: " << (files.size() == 1 ? files[0] + ": " : std::string()) << e.what() << "\n";
            return exit_usage;
        }
        if (out_file) {
            std::ofstream o(*out_file, std::ios::binary);
            if (!o) {
                err << "error: cannot write " << *out_file << "\n";
                return exit_usage;
            }
            o << text;
        } else {
            out << text;
        }
        return exit_ok;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

}  // namespace logmonoid
