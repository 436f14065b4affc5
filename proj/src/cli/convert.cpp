#include "logmonoid/cli.hpp"
#include "logmonoid/errors.hpp"

#include <algorithm>
#include <ostream>

namespace logmonoid {
namespace {

void check_kind(const Value& v, std::initializer_list<const char*> kinds) {
    if (v.type != Value::Type::map) v.fail("expected a map");
    const Value* k = v.find("kind");
    if (!k) return;
    for (const char* name : kinds)
        if (k->as_symbol() == name) return;
    std::string expected;
    for (const char* name : kinds) expected += (expected.empty() ? "" : " or ") + std::string(name);
    k->fail("expected kind " + expected + ", got " + k->as_symbol());
}

void check_keys(const Value& v, std::initializer_list<const char*> allowed) {
    for (const auto& [key, val] : v.map) {
        if (key == "kind") continue;
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) == allowed.end())
            v.fail("unknown key '" + key + "'");
    }
}

void check_length(const Value& item, std::size_t n, const char* what) {
    if (item.as_list().size() != n)
        item.fail(std::string(what) + " must have " + std::to_string(n) + " entries");
}

Vector primitive_with_warning(const Value& item, std::ostream& diag) {
    Vector r = item.as_vector();
    if (is_zero(r)) item.fail("ray must be nonzero");
    Vector p = primitive(r);
    if (p != r)
        diag << "warning: line " << item.line << ": ray " << to_string(r) << " primitivized to " << to_string(p)
             << "\n";
    return p;
}

}  // namespace

bool is_presentation(const Value& v) {
    const Value* k = v.find("kind");
    if (k) return k->type == Value::Type::symbol && k->symbol == "monoid-presentation";
    return v.find("ngens") != nullptr;
}

MonoidPresentation load_presentation(const Value& v) {
    check_kind(v, {"monoid-presentation"});
    check_keys(v, {"ngens", "relations"});
    MonoidPresentation p;
    p.ngens = v.at("ngens").as_count();
    if (const Value* rels = v.find("relations")) {
        for (const auto& r : rels->as_list()) {
            if (r.as_list().size() != 2) r.fail("relation must be a pair [u, v]");
            for (const auto& side : r.list) {
                check_length(side, p.ngens, "exponent vector");
                for (const auto& x : side.list)
                    if (sgn(x.as_integer()) < 0) x.fail("exponents must be nonnegative");
            }
            p.relations.emplace_back(r.list[0].as_vector(), r.list[1].as_vector());
        }
    }
    return p;
}

// ambient_rank may be omitted when some listed vector fixes it.
std::size_t ambient_rank_of(const Value& v, std::initializer_list<const char*> keys, std::size_t extra = 0) {
    if (const Value* r = v.find("ambient_rank")) return r->as_count();
    for (const char* key : keys)
        if (const Value* list = v.find(key))
            if (!list->as_list().empty()) {
                const Value& first = list->list.front();
                if (first.as_list().size() < extra) first.fail("vector is too short");
                return first.list.size() - extra;
            }
    return v.at("ambient_rank").as_count();
}

AffineMonoid load_affine_monoid(const Value& v) {
    if (is_presentation(v)) return integralize(load_presentation(v));
    check_kind(v, {"affine-monoid"});
    check_keys(v, {"ambient_rank", "torsion", "generators"});
    Vector torsion;
    if (const Value* t = v.find("torsion")) torsion = t->as_vector();
    const std::size_t n = ambient_rank_of(v, {"generators"}, torsion.size());
    AbelianGroup g;
    try {
        g = AbelianGroup(n, torsion);
    } catch (const DomainError& e) {
        v.at("torsion").fail(e.what());
    }
    std::vector<Vector> gens;
    for (const auto& item : v.at("generators").as_list()) {
        check_length(item, g.dimension(), "generator");
        gens.push_back(item.as_vector());
    }
    return AffineMonoid(g, gens);
}

RationalCone load_cone(const Value& v, std::ostream& diag) {
    check_kind(v, {"cone"});
    check_keys(v, {"ambient_rank", "rays", "lineality", "facet_normals", "equations"});
    const std::size_t n = ambient_rank_of(v, {"rays", "lineality", "facet_normals", "equations"});
    auto vectors = [&](const char* key, bool primitivize) {
        std::vector<Vector> out;
        if (const Value* list = v.find(key))
            for (const auto& item : list->as_list()) {
                check_length(item, n, "vector");
                out.push_back(primitivize ? primitive_with_warning(item, diag) : item.as_vector());
            }
        return out;
    };
    if (v.find("rays") || !v.find("facet_normals")) {
        std::vector<Vector> gens = vectors("rays", true);
        for (const auto& l : vectors("lineality", false)) {
            gens.push_back(l);
            gens.push_back(negate(l));
        }
        return RationalCone::from_generators(n, gens);
    }
    return RationalCone::from_inequalities(n, vectors("facet_normals", false), vectors("equations", false));
}

Fan load_fan(const Value& v, std::ostream& diag) {
    const Value* k = v.find("kind");
    if (k && k->type == Value::Type::symbol && k->symbol == "cone") return Fan::from_cone(load_cone(v, diag));
    check_kind(v, {"fan"});
    check_keys(v, {"ambient_rank", "rays", "cones"});
    const std::size_t n = ambient_rank_of(v, {"rays"});
    std::vector<Vector> rays;
    for (const auto& item : v.at("rays").as_list()) {
        check_length(item, n, "ray");
        rays.push_back(primitive_with_warning(item, diag));
    }
    std::vector<RationalCone> cones;
    for (const auto& c : v.at("cones").as_list()) {
        std::vector<Vector> gens;
        for (const auto& idx : c.as_list()) {
            const Integer& i = idx.as_integer();
            if (sgn(i) < 0 || i >= static_cast<unsigned long>(rays.size())) idx.fail("ray index out of range");
            gens.push_back(rays[i.get_ui()]);
        }
        RationalCone cone = RationalCone::from_generators(n, gens);
        if (cone.rays().size() != gens.size() || !cone.lineality().empty())
            c.fail("listed rays are not the extremal rays of a strongly convex cone");
        cones.push_back(std::move(cone));
    }
    return Fan::from_cones(n, cones);
}

MonoidHom load_hom(const Value& v) {
    check_kind(v, {"hom"});
    check_keys(v, {"source", "target", "images"});
    AffineMonoid source = load_affine_monoid(v.at("source"));
    AffineMonoid target = load_affine_monoid(v.at("target"));
    const Value& images = v.at("images");
    if (images.as_list().size() != source.generators().size())
        images.fail("need one image per source generator");
    std::vector<Vector> ys;
    for (const auto& item : images.list) {
        check_length(item, target.ambient().dimension(), "image");
        ys.push_back(item.as_vector());
    }
    return MonoidHom(source, target, ys);
}

Value to_value(const AbelianGroup& g) {
    Value v;
    v.set("free_rank", Value::of(g.free_rank()));
    v.set("torsion", Value::of(g.invariant_factors()));
    return v;
}

Value to_value(const AffineMonoid& m) {
    Value v;
    v.set("kind", Value::sym("affine-monoid"));
    v.set("ambient_rank", Value::of(m.ambient().free_rank()));
    v.set("torsion", Value::of(m.ambient().invariant_factors()));
    v.set("generators", Value::of(m.canonical_generators()));
    return v;
}

Value to_value(const MonoidPresentation& p) {
    std::vector<Vector> flat;
    for (const auto& [a, b] : p.relations) {
        Vector w = a;
        w.insert(w.end(), b.begin(), b.end());
        flat.push_back(std::move(w));
    }
    sort_unique(flat);
    std::vector<Value> rels;
    for (const auto& w : flat) {
        Vector a(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p.ngens));
        Vector b(w.begin() + static_cast<std::ptrdiff_t>(p.ngens), w.end());
        rels.push_back(Value::list_of({Value::of(a), Value::of(b)}));
    }
    Value v;
    v.set("kind", Value::sym("monoid-presentation"));
    v.set("ngens", Value::of(p.ngens));
    v.set("relations", Value::list_of(std::move(rels)));
    return v;
}

Value to_value(const RationalCone& c) {
    Value v;
    v.set("kind", Value::sym("cone"));
    v.set("ambient_rank", Value::of(c.ambient_rank()));
    v.set("rays", Value::of(c.rays()));
    v.set("lineality", Value::of(c.lineality()));
    v.set("facet_normals", Value::of(c.facet_normals()));
    v.set("equations", Value::of(c.equations()));
    return v;
}

Value to_value(const Fan& f) {
    Value v;
    v.set("kind", Value::sym("fan"));
    v.set("ambient_rank", Value::of(f.ambient_rank()));
    v.set("rays", Value::of(f.rays()));
    std::vector<Value> cones;
    for (const auto& c : f.cones()) {
        std::vector<Value> idx;
        for (std::size_t i : c) idx.push_back(Value::of(i));
        cones.push_back(Value::list_of(std::move(idx)));
    }
    v.set("cones", Value::list_of(std::move(cones)));
    return v;
}

}  // namespace logmonoid
