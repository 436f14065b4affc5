// Acceptance runner: one PASS/FAIL line per criterion.
// Usage: acceptance <path to logmonoid> <golden dir>

#include "oracles.hpp"

#include "logmonoid/blowup.hpp"
#include "logmonoid/errors.hpp"
#include "logmonoid/fan.hpp"
#include "logmonoid/hilbert.hpp"
#include "logmonoid/hom_analysis.hpp"
#include "logmonoid/smith.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace logmonoid;
using namespace logmonoid::testing;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

AffineMonoid free_monoid(std::size_t n) {
    std::vector<Vector> g;
    for (std::size_t i = 0; i < n; ++i) g.push_back(unit_vector(n, i));
    return AffineMonoid(AbelianGroup::free(n), g);
}

AffineMonoid mon(std::size_t n, std::vector<Vector> gens, Vector torsion = {}) {
    return AffineMonoid(AbelianGroup(n, torsion), std::move(gens));
}

Vector v(std::initializer_list<long> x) { return make_vector(x); }

Outcome kummer_pushout() {
    Outcome o;
    AffineMonoid n = free_monoid(1);
    MonoidHom half(n, n, {v({2})});
    AffineMonoid fine = pushout(half, half, PushoutMode::fine);
    AffineMonoid fs = pushout(half, half, PushoutMode::fs);
    const AbelianGroup g(1, v({2}));
    o.require(fine.ambient() == g, "fine pushout group is not Z+Z/2");
    o.require(fs.ambient() == g, "fs pushout group is not Z+Z/2");
    // Elements (level k, torsion t): fine omits exactly (0, 1).
    for (long k = -3; k <= 6; ++k)
        for (long t = 0; t <= 1; ++t) {
            const bool in_fine = fine.contains(v({k, t}));
            const bool in_fs = fs.contains(v({k, t}));
            o.require(in_fine == (k > 0 || (k == 0 && t == 0)), "fine membership wrong at " + std::to_string(k));
            o.require(in_fs == (k >= 0), "fs membership wrong at " + std::to_string(k));
        }
    o.require(same_subset(fs, mon(1, {v({0, 1}), v({1, 0})}, v({2}))), "fs is not Z/2 + N");
    o.detail = o.ok ? "fine omits exactly (torsion 1, level 0); fs = Z/2 + N" : o.detail;
    return o;
}

Outcome fine_monomorphism() {
    Outcome o;
    struct Pair {
        AffineMonoid p, q;
    };
    std::vector<Pair> pairs{
        {free_monoid(2), mon(2, {v({1, 0}), v({-1, 1})})},
        {mon(1, {v({2}), v({3})}), free_monoid(1)},
        {free_monoid(1), mon(1, {v({1}), v({-1})})},
        {mon(2, {v({1, 0}), v({1, 1}), v({1, 2})}), free_monoid(2)},
        {free_monoid(3), mon(3, {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1}), v({1, -1, 0})})},
    };
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [p, q] = pairs[i];
        o.require(contains_monoid(q, p) && !contains_monoid(p, q), "pair " + std::to_string(i) + " is not P < Q");
        Subgroup pgp = p.gp();
        for (const auto& g : q.generators())
            o.require(pgp.contains(g), "pair " + std::to_string(i) + " has different groups");
        MonoidHom inc(p, q, p.generators());
        // The codiagonal Y -> Q is defined, bijective on groups, and hits every generator of Q.
        MonoidHom codiag = pushout_induced(inc, inc, MonoidHom::identity(q), MonoidHom::identity(q));
        GroupHom h = codiag.gp_map();
        o.require(kernel(h).is_trivial() && cokernel(h).is_trivial(),
                  "pair " + std::to_string(i) + ": codiagonal not an isomorphism on groups");
        AffineMonoid image(q.ambient(), codiag.images());
        o.require(same_subset(image, q), "pair " + std::to_string(i) + ": image differs from Q");
    }
    if (o.ok) o.detail = "5 pairs, fine self-pushout maps isomorphically onto Q";
    return o;
}

Outcome kato() {
    Outcome o;
    std::size_t checked = 0;
    for (long a = 1; a <= 6; ++a)
        for (long b = 1; b <= 6; ++b) {
            MonoidHom phi(free_monoid(1), free_monoid(2), {v({a, b})});
            for (long p : {0, 2, 3, 5}) {
                o.require(kato_criterion(phi, p).smooth == nodal_smooth_oracle(a, b, p),
                          "mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ") p=" + std::to_string(p));
                ++checked;
            }
        }
    MonoidHom k(free_monoid(1), free_monoid(1), {v({2})});
    o.require(kato_criterion(k, 3).etale, "Kummer x2 not etale at 3");
    o.require(!kato_criterion(k, 2).etale, "Kummer x2 etale at 2");
    if (o.ok) o.detail = std::to_string(checked) + " nodal cases match; Kummer x2 etale at 3, not at 2";
    return o;
}

Outcome differential_ranks() {
    Outcome o;
    Rng rng(401);
    MonoidHom nod(free_monoid(1), free_monoid(2), {v({2, 4})});
    o.require(differential_rank(nod, 0) == 1, "nodal rank is not 1");
    AffineMonoid zero(AbelianGroup(), {});
    for (int i = 0; i < 10; ++i) {
        std::size_t n = uniform(rng, 1, 3);
        AffineMonoid p = n == 1 ? free_monoid(1) : monoid_of_cone(random_cone(rng, n, n + 1, 3));
        o.require(differential_rank(MonoidHom::zero_from(zero, p), 0) == p.gp().group().free_rank(),
                  "hollow rank differs from rank of P^gp");
    }
    for (int i = 0; i < 20; ++i) {
        std::size_t m = uniform(rng, 1, 3), n = uniform(rng, 1, 3);
        AffineMonoid q = n == 1 ? free_monoid(1) : monoid_of_cone(random_cone(rng, n, n, 3));
        AffineMonoid p = free_monoid(m);
        std::vector<Vector> images;
        const long mult = std::array<long, 4>{1, 2, 3, 6}[uniform(rng, 0, 3)];
        for (std::size_t j = 0; j < m; ++j) images.push_back(scale(Integer(mult), random_element(rng, q, 2)));
        MonoidHom phi(p, q, images);
        // Q is toric, so Q^gp is the ambient Z^n and the cokernel is Z^n / span(images).
        Matrix a = Matrix::from_columns(n, images);
        for (long pr : {0, 2, 3, 5})
            o.require(differential_rank(phi, pr) == cokernel_dimension_mod_p(a, pr),
                      "p-rank mismatch at p=" + std::to_string(pr));
    }
    if (o.ok) o.detail = "nodal = 1; 10 hollow maps; 20 random maps at p in {0,2,3,5}";
    return o;
}

bool refines_with_same_support(const Fan& input, const Fan& output, long box) {
    for (const auto& c : output.cone_list()) {
        bool inside = false;
        for (const auto& d : input.cone_list()) {
            bool all = true;
            for (const auto& r : c.rays()) all = all && d.contains(r);
            inside = inside || all;
        }
        if (!inside) return false;
    }
    bool same = true;
    for_each_symmetric_box(input.ambient_rank(), box, [&](const Vector& x) {
        if (input.support_contains(x) != output.support_contains(x)) same = false;
    });
    return same;
}

Outcome resolution() {
    Outcome o;
    try {
        for (long k = 1; k <= 12; ++k) {
            Fan f = resolve(Fan::from_cone(RationalCone::from_generators(2, {v({1, 0}), v({1, k})})));
            o.require(f.cones().size() == static_cast<std::size_t>(k) && f.is_regular(),
                      "cone((1,0),(1," + std::to_string(k) + ")) gave the wrong fan");
        }
        Rng rng(501);
        for (int i = 0; i < 70; ++i) {
            const std::size_t n = i < 50 ? 2 : 3;
            Fan f = Fan::from_cone(random_cone(rng, n, n + (i % 2), 6));
            Fan r = resolve(f);
            o.require(r.is_regular(), "random output not regular");
            o.require(refines_with_same_support(f, r, n == 2 ? 6 : 3), "random output not a refinement");
        }
    } catch (const InternalError& e) {
        o.require(false, std::string("assertion fired: ") + e.what());
    }
    if (o.ok) o.detail = "k <= 12 give k regular cones; 50 random 2D and 20 random 3D cones resolved";
    return o;
}

Outcome blowups() {
    Outcome o;
    MonoidIdeal plus = maximal_ideal(free_monoid(2));
    auto charts = blowup_charts(plus);
    o.require(charts.size() == 2, "N^2 blowup does not have 2 charts");
    for (const auto& c : charts) {
        AffineMonoid s = minimal_generators(c.fs);
        o.require(s.generators().size() == 2 && predicates(s).is_free, "chart is not free of rank 2");
    }
    o.require(idempotence_check(plus), "idempotence fails for N^2");
    Rng rng(601);
    int done = 0;
    while (done < 30) {
        std::size_t n = uniform(rng, 1, 3);
        AffineMonoid p = n == 1 ? free_monoid(1) : monoid_of_cone(random_cone(rng, n, n + uniform(rng, 0, 1), 3));
        MonoidIdeal j{p, {}};
        for (int k = 0; k < 3; ++k) {
            Vector g = random_element(rng, p, 2);
            if (!is_zero(g)) j.generators.push_back(g);
        }
        if (j.generators.empty()) continue;
        ++done;
        for (const auto& c : blowup_charts(j))
            for (const auto& g : j.generators)
                o.require(c.fine.contains(sub(g, c.center)), "pulled-back ideal not principal");
        o.require(idempotence_check(j), "idempotence fails on a random ideal");
    }
    if (o.ok) o.detail = "N^2 charts free of rank 2; 30 random (P, J) principal and idempotent";
    return o;
}

Outcome gordan_faces() {
    Outcome o;
    auto hb = hilbert_basis(RationalCone::from_generators(2, {v({2, -1}), v({0, 1})}));
    o.require(hb == std::vector<Vector>{v({0, 1}), v({1, 0}), v({2, -1})}, "Hilbert basis differs");
    Rng rng(701);
    for (int i = 0; i < 20; ++i) {
        std::size_t n = i < 10 ? 2 : 3;
        RationalCone sigma = random_cone(rng, n, n + uniform(rng, 0, 2), 4);
        o.require(spec(monoid_of_cone(sigma)).size() == faces(sigma).size(), "|spec| differs from |faces|");
    }
    if (o.ok) o.detail = "HB of cone((2,-1),(0,1)) exact; 20 random cones |spec| = |faces|";
    return o;
}

Outcome universal_properties() {
    Outcome o;
    struct Instance {
        MonoidHom f, g;
        AffineMonoid target;
    };
    AffineMonoid n1 = free_monoid(1), n2 = free_monoid(2), z(AbelianGroup(), {});
    AffineMonoid s23 = mon(1, {v({2}), v({3})});
    AffineMonoid a1 = mon(2, {v({2, 0}), v({1, 1}), v({0, 2})});
    AffineMonoid kz2 = mon(1, {v({1, 0}), v({0, 1})}, v({2}));
    AffineMonoid zn = mon(2, {v({1, 0}), v({-1, 0}), v({0, 1})});
    std::vector<Instance> cases{
        {MonoidHom(n1, n1, {v({2})}), MonoidHom(n1, n1, {v({2})}), kz2},
        {MonoidHom(n1, n1, {v({2})}), MonoidHom(n1, n1, {v({3})}), n1},
        {MonoidHom::zero_from(z, n1), MonoidHom::zero_from(z, n1), n2},
        {MonoidHom(n1, n2, {v({1, 1})}), MonoidHom(n1, n1, {v({1})}), n2},
        {MonoidHom(n1, n2, {v({1, 1})}), MonoidHom(n1, n2, {v({1, 1})}), s23},
        {MonoidHom(n1, s23, {v({6})}), MonoidHom(n1, n1, {v({1})}), s23},
        {MonoidHom(n1, n1, {v({3})}), MonoidHom(n1, n1, {v({3})}), zn},
        {MonoidHom(n1, n1, {v({2})}), MonoidHom(n1, n2, {v({1, 1})}), a1},
        {MonoidHom(n1, n2, {v({1, 0})}), MonoidHom(n1, n2, {v({0, 1})}), n2},
        {MonoidHom(n1, n1, {v({1})}), MonoidHom(n1, n1, {v({1})}), a1},
    };
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        auto r = check_pushout_universal_property(c.f, c.g, c.target, 1);
        pairs += r.agreeing_pairs + r.disagreeing_pairs;
        o.require(r.failures == 0, "pushout instance " + std::to_string(i) + " fails the universal property");
        o.require(r.agreeing_pairs > 0, "pushout instance " + std::to_string(i) + " has no factoring pair");
    }
    struct FiberCase {
        MonoidHom f, g;
    };
    std::vector<FiberCase> fibers{
        {MonoidHom(n1, n1, {v({2})}), MonoidHom(n1, n1, {v({3})})},
        {MonoidHom::identity(n1), MonoidHom::identity(n1)},
        {MonoidHom(n2, n1, {v({1}), v({2})}), MonoidHom(n1, n1, {v({2})})},
        {MonoidHom(n2, n2, {v({1, 0}), v({1, 1})}), MonoidHom(n2, n2, {v({0, 1}), v({1, 1})})},
    };
    std::size_t solutions = 0;
    for (std::size_t i = 0; i < fibers.size(); ++i) {
        const auto& c = fibers[i];
        auto r = check_fiber_product(c.f, c.g, fiber_product(c.f, c.g), 8);
        solutions += r.solutions;
        o.require(r.bad_generators == 0, "fiber generator violates f(m) = g(n) in case " + std::to_string(i));
        o.require(r.missing == 0, "fiber product misses a solution in case " + std::to_string(i));
    }
    if (o.ok)
        o.detail = "10 pushouts (" + std::to_string(pairs) + " hom pairs); " + std::to_string(fibers.size()) +
                   " fiber products (" + std::to_string(solutions) + " solutions up to 8)";
    return o;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

struct CliResult {
    std::string out;
    int code;
};

CliResult run_cli_process(const std::string& cli, const std::filesystem::path& dir, const std::string& args) {
    std::string cmd = "cd '" + dir.string() + "' && '" + cli + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {"", -1};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

Outcome determinism(const std::string& cli, const std::filesystem::path& golden) {
    Outcome o;
    std::size_t cases = 0;
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(golden / "cases"))
        if (e.path().extension() == ".args") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        std::istringstream spec(read_file(f));
        std::string args;
        std::getline(spec, args);
        int want_code = 0;
        spec >> want_code;
        const std::string name = f.stem().string();
        CliResult a = run_cli_process(cli, golden / "inputs", args);
        CliResult b = run_cli_process(cli, golden / "inputs", args);
        o.require(a.out == b.out && a.code == b.code, name + ": output differs between runs");
        o.require(a.code == want_code, name + ": exit code " + std::to_string(a.code));
        o.require(a.out == read_file(golden / "expected" / (name + ".out")), name + ": output differs from expected");
        ++cases;
    }
    o.require(cases > 0, "no golden cases found");
    if (o.ok) o.detail = std::to_string(cases) + " golden cases byte-identical across two runs and to expected";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <logmonoid binary> <golden dir>\n";
        return 2;
    }
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::string cli = argv[1];
    const std::filesystem::path golden = argv[2];
    std::vector<Criterion> criteria{
        {"Kummer pushout", kummer_pushout},
        {"fine monomorphism", fine_monomorphism},
        {"chart criterion", kato},
        {"differential ranks", differential_ranks},
        {"monoidal resolution", resolution},
        {"blowup charts", blowups},
        {"Gordan and faces", gordan_faces},
        {"universal properties", universal_properties},
        {"determinism", [&] { return determinism(cli, golden); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].name
                  << "): " << o.detail << " [" << ms.count() << " ms]" << std::endl;
        if (!o.ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
