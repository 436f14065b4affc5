#include "logmonoid/cli.hpp"
#include "logmonoid/errors.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace logmonoid;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::string& command, const std::vector<std::string>& texts, const std::string& mode = "fine",
        long p = 0) {
    auto dir = std::filesystem::temp_directory_path() / "logmonoid_unit";
    std::filesystem::create_directories(dir);
    std::vector<std::string> files;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        auto path = dir / ("input" + std::to_string(i) + ".txt");
        std::ofstream(path) << texts[i];
        files.push_back(path.string());
    }
    CliOptions o;
    o.command = command;
    o.mode = mode;
    o.characteristic = p;
    std::ostringstream out, err;
    int code = run_cli(o, files, std::nullopt, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parser accepts both document styles") {
    Value a = parse_document("kind: affine-monoid\nambient_rank: 2\ntorsion: []\ngenerators: [[1,0],[1,2]]\n");
    Value b = parse_document("{kind: affine-monoid, ambient_rank: 2, torsion: [], generators: [[1, 0], [1, 2],]}");
    CHECK(emit_document(a) == emit_document(b));
    AffineMonoid m = load_affine_monoid(a);
    CHECK(m.generators().size() == 2);
}

TEST_CASE("parser reports positions") {
    try {
        parse_document("kind: cone\nrays: [[1,0], [0,1\n");
        FAIL("expected an error");
    } catch (const InputError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_document("a: 1\na: 2\n"), InputError);
    CHECK_THROWS_AS(parse_document("a: [1,,2]\n"), InputError);
    CHECK(parse_document("a: 123456789012345678901234567890 # comment\n").at("a").as_integer() ==
          Integer("123456789012345678901234567890"));
}

TEST_CASE("cone rays are primitivized with a warning") {
    std::ostringstream diag;
    RationalCone c = load_cone(parse_document("kind: cone\nrays: [[2,0]]\n"), diag);
    CHECK(c.rays() == std::vector<Vector>{make_vector({1, 0})});
    CHECK(diag.str().find("primitivized") != std::string::npos);
}

TEST_CASE("emitted documents re-parse to equal values") {
    std::ostringstream diag;
    AffineMonoid m(AbelianGroup(1, make_vector({2})), {make_vector({1, 0}), make_vector({1, 1})});
    CHECK(same_subset(load_affine_monoid(parse_document(emit_document(to_value(m)))), m));
    Fan f = resolve(Fan::from_cone(RationalCone::from_generators(2, {make_vector({1, 0}), make_vector({1, 3})})));
    CHECK(load_fan(parse_document(emit_document(to_value(f))), diag) == f);
    RationalCone c = RationalCone::from_generators(3, {make_vector({1, 0, 1}), make_vector({0, 1, 1}),
                                                       make_vector({-1, 0, 1})});
    CHECK(load_cone(parse_document(emit_document(to_value(c))), diag) == c);
}

TEST_CASE("cli examples and exit codes") {
    Run sat = run("sat", {"kind: affine-monoid\nambient_rank: 1\ntorsion: []\ngenerators: [[2],[3]]\n"});
    CHECK(sat.code == 0);
    CHECK(sat.out.find("generators: [[1]]") != std::string::npos);

    Run res = run("resolve", {"kind: fan\nrays: [[1,0],[1,2]]\ncones: [[0,1]]\n"});
    CHECK(res.code == 0);
    CHECK(res.out.find("rays: [[1,0],[1,1],[1,2]]") != std::string::npos);

    const std::string kummer =
        "kind: hom\nsource: {ambient_rank: 1, generators: [[1]]}\ntarget: {ambient_rank: 1, generators: [[1]]}\n"
        "images: [[2]]\n";
    Run hc = run("hom-check", {kummer}, "fine", 2);
    CHECK(hc.code == 0);
    CHECK(hc.out.find("smooth: false") != std::string::npos);
    CHECK(hc.out.find("etale: false") != std::string::npos);
    CHECK(hc.out.find("coker_torsion: 2") != std::string::npos);

    CHECK(run("hom-check", {kummer}, "fine", 4).code == 2);
    CHECK(run("bogus", {kummer}).code == 1);
    CHECK(run("pushout", {kummer, kummer}, "sideways").code == 1);
    CHECK(run("hom-check", {"kind: hom\nsource: {ambient_rank: 1, generators: [[1]]}\n"
                            "target: {ambient_rank: 1, generators: [[2],[3]]}\nimages: [[1]]\n"})
              .code == 2);
    CHECK(run("dual", {"kind: cone\nrays: [[1,0]\n"}).code == 1);
    CHECK(run("dual", {"kind: cone\nrays: [[1,0]]\nextra: 1\n"}).code == 1);
    CHECK(run("blowup", {"kind: ideal\nhost: {ambient_rank: 2, generators: [[1,0],[0,1]]}\ngenerators: []\n"})
              .code == 2);
}
