#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fusionbench/catalog.hpp"
#include "fusionbench/category.hpp"
#include "fusionbench/cli.hpp"
#include "fusionbench/grading.hpp"
#include "fusionbench/rings.hpp"
#include "fusionbench/serialize.hpp"

using namespace fusionbench;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// One catalog per test process, written once.
const fs::path& catalog_dir() {
    static const fs::path dir = [] {
        std::random_device rd;
        fs::path d = fs::temp_directory_path() / ("fusionbench_cli_" + std::to_string(rd()));
        fs::create_directories(d);
        Result r = cli({"examples", "--dir", d.string()});
        REQUIRE(r.code == 0);
        return d;
    }();
    return dir;
}

std::string ex(const std::string& name) { return (catalog_dir() / (name + ".json")).string(); }

struct EnvGuard {
    EnvGuard(const char* v) { setenv("FUSIONBENCH_TOL", v, 1); }
    ~EnvGuard() { unsetenv("FUSIONBENCH_TOL"); }
};

}  // namespace

TEST_CASE("examples catalog") {
    Result list = cli({"examples"});
    CHECK(list.code == 0);
    CHECK(examples_catalog().size() >= 8);
    for (const auto& e : examples_catalog()) {
        CHECK(fs::exists(ex(e.name)));
        CHECK(list.out.find(e.name) != std::string::npos);
        CHECK(cli({"validate", ex(e.name)}).code == 0);
    }
}

TEST_CASE("make reproduces shipped examples byte for byte") {
    Result ising = cli({"make", "ty", "--group", "C2", "--chi", "-1", "--tau", "+"});
    CHECK(ising.code == 0);
    CHECK(ising.out == slurp(ex("ising")));
    Result tt = cli({"make", "ty-ty"});
    CHECK(tt.code == 0);
    CHECK(tt.out == slurp(ex("ty_ty_c2")));
    CHECK(cli({"make", "ty-ring", "--group", "C2"}).out == slurp(ex("ty_c2")));
}

TEST_CASE("invariants of TY(C2)") {
    Result r = cli({"invariants", ex("ty_c2")});
    CHECK(r.code == 0);
    CHECK(r.out.find("FPdim: 4\n") != std::string::npos);
    CHECK(r.out.find("U(R): C2") != std::string::npos);
    CHECK(r.out.find("adjoint: {1,g}\n") != std::string::npos);
    CHECK(r.out.find("pointed: {1,g}\n") != std::string::npos);
    CHECK(r.out.find("nilpotent: yes, depth 2\n") != std::string::npos);

    Result j = cli({"--json", "invariants", ex("ty_c2")});
    CHECK(j.code == 0);
    Json v = parse_text(j.out);
    CHECK(v["fpdim"] == 4.0);
    CHECK(v["universal_order"] == 2);
    CHECK(v["depth"] == 2);
    CHECK(cli({"invariants", ex("fibonacci")}).out.find("nilpotent: no") != std::string::npos);
}

TEST_CASE("pentagon and triangle verbs") {
    Result p = cli({"pentagon", ex("ising"), "--tol", "1e-9"});
    CHECK(p.code == 0);
    CHECK(p.out.find("pentagon") != std::string::npos);
    CHECK(p.out.find("residual") != std::string::npos);
    CHECK(cli({"triangle", ex("ising")}).code == 0);
    CHECK(cli({"pentagon", ex("ty_ty_c2"), "--threads", "3"}).code == 0);

    Result j = cli({"--json", "pentagon", ex("ty_ty_c2")});
    Json v = parse_text(j.out);
    CHECK(v["report"]["pass"] == true);
    CHECK(v["rank"] == 9);
}

TEST_CASE("tolerance from the environment") {
    // Reloaded data carries about 1e-12 of rounding.
    {
        EnvGuard g("1e-15");
        CHECK(cli({"pentagon", ex("ty_ty_c2")}).code == 1);
        CHECK(cli({"pentagon", ex("ty_ty_c2"), "--tol", "1e-9"}).code == 0);
    }
    {
        EnvGuard g("banana");
        CHECK(cli({"pentagon", ex("ising")}).code == 2);
    }
    CHECK(cli({"pentagon", ex("ty_ty_c2")}).code == 0);
}

TEST_CASE("exit codes") {
    fs::path dir = catalog_dir();
    // TY(C2) with N(X,X,g) = 2
    Json broken = to_json(tambara_yamagami_ring(cyclic_group(2)));
    for (auto& t : broken["N"])
        if (t[0] == 2 && t[1] == 2 && t[2] == 1) t[3] = 2;
    write_text_file(dir / "broken.json", dump(broken));
    Result b = cli({"validate", (dir / "broken.json").string()});
    CHECK(b.code == 1);
    CHECK(b.out.find("FAIL") != std::string::npos);
    CHECK(b.out.find("frobenius_reciprocity") != std::string::npos);

    Result bj = cli({"--json", "validate", (dir / "broken.json").string()});
    CHECK(bj.code == 1);
    CHECK(parse_text(bj.out)["report"]["pass"] == false);

    CHECK(cli({"validate", (dir / "missing.json").string()}).code == 2);
    CHECK(cli({"validate"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"pentagon", ex("ising"), "--bogus"}).code == 2);
    CHECK(cli({"make", "ty", "--group", "S4"}).code == 2);
    CHECK(cli({"--help"}).code == 0);

    write_text_file(dir / "garbage.json", "{ not json");
    CHECK(cli({"validate", (dir / "garbage.json").string()}).code == 2);
    write_text_file(dir / "odd.json", "{\"hello\": 1}\n");
    CHECK(cli({"validate", (dir / "odd.json").string()}).code == 2);

    // Rejected parameters are validation failures.
    Result bad_tau = cli({"make", "ty-pointed", "--tau", "-", "--chi", "1"});
    CHECK(bad_tau.code == 1);
    Result swap = cli({"make", "ty-pointed", "--group", "C2xC2", "--chi", "-1,-1", "--gamma-perm", "0,2,1,3"});
    CHECK(swap.code == 1);
    CHECK(swap.err.find("chi_invariance") != std::string::npos);
}

TEST_CASE("bicrossed then factorize") {
    fs::path dir = catalog_dir();
    for (const std::string name : {"ty_c2_zc2_pair", "ty_c2xc2_swap_pair", "ty_ty_c2_pair"}) {
        fs::path out = dir / (name + "_ring.json");
        Result b = cli({"bicrossed", ex(name), "--out", out.string()});
        CHECK(b.code == 0);
        Result f = cli({"factorize", out.string()});
        CHECK(f.code == 0);
        CHECK(f.out.find("certify.psi_structure_constants") != std::string::npos);
        fs::path back = dir / (name + "_back.json");
        CHECK(cli({"factorize", out.string(), "--out", back.string()}).code == 0);
        CHECK(cli({"validate", back.string()}).code == 0);
        // bicrossed of the recovered pair is the same ring
        Result again = cli({"bicrossed", back.string()});
        CHECK(again.code == 0);
        CHECK(ring_from_json(parse_text(again.out)).constants() == ring_from_json(read_json_file(out)).constants());
    }
    Result z6 = cli({"factorize", ex("z_c6"), "--A", "1,g^3", "--C", "1,g^2,g^4"});
    CHECK(z6.code == 0);
    CHECK(cli({"factorize", ex("z_c6"), "--A", "1,g^2,g^4", "--C", "1,g^2,g^4"}).code == 1);
    CHECK(cli({"factorize", ex("z_c6")}).code == 2);
}

TEST_CASE("serialization is a fixed point") {
    auto fixed = [](const Json& j, auto parse) {
        std::string once = dump(j);
        std::string twice = dump(to_json(parse(parse_text(once))));
        CHECK(once == twice);
    };
    for (const auto& e : examples_catalog()) {
        Json j = read_json_file(ex(e.name));
        switch (detect_kind(j)) {
            case ObjectKind::Ring: fixed(j, ring_from_json); break;
            case ObjectKind::Category: fixed(j, category_from_json); break;
            case ObjectKind::MatchedPair:
                fixed(j, [](const Json& x) { return matched_pair_from_json(x); });
                break;
            default: break;
        }
        CHECK(slurp(ex(e.name)) == dump(j));
    }
    fixed(to_json(symmetric_group_3()), group_from_json);
    FusionRing T = tambara_yamagami_ring(cyclic_group(3));
    fixed(to_json(universal_grading(T)), grading_from_json);

    // Reloaded categories keep coherence well inside tolerance.
    FusionCategoryData cat = category_from_json(read_json_file(ex("ty_ty_c2")));
    CHECK(check_pentagon(cat).find("pentagon")->residual.value() < 1e-11);
}

TEST_CASE("grading files need a ring") {
    fs::path dir = catalog_dir();
    FusionRing T = tambara_yamagami_ring(cyclic_group(2));
    write_text_file(dir / "grad.json", dump(to_json(universal_grading(T))));
    CHECK(cli({"validate", (dir / "grad.json").string()}).code == 2);
    CHECK(cli({"validate", (dir / "grad.json").string(), "--ring", ex("ty_c2")}).code == 0);
    Grading bad{cyclic_group(2), {0, 1, 1}};
    write_text_file(dir / "grad_bad.json", dump(to_json(bad)));
    CHECK(cli({"validate", (dir / "grad_bad.json").string(), "--ring", ex("ty_c2")}).code == 1);
}
