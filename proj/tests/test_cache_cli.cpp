#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "imm/cache.hpp"
#include "imm/errors.hpp"

using namespace imm;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path fresh_dir(const std::string& tag) {
    fs::path p = fs::temp_directory_path() / ("immposet-test-" + tag + "-" +
                                              std::to_string(::getpid()));
    fs::remove_all(p);
    return p;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI under test (path in IMMPOSET_BIN) and captures stdout.
RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("IMMPOSET_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string cache_flag(const fs::path& dir) { return "--cache-dir " + dir.string() + " "; }

std::string read_all(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), {});
}

} // namespace

TEST_CASE("sha256") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cache directory resolution") {
    CHECK(resolve_cache_dir("/tmp/explicit") == fs::path("/tmp/explicit"));
    ::setenv("IMMERSION_CACHE_DIR", "/tmp/from-env", 1);
    CHECK(resolve_cache_dir() == fs::path("/tmp/from-env"));
    CHECK(resolve_cache_dir("/tmp/explicit") == fs::path("/tmp/explicit"));
    ::unsetenv("IMMERSION_CACHE_DIR");
    CHECK(resolve_cache_dir() == fs::current_path() / ".immposet-cache");
}

TEST_CASE("cache round trip") {
    fs::path dir = fresh_dir("roundtrip");
    TableCache cache(dir);

    CHECK(!cache.load_kostka(6).has_value());
    CHECK(!cache.load_characters(6).has_value());

    KostkaTable kt = kostka_table(6);
    cache.store(kt);
    auto loaded = cache.load_kostka(6);
    REQUIRE(loaded.has_value());
    CHECK(loaded->n == 6);
    CHECK(loaded->values == kt.values);

    CharacterTable ct = character_table(6);
    cache.store(ct);
    auto lct = cache.load_characters(6);
    REQUIRE(lct.has_value());
    CHECK(lct->values == ct.values);

    // Write-through accessors hit the cache on the second call.
    KostkaTable again = cache.kostka(7);
    REQUIRE(cache.load_kostka(7).has_value());
    CHECK(cache.kostka(7).values == again.values);

    // Stores are deterministic byte-for-byte.
    std::ifstream f1(dir / "kostka_v1_n6.json", std::ios::binary);
    std::string bytes1((std::istreambuf_iterator<char>(f1)), {});
    cache.store(kt);
    std::ifstream f2(dir / "kostka_v1_n6.json", std::ios::binary);
    std::string bytes2((std::istreambuf_iterator<char>(f2)), {});
    CHECK(bytes1 == bytes2);
    CHECK(!bytes1.empty());

    fs::remove_all(dir);
}

TEST_CASE("cache corruption detection") {
    fs::path dir = fresh_dir("corrupt");
    TableCache cache(dir);
    cache.store(kostka_table(5));

    // Flip the payload without updating the manifest checksum.
    fs::path file = dir / "kostka_v1_n5.json";
    REQUIRE(fs::exists(file));
    std::string text = read_all(file);
    size_t pos = text.find("\"5\"");
    if (pos == std::string::npos) pos = text.find("\"1\"");
    REQUIRE(pos != std::string::npos);
    std::string tampered = text;
    tampered[pos + 1] = '9';
    std::ofstream(file) << tampered;
    CHECK_THROWS_AS(cache.load_kostka(5), cache_error);

    // Restoring the original bytes makes the entry readable again.
    std::ofstream(file) << text;
    CHECK(cache.load_kostka(5).has_value());

    // Corrupt manifest JSON.
    std::string manifest = read_all(dir / "manifest.json");
    std::ofstream(dir / "manifest.json") << "{ not json";
    CHECK_THROWS_AS(cache.load_kostka(5), cache_error);
    std::ofstream(dir / "manifest.json") << manifest;

    // A data file with no manifest entry is an error, not a silent hit.
    fs::remove(dir / "manifest.json");
    CHECK_THROWS_AS(cache.load_kostka(5), cache_error);

    // A missing data file reads as absent.
    fs::remove(file);
    CHECK(!cache.load_kostka(5).has_value());

    fs::remove_all(dir);
}

TEST_CASE("cli usage and exit codes") {
    fs::path dir = fresh_dir("cli");
    std::string cf = cache_flag(dir);

    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("poset").exit_code == 2);
    CHECK(run_cli(cf + "poset --n 5 --order weak").exit_code == 2);
    CHECK(run_cli(cf + "interval --n 5 --top [oops]").exit_code == 2);
    CHECK(run_cli(cf + "char --shape [3,1] --type [3]").exit_code == 2);
    CHECK(run_cli(cf + "poset --n 99 --order immersion").exit_code == 3);

    fs::remove_all(dir);
}

TEST_CASE("cli computations") {
    fs::path dir = fresh_dir("cli2");
    std::string cf = cache_flag(dir);

    RunResult r = run_cli(cf + "char --shape [2,1] --type [1,1,1]");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");

    r = run_cli(cf + "rank --n 4 --order dominance");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4\n");

    r = run_cli(cf + "maximal --n 9 --order standard");
    CHECK(r.exit_code == 0);
    json mx = json::parse(r.out);
    CHECK(mx.is_array());
    CHECK(std::find(mx.begin(), mx.end(), json::array({9})) != mx.end());

    r = run_cli(cf + "interval --n 6 --top [4,2]");
    CHECK(r.exit_code == 0);
    json iv = json::parse(r.out);
    CHECK(iv["top"] == json::array({4, 2}));
    CHECK(iv["members"].size() >= 2);

    // The interval below (4) is {(4),(1^4)}: p_4 + p_{(1^4)} is Schur-positive.
    r = run_cli(cf + "interval-powersum --n 4 --top [4]");
    CHECK(r.exit_code == 0);
    json ips = json::parse(r.out);
    CHECK(ips["schur_positive"] == true);
    CHECK(!ips.contains("negative_witness"));
    for (const json& term : ips["terms"])
        if (term["shape"] == json::array({4})) CHECK(term["coeff"] == "2");

    // The interval below (4,1) at n=5 yields a negative sign-shape coefficient.
    r = run_cli(cf + "interval-powersum --n 5 --top [4,1]");
    CHECK(r.exit_code == 0);
    ips = json::parse(r.out);
    CHECK(ips["schur_positive"] == false);
    CHECK(ips.contains("negative_witness"));

    // Shape (2,2,1,1,1) has two eligible columns, so --column is required.
    r = run_cli(cf + "inject --map phi1 --shape [2^2,1^3] --tableau [[1,6],[2,7],[3],[4],[5]]");
    CHECK(r.exit_code == 2);
    r = run_cli(cf + "inject --map phi1 --column 1 --shape [2^2,1^3] "
                     "--tableau [[1,6],[2,7],[3],[4],[5]]");
    CHECK(r.exit_code == 0);
    json inj = json::parse(r.out);
    CHECK(inj["shape"] == json::array({2, 2, 2, 1}));
    CHECK(inj["rows"] == json::parse("[[1,2],[3,4],[5,6],[7]]"));

    r = run_cli(cf + "inject --map psi1 --column 1 --shape [2^2,1^3] "
                     "--tableau [[1,2],[3,4],[5,6],[7]]");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["rows"] == json::parse("[[1,6],[2,7],[3],[4],[5]]"));

    // DOT output is deterministic and names the right number of nodes.
    RunResult d1 = run_cli(cf + "poset --n 5 --order immersion --format dot");
    RunResult d2 = run_cli(cf + "poset --n 5 --order immersion --format dot");
    CHECK(d1.exit_code == 0);
    CHECK(d1.out == d2.out);
    CHECK(d1.out.find("digraph") == 0);
    for (int i = 0; i < 7; i++)
        CHECK(d1.out.find("n" + std::to_string(i) + " ") != std::string::npos);

    r = run_cli(cf + "poset --n 10 --restrict hooks --format json");
    CHECK(r.exit_code == 0);
    json sub = json::parse(r.out);
    CHECK(sub["nodes"].size() == 10);
    CHECK(sub["violations"].empty());

    r = run_cli(cf + "stats comparability --n 7 --samples 1000 --seed 5");
    CHECK(r.exit_code == 0);
    json st = json::parse(r.out);
    double dec = std::stod(st["decimal"].get<std::string>());
    CHECK(dec > 0.0);
    CHECK(dec < 1.0);
    CHECK(run_cli(cf + "stats comparability --n 7 --samples 1000 --seed 5").out == r.out);

    r = run_cli(cf + "stats schur-positive-fraction --n 6");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["fraction"].get<std::string>() == "10/11");

    r = run_cli(cf + "verify tables");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["failures"].empty());
    CHECK(rep["cases"].get<long>() > 0);

    CHECK(run_cli(cf + "verify injections --max-n 6").exit_code == 0);
    CHECK(run_cli(cf + "verify intervals --n 9..9").exit_code == 0);

    fs::remove_all(dir);
}
