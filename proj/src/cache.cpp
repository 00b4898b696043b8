#include "imm/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include <openssl/evp.h>

#include "imm/errors.hpp"

namespace imm {

namespace fs = std::filesystem;
using nlohmann::json;

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
        throw cache_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; i++) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

std::filesystem::path resolve_cache_dir(const std::string& explicit_dir) {
    if (!explicit_dir.empty()) return explicit_dir;
    if (const char* env = std::getenv("IMMERSION_CACHE_DIR"); env && *env) return env;
    return fs::current_path() / ".immposet-cache";
}

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw cache_error("cannot read " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Atomic write: temp file in the same directory, fsync, rename over.
void write_file_atomic(const fs::path& p, const std::string& bytes) {
    fs::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw cache_error("cannot write " + tmp.string());
        out << bytes;
        out.flush();
        if (!out) throw cache_error("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, p, ec);
    if (ec) throw cache_error("rename failed for " + p.string() + ": " + ec.message());
}

// Serializes writers across processes for the lifetime of the object.
struct DirLock {
    int fd = -1;
    explicit DirLock(const fs::path& dir) {
        fs::path lock = dir / "cache.lock";
        fd = ::open(lock.c_str(), O_CREAT | O_RDWR, 0644);
        if (fd < 0) throw cache_error("cannot open lock file " + lock.string());
        if (::flock(fd, LOCK_EX) != 0) {
            ::close(fd);
            throw cache_error("cannot lock " + lock.string());
        }
    }
    ~DirLock() {
        if (fd >= 0) {
            ::flock(fd, LOCK_UN);
            ::close(fd);
        }
    }
};

std::string table_file_name(const std::string& kind, int n) {
    return kind + "_v1_n" + std::to_string(n) + ".json";
}

json serialize_matrix(int n, const std::vector<std::vector<mpz_class>>& values) {
    json rows = json::array();
    for (const auto& row : values) {
        json r = json::array();
        for (const mpz_class& v : row) r.push_back(v.get_str());
        rows.push_back(std::move(r));
    }
    return json{{"version", 1}, {"n", n}, {"ordering", "revlex-desc"}, {"values", std::move(rows)}};
}

std::vector<std::vector<mpz_class>> parse_matrix(const json& j, int n, const fs::path& file) {
    if (!j.is_object() || j.value("version", 0) != 1 || j.value("n", -1) != n ||
        j.value("ordering", "") != std::string("revlex-desc"))
        throw cache_error("bad cache header in " + file.string());
    size_t m = PartitionUniverse(n).size();
    const json& rows = j.at("values");
    if (!rows.is_array() || rows.size() != m)
        throw cache_error("bad cache payload in " + file.string());
    std::vector<std::vector<mpz_class>> values(m);
    for (size_t i = 0; i < m; i++) {
        const json& r = rows[i];
        if (!r.is_array() || r.size() != m)
            throw cache_error("bad cache payload in " + file.string());
        values[i].reserve(m);
        for (const json& v : r) values[i].emplace_back(v.get<std::string>());
    }
    return values;
}

} // namespace

TableCache::TableCache(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw cache_error("cannot create cache dir " + dir_.string() + ": " + ec.message());
}

namespace {

// Manifest entry lookup/update; the manifest itself is rewritten atomically.
std::optional<std::string> manifest_checksum(const fs::path& dir, const std::string& kind, int n) {
    fs::path mf = dir / "manifest.json";
    if (!fs::exists(mf)) return std::nullopt;
    json j;
    try {
        j = json::parse(read_file(mf));
    } catch (const json::exception&) {
        throw cache_error("corrupt manifest " + mf.string());
    }
    for (const json& e : j.value("entries", json::array()))
        if (e.value("kind", "") == kind && e.value("n", -1) == n)
            return e.value("checksum", "");
    return std::nullopt;
}

void manifest_update(const fs::path& dir, const std::string& kind, int n,
                     const std::string& file, const std::string& checksum) {
    fs::path mf = dir / "manifest.json";
    json j = json{{"version", 1}, {"entries", json::array()}};
    if (fs::exists(mf)) {
        try {
            j = json::parse(read_file(mf));
        } catch (const json::exception&) {
            throw cache_error("corrupt manifest " + mf.string());
        }
    }
    json entries = json::array();
    for (const json& e : j.value("entries", json::array()))
        if (!(e.value("kind", "") == kind && e.value("n", -1) == n)) entries.push_back(e);
    entries.push_back(json{{"kind", kind}, {"n", n}, {"file", file}, {"checksum", checksum}});
    j["entries"] = std::move(entries);
    write_file_atomic(mf, j.dump(2) + "\n");
}

std::optional<json> load_table_json(const fs::path& dir, const std::string& kind, int n) {
    fs::path file = dir / table_file_name(kind, n);
    if (!fs::exists(file)) return std::nullopt;
    std::string bytes = read_file(file);
    auto expected = manifest_checksum(dir, kind, n);
    if (!expected)
        throw cache_error("cache file " + file.string() + " has no manifest entry");
    if (sha256_hex(bytes) != *expected)
        throw cache_error("checksum mismatch for " + file.string());
    try {
        return json::parse(bytes);
    } catch (const json::exception&) {
        throw cache_error("corrupt cache file " + file.string());
    }
}

} // namespace

std::optional<KostkaTable> TableCache::load_kostka(int n) const {
    auto j = load_table_json(dir_, "kostka", n);
    if (!j) return std::nullopt;
    KostkaTable kt;
    kt.n = n;
    kt.universe = PartitionUniverse(n);
    kt.values = parse_matrix(*j, n, dir_ / table_file_name("kostka", n));
    return kt;
}

std::optional<CharacterTable> TableCache::load_characters(int n) const {
    auto j = load_table_json(dir_, "chars", n);
    if (!j) return std::nullopt;
    CharacterTable ct;
    ct.n = n;
    ct.universe = PartitionUniverse(n);
    ct.values = parse_matrix(*j, n, dir_ / table_file_name("chars", n));
    return ct;
}

static void store_table(const fs::path& dir, const std::string& kind, int n,
                        const std::vector<std::vector<mpz_class>>& values) {
    DirLock lock(dir);
    std::string name = table_file_name(kind, n);
    std::string bytes = serialize_matrix(n, values).dump() + "\n";
    write_file_atomic(dir / name, bytes);
    manifest_update(dir, kind, n, name, sha256_hex(bytes));
}

void TableCache::store(const KostkaTable& kt) { store_table(dir_, "kostka", kt.n, kt.values); }
void TableCache::store(const CharacterTable& ct) { store_table(dir_, "chars", ct.n, ct.values); }

KostkaTable TableCache::kostka(int n, int max_n) {
    if (auto kt = load_kostka(n)) return std::move(*kt);
    KostkaTable kt = kostka_table(n, max_n);
    store(kt);
    return kt;
}

CharacterTable TableCache::characters(int n, int max_n) {
    if (auto ct = load_characters(n)) return std::move(*ct);
    CharacterTable ct = character_table(n, max_n);
    store(ct);
    return ct;
}

} // namespace imm
