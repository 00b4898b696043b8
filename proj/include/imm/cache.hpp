#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "imm/symfunc.hpp"
#include "imm/tableau.hpp"

namespace imm {

/// Cache directory resolution order: explicit argument, then the
/// IMMERSION_CACHE_DIR environment variable, then ".immposet-cache" under the
/// current directory.
std::filesystem::path resolve_cache_dir(const std::string& explicit_dir = "");

/// On-disk layout: kostka_v1_n{N}.json / chars_v1_n{N}.json with a header
/// {version:1, n, ordering:"revlex-desc"} and row-major decimal-string
/// entries over the canonical universe; manifest.json records a SHA-256
/// checksum per file. Writes are atomic (temp file + rename) and serialized
/// by a lock file.
class TableCache {
public:
    explicit TableCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }

    /// Loads the table if a valid, checksum-verified cache entry exists.
    /// Returns nullopt when absent; throws cache_error on corruption.
    std::optional<KostkaTable> load_kostka(int n) const;
    std::optional<CharacterTable> load_characters(int n) const;

    void store(const KostkaTable& kt);
    void store(const CharacterTable& ct);

    /// Builds (or loads) with write-through caching.
    KostkaTable kostka(int n, int max_n = kMaxTableN);
    CharacterTable characters(int n, int max_n = kMaxTableN);

private:
    std::filesystem::path dir_;
};

std::string sha256_hex(const std::string& bytes);

} // namespace imm
