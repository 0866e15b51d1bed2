#pragma once

// OEIS b-file parsing, on-disk caching and prefix comparison.

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "prodtri/series.hpp"

namespace prodtri {

// "A" followed by six digits.
class OeisId {
 public:
  explicit OeisId(std::string_view text);
  const std::string& str() const noexcept { return text_; }
  // "b003319.txt"
  std::string bfile_name() const;
  // https://oeis.org/A003319/b003319.txt
  std::string bfile_url() const;
  bool operator==(const OeisId&) const = default;

 private:
  std::string text_;
};

enum class OeisSource { fetched, cached, fixture };
std::string_view to_string(OeisSource s);

struct OeisRecord {
  OeisId id;
  std::size_t offset = 0;
  IntSequence terms;
  OeisSource source = OeisSource::fixture;
};

// "index value" lines, '#' comments and blank lines ignored; indices must be consecutive.
IntSequence parse_bfile(std::string_view text);
std::string serialize_bfile(const IntSequence& terms);

// Returns the body of a successful GET, or nullopt on any transport failure.
using HttpGet = std::function<std::optional<std::string>(const std::string& url)>;
HttpGet default_http_get();

struct OeisOptions {
  bool offline = false;
  // Defaults to $OEIS_CACHE_DIR, else ~/.cache/prodtri/oeis.
  std::optional<std::filesystem::path> cache_dir;
  // Vendored b-files consulted after the cache; defaults to the build's data/oeis.
  std::optional<std::filesystem::path> fixture_dir;
  // Skip cache and fixtures and download (refresh).
  bool refresh = false;
};

std::filesystem::path default_cache_dir();
std::filesystem::path default_fixture_dir();

class OeisClient {
 public:
  explicit OeisClient(OeisOptions options = {}, HttpGet http = default_http_get());

  // Raw b-file text and where it came from. Network results are written to the
  // cache with write-then-rename.
  std::pair<std::string, OeisSource> fetch_raw(const OeisId& id) const;
  // limit = 0 returns every stored term.
  OeisRecord fetch_sequence(const OeisId& id, std::size_t limit = 0) const;

  std::filesystem::path cache_path(const OeisId& id) const;

 private:
  OeisOptions options_;
  HttpGet http_;
};

struct PrefixReport {
  std::size_t common_prefix = 0;
  std::optional<std::size_t> first_mismatch;
  bool is_prefix = false;
  // Index into record terms at which computed[0] was aligned.
  std::size_t record_start = 0;
};

// computed[i] is compared with record.terms[record_start + i]. A computed sequence
// running past the record's end is not a prefix; the first missing index is reported.
PrefixReport compare_prefix(const IntSequence& computed, const OeisRecord& record, std::size_t record_start = 0);

}  // namespace prodtri
