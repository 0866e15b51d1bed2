#include "prodtri/oeis.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

namespace prodtri {

namespace fs = std::filesystem;

OeisId::OeisId(std::string_view text) : text_(text) {
  bool ok = text.size() == 7 && text[0] == 'A';
  for (std::size_t i = 1; ok && i < text.size(); ++i) ok = std::isdigit(static_cast<unsigned char>(text[i])) != 0;
  if (!ok) throw Error(ErrorCode::invalid_id, "'" + std::string(text) + "' is not an A-number (A followed by six digits)");
  if (text_ == "A000000") throw Error(ErrorCode::invalid_id, "A000000 is not an OEIS entry");
}

std::string OeisId::bfile_name() const { return "b" + text_.substr(1) + ".txt"; }

std::string OeisId::bfile_url() const { return "https://oeis.org/" + text_ + "/" + bfile_name(); }

std::string_view to_string(OeisSource s) {
  switch (s) {
    case OeisSource::fetched: return "fetched";
    case OeisSource::cached: return "cached";
    case OeisSource::fixture: return "fixture";
  }
  return "unknown";
}

IntSequence parse_bfile(std::string_view text) {
  IntSequence seq;
  std::optional<BigInt> last_index;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    std::istringstream is{std::string(line)};
    std::string idx_text, val_text, extra;
    if (!(is >> idx_text >> val_text) || (is >> extra))
      throw Error(ErrorCode::parse, "line " + std::to_string(line_no) + ": expected 'index value'", line_no);
    BigInt idx, val;
    try {
      idx = parse_bigint(idx_text);
      val = parse_bigint(val_text);
    } catch (const Error&) {
      throw Error(ErrorCode::parse, "line " + std::to_string(line_no) + ": malformed number", line_no);
    }
    if (!last_index) {
      if (idx < 0) throw Error(ErrorCode::parse, "line " + std::to_string(line_no) + ": negative offset", line_no);
      seq.offset = idx.convert_to<std::size_t>();
    } else if (idx != *last_index + 1) {
      throw Error(ErrorCode::index_gap,
                  "line " + std::to_string(line_no) + ": index " + idx.str() + " follows " + last_index->str(), line_no);
    }
    last_index = idx;
    seq.terms.push_back(std::move(val));
  }
  return seq;
}

std::string serialize_bfile(const IntSequence& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i)
    out += std::to_string(terms.offset + i) + " " + terms[i].str() + "\n";
  return out;
}

HttpGet default_http_get() {
  return [](const std::string& url) -> std::optional<std::string> {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) return std::nullopt;
    const auto path_start = url.find('/', scheme_end + 3);
    const std::string host = url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
    try {
      httplib::Client cli(host);
      cli.set_follow_location(true);
      cli.set_connection_timeout(10);
      cli.set_read_timeout(30);
      auto res = cli.Get(path);
      if (!res || res->status != 200) return std::nullopt;
      return res->body;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv("OEIS_CACHE_DIR"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "prodtri" / "oeis";
  return fs::temp_directory_path() / "prodtri-oeis";
}

fs::path default_fixture_dir() {
  if (const char* env = std::getenv("PRODTRI_FIXTURE_DIR"); env && *env) return env;
  return PRODTRI_FIXTURE_DIR;
}

OeisClient::OeisClient(OeisOptions options, HttpGet http) : options_(std::move(options)), http_(std::move(http)) {}

fs::path OeisClient::cache_path(const OeisId& id) const {
  return options_.cache_dir.value_or(default_cache_dir()) / id.bfile_name();
}

namespace {

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomically(const fs::path& target, const std::string& body) {
  static std::atomic<unsigned> counter{0};
  fs::create_directories(target.parent_path());
  auto tmp = target;
  tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "." +
         std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << body;
    if (!out) throw Error(ErrorCode::unavailable, "cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace

std::pair<std::string, OeisSource> OeisClient::fetch_raw(const OeisId& id) const {
  if (!options_.refresh) {
    if (auto cached = read_file(cache_path(id))) return {*cached, OeisSource::cached};
    const auto fixture = options_.fixture_dir.value_or(default_fixture_dir()) / id.bfile_name();
    if (auto body = read_file(fixture)) return {*body, OeisSource::fixture};
  }
  if (options_.offline)
    throw Error(ErrorCode::offline_miss, id.str() + " is not cached and network access is disabled");
  auto body = http_ ? http_(id.bfile_url()) : std::nullopt;
  if (!body) throw Error(ErrorCode::unavailable, "could not download " + id.bfile_url() + " and no cached copy exists");
  // Reject HTML error pages and the like before caching.
  parse_bfile(*body);
  write_atomically(cache_path(id), *body);
  return {*body, OeisSource::fetched};
}

OeisRecord OeisClient::fetch_sequence(const OeisId& id, std::size_t limit) const {
  auto [body, source] = fetch_raw(id);
  auto terms = parse_bfile(body);
  if (limit > 0 && terms.size() > limit) terms.terms.resize(limit);
  return OeisRecord{id, terms.offset, std::move(terms), source};
}

PrefixReport compare_prefix(const IntSequence& computed, const OeisRecord& record, std::size_t record_start) {
  PrefixReport rep;
  rep.record_start = record_start;
  const auto& terms = record.terms.terms;
  std::size_t i = 0;
  for (; i < computed.size(); ++i) {
    const auto j = record_start + i;
    if (j >= terms.size() || computed[i] != terms[j]) break;
  }
  rep.common_prefix = i;
  rep.is_prefix = i == computed.size();
  if (!rep.is_prefix) rep.first_mismatch = i;
  return rep;
}

}  // namespace prodtri
