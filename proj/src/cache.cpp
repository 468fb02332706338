#include "zerosum/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

namespace zerosum {

using nlohmann::json;

json record_to_json(const ConstantRecord& r) {
  return json{{"group", r.group.key()},
              {"olson", r.olson},
              {"method", method_name(r.method)},
              {"extremal_examples", r.extremal_examples},
              {"examples_truncated", r.examples_truncated},
              {"examples_verified", r.examples_verified},
              {"reorder_agrees", r.reorder_agrees},
              {"compute_seconds", r.compute_seconds}};
}

ConstantRecord record_from_json(const json& j) {
  ConstantRecord r;
  r.group = GroupDescriptor::parse(j.at("group").get<std::string>());
  r.olson = j.at("olson").get<std::uint32_t>();
  const auto method = j.at("method").get<std::string>();
  if (method == "exact") {
    r.method = Method::exact;
  } else if (method == "lower_bound_only") {
    r.method = Method::lower_bound_only;
  } else {
    throw InvalidArgument("unknown method " + method);
  }
  r.extremal_examples = j.at("extremal_examples").get<std::vector<EncodedSet>>();
  r.examples_truncated = j.at("examples_truncated").get<bool>();
  r.examples_verified = j.at("examples_verified").get<bool>();
  r.reorder_agrees = j.at("reorder_agrees").get<bool>();
  r.compute_seconds = j.at("compute_seconds").get<double>();
  return r;
}

int compare_versions(const std::string& a, const std::string& b) {
  std::istringstream sa(a), sb(b);
  std::string pa, pb;
  while (true) {
    const bool ha = static_cast<bool>(std::getline(sa, pa, '.'));
    const bool hb = static_cast<bool>(std::getline(sb, pb, '.'));
    if (!ha && !hb) return 0;
    const auto va = ha ? std::strtoull(pa.c_str(), nullptr, 10) : 0;
    const auto vb = hb ? std::strtoull(pb.c_str(), nullptr, 10) : 0;
    if (va != vb) return va < vb ? -1 : 1;
  }
}

namespace {

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class FileLock {
 public:
  FileLock(const std::filesystem::path& path, int op) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (fd_ < 0) throw std::runtime_error("cannot open cache " + path.string());
    if (::flock(fd_, op) != 0) {
      ::close(fd_);
      throw std::runtime_error("cannot lock cache " + path.string());
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;
  int fd() const { return fd_; }

 private:
  int fd_ = -1;
};

}  // namespace

ResultsCache::ResultsCache(std::filesystem::path path) : path_(std::move(path)) {}

std::filesystem::path ResultsCache::default_path() {
  if (const char* env = std::getenv("ZEROSUM_CACHE"); env && *env) return env;
  return "zerosum_cache.jsonl";
}

std::optional<ConstantRecord> ResultsCache::get(const std::string& key) const {
  warnings_.clear();
  std::ifstream in(path_);
  if (!in) return std::nullopt;
  std::optional<CacheEntry> best;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const auto j = json::parse(line);
      if (j.at("key").get<std::string>() != key) continue;
      CacheEntry e{key, record_from_json(j.at("record")), j.at("created_at").get<std::string>(),
                   j.at("tool_version").get<std::string>()};
      if (e.record.group.key() != key) throw InvalidArgument("key does not match record");
      if (!best || compare_versions(e.tool_version, best->tool_version) >= 0) best = std::move(e);
    } catch (const std::exception& ex) {
      warnings_.push_back(path_.string() + ":" + std::to_string(lineno) + ": skipped (" + ex.what() + ")");
    }
  }
  if (!best) return std::nullopt;
  return best->record;
}

void ResultsCache::put(const ConstantRecord& record, const std::string& tool_version) {
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  const json line{{"key", record.group.key()},
                  {"record", record_to_json(record)},
                  {"created_at", utc_now()},
                  {"tool_version", tool_version}};
  const auto text = line.dump() + "\n";
  FileLock lock(path_, LOCK_EX);
  std::size_t done = 0;
  while (done < text.size()) {
    const auto n = ::write(lock.fd(), text.data() + done, text.size() - done);
    if (n < 0) throw std::runtime_error("cache write failed: " + path_.string());
    done += static_cast<std::size_t>(n);
  }
}

}  // namespace zerosum
