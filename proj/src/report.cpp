#include "forge/report.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace forge {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

ordered_json rows_to_json(const std::vector<ReportRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json row;
    row["x"] = r.x;
    row["count"] = r.count;
    if (r.predicted_available) {
      row["predicted"] = r.predicted;
      row["ratio"] = r.ratio;
    } else {
      row["predicted"] = nullptr;
      row["ratio"] = nullptr;
    }
    arr.push_back(std::move(row));
  }
  return arr;
}

}  // namespace

std::string ExperimentReport::to_json() const {
  ordered_json j;
  j["experiment"] = experiment_id;
  j["version"] = version;
  j["parameters"] = parameters;
  j["rows"] = rows_to_json(rows);
  j["stamp"]["timestamp"] = timestamp;
  j["stamp"]["wall_seconds"] = wall_seconds;
  return j.dump(2) + "\n";
}

std::string ExperimentReport::canonical_bytes() const {
  ordered_json j;
  j["experiment"] = experiment_id;
  j["version"] = version;
  j["parameters"] = parameters;
  j["rows"] = rows_to_json(rows);
  return j.dump(2) + "\n";
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream out;
  out << "x,count,predicted,ratio\n";
  for (const auto& r : rows) {
    out << r.x << ',' << r.count << ',';
    if (r.predicted_available)
      out << csv_field(format_double(r.predicted)) << ',' << csv_field(format_double(r.ratio));
    else
      out << ',';
    out << '\n';
  }
  return out.str();
}

ExperimentReport ExperimentReport::from_json(const std::string& bytes) {
  ordered_json j = ordered_json::parse(bytes);
  ExperimentReport rep;
  rep.experiment_id = j.at("experiment").get<std::string>();
  rep.version = j.at("version").get<std::string>();
  rep.parameters = j.at("parameters").get<std::string>();
  for (const auto& row : j.at("rows")) {
    ReportRow r;
    r.x = row.at("x").get<u64>();
    r.count = row.at("count").get<u64>();
    if (!row.at("predicted").is_null()) {
      r.predicted_available = true;
      r.predicted = row.at("predicted").get<double>();
      r.ratio = row.at("ratio").get<double>();
    }
    rep.rows.push_back(r);
  }
  if (j.contains("stamp")) {
    rep.timestamp = j["stamp"].value("timestamp", "");
    rep.wall_seconds = j["stamp"].value("wall_seconds", 0.0);
  }
  return rep;
}

std::string iso8601_utc_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ResultCache::ResultCache(std::filesystem::path root) : root_(std::move(root)) {}

ResultCache ResultCache::resolve(const std::filesystem::path& out_dir) {
  if (const char* env = std::getenv("TERNARY_FORGE_CACHE"); env && *env)
    return ResultCache(std::filesystem::path(env));
  return ResultCache(out_dir / "cache");
}

std::string ResultCache::param_hash(const std::string& experiment_id,
                                    const std::string& canonical_params) {
  std::string key = std::string(kVersion) + "\n" + experiment_id + "\n" + canonical_params;
  u64 h = 0xcbf29ce484222325ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::filesystem::path ResultCache::entry_path(const std::string& experiment_id,
                                              const std::string& canonical_params) const {
  return root_ / experiment_id / (param_hash(experiment_id, canonical_params) + ".json");
}

std::optional<std::string> ResultCache::load(const std::string& experiment_id,
                                             const std::string& canonical_params) const {
  std::filesystem::path p = entry_path(experiment_id, canonical_params);
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void ResultCache::store(const std::string& experiment_id, const std::string& canonical_params,
                        const std::string& json_bytes) const {
  std::filesystem::path p = entry_path(experiment_id, canonical_params);
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << json_bytes;
}

std::vector<std::string> ResultCache::list() const {
  std::vector<std::string> out;
  if (!std::filesystem::exists(root_)) return out;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root_))
    if (entry.is_regular_file())
      out.push_back(std::filesystem::relative(entry.path(), root_).generic_string());
  std::sort(out.begin(), out.end());
  return out;
}

u64 ResultCache::clear() const {
  if (!std::filesystem::exists(root_)) return 0;
  u64 removed = 0;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root_))
    if (entry.is_regular_file()) ++removed;
  std::filesystem::remove_all(root_);
  return removed;
}

}  // namespace forge
