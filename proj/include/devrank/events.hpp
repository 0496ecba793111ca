#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "devrank/dates.hpp"

namespace devrank {

enum class EventKind : std::uint8_t { Follow, Commit, Star };

/// One dated behavioral record. The target is a developer id for follow
/// events and a project id for commit/star events. Commit events carry a
/// count so pre-aggregated exports (one row per developer/project/day) load
/// alongside one-row-per-commit exports; follow/star counts are always 1.
struct Event {
    EventKind kind = EventKind::Follow;
    std::string actor;
    std::string target;
    Date date;
    std::uint64_t count = 1;
};

/// Ordered event records plus the project alias map (fork child -> root).
/// Alias resolution is idempotent: canonical ids map to themselves.
class EventLog {
  public:
    EventLog() = default;
    EventLog(std::vector<Event> events, std::unordered_map<std::string, std::string> aliases);

    const std::vector<Event>& events() const { return events_; }
    const std::unordered_map<std::string, std::string>& project_aliases() const {
        return aliases_;
    }

    /// Resolves a project id to its canonical id (identity when unaliased).
    const std::string& canonical_project(const std::string& id) const;

    std::size_t count(EventKind kind) const;

  private:
    std::vector<Event> events_;
    std::unordered_map<std::string, std::string> aliases_;  // only non-identity entries
};

/// Malformed input row, reported with file name and 1-based line number.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string file, std::size_t line, const std::string& message);

    const std::string& file() const { return file_; }
    std::size_t line() const { return line_; }

  private:
    std::string file_;
    std::size_t line_;
};

struct LoadOptions {
    /// When true, malformed data rows are counted and skipped instead of
    /// aborting the load. Structural problems (missing file, bad header,
    /// fork cycles) always abort.
    bool skip_malformed = false;
    /// When true, projects sharing a name in the project file are merged to
    /// one canonical id. Off by default; name collisions are unsafe.
    bool merge_same_name = false;
};

struct LoadResult {
    EventLog log;
    std::uint64_t skipped = 0;
};

/// Loads dated follow/commit/star records from CSV exports.
///
/// Expected headers (validated):
///   follows.csv:  follower_id,followee_id,date
///   commits.csv:  developer_id,project_id,date[,count]   (count >= 1, default 1)
///   stars.csv:    developer_id,project_id,date
///   projects.csv: project_id,name,forked_from            (optional file)
///
/// Dates are strict ISO-8601 (YYYY-MM-DD). Fields are plain comma-separated
/// (no quoting). The alias map is built from the fork-parent column with
/// chains resolved to their root.
LoadResult load_event_log(const std::filesystem::path& follows_file,
                          const std::filesystem::path& commits_file,
                          const std::filesystem::path& stars_file,
                          const std::optional<std::filesystem::path>& projects_file = std::nullopt,
                          const LoadOptions& options = {});

/// Writes follows.csv/commits.csv/stars.csv under dir in the load format.
/// Commit rows emit the count column only when count != 1.
void write_event_files(const EventLog& log, const std::filesystem::path& dir);

}  // namespace devrank
