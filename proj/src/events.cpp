#include "devrank/events.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace devrank {

EventLog::EventLog(std::vector<Event> events, std::unordered_map<std::string, std::string> aliases)
    : events_(std::move(events)), aliases_(std::move(aliases)) {}

const std::string& EventLog::canonical_project(const std::string& id) const {
    const auto it = aliases_.find(id);
    return it == aliases_.end() ? id : it->second;
}

std::size_t EventLog::count(EventKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(events_.begin(), events_.end(),
                      [kind](const Event& e) { return e.kind == kind; }));
}

ParseError::ParseError(std::string file, std::size_t line, const std::string& message)
    : std::runtime_error(file + ":" + std::to_string(line) + ": " + message),
      file_(std::move(file)),
      line_(line) {}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

struct CsvReader {
    std::ifstream stream;
    std::string file;
    std::size_t line_no = 0;
    std::string line;

    CsvReader(const std::filesystem::path& path, std::string_view expected_header,
              std::size_t header_fields) : file(path.string()) {
        stream.open(path);
        if (!stream) throw ParseError(file, 0, "cannot open file");
        if (!next_line()) throw ParseError(file, 0, "missing header");
        const auto fields = split_fields(line);
        const auto expected = split_fields(expected_header);
        if (fields.size() < header_fields)
            throw ParseError(file, line_no, "bad header: expected '" + std::string(expected_header) + "'");
        for (std::size_t i = 0; i < header_fields; ++i) {
            if (fields[i] != expected[i])
                throw ParseError(file, line_no,
                                 "bad header: expected '" + std::string(expected_header) + "'");
        }
    }

    // Reads the next non-empty line, stripping a trailing '\r'.
    bool next_line() {
        while (std::getline(stream, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    }
};

Date parse_date_field(const CsvReader& reader, std::string_view field) {
    const auto date = parse_date(field);
    if (!date)
        throw ParseError(reader.file, reader.line_no,
                         "unparseable date '" + std::string(field) + "'");
    return *date;
}

std::uint64_t parse_count_field(const CsvReader& reader, std::string_view field) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || value == 0)
        throw ParseError(reader.file, reader.line_no,
                         "non-positive count '" + std::string(field) + "'");
    return value;
}

void require_nonempty(const CsvReader& reader, std::string_view field, const char* what) {
    if (field.empty())
        throw ParseError(reader.file, reader.line_no, std::string("empty ") + what);
}

// Loads one event file; on skip_malformed, counts bad rows instead of throwing.
void load_events(const std::filesystem::path& path, EventKind kind,
                 std::string_view expected_header, bool count_column, const LoadOptions& options,
                 std::vector<Event>& out, std::uint64_t& skipped) {
    CsvReader reader(path, expected_header, 3);
    while (reader.next_line()) {
        try {
            const auto fields = split_fields(reader.line);
            const std::size_t max_fields = count_column ? 4 : 3;
            if (fields.size() < 3 || fields.size() > max_fields)
                throw ParseError(reader.file, reader.line_no,
                                 "wrong column count (" + std::to_string(fields.size()) + ")");
            require_nonempty(reader, fields[0], "actor id");
            require_nonempty(reader, fields[1], "target id");
            Event event;
            event.kind = kind;
            event.actor = std::string(fields[0]);
            event.target = std::string(fields[1]);
            event.date = parse_date_field(reader, fields[2]);
            if (count_column && fields.size() == 4)
                event.count = parse_count_field(reader, fields[3]);
            out.push_back(std::move(event));
        } catch (const ParseError&) {
            if (!options.skip_malformed) throw;
            ++skipped;
        }
    }
}

struct ProjectRow {
    std::string id;
    std::string name;
    std::string forked_from;
};

std::vector<ProjectRow> load_project_rows(const std::filesystem::path& path,
                                          const LoadOptions& options, std::uint64_t& skipped) {
    CsvReader reader(path, "project_id,name,forked_from", 3);
    std::vector<ProjectRow> rows;
    std::unordered_map<std::string, bool> seen;
    while (reader.next_line()) {
        try {
            const auto fields = split_fields(reader.line);
            if (fields.size() != 3)
                throw ParseError(reader.file, reader.line_no,
                                 "wrong column count (" + std::to_string(fields.size()) + ")");
            require_nonempty(reader, fields[0], "project id");
            if (seen[std::string(fields[0])])
                throw ParseError(reader.file, reader.line_no,
                                 "duplicate project id '" + std::string(fields[0]) + "'");
            seen[std::string(fields[0])] = true;
            rows.push_back({std::string(fields[0]), std::string(fields[1]),
                            std::string(fields[2])});
        } catch (const ParseError&) {
            if (!options.skip_malformed) throw;
            ++skipped;
        }
    }
    return rows;
}

// Resolves fork-parent chains to their root; detects cycles. Optionally
// merges projects that share a name onto the lexicographically smallest
// canonical id of the group.
std::unordered_map<std::string, std::string> build_alias_map(
    const std::vector<ProjectRow>& rows, bool merge_same_name, const std::string& file) {
    std::unordered_map<std::string, std::string> parent;
    for (const auto& row : rows) {
        if (!row.forked_from.empty() && row.forked_from != row.id) parent[row.id] = row.forked_from;
    }

    std::unordered_map<std::string, std::string> root;
    auto resolve = [&](const std::string& start) -> const std::string& {
        const auto cached = root.find(start);
        if (cached != root.end()) return cached->second;
        std::vector<std::string> chain;
        std::string current = start;
        while (true) {
            const auto hit = root.find(current);
            if (hit != root.end()) {
                current = hit->second;
                break;
            }
            const auto up = parent.find(current);
            if (up == parent.end()) break;
            chain.push_back(current);
            current = up->second;
            if (std::find(chain.begin(), chain.end(), current) != chain.end())
                throw ParseError(file, 0, "fork cycle involving project '" + current + "'");
        }
        for (const auto& node : chain) root[node] = current;
        return root[start] = current;
    };
    for (const auto& row : rows) resolve(row.id);

    if (merge_same_name) {
        std::unordered_map<std::string, std::string> name_rep;  // name -> smallest canonical id
        for (const auto& row : rows) {
            if (row.name.empty()) continue;
            const std::string& canon = resolve(row.id);
            auto [it, inserted] = name_rep.emplace(row.name, canon);
            if (!inserted && canon < it->second) it->second = canon;
        }
        for (const auto& row : rows) {
            if (row.name.empty()) continue;
            const std::string canon = resolve(row.id);
            const std::string& rep = name_rep.at(row.name);
            if (canon != rep) root[canon] = rep;
        }
        // Re-resolve to a fixpoint so chained name merges stay idempotent.
        for (auto& [id, target] : root) {
            std::string current = target;
            while (true) {
                const auto it = root.find(current);
                if (it == root.end() || it->second == current) break;
                current = it->second;
            }
            target = current;
        }
    }

    std::unordered_map<std::string, std::string> aliases;
    for (const auto& [id, target] : root) {
        if (id != target) aliases.emplace(id, target);
    }
    return aliases;
}

void write_csv(const std::filesystem::path& path, const std::string& header,
               const std::vector<const Event*>& events, bool count_column) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << header << '\n';
    for (const Event* e : events) {
        out << e->actor << ',' << e->target << ',' << to_string(e->date);
        if (count_column && e->count != 1) out << ',' << e->count;
        out << '\n';
    }
}

}  // namespace

LoadResult load_event_log(const std::filesystem::path& follows_file,
                          const std::filesystem::path& commits_file,
                          const std::filesystem::path& stars_file,
                          const std::optional<std::filesystem::path>& projects_file,
                          const LoadOptions& options) {
    LoadResult result;
    std::vector<Event> events;
    load_events(follows_file, EventKind::Follow, "follower_id,followee_id,date", false, options,
                events, result.skipped);
    load_events(commits_file, EventKind::Commit, "developer_id,project_id,date", true, options,
                events, result.skipped);
    load_events(stars_file, EventKind::Star, "developer_id,project_id,date", false, options,
                events, result.skipped);

    std::unordered_map<std::string, std::string> aliases;
    if (projects_file) {
        const auto rows = load_project_rows(*projects_file, options, result.skipped);
        aliases = build_alias_map(rows, options.merge_same_name, projects_file->string());
    }
    result.log = EventLog(std::move(events), std::move(aliases));
    return result;
}

void write_event_files(const EventLog& log, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<const Event*> follows, commits, stars;
    for (const Event& e : log.events()) {
        switch (e.kind) {
            case EventKind::Follow: follows.push_back(&e); break;
            case EventKind::Commit: commits.push_back(&e); break;
            case EventKind::Star: stars.push_back(&e); break;
        }
    }
    write_csv(dir / "follows.csv", "follower_id,followee_id,date", follows, false);
    write_csv(dir / "commits.csv", "developer_id,project_id,date", commits, true);
    write_csv(dir / "stars.csv", "developer_id,project_id,date", stars, false);
}

}  // namespace devrank
