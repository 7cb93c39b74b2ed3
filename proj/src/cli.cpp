#include "cohomog7/cli.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cohomog7/version.hpp"

namespace cohomog7::cli {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void render_info_human(const ClassificationReport& rep, std::ostream& out) {
    out << to_string(rep.params) << "\n";
    out << "  valid: " << yes_no(rep.valid) << "\n";
    if (!rep.valid) {
        for (const auto& e : rep.errors) out << "    - " << e << "\n";
        return;
    }
    for (int k = 0; k <= 7; ++k) {
        out << "  H^" << k << " = " << rep.table->groups[k].str() << "\n";
    }
    out << "  r = " << rep.r->get_str() << "\n";
    out << "  cohomology type E_r: " << yes_no(rep.type_er);
    if (rep.type_er) out << " (E_" << rep.r->get_str() << ")";
    out << "\n";
    out << "  Eschenburg ring: " << yes_no(rep.eschenburg_ring) << "\n";
    out << "  known Eschenburg space: " << yes_no(rep.known_eschenburg_space) << "\n";

    const RingNotes& ring = rep.table->ring;
    out << "  ring generators" << (ring.complete ? " (complete)" : " (partial list)") << ":";
    if (ring.generators.empty()) {
        out << " none determined";
    } else {
        for (std::size_t i = 0; i < ring.generators.size(); ++i) {
            out << (i ? ", " : " ") << ring.generators[i].name << " in H^"
                << ring.generators[i].degree;
        }
    }
    out << "\n";
    for (const auto& p : ring.products) out << "    " << p << "\n";
    for (const auto& n : ring.remarks) out << "  note: " << n << "\n";
    out << "  provenance:\n";
    for (const auto& [claim, why] : rep.provenance) {
        out << "    " << claim << ": " << why << "\n";
    }
}

}  // namespace

int cmd_info(const std::string& params_text, bool json, std::ostream& out, std::ostream& err) {
    std::string parse_error;
    auto params = parse_params(params_text, &parse_error);
    if (!params) {
        err << "error: " << parse_error << "\n";
        return kExitUsage;
    }
    try {
        const ClassificationReport rep = report(*params);
        if (json) {
            out << rep.to_json().dump() << "\n";
        } else {
            render_info_human(rep, out);
        }
        return rep.valid ? kExitOk : kExitInvalidParams;
    } catch (const internal_error& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kExitInternal;
    }
}

int cmd_validate(const std::string& params_text, std::ostream& out, std::ostream& err) {
    std::string parse_error;
    auto params = parse_params(params_text, &parse_error);
    if (!params) {
        err << "error: " << parse_error << "\n";
        return kExitUsage;
    }
    const auto issues = validate(*params);
    if (issues.empty()) {
        out << to_string(*params) << ": valid\n";
        return kExitOk;
    }
    out << to_string(*params) << ": invalid\n";
    for (const auto& issue : issues) out << "  - " << issue << "\n";
    return kExitInvalidParams;
}

namespace {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string cache_file_name(const SearchSpec& spec) {
    std::ostringstream name;
    name << "search-" << std::hex << std::setfill('0') << std::setw(16)
         << fnv1a64(spec.key_string() + "|v" + kVersion) << ".jsonl";
    return name.str();
}

std::optional<std::vector<ordered_json>> load_cached_rows(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::vector<ordered_json> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ordered_json j = ordered_json::parse(line, nullptr, false);
        if (j.is_discarded()) return std::nullopt;  // stale or corrupt: recompute
        rows.push_back(std::move(j));
    }
    return rows;
}

void store_cached_rows(const std::filesystem::path& file, const std::vector<ordered_json>& rows) {
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    std::ofstream out(file, std::ios::trunc);
    if (!out) return;  // cache is best-effort
    for (const auto& row : rows) out << row.dump() << "\n";
}

template <std::size_t N>
void print_aligned(const std::vector<std::array<std::string, N>>& cells, std::ostream& out) {
    std::array<std::size_t, N> widths{};
    for (const auto& row : cells) {
        for (std::size_t c = 0; c + 1 < N; ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < N; ++c) {
            out << row[c];
            if (c + 1 < N) out << std::string(widths[c] - row[c].size() + 2, ' ');
        }
        out << "\n";
    }
}

std::string join_group_displays(const ordered_json& row) {
    std::string joined;
    for (const auto& g : row.at("groups")) {
        if (!joined.empty()) joined += ";";
        joined += g.at("display").get<std::string>();
    }
    return joined;
}

std::string json_scalar_to_string(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_search_rows(const std::vector<ordered_json>& rows, OutputFormat format,
                        std::ostream& out) {
    switch (format) {
        case OutputFormat::Json:
            for (const auto& row : rows) out << row.dump() << "\n";
            break;
        case OutputFormat::Csv:
            out << "params,family,r,is_type_Er,eschenburg_ring,known_eschenburg_space,groups\n";
            for (const auto& row : rows) {
                out << row.at("params").get<std::string>() << ","
                    << row.at("family").get<std::string>() << ","
                    << json_scalar_to_string(row.at("r")) << ","
                    << (row.at("is_type_Er").get<bool>() ? "true" : "false") << ","
                    << (row.at("eschenburg_ring").get<bool>() ? "true" : "false") << ","
                    << (row.at("known_eschenburg_space").get<bool>() ? "true" : "false") << ","
                    << join_group_displays(row) << "\n";
            }
            break;
        case OutputFormat::Human: {
            std::vector<std::array<std::string, 5>> cells;
            cells.push_back({"params", "r", "type_Er", "eschenburg", "known_eschenburg"});
            for (const auto& row : rows) {
                cells.push_back({row.at("params").get<std::string>(),
                                 json_scalar_to_string(row.at("r")),
                                 yes_no(row.at("is_type_Er").get<bool>()),
                                 yes_no(row.at("eschenburg_ring").get<bool>()),
                                 yes_no(row.at("known_eschenburg_space").get<bool>())});
            }
            print_aligned(cells, out);
            out << rows.size() << " manifolds\n";
            break;
        }
    }
}

}  // namespace

int cmd_search(const SearchOptions& options, std::ostream& out, std::ostream& err) {
    SearchOptions opts = options;
    if (opts.cache_dir.empty() && opts.cache_dir_from_env) {
        if (const char* env = std::getenv("COHOMOG7_CACHE_DIR")) opts.cache_dir = env;
    }

    try {
        std::vector<ordered_json> rows;
        std::optional<std::filesystem::path> cache_file;
        if (!opts.cache_dir.empty()) {
            cache_file = std::filesystem::path(opts.cache_dir) / cache_file_name(opts.spec);
        }

        bool from_cache = false;
        if (cache_file) {
            if (auto cached = load_cached_rows(*cache_file)) {
                rows = std::move(*cached);
                from_cache = true;
            }
        }
        if (!from_cache) {
            const auto reports = run_search(opts.spec, opts.mode);
            rows.reserve(reports.size());
            for (const auto& rep : reports) rows.push_back(rep.to_json());
            if (cache_file) store_cached_rows(*cache_file, rows);
        }

        render_search_rows(rows, opts.format, out);
        return kExitOk;
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const internal_error& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kExitInternal;
    }
}

namespace {

struct TableRow {
    std::string params_text;
    ClassificationReport rep;
};

std::string nontrivial_groups(const GradedCohomology& table) {
    std::string outstr;
    for (int k = 0; k <= 7; ++k) {
        if (table.groups[k].is_trivial()) continue;
        if (!outstr.empty()) outstr += " ";
        outstr += "H^" + std::to_string(k) + "=" + table.groups[k].str();
    }
    return outstr;
}

std::string ring_generator_list(const RingNotes& ring) {
    std::string outstr;
    for (const auto& g : ring.generators) {
        if (!outstr.empty()) outstr += ", ";
        outstr += g.name + " in H^" + std::to_string(g.degree);
    }
    if (outstr.empty()) outstr = "none determined";
    if (!ring.complete) outstr += " (partial list)";
    return outstr;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string table_notes(const ClassificationReport& rep) {
    std::string notes;
    const auto append = [&notes](const std::string& s) {
        if (!notes.empty()) notes += "; ";
        notes += s;
    };
    if (rep.type_er) {
        append("type E_" + rep.r->get_str());
    } else {
        append("not type E_r");
    }
    if (rep.r && *rep.r >= 1) {
        append(*rep.r % 2 == 0 ? "r even" : "r odd");
    }
    for (const auto& remark : rep.table->ring.remarks) append(remark);
    return notes;
}

}  // namespace

int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err) {
    std::ifstream in(options.path);
    if (!in) {
        err << "error: cannot open " << options.path << "\n";
        return kExitUsage;
    }

    std::vector<TableRow> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;

        std::string parse_error;
        auto params = parse_params(line, &parse_error);
        if (!params) {
            if (options.skip_invalid) {
                err << "warning: line " << line_no << ": " << parse_error << "\n";
                continue;
            }
            err << "error: line " << line_no << ": " << parse_error << "\n";
            return kExitUsage;
        }
        ClassificationReport rep = report(*params);
        if (!rep.valid) {
            if (options.skip_invalid) {
                err << "warning: line " << line_no << ": invalid parameters for "
                    << to_string(*params) << "\n";
                continue;
            }
            err << "error: line " << line_no << ": invalid parameters for " << to_string(*params)
                << "\n";
            for (const auto& e : rep.errors) err << "  - " << e << "\n";
            return kExitInvalidParams;
        }
        rows.push_back({line.substr(first), std::move(rep)});
    }

    switch (options.format) {
        case OutputFormat::Json:
            for (const auto& row : rows) out << row.rep.to_json().dump() << "\n";
            break;
        case OutputFormat::Csv:
            out << "params,family,r,groups,ring_generators,ring_complete,notes\n";
            for (const auto& row : rows) {
                out << to_string(row.rep.params) << "," << family_name(row.rep.params.family)
                    << "," << row.rep.r->get_str() << ","
                    << csv_escape(nontrivial_groups(*row.rep.table)) << ","
                    << csv_escape(ring_generator_list(row.rep.table->ring)) << ","
                    << (row.rep.table->ring.complete ? "true" : "false") << ","
                    << csv_escape(table_notes(row.rep)) << "\n";
            }
            break;
        case OutputFormat::Human: {
            std::vector<std::array<std::string, 4>> cells;
            cells.push_back({"params", "groups", "ring generators", "notes"});
            for (const auto& row : rows) {
                cells.push_back({to_string(row.rep.params), nontrivial_groups(*row.rep.table),
                                 ring_generator_list(row.rep.table->ring), table_notes(row.rep)});
            }
            print_aligned(cells, out);
            break;
        }
    }
    return kExitOk;
}

std::set<Family> parse_family_list(const std::string& text) {
    std::set<Family> families;
    std::string token;
    std::istringstream stream(text);
    while (std::getline(stream, token, ',')) {
        std::erase_if(token, [](unsigned char c) { return std::isspace(c); });
        if (token.empty()) continue;
        if (token == "L") {
            families.insert(Family::L);
        } else if (token == "M") {
            families.insert(Family::M);
        } else if (token == "N") {
            families.insert(Family::N);
        } else if (token == "O") {
            families.insert(Family::O);
        } else {
            throw invalid_input("unknown family '" + token + "' (expected L, M, N or O)");
        }
    }
    if (families.empty()) throw invalid_input("at least one family must be selected");
    return families;
}

}  // namespace cohomog7::cli
