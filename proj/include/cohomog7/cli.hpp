#pragma once

#include <iosfwd>
#include <string>

#include "cohomog7/sweep.hpp"

namespace cohomog7::cli {

/// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalidParams = 2;
inline constexpr int kExitInternal = 3;

enum class OutputFormat { Human, Json, Csv };

/// `info <params>`: one full classification report.
int cmd_info(const std::string& params_text, bool json, std::ostream& out, std::ostream& err);

/// `validate <params>`: restriction check only.
int cmd_validate(const std::string& params_text, std::ostream& out, std::ostream& err);

struct SearchOptions {
    SearchSpec spec;
    OutputFormat format = OutputFormat::Human;
    SweepMode mode = SweepMode::Parallel;
    /// Cache directory; empty disables caching. cmd_search fills it from
    /// COHOMOG7_CACHE_DIR unless already set by the caller.
    std::string cache_dir;
    bool cache_dir_from_env = true;
};

/// `search --families ... --bound N [filters]`: enumerate and classify.
int cmd_search(const SearchOptions& options, std::ostream& out, std::ostream& err);

struct TableOptions {
    std::string path;
    OutputFormat format = OutputFormat::Human;
    bool skip_invalid = false;
};

/// `table <file>`: summary table for a list of parameter strings
/// (one per line, '#' comments and blank lines ignored).
int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err);

/// Comma-separated family letters ("L,N,O") -> set. Throws invalid_input.
std::set<Family> parse_family_list(const std::string& text);

}  // namespace cohomog7::cli
