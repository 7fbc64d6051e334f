#pragma once

#include "frachh/inequalities.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frachh::cli {

enum class Command { Verify, Identity, Corpus, Sweep };
enum class Format { Json, Csv, Text };

/// Bad flags, unknown labels, malformed grids. Maps to exit code 3.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitHolds = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 3;

struct RunConfig {
    Command command = Command::Verify;
    std::string theorem;
    std::string f_label = "sq";
    std::string g_label = "unit";
    double a = 0.0;
    double b = 1.0;
    /// Empty: 0.5 for verify and identity, the standard grid for corpus and sweep.
    std::vector<double> alpha;
    std::vector<double> q;  // empty: theorem default
    double tol = kDefaultTol;
    std::uint64_t seed = kDefaultSeed;
    Format format = Format::Json;
    bool strict_domain = false;
    bool force = false;
    std::string out;
    unsigned jobs = 0;  // 0: hardware concurrency
};

/// One output row. Fields that do not apply to a theorem stay empty and
/// serialize as null (JSON) or an empty cell (CSV).
struct Row {
    std::string theorem;
    std::string f;
    std::string g;
    std::optional<double> a, b, alpha, p, q;
    std::optional<double> lhs, mid, rhs;
    std::optional<double> observed, bound;
    std::optional<double> margin_lower, margin_upper, slack;
    std::optional<double> error_budget;
    Status status = Status::Inconclusive;
    std::size_t evaluations = 0;
    std::uint64_t seed = kDefaultSeed;
    bool hypotheses_met = true;
    std::string note;
};

inline constexpr std::string_view kTheorems[] = {
    "hh-classical", "fejer-classical", "hh-fractional", "fejer-fractional", "identity-1-4",
    "identity-2-3", "bound-1-5",       "bound-2-4",     "bound-2-5",        "bound-2-6",
    "bound-2-7",    "aux-integrals",   "lemma-1-6",     "lemma-2-1"};

/// Comma list ("0.25,0.5") or inclusive range "start:stop:step".
std::vector<double> parse_grid(const std::string& text);

/// Reads FRACHH_TOL; returns the built-in default when unset.
double default_tolerance();

/// Throws UsageError for an inconsistent config.
void validate(const RunConfig& config);

/// Runs the configured command. Rows come back in a fixed order that does
/// not depend on the worker count.
std::vector<Row> run(const RunConfig& config);

int exit_code(const std::vector<Row>& rows);

void write_json(std::ostream& os, const RunConfig& config, const std::vector<Row>& rows);
void write_csv(std::ostream& os, const std::vector<Row>& rows);
void write_text(std::ostream& os, const std::vector<Row>& rows);
void write_rows(std::ostream& os, const RunConfig& config, const std::vector<Row>& rows);

/// Full command line entry point: parses, runs, writes, returns the exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace frachh::cli
