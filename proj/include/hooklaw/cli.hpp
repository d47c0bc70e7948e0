#pragma once

#include <iosfwd>
#include <map>
#include <string>

namespace hooklaw::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kTolerance = 3;

// Describes one invocation. Written to stderr (or FILE.manifest.json with
// --out FILE) so that the data stream itself stays byte-stable.
struct RunManifest {
    std::string subcommand;
    std::map<std::string, std::string> flags;
    std::string seed;
    std::string version = kVersion;
    double wall_seconds = 0.0;

    std::string to_json() const;
};

// Parses argv, runs exactly one subcommand and returns its exit code. Data
// goes to `out` (or --out FILE), progress and the manifest to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// --threads if given, else $HOOKLAW_THREADS, else hardware concurrency.
int resolve_threads(int requested);

} // namespace hooklaw::cli
