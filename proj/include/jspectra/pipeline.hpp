#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "jspectra/example_systems.hpp"
#include "jspectra/model.hpp"

namespace jspectra {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "jspectra/1";
inline constexpr const char* kCertificateSchema = "jspectra/certificate/1";

/// Order-preserving JSON value with fixed number formatting: doubles are
/// written with 17 significant digits, non-finite values become null.
class Json {
  public:
    using Array = std::vector<Json>;
    using Object = std::vector<std::pair<std::string, Json>>;

    Json() : value_(nullptr) {}
    Json(std::nullptr_t) : value_(nullptr) {}
    Json(bool b) : value_(b) {}
    Json(double d) : value_(d) {}
    Json(std::int64_t i) : value_(i) {}
    Json(int i) : value_(static_cast<std::int64_t>(i)) {}
    Json(std::uint64_t u) : value_(static_cast<std::int64_t>(u)) {}
    Json(const char* s) : value_(std::string(s)) {}
    Json(std::string s) : value_(std::move(s)) {}
    Json(Array a) : value_(std::move(a)) {}
    Json(Object o) : value_(std::move(o)) {}

    static Json object() { return Json(Object{}); }
    static Json array() { return Json(Array{}); }

    Json& set(const std::string& key, Json v);
    Json& push(Json v);

    std::string dump(int indent = 2) const;

  private:
    std::variant<std::nullptr_t, bool, double, std::int64_t, std::string, Array, Object> value_;

    void write(std::string& out, int indent, int depth) const;
};

/// Input description: either three matrix files or a named example, plus
/// the analysis options.  Exactly one of the two sources is present.
struct Manifest {
    struct MatrixPaths {
        std::string a, b, d;
    };
    struct ExampleSpec {
        std::string name;  // "ex1" or "ex2"
        int n = 16;
        std::string u = "const:0";
        std::string w = "const:1";  // ex1 only
        std::string q = "const:10"; // ex2 only
        std::string v = "const:1";  // ex2 only
    };

    std::optional<MatrixPaths> matrices;
    std::optional<ExampleSpec> example;

    std::vector<double> b_grid;  // empty = default grid
    std::optional<double> gamma0;
    std::optional<int> num_eigs;
    std::optional<std::uint64_t> seed;
    int samples = 200;
};

/// Scalar-function presets: "const:V", "step:AT:LEFT:RIGHT",
/// "sin:AMP:FREQ:OFFSET".
ScalarFn parse_scalar_fn(const std::string& text);

Manifest load_manifest(const std::string& path);
BlockSystem system_from_manifest(const Manifest& manifest, const std::string& base_dir);

struct AnalyzeOptions {
    bool krein = true;
    bool qnr = true;
};

struct AnalyzeOutcome {
    std::string report_json;
    bool all_passed = true;
    std::vector<std::string> failures;
};

AnalyzeOutcome run_analyze(const Manifest& manifest, const std::string& base_dir,
                           const AnalyzeOptions& options);

std::string run_certify(const Manifest& manifest, const std::string& base_dir);

struct QnrCsv {
    std::string points;    // re, im, branch, alpha, beta, delta
    std::string boundary;  // enclosure outline segments for plotting
};

QnrCsv run_qnr_csv(const Manifest& manifest, const std::string& base_dir, int count,
                   std::uint64_t seed);

/// Writes A.mtx, B.mtx, D.mtx and a manifest referencing them; returns the
/// manifest path.
std::string emit_example(const Manifest::ExampleSpec& spec, const std::string& out_dir);

/// Writes atomically (temp file + rename).
void write_text_file(const std::string& path, const std::string& content);

}  // namespace jspectra
