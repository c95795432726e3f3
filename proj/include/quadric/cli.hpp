#pragma once

#include "quadric/error.hpp"
#include "quadric/quadratic.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quadric::cli {

/// Syntax, degree and name errors in a presentation file. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_, column_;
    std::string message_;
};

/// S and the central element w read from a presentation file.
struct PresentationFile {
    QuadraticPresentation S;
    Vector central;
    /// Number of rel lines, before any linear dependence among them is removed.
    std::size_t rel_lines = 0;
};

/// Format:
///   # comment
///   field = Q | Q(i) | Q[t]/(t^2 - 2)
///   vars  = x, y, z
///   rel   = x*z + z*x
///   central = x*x + z*z
/// Generator order is declaration order. Each monomial must be a product of exactly two
/// variables; `i` is the imaginary unit in Q(i) mode and an unknown name elsewhere.
PresentationFile parse_presentation(const std::string& text);
PresentationFile read_presentation(const std::string& path);

/// Pipeline stages in execution order.
const std::vector<std::string>& stage_names();

struct PipelineOptions {
    std::size_t degree = 6;
    std::uint64_t seed = 0;
    /// Stop after this stage (one of stage_names()).
    std::optional<std::string> stop_after;
    bool skip_qp_check = false;
};

using Json = nlohmann::ordered_json;

struct Report {
    Json body;
    bool hard_failure = false;
};

/// Runs every stage in order. A hard failure ends the run with a partial report whose
/// "error" names the stage; the isolated-singularity verdict is data, not a failure.
Report run_pipeline(const PresentationFile& input, const PipelineOptions& options = {});

/// Parses and runs; a parse error becomes a hard failure of the "parse" stage.
Report run_pipeline_text(const std::string& text, const PipelineOptions& options = {});

std::string render_json(const Report& report);
std::string render_text(const Report& report);

/// "x*z + z*x" for a tensor of the given length over the generator names.
std::string format_tensor(const Vector& t, const std::vector<std::string>& names, std::size_t length);

}  // namespace quadric::cli
