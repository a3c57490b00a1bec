#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rqpd::cli {

inline constexpr std::string_view kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kInvalidArgs = 2, kNumericFailure = 3, kIoError = 4 };

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// 12 significant digits, '.' decimal separator independent of locale.
std::string format_real(double x);
// Empty field for an absent value.
std::string format_real(const std::optional<double>& x);

// Header line then data rows, LF-terminated. Fields are written verbatim.
void emit_csv(const CsvTable& table, std::ostream& os);

// Runs one invocation. args excludes the program name. Output goes to `out`
// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rqpd::cli
