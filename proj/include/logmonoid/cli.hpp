#pragma once

#include "logmonoid/blowup.hpp"
#include "logmonoid/document.hpp"
#include "logmonoid/fan.hpp"
#include "logmonoid/monoid.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace logmonoid {

enum ExitCode { exit_ok = 0, exit_usage = 1, exit_domain = 2, exit_internal = 3 };

struct CliOptions {
    std::string command;
    std::string mode = "fine";
    Integer characteristic = 0;
    bool verify = false;
};

/// Loaders for input documents. Nested maps may omit `kind`.
AffineMonoid load_affine_monoid(const Value& v);
MonoidPresentation load_presentation(const Value& v);
bool is_presentation(const Value& v);
RationalCone load_cone(const Value& v, std::ostream& diag);
Fan load_fan(const Value& v, std::ostream& diag);
MonoidHom load_hom(const Value& v);

Value to_value(const AbelianGroup& g);
Value to_value(const AffineMonoid& m);
Value to_value(const MonoidPresentation& p);
Value to_value(const RationalCone& c);
Value to_value(const Fan& f);

std::vector<std::string> command_names();

/// Runs one command on parsed documents. Warnings go to diag.
Value run_command(const CliOptions& options, const std::vector<Value>& documents, std::ostream& diag);

/// Reads the files, runs the command and writes the canonical result to out
/// (or out_file). Returns the process exit code; messages go to err.
int run_cli(const CliOptions& options, const std::vector<std::string>& files,
            const std::optional<std::string>& out_file, std::ostream& out, std::ostream& err);

}  // namespace logmonoid
