#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "liaison/resolution.hpp"
#include "liaison/step_function.hpp"

namespace liaison {

/// Spec file: {"name": str, "g": {"rank": int, "a": int}, "e_twists": [int...],
/// "f_twists": [int...]}. Twists are t of O(t); G is implicit. Throws Parse.
RawResolution parse_spec_json(std::string_view text);
RawResolution read_spec_file(const std::filesystem::path& path);

/// Inverse of parse_spec_json, with twists in ascending order.
std::string spec_to_json(const ResolutionSpec& spec, int indent = 2);

/// Rows "l,eta,theta" over the union of both windows, header first.
void write_eta_theta_csv(std::ostream& out, const StepFn& eta_fn, const StepFn& theta_fn);

/// Whole file as a string. Throws Io.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace liaison
