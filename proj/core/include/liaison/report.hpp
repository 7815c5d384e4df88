#pragma once

#include <string>

#include "liaison/fitting.hpp"
#include "liaison/linkage.hpp"
#include "liaison/probe.hpp"
#include "liaison/propcheck.hpp"

namespace liaison {

enum class Format { Text, Json };

/// Json is the spec-file format, so the output can be fed back in.
std::string render(const ResolutionSpec& spec, Format format);
std::string render(const Verdict& v, Format format);
std::string render(const ExplorationReport& r, Format format);
std::string render(const PropcheckReport& r, Format format);
std::string render(const FittingIdeal& ideal, Format format);
/// `label` names the locus in text output.
std::string render(const PointSet& points, const std::string& label, Format format);
std::string render(const ObvyReport& r, Format format);
std::string render(const RankCountResult& r, Format format);
std::string render(const ProbeReport& r, Format format);

}  // namespace liaison
