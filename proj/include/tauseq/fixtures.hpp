#pragma once

#include "tauseq/module.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tauseq {

struct NamedModule {
    std::string name;
    FdModule module;
};

/// Module from a quiver representation. Arrow matrices map the source vertex
/// space to the target vertex space; missing arrows act as zero.
FdModule module_from_representation(const QuiverPresentation& q, const AlgebraPtr& a,
                                    const std::vector<Eigen::Index>& dims, const std::map<std::string, Mat>& arrows);

/// Parses `module NAME` blocks with `dims` and `arrow NAME = [[...]]` lines.
std::vector<NamedModule> parse_fixtures(std::string_view text, const QuiverPresentation& q, const AlgebraPtr& a);
std::vector<NamedModule> load_fixtures(const std::string& path, const QuiverPresentation& q, const AlgebraPtr& a);

/// Fixture modules followed by P_v, S_v, I_v for every vertex whose module is
/// not already isomorphic to a listed one. Names are unique.
std::vector<NamedModule> standard_catalog(const AlgebraPtr& a, std::vector<NamedModule> fixtures);

}  // namespace tauseq
