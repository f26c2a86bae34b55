#pragma once

#include "path.h"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rp {

// A deliberate defect applied to a valid path. Each operator builds the
// defect from its own geometry and returns nullopt when the path offers no
// place for it.
struct Mutation {
    std::string name;
    PathIssue expected;
    std::function<std::optional<std::vector<Point>>(const std::vector<Point>&, const Region&)> apply;
};

const std::vector<Mutation>& mutation_operators();

struct MutationTally {
    std::string name;
    int applied = 0;
    int killed = 0;  // rejected with the expected reason
    std::vector<std::string> escapes;
};

// applies every operator to every path; paths must be valid for their region
std::vector<MutationTally> run_mutations(const std::vector<std::pair<const Region*, std::vector<Point>>>& corpus);

}  // namespace rp
