#pragma once

#include <functional>
#include <string>
#include <vector>

#include "relhull/io.hpp"

namespace relhull {

// Worked instances from the literature plus the small constructed pairs the
// test suite pins down, available to the CLI by id and shipped as JSON under
// data/.
struct Example {
    std::string id;
    std::string summary;
    CodePairFile file;
};

const std::vector<Example>& example_registry();
// Null when the id is unknown.
const Example* find_example(const std::string& id);

// Deterministic reproduction checks for every published value the registry
// instances carry; each returns true when the recomputed numbers match.
struct ExampleCheck {
    std::string id;
    std::string what;
    std::function<bool()> run;
};

const std::vector<ExampleCheck>& example_checks();

}  // namespace relhull
