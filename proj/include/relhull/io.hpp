#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relhull/cartesian.hpp"
#include "relhull/hull.hpp"
#include "relhull/quantum.hpp"

namespace relhull {

// Parsed problem file: a field, named raw generator matrices, and optional
// grid and exponent-set sections.  Matrices keep the rows exactly as given
// (no echelon normalization), so a file survives a parse/serialize cycle
// unchanged.
struct CodePairFile {
    FieldPtr field;
    std::vector<std::pair<std::string, MatrixGF>> codes;
    std::optional<CartesianGrid> grid;
    std::vector<std::pair<std::string, ExponentSet>> exponent_sets;
};

// Any defect in the text, including semantic ones such as a reducible
// modulus or an out-of-range entry, is reported as ParseError with the
// offending location in the message.
CodePairFile parse_code_pair(const std::string& text);
std::string serialize_code_pair(const CodePairFile& f);
CodePairFile load_code_pair(const std::string& path);

const MatrixGF& find_code(const CodePairFile& f, const std::string& name);
const ExponentSet& find_exponent_set(const CodePairFile& f, const std::string& name);

std::string to_json(const HullReport& r);
std::string to_json(const ReductionTrace& t);
std::string to_json(const CSSParams& p);
std::string to_json(const DiagonalMaxReport& r);
std::string to_json(const TwistReport& r);
std::string to_json(const AugmentReport& r);

}  // namespace relhull
