#pragma once

#include <string>

#include "mll/dataset.hpp"

namespace mll {

/// ARFF reader for multi-label data.
///
/// Supported grammar: `@relation`, `@attribute NAME TYPE` where TYPE is
/// numeric | real | integer or a nominal value set `{v1,v2,...}`, then
/// `@data` followed by dense rows (comma separated) or sparse rows
/// (`{index value, ...}`, unlisted indices are 0). Keywords are
/// case-insensitive, '%' starts a comment, blank lines are skipped.
///
/// The LabelSpec picks `count` attributes from the start or end of the
/// attribute list as the binary label matrix. Label attributes must be
/// numeric with 0/1 values or nominal with a value set within {0,1}.
/// Nominal feature values are encoded as the 0-based index of the value in
/// the declared set. Missing values ('?') are rejected.
MultiLabelDataset parse_arff(const std::string& text, const LabelSpec& spec);

// Reads the file at `path` and parses it.
MultiLabelDataset load_arff(const std::string& path, const LabelSpec& spec);

}  // namespace mll
