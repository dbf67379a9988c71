#ifndef SUBCODE_SERIALIZE_HPP
#define SUBCODE_SERIALIZE_HPP

#include <string>

#include "subcode/codebuild.hpp"

namespace subcode {

// Code dump: {"tool", "version", "n", "q", "metric", "target_distance",
// "cells": [{"tuple": 1-based, "F", "subspaces": [flat row-major integer
// arrays, n columns each]}]}. Field elements are their packed integer
// values. Output bytes are deterministic for a fixed code and version.
std::string code_to_json(const SubspaceCode& code);
SubspaceCode code_from_json(const std::string& text);

// One line per enumerated tuple: tuple (1-based, space separated), length,
// cell dimension, choice value, status, reason.
std::string report_to_csv(const SelectionReport& report);

// Rank-metric code basis: {"q", "rows", "cols", "min_rank",
// "basis": [row-major integer arrays]}.
std::string matrix_code_to_json(const LinearMatrixCode& code);
LinearMatrixCode matrix_code_from_json(const std::string& text);

std::string cells_to_csv(std::size_t n);
std::string cells_to_json(std::size_t n);

// Rows separated by ';', entries by ','; e.g. "1,1;1,1;0,1".
MatrixGf matrix_from_csv(const GfPtr& field, const std::string& text);

}  // namespace subcode

#endif
