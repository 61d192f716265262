#pragma once

#include <json.hpp>

#include "cyclohecke/blocks.hpp"
#include "cyclohecke/graded.hpp"
#include "cyclohecke/hecke.hpp"
#include "cyclohecke/specht.hpp"

namespace cyclohecke {

// JSON schemas shared between the CLI and the python bindings. All output
// is deterministic: nlohmann objects keep keys sorted and term arrays use
// the same descending canonical order as the text renderers.

nlohmann::json spec_to_json(const CyclotomicSpec& spec);
nlohmann::json element_to_json(const HeckeElement& e);
nlohmann::json graded_to_json(const GradedElement& e);
nlohmann::json partition_to_json(const Partition& p);
nlohmann::json multipartition_to_json(const Multipartition& mp);
nlohmann::json residues_to_json(const ResidueMultiset& r);
nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json blocks_report_json(const CyclotomicSpec& spec,
                                  const std::vector<BlockDescriptor>& blocks);

/// "(2,1)|()" -> multipartition; empty components may be written "" or "()".
Multipartition parse_multipartition(const std::string& text);

}  // namespace cyclohecke
