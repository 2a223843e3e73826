#ifndef TORISOL_JSON_IO_HPP
#define TORISOL_JSON_IO_HPP

#include <torisol/euclid.hpp>
#include <torisol/ideal.hpp>
#include <torisol/oracle.hpp>
#include <torisol/semigroup.hpp>

#include <string>

namespace torisol {

// JSON documents carry "schema_version": 1.  Integers are emitted as JSON
// numbers when they fit in 64 bits and as decimal strings otherwise; the
// parsers accept both, so rendering and parsing round-trip exactly.

std::string to_json(const EuclidTrace& t, int indent = -1);
EuclidTrace trace_from_json(const std::string& text);

std::string to_json(const GeneratorTable& table, int indent = -1);
GeneratorTable table_from_json(const std::string& text);

std::string to_json(const ClassificationResult& result, int indent = -1);
ClassificationResult classification_from_json(const std::string& text);

std::string to_json(const SemigroupSpec& spec, int indent = -1);
SemigroupSpec semigroup_from_json(const std::string& text);

std::string to_json(const SurfaceParams& params, int indent = -1);
SurfaceParams surface_params_from_json(const std::string& text);

std::string to_json(const SqParams& params, int indent = -1);
SqParams sq_params_from_json(const std::string& text);

std::string to_json(const VerificationReport& rep, const SurfaceParams& params, int indent = -1);
std::string to_json(const CrossCheckReport& rep, const MinimalityReport* probe, int indent = -1);

}  // namespace torisol

#endif
