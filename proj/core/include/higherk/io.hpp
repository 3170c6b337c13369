#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "higherk/ktheory.hpp"
#include "higherk/module.hpp"
#include "higherk/quiver.hpp"
#include "higherk/tilting.hpp"

namespace higherk {

struct SuiteReport;

/// "p/q" or "p"; throws InvalidInput otherwise.
Rational parse_rational(std::string_view s);
std::string rational_to_string(const Rational& x);

using NamedModule = std::pair<std::string, Representation>;

struct TiltingSpec {
  std::size_t d = 1;
  std::vector<std::string> summands;  // module names
};

/// An algebra description: quiver, relations, bound, and optionally named
/// modules and a tilting candidate built from them.
struct AlgebraFile {
  AlgebraPtr algebra;
  std::vector<NamedModule> modules;  // in file order
  std::optional<TiltingSpec> tilting;

  /// Throws InvalidInput for unknown names.
  [[nodiscard]] const Representation& module(const std::string& name) const;
};

/// Strict: unknown keys, wrong types and non-string rationals are rejected
/// with Error(InvalidInput); algebra construction errors propagate.
AlgebraFile parse_algebra_file(std::string_view text);
AlgebraFile load_algebra_file(const std::string& path);

/// Throws InvalidInput when the file has no tilting block.
TiltingData tilting_from_file(const AlgebraFile& f);

std::string write_algebra_file(const AlgebraPtr& a, const std::vector<NamedModule>& modules = {},
                               const std::optional<TiltingSpec>& tilting = std::nullopt);
/// Writes T's summands under their labels together with the tilting block.
std::string write_tilting_file(const TiltingData& t);

/// The {dims, maps} object of a module, as JSON text.
std::string module_to_json(const Representation& m);
/// Parses that object against a given algebra.
Representation module_from_json(const AlgebraPtr& a, std::string_view text);
std::string ses_to_json(const ShortExactSequence& s);
std::string integer_matrix_to_json(const IntegerMatrix& m);

std::string report_to_json(const SuiteReport& r);

}  // namespace higherk
